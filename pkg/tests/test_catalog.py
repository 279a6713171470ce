import pytest

from stratnet import SzegoJacobi, is_reflective, isg_check, stratify, szego_jacobi
from stratnet import catalog
from stratnet.catalog import PRESETS, cycle, hypercube, johnson, mirror, resolve, tchebichef
from stratnet.errors import TooLarge, TooSmall, UnknownPreset


def johnson_coeffs(n, k):
    d = min(k, n - k)
    b = [(k - i) * (n - k - i) for i in range(d + 1)]
    c = [i * i for i in range(d + 1)]
    omega = tuple(b[i - 1] * c[i] for i in range(1, d + 1))
    alpha = tuple(k * (n - k) - b[i] - c[i] for i in range(d + 1))
    return omega, alpha


@pytest.mark.parametrize("n", range(3, 12))
def test_cycle(n):
    g = cycle(n)
    assert g.n == n and len(g.edges()) == n
    c = szego_jacobi(g, 0)
    m = n // 2
    if n % 2 == 0:
        assert c.omega == (2,) + (1,) * (m - 2) + (2,) if m > 1 else (2,)
        assert c.alpha == (0,) * (m + 1)
    else:
        assert c.omega == (2,) + (1,) * (m - 1)
        assert c.alpha == (0,) * m + (1,)


@pytest.mark.parametrize("d", range(1, 7))
def test_hypercube(d):
    g = hypercube(d)
    assert g.n == 2 ** d and all(g.degree(v) == d for v in range(g.n))
    c = szego_jacobi(g, 0)
    assert c.omega == tuple(i * (d - i + 1) for i in range(1, d + 1))
    assert c.alpha == (0,) * (d + 1)


@pytest.mark.parametrize("n,k", [(4, 2), (5, 2), (6, 2), (6, 3), (7, 3), (8, 4)])
def test_johnson(n, k):
    g = johnson(n, k)
    c = szego_jacobi(g, 0)
    omega, alpha = johnson_coeffs(n, k)
    assert c.omega == omega and c.alpha == alpha


def test_johnson_labels():
    g = johnson(4, 2)
    assert g.labels[0] == "{0,1}"
    assert g.labels[-1] == "{2,3}"


@pytest.mark.parametrize("builder,args,err", [
    (cycle, (2,), TooSmall),
    (hypercube, (0,), TooSmall),
    (hypercube, (15,), TooLarge),
    (johnson, (4, 0), TooSmall),
    (johnson, (4, 4), TooSmall),
    (johnson, (40, 20), TooLarge),
    (tchebichef, (0,), TooSmall),
])
def test_builder_errors(builder, args, err):
    with pytest.raises(err):
        builder(*args)


@pytest.mark.parametrize("d", range(1, 8))
def test_tchebichef(d):
    g = tchebichef(d)
    assert isg_check(g, 0).is_isg
    c = szego_jacobi(g, 0)
    assert c.omega[0] == 4
    assert all(w == 2 for w in c.omega[1:])
    assert all(a == 0 for a in c.alpha)


def test_tchebichef5_sizes():
    assert stratify(tchebichef(5), 0).sizes == (1, 4, 2, 4, 2, 1)


def test_mirror():
    g = mirror()
    assert stratify(g, 0).sizes == (1, 4, 2, 4, 1)
    c = szego_jacobi(g, 0)
    assert c.omega == (4, 2, 2, 4)
    assert is_reflective(c)


def test_presets_stored_verbatim():
    assert PRESETS["wells"].coefficients.omega == (5, 4, 4, 5)
    assert PRESETS["wells"].coefficients.alpha == (0, 0, 3, 0, 0)
    assert PRESETS["hadamard"].coefficients.omega == (12, 66, 66, 12)
    assert PRESETS["do4"].coefficients.alpha == (0, 6, 8, 6, 0)
    assert PRESETS["j84"].coefficients.d == 7


@pytest.mark.parametrize("name", sorted(PRESETS))
def test_presets_reflective(name):
    assert is_reflective(PRESETS[name].coefficients)


def test_swapped_labels_flagged():
    assert PRESETS["do4"].warning and PRESETS["j84"].warning
    assert PRESETS["wells"].warning is None


def test_resolve():
    assert resolve("cycle:6").n == 6
    assert resolve("johnson:6,3").n == 20
    assert resolve("mirror").n == 12
    assert isinstance(resolve("wells"), SzegoJacobi)
    assert resolve(" Hypercube:2").n == 4


@pytest.mark.parametrize("addr,err", [
    ("petersen", UnknownPreset),
    ("cycle", ValueError),
    ("johnson:6", ValueError),
    ("wells:1", ValueError),
    ("cycle:x", ValueError),
])
def test_resolve_errors(addr, err):
    with pytest.raises(err):
        resolve(addr)


def test_unknown_preset_message():
    with pytest.raises(UnknownPreset) as info:
        catalog.preset("nope")
    assert "wells" in str(info.value)


def test_entries_all_resolve():
    names = [e.name for e in catalog.entries()]
    assert len(names) == len(set(names))
    for e in catalog.entries():
        obj = resolve(e.name)
        assert isinstance(obj, SzegoJacobi) == (e.kind == "coefficients")
