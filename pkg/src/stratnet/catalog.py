"""Named networks: graph builders and stored coefficient sequences.

Addresses look like ``family:param[,param]`` (``cycle:6``, ``johnson:6,3``)
or a bare name for parameterless entries (``mirror``, ``wells``).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .errors import TooLarge, TooSmall, UnknownPreset
from .graph import Graph, SzegoJacobi, build_graph

MAX_HYPERCUBE_DIM = 14
MAX_JOHNSON_VERTICES = 10 ** 5


def cycle(n: int) -> Graph:
    if n < 3:
        raise TooSmall(f"cycle needs at least 3 vertices, got {n}")
    return build_graph(n, [(v, (v + 1) % n) for v in range(n)])


def hypercube(d: int) -> Graph:
    if d < 1:
        raise TooSmall(f"hypercube dimension must be >= 1, got {d}")
    if d > MAX_HYPERCUBE_DIM:
        raise TooLarge(f"hypercube dimension {d} exceeds {MAX_HYPERCUBE_DIM}")
    n = 1 << d
    return build_graph(n, [(v, v ^ (1 << b)) for v in range(n) for b in range(d) if v < v ^ (1 << b)])


def johnson(n: int, k: int) -> Graph:
    """k-subsets of range(n), adjacent when they share k-1 elements."""
    if not 1 <= k < n:
        raise TooSmall(f"johnson graph needs 1 <= k < n, got n={n}, k={k}")
    if comb(n, k) > MAX_JOHNSON_VERTICES:
        raise TooLarge(f"J({n},{k}) has {comb(n, k)} vertices, limit {MAX_JOHNSON_VERTICES}")
    subsets = list(itertools.combinations(range(n), k))
    index = {s: i for i, s in enumerate(subsets)}
    edges = []
    for i, s in enumerate(subsets):
        members = set(s)
        for out in s:
            for inn in range(n):
                if inn not in members:
                    j = index[tuple(sorted(members - {out} | {inn}))]
                    if i < j:
                        edges.append((i, j))
    labels = ["{" + ",".join(map(str, s)) + "}" for s in subsets]
    return build_graph(len(subsets), edges, labels)


def _layered(sizes: list[int], links) -> Graph:
    """Graph on consecutive strata; ``links(l, a)`` lists the stratum-(l+1) slots of vertex a."""
    offsets = [0]
    for s in sizes:
        offsets.append(offsets[-1] + s)
    edges = []
    for l in range(len(sizes) - 1):
        for a in range(sizes[l]):
            for b in links(l, a):
                edges.append((offsets[l] + a, offsets[l + 1] + b))
    return build_graph(offsets[-1], edges)


def _tchebichef_sizes(d: int) -> list[int]:
    sizes = [1] + [4 if l % 2 else 2 for l in range(1, d + 1)]
    if d >= 3 and d % 2:
        sizes[-1] = 1
    return sizes


def _fan(sizes):
    def links(l, a):
        nxt = sizes[l + 1]
        if sizes[l] == 1:
            return range(nxt)
        if nxt == 1:
            return [0]
        if nxt > sizes[l]:  # 2 -> 4: two children each
            return [2 * a, 2 * a + 1]
        return [a // 2]  # 4 -> 2: pairs merge
    return links


def tchebichef(d: int) -> Graph:
    """A layered graph whose stratification from vertex 0 has omega = (4, 2, ..., 2).

    Strata sizes alternate 4, 2 after the origin; for odd d >= 3 the last
    stratum is a single antipode joined to both vertices before it.
    """
    if d < 1:
        raise TooSmall(f"tchebichef depth must be >= 1, got {d}")
    sizes = _tchebichef_sizes(d)
    return _layered(sizes, _fan(sizes))


def mirror() -> Graph:
    """Mirror-symmetric layered graph with strata sizes (1, 4, 2, 4, 1), omega = (4, 2, 2, 4)."""
    sizes = [1, 4, 2, 4, 1]
    return _layered(sizes, _fan(sizes))


@dataclass(frozen=True)
class Preset:
    name: str
    coefficients: SzegoJacobi
    note: str
    warning: str | None = None


PRESETS = {
    "wells": Preset(
        "wells",
        SzegoJacobi((5, 4, 4, 5), (0, 0, 3, 0, 0)),
        "Wells graph, stored coefficient sequence",
    ),
    "hadamard": Preset(
        "hadamard",
        SzegoJacobi((12, 66, 66, 12), (0, 0, 0, 0, 0)),
        "Hadamard network, stored coefficient sequence",
    ),
    "do4": Preset(
        "do4",
        SzegoJacobi((16, 36, 36, 16), (0, 6, 8, 6, 0)),
        "network labelled DO(4), stored coefficient sequence",
        "omega_1 = 16 does not match the valency-4 doubled odd graph; the sequence "
        "is that of the standard Johnson graph J(8,4) (johnson:8,4)",
    ),
    "j84": Preset(
        "j84",
        SzegoJacobi((4, 3, 6, 4, 6, 3, 4), (0,) * 8),
        "network labelled J(8,4), stored coefficient sequence",
        "d = 7, omega_1 = 4 does not match the standard Johnson graph J(8,4) "
        "(d = 4, valency 16); the sequence is that of the doubled odd graph DO(4)",
    ),
}

BUILDERS = {
    "cycle": (cycle, 1),
    "hypercube": (hypercube, 1),
    "johnson": (johnson, 2),
    "tchebichef": (tchebichef, 1),
    "mirror": (mirror, 0),
}


def preset(name: str) -> SzegoJacobi:
    try:
        return PRESETS[name].coefficients
    except KeyError:
        raise UnknownPreset(f"unknown preset {name!r}; known: {', '.join(PRESETS)}") from None


def resolve(address: str) -> Graph | SzegoJacobi:
    family, _, params = address.partition(":")
    family = family.strip().lower()
    if family in PRESETS:
        if params:
            raise ValueError(f"preset {family!r} takes no parameters")
        return preset(family)
    if family not in BUILDERS:
        raise UnknownPreset(
            f"unknown catalog entry {family!r}; known: {', '.join([*BUILDERS, *PRESETS])}"
        )
    builder, arity = BUILDERS[family]
    args = [int(p) for p in params.split(",")] if params else []
    if len(args) != arity:
        raise ValueError(f"{family} takes {arity} parameter(s), got {len(args)}")
    return builder(*args)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    kind: str
    note: str
    warning: str | None = None


def entries() -> list[CatalogEntry]:
    """The standard sweep: small constructible graphs plus every preset."""
    graphs = [
        ("hypercube:1", "K2"),
        ("cycle:4", "4-cycle"),
        ("cycle:5", "5-cycle, not antipodal"),
        ("cycle:6", "6-cycle"),
        ("cycle:8", "8-cycle"),
        ("hypercube:3", "3-cube"),
        ("hypercube:4", "4-cube"),
        ("johnson:5,2", "Johnson graph J(5,2)"),
        ("johnson:6,3", "Johnson graph J(6,3), antipodal"),
        ("tchebichef:5", "layered realisation of omega = (4,2,2,2,2)"),
        ("mirror", "layered realisation of omega = (4,2,2,4)"),
    ]
    out = [CatalogEntry(name, "graph", note) for name, note in graphs]
    out += [CatalogEntry(p.name, "coefficients", p.note, p.warning) for p in PRESETS.values()]
    return out
