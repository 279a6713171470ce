"""Compare the compiled kernels with the numpy fallback.

Run with ``python3 benchmarks/bench_kernels.py [--repeat N]``.
"""

import argparse
import timeit

import numpy as np

from stratnet import _fallback
from stratnet.catalog import cycle, hypercube, johnson
from stratnet.heisenberg import class_pairs

try:
    from stratnet import _kernels as compiled
except ImportError:
    compiled = None


def bfs_case(g):
    ip = g.indptr.astype(np.int64)
    ix = g.indices.astype(np.int64)
    return lambda impl: impl.all_pairs_bfs(ip, ix, g.n)


def heisenberg_case(g):
    pairs = class_pairs(g)
    ks = np.concatenate([k for k, _ in pairs]).astype(np.int64)
    ls = np.concatenate([l for _, l in pairs]).astype(np.int64)
    w = np.linspace(0.1, 1.0, len(ks))

    def run(impl):
        out = np.zeros((1 << g.n, 1 << g.n))
        impl.heisenberg_accumulate(out, g.n, ks, ls, w)
        return out
    return run


CASES = [
    ("bfs hypercube:10", lambda: bfs_case(hypercube(10))),
    ("bfs johnson:8,4", lambda: bfs_case(johnson(8, 4))),
    ("bfs cycle:400", lambda: bfs_case(cycle(400))),
    ("heisenberg cycle:10", lambda: heisenberg_case(cycle(10))),
    ("heisenberg hypercube:3", lambda: heisenberg_case(hypercube(3))),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if compiled is None:
        print("compiled extension not built; only the fallback is timed")
    print(f"{'case':<26}{'fallback ms':>14}{'compiled ms':>14}{'speedup':>10}")
    for name, make in CASES:
        fn = make()
        slow = min(timeit.repeat(lambda: fn(_fallback), number=1, repeat=args.repeat)) * 1e3
        if compiled is None:
            print(f"{name:<26}{slow:>14.2f}{'-':>14}{'-':>10}")
            continue
        assert np.array_equal(np.asarray(fn(compiled)), np.asarray(fn(_fallback)))
        fast = min(timeit.repeat(lambda: fn(compiled), number=1, repeat=args.repeat)) * 1e3
        print(f"{name:<26}{slow:>14.2f}{fast:>14.2f}{slow / fast:>9.1f}x")


if __name__ == "__main__":
    main()
