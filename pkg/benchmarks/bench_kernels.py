"""Compare the compiled and pure-Python bitset kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Prints one line per kernel with the best-of-N time for each backend and the
speedup. Without the compiled extension only the Python column is shown.
"""

import argparse
import random
import timeit

from qmsets import _kernels_py

try:
    from qmsets import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def random_blocks(rng, n, k=4):
    groups = {}
    for i in range(n):
        g = rng.randrange(k)
        groups[g] = groups.get(g, 0) | (1 << i)
    return tuple(sorted(groups.values(), key=lambda b: b & -b))


def workloads(rng):
    rows16 = [[rng.getrandbits(16) for _ in range(16)] for _ in range(200)]
    tagged = [[r | (1 << (16 + k)) for k, r in enumerate(rows)] for rows in rows16]
    pairs = [(random_blocks(rng, 10), random_blocks(rng, 10)) for _ in range(500)]

    return {
        "rref 200 x (16 rows, 16 bits)": lambda k: [k.rref(r, 16) for r in rows16],
        "dependencies 200 x 16 rows": lambda k: [k.dependencies(r, 16) for r in tagged],
        "set_partitions(9)": lambda k: k.set_partitions(9),
        "join/meet 10 bits": lambda k: [(k.join_blocks(a, b), k.meet_blocks(a, b, 10)) for a, b in pairs],
    }


def best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    jobs = workloads(random.Random(args.seed))
    print(f"{'kernel':34} {'python':>10} {'cython':>10} {'speedup':>8}")
    for name, job in jobs.items():
        tp = best(lambda: job(_kernels_py), args.repeat)
        if _kernels_c is None:
            print(f"{name:34} {tp * 1e3:8.2f}ms {'-':>10} {'-':>8}")
            continue
        assert job(_kernels_py) == job(_kernels_c), f"backends disagree on {name}"
        tc = best(lambda: job(_kernels_c), args.repeat)
        print(f"{name:34} {tp * 1e3:8.2f}ms {tc * 1e3:8.2f}ms {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
