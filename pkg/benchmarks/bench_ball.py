"""Compare the compiled and pure-Python ball-count engines.

Run from the repository root after installing:

    python3 benchmarks/bench_ball.py [--radius-scale 1.0]
"""

import argparse
import time

from loxgrow.growth import KERNEL_AVAILABLE, ball_sizes
from loxgrow.spaces import FreeGroupTree, FreeProductTree, HalfPlane
from loxgrow.words import make_generating_set


def cases():
    ft = FreeGroupTree(2)
    pt = FreeProductTree((2, 3))
    hp = HalfPlane()
    yield "free rank 2", make_generating_set(ft, ["a", "b"]), 11
    yield "Z/2 * Z/3", make_generating_set(pt, ["a", "b"]), 26
    yield (
        "Sanov matrices",
        make_generating_set(hp, [[[1, 2], [0, 1]], [[1, 0], [2, 1]]]),
        11,
    )


def timed(S, n_max, engine):
    t0 = time.perf_counter()
    table = ball_sizes(S, n_max, memory_cap=10_000_000, engine=engine)
    return time.perf_counter() - t0, table


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--radius-scale",
        type=float,
        default=1.0,
        help="multiply every benchmark radius (use <1 for a quick pass)",
    )
    args = parser.parse_args()

    if not KERNEL_AVAILABLE:
        print("compiled kernel not built; timing the pure engine only")
    print(f"{'case':<16} {'n':>3} {'ball':>10} {'python':>9} {'kernel':>9} {'speedup':>8}")
    for name, S, n_max in cases():
        n = max(2, int(n_max * args.radius_scale))
        t_py, table = timed(S, n, "python")
        if KERNEL_AVAILABLE:
            t_k, table_k = timed(S, n, "kernel")
            if table_k.balls != table.balls:
                raise SystemExit(f"{name}: engines disagree")
            print(
                f"{name:<16} {n:>3} {table.balls[-1]:>10} {t_py:>8.3f}s "
                f"{t_k:>8.3f}s {t_py / t_k:>7.1f}x"
            )
        else:
            print(f"{name:<16} {n:>3} {table.balls[-1]:>10} {t_py:>8.3f}s {'-':>9} {'-':>8}")


if __name__ == "__main__":
    main()
