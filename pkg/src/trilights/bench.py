"""Timing comparison of the pure and compiled elimination lanes.

Run as ``python -m trilights.bench [--sizes 20,40,60,80] [--repeat 3]``.
Reports the best-of-repeat wall time for a full rank computation of the
press matrix at each size, per lane, plus the speedup.  The compiled
column reads n/a when the extension is not built.
"""

from __future__ import annotations

import argparse
import time

from . import board, gf2


def time_rank(n: int, backend: str, repeat: int) -> tuple[float, int]:
    a = board.game_matrix(n)
    best = float("inf")
    dim = 0
    for _ in range(repeat):
        start = time.perf_counter()
        r = gf2.rank(a, backend=backend)
        best = min(best, time.perf_counter() - start)
        dim = a.cols - r
    return best, dim


def run(sizes: list[int], repeat: int) -> list[dict]:
    has_compiled = gf2._gf2core is not None
    rows = []
    for n in sizes:
        pure_t, pure_dim = time_rank(n, "pure", repeat)
        row = {"n": n, "beta": board.button_count(n), "pure_s": pure_t, "dim": pure_dim}
        if has_compiled:
            comp_t, comp_dim = time_rank(n, "compiled", repeat)
            if comp_dim != pure_dim:
                raise AssertionError(f"lane disagreement at n={n}: {pure_dim} vs {comp_dim}")
            row["compiled_s"] = comp_t
            row["speedup"] = pure_t / comp_t if comp_t > 0 else float("inf")
        rows.append(row)
    return rows


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description="elimination lane benchmark")
    parser.add_argument("--sizes", default="20,40,60,80")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    sizes = [int(s) for s in args.sizes.split(",") if s.strip()]

    print(f"{'n':>4} {'beta':>6} {'pure(s)':>10} {'compiled(s)':>12} {'speedup':>8}  dim")
    for row in run(sizes, args.repeat):
        comp = f"{row['compiled_s']:.4f}" if "compiled_s" in row else "n/a"
        speed = f"{row['speedup']:.1f}x" if "speedup" in row else "-"
        print(
            f"{row['n']:>4} {row['beta']:>6} {row['pure_s']:>10.4f} {comp:>12} {speed:>8}  {row['dim']}"
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
