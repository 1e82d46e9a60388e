"""Compare the portable and compiled kernels on the two hot loops.

Run from the repository root:

    python3 benchmarks/bench_kernels.py [--repeats N] [--seed S]
"""

from __future__ import annotations

import argparse
import random
import time

from granudesc._kernel import _pure

try:
    from granudesc._kernel import _fast
except ImportError:
    _fast = None


def _random_columns(
    rng: random.Random, n_objects: int, n_attributes: int, density: float
) -> list[int]:
    cols = []
    for _ in range(n_attributes):
        m = 0
        for i in range(n_objects):
            if rng.random() < density:
                m |= 1 << i
        cols.append(m)
    return cols


def _best_of(repeats: int, fn, *args) -> float:
    best = float("inf")
    for _ in range(repeats):
        started = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - started)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=3, help="timings per cell")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    rng = random.Random(args.seed)

    rows: list[tuple[str, float, float | None]] = []

    for n_obj, n_att, density in [(24, 24, 0.3), (40, 40, 0.25), (56, 56, 0.2)]:
        cols = _random_columns(rng, n_obj, n_att, density)
        label = f"concepts {n_obj}x{n_att} d={density}"
        pure_t = _best_of(args.repeats, _pure.formal_concepts, cols, n_obj)
        fast_t = (
            _best_of(args.repeats, _fast.formal_concepts, cols, n_obj)
            if _fast is not None
            else None
        )
        rows.append((label, pure_t, fast_t))

    for n_cands, width, density in [(18, 24, 0.25), (22, 32, 0.2)]:
        cands = _random_columns(rng, width, n_cands, density)
        target = _random_columns(rng, width, 1, 0.6)[0]
        label = f"covers {n_cands} cands w={width}"
        pure_t = _best_of(args.repeats, _pure.minimal_cover_unions, cands, target, False)
        fast_t = (
            _best_of(args.repeats, _fast.minimal_cover_unions, cands, target, False)
            if _fast is not None
            else None
        )
        rows.append((label, pure_t, fast_t))

    print(f"{'task':<28} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    for label, pure_t, fast_t in rows:
        if fast_t is None:
            print(f"{label:<28} {pure_t * 1e3:>8.2f}ms {'n/a':>10} {'n/a':>8}")
        else:
            print(
                f"{label:<28} {pure_t * 1e3:>8.2f}ms {fast_t * 1e3:>8.2f}ms"
                f" {pure_t / fast_t:>7.1f}x"
            )
    if _fast is None:
        print("compiled kernel not built; only the portable timings are shown")


if __name__ == "__main__":
    main()
