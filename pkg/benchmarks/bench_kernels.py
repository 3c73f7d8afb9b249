"""Time the compiled kernels against the numpy fallback on representative inputs.

    python3 benchmarks/bench_kernels.py [--repeat N]

Prints one row per kernel: best-of-N seconds for each backend, the speed-up,
and the largest absolute difference between the two outputs.
"""
from __future__ import annotations

import argparse
import timeit

import numpy as np

from wwpump import _pykernels

try:
    from wwpump import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def cases(rng: np.random.Generator) -> dict:
    # GAE over one PPO update window
    n = 750
    rewards = rng.normal(size=n)
    values = rng.normal(size=n + 1)
    dones = (rng.random(n) < 0.01).astype(np.uint8)

    # histogram tree growth at forecast-table scale
    rows, feats, n_bins = 17000, 14, 64
    bins = rng.integers(0, n_bins, size=(rows, feats)).astype(np.uint8)
    grad = rng.normal(size=rows) + bins[:, 0] * 0.05

    # isotonic projection along one power column of the outflow table
    y = np.cumsum(rng.normal(size=2000))
    w = np.ones_like(y)

    # forest prediction: 200 depth-3 trees
    n_trees, depth = 200, 3
    per = 2 ** (depth + 1) - 1
    feature, threshold, left, right, value, roots = [], [], [], [], [], []
    for t in range(n_trees):
        base = t * per
        roots.append(base)
        for node in range(per):
            internal = node < 2**depth - 1
            feature.append(int(rng.integers(feats)) if internal else -1)
            threshold.append(float(rng.normal()) if internal else 0.0)
            left.append(base + 2 * node + 1 if internal else -1)
            right.append(base + 2 * node + 2 if internal else -1)
            value.append(0.0 if internal else float(rng.normal()))
    X = rng.normal(size=(rows, feats))
    forest = (X, np.array(feature, dtype=np.int64), np.array(threshold), np.array(left, dtype=np.int64),
              np.array(right, dtype=np.int64), np.array(value), np.array(roots, dtype=np.int64), 0.0)

    return {
        "gae_truncated": (rewards, values, dones, 0.99, 0.95, 20),
        "grow_tree": (bins, grad, n_bins, 3, 20),
        "pav": (y, w),
        "forest_predict": forest,
    }


def max_diff(a, b) -> float:
    if isinstance(a, tuple):
        return max(max_diff(x, y) for x, y in zip(a, b))
    a, b = np.asarray(a, dtype=np.float64), np.asarray(b, dtype=np.float64)
    return float(np.max(np.abs(a - b))) if a.size else 0.0


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled extension not available; only the numpy fallback can be timed")
    print(f"{'kernel':<16}{'python s':>12}{'cython s':>12}{'speed-up':>10}{'max |diff|':>12}")
    for name, inputs in cases(np.random.default_rng(args.seed)).items():
        py = getattr(_pykernels, name)
        t_py = min(timeit.repeat(lambda: py(*inputs), number=1, repeat=args.repeat))
        if _ckernels is None:
            print(f"{name:<16}{t_py:>12.5f}{'-':>12}{'-':>10}{'-':>12}")
            continue
        cy = getattr(_ckernels, name)
        t_cy = min(timeit.repeat(lambda: cy(*inputs), number=1, repeat=args.repeat))
        diff = max_diff(py(*inputs), cy(*inputs))
        print(f"{name:<16}{t_py:>12.5f}{t_cy:>12.5f}{t_py / t_cy:>9.1f}x{diff:>12.2e}")


if __name__ == "__main__":
    main()
