"""Certified bound versus the period-product bound for a = (T, ..., T, 1).

The certified bound stays at 4 for every T; the product bound grows like
4 T^((p-1)/p).
"""
import argparse
from dataclasses import dataclass

import numpy as np

from specmeasure.bounds import ds_comparison_bound, theorem1_bound
from specmeasure.operators import JacobiSpec, jacobi_best_shift, jacobi_symbol
from specmeasure.oracle import sample_bands


@dataclass
class ComparisonConfig:
    T_values: tuple[float, ...] = (1.0, 10.0, 100.0, 1000.0)
    periods: tuple[int, ...] = (2, 3, 4)
    grid: int = 512


def run(cfg: ComparisonConfig):
    rows = []
    for p in cfg.periods:
        for T in cfg.T_values:
            a = [T] * (p - 1) + [1.0]
            spec = JacobiSpec(tuple(np.array([[x]]) for x in a), tuple(np.zeros((1, 1)) for _ in a))
            shift, _ = jacobi_best_shift(spec)
            sym = jacobi_symbol(spec.rotated(shift), grid=cfg.grid)
            sound = theorem1_bound(sym, trivial=False).sound_total
            rows.append((p, T, sample_bands(sym).measure, sound, ds_comparison_bound(a)))
    return rows


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--grid", type=int, default=ComparisonConfig.grid)
    args = ap.parse_args(argv)
    print(f"{'p':>3} {'T':>8} {'oracle':>10} {'sound':>10} {'ds':>12}")
    for p, T, oracle, sound, ds in run(ComparisonConfig(grid=args.grid)):
        print(f"{p:>3} {T:8g} {oracle:10.6f} {sound:10.6f} {ds:12.6f}")


if __name__ == "__main__":
    main()
