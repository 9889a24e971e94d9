"""Sample the spin-spin and spin-oscillator moment maps and report image bounds.

Writes CSV files suitable for scatter plots of the moment images.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from pathlib import Path

from atq.catalog import sample_spin_oscillator, sample_spin_spin


@dataclass
class Config:
    grid: int = 16
    radius: float = 2.0
    outdir: Path = Path("samples")


def main(cfg: Config) -> None:
    cfg.outdir.mkdir(parents=True, exist_ok=True)
    for sample in (sample_spin_spin(cfg.grid), sample_spin_oscillator(cfg.grid, cfg.radius)):
        path = cfg.outdir / f"{sample.source}.csv"
        path.write_text(sample.to_csv())
        lo, hi = sample.points.min(axis=0), sample.points.max(axis=0)
        print(f"{sample.source:<16} n={len(sample.points):>7}  f1 in [{lo[0]:+.4f}, {hi[0]:+.4f}]"
              f"  f2 in [{lo[1]:+.4f}, {hi[1]:+.4f}]  -> {path}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--grid", type=int, default=16)
    ap.add_argument("--radius", type=float, default=2.0)
    ap.add_argument("--outdir", type=Path, default=Path("samples"))
    main(Config(**vars(ap.parse_args())))
