"""
Sweep v = exp(i theta) over [0, pi] for several d and record, per point, the
distance of v + 1/v to the excluded values and the smallest within-block
eigenvalue gap. Near excluded angles the m = 0 block gap closes linearly.
"""
import argparse
import csv
import math
import sys
from dataclasses import dataclass

from cycsoergel.semisimple import criterion_margin, eigen_block, eigenvalues, min_gap


@dataclass
class Config:
    d_values: tuple = (3, 4, 5, 6)
    steps: int = 180


def sweep(cfg: Config, out) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["d", "theta", "margin", "min_gap_m0", "min_gap_all"])
    for d in cfg.d_values:
        blocks = [eigen_block(d, m) for m in range(d)]
        for k in range(1, cfg.steps):
            theta = math.pi * k / cfg.steps
            v = complex(math.cos(theta), math.sin(theta))
            gaps = [min_gap(eigenvalues(b, v)) for b in blocks]
            w.writerow([d, f"{theta:.6f}", f"{criterion_margin(d, v):.3e}", f"{gaps[0]:.3e}", f"{min(gaps):.3e}"])


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--d", type=int, nargs="+", default=list(Config.d_values))
    p.add_argument("--steps", type=int, default=Config.steps)
    args = p.parse_args()
    sweep(Config(tuple(args.d), args.steps), sys.stdout)
