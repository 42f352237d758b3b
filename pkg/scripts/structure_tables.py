"""Write A_W structure constants, census, Hom ranks and Hecke coefficients for a range of d."""
import argparse
from dataclasses import dataclass
from pathlib import Path

from cycsoergel.cli import main as cli_main


@dataclass
class Config:
    d_min: int = 2
    d_max: int = 6
    fmt: str = "csv"
    out: Path = Path("results/tables")


def run(cfg: Config) -> None:
    for d in range(cfg.d_min, cfg.d_max + 1):
        code = cli_main(["tables", "--d", str(d), "--format", cfg.fmt, "--out", str(cfg.out)])
        if code:
            raise SystemExit(code)


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--d-min", type=int, default=Config.d_min)
    p.add_argument("--d-max", type=int, default=Config.d_max)
    p.add_argument("--format", dest="fmt", choices=("csv", "json", "text"), default=Config.fmt)
    p.add_argument("--out", type=Path, default=Config.out)
    run(Config(**vars(p.parse_args())))
