"""Wall-clock cost of each verification suite as d grows."""
import argparse
import io
import time
from dataclasses import dataclass

from cycsoergel.cli import SUITES, main


@dataclass
class Config:
    d_max: int = 8
    jobs: int = 1


def run(cfg: Config) -> None:
    print("d\t" + "\t".join(SUITES))
    for d in range(3, cfg.d_max + 1):
        row = []
        for suite in SUITES:
            t0 = time.perf_counter()
            code = main(["verify", "--d", str(d), "--suite", suite, "--jobs", str(cfg.jobs)], out=io.StringIO())
            row.append(f"{time.perf_counter() - t0:.2f}" + ("" if code == 0 else "!"))
        print(f"{d}\t" + "\t".join(row), flush=True)


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--d-max", type=int, default=Config.d_max)
    p.add_argument("--jobs", type=int, default=Config.jobs)
    run(Config(**vars(p.parse_args())))
