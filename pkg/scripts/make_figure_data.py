#!/usr/bin/env python3
"""Generate the sweep CSVs behind the six standard figures.

Writes one CSV per curve into DATA_DIR (default ./data):

  fig2/fig3: width sweeps at fixed t, n = 1.1 (one file per t)
  fig4:      temperature sweeps at fixed d/a, n = 1.1
  fig5:      same with n = 2
  fig6:      same for the ideal metal, static mode counted twice
  fig7:      temperature sweeps reporting the static-term weight Y

Everything goes through the command-line interface, so these files are
exactly what the figure renderer consumes. A cache directory makes
reruns cheap. Usage: python scripts/make_figure_data.py [outdir]
"""

import sys
from pathlib import Path

from casphere.cli import main as cli

REL_TOL = "1e-6"
WIDTH_GRID = "0.02,0.05,0.1,0.15,0.2,0.3,0.5,0.7,1.0"
T_CURVES = ["0.01", "0.1", "1", "10", "100"]
WIDTH_CURVES = ["0.05", "0.1", "0.2", "0.5"]


def run(args):
    code = cli(args)
    if code not in (0,):
        raise SystemExit(f"command failed ({code}): {' '.join(args)}")


def main(outdir="data"):
    data = Path(outdir)
    data.mkdir(parents=True, exist_ok=True)
    cache = data / ".cache"
    common = ["--rel-tol", REL_TOL, "--jobs", "4", "--cache-dir", str(cache)]

    for t in T_CURVES:
        run(["sweep-width", "--model", "constant", "--n", "1.1", "--t", t,
             "--d-over-a", WIDTH_GRID, *common,
             "--out", str(data / f"fig2_t{t}.csv")])

    for d in WIDTH_CURVES:
        run(["sweep-temperature", "--model", "constant", "--n", "1.1",
             "--d-over-a", d, "--t-min", "0.01", "--t-max", "1000",
             "--points", "16", *common,
             "--out", str(data / f"fig4_d{d}.csv")])
        run(["sweep-temperature", "--model", "constant", "--n", "2.0",
             "--d-over-a", d, "--t-min", "0.01", "--t-max", "1000",
             "--points", "16", *common,
             "--out", str(data / f"fig5_d{d}.csv")])
        run(["sweep-temperature", "--model", "ideal-metal", "--option", "A",
             "--d-over-a", d, "--t-min", "0.01", "--t-max", "1000",
             "--points", "16", *common,
             "--out", str(data / f"fig6_d{d}.csv")])
        run(["y-ratio", "--model", "constant", "--n", "1.1",
             "--d-over-a", d, "--t-min", "0.01", "--t-max", "1000",
             "--points", "16", *common,
             "--out", str(data / f"fig7_d{d}.csv")])

    print(f"sweep data written to {data}/")


if __name__ == "__main__":
    main(*sys.argv[1:])
