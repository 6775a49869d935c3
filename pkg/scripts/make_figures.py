#!/usr/bin/env python3
"""Render every panel of the four coverage figures as SVG scatter plots.

Each panel is one (model, class filter) pair at the default 10,000 draws;
see foodgame.cli.FIGURE_PANELS for the mapping.
"""

import argparse
from pathlib import Path

from foodgame.cli import FIGURE_PANELS, main as cli_main


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="figures")
    parser.add_argument("--n", type=int, default=10_000)
    parser.add_argument("--seed", type=int, default=2024)
    args = parser.parse_args()

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for number, panel in sorted(FIGURE_PANELS):
        out = out_dir / f"figure{number}_{panel}.svg"
        cli_main(
            [
                "figure",
                "--number", str(number),
                "--panel", panel,
                "--n", str(args.n),
                "--seed", str(args.seed),
                "--out", str(out),
            ]
        )
        print()


if __name__ == "__main__":
    main()
