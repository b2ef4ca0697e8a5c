#!/usr/bin/env python3
"""Render the CSV datasets produced by `qgeo figure` as PNGs.

Usage:
    qgeo figure --name fig1 --out data/
    qgeo figure --name psi1 --out data/
    ...
    python3 docs/plot_figures.py data/ plots/
"""
import csv
import pathlib
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt


def read_csv(path):
    with open(path, newline="") as f:
        rows = list(csv.reader(f))
    header = rows[0]
    cols = {name: [float(r[i]) for r in rows[1:]] for i, name in enumerate(header)}
    return header, cols


def plot_file(path, out_dir):
    header, cols = read_csv(path)
    x_name = header[0]
    fig, ax = plt.subplots(figsize=(6, 4.5))
    for name in header[1:]:
        ax.plot(cols[x_name], cols[name], label=name)
    ax.set_xlabel("r" if x_name == "r" else r"$\theta$ (rad)")
    ax.set_ylabel("value")
    ax.set_title(path.stem)
    ax.legend()
    ax.grid(True, alpha=0.3)
    out = out_dir / (path.stem + ".png")
    fig.tight_layout()
    fig.savefig(out, dpi=150)
    plt.close(fig)
    print(out)


def main():
    if len(sys.argv) != 3:
        print(__doc__)
        return 2
    data_dir = pathlib.Path(sys.argv[1])
    out_dir = pathlib.Path(sys.argv[2])
    out_dir.mkdir(parents=True, exist_ok=True)
    csvs = sorted(data_dir.glob("*.csv"))
    if not csvs:
        print(f"no CSV files in {data_dir}", file=sys.stderr)
        return 1
    for path in csvs:
        plot_file(path, out_dir)
    return 0


if __name__ == "__main__":
    sys.exit(main())
