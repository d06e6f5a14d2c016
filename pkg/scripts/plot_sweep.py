"""Plot a sweep CSV produced by the `modewake` CLI.

One panel per tabulated lateral offset, elevation against Mach number, with
the exact curve and whichever asymptotic columns are present overlaid.

Usage:
    modewake --fig1 --out sweep.csv
    python scripts/plot_sweep.py sweep.csv -o sweep.png
"""

import argparse
import csv
from collections import defaultdict

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

STYLES = {
    "eta_exact": dict(color="k", lw=1.5, label="exact"),
    "eta_macdonald": dict(color="tab:red", lw=1.0, ls="--", label="near-critical"),
    "eta_airy": dict(color="tab:blue", lw=1.0, ls=":", label="far-field"),
}


def load(path):
    panels = defaultdict(lambda: defaultdict(list))
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        value_cols = [c for c in reader.fieldnames if c in STYLES]
        for row in reader:
            panel = panels[float(row["y_over_H"])]
            panel["M"].append(float(row["M"]))
            for col in value_cols:
                panel[col].append(float(row[col]) if row[col] else None)
    return panels, value_cols


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("csv_path")
    parser.add_argument("-o", "--out", default="sweep.png")
    args = parser.parse_args()

    panels, value_cols = load(args.csv_path)
    offsets = sorted(panels)
    fig, axes = plt.subplots(
        1, len(offsets), figsize=(4 * len(offsets), 3.2), sharex=True
    )
    if len(offsets) == 1:
        axes = [axes]

    for ax, y_over_h in zip(axes, offsets):
        panel = panels[y_over_h]
        for col in value_cols:
            pairs = [(m, v) for m, v in zip(panel["M"], panel[col]) if v is not None]
            if pairs:
                ax.plot(*zip(*pairs), **STYLES[col])
        ax.axvline(1.0, color="0.8", lw=0.8)
        ax.set_title(f"y/H = {y_over_h:g}")
        ax.set_xlabel("M")
    axes[0].set_ylabel("elevation")
    axes[-1].legend(frameon=False, fontsize=8)
    fig.tight_layout()
    fig.savefig(args.out, dpi=150)
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
