#!/usr/bin/env python3
"""Plot a distance-curve CSV produced by `cylinders curve`.

Reads the CSV from a file argument or stdin, draws every orbit branch as a
thin line and the pointwise minimum as a bold one, and either shows the
figure or writes it to the path given with --out.
"""

import argparse
import csv
import math
import sys


def read_curve(stream):
    reader = csv.reader(stream)
    header = next(reader)
    if not header or header[0] != "delta":
        raise SystemExit("not a curve CSV: first column must be 'delta'")
    orbit_names = [name for name in header if name.startswith("orbit_")]
    deltas, orbits, minimum = [], [[] for _ in orbit_names], []
    for row in reader:
        deltas.append(float(row[0]))
        for k in range(len(orbit_names)):
            orbits[k].append(float(row[1 + k]))
        minimum.append(float(row[header.index("min")]))
    return orbit_names, deltas, orbits, minimum


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("csv", nargs="?", help="curve CSV (default: stdin)")
    parser.add_argument("--out", help="write the figure here instead of showing it")
    parser.add_argument("--log", action="store_true", help="logarithmic distance axis")
    args = parser.parse_args()

    if args.csv:
        with open(args.csv, newline="") as f:
            names, deltas, orbits, minimum = read_curve(f)
    else:
        names, deltas, orbits, minimum = read_curve(sys.stdin)

    import matplotlib

    if args.out:
        matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(9, 5))
    for name, branch in zip(names, orbits):
        ax.plot(deltas, branch, linewidth=0.8, label=name)
    ax.plot(deltas, minimum, linewidth=2.2, color="black", label="min")

    ax.set_xlim(0.0, math.pi / 2)
    if args.log:
        ax.set_yscale("log")
    else:
        ax.set_ylim(bottom=0.0)
    ax.set_xlabel("delta (radians)")
    ax.set_ylabel("squared distance between tangent lines")
    ax.legend(loc="upper right", fontsize="small")
    fig.tight_layout()

    if args.out:
        fig.savefig(args.out, dpi=150)
    else:
        plt.show()


if __name__ == "__main__":
    main()
