#!/usr/bin/env python3
"""Quick-look renderer for wirebarrier CSV outputs (dev tooling only).

Usage: plot_csv.py FILE.csv [--x COL] [--y COL] [--group COL] [--out FILE.png]

Defaults pick sensible axes by table kind: branch tables plot log|psi| vs x
grouped by branch_label, Stokes tables plot the traced polylines, sweep
tables plot the last column against the first.
"""
import argparse
import csv
import sys


def load(path):
    meta, rows, header = {}, [], None
    with open(path, newline="") as f:
        for raw in f:
            if raw.startswith("#"):
                body = raw.lstrip("#:").strip()
                if " = " in body:
                    k, v = body.split(" = ", 1)
                    meta[k.strip()] = v.strip()
                continue
            header = [c.strip() for c in raw.strip().split(",")]
            break
        for rec in csv.reader(f):
            if rec:
                rows.append(rec)
    return meta, header, rows


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("file")
    ap.add_argument("--x")
    ap.add_argument("--y")
    ap.add_argument("--group")
    ap.add_argument("--out")
    args = ap.parse_args()

    try:
        import matplotlib
        matplotlib.use("Agg" if args.out else matplotlib.get_backend())
        import matplotlib.pyplot as plt
    except ImportError:
        sys.exit("matplotlib is required for plotting")

    meta, header, rows = load(args.file)
    kind = meta.get("kind", "")
    gx, gy, grp = args.x, args.y, args.group
    if not (gx and gy):
        if kind == "branches":
            gx, gy, grp = "x", "log_psi_mag", "branch_label"
        elif kind in ("stokes1d", "stokes2d"):
            gx, gy, grp = header[1], header[2], header[0]
        elif kind == "caustics":
            gx, gy, grp = "eta", "x", "b"
        else:
            gx, gy = header[0], header[-1]

    ix, iy = header.index(gx), header.index(gy)
    ig = header.index(grp) if grp else None
    series = {}
    for rec in rows:
        key = rec[ig] if ig is not None else ""
        series.setdefault(key, ([], []))
        series[key][0].append(float(rec[ix]))
        series[key][1].append(float(rec[iy]))

    fig, ax = plt.subplots(figsize=(6, 4.2))
    for key in sorted(series):
        xs, ys = series[key]
        ax.plot(xs, ys, label=str(key) if key else None, lw=1.2)
    ax.set_xlabel(gx)
    ax.set_ylabel(gy)
    if kind:
        ax.set_title(kind)
    if ig is not None:
        ax.legend(fontsize=8, title=grp)
    fig.tight_layout()
    if args.out:
        fig.savefig(args.out, dpi=150)
        print("wrote", args.out)
    else:
        plt.show()


if __name__ == "__main__":
    main()
