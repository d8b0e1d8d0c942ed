"""Collapse and revival of the atomic inversion without disorder.

Left panel: the first three revivals of the inversion envelope. Right
panel: a late-time window where the revivals have broadened into
overlapping fractional revivals spaced by T_R / 3.

Writes collapse_revival.png and collapse_revival.csv into demos/out/.
"""

import csv
import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from jcdisorder import revival_period
from jcdisorder.singlejc import inversion_clean, single_jc

OUT = pathlib.Path(__file__).resolve().parent / "out"


def main():
    OUT.mkdir(exist_ok=True)
    cfg = single_jc(nbar=50, dn=2)
    tr = revival_period(cfg)

    t_early = np.arange(0.0, 3.2 * tr, 0.01)
    w_early = inversion_clean(cfg, t_early)
    t_late = np.arange(63.0 * tr, 65.0 * tr, 0.02)
    w_late = inversion_clean(cfg, t_late)

    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(11, 4))
    ax1.plot(t_early / tr, w_early, lw=0.4)
    ax1.set_xlabel("t / T_R")
    ax1.set_ylabel("W(t)")
    ax1.set_title("collapse and the first three revivals")
    ax2.plot(t_late / tr, w_late, lw=0.4)
    ax2.set_xlabel("t / T_R")
    ax2.set_title("fractional revivals, spacing T_R / 3")
    fig.tight_layout()
    fig.savefig(OUT / "collapse_revival.png", dpi=150)

    with open(OUT / "collapse_revival.csv", "w", newline="", encoding="utf-8") as fh:
        wr = csv.writer(fh)
        wr.writerow(["t", "t_over_tr", "inversion"])
        for tt, ww in zip(t_early, w_early):
            wr.writerow([repr(float(tt)), repr(float(tt / tr)), repr(float(ww))])
    print(f"wrote {OUT / 'collapse_revival.png'} and .csv; T_R = {tr:.6f}")


if __name__ == "__main__":
    main()
