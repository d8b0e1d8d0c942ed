"""Where in (strength_a, strength_b, alpha) space sudden death occurs.

Runs a coarse region scan for the gaussian and discrete ensembles and
draws one panel per alpha slice: dark cells mark disorder strengths whose
quenched-average concurrence dies over a finite window before the
horizon. The gaussian ensemble kills the smallest region.

Writes esd_regions.png into demos/out/. Takes about half a minute.
"""

import math
import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from jcdisorder import QuenchPlan, esd_region_scan

OUT = pathlib.Path(__file__).resolve().parent / "out"


def main():
    OUT.mkdir(exist_ok=True)
    strengths = np.round(np.arange(0.0, 1.01, 0.2), 10)
    alphas = [math.pi / 8, math.pi / 6, math.pi / 5]
    plan = QuenchPlan(samples=120, master_seed=14)

    fig, axes = plt.subplots(2, len(alphas), figsize=(11, 6.5), sharex=True, sharey=True)
    for row, kind in enumerate(("gaussian", "discrete")):
        res = esd_region_scan(strengths, strengths, alphas, kind, plan, threads=4)
        print(f"{kind}: fractional dead volume {res.fractional_volume():.3f}")
        for col, alpha in enumerate(alphas):
            ax = axes[row, col]
            ax.pcolormesh(strengths, strengths, res.esd[:, :, col].T.astype(float),
                          cmap="Greys", vmin=0.0, vmax=1.0, shading="nearest")
            if row == 0:
                ax.set_title(f"alpha = {alpha:.3f}")
            if col == 0:
                ax.set_ylabel(f"{kind}\nstrength_b")
            if row == 1:
                ax.set_xlabel("strength_a")
    fig.suptitle("sudden-death regions (dark = concurrence dies before the horizon)")
    fig.tight_layout()
    fig.savefig(OUT / "esd_regions.png", dpi=150)
    print(f"wrote {OUT / 'esd_regions.png'}")


if __name__ == "__main__":
    main()
