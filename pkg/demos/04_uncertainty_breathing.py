"""Quadrature spreads and the uncertainty product over time.

The position spread is largest at bellies, the momentum spread at nodes,
and the two waveforms are identical up to a quarter-wave-period shift.
Their product dips back to the quantum floor hbar/2 exactly at every node
and belly and never goes below it.
"""
import pathlib

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

import nonstatic as ns

OUT = pathlib.Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

sweep = [1.0, 2.0, 4.0, 10.0, 20.0]
colors = plt.cm.viridis(np.linspace(0.0, 0.9, len(sweep)))

fig, axes = plt.subplots(1, 3, figsize=(13, 3.4), sharex=True, constrained_layout=True)
for c1, color in zip(sweep, colors):
    params = ns.ModelParams(c1=c1, c2=1.0)
    times = np.linspace(0.0, 2.0 * params.wave_period, 800)
    dq, dp, product = ns.fluctuations(params, times)
    for ax, series in zip(axes, (dq, dp, product)):
        ax.plot(times, series, color=color, label=f"c1 = {c1:g}")

axes[2].axhline(0.5, color="k", lw=0.8, ls="--", label="hbar/2")
for ax, title in zip(axes, ("dq", "dp", "dq * dp")):
    ax.set_title(title)
    ax.set_xlabel("t")
axes[2].legend(fontsize=8)

params = ns.ModelParams(c1=4.0, c2=1.0)
for t, kind in ns.critical_times(params, 0.0, params.wave_period):
    product = float(ns.fluctuations(params, t)[2])
    print(f"c1 = 4 {kind:>5s} at t = {t:.4f}: product - hbar/2 = {product - 0.5:.2e}")

fig.savefig(OUT / "uncertainty_breathing.png", dpi=150)
print("wrote", OUT / "uncertainty_breathing.png")
