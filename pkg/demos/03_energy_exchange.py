"""Periodic exchange between electric and magnetic energy.

Sweeps c1 over {1, 2, 4, 10, 20} at c2 = 1.  The electric part peaks when
the packet is narrowest (nodes) and the magnetic part when it is widest
(bellies), yet every curve pair sums to a constant total: nonstaticity
moves energy between the two forms without creating any.
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
    amp = ns.amplitude(params, 1.0, 0.0, 0.0)
    times = np.linspace(0.0, 2.0 * params.wave_period, 600)
    ek, ep, etot = ns.energies(params, amp, times)
    drift = np.abs(etot - etot[0]).max()
    print(f"c1 = {c1:>4g}:  E_total = {etot[0]:.6f}  (drift {drift:.1e})")
    for ax, series in zip(axes, (ek, ep, etot)):
        ax.plot(times, series, color=color, label=f"c1 = {c1:g}")

for ax, title in zip(axes, ("electric", "magnetic", "total")):
    ax.set_title(f"{title} energy")
    ax.set_xlabel("t")
axes[0].legend(fontsize=8)
fig.savefig(OUT / "energy_exchange.png", dpi=150)
print("wrote", OUT / "energy_exchange.png")
