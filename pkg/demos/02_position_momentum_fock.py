"""Position density, momentum density, and a number-state density side by side.

For a strongly breathing envelope (c1 = c2 = 10) the momentum-space density
runs a quarter wave period ahead of the position-space one, and the n = 5
number state collapses and expands at exactly the same instants as the
coherent wave (its five interior zeros never fill in).
"""
import pathlib

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

import nonstatic as ns

OUT = pathlib.Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

params = ns.ModelParams(c1=10.0, c2=10.0)
amp = ns.amplitude(params, 1.0, 0.0, 0.0)
times = np.linspace(0.0, 2.0 * params.wave_period, 241)
fmax = params.f_extrema()[1]

half_q = np.sqrt(2.0 * fmax) + 6.0 * np.sqrt(fmax / 2.0)
half_n = np.sqrt(11.0 * fmax) + 4.0 * np.sqrt(fmax / 2.0)
gq = ns.QuadratureGrid("q", -half_q, half_q, 601)
gp = ns.QuadratureGrid("p", -half_q, half_q, 601)
gn = ns.QuadratureGrid("q", -half_n, half_n, 801)

panels = [
    ("|<q|A>|^2", gq, lambda t: ns.coherent_q(params, amp, gq, t)),
    ("|<p|A>|^2", gp, lambda t: ns.coherent_p(params, amp, gp, t)),
    ("|<q|Psi_5>|^2", gn, lambda t: ns.fock_q(params, 5, gn, t)),
]

fig, axes = plt.subplots(1, 3, figsize=(13, 3.6), constrained_layout=True)
for ax, (label, grid, make) in zip(axes, panels):
    density = np.array([np.abs(make(t).values) ** 2 for t in times])
    ax.imshow(density.T, origin="lower", aspect="auto", cmap="magma",
              extent=(times[0], times[-1], grid.lo, grid.hi))
    ax.set_title(label)
    ax.set_xlabel("t")
axes[0].set_ylabel("quadrature")

for t, kind in ns.critical_times(params, 0.0, params.wave_period):
    print(f"{kind:>5s} at t = {t:.4f}")

fig.savefig(OUT / "position_momentum_fock.png", dpi=150)
print("wrote", OUT / "position_momentum_fock.png")
