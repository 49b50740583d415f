"""Breathing of the coherent wave packet in a static medium.

Evolves the position-space probability density for three envelope choices:
the static reference (c1, c2) = (1, 1), a moderately nonstatic wave (5, 2),
and a strongly nonstatic one (1, 100).  The density stays a normalized
Gaussian at all times, but its width collapses (node) and expands (belly)
twice per wave period, the more violently the larger the measure of
nonstaticity printed for each panel.
"""
import pathlib

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

import nonstatic as ns

OUT = pathlib.Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

cases = [(1.0, 1.0), (5.0, 2.0), (1.0, 100.0)]
fig, axes = plt.subplots(1, 3, figsize=(13, 3.6), constrained_layout=True)

for ax, (c1, c2) in zip(axes, cases):
    params = ns.ModelParams(c1=c1, c2=c2)
    amp = ns.amplitude(params, 1.0, 0.0, 0.0)
    measure = ns.nonstaticity_measure(params)
    print(f"(c1, c2) = ({c1:g}, {c2:g}):  D = {measure:.2f}")

    fmax = params.f_extrema()[1]
    half = np.sqrt(2.0 * fmax) + 6.0 * np.sqrt(fmax / 2.0)
    grid = ns.QuadratureGrid("q", -half, half, 601)
    times = np.linspace(0.0, 2.0 * params.wave_period, 241)
    density = np.array([np.abs(ns.coherent_q(params, amp, grid, t).values) ** 2
                        for t in times])

    ax.imshow(density.T, origin="lower", aspect="auto", cmap="magma",
              extent=(times[0], times[-1], grid.lo, grid.hi))
    ax.set_title(f"(c1, c2) = ({c1:g}, {c2:g}),  D = {measure:.2f}")
    ax.set_xlabel("t")
    ax.set_ylabel("q")

fig.savefig(OUT / "breathing_density.png", dpi=150)
print("wrote", OUT / "breathing_density.png")
