"""Static versus nonstatic Wigner spot at t = 0.

With a small displacement (A0 = 0.1) the static wave's Wigner distribution
is the familiar circular blob; switching on even mild envelope breathing
(c1 = 2) squeezes it into an ellipse.  The aspect ratio at the envelope
extrema equals sqrt(f_max/f_min), and the closed form is checked here
against the integral-defined oracle point by point.
"""
import math
import pathlib

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

import nonstatic as ns
from nonstatic import wigner

OUT = pathlib.Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

fig, axes = plt.subplots(1, 2, figsize=(9, 4), constrained_layout=True)
for ax, (c1, c2) in zip(axes, [(1.0, 1.0), (2.0, 1.0)]):
    params = ns.ModelParams(c1=c1, c2=c2)
    amp = ns.amplitude(params, 0.1, 0.0, 0.0)
    grid = wigner.PhaseSpaceGrid(-3.5, 3.5, 201, -3.5, 3.5, 201, t=0.0)
    closed = ns.wigner_closed(params, amp, grid)
    numeric = ns.wigner_numeric(params, amp, grid)
    dev = np.abs(closed.values - numeric.values).max()
    print(f"(c1, c2) = ({c1:g}, {c2:g}): closed vs integral oracle {dev:.2e}")
    ax.contourf(grid.q, grid.p, closed.values.T, levels=25, cmap="magma")
    ax.set_title(f"(c1, c2) = ({c1:g}, {c2:g})")
    ax.set_xlabel("q")
    ax.set_ylabel("p")
    ax.set_aspect("equal")

params = ns.ModelParams(c1=2.0, c2=1.0)
fmin, fmax = params.f_extrema()
t_node = [t for t, k in ns.critical_times(params, 0.0, math.pi) if k == "node"][0]
lam = np.linalg.eigvalsh(ns.covariance(params, t_node))
print(f"aspect ratio at a node: {math.sqrt(lam.max()/lam.min()):.6f} "
      f"(sqrt(f_max/f_min) = {math.sqrt(fmax/fmin):.6f})")

fig.savefig(OUT / "wigner_squeezing.png", dpi=150)
print("wrote", OUT / "wigner_squeezing.png")
