"""Phase-space (Wigner) picture of the nonstatic coherent wave.

The state is Gaussian, so its Wigner distribution is a rotating, breathing
ellipse: the centre follows the classical orbit (clockwise, period
2*pi/omega) and the squeezed contour itself also turns clockwise about the
centre with the same period.  ``wigner_closed`` evaluates the closed form;
``wigner_numeric`` computes the defining transform of the position wave
function by adaptive trapezoid quadrature and serves as its oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from . import core, observables, wavefunctions
from .errors import AccuracyError


@dataclass(frozen=True)
class PhaseSpaceGrid:
    """Rectangular (q, p) grid at one instant; ``values`` holds W(q, p)."""

    qmin: float
    qmax: float
    nq: int
    pmin: float
    pmax: float
    np: int
    t: float = 0.0
    values: np.ndarray | None = None

    def __post_init__(self):
        if not self.qmax > self.qmin:
            raise ValueError(f"grid needs qmax > qmin, got [{self.qmin}, {self.qmax}]")
        if not self.pmax > self.pmin:
            raise ValueError(f"grid needs pmax > pmin, got [{self.pmin}, {self.pmax}]")
        if self.nq < 3 or self.np < 3:
            raise ValueError("grid needs at least 3 points per axis")

    @property
    def q(self):
        return np.linspace(self.qmin, self.qmax, self.nq)

    @property
    def p(self):
        return np.linspace(self.pmin, self.pmax, self.np)


@dataclass(frozen=True)
class EllipseSummary:
    """One-sigma contour of the Gaussian Wigner spot: centre, major-axis
    orientation (None for a circular spot) and principal radii."""

    center: tuple
    angle: float | None
    radii: tuple


def covariance(params, t):
    """Quadrature covariance matrix [[<qq>, <qp>], [<qp>, <pp>]] at time t.

    The cross term <qp + pq>/2 - <q><p> equals hbar*fdot/(4*omega); its
    determinant is (hbar/2)^2 at all times (pure Gaussian state).
    """
    f = float(core.f_of_t(params, t))
    fd = float(core.fdot_of_t(params, t))
    beta = 0.5 * fd / params.omega
    ew = params.epsilon * params.omega
    sqq = params.hbar * f / (2.0 * ew)
    spp = params.hbar * ew * (1.0 + beta * beta) / (2.0 * f)
    sqp = params.hbar * fd / (4.0 * params.omega)
    return np.array([[sqq, sqp], [sqp, spp]])


def wigner_closed(params, amp, grid):
    """Closed-form Wigner distribution on the grid (real, normalized).

    The complex exponent is evaluated as printed and its imaginary residue
    checked below 1e-10 before the real part is returned; the peak value
    of the returned array never exceeds 1/(pi*hbar).
    """
    t = grid.t
    a = complex(core.amplitude_values(params, amp.A0, amp.theta, t))
    ac = np.conj(a)
    f = float(core.f_of_t(params, t))
    fd = float(core.fdot_of_t(params, t))
    z = params.epsilon * params.omega / (params.hbar * f)
    hb = params.hbar
    w = params.omega
    qg, pg = np.meshgrid(grid.q, grid.p, indexing="ij")
    expo = (
        -z * qg * qg
        - (0.5 * math.sqrt(z) * fd / w * qg - pg / (math.sqrt(z) * hb)) ** 2
        + math.sqrt(2.0 * z) * ((a + ac) + 1j * 0.5 * fd / w * (a - ac)) * qg
        - (1j / hb) * math.sqrt(2.0 / z) * (a - ac) * pg
        - 2.0 * abs(a) ** 2
    )
    values = np.exp(expo) / (np.pi * hb)
    residue = float(np.max(np.abs(values.imag)))
    if residue > 1e-10:
        raise AccuracyError(f"Wigner closed form left imaginary residue {residue:.3e}")
    return replace(grid, values=values.real)


def _wigner_trapz(params, amp, qpts, ppts, t, half, ny):
    y = np.linspace(-half, half, ny)
    weights = np.full(ny, y[1] - y[0])
    weights[0] *= 0.5
    weights[-1] *= 0.5
    psi_plus = wavefunctions.coherent_q_values(params, amp, qpts[:, None] + y[None, :], t)
    psi_minus = wavefunctions.coherent_q_values(params, amp, qpts[:, None] - y[None, :], t)
    integrand = np.conj(psi_plus) * psi_minus
    kernel = np.exp(2j * np.outer(y, ppts) / params.hbar) * weights[:, None]
    return (integrand @ kernel).real / (np.pi * params.hbar)


def wigner_numeric(params, amp, grid, tol=1e-7, ny_start=1025, max_doublings=4):
    """Wigner distribution from the defining integral over the position
    wave function (quadrature oracle for :func:`wigner_closed`).

    The y window spans +/- 10 position spreads; resolution is doubled until
    two successive evaluations agree within ``tol`` everywhere, else
    AccuracyError.
    """
    t = grid.t
    half = 10.0 * float(observables.fluctuations(params, t)[0])
    qpts, ppts = grid.q, grid.p
    ny = int(ny_start)
    prev = _wigner_trapz(params, amp, qpts, ppts, t, half, ny)
    for _ in range(max_doublings):
        ny = 2 * ny - 1
        cur = _wigner_trapz(params, amp, qpts, ppts, t, half, ny)
        if float(np.max(np.abs(cur - prev))) <= tol:
            return replace(grid, values=cur)
        prev = cur
    raise AccuracyError(
        f"Wigner quadrature did not converge to {tol:.1e} with {ny} y-samples"
    )


def ellipse_track(params, amp, times):
    """Centre, orientation and radii of the one-sigma contour per time.

    The centre angle advances at -omega (clockwise, period 2*pi/omega) and
    the major-axis orientation also advances at -omega, so the contour's
    self-rotation shares the same period.  For a circular spot (static
    envelope) the orientation is reported as None.  radii satisfy
    r_major*r_minor = hbar/2.
    """
    times = np.asarray(times, dtype=float)
    if times.size < 2:
        raise ValueError("ellipse_track needs at least two sample times")
    out = []
    for t in times:
        sig = covariance(params, t)
        cq = float(observables.expectation_q(params, amp, t))
        cp = float(observables.expectation_p(params, amp, t))
        half_diff = 0.5 * (sig[0, 0] - sig[1, 1])
        off = sig[0, 1]
        spread = math.hypot(half_diff, off)
        trace = sig[0, 0] + sig[1, 1]
        lam_hi = 0.5 * trace + spread
        lam_lo = 0.5 * trace - spread
        if spread <= 1e-12 * trace:
            angle = None
        else:
            angle = 0.5 * math.atan2(2.0 * off, sig[0, 0] - sig[1, 1])
        out.append(EllipseSummary(center=(cq, cp), angle=angle,
                                  radii=(math.sqrt(lam_hi), math.sqrt(lam_lo))))
    return out
