"""Wave functions on position and momentum quadrature grids.

The coherent-state wave function is a Gaussian whose width breathes with
the envelope f(t); its momentum-space counterpart is the closed-form
Fourier transform.  Number-state wave functions carry Hermite factors
evaluated by a normalized three-term recurrence.  Norms and the narrow-grid
warning use trapezoid integration on uniform grids.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import core, observables
from .errors import CapabilityError

DEFAULT_N_MAX = 50


@dataclass(frozen=True)
class QuadratureGrid:
    """Uniform sample grid on one quadrature axis ('q' or 'p')."""

    axis: str
    lo: float
    hi: float
    n: int

    def __post_init__(self):
        if self.axis not in ("q", "p"):
            raise ValueError(f"grid axis must be 'q' or 'p', got {self.axis!r}")
        if not self.hi > self.lo:
            raise ValueError(f"grid needs hi > lo, got [{self.lo}, {self.hi}]")
        if self.n < 3:
            raise ValueError(f"grid needs at least 3 points, got {self.n}")

    @property
    def points(self):
        return np.linspace(self.lo, self.hi, self.n)

    @property
    def spacing(self):
        return (self.hi - self.lo) / (self.n - 1)


@dataclass(frozen=True)
class ComplexField:
    """Complex wave-function samples on a grid at one instant.

    ``norm`` is the trapezoid integral of |values|^2; ``narrow`` flags a
    grid that fails to cover the packet centre +/- 4 standard deviations.
    """

    grid: QuadratureGrid
    t: float
    values: np.ndarray
    norm: float
    narrow: bool = False


def hermite_functions(n, x):
    """Orthonormal Hermite (oscillator) functions phi_0..phi_n at x.

    Normalized three-term recurrence with the Gaussian weight absorbed at
    every step, so iterates stay O(1) instead of overflowing like the raw
    polynomials (safe well past n = 50).
    Returns an array of shape (n+1,) + x.shape.
    """
    x = np.asarray(x, dtype=float)
    out = np.empty((n + 1,) + x.shape)
    out[0] = np.pi ** -0.25 * np.exp(-0.5 * x * x)
    if n >= 1:
        out[1] = math.sqrt(2.0) * x * out[0]
    for k in range(1, n):
        out[k + 1] = math.sqrt(2.0 / (k + 1)) * x * out[k] - math.sqrt(k / (k + 1.0)) * out[k - 1]
    return out


def _field_norm(points, values):
    return float(np.trapezoid(np.abs(values) ** 2, points))


def coherent_q_values(params, amp, q, t):
    """Coherent-state wave function at position samples q (any shape)."""
    a = complex(core.amplitude_values(params, amp.A0, amp.theta, t))
    f = float(core.f_of_t(params, t))
    fd = float(core.fdot_of_t(params, t))
    z = params.epsilon * params.omega / (params.hbar * f)
    q = np.asarray(q, dtype=float)
    expo = (
        -0.5 * z * (1.0 - 0.5j * fd / params.omega) * q * q
        + math.sqrt(2.0 * z) * a * q
        - 0.5 * abs(a) ** 2
        - 0.5 * a * a
    )
    return (z / np.pi) ** 0.25 * np.exp(expo)


def coherent_q(params, amp, grid, t):
    """Coherent-state field on a position grid.

    The density is a normalized Gaussian centred on the classical point
    <q> = sqrt(2*hbar*f/(eps*omega)) * Re A with spread sqrt(hbar*f/(2*eps*omega)).
    """
    if grid.axis != "q":
        raise ValueError(f"coherent_q needs a 'q' grid, got axis {grid.axis!r}")
    values = coherent_q_values(params, amp, grid.points, t)
    center = float(observables.expectation_q(params, amp, t))
    sigma = float(observables.fluctuations(params, t)[0])
    narrow = (center - 4.0 * sigma < grid.lo) or (center + 4.0 * sigma > grid.hi)
    return ComplexField(grid=grid, t=float(t), values=values,
                        norm=_field_norm(grid.points, values), narrow=narrow)


def coherent_p_values(params, amp, p, t):
    """Momentum-space coherent wave function at samples p (any shape).

    The complex prefactor 1/sqrt(1 - i*fdot/(2*omega)) uses the principal
    square root; its argument has real part 1 > 0 at all times, so the
    principal branch is automatically continuous in t.
    """
    a = complex(core.amplitude_values(params, amp.A0, amp.theta, t))
    f = float(core.f_of_t(params, t))
    fd = float(core.fdot_of_t(params, t))
    z = params.epsilon * params.omega / (params.hbar * f)
    d = 1.0 - 0.5j * fd / params.omega
    p = np.asarray(p, dtype=float)
    hb = params.hbar
    expo = (
        -(p * p + 2j * math.sqrt(2.0 * z) * a * hb * p) / (2.0 * z * hb * hb * d)
        + np.conj(d) / (2.0 * d) * a * a
        - 0.5 * abs(a) ** 2
    )
    return (np.pi * z) ** -0.25 / np.sqrt(hb * d) * np.exp(expo)


def coherent_p(params, amp, grid, t):
    """Coherent-state field on a momentum grid (closed form, no transform)."""
    if grid.axis != "p":
        raise ValueError(f"coherent_p needs a 'p' grid, got axis {grid.axis!r}")
    values = coherent_p_values(params, amp, grid.points, t)
    center = float(observables.expectation_p(params, amp, t))
    sigma = float(observables.fluctuations(params, t)[1])
    narrow = (center - 4.0 * sigma < grid.lo) or (center + 4.0 * sigma > grid.hi)
    return ComplexField(grid=grid, t=float(t), values=values,
                        norm=_field_norm(grid.points, values), narrow=narrow)


def fock_q(params, n, grid, t, n_max=DEFAULT_N_MAX):
    """Number-state wave function (quantum number n) on a position grid.

    Carries the evolution phase exp(-i*omega*(n + 1/2)*T(t)) with the
    initial phase taken as zero.  n above ``n_max`` (default 50) raises
    CapabilityError as a recurrence-overflow guard.
    """
    if grid.axis != "q":
        raise ValueError(f"fock_q needs a 'q' grid, got axis {grid.axis!r}")
    if n < 0 or int(n) != n:
        raise ValueError(f"quantum number must be a nonnegative integer, got {n!r}")
    if n > n_max:
        raise CapabilityError(f"quantum number n = {n} exceeds n_max = {n_max}")
    n = int(n)
    f = float(core.f_of_t(params, t))
    fd = float(core.fdot_of_t(params, t))
    z = params.epsilon * params.omega / (params.hbar * f)
    q = grid.points
    x = math.sqrt(z) * q
    envelope = hermite_functions(n, x)[n]
    gamma = -params.omega * (n + 0.5) * core.phase_integral(params, t)
    values = z**0.25 * envelope * np.exp(1j * (0.25 * z * fd / params.omega * q * q + gamma))
    # turning-point radius plus two widths as the coverage requirement
    reach = math.sqrt((2.0 * n + 1.0) / z) + 2.0 / math.sqrt(2.0 * z)
    narrow = (-reach < grid.lo) or (reach > grid.hi)
    return ComplexField(grid=grid, t=float(t), values=values,
                        norm=_field_norm(q, values), narrow=narrow)
