"""Envelope dynamics of a nonstatic light wave in a static medium.

Everything in this module is closed-form.  The breathing of the wave packet
is carried by a positive, pi/omega-periodic envelope function ``f(t)``
(a combination of sin^2, cos^2 and sin terms whose constants obey
``c1*c2 - c3**2 = 1``), together with the accumulated phase time

    T(t) = integral from t0 to t of dt'/f(t'),

which drives the complex amplitude ``A(t) = A0 exp(-i(theta + omega*T))``
of the coherent state.  ``|A|`` is a constant of motion; the envelope
minima ("nodes") and maxima ("bellies") alternate every quarter wave
period and organize the behavior of every observable downstream.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np
from scipy.optimize import brentq

from .errors import ParameterError

KIND_GENERIC = "generic"
KIND_NODE = "node"
KIND_BELLY = "belly"


def reduce_phase(phi):
    """Fold an arbitrary envelope phase into [-pi/2, pi/2).

    The envelope is pi-periodic in the phase, so every scenario is
    equivalent to one with the phase in this range.
    """
    return (phi + 0.5 * math.pi) % math.pi - 0.5 * math.pi


@dataclass(frozen=True)
class ModelParams:
    """Physical constants and envelope constants defining one scenario.

    Natural units ``epsilon = omega = hbar = 1`` are the defaults.  The
    third envelope constant is derived, ``c3 = c3_sign * sqrt(c1*c2 - 1)``,
    so that ``c1*c2 - c3**2 = 1`` holds by construction.  ``phi`` must lie
    in [-pi/2, pi/2); use :func:`reduce_phase` to fold other angles.
    """

    epsilon: float = 1.0
    omega: float = 1.0
    hbar: float = 1.0
    c1: float = 1.0
    c2: float = 1.0
    c3_sign: int = 1
    phi: float = 0.0
    t0: float = 0.0

    def __post_init__(self):
        for name in ("epsilon", "omega", "hbar"):
            value = getattr(self, name)
            if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
                raise ParameterError(name, f"{name} must be a positive finite number, got {value!r}")
        for name in ("c1", "c2"):
            value = getattr(self, name)
            if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
                raise ParameterError(name, f"{name} must be > 0, got {value!r}")
        if self.c1 * self.c2 < 1.0:
            raise ParameterError(
                "c1", f"c1*c2 must be >= 1 so that c3 = sqrt(c1*c2 - 1) is real, got c1*c2 = {self.c1 * self.c2}"
            )
        if self.c3_sign not in (1, -1):
            raise ParameterError("c3_sign", f"c3_sign must be +1 or -1, got {self.c3_sign!r}")
        if not (-0.5 * math.pi <= self.phi < 0.5 * math.pi):
            raise ParameterError(
                "phi", f"phi must lie in [-pi/2, pi/2), got {self.phi!r}; use reduce_phase() to fold it (period pi)"
            )
        if not math.isfinite(self.t0):
            raise ParameterError("t0", f"t0 must be finite, got {self.t0!r}")

    @property
    def c3(self):
        return self.c3_sign * math.sqrt(self.c1 * self.c2 - 1.0)

    @property
    def pseudo_period(self):
        """Period of the envelope f(t)."""
        return math.pi / self.omega

    @property
    def wave_period(self):
        """Full period of the wave (densities, phase-space rotation)."""
        return 2.0 * math.pi / self.omega

    def f_extrema(self):
        """(f_min, f_max) of the envelope; f_min = 1/f_max > 0."""
        s = 0.5 * (self.c1 + self.c2)
        r = math.sqrt(s * s - 1.0)
        return s - r, s + r


@dataclass(frozen=True)
class NonstaticSample:
    """Envelope state at one instant: f, its rate, zeta = eps*omega/(hbar*f),
    the accumulated phase time T, and the node/belly classification."""

    t: float
    f: float
    fdot: float
    zeta: float
    T: float
    kind: str


@dataclass(frozen=True)
class ClassicalState:
    """Classical oscillation of the packet centre: Q0*cos(omega*(t-t0)+theta0)."""

    Q0: float
    theta0: float = 0.0
    Qcl: float | None = None
    Pcl: float | None = None

    def __post_init__(self):
        if self.Q0 < 0:
            raise ParameterError("Q0", f"Q0 must be >= 0, got {self.Q0!r}")


@dataclass(frozen=True)
class CoherentAmplitude:
    """Complex amplitude A at one instant; |value| == A0 for all times."""

    A0: float
    theta: float
    t: float
    value: complex


def _angle(params, t):
    return params.omega * (np.asarray(t, dtype=float) - params.t0) + params.phi


def f_of_t(params, t):
    """Envelope function f, vectorized over t (always > 0)."""
    a2 = 2.0 * _angle(params, t)
    return (
        0.5 * (params.c1 + params.c2)
        + 0.5 * (params.c2 - params.c1) * np.cos(a2)
        + params.c3 * np.sin(a2)
    )


def fdot_of_t(params, t):
    """Analytic df/dt (never finite-differenced)."""
    a2 = 2.0 * _angle(params, t)
    return params.omega * ((params.c1 - params.c2) * np.sin(a2) + 2.0 * params.c3 * np.cos(a2))


def fddot_of_t(params, t):
    """Analytic d2f/dt2."""
    a2 = 2.0 * _angle(params, t)
    return 2.0 * params.omega**2 * ((params.c1 - params.c2) * np.cos(a2) - 2.0 * params.c3 * np.sin(a2))


def zeta_of_t(params, t):
    """Inverse squared width parameter zeta = epsilon*omega/(hbar*f)."""
    return params.epsilon * params.omega / (params.hbar * f_of_t(params, t))


def nonstaticity_measure(params):
    """Degree of envelope breathing: sqrt((c1+c2)^2 - 4)/(2*sqrt(2)).

    Zero exactly in the static case c1 = c2 = 1 and positive otherwise.
    """
    s = params.c1 + params.c2
    return math.sqrt(max(s * s - 4.0, 0.0)) / (2.0 * math.sqrt(2.0))


def _unwrapped_arctan(params, angle):
    # Antiderivative of omega/f up to the branch steps of arctan: evaluate
    # arctan(c3 + c1*tan(x)) on the principal branch of x and add back
    # m*pi, where m counts tangent poles crossed.  This is continuous and
    # strictly increasing in `angle`; at a pole the limiting value applies.
    angle = np.asarray(angle, dtype=float)
    m = np.floor((angle + 0.5 * np.pi) / np.pi)
    x = angle - m * np.pi
    return np.arctan(params.c3 + params.c1 * np.tan(x)) + m * np.pi


def phase_integral(params, t):
    """Accumulated phase time T(t) = integral of 1/f from t0 to t (t >= t0).

    Continuous, strictly increasing, and advancing by exactly pi/omega per
    envelope period.  Matches adaptive quadrature of 1/f to better than
    1e-8 (enforced by the validation suite).
    """
    t_arr = np.asarray(t, dtype=float)
    if np.any(t_arr < params.t0):
        raise ValueError(f"phase integral is defined for t >= t0 = {params.t0}")
    base = _unwrapped_arctan(params, params.phi)
    result = (_unwrapped_arctan(params, _angle(params, t_arr)) - base) / params.omega
    if np.ndim(t) == 0:
        return float(result)
    return result


def _classify(params, t):
    fd = float(fdot_of_t(params, t))
    scale = params.omega * (params.c1 + params.c2)
    if abs(fd) > 1e-9 * scale:
        return KIND_GENERIC
    acc = float(fddot_of_t(params, t))
    if acc > 1e-9 * params.omega * scale:
        return KIND_NODE
    if acc < -1e-9 * params.omega * scale:
        return KIND_BELLY
    return KIND_GENERIC


def eval_f(params, t):
    """Sample the envelope at one instant t >= t0.

    The derivative comes from the closed-form expression, and the kind
    field flags envelope minima (nodes) and maxima (bellies).
    """
    t = float(t)
    return NonstaticSample(
        t=t,
        f=float(f_of_t(params, t)),
        fdot=float(fdot_of_t(params, t)),
        zeta=float(zeta_of_t(params, t)),
        T=phase_integral(params, t),
        kind=_classify(params, t),
    )


def amplitude_values(params, A0, theta, t):
    """A(t) = A0*exp(-i(theta + omega*T(t))), vectorized over t."""
    if A0 < 0:
        raise ValueError(f"A0 must be >= 0, got {A0!r}")
    return A0 * np.exp(-1j * (theta + params.omega * phase_integral(params, t)))


def amplitude(params, A0, theta, t):
    """Coherent amplitude at time t with modulus A0 and initial phase theta.

    The phase is continuous in t because T(t) is; at t = t0 the value is
    ``A0*exp(-i*theta)`` exactly.
    """
    value = amplitude_values(params, A0, theta, t)
    return CoherentAmplitude(A0=float(A0), theta=float(theta), t=float(t), value=complex(value))


def classical_trajectory(params, state, t):
    """Evaluate the classical centre motion at time t (fills Qcl, Pcl)."""
    th = params.omega * (float(t) - params.t0) + state.theta0
    qcl = state.Q0 * math.cos(th)
    pcl = -params.epsilon * params.omega * state.Q0 * math.sin(th)
    return replace(state, Qcl=qcl, Pcl=pcl)


def _eigenvalue_from_classical(params, state, t):
    f = float(f_of_t(params, t))
    fd = float(fdot_of_t(params, t))
    cl = classical_trajectory(params, state, t)
    ew = params.epsilon * params.omega
    return (
        math.sqrt(ew / (2.0 * params.hbar * f)) * (1.0 - 0.5j * fd / params.omega) * cl.Qcl
        + 1j * math.sqrt(f / (2.0 * ew * params.hbar)) * cl.Pcl
    )


def amplitude_from_classical(params, state, t):
    """Coherent amplitude built directly from a classical centre motion.

    The invariant modulus is ``sqrt(eps*omega*f(t1)/(2*hbar)) * Q0`` with
    t1 the instant the centre crosses the origin, ``t1 = t0 +
    (pi/2 - theta0)/omega``; theta is fitted so the value at t0 equals
    ``A0*exp(-i*theta)``.  Agrees with :func:`amplitude` at every t.
    """
    t1 = params.t0 + (0.5 * math.pi - state.theta0) / params.omega
    a0 = math.sqrt(params.epsilon * params.omega * float(f_of_t(params, t1)) / (2.0 * params.hbar)) * state.Q0
    if a0 > 0.0:
        theta = -float(np.angle(_eigenvalue_from_classical(params, state, params.t0)))
    else:
        theta = 0.0
    value = _eigenvalue_from_classical(params, state, t)
    return CoherentAmplitude(A0=a0, theta=theta, t=float(t), value=complex(value))


def critical_times(params, t_from, t_to):
    """All envelope extrema in [t_from, t_to] as (time, kind) pairs.

    Kinds alternate node/belly with spacing pi/(2*omega).  Roots of the
    analytic df/dt are located in closed form and polished by bracketed
    root refinement.  A static envelope (c1 = c2 = 1) has no extrema and
    yields an empty list, as does an empty window.
    """
    if not t_to > t_from:
        return []
    dc = params.c1 - params.c2
    rho = math.hypot(dc, 2.0 * params.c3)
    if rho == 0.0:
        return []
    w = params.omega
    delta = math.atan2(2.0 * params.c3, dc)
    # fdot ∝ sin(2*angle + delta); roots at angle = (k*pi - delta)/2.
    lo = (2.0 * (w * (t_from - params.t0) + params.phi) + delta) / math.pi
    hi = (2.0 * (w * (t_to - params.t0) + params.phi) + delta) / math.pi
    spacing = 0.5 * math.pi / w
    fd = lambda t: float(fdot_of_t(params, t))
    out = []
    for k in range(math.ceil(lo - 1e-12), math.floor(hi + 1e-12) + 1):
        seed = params.t0 + (0.5 * (k * math.pi - delta) - params.phi) / w
        a, b = seed - 0.45 * spacing, seed + 0.45 * spacing
        root = brentq(fd, a, b, xtol=1e-13)
        if root < t_from - 1e-12 / w or root > t_to + 1e-12 / w:
            continue
        kind = KIND_NODE if float(fddot_of_t(params, root)) > 0.0 else KIND_BELLY
        out.append((root, kind))
    return out
