"""Closed-form observables of the nonstatic coherent wave.

Field energies, quadrature fluctuations, the Bogoliubov pair (mu, nu)
connecting the breathing mode to the standard static mode, and Mandel's Q
parameter.  All are pure functions of (params, amplitude, t); series over
time grids are plain vectorized evaluations.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import core
from .errors import UndefinedStatisticsError


@dataclass(frozen=True)
class BogoliubovPair:
    """Linear coefficients between the breathing-mode and static-mode
    ladder operators; |mu|^2 - |nu|^2 = 1."""

    mu: complex
    nu: complex


@dataclass(frozen=True)
class ObservableSeries:
    """Time series of energies, fluctuations and photon statistics.

    Energies are in absolute units (hbar*omega*[...] with the supplied
    constants); Etot is constant in t and Qmandel is constant in t.
    """

    times: np.ndarray
    Ek: np.ndarray
    Ep: np.ndarray
    Etot: np.ndarray
    dq: np.ndarray
    dp: np.ndarray
    product: np.ndarray
    Qmandel: np.ndarray


def _amp_values(params, amp, t):
    return core.amplitude_values(params, amp.A0, amp.theta, t)


def expectation_q(params, amp, t):
    """Packet centre <q> = sqrt(2*hbar*f/(eps*omega)) * Re A."""
    f = core.f_of_t(params, t)
    a = _amp_values(params, amp, t)
    return np.sqrt(2.0 * params.hbar * f / (params.epsilon * params.omega)) * np.real(a)


def expectation_p(params, amp, t):
    """Packet centre <p> = sqrt(hbar*eps*omega/(2f)) * (2 Im A + (fdot/omega) Re A)."""
    f = core.f_of_t(params, t)
    fd = core.fdot_of_t(params, t)
    a = _amp_values(params, amp, t)
    pref = np.sqrt(params.hbar * params.epsilon * params.omega / (2.0 * f))
    return pref * (2.0 * np.imag(a) + (fd / params.omega) * np.real(a))


def energies(params, amp, t):
    """(electric, magnetic, total) field energy at time t (vectorized).

    The electric part peaks when the envelope is narrowest (nodes), the
    magnetic part when it is widest (bellies); the sum is conserved.
    """
    f = core.f_of_t(params, t)
    beta = 0.5 * core.fdot_of_t(params, t) / params.omega
    a = _amp_values(params, amp, t)
    hw = params.hbar * params.omega
    g = 1.0 + beta * beta
    plus = 1.0 + 1j * beta
    a2 = a * a
    abs2 = np.abs(a) ** 2
    ek = -(hw / (4.0 * f)) * (2.0 * np.real(plus * plus * a2) - g * (2.0 * abs2 + 1.0))
    ep = 0.25 * hw * f * (2.0 * np.real(a2) + 2.0 * abs2 + 1.0)
    return ek, ep, ek + ep


def fluctuations(params, t):
    """Quadrature spreads (dq, dp) and the uncertainty product (vectorized).

    dq = sqrt(hbar*f/(2*eps*omega)), dp = sqrt(hbar*eps*omega*(1 +
    fdot^2/(4 omega^2))/(2f)); the product equals hbar/2 exactly where
    fdot = 0, i.e. at every node and belly.
    """
    f = core.f_of_t(params, t)
    beta = 0.5 * core.fdot_of_t(params, t) / params.omega
    g = 1.0 + beta * beta
    ew = params.epsilon * params.omega
    dq = np.sqrt(params.hbar * f / (2.0 * ew))
    dp = np.sqrt(params.hbar * ew * g / (2.0 * f))
    product = 0.5 * params.hbar * np.sqrt(g)
    return dq, dp, product


def _mu_nu(params, t):
    f = core.f_of_t(params, t)
    beta = 0.5 * core.fdot_of_t(params, t) / params.omega
    root = np.sqrt(f)
    half = (1.0 - 1j * beta) / (2.0 * root)
    return half + 0.5 * root, half - 0.5 * root


def bogoliubov(params, t):
    """Bogoliubov pair (mu, nu) at time t.

    mu - nu = sqrt(f) is real and positive, and |mu|^2 - |nu|^2 = 1; the
    static case gives (1, 0).
    """
    mu, nu = _mu_nu(params, t)
    return BogoliubovPair(mu=complex(mu), nu=complex(nu))


def mandel_q(params, amp, t):
    """Mandel Q parameter of the photon-number distribution (vectorized).

    Q >= -1 always; Q = 0 exactly in the static coherent case and Q > 0
    for any breathing envelope.  Although built from the oscillating f(t),
    Q does not vary over time.  Raises
    :class:`~nonstatic.errors.UndefinedStatisticsError` when the mean
    photon number is zero (static vacuum) instead of returning 0/0.
    """
    mu, nu = _mu_nu(params, t)
    a = _amp_values(params, amp, t)
    m2 = np.abs(mu) ** 2
    n2 = np.abs(nu) ** 2
    abs2 = np.abs(a) ** 2
    cross = 2.0 * np.real(mu * nu * np.conj(a) ** 2)
    mean = (m2 + n2) * abs2 - cross + n2
    var = (
        (m2 * m2 + 6.0 * m2 * n2 + n2 * n2) * abs2
        - 2.0 * (m2 + n2) * cross
        + 2.0 * m2 * n2
    )
    if np.any(mean == 0.0):
        raise UndefinedStatisticsError(
            "mean photon number is zero (static vacuum); the Q parameter is undefined"
        )
    return (var - mean) / mean


def observable_series(params, A0, theta, times):
    """Evaluate all closed-form observables on a time grid."""
    times = np.asarray(times, dtype=float)
    amp = core.CoherentAmplitude(A0=float(A0), theta=float(theta), t=float(params.t0),
                                 value=complex(A0 * np.exp(-1j * theta)))
    ek, ep, etot = energies(params, amp, times)
    dq, dp, product = fluctuations(params, times)
    q = mandel_q(params, amp, times)
    return ObservableSeries(times=times, Ek=ek, Ep=ep, Etot=etot,
                            dq=dq, dp=dp, product=product,
                            Qmandel=np.broadcast_to(q, times.shape).copy())
