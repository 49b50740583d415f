import math

import numpy as np
import pytest
from numpy.testing import assert_allclose
from scipy.special import eval_hermite, factorial

import nonstatic as ns
from nonstatic import core
from _oracles import fourier_to_p, grid_moments


def wide_grid(axis="q", half=30.0, n=6001):
    return ns.QuadratureGrid(axis, -half, half, n)


def test_grid_validation():
    with pytest.raises(ValueError):
        ns.QuadratureGrid("x", -1, 1, 11)
    with pytest.raises(ValueError):
        ns.QuadratureGrid("q", 1, -1, 11)
    with pytest.raises(ValueError):
        ns.QuadratureGrid("q", -1, 1, 2)
    g = ns.QuadratureGrid("q", -2.0, 2.0, 5)
    assert_allclose(g.points, [-2, -1, 0, 1, 2])
    assert g.spacing == 1.0


def test_hermite_functions_match_scipy():
    x = np.linspace(-6.0, 6.0, 201)
    funcs = ns.hermite_functions(30, x)
    for n in (0, 1, 2, 5, 12, 30):
        ref = (eval_hermite(n, x) * np.exp(-0.5 * x * x)
               / math.sqrt(2.0**n * factorial(n, exact=True) * math.sqrt(math.pi)))
        assert_allclose(funcs[n], ref, atol=1e-12)


def test_hermite_functions_high_order_no_overflow():
    x = np.linspace(-15.0, 15.0, 101)
    funcs = ns.hermite_functions(50, x)
    assert np.all(np.isfinite(funcs))
    # orthonormal family stays O(1)
    assert np.abs(funcs).max() < 1.0


def test_vacuum_static_position_density():
    p = ns.ModelParams()
    amp = ns.amplitude(p, 0.0, 0.0, 0.0)
    grid = ns.QuadratureGrid("q", -10.0, 10.0, 2001)
    fld = ns.coherent_q(p, amp, grid, 2.2)
    centre_value = np.abs(fld.values[grid.n // 2]) ** 2
    assert_allclose(centre_value, 1.0 / math.sqrt(math.pi), rtol=1e-12)
    assert abs(fld.norm - 1.0) <= 1e-6
    assert not fld.narrow
    # identical modulus to the ground number state
    vac = ns.fock_q(p, 0, grid, 2.2)
    assert_allclose(np.abs(vac.values), np.abs(fld.values), atol=1e-13)


def test_norm_on_stated_grid():
    p = ns.ModelParams(c1=5.0, c2=2.0)
    amp = ns.amplitude(p, 1.0, 0.0, 0.0)
    grid = ns.QuadratureGrid("q", -10.0, 10.0, 2001)
    fld = ns.coherent_q(p, amp, grid, 0.0)
    assert abs(fld.norm - 1.0) <= 1e-6


def test_narrow_grid_flag():
    p = ns.ModelParams(c1=5.0, c2=2.0)
    amp = ns.amplitude(p, 1.0, 0.0, 0.0)
    t_belly = ns.critical_times(p, 0.0, math.pi)[0][0]
    tight = ns.QuadratureGrid("q", -4.0, 4.0, 801)
    assert ns.coherent_q(p, amp, tight, t_belly).narrow
    assert not ns.coherent_q(p, amp, wide_grid(), t_belly).narrow


def test_packet_centre_and_width_match_closed_forms():
    p = ns.ModelParams(c1=5.0, c2=2.0)
    amp = ns.amplitude(p, 1.0, 0.0, 0.0)
    for t in (0.0, 0.7, 2.9):
        fld = ns.coherent_q(p, amp, wide_grid(), t)
        norm, mean, std = grid_moments(fld.grid.points, fld.values)
        assert abs(norm - 1.0) <= 1e-6
        assert abs(mean - float(ns.expectation_q(p, amp, t))) <= 1e-6
        assert abs(std - float(ns.fluctuations(p, t)[0])) <= 1e-6


def test_width_ratio_belly_over_node():
    # widening/narrowing of the breathing packet: the variance ratio at the
    # envelope extrema equals f_max/f_min
    p = ns.ModelParams(c1=5.0, c2=2.0)
    amp = ns.amplitude(p, 1.0, 0.0, 0.0)
    crit = dict((kind, t) for t, kind in ns.critical_times(p, 0.0, math.pi))
    _, _, std_belly = grid_moments(*_field(p, amp, crit["belly"]))
    _, _, std_node = grid_moments(*_field(p, amp, crit["node"]))
    fmin, fmax = p.f_extrema()
    assert_allclose(std_belly**2 / std_node**2, fmax / fmin, rtol=1e-6)


def _field(p, amp, t):
    fld = ns.coherent_q(p, amp, wide_grid(), t)
    return fld.grid.points, fld.values


def test_vacuum_static_momentum_density():
    p = ns.ModelParams()
    amp = ns.amplitude(p, 0.0, 0.0, 0.0)
    grid = ns.QuadratureGrid("p", -10.0, 10.0, 2001)
    fld = ns.coherent_p(p, amp, grid, 1.4)
    centre_value = np.abs(fld.values[grid.n // 2]) ** 2
    assert_allclose(centre_value, 1.0 / math.sqrt(math.pi), rtol=1e-12)
    _, _, std = grid_moments(grid.points, fld.values)
    assert_allclose(std, math.sqrt(0.5), rtol=1e-6)


def test_momentum_space_matches_fourier_transform():
    p = ns.ModelParams(c1=5.0, c2=2.0)
    amp = ns.amplitude(p, 1.0, 0.0, 0.0)
    t = 1.3
    q = np.linspace(-30.0, 30.0, 6001)
    psi_q = ns.coherent_q_values(p, amp, q, t)
    pv = np.linspace(-12.0, 12.0, 401)
    ft = fourier_to_p(p, psi_q, q, pv)
    closed = ns.coherent_p_values(p, amp, pv, t)
    assert np.abs(closed - ft).max() <= 1e-6


def test_parseval_and_norm_preservation():
    p = ns.ModelParams(c1=5.0, c2=2.0)
    amp = ns.amplitude(p, 1.0, 0.0, 0.0)
    gq = wide_grid("q")
    gp = wide_grid("p")
    for t in np.linspace(0.0, p.wave_period, 12):
        fq = ns.coherent_q(p, amp, gq, t)
        fp = ns.coherent_p(p, amp, gp, t)
        assert abs(fq.norm - 1.0) <= 1e-6
        assert abs(fq.norm - fp.norm) <= 1e-6


def test_density_periodicity():
    p = ns.ModelParams(c1=5.0, c2=2.0)
    amp = ns.amplitude(p, 1.0, 0.0, 0.0)
    grid = wide_grid()
    for t in (0.3, 1.9):
        d1 = np.abs(ns.coherent_q(p, amp, grid, t).values) ** 2
        d2 = np.abs(ns.coherent_q(p, amp, grid, t + p.wave_period).values) ** 2
        assert np.abs(d1 - d2).max() <= 1e-8
        # the width function has the envelope's half period
        assert abs(float(ns.fluctuations(p, t)[0])
                   - float(ns.fluctuations(p, t + p.pseudo_period)[0])) <= 1e-12


def test_momentum_density_leads_position_density():
    # the momentum-space evolution runs a quarter wave period ahead of the
    # position-space one
    p = ns.ModelParams(c1=10.0, c2=10.0)
    quarter = 0.25 * p.wave_period
    ts = np.linspace(0.0, p.pseudo_period, 600, endpoint=False)
    dq, dp, _ = ns.fluctuations(p, ts)
    dq_scaled = dq * math.sqrt(2.0 * p.epsilon * p.omega / p.hbar)
    dp_shift = ns.fluctuations(p, ts + quarter)[1] * math.sqrt(2.0 / (p.hbar * p.epsilon * p.omega))
    assert np.abs(dp_shift - dq_scaled).max() <= 1e-10


def test_fock_orthonormality_small_block():
    p = ns.ModelParams(c1=5.0, c2=2.0)
    grid = ns.QuadratureGrid("q", -12.0, 12.0, 4001)
    f3 = ns.fock_q(p, 3, grid, 0.9)
    overlap = np.trapezoid(np.conj(f3.values) * f3.values, grid.points)
    assert abs(overlap - 1.0) <= 1e-6
    f1 = ns.fock_q(p, 1, grid, 0.9)
    assert abs(np.trapezoid(np.conj(f3.values) * f1.values, grid.points)) <= 1e-6


def test_fock_density_interior_zeros():
    p = ns.ModelParams(c1=10.0, c2=10.0)
    grid = wide_grid(half=40.0, n=8001)
    for t in (0.0, 0.5, 1.3, 2.6):
        fld = ns.fock_q(p, 5, grid, t)
        zeros = _count_interior_zeros(p, fld)
        assert zeros == 5, f"expected 5 interior zeros at t={t}, got {zeros}"


def _count_interior_zeros(p, fld):
    # strip the quadratic and evolution phases; what remains is the real
    # Hermite envelope whose sign changes mark the density zeros
    q = fld.grid.points
    f = float(core.f_of_t(p, fld.t))
    fd = float(core.fdot_of_t(p, fld.t))
    z = p.epsilon * p.omega / (p.hbar * f)
    gamma = -p.omega * (5 + 0.5) * core.phase_integral(p, fld.t)
    bare = fld.values * np.exp(-1j * (0.25 * z * fd / p.omega * q * q + gamma))
    assert np.abs(bare.imag).max() <= 1e-10
    sign = np.sign(bare.real)
    sign = sign[np.abs(bare.real) > 1e-12]
    return int(np.sum(sign[1:] != sign[:-1]))


def test_fock_width_breathes_with_envelope():
    p = ns.ModelParams(c1=10.0, c2=10.0)
    crit = dict((kind, t) for t, kind in ns.critical_times(p, 0.0, math.pi))
    grid = wide_grid(half=45.0, n=9001)
    _, _, std_belly = grid_moments(grid.points, ns.fock_q(p, 5, grid, crit["belly"]).values)
    _, _, std_node = grid_moments(grid.points, ns.fock_q(p, 5, grid, crit["node"]).values)
    fmin, fmax = p.f_extrema()
    assert_allclose(std_belly**2 / std_node**2, fmax / fmin, rtol=1e-6)


def test_fock_capability_guard():
    p = ns.ModelParams()
    grid = ns.QuadratureGrid("q", -12.0, 12.0, 101)
    with pytest.raises(ns.CapabilityError):
        ns.fock_q(p, 51, grid, 0.0)
    ns.fock_q(p, 51, grid, 0.0, n_max=60)  # configurable cap
    with pytest.raises(ValueError):
        ns.fock_q(p, -1, grid, 0.0)


def test_coherent_state_over_fock_expansion():
    # projecting the coherent field onto the number states reconstructs it
    # with Poisson-weighted coefficients
    p = ns.ModelParams(c1=5.0, c2=2.0)
    a0 = 1.5
    amp = ns.amplitude(p, a0, 0.3, 0.0)
    grid = wide_grid()
    t = 0.9
    psi = ns.coherent_q_values(p, amp, grid.points, t)
    stack = [ns.fock_q(p, n, grid, t).values for n in range(41)]
    coef = np.array([np.trapezoid(np.conj(v) * psi, grid.points) for v in stack])
    recon = sum(c * v for c, v in zip(coef, stack))
    assert np.abs(recon - psi).max() <= 1e-6
    weights = np.array([math.exp(-a0**2 / 2) * a0**n / math.sqrt(math.factorial(n))
                        for n in range(41)])
    assert np.abs(np.abs(coef) - weights).max() <= 1e-6


def test_axis_mismatch_raises():
    p = ns.ModelParams()
    amp = ns.amplitude(p, 1.0, 0.0, 0.0)
    with pytest.raises(ValueError):
        ns.coherent_q(p, amp, ns.QuadratureGrid("p", -1, 1, 11), 0.0)
    with pytest.raises(ValueError):
        ns.coherent_p(p, amp, ns.QuadratureGrid("q", -1, 1, 11), 0.0)
    with pytest.raises(ValueError):
        ns.fock_q(p, 1, ns.QuadratureGrid("p", -1, 1, 11), 0.0)
