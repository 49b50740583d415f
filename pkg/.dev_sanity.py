# Development sanity sweep: cross-check every closed form against an
# independent oracle before freezing tests. Not part of the deliverable.
import math
import numpy as np
from scipy.integrate import quad, solve_ivp
from scipy.linalg import expm

import nonstatic as ns
from nonstatic import core, observables, wavefunctions, wigner

P = ns.ModelParams(c1=5.0, c2=2.0)
print("c3 =", P.c3, "D =", ns.nonstaticity_measure(P))
print("D(1,1) =", ns.nonstaticity_measure(ns.ModelParams()))
print("D(1,100) =", ns.nonstaticity_measure(ns.ModelParams(c1=1, c2=100)))

# f values
print("f(0) =", core.f_of_t(P, 0.0), " f(pi/4) =", core.f_of_t(P, math.pi / 4))

# Eq-of-motion residual
ts = np.random.default_rng(0).uniform(0, 10, 10000)
f = core.f_of_t(P, ts); fd = core.fdot_of_t(P, ts); fdd = core.fddot_of_t(P, ts)
res = np.abs(fdd - fd**2 / (2 * f) + 2 * (f - 1 / f))
print("eq residual max:", res.max())

# ODE cross-check
sol = solve_ivp(lambda t, y: [y[1], y[1]**2 / (2 * y[0]) - 2 * (y[0] - 1 / y[0])],
                (0, math.pi), [2.0, float(core.fdot_of_t(P, 0.0))],
                rtol=1e-11, atol=1e-12, dense_output=True)
tt = np.linspace(0, math.pi, 101)
print("ODE vs closed max:", np.abs(sol.sol(tt)[0] - core.f_of_t(P, tt)).max())

# phase integral vs quadrature
for t in (0.3, 2.0, 2 * math.pi, 15.7):
    ref = quad(lambda u: 1 / float(core.f_of_t(P, u)), 0, t, limit=400, epsabs=1e-12, epsrel=1e-12)[0]
    print(f"T({t}) closed {core.phase_integral(P, t):.15f}  quad {ref:.15f}  diff {abs(core.phase_integral(P,t)-ref):.2e}")
print("pseudo-period advance - pi:", core.phase_integral(P, math.pi) - math.pi)

# edge phi = -pi/2
Pe = ns.ModelParams(c1=5, c2=2, phi=-math.pi / 2)
ref = quad(lambda u: 1 / float(core.f_of_t(Pe, u)), 0, 4.0, limit=400, epsabs=1e-12, epsrel=1e-12)[0]
print("phi=-pi/2 T(4) diff:", abs(core.phase_integral(Pe, 4.0) - ref))

# amplitude from classical vs amplitude()
cl = ns.ClassicalState(Q0=1.0, theta0=0.0)
a_cl0 = ns.amplitude_from_classical(P, cl, 0.0)
print("A0 (eq15) =", a_cl0.A0, "theta fit =", a_cl0.theta)
errs = []
for t in np.linspace(0, 12, 100):
    direct = ns.amplitude_from_classical(P, cl, t)
    recon = ns.amplitude(P, a_cl0.A0, a_cl0.theta, t)
    errs.append(abs(direct.value - recon.value))
    errs.append(abs(abs(direct.value) - a_cl0.A0))
print("from_classical vs amplitude max:", max(errs))

# critical times
crit = ns.critical_times(P, 0.0, 2 * math.pi)
print("critical:", [(round(t, 6), k) for t, k in crit])
print("spacings:", np.diff([t for t, _ in crit]))

# energies conservation + static value
amp = ns.amplitude(P, 1.0, 0.0, 0.0)
tt = np.linspace(0, 4 * math.pi, 500)
ek, ep, etot = ns.energies(P, amp, tt)
print("E conservation rel:", np.abs(etot - etot[0]).max() / abs(etot[0]))
Ps = ns.ModelParams()
amps = ns.amplitude(Ps, 1.0, 0.0, 0.0)
print("static Etot:", ns.energies(Ps, amps, 0.7)[2])
ek0, ep0, etot0 = ns.energies(P, ns.amplitude(P, 0.0, 0.0, 0.0), tt)
print("vacuum Etot const:", np.abs(etot0 - (P.c1 + P.c2) / 4).max())

# fluctuations vs field moments
t_chk = 0.7
g = ns.QuadratureGrid("q", -25, 25, 4001)
fq = ns.coherent_q(P, amp, g, t_chk)
dens = np.abs(fq.values) ** 2
m1 = np.trapezoid(dens * g.points, g.points)
m2 = np.trapezoid(dens * g.points**2, g.points)
dq_num = math.sqrt(m2 - m1**2)
dq, dp, pr = ns.fluctuations(P, t_chk)
print("dq closed vs moments:", abs(dq - dq_num), " <q> vs", abs(m1 - ns.expectation_q(P, amp, t_chk)))
gp = ns.QuadratureGrid("p", -25, 25, 4001)
fp = ns.coherent_p(P, amp, gp, t_chk)
densp = np.abs(fp.values) ** 2
p1 = np.trapezoid(densp * gp.points, gp.points)
p2 = np.trapezoid(densp * gp.points**2, gp.points)
print("dp closed vs moments:", abs(dp - math.sqrt(p2 - p1**2)), " <p>:", abs(p1 - ns.expectation_p(P, amp, t_chk)), "norms:", fq.norm, fp.norm)

# p-space vs numeric Fourier
qf = np.linspace(-30, 30, 6001)
psi_q = ns.coherent_q_values(P, amp, qf, 1.3)
pv = np.linspace(-12, 12, 401)
kernel = np.exp(-1j * np.outer(pv, qf) / P.hbar)
ft = kernel @ (psi_q * (qf[1] - qf[0])) / math.sqrt(2 * math.pi * P.hbar)
closed_p = ns.coherent_p_values(P, amp, pv, 1.3)
print("p-space closed vs FT:", np.abs(closed_p - ft).max())

# Fock orthonormality + coherent-over-Fock expansion
gw = ns.QuadratureGrid("q", -30, 30, 6001)
fields = [ns.fock_q(P, n, gw, 0.9) for n in range(8)]
G = np.array([[np.trapezoid(np.conj(a.values) * b.values, gw.points) for b in fields] for a in fields])
print("fock gram err:", np.abs(G - np.eye(8)).max())
# expansion
A0e, th = 1.5, 0.3
ampe = ns.amplitude(P, A0e, th, 0.0)
psi = ns.coherent_q_values(P, ampe, gw.points, 0.9)
nmax = 40
fock_stack = [ns.fock_q(P, n, gw, 0.9, n_max=50).values for n in range(nmax + 1)]
coef = np.array([np.trapezoid(np.conj(fv) * psi, gw.points) for fv in fock_stack])
recon = sum(c * fv for c, fv in zip(coef, fock_stack))
print("coherent-over-fock recon:", np.abs(recon - psi).max())
pois = np.array([math.exp(-A0e**2 / 2) * A0e**n / math.sqrt(math.factorial(n)) for n in range(nmax + 1)])
print("coef moduli vs Poisson:", np.abs(np.abs(coef) - pois).max())

# bogoliubov
mu, nu = observables._mu_nu(P, ts)
print("bogo identity:", np.abs(np.abs(mu)**2 - np.abs(nu)**2 - 1).max())

# mandel Q closed vs squeeze-operator oracle
def mandel_oracle(params, A0, theta, t, dim=200):
    pair = ns.bogoliubov(params, t)
    a_val = complex(core.amplitude_values(params, A0, theta, t))
    mu, nu = pair.mu, pair.nu
    r = math.acosh(abs(mu))
    chi = np.angle(nu) - np.angle(mu) if abs(nu) > 0 else 0.0
    xi = r * np.exp(1j * chi)
    n_idx = np.arange(dim)
    am = np.diag(np.sqrt(n_idx[1:]), 1)
    S = expm(0.5 * (np.conj(xi) * (am @ am) - xi * (am.T @ am.T)))
    alpha = a_val * np.exp(-1j * np.angle(mu))
    logw = -abs(alpha)**2 / 2 + n_idx * np.log(complex(alpha)) - 0.5 * np.array([math.lgamma(k + 1) for k in n_idx])
    coh = np.exp(logw)
    vec = S @ coh
    tail = np.sum(np.abs(vec[-20:])**2)
    nop = np.diag(n_idx.astype(float))
    mean = np.real(np.conj(vec) @ (nop @ vec))
    mean2 = np.real(np.conj(vec) @ (nop @ nop @ vec))
    return (mean2 - mean**2 - mean) / mean, tail

P21 = ns.ModelParams(c1=2.0, c2=1.0)
amp21 = ns.amplitude(P21, 1.0, 0.0, 0.0)
for t in (0.0, 0.9):
    qc = float(ns.mandel_q(P21, amp21, t))
    qo, tail = mandel_oracle(P21, 1.0, 0.0, t)
    print(f"mandel t={t}: closed {qc:.12f} oracle {qo:.12f} diff {abs(qc-qo):.2e} tail {tail:.1e}")
print("mandel static:", float(ns.mandel_q(ns.ModelParams(), amps, 0.3)))
qq = ns.mandel_q(P, amp, np.linspace(0, 10, 300))
print("mandel constancy:", np.abs(qq - qq[0]).max(), "value", qq[0])
print("mandel (10,10) vs (10,1)/(1,10):",
      float(ns.mandel_q(ns.ModelParams(c1=10, c2=10), amp, 1.0)),
      float(ns.mandel_q(ns.ModelParams(c1=10, c2=1), amp, 1.0)),
      float(ns.mandel_q(ns.ModelParams(c1=1, c2=10), amp, 1.0)))

# wigner closed vs numeric
grid = wigner.PhaseSpaceGrid(-8, 10, 61, -9, 9, 61, t=1.0)
wc = ns.wigner_closed(P, amp, grid)
wn = ns.wigner_numeric(P, amp, grid)
print("wigner closed vs numeric:", np.abs(wc.values - wn.values).max())
tot = np.trapezoid(np.trapezoid(wc.values, grid.p, axis=1), grid.q)
print("wigner norm over small window:", tot)
# covariance cross term vs numeric moments
t_w = 0.8
cqv = float(ns.expectation_q(P, amp, t_w)); cpv = float(ns.expectation_p(P, amp, t_w))
sig = ns.covariance(P, t_w)
hq = 7 * math.sqrt(sig[0, 0]); hp = 7 * math.sqrt(sig[1, 1])
g2 = wigner.PhaseSpaceGrid(cqv - hq, cqv + hq, 201, cpv - hp, cpv + hp, 201, t=t_w)
wn2 = ns.wigner_numeric(P, amp, g2)
Q2, P2 = np.meshgrid(g2.q, g2.p, indexing="ij")
W = wn2.values
norm2 = np.trapezoid(np.trapezoid(W, g2.p, axis=1), g2.q)
mq = np.trapezoid(np.trapezoid(W * Q2, g2.p, axis=1), g2.q) / norm2
mp = np.trapezoid(np.trapezoid(W * P2, g2.p, axis=1), g2.q) / norm2
sqq = np.trapezoid(np.trapezoid(W * (Q2 - mq)**2, g2.p, axis=1), g2.q) / norm2
spp = np.trapezoid(np.trapezoid(W * (P2 - mp)**2, g2.p, axis=1), g2.q) / norm2
sqp = np.trapezoid(np.trapezoid(W * (Q2 - mq) * (P2 - mp), g2.p, axis=1), g2.q) / norm2
print("cov numeric vs closed:", abs(sqq - sig[0,0]), abs(spp - sig[1,1]), abs(sqp - sig[0,1]))
print("det cov numeric:", sqq * spp - sqp**2, "(hbar/2)^2 =", 0.25)

# ellipse track rotation rates
times = np.linspace(0.0, 4 * math.pi, 400)
track = ns.ellipse_track(P, amp, times)
angles = np.array([s.angle for s in track])
# unwrap mod pi
unwrapped = [angles[0]]
for a in angles[1:]:
    prev = unwrapped[-1]
    k = round((prev - a) / math.pi)
    unwrapped.append(a + k * math.pi)
unwrapped = np.array(unwrapped)
slope = np.polyfit(times, unwrapped, 1)[0]
print("orientation slope (expect -1):", slope, "max dev from line:",
      np.abs(unwrapped - (unwrapped[0] + slope * (times - times[0]))).max())
centers = np.array([s.center for s in track])
cang = np.unwrap(np.arctan2(centers[:, 1], centers[:, 0]))
cslope = np.polyfit(times, cang, 1)[0]
print("centre slope (expect -1):", cslope)
areas = np.array([s.radii[0] * s.radii[1] for s in track])
print("area dev from hbar/2:", np.abs(areas - 0.5).max())

# argmax Ek vs node (A0=0) check
from scipy.optimize import minimize_scalar
for c1v in (2, 4, 10, 20):
    Pc = ns.ModelParams(c1=float(c1v), c2=1.0)
    amp0 = ns.amplitude(Pc, 0.0, 0.0, 0.0)
    crit = ns.critical_times(Pc, 0.0, math.pi)
    node = [t for t, k in crit if k == "node"][0]
    belly = [t for t, k in crit if k == "belly"][0]
    r = minimize_scalar(lambda t: -ns.energies(Pc, amp0, t)[0], bracket=None,
                        bounds=(node - 0.7, node + 0.7), method="bounded",
                        options={"xatol": 1e-12})
    r2 = minimize_scalar(lambda t: -ns.energies(Pc, amp0, t)[1],
                         bounds=(belly - 0.7, belly + 0.7), method="bounded",
                         options={"xatol": 1e-12})
    print(f"c1={c1v}: argmaxEk-node {abs(r.x-node):.2e} argmaxEp-belly {abs(r2.x-belly):.2e}")

# A0=1 theta=0 offset (documents the approximate nature for displaced packets)
Pc = ns.ModelParams(c1=4.0, c2=1.0)
amp1 = ns.amplitude(Pc, 1.0, 0.0, 0.0)
crit = ns.critical_times(Pc, 0.0, math.pi)
node = [t for t, k in crit if k == "node"][0]
r = minimize_scalar(lambda t: -ns.energies(Pc, amp1, t)[0],
                    bounds=(node - 0.9, node + 0.9), method="bounded", options={"xatol": 1e-12})
print("A0=1 c1=4 argmaxEk vs node offset:", r.x - node)
