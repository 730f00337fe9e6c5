"""Cross-validation suite: every closed form checked against an independent route.

The checks here back both the ``validate`` CLI subcommand and the acceptance
test module.  Each check returns a CheckResult; nothing is asserted at this
level so the CLI can emit a complete pass/fail report in one run.

One check is expected to fail and is kept deliberately: the drift form
"(hbar k0/m)(xi + t nu)" for <l_y> cannot match any correct oracle (the
operator solutions force xi - t nu; see docs/physics_notes.md).  The adjacent
check verifies the operator-derived form and passes.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .evolution import (EvolutionRequest, KernelConvolution, SplitStepOracle,
                        closed_form_linear_state, density_slice,
                        evolve_convolution, evolve_split_step, suggest_grid)
from .forces import Constant, ForceProfile, Sinusoidal, Tabulated, Zero
from .grids import AxisSpec, ComplexField, Grid3
from .kernels import (KernelSpec, free_kernel_1d, free_transverse_kernel,
                      linear_longitudinal_kernel, magnetic_force_kernel,
                      magnetic_kernel, trig_functionals)
from .observables import (grid_observables, inertia_com, inertia_lab,
                          lobe_orientation, magnetic_trajectory,
                          oam_expectation, trajectory, uncertainties_hg11)
from .params import PhysicalParams
from .states import HermiteGaussSpec, LaguerreGaussSpec, hermite_poly, sample_field


@dataclass
class CheckResult:
    name: str
    passed: bool
    value: float
    tolerance: float
    detail: str = ""

    def json_line(self) -> str:
        return json.dumps({
            "check": self.name,
            "status": "pass" if self.passed else "fail",
            "value": self.value,
            "tolerance": self.tolerance,
            "detail": self.detail,
        })


def _result(name, value, tol, detail="", larger_ok=False) -> CheckResult:
    ok = (value >= tol) if larger_ok else (value <= tol)
    return CheckResult(name, bool(ok), float(value), float(tol), detail)


# -- finite-difference residuals of the defining equations ---------------------------


def pde_residual_linear(params: PhysicalParams, profile: ForceProfile,
                        n_points: int = 50, h: float = 2e-4, seed: int = 11):
    """Relative residual of [i hbar d_t + (hbar^2/2m) d_xx - mu(t) x] K at
    random interior points; sample offsets scale with sqrt(t) so the chirp
    stays resolved by the stencil."""
    rng = np.random.default_rng(seed)
    ts = rng.uniform(0.2, 0.5, n_points)
    scale = np.sqrt(2.0 * ts)
    xs = rng.uniform(-0.9, 0.9, n_points) * scale
    xps = rng.uniform(-0.9, 0.9, n_points) * scale
    out = np.empty(n_points)
    hbar, m = params.hbar, params.mass
    for i in range(n_points):
        t, x, xp = ts[i], xs[i], xps[i]
        f = lambda tt, xx: complex(linear_longitudinal_kernel(params, profile, xx, tt, xp))
        k0 = f(t, x)
        dt = (f(t + h, x) - f(t - h, x)) / (2.0 * h)
        dxx = (f(t, x + h) - 2.0 * k0 + f(t, x - h)) / h**2
        tt_ = 1j * hbar * dt
        tk = (hbar**2 / (2.0 * m)) * dxx
        tv = profile.mu(t) * x * k0
        out[i] = abs(tt_ + tk - tv) / (abs(tt_) + abs(tk) + abs(tv))
    return out


def pde_residual_free2d(params: PhysicalParams, n_points: int = 50,
                        h: float = 2e-4, seed: int = 12):
    rng = np.random.default_rng(seed)
    ts = rng.uniform(0.2, 0.5, n_points)
    pts = rng.uniform(-0.9, 0.9, (n_points, 4)) * np.sqrt(2.0 * ts)[:, None]
    out = np.empty(n_points)
    hbar, m = params.hbar, params.mass
    for i in range(n_points):
        t = ts[i]
        y, z, yp, zp = pts[i]
        f = lambda tt, yy, zz: complex(free_transverse_kernel(params, yy, zz, tt, yp, zp))
        k0 = f(t, y, z)
        dt = (f(t + h, y, z) - f(t - h, y, z)) / (2.0 * h)
        dyy = (f(t, y + h, z) - 2.0 * k0 + f(t, y - h, z)) / h**2
        dzz = (f(t, y, z + h) - 2.0 * k0 + f(t, y, z - h)) / h**2
        tt_ = 1j * hbar * dt
        tk = (hbar**2 / (2.0 * m)) * (dyy + dzz)
        out[i] = abs(tt_ + tk) / (abs(tt_) + abs(tk))
    return out


def pde_residual_magnetic(params: PhysicalParams, mu0: float = 0.0,
                          n_points: int = 50, h: float = 2e-4, seed: int = 13):
    """Residual against the symmetric-gauge Hamiltonian
    p^2/2m + (m w^2/2)(x^2+y^2) + w(p_x y - p_y x) [+ mu0 x]."""
    rng = np.random.default_rng(seed)
    w = params.larmor
    ts = rng.uniform(0.2, 0.5, n_points)
    pts = rng.uniform(-0.9, 0.9, (n_points, 6)) * np.sqrt(2.0 * ts)[:, None]
    out = np.empty(n_points)
    hbar, m = params.hbar, params.mass

    def kern(tt, r, rp):
        if mu0 == 0.0:
            return complex(magnetic_kernel(params, r, tt, rp))
        return complex(magnetic_force_kernel(params, mu0, r, tt, rp))

    for i in range(n_points):
        t = ts[i]
        x, y, z, xp, yp, zp = pts[i]
        rp = (xp, yp, zp)
        f = lambda tt, xx, yy, zz: kern(tt, (xx, yy, zz), rp)
        k0 = f(t, x, y, z)
        dt = (f(t + h, x, y, z) - f(t - h, x, y, z)) / (2.0 * h)
        dxx = (f(t, x + h, y, z) - 2.0 * k0 + f(t, x - h, y, z)) / h**2
        dyy = (f(t, x, y + h, z) - 2.0 * k0 + f(t, x, y - h, z)) / h**2
        dzz = (f(t, x, y, z + h) - 2.0 * k0 + f(t, x, y, z - h)) / h**2
        dx = (f(t, x + h, y, z) - f(t, x - h, y, z)) / (2.0 * h)
        dy = (f(t, x, y + h, z) - f(t, x, y - h, z)) / (2.0 * h)
        tt_ = 1j * hbar * dt
        tk = (hbar**2 / (2.0 * m)) * (dxx + dyy + dzz)
        trot = -1j * hbar * w * (y * dx - x * dy)  # w (p_x y - p_y x) K
        tv = (0.5 * m * w**2 * (x**2 + y**2) + mu0 * x) * k0
        r = tt_ + tk - trot - tv
        out[i] = abs(r) / (abs(tt_) + abs(tk) + abs(trot) + abs(tv))
    return out


def residual_refinement_ratio(residual_fn, h: float = 2e-4, **kw) -> float:
    """Median residual decay when the stencil step halves (~4 for 2nd order)."""
    r1 = residual_fn(h=h, **kw)
    r2 = residual_fn(h=h / 2.0, **kw)
    return float(np.median(r1 / r2))


# -- scenario table -------------------------------------------------------------------


def standard_params() -> PhysicalParams:
    return PhysicalParams.natural()


def magnetic_params() -> PhysicalParams:
    return PhysicalParams.natural(b_field=4.0)  # larmor rate 2


def scenario_kernels(mu0: float = 16.0):
    p = standard_params()
    pb = magnetic_params()
    return [
        ("zero", KernelSpec.linear(p, Zero())),
        ("constant", KernelSpec.linear(p, Constant(mu0))),
        ("sinusoidal", KernelSpec.linear(p, Sinusoidal(mu0, p.tau))),
        ("magnetic", KernelSpec.magnetic(pb)),
        ("magnetic_force", KernelSpec.magnetic_with_force(pb, mu0)),
    ]


def oracle_pair(kernel: KernelSpec, t: float, n_trans: int = 128,
                steps: int = 256, n_z: int = 128):
    """Evolve the two-node state by both routes on a shared grid; returns
    (relative L2 difference of the z=0 density slices, conv field, split field)."""
    spec = HermiteGaussSpec(1, 1)
    grid = suggest_grid(kernel, spec, t, transverse_count=n_trans, z_count=n_z)
    fc = evolve_convolution(EvolutionRequest(spec, kernel, t, grid, KernelConvolution()))
    fs = evolve_split_step(EvolutionRequest(spec, kernel, t, grid, SplitStepOracle(steps)))
    dc = density_slice(fc, "z", 0.0).values
    ds = density_slice(fs, "z", 0.0).values
    rel = float(np.linalg.norm(dc - ds) / np.linalg.norm(dc))
    return rel, fc, fs


# -- the suite ------------------------------------------------------------------------


def all_profiles():
    p = standard_params()
    knots_t = tuple(np.linspace(0.0, 2.0, 41))
    knots_f = tuple(3.0 * math.sin(1.7 * t) + t for t in knots_t)
    return [
        ("zero", Zero()),
        ("constant", Constant(2.0)),
        ("sinusoidal", Sinusoidal(1.5, p.tau)),
        ("tabulated", Tabulated(knots_t, knots_f)),
    ]


def check_force_identities(n_times: int = 100, seed: int = 5):
    rng = np.random.default_rng(seed)
    worst = 0.0
    for name, prof in all_profiles():
        ts = rng.uniform(1e-3, 1.9, n_times)
        for t in ts:
            v = prof.v_moment(t)
            ident = t * prof.nu(t) - prof.xi(t)
            scale = max(abs(v), abs(ident), 1e-12)
            worst = max(worst, abs(v - ident) / scale)
    return [_result("forces.integration_by_parts", worst, 1e-8,
                    "v(t) = t nu(t) - xi(t), 100 random t per profile")]


def check_force_derivatives(n_times: int = 100, seed: int = 6):
    rng = np.random.default_rng(seed)
    h = 1e-5
    worst = 0.0
    for name, prof in all_profiles():
        ts = rng.uniform(0.05, 1.8, n_times)
        for t in ts:
            dnu = (prof.nu(t + h) - prof.nu(t - h)) / (2 * h)
            dxi = (prof.xi(t + h) - prof.xi(t - h)) / (2 * h)
            for got, want in ((dnu, prof.mu(t)), (dxi, prof.nu(t))):
                scale = max(abs(want), 1.0)
                worst = max(worst, abs(got - want) / scale)
    return [_result("forces.derivative_identities", worst, 1e-6,
                    "nu' = mu and xi' = nu by central differences")]


def check_chi_consistency():
    p = standard_params()
    prof = Sinusoidal(1.0, 1.0)
    a = prof.chi_phase(1.0, p, rtol=1e-9)
    b = prof.chi_phase(1.0, p, rtol=1e-11)
    rel = abs(a - b) / max(abs(b), 1e-300)
    return [_result("forces.chi_quadrature_consistency", rel, 1e-8,
                    "chi at rtol 1e-9 vs 1e-11")]


def check_hermite_recurrence(seed: int = 7):
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(1000):
        n = int(rng.integers(1, 16))
        x = float(rng.uniform(-5.0, 5.0))
        lhs = hermite_poly(n + 1, x) - 2.0 * x * hermite_poly(n, x) \
            + 2.0 * n * hermite_poly(n - 1, x)
        scale = max(abs(hermite_poly(n + 1, x)), 1.0)
        worst = max(worst, abs(lhs) / scale)
    return [_result("states.hermite_recurrence", worst, 1e-10)]


def check_state_norms(quick: bool = False):
    p = standard_params()
    n = 96 if quick else 128
    half = 6.0 * p.beam_waist
    half_z = 6.0 / math.sqrt(p.alpha)
    out = []
    worst = 0.0
    for spec in (HermiteGaussSpec(0, 0), HermiteGaussSpec(1, 1), HermiteGaussSpec(2, 3)):
        grid = Grid3(AxisSpec.symmetric(half * math.sqrt(2 * max(spec.n, spec.m_index) + 1), n),
                     AxisSpec.symmetric(half * math.sqrt(2 * max(spec.n, spec.m_index) + 1), n),
                     AxisSpec.symmetric(half_z, n))
        f = sample_field(p, spec, grid)
        worst = max(worst, abs(f.norm_hint - 1.0))
    out.append(_result("states.hg_norms", worst, 5e-4))
    grid = Grid3(AxisSpec.symmetric(8, n), AxisSpec.symmetric(8, n), AxisSpec.symmetric(half_z, n))
    f00 = sample_field(p, HermiteGaussSpec(0, 0), grid)
    f11 = sample_field(p, HermiteGaussSpec(1, 1), grid)
    ip = abs(np.sum(grid.weights3() * np.conj(f00.values) * f11.values))
    out.append(_result("states.hg_orthogonality", float(ip), 1e-6))
    return out


def check_pde_residuals(quick: bool = False):
    n = 20 if quick else 50
    p = standard_params()
    pb = magnetic_params()
    prof = Sinusoidal(16.0, p.tau)
    cases = [
        ("free_transverse", lambda **kw: pde_residual_free2d(p, n_points=n, **kw)),
        ("linear", lambda **kw: pde_residual_linear(p, prof, n_points=n, **kw)),
        ("magnetic", lambda **kw: pde_residual_magnetic(pb, 0.0, n_points=n, **kw)),
        ("magnetic_force", lambda **kw: pde_residual_magnetic(pb, 16.0, n_points=n, **kw)),
    ]
    out = []
    for name, fn in cases:
        res = fn()
        out.append(_result(f"kernels.pde_residual.{name}", float(res.max()), 1e-4,
                           f"{len(res)} interior points"))
        ratio = residual_refinement_ratio(fn)
        out.append(_result(f"kernels.pde_refinement.{name}", ratio, 3.0,
                           "median residual decay per halved step", larger_ok=True))
    return out


def check_reduction_chain():
    p = standard_params()
    rng = np.random.default_rng(21)
    out = []
    # linear(Zero) vs free 1D, same arguments: exact analytic cancellation
    worst = 0.0
    for _ in range(20):
        t = rng.uniform(0.05, 0.8)
        x, xp = rng.uniform(-3, 3, 2)
        a = complex(linear_longitudinal_kernel(p, Zero(), x, t, xp))
        b = complex(free_kernel_1d(p, x, t, xp))
        worst = max(worst, abs(a - b) / abs(b))
    out.append(_result("kernels.reduction.linear_zero_vs_free", worst, 1e-14))
    # magnetic at w = 1e-6 vs free 3D
    ptiny = PhysicalParams.natural(b_field=2e-6)  # larmor 1e-6
    worst = 0.0
    for _ in range(20):
        t = rng.uniform(0.1, 0.6)
        r = tuple(rng.uniform(-2, 2, 3))
        rp = tuple(rng.uniform(-2, 2, 3))
        a = complex(magnetic_kernel(ptiny, r, t, rp))
        free3 = (complex(free_kernel_1d(ptiny, r[0], t, rp[0]))
                 * complex(free_kernel_1d(ptiny, r[1], t, rp[1]))
                 * complex(free_kernel_1d(ptiny, r[2], t, rp[2])))
        worst = max(worst, abs(a - free3) / abs(free3))
    out.append(_result("kernels.reduction.magnetic_small_w_vs_free", worst, 1e-4))
    # forced magnetic at mu0 = 0 equals magnetic exactly
    pb = magnetic_params()
    worst = 0.0
    for _ in range(20):
        t = rng.uniform(0.1, 0.6)
        r = tuple(rng.uniform(-2, 2, 3))
        rp = tuple(rng.uniform(-2, 2, 3))
        a = complex(magnetic_force_kernel(pb, 0.0, r, t, rp))
        b = complex(magnetic_kernel(pb, r, t, rp))
        worst = max(worst, abs(a - b))
    out.append(_result("kernels.reduction.forced_mu0_zero_exact", worst, 0.0,
                       "bitwise identical code path"))
    return out


def check_trig_functionals(seed: int = 23):
    pb = magnetic_params()
    w = pb.larmor
    rng = np.random.default_rng(seed)
    worst = 0.0
    for t in rng.uniform(0.0, 3.0, 100):
        tf = trig_functionals(pb, t)
        ident = abs(tf.alpha) ** 2 + w**2 * abs(tf.beta) ** 2
        worst = max(worst, abs(ident - 1.0))
    return [_result("kernels.trig_identity", worst, 1e-12,
                    "|alpha|^2 + w^2 |beta|^2 = 1 at 100 random t")]


def _probe_composition(kernel_fn, t1: float, t2: float) -> float:
    """Relative L2 between one-shot and composed propagation of a Gaussian."""
    src = np.linspace(-6, 6, 1601)
    mid = np.linspace(-7, 7, 1801)
    dst = np.linspace(-4, 4, 301)
    w_s = np.full(src.size, src[1] - src[0]); w_s[0] *= 0.5; w_s[-1] *= 0.5
    w_m = np.full(mid.size, mid[1] - mid[0]); w_m[0] *= 0.5; w_m[-1] *= 0.5
    f0 = (2.0 / math.pi) ** 0.25 * np.exp(-src**2)
    f0_mid = (2.0 / math.pi) ** 0.25 * np.exp(-mid**2)
    one = kernel_fn(dst[:, None], t1 + t2, src[None, :]) @ (w_s * f0)
    inner = kernel_fn(mid[:, None], t1, src[None, :]) @ (w_s * f0)
    two = kernel_fn(dst[:, None], t2, mid[None, :]) @ (w_m * inner)
    return float(np.linalg.norm(one - two) / np.linalg.norm(one))


def check_semigroup():
    p = standard_params()
    t1, t2 = 0.15, 0.12  # both <= 0.3 tau
    rel_free = _probe_composition(lambda x, t, xp: free_kernel_1d(p, x, t, xp), t1, t2)
    prof = Constant(4.0)  # time-independent Hamiltonian, so composition applies
    rel_lin = _probe_composition(
        lambda x, t, xp: linear_longitudinal_kernel(p, prof, x, t, xp), t1, t2)
    return [
        _result("kernels.semigroup.free_1d", rel_free, 1e-6,
                "K(t1+t2) psi vs K(t2) K(t1) psi on a Gaussian probe"),
        _result("kernels.semigroup.linear_constant", rel_lin, 1e-6),
    ]


def check_delta_property(quick: bool = False):
    """Propagators approach a delta: conv with a broad Gaussian reproduces it."""
    pb = magnetic_params()
    rng = np.random.default_rng(3)
    t = 1e-3
    sig, half_w = 0.5, 1.8
    n = 1501 if quick else 3001
    n_pts = 2 if quick else 4
    zpref = np.sqrt(pb.mass / (2j * math.pi * pb.hbar * t))
    az = pb.mass / (2.0 * pb.hbar * t)
    err2 = ref2 = 0.0
    for (x, y, z) in rng.uniform(-0.3, 0.3, (n_pts, 3)):
        xs = np.linspace(x - half_w, x + half_w, n)
        ys = np.linspace(y - half_w, y + half_w, n)
        zs = np.linspace(z - half_w, z + half_w, n)
        wq = np.full(n, xs[1] - xs[0]); wq[0] *= 0.5; wq[-1] *= 0.5
        xg, yg = np.meshgrid(xs, ys, indexing="ij")
        trans = magnetic_force_kernel(pb, 16.0, (x, y, 0.0), t, (xg, yg, 0.0)) / zpref
        kz = zpref * np.exp(1j * az * (z - zs) ** 2)
        val_t = ((trans * np.exp(-(xg**2 + yg**2) / (2 * sig**2))) @ wq) @ wq
        val_z = np.sum(kz * wq * np.exp(-zs**2 / (2 * sig**2)))
        approx = val_t * val_z / (math.pi * sig**2) ** 0.75
        exact = math.exp(-(x**2 + y**2 + z**2) / (2 * sig**2)) / (math.pi * sig**2) ** 0.75
        err2 += abs(approx - exact) ** 2
        ref2 += exact**2
    rel = math.sqrt(err2 / ref2)
    return [_result("kernels.delta_property.magnetic_force", rel, 1e-2,
                    f"t = {t}, broad Gaussian probe")]


def check_oracle_equivalence(quick: bool = False):
    p = standard_params()
    tau = p.tau
    times = (0.25 * tau,) if quick else (0.25 * tau, 0.5 * tau)
    n = 64 if quick else 128
    steps = 128 if quick else 256
    kernels = scenario_kernels()
    if quick:
        kernels = [kernels[1], kernels[4]]
    out = []
    for name, ks in kernels:
        for t in times:
            rel, fc, fs = oracle_pair(ks, t, n_trans=n, steps=steps, n_z=n)
            out.append(_result(f"evolution.oracle_equivalence.{name}.t{t:g}", rel, 1e-3))
            out.append(_result(f"evolution.norm.conv.{name}.t{t:g}",
                               abs(fc.norm_hint - 1.0), 1e-3))
            out.append(_result(f"evolution.norm.split.{name}.t{t:g}",
                               abs(fs.norm_hint - 1.0), 1e-4))
    return out


def check_observables(quick: bool = False):
    p = standard_params()
    pb = magnetic_params()
    tau = p.tau
    spec = HermiteGaussSpec(1, 1)
    w0 = p.beam_waist
    n = 80 if quick else 112
    times = (0.3 * tau,) if quick else (0.25 * tau, 0.5 * tau, tau)
    out = []
    profiles = [("zero", Zero()), ("constant", Constant(16.0)),
                ("sinusoidal", Sinusoidal(16.0, tau))]
    if quick:
        profiles = profiles[:2]

    com_tensors = {}
    for name, prof in profiles:
        ks = KernelSpec.linear(p, prof)
        worst_traj = worst_dx = worst_dp = worst_lab = worst_com = 0.0
        worst_lx = worst_ly_op = 0.0
        ly_stated = 0.0
        for t in times:
            grid = suggest_grid(ks, spec, t, n, n)
            f = evolve_convolution(EvolutionRequest(spec, ks, t, grid)).normalize()
            obs = grid_observables(f, p)
            want = trajectory(p, prof, t)
            worst_traj = max(worst_traj, max(abs(a - b) for a, b in zip(obs.centroid, want)) / w0)
            dx, dp = uncertainties_hg11(p, prof, t)
            worst_dx = max(worst_dx, abs(obs.delta_x - dx) / dx)
            worst_dp = max(worst_dp, abs(obs.delta_p - dp) / dp)
            lab = inertia_lab(p, prof, t)
            com = inertia_com(p, t)
            scale = np.abs(lab).max()
            worst_lab = max(worst_lab, float(np.abs(obs.inertia_lab - lab).max()) / scale)
            worst_com = max(worst_com, float(np.abs(obs.inertia_com - com).max()) / scale)
            com_tensors.setdefault(t, {})[name] = com
            # OAM drift: operator-derived form (xi - t nu) and the stated
            # (xi + t nu) form, both against the same grid value
            hk = p.hbar * p.k0 / p.mass
            ly_grid = obs.oam[1]
            ly_op = oam_expectation(p, prof, t)[1]
            ly_alt = hk * (prof.xi(t) + t * prof.nu(t))
            ly_scale = max(abs(ly_op), abs(ly_alt), 1e-9)
            worst_ly_op = max(worst_ly_op, abs(ly_grid - ly_op) / ly_scale)
            ly_stated = max(ly_stated, abs(ly_grid - ly_alt) / ly_scale)
            worst_lx = max(worst_lx, abs(obs.oam[0]) / p.hbar)
        out.append(_result(f"observables.trajectory.{name}", worst_traj, 1e-3,
                           "centroid vs -xi/m in units of w0"))
        out.append(_result(f"observables.delta_x.{name}", worst_dx, 1e-3))
        out.append(_result(f"observables.delta_p.{name}", worst_dp, 1e-3,
                           "force- and time-independent sqrt(3) hbar / w0"))
        out.append(_result(f"observables.inertia_lab.{name}", worst_lab, 1e-3))
        out.append(_result(f"observables.inertia_com.{name}", worst_com, 1e-3))
        out.append(_result(f"observables.oam_lx_conserved.{name}", worst_lx, 1e-6))
        out.append(_result(f"observables.oam_ly_operator_form.{name}", worst_ly_op, 1e-3,
                           "(hbar k0/m)(xi - t nu) vs grid"))
        if name != "zero":
            out.append(_result(f"observables.oam_ly_drift_form_xi_plus_tnu.{name}",
                               ly_stated, 1e-3,
                               "expected fail: the + relative sign is inconsistent "
                               "with the operator solutions (docs/physics_notes.md)"))
    # COM tensor independent of the profile
    worst = 0.0
    for t, tensors in com_tensors.items():
        vals = list(tensors.values())
        for v in vals[1:]:
            worst = max(worst, float(np.abs(v - vals[0]).max()))
    out.append(_result("observables.inertia_com_profile_independent", worst, 1e-12))
    # parallel-axis consistency of the closed forms
    worst = 0.0
    for t in times:
        for _, prof in profiles:
            lab = inertia_lab(p, prof, t)
            com = inertia_com(p, t)
            r = np.array(trajectory(p, prof, t))
            shift = p.mass * (np.dot(r, r) * np.eye(3) - np.outer(r, r))
            scale = np.abs(lab).max()
            worst = max(worst, float(np.abs(lab - (com + shift)).max()) / scale)
    out.append(_result("observables.parallel_axis", worst, 1e-10))

    # LG orbital angular momentum
    lg = LaguerreGaussSpec(l=2, p=0, w0=1.0, z_r=10.0)
    grid = Grid3(AxisSpec.symmetric(6, n), AxisSpec.symmetric(6, n), AxisSpec.symmetric(1.0, 9))
    f = sample_field(p, lg, grid).normalize()
    lz = grid_observables(f, p).oam[2]
    out.append(_result("observables.lg_l2_oam", abs(lz - 2.0 * p.hbar) / (2.0 * p.hbar), 1e-3))

    # magnetic trajectory + rotation rate
    ks = KernelSpec.magnetic_with_force(pb, 16.0)
    t = 0.4 * tau
    grid = suggest_grid(ks, spec, t, n, n)
    f = evolve_split_step(EvolutionRequest(spec, ks, t, grid, SplitStepOracle(256))).normalize()
    obs = grid_observables(f, pb)
    want = magnetic_trajectory(pb, 16.0, t)
    err = max(abs(a - b) for a, b in zip(obs.centroid, want)) / w0
    out.append(_result("observables.magnetic_trajectory", err, 1e-3,
                       "split-step centroid vs bounded-drift closed form"))

    ksm = KernelSpec.magnetic(pb)
    grid = suggest_grid(ksm, spec, t, n, 64)
    f2 = evolve_convolution(EvolutionRequest(spec, ksm, t, grid))
    ang = lobe_orientation(f2)
    want_ang = math.pi / 4.0 - pb.larmor * t
    out.append(_result("observables.magnetic_rotation_rate",
                       abs(_wrap_quarter(ang - want_ang)), 1e-2,
                       "four-lobe orientation advances at the Larmor rate"))
    return out


def _wrap_quarter(angle: float) -> float:
    """Wrap an angle difference into (-pi/4, pi/4] (four-lobe symmetry)."""
    half = math.pi / 2.0
    return (angle + half / 2.0) % half - half / 2.0


def check_closed_form_state(quick: bool = False):
    p = standard_params()
    tau = p.tau
    spec = HermiteGaussSpec(1, 1)
    prof = Constant(16.0)
    ks = KernelSpec.linear(p, prof)
    t = 0.5 * tau
    n = 96 if quick else 128
    grid = suggest_grid(ks, spec, t, n, 64)
    fc = evolve_convolution(EvolutionRequest(spec, ks, t, grid))
    sl = density_slice(fc, "z", 0.0)
    xs, ys = grid.x.points(), grid.y.points()
    wx, wy = grid.x.weights(), grid.y.weights()
    xg, yg = np.meshgrid(xs, ys, indexing="ij")
    out = []
    report = {}
    for verbatim in (False, True):
        amp = closed_form_linear_state(p, prof, spec, (xg, yg, np.zeros_like(xg)),
                                       t, verbatim=verbatim)
        d = np.abs(amp) ** 2
        d /= wx @ d @ wy
        c = sl.values / (wx @ sl.values @ wy)
        rel = float(np.linalg.norm(d - c) / np.linalg.norm(c))
        xc = float(wx @ (d * xg) @ wy)
        var = float(wx @ (d * (xg - xc) ** 2) @ wy)
        key = "verbatim" if verbatim else "corrected"
        report[key] = {"pointwise_rel_l2": rel, "centroid_x": xc,
                       "delta_x": math.sqrt(var)}
    xc_conv = float(wx @ ((sl.values / (wx @ sl.values @ wy)) * xg) @ wy)
    dx_want = uncertainties_hg11(p, prof, t)[0]
    got = report["corrected"]
    out.append(_result("evolution.closed_form_state.centroid",
                       abs(got["centroid_x"] - xc_conv) / p.beam_waist, 1e-3,
                       f"report: {json.dumps(report)}"))
    out.append(_result("evolution.closed_form_state.delta_x",
                       abs(got["delta_x"] - dx_want) / dx_want, 1e-2))
    # pointwise discrepancies reported, not asserted
    out.append(CheckResult("evolution.closed_form_state.pointwise_report", True,
                           report["verbatim"]["pointwise_rel_l2"], float("inf"),
                           "verbatim-form discrepancy recorded, not asserted; "
                           f"corrected form rel L2 = {got['pointwise_rel_l2']:.3e}"))
    return out


def run_validation(quick: bool = False):
    """The full invariant suite; returns every CheckResult."""
    checks = []
    checks += check_force_identities()
    checks += check_force_derivatives()
    checks += check_chi_consistency()
    checks += check_hermite_recurrence()
    checks += check_state_norms(quick)
    checks += check_trig_functionals()
    checks += check_reduction_chain()
    checks += check_pde_residuals(quick)
    checks += check_semigroup()
    if not quick:
        checks += check_delta_property()
    checks += check_oracle_equivalence(quick)
    checks += check_observables(quick)
    checks += check_closed_form_state(quick)
    return checks
