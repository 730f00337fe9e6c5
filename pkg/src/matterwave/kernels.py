"""Closed-form propagator kernels.

Four kernels, each the exact Green's function of its time-dependent
Schrodinger equation:

* free transverse 2D:    i hbar dK/dt = -(hbar^2/2m)(d^2_y + d^2_z) K
* linear longitudinal:   i hbar dK/dt = [-(hbar^2/2m) d^2_x + mu(t) x] K
* magnetic 3D:           symmetric-gauge uniform field along z, w = qB/2m
* magnetic 3D + constant force mu0 along x

The magnetic transverse exponent carries cot(w t) on BOTH squared
differences; with cot on one term only the kernel fails its own equation, and
the finite-difference residual check in the validation suite is the arbiter.

The forced magnetic kernel multiplies the magnetic one by three phase factors
exp[(i/hbar)(a(t)(x + x') + c(t)(y - y') + g(t))].  Requiring the product to
satisfy the forced equation yields first-order ODEs for the coefficients with
the closed-form solution

    a(t) = -mu0 t / 2
    c(t) = +(mu0/2) (1/w - t cot(w t))
    g(t) = -(mu0^2 t / 8 m w^2) (1 - w t cot(w t)),

whose w -> 0 limits reproduce the linear kernel (g -> -mu0^2 t^3 / 24 m, the
constant-force chi phase).  Derivations live in docs/physics_notes.md.

Kernels are distributions at t -> 0 and at transverse refocusing times
w t = k pi; evaluation inside the guard bands raises instead of returning
meaningless numbers.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import FocalSingularityError, SingularTimeError
from .forces import ForceProfile, Zero
from .params import PhysicalParams

#: kernels are evaluated only for t > T_MIN_FRACTION * params.tau
T_MIN_FRACTION = 1e-6
#: |sin(w t)| at or below this is treated as a focal singularity
EPS_FOCAL = 1e-6


class KernelKind(enum.Enum):
    FREE_TRANSVERSE_2D = "free_transverse_2d"
    LINEAR_LONGITUDINAL_1D = "linear_longitudinal_1d"
    MAGNETIC_3D = "magnetic_3d"
    MAGNETIC_WITH_FORCE_3D = "magnetic_with_force_3d"


@dataclass(frozen=True)
class KernelSpec:
    """Which closed-form propagator applies, plus its parameters."""

    kind: KernelKind
    params: PhysicalParams
    profile: ForceProfile | None = None
    mu0: float = 0.0

    def __post_init__(self):
        magnetic = self.kind in (KernelKind.MAGNETIC_3D, KernelKind.MAGNETIC_WITH_FORCE_3D)
        if magnetic and self.params.larmor == 0.0:
            raise ValueError("magnetic kernels need charge != 0 and b_field != 0")
        if self.kind is KernelKind.LINEAR_LONGITUDINAL_1D and self.profile is None:
            object.__setattr__(self, "profile", Zero())

    @classmethod
    def free_transverse(cls, params):
        return cls(KernelKind.FREE_TRANSVERSE_2D, params)

    @classmethod
    def linear(cls, params, profile):
        return cls(KernelKind.LINEAR_LONGITUDINAL_1D, params, profile=profile)

    @classmethod
    def magnetic(cls, params):
        return cls(KernelKind.MAGNETIC_3D, params)

    @classmethod
    def magnetic_with_force(cls, params, mu0):
        return cls(KernelKind.MAGNETIC_WITH_FORCE_3D, params, mu0=mu0)


@dataclass(frozen=True)
class TrigFunctionals:
    """alpha(t) = cos(wt) e^{-iwt}, beta(t) = sin(wt) e^{-iwt} / w and their
    integrals eta = int alpha, xi_mag = int beta; |alpha|^2 + w^2 |beta|^2 = 1."""

    alpha_r: float
    alpha_i: float
    beta_r: float
    beta_i: float
    eta: complex
    xi_mag: complex

    @property
    def alpha(self) -> complex:
        return complex(self.alpha_r, self.alpha_i)

    @property
    def beta(self) -> complex:
        return complex(self.beta_r, self.beta_i)


def trig_functionals(params: PhysicalParams, t: float) -> TrigFunctionals:
    w = params.larmor
    if w == 0.0:
        raise ValueError("trig functionals are defined for w != 0; use the B = 0 path")
    t = float(t)
    s, c = math.sin(w * t), math.cos(w * t)
    s2, c2 = math.sin(2.0 * w * t), math.cos(2.0 * w * t)
    eta = complex(0.5 * t + s2 / (4.0 * w), (c2 - 1.0) / (4.0 * w))
    xi_mag = complex((1.0 - c2) / (4.0 * w * w), -(2.0 * w * t - s2) / (4.0 * w * w))
    return TrigFunctionals(
        alpha_r=c * c,
        alpha_i=-s * c,
        beta_r=s * c / w,
        beta_i=-s * s / w,
        eta=eta,
        xi_mag=xi_mag,
    )


def _check_t(params: PhysicalParams, t: float) -> float:
    t = float(t)
    if t <= T_MIN_FRACTION * params.tau:
        raise SingularTimeError(
            f"t={t} is inside the singular-time guard ({T_MIN_FRACTION} * tau)")
    return t


def _check_focal(params: PhysicalParams, t: float) -> float:
    w = params.larmor
    s = math.sin(w * t)
    if abs(s) <= EPS_FOCAL:
        raise FocalSingularityError(
            f"sin(w t) = {s:.2e} at w t = {w * t}: transverse refocusing time")
    return s


def free_kernel_1d(params: PhysicalParams, u, t: float, up):
    """sqrt(m / 2 pi i hbar t) exp(i m (u - u')^2 / 2 hbar t)."""
    t = _check_t(params, t)
    m, hbar = params.mass, params.hbar
    u = np.asarray(u, dtype=float)
    up = np.asarray(up, dtype=float)
    a = m / (2.0 * hbar * t)
    pref = np.sqrt(m / (2j * math.pi * hbar * t))
    return pref * np.exp(1j * a * (u - up) ** 2)


def free_transverse_kernel(params: PhysicalParams, y, z, t: float, yp, zp):
    """2D free propagator for the (y, z) plane."""
    t = _check_t(params, t)
    m, hbar = params.mass, params.hbar
    y, z, yp, zp = (np.asarray(c, dtype=float) for c in (y, z, yp, zp))
    a = m / (2.0 * hbar * t)
    pref = m / (2j * math.pi * hbar * t)
    return pref * np.exp(1j * a * ((y - yp) ** 2 + (z - zp) ** 2))


def linear_longitudinal_kernel(params: PhysicalParams, profile: ForceProfile,
                               x, t: float, xp):
    """1D propagator for p^2/2m + mu(t) x.

    Phase = (m/2 hbar t)[(x-x')^2 - (2 v/m)(x-x') - (2 t nu / m) x'] - chi(t);
    with the Zero profile every force term is exactly 0.0 and the expression
    reduces bitwise to the free 1D kernel.
    """
    t = _check_t(params, t)
    m, hbar = params.mass, params.hbar
    x = np.asarray(x, dtype=float)
    xp = np.asarray(xp, dtype=float)
    nu_t = profile.nu(t)
    v_t = profile.v_moment(t)
    chi_t = profile.chi_phase(t, params)
    a = m / (2.0 * hbar * t)
    d = x - xp
    phase = a * (d * d - (2.0 * v_t / m) * d - (2.0 * t * nu_t / m) * xp) - chi_t
    pref = np.sqrt(m / (2j * math.pi * hbar * t))
    return pref * np.exp(1j * phase)


def magnetic_transverse_factors(params: PhysicalParams, t: float):
    """(prefactor, A, B) with K_perp = pref * exp(i A [(x-x')^2 + (y-y')^2])
    * exp(-i B (x y' - x' y)); shared by the kernel and the convolution path."""
    t = _check_t(params, t)
    s = _check_focal(params, t)
    m, hbar, w = params.mass, params.hbar, params.larmor
    pref = (m / (2j * math.pi * hbar)) * w / s
    a_coef = m * w * (math.cos(w * t) / s) / (2.0 * hbar)
    b_coef = m * w / hbar
    return pref, a_coef, b_coef


def force_phase_coefficients(params: PhysicalParams, mu0: float, t: float):
    """(a, c, g) phase coefficients of the forced magnetic kernel; see module
    docstring.  All three vanish identically at mu0 = 0."""
    t = _check_t(params, t)
    _check_focal(params, t)
    m, w = params.mass, params.larmor
    wt = w * t
    cot = math.cos(wt) / math.sin(wt)
    a = -0.5 * mu0 * t
    c = 0.5 * mu0 * (1.0 / w - t * cot)
    g = -(mu0**2 * t / (8.0 * m * w * w)) * (1.0 - wt * cot)
    return a, c, g


def magnetic_kernel(params: PhysicalParams, r, t: float, rp):
    """Symmetric-gauge propagator for a uniform field along z.

    K = (m/2 pi i hbar)^{3/2} (w / sin(wt) sqrt(t)) exp(i m (z-z')^2 / 2 hbar t)
        * exp(-i m w (x y' - x' y)/hbar)
        * exp(i m w cot(wt) [(x-x')^2 + (y-y')^2] / 2 hbar)
    """
    x, y, z = (np.asarray(c, dtype=float) for c in r)
    xp, yp, zp = (np.asarray(c, dtype=float) for c in rp)
    t = _check_t(params, t)
    m, hbar = params.mass, params.hbar
    pref_t, a_coef, b_coef = magnetic_transverse_factors(params, t)
    az = m / (2.0 * hbar * t)
    pref_z = np.sqrt(m / (2j * math.pi * hbar * t))
    phase = (a_coef * ((x - xp) ** 2 + (y - yp) ** 2)
             - b_coef * (x * yp - xp * y)
             + az * (z - zp) ** 2)
    return pref_t * pref_z * np.exp(1j * phase)


def magnetic_force_kernel(params: PhysicalParams, mu0: float, r, t: float, rp):
    """Magnetic kernel times the force phases exp[(i/hbar)(a(x+x') + c(y-y') + g)]."""
    x, y, z = (np.asarray(c, dtype=float) for c in r)
    xp, yp, zp = (np.asarray(c, dtype=float) for c in rp)
    base = magnetic_kernel(params, (x, y, z), t, (xp, yp, zp))
    if mu0 == 0.0:
        return base
    a, c, g = force_phase_coefficients(params, mu0, t)
    hbar = params.hbar
    return base * np.exp(1j * (a * (x + xp) + c * (y - yp) + g) / hbar)
