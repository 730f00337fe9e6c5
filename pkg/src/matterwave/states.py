"""Initial wave functions: Hermite-Gauss and Laguerre-Gauss packets.

The Hermite-Gauss packet launched along +z is

    psi(x, y, z; 0) = (alpha/pi)^(1/4) * sqrt(2 / (pi w0^2 2^(n+m) n! m!))
                      * exp(-(x^2+y^2)/w0^2) * exp(-alpha z^2/2 + i k0 z)
                      * H_n(sqrt(2) x / w0) * H_m(sqrt(2) y / w0),

normalized to unit L2 norm.  The y-mode index is called m_index throughout to
avoid colliding with the particle mass.  The Laguerre-Gauss mode carries a
helical phase exp(i l phi) and hence orbital angular momentum l*hbar per
particle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .grids import ComplexField, Grid3
from .params import PhysicalParams

#: upward recurrences stay well-conditioned for the mode orders in scope
MAX_POLY_ORDER = 64


@dataclass(frozen=True)
class HermiteGaussSpec:
    n: int = 0
    m_index: int = 0

    def __post_init__(self):
        if self.n < 0 or self.m_index < 0:
            raise ValueError("mode indices must be non-negative")


@dataclass(frozen=True)
class LaguerreGaussSpec:
    l: int = 0
    p: int = 0
    w0: float = 1.0
    z_r: float = 10.0
    longitudinal_phase: bool = False  # optional exp(i k0 z) factor, default off

    def __post_init__(self):
        if self.p < 0:
            raise ValueError("radial index p must be non-negative")
        if self.w0 <= 0 or self.z_r <= 0:
            raise ValueError("w0 and z_r must be positive")


def hermite_poly(n: int, x):
    """Physicists' Hermite polynomial via H_{k+1} = 2x H_k - 2k H_{k-1}."""
    if n < 0:
        raise ValueError("order must be non-negative")
    if n > MAX_POLY_ORDER:
        raise ValueError(f"order {n} exceeds supported maximum {MAX_POLY_ORDER}")
    x = np.asarray(x, dtype=float)
    h_prev = np.ones_like(x)
    if n == 0:
        return h_prev if h_prev.ndim else float(h_prev)
    h = 2.0 * x
    for k in range(1, n):
        h, h_prev = 2.0 * x * h - 2.0 * k * h_prev, h
    return h if h.ndim else float(h)


def genlaguerre_poly(p: int, a: float, x):
    """Generalized Laguerre L^a_p via the three-term recurrence."""
    if p < 0:
        raise ValueError("order must be non-negative")
    if p > MAX_POLY_ORDER:
        raise ValueError(f"order {p} exceeds supported maximum {MAX_POLY_ORDER}")
    x = np.asarray(x, dtype=float)
    l_prev = np.ones_like(x)
    if p == 0:
        return l_prev if l_prev.ndim else float(l_prev)
    l = 1.0 + a - x
    for k in range(1, p):
        l, l_prev = ((2 * k + 1 + a - x) * l - (k + a) * l_prev) / (k + 1), l
    return l if l.ndim else float(l)


# -- Hermite-Gauss -----------------------------------------------------------------


def hg_prefactor(params: PhysicalParams, spec: HermiteGaussSpec) -> float:
    w0 = params.beam_waist
    norm = math.sqrt(2.0 / (math.pi * w0**2 * 2.0**(spec.n + spec.m_index)
                            * math.factorial(spec.n) * math.factorial(spec.m_index)))
    return (params.alpha / math.pi) ** 0.25 * norm


def hg_transverse_factor(params: PhysicalParams, order: int, u):
    """H_order(sqrt(2) u / w0) * exp(-u^2 / w0^2); prefactor applied separately."""
    u = np.asarray(u, dtype=float)
    w0 = params.beam_waist
    return hermite_poly(order, math.sqrt(2.0) / w0 * u) * np.exp(-(u / w0) ** 2)


def hg_longitudinal_factor(params: PhysicalParams, z):
    z = np.asarray(z, dtype=float)
    return np.exp(-0.5 * params.alpha * z**2 + 1j * params.k0 * z)


def hermite_gauss_initial(params: PhysicalParams, spec: HermiteGaussSpec, point):
    """Amplitude at point = (x, y, z); accepts scalars or broadcastable arrays."""
    x, y, z = point
    amp = (hg_prefactor(params, spec)
           * hg_transverse_factor(params, spec.n, x)
           * hg_transverse_factor(params, spec.m_index, y)
           * hg_longitudinal_factor(params, z))
    return amp


# -- Laguerre-Gauss -----------------------------------------------------------------


def laguerre_gauss_initial(params: PhysicalParams, spec: LaguerreGaussSpec, point):
    """Helical-phase mode with beam radius w(z) = w0 sqrt(1 + (z/z_r)^2).

    Radial parts use |l|; the phase carries the signed l.  Each transverse
    plane is unit-normalized; there is no longitudinal envelope, so 3D
    samplings should be normalized explicitly before computing observables.
    """
    x, y, z = (np.asarray(c, dtype=float) for c in point)
    la = abs(spec.l)
    rho2 = x**2 + y**2
    phi = np.arctan2(y, x)
    w = spec.w0 * np.sqrt(1.0 + (z / spec.z_r) ** 2)
    norm = np.sqrt(2.0 * math.factorial(spec.p)
                   / (math.pi * w**2 * math.factorial(spec.p + la)))
    arg = 2.0 * rho2 / w**2
    radial = (np.sqrt(arg)) ** la * np.exp(-rho2 / w**2) * genlaguerre_poly(spec.p, la, arg)
    gouy = np.exp(-1j * (2 * spec.p + la + 1) * np.arctan2(z, spec.z_r))
    curvature = np.exp(1j * params.k0 * rho2 * z / (2.0 * (z**2 + spec.z_r**2)))
    amp = norm * radial * np.exp(1j * spec.l * phi) * gouy * curvature
    if spec.longitudinal_phase:
        amp = amp * np.exp(1j * params.k0 * z)
    return amp


# -- grid sampling -----------------------------------------------------------------


def sample_field(params: PhysicalParams, spec, grid: Grid3) -> ComplexField:
    """Evaluate the chosen initial state at every grid node.

    Hermite-Gauss sampling is the outer product of 1D factors (the state is
    separable); Laguerre-Gauss is evaluated on the full 3D mesh.
    """
    xs, ys, zs = grid.axes()
    if isinstance(spec, HermiteGaussSpec):
        fx = hg_transverse_factor(params, spec.n, xs)
        fy = hg_transverse_factor(params, spec.m_index, ys)
        fz = hg_longitudinal_factor(params, zs)
        values = hg_prefactor(params, spec) * (
            fx[:, None, None] * fy[None, :, None] * fz[None, None, :])
    elif isinstance(spec, LaguerreGaussSpec):
        mesh = np.meshgrid(xs, ys, zs, indexing="ij")
        values = laguerre_gauss_initial(params, spec, mesh)
    else:
        raise TypeError(f"unsupported state spec {type(spec).__name__}")
    return ComplexField(grid, values).with_norm_hint()


def transverse_sigma(params: PhysicalParams, spec) -> float:
    """Worst-axis standard deviation of |psi|^2 at t = 0."""
    if isinstance(spec, HermiteGaussSpec):
        n = max(spec.n, spec.m_index)
        return params.beam_waist * math.sqrt(2 * n + 1) / 2.0
    # LG radial extent grows like w0 sqrt(2p + |l| + 1) / sqrt(2)
    return spec.w0 * math.sqrt(2 * spec.p + abs(spec.l) + 1) / math.sqrt(2.0)


def longitudinal_sigma(params: PhysicalParams) -> float:
    """Standard deviation of the longitudinal density exp(-alpha z^2)."""
    return 1.0 / math.sqrt(2.0 * params.alpha)
