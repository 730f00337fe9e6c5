"""Closed-form Heisenberg-picture observables and their grid-quadrature twins.

The closed forms below follow from the operator solutions of the equations of
motion in the initial two-node state (n = m_index = 1) launched from the
origin with momentum hbar k0 along z:

    <x(t)>   = -xi(t)/m,   <y> = 0,   <z(t)> = hbar k0 t / m
    Dx(t)    = sqrt(3 w0^2/4 + 3 hbar^2 t^2 / m^2 w0^2)      (force-independent)
    Dp       = sqrt(3) hbar / w0                              (time-independent)
    <l_y(t)> = (hbar k0/m) xi(t) - (hbar k0 t/m) nu(t) = -(hbar k0/m) v(t)

The l_y drift follows from <z(t) p_x(t) - x(t) p_z(t)> and equivalently from
integrating the torque -mu(t) <z(t)>; see docs/physics_notes.md for why the
relative sign between the xi and t*nu terms is forced.

``grid_observables`` recomputes everything from a sampled field: position
moments by trapezoid quadrature, momentum moments spectrally, and OAM via
spectral derivatives, providing the independent oracle for every closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .forces import ForceProfile
from .grids import ComplexField
from .params import PhysicalParams


@dataclass(frozen=True)
class ObservableReport:
    """Trajectory, uncertainties, OAM vector and inertia tensors at one time."""

    t: float
    centroid: tuple
    delta_x: float
    delta_p: float
    oam: tuple
    inertia_lab: np.ndarray
    inertia_com: np.ndarray

    def __post_init__(self):
        for name in ("inertia_lab", "inertia_com"):
            m = np.asarray(getattr(self, name), dtype=float)
            if m.shape != (3, 3):
                raise ValueError(f"{name} must be 3x3")
            m.flags.writeable = False
            object.__setattr__(self, name, m)

    CSV_HEADER = ("t,x,y,z,delta_x,delta_p,lx,ly,lz,"
                  "I_xx,I_yy,I_zz,I_xy,I_xz,I_yz,"
                  "Ic_xx,Ic_yy,Ic_zz,Ic_xy,Ic_xz,Ic_yz")

    def csv_row(self) -> str:
        il, ic = self.inertia_lab, self.inertia_com
        vals = (self.t, *self.centroid, self.delta_x, self.delta_p, *self.oam,
                il[0, 0], il[1, 1], il[2, 2], il[0, 1], il[0, 2], il[1, 2],
                ic[0, 0], ic[1, 1], ic[2, 2], ic[0, 1], ic[0, 2], ic[1, 2])
        return ",".join(f"{v:.17g}" for v in vals)


def write_report_csv(path, reports) -> None:
    """One row per requested time; see ObservableReport.CSV_HEADER."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(ObservableReport.CSV_HEADER + "\n")
        for r in reports:
            fh.write(r.csv_row() + "\n")


# -- closed forms --------------------------------------------------------------------


def trajectory(params: PhysicalParams, profile: ForceProfile, t: float) -> tuple:
    """Packet centroid (-xi/m, 0, hbar k0 t / m); positive mu deflects to -x."""
    if t < 0.0:
        raise DomainError("t must be non-negative")
    m = params.mass
    return (-profile.xi(t) / m, 0.0, params.hbar * params.k0 * t / m)


def uncertainties_hg11(params: PhysicalParams, profile: ForceProfile, t: float) -> tuple:
    """(Dx, Dp) of the two-node state; Dp is the x-component and is both
    time- and force-independent (the nu(t) shifts cancel in the variance)."""
    m, hbar, w0 = params.mass, params.hbar, params.beam_waist
    dx = math.sqrt(0.75 * w0**2 + 3.0 * hbar**2 * t**2 / (m**2 * w0**2))
    dp = math.sqrt(3.0) * hbar / w0
    return dx, dp


def oam_expectation(params: PhysicalParams, profile: ForceProfile, t: float) -> tuple:
    """OAM drift (0, (hbar k0/m)(xi(t) - t nu(t)), 0) = (0, -(hbar k0/m) v(t), 0).

    l_x is a constant of motion (zero in this state) and <l_z> stays zero.
    """
    hk = params.hbar * params.k0 / params.mass
    return (0.0, hk * (profile.xi(t) - t * profile.nu(t)), 0.0)


def _rho(params: PhysicalParams, t: float) -> float:
    """Shared diagonal entry m(<y^2> + <z^2>_lab) of the lab inertia tensor."""
    m, hbar, w0, alpha, k0 = (params.mass, params.hbar, params.beam_waist,
                              params.alpha, params.k0)
    return ((3.0 * m**2 * w0**4 + 12.0 * hbar**2 * t**2) / (4.0 * m * w0**2)
            + (m**2 + 2.0 * alpha * hbar**2 * t**2 * (k0**2 + 0.5 * alpha))
            / (2.0 * m * alpha))


def inertia_lab(params: PhysicalParams, profile: ForceProfile, t: float) -> np.ndarray:
    """Lab-frame inertia tensor of the two-node density about the origin."""
    m, hbar, w0, k0 = params.mass, params.hbar, params.beam_waist, params.k0
    xi_t = profile.xi(t)
    rho = _rho(params, t)
    i_zz = (3.0 * m**2 * w0**4 + 12.0 * hbar**2 * t**2) / (2.0 * m * w0**2) + xi_t**2 / m
    off = hbar * k0 * t * xi_t / m
    return np.array([
        [rho, 0.0, off],
        [0.0, rho + xi_t**2 / m, 0.0],
        [off, 0.0, i_zz],
    ])


def inertia_com(params: PhysicalParams, t: float) -> np.ndarray:
    """Center-of-mass inertia tensor; diagonal, I_xx = I_yy, force-independent."""
    m, hbar, w0, alpha = params.mass, params.hbar, params.beam_waist, params.alpha
    i_xx = (0.75 * m * w0**2 + 3.0 * hbar**2 * t**2 / (m * w0**2)
            + 0.5 * m / alpha + 0.5 * hbar**2 * t**2 * alpha / m)
    i_zz = 1.5 * m * w0**2 + 6.0 * hbar**2 * t**2 / (m * w0**2)
    return np.diag([i_xx, i_xx, i_zz])


def magnetic_trajectory(params: PhysicalParams, mu0: float, t: float) -> tuple:
    """Centroid under a uniform field along z plus a constant force along x.

    x(t) = -mu0 sin^2(w t) / 2 m w^2 stays bounded (|x| <= mu0 / 2 m w^2);
    y(t) = +mu0 (2 w t - sin 2 w t) / 4 m w^2 is the transverse drift whose
    mean velocity mu0 / 2 m w equals the classical F x B drift; the sign is
    fixed by the operator solutions and the split-step oracle
    (docs/physics_notes.md).
    """
    w = params.larmor
    if w == 0.0:
        raise DomainError("magnetic trajectory needs w != 0; use trajectory() for B = 0")
    m = params.mass
    x = -mu0 * math.sin(w * t) ** 2 / (2.0 * m * w * w)
    y = mu0 * (2.0 * w * t - math.sin(2.0 * w * t)) / (4.0 * m * w * w)
    z = params.hbar * params.k0 * t / m
    return (x, y, z)


def closed_form_report(params: PhysicalParams, profile: ForceProfile,
                       t: float) -> ObservableReport:
    dx, dp = uncertainties_hg11(params, profile, t)
    return ObservableReport(
        t=t,
        centroid=trajectory(params, profile, t),
        delta_x=dx,
        delta_p=dp,
        oam=oam_expectation(params, profile, t),
        inertia_lab=inertia_lab(params, profile, t),
        inertia_com=inertia_com(params, t),
    )


# -- grid quadrature oracle -----------------------------------------------------------


def _momentum_fields(field: ComplexField):
    """(p_a psi) / hbar for a = x, y, z: p psi = -i hbar grad psi = hbar F^-1[k F psi]."""
    g = field.grid
    kvecs = [2.0 * math.pi * np.fft.fftfreq(ax.count, ax.spacing)
             for ax in (g.x, g.y, g.z)]
    ft = np.fft.fftn(field.values)
    shapes = [(-1, 1, 1), (1, -1, 1), (1, 1, -1)]
    for a in range(3):
        yield np.fft.ifftn(ft * kvecs[a].reshape(shapes[a]))


def grid_observables(field: ComplexField, params: PhysicalParams) -> ObservableReport:
    """Quadrature counterpart of every closed form above.

    Position moments use trapezoid weights; momentum moments come from the
    discrete Fourier transform (spectrally accurate for Gaussian-decay
    fields); OAM uses <r x p> with spectral derivatives.
    """
    if not np.isfinite(field.norm_hint) or abs(field.norm_hint - 1.0) > 1e-3:
        raise DomainError(
            f"grid_observables needs a normalized field (norm_hint={field.norm_hint})")
    g = field.grid
    xs, ys, zs = g.axes()
    w3 = g.weights3()
    dens = w3 * np.abs(field.values) ** 2
    total = float(dens.sum())
    mesh = (xs[:, None, None], ys[None, :, None], zs[None, None, :])

    first = [float((dens * c).sum()) / total for c in mesh]
    second = np.empty((3, 3))
    for i in range(3):
        for j in range(i, 3):
            second[i, j] = second[j, i] = float((dens * mesh[i] * mesh[j]).sum()) / total
    var_x = second[0, 0] - first[0] ** 2
    delta_x = math.sqrt(max(var_x, 0.0))

    # spectral momentum moments (x-component width)
    ft = np.fft.fftn(field.values)
    spec_dens = np.abs(ft) ** 2
    spec_total = float(spec_dens.sum())
    kx = 2.0 * math.pi * np.fft.fftfreq(g.x.count, g.x.spacing)
    px_mean = params.hbar * float((spec_dens * kx[:, None, None]).sum()) / spec_total
    px2_mean = params.hbar**2 * float((spec_dens * (kx**2)[:, None, None]).sum()) / spec_total
    delta_p = math.sqrt(max(px2_mean - px_mean**2, 0.0))

    # OAM via spectral derivatives, quadrature-weighted
    conj_w = np.conj(field.values) * w3
    p_psi = [params.hbar * arr for arr in _momentum_fields(field)]
    ell = []
    for (a, b) in ((1, 2), (2, 0), (0, 1)):
        val = (conj_w * (mesh[a] * p_psi[b] - mesh[b] * p_psi[a])).sum()
        ell.append(float(val.real) / total)

    m = params.mass
    r2 = second[0, 0] + second[1, 1] + second[2, 2]
    lab = m * (r2 * np.eye(3) - second)
    centered = second - np.outer(first, first)
    rc2 = centered[0, 0] + centered[1, 1] + centered[2, 2]
    com = m * (rc2 * np.eye(3) - centered)

    return ObservableReport(
        t=float("nan"),
        centroid=tuple(first),
        delta_x=delta_x,
        delta_p=delta_p,
        oam=tuple(ell),
        inertia_lab=lab,
        inertia_com=com,
    )


def lobe_orientation(field: ComplexField, about_centroid: bool = True) -> float:
    """Orientation angle of a four-lobe transverse pattern, in (-pi/4, pi/4].

    The transverse second-moment tensor of the two-node mode is isotropic for
    all times, so principal axes cannot track its rotation; the fourth angular
    moment <(x + i y)^4> is the lowest moment that can, and arg/4 of it equals
    the lobe angle (pi/4 at t = 0, decreasing at the Larmor rate under a +z
    field).
    """
    g = field.grid
    xs, ys, _ = g.axes()
    w3 = g.weights3()
    dens = w3 * np.abs(field.values) ** 2
    total = float(dens.sum())
    x = xs[:, None, None]
    y = ys[None, :, None]
    if about_centroid:
        x = x - float((dens * x).sum()) / total
        y = y - float((dens * y).sum()) / total
    zeta4 = ((x + 1j * y) ** 4 * dens).sum() / total
    return float(np.angle(zeta4)) / 4.0
