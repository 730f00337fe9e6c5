"""Time-dependent force profiles and their integral functionals.

A profile mu(t) acts along the x-axis through the potential mu(t)*x, i.e. a
positive mu deflects the packet toward negative x.  The kernels and the
closed-form observables consume four integrals of the profile:

    nu(t)  = int_0^t mu(t') dt'                 (momentum transfer)
    xi(t)  = int_0^t nu(t') dt'                 (m times the centroid shift)
    v(t)   = int_0^t t' mu(t') dt'              (first time moment)
    chi(t) = (1/2 m hbar) int_0^t (v(t')/t')^2 dt'   (pure-time phase)

The identity v(t) = t*nu(t) - xi(t) (integration by parts) is kept out of the
implementations on purpose: the validation suite uses it as an independent
cross-check between the three routines.

Analytic profiles use hand-derived antiderivatives so kernel evaluation stays
O(1); the tabulated profile integrates its linear interpolant exactly segment
by segment.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass, field

from scipy.integrate import quad

from .errors import DomainError
from .params import PhysicalParams

#: relative tolerance for chi quadrature
CHI_RTOL = 1e-9


def _check_time(t: float) -> float:
    t = float(t)
    if t < 0.0:
        raise DomainError(f"time must be non-negative, got {t}")
    return t


class ForceProfile:
    """Base class; subclasses implement mu/nu/xi/v_moment in closed form."""

    def mu(self, t: float) -> float:
        raise NotImplementedError

    def nu(self, t: float) -> float:
        raise NotImplementedError

    def xi(self, t: float) -> float:
        raise NotImplementedError

    def v_moment(self, t: float) -> float:
        raise NotImplementedError

    def chi_phase(self, t: float, params: PhysicalParams, rtol: float = CHI_RTOL) -> float:
        """Quadrature fallback; the integrand (v/t')^2 -> 0 as t' -> 0 for bounded mu."""
        t = _check_time(t)
        if t == 0.0:
            return 0.0

        def integrand(tp: float) -> float:
            if tp <= 0.0:
                return 0.0
            return (self.v_moment(tp) / tp) ** 2

        value, _ = quad(integrand, 0.0, t, epsabs=0.0, epsrel=rtol, limit=200)
        return value / (2.0 * params.mass * params.hbar)


@dataclass(frozen=True)
class Zero(ForceProfile):
    """No force; every functional is identically zero."""

    def mu(self, t):
        _check_time(t)
        return 0.0

    def nu(self, t):
        _check_time(t)
        return 0.0

    def xi(self, t):
        _check_time(t)
        return 0.0

    def v_moment(self, t):
        _check_time(t)
        return 0.0

    def chi_phase(self, t, params, rtol=CHI_RTOL):
        _check_time(t)
        return 0.0


@dataclass(frozen=True)
class Constant(ForceProfile):
    mu0: float

    def mu(self, t):
        _check_time(t)
        return self.mu0

    def nu(self, t):
        return self.mu0 * _check_time(t)

    def xi(self, t):
        t = _check_time(t)
        return 0.5 * self.mu0 * t * t

    def v_moment(self, t):
        t = _check_time(t)
        return 0.5 * self.mu0 * t * t

    def chi_phase(self, t, params, rtol=CHI_RTOL):
        # (v/t')^2 = mu0^2 t'^2 / 4 integrates to mu0^2 t^3 / 12
        t = _check_time(t)
        return self.mu0**2 * t**3 / (24.0 * params.mass * params.hbar)


@dataclass(frozen=True)
class Sinusoidal(ForceProfile):
    """mu(t) = mu0 * sin(2 t / period_scale)."""

    mu0: float
    period_scale: float

    def __post_init__(self):
        if self.period_scale <= 0:
            raise ValueError("period_scale must be positive")

    @property
    def _b(self) -> float:
        return 2.0 / self.period_scale

    def mu(self, t):
        return self.mu0 * math.sin(self._b * _check_time(t))

    def nu(self, t):
        t = _check_time(t)
        b = self._b
        return self.mu0 * (1.0 - math.cos(b * t)) / b

    def xi(self, t):
        t = _check_time(t)
        b = self._b
        return self.mu0 * (t / b - math.sin(b * t) / b**2)

    def v_moment(self, t):
        t = _check_time(t)
        b = self._b
        return self.mu0 * (math.sin(b * t) / b**2 - t * math.cos(b * t) / b)


@dataclass(frozen=True)
class Tabulated(ForceProfile):
    """Linear interpolation of (time, force) samples; exact segment integrals.

    Sample times must be strictly increasing and bracket t = 0 at the low end
    so the integrals from 0 are defined; evaluation outside the table range is
    a domain error.  nu/xi/v integrate the interpolant exactly (piecewise
    quadratic/cubic antiderivatives), so they meet any quadrature tolerance by
    construction; chi remains adaptive quadrature.
    """

    times: tuple
    forces: tuple
    _nu_k: tuple = field(init=False, repr=False, compare=False)
    _v_k: tuple = field(init=False, repr=False, compare=False)
    _xi_k: tuple = field(init=False, repr=False, compare=False)
    _nu0: float = field(init=False, repr=False, compare=False)
    _v0: float = field(init=False, repr=False, compare=False)
    _xi0: float = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        ts = tuple(float(t) for t in self.times)
        fs = tuple(float(f) for f in self.forces)
        if len(ts) != len(fs):
            raise ValueError("times and forces must have equal length")
        if len(ts) < 2:
            raise ValueError("tabulated profile needs at least two samples")
        if any(b <= a for a, b in zip(ts, ts[1:])):
            raise ValueError("sample times must be strictly increasing")
        if ts[0] > 0.0:
            raise ValueError("table must start at t <= 0 so integrals from 0 are covered")
        object.__setattr__(self, "times", ts)
        object.__setattr__(self, "forces", fs)
        # cumulative integrals from the table start, evaluated at every knot
        nu_k, v_k, xi_k = [0.0], [0.0], [0.0]
        for i in range(len(ts) - 1):
            h = ts[i + 1] - ts[i]
            xi_k.append(xi_k[-1] + self._seg_xi(i, h, nu_k[i]))
            nu_k.append(nu_k[-1] + self._seg_nu(i, h))
            v_k.append(v_k[-1] + self._seg_v(i, h))
        object.__setattr__(self, "_nu_k", tuple(nu_k))
        object.__setattr__(self, "_v_k", tuple(v_k))
        object.__setattr__(self, "_xi_k", tuple(xi_k))
        object.__setattr__(self, "_nu0", self._nu_table(0.0))
        object.__setattr__(self, "_v0", self._v_table(0.0))
        object.__setattr__(self, "_xi0", self._xi_table(0.0))

    @classmethod
    def from_csv(cls, path) -> "Tabulated":
        """Two comma-separated columns (time, force); header row optional."""
        times, forces = [], []
        with open(path, "r", encoding="utf-8") as fh:
            for raw in fh:
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                parts = [p.strip() for p in line.split(",")]
                if len(parts) < 2:
                    raise ValueError(f"expected two columns, got: {raw!r}")
                try:
                    t, f = float(parts[0]), float(parts[1])
                except ValueError:
                    continue  # header row
                times.append(t)
                forces.append(f)
        return cls(tuple(times), tuple(forces))

    # segment i covers [t_i, t_{i+1}]; mu(s) = c0 + c1*(s - t_i)

    def _coeffs(self, i: int):
        t0, t1 = self.times[i], self.times[i + 1]
        f0, f1 = self.forces[i], self.forces[i + 1]
        return f0, (f1 - f0) / (t1 - t0), t0

    def _seg_nu(self, i: int, d: float) -> float:
        c0, c1, _ = self._coeffs(i)
        return c0 * d + 0.5 * c1 * d * d

    def _seg_v(self, i: int, d: float) -> float:
        c0, c1, t0 = self._coeffs(i)
        return c0 * (t0 * d + 0.5 * d * d) + c1 * (0.5 * t0 * d * d + d**3 / 3.0)

    def _seg_xi(self, i: int, d: float, nu_at_knot: float) -> float:
        c0, c1, _ = self._coeffs(i)
        return nu_at_knot * d + 0.5 * c0 * d * d + c1 * d**3 / 6.0

    def _segment(self, t: float) -> int:
        if t < self.times[0] or t > self.times[-1]:
            raise DomainError(
                f"t={t} outside table range [{self.times[0]}, {self.times[-1]}]")
        i = bisect.bisect_right(self.times, t) - 1
        return min(i, len(self.times) - 2)

    def _nu_table(self, t: float) -> float:
        i = self._segment(t)
        return self._nu_k[i] + self._seg_nu(i, t - self.times[i])

    def _v_table(self, t: float) -> float:
        i = self._segment(t)
        return self._v_k[i] + self._seg_v(i, t - self.times[i])

    def _xi_table(self, t: float) -> float:
        i = self._segment(t)
        return self._xi_k[i] + self._seg_xi(i, t - self.times[i], self._nu_k[i])

    # public functionals, rebased so the integrals start at t = 0

    def mu(self, t):
        t = _check_time(t)
        i = self._segment(t)
        c0, c1, t0 = self._coeffs(i)
        return c0 + c1 * (t - t0)

    def nu(self, t):
        t = _check_time(t)
        return self._nu_table(t) - self._nu0

    def v_moment(self, t):
        t = _check_time(t)
        return self._v_table(t) - self._v0

    def xi(self, t):
        # int_0^t nu = [Xi_table(t) - Xi_table(0)] - Nu_table(0) * t
        t = _check_time(t)
        return self._xi_table(t) - self._xi0 - self._nu0 * t


# module-level functional surface -----------------------------------------------


def mu(profile: ForceProfile, t: float) -> float:
    return profile.mu(t)


def nu(profile: ForceProfile, t: float) -> float:
    return profile.nu(t)


def xi(profile: ForceProfile, t: float) -> float:
    return profile.xi(t)


def v_moment(profile: ForceProfile, t: float) -> float:
    return profile.v_moment(t)


def chi_phase(profile: ForceProfile, t: float, params: PhysicalParams,
              rtol: float = CHI_RTOL) -> float:
    return profile.chi_phase(t, params, rtol=rtol)
