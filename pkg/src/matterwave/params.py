"""Physical parameters of the beam and its environment.

All formulas in the library carry explicit mass/hbar factors, so any
consistent unit system works.  The recommended (and default) system is
natural units hbar = m = omega0 = 1, in which the characteristic time
tau = m*omega0^2/(2*hbar) equals 1/2 and grid coordinates are lengths in
units of the beam waist.
"""

from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class PhysicalParams:
    """Particle and beam constants.

    mass        particle mass
    hbar        quantum of action
    charge      particle charge (enters only through the Larmor rate)
    b_field     uniform magnetic flux density along +z
    beam_waist  transverse Gaussian waist omega0 of the initial packet
    alpha       longitudinal Gaussian parameter (envelope exp(-alpha z^2 / 2))
    k0          launch wavenumber along +z
    """

    mass: float = 1.0
    hbar: float = 1.0
    charge: float = 1.0
    b_field: float = 0.0
    beam_waist: float = 1.0
    alpha: float = 1.0
    k0: float = 10.0

    def __post_init__(self):
        if self.mass <= 0:
            raise ValueError("mass must be positive")
        if self.hbar <= 0:
            raise ValueError("hbar must be positive")
        if self.beam_waist <= 0:
            raise ValueError("beam_waist must be positive")
        if self.alpha <= 0:
            raise ValueError("alpha must be positive")

    @property
    def larmor(self) -> float:
        """Rotation rate w = q B / 2m; recomputed on access, never stored."""
        return self.charge * self.b_field / (2.0 * self.mass)

    @property
    def tau(self) -> float:
        """Characteristic time m*omega0^2 / 2*hbar used to scale plot axes."""
        return self.mass * self.beam_waist**2 / (2.0 * self.hbar)

    def with_b_field(self, b_field: float) -> "PhysicalParams":
        return replace(self, b_field=b_field)

    @classmethod
    def natural(cls, **overrides) -> "PhysicalParams":
        """Defaults in natural units (hbar = m = omega0 = 1, alpha = 1, k0 = 10)."""
        return cls(**overrides)

    @classmethod
    def from_si(cls, mass_kg: float, hbar_si: float, waist_m: float,
                alpha_per_m2: float, k0_per_m: float,
                charge_c: float = 0.0, b_tesla: float = 0.0) -> "PhysicalParams":
        """Convert SI-like inputs to the internal natural-unit system.

        Unit choices: mass unit M0 = mass_kg, length unit L0 = waist_m and
        time unit T0 = M0*L0^2/hbar_si, which makes mass = hbar = beam_waist = 1
        internally.  The magnetic field enters only through the Larmor rate, so
        charge is carried as 1 and b_field is set to reproduce
        w_internal = (q B / 2m)_SI * T0.
        """
        t0 = mass_kg * waist_m**2 / hbar_si
        larmor_si = charge_c * b_tesla / (2.0 * mass_kg)
        return cls(
            mass=1.0,
            hbar=1.0,
            charge=1.0,
            b_field=2.0 * larmor_si * t0,
            beam_waist=1.0,
            alpha=alpha_per_m2 * waist_m**2,
            k0=k0_per_m * waist_m,
        )
