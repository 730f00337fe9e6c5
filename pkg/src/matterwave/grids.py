"""Rectilinear grids and complex fields sampled on them.

Axis coordinates are generated from symmetric integer offsets around the axis
center so that mirrored nodes satisfy x[-i] - c == -(x[i] - c) exactly; parity
properties of sampled fields then hold to the bit.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass, replace

import numpy as np

from .errors import DegenerateFieldError

_HEADER = struct.Struct("<3q3d3d")  # axis counts, axis mins, spacings


@dataclass(frozen=True)
class AxisSpec:
    lo: float
    hi: float
    count: int

    def __post_init__(self):
        if self.count < 2:
            raise ValueError("axis needs at least 2 nodes")
        if not self.hi > self.lo:
            raise ValueError("axis max must exceed min")

    @property
    def spacing(self) -> float:
        return (self.hi - self.lo) / (self.count - 1)

    def points(self) -> np.ndarray:
        center = 0.5 * (self.lo + self.hi)
        offsets = np.arange(self.count) - (self.count - 1) / 2.0
        return center + offsets * self.spacing

    def weights(self) -> np.ndarray:
        """Trapezoid quadrature weights."""
        w = np.full(self.count, self.spacing)
        w[0] *= 0.5
        w[-1] *= 0.5
        return w

    @classmethod
    def symmetric(cls, half_width: float, count: int) -> "AxisSpec":
        return cls(-half_width, half_width, count)


@dataclass(frozen=True)
class Grid3:
    x: AxisSpec
    y: AxisSpec
    z: AxisSpec

    @property
    def shape(self) -> tuple:
        return (self.x.count, self.y.count, self.z.count)

    def axes(self):
        return self.x.points(), self.y.points(), self.z.points()

    def weights3(self) -> np.ndarray:
        wx, wy, wz = self.x.weights(), self.y.weights(), self.z.weights()
        return wx[:, None, None] * wy[None, :, None] * wz[None, None, :]

    @classmethod
    def cube(cls, half_width: float, count: int) -> "Grid3":
        ax = AxisSpec.symmetric(half_width, count)
        return cls(ax, ax, ax)


@dataclass(frozen=True)
class ComplexField:
    """Complex amplitudes on a Grid3, row-major in (x, y, z) axis order.

    Values are frozen after construction; norm_hint caches the last computed
    trapezoid L2 norm so consumers can sanity-check normalization cheaply.
    """

    grid: Grid3
    values: np.ndarray
    norm_hint: float = float("nan")

    def __post_init__(self):
        vals = np.ascontiguousarray(self.values, dtype=np.complex128)
        if vals.shape != self.grid.shape:
            raise ValueError(f"values shape {vals.shape} != grid shape {self.grid.shape}")
        vals.flags.writeable = False
        object.__setattr__(self, "values", vals)

    def norm(self) -> float:
        w = self.grid.weights3()
        return float(np.sqrt(np.sum(w * np.abs(self.values) ** 2)))

    def normalize(self) -> "ComplexField":
        n = self.norm()
        if not n > 0.0 or not np.isfinite(n):
            raise DegenerateFieldError(f"cannot normalize field with norm {n}")
        return ComplexField(self.grid, self.values / n, norm_hint=1.0)

    def with_norm_hint(self) -> "ComplexField":
        return replace(self, norm_hint=self.norm())

    # -- binary io ---------------------------------------------------------------
    # header: 3 int64 axis counts, 3 float64 axis mins, 3 float64 spacings,
    # little-endian; then interleaved (re, im) float64 pairs in row-major order.

    def save(self, path) -> None:
        g = self.grid
        header = _HEADER.pack(
            g.x.count, g.y.count, g.z.count,
            g.x.lo, g.y.lo, g.z.lo,
            g.x.spacing, g.y.spacing, g.z.spacing,
        )
        interleaved = np.empty(self.values.size * 2, dtype="<f8")
        flat = self.values.ravel()
        interleaved[0::2] = flat.real
        interleaved[1::2] = flat.imag
        with open(path, "wb") as fh:
            fh.write(header)
            fh.write(interleaved.tobytes())

    @classmethod
    def load(cls, path) -> "ComplexField":
        with open(path, "rb") as fh:
            header = fh.read(_HEADER.size)
            nx, ny, nz, x0, y0, z0, dx, dy, dz = _HEADER.unpack(header)
            raw = np.frombuffer(fh.read(), dtype="<f8")
        grid = Grid3(
            AxisSpec(x0, x0 + dx * (nx - 1), nx),
            AxisSpec(y0, y0 + dy * (ny - 1), ny),
            AxisSpec(z0, z0 + dz * (nz - 1), nz),
        )
        if raw.size != 2 * nx * ny * nz:
            raise ValueError("field file payload does not match header counts")
        values = (raw[0::2] + 1j * raw[1::2]).reshape(nx, ny, nz)
        field = cls(grid, values)
        return field.with_norm_hint()

    # -- csv slice export ----------------------------------------------------------

    def slice_to_csv(self, path, axis: str = "z", offset: float = 0.0) -> None:
        """Write the complex 2D slice: columns x, y, |psi|^2, Re psi, Im psi."""
        (u, v), vals = self._extract_slice(axis, offset)
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("x,y,psi_abs2,psi_re,psi_im\n")
            for i, ui in enumerate(u):
                for j, vj in enumerate(v):
                    a = vals[i, j]
                    fh.write(f"{ui:.17g},{vj:.17g},{abs(a)**2:.17g},"
                             f"{a.real:.17g},{a.imag:.17g}\n")

    def _extract_slice(self, axis: str, offset: float):
        names = {"x": 0, "y": 1, "z": 2}
        if axis not in names:
            raise ValueError(f"axis must be one of x, y, z; got {axis!r}")
        k = names[axis]
        pts = self.grid.axes()[k]
        if offset < pts.min() - 1e-12 or offset > pts.max() + 1e-12:
            raise ValueError(f"slice offset {offset} outside grid range on axis {axis}")
        idx = int(np.argmin(np.abs(pts - offset)))
        slicer = [slice(None)] * 3
        slicer[k] = idx
        other = [self.grid.axes()[a] for a in range(3) if a != k]
        return other, self.values[tuple(slicer)]
