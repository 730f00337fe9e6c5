"""Scenario configs: sections of `key = value` lines, `#` comments.

Parsing validates everything and reports every problem with its line number
rather than stopping at the first.  Grammar (defaults in brackets):

    [params]            # optional
    mass = 1.0          # [1.0]
    hbar = 1.0          # [1.0]
    charge = 1.0        # [1.0]
    beam_waist = 1.0    # [1.0]
    alpha = 1.0         # [1.0]
    k0 = 10.0           # [10.0]

    [state]             # required
    kind = hermite      # hermite | laguerre
    n = 1               # hermite x-order [0]
    m_index = 1         # hermite y-order [0]
    l = 2               # laguerre azimuthal index [0]
    p = 0               # laguerre radial index [0]
    w0 = 1.0            # laguerre waist [beam_waist]
    z_r = 10.0          # laguerre Rayleigh range [10.0]
    longitudinal_phase = off   # laguerre exp(i k0 z) factor [off]

    [force]             # optional -> zero
    kind = zero         # zero | constant | sinusoidal | tabulated
    mu0 = 16.0          # constant / sinusoidal amplitude
    period_scale = 0.5  # sinusoidal time scale [tau]
    csv = forces.csv    # tabulated sample file (relative to the config)

    [field]             # optional -> off
    enabled = on
    b = 4.0             # flux density along z

    [grid]              # optional -> auto-suggested per evolution time
    x = -8 8 129        # lo hi count
    y = -8 8 129
    z = -6 10 161

    [evolution]         # required (times)
    times = 0.125 0.25  # positive, space-separated
    method = convolution  # convolution | split_step
    steps = 256         # split-step only

    [output]            # required: at least one output
    density_slice = z 0.0
    observables = on
    validation_report = off
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .errors import ConfigError
from .evolution import KernelConvolution, SplitStepOracle
from .forces import Constant, ForceProfile, Sinusoidal, Tabulated, Zero
from .grids import AxisSpec, Grid3
from .kernels import KernelSpec
from .params import PhysicalParams
from .states import HermiteGaussSpec, LaguerreGaussSpec

_SCHEMA = {
    "params": {"mass", "hbar", "charge", "beam_waist", "alpha", "k0"},
    "state": {"kind", "n", "m_index", "l", "p", "w0", "z_r", "longitudinal_phase"},
    "force": {"kind", "mu0", "period_scale", "csv"},
    "field": {"enabled", "b"},
    "grid": {"x", "y", "z"},
    "evolution": {"times", "method", "steps"},
    "output": {"density_slice", "observables", "validation_report"},
}


@dataclass(frozen=True)
class ScenarioConfig:
    params: PhysicalParams
    state: object
    profile: ForceProfile
    field_enabled: bool
    kernel: KernelSpec
    times: tuple
    grid: Grid3 | None
    method: object
    density_slices: tuple      # of (axis, offset)
    observables: bool
    validation_report: bool


def _parse_lines(text: str):
    """-> ({section: {key: (value, line)}}, errors)."""
    sections: dict = {}
    errors: list = []
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            name = line[1:-1].strip().lower()
            if name not in _SCHEMA:
                errors.append((lineno, f"unknown section [{name}]"))
                current = None
                continue
            current = sections.setdefault(name, {})
            continue
        if "=" not in line:
            errors.append((lineno, f"expected `key = value`, got {line!r}"))
            continue
        key, _, value = line.partition("=")
        key, value = key.strip().lower(), value.strip()
        if current is None:
            errors.append((lineno, f"key {key!r} outside any section"))
            continue
        section_name = next(n for n, s in sections.items() if s is current)
        if key not in _SCHEMA[section_name]:
            errors.append((lineno, f"unknown key {key!r} in section [{section_name}]"))
            continue
        if key in current:
            errors.append((lineno, f"duplicate key {key!r}"))
            continue
        current[key] = (value, lineno)
    return sections, errors


class _Reader:
    def __init__(self, sections, errors):
        self.sections = sections
        self.errors = errors

    def get(self, section, key, default=None):
        return self.sections.get(section, {}).get(key, (default, 0))

    def typed(self, section, key, parse, default=None, invariant=None, describe=""):
        value, line = self.get(section, key)
        if value is None:
            return default
        try:
            parsed = parse(value)
        except ValueError:
            self.errors.append((line, f"{key}: cannot parse {value!r} {describe}".rstrip()))
            return default
        if invariant is not None:
            ok, msg = invariant(parsed)
            if not ok:
                self.errors.append((line, f"{key}: {msg}"))
                return default
        return parsed


def _bool(value: str) -> bool:
    v = value.lower()
    if v in ("on", "true", "yes", "1"):
        return True
    if v in ("off", "false", "no", "0"):
        return False
    raise ValueError(value)


def _axis(value: str) -> AxisSpec:
    parts = value.split()
    if len(parts) != 3:
        raise ValueError(value)
    return AxisSpec(float(parts[0]), float(parts[1]), int(parts[2]))


def _positive(msg="must be positive"):
    return lambda v: (v > 0, msg)


def _non_negative(msg="must be non-negative"):
    return lambda v: (v >= 0, msg)


def parse_config(text: str, base_dir: str = ".") -> ScenarioConfig:
    """Parse and fully validate a scenario config; raises ConfigError listing
    every problem (line-numbered), never just the first one."""
    sections, errors = _parse_lines(text)
    r = _Reader(sections, errors)

    for required in ("state", "evolution", "output"):
        if required not in sections:
            errors.append((0, f"missing required section [{required}]"))

    params = None
    mass = r.typed("params", "mass", float, 1.0, _positive())
    hbar = r.typed("params", "hbar", float, 1.0, _positive())
    charge = r.typed("params", "charge", float, 1.0)
    beam_waist = r.typed("params", "beam_waist", float, 1.0, _positive())
    alpha = r.typed("params", "alpha", float, 1.0, _positive())
    k0 = r.typed("params", "k0", float, 10.0)
    b_value = r.typed("field", "b", float, 0.0)
    field_enabled = r.typed("field", "enabled", _bool, False)
    try:
        params = PhysicalParams(mass=mass, hbar=hbar, charge=charge,
                                b_field=b_value if field_enabled else 0.0,
                                beam_waist=beam_waist, alpha=alpha, k0=k0)
    except (ValueError, TypeError):
        params = PhysicalParams.natural()  # placeholder; errors already recorded

    # state
    state = None
    kind = r.typed("state", "kind", str, "hermite",
                   lambda v: (v in ("hermite", "laguerre"), "must be hermite or laguerre"))
    if kind == "hermite":
        n = r.typed("state", "n", int, 0, _non_negative())
        m_index = r.typed("state", "m_index", int, 0, _non_negative())
        try:
            state = HermiteGaussSpec(n=n, m_index=m_index)
        except (ValueError, TypeError):
            pass
    else:
        l = r.typed("state", "l", int, 0)
        p_idx = r.typed("state", "p", int, 0, _non_negative())
        w0 = r.typed("state", "w0", float, beam_waist or 1.0, _positive())
        z_r = r.typed("state", "z_r", float, 10.0, _positive())
        lphase = r.typed("state", "longitudinal_phase", _bool, False)
        try:
            state = LaguerreGaussSpec(l=l, p=p_idx, w0=w0, z_r=z_r,
                                      longitudinal_phase=lphase)
        except (ValueError, TypeError):
            pass

    # force profile
    profile: ForceProfile = Zero()
    fkind = r.typed("force", "kind", str, "zero",
                    lambda v: (v in ("zero", "constant", "sinusoidal", "tabulated"),
                               "must be zero, constant, sinusoidal or tabulated"))
    _, fkind_line = r.get("force", "kind")
    if fkind == "constant":
        mu0 = r.typed("force", "mu0", float, None)
        if mu0 is None:
            errors.append((fkind_line, "constant force requires mu0"))
        else:
            profile = Constant(mu0)
    elif fkind == "sinusoidal":
        mu0 = r.typed("force", "mu0", float, None)
        period = r.typed("force", "period_scale", float,
                         params.tau if params else 0.5, _positive())
        if mu0 is None:
            errors.append((fkind_line, "sinusoidal force requires mu0"))
        else:
            profile = Sinusoidal(mu0, period)
    elif fkind == "tabulated":
        csv, csv_line = r.get("force", "csv")
        if csv is None:
            errors.append((fkind_line, "tabulated force requires csv = <path>"))
        else:
            path = csv if os.path.isabs(csv) else os.path.join(base_dir, csv)
            try:
                profile = Tabulated.from_csv(path)
            except (OSError, ValueError) as exc:
                errors.append((csv_line, f"cannot load force table: {exc}"))

    # kernel selection
    kernel = None
    if field_enabled:
        if params.larmor == 0.0:
            _, line = r.get("field", "enabled")
            errors.append((line, "field enabled but q*B/2m = 0; set b and charge"))
        elif fkind == "zero":
            kernel = KernelSpec.magnetic(params)
        elif fkind == "constant":
            kernel = KernelSpec.magnetic_with_force(params, profile.mu0)
        else:
            errors.append((fkind_line,
                           f"magnetic evolution supports zero or constant force, not {fkind}"))
    else:
        kernel = KernelSpec.linear(params, profile)

    # grid (optional)
    grid = None
    if "grid" in sections:
        ax = r.typed("grid", "x", _axis, None, describe="(expected: lo hi count)")
        ay = r.typed("grid", "y", _axis, None, describe="(expected: lo hi count)")
        az = r.typed("grid", "z", _axis, None, describe="(expected: lo hi count)")
        if ax and ay and az:
            grid = Grid3(ax, ay, az)
        else:
            errors.append((0, "section [grid] needs all of x, y, z"))

    # evolution
    def _times(value: str):
        return tuple(float(v) for v in value.split())

    times = r.typed("evolution", "times", _times, (),
                    lambda ts: (len(ts) > 0 and all(t > 0 for t in ts),
                                "needs at least one positive time"))
    method_name = r.typed("evolution", "method", str, "convolution",
                          lambda v: (v in ("convolution", "split_step"),
                                     "must be convolution or split_step"))
    steps = r.typed("evolution", "steps", int, 256,
                    lambda v: (v >= 16, "must be at least 16"))
    method = SplitStepOracle(steps) if method_name == "split_step" else KernelConvolution()

    # outputs
    slices = ()
    def _slice(value: str):
        parts = value.split()
        if len(parts) != 2 or parts[0] not in ("x", "y", "z"):
            raise ValueError(value)
        return (parts[0], float(parts[1]))

    sl = r.typed("output", "density_slice", _slice, None,
                 describe="(expected: axis offset)")
    if sl is not None:
        slices = (sl,)
    observables = r.typed("output", "observables", _bool, False)
    validation_report = r.typed("output", "validation_report", _bool, False)
    if "output" in sections and not (slices or observables or validation_report):
        errors.append((0, "section [output] requests no outputs"))

    if errors:
        raise ConfigError(sorted(errors))

    return ScenarioConfig(
        params=params,
        state=state,
        profile=profile,
        field_enabled=field_enabled,
        kernel=kernel,
        times=times,
        grid=grid,
        method=method,
        density_slices=slices,
        observables=observables,
        validation_report=validation_report,
    )
