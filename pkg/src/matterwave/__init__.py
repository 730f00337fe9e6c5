"""Structured matter-wave evolution: exact propagator kernels, spectral
oracles, and closed-form observables for beams under time-dependent linear
forces and constant magnetic fields."""

from .errors import (ConfigError, DegenerateFieldError, DomainError,
                     FocalSingularityError, GridLeakWarning, SingularTimeError,
                     StepCountError)
from .forces import Constant, ForceProfile, Sinusoidal, Tabulated, Zero
from .grids import AxisSpec, ComplexField, Grid3
from .kernels import (KernelKind, KernelSpec, TrigFunctionals,
                      free_kernel_1d, free_transverse_kernel,
                      linear_longitudinal_kernel, magnetic_force_kernel,
                      magnetic_kernel, trig_functionals)
from .evolution import (DensitySlice, EvolutionRequest, KernelConvolution,
                        SplitStepOracle, closed_form_linear_state,
                        density_slice, evolve, evolve_convolution,
                        evolve_split_step, suggest_grid)
from .observables import (ObservableReport, closed_form_report,
                          grid_observables, inertia_com, inertia_lab,
                          lobe_orientation, magnetic_trajectory,
                          oam_expectation, trajectory, uncertainties_hg11,
                          write_report_csv)
from .params import PhysicalParams
from .states import (HermiteGaussSpec, LaguerreGaussSpec, genlaguerre_poly,
                     hermite_gauss_initial, hermite_poly,
                     laguerre_gauss_initial, sample_field)

__version__ = "0.1.0"
