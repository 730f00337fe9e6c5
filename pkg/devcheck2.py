"""Dev scratch: oracle equivalence + trajectory/rotation behavior."""
import time
import numpy as np
import matterwave as mw
from matterwave.evolution import density_slice

p = mw.PhysicalParams.natural()
pB = mw.PhysicalParams.natural(b_field=4.0)   # larmor = 2
hg11 = mw.HermiteGaussSpec(1, 1)
tau = p.tau

def compare(kernel, t, steps=256, n=128):
    grid = mw.suggest_grid(kernel, hg11, t, transverse_count=n, z_count=n)
    req_c = mw.EvolutionRequest(hg11, kernel, t, grid, mw.KernelConvolution())
    req_s = mw.EvolutionRequest(hg11, kernel, t, grid, mw.SplitStepOracle(steps))
    t0 = time.time(); fc = mw.evolve_convolution(req_c); tc = time.time() - t0
    t0 = time.time(); fs = mw.evolve_split_step(req_s); ts = time.time() - t0
    dc = density_slice(fc, "z", 0.0).values
    ds = density_slice(fs, "z", 0.0).values
    rel = np.linalg.norm(dc - ds) / np.linalg.norm(dc)
    return rel, fc, fs, tc, ts, grid

scenarios = [
    ("zero", mw.KernelSpec.linear(p, mw.Zero())),
    ("const", mw.KernelSpec.linear(p, mw.Constant(16.0))),
    ("sin", mw.KernelSpec.linear(p, mw.Sinusoidal(16.0, tau))),
    ("mag", mw.KernelSpec.magnetic(pB)),
    ("mag+f", mw.KernelSpec.magnetic_with_force(pB, 16.0)),
]
for t in (0.25 * tau, 0.5 * tau):
    for name, ks in scenarios:
        rel, fc, fs, tc, ts, grid = compare(ks, t)
        obs = mw.grid_observables(fc.normalize(), p)
        print(f"t={t:.3f} {name:6s} relL2={rel:.2e}  conv={tc:.1f}s split={ts:.1f}s "
              f"norm_c={fc.norm_hint:.6f} centroid=({obs.centroid[0]:+.4f},{obs.centroid[1]:+.4f},{obs.centroid[2]:+.4f})")

# trajectory checks
t = 0.5 * tau
print("\nexpected const x:", -16.0 * t**2 / 2, " mag x:", -16*np.sin(2*t)**2/(2*4),
      " mag y:", 16*(2*2*t - np.sin(4*t))/(4*1*4))

# rotation check
ks = mw.KernelSpec.magnetic(pB)
for t in (0.2 * tau, 0.4 * tau):
    grid = mw.suggest_grid(ks, hg11, t, 128, 96)
    f = mw.evolve_convolution(mw.EvolutionRequest(hg11, ks, t, grid))
    ang = mw.lobe_orientation(f)
    print(f"t={t:.3f} lobe angle={ang:.6f} expected={np.pi/4 - 2*t:.6f}")
