"""Delta-property tuning: narrower probe (still >> kernel width), wider window."""
import time
import numpy as np
import matterwave as mw

pB = mw.PhysicalParams.natural(b_field=4.0)
rng = np.random.default_rng(3)
t = 1e-3
sig = 0.35            # probe width; kernel delta width sqrt(hbar t / m) ~ 0.032
W = 1.4
n = 2751

delta_w = np.sqrt(pB.hbar * t / pB.mass)
print(f"probe/kernel width ratio: {sig/delta_w:.1f}")

def probe(a, b, c):
    return np.exp(-(a**2 + b**2 + c**2) / (2 * sig**2)) / (np.pi * sig**2) ** 0.75

pts = rng.uniform(-0.3, 0.3, (12, 3))
t0 = time.time()
err2 = ref2 = 0.0
for (x, y, z) in pts:
    xs = np.linspace(x - W, x + W, n); ys = np.linspace(y - W, y + W, n)
    zs = np.linspace(z - W, z + W, n)
    wq = np.full(n, xs[1] - xs[0]); wq[0] *= .5; wq[-1] *= .5
    X, Y = np.meshgrid(xs, ys, indexing="ij")
    Kt = mw.magnetic_force_kernel(pB, 16.0, (x, y, 0.0), t, (X, Y, 0.0))
    zpref = np.sqrt(pB.mass / (2j*np.pi*pB.hbar*t))
    trans = Kt / zpref
    az = pB.mass / (2 * pB.hbar * t)
    kz = zpref * np.exp(1j * az * (z - zs)**2)
    val_t = ((trans * np.exp(-(X**2 + Y**2)/(2*sig**2))) @ wq) @ wq
    val_z = np.sum(kz * wq * np.exp(-zs**2 / (2*sig**2)))
    approx = val_t * val_z / (np.pi * sig**2) ** 0.75
    exact = probe(x, y, z)
    err2 += abs(approx - exact)**2; ref2 += abs(exact)**2
print(f"delta relL2 = {np.sqrt(err2/ref2):.3e}  ({time.time()-t0:.1f}s)")
