"""Dev scratch: closed-form evolved state vs convolution; delta + semigroup."""
import numpy as np
import matterwave as mw
from matterwave.evolution import closed_form_linear_state, density_slice
from matterwave.kernels import free_kernel_1d, linear_longitudinal_kernel

p = mw.PhysicalParams.natural()
hg11 = mw.HermiteGaussSpec(1, 1)
tau = p.tau

for profname, prof, mu0 in [("zero", mw.Zero(), 0.0), ("const", mw.Constant(16.0), 16.0)]:
    ks = mw.KernelSpec.linear(p, prof)
    t = 0.5 * tau
    grid = mw.suggest_grid(ks, hg11, t, 128, 96)
    fc = mw.evolve_convolution(mw.EvolutionRequest(hg11, ks, t, grid))
    sl = density_slice(fc, "z", 0.0)
    xs, ys, zs = grid.axes()
    X, Y = np.meshgrid(xs, ys, indexing="ij")
    for verbatim in (False, True):
        amp = closed_form_linear_state(p, prof, hg11, (X, Y, np.zeros_like(X)), t, verbatim=verbatim)
        d = np.abs(amp) ** 2
        # normalize both slices to unit plane integral for comparison
        wx, wy = grid.x.weights(), grid.y.weights()
        d_n = d / (wx @ d @ wy)
        c_n = sl.values / (wx @ sl.values @ wy)
        rel = np.linalg.norm(d_n - c_n) / np.linalg.norm(c_n)
        xc = (wx @ (d_n * X) @ wy)
        xc_conv = (wx @ (c_n * X) @ wy)
        var = (wx @ (d_n * (X - xc)**2) @ wy)
        print(f"{profname} verbatim={verbatim}: pointwise relL2={rel:.3e} centroid={xc:+.5f} "
              f"(conv {xc_conv:+.5f}) dx={np.sqrt(var):.5f} expected dx={np.sqrt(0.75 + 3*t**2):.5f}")

# delta property of magnetic_force_kernel at t=1e-3, windowed 2D + 1D z quadrature
pB = mw.PhysicalParams.natural(b_field=4.0)
rng = np.random.default_rng(3)
sig = 2.0
t = 1e-3
w_l = pB.larmor
A = pB.mass * w_l * np.cos(w_l*t)/np.sin(w_l*t) / (2*pB.hbar)  # ~1/2t
W = 0.25
nwin = 121
err2 = 0.0; ref2 = 0.0
pts = rng.uniform(-1.5, 1.5, (40, 3))
for (x, y, z) in pts:
    xs = np.linspace(x - W, x + W, nwin); ys = np.linspace(y - W, y + W, nwin)
    zs = np.linspace(z - W, z + W, nwin)
    wq = np.full(nwin, xs[1]-xs[0]); wq[0] *= .5; wq[-1] *= .5
    X, Y = np.meshgrid(xs, ys, indexing="ij")
    psi0 = lambda a, b, c: np.exp(-(a**2 + b**2 + c**2)/(2*sig**2)) / (np.pi*sig**2)**0.75
    # transverse 2D x 1D z integration of K * psi0
    Kt = mw.magnetic_force_kernel(pB, 16.0, (x, y, 0.0), t, (X, Y, 0.0))
    # strip z-part of kernel: evaluated with z=z'=0 gives transverse * sqrt(m/2pi i hbar t)
    # do full 3D as product: K3 = Kt_partial * exp(i a (z-z')^2) handled via 1D
    az = pB.mass / (2*pB.hbar*t)
    kz = np.sqrt(pB.mass/(2j*np.pi*pB.hbar*t)) * np.exp(1j*az*(z-zs)**2)
    trans = (Kt / np.sqrt(pB.mass/(2j*np.pi*pB.hbar*t))) # remove the z prefactor+phase(0)
    gz = np.exp(-zs**2/(2*sig**2))
    val_t = np.einsum("ij,i,j,ij->", trans, wq, wq, np.exp(-(X**2+Y**2)/(2*sig**2)))
    val_z = np.sum(kz * wq * gz)
    approx = val_t * val_z / (np.pi*sig**2)**0.75
    exact = psi0(x, y, z)
    err2 += abs(approx - exact)**2; ref2 += abs(exact)**2
print(f"delta property relL2 = {np.sqrt(err2/ref2):.3e}")

# semigroup via Gaussian probe, 1D free and constant-force kernels
def conv1d(kfun, t, dst, src, w, f):
    return kfun(dst[:, None], t, src[None, :]) @ (w * f)

for name, kf in [("free", lambda xx, tt, xp: free_kernel_1d(p, xx, tt, xp)),
                 ("const", lambda xx, tt, xp: linear_longitudinal_kernel(p, mw.Constant(4.0), xx, tt, xp))]:
    t1, t2 = 0.15, 0.12
    src = np.linspace(-6, 6, 1601); w = np.full(src.size, src[1]-src[0]); w[0]*=.5; w[-1]*=.5
    mid = np.linspace(-7, 7, 1801); wm = np.full(mid.size, mid[1]-mid[0]); wm[0]*=.5; wm[-1]*=.5
    dst = np.linspace(-4, 4, 301)
    f0 = (2/np.pi)**0.25 * np.exp(-src**2)          # HG00-like probe, w0=1
    f0m = (2/np.pi)**0.25 * np.exp(-mid**2)
    onestep = kf(dst[:, None], t1 + t2, src[None, :]) @ (w * f0)
    inner = kf(mid[:, None], t1, src[None, :]) @ (w * f0)
    twostep = kf(dst[:, None], t2, mid[None, :]) @ (wm * inner)
    # NOTE for const: K(t2) propagating from time t1 is NOT kf(t2) unless autonomous. const is autonomous.
    rel = np.linalg.norm(onestep - twostep) / np.linalg.norm(onestep)
    print(f"semigroup[{name}] relL2 = {rel:.3e}")
