"""Dev scratch: PDE residuals + oracle equivalence before formal tests."""
import numpy as np
import matterwave as mw
from matterwave.kernels import magnetic_kernel, magnetic_force_kernel, linear_longitudinal_kernel, free_transverse_kernel

p = mw.PhysicalParams.natural()
pB = mw.PhysicalParams.natural(b_field=4.0)   # larmor w = 2
rng = np.random.default_rng(7)

def rel_residual_linear(profile, n=30, h=2e-4):
    t = rng.uniform(0.2, 0.5, n)
    scale = np.sqrt(2 * t)
    x = rng.uniform(-0.9, 0.9, n) * scale
    xp = rng.uniform(-0.9, 0.9, n) * scale
    K = lambda tt, xx: linear_longitudinal_kernel(p, profile, xx, tt, xp) if np.isscalar(tt) else None
    out = []
    for i in range(n):
        f = lambda tt, xx: linear_longitudinal_kernel(p, profile, xx, tt, xp[i])
        k0 = f(t[i], x[i])
        dt_ = (f(t[i]+h, x[i]) - f(t[i]-h, x[i])) / (2*h)
        dxx = (f(t[i], x[i]+h) - 2*k0 + f(t[i], x[i]-h)) / h**2
        term_t = 1j * p.hbar * dt_
        term_k = (p.hbar**2 / (2*p.mass)) * dxx
        term_v = profile.mu(t[i]) * x[i] * k0
        r = term_t + term_k - term_v
        out.append(abs(r) / (abs(term_t) + abs(term_k) + abs(term_v)))
    return np.array(out)

def rel_residual_magnetic(mu0, n=30, h=2e-4):
    w = pB.larmor
    t = rng.uniform(0.2, 0.5, n)
    sc = np.sqrt(2 * t)
    pts = rng.uniform(-0.9, 0.9, (n, 6)) * sc[:, None]
    out = []
    for i in range(n):
        x, y, z, xp, yp, zp = pts[i]
        def f(tt, xx, yy, zz):
            if mu0 == 0:
                return magnetic_kernel(pB, (xx, yy, zz), tt, (xp, yp, zp))
            return magnetic_force_kernel(pB, mu0, (xx, yy, zz), tt, (xp, yp, zp))
        k0 = f(t[i], x, y, z)
        dt_ = (f(t[i]+h, x, y, z) - f(t[i]-h, x, y, z)) / (2*h)
        dxx = (f(t[i], x+h, y, z) - 2*k0 + f(t[i], x-h, y, z)) / h**2
        dyy = (f(t[i], x, y+h, z) - 2*k0 + f(t[i], x, y-h, z)) / h**2
        dzz = (f(t[i], x, y, z+h) - 2*k0 + f(t[i], x, y, z-h)) / h**2
        dx_ = (f(t[i], x+h, y, z) - f(t[i], x-h, y, z)) / (2*h)
        dy_ = (f(t[i], x, y+h, z) - f(t[i], x, y-h, z)) / (2*h)
        term_t = 1j * pB.hbar * dt_
        term_k = (pB.hbar**2 / (2*pB.mass)) * (dxx + dyy + dzz)
        # w(p_x y - p_y x) K = -i hbar w (y d_x - x d_y) K
        term_rot = -1j * pB.hbar * w * (y * dx_ - x * dy_)
        term_pot = (0.5 * pB.mass * w**2 * (x**2 + y**2) + mu0 * x) * k0
        r = term_t + term_k - term_rot - term_pot
        out.append(abs(r) / (abs(term_t) + abs(term_k) + abs(term_rot) + abs(term_pot)))
    return np.array(out)

for name, prof in [("zero", mw.Zero()), ("const", mw.Constant(16.0)), ("sin", mw.Sinusoidal(16.0, p.tau))]:
    r = rel_residual_linear(prof)
    print(f"linear[{name}]  max={r.max():.2e} med={np.median(r):.2e}")
r = rel_residual_magnetic(0.0); print(f"magnetic      max={r.max():.2e} med={np.median(r):.2e}")
r = rel_residual_magnetic(16.0); print(f"magnetic+f    max={r.max():.2e} med={np.median(r):.2e}")

# now the sign check that matters most: both printed-sign variants for the forced kernel
def residual_with_flipped_c(mu0, n=10, h=2e-4):
    from matterwave.kernels import force_phase_coefficients, _check_t
    w = pB.larmor
    t = rng.uniform(0.2, 0.5, n); sc = np.sqrt(2*t)
    pts = rng.uniform(-0.9, 0.9, (n, 6)) * sc[:, None]
    out = []
    for i in range(n):
        x, y, z, xp, yp, zp = pts[i]
        def f(tt, xx, yy, zz):
            base = magnetic_kernel(pB, (xx, yy, zz), tt, (xp, yp, zp))
            a, c, g = force_phase_coefficients(pB, mu0, tt)
            c = -c  # flipped, as printed
            return base * np.exp(1j * (a*(xx+xp) + c*(yy-yp) + g) / pB.hbar)
        k0 = f(t[i], x, y, z)
        dt_ = (f(t[i]+h,x,y,z) - f(t[i]-h,x,y,z))/(2*h)
        dxx = (f(t[i],x+h,y,z)-2*k0+f(t[i],x-h,y,z))/h**2
        dyy = (f(t[i],x,y+h,z)-2*k0+f(t[i],x,y-h,z))/h**2
        dzz = (f(t[i],x,y,z+h)-2*k0+f(t[i],x,y,z-h))/h**2
        dx_ = (f(t[i],x+h,y,z)-f(t[i],x-h,y,z))/(2*h)
        dy_ = (f(t[i],x,y+h,z)-f(t[i],x,y-h,z))/(2*h)
        term_t = 1j*pB.hbar*dt_
        term_k = (pB.hbar**2/(2*pB.mass))*(dxx+dyy+dzz)
        term_rot = -1j*pB.hbar*w*(y*dx_-x*dy_)
        term_pot = (0.5*pB.mass*w**2*(x**2+y**2) + mu0*x)*k0
        r = term_t+term_k-term_rot-term_pot
        out.append(abs(r)/(abs(term_t)+abs(term_k)+abs(term_rot)+abs(term_pot)))
    return np.array(out)

r = residual_with_flipped_c(16.0); print(f"magnetic+f (printed y-sign) max={r.max():.2e}  <- should FAIL")
