#!/usr/bin/env python3
# Throwaway prototype #2: su2 gaussian-lift family, heis sweep (fixed weight),
# counterexample trend, bump GL convergence, opnorm grid, ch_ft fit, blowup order.
import numpy as np
from scipy.integrate import quad
from scipy.special import eval_laguerre, j0, j1

B43 = 0.93668707437524814
c = (2 * np.pi**2) ** (1.0 / 3.0)
Delta = c / (2 * np.pi)

print("== su2 ratio, gaussian-lift family g = exp(-(th/w)^2)*(th/sin th), p=4/3")
def su2_ratio_lift(delta, p, lam_max=800):
    pp = p / (p - 1)
    w = delta / 3.0
    g = lambda th: np.exp(-((th / w) ** 2)) * np.where(th > 0, th / np.sin(th), 1.0) * (th < delta)
    fp = quad(lambda th: g(th) ** p * np.sin(th) ** 2, 0, delta, limit=200)[0] * 2 / np.pi
    fnorm = fp ** (1 / p)
    tf = np.zeros(lam_max + 1)
    for l in range(lam_max + 1):
        tf[l] = quad(lambda th: g(th) * np.sin((l + 1) * th) * np.sin(th), 0, delta, limit=400)[0] * 2 / np.pi
    d = np.arange(1, lam_max + 2)
    s = np.sum(d ** (2.0 - pp) * np.abs(tf) ** pp)
    return (s ** (1 / pp)) / fnorm

for delta in [0.8, 0.4, 0.2, 0.1]:
    r = su2_ratio_lift(delta, 4.0 / 3.0)
    print(f"  delta={delta:4}  ratio={r:.8f}  ratio/B^3={r/B43**3:.6f}")

print("== heis sweep p=4/3 (fixed integrand)")
p, q = 4.0 / 3.0, 4.0
def wgs(t, q):
    r = abs(t - 0.5) / (t + 0.5)
    return (1.0 / (t + 0.5) ** q) / (1 - r ** q)
def heis_ratio(t, mu, lam0):
    wid = np.sqrt(mu / (np.pi * q)) * 9 + 1e-12
    lam = np.linspace(lam0 - wid, lam0 + wid, 4001)
    lam = lam[np.abs(lam) > 1e-14]
    phh = mu ** -0.5 * np.exp(-(np.pi / mu) * (lam - lam0) ** 2)
    al = np.abs(lam)
    integ = phh ** q * al ** (1 - q) * np.array([wgs(t / a, q) for a in al])
    val = np.trapezoid(integ, lam)
    return val ** (1 / q) / ((p * t) ** (-1 / p) * (p * mu) ** (-1 / (2 * p)))
best, arg = 0, None
for t in [10, 100, 1000, 1e4]:
    for mu in [1e-1, 1e-2, 1e-3, 1e-4]:
        for lam0 in [0.5, 1.0, 2.0]:
            r = heis_ratio(t, mu, lam0)
            if r > best: best, arg = r, (t, mu, lam0)
print(f"  sup={best:.6f} at {arg}  sup/B^3={best/B43**3:.6f}")

print("== counterexample r_k = 1/||chihat_k||_4^2 ; exact-oracle route")
# ||chi_k||_4^4 = int_0^inf e^{-2u} L_k(u)^4 du  (exact via substitution + GL would work; use quad)
def chi4norm4(k):
    um = 4 * k + 30 + 10 * (k + 1) ** (1/3.)
    v, _ = quad(lambda u: np.exp(-2 * u) * eval_laguerre(k, u) ** 4, 0, um, limit=2000)
    return v
for k in [0, 1, 2, 3, 4, 5, 6, 8, 10, 20, 40, 60]:
    n4 = chi4norm4(k)
    rk = 1.0 / (2.0 * np.sqrt(n4))   # ||chihat||_4^2 = 2 ||chi||_4^2
    t = rk * np.sqrt(np.log(k)) / np.sqrt(k) if k >= 2 else float('nan')
    print(f"  k={k:3d}  ||chi||_4^4={n4:.8f}  r_k={rk:.6f}  trend={t:.4f}")

print("== weighted polyradial: GL convergence on C^inf-ish bump profiles")
# bump f0(r) = poly(u) * (1-u/u0)^8 on u=pi r^2 in [0,u0]
rng = np.random.default_rng(7)
from numpy.polynomial import polynomial as P
def gl(n):
    from scipy.special import roots_laguerre
    x, w = roots_laguerre(n)
    return x, w
for trial in range(3):
    u0 = np.pi * (0.5 + rng.random()) ** 2
    coef = rng.standard_normal(4)
    f0u = lambda u: np.polyval(coef, u / u0) * np.maximum(1 - u / u0, 0) ** 8
    prev = None
    for n in [128, 256, 512, 1024, 2048]:
        x, w = gl(n)
        vals = []
        for k in [0, 5, 17]:
            lk = np.exp(-x / 2) * eval_laguerre(k, x) # scaled; exp(x)*w handled below
            s = np.sum(w * np.exp(x) * f0u(x) * lk)
            vals.append(s)
        vals = np.array(vals)
        if prev is not None:
            print(f"  trial{trial} n={n:5d} change={np.max(np.abs(vals - prev)):.2e}")
        prev = vals

print("== opnorm check chi0 q=2 and gauss t=1 q=4, grid N=32 R=3.5")
def opnorm(ffun, q, N=32, R=3.5, spec_sum=None):
    h = 2 * R / N
    xs = (np.arange(N) - N / 2) * h
    X, Y = np.meshgrid(xs, xs, indexing="ij")
    Z = (X + 1j * Y).ravel()
    dz = Z[:, None] - Z[None, :]
    fz = ffun(dz)
    ph = np.exp(1j * np.pi * (Z.conj()[:, None] * Z[None, :]).imag)
    M = h * h * fz * ph
    lam = np.linalg.eigvalsh((M + M.conj().T) / 2)
    # |T|^q kernel max: need full eig with vectors
    w_, V = np.linalg.eigh((M + M.conj().T) / 2)
    Bq = (V * np.abs(w_) ** q) @ V.conj().T
    lhs = np.max(np.abs(Bq)) / (h * h)
    return lhs
chi0 = lambda z: np.exp(-np.pi * np.abs(z) ** 2 / 2)
v = opnorm(chi0, 2.0)
print(f"  chi0 q=2: lhs={v:.6f}  rhs=1   rel={abs(v-1):.3e}")
g1 = lambda z: np.exp(-np.pi * np.abs(z) ** 2)
v = opnorm(g1, 4.0)
print(f"  gauss t=1 q=4: lhs={v:.6f}  rhs=0.2  rel={abs(v-0.2)/0.2:.3e}")

print("== ch_ft fit on grid R=6 N=192 for k in 0,1,8,15")
def chft(k, R=6.0, N=192):
    h = 2 * R / N
    xs = (np.arange(N) - N / 2) * h
    X, Y = np.meshgrid(xs, xs, indexing="ij")
    U = np.pi * (X ** 2 + Y ** 2)
    chik = np.exp(-U / 2) * eval_laguerre(k, U)
    # FT via separable phase DFT: hat(m1,m2) = h^2 sum chik * e^{2pi i (xi.x)}
    xi = (np.arange(N) - N / 2) / (2 * R)
    E = np.exp(2j * np.pi * np.outer(xi, xs))
    hat = h * h * (E @ chik @ E.T)
    # sample chi_k on the xi grid, and chihat(z/2): chihat on xi-grid vs chik(xi)... fit chik(xi[i],xi[j]) = c(-1)^k hat at xi/2 -> interpolate hat? instead use relation chihat(zeta)=(-1)^k 2 chi(2 zeta): test fit c: chik(z) = c (-1)^k chihat(z/2): chihat(z/2): z on xs grid -> zeta=z/2 on xs/2 grid: interpolate hat on xi grid at xs/2 points: since xi spacing=1/(2R)=1/12 and xs/2 spacing=h/2=1/16: non-aligned; cheap: use R,N so grids align: take N s.t. h/2 = multiple of 1/(2R): h/2 = R/N; xi spacing 1/(2R): ratio = 2R^2/N: R=6,N=192: 72/192=0.375: not integer. Use direct: compute hat at zeta=xs/2 directly by DFT sum (non-grid freqs fine):
    Zt = xs / 2
    E2 = np.exp(2j * np.pi * np.outer(Zt, xs))
    hat2 = h * h * (E2 @ chik @ E2.T)
    lhs = chik.ravel()
    rhs = ((-1) ** k * hat2).ravel()
    cfit = np.real(np.vdot(rhs, lhs) / np.vdot(rhs, rhs))
    res = np.linalg.norm(lhs - cfit * rhs) / np.linalg.norm(lhs)
    return cfit, res
for k in [0, 1, 8, 15]:
    cf, res = chft(k)
    print(f"  k={k:2d}  c={cf:.8f}  rel-res={res:.2e}")

print("== blow-up order: ||f x_lam g - f*g||_inf ratios, N=64 R=4")
def blowup():
    N, R = 64, 4.0
    h = 2 * R / N
    xs = (np.arange(N) - N / 2) * h
    X, Y = np.meshgrid(xs, xs, indexing="ij")
    Z = (X + 1j * Y)
    f = np.exp(-np.pi * np.abs(Z) ** 2)
    g = np.exp(-2 * np.pi * np.abs(Z) ** 2) * (1 + 0.3 * X)
    Zf = Z.ravel()
    fv, gv = f.ravel(), g.ravel()
    errs = []
    for lam in [0.2, 0.1, 0.05]:
        mx = 0.0
        for i in range(Zf.size):
            zw = Zf[i] - Zf
            # need f at z-w: on grid: index arithmetic -> use matrix approach
            pass
        # vectorized: conv and twisted via index shifts is messy in python; do direct O(N^4) with einsum on phases
        ph = np.exp(1j * np.pi * lam * lam * (np.conj(Zf)[:, None] * Zf[None, :]).imag)
        # f(z-w): matrix F with F[i,j]=f(z_i - z_j): z_i-z_j on shifted grid: compute directly from formula
        D = Zf[:, None] - Zf[None, :]
        FD = np.exp(-np.pi * np.abs(D) ** 2)
        tw = h * h * (FD * ph) @ gv
        co = h * h * FD @ gv
        errs.append(np.max(np.abs(tw - co)))
    print(f"  errs={errs}  ratios={errs[0]/errs[1]:.3f}, {errs[1]/errs[2]:.3f}")
blowup()
