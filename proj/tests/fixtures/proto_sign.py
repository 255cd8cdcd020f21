#!/usr/bin/env python3
# Throwaway prototype #3: twisted-convolution sign vs rho homomorphism; weyl matrix accuracy.
import numpy as np
from scipy.special import eval_laguerre

N, R, M = 96, 4.0, 24
h = 2 * R / N
xs = (np.arange(N) - N / 2) * h
X, Y = np.meshgrid(xs, xs, indexing="ij")
Z = X + 1j * Y

# orthonormal Hermite functions, Folland normalization
def hermites(M, x):
    H = np.zeros((M, x.size))
    H[0] = 2 ** 0.25 * np.exp(-np.pi * x * x)
    if M > 1:
        H[1] = np.sqrt(2.0 / 1.0) * np.sqrt(2 * np.pi) * x * H[0] / np.sqrt(2)  # check below
    # recurrence: h_{k+1} = sqrt(2/(k+1)) * sqrt(2 pi) x h_k - sqrt(k/(k+1)) h_{k-1}
    for k in range(1, M - 1):
        H[k + 1] = np.sqrt(2.0 / (k + 1)) * np.sqrt(2 * np.pi) * x * H[k] - np.sqrt(k / (k + 1.0)) * H[k - 1]
    return H

# h1 via recurrence from h0: h_1 = sqrt(2/1) sqrt(2pi) x h0 (k=0 case, no h_{-1})
H = np.zeros((M, xs.size))
H[0] = 2 ** 0.25 * np.exp(-np.pi * xs * xs)
H[1] = np.sqrt(2.0) * np.sqrt(2 * np.pi) * xs * H[0]
for k in range(1, M - 1):
    H[k + 1] = np.sqrt(2.0 / (k + 1)) * np.sqrt(2 * np.pi) * xs * H[k] - np.sqrt(k / (k + 1.0)) * H[k - 1]
print("hermite orthonormality err:", np.max(np.abs(h * H @ H.T - np.eye(M))))

def weyl_matrix(f):
    # K_f(x_a, y_b) = sum_v f(y_b - x_a + i v) e^{i pi v (x_a+y_b)} h   (u=y-x on grid)
    K = np.zeros((N, N), dtype=complex)
    for a in range(N):
        for b in range(N):
            ui = b - a + N // 2
            if 0 <= ui < N:
                col = f[ui, :]
                K[a, b] = h * np.sum(col * np.exp(1j * np.pi * xs * (xs[a] + xs[b])))
    return h * h * (H @ K @ H.T)

def twisted(f, g, sgn):
    Zf = Z.ravel()
    fv = f.ravel(); gv = g.ravel()
    D = Zf[:, None] - Zf[None, :]
    # need f at z-w: f defined by formula? use samples: z-w on grid only if indices subtract; use formula instead
    return None

# use closed forms for f,g (non-radial, non-commuting)
f2 = lambda z: np.exp(-np.pi * np.abs(z) ** 2) * (1 + 0.5 * z.real)
g2 = lambda z: np.exp(-np.pi * 1.3 * np.abs(z) ** 2) * (1 - 0.4j * z.imag + 0.2 * z.real)
F = f2(Z); G = g2(Z)
A = weyl_matrix(F); Bm = weyl_matrix(G)

def twisted_grid(Ff, Gf, sgn):
    Zf = Z.ravel()
    out = np.zeros(Zf.size, dtype=complex)
    Gv = Gf.ravel()
    for i in range(Zf.size):
        d = Zf[i] - Zf
        ph = np.exp(sgn * 1j * np.pi * (np.conj(Zf[i]) * Zf).imag)
        out[i] = h * h * np.sum(f2(d) * Gv * ph)
    return out.reshape(N, N)

for sgn in (+1, -1):
    T = twisted_grid(F, G, sgn)
    C = weyl_matrix(T)
    err = np.linalg.norm(A @ Bm - C) / (np.linalg.norm(A) * np.linalg.norm(Bm))
    print(f"sign {sgn:+d}: ||rho(f)rho(g)-rho(fxg)||rel = {err:.3e}")

# Plancherel via matrix route for f2: ||rho(f)||_HS vs ||f||_2
hs = np.linalg.norm(A)
l2 = np.sqrt(h * h * np.sum(np.abs(F) ** 2))
print(f"HS={hs:.8f}  L2={l2:.8f}  rel={abs(hs-l2)/l2:.2e}  (M={M})")

# radial: chi_2 -> diag e_2
U = np.pi * (X ** 2 + Y ** 2)
chi2 = np.exp(-U / 2) * eval_laguerre(2, U)
W2 = weyl_matrix(chi2)
d = np.diag(W2).real
print("chi2 diag[0..4]:", np.round(d[:5], 9), " offdiag max:", np.max(np.abs(W2 - np.diag(np.diag(W2)))))
