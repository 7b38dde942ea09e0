"""Gauge algebra g_Theta, its Cartan split, LTS checks, group exponentials.

Theta is fixed to the signature matrix diag(I_p, -I_q); a general real
symmetric involution can be brought to this form by an orthogonal
congruence, which callers are expected to apply first.

Elements are block matrices

    a = [[ i u ,  v  ],      u, w real antisymmetric,  v real p x q,
         [-v^T , i w ]]

which satisfy a = -a^T and Theta a^H Theta = a.  The split into the
compact part b (real, off-diagonal blocks +-v) and the noncompact part
c = i diag(u, w) is the Cartan decomposition of this set; the set closes
under the double bracket [a1, [a2, a3]] but not under the single bracket.

Closed-form exponentials:
  exp(b x): block cosine/sine form through the SVD of v, with the
            sin(s x)/s spectral function switching to its series limit x
            below a 1e-8 singular-value threshold.
  exp(c x): block-diagonal Hermitian exponential diag(e^{iux}, e^{iwx}).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import expm


@dataclass(frozen=True)
class ThetaSignature:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 1 or self.q < 0:
            raise ValueError("need p >= 1, q >= 0")

    @property
    def m(self) -> int:
        return self.p + self.q

    @property
    def theta(self) -> np.ndarray:
        return np.diag(np.concatenate([np.ones(self.p), -np.ones(self.q)]))


def _check_antisymmetric_real(M, name, n):
    M = np.asarray(M, dtype=float)
    if M.shape != (n, n):
        raise ValueError(f"{name} must be {n}x{n} real")
    if n and np.abs(M + M.T).max() > 1e-13 * max(1.0, np.abs(M).max()):
        raise ValueError(f"{name} must be antisymmetric")
    return M


@dataclass(frozen=True)
class GaugeAlgebraElement:
    sig: ThetaSignature
    u: np.ndarray
    v: np.ndarray
    w: np.ndarray

    @property
    def matrix(self) -> np.ndarray:
        p, q = self.sig.p, self.sig.q
        a = np.zeros((p + q, p + q), dtype=complex)
        a[:p, :p] = 1j * self.u
        a[:p, p:] = self.v
        a[p:, :p] = -self.v.T
        a[p:, p:] = 1j * self.w
        return a

    @property
    def gauge_potential(self) -> np.ndarray:
        """A = i a, the constant non-Abelian gauge potential."""
        return 1j * self.matrix


@dataclass(frozen=True)
class CartanComponents:
    b: np.ndarray   # compact part: real, off-diagonal blocks
    c: np.ndarray   # noncompact part: i * diag(u, w), Hermitian


def make_element(sig: ThetaSignature, u, v, w) -> GaugeAlgebraElement:
    p, q = sig.p, sig.q
    u = _check_antisymmetric_real(u, "u", p)
    w = _check_antisymmetric_real(w, "w", q)
    v = np.asarray(v, dtype=float).reshape(p, q)
    el = GaugeAlgebraElement(sig=sig, u=u, v=v, w=w)
    a = el.matrix
    th = sig.theta
    r1 = np.abs(a + a.T).max()
    r2 = np.abs(th @ a.conj().T @ th - a).max()
    scale = max(1.0, np.abs(a).max())
    if r1 > 1e-13 * scale or r2 > 1e-13 * scale:
        raise ValueError(f"assembled element violates g_Theta conditions "
                         f"(residuals {r1:.2e}, {r2:.2e})")
    return el


def random_element(sig: ThetaSignature, rng: np.random.Generator,
                   scale: float = 1.0) -> GaugeAlgebraElement:
    p, q = sig.p, sig.q
    u = rng.standard_normal((p, p)) * scale
    w = rng.standard_normal((q, q)) * scale
    v = rng.standard_normal((p, q)) * scale
    return make_element(sig, (u - u.T) / 2, v, (w - w.T) / 2)


def kappa(a, sig: ThetaSignature) -> np.ndarray:
    """The algebra involution a -> -Theta a^H Theta."""
    a = np.asarray(a, dtype=complex)
    th = sig.theta
    if a.shape != th.shape:
        raise ValueError("dimension mismatch with signature")
    return -th @ a.conj().T @ th


def membership_residual(X, sig: ThetaSignature) -> float:
    """Distance of X from g_Theta: max of the two defining residuals."""
    X = np.asarray(X, dtype=complex)
    th = sig.theta
    return float(max(np.abs(X + X.T).max(),
                     np.abs(th @ X.conj().T @ th - X).max()))


def cartan_split(a: GaugeAlgebraElement) -> CartanComponents:
    p, q = a.sig.p, a.sig.q
    m = p + q
    b = np.zeros((m, m), dtype=complex)
    b[:p, p:] = a.v
    b[p:, :p] = -a.v.T
    c = np.zeros((m, m), dtype=complex)
    c[:p, :p] = 1j * a.u
    c[p:, p:] = 1j * a.w
    return CartanComponents(b=b, c=c)


@dataclass(frozen=True)
class LtsReport:
    closure_residual: float
    binary_escape: float
    scale: float


def lts_check(a1: GaugeAlgebraElement, a2: GaugeAlgebraElement,
              a3: GaugeAlgebraElement) -> LtsReport:
    """Ternary closure [a1,[a2,a3]] in g_Theta vs binary escape of [a1,a2]."""
    if not (a1.sig == a2.sig == a3.sig):
        raise ValueError("signature mismatch")
    sig = a1.sig
    A1, A2, A3 = a1.matrix, a2.matrix, a3.matrix
    inner = A2 @ A3 - A3 @ A2
    triple = A1 @ inner - inner @ A1
    binary = A1 @ A2 - A2 @ A1
    scale = max(1.0, float(np.abs(A1).max() * np.abs(A2).max() * np.abs(A3).max()))
    return LtsReport(
        closure_residual=membership_residual(triple, sig),
        binary_escape=membership_residual(binary, sig),
        scale=scale,
    )


@dataclass(frozen=True)
class WickReport:
    su_pq_residual: float
    antisymmetry_residual: float
    compact_block_residual: float
    noncompact_block_residual: float
    passed: bool


def wick_check(a: GaugeAlgebraElement, tol: float = 1e-13) -> WickReport:
    """Membership of f = -i a in so(m,C) intersect su(p,q) and block placement.

    -i b must sit in the off-diagonal (coset) block of su(p,q) and -i c in
    the block-diagonal subalgebra part.
    """
    sig = a.sig
    th = sig.theta
    p = sig.p
    f = -1j * a.matrix
    r_su = float(np.abs(th @ f.conj().T @ th + f).max())
    r_as = float(np.abs(f + f.T).max())
    comp = cartan_split(a)
    fb = -1j * comp.b
    fc = -1j * comp.c
    r_q = float(max(np.abs(fb[:p, :p]).max(initial=0.0),
                    np.abs(fb[p:, p:]).max(initial=0.0)))
    r_l = float(max(np.abs(fc[:p, p:]).max(initial=0.0),
                    np.abs(fc[p:, :p]).max(initial=0.0)))
    scale = max(1.0, float(np.abs(f).max()))
    ok = max(r_su, r_as, r_q, r_l) <= tol * scale
    return WickReport(su_pq_residual=r_su, antisymmetry_residual=r_as,
                      compact_block_residual=r_q, noncompact_block_residual=r_l,
                      passed=ok)


_SING_TOL = 1e-8  # below this the sin(s x)/s spectral function uses its limit x


def exp_compact(comp: CartanComponents, sig: ThetaSignature, x: float) -> np.ndarray:
    """Closed-form exp(b x) for b in the compact (off-diagonal) part."""
    p, q = sig.p, sig.q
    v = comp.b[:p, p:].real
    if q == 0 or p == 0:
        return np.eye(sig.m)
    W, s, Zt = np.linalg.svd(v)        # v = W diag(s) Zt, W pxp, Zt qxq slices
    s_full_p = np.zeros(p)
    s_full_q = np.zeros(q)
    k = min(p, q)
    s_full_p[:k] = s
    s_full_q[:k] = s
    Z = Zt.T

    def sinc_s(s_arr):
        out = np.empty_like(s_arr)
        small = s_arr < _SING_TOL
        out[small] = x
        out[~small] = np.sin(s_arr[~small] * x) / s_arr[~small]
        return out

    cos_p = W @ np.diag(np.cos(s_full_p * x)) @ W.T
    cos_q = Z @ np.diag(np.cos(s_full_q * x)) @ Z.T
    sin_over = Z @ np.diag(sinc_s(s_full_q)) @ Z.T
    U = np.zeros((sig.m, sig.m))
    U[:p, :p] = cos_p
    U[:p, p:] = v @ sin_over
    U[p:, :p] = -sin_over @ v.T
    U[p:, p:] = cos_q
    return U


def exp_noncompact(comp: CartanComponents, sig: ThetaSignature, x: float) -> np.ndarray:
    """Block-diagonal exp(c x) = diag(e^{iux}, e^{iwx}), Hermitian positive."""
    p = sig.p
    U = np.eye(sig.m, dtype=complex)
    if p > 0:
        U[:p, :p] = expm(comp.c[:p, :p] * x)
    if sig.q > 0:
        U[p:, p:] = expm(comp.c[p:, p:] * x)
    return U


@dataclass(frozen=True)
class PolarFactors:
    U_k: np.ndarray
    U_p: np.ndarray
    log_p: np.ndarray
    residuals: dict


def group_polar(U, sig: ThetaSignature) -> PolarFactors:
    """Polar split U = U_k U_p with U_p = (U^H U)^{1/2}; validates membership."""
    U = np.asarray(U, dtype=complex)
    G = U.conj().T @ U
    vals, vecs = np.linalg.eigh(G)
    if vals.min() <= 0:
        raise np.linalg.LinAlgError("U^H U is singular; no polar factorization")
    U_p = vecs @ np.diag(np.sqrt(vals)) @ vecs.conj().T
    U_k = U @ (vecs @ np.diag(1 / np.sqrt(vals)) @ vecs.conj().T)
    log_p = vecs @ np.diag(0.5 * np.log(vals)) @ vecs.conj().T
    p = sig.p
    # log_p must be i * real-antisymmetric, block-diagonal in the signature
    lp = -1j * log_p
    residuals = {
        "U_k_unitary": float(np.abs(U_k.conj().T @ U_k - np.eye(sig.m)).max()),
        "U_k_real": float(np.abs(U_k.imag).max()),
        "U_p_hermitian": float(np.abs(U_p - U_p.conj().T).max()),
        "log_p_offblock": float(max(np.abs(log_p[:p, p:]).max(initial=0.0),
                                    np.abs(log_p[p:, :p]).max(initial=0.0))),
        "log_p_structure": float(max(np.abs(lp.imag).max(),
                                     np.abs(lp + lp.T).max())),
    }
    return PolarFactors(U_k=U_k, U_p=U_p, log_p=log_p, residuals=residuals)


@dataclass(frozen=True)
class ParityRelationsReport:
    compact_residual: float
    noncompact_residual: float
    metric_residual: float

    @property
    def max_residual(self) -> float:
        return max(self.compact_residual, self.noncompact_residual,
                   self.metric_residual)


def parity_relations_check(a: GaugeAlgebraElement, x: float) -> ParityRelationsReport:
    """Constant-matrix content of the reversed parity relations and eta = P.

    Checks Theta U_k(-x) Theta = U_k(x), Theta U_p(-x) Theta = U_p(x)^{-1}
    and U(x)^H Theta U(-x) = Theta with U = U_k U_p from the split parts.
    """
    sig = a.sig
    th = sig.theta
    comp = cartan_split(a)
    Uk_p, Uk_m = exp_compact(comp, sig, x), exp_compact(comp, sig, -x)
    Up_p, Up_m = exp_noncompact(comp, sig, x), exp_noncompact(comp, sig, -x)
    r_k = float(np.abs(th @ Uk_m @ th - Uk_p).max())
    r_p = float(np.abs(th @ Up_m @ th - np.linalg.inv(Up_p)).max())
    U_pos = Uk_p @ Up_p
    U_neg = Uk_m @ Up_m
    r_eta = float(np.abs(U_pos.conj().T @ th @ U_neg - th).max())
    return ParityRelationsReport(compact_residual=r_k, noncompact_residual=r_p,
                                 metric_residual=r_eta)
