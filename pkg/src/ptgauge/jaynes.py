"""PT-symmetric Jaynes-Cummings construction on a truncated Fock space.

Ladder operators follow d = (ip + x)/sqrt(2), d^H = (-ip + x)/sqrt(2), so
d|n> = sqrt(n)|n-1> and N = d^H d is diagonal 0..n_max.  Truncation is a
hard cut at n_max: the coupling row out of the top level is dropped and
the resulting error is measured by rebuilding at 1.5 n_max, not assumed.

Tensor ordering is Fock (x) level throughout: kron(fock_op, m_by_m).

The multi-level Hamiltonian is

    H_jc = 2 [ N (x) I_m + sqrt(2) (d^H (x) c + d (x) c^T) + I_F (x) omega ]

with c the strictly upper triangular part of a gauge algebra element a
(a = c - c^T, c^m = 0).  The same physics on the grid is
H_g = (p - A)^2 + V with A = i a and
V(x) = (x^2 - 1) I + 2 (c + c^T) x + a^2 + 2 omega: expanding and using
x = (d + d^H)/sqrt(2), p = -i (d - d^H)/sqrt(2) gives exactly the ladder
form above.  Note the attachment of c to the creation operator; writing
the coupling as d (x) c + d^H (x) c^T instead changes the spectrum
whenever omega is level-asymmetric, and the dual build detects it at
O(1).  The overall sign of a is spectrally irrelevant (conjugation by
the Fock parity diag((-1)^n) flips d and d^H), but the comparison still
reports both conventions a -> s a (s = +-1); see jc_equivalence_check.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cartan import CartanComponents, GaugeAlgebraElement, ThetaSignature, \
    cartan_split
from .linalg import Grid1D, eig, match_spectra
from .schrodinger import ConstantGauge, MatrixPotential, build_and_regauge


@dataclass(frozen=True)
class FockLadder:
    n_max: int

    def __post_init__(self):
        if self.n_max < 1:
            raise ValueError("n_max must be >= 1")

    @property
    def dim(self) -> int:
        return self.n_max + 1

    @property
    def d(self) -> np.ndarray:
        n = np.arange(1, self.dim)
        out = np.zeros((self.dim, self.dim))
        out[n - 1, n] = np.sqrt(n)
        return out

    @property
    def d_dag(self) -> np.ndarray:
        return self.d.T

    @property
    def number(self) -> np.ndarray:
        return self.d_dag @ self.d


@dataclass(frozen=True)
class NilpotentSplit:
    a: np.ndarray
    c: np.ndarray


@dataclass(frozen=True)
class LevelEnergies:
    omega: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.omega, dtype=float)
        object.__setattr__(self, "omega", w)

    @property
    def matrix(self) -> np.ndarray:
        return np.diag(self.omega)


def nilpotent_split(el: GaugeAlgebraElement) -> NilpotentSplit:
    """a = c - c^T with c strictly upper triangular (hence nilpotent)."""
    a = el.matrix
    c = np.triu(a, k=1)
    m = a.shape[0]
    recon = float(np.abs((c - c.T) - a).max())
    if recon > 1e-13 * max(1.0, np.abs(a).max()):
        raise ValueError(f"split reconstruction failed, residual {recon:.2e}")
    return NilpotentSplit(a=a, c=c)


def build_jc(split: NilpotentSplit, omega: LevelEnergies, n_max: int) -> np.ndarray:
    """Assemble H_jc = 2 [N (x) I + sqrt2 (d^H (x) c + d (x) c^T) + I (x) omega]."""
    if n_max < 2:
        raise ValueError("need n_max >= 2")
    m = split.a.shape[0]
    if omega.omega.shape != (m,):
        raise ValueError("omega length must match the algebra dimension")
    fock = FockLadder(n_max)
    eye_f = np.eye(fock.dim)
    H = 2 * (np.kron(fock.number, np.eye(m))
             + np.sqrt(2) * (np.kron(fock.d_dag, split.c)
                             + np.kron(fock.d, split.c.T))
             + np.kron(eye_f, omega.matrix))
    return H


@dataclass(frozen=True)
class JcPtReport:
    residual: float
    passed: bool


def jc_pt_check(H_jc: np.ndarray, sig: ThetaSignature, n_max: int,
                tol: float = 1e-12) -> JcPtReport:
    """Residual of (Pi_F (x) Theta) conj(H) (Pi_F (x) Theta) = H.

    Fock-space parity is realized as Pi_F = diag((-1)^n).
    """
    pi_f = np.diag((-1.0) ** np.arange(n_max + 1))
    S = np.kron(pi_f, sig.theta)
    res = float(np.abs(S @ H_jc.conj() @ S - H_jc).max())
    return JcPtReport(residual=res, passed=res <= tol * max(1.0, np.abs(H_jc).max()))


def _flip_element(el: GaugeAlgebraElement, s: int) -> GaugeAlgebraElement:
    return GaugeAlgebraElement(sig=el.sig, u=s * el.u, v=s * el.v, w=s * el.w)


@dataclass(frozen=True)
class JcEquivalenceReport:
    sign_convention: int         # s in {+1, -1} giving the better match
    max_dev: float               # lowest-K deviation under that convention
    max_dev_other: float
    truncation_shift: float      # change of retained levels at 1.5 n_max
    grid_eigenvalues: np.ndarray
    fock_eigenvalues: np.ndarray


def jc_equivalence_check(el: GaugeAlgebraElement, omega: LevelEnergies,
                         grid: Grid1D, n_max: int,
                         n_compare: int = 6) -> JcEquivalenceReport:
    """Cross-validate the grid build of (p - A)^2 + V against the Fock build."""
    box = grid.nodes[-1]
    needed = np.sqrt(2 * n_max) + 4
    if box < needed:
        raise ValueError(
            f"grid box half-width {box:.2f} too small to resolve n_max={n_max} "
            f"oscillator states (need >= {needed:.2f})")
    split = nilpotent_split(el)
    a = split.a
    c = split.c
    m = a.shape[0]
    a2 = a @ a
    cc = c + c.T

    def V(x):
        return ((x**2 - 1) * np.eye(m) + 2 * cc * x + a2 + 2 * omega.matrix)

    res = build_and_regauge(ConstantGauge(A=1j * a), MatrixPotential(m=m, V=V),
                            grid)
    k = min(n_compare, n_max // 2)
    e_grid = eig(res.H_g.matrix).eigenvalues
    low_grid = e_grid[np.argsort(e_grid.real)[:k]]

    devs = {}
    fock_low = {}
    for s in (+1, -1):
        split_s = nilpotent_split(_flip_element(el, s))
        H_jc = build_jc(split_s, omega, n_max)
        e_f = eig(H_jc).eigenvalues
        low_f = e_f[np.argsort(e_f.real)[:k]]
        devs[s] = float(match_spectra(low_grid, low_f).max())
        fock_low[s] = low_f
    s_best = +1 if devs[+1] <= devs[-1] else -1

    # truncation sanity at the matching convention
    n_big = int(np.ceil(1.5 * n_max))
    H_big = build_jc(nilpotent_split(_flip_element(el, s_best)), omega, n_big)
    e_big = eig(H_big).eigenvalues
    low_big = e_big[np.argsort(e_big.real)[:k]]
    trunc = float(match_spectra(fock_low[s_best], low_big).max())

    return JcEquivalenceReport(
        sign_convention=s_best, max_dev=devs[s_best], max_dev_other=devs[-s_best],
        truncation_shift=trunc,
        grid_eigenvalues=low_grid, fock_eigenvalues=fock_low[s_best],
    )
