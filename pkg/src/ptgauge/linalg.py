"""Dense complex linear algebra and 1D staggered-grid operators.

Conventions used throughout the package
---------------------------------------
Grid: 2N nodes x_j = (j + 1/2) h for j = -N .. N-1.  The grid is symmetric
under x -> -x and never contains x = 0, so sign(x_j) is well defined at
every node and the parity operator is an exact index-reversal permutation.

Difference stencils (Dirichlet closure, values outside the box are zero):
  momentum          p f_j = -i (f_{j+1} - f_{j-1}) / (2h)
  second_derivative (-d^2/dx^2) f_j = (2 f_j - f_{j+1} - f_{j-1}) / h^2

Block operators are Kronecker products  grid_part (x) I_m  with the grid
index slowest, i.e. node j occupies rows j*m .. j*m+m-1.

Eigenvalues are always returned sorted by (real part, imaginary part) so
that repeated runs and CSV exports are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np
import scipy.linalg


def _as_square_matrix(M) -> np.ndarray:
    M = np.asarray(M, dtype=complex)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise ValueError("matrix contains NaN/Inf entries")
    return M


@dataclass(frozen=True)
class SpectrumResult:
    """Eigenvalues in deterministic order, optional eigenvectors, residual."""

    eigenvalues: np.ndarray
    eigenvectors: Optional[np.ndarray]
    residual_norm: float


@dataclass(frozen=True)
class Grid1D:
    """Symmetric staggered grid with 2*half_count nodes, spacing h."""

    half_count: int
    spacing: float

    def __post_init__(self):
        if self.half_count < 1:
            raise ValueError("half_count must be positive")
        if not self.spacing > 0:
            raise ValueError("spacing must be positive")

    @property
    def size(self) -> int:
        return 2 * self.half_count

    @property
    def nodes(self) -> np.ndarray:
        j = np.arange(-self.half_count, self.half_count)
        return (j + 0.5) * self.spacing

    @classmethod
    def from_box(cls, half_width: float, spacing: float) -> "Grid1D":
        """Grid covering roughly [-half_width, half_width]."""
        return cls(half_count=int(round(half_width / spacing)), spacing=spacing)


@dataclass(frozen=True)
class GridOperator:
    grid: Grid1D
    block_dim: int
    matrix: np.ndarray

    def __post_init__(self):
        n = self.grid.size * self.block_dim
        if self.matrix.shape != (n, n):
            raise ValueError(
                f"matrix shape {self.matrix.shape} does not match grid "
                f"({self.grid.size} nodes, block_dim {self.block_dim})"
            )


def eig(M, want_vectors: bool = False) -> SpectrumResult:
    """Eigen-decomposition with deterministic (real, imag) ordering.

    Raises scipy/numpy LinAlgError on QR-iteration non-convergence; the
    message then carries the partial diagnostics LAPACK provides.
    """
    M = _as_square_matrix(M)
    if want_vectors:
        vals, vecs = np.linalg.eig(M)
    else:
        vals = np.linalg.eigvals(M)
        vecs = None
    order = np.lexsort((vals.imag, vals.real))
    vals = vals[order]
    residual = 0.0
    if vecs is not None:
        vecs = vecs[:, order]
        scale = np.linalg.norm(M, 2)
        if scale > 0:
            res = np.linalg.norm(M @ vecs - vecs * vals[None, :], axis=0)
            residual = float(np.max(res) / scale)
    return SpectrumResult(eigenvalues=vals, eigenvectors=vecs, residual_norm=residual)


def expm(M) -> np.ndarray:
    """Matrix exponential (scaling-and-squaring Pade)."""
    M = _as_square_matrix(M)
    E = scipy.linalg.expm(M)
    if not np.all(np.isfinite(E)):
        raise OverflowError("matrix exponential overflowed (extreme norm input)")
    return E


def _momentum_matrix(n: int, h: float) -> np.ndarray:
    D = np.zeros((n, n))
    idx = np.arange(n - 1)
    D[idx, idx + 1] = 1.0 / (2 * h)
    D[idx + 1, idx] = -1.0 / (2 * h)
    return -1j * D


def _second_derivative_matrix(n: int, h: float) -> np.ndarray:
    L = np.zeros((n, n))
    idx = np.arange(n)
    L[idx, idx] = 2.0 / h**2
    idx = np.arange(n - 1)
    L[idx, idx + 1] = -1.0 / h**2
    L[idx + 1, idx] = -1.0 / h**2
    return L


def grid_operator(
    grid: Grid1D,
    kind: str,
    block_dim: int = 1,
    func: Optional[Callable[[np.ndarray], np.ndarray]] = None,
) -> GridOperator:
    """Assemble a discrete operator on the staggered grid.

    kind is one of 'momentum', 'parity', 'sign', 'position', 'multiply',
    'second_derivative'.  'multiply' requires func, evaluated on the nodes.
    """
    n = grid.size
    h = grid.spacing
    x = grid.nodes
    if kind == "momentum":
        core = _momentum_matrix(n, h)
    elif kind == "second_derivative":
        core = _second_derivative_matrix(n, h).astype(complex)
    elif kind == "parity":
        core = np.eye(n)[::-1].astype(complex)
    elif kind == "sign":
        core = np.diag(np.sign(x)).astype(complex)
    elif kind == "position":
        core = np.diag(x).astype(complex)
    elif kind == "multiply":
        if func is None:
            raise ValueError("kind='multiply' requires func")
        vals = np.asarray([func(xi) for xi in x], dtype=complex)
        core = np.diag(vals)
    else:
        raise ValueError(f"unknown operator kind {kind!r}")
    if block_dim > 1:
        core = np.kron(core, np.eye(block_dim))
    return GridOperator(grid=grid, block_dim=block_dim, matrix=core)


def indefinite_inner(f, g, J: GridOperator, weight: GridOperator) -> complex:
    """Quadrature of the indefinite form [f, g] = (f, W J g).

    Returns h * sum_j w_j (J g)_j conj(f_j).  weight must be diagonal with
    positive entries.
    """
    f = np.asarray(f, dtype=complex)
    g = np.asarray(g, dtype=complex)
    w = np.diagonal(weight.matrix)
    if np.any(np.abs(weight.matrix - np.diag(w)) > 0):
        raise ValueError("weight operator must be diagonal")
    if np.any(w.real <= 0) or np.any(np.abs(w.imag) > 0):
        raise ValueError("weight entries must be real positive")
    if f.shape != g.shape or f.shape[0] != J.matrix.shape[0]:
        raise ValueError("dimension mismatch between vectors and operators")
    return complex(J.grid.spacing * np.sum(w * (J.matrix @ g) * np.conj(f)))


@dataclass(frozen=True)
class PairingReport:
    classification: str  # 'all_real' | 'conjugate_paired' | 'unpaired'
    real_values: np.ndarray
    pairs: list
    unpaired: np.ndarray = field(default_factory=lambda: np.array([]))


def pairing_check(eigenvalues, tol: float) -> PairingReport:
    """Classify a spectrum as real / conjugate-paired / PT-violating."""
    if not tol > 0:
        raise ValueError("tol must be positive")
    vals = np.asarray(eigenvalues, dtype=complex)
    real_mask = np.abs(vals.imag) <= tol
    real_vals = vals[real_mask]
    rest = list(vals[~real_mask])
    pairs = []
    unpaired = []
    while rest:
        lam = rest.pop(0)
        dists = [abs(lam - np.conj(mu)) for mu in rest]
        if dists and min(dists) <= tol:
            k = int(np.argmin(dists))
            pairs.append((lam, rest.pop(k)))
        else:
            unpaired.append(lam)
    if unpaired:
        cls = "unpaired"
    elif pairs:
        cls = "conjugate_paired"
    else:
        cls = "all_real"
    return PairingReport(
        classification=cls,
        real_values=real_vals,
        pairs=pairs,
        unpaired=np.asarray(unpaired),
    )


def match_spectra(a, b) -> np.ndarray:
    """Greedy nearest-neighbor matching distance between two spectra.

    Both sets are sorted by (real, imag); each element of a is matched to
    the closest not-yet-used element of b.  Adequate at desk scale.
    """
    a = np.sort_complex(np.asarray(a, dtype=complex))
    b = list(np.sort_complex(np.asarray(b, dtype=complex)))
    if len(a) != len(b):
        raise ValueError("spectra must have equal length")
    dists = np.empty(len(a))
    for i, lam in enumerate(a):
        k = int(np.argmin([abs(lam - mu) for mu in b]))
        dists[i] = abs(lam - b.pop(k))
    return dists


def operator_norm_estimate(M: np.ndarray, iters: int = 30, seed: int = 0) -> float:
    """2-norm estimate by power iteration on M^H M (cheap, deterministic)."""
    rng = np.random.default_rng(seed)
    v = rng.standard_normal(M.shape[0]) + 0j
    v /= np.linalg.norm(v)
    n = 0.0
    for _ in range(iters):
        w = M.conj().T @ (M @ v)
        n = np.linalg.norm(w)
        if n == 0:
            return 0.0
        v = w / n
    return float(np.sqrt(n))
