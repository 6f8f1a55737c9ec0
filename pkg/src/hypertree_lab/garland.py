"""Weighted Laplacians of pure complexes and local spectral certificates.

The weight of a face is the number of top-dimensional faces above it,
scaled by a factorial of the codimension so that the weight of a face
equals the sum of the weights of the facets of any face directly above it.
Kernels of the resulting symmetrized Laplacians match reduced cohomology,
so strict positivity of the right eigenvalue in every small link forces
rational acyclicity one degree below the top.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .concurrency import parallel_map
from .errors import (
    InvariantViolation,
    NotPure,
    ParameterOutOfRange,
    TooLarge,
)
from .fields import RATIONALS
from .homology import betti, boundary_matrix
from .simplexes import (
    Complex,
    Simplex,
    SkeletonComplex,
    all_faces,
    face_count,
    iter_faces,
    link,
    subfaces,
)

SIZE_LIMIT = 5000


def _top_faces(X: Complex) -> list[Simplex]:
    return sorted(iter_faces(X, X.dim))


def check_pure(X: Complex) -> None:
    """Raise NotPure unless every face lies under a top-dimensional face."""
    if X.is_void or X.dim == -1:
        raise NotPure("complex has no vertices")
    covered: set[Simplex] = set()
    for sigma in _top_faces(X):
        covered.update(subfaces(sigma))
    for f in all_faces(X):
        if f not in covered:
            raise NotPure(f"face {f} is not under any top-dimensional face")


def garland_weights(X: Complex) -> dict[Simplex, int]:
    """Face weights: (codimension)! times the number of top cofaces.

    The empty simplex gets (d+1)! times the number of top faces, which is
    the same rule applied in degree -1.  Requires a pure complex.
    """
    check_pure(X)
    d = X.dim
    counts: dict[Simplex, int] = {}
    for sigma in _top_faces(X):
        for f in subfaces(sigma):
            counts[f] = counts.get(f, 0) + 1
    return {f: math.factorial(d - (len(f) - 1)) * c for f, c in counts.items()}


@dataclass(frozen=True, eq=False)
class WeightedLaplacian:
    j: int
    faces: tuple[Simplex, ...]
    matrix: np.ndarray


def weighted_laplacian(X: Complex, j: int) -> WeightedLaplacian:
    """Symmetrized degree-j Laplacian, augmented in degree 0.

    Down part: conjugate the boundary pairing through the square roots of
    the weights; for j = 0 the row below is the empty simplex, so the
    augmentation is built in.  Up part present whenever j < dim.
    """
    if not 0 <= j <= X.dim:
        raise ParameterOutOfRange(f"no Laplacian in degree {j} for dim {X.dim}")
    weights = garland_weights(X)
    n_j = face_count(X, j)
    if n_j > SIZE_LIMIT:
        raise TooLarge(f"{n_j} faces in degree {j} exceeds limit {SIZE_LIMIT}")

    Bj = boundary_matrix(X, j)
    D = np.zeros((Bj.n_rows, Bj.n_cols))
    for (r, c), v in Bj.entries.items():
        D[r, c] = v
    w_j = np.array([weights[f] for f in Bj.col_faces], dtype=float)
    w_below = np.array([weights[f] for f in Bj.row_faces], dtype=float)
    sqrt_wj = np.sqrt(w_j)

    E = D * sqrt_wj[None, :]
    L = E.T @ (E / w_below[:, None])

    if face_count(X, j + 1) > 0:
        Bup = boundary_matrix(X, j + 1)
        U = np.zeros((Bup.n_rows, Bup.n_cols))
        for (r, c), v in Bup.entries.items():
            U[r, c] = v
        w_up = np.array([weights[f] for f in Bup.col_faces], dtype=float)
        F = (U * np.sqrt(w_up)[None, :]) / sqrt_wj[:, None]
        L = L + F @ F.T

    L = (L + L.T) / 2.0
    return WeightedLaplacian(j=j, faces=Bj.col_faces, matrix=L)


def jacobi_eigenvalues(A: np.ndarray, tol: float = 1e-12,
                       max_sweeps: int = 60) -> np.ndarray:
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotations."""
    A = np.array(A, dtype=float)
    n = A.shape[0]
    if n == 0:
        return np.zeros(0)
    scale = max(1.0, float(np.sqrt(np.sum(A * A))))
    for _ in range(max_sweeps):
        off = math.sqrt(max(0.0, float(np.sum(A * A) - np.sum(np.diag(A) ** 2))))
        if off <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if abs(apq) <= 1e-300:
                    continue
                theta = (A[q, q] - A[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rowp = A[p, :].copy()
                rowq = A[q, :].copy()
                A[p, :] = c * rowp - s * rowq
                A[q, :] = s * rowp + c * rowq
                colp = A[:, p].copy()
                colq = A[:, q].copy()
                A[:, p] = c * colp - s * colq
                A[:, q] = s * colp + c * colq
                A[p, q] = A[q, p] = 0.0
    return np.sort(np.diag(A))


def laplacian_min_eigenvalue(X: Complex, j: int) -> float:
    """Smallest eigenvalue of the symmetrized degree-j Laplacian."""
    L = weighted_laplacian(X, j)
    eigs = jacobi_eigenvalues(L.matrix)
    if eigs.size == 0:
        return math.inf
    mu = float(eigs[0])
    if mu < -1e-9:
        raise InvariantViolation(f"Laplacian not positive semidefinite: {mu}")
    return mu


GUARD_BAND = 1e-7


@dataclass(frozen=True)
class GarlandReport:
    """Spectral premise over all degree-ell links, plus the global conclusion."""

    n: int
    k: int
    ell: int
    threshold: Fraction
    entries: tuple[tuple[Simplex, float], ...]
    min_mu: float
    premise: str  # holds | fails | inconclusive
    betti_q: int  # rational Betti number one degree below the top

    @property
    def conclusion(self) -> bool:
        return self.betti_q == 0


def garland_check(X: SkeletonComplex, ell: int,
                  threads: Optional[int] = None) -> GarlandReport:
    """Check the local spectral premise in degree ell and report the verdict.

    Premise: every degree-ell face has a link whose Laplacian one degree
    below its own top dimension has smallest eigenvalue above
    (ell+1)/k.  Verdicts are numeric, so a guard band separates a clear
    pass from a margin too thin to trust.  When the premise holds, the
    rational Betti number of X in degree k-1 must vanish; that implication
    is asserted, not assumed.
    """
    k = X.k
    if not -1 <= ell <= k - 2:
        raise ParameterOutOfRange(f"degree {ell} must lie in [-1, {k - 2}]")
    check_pure(X)
    j_link = k - ell - 2
    taus = sorted(iter_faces(X, ell))

    def one(tau: Simplex) -> tuple[Simplex, float]:
        return tau, laplacian_min_eigenvalue(link(X, tau), j_link)

    entries = tuple(parallel_map(one, taus, threads))
    min_mu = min((mu for _, mu in entries), default=math.inf)
    thr = Fraction(ell + 1, k)
    thr_f = float(thr)
    if min_mu > thr_f + GUARD_BAND:
        premise = "holds"
    elif min_mu < thr_f - GUARD_BAND:
        premise = "fails"
    else:
        premise = "inconclusive"

    b = betti(X, k - 1, RATIONALS)
    if premise == "holds" and b != 0:
        raise InvariantViolation(
            f"spectral premise held but degree-{k-1} rational Betti number is {b}")
    return GarlandReport(
        n=X.n, k=k, ell=ell, threshold=thr, entries=entries,
        min_mu=min_mu, premise=premise, betti_q=b,
    )
