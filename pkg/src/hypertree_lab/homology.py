"""Boundary matrices, reduced Betti numbers, and hypertree testing.

All homology here is reduced: the chain complex is augmented, so the empty
simplex spans a one-dimensional chain group in degree -1 and the complex
whose only face is the empty simplex has a single unit of homology there.
A nonvoid complex therefore has Betti number 0 in degree -1 as soon as it
has a vertex.

Ranks of boundary maps whose source level is a complete layer of the
simplex on the ground set are computed once per (vertex count, degree,
characteristic) and memoized; the elimination still runs honestly the
first time, nothing is looked up from a closed form.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Optional

from .errors import InvariantViolation, NotSandwiched
from .fields import FieldSpec
from .linalg import IncrementalSpan, kernel_basis, rank_by_columns, rank_by_rows
from .simplexes import (
    Complex,
    Simplex,
    SkeletonComplex,
    face_count,
    iter_faces,
)


@dataclass(frozen=True, eq=False)
class SparseMatrix:
    """Sparse integer matrix with simplex labels on both axes."""

    n_rows: int
    n_cols: int
    entries: dict[tuple[int, int], int]
    row_faces: tuple[Simplex, ...]
    col_faces: tuple[Simplex, ...]


def boundary_matrix(X: Complex, j: int) -> SparseMatrix:
    """The degree-j boundary map; rows are (j-1)-faces, columns j-faces.

    Signs alternate with the position of the dropped vertex.  In degree 0
    the single row is the empty simplex and every entry is +1.
    """
    rows = tuple(iter_faces(X, j - 1))
    cols = tuple(iter_faces(X, j))
    row_index = {f: i for i, f in enumerate(rows)}
    entries: dict[tuple[int, int], int] = {}
    for c, sigma in enumerate(cols):
        for i in range(len(sigma)):
            face = sigma[:i] + sigma[i + 1:]
            entries[(row_index[face], c)] = -1 if i % 2 else 1
    return SparseMatrix(len(rows), len(cols), entries, rows, cols)


def rank(M: SparseMatrix, field: FieldSpec, method: str = "row") -> int:
    if method == "row":
        return rank_by_rows(M.entries, M.n_rows, M.n_cols, field.p)
    if method == "column":
        return rank_by_columns(M.entries, M.n_rows, M.n_cols, field.p)
    raise ValueError(f"unknown rank method {method!r}")


@lru_cache(maxsize=None)
def full_boundary_rank(g: int, j: int, p: Optional[int]) -> int:
    """Rank of the degree-j boundary map of the complete simplex on g vertices."""
    if j < 0 or j > g - 1:
        return 0
    rows = list(combinations(range(g), j))
    cols = list(combinations(range(g), j + 1))
    row_index = {f: i for i, f in enumerate(rows)}
    entries: dict[tuple[int, int], int] = {}
    for c, sigma in enumerate(cols):
        for i in range(len(sigma)):
            entries[(row_index[sigma[:i] + sigma[i + 1:]], c)] = -1 if i % 2 else 1
    return rank_by_rows(entries, len(rows), len(cols), p)


@lru_cache(maxsize=4096)
def _rank_cached(X: Complex, j: int, p: Optional[int]) -> int:
    g = X.n
    if face_count(X, j) == comb(g, j + 1):
        return full_boundary_rank(g, j, p)
    M = boundary_matrix(X, j)
    return rank_by_rows(M.entries, M.n_rows, M.n_cols, p)


def boundary_rank(X: Complex, j: int, field: FieldSpec) -> int:
    """Rank of the degree-j boundary map of X over the given field."""
    if X.is_void or j < 0 or j > X.dim:
        return 0
    return _rank_cached(X, j, field.p)


def betti(X: Complex, j: int, field: FieldSpec) -> int:
    """Reduced Betti number of X in degree j."""
    if X.is_void or j < -1 or j > X.dim:
        return 0
    f_j = face_count(X, j) if j >= 0 else 1
    b = f_j - boundary_rank(X, j, field) - boundary_rank(X, j + 1, field)
    if b < 0:
        raise InvariantViolation(f"negative Betti number {b} in degree {j}")
    return b


def betti_table(X: Complex, field: FieldSpec) -> dict[int, int]:
    """Reduced Betti numbers in every degree from -1 up to dim."""
    if X.is_void:
        return {}
    out = {}
    for j in range(-1, X.dim + 1):
        out[j] = betti(X, j, field)
    return out


def cycle_basis(X: Complex, j: int, field: FieldSpec) -> list[dict[Simplex, object]]:
    """Chains representing a basis of degree-j homology.

    Kernel vectors of the degree-j boundary map are filtered against the
    image of the next boundary map: a representative is kept exactly when
    it enlarges the span of that image plus the representatives already
    accepted.  The number kept must equal the Betti number.
    """
    if X.is_void or j < -1 or j > X.dim:
        return []
    p = field.p
    Mj = boundary_matrix(X, j)
    kern = kernel_basis(Mj.entries, Mj.n_rows, Mj.n_cols, p)

    span = IncrementalSpan(p)
    if j + 1 <= X.dim:
        Mup = boundary_matrix(X, j + 1)
        # rows of the upper map and columns of Mj list the j-faces in the
        # same lexicographic order, so indices line up
        cols_up: dict[int, dict[int, int]] = {}
        for (i, c), v in Mup.entries.items():
            cols_up.setdefault(c, {})[i] = v
        for c in range(Mup.n_cols):
            vec = cols_up.get(c)
            if vec:
                span.add(vec)

    reps: list[dict[Simplex, object]] = []
    for vec in kern:
        if span.add(vec):
            reps.append({Mj.col_faces[t]: coef for t, coef in sorted(vec.items())})
    expected = betti(X, j, field)
    if len(reps) != expected:
        raise InvariantViolation(
            f"cycle basis size {len(reps)} != Betti number {expected} in degree {j}")
    return reps


@dataclass(frozen=True)
class HypertreeCheck:
    """Outcome of testing whether a complex is an r-hypertree."""

    r: int
    field_name: str
    face_count_ok: bool
    tb_below: int
    tb_top: int

    @property
    def is_hypertree(self) -> bool:
        return self.tb_below == 0 and self.tb_top == 0

    def __bool__(self) -> bool:
        return self.is_hypertree


def is_hypertree(Y: Complex, r: int, field: FieldSpec) -> HypertreeCheck:
    """Test for an r-hypertree: full skeleton below, acyclic in degrees r-1, r.

    Y must contain the complete (r-1)-skeleton of its ground set and have
    no faces above degree r.  A hypertree on g vertices necessarily has
    exactly C(g-1, r) top faces; that count is reported as a diagnostic.
    """
    if Y.is_void:
        raise NotSandwiched("void complex cannot be a hypertree candidate")
    g = Y.n
    if Y.dim > r:
        raise NotSandwiched(f"dimension {Y.dim} exceeds {r}")
    for i in range(r):
        if face_count(Y, i) != comb(g, i + 1):
            raise NotSandwiched(f"degree-{i} layer is not complete on {g} vertices")
    count_ok = face_count(Y, r) == comb(g - 1, r)
    return HypertreeCheck(
        r=r,
        field_name=field.name,
        face_count_ok=count_ok,
        tb_below=betti(Y, r - 1, field),
        tb_top=betti(Y, r, field),
    )
