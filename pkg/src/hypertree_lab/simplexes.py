"""Simplicial complexes and the local subcomplex operators.

Two representations are used.  SkeletonComplex models a complex squeezed
between two consecutive skeleta of the full simplex on n vertices: only the
top-dimensional faces are stored and the complete lower skeleton is implied,
enumerated combinatorially on demand and never materialized.  GeneralComplex
stores an explicit downward-closed face set over an explicit ground vertex
set; links and induced subcomplexes live on a subset of the original
vertices, so the ground set is kept rather than a bare vertex count.

Simplices are strictly increasing tuples of vertex ids; the empty tuple is
the empty simplex of dimension -1.  The complex whose only face is the empty
simplex is distinct from the void complex with no faces at all.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Union

from .errors import (
    DimensionMismatch,
    FaceNotInComplex,
    NotSandwiched,
    VertexOutOfRange,
)

Simplex = tuple[int, ...]
FVector = tuple[int, ...]

EMPTY_SIMPLEX: Simplex = ()

# dim of the void complex (no faces, not even the empty one)
VOID_DIM = -2


def make_simplex(vertices: Iterable[int]) -> Simplex:
    """Normalize an iterable of vertex ids into a sorted simplex tuple."""
    vs = tuple(sorted(vertices))
    for a, b in zip(vs, vs[1:]):
        if a == b:
            raise DimensionMismatch(f"duplicate vertex {a} in simplex {vs}")
    if vs and vs[0] < 0:
        raise VertexOutOfRange(f"negative vertex id in {vs}")
    return vs


def simplex_dim(sigma: Simplex) -> int:
    return len(sigma) - 1


def subfaces(sigma: Simplex) -> Iterator[Simplex]:
    """Every face of sigma, from the empty simplex up to sigma itself."""
    for r in range(len(sigma) + 1):
        yield from combinations(sigma, r)


def boundary_faces(sigma: Simplex) -> Iterator[Simplex]:
    """Codimension-1 faces of sigma in drop-the-i-th-vertex order."""
    for i in range(len(sigma)):
        yield sigma[:i] + sigma[i + 1:]


@dataclass(frozen=True)
class SkeletonComplex:
    """Complex with full (k-1)-skeleton on [n] plus the given k-faces."""

    n: int
    k: int
    top_faces: frozenset[Simplex]

    def __post_init__(self):
        if not 0 <= self.k <= self.n - 1:
            raise DimensionMismatch(f"top dimension {self.k} invalid for n={self.n}")
        for sigma in self.top_faces:
            if len(sigma) != self.k + 1:
                raise DimensionMismatch(f"face {sigma} does not have dimension {self.k}")
            if any(not 0 <= v < self.n for v in sigma):
                raise VertexOutOfRange(f"face {sigma} leaves [0, {self.n})")
            if any(a >= b for a, b in zip(sigma, sigma[1:])):
                raise DimensionMismatch(f"face {sigma} is not strictly increasing")

    @property
    def ground(self) -> frozenset[int]:
        return frozenset(range(self.n))

    @property
    def dim(self) -> int:
        return self.k if self.top_faces else self.k - 1

    @property
    def is_void(self) -> bool:
        return False


@dataclass(frozen=True)
class GeneralComplex:
    """Explicit downward-closed face set over an explicit ground set."""

    ground: frozenset[int]
    faces: frozenset[Simplex]

    def __post_init__(self):
        if self.faces and EMPTY_SIMPLEX not in self.faces:
            raise DimensionMismatch("nonvoid complex must contain the empty simplex")

    @property
    def n(self) -> int:
        return len(self.ground)

    @property
    def dim(self) -> int:
        if not self.faces:
            return VOID_DIM
        return max(len(f) for f in self.faces) - 1

    @property
    def is_void(self) -> bool:
        return not self.faces

    @cached_property
    def _by_dim(self) -> dict[int, frozenset[Simplex]]:
        out: dict[int, set[Simplex]] = {}
        for f in self.faces:
            out.setdefault(len(f) - 1, set()).add(f)
        return {d: frozenset(s) for d, s in out.items()}

    def validate(self) -> None:
        """Full downward-closure check; cheap checks run on construction."""
        for f in self.faces:
            if any(a >= b for a, b in zip(f, f[1:])):
                raise DimensionMismatch(f"face {f} is not strictly increasing")
            if any(v not in self.ground for v in f):
                raise VertexOutOfRange(f"face {f} leaves the ground set")
            for g in boundary_faces(f):
                if g not in self.faces:
                    raise DimensionMismatch(f"missing subface {g} of {f}")


Complex = Union[SkeletonComplex, GeneralComplex]

VOID = GeneralComplex(frozenset(), frozenset())


def from_top_faces(n: int, k: int, faces: Iterable[Iterable[int]]) -> SkeletonComplex:
    """Build the complex with full (k-1)-skeleton and exactly these k-faces."""
    tops = set()
    for f in faces:
        sigma = make_simplex(f)
        if len(sigma) != k + 1:
            raise DimensionMismatch(f"face {sigma} does not have dimension {k}")
        tops.add(sigma)
    return SkeletonComplex(n, k, frozenset(tops))


def closure(facets: Iterable[Iterable[int]], n: int) -> GeneralComplex:
    """Downward closure of the given facets on ground set [0, n)."""
    ground = frozenset(range(n))
    faces: set[Simplex] = set()
    for f in facets:
        sigma = make_simplex(f)
        if any(v >= n for v in sigma):
            raise VertexOutOfRange(f"facet {sigma} leaves [0, {n})")
        faces.update(subfaces(sigma))
    return GeneralComplex(ground, frozenset(faces))


def contains(X: Complex, sigma: Simplex) -> bool:
    if isinstance(X, SkeletonComplex):
        if len(sigma) > X.k + 1 or any(not 0 <= v < X.n for v in sigma):
            return False
        if len(sigma) == X.k + 1:
            return sigma in X.top_faces
        return True
    return sigma in X.faces


def iter_faces(X: Complex, j: int) -> Iterator[Simplex]:
    """Faces of dimension j, in lexicographic order."""
    if isinstance(X, SkeletonComplex):
        if j == -1:
            yield EMPTY_SIMPLEX
        elif j < -1 or j > X.dim:
            return
        elif j < X.k:
            yield from combinations(range(X.n), j + 1)
        else:
            yield from sorted(X.top_faces)
    else:
        yield from sorted(X._by_dim.get(j, ()))


def faces(X: Complex, j: int) -> frozenset[Simplex]:
    return frozenset(iter_faces(X, j))


def face_count(X: Complex, j: int) -> int:
    if isinstance(X, SkeletonComplex):
        if j == -1:
            return 1
        if j < -1 or j > X.dim:
            return 0
        if j < X.k:
            return comb(X.n, j + 1)
        return len(X.top_faces)
    if j == -1:
        return 0 if X.is_void else 1
    return len(X._by_dim.get(j, ()))


def all_faces(X: Complex) -> Iterator[Simplex]:
    """Every face of X including the empty simplex (if X is nonvoid)."""
    if isinstance(X, SkeletonComplex):
        for j in range(-1, X.dim + 1):
            yield from iter_faces(X, j)
    else:
        yield from X.faces


def f_vector(X: Complex) -> FVector:
    """Counts (f_0, ..., f_dim); empty tuple for dim < 0."""
    return tuple(face_count(X, j) for j in range(0, max(X.dim, -1) + 1))


def as_general(X: Complex) -> GeneralComplex:
    if isinstance(X, GeneralComplex):
        return X
    return GeneralComplex(X.ground, frozenset(all_faces(X)))


def link(X: Complex, tau: Iterable[int]) -> GeneralComplex:
    """Faces disjoint from tau whose union with tau lies in X.

    The result lives on the ground set of X minus tau.  The link of a facet
    is the one-face complex {empty simplex}, not the void complex.
    """
    t = make_simplex(tau)
    if not contains(X, t):
        raise FaceNotInComplex(f"{t} is not a face")
    tset = set(t)
    if isinstance(X, SkeletonComplex):
        ground = frozenset(range(X.n)) - tset
        rest = sorted(ground)
        out: set[Simplex] = set()
        for r in range(0, X.k + 1 - len(t)):
            out.update(combinations(rest, r))
        for sigma in X.top_faces:
            if tset.issubset(sigma):
                out.add(tuple(v for v in sigma if v not in tset))
        return GeneralComplex(ground, frozenset(out))
    out = set()
    for sigma in X.faces:
        if tset.issubset(sigma):
            out.add(tuple(v for v in sigma if v not in tset))
    return GeneralComplex(X.ground - tset, frozenset(out))


def star_costar(X: Complex, tau: Iterable[int]) -> tuple[GeneralComplex, GeneralComplex]:
    """(star, costar): faces compatible with tau, and faces not containing it."""
    t = make_simplex(tau)
    if not contains(X, t):
        raise FaceNotInComplex(f"{t} is not a face")
    tset = set(t)
    ground = X.ground
    star_faces: set[Simplex] = set()
    costar_faces: set[Simplex] = set()
    for sigma in all_faces(X):
        if contains(X, make_simplex(tset.union(sigma))):
            star_faces.add(sigma)
        if not tset.issubset(sigma):
            costar_faces.add(sigma)
    return (
        GeneralComplex(ground, frozenset(star_faces)),
        GeneralComplex(ground, frozenset(costar_faces)),
    )


def induced(X: Complex, vertices: Iterable[int]) -> GeneralComplex:
    """Faces of X contained in the given vertex set."""
    V = frozenset(vertices)
    if not V.issubset(X.ground):
        raise VertexOutOfRange("vertex set is not contained in the ground set")
    if isinstance(X, SkeletonComplex):
        rest = sorted(V)
        out: set[Simplex] = set()
        for r in range(0, min(X.k, len(rest)) + 1):
            out.update(combinations(rest, r))
        for sigma in X.top_faces:
            if V.issuperset(sigma):
                out.add(sigma)
        return GeneralComplex(V, frozenset(out))
    return GeneralComplex(V, frozenset(f for f in X.faces if V.issuperset(f)))


def skeleton(X: Complex, j: int) -> GeneralComplex:
    """All faces of dimension at most j, as an explicit complex."""
    if isinstance(X, SkeletonComplex):
        out: set[Simplex] = set()
        for d in range(-1, min(j, X.dim) + 1):
            out.update(iter_faces(X, d))
        return GeneralComplex(X.ground, frozenset(out))
    return GeneralComplex(X.ground, frozenset(f for f in X.faces if len(f) - 1 <= j))


def remove_top_face(X: SkeletonComplex, sigma: Iterable[int]) -> SkeletonComplex:
    s = make_simplex(sigma)
    if s not in X.top_faces:
        raise FaceNotInComplex(f"{s} is not a top face")
    return replace(X, top_faces=X.top_faces - {s})


def boundary_complex(sigma: Iterable[int]) -> GeneralComplex:
    """Closure of the proper faces of a single simplex."""
    s = make_simplex(sigma)
    if not s:
        return VOID
    fs = set(subfaces(s))
    fs.discard(s)
    return GeneralComplex(frozenset(s), frozenset(fs))


def join(A: GeneralComplex, B: GeneralComplex) -> GeneralComplex:
    """Simplicial join of complexes on disjoint ground sets."""
    if A.ground & B.ground:
        raise DimensionMismatch("join requires disjoint ground sets")
    out = frozenset(
        tuple(sorted(a + b)) for a in (A.faces or ()) for b in (B.faces or ())
    )
    return GeneralComplex(A.ground | B.ground, out)


def full_skeleton(n: int, k: int) -> SkeletonComplex:
    """The complete k-skeleton on n vertices as a SkeletonComplex."""
    return SkeletonComplex(n, k, frozenset(combinations(range(n), k + 1)))


def as_skeleton_complex(X: Complex) -> SkeletonComplex:
    """View X as a complex squeezed between consecutive skeleta.

    Requires every layer strictly below the top dimension to be complete on
    the ground set; raises NotSandwiched otherwise.  A ground set that is
    not 0..n-1 is compacted order-preservingly first.
    """
    if isinstance(X, SkeletonComplex):
        return X
    if X.is_void or X.dim < 0:
        raise NotSandwiched("complex has no vertices")
    g = X.n
    k = X.dim
    for i in range(k):
        if face_count(X, i) != comb(g, i + 1):
            raise NotSandwiched(
                f"degree-{i} layer is not complete on {g} vertices")
    ordered = sorted(X.ground)
    if ordered == list(range(g)):
        tops = faces(X, k)
    else:
        pos = {v: i for i, v in enumerate(ordered)}
        tops = frozenset(tuple(pos[v] for v in f) for f in iter_faces(X, k))
    return SkeletonComplex(g, k, frozenset(tops))
