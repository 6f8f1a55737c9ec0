"""Local-to-global bounds linking link homology to global Betti numbers.

For a complex X with full (k-1)-skeleton on n vertices, the central
quantity is the accumulated link defect

    lambda_sum(X, ell, j) = sum over degree-ell faces tau of the degree-j
                            Betti number of the link of tau,

evaluated at j = k-ell-2 (one below the top dimension of the links) or at
j = k-ell-1 (the top).  The certificates below tie these sums to the
degree-(k-1) and degree-k Betti numbers of X through four relations:

  upper:   C * b_{k-1}(X) <= lambda_low + C * B
  dual:    C * b_k(X)     <= lambda_high
  step:    b_k(X) = b_{k-1}(X) + f_k(X) - C(n-1, k)
  shift:   lambda_high = lambda_low + C * (f_k(X) - F)

with C = C(k+1, ell+1) and B, F the rational constants depending only on
(n, k, ell).  Every comparison is done in cleared integers; B and F are
reported as exact fractions.

When lambda_low is zero the three extremal conditions coincide: b_{k-1}
hitting B, b_k vanishing at face count F, and every degree-ell link being
a hypertree one dimension down.  equality_trichotomy evaluates all three.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional

from .concurrency import parallel_map
from .errors import (
    FaceNotInComplex,
    InvariantViolation,
    ParameterOutOfRange,
    PreconditionLambdaNonzero,
)
from .fields import FieldSpec
from .homology import HypertreeCheck, betti, is_hypertree
from .simplexes import (
    Complex,
    Simplex,
    SkeletonComplex,
    as_skeleton_complex,
    face_count,
    iter_faces,
    link,
    make_simplex,
    remove_top_face,
)


def lambda_sum(X: Complex, ell: int, j: int, field: FieldSpec,
               threads: Optional[int] = None) -> int:
    """Total degree-j Betti number over all links of degree-ell faces."""
    S = as_skeleton_complex(X)
    if not -1 <= ell <= S.k:
        raise ParameterOutOfRange(f"degree {ell} must lie in [-1, {S.k}]")
    taus = sorted(iter_faces(S, ell))

    def one(tau: Simplex) -> int:
        return betti(link(S, tau), j, field)

    return sum(parallel_map(one, taus, threads))


def _require_params(n: int, k: int, ell: int) -> None:
    if not 0 <= ell < k < n:
        raise ParameterOutOfRange(
            f"need 0 <= ell < k < n, got ell={ell} k={k} n={n}")


def bound_B(n: int, k: int, ell: int) -> Fraction:
    """Ceiling constant for the degree-(k-1) Betti number.

    Two closed forms must agree; both are evaluated and compared.
    """
    _require_params(n, k, ell)
    direct = Fraction(comb(n - 1, ell) * comb(n - ell - 2, k - ell),
                      comb(k + 1, ell + 1))
    alt = comb(n - 1, k) - Fraction(
        comb(n, ell + 1) * comb(n - ell - 2, k - ell - 1), comb(k + 1, ell + 1))
    if direct != alt:
        raise InvariantViolation(f"constant mismatch: {direct} vs {alt}")
    return direct


def bound_F(n: int, k: int, ell: int) -> Fraction:
    """Top-face count at which the ceiling is reached."""
    _require_params(n, k, ell)
    return comb(n - 1, k) - bound_B(n, k, ell)


@dataclass(frozen=True)
class BoundCertificate:
    n: int
    k: int
    ell: int
    field_name: str
    lam_low: int
    lam_high: int
    tb_top_below: int
    tb_top: int
    f_top: int
    bound_value: Fraction
    complement_value: Fraction
    eq_upper: bool
    eq_dual: bool
    eq_step: bool
    eq_shift: bool

    @property
    def all_hold(self) -> bool:
        return self.eq_upper and self.eq_dual and self.eq_step and self.eq_shift


def verify_upper_bound(X: Complex, ell: int, field: FieldSpec,
                       threads: Optional[int] = None) -> BoundCertificate:
    """Evaluate all four relations for one complex at one degree.

    The upper and dual comparisons are inequalities that must always hold;
    the step and shift relations are exact identities.  Any False in the
    certificate means the implementation or the mathematics is broken, so
    callers treat False as a hard failure, not as data.
    """
    S = as_skeleton_complex(X)
    n, k = S.n, S.k
    _require_params(n, k, ell)
    C = comb(k + 1, ell + 1)
    CB = comb(n - 1, ell) * comb(n - ell - 2, k - ell)
    CF = comb(n, ell + 1) * comb(n - ell - 2, k - ell - 1)

    lam_low = lambda_sum(S, ell, k - ell - 2, field, threads)
    lam_high = lambda_sum(S, ell, k - ell - 1, field, threads)
    tb_below = betti(S, k - 1, field)
    tb_top = betti(S, k, field)
    f_top = face_count(S, k)

    return BoundCertificate(
        n=n, k=k, ell=ell, field_name=field.name,
        lam_low=lam_low, lam_high=lam_high,
        tb_top_below=tb_below, tb_top=tb_top, f_top=f_top,
        bound_value=bound_B(n, k, ell),
        complement_value=bound_F(n, k, ell),
        eq_upper=C * tb_below <= lam_low + CB,
        eq_dual=C * tb_top <= lam_high,
        eq_step=tb_top == tb_below + f_top - comb(n - 1, k),
        eq_shift=lam_high == lam_low + C * f_top - CF,
    )


@dataclass(frozen=True)
class DualBoundVerdict:
    n: int
    k: int
    ell: int
    field_name: str
    coefficient: int
    tb_top: int
    lam_high: int

    @property
    def holds(self) -> bool:
        return self.coefficient * self.tb_top <= self.lam_high


def verify_dual_bound(X: Complex, ell: int, field: FieldSpec,
                      threads: Optional[int] = None) -> DualBoundVerdict:
    """Top-degree Betti number against the top-degree link defect.

    Valid for every degree from -1 up to k-1; at ell = -1 it degenerates
    to comparing b_k with itself.
    """
    S = as_skeleton_complex(X)
    k = S.k
    if not -1 <= ell < k:
        raise ParameterOutOfRange(f"degree {ell} must lie in [-1, {k})")
    return DualBoundVerdict(
        n=S.n, k=k, ell=ell, field_name=field.name,
        coefficient=comb(k + 1, ell + 1),
        tb_top=betti(S, k, field),
        lam_high=lambda_sum(S, ell, k - ell - 1, field, threads),
    )


@dataclass(frozen=True)
class LinkBracket:
    tau: Simplex
    before: int
    after: int

    @property
    def holds(self) -> bool:
        return self.before <= self.after <= self.before + 1


@dataclass(frozen=True)
class MonotonicityVerdict:
    """Effect of deleting one top face on the defect and on each link."""

    n: int
    k: int
    ell: int
    sigma: Simplex
    field_name: str
    coefficient: int
    lam_before: int
    lam_after: int
    tb_before: int
    tb_after: int
    link_brackets: tuple[LinkBracket, ...]
    untouched_identical: bool

    @property
    def main_holds(self) -> bool:
        lhs = self.lam_after - self.lam_before
        rhs = self.coefficient * (self.tb_after - self.tb_before)
        return lhs <= rhs

    @property
    def tb_bracket_holds(self) -> bool:
        return self.tb_before <= self.tb_after <= self.tb_before + 1

    @property
    def holds(self) -> bool:
        return (self.main_holds and self.tb_bracket_holds
                and self.untouched_identical
                and all(b.holds for b in self.link_brackets))


def monotonicity_check(X: Complex, sigma, ell: int,
                       field: FieldSpec) -> MonotonicityVerdict:
    """Delete the top face sigma and bound every movement it causes.

    Three things are verified at once: the defect moves by at most the
    binomial coefficient times the movement of the degree-(k-1) Betti
    number; that Betti number itself moves up by at most one; and the link
    of each degree-ell face inside sigma gains at most one unit of
    homology one degree below its top.  Links of faces not inside sigma
    must not change at all.
    """
    S = as_skeleton_complex(X)
    k = S.k
    if not -1 <= ell <= k - 1:
        raise ParameterOutOfRange(f"degree {ell} must lie in [-1, {k - 1}]")
    s = make_simplex(sigma)
    if s not in S.top_faces:
        raise FaceNotInComplex(f"{s} is not a top face")
    S2 = remove_top_face(S, s)
    j = k - ell - 2

    brackets = []
    untouched = True
    for tau in iter_faces(S, ell):
        if set(tau).issubset(s):
            brackets.append(LinkBracket(
                tau=tau,
                before=betti(link(S, tau), j, field),
                after=betti(link(S2, tau), j, field),
            ))
        elif link(S, tau).faces != link(S2, tau).faces:
            untouched = False

    return MonotonicityVerdict(
        n=S.n, k=k, ell=ell, sigma=s, field_name=field.name,
        coefficient=comb(k + 1, ell + 1),
        lam_before=lambda_sum(S, ell, j, field),
        lam_after=lambda_sum(S2, ell, j, field),
        tb_before=betti(S, k - 1, field),
        tb_after=betti(S2, k - 1, field),
        link_brackets=tuple(brackets),
        untouched_identical=untouched,
    )


@dataclass(frozen=True)
class TrichotomyReport:
    """The three faces of extremality, evaluated independently."""

    n: int
    k: int
    ell: int
    field_name: str
    lam_low: int
    ceiling_hit: bool        # degree-(k-1) Betti number equals B
    complement_hit: bool     # degree-k Betti number 0 at face count F
    links_are_hypertrees: bool
    link_checks: tuple[tuple[Simplex, HypertreeCheck], ...]

    @property
    def applicable(self) -> bool:
        return self.lam_low == 0

    @property
    def all_equivalent(self) -> bool:
        return self.ceiling_hit == self.complement_hit == self.links_are_hypertrees


def equality_trichotomy(X: Complex, ell: int, field: FieldSpec,
                        require_zero_defect: bool = True,
                        threads: Optional[int] = None) -> TrichotomyReport:
    """Evaluate the three extremality conditions at degree ell.

    The equivalence is a theorem only when the low defect vanishes, so by
    default a nonzero defect raises.  Passing require_zero_defect=False
    evaluates the three conditions anyway (they may then disagree); the
    report's applicable flag records which regime the complex was in.
    When the defect is zero the three answers are asserted equal.
    """
    S = as_skeleton_complex(X)
    n, k = S.n, S.k
    _require_params(n, k, ell)
    lam_low = lambda_sum(S, ell, k - ell - 2, field, threads)
    if lam_low != 0 and require_zero_defect:
        raise PreconditionLambdaNonzero(
            f"accumulated link defect is {lam_low}, not 0")

    tb_below = betti(S, k - 1, field)
    tb_top = betti(S, k, field)
    B = bound_B(n, k, ell)
    F = bound_F(n, k, ell)
    a = Fraction(tb_below) == B
    b = tb_top == 0 and Fraction(face_count(S, k)) == F

    r = k - ell - 1
    taus = sorted(iter_faces(S, ell))

    def one(tau: Simplex) -> tuple[Simplex, HypertreeCheck]:
        return tau, is_hypertree(link(S, tau), r, field)

    checks = tuple(parallel_map(one, taus, threads))
    c = all(chk.is_hypertree for _, chk in checks)

    report = TrichotomyReport(
        n=n, k=k, ell=ell, field_name=field.name, lam_low=lam_low,
        ceiling_hit=a, complement_hit=b, links_are_hypertrees=c,
        link_checks=checks,
    )
    if lam_low == 0 and not report.all_equivalent:
        raise InvariantViolation(
            f"trichotomy broke at zero defect: {a} {b} {c}")
    return report
