"""Sparse exact rank over GF(p) and the rationals.

Two independent routes are kept deliberately separate: row elimination with
a sparsity-aware pivot rule, and left-to-right column reduction that pairs
each column with its lowest surviving row.  They share no code beyond this
docstring, so agreement between them is a real check and not a tautology.

Rational arithmetic stays in plain integers (fraction-free elimination with
content stripping) on the row route and in Fraction on the column route.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Optional

Entries = dict[tuple[int, int], int]


def rank_by_rows(entries: Entries, n_rows: int, n_cols: int,
                 p: Optional[int] = None) -> int:
    """Rank via row elimination; p None means exact integer arithmetic."""
    rows: list[dict[int, int]] = [dict() for _ in range(n_rows)]
    for (i, j), v in entries.items():
        if p is not None:
            v %= p
        if v:
            rows[i][j] = v

    col_rows: dict[int, set[int]] = {}
    active: set[int] = set()
    for i, row in enumerate(rows):
        if row:
            active.add(i)
            for j in row:
                col_rows.setdefault(j, set()).add(i)

    rank = 0
    while active:
        # pivot row: fewest nonzeros, preferring unit entries
        best = None
        for i in active:
            row = rows[i]
            has_unit = (p is not None) or any(v in (1, -1) for v in row.values())
            key = (len(row), 0 if has_unit else 1)
            if best is None or key < best[0]:
                best = (key, i)
        pi = best[1]
        prow = rows[pi]
        # pivot column: fewest other rows touching it (unit entry if possible)
        pj = None
        pj_key = None
        for j, v in prow.items():
            unit = (p is not None) or v in (1, -1)
            key = (0 if unit else 1, len(col_rows[j]))
            if pj_key is None or key < pj_key:
                pj_key, pj = key, j
        pv = prow[pj]
        rank += 1
        active.discard(pi)

        touched = [i for i in col_rows[pj] if i != pi and i in active]
        if p is not None:
            inv = pow(pv, -1, p)
            for i in touched:
                row = rows[i]
                a = (row[pj] * inv) % p
                for j, v in prow.items():
                    w = (row.get(j, 0) - a * v) % p
                    if w:
                        row[j] = w
                        col_rows.setdefault(j, set()).add(i)
                    elif j in row:
                        del row[j]
                        col_rows[j].discard(i)
                if not row:
                    active.discard(i)
        else:
            for i in touched:
                row = rows[i]
                a = row[pj]
                if pv in (1, -1):
                    s = a * pv
                    for j, v in prow.items():
                        w = row.get(j, 0) - s * v
                        if w:
                            row[j] = w
                            col_rows.setdefault(j, set()).add(i)
                        elif j in row:
                            del row[j]
                            col_rows[j].discard(i)
                else:
                    # row_i <- pv * row_i - a * prow: the scaling hits every
                    # entry, not only the columns prow touches
                    for j in row:
                        row[j] *= pv
                    for j, v in prow.items():
                        w = row.get(j, 0) - a * v
                        if w:
                            row[j] = w
                            col_rows.setdefault(j, set()).add(i)
                        elif j in row:
                            del row[j]
                            col_rows[j].discard(i)
                    g = 0
                    for v in row.values():
                        g = gcd(g, v)
                        if g == 1:
                            break
                    if g > 1:
                        for j in row:
                            row[j] //= g
                if not row:
                    active.discard(i)

        for i in col_rows[pj]:
            if i != pi:
                rows[i].pop(pj, None)
        col_rows[pj] = {pi}

    return rank


def rank_by_columns(entries: Entries, n_rows: int, n_cols: int,
                    p: Optional[int] = None) -> int:
    """Rank via left-to-right column reduction on the lowest nonzero row."""
    cols: list[dict[int, object]] = [dict() for _ in range(n_cols)]
    for (i, j), v in entries.items():
        if p is not None:
            v %= p
            if v:
                cols[j][i] = v
        elif v:
            cols[j][i] = Fraction(v)

    low_owner: dict[int, int] = {}  # lowest row index -> column holding it
    rank = 0
    for j in range(n_cols):
        col = cols[j]
        while col:
            low = max(col)
            owner = low_owner.get(low)
            if owner is None:
                low_owner[low] = j
                rank += 1
                break
            other = cols[owner]
            if p is not None:
                c = (col[low] * pow(other[low], -1, p)) % p
                for i, v in other.items():
                    w = (col.get(i, 0) - c * v) % p
                    if w:
                        col[i] = w
                    else:
                        col.pop(i, None)
            else:
                c = col[low] / other[low]
                for i, v in other.items():
                    w = col.get(i, 0) - c * v
                    if w:
                        col[i] = w
                    else:
                        col.pop(i, None)
    return rank


def kernel_basis(entries: Entries, n_rows: int, n_cols: int,
                 p: Optional[int] = None) -> list[dict[int, object]]:
    """Basis of the right kernel, as sparse column-index -> coefficient maps.

    Runs the column reduction while tracking the column operations; each
    column that reduces to zero hands back the combination that killed it.
    Rational output is in Fraction, GF(p) output in residues.
    """
    cols: list[dict[int, object]] = [dict() for _ in range(n_cols)]
    for (i, j), v in entries.items():
        if p is not None:
            v %= p
            if v:
                cols[j][i] = v
        elif v:
            cols[j][i] = Fraction(v)

    one = 1 if p is not None else Fraction(1)
    combos: list[dict[int, object]] = [{j: one} for j in range(n_cols)]
    low_owner: dict[int, int] = {}
    kernel: list[dict[int, object]] = []
    for j in range(n_cols):
        col = cols[j]
        combo = combos[j]
        while col:
            low = max(col)
            owner = low_owner.get(low)
            if owner is None:
                low_owner[low] = j
                break
            other = cols[owner]
            if p is not None:
                c = (col[low] * pow(other[low], -1, p)) % p
                for i, v in other.items():
                    w = (col.get(i, 0) - c * v) % p
                    if w:
                        col[i] = w
                    else:
                        col.pop(i, None)
                for t, v in combos[owner].items():
                    w = (combo.get(t, 0) - c * v) % p
                    if w:
                        combo[t] = w
                    else:
                        combo.pop(t, None)
            else:
                c = col[low] / other[low]
                for i, v in other.items():
                    w = col.get(i, 0) - c * v
                    if w:
                        col[i] = w
                    else:
                        col.pop(i, None)
                for t, v in combos[owner].items():
                    w = combo.get(t, 0) - c * v
                    if w:
                        combo[t] = w
                    else:
                        combo.pop(t, None)
        if not col:
            kernel.append(combo)
    return kernel


class IncrementalSpan:
    """Grow a row space one vector at a time, reporting whether each adds rank.

    Vectors are sparse index -> value dicts.  Basis rows are kept reduced
    enough to have distinct pivots (largest index).  Used where candidates
    arrive online and only the yes/no answer and the running rank matter.
    """

    def __init__(self, p: Optional[int] = None):
        self.p = p
        self.basis: dict[int, dict[int, object]] = {}

    @property
    def rank(self) -> int:
        return len(self.basis)

    def _reduce(self, vec: dict[int, object]) -> dict[int, object]:
        p = self.p
        vec = dict(vec)
        while vec:
            piv = max(vec)
            row = self.basis.get(piv)
            if row is None:
                return vec
            if p is not None:
                c = (vec[piv] * pow(row[piv], -1, p)) % p
                for j, v in row.items():
                    w = (vec.get(j, 0) - c * v) % p
                    if w:
                        vec[j] = w
                    else:
                        vec.pop(j, None)
            else:
                c = Fraction(vec[piv]) / row[piv]
                for j, v in row.items():
                    w = vec.get(j, 0) - c * v
                    if w:
                        vec[j] = w
                    else:
                        vec.pop(j, None)
        return vec

    def add(self, vec: dict[int, object]) -> bool:
        """Try to add vec to the span; True iff the rank grew."""
        p = self.p
        if p is not None:
            vec = {j: v % p for j, v in vec.items() if v % p}
        else:
            vec = {j: Fraction(v) for j, v in vec.items() if v}
        red = self._reduce(vec)
        if not red:
            return False
        self.basis[max(red)] = red
        return True

    def reduces_to_zero(self, vec: dict[int, object]) -> bool:
        p = self.p
        if p is not None:
            vec = {j: v % p for j, v in vec.items() if v % p}
        else:
            vec = {j: Fraction(v) for j, v in vec.items() if v}
        return not self._reduce(vec)
