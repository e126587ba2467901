"""Exact reduced row echelon bases for subspaces of sparse vector spaces.

Vectors are dicts from ordered, hashable column keys (here: words) to exact
rationals.  The pivot of a row is its smallest column.  The basis is kept
fully reduced at all times, so reducing a vector is a single pass over its
pivot columns and the non-pivot ("standard") columns index the quotient.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Mapping

Vector = dict


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _div(a, b):
    if b == 1:
        return a
    if b == -1:
        return -a
    return _norm(Fraction(a) / b)


class Echelon:
    """Reduced row echelon basis, grown one vector at a time."""

    __slots__ = ("rows", "_users")

    def __init__(self, vectors: Iterable[Mapping] = ()):
        self.rows: dict[Hashable, dict] = {}
        # column -> pivots of the rows that have a nonzero entry there
        self._users: dict[Hashable, set] = {}
        for v in vectors:
            self.add(v)

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> set:
        return set(self.rows)

    def basis(self) -> list[dict]:
        return [dict(self.rows[p]) for p in sorted(self.rows)]

    def reduce(self, vec: Mapping) -> Vector:
        """Residual of ``vec`` modulo the subspace (supported off the pivots)."""
        rows = self.rows
        res = {c: v for c, v in vec.items() if c not in rows and v}
        for c, v in vec.items():
            row = rows.get(c)
            if row is None or not v:
                continue
            for col, rv in row.items():
                if col == c:
                    continue
                x = res.get(col, 0) - v * rv
                if x:
                    res[col] = x
                else:
                    res.pop(col, None)
        return {c: _norm(x) for c, x in res.items()}

    def contains(self, vec: Mapping) -> bool:
        return not self.reduce(vec)

    def add(self, vec: Mapping):
        """Insert ``vec``; return its new pivot, or None if it was dependent."""
        res = self.reduce(vec)
        if not res:
            return None
        self._insert_reduced(res)
        return min(res)

    def _insert_reduced(self, res: Vector):
        p = min(res)
        lead = res[p]
        row = {c: _div(v, lead) for c, v in res.items()}
        users = self._users
        for q in users.pop(p, ()):
            other = self.rows[q]
            f = other.pop(p)
            for col, v in row.items():
                if col == p:
                    continue
                x = other.get(col, 0) - f * v
                if x:
                    if col not in other:
                        users.setdefault(col, set()).add(q)
                    other[col] = _norm(x)
                elif col in other:
                    del other[col]
                    users[col].discard(q)
        self.rows[p] = row
        for col in row:
            if col != p:
                users.setdefault(col, set()).add(p)

    def insert_reduced_row(self, pivot, row: dict):
        """Adopt a row known to be compatible with the current basis.

        The caller guarantees that ``pivot`` is the smallest column of ``row``,
        that its coefficient there is 1, that ``row`` vanishes on every existing
        pivot and that no existing row touches ``pivot``.
        """
        self.rows[pivot] = row
        for col in row:
            if col != pivot:
                self._users.setdefault(col, set()).add(pivot)

    def normal_form(self, vec: Mapping) -> Vector:
        return self.reduce(vec)


def rank_of(vectors: Iterable[Mapping]) -> int:
    return Echelon(vectors).rank
