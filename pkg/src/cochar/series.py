"""Truncated multigraded Hilbert series and the product formulas for them.

All series are truncated expansions in ``t_1..t_n`` up to a total degree
``D``; rational-function denominators are never represented symbolically.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

from .errors import EmptyList
from .symfunc import SymPoly

FULL = "full"
PROPER = "proper"


@dataclass(frozen=True)
class IdealSpec:
    """The product ``I_{p_1+1} ... I_{p_k+1}`` of commutator T-ideals.

    A single factor ``(p,)`` is the ideal of the variety of Lie nilpotent
    algebras of index at most p.
    """

    factors: tuple[int, ...]

    def __post_init__(self):
        factors = tuple(int(p) for p in self.factors)
        if not factors:
            raise ValueError("an ideal spec needs at least one factor")
        if any(p < 1 for p in factors):
            raise ValueError(f"factors must be positive, got {factors}")
        object.__setattr__(self, "factors", factors)

    @classmethod
    def parse(cls, text: str | int | Iterable[int]) -> "IdealSpec":
        if isinstance(text, IdealSpec):
            return text
        if isinstance(text, int):
            return cls((text,))
        if isinstance(text, str):
            try:
                return cls(tuple(int(x) for x in text.replace(" ", "").split(",") if x))
            except ValueError as exc:
                raise ValueError(f"bad ideal spec {text!r}") from exc
        return cls(tuple(text))

    @property
    def k(self) -> int:
        return len(self.factors)

    @property
    def total(self) -> int:
        return sum(self.factors)

    @property
    def min_degree(self) -> int:
        """Lowest total degree in which the ideal is nonzero."""
        return sum(p + 1 for p in self.factors)

    def __str__(self):
        return " ".join(f"I_{p + 1}" for p in self.factors)

    def cli_form(self) -> str:
        return ",".join(map(str, self.factors))


@dataclass(frozen=True)
class HilbertSeries:
    """A truncated series together with its role (full or proper)."""

    poly: SymPoly
    role: str = FULL

    def __post_init__(self):
        if self.poly.trunc is None:
            raise ValueError("a Hilbert series needs a truncation degree")
        if self.role not in (FULL, PROPER):
            raise ValueError(f"unknown role {self.role!r}")

    @property
    def nvars(self) -> int:
        return self.poly.nvars

    @property
    def trunc(self) -> int:
        return self.poly.trunc

    def coefficient(self, e: Iterable[int]):
        return self.poly.coefficient(e)

    def degree_sums(self) -> list:
        return self.poly.degree_sums()

    def has_dimension_coefficients(self) -> bool:
        """True when every coefficient is a nonnegative integer."""
        return self.poly.is_nonneg_integral()

    def to_json(self) -> dict:
        return {"n": self.nvars, "D": self.trunc, "role": self.role,
                "terms": self.poly.to_json()}

    def table_rows(self) -> list[str]:
        """One line per total degree: ``d: coeff*monomial + ...``."""
        rows = []
        for d in range(self.trunc + 1):
            part = self.poly.homogeneous(d)
            body = repr(SymPoly(self.nvars, part.terms)) if part.terms else "0"
            rows.append(f"{d}: {body}")
        return rows


def exponents_up_to(n: int, D: int) -> list[tuple[int, ...]]:
    """All exponent vectors of length n and total degree at most D."""
    out = []
    for d in range(D + 1):
        for cuts in itertools.combinations(range(d + n - 1), n - 1):
            prev = -1
            e = []
            for c in cuts + (d + n - 1,):
                e.append(c - prev - 1)
                prev = c
            out.append(tuple(e))
    return out


def _poly(x, n: int, D: int) -> SymPoly:
    if isinstance(x, HilbertSeries):
        x = x.poly
    if isinstance(x, SymPoly):
        if x.nvars != n:
            raise ValueError(f"series in {x.nvars} variables, expected {n}")
        return x.truncate(D)
    return SymPoly.const(x, n, D)


def geom_pow(n: int, r: int, D: int) -> HilbertSeries:
    """``1 / prod_i (1 - t_i)^r`` up to total degree D."""
    if r < 1:
        raise ValueError("r must be positive")
    terms = {}
    for e in exponents_up_to(n, D):
        c = 1
        for k in e:
            c *= comb(k + r - 1, r - 1)
        terms[e] = c
    return HilbertSeries(SymPoly(n, terms, D), FULL)


def _s1_minus_one(n: int, D: int) -> SymPoly:
    return SymPoly.elementary_one(n, D) - 1


def hilbert_from_proper(hb, n: int, D: int) -> HilbertSeries:
    """Full series from the proper one: multiply by ``prod 1/(1 - t_i)``."""
    if isinstance(hb, HilbertSeries) and hb.trunc < D:
        raise ValueError("proper series is truncated below the requested degree")
    return HilbertSeries(geom_pow(n, 1, D).poly * _poly(hb, n, D), FULL)


def formanek_product(h1, h2, n: int, D: int) -> HilbertSeries:
    """Series of the product ideal from the series of its two factors.

    ``H1 + H2 + (S_(1) - 1) H1 H2``.  The formula is symmetric in the factors
    even though products of T-ideals are not commutative.
    """
    a, b = _poly(h1, n, D), _poly(h2, n, D)
    return HilbertSeries(a + b + _s1_minus_one(n, D) * a * b, FULL)


def formanek_product_many(hs: Sequence, n: int, D: int) -> HilbertSeries:
    """k-factor version: ``sum_r (S_(1)-1)^{r-1} sum_{i_1<..<i_r} H_{i_1}..H_{i_r}``."""
    if not hs:
        raise EmptyList("need at least one series")
    polys = [_poly(h, n, D) for h in hs]
    s1m = _s1_minus_one(n, D)
    total = SymPoly.zero(n, D)
    for r in range(1, len(polys) + 1):
        inner = SymPoly.zero(n, D)
        for subset in itertools.combinations(polys, r):
            term = SymPoly.one(n, D)
            for p in subset:
                term = term * p
            inner = inner + term
        total = total + s1m ** (r - 1) * inner
    return HilbertSeries(total, FULL)


def proper_product(hb1, hb2, n: int, D: int) -> HilbertSeries:
    """Proper series of the product ideal from the proper series of its factors."""
    a, b = _poly(hb1, n, D), _poly(hb2, n, D)
    factor = _s1_minus_one(n, D) * geom_pow(n, 1, D).poly
    return HilbertSeries(a + b + factor * a * b, PROPER)


def pr_polynomials(proper_list: Sequence, n: int, D: int) -> list[SymPoly]:
    """The polynomials ``P_1..P_k`` built from the proper series of the factors.

    ``P_r = (S_(1) - 1)^{r-1} sum_{i_1<..<i_r} HB_{i_1}..HB_{i_r}``.  These can
    have negative coefficients, so they are returned as plain polynomials.
    """
    if not proper_list:
        raise EmptyList("need at least one proper series")
    polys = [_poly(h, n, D) for h in proper_list]
    s1m = _s1_minus_one(n, D)
    out = []
    for r in range(1, len(polys) + 1):
        inner = SymPoly.zero(n, D)
        for subset in itertools.combinations(polys, r):
            term = SymPoly.one(n, D)
            for p in subset:
                term = term * p
            inner = inner + term
        out.append(s1m ** (r - 1) * inner)
    return out


def _geom_or_one(n: int, r: int, D: int) -> SymPoly:
    return SymPoly.one(n, D) if r == 0 else geom_pow(n, r, D).poly


def assemble_proper(ps: Sequence[SymPoly], n: int, D: int) -> HilbertSeries:
    """``P_1 + P_2/prod(1-t) + ... + P_k/prod(1-t)^{k-1}``."""
    total = SymPoly.zero(n, D)
    for r, p in enumerate(ps, start=1):
        total = total + _poly(p, n, D) * _geom_or_one(n, r - 1, D)
    return HilbertSeries(total, PROPER)


def assemble_full(ps: Sequence[SymPoly], n: int, D: int) -> HilbertSeries:
    """``P_1/prod(1-t) + ... + P_k/prod(1-t)^k``."""
    total = SymPoly.zero(n, D)
    for r, p in enumerate(ps, start=1):
        total = total + _poly(p, n, D) * geom_pow(n, r, D).poly
    return HilbertSeries(total, FULL)


def boumova_drensky_series(k: int, n: int, D: int) -> HilbertSeries:
    """Closed form for ``I_2^k``: ``sum_r C(k,r) (S_(1)-1)^{r-1} / prod(1-t_i)^r``."""
    if k < 1:
        raise ValueError("k must be positive")
    s1m = _s1_minus_one(n, D)
    total = SymPoly.zero(n, D)
    for r in range(1, k + 1):
        total = total + s1m ** (r - 1) * geom_pow(n, r, D).poly * comb(k, r)
    return HilbertSeries(total, FULL)


def unit_series(n: int, D: int, role: str = PROPER) -> HilbertSeries:
    """The constant series 1 (the proper series of commutative algebras)."""
    return HilbertSeries(SymPoly.one(n, D), role)
