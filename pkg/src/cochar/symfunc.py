"""Exact symmetric polynomials in finitely many variables.

Everything here works over the rationals with ``fractions.Fraction``; there is
no floating point anywhere.  Coefficients that happen to be integers are kept
as ``int`` so that the common case (dimensions, multiplicities) stays cheap.
"""
from __future__ import annotations

import itertools
from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator

from .errors import NonCharacter, NonSymmetricInput
from .partitions import Partition, conjugate, partitions_of, reverse_lex_key

Exponent = tuple[int, ...]


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _min_trunc(a: int | None, b: int | None) -> int | None:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class SymPoly:
    """Polynomial in ``t_1..t_n`` with exact coefficients.

    When ``trunc`` is set every monomial of total degree above it is dropped,
    eagerly, on construction and after every product.  Despite the name the
    container does not force symmetry; :meth:`is_symmetric` checks it.
    """

    __slots__ = ("nvars", "trunc", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, object] | None = None,
                 trunc: int | None = None):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        self.nvars = nvars
        self.trunc = trunc
        self.terms: dict[Exponent, int | Fraction] = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != nvars:
                raise ValueError(f"exponent {e} does not have length {nvars}")
            if trunc is not None and sum(e) > trunc:
                continue
            c = _norm(Fraction(c)) if not isinstance(c, int) else c
            if c:
                self.terms[e] = self.terms.get(e, 0) + c
        self.terms = {e: c for e, c in self.terms.items() if c}

    @classmethod
    def _raw(cls, nvars: int, terms: dict, trunc: int | None) -> "SymPoly":
        out = cls.__new__(cls)
        out.nvars = nvars
        out.trunc = trunc
        out.terms = terms
        return out

    # constructors
    @classmethod
    def zero(cls, n: int, trunc: int | None = None) -> "SymPoly":
        return cls._raw(n, {}, trunc)

    @classmethod
    def const(cls, c, n: int, trunc: int | None = None) -> "SymPoly":
        return cls(n, {(0,) * n: c}, trunc)

    @classmethod
    def one(cls, n: int, trunc: int | None = None) -> "SymPoly":
        return cls.const(1, n, trunc)

    @classmethod
    def var(cls, i: int, n: int, trunc: int | None = None) -> "SymPoly":
        """The variable ``t_i`` (1-based)."""
        e = [0] * n
        e[i - 1] = 1
        return cls(n, {tuple(e): 1}, trunc)

    @classmethod
    def elementary_one(cls, n: int, trunc: int | None = None) -> "SymPoly":
        """``S_(1)(T) = t_1 + ... + t_n``."""
        return cls(n, {tuple(int(j == i) for j in range(n)): 1 for i in range(n)}, trunc)

    # arithmetic
    def _coerce(self, other) -> "SymPoly":
        if isinstance(other, SymPoly):
            if other.nvars != self.nvars:
                raise ValueError("different numbers of variables")
            return other
        if isinstance(other, (int, Fraction)):
            return SymPoly.const(other, self.nvars, self.trunc)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        trunc = _min_trunc(self.trunc, other.trunc)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            v = terms.get(e, 0) + c
            if v:
                terms[e] = _norm(v)
            else:
                terms.pop(e, None)
        if trunc is not None:
            terms = {e: c for e, c in terms.items() if sum(e) <= trunc}
        return SymPoly._raw(self.nvars, terms, trunc)

    __radd__ = __add__

    def __neg__(self):
        return SymPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()}, self.trunc)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return SymPoly.zero(self.nvars, self.trunc)
            return SymPoly._raw(self.nvars, {e: _norm(c * other) for e, c in self.terms.items()},
                                self.trunc)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        trunc = _min_trunc(self.trunc, other.trunc)
        terms: dict[Exponent, object] = {}
        right = [(e, sum(e), c) for e, c in other.terms.items()]
        for e1, c1 in self.terms.items():
            d1 = sum(e1)
            for e2, d2, c2 in right:
                if trunc is not None and d1 + d2 > trunc:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return SymPoly._raw(self.nvars, {e: _norm(c) for e, c in terms.items() if c}, trunc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = SymPoly.one(self.nvars, self.trunc)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SymPoly.const(other, self.nvars)
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # inspection
    def coefficient(self, e: Iterable[int]):
        return self.terms.get(tuple(e), 0)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def homogeneous(self, d: int) -> "SymPoly":
        return SymPoly._raw(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == d},
                            self.trunc)

    def truncate(self, d: int) -> "SymPoly":
        trunc = _min_trunc(self.trunc, d)
        return SymPoly._raw(self.nvars, {e: c for e, c in self.terms.items() if sum(e) <= d},
                            trunc)

    def degree_sums(self) -> list:
        """Coefficient sums per total degree, i.e. the series at t_i = t."""
        top = self.trunc if self.trunc is not None else self.degree()
        out = [0] * (top + 1)
        for e, c in self.terms.items():
            out[sum(e)] += c
        return [_norm(Fraction(c)) for c in out]

    def evaluate(self, point: Iterable) -> Fraction:
        point = [Fraction(x) for x in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            v = Fraction(c)
            for x, k in zip(point, e):
                v *= x ** k
            total += v
        return _norm(total)

    def is_symmetric(self) -> bool:
        for e, c in self.terms.items():
            for f in set(itertools.permutations(e)):
                if self.terms.get(f, 0) != c:
                    return False
        return True

    def is_nonneg_integral(self) -> bool:
        return all(isinstance(c, int) and c >= 0 for c in self.terms.values())

    def exact_divide(self, other: "SymPoly") -> "SymPoly":
        """Exact polynomial division, lexicographic leading terms.

        Raises ValueError when ``other`` does not divide ``self``.
        """
        if not other.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        lead_e = max(other.terms)
        lead_c = Fraction(other.terms[lead_e])
        rest = dict(self.terms)
        quot: dict[Exponent, object] = {}
        while rest:
            e = max(rest)
            q = tuple(a - b for a, b in zip(e, lead_e))
            if any(x < 0 for x in q):
                raise ValueError("division is not exact")
            c = _norm(Fraction(rest[e]) / lead_c)
            quot[q] = c
            for f, d in other.terms.items():
                g = tuple(a + b for a, b in zip(q, f))
                v = rest.get(g, 0) - c * d
                if v:
                    rest[g] = _norm(v)
                else:
                    rest.pop(g, None)
        return SymPoly(self.nvars, quot)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda e: (sum(e), tuple(-x for x in e))):
            c = self.terms[e]
            mono = "*".join(f"t{i + 1}" + (f"^{k}" if k > 1 else "")
                            for i, k in enumerate(e) if k)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        text = " + ".join(parts).replace("+ -", "- ")
        if self.trunc is not None:
            text += f" + O(deg {self.trunc + 1})"
        return text

    def to_json(self) -> list[dict]:
        return [{"exponents": list(e), "coeff": str(c)}
                for e, c in sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))]


# ---------------------------------------------------------------- tableaux


def horizontal_strips(lam: Partition, size: int | None = None) -> Iterator[Partition]:
    """Partitions ``mu`` inside ``lam`` with ``lam / mu`` a horizontal strip.

    If ``size`` is given only strips with that many boxes are produced.
    """
    lam = Partition(lam)
    rows = list(lam)
    lower = rows[1:] + [0]
    ranges = [range(lo, hi + 1) for lo, hi in zip(lower, rows)]
    for mu in itertools.product(*ranges):
        if size is None or sum(rows) - sum(mu) == size:
            yield Partition(mu)


def semistandard_tableaux(shape: Iterable[int], n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All semistandard tableaux of ``shape`` with entries in ``1..n``."""
    shape = Partition(shape)
    cells = list(shape.cells())
    filling: dict[tuple[int, int], int] = {}

    def rec(idx: int):
        if idx == len(cells):
            yield tuple(tuple(filling[i, j] for j in range(1, r + 1))
                        for i, r in enumerate(shape, start=1))
            return
        i, j = cells[idx]
        lo = 1
        if j > 1:
            lo = max(lo, filling[i, j - 1])
        if i > 1:
            lo = max(lo, filling[i - 1, j] + 1)
        for v in range(lo, n + 1):
            filling[i, j] = v
            yield from rec(idx + 1)
        filling.pop((i, j), None)

    yield from rec(0)


@lru_cache(maxsize=None)
def _schur_terms(lam: Partition, n: int) -> dict[Exponent, int]:
    # branching t_n out: one horizontal strip per occurrence of the entry n
    if len(lam) > n:
        return {}
    if n == 0:
        return {(): 1}
    out: dict[Exponent, int] = {}
    for mu in horizontal_strips(lam):
        if len(mu) > n - 1:
            continue
        k = lam.weight - mu.weight
        for e, c in _schur_terms(mu, n - 1).items():
            key = e + (k,)
            out[key] = out.get(key, 0) + c
    return out


def alternant(alpha: Iterable[int], n: int) -> SymPoly:
    """``sum_sigma sgn(sigma) t^{sigma(alpha)}`` for an exponent vector of length n."""
    alpha = tuple(alpha)
    terms = {}
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
        e = tuple(alpha[perm[i]] for i in range(n))
        terms[e] = terms.get(e, 0) + (-1) ** inversions
    return SymPoly(n, terms)


def schur_poly(lam: Iterable[int], n: int, trunc: int | None = None,
               method: str = "tableaux") -> SymPoly:
    """Schur polynomial ``s_lam(t_1..t_n)``; zero when ``lam`` has more than n parts.

    ``method="tableaux"`` sums ``t^content`` over semistandard tableaux (built
    by stripping off horizontal strips); ``method="bialternant"`` divides
    ``a_{lam+delta}`` by the Vandermonde ``a_delta``.
    """
    lam = Partition(lam)
    if len(lam) > n or (trunc is not None and lam.weight > trunc):
        return SymPoly.zero(n, trunc)
    if method == "tableaux":
        return SymPoly._raw(n, dict(_schur_terms(lam, n)), trunc)
    if method == "bialternant":
        delta = [n - 1 - i for i in range(n)]
        padded = [lam.part(i + 1) for i in range(n)]
        num = alternant([a + b for a, b in zip(padded, delta)], n)
        den = alternant(delta, n)
        q = num.exact_divide(den)
        return SymPoly._raw(n, q.terms, trunc)
    raise ValueError(f"unknown method {method!r}")


@lru_cache(maxsize=None)
def _kostka(lam: Partition, content: Partition) -> int:
    if not content:
        return 1 if not lam else 0
    if len(lam) > len(content):
        return 0
    last = content[-1]
    rest = Partition(content[:-1])
    return sum(_kostka(mu, rest) for mu in horizontal_strips(lam, last))


def kostka(lam: Iterable[int], content: Iterable[int]) -> int:
    """Number of semistandard tableaux of shape ``lam`` and content ``content``."""
    lam = Partition(lam)
    content = [c for c in content if c]
    if lam.weight != sum(content):
        return 0
    return _kostka(lam, Partition(sorted(content, reverse=True)))


# --------------------------------------------------------- Schur expansions


class SchurExpansion(Mapping):
    """Integer combination ``sum c_lam s_lam`` in ``nvars`` variables.

    Missing partitions read as multiplicity 0.
    """

    def __init__(self, nvars: int, terms: Mapping | Iterable = ()):
        self.nvars = nvars
        items = terms.items() if isinstance(terms, Mapping) else terms
        data: dict[Partition, int] = {}
        for lam, c in items:
            lam = Partition(lam)
            if len(lam) > nvars:
                raise ValueError(f"{lam} has more than {nvars} parts")
            if c != int(c):
                raise ValueError(f"non-integral multiplicity {c} at {lam}")
            data[lam] = data.get(lam, 0) + int(c)
        self._terms = {lam: c for lam, c in data.items() if c}

    def __getitem__(self, lam) -> int:
        return self._terms.get(Partition(lam), 0)

    def __contains__(self, lam) -> bool:
        return Partition(lam) in self._terms

    def __iter__(self):
        return iter(sorted(self._terms, key=reverse_lex_key))

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, SchurExpansion):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, Mapping):
            return self._terms == {Partition(k): v for k, v in other.items() if v}
        return NotImplemented

    def __add__(self, other: "SchurExpansion") -> "SchurExpansion":
        if self.nvars != other.nvars:
            raise ValueError("different numbers of variables")
        out = dict(self._terms)
        for lam, c in other._terms.items():
            out[lam] = out.get(lam, 0) + c
        return SchurExpansion(self.nvars, out)

    def __repr__(self):
        inner = ", ".join(f"{tuple(lam)}: {c}" for lam, c in self.items())
        return f"SchurExpansion(n={self.nvars}, {{{inner}}})"

    def support(self) -> list[Partition]:
        return list(self)

    def of_degree(self, d: int) -> "SchurExpansion":
        return SchurExpansion(self.nvars, {l: c for l, c in self._terms.items() if l.weight == d})

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def to_sympoly(self, trunc: int | None = None) -> SymPoly:
        out = SymPoly.zero(self.nvars, trunc)
        for lam, c in self._terms.items():
            out = out + schur_poly(lam, self.nvars, trunc) * c
        return out

    def to_json(self) -> dict:
        return {"n": self.nvars,
                "terms": [{"partition": list(lam), "mult": c} for lam, c in self.items()]}

    @classmethod
    def from_json(cls, data: dict) -> "SchurExpansion":
        return cls(data["n"], [(t["partition"], t["mult"]) for t in data["terms"]])


def schur_expand(f: SymPoly) -> SchurExpansion:
    """Write a symmetric polynomial in the Schur basis.

    Works one total degree at a time: read the lexicographically largest
    exponent as a partition, subtract that multiple of its Schur polynomial,
    repeat.  Raises NonSymmetricInput as soon as the leading exponent is not
    weakly decreasing.
    """
    n = f.nvars
    by_degree: dict[int, dict[Exponent, object]] = {}
    for e, c in f.terms.items():
        by_degree.setdefault(sum(e), {})[e] = c
    result: dict[Partition, int] = {}
    for d in sorted(by_degree):
        residual = by_degree[d]
        budget = len(partitions_of(d, n)) + 1
        while residual:
            lead = max(residual)
            if any(a < b for a, b in zip(lead, lead[1:])) or budget == 0:
                raise NonSymmetricInput(f"leading exponent {lead} in degree {d}")
            budget -= 1
            c = residual[lead]
            if Fraction(c).denominator != 1:
                raise NonSymmetricInput(f"non-integral Schur coefficient {c} at {lead}")
            c = int(c)
            lam = Partition(lead)
            result[lam] = c
            for e, k in _schur_terms(lam, n).items():
                v = residual.get(e, 0) - c * k
                if v:
                    residual[e] = v
                else:
                    residual.pop(e, None)
    return SchurExpansion(n, result)


def expand_dominant(coeffs: Mapping[Partition, object], d: int, n: int) -> SchurExpansion:
    """Schur expansion of a homogeneous symmetric polynomial of degree d.

    ``coeffs`` holds only the coefficients of the dominant monomials
    ``t^alpha`` (``alpha`` a partition of ``d`` with at most ``n`` parts); the
    Kostka matrix is unitriangular in lex order, so a single sweep suffices.
    """
    found: dict[Partition, int] = {}
    for alpha in partitions_of(d, n):
        c = Fraction(coeffs.get(alpha, 0))
        for kappa, ck in found.items():
            c -= ck * kostka(kappa, alpha)
        if c.denominator != 1:
            raise NonSymmetricInput(f"non-integral Schur coefficient at {alpha}")
        if c:
            found[alpha] = int(c)
    return SchurExpansion(n, found)


def _bounded_vectors(alpha: tuple[int, ...], total: int) -> Iterator[tuple[int, ...]]:
    # vectors 0 <= beta_i <= alpha_i with sum(beta) == total
    if not alpha:
        if total == 0:
            yield ()
        return
    head, rest = alpha[0], alpha[1:]
    cap = sum(rest)
    for b in range(max(0, total - cap), min(head, total) + 1):
        for tail in _bounded_vectors(rest, total - b):
            yield (b,) + tail


def lr_coefficients(mu: Iterable[int], nu: Iterable[int], n: int) -> SchurExpansion:
    """Coefficients of ``s_mu * s_nu`` in the Schur basis of n variables.

    Terms ``s_lam`` with more than n parts vanish in n variables and are
    therefore absent.  The product is formed on dominant monomials only
    (coefficient of ``t^alpha`` in a product of symmetric polynomials is a
    convolution of Kostka numbers), then expanded by :func:`expand_dominant`.
    """
    mu, nu = Partition(mu), Partition(nu)
    d = mu.weight + nu.weight
    if len(mu) > n or len(nu) > n:
        return SchurExpansion(n, {})
    coeffs = {}
    for alpha in partitions_of(d, n):
        total = 0
        for beta in _bounded_vectors(tuple(alpha), mu.weight):
            k1 = kostka(mu, beta)
            if k1:
                total += k1 * kostka(nu, [a - b for a, b in zip(alpha, beta)])
        coeffs[alpha] = total
    return expand_dominant(coeffs, d, n)


def lr_tableau_count(lam: Iterable[int], mu: Iterable[int], nu: Iterable[int]) -> int:
    """``c^lam_{mu nu}`` by counting Littlewood-Richardson skew tableaux.

    Fillings of ``lam/mu`` with content ``nu`` that are semistandard and whose
    reverse reading word (rows top to bottom, each right to left) is a lattice
    word.
    """
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if lam.weight != mu.weight + nu.weight:
        return 0
    if any(mu.part(i) > lam.part(i) for i in range(1, len(mu) + 1)):
        return 0
    cells = [(i, j) for i in range(1, len(lam) + 1)
             for j in range(lam.part(i), mu.part(i), -1)]
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (len(nu) + 2)

    def rec(idx: int) -> int:
        if idx == len(cells):
            return 1
        i, j = cells[idx]
        hi = len(nu)
        if (i, j + 1) in filling:
            hi = min(hi, filling[i, j + 1])
        lo = 1
        if (i - 1, j) in filling:
            lo = filling[i - 1, j] + 1
        total = 0
        for v in range(lo, hi + 1):
            if counts[v] >= nu.part(v):
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            filling[i, j] = v
            total += rec(idx + 1)
            del filling[i, j]
            counts[v] -= 1
        return total

    return rec(0)


def lr_coefficients_tableaux(mu: Iterable[int], nu: Iterable[int], n: int) -> SchurExpansion:
    """Same as :func:`lr_coefficients` but through LR tableaux."""
    mu, nu = Partition(mu), Partition(nu)
    out = {}
    for lam in partitions_of(mu.weight + nu.weight, n):
        c = lr_tableau_count(lam, mu, nu)
        if c:
            out[lam] = c
    return SchurExpansion(n, out)


def lr_conjugate_symmetry_check(mu: Iterable[int], nu: Iterable[int], n: int | None = None) -> bool:
    """Check ``c^lam_{mu nu} == c^{lam'}_{mu' nu'}`` for every lam."""
    mu, nu = Partition(mu), Partition(nu)
    d = mu.weight + nu.weight
    if n is None:
        n = d
    if n < d:
        raise ValueError("need at least |mu| + |nu| variables to see every conjugate")
    left = lr_coefficients(mu, nu, n)
    right = lr_coefficients(conjugate(mu), conjugate(nu), n)
    lams = set(left) | {conjugate(l) for l in right}
    return all(left[lam] == right[conjugate(lam)] for lam in lams)


# ------------------------------------------------------- symmetric group


@lru_cache(maxsize=None)
def _mn(lam: Partition, rho: tuple[int, ...]) -> int:
    if not rho:
        return 1 if not lam else 0
    r, rest = rho[0], rho[1:]
    length = len(lam)
    beta = [lam[i] + (length - 1 - i) for i in range(length)]
    beads = set(beta)
    total = 0
    for b in beta:
        c = b - r
        if c < 0 or c in beads:
            continue
        sign = -1 if sum(1 for x in beta if c < x < b) % 2 else 1
        new = sorted([x for x in beta if x != b] + [c], reverse=True)
        mu = Partition(x - (length - 1 - i) for i, x in enumerate(new))
        total += sign * _mn(mu, rest)
    return total


def mn_character(lam: Iterable[int], rho: Iterable[int]) -> int:
    """Irreducible character ``chi_lam`` on the class of cycle type ``rho``.

    Murnaghan-Nakayama: strip rim hooks of length ``rho_1, rho_2, ...`` using
    beta-numbers, each hook contributing ``(-1)^(height)``.
    """
    lam = Partition(lam)
    rho = tuple(sorted((r for r in rho if r), reverse=True))
    if lam.weight != sum(rho):
        raise ValueError("partition and cycle type have different weights")
    return _mn(lam, rho)


def centralizer_order(rho: Iterable[int]) -> int:
    """``z_rho = prod_i i^{m_i} m_i!``."""
    rho = Partition(rho)
    z = 1
    for part in set(rho):
        mult = rho.count(part)
        z *= part ** mult * factorial(mult)
    return z


def class_size(rho: Iterable[int]) -> int:
    rho = Partition(rho)
    return factorial(rho.weight) // centralizer_order(rho)


def cycle_type(perm: tuple[int, ...]) -> Partition:
    """Cycle type of a permutation of ``0..m-1`` given in one-line notation."""
    seen = [False] * len(perm)
    cycles = []
    for i in range(len(perm)):
        if not seen[i]:
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            cycles.append(length)
    return Partition(sorted(cycles, reverse=True))


def permutation_of_type(rho: Iterable[int]) -> tuple[int, ...]:
    """A representative permutation (one-line, 0-based) of cycle type ``rho``."""
    perm = []
    start = 0
    for r in Partition(rho):
        perm.extend(range(start + 1, start + r))
        perm.append(start)
        start += r
    return tuple(perm)


def character_table(m: int) -> dict[Partition, dict[Partition, int]]:
    classes = partitions_of(m)
    return {lam: {rho: mn_character(lam, rho) for rho in classes} for lam in classes}


@dataclass
class SmCharacter:
    """A class function on ``S_m`` keyed by cycle type."""

    m: int
    values: dict[Partition, int] = field(default_factory=dict)

    def __post_init__(self):
        vals = {}
        for rho, v in self.values.items():
            rho = Partition(rho)
            if rho.weight != self.m:
                raise ValueError(f"cycle type {rho} is not a partition of {self.m}")
            if Fraction(v).denominator != 1:
                raise NonCharacter(f"non-integral value {v} on class {rho}")
            vals[rho] = int(v)
        self.values = vals

    @property
    def dimension(self) -> int:
        return self.values[Partition([1] * self.m)]

    def __getitem__(self, rho) -> int:
        return self.values[Partition(rho)]

    def to_csv_rows(self) -> list[str]:
        return [f"{' '.join(map(str, rho))},{self.values[rho]}" for rho in partitions_of(self.m)]


def sm_decompose(chi: SmCharacter) -> SchurExpansion:
    """Multiplicities of the irreducibles in ``chi`` via the character inner product."""
    m = chi.m
    classes = partitions_of(m)
    missing = [rho for rho in classes if rho not in chi.values]
    if missing:
        raise ValueError(f"character undefined on classes {missing}")
    order = factorial(m)
    out = {}
    for lam in classes:
        s = sum(class_size(rho) * chi.values[rho] * mn_character(lam, rho) for rho in classes)
        mult = Fraction(s, order)
        if mult.denominator != 1 or mult < 0:
            raise NonCharacter(f"multiplicity {mult} for {lam}")
        if mult:
            out[lam] = int(mult)
    return SchurExpansion(max(m, 1), out)
