"""Brute-force linear algebra in the free associative algebra K<x_1..x_n>.

Words are tuples of letters ``1..n``.  For an ideal spec the multidegree
components of ``I`` (intersected with K<X_n>) are computed recursively, using
that ``I`` is two-sided:

* ``I_{p+1}`` at ``mu`` is spanned by ``x_i I_{mu-e_i}``, ``I_{mu-e_i} x_i``
  and the commutators ``[w_1, ..., w_p, x]`` (monomials ``w_j``, letter x);
* a product ``J_1 J_2`` at ``mu`` is spanned by ``x_i (J_1 J_2)_{mu-e_i}``
  and the products ``u v`` with ``u`` in ``(J_1)_alpha`` and ``v`` in
  ``(J_2)_{mu-alpha}``.

Left multiplication by a letter maps a reduced echelon basis to a reduced
echelon basis, so that part is copied without any elimination; only the
remaining spanning vectors are reduced.  Vectors produced at ``mu-e_i`` by
left multiplication never need to be pushed through again, which is why each
component remembers the pivots it created itself ("extra" pivots).
"""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Mapping, Sequence

from .echelon import Echelon, _norm
from .errors import DegreeTooLarge, NonCharacter
from .partitions import Partition, partitions_of
from .series import FULL, PROPER, HilbertSeries, IdealSpec, exponents_up_to, hilbert_from_proper
from .symfunc import (SchurExpansion, SmCharacter, SymPoly, permutation_of_type, schur_expand,
                      sm_decompose)

Word = tuple[int, ...]

DEFAULT_MAX_WORDS = 4 ** 8
DEFAULT_MAX_M = 7


@dataclass(frozen=True)
class WorkLimits:
    """Caps on the size of the word spaces handled by exact elimination."""

    max_words: int = DEFAULT_MAX_WORDS
    max_m: int = DEFAULT_MAX_M

    @classmethod
    def from_env(cls) -> "WorkLimits":
        raw = os.environ.get("COCHAR_MAX_WORDS")
        return cls(max_words=int(raw)) if raw else cls()


def _limits(limits: WorkLimits | None) -> WorkLimits:
    return limits if limits is not None else WorkLimits.from_env()


# ------------------------------------------------------------------ words


def multinomial(mu: Sequence[int]) -> int:
    out = factorial(sum(mu))
    for k in mu:
        out //= factorial(k)
    return out


def words_of(mu: Sequence[int]) -> Iterator[Word]:
    """Words with letter counts ``mu``, in lexicographic order."""
    counts = list(mu)
    total = sum(counts)
    word: list[int] = []

    def rec():
        if len(word) == total:
            yield tuple(word)
            return
        for i, c in enumerate(counts):
            if c:
                counts[i] -= 1
                word.append(i + 1)
                yield from rec()
                word.pop()
                counts[i] += 1

    yield from rec()


def multidegree(word: Word, n: int) -> tuple[int, ...]:
    out = [0] * n
    for a in word:
        out[a - 1] += 1
    return tuple(out)


def _mul(a: Mapping, b: Mapping) -> dict:
    out: dict = {}
    for u, x in a.items():
        for v, y in b.items():
            w = u + v
            c = out.get(w, 0) + x * y
            if c:
                out[w] = c
            else:
                del out[w]
    return out


def _comm(a: Mapping, b: Mapping) -> dict:
    out = _mul(a, b)
    for w, c in _mul(b, a).items():
        x = out.get(w, 0) - c
        if x:
            out[w] = x
        else:
            out.pop(w, None)
    return out


class FreeElement:
    """A noncommutative polynomial: word -> exact coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, object] | None = None):
        self.terms: dict[Word, object] = {}
        for w, c in (terms or {}).items():
            if c:
                self.terms[tuple(w)] = _norm(Fraction(c)) if not isinstance(c, int) else c

    @classmethod
    def letter(cls, i: int) -> "FreeElement":
        return cls({(i,): 1})

    @classmethod
    def word(cls, w: Iterable[int]) -> "FreeElement":
        return cls({tuple(w): 1})

    @classmethod
    def one(cls) -> "FreeElement":
        return cls({(): 1})

    def __add__(self, other: "FreeElement") -> "FreeElement":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return FreeElement(out)

    def __neg__(self) -> "FreeElement":
        return FreeElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "FreeElement") -> "FreeElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FreeElement({w: c * other for w, c in self.terms.items()})
        return FreeElement(_mul(self.terms, other.terms))

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, FreeElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coefficient(self, w: Iterable[int]):
        return self.terms.get(tuple(w), 0)

    def multidegrees(self, n: int) -> set[tuple[int, ...]]:
        return {multidegree(w, n) for w in self.terms}

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=lambda w: (len(w), w)):
            c = self.terms[w]
            mono = "*".join(f"x{a}" for a in w) or "1"
            parts.append(mono if c == 1 else f"-{mono}" if c == -1 else f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def long_commutator(elements: Sequence[FreeElement]) -> FreeElement:
    """Left-normed commutator ``[u_1, ..., u_i] = [[u_1, ..., u_{i-1}], u_i]``."""
    if not elements:
        raise ValueError("need at least one element")
    acc = dict(elements[0].terms)
    for u in elements[1:]:
        acc = _comm(acc, u.terms)
    return FreeElement(acc)


def _commutator_of_words(parts: Sequence[Word]) -> dict:
    acc = {parts[0]: 1}
    for w in parts[1:]:
        acc = _comm(acc, {w: 1})
    return acc


def commutator_generators(p: int, mu: Sequence[int]) -> Iterator[dict]:
    """``[w_1, ..., w_p, x]`` for monomials ``w_j`` and a letter ``x``, at ``mu``.

    Together with left and right multiples of lower components these span
    the ``mu`` component of ``I_{p+1}``: a longer last entry splits by the
    Leibniz rule into such terms.
    """
    d = sum(mu)
    if d < p + 1:
        return
    for word in words_of(mu):
        x = word[-1:]
        prefix = word[:-1]
        for cuts in itertools.combinations(range(1, d - 1), p - 1):
            bounds = (0,) + cuts + (d - 1,)
            parts = [prefix[a:b] for a, b in zip(bounds, bounds[1:])] + [x]
            vec = _commutator_of_words(parts)
            if vec:
                yield vec


# ----------------------------------------------------------- ideal engine


def _minus(mu: tuple[int, ...], i: int) -> tuple[int, ...]:
    return mu[:i] + (mu[i] - 1,) + mu[i + 1:]


def _sub_multidegrees(mu: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    return itertools.product(*(range(k + 1) for k in mu))


class IdealComponents:
    """Multidegree components of a product of commutator T-ideals in n letters.

    Components are cached; each is an :class:`Echelon` whose pivots are the
    words that vanish modulo lower ones and whose remaining words form a
    basis of the relatively free algebra in that multidegree.
    """

    def __init__(self, spec: IdealSpec, n: int):
        self.spec = IdealSpec.parse(spec)
        self.n = n
        self.head = self.spec.factors[0]
        if self.spec.k > 1:
            self.first = _engine((self.head,), n)
            self.tail = _engine(self.spec.factors[1:], n)
        else:
            self.first = None
            self.tail = None
        self._components: dict[tuple[int, ...], Echelon] = {}
        self._extra: dict[tuple[int, ...], list] = {}

    def component(self, mu: Sequence[int]) -> Echelon:
        mu = tuple(mu)
        if len(mu) != self.n:
            raise ValueError(f"multidegree {mu} does not have {self.n} entries")
        ech = self._components.get(mu)
        if ech is None:
            self._build(mu)
            ech = self._components[mu]
        return ech

    def extra_pivots(self, mu: tuple[int, ...]) -> list:
        self.component(mu)
        return self._extra[mu]

    def _build(self, mu: tuple[int, ...]):
        ech = Echelon()
        extra: list = []
        if sum(mu) >= self.spec.min_degree:
            full = multinomial(mu)
            for i in range(self.n):
                if mu[i]:
                    sub = self.component(_minus(mu, i))
                    x = (i + 1,)
                    for piv, row in sub.rows.items():
                        ech.insert_reduced_row(x + piv, {x + w: c for w, c in row.items()})

            def offer(vec):
                if ech.rank < full:
                    p = ech.add(vec)
                    if p is not None:
                        extra.append(p)

            if self.tail is None:
                for i in range(self.n):
                    if mu[i]:
                        lower = _minus(mu, i)
                        sub = self.component(lower)
                        x = (i + 1,)
                        for q in self._extra[lower]:
                            offer({w + x: c for w, c in sub.rows[q].items()})
                for g in commutator_generators(self.head, mu):
                    if ech.rank == full:
                        break
                    offer(g)
            else:
                for alpha in _sub_multidegrees(mu):
                    beta = tuple(a - b for a, b in zip(mu, alpha))
                    if sum(alpha) < self.head + 1 or sum(beta) < self.tail.spec.min_degree:
                        continue
                    left = self.first.component(alpha)
                    right = self.tail.component(beta)
                    for q in self.first.extra_pivots(alpha):
                        a = left.rows[q]
                        for b in right.rows.values():
                            offer(_mul(a, b))
        self._components[mu] = ech
        self._extra[mu] = extra

    def quotient_basis(self, mu: Sequence[int]) -> list[Word]:
        """Standard words: a basis of the relatively free algebra at ``mu``."""
        ech = self.component(mu)
        return [w for w in words_of(mu) if w not in ech.rows]

    def normal_form(self, vec: Mapping) -> dict:
        """Reduce a homogeneous vector (any multidegree mix) modulo the ideal."""
        by_mu: dict[tuple[int, ...], dict] = {}
        for w, c in vec.items():
            by_mu.setdefault(multidegree(w, self.n), {})[w] = c
        out: dict = {}
        for mu, part in by_mu.items():
            out.update(self.component(mu).reduce(part))
        return out


@lru_cache(maxsize=64)
def _engine(factors: tuple[int, ...], n: int) -> IdealComponents:
    return IdealComponents(IdealSpec(factors), n)


def ideal_components(spec, n: int) -> IdealComponents:
    """Shared (cached) component engine for ``spec`` in n letters."""
    return _engine(IdealSpec.parse(spec).factors, n)


def _check_words(n: int, D: int, limits: WorkLimits | None):
    lim = _limits(limits)
    if n ** D > lim.max_words:
        raise DegreeTooLarge(f"{n}^{D} = {n ** D} words exceed the cap of {lim.max_words}")


# ------------------------------------------------------------ public API


@dataclass
class GradedDims:
    """Dimensions per multidegree, complete up to total degree D."""

    n: int
    D: int
    dims: dict[tuple[int, ...], int] = field(default_factory=dict)

    def __getitem__(self, mu) -> int:
        return self.dims[tuple(mu)]

    def by_degree(self) -> list[int]:
        out = [0] * (self.D + 1)
        for mu, d in self.dims.items():
            out[sum(mu)] += d
        return out

    def to_series(self, role: str = FULL) -> HilbertSeries:
        return HilbertSeries(SymPoly(self.n, self.dims, self.D), role)

    def to_csv_rows(self) -> list[str]:
        return [",".join(map(str, mu)) + f",{self.dims[mu]}"
                for mu in sorted(self.dims, key=lambda m: (sum(m), tuple(-x for x in m)))]


def tideal_graded_span(spec, n: int, mu: Sequence[int],
                       limits: WorkLimits | None = None) -> list[FreeElement]:
    """Reduced echelon basis of the ``mu`` component of the ideal in K<X_n>."""
    mu = tuple(mu)
    if multinomial(mu) > _limits(limits).max_words:
        raise DegreeTooLarge(f"component {mu} has {multinomial(mu)} words")
    ech = ideal_components(spec, n).component(mu)
    return [FreeElement(row) for row in ech.basis()]


def relfree_dims(spec, n: int, D: int, limits: WorkLimits | None = None) -> GradedDims:
    """Dimensions of the relatively free algebra of rank n, per multidegree."""
    _check_words(n, D, limits)
    eng = ideal_components(spec, n)
    dims = {mu: multinomial(mu) - eng.component(mu).rank for mu in exponents_up_to(n, D)}
    return GradedDims(n, D, dims)


def relfree_hilbert(spec, n: int, D: int, limits: WorkLimits | None = None) -> HilbertSeries:
    return relfree_dims(spec, n, D, limits).to_series(FULL)


def _lie_and_proper(eng: IdealComponents, D: int):
    """Images in the quotient of Lie elements and of proper polynomials.

    Returns two dicts ``mu -> list of reduced vectors`` spanning the images
    of the multihomogeneous Lie elements and of the proper polynomials.
    """
    n = eng.n
    lie: dict[tuple[int, ...], list] = {}
    proper: dict[tuple[int, ...], list] = {(0,) * n: [{(): 1}]}
    by_degree = sorted(exponents_up_to(n, D), key=sum)
    for mu in by_degree:
        d = sum(mu)
        if d == 0:
            continue
        comp = eng.component(mu)
        if d == 1:
            lie[mu] = [{(mu.index(1) + 1,): 1}]
            proper[mu] = []
            continue
        span = Echelon()
        for i in range(n):
            if mu[i]:
                x = {(i + 1,): 1}
                for ell in lie[_minus(mu, i)]:
                    span.add(comp.reduce(_comm(ell, x)))
        lie[mu] = span.basis()
        span = Echelon()
        for nu in _sub_multidegrees(mu):
            if sum(nu) < 2:
                continue
            rest = tuple(a - b for a, b in zip(mu, nu))
            for ell in lie[nu]:
                for b in proper[rest]:
                    span.add(comp.reduce(_mul(ell, b)))
        proper[mu] = span.basis()
    return lie, proper


def proper_dims(spec, n: int, D: int, limits: WorkLimits | None = None) -> GradedDims:
    """Dimensions of the image of the proper polynomials, per multidegree."""
    _check_words(n, D, limits)
    eng = ideal_components(spec, n)
    _, proper = _lie_and_proper(eng, D)
    return GradedDims(n, D, {mu: len(vs) for mu, vs in proper.items()})


def proper_hilbert(spec, n: int, D: int, limits: WorkLimits | None = None) -> HilbertSeries:
    return proper_dims(spec, n, D, limits).to_series(PROPER)


def drensky_factorization_check(spec, n: int, D: int, limits: WorkLimits | None = None) -> bool:
    """Full series equals ``prod 1/(1-t_i)`` times the proper series."""
    full = relfree_hilbert(spec, n, D, limits)
    assembled = hilbert_from_proper(proper_hilbert(spec, n, D, limits), n, D)
    return full.poly == assembled.poly


def _act(perm: Sequence[int], word: Word) -> Word:
    # letter a -> perm[a-1] + 1 (perm is 0-based one-line notation)
    return tuple(perm[a - 1] + 1 for a in word)


def _inverse(perm: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for i, j in enumerate(perm):
        inv[j] = i
    return tuple(inv)


def multilinear_quotient(spec, m: int,
                         limits: WorkLimits | None = None) -> tuple[int, SmCharacter]:
    """Codimension ``c_m`` and the S_m character of the multilinear quotient.

    The character on a class is the trace on all multilinear words minus the
    trace on the ideal part; the latter is read off the reduced basis, since
    the coefficient of row ``r`` in ``sigma(r)`` is the entry of ``sigma(r)``
    at the pivot of ``r``.
    """
    lim = _limits(limits)
    if m < 1:
        raise ValueError("m must be positive")
    if m > lim.max_m or factorial(m) > lim.max_words:
        raise DegreeTooLarge(f"multilinear degree {m} exceeds the cap {lim.max_m}")
    eng = ideal_components(spec, m)
    ech = eng.component((1,) * m)
    order = factorial(m)
    codim = order - ech.rank
    values = {}
    for rho in partitions_of(m):
        sigma = permutation_of_type(rho)
        inv = _inverse(sigma)
        full_trace = order if rho == Partition([1] * m) else 0
        ideal_trace = 0
        for piv, row in ech.rows.items():
            c = row.get(_act(inv, piv))
            if c:
                ideal_trace += c
        trace = full_trace - ideal_trace
        if Fraction(trace).denominator != 1:
            raise NonCharacter(f"non-integral trace {trace} on class {rho}")
        values[rho] = int(trace)
    return codim, SmCharacter(m, values)


def quotient_character(spec, m: int, limits: WorkLimits | None = None) -> SmCharacter:
    """S_m character computed directly on the quotient basis.

    Independent of :func:`multilinear_quotient`'s trace subtraction: every
    standard word is permuted, reduced to normal form and its own coefficient
    collected.
    """
    lim = _limits(limits)
    if m > lim.max_m:
        raise DegreeTooLarge(f"multilinear degree {m} exceeds the cap {lim.max_m}")
    eng = ideal_components(spec, m)
    mu = (1,) * m
    ech = eng.component(mu)
    std = eng.quotient_basis(mu)
    values = {}
    for rho in partitions_of(m):
        sigma = permutation_of_type(rho)
        total = 0
        for s in std:
            total += ech.reduce({_act(sigma, s): 1}).get(s, 0)
        values[rho] = total
    return SmCharacter(m, values)


def berele_drensky_crosscheck(spec, m: int, limits: WorkLimits | None = None) -> bool:
    """S_m cocharacter multiplicities agree with the GL(m) Schur expansion in degree m."""
    _, chi = multilinear_quotient(spec, m, limits)
    sm_route = sm_decompose(chi)
    gl_route = schur_expand(relfree_hilbert(spec, m, m, limits).poly).of_degree(m)
    return dict(sm_route.items()) == dict(gl_route.items())


def ideal_inclusion_witnesses(spec_a, spec_b, n: int, D: int,
                              limits: WorkLimits | None = None) -> list[tuple[int, ...]]:
    """Multidegrees (total degree <= D) where the first ideal is not inside the second."""
    _check_words(n, D, limits)
    a = ideal_components(spec_a, n)
    b = ideal_components(spec_b, n)
    out = []
    for mu in exponents_up_to(n, D):
        comp_a, comp_b = a.component(mu), b.component(mu)
        if comp_a.rank > comp_b.rank or any(comp_b.reduce(r) for r in comp_a.rows.values()):
            out.append(mu)
    return out


def ideal_inclusion_check(spec_a, spec_b, n: int, D: int,
                          limits: WorkLimits | None = None) -> bool:
    return not ideal_inclusion_witnesses(spec_a, spec_b, n, D, limits)
