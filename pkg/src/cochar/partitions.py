"""Partitions, Young diagrams and shape constraints.

Partitions are stored as plain tuples of positive integers without trailing
zeros.  ``lam.part(i)`` uses 1-based row indices and returns 0 past the end,
so ``lam.part(k + 1)`` reads as the usual ``lambda_{k+1}``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are accepted on input and dropped.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"not weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"negative part in {parts}")
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """Row ``i`` (1-based); zero beyond the stored length."""
        if i < 1:
            raise IndexError("rows are numbered from 1")
        return self[i - 1] if i <= len(self) else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def cells(self) -> Iterator[tuple[int, int]]:
        """Diagram cells as (row, column), both 1-based."""
        for i, row in enumerate(self, start=1):
            for j in range(1, row + 1):
                yield i, j

    def to_json(self) -> list[int]:
        return list(self)

    @classmethod
    def from_json(cls, data: Iterable[int]) -> "Partition":
        return cls(data)


class HookSpec(NamedTuple):
    """The hook H(k, l): partitions with ``lambda_{k+1} <= l``."""

    k: int
    l: int


@dataclass(frozen=True)
class BoundProfile:
    """Shape caps on the support of a cocharacter sequence.

    ``lambda_{omega0+1} <= s2`` and ``lambda'_{omega1+1} <= s1``; ``s1`` may be
    ``None`` when no cap on the conjugate side is known.  ``step_bounds`` holds
    pairs ``(row, cap)`` meaning ``lambda_row <= cap`` and ``conj_bounds`` the
    same for the conjugate partition.  ``omega1_exact`` is False when
    ``omega1`` is only an upper bound.
    """

    omega0: int
    omega1: int
    s1: int | None
    s2: int
    step_bounds: tuple[tuple[int, int], ...] = ()
    conj_bounds: tuple[tuple[int, int], ...] = ()
    omega1_exact: bool = True

    def __post_init__(self):
        object.__setattr__(self, "step_bounds", tuple(tuple(b) for b in self.step_bounds))
        object.__setattr__(self, "conj_bounds", tuple(tuple(b) for b in self.conj_bounds))
        values = [self.omega0, self.omega1, self.s2]
        if self.s1 is not None:
            values.append(self.s1)
        values += [x for pair in self.step_bounds + self.conj_bounds for x in pair]
        if any(v < 0 for v in values):
            raise ValueError(f"negative entry in {self}")
        if self.omega0 < self.omega1:
            raise ValueError("omega0 must be at least omega1")
        if any(row < 1 for row, _ in self.step_bounds + self.conj_bounds):
            raise ValueError("bound rows are 1-based")


def conjugate(lam: Iterable[int]) -> Partition:
    lam = Partition(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for row in lam if row >= j) for j in range(1, lam[0] + 1))


def in_hook(lam: Iterable[int], h: HookSpec | tuple[int, int]) -> bool:
    k, l = h
    return Partition(lam).part(k + 1) <= l


def satisfies_profile(lam: Iterable[int], b: BoundProfile) -> bool:
    lam = Partition(lam)
    if lam.part(b.omega0 + 1) > b.s2:
        return False
    conj = lam.conjugate()
    if b.s1 is not None and conj.part(b.omega1 + 1) > b.s1:
        return False
    if any(lam.part(row) > cap for row, cap in b.step_bounds):
        return False
    return all(conj.part(row) <= cap for row, cap in b.conj_bounds)


def step_check(lam: Iterable[int], p: int, n: int) -> bool:
    """The staircase caps ``lambda_{2k} <= p - k`` for Lie nilpotency index p.

    Only rows ``k <= n // 2`` with ``p > 2(k - 1)`` are constrained.
    """
    if p < 1 or n < 1:
        raise ValueError("p and n must be positive")
    lam = Partition(lam)
    for k in range(1, n // 2 + 1):
        if p > 2 * (k - 1) and lam.part(2 * k) > p - k:
            return False
    return True


def step_bounds_for(p: int) -> list[tuple[int, int]]:
    """All ``(2k, p - k)`` pairs with ``p > 2(k - 1)``."""
    out = []
    k = 1
    while p > 2 * (k - 1):
        out.append((2 * k, p - k))
        k += 1
    return out


def partitions_of(m: int, max_parts: int | None = None) -> list[Partition]:
    """Partitions of ``m`` with at most ``max_parts`` parts, reverse-lex order."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if max_parts is None:
        max_parts = m
    out: list[Partition] = []

    def rec(rest: int, cap: int, prefix: list[int]):
        if rest == 0:
            out.append(Partition(prefix))
            return
        if len(prefix) == max_parts:
            return
        for first in range(min(rest, cap), 0, -1):
            prefix.append(first)
            rec(rest - first, first, prefix)
            prefix.pop()

    rec(m, m, [])
    return out


def partitions_up_to(d: int, max_parts: int | None = None) -> list[Partition]:
    out = []
    for m in range(d + 1):
        out.extend(partitions_of(m, max_parts if max_parts is not None else m))
    return out


def is_rectangle(lam: Iterable[int], n: int) -> bool:
    """True iff ``lambda_1 = ... = lambda_n`` (the empty partition included)."""
    lam = Partition(lam)
    if not lam:
        return True
    return len(lam) == n and lam[0] == lam[-1]


def reverse_lex_key(lam: Partition) -> tuple:
    """Sort key giving reverse-lexicographic order under ``sorted``."""
    return tuple(-x for x in lam) + (1,)
