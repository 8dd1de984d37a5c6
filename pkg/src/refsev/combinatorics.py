"""Partitions, integer multisets, orderings and divergence profiles."""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator, Mapping

from .errors import DomainError

__all__ = [
    "Partition",
    "IntMultiset",
    "DivergenceProfile",
    "partitions_of",
    "orderings",
    "ordering_count",
    "divergence_profiles",
    "sub_partitions",
    "parse_multiset",
    "parse_mult_list",
]


class Partition(tuple):
    """A partition stored as its multiplicity sequence.

    ``Partition((2, 0, 1))`` is ``(1^2, 3^1)``: entry ``i-1`` counts the parts
    equal to ``i``.  Trailing zeros are stripped so equal partitions compare equal.
    """

    __slots__ = ()

    def __new__(cls, mult: Iterable[int] = ()):
        mult = list(mult)
        if any(m < 0 for m in mult):
            raise DomainError(f"negative multiplicity in partition {mult}")
        while mult and mult[-1] == 0:
            mult.pop()
        return super().__new__(cls, mult)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        parts = list(parts)
        if any(p <= 0 for p in parts):
            raise DomainError("partition parts must be positive")
        mult = [0] * (max(parts) if parts else 0)
        for p in parts:
            mult[p - 1] += 1
        return cls(mult)

    @classmethod
    def ones(cls, n: int) -> "Partition":
        return cls((n,)) if n else cls()

    @property
    def size(self) -> int:
        """||mu||, the number partitioned."""
        return sum(i * m for i, m in enumerate(self, start=1))

    @property
    def length(self) -> int:
        """|mu|, the number of parts."""
        return sum(self)

    def mult(self, i: int) -> int:
        return self[i - 1] if 0 < i <= len(self) else 0

    def parts(self) -> list[int]:
        """Parts in decreasing order."""
        out = []
        for i in range(len(self), 0, -1):
            out.extend([i] * self[i - 1])
        return out

    def factorial(self) -> int:
        """mu! = prod_i mu_i!"""
        return prod(factorial(m) for m in self)

    def add(self, other: "Partition") -> "Partition":
        n = max(len(self), len(other))
        return Partition(self.mult(i) + other.mult(i) for i in range(1, n + 1))

    def sub(self, other: "Partition") -> "Partition":
        n = max(len(self), len(other))
        return Partition(self.mult(i) - other.mult(i) for i in range(1, n + 1))

    def bump(self, i: int, delta: int) -> "Partition":
        m = list(self) + [0] * max(0, i - len(self))
        m[i - 1] += delta
        return Partition(m)

    def __repr__(self):
        return f"Partition({self})"

    def __str__(self):
        if not self:
            return "()"
        items = []
        for i, m in enumerate(self, start=1):
            if m == 1:
                items.append(str(i))
            elif m:
                items.append(f"{i}^{m}")
        return "(" + ",".join(items) + ")"


EMPTY = Partition()


def _partition_tuples(n: int, max_part: int, max_parts: int | None) -> Iterator[list[int]]:
    if n == 0:
        yield []
        return
    if max_parts == 0:
        return
    for k in range(min(n, max_part), 0, -1):
        rest = None if max_parts is None else max_parts - 1
        for tail in _partition_tuples(n - k, k, rest):
            yield [k] + tail


@lru_cache(maxsize=4096)
def _partitions_cached(n: int, max_parts: int | None) -> tuple:
    return tuple(Partition.from_parts(p) for p in _partition_tuples(n, n, max_parts))


def partitions_of(n: int, max_parts: int | None = None) -> list[Partition]:
    """All partitions of ``n`` (optionally with at most ``max_parts`` parts).

    Order is reverse lexicographic in the decreasing part list, so ``(n)`` comes first.
    """
    if n < 0:
        raise DomainError(f"cannot partition a negative number ({n})")
    if max_parts is not None and max_parts >= n:
        max_parts = None
    return list(_partitions_cached(n, max_parts))


def sub_partitions(nu: Partition) -> Iterator[Partition]:
    """All partitions ``rho`` with ``rho_i <= nu_i`` for every ``i``."""
    for m in itertools.product(*(range(k + 1) for k in nu)):
        yield Partition(m)


class IntMultiset:
    """Finitely supported map from integers (any sign) to positive multiplicities."""

    __slots__ = ("_mult",)

    def __init__(self, mult: Mapping[int, int] | Iterable[int] = ()):
        if isinstance(mult, Mapping):
            items = mult.items()
        else:
            items = Counter(mult).items()
        clean = {}
        for v, m in items:
            if m < 0:
                raise DomainError(f"negative multiplicity {m} for value {v}")
            if m:
                clean[int(v)] = int(m)
        self._mult = dict(sorted(clean.items()))

    @classmethod
    def repeat(cls, value: int, times: int) -> "IntMultiset":
        return cls({value: times})

    def items(self):
        return self._mult.items()

    def values(self) -> list[int]:
        """Elements with repetition, ascending."""
        return [v for v, m in self._mult.items() for _ in range(m)]

    def __len__(self):
        """|r|, the number of elements with multiplicity."""
        return sum(self._mult.values())

    @property
    def norm(self) -> int:
        """||r|| = sum of value * multiplicity."""
        return sum(v * m for v, m in self._mult.items())

    def multiplicity(self, v: int) -> int:
        return self._mult.get(v, 0)

    def shift(self, k: int) -> "IntMultiset":
        return IntMultiset({v + k: m for v, m in self._mult.items()})

    def __add__(self, other: "IntMultiset") -> "IntMultiset":
        out = dict(self._mult)
        for v, m in other._mult.items():
            out[v] = out.get(v, 0) + m
        return IntMultiset(out)

    def __eq__(self, other):
        if not isinstance(other, IntMultiset):
            return NotImplemented
        return self._mult == other._mult

    def __hash__(self):
        return hash(tuple(self._mult.items()))

    def __repr__(self):
        return f"IntMultiset({self})"

    def __str__(self):
        if not self._mult:
            return "()"
        return "(" + ",".join(f"{v}^{m}" if m > 1 else str(v)
                              for v, m in self._mult.items()) + ")"

    def to_text(self) -> str:
        return ",".join(f"{v}^{m}" for v, m in self._mult.items())


@dataclass(frozen=True)
class DivergenceProfile:
    sequence: tuple[int, ...]
    multiplicity: int


def ordering_count(m: IntMultiset) -> int:
    """|m|! / prod(multiplicities!)."""
    out = factorial(len(m))
    for _, k in m.items():
        out //= factorial(k)
    return out


def _distinct_permutations(counts: dict, n: int) -> Iterator[tuple]:
    if n == 0:
        yield ()
        return
    for v in list(counts):
        if counts[v]:
            counts[v] -= 1
            for tail in _distinct_permutations(counts, n - 1):
                yield (v,) + tail
            counts[v] += 1


def orderings(m: IntMultiset) -> list[tuple[int, ...]]:
    """All distinct sequences realising the multiset, lexicographic order."""
    return list(_distinct_permutations(dict(m.items()), len(m)))


def divergence_profiles(r: IntMultiset, l: IntMultiset) -> list[DivergenceProfile]:
    """Distinct sequences ``R - L`` over ordering pairs, with pair counts."""
    if len(r) != len(l):
        raise DomainError(f"size mismatch: |r|={len(r)}, |l|={len(l)}")
    counts: Counter = Counter()
    lo = orderings(l)
    for R in orderings(r):
        for L in lo:
            counts[tuple(a - b for a, b in zip(R, L))] += 1
    return [DivergenceProfile(seq, k) for seq, k in sorted(counts.items())]


def parse_multiset(text: str) -> IntMultiset:
    """Parse ``"-1^2,2^1"`` style text; an omitted exponent means 1."""
    text = text.strip()
    if text in ("", "()", "-"):
        return IntMultiset()
    mult: Counter = Counter()
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        try:
            if "^" in item:
                v, m = item.split("^", 1)
                mult[int(v)] += int(m)
            else:
                mult[int(item)] += 1
        except ValueError:
            raise DomainError(f"bad multiset item {item!r}") from None
    return IntMultiset(mult)


def parse_mult_list(text: str | None) -> Partition:
    """Parse a multiplicity list ``"a1,a2,..."`` (entry i = number of parts i)."""
    if text is None:
        return EMPTY
    text = text.strip()
    if text in ("", "()", "-"):
        return EMPTY
    try:
        return Partition(int(x) for x in text.split(","))
    except ValueError:
        raise DomainError(f"bad multiplicity list {text!r}") from None
