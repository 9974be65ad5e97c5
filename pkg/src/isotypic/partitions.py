"""Integer partitions and tuples of partitions: enumeration, order theory, counting.

Everything here is a pure function on immutable values.  The canonical
enumeration order used throughout the package is reverse-lexicographic on
part sequences, which for :class:`Partition` (a tuple subclass) is plain
``sorted(..., reverse=True)``.
"""

from __future__ import annotations

import itertools
from collections import Counter
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import DomainError, ParseError


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    The empty partition ``Partition()`` is a first-class value of weight 0
    and length 0.  Instances compare and hash like plain tuples.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        if type(parts) is cls:
            return parts
        parts = tuple(parts)
        previous = None
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool) or p < 1:
                raise DomainError(f"partition parts must be positive integers, got {p!r}")
            if previous is not None and p > previous:
                raise DomainError(f"partition parts must be weakly decreasing, got {parts}")
            previous = p
        return tuple.__new__(cls, parts)

    @classmethod
    def _from_valid(cls, parts: tuple[int, ...]) -> "Partition":
        # fast path for callers that construct well-formed parts
        return tuple.__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The ``i``-th part (0-based), zero-padded beyond the length."""
        return self[i] if 0 <= i < len(self) else 0

    def transpose(self) -> "Partition":
        """Reflect the Young diagram across its main diagonal."""
        return _transpose(self)

    def contains(self, other: "Partition") -> bool:
        """Cellwise containment of Young diagrams (other fits inside self)."""
        return all(other[i] <= self.part(i) for i in range(len(other)))

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self) + "]"

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


@lru_cache(maxsize=None)
def _transpose(lam: "Partition") -> "Partition":
    if not lam:
        return lam
    return Partition._from_valid(
        tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))
    )


class PartitionTuple(tuple):
    """One partition per factor of a product of symmetric groups."""

    __slots__ = ()

    def __new__(cls, components: Iterable[Sequence[int]] = ()) -> "PartitionTuple":
        comps = tuple(c if isinstance(c, Partition) else Partition(c) for c in components)
        return tuple.__new__(cls, comps)

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(c.weight for c in self)

    @property
    def length(self) -> int:
        """Total number of parts across all components."""
        return sum(len(c) for c in self)

    def transpose(self) -> "PartitionTuple":
        return PartitionTuple(c.transpose() for c in self)

    def __str__(self) -> str:
        return ";".join(str(c) for c in self)

    def __repr__(self) -> str:
        return f"PartitionTuple({tuple(tuple(c) for c in self)!r})"


@lru_cache(maxsize=None)
def _partitions(k: int, max_length: int) -> tuple[Partition, ...]:
    out: list[Partition] = []

    def rec(remaining: int, max_part: int, rows_left: int, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(Partition(prefix))
            return
        if rows_left == 0:
            return
        for part in range(min(remaining, max_part), 0, -1):
            if remaining - part > part * (rows_left - 1):
                break  # parts only get smaller from here; nothing below fits
            prefix.append(part)
            rec(remaining - part, part, rows_left - 1, prefix)
            prefix.pop()

    rec(k, k, max_length, [])
    return tuple(out)


def enumerate_partitions(k: int, max_length: int | None = None) -> list[Partition]:
    """All partitions of ``k`` (length at most ``max_length`` if given).

    Returned in canonical order: reverse-lexicographic on part sequences,
    so ``(4) > (3,1) > (2,2) > (2,1,1) > (1,1,1,1)``.
    """
    if k < 0:
        raise DomainError("cannot partition a negative integer")
    if max_length is not None and max_length < 1:
        raise DomainError("max_length must be a positive integer")
    cap = k if max_length is None else min(max_length, k)
    return list(_partitions(k, cap))


@lru_cache(maxsize=None)
def _count_at_most(n: int, length: int) -> int:
    # partitions of n into at most `length` parts
    if n == 0:
        return 1
    if length == 0:
        return 0
    if length > n:
        length = n
    return _count_at_most(n, length - 1) + _count_at_most(n - length, length)


def count_partitions(k: int, max_length: int | None = None) -> int:
    """card(Par(k)) or card(Par(k, max_length)), without enumerating."""
    if k < 0:
        raise DomainError("cannot partition a negative integer")
    return _count_at_most(k, k if max_length is None else min(max_length, k))


def count_exact_length(k: int, length: int) -> int:
    """Number of partitions of ``k`` with exactly ``length`` parts."""
    if length < 0:
        return 0
    if length == 0:
        return 1 if k == 0 else 0
    if length > k:
        return 0
    return _count_at_most(k, length) - _count_at_most(k, length - 1)


def dominates(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """Dominance order: every prefix sum of ``mu`` is >= that of ``lam``.

    Both arguments must partition the same integer; parts are zero-padded.
    """
    mu = Partition(mu)
    lam = Partition(lam)
    if mu.weight != lam.weight:
        raise DomainError(
            f"dominance compares partitions of equal weight, got {mu.weight} and {lam.weight}"
        )
    sum_mu = sum_lam = 0
    for i in range(max(len(mu), len(lam))):
        sum_mu += mu.part(i)
        sum_lam += lam.part(i)
        if sum_mu < sum_lam:
            return False
    return True


def count_by_length_profile(weights: Sequence[int], profile: Sequence[int]) -> int:
    """Number of partition tuples of ``weights`` with the exact per-factor lengths."""
    if len(weights) != len(profile):
        raise DomainError("weight tuple and length profile must have equal arity")
    total = 1
    for k, p in zip(weights, profile):
        total *= count_exact_length(k, p)
        if total == 0:
            return 0
    return total


def enumerate_partition_tuples(
    weights: Sequence[int], max_lengths: Sequence[int]
) -> list[PartitionTuple]:
    """Cartesian product of the per-factor bounded enumerations, canonical order."""
    if len(weights) != len(max_lengths):
        raise DomainError("weight tuple and length-bound tuple must have equal arity")
    factors = [enumerate_partitions(k, d) for k, d in zip(weights, max_lengths)]
    return [PartitionTuple(combo) for combo in itertools.product(*factors)]


def count_partition_tuples(weights: Sequence[int], max_lengths: Sequence[int]) -> int:
    if len(weights) != len(max_lengths):
        raise DomainError("weight tuple and length-bound tuple must have equal arity")
    total = 1
    for k, d in zip(weights, max_lengths):
        total *= count_partitions(k, d)
    return total


def splits(lam: Sequence[int]) -> list[tuple[Partition, Partition]]:
    """All ordered two-sided decompositions of the part multiset of ``lam``.

    Equal parts are interchangeable, so the result is deduplicated by
    multiset; there are prod(m_v + 1) splits, always including the two
    trivial ones with an empty side.
    """
    lam = Partition(lam)
    counts = Counter(lam)
    values = sorted(counts, reverse=True)
    out = []
    for take in itertools.product(*(range(counts[v], -1, -1) for v in values)):
        left: list[int] = []
        right: list[int] = []
        for v, t in zip(values, take):
            left.extend([v] * t)
            right.extend([v] * (counts[v] - t))
        out.append((Partition(left), Partition(right)))
    out.sort(key=lambda pair: pair[0], reverse=True)
    return out


def _parse_partition_at(text: str, i: int) -> tuple[Partition, int]:
    n = len(text)
    if i >= n or text[i] != "[":
        raise ParseError("expected '['", i)
    i += 1
    parts: list[int] = []
    if i < n and text[i] == "]":
        return Partition(), i + 1
    while True:
        start = i
        while i < n and text[i].isdigit():
            i += 1
        if i == start:
            raise ParseError("expected integer", i)
        value = int(text[start:i])
        if value < 1:
            raise ParseError("parts must be positive", start)
        if parts and value > parts[-1]:
            raise ParseError("parts must be weakly decreasing", start)
        parts.append(value)
        if i < n and text[i] == ",":
            i += 1
            continue
        if i < n and text[i] == "]":
            return Partition(parts), i + 1
        raise ParseError("expected ',' or ']'", i)


def parse_partition(text: str) -> Partition:
    """Parse ``[3,1,1]`` syntax; ``[]`` is the empty partition."""
    part, i = _parse_partition_at(text, 0)
    if i != len(text):
        raise ParseError("unexpected trailing input", i)
    return part


def parse_partition_tuple(text: str) -> PartitionTuple:
    """Parse semicolon-separated partition syntax, e.g. ``[3,1];[2]``."""
    comps = []
    i = 0
    while True:
        part, i = _parse_partition_at(text, i)
        comps.append(part)
        if i == len(text):
            return PartitionTuple(comps)
        if text[i] != ";":
            raise ParseError("expected ';'", i)
        i += 1
