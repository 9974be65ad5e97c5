"""Hook lengths, irreducible dimensions, Kostka numbers, Littlewood-Richardson coefficients.

Kostka and LR values are memoized in unbounded caches keyed by canonical
partition tuples; admissible-set enumeration revisits the same coefficients
heavily.  The caches only ever hold finished values, so concurrent readers
and writers observe value-identical results.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Sequence

from .errors import DomainError
from .partitions import Partition, dominates


def hook_lengths(lam: Sequence[int]) -> dict[tuple[int, int], int]:
    """Map each cell (row, col), 0-based, of the diagram to its hook length."""
    lam = Partition(lam)
    tl = lam.transpose()
    return {
        (i, j): (lam[i] - j) + (tl[j] - i) - 1
        for i in range(len(lam))
        for j in range(lam[i])
    }


@lru_cache(maxsize=None)
def _specht_dim(lam: Partition) -> int:
    product = 1
    for h in hook_lengths(lam).values():
        product *= h
    quotient, remainder = divmod(factorial(lam.weight), product)
    if remainder:
        raise AssertionError(f"hook-length division not exact for {lam}")
    return quotient


def specht_dim(lam: Sequence[int]) -> int:
    """Dimension of the irreducible indexed by ``lam``: k! over the hook product."""
    return _specht_dim(Partition(lam))


def two_row_dim(mu: Sequence[int]) -> int:
    """Closed-form dimension for shapes with at most two rows."""
    mu = Partition(mu)
    if len(mu) > 2:
        raise DomainError(f"closed form requires at most two rows, got {mu}")
    a = mu.part(0)
    b = mu.part(1)
    quotient, remainder = divmod(factorial(a + b) * (a - b + 1), factorial(a + 1) * factorial(b))
    if remainder:
        raise AssertionError(f"two-row division not exact for {mu}")
    return quotient


@dataclass(frozen=True)
class SkewShape:
    """A pair of nested partitions; the cells of outer not in inner."""

    outer: Partition
    inner: Partition

    def __post_init__(self):
        outer = Partition(self.outer)
        inner = Partition(self.inner)
        if not outer.contains(inner):
            raise DomainError(f"inner shape {inner} does not fit inside {outer}")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    @property
    def size(self) -> int:
        return self.outer.weight - self.inner.weight

    def cells(self) -> list[tuple[int, int]]:
        return [
            (i, j)
            for i in range(len(self.outer))
            for j in range(self.inner.part(i), self.outer[i])
        ]

    def is_horizontal_strip(self) -> bool:
        """At most one cell per column: rows interleave."""
        return all(
            self.outer.part(i + 1) <= self.inner.part(i) for i in range(len(self.outer))
        )

    def is_vertical_strip(self) -> bool:
        """At most one cell per row."""
        return all(
            self.outer[i] - self.inner.part(i) <= 1 for i in range(len(self.outer))
        )


@lru_cache(maxsize=None)
def _horizontal_strips_above(lam: Partition, n: int) -> tuple[Partition, ...]:
    rows = len(lam) + 1
    out: list[Partition] = []

    def rec(i: int, left: int, acc: list[int]) -> None:
        if left == 0:
            out.append(Partition._from_valid(tuple(acc) + tuple(lam[i:])))
            return
        if i == rows:
            return
        base = lam.part(i)
        hi = base + left
        if i > 0:
            hi = min(hi, lam[i - 1])  # a second cell in a column would break the strip
        for v in range(hi, base - 1, -1):
            acc.append(v)
            rec(i + 1, left - (v - base), acc)
            acc.pop()

    rec(0, n, [])
    return tuple(out)


def horizontal_strip_extensions(lam: Sequence[int], n: int) -> list[Partition]:
    """All partitions obtained from ``lam`` by adding a horizontal strip of ``n`` cells."""
    if n < 0:
        raise DomainError("strip size must be nonnegative")
    return list(_horizontal_strips_above(Partition(lam), n))


@lru_cache(maxsize=None)
def _vertical_strips_above(lam: Partition, n: int) -> tuple[Partition, ...]:
    rows = len(lam) + n
    out: list[Partition] = []

    def rec(i: int, left: int, prev: int, acc: list[int]) -> None:
        if left == 0:
            out.append(Partition._from_valid(tuple(acc) + tuple(lam[i:])))
            return
        if left > rows - i:  # each remaining row takes at most one cell
            return
        base = lam.part(i)
        for add in (1, 0):
            if add > left:
                continue
            v = base + add
            if v > prev or v == 0:
                continue
            acc.append(v)
            rec(i + 1, left - add, v, acc)
            acc.pop()

    rec(0, n, n + (lam[0] if lam else 0), [])
    return tuple(out)


def vertical_strip_extensions(lam: Sequence[int], n: int) -> list[Partition]:
    """All partitions obtained from ``lam`` by adding a vertical strip of ``n`` cells."""
    if n < 0:
        raise DomainError("strip size must be nonnegative")
    return list(_vertical_strips_above(Partition(lam), n))


@lru_cache(maxsize=None)
def _horizontal_strips_below(mu: Partition, n: int) -> tuple[Partition, ...]:
    rows = len(mu)
    out: list[Partition] = []

    def rec(i: int, left: int, acc: list[int]) -> None:
        if left == 0:
            out.append(Partition._from_valid(tuple(acc) + tuple(mu[i:])))
            return
        if i == rows:
            return
        lo = max(mu.part(i + 1), mu[i] - left)
        for v in range(mu[i], lo - 1, -1):
            if v:
                acc.append(v)
            rec(i + 1, left - (mu[i] - v), acc)
            if v:
                acc.pop()

    rec(0, n, [])
    return tuple(out)


def horizontal_strip_restrictions(mu: Sequence[int], n: int) -> list[Partition]:
    """All partitions obtained from ``mu`` by removing a horizontal strip of ``n`` cells."""
    if n < 0:
        raise DomainError("strip size must be nonnegative")
    return list(_horizontal_strips_below(Partition(mu), n))


@lru_cache(maxsize=None)
def _kostka(mu: Partition, lam: Partition) -> int:
    if not lam:
        return 1 if not mu else 0
    if not dominates(mu, lam):
        return 0
    head = Partition(lam[:-1])
    # the cells holding the largest entry form a horizontal strip at the border
    return sum(_kostka(nu, head) for nu in horizontal_strip_restrictions(mu, lam[-1]))


def kostka(mu: Sequence[int], lam: Sequence[int]) -> int:
    """Number of semistandard tableaux of shape ``mu`` and content ``lam``.

    Rows weakly increase, columns strictly increase, and entry ``i`` appears
    ``lam[i-1]`` times.
    """
    mu = Partition(mu)
    lam = Partition(lam)
    if mu.weight != lam.weight:
        raise DomainError(
            f"shape and content must have equal weight, got {mu.weight} and {lam.weight}"
        )
    return _kostka(mu, lam)


@lru_cache(maxsize=None)
def _lr(nu: Partition, lam: Partition, mu: Partition) -> int:
    # Fill the skew cells of nu/lam in reverse reading order (rows top to
    # bottom, right to left) with content mu.  Filling in this order makes
    # the lattice-word property a running prefix condition on value counts;
    # row/column admissibility only ever looks at already placed neighbours.
    cells = [
        (i, j)
        for i in range(len(nu))
        for j in range(nu[i] - 1, lam.part(i) - 1, -1)
    ]
    values = len(mu)
    remaining = list(mu)
    counts = [0] * values
    grid: dict[tuple[int, int], int] = {}

    def rec(idx: int) -> int:
        if idx == len(cells):
            return 1
        i, j = cells[idx]
        total = 0
        for v in range(1, values + 1):
            if remaining[v - 1] == 0:
                continue
            if v > 1 and counts[v - 1] + 1 > counts[v - 2]:
                continue  # lattice word: entry v may not outrun entry v-1
            right = grid.get((i, j + 1))
            if right is not None and right < v:
                continue
            if i > 0 and j >= lam.part(i - 1) and grid[(i - 1, j)] >= v:
                continue
            remaining[v - 1] -= 1
            counts[v - 1] += 1
            grid[(i, j)] = v
            total += rec(idx + 1)
            del grid[(i, j)]
            counts[v - 1] -= 1
            remaining[v - 1] += 1
        return total

    return rec(0)


def lr_coefficient(nu: Sequence[int], lam: Sequence[int], mu: Sequence[int]) -> int:
    """Littlewood-Richardson coefficient: multiplicity of ``nu`` in the module
    induced from the pair ``(lam, mu)`` of irreducibles of a Young-type subgroup.

    Counts skew tableaux of shape ``nu/lam`` and content ``mu`` whose reverse
    reading word is a lattice word.  Symmetric in ``lam`` and ``mu``.
    """
    nu = Partition(nu)
    lam = Partition(lam)
    mu = Partition(mu)
    if nu.weight != lam.weight + mu.weight:
        raise DomainError(
            f"weight mismatch: {nu.weight} != {lam.weight} + {mu.weight}"
        )
    if not nu.contains(lam):
        return 0
    return _lr(nu, lam, mu)
