"""Brute-force reference counters for testing the fast tableau routines.

Everything in this module counts by direct exhaustive generation and shares
no code with the production paths (no hook products, no strip recursions,
no pruned backtracking).  Inputs are capped at weight 10; these exist to
check answers, not to be fast.
"""

from __future__ import annotations

from typing import Sequence

from .errors import DomainError
from .partitions import Partition

ORACLE_WEIGHT_CAP = 10


def _check_cap(weight: int) -> None:
    if weight > ORACLE_WEIGHT_CAP:
        raise DomainError(
            f"oracle refuses weight {weight} > {ORACLE_WEIGHT_CAP}; use the fast path"
        )


def oracle_count_syt(lam: Sequence[int]) -> int:
    """Count standard fillings by removing one outer corner at a time.

    Every maximal removal chain corresponds to exactly one standard tableau,
    so the number of recursion leaves is the count.
    """
    lam = Partition(lam)
    _check_cap(lam.weight)

    def rec(shape: tuple[int, ...]) -> int:
        if not shape:
            return 1
        total = 0
        for i in range(len(shape)):
            if i + 1 < len(shape) and shape[i] == shape[i + 1]:
                continue  # not a corner
            smaller = shape[:i] + (shape[i] - 1,) + shape[i + 1 :]
            total += rec(tuple(p for p in smaller if p))
        return total

    return rec(tuple(lam))


def oracle_count_ssyt(mu: Sequence[int], lam: Sequence[int]) -> int:
    """Count semistandard fillings by trying every entry in every cell."""
    mu = Partition(mu)
    lam = Partition(lam)
    if mu.weight != lam.weight:
        raise DomainError("shape and content must have equal weight")
    _check_cap(mu.weight)
    cells = [(i, j) for i in range(len(mu)) for j in range(mu[i])]
    remaining = list(lam)
    grid: dict[tuple[int, int], int] = {}

    def rec(idx: int) -> int:
        if idx == len(cells):
            return 1
        i, j = cells[idx]
        total = 0
        for v in range(1, len(remaining) + 1):
            if remaining[v - 1] == 0:
                continue
            if j > 0 and grid[(i, j - 1)] > v:
                continue
            if i > 0 and grid[(i - 1, j)] >= v:
                continue
            remaining[v - 1] -= 1
            grid[(i, j)] = v
            total += rec(idx + 1)
            del grid[(i, j)]
            remaining[v - 1] += 1
        return total

    return rec(0)


def _reverse_reading_word(grid: dict[tuple[int, int], int], rows: int) -> list[int]:
    word = []
    for i in range(rows):
        row = sorted((c for c in grid if c[0] == i), key=lambda c: -c[1])
        word.extend(grid[c] for c in row)
    return word


def _is_lattice_word(word: list[int]) -> bool:
    seen: dict[int, int] = {}
    for v in word:
        seen[v] = seen.get(v, 0) + 1
        if v > 1 and seen[v] > seen.get(v - 1, 0):
            return False
    return True


def oracle_lr(nu: Sequence[int], lam: Sequence[int], mu: Sequence[int]) -> int:
    """Count Littlewood-Richardson fillings the slow way.

    Generates every semistandard filling of the skew shape, then filters by
    the lattice-word property of the reverse reading word in a separate pass.
    """
    nu = Partition(nu)
    lam = Partition(lam)
    mu = Partition(mu)
    if nu.weight != lam.weight + mu.weight:
        raise DomainError("weight mismatch between outer shape and contents")
    _check_cap(nu.weight)
    if any(lam.part(i) > nu.part(i) for i in range(len(lam))):
        return 0
    cells = [(i, j) for i in range(len(nu)) for j in range(lam.part(i), nu[i])]
    remaining = list(mu)
    grid: dict[tuple[int, int], int] = {}
    hits = 0

    def rec(idx: int) -> None:
        nonlocal hits
        if idx == len(cells):
            if _is_lattice_word(_reverse_reading_word(grid, len(nu))):
                hits += 1
            return
        i, j = cells[idx]
        for v in range(1, len(remaining) + 1):
            if remaining[v - 1] == 0:
                continue
            if (i, j - 1) in grid and grid[(i, j - 1)] > v:
                continue
            if (i - 1, j) in grid and grid[(i - 1, j)] >= v:
                continue
            remaining[v - 1] -= 1
            grid[(i, j)] = v
            rec(idx + 1)
            del grid[(i, j)]
            remaining[v - 1] += 1

    rec(0)
    return hits
