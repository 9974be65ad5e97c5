"""Admissible irreducibles for symmetric sets of bounded degree.

The admissible set for parameters (k, d, m) is the union, over all
partitions of k with at most (2d)^m parts, of the irreducibles reachable
from some split of that partition.  Membership is computed exactly; the
row/column restriction test is only a fast necessary filter (it admits
partitions, such as (4,2,1) for threshold 2, that exact enumeration rules
out).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import DomainError
from .induction import max_split_multiplicities
from .partitions import Partition, PartitionTuple, enumerate_partitions


def restriction_threshold(d: int, m: int) -> int:
    if d < 1 or m < 1:
        raise DomainError("degree and width must be positive")
    return (2 * d) ** m


def fits_in_corner(mu: Sequence[int], threshold: int) -> bool:
    """True iff the diagram lies in the union of ``threshold`` rows and
    ``threshold`` columns, i.e. contains no (threshold+1)-square.

    Equivalently: at most ``threshold`` rows are longer than ``threshold``,
    and, symmetrically, at most ``threshold`` columns are taller.
    """
    mu = Partition(mu)
    return mu.part(threshold) <= threshold


def restriction_check(mu: Sequence[int], d: int, m: int) -> bool:
    """Necessary condition for membership in the admissible set at (d, m)."""
    return fits_in_corner(mu, restriction_threshold(d, m))


@lru_cache(maxsize=None)
def _admissible_for_partition(lam: Partition) -> frozenset[Partition]:
    return frozenset(max_split_multiplicities(lam))


def admissible_for_partition(lam: Sequence[int]) -> frozenset[Partition]:
    """Irreducibles reachable from some split of a single partition."""
    return _admissible_for_partition(Partition(lam))


def admissible_for(lam_tuple: Sequence[Sequence[int]]) -> frozenset[PartitionTuple]:
    """Componentwise reachable set of a partition tuple, combined Cartesian-wise."""
    lam_tuple = PartitionTuple(lam_tuple)
    factor_sets = [sorted(admissible_for_partition(c), reverse=True) for c in lam_tuple]
    out = set()
    _product_into(out, factor_sets)
    return frozenset(out)


def _product_into(out: set, factor_sets: list) -> None:
    for combo in itertools.product(*factor_sets):
        out.add(PartitionTuple(combo))


@dataclass(frozen=True)
class AdmissibleSet:
    """An admissible set together with the parameters that produced it."""

    weights: tuple[int, ...]
    degrees: tuple[int, ...]
    widths: tuple[int, ...]
    members: frozenset

    @property
    def thresholds(self) -> tuple[int, ...]:
        return tuple(
            restriction_threshold(d, m) for d, m in zip(self.degrees, self.widths)
        )

    def __contains__(self, mu) -> bool:
        if len(self.weights) == 1 and not isinstance(mu, PartitionTuple):
            try:
                mu = Partition(mu)
            except DomainError:
                return False
        return mu in self.members

    def __len__(self) -> int:
        return len(self.members)

    def sorted_members(self) -> list:
        return sorted(self.members, reverse=True)


@lru_cache(maxsize=None)
def _admissible_set(k: int, d: int, m: int) -> AdmissibleSet:
    threshold = restriction_threshold(d, m)
    members: set[Partition] = set()
    for lam in enumerate_partitions(k, threshold):
        members |= admissible_for_partition(lam)
    return AdmissibleSet((k,), (d,), (m,), frozenset(members))


def admissible_set(k: int, d: int, m: int) -> AdmissibleSet:
    """The exact admissible set for a single symmetric group."""
    if k < 0:
        raise DomainError("weight must be nonnegative")
    return _admissible_set(k, d, m)


def admissible_set_tuple(
    weights: Sequence[int], degrees: Sequence[int], widths: Sequence[int]
) -> AdmissibleSet:
    """Componentwise product of per-factor admissible sets."""
    weights = tuple(weights)
    degrees = tuple(degrees)
    widths = tuple(widths)
    if not (len(weights) == len(degrees) == len(widths)):
        raise DomainError("weights, degrees and widths must have equal arity")
    factor_sets = [
        sorted(admissible_set(k, d, m).members, reverse=True)
        for k, d, m in zip(weights, degrees, widths)
    ]
    members: set[PartitionTuple] = set()
    _product_into(members, factor_sets)
    return AdmissibleSet(weights, degrees, widths, frozenset(members))


def is_admissible(mu: Sequence[int], d: int, m: int) -> bool:
    """Exact membership test for a single partition, with the fast filter first."""
    mu = Partition(mu)
    if not restriction_check(mu, d, m):
        return False
    return mu in admissible_set(mu.weight, d, m).members
