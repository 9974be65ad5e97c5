"""Exact evaluation of the multiplicity bounds for symmetric varieties and
semi-algebraic sets.

Every value here is the exact integer evaluation of the finite sum in the
corresponding bound; asymptotic growth rates are reported only as text
annotations (their exponent constants are not pinned, so no number would be
honest).  Sum evaluation refuses to start when the number of terms would
exceed the configured cap.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb
from typing import Callable, Iterable, Sequence

from .admissible import fits_in_corner, restriction_threshold
from .errors import DomainError, EnumerationCapExceeded
from .induction import max_split_multiplicities
from .partitions import (
    Partition,
    PartitionTuple,
    count_partitions,
    enumerate_partitions,
)

DEFAULT_TERM_CAP = 10_000_000


@dataclass(frozen=True)
class BoundParams:
    """Parameter record shared by the bound evaluators.

    ``weights`` and ``widths`` describe the block structure (one symmetric
    group per block, acting on that many rows of a width-wide variable
    block); ``degree`` is the uniform degree bound; ``polys`` is the number
    of defining polynomials and only matters for the semi-algebraic bound.
    """

    weights: tuple[int, ...]
    widths: tuple[int, ...]
    degree: int
    polys: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(self.weights))
        object.__setattr__(self, "widths", tuple(self.widths))
        if len(self.weights) != len(self.widths):
            raise DomainError("weights and widths must have equal arity")
        if not self.weights:
            raise DomainError("at least one block is required")
        if any(k < 1 for k in self.weights) or any(m < 1 for m in self.widths):
            raise DomainError("weights and widths must be positive")
        if self.degree < 1:
            raise DomainError("degree must be positive")
        if self.polys is not None and self.polys < 1:
            raise DomainError("number of polynomials must be positive")

    @property
    def thresholds(self) -> tuple[int, ...]:
        return tuple(restriction_threshold(self.degree, m) for m in self.widths)

    def to_json_dict(self) -> dict:
        data = {"k": list(self.weights), "m": list(self.widths), "d": self.degree}
        if self.polys is not None:
            data["s"] = self.polys
        return data


@dataclass(frozen=True)
class BoundReport:
    """Exact bound value plus the parameters and rule that produced it."""

    value: int
    theorem: str
    params: BoundParams
    target: PartitionTuple | Partition | None = None
    excluded: bool = False
    asymptotic_note: str = ""

    def to_json_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "params": self.params.to_json_dict(),
            "target": None if self.target is None else str(self.target),
            "value": str(self.value),
            "excluded": self.excluded,
            "asymptotic_note": self.asymptotic_note,
        }


def _coerce_target(mu, params: BoundParams) -> PartitionTuple:
    if isinstance(mu, PartitionTuple):
        target = mu
    elif mu and isinstance(tuple(mu)[0], int):
        target = PartitionTuple([Partition(mu)])
    else:
        target = PartitionTuple(mu)
    if target.weights != params.weights:
        raise DomainError(
            f"target weights {target.weights} do not match block weights {params.weights}"
        )
    return target


def _check_term_cap(weights, thresholds, cap: int) -> None:
    total = 1
    for k, t in zip(weights, thresholds):
        total *= count_partitions(k, min(t, k))
    if total > cap:
        raise EnumerationCapExceeded(
            f"bound sum has {total} terms, above the cap of {cap}"
        )


def _lambda_tuples(weights, thresholds) -> Iterable[tuple[Partition, ...]]:
    factors = [enumerate_partitions(k, min(t, k)) for k, t in zip(weights, thresholds)]
    return itertools.product(*factors)


def _chunks(iterable, size):
    it = iter(iterable)
    while True:
        block = list(itertools.islice(it, size))
        if not block:
            return
        yield block


def _summed(terms: Iterable, term_value: Callable, workers: int) -> int:
    if workers <= 1:
        return sum(term_value(t) for t in terms)
    total = 0
    with ThreadPoolExecutor(max_workers=workers) as pool:
        for partial in pool.map(
            lambda block: sum(term_value(t) for t in block), _chunks(terms, 512)
        ):
            total += partial
    return total


def g_factor(
    mu_tuple: Sequence[Sequence[int]],
    lam_tuple: Sequence[Sequence[int]],
    d: int,
    widths: Sequence[int],
) -> int:
    """One summand of the affine bound: a width-scaled power of 2d per block
    times the best split multiplicity of the target in that block."""
    mu_tuple = PartitionTuple(mu_tuple)
    lam_tuple = PartitionTuple(lam_tuple)
    widths = tuple(widths)
    if not (len(mu_tuple) == len(lam_tuple) == len(widths)):
        raise DomainError("g_factor arguments must have equal arity")
    if mu_tuple.weights != lam_tuple.weights:
        raise DomainError(
            f"component weights differ: {mu_tuple.weights} vs {lam_tuple.weights}"
        )
    total = 1
    for mu, lam, m in zip(mu_tuple, lam_tuple, widths):
        mult = max_split_multiplicities(lam).get(mu, 0)
        if mult == 0:
            return 0
        total *= (2 * d) ** (m * len(lam)) * mult
    return total


def _core_sum(
    mu_tuple: PartitionTuple, params: BoundParams, cap: int, workers: int
) -> int:
    thresholds = params.thresholds
    _check_term_cap(params.weights, thresholds, cap)

    def term(lam_tuple):
        return g_factor(mu_tuple, lam_tuple, params.degree, params.widths)

    return _summed(_lambda_tuples(params.weights, thresholds), term, workers)


_POLY_NOTE = (
    "exact finite sum; grows polynomially in the block weights for fixed degree "
    "and widths (the exponent constants are not pinned, so no numeric asymptote "
    "is reported)"
)


def affine_multiplicity_bound(
    mu,
    params: BoundParams,
    *,
    cap: int = DEFAULT_TERM_CAP,
    workers: int = 1,
) -> BoundReport:
    """Bound on the multiplicity of ``mu`` in the cohomology of a symmetric
    real affine variety of the given degree and block structure.

    A target outside the admissible set gets value 0 with the excluded flag;
    that is exact, since every summand vanishes there.
    """
    mu_tuple = _coerce_target(mu, params)
    if not all(
        fits_in_corner(c, t) for c, t in zip(mu_tuple, params.thresholds)
    ):
        return BoundReport(0, "affine", params, mu_tuple, True, _POLY_NOTE)
    value = _core_sum(mu_tuple, params, cap, workers)
    return BoundReport(value, "affine", params, mu_tuple, value == 0, _POLY_NOTE)


def general_position_degree(params: BoundParams) -> int:
    """Largest number of the defining polynomials that can vanish together."""
    return sum(
        min(m * k, params.degree**m)
        for k, m in zip(params.weights, params.widths)
    )


def sa_prefactor(params: BoundParams) -> int:
    """The binomial double sum that multiplies the affine sum in the
    semi-algebraic bound."""
    if params.polys is None:
        raise DomainError("semi-algebraic bound needs the number of polynomials")
    D = general_position_degree(params)
    s = params.polys
    return sum(
        comb(2 * s + 1, j) * 6**j for i in range(D) for j in range(1, D - i + 1)
    )


def sa_multiplicity_bound(
    mu,
    params: BoundParams,
    *,
    cap: int = DEFAULT_TERM_CAP,
    workers: int = 1,
) -> BoundReport:
    """Bound for closed semi-algebraic sets cut out by ``params.polys``
    symmetric polynomials: the affine sum times a binomial prefactor."""
    prefactor = sa_prefactor(params)
    affine = affine_multiplicity_bound(mu, params, cap=cap, workers=workers)
    if affine.excluded:
        return BoundReport(0, "semialgebraic", params, affine.target, True, _POLY_NOTE)
    return BoundReport(
        prefactor * affine.value,
        "semialgebraic",
        params,
        affine.target,
        False,
        _POLY_NOTE,
    )


def _doubled_width_params(params: BoundParams) -> BoundParams:
    return BoundParams(
        params.weights, tuple(2 * m for m in params.widths), params.degree
    )


def _member_of_admissible_tuple(
    mu_tuple: PartitionTuple,
    weights: tuple[int, ...],
    thresholds: tuple[int, ...],
    cap: int,
) -> bool:
    if not all(fits_in_corner(c, t) for c, t in zip(mu_tuple, thresholds)):
        return False
    _check_term_cap(weights, thresholds, cap)
    for lam_tuple in _lambda_tuples(weights, thresholds):
        if all(
            c in max_split_multiplicities(lam)
            for c, lam in zip(mu_tuple, lam_tuple)
        ):
            return True
    return False


def complex_multiplicity_bound(
    mu,
    params: BoundParams,
    *,
    cap: int = DEFAULT_TERM_CAP,
    workers: int = 1,
) -> BoundReport:
    """Bound for symmetric complex affine varieties.

    Computed through the real reduction: splitting each complex coordinate
    into real and imaginary parts keeps the degree and doubles every block
    width, so the value is the affine sum at widths ``2m``.  Exclusion is
    tested against the admissible set with both degree and widths doubled,
    which contains the reduction's set.
    """
    doubled = _doubled_width_params(params)
    mu_tuple = _coerce_target(mu, doubled)
    exclusion_thresholds = tuple(
        restriction_threshold(2 * params.degree, 2 * m) for m in params.widths
    )
    value = 0
    if all(fits_in_corner(c, t) for c, t in zip(mu_tuple, doubled.thresholds)):
        value = _core_sum(mu_tuple, doubled, cap, workers)
    excluded = value == 0 and not _member_of_admissible_tuple(
        mu_tuple, doubled.weights, exclusion_thresholds, cap
    )
    return BoundReport(value, "complex-affine", params, mu_tuple, excluded, _POLY_NOTE)


def projective_multiplicity_bound(
    k: int,
    d: int,
    mu=None,
    letters: int | None = None,
    *,
    cap: int = DEFAULT_TERM_CAP,
    workers: int = 1,
) -> BoundReport:
    """Bound for symmetric complex projective varieties in ``k``-dimensional
    projective space, degree at most ``d``.

    The group permutes the ``k + 1`` homogeneous coordinates, so targets are
    partitions of ``letters`` which defaults to ``k + 1`` (the sphere model
    the reduction runs on); pass ``letters=k`` for the other reading of the
    admissibility index, in which case targets must weigh ``k``.  The value
    is ``floor(k/2) + 1`` times the complex affine bound, which absorbs the
    degree-shifting differentials of the fibration comparison.
    """
    if k < 1 or d < 1:
        raise DomainError("projective bound needs positive k and d")
    if letters is None:
        letters = k + 1
    inner_params = BoundParams((letters,), (1,), d)
    target = Partition(mu) if mu is not None else Partition((letters,))
    inner = complex_multiplicity_bound(
        target, inner_params, cap=cap, workers=workers
    )
    note = (
        f"projective dimension {k}: fibration comparison multiplies the complex "
        f"affine bound by floor(k/2)+1 = {k // 2 + 1}; " + _POLY_NOTE
    )
    return BoundReport(
        (k // 2 + 1) * inner.value,
        "complex-projective",
        inner_params,
        inner.target,
        inner.excluded,
        note,
    )


def equivariant_bound(
    weights: Sequence[int],
    widths: Sequence[int],
    d: int,
    *,
    cap: int = DEFAULT_TERM_CAP,
    workers: int = 1,
) -> BoundReport:
    """Bound on the total cohomology of the quotient: the affine sum for the
    trivial target, where every split multiplicity factor is 1."""
    params = BoundParams(tuple(weights), tuple(widths), d)
    thresholds = params.thresholds
    _check_term_cap(params.weights, thresholds, cap)

    def term(lam_tuple):
        total = 1
        for lam, m in zip(lam_tuple, params.widths):
            total *= (2 * d) ** (m * len(lam))
        return total

    value = _summed(_lambda_tuples(params.weights, thresholds), term, workers)
    return BoundReport(value, "equivariant", params, None, False, _POLY_NOTE)


def projection_image_bound(
    k: int,
    m: int,
    d: int,
    *,
    cap: int = DEFAULT_TERM_CAP,
    workers: int = 1,
) -> BoundReport:
    """Bound on the total cohomology of the image of a bounded degree-``d``
    variety in ``k + m`` variables under projection to the first ``k``.

    Exact sum over the symmetric fiber powers of the projection: the
    ``p``-th summand is the equivariant bound for ``k`` singleton blocks
    plus one block of ``p + 1`` fiber copies of width ``m``.
    """
    if k < 1 or m < 1 or d < 1:
        raise DomainError("projection bound needs positive k, m, d")
    fiber_threshold = restriction_threshold(d, m)
    total_terms = sum(
        count_partitions(p + 1, min(fiber_threshold, p + 1)) for p in range(k)
    )
    if total_terms > cap:
        raise EnumerationCapExceeded(
            f"projection bound sums {total_terms} terms, above the cap of {cap}"
        )
    value = 0
    for p in range(k):
        block_weights = (1,) * k + (p + 1,)
        block_widths = (1,) * k + (m,)
        value += equivariant_bound(
            block_weights, block_widths, d, cap=cap, workers=workers
        ).value
    params = BoundParams((k,), (m,), d)
    note = (
        "sum of equivariant bounds over the symmetric fiber powers of the "
        "projection; " + _POLY_NOTE
    )
    return BoundReport(value, "projection-image", params, None, False, note)
