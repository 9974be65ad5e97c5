import json
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from isotypic import (
    Decomposition,
    DomainError,
    Partition,
    PartitionTuple,
    enumerate_partitions,
    irreducible,
    kostka,
    max_split_multiplicities,
    outer_product,
    pieri_col,
    pieri_row,
    sign_twist,
    split_module,
    split_multiplicity,
    splits,
    tuple_outer,
    young_module,
)


@st.composite
def decomposition_strategy(draw, max_weight=6):
    k = draw(st.integers(min_value=0, max_value=max_weight))
    keys = enumerate_partitions(k)
    mults = draw(st.lists(st.integers(min_value=0, max_value=4), min_size=len(keys), max_size=len(keys)))
    return Decomposition(dict(zip(keys, mults)), ambient=k)


def test_decomposition_basics():
    dec = Decomposition({(3,): 4, (2, 1): 2, (1, 1, 1): 0})
    assert dec.ambient == 3
    assert len(dec) == 2
    assert dec[(1, 1, 1)] == 0
    assert str(dec) == "4*[3] + 2*[2,1]"
    assert dec.items() == [(Partition((3,)), 4), (Partition((2, 1)), 2)]
    with pytest.raises(DomainError):
        Decomposition({(3,): 1, (2,): 1})
    with pytest.raises(DomainError):
        Decomposition({(3,): -1})
    with pytest.raises(DomainError):
        Decomposition({})
    empty = Decomposition({}, ambient=5)
    assert not empty and str(empty) == "0"


def test_decomposition_arithmetic():
    a = Decomposition({(2,): 1})
    b = Decomposition({(2,): 2, (1, 1): 1})
    assert (a + b)[(2,)] == 3
    assert a.scaled(3)[(2,)] == 3
    with pytest.raises(DomainError):
        a + Decomposition({(3,): 1})
    assert a.total_dim() == 1
    assert young_module((1, 1, 1)).total_dim() == 6


def test_decomposition_json_round_trip():
    dec = young_module((2, 1))
    data = json.loads(json.dumps(dec.to_json_dict()))
    assert Decomposition.from_json_dict(data) == dec
    tup = tuple_outer([irreducible((2,)), young_module((1, 1))])
    data = json.loads(json.dumps(tup.to_json_dict()))
    assert Decomposition.from_json_dict(data) == tup
    empty = Decomposition({}, ambient=4)
    assert Decomposition.from_json_dict(empty.to_json_dict()) == empty


def test_young_module_examples():
    for k in range(1, 7):
        assert young_module((k,)) == irreducible((k,))
    m11 = young_module((1, 1))
    assert m11[(2,)] == 1 and m11[(1, 1)] == 1
    m21 = young_module((2, 1))
    assert m21[(3,)] == 1 and m21[(2, 1)] == 1 and len(m21) == 2


def test_young_module_dimension():
    for k in range(0, 8):
        for lam in enumerate_partitions(k):
            expected = factorial(k)
            for part in lam:
                expected //= factorial(part)
            assert young_module(lam).total_dim() == expected


def test_pieri_row_examples():
    one = irreducible((1,))
    stepped = pieri_row(one, 1)
    assert stepped[(2,)] == 1 and stepped[(1, 1)] == 1
    for k in range(1, 5):
        for n in range(0, 4):
            dec = pieri_row(irreducible((k,)), n)
            expected = [Partition((k + n - j, j)) if j else Partition((k + n,)) for j in range(min(n, k) + 1)]
            assert dec.support() == sorted(expected, reverse=True)
    dec = irreducible((2, 1))
    assert pieri_row(dec, 0) is dec


def test_pieri_col_examples():
    one = irreducible((1,))
    stepped = pieri_col(one, 1)
    assert stepped[(2,)] == 1 and stepped[(1, 1)] == 1
    two = pieri_col(irreducible((2,)), 2)
    assert two.support() == [Partition((3, 1)), Partition((2, 1, 1))]


@given(decomposition_strategy(), st.integers(min_value=0, max_value=3))
def test_pieri_transpose_duality(dec, n):
    assert pieri_col(dec, n) == sign_twist(pieri_row(sign_twist(dec), n))


def test_pieri_scales_dimension_by_binomial():
    for k in range(0, 6):
        for lam in enumerate_partitions(k):
            dec = irreducible(lam)
            for n in range(0, 4):
                target = specht = dec.total_dim() * comb(k + n, n)
                assert pieri_row(dec, n).total_dim() == target
                assert pieri_col(dec, n).total_dim() == target


def test_outer_product_examples():
    one = irreducible((1,))
    prod = outer_product(one, one)
    assert prod[(2,)] == 1 and prod[(1, 1)] == 1
    for m in range(1, 4):
        for n in range(1, 4):
            assert outer_product(irreducible((m,)), irreducible((n,))) == pieri_row(
                irreducible((m,)), n
            )


def test_outer_product_associative():
    cases = [
        (irreducible((2,)), irreducible((1, 1)), irreducible((1,))),
        (young_module((1, 1)), irreducible((2, 1)), irreducible((1,))),
    ]
    for d1, d2, d3 in cases:
        assert outer_product(outer_product(d1, d2), d3) == outer_product(d1, outer_product(d2, d3))


def test_split_module_examples():
    for k in range(0, 7):
        for lam in enumerate_partitions(k):
            assert split_module(lam, ()) == young_module(lam)
    for k in range(1, 7):
        assert split_module((), (k,)) == irreducible((1,) * k)
    both = split_module((1,), (1,))
    assert both[(2,)] == 1 and both[(1, 1)] == 1


def test_split_module_dimension():
    for k in range(0, 8):
        for lam in enumerate_partitions(k):
            for triv, sign in splits(lam):
                expected = factorial(k)
                for part in triv + sign:
                    expected //= factorial(part)
                assert split_module(triv, sign).total_dim() == expected


def test_split_module_step_order_is_immaterial():
    from itertools import permutations

    empty = Decomposition({Partition(): 1}, ambient=0)
    for triv, sign in [((3, 2), (2, 1)), ((2, 2), (1, 1)), ((4,), (2, 2))]:
        base = split_module(triv, sign)
        for triv_order in set(permutations(triv)):
            for sign_order in set(permutations(sign)):
                dec = empty
                for p in triv_order:
                    dec = pieri_row(dec, p)
                for q in sign_order:
                    dec = pieri_col(dec, q)
                assert dec == base
    # interleaving row and column steps reorders the inducing factors only
    interleaved = pieri_col(pieri_row(pieri_col(pieri_row(empty, 3), 2), 2), 1)
    assert interleaved == split_module((3, 2), (2, 1))


def test_split_module_swapping_sides_is_a_sign_twist():
    for k in range(0, 7):
        for lam in enumerate_partitions(k):
            for triv, sign in splits(lam):
                assert sign_twist(split_module(triv, sign)) == split_module(sign, triv)


def test_split_multiplicity_examples():
    # a sign factor on more than one letter kills the trivial target
    assert split_multiplicity((3,), (), (3,)) == 0
    assert split_multiplicity((3,), (2, 1), ()) == 1
    assert split_multiplicity((3,), (2,), (1,)) == 1
    # all-ones sign side induces from the trivial subgroup: regular module
    assert split_multiplicity((2, 1), (1,), (1, 1)) == 2
    for k in range(1, 7):
        for lam in enumerate_partitions(k):
            for mu in enumerate_partitions(k):
                assert split_multiplicity(mu, lam, ()) == kostka(mu, lam)
    with pytest.raises(DomainError):
        split_multiplicity((3,), (1,), (1,))


def test_trivial_target_max_over_splits_is_one():
    for k in range(1, 7):
        for lam in enumerate_partitions(k):
            values = [split_multiplicity((k,), triv, sign) for triv, sign in splits(lam)]
            assert max(values) == 1
            for (triv, sign), value in zip(splits(lam), values):
                assert value == (1 if all(part == 1 for part in sign) else 0)


def test_dual_path_split_multiplicities():
    for k in range(0, 6):
        for lam in enumerate_partitions(k):
            for triv, sign in splits(lam):
                via_pieri = split_module(triv, sign)
                for mu in enumerate_partitions(k):
                    assert split_multiplicity(mu, triv, sign) == via_pieri[mu]


def test_split_support_row_column_confinement():
    # supports fit inside the union of t rows and t columns, t = length(lam)
    for k in range(1, 8):
        for lam in enumerate_partitions(k):
            t = len(lam)
            for triv, sign in splits(lam):
                for mu in split_module(triv, sign).support():
                    assert mu.part(t) <= t


def test_sign_twist():
    for k in range(1, 7):
        assert sign_twist(irreducible((k,))) == irreducible((1,) * k)
    twisted = sign_twist(Decomposition({(2,): 3, (1, 1): 1}))
    assert twisted[(1, 1)] == 3 and twisted[(2,)] == 1


@given(decomposition_strategy())
def test_sign_twist_involution(dec):
    assert sign_twist(sign_twist(dec)) == dec


def test_tuple_outer():
    lifted = tuple_outer([irreducible((2,))])
    assert lifted[PartitionTuple([(2,)])] == 1
    assert lifted.ambient == (2,)
    pair = tuple_outer([irreducible((2,)), irreducible((1, 1))])
    assert pair[PartitionTuple([(2,), (1, 1)])] == 1 and len(pair) == 1
    mixed = tuple_outer([young_module((1, 1)), irreducible((1,))])
    assert len(mixed) == 2
    assert mixed[PartitionTuple([(2,), (1,)])] == 1
    assert mixed[PartitionTuple([(1, 1), (1,)])] == 1
    assert mixed.total_dim() == 2
    with pytest.raises(DomainError):
        tuple_outer([])


def test_max_split_multiplicities_table():
    for k in range(0, 6):
        for lam in enumerate_partitions(k):
            table = max_split_multiplicities(lam)
            for mu in enumerate_partitions(k):
                direct = max(
                    split_module(triv, sign)[mu] for triv, sign in splits(lam)
                )
                assert table.get(mu, 0) == direct
