import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mixedtensors.combinatorics import (
    EMPTY,
    Bipartition,
    Partition,
    RingElement,
    conjugate,
    covariant_dim,
    covariant_weight,
    hook_character,
    lr_coeff,
    lr_product,
    parse_bipartition,
    parse_partition,
    partitions_of,
    subpartitions,
)
from mixedtensors.errors import NotHook, ParseError
from mixedtensors.weights import HighestWeight
from oracles import hook_tableaux, partitions, schur_at

P = Partition
B = Bipartition.of

partition_st = st.lists(st.integers(1, 5), max_size=5).map(lambda xs: Partition(sorted(xs, reverse=True)))


def test_partition_trims_zeros_and_validates():
    assert P((3, 1, 0, 0)) == (3, 1)
    assert P((2, 1)).part(3) == 0
    with pytest.raises(ValueError):
        P((1, 2))
    with pytest.raises(ValueError):
        P((2, -1))


@pytest.mark.parametrize(
    "la, expected",
    [((2, 1), (2, 1)), ((4,), (1, 1, 1, 1)), ((3, 1), (2, 1, 1)), ((), ()), ((5, 3, 3, 1), (4, 3, 3, 1, 1))],
)
def test_conjugate(la, expected):
    assert conjugate(P(la)) == P(expected)


@given(partition_st)
def test_conjugate_is_size_preserving_involution(la):
    assert conjugate(conjugate(la)) == la
    assert conjugate(la).size == la.size


@pytest.mark.parametrize(
    "text, expected",
    [("(2,1)", (2, 1)), ("()", ()), ("(1^4)", (1, 1, 1, 1)), ("3,2^2", (3, 2, 2)), ("(2,1,0)", (2, 1))],
)
def test_parse_partition(text, expected):
    assert parse_partition(text) == P(expected)


@pytest.mark.parametrize("text", ["(1,2)", "(a)", "(1|1)", "(2,-1)"])
def test_parse_partition_rejects(text):
    with pytest.raises(ParseError):
        parse_partition(text)


def test_parse_bipartition():
    assert parse_bipartition("(2,1|1,1)") == B((2, 1), (1, 1))
    assert parse_bipartition("(1^4|1)") == B((1, 1, 1, 1), (1,))
    assert parse_bipartition("(|)") == B()
    assert str(B((2, 1), (1, 1))) == "(2,1|1,1)"
    with pytest.raises(ParseError):
        parse_bipartition("(2,1)")


def test_bipartition_fields():
    la = B((2, 1), (3,))
    assert la.size == 6 and la.length == 3 and la.degree == (3, 3)
    assert la.swap() == B((3,), (2, 1))


def test_partitions_of_counts():
    assert [sum(1 for _ in partitions_of(k)) for k in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]


def test_subpartitions():
    subs = set(subpartitions(P((2, 1))))
    assert subs == {P(()), P((1,)), P((2,)), P((1, 1)), P((2, 1))}


@pytest.mark.parametrize(
    "nu, la, mu, c",
    [
        ((2, 1), (), (2, 1), 1),
        ((2, 1), (1,), (1, 1), 1),
        ((3, 2, 1), (2, 1), (2, 1), 2),
        ((4, 2), (2, 1), (2, 1), 1),
        ((2, 1), (2,), (2,), 0),
        ((3, 2, 1), (3,), (2, 2), 0),
    ],
)
def test_lr_coeff_values(nu, la, mu, c):
    assert lr_coeff(P(nu), P(la), P(mu)) == c


def test_lr_symmetric_in_lower_arguments():
    parts = [p for k in range(5) for p in partitions(k)]
    for la in parts:
        for mu in parts:
            for nu in partitions(la.size + mu.size):
                assert lr_coeff(nu, la, mu) == lr_coeff(nu, mu, la)


def test_lr_product_against_numeric_schur():
    """s_λ s_μ = Σ c s_ν checked at random integer points in 4 variables."""
    rng = random.Random(7)
    parts = [p for k in range(4) for p in partitions(k, max_len=4)]
    for la in parts:
        for mu in parts:
            xs = rng.sample(range(2, 30), 4)
            lhs = schur_at(la, xs) * schur_at(mu, xs)
            rhs = sum(c * schur_at(nu, xs) for nu, c in lr_product(la, mu).items())
            assert lhs == rhs, (la, mu)


@pytest.mark.parametrize(
    "la, m, n, dim",
    [((1,), 2, 3, 5), ((1, 1), 1, 1, 2), ((2,), 1, 1, 2), ((2, 2), 1, 1, 0), ((1, 1, 1), 1, 1, 2), ((3, 3, 3), 2, 2, 0)],
)
def test_covariant_dim_values(la, m, n, dim):
    assert covariant_dim(P(la), m, n) == dim


@pytest.mark.parametrize("m, n", [(1, 1), (2, 1), (2, 2), (3, 1), (1, 2)])
def test_hook_character_matches_brute_force(m, n):
    for k in range(6):
        for la in partitions(k):
            brute = hook_tableaux(la, m, n)
            assert hook_character(la, m, n) == dict(brute), la
            assert covariant_dim(la, m, n) == sum(brute.values())


@given(partition_st, st.integers(0, 3), st.integers(0, 3))
@settings(max_examples=80, deadline=None)
def test_covariant_dim_transpose_duality(la, m, n):
    assert covariant_dim(la, m, n) == covariant_dim(conjugate(la), n, m)


@pytest.mark.parametrize(
    "la, m, n, w",
    [
        ((1,), 1, 1, ((1,), (0,))),
        ((1, 1), 1, 1, ((1,), (1,))),
        ((2, 2, 2), 2, 2, ((2, 2), (1, 1))),
        ((3, 1, 1), 2, 1, ((3, 1), (1,))),
    ],
)
def test_covariant_weight(la, m, n, w):
    assert covariant_weight(P(la), m, n) == HighestWeight(*w)


def test_covariant_weight_requires_hook():
    with pytest.raises(NotHook):
        covariant_weight(P((2, 2)), 1, 1)


def test_ring_element_arithmetic():
    a = RingElement({B((1,)): 2, B((), (1,)): 1})
    b = RingElement.basis(B((1,)))
    assert (a - 2 * b) == RingElement({B((), (1,)): 1})
    assert (a - a) == RingElement()
    assert len(RingElement({B(): 0})) == 0
    assert -a + a == RingElement()
    assert a.sorted_terms() == [(B((), (1,)), 1), (B((1,)), 2)]
    assert EMPTY == ()
