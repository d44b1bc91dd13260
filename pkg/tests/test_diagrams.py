import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mixedtensors.combinatorics import Bipartition, bipartitions_up_to
from mixedtensors.diagrams import (
    CIRCLE,
    CROSS,
    DOWN,
    UP,
    WeightDiagram,
    atypicality,
    berezin_shift,
    bipartition_of_diagram,
    bruhat_leq,
    caps_of,
    check_rank,
    cups_of,
    diagram_of_bipartition,
    diagram_of_weight,
    invariants_of,
    is_cross,
    is_kostant,
    oriented_subset,
    swap_pairs,
    weight_of_diagram,
)
from mixedtensors.errors import DifferentBlock, MalformedDiagram, NotDominant, UnsupportedRank
from mixedtensors.weights import HighestWeight, berezin, parse_weight, trivial_weight

B = Bipartition.of


@st.composite
def dominant_weights(draw, max_rank=4, bound=5):
    m = draw(st.integers(0, max_rank))
    n = draw(st.integers(0, max_rank))
    even = sorted(draw(st.lists(st.integers(-bound, bound), min_size=m, max_size=m)), reverse=True)
    odd = sorted(draw(st.lists(st.integers(-bound, bound), min_size=n, max_size=n)), reverse=True)
    return HighestWeight(tuple(even), tuple(odd))


def window(D, lo, hi):
    return "".join(D[v] for v in range(lo, hi + 1))


# ---------------------------------------------------------------- weights


def test_trivial_weight_gl21():
    D = diagram_of_weight(trivial_weight(2, 1), 2, 1)
    assert D[0] == CROSS and D[-1] == DOWN
    assert window(D, -4, 3).replace(UP, "") == "vx"


def test_weight_one_minus_one_gl11():
    D = diagram_of_weight(parse_weight("(1|-1)"), 1, 1)
    assert D.positions(DOWN) == [1]
    assert set(D.labels) <= {UP, DOWN}


def test_diagram_of_weight_rejects_non_dominant():
    with pytest.raises(NotDominant):
        diagram_of_weight(HighestWeight((0, 1), ()), 2, 0)
    with pytest.raises(NotDominant):
        diagram_of_weight(trivial_weight(2, 1), 1, 1)


@given(dominant_weights())
@settings(max_examples=200, deadline=None)
def test_weight_diagram_round_trip(w):
    D = diagram_of_weight(w, w.m, w.n)
    assert weight_of_diagram(D, w.m, w.n) == w
    assert len(D.positions(CROSS, DOWN)) == w.m
    assert len(D.positions(CIRCLE, DOWN)) == w.n


def test_weight_of_diagram_single_down():
    D = WeightDiagram.from_dict({0: DOWN})
    assert weight_of_diagram(D, 1, 1) == HighestWeight((0,), (0,))
    with pytest.raises(MalformedDiagram):
        weight_of_diagram(D, 2, 2)


@given(dominant_weights(), st.integers(-4, 4))
@settings(max_examples=100, deadline=None)
def test_berezin_shift_moves_diagram(w, r):
    assert diagram_of_weight(berezin_shift(w, r), w.m, w.n) == diagram_of_weight(w, w.m, w.n).shift(r)


def test_berezin_shift_identity_and_gl11():
    w = parse_weight("(3,1|0)")
    assert berezin_shift(w, 0) == w
    assert berezin_shift(trivial_weight(1, 1), 1) == parse_weight("(1|-1)")


# ---------------------------------------------------------------- cups


def test_cups_trivial_gl11():
    assert cups_of(diagram_of_weight(trivial_weight(1, 1), 1, 1)) == [(0, 1)]


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("k", [-2, 0, 3])
def test_cups_of_berezin_are_nested(n, k):
    cups = cups_of(diagram_of_weight(berezin(k, n, n), n, n))
    assert len(cups) == n
    lefts = sorted(i for i, _ in cups)
    assert lefts == list(range(k - n + 1, k + 1))
    # nested: the outermost cup has the leftmost start and the rightmost end
    assert max(cups, key=lambda c: c[1])[0] == min(lefts)
    assert is_kostant(berezin(k, n, n))


@given(dominant_weights())
@settings(max_examples=100, deadline=None)
def test_cup_count_is_atypicality(w):
    D = diagram_of_weight(w, w.m, w.n)
    cups = cups_of(D)
    assert len(cups) == atypicality(w)
    if not cups:
        assert is_kostant(w)


def test_kostant_pattern():
    D = WeightDiagram.from_dict({0: DOWN, 1: UP, 2: DOWN})
    w = weight_of_diagram(D, 2, 2)
    assert not is_kostant(w)
    assert is_kostant(parse_weight("(2,1|0)"))


# ---------------------------------------------------------------- bipartitions


def test_empty_bipartition_delta1():
    D = diagram_of_bipartition(B(), 1)
    assert D[0] == CROSS
    assert window(D, -5, -1) == UP * 5 and window(D, 1, 5) == DOWN * 5


def test_bipartition_one_one_delta0():
    D = diagram_of_bipartition(B((1,), (1,)), 0)
    assert D[0] == DOWN and D[1] == UP
    assert window(D, -5, -1) == UP * 5 and window(D, 2, 6) == DOWN * 5
    assert caps_of(D) == [(0, 1)]
    assert bipartition_of_diagram(swap_pairs(D, [(0, 1)]), 0) == B()


def test_bipartition_one_empty_delta0():
    D = diagram_of_bipartition(B((1,)), 0)
    assert D[1] == CROSS and D[0] == CIRCLE


@pytest.mark.parametrize("delta", [0, 1, 2, 3])
def test_bipartition_diagram_round_trip(delta):
    for la in bipartitions_up_to(7):
        D = diagram_of_bipartition(la, delta)
        assert bipartition_of_diagram(D, delta) == la
        assert len(D.positions(CROSS)) - len(D.positions(CIRCLE)) == delta


def test_bipartition_of_diagram_rejects_bad_tails():
    D = WeightDiagram.from_dict({0: CROSS}, left=DOWN, right=DOWN)
    with pytest.raises(MalformedDiagram):
        bipartition_of_diagram(D, 1)


@pytest.mark.parametrize(
    "la, delta, caps",
    [
        (B((3,), (1, 1, 1)), 0, [(2, 3)]),
        (B((2, 2, 1)), 0, []),
        (B((4, 2)), 2, []),
        (B((1, 1, 1, 1), (1,)), 3, [(-3, -2)]),
    ],
)
def test_caps(la, delta, caps):
    assert caps_of(diagram_of_bipartition(la, delta)) == caps


def test_caps_are_non_crossing():
    for delta in range(3):
        for la in bipartitions_up_to(8):
            caps = caps_of(diagram_of_bipartition(la, delta))
            for a, b in caps:
                for c, d in caps:
                    assert not (a < c < b < d)


def test_cap_swap_strictly_decreases_size():
    for delta in range(3):
        for la in bipartitions_up_to(7):
            D = diagram_of_bipartition(la, delta)
            for cap in caps_of(D):
                assert bipartition_of_diagram(swap_pairs(D, [cap]), delta).size < la.size


@pytest.mark.parametrize(
    "la, m, n, expected",
    [
        (B((1, 1, 1, 1), (1,)), 4, 1, dict(d=1, rk=0, k=1, atyp=1)),
        (B((3,), (1, 1, 1)), 3, 3, dict(d=1, rk=0, k=1, atyp=3)),
        (B((5,), (1, 1, 1, 1, 1)), 2, 2, dict(d=1, rk=0, k=1, atyp=2)),
        (B((2, 1), (2, 1)), 2, 2, dict(d=2, rk=0, k=2, atyp=2)),
        (B(), 2, 1, dict(d=0, rk=0, k=0, atyp=1)),
    ],
)
def test_invariants(la, m, n, expected):
    inv = invariants_of(la, m, n)
    assert dict(d=inv.d, rk=inv.rk, k=inv.k, atyp=inv.atyp) == expected
    assert inv.is_cross and not inv.is_zero


def test_non_cross_gl11():
    inv = invariants_of(B((1, 1), (1, 1)), 1, 1)
    assert not inv.is_cross and inv.is_zero


@pytest.mark.parametrize("m, n", [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2), (3, 3), (4, 2), (4, 4)])
def test_cross_iff_k_at_most_n(m, n):
    for la in bipartitions_up_to(9 if m + n <= 4 else 7):
        inv = invariants_of(la, m, n)
        assert inv.is_cross == (inv.k <= n), la


def test_covariant_bipartitions_have_no_caps():
    for la in bipartitions_up_to(8):
        if not la.right:
            assert invariants_of(la, 3, 2).d == 0


def test_rank_check():
    assert check_rank(3, 1) == 2
    with pytest.raises(UnsupportedRank):
        check_rank(1, 2)


# ---------------------------------------------------------------- orders


def _random_block_pair(rng, m, n):
    w = HighestWeight(
        tuple(sorted(rng.sample(range(-4, 5), m), reverse=True)), tuple(sorted(rng.choices(range(-4, 5), k=n), reverse=True))
    )
    D = diagram_of_weight(w, m, n)
    downs = D.positions(DOWN)
    free = [v for v in range(D.lo - 3, D.hi + 4) if D[v] in (UP, DOWN)]
    new = sorted(rng.sample(free, len(downs)))
    E = D.with_labels({v: (DOWN if v in new else UP) for v in free})
    return D, E


def test_bruhat_reflexive_and_antisymmetric():
    rng = random.Random(3)
    for _ in range(100):
        D, E = _random_block_pair(rng, 3, 2)
        assert bruhat_leq(D, D)
        if bruhat_leq(D, E) and bruhat_leq(E, D):
            assert D == E


def test_bruhat_single_step():
    D = WeightDiagram.from_dict({0: DOWN})
    E = WeightDiagram.from_dict({1: DOWN})
    assert bruhat_leq(D, E) and not bruhat_leq(E, D)


def test_bruhat_different_block():
    with pytest.raises(DifferentBlock):
        bruhat_leq(WeightDiagram.from_dict({0: DOWN}), WeightDiagram.from_dict({0: CROSS}))


def test_oriented_subset_basics():
    triv = trivial_weight(1, 1)
    assert oriented_subset(triv, triv, 1, 1)
    assert oriented_subset(triv, berezin(1, 1, 1), 1, 1)
    assert not oriented_subset(berezin(1, 1, 1), triv, 1, 1)


def test_oriented_subset_implies_bruhat():
    rng = random.Random(11)
    for _ in range(150):
        D, E = _random_block_pair(rng, 2, 2)
        a, b = weight_of_diagram(D, 2, 2), weight_of_diagram(E, 2, 2)
        if oriented_subset(a, b, 2, 2):
            assert bruhat_leq(D, E)


def test_render_marks_zero():
    top, ruler = diagram_of_weight(trivial_weight(1, 1), 1, 1).render().splitlines()
    assert top == "^v^"
    assert ruler.startswith(".0.")


def test_is_cross_matches_definition_on_small_cases():
    assert is_cross(B((1,), (1,)), 1, 1)
    assert not is_cross(B((2,), (2,)), 1, 1)
    assert is_cross(B((2,), (2,)), 2, 1)
