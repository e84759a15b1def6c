from __future__ import annotations

from fractions import Fraction

import pytest

from errors import InvalidWeight
from rootsys import build_root_system, to_euclidean
from weights import (
    alcove_locate, dominant_weights_below, dot_reflect, height, in_fundamental_closure, is_p_restricted, leq,
    linked_up, linked_weights_below, maximal_elements, maximal_weight, p_adic_expand, rank2_alcove_name,
    restricted_weights, root_coordinates,
)


def test_leq_examples(a2):
    assert leq(a2, (1, 1), (2, 2))
    assert not leq(a2, (0, 0), (1, 0))
    assert leq(a2, (3, 1), (3, 1))


def test_root_coordinates_and_height(a2, b2):
    assert root_coordinates(a2, (1, 0)) == (Fraction(2, 3), Fraction(1, 3))
    assert height(a2, (1, 1)) == 2
    # B2: omega2 = (alpha1 + 2 alpha2)/2
    assert root_coordinates(b2, (0, 1)) == (Fraction(1, 2), Fraction(1))


def test_is_p_restricted():
    assert is_p_restricted((4, 4), 5)
    assert not is_p_restricted((5, 0), 5)
    assert is_p_restricted((1,), 2)
    with pytest.raises(InvalidWeight):
        is_p_restricted((-1, 2), 5)


def test_dot_reflect_a2(a2):
    assert dot_reflect(a2, 2, 1, 5, (2, 2)) == (1, 1)
    assert dot_reflect(a2, a2.positive_roots[2], 1, 5, (2, 2)) == (1, 1)
    # s_{-alpha, mp} = s_{alpha, -mp}
    minus = tuple(-x for x in a2.positive_roots[2])
    assert dot_reflect(a2, minus, -1, 5, (2, 2)) == (1, 1)


def test_dot_reflect_fixes_minus_rho(b2):
    for k in range(len(b2.positive_roots)):
        assert dot_reflect(b2, k, 0, 5, (-1, -1)) == (-1, -1)


@pytest.mark.parametrize("p", [5, 7, 11])
def test_b2_euclidean_dot_reflections(b2, p):
    def fw(x, y):
        return (x - y, 2 * y)

    for a in range(-3, 6):
        for b in range(-3, 6):
            lam = fw(a, b)
            assert to_euclidean(b2, dot_reflect(b2, 0, 0, p, lam)) == (b - 1, a + 1)
            assert to_euclidean(b2, dot_reflect(b2, 1, 0, p, lam)) == (a, -b - 1)
            assert to_euclidean(b2, dot_reflect(b2, 2, 1, p, lam)) == (p - 3 - a, b)
            assert to_euclidean(b2, dot_reflect(b2, 3, 1, p, lam)) == (p - 2 - b, p - 2 - a)


def test_alcove_locate_examples(a2, b2):
    assert alcove_locate(a2, (2, 2), 5).rank2_name == "C2"
    location = alcove_locate(b2, (2, 0), 5)
    assert location.rank2_name == "C2"
    assert location.indices == (1, 1, 2, 1)
    assert location.is_open
    wall = alcove_locate(b2, (4, 0), 5)
    assert wall.rank2_name == "F46"
    assert (0, 1) in wall.walls


@pytest.mark.parametrize("lam,name", [
    ((0, 0), "C1"), ((1, 0), "F12"), ((0, 2), "F12"), ((1, 1), "C2"), ((0, 3), "F23"), ((1, 2), "F23"),
    ((2, 2), "C3"), ((1, 4), "F35"), ((3, 1), "F34"), ((2, 4), "F47"), ((4, 2), "F46"), ((3, 3), "C4"),
    ((4, 4), "vertex"),
])
def test_b2_names_at_p5(b2, lam, name):
    assert rank2_alcove_name(b2, lam, 5) == name


def test_a2_names(a2):
    assert rank2_alcove_name(a2, (1, 1), 5) == "C1"
    assert rank2_alcove_name(a2, (1, 2), 5) == "F12"
    assert rank2_alcove_name(a2, (4, 1), 5) == "F23"
    assert rank2_alcove_name(a2, (4, 4), 5) == "vertex"
    assert rank2_alcove_name(a2, (5, 0), 5) == "non_restricted"


@pytest.mark.parametrize("label", ["A", "B2"])
@pytest.mark.parametrize("p", [5, 7])
def test_dominant_weights_below_fundamental_closure_stay_inside(label, p):
    rs = build_root_system(label, 2)
    for lam in restricted_weights(rs, p):
        if not in_fundamental_closure(rs, lam, p):
            continue
        for mu in dominant_weights_below(rs, lam):
            assert in_fundamental_closure(rs, mu, p), (lam, mu)


def test_linked_up_examples(a2):
    assert linked_up(a2, (2, 2), (2, 2), 5)
    assert linked_up(a2, (1, 1), (2, 2), 5)
    assert not linked_up(a2, (0, 0), (1, 0), 5)


def test_linked_weights_below(a2):
    below = linked_weights_below(a2, (2, 2), 5)
    assert (1, 1) in below
    assert (2, 2) in below
    assert (0, 0) not in below


def test_p_adic_expand_examples():
    assert p_adic_expand((5,), 2).layers == ((1,), (0,), (1,))
    assert p_adic_expand((4, 4), 5).layers == ((4, 4),)
    expansion = p_adic_expand((4, 7), 3)
    assert expansion.layers == ((1, 1), (1, 2))
    assert expansion.recompose(3) == (4, 7)
    assert p_adic_expand((0, 0), 3).layers == ((0, 0),)
    with pytest.raises(InvalidWeight):
        p_adic_expand((-1, 0), 3)


def test_dominant_weights_below_order(a2):
    assert dominant_weights_below(a2, (1, 1)) == [(1, 1), (0, 0)]
    assert dominant_weights_below(a2, (2, 0)) == [(2, 0), (0, 1)]
    with pytest.raises(InvalidWeight):
        dominant_weights_below(a2, (1, -1))


def test_restricted_weights(b2):
    weights = restricted_weights(b2, 5)
    assert len(weights) == 25
    assert weights[0] == (0, 0) and weights[-1] == (4, 4)


def test_maximal_helpers(a2):
    pool = [(1, 0), (0, 1), (0, 0)]
    # (1,0) e (0,1) são incomparáveis; (0,0) < nenhum dos dois
    assert maximal_elements(a2, pool) == [(0, 0), (0, 1), (1, 0)]
    assert maximal_weight(a2, [(2, 2), (1, 1), (3, 0)]) == (2, 2)
