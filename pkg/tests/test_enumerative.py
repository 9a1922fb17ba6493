from fractions import Fraction
from itertools import permutations
from math import factorial

import pytest

from qchkit.enumerative import (
    CountQuery,
    QueryError,
    balanced_queries,
    closed_form_triple,
    conics_through_two_points,
    count_conics,
    count_lines,
    count_query,
    count_through_cycles,
    count_twisted_cubics,
    cubics_through_three_points,
    parse_cycle,
    ring_for_counts,
    ring_triple,
)
from qchkit.grassmann import CIData, HypothesisError, l_vector
from qchkit.qring import build_ring

from .conftest import SWEEP

CUBIC = CIData(3, (3,))
TWO_QUADRICS = CIData(3, (2, 2))


def test_line_counts_cubic_threefold():
    assert count_lines(CountQuery(CUBIC, 1, (1, 2, 2))) == 45
    # three hyperplanes through a point: 3 points times 6 lines each
    assert count_lines(CountQuery(CUBIC, 1, (1, 1, 3))) == 18
    assert count_lines(CountQuery(CIData(5, (2, 2)), 1, (1, 4, 4))) == 32


def test_conic_and_cubic_counts():
    assert count_conics(CountQuery(CUBIC, 2, (2, 2, 3))) == 378
    q = CountQuery(CUBIC, 2, (1, 3, 3))
    assert closed_form_triple(q) == 108
    assert count_conics(q) == 54
    assert count_twisted_cubics(CountQuery(CUBIC, 3, (3, 3, 3))) == 648
    assert count_twisted_cubics(CountQuery(TWO_QUADRICS, 3, (3, 3, 3))) == 256


def test_corollaries():
    assert conics_through_two_points(CUBIC) == 6
    assert conics_through_two_points(TWO_QUADRICS) == 2
    assert cubics_through_three_points(CUBIC) == 24
    assert cubics_through_three_points(TWO_QUADRICS) == 4
    with pytest.raises(HypothesisError):
        conics_through_two_points(CIData(5, (3,)))


@pytest.mark.parametrize("d", range(3, 7))
def test_hypersurface_identities(d):
    l0 = factorial(d)
    assert conics_through_two_points(CIData(2 * d - 3, (d,))) == Fraction(factorial(d) * factorial(d - 1), 2)
    assert conics_through_two_points(CIData(2 * d - 3, (d,))) == Fraction(l0**2, 2 * d)
    assert cubics_through_three_points(CIData(3 * d - 6, (d,))) == factorial(d) * factorial(d - 1) ** 2
    assert cubics_through_three_points(CIData(3 * d - 6, (d,))) == Fraction(l0**3, d**2)


def test_corollaries_agree_with_cycle_counts():
    assert count_through_cycles(CUBIC, 2, ["point", "point", "hyperplane"]).value == 6
    quintic = CIData(7, (5,))
    assert count_through_cycles(quintic, 2, ["point", "point", "hyperplane"]).value == conics_through_two_points(quintic)
    assert count_through_cycles(CUBIC, 3, ["point"] * 3).value == 24


def test_cycle_counts():
    res = count_through_cycles(CUBIC, 2, ["point", "line", "line"])
    assert res.value == 14 and res.scale == Fraction(1, 27) and not res.halved
    assert res.routes_agree
    assert count_through_cycles(CUBIC, 3, ["point", "point", "point"]).value == 24
    halved = count_through_cycles(CUBIC, 2, ["hyperplane", "point", "point"])
    assert halved.value == 6 and halved.halved
    assert "expected dimension" in res.caveat


def test_parse_cycle():
    assert parse_cycle(CUBIC, "section:2").codim == 2
    assert parse_cycle(CUBIC, " Point ").scale == Fraction(1, 3)
    for bad in ["plane", "section:0", "section:4"]:
        with pytest.raises(QueryError):
            parse_cycle(CUBIC, bad)
    with pytest.raises(QueryError, match="n >= 3"):
        parse_cycle(CIData(2, (3,)), "line")


def test_query_validation():
    with pytest.raises(QueryError, match="= 7"):
        CountQuery(CUBIC, 2, (1, 2, 2))
    with pytest.raises(QueryError):
        CountQuery(CUBIC, 4, (3, 3, 3))
    with pytest.raises(QueryError):
        CountQuery(CUBIC, 1, (0, 2, 3))
    with pytest.raises(QueryError):
        CountQuery(CUBIC, 1, (2, 3))
    with pytest.raises(QueryError, match="quadrics"):
        CountQuery(CIData(4, (2,)), 2, (4, 4, 4))
    with pytest.raises(QueryError):
        count_lines(CountQuery(CUBIC, 2, (2, 2, 3)))


def test_permutation_invariance():
    ring = build_ring(CIData(5, (3,)))
    for q in balanced_queries(ring.ci, 1) + balanced_queries(ring.ci, 2):
        values = {count_query(CountQuery(q.ci, q.curve_degree, perm), ring).value for perm in permutations(q.codims)}
        assert len(values) == 1


def test_odd_quadric_counts_use_h_part():
    quadric = CIData(3, (2,))
    assert ring_for_counts(quadric).m == 0
    assert count_query(CountQuery(quadric, 1, (1, 2, 3))).routes_agree


@pytest.mark.parametrize("ci", SWEEP, ids=str)
def test_route_equivalence_on_sweep(ci):
    ring = build_ring(ci)
    lv = ring.lvec
    for j in (1, 2, 3):
        for q in balanced_queries(ci, j):
            assert closed_form_triple(q, lv) == ring_triple(ring, q), (j, q.codims)


@pytest.mark.parametrize("ci", SWEEP, ids=str)
def test_palindrome_identity_for_partial_sums(ci):
    # d * sum_{i <= n-q} l_i = d * (mu - S_{q-k}) is pure symmetry of l
    lv = l_vector(ci)
    for q in range(1, ci.n + 1):
        assert ci.d * lv.partial_sum(ci.n - q) == ci.d * (lv.mu - lv.partial_sum(q - ci.k))
