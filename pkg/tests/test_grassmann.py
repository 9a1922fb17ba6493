from fractions import Fraction
from itertools import combinations
from math import factorial, prod

import pytest
from hypothesis import given, settings, strategies as st

from qchkit.bipoly import BiPoly
from qchkit.grassmann import (
    AsymmetricIntegrandError,
    CIData,
    DegreeMismatchError,
    HypothesisError,
    integrate_g2n,
    l0_closed_form,
    l1_closed_form,
    l_vector,
    l_vector_from_generating_function,
    l_vector_from_integrals,
    line_count,
    minimal_dimension,
    mu_closed_form,
    special_schubert,
    sym_power_top_chern,
)

from .conftest import SWEEP

a, b = BiPoly.alpha(), BiPoly.beta()


def bott(f, N, weights=None):
    """Torus localization on G(2, N): f is a function of the two Chern roots.

    Fixed points are coordinate planes {i, j}; the tangent weights there are
    t_k - t_i and t_k - t_j for k outside {i, j}.  The tangent space has even
    rank 2(N-2), so the orientation sign cancels.
    """
    t = weights or [Fraction(i * i + 3 * i + 1) for i in range(N)]
    total = Fraction(0)
    for i, j in combinations(range(N), 2):
        denom = prod((t[k] - t[i]) * (t[k] - t[j]) for k in range(N) if k not in (i, j))
        total += Fraction(f(t[i], t[j])) / denom
    return total


def h(p, x, y):
    return sum(x**i * y ** (p - i) for i in range(p + 1)) if p >= 0 else 0


def bott_line_count(ci, p):
    """l_p through localization, with no BiPoly arithmetic at all."""

    def f(x, y):
        lines = prod(j * x + (di - j) * y for di in ci.degrees for j in range(di + 1))
        return lines * h(ci.n - 1 - p, x, y) * h(ci.k - 2 + p, x, y)

    return bott(f, ci.N) / ci.d


def test_special_schubert():
    assert special_schubert(0) == BiPoly.constant(1)
    assert special_schubert(2) == a**2 + a * b + b**2
    assert special_schubert(-1) == BiPoly()


def test_sym_power_top_chern():
    assert sym_power_top_chern(1) == a * b
    assert sym_power_top_chern(2) == 4 * a * b * (a + b)
    assert sym_power_top_chern(3).terms == {(3, 1): 18, (2, 2): 45, (1, 3): 18}
    with pytest.raises(ValueError):
        sym_power_top_chern(0)


@pytest.mark.parametrize("N", range(4, 11))
def test_point_class_integrates_to_one(N):
    assert integrate_g2n(special_schubert(N - 2) ** 2, N) == 1


def test_four_lines():
    assert integrate_g2n((a + b) ** 4, 4) == 2
    assert bott(lambda x, y: (x + y) ** 4, 4) == 2


def test_integrand_errors():
    with pytest.raises(AsymmetricIntegrandError):
        integrate_g2n(a**4, 4)
    with pytest.raises(DegreeMismatchError):
        integrate_g2n((a + b) ** 3, 4)
    with pytest.raises(DegreeMismatchError):
        integrate_g2n((a + b) ** 4 + a * b, 4)


@pytest.mark.parametrize("N", [4, 5, 7])
def test_c_top_lies_in_the_ideal(N):
    # c_{N-1} vanishes on G(2, N), so any multiple of it integrates to zero
    for i in range(N - 2):
        P = special_schubert(N - 1) * special_schubert(i) * (a * b) ** ((N - 3 - i) // 2)
        if P.is_homogeneous(2 * (N - 2)):
            assert integrate_g2n(P, N) == 0


@settings(max_examples=40, deadline=None)
@given(st.integers(4, 8), st.lists(st.integers(-5, 5), min_size=1, max_size=6))
def test_integration_matches_localization(N, coeffs):
    # random symmetric integrand of top degree: combination of products c_i * c_j * (ab)^e
    top = 2 * (N - 2)
    P, funcs = BiPoly(), []
    for idx, c in enumerate(coeffs):
        i = idx % (N - 1)
        rest = top - i
        if rest % 2:
            i, rest = i + 1, rest - 1
        P = P + special_schubert(i) * (a * b) ** (rest // 2) * c
        funcs.append((c, i, rest // 2))
    oracle = bott(lambda x, y: sum(c * h(i, x, y) * (x * y) ** e for c, i, e in funcs), N)
    assert integrate_g2n(P, N) == oracle


def test_cubic_threefold_lvector():
    ci = CIData(3, (3,))
    lv = l_vector(ci)
    assert lv.l == (6, 15, 6) and lv.mu == 27
    assert [bott_line_count(ci, p) for p in range(3)] == [6, 15, 6]


@pytest.mark.parametrize("ci", [CIData(7, (2, 3)), CIData(5, (4,)), CIData(4, (2, 2)), CIData(6, (2, 2, 2))], ids=str)
def test_line_counts_against_localization(ci):
    lv = l_vector(ci)
    assert list(lv.l) == [bott_line_count(ci, p) for p in range(ci.top + 1)]


def test_example_values():
    assert l_vector(CIData(7, (2, 3))).l[0] == 12
    assert l_vector(CIData(3, (2, 2))).l == (4, 8, 4)


def test_hypothesis_enforced():
    with pytest.raises(HypothesisError, match="fails"):
        l_vector_from_integrals(CIData(2, (7,)))
    with pytest.raises(HypothesisError):
        CIData(3, (1,))
    with pytest.raises(HypothesisError):
        CIData(1, (2,))
    assert minimal_dimension((3,)) == 3 and minimal_dimension((2,)) == 2


def test_line_index_range():
    with pytest.raises(IndexError):
        line_count(CIData(3, (3,)), 3)


@pytest.mark.parametrize("ci", SWEEP, ids=str)
def test_sweep_two_routes_and_closed_forms(ci):
    x, y = l_vector_from_integrals(ci), l_vector_from_generating_function(ci)
    assert x == y
    assert x.l[0] == l0_closed_form(ci) == prod(factorial(di) for di in ci.degrees)
    if ci.top >= 1:
        assert x.l[1] == l1_closed_form(ci)
    assert x.mu == mu_closed_form(ci)
    assert x.l == x.l[::-1]
