from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qchkit.bipoly import BiPoly, add, coefficient, evaluate, is_symmetric, mul, product

a, b = BiPoly.alpha(), BiPoly.beta()

coeffs = st.fractions(min_value=-20, max_value=20, max_denominator=7)
exps = st.tuples(st.integers(0, 10), st.integers(0, 10))
polys = st.dictionaries(exps, coeffs, max_size=8).map(BiPoly)


def naive_mul(p, q):
    out = {}
    for (i, j), c in p.items():
        for (k, l), e in q.items():
            out[(i + k, j + l)] = out.get((i + k, j + l), 0) + c * e
    return {key: v for key, v in out.items() if v}


def test_add_examples():
    assert add(a, b) == BiPoly({(1, 0): 1, (0, 1): 1})
    p = a * 3 - b
    assert p + BiPoly() == p
    assert ((a - b) + (b - a)).terms == {}


def test_mul_examples():
    assert mul(a + b, a - b) == a**2 - b**2
    assert (a - b) * (a - b) == a**2 - 2 * a * b + b**2
    # factors 3b, (a+2b), (2a+b), 3a
    prod4 = product(BiPoly.linear(j, 3 - j) for j in range(4))
    assert prod4 == 9 * a * b * (2 * a**2 + 5 * a * b + 2 * b**2)
    assert prod4.terms == {(3, 1): 18, (2, 2): 45, (1, 3): 18}


def test_coefficient():
    assert coefficient(a**2 - 2 * a * b + b**2, 1, 1) == -2
    assert coefficient(BiPoly(), 4, 2) == 0


def test_evaluate():
    assert evaluate(a + b, 1, 1) == 2
    assert evaluate(a**2 * b**2, 2, 3) == 36
    full = product(BiPoly.linear(j, 3 - j) for j in range(4))
    # each factor is 3 at (1,1); with the 1/d factor this is 27 = 3^3
    assert evaluate(full, 1, 1) == 81
    assert evaluate(full * Fraction(1, 3), 1, 1) == 27


def test_symmetry():
    assert is_symmetric(a + b)
    assert not is_symmetric(a - b)
    for d in range(1, 8):
        assert is_symmetric(product(BiPoly.linear(j, d - j) for j in range(d + 1)))


def test_zero_pruning_and_canonical_order():
    p = BiPoly({(2, 0): 1, (0, 0): 0, (1, 1): Fraction(0)})
    assert list(p.terms) == [(2, 0)]
    q = BiPoly({(3, 0): 1, (0, 2): 1, (1, 1): 1})
    assert list(q.terms) == sorted(q.terms)


def test_rejects_negative_exponent():
    with pytest.raises(ValueError):
        BiPoly({(-1, 0): 1})


@given(polys, polys)
def test_mul_matches_naive_convolution(p, q):
    assert (p * q).terms == naive_mul(p, q)


@settings(max_examples=60)
@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


def random_homogeneous(deg, seed):
    import random

    rng = random.Random(seed)
    return BiPoly({(i, deg - i): Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for i in range(deg + 1)})


@pytest.mark.parametrize("da,db", [(0, 0), (3, 5), (10, 10), (20, 17)])
def test_homogeneity_preserved(da, db):
    p, q = random_homogeneous(da, da), random_homogeneous(db, db + 1)
    assert p.is_homogeneous(da) and q.is_homogeneous(db)
    assert (p * q).is_homogeneous(da + db)


def test_str_roundtrip_is_readable():
    assert str(a**2 - 2 * a * b) == "a^2 - 2*a*b"
    assert str(BiPoly()) == "0"
