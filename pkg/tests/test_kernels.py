"""The compiled and pure kernels must be interchangeable."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from qchkit import _purekernels

from .conftest import _speedups

ints = st.integers(min_value=-(10**6), max_value=10**6)
huge = st.integers(min_value=-(10**30), max_value=10**30)


def naive(a, b):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i in range(len(a)):
        for j in range(len(b)):
            out[i + j] += a[i] * b[j]
    return out


@given(st.lists(ints, max_size=30), st.lists(ints, max_size=30))
def test_convolve_small(a, b):
    assert _purekernels.convolve(a, b) == naive(a, b)
    if _speedups is not None:
        assert _speedups.convolve(a, b) == naive(a, b)


@given(st.lists(huge, max_size=12), st.lists(huge, max_size=12))
def test_convolve_overflow_falls_back_exactly(a, b):
    if _speedups is not None:
        assert _speedups.convolve(a, b) == naive(a, b)


def test_convolve_near_int64_boundary(backend):
    a = [2**61, 2**61]
    b = [3, 5]
    assert backend.convolve(a, b) == naive(a, b)


def random_tensor(rng, size, density=0.3, big=False):
    hi = 10**25 if big else 50
    return [rng.randint(-hi, hi) if rng.random() < density else 0 for _ in range(size**3)]


def polynomial_algebra(size):
    """Truncated polynomial ring Z[x]/(x^size): associative and commutative."""
    t = [0] * size**3
    for a in range(size):
        for b in range(size):
            if a + b < size:
                t[(a * size + b) * size + a + b] = 1
    return t


@pytest.mark.parametrize("size", [1, 3, 6])
def test_associative_algebra_has_no_defects(backend, size):
    assert backend.associativity_defects(polynomial_algebra(size), size) == []


@pytest.mark.parametrize("seed", range(5))
@pytest.mark.parametrize("big", [False, True])
def test_backends_agree_on_random_tensors(seed, big):
    if _speedups is None:
        pytest.skip("extension not built")
    rng = random.Random(seed)
    size = 5
    t = random_tensor(rng, size, big=big)
    assert _speedups.associativity_defects(t, size) == _purekernels.associativity_defects(t, size)
    g = [rng.randint(-3, 3) for _ in range(size * size)]
    parity = [rng.randint(0, 1) for _ in range(size)]
    assert _speedups.pairing_defects(t, g, parity, size) == _purekernels.pairing_defects(t, g, parity, size)


def test_perturbation_is_detected(backend):
    t = polynomial_algebra(4)
    t[(1 * 4 + 1) * 4 + 0] = 1  # x*x gains a constant term
    assert backend.associativity_defects(t, 4)


def test_table_size_is_checked(backend):
    with pytest.raises(ValueError):
        backend.associativity_defects([0] * 7, 2)
