"""Chern calculus on the Grassmannian G(2, N) of lines in P^(N-1).

Classes are symmetric polynomials in the Chern roots ``alpha, beta`` of the
dual tautological subbundle.  Integration over G(2, N) of a symmetric form
of top degree ``2(N-2)`` is the coefficient of ``alpha^(N-1) beta^(N-1)``
in ``-1/2 (alpha - beta)^2 P``.

The line numbers ``l_p`` of a complete intersection X are obtained two
ways: by integrating the class of the variety of lines in X against two
special Schubert classes, and by reading coefficients off the product of
the top Chern classes of the symmetric powers directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Sequence

from .bipoly import BiPoly, product


class HypothesisError(ValueError):
    """The input violates a hypothesis needed for the requested computation."""


class IntegrandError(ValueError):
    """Malformed integrand passed to :func:`integrate_g2n`."""


class AsymmetricIntegrandError(IntegrandError):
    pass


class DegreeMismatchError(IntegrandError):
    pass


class ConsistencyError(RuntimeError):
    """Two exact computations that must agree did not: an implementation bug."""


@dataclass(frozen=True)
class CIData:
    """A complete intersection of dimension ``n`` and multidegree ``degrees`` in P^(n+r)."""

    n: int
    degrees: tuple[int, ...]

    def __post_init__(self):
        degrees = tuple(sorted(int(d) for d in self.degrees))
        object.__setattr__(self, "degrees", degrees)
        if self.n < 2:
            raise HypothesisError(f"dimension n={self.n} must be at least 2")
        if not degrees:
            raise HypothesisError("at least one defining degree is required")
        if any(d < 2 for d in degrees):
            raise HypothesisError(
                f"degrees {list(degrees)} must all be >= 2 (drop linear equations first)"
            )

    @property
    def r(self) -> int:
        return len(self.degrees)

    @property
    def d(self) -> int:
        return prod(self.degrees)

    @property
    def s(self) -> int:
        return sum(di - 1 for di in self.degrees)

    @property
    def k(self) -> int:
        """Fano index: K_X = -k H."""
        return self.n + 1 - self.s

    @property
    def delta(self) -> int:
        return sum(di + 1 for di in self.degrees)

    @property
    def N(self) -> int:
        return self.n + self.r + 1

    @property
    def top(self) -> int:
        """Largest index of a line number, ``n + 1 - k``."""
        return self.n + 1 - self.k

    @property
    def satisfies_hypothesis(self) -> bool:
        return self.n >= 2 * self.s - 1

    @property
    def is_quadric(self) -> bool:
        return self.s == 1

    @property
    def is_odd_quadric(self) -> bool:
        return self.is_quadric and self.n % 2 == 1

    def require_hypothesis(self):
        if not self.satisfies_hypothesis:
            raise HypothesisError(
                f"n >= 2*sum(d_i - 1) - 1 fails: {self.n} < {2 * self.s - 1} "
                f"for degrees {list(self.degrees)}"
            )

    def label(self) -> str:
        return f"n={self.n} degrees={','.join(map(str, self.degrees))}"


@dataclass(frozen=True)
class LVector:
    l: tuple[int, ...]
    mu: int

    def partial_sum(self, t: int) -> int:
        """``l_0 + ... + l_t``; 0 for t < 0 and ``mu`` once t passes the last index."""
        if t < 0:
            return 0
        return sum(self.l[: t + 1])

    def __getitem__(self, p: int) -> int:
        return self.l[p] if 0 <= p < len(self.l) else 0


def special_schubert(p: int) -> BiPoly:
    """c_p = (alpha^(p+1) - beta^(p+1)) / (alpha - beta); zero for p < 0."""
    if p < 0:
        return BiPoly()
    return BiPoly({(i, p - i): 1 for i in range(p + 1)})


@lru_cache(maxsize=None)
def sym_power_top_chern(d: int) -> BiPoly:
    """Top Chern class c_{d+1}(Sym^d S*) = prod_{j=0}^{d} (j alpha + (d-j) beta)."""
    if d < 1:
        raise ValueError(f"symmetric power degree must be >= 1, got {d}")
    return product(BiPoly.linear(j, d - j) for j in range(d + 1))


def lines_class(ci: CIData) -> BiPoly:
    """Class of the variety of lines in X, as a polynomial of degree delta."""
    return product(sym_power_top_chern(di) for di in ci.degrees)


def integrate_g2n(P: BiPoly, N: int) -> Fraction:
    if N < 3:
        raise ValueError(f"G(2, N) needs N >= 3, got {N}")
    top = 2 * (N - 2)
    if not P.is_homogeneous(top):
        raise DegreeMismatchError(
            f"integrand has degrees {sorted(P.degrees())}, expected exactly {top} on G(2,{N})"
        )
    if not P.is_symmetric():
        raise AsymmetricIntegrandError("integrand is not symmetric in alpha, beta")
    # -1/2 (a^2 - 2ab + b^2) P, coefficient of a^(N-1) b^(N-1)
    c = P.coefficient(N - 3, N - 1) - 2 * P.coefficient(N - 2, N - 2) + P.coefficient(N - 1, N - 3)
    return -c / 2


def line_count(ci: CIData, p: int) -> Fraction:
    """l_p = (1/d) * integral over G(2, N) of [lines in X] * c_{n-1-p} * c_{k-2+p}."""
    ci.require_hypothesis()
    if not 0 <= p <= ci.top:
        raise IndexError(f"line index p={p} outside 0..{ci.top}")
    integrand = lines_class(ci) * special_schubert(ci.n - 1 - p) * special_schubert(ci.k - 2 + p)
    return integrate_g2n(integrand, ci.N) / ci.d


def _checked(ci: CIData, values: Sequence[Fraction], route: str) -> LVector:
    for p, v in enumerate(values):
        if v.denominator != 1 or v < 0:
            raise ConsistencyError(f"{route}: l_{p} = {v} is not a nonnegative integer for {ci.label()}")
    l = tuple(int(v) for v in values)
    if l != l[::-1]:
        raise ConsistencyError(f"{route}: l-vector {l} is not palindromic for {ci.label()}")
    mu = sum(l)
    expected = prod(di**di for di in ci.degrees)
    if mu != expected:
        raise ConsistencyError(f"{route}: sum of l_p = {mu} but prod d_i^d_i = {expected}")
    return LVector(l, mu)


def l_vector_from_integrals(ci: CIData) -> LVector:
    ci.require_hypothesis()
    return _checked(ci, [line_count(ci, p) for p in range(ci.top + 1)], "integral route")


def generating_polynomial(ci: CIData) -> BiPoly:
    """(1/d) prod_i prod_j (j alpha + (d_i - j) beta), whose coefficients are the l_p."""
    return lines_class(ci) * Fraction(1, ci.d)


def l_vector_from_generating_function(ci: CIData) -> LVector:
    ci.require_hypothesis()
    gen = generating_polynomial(ci)
    values = [gen.coefficient(ci.r + p, ci.delta - ci.r - p) for p in range(ci.top + 1)]
    lvec = _checked(ci, values, "generating-function route")
    stray = [k for k in gen.terms if k[0] - ci.r not in range(ci.top + 1) or sum(k) != ci.delta]
    if stray:
        raise ConsistencyError(
            f"generating polynomial has terms outside alpha^(r+p) beta^(delta-r-p) for {ci.label()}"
        )
    return lvec


def l_vector(ci: CIData) -> LVector:
    """Both routes, compared; raises :class:`ConsistencyError` on any disagreement."""
    a = l_vector_from_integrals(ci)
    b = l_vector_from_generating_function(ci)
    if a != b:
        raise ConsistencyError(f"routes disagree for {ci.label()}: {a.l} vs {b.l}")
    return a


def mu_closed_form(ci: CIData) -> int:
    return prod(di**di for di in ci.degrees)


def l0_closed_form(ci: CIData) -> int:
    return prod(factorial(di) for di in ci.degrees)


def l1_closed_form(ci: CIData) -> Fraction:
    return l0_closed_form(ci) * sum(
        (Fraction(di - j, j) for di in ci.degrees for j in range(1, di)), Fraction(0)
    )


def minimal_dimension(degrees: Sequence[int]) -> int:
    s = sum(di - 1 for di in degrees)
    return max(2, 2 * s - 1)
