"""Exact bivariate polynomials in two formal Chern roots.

A :class:`BiPoly` is a sparse map ``(i, j) -> Fraction`` standing for
``sum c_ij * alpha**i * beta**j``.  Values are immutable and hashable; zero
coefficients are never stored, so structural equality is polynomial
equality.

Multiplication splits each operand into homogeneous components and hands
the integer-scaled coefficient rows to :func:`qchkit.kernels.convolve`.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping, Union

from . import kernels

Scalar = Union[int, Fraction]


class BiPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], Scalar] | None = None):
        clean = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in term {(i, j)}")
            c = Fraction(c)
            if c:
                clean[(int(i), int(j))] = c
        self._terms = dict(sorted(clean.items()))
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def constant(cls, c: Scalar) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def alpha(cls) -> "BiPoly":
        return cls({(1, 0): 1})

    @classmethod
    def beta(cls) -> "BiPoly":
        return cls({(0, 1): 1})

    @classmethod
    def linear(cls, a: Scalar, b: Scalar) -> "BiPoly":
        """``a*alpha + b*beta``."""
        return cls({(1, 0): a, (0, 1): b})

    @classmethod
    def from_homogeneous(cls, degree: int, row: Iterable[Scalar]) -> "BiPoly":
        """Inverse of :meth:`homogeneous_row`: ``row[i]`` multiplies ``alpha**i beta**(degree-i)``."""
        return cls({(i, degree - i): c for i, c in enumerate(row)})

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> dict[tuple[int, int], Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def degrees(self) -> set[int]:
        return {i + j for i, j in self._terms}

    def total_degree(self) -> int:
        """Largest total degree; -1 for the zero polynomial."""
        return max(self.degrees(), default=-1)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = self.degrees()
        if not degs:
            return True
        if len(degs) != 1:
            return False
        return degree is None or degs == {degree}

    def is_symmetric(self) -> bool:
        return all(self._terms.get((j, i)) == c for (i, j), c in self._terms.items())

    def coefficient(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    def homogeneous_part(self, degree: int) -> "BiPoly":
        return BiPoly({k: c for k, c in self._terms.items() if sum(k) == degree})

    def homogeneous_row(self, degree: int) -> list[Fraction]:
        """Coefficients of the degree-``degree`` part indexed by the alpha exponent."""
        row = [Fraction(0)] * (degree + 1)
        for (i, j), c in self._terms.items():
            if i + j == degree:
                row[i] = c
        return row

    def evaluate(self, a: Scalar, b: Scalar) -> Fraction:
        a, b = Fraction(a), Fraction(b)
        return sum((c * a**i * b**j for (i, j), c in self._terms.items()), Fraction(0))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BiPoly({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, BiPoly):
            return NotImplemented
        return _mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result, base = BiPoly.constant(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"BiPoly({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for (i, j), c in sorted(self._terms.items(), key=lambda t: (-sum(t[0]), -t[0][0])):
            mono = "*".join(
                s for s in (_pow_str("a", i), _pow_str("b", j)) if s
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _pow_str(v, e):
    if e == 0:
        return ""
    return v if e == 1 else f"{v}^{e}"


def _coerce(x):
    if isinstance(x, BiPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return BiPoly.constant(x)
    return NotImplemented


def _integer_row(row: list[Fraction]) -> tuple[list[int], int]:
    den = lcm(*(c.denominator for c in row)) if row else 1
    return [int(c * den) for c in row], den


def _mul(p: BiPoly, q: BiPoly) -> BiPoly:
    if not p or not q:
        return BiPoly()
    out: dict[tuple[int, int], Fraction] = {}
    qrows = [(dq, *_integer_row(q.homogeneous_row(dq))) for dq in sorted(q.degrees())]
    for dp in sorted(p.degrees()):
        prow, pden = _integer_row(p.homogeneous_row(dp))
        for dq, qrow, qden in qrows:
            prod = kernels.convolve(prow, qrow)
            deg = dp + dq
            scale = pden * qden
            for i, c in enumerate(prod):
                if c:
                    key = (i, deg - i)
                    out[key] = out.get(key, 0) + Fraction(c, scale)
    return BiPoly(out)


# Functional surface mirroring the operator methods.

def add(p: BiPoly, q: BiPoly) -> BiPoly:
    return p + q


def mul(p: BiPoly, q: BiPoly) -> BiPoly:
    return p * q


def coefficient(p: BiPoly, i: int, j: int) -> Fraction:
    return p.coefficient(i, j)


def evaluate(p: BiPoly, a: Scalar, b: Scalar) -> Fraction:
    return p.evaluate(a, b)


def is_symmetric(p: BiPoly) -> bool:
    return p.is_symmetric()


def product(factors: Iterable[BiPoly]) -> BiPoly:
    result = BiPoly.constant(1)
    for f in factors:
        result = result * f
    return result
