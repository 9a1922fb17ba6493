"""Counts of lines, conics and twisted cubics meeting general linear sections.

For codimensions ``p <= q <= r`` and ``S_t = l_0 + ... + l_t`` (``S_t = 0``
for ``t < 0``, ``S_t = mu`` past the last index) the degree-``j`` triple
products of the hyperplane powers are

    lines    (p+q+r = n+k):   d * (S_{n-r} - S_{q-k})
    conics   (p+q+r = n+2k):  d * ((mu - S_{p-k} - S_{q-k}) S_{n-r} + S_{p-k} S_{q-k})
    cubics   (p+q+r = n+3k):  d * S_{n-p} S_{n-q} S_{n-r}

The line form reduces to ``d * (l_0 + ... + l_{n-q})`` only when ``r < k``;
the conic form reduces to ``d * S_{n-q} S_{n-r}`` when ``p <= k``.  Every
count is cross-checked against the triple product computed in the ring.

Counts assume the relevant family of curves on X has its expected
dimension, which holds for general X but cannot be checked algebraically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import factorial, prod
from typing import Sequence

from .grassmann import CIData, ConsistencyError, HypothesisError, LVector, l_vector
from .qring import QRing, build_abstract_ring, build_ring, triple_product

CAVEAT = "assumes the family of curves on X has the expected dimension (true for general X)"
CURVE_NAMES = {1: "lines", 2: "conics", 3: "cubics"}


class QueryError(ValueError):
    """Unbalanced or out-of-range enumerative query."""


@dataclass(frozen=True)
class CountQuery:
    ci: CIData
    curve_degree: int
    codims: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "codims", tuple(sorted(int(c) for c in self.codims)))
        n, j = self.ci.n, self.curve_degree
        if j not in CURVE_NAMES:
            raise QueryError(f"curve degree must be 1, 2 or 3, got {j}")
        if len(self.codims) != 3:
            raise QueryError("exactly three codimensions are required")
        if any(not 1 <= c <= n for c in self.codims):
            raise QueryError(f"codimensions {list(self.codims)} must lie in 1..{n}")
        expected = n + j * self.ci.k
        if sum(self.codims) != expected:
            raise QueryError(
                f"codimensions sum to {sum(self.codims)} but {CURVE_NAMES[j]} need "
                f"n + j*k = {n} + {j}*{self.ci.k} = {expected}"
            )
        if j == 2 and self.ci.is_quadric:
            raise QueryError("conic counts exclude quadrics")


def _lvec(ci: CIData, lvec: LVector | None) -> LVector:
    return lvec if lvec is not None else l_vector(ci)


def _sums(q: CountQuery, lvec: LVector | None):
    lv = _lvec(q.ci, lvec)
    return lv, lv.partial_sum


def count_lines(q: CountQuery, lvec: LVector | None = None) -> int:
    if q.curve_degree != 1:
        raise QueryError("count_lines needs curve_degree 1")
    lv, S = _sums(q, lvec)
    ci = q.ci
    p, qq, r = q.codims
    return ci.d * (S(ci.n - r) - S(qq - ci.k))


def conic_triple_product(q: CountQuery, lvec: LVector | None = None) -> int:
    """Degree-2 triple product, every conic weighted by its intersection multiplicities."""
    if q.curve_degree != 2:
        raise QueryError("conic counts need curve_degree 2")
    lv, S = _sums(q, lvec)
    ci = q.ci
    p, qq, r = q.codims
    a, b = S(p - ci.k), S(qq - ci.k)
    return ci.d * ((lv.mu - a - b) * S(ci.n - r) + a * b)


def count_conics(q: CountQuery, lvec: LVector | None = None) -> Fraction:
    """Number of conics; a hyperplane condition meets each conic twice and is divided out."""
    raw = Fraction(conic_triple_product(q, lvec))
    return raw / 2 if q.codims[0] == 1 else raw


def count_twisted_cubics(q: CountQuery, lvec: LVector | None = None) -> int:
    if q.curve_degree != 3:
        raise QueryError("count_twisted_cubics needs curve_degree 3")
    lv, S = _sums(q, lvec)
    ci = q.ci
    return ci.d * prod(S(ci.n - c) for c in q.codims)


def closed_form_triple(q: CountQuery, lvec: LVector | None = None) -> int:
    """Raw closed-form value of the degree-j triple product of H_p, H_q, H_r."""
    if q.curve_degree == 1:
        return count_lines(q, lvec)
    if q.curve_degree == 2:
        return conic_triple_product(q, lvec)
    return count_twisted_cubics(q, lvec)


def ring_triple(ring: QRing, q: CountQuery) -> Fraction:
    p, qq, r = q.codims
    return triple_product(ring, ring.H(p), ring.H(qq), ring.H(r), q.curve_degree)


def balanced_queries(ci: CIData, j: int) -> list[CountQuery]:
    if j == 2 and ci.is_quadric:
        return []
    target = ci.n + j * ci.k
    return [
        CountQuery(ci, j, t)
        for t in combinations_with_replacement(range(1, ci.n + 1), 3)
        if sum(t) == target
    ]


def conics_through_two_points(ci: CIData) -> Fraction:
    if ci.n != 2 * ci.s - 1:
        raise HypothesisError(f"needs n = 2*sum(d_i - 1) - 1 = {2 * ci.s - 1}, got n={ci.n}")
    return Fraction(prod(factorial(di) ** 2 for di in ci.degrees), 2 * ci.d)


def cubics_through_three_points(ci: CIData) -> Fraction:
    if ci.n != 3 * ci.s - 3:
        raise HypothesisError(f"needs n = 3*sum(d_i - 1) - 3 = {3 * ci.s - 3}, got n={ci.n}")
    return Fraction(prod(factorial(di) ** 3 for di in ci.degrees), ci.d**2)


# -- incidence cycles -------------------------------------------------------

@dataclass(frozen=True)
class Cycle:
    """A cycle on X as ``scale * H_codim``."""

    name: str
    codim: int
    scale: Fraction


def parse_cycle(ci: CIData, text: str) -> Cycle:
    """``point``, ``line`` (a line contained in X), ``hyperplane`` or ``section:<c>``."""
    s = text.strip().lower()
    if s == "point":
        return Cycle(s, ci.n, Fraction(1, ci.d))
    if s == "line":
        if ci.n < 3:
            raise QueryError("line cycles need n >= 3 (rank-one cohomology in degree n-1)")
        return Cycle(s, ci.n - 1, Fraction(1, ci.d))
    if s == "hyperplane":
        return Cycle(s, 1, Fraction(1))
    if s.startswith(("section:", "codim:")):
        c = int(s.split(":", 1)[1])
        if not 1 <= c <= ci.n:
            raise QueryError(f"section codimension {c} outside 1..{ci.n}")
        return Cycle(f"section:{c}", c, Fraction(1))
    raise QueryError(f"unknown cycle {text!r}; use point, line, hyperplane or section:<c>")


@dataclass(frozen=True)
class CountResult:
    value: Fraction
    formula_triple: int
    ring_triple: Fraction
    scale: Fraction
    halved: bool
    query: CountQuery
    caveat: str = CAVEAT

    @property
    def routes_agree(self) -> bool:
        return self.formula_triple == self.ring_triple


def count_through_cycles(
    ci: CIData, j: int, cycles: Sequence[str | Cycle], ring: QRing | None = None
) -> CountResult:
    """Number of degree-``j`` rational curves meeting three general cycles of X."""
    cyc = [c if isinstance(c, Cycle) else parse_cycle(ci, c) for c in cycles]
    if len(cyc) != 3:
        raise QueryError("exactly three cycles are required")
    q = CountQuery(ci, j, tuple(c.codim for c in cyc))
    return count_query(q, ring, scale=prod((c.scale for c in cyc), start=Fraction(1)))


def ring_for_counts(ci: CIData) -> QRing:
    """Default ring; odd quadrics have no primitive classes, so only their H-part is built."""
    if ci.is_odd_quadric:
        lv = l_vector(ci)
        return build_abstract_ring(ci.n, ci.k, ci.d, lv.l)
    return build_ring(ci)


def count_query(q: CountQuery, ring: QRing | None = None, scale: Fraction = Fraction(1)) -> CountResult:
    """Evaluate ``q`` by closed form and in the ring; raises if the two disagree."""
    if ring is None:
        ring = ring_for_counts(q.ci)
    formula = closed_form_triple(q, ring.lvec)
    in_ring = ring_triple(ring, q)
    if formula != in_ring:
        raise ConsistencyError(f"closed form {formula} != ring value {in_ring} for {q}")
    halved = q.curve_degree == 2 and q.codims[0] == 1
    value = Fraction(formula) * scale
    if halved:
        value /= 2
    return CountResult(value, formula, in_ring, scale, halved, q)
