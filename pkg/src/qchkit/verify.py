"""Property suite behind ``qchkit verify``.

Two kinds of checks: a fixed corpus of known numbers (cubic threefold,
Grassmannian normalizations, hypersurface identities) and per-variety
properties run over a sweep of complete intersections.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import combinations_with_replacement
from math import factorial
from typing import Callable, Iterator

from .bipoly import BiPoly
from .enumerative import (
    balanced_queries,
    closed_form_triple,
    count_through_cycles,
    conics_through_two_points,
    cubics_through_three_points,
    ring_triple,
)
from .grassmann import (
    CIData,
    generating_polynomial,
    integrate_g2n,
    l0_closed_form,
    l1_closed_form,
    l_vector_from_generating_function,
    l_vector_from_integrals,
    minimal_dimension,
    mu_closed_form,
    special_schubert,
)
from .qring import QRing, build_ring, h_power_relation_holds, primitive_pairing_scale, qmul, triple_product, verify_ring


@dataclass(frozen=True)
class Check:
    name: str
    case: str
    passed: bool
    detail: str = ""


def sweep_cases(max_r: int = 3, max_degree: int = 5, extra: int = 2) -> list[CIData]:
    """Every multidegree with r <= max_r and 2 <= d_i <= max_degree, at minimal n and minimal n + extra."""
    cap = os.environ.get("QCHKIT_MAX_DEGREE")
    if cap:
        max_degree = min(max_degree, int(cap))
    cases = []
    for r in range(1, max_r + 1):
        for degs in combinations_with_replacement(range(2, max_degree + 1), r):
            n0 = minimal_dimension(degs)
            for n in sorted({n0, n0 + extra}):
                ci = CIData(n, degs)
                if ci.is_odd_quadric:
                    continue
                cases.append(ci)
    return cases


def _check(name: str, case: str, fn: Callable[[], tuple[bool, str] | bool]) -> Check:
    try:
        out = fn()
    except Exception as exc:  # a crashing check is a failing check
        return Check(name, case, False, f"{type(exc).__name__}: {exc}")
    if isinstance(out, tuple):
        return Check(name, case, bool(out[0]), out[1])
    return Check(name, case, bool(out))


def _expect(got, want) -> tuple[bool, str]:
    return got == want, f"got {got}, expected {want}"


def corpus_checks() -> Iterator[Check]:
    cubic = CIData(3, (3,))
    tag = cubic.label()
    yield _check("l-vector (6, 15, 6)", tag, lambda: _expect(l_vector_from_integrals(cubic).l, (6, 15, 6)))
    yield _check("mu = 3^3", tag, lambda: _expect(l_vector_from_generating_function(cubic).mu, 27))
    yield _check("conics through 2 points", tag, lambda: _expect(conics_through_two_points(cubic), 6))
    yield _check(
        "conics through point, line, line", tag,
        lambda: _expect(count_through_cycles(cubic, 2, ["point", "line", "line"]).value, 14),
    )
    yield _check(
        "twisted cubics through 3 points", tag,
        lambda: _expect(count_through_cycles(cubic, 3, ["point"] * 3).value, 24),
    )
    yield _check(
        "twisted cubics corollary", tag, lambda: _expect(cubics_through_three_points(cubic), 24)
    )
    yield _check(
        "primitive pairing scale, Y a line", tag,
        lambda: _expect(primitive_pairing_scale(build_ring(cubic), 1), -2),
    )
    for N in range(4, 11):
        yield _check(
            "integral of c_{N-2}^2 = 1", f"N={N}",
            lambda N=N: _expect(integrate_g2n(special_schubert(N - 2) ** 2, N), 1),
        )
    yield _check(
        "four lines in P^3", "N=4",
        lambda: _expect(integrate_g2n((BiPoly.alpha() + BiPoly.beta()) ** 4, 4), 2),
    )
    for d in range(3, 7):
        yield _check(
            "conics through 2 points = d!(d-1)!/2", f"n={2 * d - 3} degrees={d}",
            lambda d=d: _expect(
                conics_through_two_points(CIData(2 * d - 3, (d,))),
                Fraction(factorial(d) * factorial(d - 1), 2),
            ),
        )
        yield _check(
            "cubics through 3 points = d!((d-1)!)^2", f"n={3 * d - 6} degrees={d}",
            lambda d=d: _expect(
                cubics_through_three_points(CIData(3 * d - 6, (d,))),
                factorial(d) * factorial(d - 1) ** 2,
            ),
        )


def _corrupt(ring: QRing) -> QRing:
    """Perturb one structure constant (H1*H1 gains an extra H0 term)."""
    table = [list(row) for row in ring.table]
    entry = dict(table[1][1])
    entry[0] = entry.get(0, 0) + 1
    table[1][1] = entry
    return replace(ring, table=tuple(tuple(r) for r in table))


def case_checks(ci: CIData, inject_fault: bool = False) -> Iterator[Check]:
    tag = ci.label()
    try:
        a = l_vector_from_integrals(ci)
        b = l_vector_from_generating_function(ci)
        ring = build_ring(ci)
    except Exception as exc:
        yield Check("construction", tag, False, f"{type(exc).__name__}: {exc}")
        return
    if inject_fault:
        ring = _corrupt(ring)
    lv = a
    yield _check("two routes to l-vector agree", tag, lambda: _expect(a, b))
    yield _check("l_0 = prod d_i!", tag, lambda: _expect(lv.l[0], l0_closed_form(ci)))
    if ci.top >= 1:
        yield _check("l_1 closed form", tag, lambda: _expect(lv.l[1], l1_closed_form(ci)))
    yield _check("sum l_p = prod d_i^d_i", tag, lambda: _expect(lv.mu, mu_closed_form(ci)))
    yield _check(
        "generating polynomial at (1,1) = mu", tag,
        lambda: _expect(generating_polynomial(ci).evaluate(1, 1), lv.mu),
    )
    yield _check("l_p = l_(n+1-k-p)", tag, lambda: _expect(lv.l, lv.l[::-1]))
    yield _check("verify_ring report empty", tag, lambda: _expect(verify_ring(ring), []))
    yield _check("H^(n+1) = mu H^(n+1-k) is the only relation on H", tag, lambda: h_power_relation_holds(ring))

    def primitive_square():
        want = ring.H(ci.n) - ring.H(ci.n - ci.k) * lv.l[0]
        for i in range(1, ring.m + 1):
            for j in range(1, ring.m + 1):
                got = qmul(ring, ring.pi(i), ring.pi(j))
                if got != want * (ring.pairing[i - 1][j - 1] / ci.d):
                    return False, f"pi{i}*pi{j}"
        return True, ""

    yield _check("pi_i*pi_j = (pi_i|pi_j)/d (H_n - l_0 H_(n-k))", tag, primitive_square)
    if ci.k < ci.n:
        def eq41():
            for i in range(1, ring.m + 1):
                for j in range(1, ring.m + 1):
                    got = triple_product(ring, ring.H(ci.k), ring.pi(i), ring.pi(j), 1)
                    if got != -lv.l[0] * ring.pairing[i - 1][j - 1]:
                        return False, f"<H_k, pi{i}, pi{j}> = {got}"
            return True, ""

        yield _check("<H_k, pi_i, pi_j>_1 = -l_0 (pi_i|pi_j)", tag, eq41)

    def routes():
        count = 0
        for j in (1, 2, 3):
            for q in balanced_queries(ci, j):
                f, r = closed_form_triple(q, lv), ring_triple(ring, q)
                if f != r:
                    return False, f"j={j} codims={q.codims}: closed form {f}, ring {r}"
                count += 1
        return True, f"{count} queries"

    yield _check("closed-form counts = ring triple products", tag, routes)
    if ci.n == 2 * ci.s - 1 and not ci.is_quadric:
        yield _check(
            "conics through 2 points = l_0^2/(2d)", tag,
            lambda: _expect(conics_through_two_points(ci), Fraction(lv.l[0] ** 2, 2 * ci.d)),
        )
    if ci.n == 3 * ci.s - 3:
        yield _check(
            "cubics through 3 points = l_0^3/d^2", tag,
            lambda: _expect(cubics_through_three_points(ci), Fraction(lv.l[0] ** 3, ci.d**2)),
        )


def run_suite(cases: list[CIData] | None = None, inject_fault: bool = False, corpus: bool = True) -> list[Check]:
    checks = list(corpus_checks()) if corpus else []
    for ci in sweep_cases() if cases is None else cases:
        checks.extend(case_checks(ci, inject_fault))
    return checks
