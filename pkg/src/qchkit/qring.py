"""Quantum cohomology ring of a Fano complete intersection as an explicit algebra.

The basis is ``H_0 .. H_n`` (classical powers of the hyperplane class, real
degree ``2p``) followed by formal primitive classes ``pi_1 .. pi_m`` of real
degree ``n``.  The quantum product is fixed by

    H^(n+1) = mu H^(n+1-k),    H . pi = 0,
    pi_i . pi_j = (pi_i | pi_j) / d * (H^n - mu H^(n-k)),

where ``H^j`` denotes quantum powers.  Quantum and classical powers are
related by ``H^j = H_j + (l_0 + ... + l_{j-k}) H_{j-k}`` for ``k <= j <= n``.

All structure constants are materialized when a ring is built and every
consistency check in :func:`verify_ring` must come back empty.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Mapping, Sequence

from . import kernels
from .grassmann import CIData, ConsistencyError, HypothesisError, LVector, l_vector

Matrix = tuple[tuple[Fraction, ...], ...]


# -- quantum powers of H ----------------------------------------------------

def _partial(lvec: LVector, t: int) -> int:
    return lvec.partial_sum(t)


def reduce_exponent(n: int, k: int, mu, j: int) -> tuple[int, int]:
    """Rewrite H^j as ``coef * H^e`` with ``e <= n``; returns ``(coef, e)``."""
    if j < 0:
        raise ValueError("negative exponent")
    coef = 1
    while j > n:
        j -= k
        coef *= mu
    return coef, j


def _classical_of_power(n, k, lvec, j) -> dict[int, int]:
    out = {j: 1}
    if j >= k:
        c = _partial(lvec, j - k)
        if c:
            out[j - k] = c
    return out


def _power_of_classical(n, k, lvec, a) -> dict[int, int]:
    out = {a: 1}
    if a >= k:
        c = _partial(lvec, a - k)
        if c:
            out[a - k] = -c
    return out


def _power_product(n, k, mu, x: Mapping[int, Fraction], y: Mapping[int, Fraction]) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for a, u in x.items():
        for b, v in y.items():
            coef, e = reduce_exponent(n, k, mu, a + b)
            out[e] = out.get(e, 0) + coef * u * v
    return out


def _powers_to_classical(n, k, lvec, x: Mapping[int, Fraction]) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for j, u in x.items():
        for a, c in _classical_of_power(n, k, lvec, j).items():
            out[a] = out.get(a, 0) + c * u
    return {a: Fraction(v) for a, v in out.items() if v}


# -- ring types -------------------------------------------------------------

@dataclass(frozen=True)
class RingElement:
    coords: tuple[Fraction, ...]

    def __add__(self, other: "RingElement") -> "RingElement":
        if len(other.coords) != len(self.coords):
            raise ValueError("elements of different rings")
        return RingElement(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "RingElement") -> "RingElement":
        return self + other * -1

    def __mul__(self, c) -> "RingElement":
        return RingElement(tuple(a * c for a in self.coords))

    __rmul__ = __mul__

    def support(self) -> dict[int, Fraction]:
        return {i: c for i, c in enumerate(self.coords) if c}

    def is_zero(self) -> bool:
        return not any(self.coords)


@dataclass(frozen=True)
class QRing:
    n: int
    k: int
    d: int
    lvec: LVector
    pairing: Matrix
    table: tuple[tuple[Mapping[int, Fraction], ...], ...] = field(repr=False)
    ci: CIData | None = None

    @property
    def m(self) -> int:
        return len(self.pairing)

    @property
    def mu(self) -> int:
        return self.lvec.mu

    @property
    def size(self) -> int:
        return self.n + 1 + self.m

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(2 * p for p in range(self.n + 1)) + (self.n,) * self.m

    @cached_property
    def names(self) -> tuple[str, ...]:
        return tuple(f"H{p}" for p in range(self.n + 1)) + tuple(
            f"pi{i}" for i in range(1, self.m + 1)
        )

    @cached_property
    def gram(self) -> Matrix:
        """Poincare pairing on the whole basis."""
        size = self.size
        g = [[Fraction(0)] * size for _ in range(size)]
        for a in range(self.n + 1):
            g[a][self.n - a] = Fraction(self.d)
        base = self.n + 1
        for i in range(self.m):
            for j in range(self.m):
                g[base + i][base + j] = Fraction(self.pairing[i][j])
        return tuple(tuple(row) for row in g)

    # element constructors

    def zero(self) -> RingElement:
        return RingElement((Fraction(0),) * self.size)

    def basis(self, index: int) -> RingElement:
        coords = [Fraction(0)] * self.size
        coords[index] = Fraction(1)
        return RingElement(tuple(coords))

    def H(self, p: int) -> RingElement:
        if not 0 <= p <= self.n:
            raise IndexError(f"H_{p} outside 0..{self.n}")
        return self.basis(p)

    def pi(self, i: int) -> RingElement:
        """Primitive class ``pi_i``, 1-based."""
        if not 1 <= i <= self.m:
            raise IndexError(f"pi_{i} outside 1..{self.m}")
        return self.basis(self.n + i)

    def element(self, coords: Mapping[int, Fraction]) -> RingElement:
        out = [Fraction(0)] * self.size
        for i, c in coords.items():
            out[i] = Fraction(c)
        return RingElement(tuple(out))

    def degree_of(self, x: RingElement) -> int | None:
        """Real degree of a homogeneous element; None if mixed. Zero has degree 0."""
        degs = {self.degrees[i] for i in x.support()}
        if len(degs) > 1:
            return None
        return degs.pop() if degs else 0

    def pair(self, x: RingElement, y: RingElement) -> Fraction:
        g = self.gram
        return sum(
            (u * g[a][b] * v for a, u in x.support().items() for b, v in y.support().items()),
            Fraction(0),
        )

    def describe(self, x: RingElement) -> str:
        parts = [f"{c}*{self.names[i]}" if c != 1 else self.names[i] for i, c in x.support().items()]
        return " + ".join(parts) if parts else "0"


# -- operations -------------------------------------------------------------

def classical_from_quantum_power(ring: QRing, j: int) -> RingElement:
    if not 0 <= j <= ring.n:
        raise IndexError(f"quantum power H^{j} outside 0..{ring.n}")
    return ring.element(_classical_of_power(ring.n, ring.k, ring.lvec, j))


def reduce_power(ring: QRing, j: int) -> tuple[int, int]:
    """``H^j = coef * H^e`` with ``e <= n``; returns ``(coef, e)``."""
    return reduce_exponent(ring.n, ring.k, ring.mu, j)


def qmul(ring: QRing, x: RingElement, y: RingElement) -> RingElement:
    out = [Fraction(0)] * ring.size
    ys = y.support()
    for a, u in x.support().items():
        row = ring.table[a]
        for b, v in ys.items():
            for c, t in row[b].items():
                out[c] += u * v * t
    return RingElement(tuple(out))


def graded_piece(ring: QRing, x: RingElement, degree: int) -> RingElement:
    return ring.element({i: c for i, c in x.support().items() if ring.degrees[i] == degree})


def triple_product(ring: QRing, x: RingElement, y: RingElement, z: RingElement, j: int) -> Fraction:
    """``((x . y)_j | z)`` for homogeneous ``x, y, z``."""
    degs = [ring.degree_of(e) for e in (x, y, z)]
    if None in degs:
        raise ValueError("triple_product needs homogeneous arguments")
    target = degs[0] + degs[1] - 2 * ring.k * j
    if target < 0:
        return Fraction(0)
    return ring.pair(graded_piece(ring, qmul(ring, x, y), target), z)


def primitive_pairing_scale(ring: QRing, dY: int) -> Fraction:
    """Factor relating ``(phi(a) | phi(b))`` to ``(a | b)`` for a codim-k cycle of degree ``dY``."""
    if dY < 1:
        raise ValueError("dY must be positive")
    return Fraction(-ring.lvec.l[0] * dY, ring.d)


# -- construction -----------------------------------------------------------

def default_pairing(n: int) -> Matrix:
    if n % 2:
        return ((Fraction(0), Fraction(1)), (Fraction(-1), Fraction(0)))
    return ((Fraction(1),),)


def _determinant(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    a = [list(map(Fraction, r)) for r in rows]
    size = len(a)
    det = Fraction(1)
    for col in range(size):
        piv = next((r for r in range(col, size) if a[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, size):
            f = a[r][col] / a[col][col]
            if f:
                for c in range(col, size):
                    a[r][c] -= f * a[col][c]
    return det


def _check_pairing(n: int, pairing) -> Matrix:
    m = len(pairing)
    mat = tuple(tuple(Fraction(v) for v in row) for row in pairing)
    if any(len(row) != m for row in mat):
        raise HypothesisError(f"pairing must be a square {m}x{m} matrix")
    sign = -1 if n % 2 else 1
    kind = "antisymmetric" if sign < 0 else "symmetric"
    for i in range(m):
        for j in range(m):
            if mat[i][j] != sign * mat[j][i]:
                raise HypothesisError(f"pairing must be {kind} for n={n}")
    if m and _determinant(mat) == 0:
        raise HypothesisError("pairing is degenerate")
    return mat


def structure_constants(n, k, d, lvec: LVector, pairing: Matrix):
    """Sparse table: ``table[a][b]`` maps basis index ``c`` to the coefficient of ``e_c`` in ``e_a . e_b``."""
    m = len(pairing)
    size = n + 1 + m
    mu = lvec.mu
    table = [[{} for _ in range(size)] for _ in range(size)]
    to_q = [_power_of_classical(n, k, lvec, a) for a in range(n + 1)]
    for a in range(n + 1):
        for b in range(a, n + 1):
            prod = _powers_to_classical(n, k, lvec, _power_product(n, k, mu, to_q[a], to_q[b]))
            table[a][b] = prod
            table[b][a] = prod
    # H^j kills pi for j >= 1, so only the H^0 component of H_a survives
    for a in range(n + 1):
        c0 = to_q[a].get(0, 0)
        for i in range(m):
            entry = {n + 1 + i: Fraction(c0)} if c0 else {}
            table[a][n + 1 + i] = entry
            table[n + 1 + i][a] = dict(entry)
    pp = _powers_to_classical(n, k, lvec, {n: 1, n - k: -mu})
    for i in range(m):
        for j in range(m):
            w = Fraction(pairing[i][j], d)
            table[n + 1 + i][n + 1 + j] = {c: w * v for c, v in pp.items() if w * v}
    return tuple(tuple(row) for row in table)


def build_ring(ci: CIData, lvec: LVector | None = None, m: int | None = None, pairing=None) -> QRing:
    ci.require_hypothesis()
    if ci.is_odd_quadric:
        raise HypothesisError(
            "odd-dimensional quadric: the requirement that H^n(X,Q) is nonzero fails "
            "(the primitive middle cohomology vanishes)"
        )
    if pairing is None:
        pairing = default_pairing(ci.n)
        if m is not None:
            if m == 0:
                pairing = ()
            elif m != len(pairing):
                raise HypothesisError("give an explicit pairing for a non-default primitive rank")
    pairing = _check_pairing(ci.n, pairing)
    if m is not None and m != len(pairing):
        raise HypothesisError(f"primitive rank {m} does not match a {len(pairing)}x{len(pairing)} pairing")
    if ci.is_quadric and len(pairing) > 1:
        raise HypothesisError("quadrics admit primitive rank at most 1 (associativity forces it)")
    if lvec is None:
        lvec = l_vector(ci)
    elif len(lvec.l) != ci.top + 1 or lvec.l != lvec.l[::-1]:
        raise HypothesisError(f"l-vector {lvec.l} has wrong length or is not palindromic")
    ring = QRing(ci.n, ci.k, ci.d, lvec, pairing, structure_constants(ci.n, ci.k, ci.d, lvec, pairing), ci)
    report = verify_ring(ring)
    if report:
        raise ConsistencyError(f"ring for {ci.label()} failed verification: {report[:5]}")
    return ring


def build_abstract_ring(n: int, k: int, d: int, lvals: Sequence[int], pairing=()) -> QRing:
    """Ring of the relations for an arbitrary Fano index/degree/line vector, no variety attached."""
    if n < 2 or not (2 * k > n) or k > n:
        raise HypothesisError(f"need n >= 2 and n/2 < k <= n, got n={n}, k={k}")
    if d < 1:
        raise HypothesisError("degree must be positive")
    lvals = tuple(int(v) for v in lvals)
    if len(lvals) != n + 2 - k:
        raise HypothesisError(f"expected {n + 2 - k} line numbers, got {len(lvals)}")
    if lvals != lvals[::-1]:
        raise HypothesisError(f"line numbers {lvals} violate l_p = l_(n+1-k-p)")
    pairing = _check_pairing(n, pairing)
    if n == 2 * k - 1 and not pairing:
        raise HypothesisError("n = 2k-1 requires H^n(X,Q) to be nonzero (primitive rank >= 1)")
    if k == n and len(pairing) > 1:
        raise HypothesisError("k = n admits primitive rank at most 1 (associativity forces it)")
    lvec = LVector(lvals, sum(lvals))
    ring = QRing(n, k, d, lvec, pairing, structure_constants(n, k, d, lvec, pairing))
    report = verify_ring(ring)
    if report:
        raise ConsistencyError(f"abstract ring failed verification: {report[:5]}")
    return ring


# -- verification -----------------------------------------------------------

def _integer_tensor(ring: QRing) -> tuple[list[int], int]:
    """Structure constants scaled to integers by a common denominator, flattened."""
    den = 1
    for row in ring.table:
        for entry in row:
            for v in entry.values():
                den = lcm(den, Fraction(v).denominator)
    size = ring.size
    flat = [0] * size**3
    for a, row in enumerate(ring.table):
        for b, entry in enumerate(row):
            for c, v in entry.items():
                flat[(a * size + b) * size + c] = int(Fraction(v) * den)
    return flat, den


def _row(ring: QRing, a: int, b: int) -> dict[int, Fraction]:
    return {c: Fraction(v) for c, v in ring.table[a][b].items() if v}


def verify_ring(ring: QRing) -> list[str]:
    """Exhaustive checks over basis pairs and triples. Returns violation messages; empty means sound."""
    report: list[str] = []
    size, deg, names = ring.size, ring.degrees, ring.names
    g = ring.gram

    try:
        _check_pairing(ring.n, ring.pairing)
    except HypothesisError as exc:
        report.append(f"pairing: {exc}")

    for a in range(size):
        unit = {a: Fraction(1)}
        if _row(ring, 0, a) != unit or _row(ring, a, 0) != unit:
            report.append(f"unit: H0*{names[a]} != {names[a]}")

    for a in range(size):
        for b in range(size):
            sign = -1 if deg[a] * deg[b] % 2 else 1
            ab = _row(ring, a, b)
            ba = {c: sign * v for c, v in _row(ring, b, a).items()}
            if ab != ba:
                report.append(f"graded commutativity: {names[a]}*{names[b]}")
            for c in ab:
                drop = deg[a] + deg[b] - deg[c]
                if drop < 0 or drop % (2 * ring.k):
                    report.append(f"grading: {names[a]}*{names[b]} has a {names[c]} component")

    flat, _ = _integer_tensor(ring)
    for a, b, c in kernels.associativity_defects(flat, size):
        report.append(f"associativity: ({names[a]}*{names[b]})*{names[c]}")

    gden = lcm(*(v.denominator for row in g for v in row))
    gram = [int(v * gden) for row in g for v in row]
    parity = [dg % 2 for dg in deg]
    for kind, a, b, c in kernels.pairing_defects(flat, gram, parity, size):
        law = "Frobenius" if kind == 0 else "cyclic symmetry"
        report.append(f"{law}: ({names[a]}*{names[b]}|{names[c]})")
    return report


def h_power_relation_holds(ring: QRing) -> bool:
    """H^0..H^n are independent and H^(n+1) = mu H^(n+1-k), all computed in the table."""
    powers = [ring.H(0)]
    for _ in range(ring.n + 1):
        powers.append(qmul(ring, powers[-1], ring.H(1)))
    # classical coordinates of H^j are unitriangular in H_j
    for j, x in enumerate(powers[: ring.n + 1]):
        sup = x.support()
        if sup.get(j) != 1 or any(i > j or i > ring.n for i in sup):
            return False
    return powers[ring.n + 1] == powers[ring.n + 1 - ring.k] * ring.mu
