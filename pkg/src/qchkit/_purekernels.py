"""Pure-Python kernels; the reference behaviour for the compiled `_speedups` module.

Both modules expose the same two functions with identical semantics:

convolve(a, b)
    Product of two homogeneous bivariate polynomials given as integer
    coefficient sequences ``a[i]`` = coefficient of ``x**i * y**(deg - i)``.
associativity_defects(table, size)
    Triples ``(a, b, c)`` of basis indices where a structure-constant tensor
    ``table[(a*size + b)*size + c]`` fails ``(e_a e_b) e_c == e_a (e_b e_c)``.
pairing_defects(table, gram, parity, size)
    ``(kind, a, b, c)`` where ``(e_a e_b | e_c)`` differs from ``(e_a | e_b e_c)``
    (kind 0, Frobenius) or from ``(-1)^(|a|(|b|+|c|)) (e_b e_c | e_a)`` (kind 1,
    cyclic), with ``gram[x*size + y] = (e_x | e_y)`` and ``parity[x] = |x| mod 2``.
"""


def convolve(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u:
            for j, v in enumerate(b):
                if v:
                    out[i + j] += u * v
    return out


def _sparse_rows(table, size):
    rows = []
    for ab in range(size * size):
        base = ab * size
        rows.append([(c, table[base + c]) for c in range(size) if table[base + c]])
    return rows


def associativity_defects(table, size):
    if len(table) != size ** 3:
        raise ValueError("table length must be size**3")
    rows = _sparse_rows(table, size)
    defects = []
    for a in range(size):
        for b in range(size):
            ab = rows[a * size + b]
            for c in range(size):
                left = {}
                for e, t in ab:
                    for f, u in rows[e * size + c]:
                        left[f] = left.get(f, 0) + t * u
                right = {}
                for e, t in rows[b * size + c]:
                    for f, u in rows[a * size + e]:
                        right[f] = right.get(f, 0) + t * u
                left = {f: v for f, v in left.items() if v}
                right = {f: v for f, v in right.items() if v}
                if left != right:
                    defects.append((a, b, c))
    return defects


def pairing_defects(table, gram, parity, size):
    if len(table) != size ** 3 or len(gram) != size ** 2 or len(parity) != size:
        raise ValueError("inconsistent tensor sizes")
    rows = _sparse_rows(table, size)
    defects = []
    for a in range(size):
        for b in range(size):
            ab = rows[a * size + b]
            for c in range(size):
                bc = rows[b * size + c]
                lhs = sum(t * gram[e * size + c] for e, t in ab)
                frob = sum(gram[a * size + e] * t for e, t in bc)
                cyc = sum(t * gram[e * size + a] for e, t in bc)
                if parity[a] and (parity[b] + parity[c]) % 2:
                    cyc = -cyc
                if lhs != frob:
                    defects.append((0, a, b, c))
                if lhs != cyc:
                    defects.append((1, a, b, c))
    return defects
