# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels. Semantics are defined by `qchkit._purekernels`.

Each kernel first runs on C ``long long`` with checked arithmetic; any
overflow drops to a loop over Python integers, so results stay exact.
"""

from libc.stdlib cimport malloc, calloc, free


cdef extern from *:
    bint __builtin_smulll_overflow(long long a, long long b, long long *res) nogil
    bint __builtin_saddll_overflow(long long a, long long b, long long *res) nogil


class _Overflow(Exception):
    pass


cdef bint _fits(seq):
    cdef long long lim = 1LL << 62
    for v in seq:
        if not (-lim < v < lim):
            return False
    return True


cdef list _convolve_ll(list a, list b):
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    cdef long long *A = <long long *> malloc(na * sizeof(long long))
    cdef long long *B = <long long *> malloc(nb * sizeof(long long))
    cdef long long *C = <long long *> calloc(na + nb - 1, sizeof(long long))
    cdef long long prod
    cdef bint bad = False
    if A == NULL or B == NULL or C == NULL:
        free(A); free(B); free(C)
        raise MemoryError()
    try:
        for i in range(na):
            A[i] = a[i]
        for j in range(nb):
            B[j] = b[j]
        with nogil:
            for i in range(na):
                if A[i] == 0:
                    continue
                for j in range(nb):
                    if B[j] == 0:
                        continue
                    if __builtin_smulll_overflow(A[i], B[j], &prod) or \
                            __builtin_saddll_overflow(C[i + j], prod, &C[i + j]):
                        bad = True
                        break
                if bad:
                    break
        if bad:
            raise _Overflow()
        return [C[i] for i in range(na + nb - 1)]
    finally:
        free(A); free(B); free(C)


cdef list _convolve_obj(list a, list b):
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    cdef list out = [0] * (na + nb - 1)
    for i in range(na):
        u = a[i]
        if not u:
            continue
        for j in range(nb):
            v = b[j]
            if v:
                out[i + j] += u * v
    return out


def convolve(a, b):
    a = list(a)
    b = list(b)
    if not a or not b:
        return []
    if _fits(a) and _fits(b):
        try:
            return _convolve_ll(a, b)
        except _Overflow:
            pass
    return _convolve_obj(a, b)


cdef list _assoc_ll(list table, Py_ssize_t size):
    cdef Py_ssize_t n3 = size * size * size, a, b, c, e, f
    cdef long long *T = <long long *> malloc(n3 * sizeof(long long))
    cdef long long *L = <long long *> malloc(size * sizeof(long long))
    cdef long long *R = <long long *> malloc(size * sizeof(long long))
    cdef long long t, prod
    cdef list defects = []
    if T == NULL or L == NULL or R == NULL:
        free(T); free(L); free(R)
        raise MemoryError()
    try:
        for a in range(n3):
            T[a] = table[a]
        for a in range(size):
            for b in range(size):
                for c in range(size):
                    for f in range(size):
                        L[f] = 0
                        R[f] = 0
                    for e in range(size):
                        t = T[(a * size + b) * size + e]
                        if t != 0:
                            for f in range(size):
                                if __builtin_smulll_overflow(t, T[(e * size + c) * size + f], &prod) or \
                                        __builtin_saddll_overflow(L[f], prod, &L[f]):
                                    raise _Overflow()
                        t = T[(b * size + c) * size + e]
                        if t != 0:
                            for f in range(size):
                                if __builtin_smulll_overflow(t, T[(a * size + e) * size + f], &prod) or \
                                        __builtin_saddll_overflow(R[f], prod, &R[f]):
                                    raise _Overflow()
                    for f in range(size):
                        if L[f] != R[f]:
                            defects.append((a, b, c))
                            break
        return defects
    finally:
        free(T); free(L); free(R)


cdef list _assoc_obj(list table, Py_ssize_t size):
    cdef Py_ssize_t a, b, c, e, f, base
    cdef list rows = []
    cdef list row, left, right
    cdef list defects = []
    for base in range(0, size * size * size, size):
        rows.append([(f, table[base + f]) for f in range(size) if table[base + f]])
    for a in range(size):
        for b in range(size):
            for c in range(size):
                left = [0] * size
                right = [0] * size
                for e, t in rows[a * size + b]:
                    for f, u in rows[e * size + c]:
                        left[f] += t * u
                for e, t in rows[b * size + c]:
                    for f, u in rows[a * size + e]:
                        right[f] += t * u
                if left != right:
                    defects.append((a, b, c))
    return defects


def associativity_defects(table, Py_ssize_t size):
    table = list(table)
    if len(table) != size * size * size:
        raise ValueError("table length must be size**3")
    if _fits(table):
        try:
            return _assoc_ll(table, size)
        except _Overflow:
            pass
    return _assoc_obj(table, size)


cdef long long _dot_ll(long long *T, long long *G, Py_ssize_t trow, Py_ssize_t gstart,
                       Py_ssize_t gstride, Py_ssize_t size) except? -1:
    cdef long long acc = 0, prod
    cdef Py_ssize_t e
    for e in range(size):
        if T[trow + e] != 0:
            if __builtin_smulll_overflow(T[trow + e], G[gstart + e * gstride], &prod) or \
                    __builtin_saddll_overflow(acc, prod, &acc):
                raise _Overflow()
    return acc


cdef list _pairing_ll(list table, list gram, list parity, Py_ssize_t size):
    cdef Py_ssize_t n3 = size * size * size, n2 = size * size, a, b, c
    cdef long long *T = <long long *> malloc(n3 * sizeof(long long))
    cdef long long *G = <long long *> malloc(n2 * sizeof(long long))
    cdef long long *GT = <long long *> malloc(n2 * sizeof(long long))
    cdef long long lhs, frob, cyc
    cdef list defects = []
    if T == NULL or G == NULL or GT == NULL:
        free(T); free(G); free(GT)
        raise MemoryError()
    try:
        for a in range(n3):
            T[a] = table[a]
        for a in range(n2):
            G[a] = gram[a]
        for a in range(size):
            for b in range(size):
                GT[a * size + b] = gram[b * size + a]
        for a in range(size):
            for b in range(size):
                for c in range(size):
                    # (ab|c) = sum_e T[a,b,e] G[e,c]; column c of G is row c of GT
                    lhs = _dot_ll(T, GT, (a * size + b) * size, c * size, 1, size)
                    frob = _dot_ll(T, G, (b * size + c) * size, a * size, 1, size)
                    cyc = _dot_ll(T, GT, (b * size + c) * size, a * size, 1, size)
                    if parity[a] and (parity[b] + parity[c]) % 2:
                        cyc = -cyc
                    if lhs != frob:
                        defects.append((0, a, b, c))
                    if lhs != cyc:
                        defects.append((1, a, b, c))
        return defects
    finally:
        free(T); free(G); free(GT)


def pairing_defects(table, gram, parity, Py_ssize_t size):
    table = list(table)
    gram = list(gram)
    parity = list(parity)
    if len(table) != size ** 3 or len(gram) != size ** 2 or len(parity) != size:
        raise ValueError("inconsistent tensor sizes")
    if _fits(table) and _fits(gram):
        try:
            return _pairing_ll(table, gram, parity, size)
        except _Overflow:
            pass
    from qchkit._purekernels import pairing_defects as _py
    return _py(table, gram, parity, size)
