"""Exact quantum cohomology of Fano complete intersections in projective space.

The small quantum ring of a complete intersection X of multidegree
(d_1, ..., d_r) and dimension n >= 2 sum(d_i - 1) - 1 is generated by the
hyperplane class and the primitive middle cohomology; its single
nontrivial constant is mu(X) = prod d_i^d_i.  This package computes the
line numbers l_p behind it on the Grassmannian G(2, N), builds the ring as
an explicit structure-constant table, and evaluates the curve counts it
encodes.  Arithmetic is exact throughout (``fractions.Fraction``).
"""

from .bipoly import BiPoly
from .enumerative import (
    CountQuery,
    count_conics,
    count_lines,
    count_through_cycles,
    count_twisted_cubics,
    conics_through_two_points,
    cubics_through_three_points,
)
from .grassmann import (
    CIData,
    LVector,
    integrate_g2n,
    l_vector,
    l_vector_from_generating_function,
    l_vector_from_integrals,
    line_count,
    special_schubert,
    sym_power_top_chern,
)
from .kernels import BACKEND
from .qring import (
    QRing,
    RingElement,
    build_ring,
    classical_from_quantum_power,
    primitive_pairing_scale,
    qmul,
    reduce_power,
    triple_product,
    verify_ring,
)

__version__ = "0.1.0"
