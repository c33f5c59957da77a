"""Exact computations with ideals in polynomial rings over ZZ and QQ.

Groebner bases (fields and the integers), ideal arithmetic, elimination,
kernels of ring maps, polynomial matrices and Hilbert-series invariants,
plus a small scripting language (:mod:`idealkit.script`).

>>> from idealkit import QQ, Ring, Ideal, saturate
>>> R = Ring(QQ, ["x", "y", "z"])
>>> x, y, z = R.gens
>>> print(saturate(Ideal(R, [x + y + z, x**2 + y**2 + z**2, x**3 + y**3 + z**3]), x))
ideal 1
"""

from .exactnum import QQ, ZZ, BigInteger, BigRational, ext_gcd
from .polyring import (
    Eliminate, GRevLex, Lex, MonomialOrder, NotDivisibleError, Polynomial, Ring,
    RingMismatch, polynomial_ring,
)
from .groebner import GroebnerBasis, groebner, normal_form, select_in_subring
from .ideals import (
    Ideal, eliminate, ideal_equals, intersect, quotient, saturate, trim,
)
from .polymatrix import (
    DimensionError, PolyMatrix, classical_adjoint, det, exterior_power,
    generic_matrix, jacobian, minors,
)
from .ringmaps import QuotientRing, RingMap, kernel
from .geometry import (
    HilbertSeries, NotEnoughVariables, blowup_ideal, codim, degree, dim,
    flat_limit, hilbert_series, module_degree, quotient_hilbert_series,
)

__version__ = "0.1.0"

__all__ = [
    "QQ", "ZZ", "BigInteger", "BigRational", "ext_gcd",
    "Ring", "Polynomial", "MonomialOrder", "GRevLex", "Lex", "Eliminate",
    "RingMismatch", "NotDivisibleError", "polynomial_ring",
    "GroebnerBasis", "groebner", "normal_form", "select_in_subring",
    "Ideal", "intersect", "quotient", "saturate", "eliminate", "trim", "ideal_equals",
    "PolyMatrix", "det", "classical_adjoint", "minors", "exterior_power",
    "generic_matrix", "jacobian", "DimensionError",
    "QuotientRing", "RingMap", "kernel",
    "HilbertSeries", "hilbert_series", "quotient_hilbert_series", "degree", "dim",
    "codim", "module_degree", "blowup_ideal", "flat_limit", "NotEnoughVariables",
]
