"""Degrees, dimensions, flat limits and blow-ups.

Run with ``python demos/03_geometry.py``.
"""

from idealkit import (
    QQ, Ideal, PolyMatrix, Ring, blowup_ideal, codim, degree, dim, flat_limit,
    intersect, minors, module_degree, quotient, quotient_hilbert_series, saturate, trim,
)


def ideal(ring, *texts):
    return Ideal(ring, [ring.parse(s) for s in texts])


# A rational quartic curve in P^3, cut out by 2x2 minors, meets a plane in
# 5 points although the two degrees multiply to 4: the curve is not
# arithmetically Cohen-Macaulay.
S = Ring(QQ, list("abcde"))
M = PolyMatrix.from_rows(S, [[S.parse(e) for e in row]
                             for row in (["a", "b^2", "b*d", "c"], ["b", "a*c", "c^2", "d"])])
cone = trim(minors(2, M))
plane = ideal(S, "a", "d")
print("cone:", cone)
print("codims add up:", codim(cone) + codim(plane) == codim(cone + plane))
print("deg cone * deg plane =", degree(cone) * degree(plane))
print("deg (cone + plane)   =", degree(cone + plane))

hs = quotient_hilbert_series(cone)
print("Hilbert function of the cone:", [hs.hilbert_function(k) for k in range(8)])

# Local multiplicity at the origin: strip the components away from it.
R = Ring(QQ, ["x", "y", "z"])
I = ideal(R, "x^5+y^3+z^3", "x^3+y^5+z^3", "x^3+y^3+z^5")
print("multiplicity at 0:", degree(quotient(I, saturate(I))), " dim:", dim(I))

# Two skew lines moving together: the limit picks up an embedded point.
F = Ring(QQ, ["t", "x", "y", "z", "w"])
X = intersect(ideal(F, "x", "y"), ideal(F, "x-t*z", "y-t^2*w"))
limit = flat_limit(X, 0)
print("flat limit at t=0:", limit)
P = limit.ring
print("length of the embedded point:", module_degree(ideal(P, "x^2", "y"), ideal(P, "x", "y^2", "z")))

# Rees algebra relations; one name per generator is required.
T = Ring(QQ, ["x", "y"])
print("blow-up of (x^3, xy, y^2):", blowup_ideal(ideal(T, "x^3", "x*y", "y^2"), ["A", "B", "C"]))
