"""Ideal operations: sums, intersections, quotients, saturation, elimination.

Run with ``python demos/02_ideal_arithmetic.py``.
"""

from idealkit import QQ, ZZ, Eliminate, Ideal, Ring, eliminate, intersect, quotient, saturate, trim


def ideal(ring, *texts):
    return Ideal(ring, [ring.parse(s) for s in texts])


R = Ring(QQ, ["x", "y", "z", "w"])
I, J = ideal(R, "x^2", "y"), ideal(R, "x", "y^2", "z")

print("I + J      =", trim(I + J))
print("I * J      =", trim(I * J))
print("I cap J    =", intersect(I, J))
print("(x^2,xy):x =", quotient(ideal(R, "x^2", "x*y"), R.gen("x")))
print("I == J?", I == J, "  I cap J inside I?", intersect(I, J).issubset(I))

# Saturation depends on the coefficients.  The power sums in three
# variables saturate to the unit ideal over QQ but not over ZZ, where 6
# survives: over the integers, the locus x != 0 still meets the primes 2 and 3.
for dom in (ZZ, QQ):
    S = Ring(dom, ["x", "y", "z"])
    p = ideal(S, "x+y+z", "x^2+y^2+z^2", "x^3+y^3+z^3")
    print(f"{dom}: saturate(p, x) = {saturate(p, S.gen('x'))}")

# Minimal polynomials of algebraic points: adjoin a, b with their own
# minimal polynomials and eliminate them.
T = Ring(QQ, ["a", "b", "x", "y"], Eliminate(2))
for gens in (["x-a", "y-a", "a^2-2"],
             ["x-a", "y-b", "a^2-2", "b^2-3"],
             ["a*x+b*y-1", "a^2-2", "b^2-3"]):
    print(gens, "->", eliminate(ideal(T, *gens), 2, subring=True))
