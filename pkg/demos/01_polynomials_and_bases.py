"""Polynomial rings, monomial orders and Groebner bases.

Run with ``python demos/01_polynomials_and_bases.py``.
"""

from idealkit import QQ, ZZ, Eliminate, Lex, Ring, groebner, normal_form, select_in_subring

# A ring is a coefficient domain, variable names and a monomial order
# (graded reverse lexicographic unless told otherwise).
R = Ring(QQ, ["x", "y", "z"])
x, y, z = R.gens

f = (x + y) * (x - y) + z**3 / 2
print("f =", f)                    # terms print in decreasing order
print("df/dx =", f.diff(x))
print("f(x=1) =", f.substitute({"x": 1}))
print("parsed:", R.parse("x^2 - 3/2*y^2 + 1/4"))

# The same monomials sorted three ways.
for order in (R.order, Lex, Eliminate(1)):
    S = R.with_order(order)
    g = S.parse("x*y^2 + x^2 + y^3*z + z")
    print(f"{str(order):12s}", g)

# Reduced Groebner basis over QQ, and reduction modulo it.
twisted = [x**2 - y, x * y - z, y**2 - x * z]
G = groebner(twisted)
print("basis:", [str(p) for p in G])
print("x^3*y mod G =", normal_form(x**3 * y, G))
print("x^3 - z in ideal?", G.contains(x**3 - z))

# Over ZZ the basis is strong: leading coefficients matter too.
Z = Ring(ZZ, ["x", "y"])
a, b = Z.gens
H = groebner([4 * a * b - 2 * b, 6 * a**2])
print("strong basis over ZZ:", [str(p) for p in H])
print("5x mod 2x =", normal_form(5 * a, [2 * a]))  # least nonnegative remainder

# Elimination: with t in its own block, the basis elements free of t
# generate the elimination ideal.
E = Ring(QQ, ["t", "u", "v", "x", "y"], Eliminate(1))
t, u, v, ex, ey = E.gens
B = groebner([u - t * ex, v - t * ey])
print("eliminate t:", [str(p) for p in select_in_subring(1, B)])
