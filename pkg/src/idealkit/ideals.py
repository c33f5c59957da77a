"""Ideals and ideal arithmetic.

Intersections, quotients and saturations all go through elimination in a
scratch ring, so they work the same way over ZZ and QQ.  A scratch ring that
only *prepends* variables shares the packed monomial layout of the original
ring, so moving polynomials in and out of it is free.
"""

from .groebner import block_size, groebner, select_in_subring
from .polyring import Eliminate, Polynomial, Ring, RingMismatch, evaluate_images


class Ideal:
    """An ideal given by generators; its Groebner basis is computed lazily."""

    def __init__(self, ring, gens=()):
        self.ring = ring
        self.gens = tuple(ring(g) for g in gens)
        self._gb = None

    @classmethod
    def unit(cls, ring):
        return cls(ring, [ring.one])

    def gb(self):
        if self._gb is None:
            self._gb = groebner(self.gens, self.ring)
        return self._gb

    def basis(self):
        return list(self.gb().elements)

    @property
    def numgens(self):
        return len(self.gens)

    def nonzero_gens(self):
        return [g for g in self.gens if g]

    def is_zero(self):
        return not self.nonzero_gens()

    def is_unit(self):
        if self.is_zero():
            return False
        return self.gb().is_unit()

    def contains(self, f):
        f = self.ring(f)
        if not f:
            return True
        if self.is_zero():
            return False
        return self.gb().contains(f)

    __contains__ = contains

    def issubset(self, other):
        _same_ring(self, other)
        return all(other.contains(g) for g in self.nonzero_gens())

    def is_homogeneous(self):
        return all(g.is_homogeneous() for g in self.gens)

    def __add__(self, other):
        return ideal_sum(self, other)

    def __mul__(self, other):
        return ideal_product(self, other)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return ideal_equals(self, other)

    __hash__ = None

    def __str__(self):
        gens = self.gens
        if len(gens) == 1 and gens[0].is_constant():
            return f"ideal {gens[0]}"
        return "ideal (" + ", ".join(str(g) for g in gens) + ")"

    def __repr__(self):
        return f"<Ideal of {self.ring}: {self}>"


def _same_ring(I, J):
    if I.ring != J.ring:
        raise RingMismatch(f"ring mismatch: {I.ring} vs {J.ring}")


def ideal_sum(I, J):
    _same_ring(I, J)
    return Ideal(I.ring, I.gens + J.gens)


def ideal_product(I, J):
    _same_ring(I, J)
    return Ideal(I.ring, [f * g for f in I.nonzero_gens() for g in J.nonzero_gens()])


def fresh_name(ring, base="t"):
    name = base
    k = 0
    while ring.has_var(name):
        k += 1
        name = f"{base}{k}"
    return name


def _prepend_ring(ring, names, order):
    return Ring(ring.domain, tuple(names) + ring.names, order)


def _lift(p, scratch):
    # prepending variables leaves the packed layout unchanged
    return Polynomial(scratch, p._terms)


def _drop(p, ring):
    return Polynomial(ring, p._terms)


def intersect(I, J, *more):
    """``I ∩ J`` via ``t*I + (1-t)*J`` and elimination of ``t``."""
    _same_ring(I, J)
    if more:
        return intersect(intersect(I, J), *more)
    R = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal(R, [])
    S = _prepend_ring(R, [fresh_name(R, "t")], Eliminate(1))
    t = S.gens[0]
    gens = [t * _lift(f, S) for f in I.nonzero_gens()]
    gens += [(1 - t) * _lift(g, S) for g in J.nonzero_gens()]
    G = groebner(gens, S)
    return Ideal(R, [_drop(p, R) for p in select_in_subring(1, G)])


def quotient(I, f):
    """Ideal quotient ``I : f`` (polynomial) or ``I : J`` (ideal)."""
    R = I.ring
    if isinstance(f, Ideal):
        _same_ring(I, f)
        gens = f.nonzero_gens()
        if not gens:
            return Ideal.unit(R)
        result = None
        for g in gens:
            Q = quotient(I, g)
            result = Q if result is None else intersect(result, Q)
        return result
    f = R(f)
    if not f:
        raise ZeroDivisionError("quotient by the zero polynomial")
    if I.is_zero():
        return Ideal(R, [])
    K = intersect(I, Ideal(R, [f]))
    return Ideal(R, [g.exact_divide(f) for g in K.gens])


def saturate(I, f=None):
    """``I : f^∞`` or ``I : J^∞``; with no second argument, ``J`` is the ideal of all variables.

    Iterates the quotient until two consecutive iterates are equal.
    """
    R = I.ring
    if f is None:
        f = Ideal(R, R.gens)
    current = I
    while True:
        nxt = quotient(current, f)
        if nxt.issubset(current):
            return current
        current = nxt


def _reorder_ring(R, first, order_block):
    """Scratch ring with the variables ``first`` moved to the front."""
    first = [R.var_index(v) for v in first]
    rest = [i for i in range(R.ngens) if i not in first]
    perm = first + rest
    S = Ring(R.domain, [R.names[i] for i in perm], Eliminate(order_block))
    return S, perm


def eliminate(I, k, subring=False):
    """Generators of ``I`` intersected with the subring free of the eliminated variables.

    ``k`` is a count of leading variables or a list of variables.  The result
    lives in the ambient ring unless ``subring`` is true.
    """
    R = I.ring
    if isinstance(k, int) and not isinstance(k, bool):
        if not 0 < k < R.ngens:
            raise ValueError(f"cannot eliminate {k} variables of {R}")
        if R.order == Eliminate(k):
            selected = select_in_subring(1, I.gb())
        else:
            S = R.with_order(Eliminate(k))
            G = groebner([Polynomial(S, g._terms) for g in I.nonzero_gens()], S)
            selected = [Polynomial(R, p._terms) for p in select_in_subring(1, G)]
        kept = list(range(k, R.ngens))
    else:
        elim = [R.var_index(v) for v in k]
        if not elim or len(elim) >= R.ngens:
            raise ValueError("must eliminate at least one and not all variables")
        S, perm = _reorder_ring(R, elim, len(elim))
        to_s = [S.gen(R.names[i]) for i in range(R.ngens)]
        back = [R.gen(name) for name in S.names]
        G = groebner([evaluate_images(g, to_s, S) for g in I.nonzero_gens()], S)
        selected = [evaluate_images(p, back, R) for p in select_in_subring(1, G)]
        kept = [i for i in range(R.ngens) if i not in elim]
    if not subring:
        return Ideal(R, selected)
    T = Ring(R.domain, [R.names[i] for i in kept])
    return Ideal(T, [p.substitute({}, T) for p in selected])


def select_in_subring_ideal(I, k=1):
    """Ideal of basis elements free of the first elimination block of ``I.ring``."""
    block_size(I.ring, k)
    return Ideal(I.ring, select_in_subring(k, I.gb()))


def trim(I):
    """Drop redundant generators.

    Generators are scanned by decreasing degree (ties by decreasing leading
    monomial) and a generator is removed when it lies in the ideal of the
    remaining ones.
    """
    R = I.ring
    gens = []
    seen = set()
    for g in I.nonzero_gens():
        n = g.monic()
        if n not in seen:
            seen.add(n)
            gens.append(g)
    if not gens:
        return Ideal(R, [])
    if Ideal(R, gens).is_unit():
        return Ideal.unit(R)
    order = sorted(range(len(gens)),
                   key=lambda i: (gens[i].total_degree(), gens[i].sorted_items()[0][0]),
                   reverse=True)
    alive = set(range(len(gens)))
    for i in order:
        others = [gens[j] for j in sorted(alive) if j != i]
        if others and Ideal(R, others).contains(gens[i]):
            alive.discard(i)
    return Ideal(R, [_positive(gens[i]) for i in sorted(alive)])


def _positive(f):
    return -f if f.lead_coefficient() < 0 else f


def ideal_equals(I, J):
    _same_ring(I, J)
    return I.issubset(J) and J.issubset(I)
