"""Normal forms and Buchberger completion over QQ (reduced bases) and ZZ
(strong bases).

Internally a polynomial is its list of ``(key, packed monomial, coefficient)``
triples in decreasing order (``Polynomial.sorted_items``).  Reduction keeps the
working polynomial in a dict keyed by order key plus a max-heap of pending
keys, so each step costs one pass over the reducer's tail.
"""

import heapq
import logging
from math import gcd

from .exactnum import ext_gcd
from .polyring import FIELD_MASK, Polynomial, RingMismatch

log = logging.getLogger(__name__)

FIELD_REDUCED = "FieldReduced"
INTEGER_STRONG = "IntegerStrong"


class GroebnerStats:
    """Counters filled in during a completion run."""

    def __init__(self):
        self.pairs = 0
        self.zero_reductions = 0
        self.skipped = 0
        self.basis_size = 0

    def __repr__(self):
        return (f"GroebnerStats(pairs={self.pairs}, zero={self.zero_reductions}, "
                f"skipped={self.skipped}, basis={self.basis_size})")


class _Element:
    """A basis element prepared for use as a reducer."""

    __slots__ = ("poly", "lm", "lk", "lc", "tail", "sugar")

    def __init__(self, poly, sugar=None):
        items = poly.sorted_items()
        self.poly = poly
        self.lk, self.lm, self.lc = items[0]
        self.tail = items[1:]
        self.sugar = poly.total_degree() if sugar is None else sugar

    def as_reducer(self):
        return (self.lm, self.lk, self.lc, self.tail, self.sugar)


def _reduce(ring, coef, mono, reducers, field, sugar=0):
    """Fully reduce the polynomial ``{key: coeff}`` (monomials in ``mono``).

    Field case: reducers are monic and a term is reducible when a leading
    monomial divides it.  Integer case: a term ``c*m`` is replaced by its
    least nonnegative remainder modulo the reducer's (positive) leading
    coefficient.  Returns ``({packed monomial: coeff}, sugar)``.
    """
    g = ring._guard
    heap = [-k for k in coef]
    heapq.heapify(heap)
    pop, push = heapq.heappop, heapq.heappush
    out = {}
    while heap:
        k = -pop(heap)
        c = coef.pop(k, None)
        if c is None:
            continue
        m = mono[k]
        mg = m | g
        for lm, lk, lc, tail, rs in reducers:
            if (mg - lm) & g != g:
                continue
            if field:
                q = c
            else:
                q = c // lc
                if not q:
                    continue
            mk = k - lk
            mm = m - lm
            d = mm % FIELD_MASK + rs
            if d > sugar:
                sugar = d
            for tk, tm, tc in tail:
                nk = tk + mk
                v = coef.get(nk)
                if v is None:
                    coef[nk] = -q * tc
                    mono[nk] = tm + mm
                    push(heap, -nk)
                else:
                    v -= q * tc
                    if v:
                        coef[nk] = v
                    else:
                        del coef[nk]
            if field:
                c = 0
                break
            c -= q * lc
            if not c:
                break
        if c:
            out[m] = c
    return out, sugar


def _to_work(poly):
    coef, mono = {}, {}
    for k, m, c in poly.sorted_items():
        coef[k] = c
        mono[k] = m
    return coef, mono


def _make_reducers(ring, polys):
    field = ring.domain.is_field
    reducers = []
    for p in polys:
        if p.ring != ring:
            raise RingMismatch(f"{p} is not in {ring}")
        if not p:
            continue
        if field:
            p = p.monic()
        elif p.lead_coefficient() < 0:
            p = -p
        reducers.append(_Element(p).as_reducer())
    return reducers


def normal_form(f, G):
    """Remainder of ``f`` on division by ``G`` (a basis or a list of polynomials)."""
    if isinstance(G, GroebnerBasis):
        ring, reducers = G.ring, G.reducers()
    else:
        G = list(G)
        ring = f.ring
        reducers = _make_reducers(ring, G)
    if f.ring != ring:
        raise RingMismatch(f"{f.ring} vs {ring}")
    coef, mono = _to_work(f)
    out, _ = _reduce(ring, coef, mono, reducers, ring.domain.is_field)
    return Polynomial(ring, out)


def s_polynomial(f, g):
    """S-polynomial; over ZZ the leading terms are matched through lcm of coefficients."""
    ring = f.ring
    (_, mf, cf), (_, mg, cg) = f.sorted_items()[0], g.sorted_items()[0]
    L = ring.mlcm(mf, mg)
    if ring.domain.is_field:
        a, b = 1 / cf, 1 / cg
    else:
        lc = cf * cg // gcd(cf, cg)
        a, b = lc // cf, lc // cg
    return f.mul_term(L - mf, a) - g.mul_term(L - mg, b)


def g_polynomial(f, g):
    """Bezout combination of ``f`` and ``g`` whose leading coefficient is gcd(lc f, lc g)."""
    ring = f.ring
    (_, mf, cf), (_, mg, cg) = f.sorted_items()[0], g.sorted_items()[0]
    L = ring.mlcm(mf, mg)
    _, u, v = ext_gcd(cf, cg)
    return f.mul_term(L - mf, u) + g.mul_term(L - mg, v)


class GroebnerBasis:
    """A completed basis: reduced over QQ, strong over ZZ."""

    def __init__(self, ring, elements, kind, stats=None):
        self.ring = ring
        self.elements = tuple(elements)
        self.kind = kind
        self.stats = stats
        self._reducers = None

    def reducers(self):
        if self._reducers is None:
            self._reducers = [_Element(p).as_reducer() for p in self.elements]
        return self._reducers

    def reduce(self, f):
        return normal_form(f, self)

    def contains(self, f):
        return not self.reduce(f)

    __contains__ = contains

    def is_unit(self):
        return any(p.is_constant() and (self.ring.domain.is_field or abs(p.constant_value()) == 1)
                   for p in self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def __repr__(self):
        body = ", ".join(str(p) for p in self.elements)
        return f"GroebnerBasis[{self.kind}]({body})"


def groebner(gens, ring=None, **kwargs):
    """Dispatch on the coefficient domain of the ring."""
    gens = list(gens)
    if ring is None:
        if not gens:
            raise ValueError("need a ring for an empty generator list")
        ring = gens[0].ring
    for p in gens:
        if p.ring != ring:
            raise RingMismatch(f"{p} is not in {ring}")
    if ring.domain.is_field:
        return buchberger_field(gens, ring, **kwargs)
    return buchberger_integer(gens, ring, **kwargs)


def buchberger_field(gens, ring=None, criteria=True, stats=None):
    """Reduced Groebner basis over QQ.

    Pairs are taken by smallest sugar degree, then smallest lcm, then pair
    indices.  With ``criteria`` on, the Gebauer-Moller update discards pairs
    by the chain and coprime-leading-monomial criteria.
    """
    gens = [p for p in gens if p]
    if ring is None:
        ring = gens[0].ring
    if not ring.domain.is_field:
        raise TypeError("buchberger_field needs rational coefficients")
    stats = stats or GroebnerStats()
    mdiv, mlcm, mcop, key = ring.mdivides, ring.mlcm, ring.mcoprime, ring.key
    elems = []
    G = []
    pairs = {}
    heap = []
    reducers = []

    def rebuild_reducers():
        reducers[:] = [elems[i].as_reducer() for i in G]

    def add_pair(i, j):
        a, b = elems[i], elems[j]
        L = mlcm(a.lm, b.lm)
        s = max(a.sugar + (L - a.lm) % FIELD_MASK, b.sugar + (L - b.lm) % FIELD_MASK)
        lk = key(L)
        pairs[(i, j)] = L
        heapq.heappush(heap, (s, lk, i, j))

    def update(ih):
        mh = elems[ih].lm
        if not criteria:
            for ig in range(ih):
                add_pair(ig, ih)
            G.append(ih)
            return
        lcm_h = {ig: mlcm(mh, elems[ig].lm) for ig in G}
        C = list(G)
        D = []
        while C:
            ig = C.pop()
            L = lcm_h[ig]
            if mcop(mh, elems[ig].lm) or (
                    not any(mdiv(lcm_h[x], L) for x in C)
                    and not any(mdiv(lcm_h[x], L) for x in D)):
                D.append(ig)
        for (i1, i2), L12 in list(pairs.items()):
            if (mdiv(mh, L12) and mlcm(elems[i1].lm, mh) != L12
                    and mlcm(elems[i2].lm, mh) != L12):
                del pairs[(i1, i2)]
                stats.skipped += 1
        for ig in sorted(D):
            if mcop(mh, elems[ig].lm):
                stats.skipped += 1
            else:
                add_pair(ig, ih)
        G[:] = [ig for ig in G if not mdiv(mh, elems[ig].lm)] + [ih]

    def insert(poly, sugar):
        e = _Element(poly.monic(), sugar)
        elems.append(e)
        update(len(elems) - 1)
        rebuild_reducers()

    field = True
    for p in sorted(gens, key=lambda p: p.sorted_items()[0][0]):
        coef, mono = _to_work(p)
        out, sug = _reduce(ring, coef, mono, reducers, field, p.total_degree())
        if out:
            insert(Polynomial(ring, out), sug)

    while heap:
        s, lk, i, j = heapq.heappop(heap)
        L = pairs.pop((i, j), None)
        if L is None:
            continue
        stats.pairs += 1
        a, b = elems[i], elems[j]
        ua, ub = L - a.lm, L - b.lm
        ka, kb = key(L) - a.lk, key(L) - b.lk
        coef, mono = {}, {}
        for tk, tm, tc in a.tail:
            nk = tk + ka
            coef[nk] = tc
            mono[nk] = tm + ua
        for tk, tm, tc in b.tail:
            nk = tk + kb
            v = coef.get(nk)
            if v is None:
                coef[nk] = -tc
                mono[nk] = tm + ub
            else:
                v -= tc
                if v:
                    coef[nk] = v
                else:
                    del coef[nk]
        out, sug = _reduce(ring, coef, mono, reducers, field, s)
        if not out:
            stats.zero_reductions += 1
            continue
        insert(Polynomial(ring, out), sug)
        log.debug("pair (%d,%d) sugar %d -> new element, basis %d, %d pairs left",
                  i, j, s, len(G), len(pairs))

    basis = _interreduce(ring, [elems[i].poly for i in G], field=True)
    stats.basis_size = len(basis)
    log.debug("QQ basis done: %r", stats)
    return GroebnerBasis(ring, basis, FIELD_REDUCED, stats)


def _minimalize(ring, polys, field):
    """Drop elements whose leading term is divisible by another's."""
    mdiv = ring.mdivides
    keep = []
    for i, p in enumerate(polys):
        _, m, c = p.sorted_items()[0]
        redundant = False
        for j, q in enumerate(polys):
            if i == j:
                continue
            _, mq, cq = q.sorted_items()[0]
            if not mdiv(mq, m):
                continue
            if not field and c % cq:
                continue
            if mq == m and (field or cq == c):
                # equal leading terms: keep the first occurrence
                if j < i:
                    redundant = True
                    break
                continue
            redundant = True
            break
        if not redundant:
            keep.append(p)
    return keep


def _interreduce(ring, polys, field):
    polys = _minimalize(ring, polys, field)
    out = []
    for i, p in enumerate(polys):
        others = _make_reducers(ring, polys[:i] + polys[i + 1:])
        items = p.sorted_items()
        lk, lm, lc = items[0]
        coef = {k: c for k, _, c in items[1:]}
        mono = {k: m for k, m, _ in items[1:]}
        red, _ = _reduce(ring, coef, mono, others, field)
        red[lm] = lc
        q = Polynomial(ring, red)
        out.append(q.monic())
    out.sort(key=lambda p: p.sorted_items()[0][0])
    return out


def buchberger_integer(gens, ring=None, stats=None):
    """Strong Groebner basis over ZZ.

    Every pair contributes its S-polynomial (leading terms matched through
    the lcm of coefficients) and, when neither leading coefficient divides
    the other, its G-polynomial.  The S-polynomial is skipped only when both
    the leading monomials and the leading coefficients are coprime.

    A new element is paired with the current basis only.  Elements whose
    leading term it strongly divides leave the basis; their pair with the
    new element is still queued, and its S-polynomial is what re-reduces them.
    """
    gens = [p for p in gens if p]
    if ring is None:
        ring = gens[0].ring
    if ring.domain.is_field:
        raise TypeError("buchberger_integer needs integer coefficients")
    stats = stats or GroebnerStats()
    mdiv, mlcm, mcop, key = ring.mdivides, ring.mlcm, ring.mcoprime, ring.key
    elems = []
    active = []
    reducers = []
    heap = []

    def rebuild():
        reducers[:] = [elems[i].as_reducer() for i in active]

    def insert(poly):
        if poly.lead_coefficient() < 0:
            poly = -poly
        e = _Element(poly)
        ih = len(elems)
        elems.append(e)
        for ig in active:
            L = mlcm(elems[ig].lm, e.lm)
            heapq.heappush(heap, (ring.mdeg(L), key(L), ig, ih))
        # an element whose leading term is strongly divisible by the new one
        # is no longer needed for reduction
        active[:] = [ig for ig in active
                     if not (mdiv(e.lm, elems[ig].lm) and elems[ig].lc % e.lc == 0)] + [ih]
        rebuild()

    def reduce_and_insert(poly):
        coef, mono = _to_work(poly)
        out, _ = _reduce(ring, coef, mono, reducers, False)
        if out:
            insert(Polynomial(ring, out))
            return True
        stats.zero_reductions += 1
        return False

    for p in sorted(gens, key=lambda p: p.sorted_items()[0][0]):
        reduce_and_insert(p)

    while heap:
        _, _, i, j = heapq.heappop(heap)
        stats.pairs += 1
        a, b = elems[i], elems[j]
        if not (mcop(a.lm, b.lm) and gcd(a.lc, b.lc) == 1):
            reduce_and_insert(s_polynomial(a.poly, b.poly))
        else:
            stats.skipped += 1
        if a.lc % b.lc and b.lc % a.lc:
            reduce_and_insert(g_polynomial(a.poly, b.poly))

    basis = _interreduce(ring, [elems[i].poly for i in active], field=False)
    stats.basis_size = len(basis)
    log.debug("ZZ basis done: %r", stats)
    return GroebnerBasis(ring, basis, INTEGER_STRONG, stats)


def block_size(ring, k=1):
    """Number of leading variables making up the first ``k`` elimination blocks."""
    order = ring.order
    if k == 0:
        return 0
    if order.kind == "Eliminate":
        if k != 1:
            raise ValueError("an Eliminate order has a single elimination block")
        return order.block
    if order.kind == "Lex":
        if not 0 < k < ring.ngens:
            raise ValueError(f"cannot eliminate {k} variables of {ring}")
        return k
    raise ValueError(f"{order} is not an elimination order")


def select_in_subring(k, G):
    """Basis elements free of the variables in the first ``k`` elimination blocks."""
    ring = G.ring if isinstance(G, GroebnerBasis) else G[0].ring
    nb = block_size(ring, k)
    mask = 0
    for i in range(nb):
        mask |= FIELD_MASK << ring._shifts[i]
    return [p for p in G if not any(m & mask for m in p._terms)]


def is_member(f, G):
    return not normal_form(f, G)
