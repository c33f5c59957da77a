"""Polynomial rings, monomial orders and sparse multivariate polynomials.

Monomials are packed into a single Python ``int``: variable ``i`` of an
``n``-variable ring occupies the bit field starting at ``FIELD_BITS*(n-1-i)``.
The top bit of every field is a guard bit, which lets monomial division be
tested with one subtraction.  Multiplying monomials is adding their packed
forms.

Every supported order is realised by a *linear* integer key on exponent
vectors, so ``key(a*b) == key(a) + key(b)`` and comparing monomials is
comparing ints.  Terms are kept in a dict ``{packed monomial: coefficient}``;
the order-sorted term list is computed once per (immutable) polynomial.
"""

import heapq
import re
from dataclasses import dataclass
from math import gcd

from .exactnum import QQ, ZZ, BigRational, Domain, format_scalar

FIELD_BITS = 16
FIELD_MASK = (1 << FIELD_BITS) - 1
GUARD = 1 << (FIELD_BITS - 1)
MAX_EXPONENT = GUARD - 1
KEY_BITS = 24


@dataclass(frozen=True)
class MonomialOrder:
    """``GRevLex``, ``Lex``, or ``Eliminate`` with a block of leading variables."""

    kind: str
    block: int = 0

    def __post_init__(self):
        if self.kind not in ("GRevLex", "Lex", "Eliminate"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "Eliminate" and self.block < 1:
            raise ValueError("Eliminate needs a block size >= 1")

    def __str__(self):
        if self.kind == "Eliminate":
            return f"Eliminate {self.block}"
        return self.kind

    @property
    def is_graded(self):
        # degree-compatible: total degree is compared first
        return self.kind == "GRevLex"


GRevLex = MonomialOrder("GRevLex")
Lex = MonomialOrder("Lex")


def Eliminate(k):
    return MonomialOrder("Eliminate", k)


class RingMismatch(TypeError):
    pass


class NotDivisibleError(ArithmeticError):
    pass


class Ring:
    """A polynomial ring ``domain[names]`` with a fixed monomial order.

    Rings compare by value: same domain, variable names and order.
    """

    def __init__(self, domain, names, order=GRevLex):
        if not isinstance(domain, Domain):
            raise TypeError("domain must be ZZ or QQ")
        names = tuple(names)
        if not names:
            raise ValueError("a ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"variable names are not distinct: {names}")
        n = len(names)
        if order.kind == "Eliminate" and not order.block < n:
            raise ValueError(f"Eliminate {order.block} needs more than {order.block} variables")
        self.domain = domain
        self.names = names
        self.order = order
        self.ngens = n
        self._index = {name: i for i, name in enumerate(names)}
        self._shifts = tuple(FIELD_BITS * (n - 1 - i) for i in range(n))
        self._guard = sum(GUARD << s for s in self._shifts)
        self._nonzero_add = sum((GUARD - 1) << s for s in self._shifts)
        self._weights = _order_weights(order, n)
        self._key_cache = {}
        self._gens = None
        self._hash = hash((domain.name, names, order))

    # identity -----------------------------------------------------------

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Ring) or type(other) is not type(self):
            return NotImplemented
        return (self.domain is other.domain and self.names == other.names
                and self.order == other.order)

    def __hash__(self):
        return self._hash

    def __str__(self):
        inner = ", ".join(self.names)
        if self.order != GRevLex:
            inner += f", {self.order}"
        return f"{self.domain.name}[{inner}]"

    __repr__ = __str__

    def __reduce__(self):
        return (Ring, (self.domain, self.names, self.order))

    def with_order(self, order):
        return Ring(self.domain, self.names, order)

    # packed monomials -----------------------------------------------------

    def encode(self, exps):
        if len(exps) != self.ngens:
            raise ValueError(f"expected {self.ngens} exponents, got {len(exps)}")
        m = 0
        for e, s in zip(exps, self._shifts):
            if e < 0 or e > MAX_EXPONENT:
                raise OverflowError(f"exponent {e} out of range")
            m |= e << s
        return m

    def decode(self, m):
        return tuple((m >> s) & FIELD_MASK for s in self._shifts)

    def key(self, m):
        k = self._key_cache.get(m)
        if k is None:
            k = 0
            for w, s in zip(self._weights, self._shifts):
                k += w * ((m >> s) & FIELD_MASK)
            self._key_cache[m] = k
        return k

    def mdeg(self, m):
        # digit sum in base 2^FIELD_BITS; exact while the degree < 2^FIELD_BITS - 1
        return m % FIELD_MASK

    def mdivides(self, a, b):
        g = self._guard
        return ((b | g) - a) & g == g

    def mlcm(self, a, b):
        g = self._guard
        ge = (((a | g) - b) & g) >> (FIELD_BITS - 1)
        mask = (ge << FIELD_BITS) - ge
        return (a & mask) | (b & ~mask)

    def mcoprime(self, a, b):
        add = self._nonzero_add
        return ((a + add) & (b + add) & self._guard) == 0

    def compare(self, a, b):
        """Compare two exponent vectors: -1, 0 or 1."""
        ka, kb = self.key(self.encode(a)), self.key(self.encode(b))
        return (ka > kb) - (ka < kb)

    # elements -------------------------------------------------------------

    @property
    def gens(self):
        if self._gens is None:
            one = self.domain.convert(1)
            self._gens = tuple(Polynomial(self, {1 << s: one}) for s in self._shifts)
        return self._gens

    def gen(self, i):
        return self.gens[self.var_index(i)]

    def __getitem__(self, name):
        return self.gen(name)

    def var_index(self, v):
        if isinstance(v, int) and not isinstance(v, bool):
            if not 0 <= v < self.ngens:
                raise IndexError(f"variable index {v} out of range for {self}")
            return v
        if isinstance(v, Polynomial):
            if v.ring != self:
                raise RingMismatch(f"{v} is not a variable of {self}")
            idx = v.variable_index()
            if idx is None:
                raise ValueError(f"{v} is not a variable")
            return idx
        try:
            return self._index[v]
        except KeyError:
            raise KeyError(f"{v!r} is not a variable of {self}") from None

    def has_var(self, name):
        return name in self._index

    @property
    def zero(self):
        return Polynomial(self, {})

    @property
    def one(self):
        return self.constant(1)

    def constant(self, c):
        c = self.domain.convert(c)
        return Polynomial(self, {0: c} if c else {})

    def monomial(self, exps, coeff=1):
        c = self.domain.convert(coeff)
        return Polynomial(self, {self.encode(exps): c} if c else {})

    def from_terms(self, terms):
        """Build a polynomial from ``(exponent tuple, coefficient)`` pairs."""
        d = {}
        conv = self.domain.convert
        for exps, c in terms:
            m = self.encode(exps)
            v = d.get(m, 0) + conv(c)
            if v:
                d[m] = v
            else:
                d.pop(m, None)
        return Polynomial(self, d)

    def __call__(self, x):
        if isinstance(x, Polynomial):
            if x.ring == self:
                return x
            raise RingMismatch(f"{x} lives in {x.ring}, not {self}")
        if isinstance(x, str):
            return self.parse(x)
        return self.constant(x)

    def parse(self, text):
        return _PolyParser(self, text).parse()


def _order_weights(order, n):
    if order.kind == "Lex":
        return tuple(1 << (FIELD_BITS * (n - 1 - i)) for i in range(n))
    # graded reverse lex: lexicographic on partial sums (e_0+..+e_{n-1}, ..., e_0)
    w = [sum(1 << (KEY_BITS * k) for k in range(i, n)) for i in range(n)]
    if order.kind == "Eliminate":
        for i in range(order.block):
            w[i] += 1 << (KEY_BITS * n)
    return tuple(w)


class Polynomial:
    """An immutable polynomial over a :class:`Ring`.

    Construct through the ring (``R.parse``, ``R.gens``, ``R.from_terms``)
    or by arithmetic.  The constructor takes ownership of a canonical
    ``{packed monomial: nonzero coefficient}`` dict.
    """

    __slots__ = ("ring", "_terms", "_sorted", "_hash")

    def __init__(self, ring, terms):
        self.ring = ring
        self._terms = terms
        self._sorted = None
        self._hash = None

    # views ------------------------------------------------------------------

    def sorted_items(self):
        """``[(key, packed monomial, coefficient)]`` in decreasing order."""
        if self._sorted is None:
            key = self.ring.key
            items = [(key(m), m, c) for m, c in self._terms.items()]
            items.sort(reverse=True, key=lambda t: t[0])
            self._sorted = items
        return self._sorted

    def terms(self):
        dec = self.ring.decode
        return [(dec(m), c) for _, m, c in self.sorted_items()]

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return not self._terms or (len(self._terms) == 1 and 0 in self._terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get(0, self.ring.domain.convert(0))

    def lead_monomial(self):
        return self.ring.decode(self.sorted_items()[0][1])

    def lead_coefficient(self):
        return self.sorted_items()[0][2]

    def lead_term(self):
        _, m, c = self.sorted_items()[0]
        return Polynomial(self.ring, {m: c})

    def total_degree(self):
        if not self._terms:
            return -1
        md = self.ring.mdeg
        return max(md(m) for m in self._terms)

    def degree_in(self, var):
        i = self.ring.var_index(var)
        s = self.ring._shifts[i]
        return max(((m >> s) & FIELD_MASK for m in self._terms), default=-1)

    def is_homogeneous(self):
        md = self.ring.mdeg
        degs = {md(m) for m in self._terms}
        return len(degs) <= 1

    def support(self):
        """Indices of variables that occur in some term."""
        used = 0
        for m in self._terms:
            used |= m
        return [i for i, s in enumerate(self.ring._shifts) if (used >> s) & FIELD_MASK]

    def variable_index(self):
        """Index of the variable if this polynomial is a single variable, else None."""
        if len(self._terms) != 1:
            return None
        (m, c), = self._terms.items()
        if c != 1:
            return None
        exps = self.ring.decode(m)
        if sum(exps) != 1:
            return None
        return exps.index(1)

    def coefficients(self):
        return [c for _, _, c in self.sorted_items()]

    # equality ---------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, BigRational)) and not isinstance(other, bool):
            if not other:
                return not self._terms
            return self._terms == {0: other}
        return NotImplemented

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # arithmetic -------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatch(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, BigRational)) and not isinstance(other, bool):
            return self.ring.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if len(other._terms) > len(self._terms):
            a, b = other, self
        else:
            a, b = self, other
        d = dict(a._terms)
        for m, c in b._terms.items():
            v = d.get(m)
            if v is None:
                d[m] = c
            else:
                v += c
                if v:
                    d[m] = v
                else:
                    del d[m]
        return Polynomial(self.ring, d)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c):
        c = self.ring.domain.convert(c)
        if not c:
            return self.ring.zero
        return Polynomial(self.ring, {m: c * v for m, v in self._terms.items()})

    def mul_term(self, m, c):
        """Multiply by the single term ``c * monomial`` (packed ``m``)."""
        d = {}
        for mm, v in self._terms.items():
            d[mm + m] = v * c
        p = Polynomial(self.ring, d)
        p._check_overflow()
        return p

    def _check_overflow(self):
        g = self.ring._guard
        for m in self._terms:
            if m & g:
                raise OverflowError("exponent overflow")

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return self.ring.zero
        if len(b) == 1 and 0 in b:
            return self.scale(b[0])
        if len(a) == 1 and 0 in a:
            return other.scale(a[0])
        if len(a) < len(b):
            a, b = b, a
        d = {}
        get = d.get
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = ma + mb
                v = get(m)
                if v is None:
                    d[m] = ca * cb
                else:
                    d[m] = v + ca * cb
        d = {m: c for m, c in d.items() if c}
        p = Polynomial(self.ring, d)
        p._check_overflow()
        return p

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, Polynomial):
            if not other.is_constant():
                return self.exact_divide(other)
            other = other.constant_value()
        if not other:
            raise ZeroDivisionError("division by zero")
        if self.ring.domain.is_field:
            inv = 1 / self.ring.domain.convert(other)
            return self.scale(inv)
        d = {}
        for m, c in self._terms.items():
            q, r = divmod(c, other)
            if r:
                raise NotDivisibleError(f"{other} does not divide {self}")
            d[m] = q
        return Polynomial(self.ring, d)

    def exact_divide(self, g):
        """Return ``q`` with ``q*g == self``; raise :class:`NotDivisibleError` otherwise."""
        g = self._coerce(g)
        if g is None:
            raise TypeError("divisor must be a polynomial or scalar")
        if not g._terms:
            raise ZeroDivisionError("division by the zero polynomial")
        ring = self.ring
        field = ring.domain.is_field
        gk, gm, gc = g.sorted_items()[0]
        gtail = g.sorted_items()[1:]
        key = ring.key
        mono = {key(m): m for m in self._terms}
        coef = {key(m): c for m, c in self._terms.items()}
        heap = [-k for k in coef]
        heapq.heapify(heap)
        quot = {}
        while heap:
            k = -heapq.heappop(heap)
            c = coef.pop(k, None)
            if c is None:
                continue
            m = mono[k]
            if not ring.mdivides(gm, m):
                raise NotDivisibleError(f"{g} does not divide {self}")
            if field:
                q = c / gc
            else:
                q, r = divmod(c, gc)
                if r:
                    raise NotDivisibleError(f"{g} does not divide {self}")
            qm = m - gm
            qk = k - gk
            quot[qm] = q
            for tk, tm, tc in gtail:
                nk = tk + qk
                v = coef.get(nk)
                if v is None:
                    coef[nk] = -q * tc
                    mono[nk] = tm + qm
                    heapq.heappush(heap, -nk)
                else:
                    v -= q * tc
                    if v:
                        coef[nk] = v
                    else:
                        del coef[nk]
        return Polynomial(ring, quot)

    def monic(self):
        if not self._terms:
            return self
        lc = self.lead_coefficient()
        if self.ring.domain.is_field:
            return self.scale(1 / lc)
        return self if lc > 0 else -self

    def content_and_primitive(self):
        """Split an integer polynomial into positive content and primitive part."""
        if self.ring.domain is not ZZ:
            raise TypeError("content is defined for integer polynomials")
        if not self._terms:
            raise ValueError("the zero polynomial has no content")
        g = 0
        for c in self._terms.values():
            g = gcd(g, c)
        return g, Polynomial(self.ring, {m: c // g for m, c in self._terms.items()})

    # calculus and substitution -----------------------------------------------

    def diff(self, var):
        """Formal partial derivative."""
        i = self.ring.var_index(var)
        s = self.ring._shifts[i]
        one = 1 << s
        d = {}
        for m, c in self._terms.items():
            e = (m >> s) & FIELD_MASK
            if e:
                d[m - one] = c * e
        return Polynomial(self.ring, d)

    def substitute(self, assignment, target=None):
        """Homomorphic image under a partial variable assignment.

        ``assignment`` maps variables (names, indices or generator
        polynomials) to polynomials of ``target`` or scalars.  Variables not
        assigned are sent to the variable with the same name in ``target``.
        """
        target = target or self.ring
        images = [None] * self.ring.ngens
        for v, img in assignment.items():
            i = self.ring.var_index(v)
            images[i] = target(img) if not isinstance(img, Polynomial) else _check_ring(img, target)
        used = self.support()
        for i in used:
            if images[i] is None:
                name = self.ring.names[i]
                if not target.has_var(name):
                    raise KeyError(f"variable {name!r} has no image in {target}")
                images[i] = target.gen(name)
        return evaluate_images(self, images, target)

    def coefficients_in(self, subset):
        """Collect by monomials in the variables ``subset``.

        Returns ``[(monomial, coefficient)]`` with both parts as polynomials
        of this ring, monomials decreasing in the ring order.
        """
        ring = self.ring
        idx = sorted({ring.var_index(v) for v in subset})
        mask = 0
        for i in idx:
            mask |= FIELD_MASK << ring._shifts[i]
        groups = {}
        for m, c in self._terms.items():
            sm = m & mask
            groups.setdefault(sm, {})[m - sm] = c
        key = ring.key
        one = ring.domain.convert(1)
        out = []
        for sm in sorted(groups, key=key, reverse=True):
            out.append((Polynomial(ring, {sm: one}), Polynomial(ring, groups[sm])))
        return out

    # printing ----------------------------------------------------------------

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"<{self.ring}: {self}>"


def _check_ring(p, ring):
    if p.ring != ring:
        raise RingMismatch(f"{p} is not in {ring}")
    return p


def evaluate_images(f, images, target):
    """Substitute ``images[i]`` (a polynomial of ``target``) for variable ``i``."""
    ring = f.ring
    shifts = ring._shifts
    n = ring.ngens
    # fast path: every used image is a monomial with coefficient 1 or zero
    simple = True
    packed = [None] * n
    zero_vars = 0
    for i, img in enumerate(images):
        if img is None:
            continue
        if not img._terms:
            zero_vars |= FIELD_MASK << shifts[i]
            continue
        if len(img._terms) == 1:
            (m, c), = img._terms.items()
            if c == 1:
                packed[i] = m
                continue
        simple = False
    if simple:
        d = {}
        tconv = target.domain.convert
        for m, c in f._terms.items():
            if m & zero_vars:
                continue
            nm = 0
            for i, s in enumerate(shifts):
                e = (m >> s) & FIELD_MASK
                if e:
                    nm += e * packed[i]
            v = d.get(nm, 0) + tconv(c)
            if v:
                d[nm] = v
            else:
                d.pop(nm, None)
        p = Polynomial(target, d)
        p._check_overflow()
        return p
    powers = [dict() for _ in range(n)]

    def power(i, e):
        cache = powers[i]
        p = cache.get(e)
        if p is None:
            p = images[i] ** e
            cache[e] = p
        return p

    result = {}
    tconv = target.domain.convert
    for m, c in f._terms.items():
        exps = ring.decode(m)
        term = target.constant(tconv(c))
        for i, e in enumerate(exps):
            if e:
                term = term * power(i, e)
                if not term:
                    break
        for tm, tc in term._terms.items():
            v = result.get(tm, 0) + tc
            if v:
                result[tm] = v
            else:
                result.pop(tm, None)
    return Polynomial(target, result)


def format_monomial(ring, m):
    parts = []
    for name, e in zip(ring.names, ring.decode(m)):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_polynomial(f):
    items = f.sorted_items()
    if not items:
        return "0"
    out = []
    for pos, (_, m, c) in enumerate(items):
        mono = format_monomial(f.ring, m)
        neg = c < 0
        mag = -c if neg else c
        if not mono:
            body = format_scalar(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{format_scalar(mag)}*{mono}"
        if pos == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_']*)|(.))")


class _PolyParser:
    """Recursive-descent parser for the polynomial text format."""

    def __init__(self, ring, text):
        self.ring = ring
        self.text = text
        self.tokens = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            m = _TOKEN_RE.match(text, pos)
            if m.group(1) is not None:
                self.tokens.append(("num", int(m.group(1))))
            elif m.group(2) is not None:
                self.tokens.append(("name", m.group(2)))
            elif m.group(3) in "+-*/^()":
                self.tokens.append(("op", m.group(3)))
            else:
                raise ValueError(f"unexpected character {m.group(3)!r} in {self.text!r}")
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse(self):
        if not self.tokens:
            raise ValueError("empty polynomial text")
        p = self.expr()
        if self.i != len(self.tokens):
            raise ValueError(f"trailing input in {self.text!r}")
        return p

    def expr(self):
        p = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.factor()
        while True:
            kind, val = self.peek()
            if (kind, val) == ("op", "*"):
                self.take()
                p = p * self.factor()
            elif (kind, val) == ("op", "/"):
                self.take()
                q = self.factor()
                if not q.is_constant() or q.is_zero():
                    raise ValueError("division only by nonzero constants")
                c = q.constant_value()
                p = p.scale(1 / QQ.convert(c)) if self.ring.domain.is_field else p / c
            elif kind in ("num", "name") or (kind, val) == ("op", "("):
                p = p * self.factor()
            else:
                return p

    def factor(self):
        kind, val = self.peek()
        if (kind, val) == ("op", "-"):
            self.take()
            return -self.factor()
        if (kind, val) == ("op", "+"):
            self.take()
            return self.factor()
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, e = self.take()
            if kind != "num":
                raise ValueError("exponent must be a nonnegative integer")
            base = base ** e
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return self.ring.constant(val)
        if kind == "name":
            return self.ring.gen(val)
        if (kind, val) == ("op", "("):
            p = self.expr()
            if self.take() != ("op", ")"):
                raise ValueError(f"missing ')' in {self.text!r}")
            return p
        raise ValueError(f"unexpected token {val!r} in {self.text!r}")


def polynomial_ring(domain, names, order=GRevLex):
    """Convenience: ``polynomial_ring(QQ, "x y z")`` returns ``(R, gens)``."""
    if isinstance(names, str):
        names = names.replace(",", " ").split()
    R = Ring(domain, names, order)
    return R, R.gens


__all__ = [
    "FIELD_BITS", "MonomialOrder", "GRevLex", "Lex", "Eliminate", "Ring",
    "Polynomial", "RingMismatch", "NotDivisibleError", "polynomial_ring",
    "format_polynomial", "evaluate_images", "ZZ", "QQ",
]
