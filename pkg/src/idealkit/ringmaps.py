"""Quotient rings, ring homomorphisms, images and kernels."""

from .groebner import select_in_subring, groebner
from .ideals import Ideal
from .polymatrix import PolyMatrix
from .polyring import Eliminate, Polynomial, Ring, RingMismatch, evaluate_images


class QuotientRing:
    """``base / ideal``; elements are base polynomials kept in normal form."""

    def __init__(self, base, ideal):
        if ideal.ring != base:
            raise RingMismatch(f"{ideal} is not an ideal of {base}")
        self.base = base
        self.ideal = ideal

    @property
    def domain(self):
        return self.base.domain

    @property
    def names(self):
        return self.base.names

    @property
    def ngens(self):
        return self.base.ngens

    @property
    def gens(self):
        return tuple(self.reduce(g) for g in self.base.gens)

    def has_var(self, name):
        return self.base.has_var(name)

    def gen(self, v):
        return self.reduce(self.base.gen(v))

    def reduce(self, f):
        f = self.base(f)
        if self.ideal.is_zero():
            return f
        return self.ideal.gb().reduce(f)

    def __call__(self, x):
        return self.reduce(x)

    def __eq__(self, other):
        if not isinstance(other, QuotientRing):
            return NotImplemented
        return self.base == other.base and self.ideal.gens == other.ideal.gens

    def __hash__(self):
        return hash((self.base, self.ideal.gens))

    def __str__(self):
        return f"{self.base} / {self.ideal}"

    __repr__ = __str__


def base_ring(R):
    return R.base if isinstance(R, QuotientRing) else R


def coerce_by_name(f, target):
    """Move ``f`` to ``target`` by matching variable names."""
    T = base_ring(target)
    if isinstance(f, Polynomial):
        if f.ring == T:
            out = f
        else:
            if f.ring.domain is not T.domain:
                raise RingMismatch(f"cannot move {f.ring.domain} polynomials to {T.domain}")
            out = f.substitute({}, T)
    else:
        out = T(f)
    return target.reduce(out) if isinstance(target, QuotientRing) else out


class RingMap:
    """Homomorphism ``source -> target`` given by one image per source variable."""

    def __init__(self, target, source, images):
        if isinstance(source, QuotientRing):
            raise TypeError("maps out of quotient rings are not supported")
        images = list(images)
        if len(images) != source.ngens:
            raise ValueError(f"need {source.ngens} images, got {len(images)}")
        if base_ring(target).domain is not source.domain:
            raise RingMismatch("source and target must share the coefficient domain")
        self.target = target
        self.source = source
        self.images = tuple(coerce_by_name(g, target) for g in images)

    @classmethod
    def identity(cls, ring):
        return cls(ring, ring, ring.gens)

    def apply(self, f):
        if isinstance(f, Polynomial):
            if f.ring != self.source:
                raise RingMismatch(f"{f} is not in the source ring {self.source}")
            out = evaluate_images(f, self.images, base_ring(self.target))
        else:
            out = base_ring(self.target)(self.source(f).constant_value())
        if isinstance(self.target, QuotientRing):
            out = self.target.reduce(out)
        return out

    def apply_ideal(self, I):
        if I.ring != self.source:
            raise RingMismatch(f"{I} is not an ideal of {self.source}")
        return Ideal(base_ring(self.target), [self.apply(g) for g in I.gens])

    def apply_matrix(self, M):
        return M.map_entries(self.apply, base_ring(self.target))

    def __call__(self, x):
        if isinstance(x, Ideal):
            return self.apply_ideal(x)
        if isinstance(x, PolyMatrix):
            return self.apply_matrix(x)
        return self.apply(x)

    def compose(self, inner):
        """``self ∘ inner``: first ``inner``, then ``self``."""
        if base_ring(inner.target) != self.source:
            raise RingMismatch("target of the inner map is not the source of the outer map")
        return RingMap(self.target, inner.source, [self.apply(g) for g in inner.images])

    def kernel(self):
        return kernel(self)

    def __str__(self):
        imgs = ", ".join(str(g) for g in self.images)
        return f"map({self.target}, {self.source}, {{{imgs}}})"

    __repr__ = __str__


def kernel(phi):
    """Kernel by the graph construction.

    In a scratch ring with the target variables as the eliminated first block
    and the source variables after them, eliminate the target variables from
    (defining ideal of the target) + (s_i - phi(s_i)).
    """
    T = base_ring(phi.target)
    S = phi.source
    tnames = list(T.names)
    taken = set(tnames)
    snames = []
    for name in S.names:
        new, k = name, 0
        while new in taken:
            k += 1
            new = f"{name}'{k}"
        taken.add(new)
        snames.append(new)
    nt = len(tnames)
    scratch = Ring(S.domain, tnames + snames, Eliminate(nt))
    t_images = scratch.gens[:nt]
    s_gens = scratch.gens[nt:]
    gens = []
    if isinstance(phi.target, QuotientRing):
        gens += [evaluate_images(q, t_images, scratch) for q in phi.target.ideal.nonzero_gens()]
    for s, img in zip(s_gens, phi.images):
        gens.append(s - evaluate_images(img, t_images, scratch))
    G = groebner(gens, scratch)
    back = [S.zero] * nt + list(S.gens)
    return Ideal(S, [evaluate_images(p, back, S) for p in select_in_subring(1, G)])


def permutation_map(ring, names):
    """Endomorphism sending the ring's variables, in order, to ``names``."""
    return RingMap(ring, ring, [ring.gen(n) for n in names])
