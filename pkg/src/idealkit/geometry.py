"""Hilbert series, dimension and degree, blow-up ideals and flat limits.

Hilbert data is computed from the leading-term ideal of a Groebner basis
taken in a degree-compatible order, and only over QQ.
"""

from dataclasses import dataclass
from math import comb

from .exactnum import QQ
from .ideals import Ideal, eliminate, fresh_name, saturate, trim
from .polyring import Eliminate, GRevLex, Polynomial, Ring, evaluate_images


@dataclass(frozen=True)
class HilbertSeries:
    """``numerator(T) / (1 - T)^nvars`` with integer numerator coefficients."""

    numerator: tuple
    nvars: int

    def reduced(self):
        """Cancel factors of ``(1 - T)``; returns ``(numerator, pole order)``."""
        num = list(self.numerator)
        d = self.nvars
        while num and d > 0 and sum(num) == 0:
            num = _divide_one_minus_t(num)
            d -= 1
        return tuple(num), d

    def dimension(self):
        num, d = self.reduced()
        return d if num else -1

    def degree(self):
        num, _ = self.reduced()
        return sum(num)

    def hilbert_function(self, k):
        n = self.nvars
        total = 0
        for i, a in enumerate(self.numerator):
            if a and i <= k:
                total += a * (comb(k - i + n - 1, n - 1) if n else (1 if k == i else 0))
        return total

    def __sub__(self, other):
        if self.nvars != other.nvars:
            raise ValueError("series over different numbers of variables")
        return HilbertSeries(_trim(_padd(self.numerator, [-a for a in other.numerator])), self.nvars)


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def _padd(a, b):
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def _shift(a, k):
    return tuple([0] * k + list(a)) if a else ()


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _divide_one_minus_t(num):
    # num(1) == 0, so num = (1 - t) * q with q_k = sum_{i<=k} num_i
    q, acc = [], 0
    for a in num[:-1]:
        acc += a
        q.append(acc)
    return list(_trim(q))


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def minimalize_monomials(gens):
    gens = sorted(set(gens), key=lambda e: (sum(e), e))
    out = []
    for g in gens:
        if not any(_divides(h, g) for h in out):
            out.append(g)
    return out


def hilbert_numerator(gens, nvars, pivot="frequent"):
    """Numerator of the Hilbert series of ``k[x]/M`` for the monomial ideal ``M``.

    ``gens`` are exponent tuples.  Pivot recursion on a single variable:
    ``N(M) = N(M + (x)) + T * N(M : x)``.
    """
    memo = {}

    def rec(M):
        key = tuple(M)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if not M:
            res = (1,)
        elif any(sum(g) == 0 for g in M):
            res = ()
        else:
            counts = [0] * nvars
            for g in M:
                for i, e in enumerate(g):
                    if e:
                        counts[i] += 1
            if max(counts) <= 1:
                res = (1,)
                for g in M:
                    res = _pmul(res, (1,) + (0,) * (sum(g) - 1) + (-1,))
            else:
                if pivot == "frequent":
                    j = counts.index(max(counts))
                else:
                    j = max(i for i, c in enumerate(counts) if c >= 2)
                xj = tuple(1 if i == j else 0 for i in range(nvars))
                plus = minimalize_monomials([g for g in M if not g[j]] + [xj])
                colon = minimalize_monomials(
                    [tuple(e - 1 if i == j and e else e for i, e in enumerate(g)) for g in M])
                res = _padd(rec(plus), _shift(rec(colon), 1))
        memo[key] = res
        return res

    return rec(minimalize_monomials(gens))


def hilbert_series(monomials, nvars, pivot="frequent"):
    if isinstance(monomials, Ideal):
        nvars = monomials.ring.ngens
        monomials = _monomial_exponents(monomials)
    return HilbertSeries(hilbert_numerator(monomials, nvars, pivot), nvars)


def _monomial_exponents(I):
    out = []
    for g in I.nonzero_gens():
        if len(g) != 1:
            raise ValueError(f"{g} is not a monomial")
        out.append(g.terms()[0][0])
    return out


def _require_field(I):
    if not I.ring.domain.is_field:
        raise ValueError("Hilbert data is only computed over QQ")


def leading_term_ideal(I):
    """Monomial ideal of leading monomials of the reduced basis (ring order)."""
    _require_field(I)
    if I.is_zero():
        return Ideal(I.ring, [])
    one = I.ring.domain.convert(1)
    return Ideal(I.ring, [Polynomial(I.ring, {p.sorted_items()[0][1]: one})
                          for p in I.gb().elements])


def _graded_lt_exponents(I):
    """Leading exponents of a basis in a degree-compatible order."""
    _require_field(I)
    R = I.ring
    if I.is_zero():
        return []
    if R.order == GRevLex:
        G = I.gb()
    else:
        S = R.with_order(GRevLex)
        G = Ideal(S, [Polynomial(S, g._terms) for g in I.nonzero_gens()]).gb()
    return [G.ring.decode(p.sorted_items()[0][1]) for p in G.elements]


def quotient_hilbert_series(I):
    """Hilbert series of ``R/I`` (graded by total degree)."""
    return HilbertSeries(hilbert_numerator(_graded_lt_exponents(I), I.ring.ngens), I.ring.ngens)


def _min_transversal(supports, nvars):
    """Smallest set of variables meeting every support set."""
    best = [nvars + 1]

    def search(chosen, remaining):
        if len(chosen) >= best[0]:
            return
        remaining = [s for s in remaining if not (s & chosen)]
        if not remaining:
            best[0] = len(chosen)
            return
        s = min(remaining, key=len)
        for v in sorted(s):
            search(chosen | {v}, remaining)

    search(frozenset(), [frozenset(s) for s in supports])
    return best[0]


def dim_and_codim(I):
    """Krull dimension of ``R/I`` and codimension of ``I``.

    The dimension is the size of the largest set of variables containing
    the support of no minimal leading monomial.
    """
    R = I.ring
    lts = minimalize_monomials(_graded_lt_exponents(I))
    if any(sum(e) == 0 for e in lts):
        raise ValueError("the unit ideal has no dimension")
    supports = [{i for i, e in enumerate(m) if e} for m in lts]
    codim = _min_transversal(supports, R.ngens) if supports else 0
    return R.ngens - codim, codim


def codim(I):
    return dim_and_codim(I)[1]


def dim(I):
    return dim_and_codim(I)[0]


def standard_monomials(lts, nvars):
    """All monomials outside the monomial ideal generated by ``lts`` (must be finite)."""
    lts = minimalize_monomials(lts)
    for i in range(nvars):
        if not any(sum(g) == g[i] and g[i] for g in lts):
            raise ValueError("infinitely many standard monomials")
    start = (0,) * nvars
    if any(_divides(g, start) for g in lts):
        return []
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for m in frontier:
            for i in range(nvars):
                e = m[:i] + (m[i] + 1,) + m[i + 1:]
                if e not in seen and not any(_divides(g, e) for g in lts):
                    seen.add(e)
                    nxt.append(e)
        frontier = nxt
    return sorted(seen, key=lambda e: (sum(e), e))


def degree(I):
    """Degree of ``R/I``.

    Homogeneous ideals: reduced Hilbert numerator at 1.  Inhomogeneous
    ideals must be zero-dimensional; their degree is the number of standard
    monomials for a degree-compatible order.
    """
    if I.is_homogeneous():
        return quotient_hilbert_series(I).degree()
    lts = _graded_lt_exponents(I)
    if any(sum(e) == 0 for e in lts):
        return 0
    d, _ = dim_and_codim(I)
    if d != 0:
        raise ValueError("degree of an inhomogeneous ideal is only defined in dimension zero")
    return len(standard_monomials(lts, I.ring.ngens))


def module_degree(I, J):
    """Degree of the module ``(I + J) / J``."""
    if I.ring != J.ring:
        raise ValueError("ideals live in different rings")
    if not (I.is_homogeneous() and J.is_homogeneous()):
        raise ValueError("module degree needs homogeneous ideals")
    diff = quotient_hilbert_series(J) - quotient_hilbert_series(I + J)
    return diff.degree()


class NotEnoughVariables(ValueError):
    pass


def blowup_ideal(I, names):
    """Ideal of relations of the Rees algebra of ``I``.

    In ``k[t, x..., y_1..y_r]`` with ``t`` eliminated first, eliminate ``t``
    from ``(y_j - t*f_j)``, then rename ``y_j`` to ``names[j]`` in
    ``k[x..., names...]``.
    """
    S = I.ring
    gens = list(I.gens)
    r = len(gens)
    names = list(names)
    if len(names) < r:
        raise NotEnoughVariables("not enough variables")
    t = fresh_name(S, "t")
    ynames = []
    for j in range(1, r + 1):
        y = f"y_{j}"
        while y in S.names or y == t:
            y = "_" + y
        ynames.append(y)
    St = Ring(S.domain, [t] + list(S.names) + ynames, Eliminate(1))
    n = S.ngens
    phi = list(St.gens[1:n + 1])
    tt = St.gens[0]
    ys = St.gens[n + 1:]
    J = Ideal(St, [ys[j] - tt * evaluate_images(gens[j], phi, St) for j in range(r)])
    selected = eliminate(J, 1).gens
    R = Ring(S.domain, list(S.names) + names)
    theta = [R.zero] + list(R.gens[:n]) + list(R.gens[n:n + r])
    return Ideal(R, [evaluate_images(p, theta, R) for p in selected])


def flat_limit(I, at=0, param=None):
    """Fibre at ``param = at`` of the saturation of ``I`` by ``param``, trimmed.

    ``param`` defaults to the first variable; the result lives in the ring
    without it.
    """
    R = I.ring
    p = R.gen(0 if param is None else param)
    i = R.var_index(p)
    sat = saturate(I, p)
    rest = [name for k, name in enumerate(R.names) if k != i]
    T = Ring(R.domain, rest)
    images = [T(at) if k == i else T.gen(R.names[k]) for k in range(R.ngens)]
    return trim(Ideal(T, [evaluate_images(g, images, T) for g in sat.gens]))


__all__ = [
    "HilbertSeries", "hilbert_series", "hilbert_numerator", "quotient_hilbert_series",
    "leading_term_ideal", "dim_and_codim", "dim", "codim", "degree", "module_degree",
    "standard_monomials", "blowup_ideal", "flat_limit", "NotEnoughVariables", "QQ",
]
