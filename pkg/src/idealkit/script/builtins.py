"""Builtin functions of the scripting language.

Each builtin receives the evaluator, the evaluated arguments and the call
node (for error positions).
"""

from .. import geometry, ideals, polymatrix
from ..groebner import GroebnerBasis, select_in_subring
from ..ideals import Ideal
from ..polymatrix import PolyMatrix
from ..polyring import Polynomial, Ring
from ..ringmaps import QuotientRing, RingMap, base_ring, coerce_by_name, kernel
from .values import Builtin, OptionValue, Subquotient, Symbol, is_scalar, type_name

_TABLE = {}


def builtin(*names, accepts_symbols=False):
    def deco(fn):
        for name in names:
            _TABLE[name] = Builtin(name, fn, accepts_symbols)
        return fn
    return deco


def table():
    return dict(_TABLE)


# argument helpers -------------------------------------------------------------

def _arity(ev, args, node, lo, hi=None):
    hi = lo if hi is None else hi
    if not lo <= len(args) <= hi:
        name = getattr(node.func, "name", "function")
        want = str(lo) if lo == hi else f"{lo} to {hi}"
        ev.fail(f"{name} expects {want} argument{'s' if hi != 1 else ''}, got {len(args)}", node)


def _want(ev, v, cls, what, node):
    if not isinstance(v, cls):
        ev.fail(f"expected {what}, got a {type_name(v)}", node)
    return v


def _int(ev, v, node):
    if not isinstance(v, int) or isinstance(v, bool):
        ev.fail(f"expected an integer, got a {type_name(v)}", node)
    return v


def _ideal(ev, v, node):
    if isinstance(v, Ideal):
        return v
    if isinstance(v, Polynomial):
        return Ideal(v.ring, [v])
    if isinstance(v, PolyMatrix):
        return Ideal(v.ring, v.entries)
    ev.fail(f"expected an ideal, got a {type_name(v)}", node)


def _ring(ev, v, node):
    return _want(ev, v, (Ring, QuotientRing), "a ring", node)


def _flatten(v):
    if isinstance(v, (list, tuple)):
        out = []
        for x in v:
            out.extend(_flatten(x))
        return out
    if isinstance(v, PolyMatrix):
        return list(v.entries)
    return [v]


def _polys(ev, items, node):
    """Polynomials from a mix of polynomials, scalars and matrices, in one ring."""
    flat = []
    for v in items:
        flat.extend(_flatten(v))
    ring = None
    for v in flat:
        if isinstance(v, Polynomial):
            ring = v.ring
            break
    if ring is None:
        if ev.current_ring is None:
            ev.fail("no ring in scope for constant entries", node)
        ring = base_ring(ev.current_ring)
    out = []
    for v in flat:
        if isinstance(v, Polynomial) or is_scalar(v):
            out.append(ring(v))
        else:
            ev.fail(f"expected a polynomial, got a {type_name(v)}", node)
    return ring, out


def _row_matrix(ring, polys):
    # the engine has no 1x0 matrices; an empty row is a single zero
    return PolyMatrix(ring, 1, max(1, len(polys)), polys or [ring.zero])


def _matrix(ev, v, node):
    if isinstance(v, PolyMatrix):
        return v
    if isinstance(v, Polynomial):
        return PolyMatrix(v.ring, 1, 1, [v])
    ev.fail(f"expected a matrix, got a {type_name(v)}", node)


def _index_list(ev, v, node):
    items = v if isinstance(v, list) else [v]
    return [_int(ev, x, node) for x in items]


# ideals ---------------------------------------------------------------------

@builtin("ideal")
def _ideal_fn(ev, args, node):
    if len(args) == 1 and isinstance(args[0], Ideal):
        return args[0]
    ring, gens = _polys(ev, args, node)
    return Ideal(ring, gens)


@builtin("saturate")
def _saturate(ev, args, node):
    _arity(ev, args, node, 1, 2)
    I = _ideal(ev, args[0], node)
    if len(args) == 1:
        return ideals.saturate(I)
    f = args[1]
    if is_scalar(f):
        f = I.ring(f)
    return ideals.saturate(I, _want(ev, f, (Polynomial, Ideal), "a polynomial or ideal", node))


@builtin("quotient")
def _quotient(ev, args, node):
    _arity(ev, args, node, 2)
    I = _ideal(ev, args[0], node)
    return ideals.quotient(I, _want(ev, args[1], (Polynomial, Ideal), "a polynomial or ideal", node))


@builtin("intersect")
def _intersect(ev, args, node):
    items = args[0] if len(args) == 1 and isinstance(args[0], list) else args
    if len(items) < 2:
        ev.fail("intersect needs at least two ideals", node)
    return ideals.intersect(*[_ideal(ev, v, node) for v in items])


@builtin("eliminate")
def _eliminate(ev, args, node):
    _arity(ev, args, node, 2)
    a, b = args
    if not isinstance(a, Ideal):
        a, b = b, a           # accept eliminate(vars, I) as well
    I = _ideal(ev, a, node)
    if isinstance(b, int):
        return ideals.eliminate(I, b)
    return ideals.eliminate(I, _flatten(b))


@builtin("trim")
def _trim(ev, args, node):
    _arity(ev, args, node, 1)
    return ideals.trim(_ideal(ev, args[0], node))


@builtin("gb")
def _gb(ev, args, node):
    _arity(ev, args, node, 1)
    return _ideal(ev, args[0], node).gb()


@builtin("gens")
def _gens(ev, args, node):
    _arity(ev, args, node, 1)
    v = args[0]
    if isinstance(v, GroebnerBasis):
        return _row_matrix(v.ring, list(v.elements))
    if isinstance(v, (Ring, QuotientRing)):
        return list(v.gens)
    I = _ideal(ev, v, node)
    return _row_matrix(I.ring, list(I.gens))


@builtin("selectInSubring")
def _select(ev, args, node):
    _arity(ev, args, node, 2)
    k = _int(ev, args[0], node)
    v = args[1]
    if isinstance(v, GroebnerBasis):
        polys, ring = list(v.elements), v.ring
    else:
        M = _matrix(ev, v, node)
        polys, ring = list(M.entries), M.ring
    return _row_matrix(ring, select_in_subring(k, [p for p in polys if p]) if polys else [])


@builtin("numgens")
def _numgens(ev, args, node):
    _arity(ev, args, node, 1)
    v = args[0]
    if isinstance(v, (Ring, QuotientRing)):
        return v.ngens
    return len(_ideal(ev, v, node).gens)


@builtin("ring")
def _ring_of(ev, args, node):
    _arity(ev, args, node, 1)
    v = args[0]
    if isinstance(v, (Polynomial, Ideal, PolyMatrix)):
        return v.ring
    ev.fail(f"a {type_name(v)} has no ring", node)


# invariants -------------------------------------------------------------------

@builtin("degree")
def _degree(ev, args, node):
    _arity(ev, args, node, 1)
    v = args[0]
    if isinstance(v, Subquotient):
        return geometry.module_degree(v.numerator, v.denominator)
    if isinstance(v, Polynomial):
        return v.total_degree()
    return geometry.degree(_ideal(ev, v, node))


@builtin("codim")
def _codim(ev, args, node):
    _arity(ev, args, node, 1)
    return geometry.codim(_ideal(ev, args[0], node))


@builtin("dim")
def _dim(ev, args, node):
    _arity(ev, args, node, 1)
    return geometry.dim(_ideal(ev, args[0], node))


@builtin("moduleDegree")
def _module_degree(ev, args, node):
    _arity(ev, args, node, 2)
    return geometry.module_degree(_ideal(ev, args[0], node), _ideal(ev, args[1], node))


@builtin("flatLimit")
def _flat_limit(ev, args, node):
    _arity(ev, args, node, 1, 2)
    I = _ideal(ev, args[0], node)
    if len(args) == 1:
        return geometry.flat_limit(I)
    opt = args[1]
    if isinstance(opt, list) and len(opt) == 1:
        opt = opt[0]
    if isinstance(opt, OptionValue):
        return geometry.flat_limit(I, opt.value, opt.key)
    return geometry.flat_limit(I, opt)


@builtin("blowUpIdeal", accepts_symbols=True)
def _blowup(ev, args, node):
    _arity(ev, args, node, 2)
    I = _ideal(ev, args[0], node)
    names = []
    for v in _want(ev, args[1], list, "a list of new variable names", node):
        if isinstance(v, Symbol):
            names.append(v.name)
        elif isinstance(v, str):
            names.append(v)
        elif isinstance(v, Polynomial) and v.variable_index() is not None:
            names.append(v.ring.names[v.variable_index()])
        else:
            ev.fail(f"not a variable name: {ev.format(v)}", node)
    return geometry.blowup_ideal(I, names)


# matrices ---------------------------------------------------------------------

@builtin("matrix")
def _matrix_fn(ev, args, node):
    _arity(ev, args, node, 1)
    rows = args[0]
    if isinstance(rows, PolyMatrix):
        return rows
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        ev.fail("matrix expects a list of rows such as {{a, b}, {c, d}}", node)
    width = len(rows[0])
    if width == 0 or any(len(r) != width for r in rows):
        ev.fail("matrix rows must be nonempty and of equal length", node)
    ring, entries = _polys(ev, rows, node)
    return PolyMatrix(ring, len(rows), width, entries)


@builtin("vars")
def _vars(ev, args, node):
    _arity(ev, args, node, 1)
    R = _ring(ev, args[0], node)
    return PolyMatrix(base_ring(R), 1, R.ngens, list(R.gens))


@builtin("id")
def _identity(ev, args, node):
    _arity(ev, args, node, 2)
    R = _ring(ev, args[0], node)
    return PolyMatrix.identity(base_ring(R), _int(ev, args[1], node))


@builtin("transpose")
def _transpose(ev, args, node):
    _arity(ev, args, node, 1)
    return _matrix(ev, args[0], node).transpose()


@builtin("entries")
def _entries(ev, args, node):
    _arity(ev, args, node, 1)
    return _matrix(ev, args[0], node).to_rows()


@builtin("submatrix")
def _submatrix(ev, args, node):
    _arity(ev, args, node, 2, 3)
    M = _matrix(ev, args[0], node)
    if len(args) == 2:
        return M.submatrix(None, _index_list(ev, args[1], node))
    return M.submatrix(_index_list(ev, args[1], node), _index_list(ev, args[2], node))


@builtin("det")
def _det(ev, args, node):
    _arity(ev, args, node, 1)
    return polymatrix.det(_matrix(ev, args[0], node))


@builtin("adjoint", "classicalAdjoint")
def _adjoint(ev, args, node):
    _arity(ev, args, node, 1)
    return polymatrix.classical_adjoint(_matrix(ev, args[0], node))


@builtin("minors")
def _minors(ev, args, node):
    _arity(ev, args, node, 2)
    return polymatrix.minors(_int(ev, args[0], node), _matrix(ev, args[1], node))


@builtin("exteriorPower")
def _exterior(ev, args, node):
    _arity(ev, args, node, 2)
    return polymatrix.exterior_power(_int(ev, args[0], node), _matrix(ev, args[1], node))


@builtin("jacobian")
def _jacobian(ev, args, node):
    _arity(ev, args, node, 1)
    v = args[0]
    if isinstance(v, Ideal):
        polys = list(v.gens)
    elif isinstance(v, PolyMatrix):
        polys = list(v.entries)
    elif isinstance(v, Polynomial):
        polys = [v]
    else:
        ev.fail(f"cannot take the jacobian of a {type_name(v)}", node)
    return polymatrix.jacobian(polys)


@builtin("genericMatrix")
def _generic(ev, args, node):
    _arity(ev, args, node, 4)
    R = _ring(ev, args[0], node)
    first = _want(ev, args[1], Polynomial, "a variable", node)
    return polymatrix.generic_matrix(base_ring(R), first, _int(ev, args[2], node), _int(ev, args[3], node))


@builtin("coefficients")
def _coefficients(ev, args, node):
    """``(monomials, coefficients)``: a 1 x k row of monomials in the chosen
    variables (decreasing) and a matrix with one row per input entry."""
    _arity(ev, args, node, 2)
    v = args[1]
    if isinstance(v, Polynomial):
        entries, ring = [v], v.ring
    elif isinstance(v, PolyMatrix):
        entries, ring = list(v.entries), v.ring
    elif isinstance(v, Ideal):
        entries, ring = list(v.gens), v.ring
    else:
        ev.fail(f"cannot take coefficients of a {type_name(v)}", node)
    subset = []
    for x in _flatten(args[0]):
        if isinstance(x, int) or (isinstance(x, Polynomial) and x.variable_index() is not None):
            subset.append(ring.var_index(x))
        else:
            ev.fail("coefficients needs variables or variable indices", node)
    collected = [dict((m, c) for m, c in e.coefficients_in(subset)) for e in entries]
    monos = {}
    for d in collected:
        for m in d:
            monos[m] = m.sorted_items()[0][0]
    order = sorted(monos, key=monos.get, reverse=True)
    if not order:
        order = [ring.one]
    coeffs = [d.get(m, ring.zero) for d in collected for m in order]
    return (PolyMatrix(ring, 1, len(order), order),
            PolyMatrix(ring, len(entries), len(order), coeffs))


# rings and maps -----------------------------------------------------------------

@builtin("use")
def _use(ev, args, node):
    _arity(ev, args, node, 1)
    R = _ring(ev, args[0], node)
    ev.use(R)
    return R


@builtin("map")
def _map(ev, args, node):
    _arity(ev, args, node, 2, 3)
    T = _ring(ev, args[0], node)
    S = _want(ev, args[1], Ring, "a polynomial ring as source", node)
    if len(args) == 2:
        images = [coerce_by_name(g, T) for g in S.gens]
    else:
        images = _flatten(args[2])
    return RingMap(T, S, images)


@builtin("ker", "kernel")
def _ker(ev, args, node):
    _arity(ev, args, node, 1)
    return kernel(_want(ev, args[0], RingMap, "a ring map", node))


@builtin("substitute", "sub")
def _substitute(ev, args, node):
    _arity(ev, args, node, 2)
    x, spec = args
    if isinstance(spec, (Ring, QuotientRing)):
        def move(p):
            return coerce_by_name(p, spec)
        target = base_ring(spec)
    else:
        opts = spec if isinstance(spec, list) else [spec]
        if not all(isinstance(o, OptionValue) for o in opts):
            ev.fail("substitute expects a ring or a list of var => value options", node)

        def move(p):
            assignment = {}
            for o in opts:
                key = o.key
                if not (isinstance(key, Polynomial) and key.variable_index() is not None):
                    ev.fail(f"cannot substitute for {ev.format(key)}", node)
                if key.ring != p.ring:
                    ev.fail(f"{key} is not a variable of {ev.format(p.ring)}", node)
                assignment[key.variable_index()] = o.value
            return p.substitute(assignment)
        target = None
    if is_scalar(x):
        x = base_ring(ev.current_ring)(x)
    if isinstance(x, Polynomial):
        return move(x)
    if isinstance(x, Ideal):
        return Ideal(target or x.ring, [move(g) for g in x.gens])
    if isinstance(x, PolyMatrix):
        return x.map_entries(move, target or x.ring)
    ev.fail(f"cannot substitute into a {type_name(x)}", node)
