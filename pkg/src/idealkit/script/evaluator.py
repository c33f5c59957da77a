"""Tree-walking evaluator.

Assigning a ring to a name binds its variables (as ``use`` does), so a
declaration like ``S = QQ[x, y]`` makes ``x`` and ``y`` available.  User
bindings shadow builtins.  A statement ending in ``;`` prints nothing; every
other statement produces one output record.
"""

import re
import time
from dataclasses import dataclass

from ..exactnum import QQ, ZZ
from ..ideals import Ideal, ideal_equals, quotient
from ..polymatrix import DimensionError, PolyMatrix
from ..polyring import Eliminate, GRevLex, Lex, Polynomial, Ring, RingMismatch
from ..ringmaps import QuotientRing, RingMap, base_ring, coerce_by_name
from . import builtins as _builtins
from .nodes import Assign, Range, VarRange
from .parser import parse
from .values import (
    Builtin, FreeModule, OptionValue, ScriptRuntimeError, Subquotient, Symbol,
    format_value, is_scalar, type_name,
)


@dataclass
class OutputRecord:
    index: int       # statement number, from 1
    line: int
    value: object
    text: str


def expand_var_range(first, last):
    """``a..e`` or ``y_0..y_8`` as a list of names."""
    m1 = re.fullmatch(r"(.*)_(\d+)", first)
    m2 = re.fullmatch(r"(.*)_(\d+)", last)
    if m1 and m2 and m1.group(1) == m2.group(1):
        lo, hi = int(m1.group(2)), int(m2.group(2))
        if lo > hi:
            raise ValueError(f"empty variable range {first}..{last}")
        return [f"{m1.group(1)}_{i}" for i in range(lo, hi + 1)]
    if len(first) == 1 and len(last) == 1 and first.isalpha() and last.isalpha():
        if first.islower() != last.islower() or first > last:
            raise ValueError(f"bad variable range {first}..{last}")
        return [chr(c) for c in range(ord(first), ord(last) + 1)]
    raise ValueError(f"cannot expand variable range {first}..{last}")


class Evaluator:
    def __init__(self, on_statement=None):
        self.env = {}
        self.ring_names = {}
        self.current_ring = None
        self.builtins = _builtins.table()
        self.on_statement = on_statement

    # public ---------------------------------------------------------------

    def run(self, script):
        """Evaluate every statement; returns the list of output records."""
        out = []
        for k, stmt in enumerate(script.statements, 1):
            t0 = time.perf_counter()
            value = self.exec_statement(stmt)
            if self.on_statement is not None:
                self.on_statement(k, stmt, time.perf_counter() - t0)
            if not stmt.silent:
                out.append(OutputRecord(k, stmt.line, value, self.format(value)))
        return out

    def format(self, value):
        return format_value(value, self.ring_names)

    def exec_statement(self, stmt):
        body = stmt.body
        try:
            if isinstance(body, Assign):
                value = self.eval(body.value)
                self._check_defined(value)
                self.assign(body.name, value)
            else:
                value = self.eval(body)
                self._check_defined(value)
            return value
        except ScriptRuntimeError as e:
            if not e.line:
                raise ScriptRuntimeError(e.message, stmt.line, stmt.col) from None
            raise

    def assign(self, name, value):
        self.env[name] = value
        if isinstance(value, (Ring, QuotientRing)):
            self.ring_names[value] = name
            self.use(value)

    def use(self, R):
        for name, g in zip(R.names, R.gens):
            self.env[name] = g
        self.current_ring = R

    def lookup(self, node):
        name = node.name
        if name in self.env:
            return self.env[name]
        if name in self.builtins:
            return self.builtins[name]
        m = re.fullmatch(r"(.+)_(\d+)", name)
        if m and m.group(1) in self.env:
            # ``L_1`` lexes as one name; fall back to a subscript
            return self.subscript(self.env[m.group(1)], int(m.group(2)), node)
        return Symbol(name, node.line, node.col)

    # errors ---------------------------------------------------------------

    def fail(self, message, node):
        raise ScriptRuntimeError(message, getattr(node, "line", 0), getattr(node, "col", 0))

    def _check_defined(self, v):
        if isinstance(v, Symbol):
            raise ScriptRuntimeError(f"unknown identifier {v.name!r}", v.line, v.col)
        if isinstance(v, (list, tuple)):
            for x in v:
                self._check_defined(x)

    # expressions ----------------------------------------------------------

    def eval(self, node):
        method = getattr(self, "eval_" + type(node).__name__)
        try:
            return method(node)
        except ScriptRuntimeError:
            raise
        except (ArithmeticError, ValueError, TypeError, KeyError, IndexError,
                RingMismatch, DimensionError) as e:
            msg = e.args[0] if isinstance(e, KeyError) and e.args else str(e)
            self.fail(msg or type(e).__name__, node)

    def eval_Number(self, node):
        return node.value

    def eval_String(self, node):
        return node.value

    def eval_Name(self, node):
        return self.lookup(node)

    def eval_ListExpr(self, node):
        out = []
        for item in node.items:
            v = self.eval(item)
            if isinstance(item, Range):
                out.extend(v)
            else:
                out.append(v)
        return out

    def eval_Sequence(self, node):
        return tuple(self.eval(x) for x in node.items)

    def eval_Range(self, node):
        a, b = self.eval(node.start), self.eval(node.stop)
        self._check_defined([a, b])
        if not (isinstance(a, int) and isinstance(b, int)) or isinstance(a, bool) or isinstance(b, bool):
            self.fail("ranges need integer bounds", node)
        return list(range(a, b + 1))

    def eval_Option(self, node):
        key, value = self.eval(node.key), self.eval(node.value)
        self._check_defined(value)
        return OptionValue(key, value)

    def eval_RingDecl(self, node):
        names = []
        for v in node.variables:
            if isinstance(v, VarRange):
                try:
                    names.extend(expand_var_range(v.first, v.last))
                except ValueError as e:
                    self.fail(str(e), v)
            else:
                names.append(v)
        domain = QQ if node.domain == "QQ" else ZZ
        order = {"GRevLex": GRevLex, "Lex": Lex}.get(node.order) or Eliminate(node.block)
        return Ring(domain, names, order)

    def eval_UnaryOp(self, node):
        v = self.eval(node.operand)
        self._check_defined(v)
        if is_scalar(v) or isinstance(v, (Polynomial, PolyMatrix)):
            return -v
        self.fail(f"cannot negate a {type_name(v)}", node)

    def eval_BinOp(self, node):
        a = self.eval(node.left)
        b = self.eval(node.right)
        self._check_defined([a, b])
        return binary(self, node.op, a, b, node)

    def eval_Call(self, node):
        f = self.eval(node.func)
        if isinstance(f, Symbol):
            self.fail(f"unknown identifier {f.name!r}", f)
        args = [self.eval(a) for a in node.args]
        if isinstance(f, Builtin):
            if not f.accepts_symbols:
                self._check_defined(args)
            return f.fn(self, args, node)
        self._check_defined(args)
        if isinstance(f, RingMap):
            if len(args) != 1:
                self.fail("a ring map takes one argument", node)
            x = args[0]
            if is_scalar(x) or isinstance(x, (Polynomial, Ideal, PolyMatrix)):
                return f(x)
            self.fail(f"cannot apply a ring map to a {type_name(x)}", node)
        self.fail(f"a {type_name(f)} is not a function", node)

    def eval_Index(self, node):
        target = self.eval(node.target)
        index = self.eval(node.index)
        self._check_defined([target, index])
        return self.subscript(target, index, node)

    def subscript(self, target, index, node):
        if isinstance(target, Builtin) and target.name == "id":
            if isinstance(index, FreeModule):
                return PolyMatrix.identity(base_ring(index.ring), index.rank)
            self.fail("id_ needs a free module such as R^3", node)
        if isinstance(target, (list, tuple)):
            if not isinstance(index, int):
                self.fail("list subscripts must be integers", node)
            if not 0 <= index < len(target):
                self.fail(f"index {index} out of range", node)
            return target[index]
        if isinstance(target, (Ring, QuotientRing)):
            if not isinstance(index, (int, str)) or isinstance(index, bool):
                self.fail("ring subscripts are variable names or indices", node)
            return target.gen(index)
        if isinstance(target, PolyMatrix):
            if isinstance(index, tuple) and len(index) == 2:
                return target[index]
            self.fail("matrix subscripts are (row, column) pairs", node)
        if isinstance(target, Ideal):
            if isinstance(index, int) and 0 <= index < len(target.gens):
                return target.gens[index]
            self.fail(f"ideal has no generator {index}", node)
        self.fail(f"cannot subscript a {type_name(target)}", node)


# arithmetic -----------------------------------------------------------------

def _poly_like(v):
    return is_scalar(v) or isinstance(v, Polynomial)


def _as_row(ev, v, ring, node):
    if isinstance(v, PolyMatrix):
        return v
    if _poly_like(v):
        return PolyMatrix(ring, 1, 1, [v])
    ev.fail(f"cannot concatenate a {type_name(v)}", node)


def _concat(ev, op, a, b, node):
    ring = None
    for v in (a, b):
        if isinstance(v, PolyMatrix):
            ring = v.ring
            break
        if isinstance(v, Polynomial):
            ring = v.ring
    if ring is None:
        ev.fail("concatenation needs a matrix or polynomial", node)
    a, b = _as_row(ev, a, ring, node), _as_row(ev, b, ring, node)
    return a.hconcat(b) if op == "|" else a.vconcat(b)


def _divide(ev, a, b, node):
    if is_scalar(a) and is_scalar(b):
        if not b:
            ev.fail("division by zero", node)
        q = QQ.convert(a) / QQ.convert(b)
        return int(q) if q.denominator == 1 else q
    if isinstance(a, Polynomial) and _poly_like(b):
        return a / b
    if is_scalar(a) and isinstance(b, Polynomial):
        return b.ring.constant(a) / b
    if isinstance(a, Ring):
        if isinstance(b, Ideal):
            return QuotientRing(a, b)
        if isinstance(b, Polynomial):
            return QuotientRing(a, Ideal(a, [b]))
    if isinstance(a, Ideal) and isinstance(b, Ideal):
        if a.ring != b.ring:
            ev.fail("ideals live in different rings", node)
        return Subquotient(a, b)
    ev.fail(f"cannot divide a {type_name(a)} by a {type_name(b)}", node)


def _power(ev, a, b, node):
    if not isinstance(b, int) or isinstance(b, bool):
        ev.fail("exponents must be integers", node)
    if is_scalar(a):
        if b < 0:
            if not a:
                ev.fail("division by zero", node)
            q = QQ.convert(1) / QQ.convert(a) ** (-b)
            return int(q) if q.denominator == 1 else q
        return a ** b
    if isinstance(a, Polynomial):
        if b < 0:
            ev.fail("negative powers of polynomials are not supported", node)
        return a ** b
    if isinstance(a, (Ring, QuotientRing)):
        if b < 1:
            ev.fail("free modules need positive rank", node)
        return FreeModule(a, b)
    if isinstance(a, Ideal):
        result = Ideal(a.ring, [1])
        for _ in range(b):
            result = result * a
        return result
    ev.fail(f"cannot raise a {type_name(a)} to a power", node)


def _equal(ev, a, b, node):
    if isinstance(a, Ideal) and isinstance(b, Ideal):
        if a.ring != b.ring:
            ev.fail("cannot compare ideals of different rings", node)
        return ideal_equals(a, b)
    if _poly_like(a) and _poly_like(b):
        if isinstance(a, Polynomial) and isinstance(b, Polynomial) and a.ring != b.ring:
            ev.fail("cannot compare polynomials of different rings", node)
        return a == b
    if type(a) is type(b):
        return a == b
    ev.fail(f"cannot compare a {type_name(a)} with a {type_name(b)}", node)


def binary(ev, op, a, b, node):
    if op == "==":
        return _equal(ev, a, b, node)
    if op in ("|", "||"):
        return _concat(ev, op, a, b, node)
    if op == ":":
        if isinstance(a, Ideal) and (isinstance(b, (Ideal, Polynomial))):
            return quotient(a, b)
        ev.fail("the quotient I : J needs an ideal on the left", node)
    if op == "/":
        return _divide(ev, a, b, node)
    if op == "^":
        return _power(ev, a, b, node)
    if op == "**":
        if isinstance(a, PolyMatrix) and isinstance(b, (Ring, QuotientRing)):
            return a.map_entries(lambda e: coerce_by_name(e, b), base_ring(b))
        ev.fail("M ** R needs a matrix and a ring", node)
    if op in ("+", "-"):
        if _poly_like(a) and _poly_like(b):
            return a + b if op == "+" else a - b
        if isinstance(a, PolyMatrix) and isinstance(b, PolyMatrix):
            return a + b if op == "+" else a - b
        if op == "+" and isinstance(a, Ideal) and isinstance(b, Ideal):
            return a + b
        ev.fail(f"cannot apply {op!r} to a {type_name(a)} and a {type_name(b)}", node)
    if op == "*":
        if _poly_like(a) and _poly_like(b):
            return a * b
        if isinstance(a, PolyMatrix) and isinstance(b, PolyMatrix):
            return a * b
        if _poly_like(a) and isinstance(b, PolyMatrix):
            return b.scale(a)
        if isinstance(a, PolyMatrix) and _poly_like(b):
            return a.scale(b)
        if isinstance(a, Ideal) and isinstance(b, Ideal):
            return a * b
        if _poly_like(a) and isinstance(b, Ideal):
            return Ideal(b.ring, [a * g for g in b.gens])
        ev.fail(f"cannot multiply a {type_name(a)} by a {type_name(b)}", node)
    ev.fail(f"unknown operator {op!r}", node)


def evaluate(script, **kwargs):
    """Run a parsed script (or source text); returns the output records."""
    if isinstance(script, str):
        script = parse(script)
    return Evaluator(**kwargs).run(script)


def run_source(source, **kwargs):
    """Printed output of a script as text, one record per line."""
    return "".join(r.text + "\n" for r in evaluate(source, **kwargs))


__all__ = ["Evaluator", "OutputRecord", "evaluate", "run_source", "expand_var_range"]
