"""Script values that have no counterpart in the engine, and value printing."""

from dataclasses import dataclass

from ..exactnum import BigRational, format_scalar
from ..groebner import GroebnerBasis
from ..ideals import Ideal
from ..polymatrix import PolyMatrix
from ..polyring import Polynomial, Ring
from ..ringmaps import QuotientRing, RingMap


class ScriptRuntimeError(Exception):
    def __init__(self, message, line=0, col=0):
        super().__init__(f"line {line}, column {col}: {message}" if line else message)
        self.message = message
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Symbol:
    """An unbound identifier; only a few builtins accept one (new variable names)."""
    name: str
    line: int = 0
    col: int = 0


@dataclass(frozen=True)
class FreeModule:
    """``R^n``; only used to spell identity matrices as ``id_(R^n)``."""
    ring: object
    rank: int


@dataclass(frozen=True)
class Subquotient:
    """The module ``(I + J) / J`` written ``I / J``."""
    numerator: Ideal
    denominator: Ideal


@dataclass(frozen=True)
class OptionValue:
    key: object
    value: object


class Builtin:
    def __init__(self, name, fn, accepts_symbols=False):
        self.name = name
        self.fn = fn
        self.accepts_symbols = accepts_symbols

    def __repr__(self):
        return f"<builtin {self.name}>"


def is_scalar(v):
    return isinstance(v, (int, BigRational)) and not isinstance(v, bool)


def type_name(v):
    if isinstance(v, bool):
        return "Boolean"
    if isinstance(v, int):
        return "Integer"
    if isinstance(v, BigRational):
        return "Rational"
    names = {Polynomial: "Polynomial", Ideal: "Ideal", PolyMatrix: "Matrix", Ring: "Ring",
             QuotientRing: "QuotientRing", RingMap: "RingMap", GroebnerBasis: "GroebnerBasis",
             list: "List", tuple: "Sequence", str: "String", Symbol: "Symbol",
             FreeModule: "Module", Subquotient: "Module", OptionValue: "Option", Builtin: "Function"}
    for cls, name in names.items():
        if isinstance(v, cls):
            return name
    return type(v).__name__


def format_value(v, ring_names=None):
    """Deterministic one-line text for a value."""
    ring_names = ring_names or {}

    def ring_text(R):
        name = ring_names.get(R)
        if name:
            return name
        return str(R)

    def fmt(v):
        if isinstance(v, bool):
            return "true" if v else "false"
        if is_scalar(v):
            return format_scalar(v)
        if isinstance(v, (Polynomial, Ideal, PolyMatrix)):
            return str(v)
        if isinstance(v, (Ring, QuotientRing)):
            return ring_text(v)
        if isinstance(v, RingMap):
            imgs = ", ".join(str(g) for g in v.images)
            return f"map({ring_text(v.target)}, {ring_text(v.source)}, {{{imgs}}})"
        if isinstance(v, GroebnerBasis):
            return "gb {" + ", ".join(str(p) for p in v.elements) + "}"
        if isinstance(v, list):
            return "{" + ", ".join(fmt(x) for x in v) + "}"
        if isinstance(v, tuple):
            return "(" + ", ".join(fmt(x) for x in v) + ")"
        if isinstance(v, str):
            return v
        if isinstance(v, FreeModule):
            return f"{ring_text(v.ring)}^{v.rank}"
        if isinstance(v, Subquotient):
            return f"subquotient ({v.numerator}) / ({v.denominator})"
        if isinstance(v, OptionValue):
            return f"{fmt(v.key)} => {fmt(v.value)}"
        if isinstance(v, Builtin):
            return v.name
        if v is None:
            return "null"
        return str(v)

    return fmt(v)
