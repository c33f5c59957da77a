"""Syntax tree for the scripting language.

Every node carries ``line`` and ``col`` (1-based).  Positions are excluded
from equality so that a printed and reparsed script compares equal to the
original.
"""

from dataclasses import dataclass, field


def _pos():
    return field(default=0, compare=False, repr=False)


@dataclass
class Node:
    pass


@dataclass
class Number(Node):
    value: int
    line: int = _pos()
    col: int = _pos()


@dataclass
class String(Node):
    value: str
    line: int = _pos()
    col: int = _pos()


@dataclass
class Name(Node):
    name: str
    line: int = _pos()
    col: int = _pos()


@dataclass
class UnaryOp(Node):
    op: str
    operand: Node
    line: int = _pos()
    col: int = _pos()


@dataclass
class BinOp(Node):
    op: str
    left: Node
    right: Node
    line: int = _pos()
    col: int = _pos()


@dataclass
class Call(Node):
    """``f(a, b)`` or juxtaposition ``f a``; both parse to this node."""
    func: Node
    args: list
    line: int = _pos()
    col: int = _pos()


@dataclass
class Index(Node):
    """``x_i``: subscript, e.g. ``R_"t"`` or ``(pair)_1``."""
    target: Node
    index: Node
    line: int = _pos()
    col: int = _pos()


@dataclass
class ListExpr(Node):
    items: list
    line: int = _pos()
    col: int = _pos()


@dataclass
class Sequence(Node):
    """Parenthesised, comma-separated ``(a, b)``."""
    items: list
    line: int = _pos()
    col: int = _pos()


@dataclass
class Range(Node):
    start: Node
    stop: Node
    line: int = _pos()
    col: int = _pos()


@dataclass
class Option(Node):
    """``key => value``."""
    key: Node
    value: Node
    line: int = _pos()
    col: int = _pos()


@dataclass
class VarRange(Node):
    """Variables ``a..i`` or ``y_0..y_8`` in a ring declaration."""
    first: str
    last: str
    line: int = _pos()
    col: int = _pos()


@dataclass
class RingDecl(Node):
    domain: str
    variables: list      # of str and VarRange
    order: str = "GRevLex"
    block: int = 0
    line: int = _pos()
    col: int = _pos()


@dataclass
class Assign(Node):
    name: str
    value: Node
    line: int = _pos()
    col: int = _pos()


@dataclass
class Statement(Node):
    body: Node           # Assign or expression
    silent: bool = False  # terminated by ';'
    line: int = _pos()
    col: int = _pos()


@dataclass
class Script(Node):
    statements: list
