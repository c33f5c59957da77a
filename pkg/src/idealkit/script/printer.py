"""Print a syntax tree back to source text.

Parentheses are inserted only where precedence requires them, so
``parse(format_script(parse(s)))`` equals ``parse(s)``.
"""

from .nodes import (
    Assign, BinOp, Call, Index, ListExpr, Name, Number, Option, Range, RingDecl,
    Sequence, String, UnaryOp, VarRange,
)

_BINARY = {"==": 2, "|": 3, "||": 3, ":": 4, "+": 6, "-": 6, "*": 7, "/": 7, "**": 7}
OPTION, RANGE, UNARY, POWER, POSTFIX = 1, 5, 8, 10, 11


def _prec(node):
    if isinstance(node, Option):
        return OPTION
    if isinstance(node, BinOp):
        return POWER if node.op == "^" else _BINARY[node.op]
    if isinstance(node, Range):
        return RANGE
    if isinstance(node, UnaryOp):
        return UNARY
    return POSTFIX


def _wrap(node, minimum):
    text = format_expr(node)
    return f"({text})" if _prec(node) < minimum else text


def _string(s):
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n") + '"'


def format_expr(node):
    if isinstance(node, Number):
        return str(node.value)
    if isinstance(node, String):
        return _string(node.value)
    if isinstance(node, Name):
        return node.name
    if isinstance(node, UnaryOp):
        inner = _wrap(node.operand, UNARY)
        if isinstance(node.operand, UnaryOp):
            inner = f"({inner})"
        return "-" + inner
    if isinstance(node, BinOp):
        if node.op == "^":
            return f"{_wrap(node.left, POSTFIX)}^{_wrap(node.right, UNARY)}"
        p = _BINARY[node.op]
        return f"{_wrap(node.left, p)} {node.op} {_wrap(node.right, p + 1)}"
    if isinstance(node, Range):
        return f"{_wrap(node.start, RANGE + 1)}..{_wrap(node.stop, RANGE + 1)}"
    if isinstance(node, Option):
        return f"{_wrap(node.key, OPTION + 1)} => {format_expr(node.value)}"
    if isinstance(node, Call):
        head = format_expr(node.func)
        if not isinstance(node.func, (Name, Call, Index)):
            head = f"({head})"
        return head + "(" + ", ".join(format_expr(a) for a in node.args) + ")"
    if isinstance(node, Index):
        head = _wrap(node.target, POSTFIX)
        idx = node.index
        if isinstance(idx, (String, Sequence)):
            sub = format_expr(idx)
        else:
            sub = f"({format_expr(idx)})"
        return f"{head}_{sub}"
    if isinstance(node, ListExpr):
        return "{" + ", ".join(format_expr(a) for a in node.items) + "}"
    if isinstance(node, Sequence):
        return "(" + ", ".join(format_expr(a) for a in node.items) + ")"
    if isinstance(node, RingDecl):
        parts = [f"{v.first}..{v.last}" if isinstance(v, VarRange) else v for v in node.variables]
        if node.order == "Eliminate":
            parts.append(f"MonomialOrder => Eliminate {node.block}")
        elif node.order != "GRevLex":
            parts.append(f"MonomialOrder => {node.order}")
        return f"{node.domain}[{', '.join(parts)}]"
    raise TypeError(f"cannot print {type(node).__name__}")


def format_statement(stmt):
    body = stmt.body
    if isinstance(body, Assign):
        text = f"{body.name} = {format_expr(body.value)}"
    else:
        text = format_expr(body)
    return text + (";" if stmt.silent else "")


def format_script(script):
    return "".join(format_statement(s) + "\n" for s in script.statements)
