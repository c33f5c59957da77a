"""Recursive-descent parser.

Precedence, loosest first::

    =>            options (right associative)
    ==
    |  ||         horizontal / vertical matrix concatenation
    :             ideal quotient
    ..            ranges
    +  -
    *  /  **
    -             unary minus
    f x           juxtaposition (right associative: ``trim phi I``)
    ^             right associative
    f(...)  x_i   calls and subscripts
"""

from .lexer import ScriptSyntaxError, tokenize
from .nodes import (
    Assign, BinOp, Call, Index, ListExpr, Name, Number, Option, Range, RingDecl,
    Script, Sequence, Statement, String, UnaryOp, VarRange,
)

DOMAINS = ("QQ", "ZZ")
ORDERS = ("GRevLex", "Lex")

_ATOM_START = {"NAME", "NUMBER", "STRING"}


class Parser:
    def __init__(self, source):
        self.tokens = tokenize(source)
        self.i = 0

    # token helpers --------------------------------------------------------

    @property
    def tok(self):
        return self.tokens[self.i]

    def peek(self, k=1):
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def advance(self):
        t = self.tokens[self.i]
        self.i += 1
        return t

    def at(self, text, kind="OP"):
        return self.tok.kind == kind and self.tok.text == text

    def expect(self, text):
        if not self.at(text):
            self.error(f"expected {text!r}")
        return self.advance()

    def error(self, message, tok=None):
        tok = tok or self.tok
        found = "end of input" if tok.kind == "EOF" else (
            "end of line" if tok.kind == "NEWLINE" else repr(tok.text))
        raise ScriptSyntaxError(f"{message}, found {found}", tok.line, tok.col)

    # statements -----------------------------------------------------------

    def parse_script(self):
        stmts = []
        while self.tok.kind != "EOF":
            if self.tok.kind == "NEWLINE" or self.at(";"):
                self.advance()
                continue
            stmts.append(self.statement())
        return Script(stmts)

    def statement(self):
        start = self.tok
        if start.kind == "NAME" and self.peek().kind == "OP" and self.peek().text == "=":
            self.advance()
            self.advance()
            body = Assign(start.text, self.expr(), start.line, start.col)
        else:
            body = self.expr()
        silent = False
        if self.at(";"):
            self.advance()
            silent = True
        elif self.tok.kind not in ("NEWLINE", "EOF"):
            self.error("expected end of statement")
        return Statement(body, silent, start.line, start.col)

    # expressions ----------------------------------------------------------

    def expr(self):
        return self.option()

    def option(self):
        left = self.equality()
        if self.at("=>"):
            t = self.advance()
            return Option(left, self.option(), t.line, t.col)
        return left

    def _binary(self, ops, sub):
        left = sub()
        while self.tok.kind == "OP" and self.tok.text in ops:
            t = self.advance()
            left = BinOp(t.text, left, sub(), t.line, t.col)
        return left

    def equality(self):
        return self._binary(("==",), self.concat)

    def concat(self):
        return self._binary(("|", "||"), self.colon)

    def colon(self):
        return self._binary((":",), self.range)

    def range(self):
        left = self.additive()
        if self.at(".."):
            t = self.advance()
            return Range(left, self.additive(), t.line, t.col)
        return left

    def additive(self):
        return self._binary(("+", "-"), self.multiplicative)

    def multiplicative(self):
        return self._binary(("*", "/", "**"), self.unary)

    def unary(self):
        if self.at("-"):
            t = self.advance()
            return UnaryOp("-", self.unary(), t.line, t.col)
        return self.application()

    def _starts_atom(self):
        t = self.tok
        return t.kind in _ATOM_START or (t.kind == "OP" and t.text in ("(", "{"))

    def application(self):
        head = self.power()
        if isinstance(head, (Name, Call, Index)) and self._starts_atom():
            arg = self.application()
            return Call(head, [arg], head.line, head.col)
        return head

    def power(self):
        base = self.postfix()
        if self.at("^"):
            t = self.advance()
            return BinOp("^", base, self.unary(), t.line, t.col)
        return base

    def postfix(self):
        node = self.atom()
        while True:
            if self.at("(") and isinstance(node, (Name, Call, Index)):
                t = self.advance()
                args = self._items(")")
                node = Call(node, args, node.line, node.col)
            elif self.at("_"):
                t = self.advance()
                node = Index(node, self._subscript(), t.line, t.col)
            else:
                return node

    def _subscript(self):
        t = self.tok
        if t.kind == "NUMBER":
            self.advance()
            return Number(int(t.text), t.line, t.col)
        if t.kind in ("STRING", "NAME") or self.at("("):
            return self.atom()
        self.error("expected a subscript")

    def _items(self, close):
        items = []
        if self.at(close):
            self.advance()
            return items
        while True:
            items.append(self.expr())
            if self.at(","):
                self.advance()
                continue
            self.expect(close)
            return items

    def atom(self):
        t = self.tok
        if t.kind == "NUMBER":
            self.advance()
            return Number(int(t.text), t.line, t.col)
        if t.kind == "STRING":
            self.advance()
            return String(t.text, t.line, t.col)
        if t.kind == "NAME":
            self.advance()
            if t.text in DOMAINS and self.at("["):
                return self.ring_decl(t)
            return Name(t.text, t.line, t.col)
        if self.at("("):
            self.advance()
            items = self._items(")")
            if len(items) == 1:
                return items[0]
            return Sequence(items, t.line, t.col)
        if self.at("{"):
            self.advance()
            return ListExpr(self._items("}"), t.line, t.col)
        self.error("expected an expression")

    def ring_decl(self, dom):
        self.expect("[")
        variables = []
        order, block = "GRevLex", 0
        while True:
            t = self.tok
            if t.kind != "NAME":
                self.error("expected a variable name or monomial order")
            if t.text == "MonomialOrder" and self.peek().text == "=>":
                self.advance()
                self.advance()
                order, block = self._order()
            elif t.text == "Eliminate" and self.peek().kind == "NUMBER":
                order, block = self._order()
            elif t.text in ORDERS and self.peek().text in (",", "]"):
                order, block = self._order()
            else:
                self.advance()
                if self.at(".."):
                    self.advance()
                    last = self.tok
                    if last.kind != "NAME":
                        self.error("expected a variable name after '..'")
                    self.advance()
                    variables.append(VarRange(t.text, last.text, t.line, t.col))
                else:
                    variables.append(t.text)
            if self.at(","):
                self.advance()
                continue
            self.expect("]")
            break
        if not variables:
            self.error("a ring needs at least one variable", dom)
        return RingDecl(dom.text, variables, order, block, dom.line, dom.col)

    def _order(self):
        t = self.advance()
        if t.kind == "NAME" and t.text == "Eliminate":
            k = self.tok
            if k.kind != "NUMBER":
                self.error("expected the size of the eliminated block")
            self.advance()
            return "Eliminate", int(k.text)
        if t.kind == "NAME" and t.text in ORDERS:
            return t.text, 0
        self.error("expected Eliminate k, Lex or GRevLex", t)


def parse(source):
    """Parse script text into a :class:`~idealkit.script.nodes.Script`."""
    return Parser(source).parse_script()
