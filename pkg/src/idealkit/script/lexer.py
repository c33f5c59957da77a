"""Tokenizer.

Newlines end statements except inside brackets or right after a binary
operator, so long expressions may be broken across lines.  ``--`` starts a
comment that runs to the end of the line.
"""

import re
from dataclasses import dataclass


class ScriptSyntaxError(Exception):
    def __init__(self, message, line, col):
        super().__init__(f"line {line}, column {col}: {message}")
        self.message = message
        self.line = line
        self.col = col


@dataclass
class Token:
    kind: str    # NAME NUMBER STRING OP NEWLINE EOF
    text: str
    line: int
    col: int


# longest operators first
OPERATORS = ["=>", "==", "..", "||", "**", "=", "|", "*", "+", "-", "/", "^",
             ":", ";", ",", "(", ")", "[", "]", "{", "}", "_"]

# a trailing binary operator continues the statement on the next line
CONTINUES = {"=>", "==", "..", "||", "**", "=", "|", "*", "+", "-", "/", "^", ":", ","}

_TOKEN_RE = re.compile(r"""
    (?P<ws>[ \t\r]+)
  | (?P<comment>--[^\n]*)
  | (?P<newline>\n)
  | (?P<name>[A-Za-z][A-Za-z0-9']*(?:_[0-9]+)?)
  | (?P<number>[0-9]+)
  | (?P<string>"(?:[^"\\\n]|\\.)*")
  | (?P<op>=>|==|\.\.|\|\||\*\*|[=|*+\-/^:;,()\[\]{}_])
""", re.VERBOSE)

_ESCAPE_RE = re.compile(r"\\(.)")


def _unescape(body):
    return _ESCAPE_RE.sub(lambda m: "\n" if m.group(1) == "n" else m.group(1), body)


_OPEN = {"(": ")", "[": "]", "{": "}"}


def tokenize(source):
    tokens = []
    depth = []
    pos = 0
    line, line_start = 1, 0
    n = len(source)
    while pos < n:
        m = _TOKEN_RE.match(source, pos)
        col = pos - line_start + 1
        if m is None:
            if source[pos] == '"':
                raise ScriptSyntaxError("unterminated string", line, col)
            raise ScriptSyntaxError(f"unexpected character {source[pos]!r}", line, col)
        kind = m.lastgroup
        text = m.group()
        pos = m.end()
        if kind in ("ws", "comment"):
            continue
        if kind == "newline":
            if not depth and tokens and tokens[-1].kind != "NEWLINE":
                last = tokens[-1]
                if not (last.kind == "OP" and last.text in CONTINUES):
                    tokens.append(Token("NEWLINE", "\n", line, col))
            line += 1
            line_start = pos
            continue
        if kind == "op":
            if text in _OPEN:
                depth.append((text, line, col))
            elif text in (")", "]", "}"):
                if not depth or _OPEN[depth[-1][0]] != text:
                    raise ScriptSyntaxError(f"unmatched {text!r}", line, col)
                depth.pop()
            tokens.append(Token("OP", text, line, col))
        elif kind == "string":
            tokens.append(Token("STRING", _unescape(text[1:-1]), line, col))
        else:
            tokens.append(Token(kind.upper(), text, line, col))
    if depth:
        text, l, c = depth[-1]
        raise ScriptSyntaxError(f"unclosed {text!r}", l, c)
    col = pos - line_start + 1
    if tokens and tokens[-1].kind != "NEWLINE":
        tokens.append(Token("NEWLINE", "\n", line, col))
    tokens.append(Token("EOF", "", line, col))
    return tokens
