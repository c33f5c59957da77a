"""Exact scalars: arbitrary-precision integers and reduced rationals.

Integers are plain Python ``int``.  Rationals are ``gmpy2.mpq``, which keeps
numerator and denominator reduced with a positive denominator, so structural
equality is value equality.  Nothing in this package touches floats.
"""

import re

from gmpy2 import mpq

BigInteger = int
BigRational = type(mpq(0))


class Domain:
    """A coefficient domain tag (``ZZ`` or ``QQ``)."""

    name = ""
    is_field = False

    def convert(self, value):
        raise NotImplementedError

    def __repr__(self):
        return self.name

    def __reduce__(self):
        return (_domain_by_name, (self.name,))


class IntegerRing(Domain):
    name = "ZZ"
    is_field = False

    def convert(self, value):
        if isinstance(value, bool):
            raise TypeError("booleans are not coefficients")
        if isinstance(value, int):
            return value
        if isinstance(value, BigRational):
            if value.denominator != 1:
                raise ValueError(f"{value} is not an integer")
            return int(value.numerator)
        if hasattr(value, "numerator") and hasattr(value, "denominator"):
            if value.denominator != 1:
                raise ValueError(f"{value} is not an integer")
            return int(value.numerator)
        raise TypeError(f"cannot convert {value!r} to an integer")


class RationalField(Domain):
    name = "QQ"
    is_field = True

    def convert(self, value):
        if isinstance(value, bool):
            raise TypeError("booleans are not coefficients")
        if isinstance(value, BigRational):
            return value
        if isinstance(value, int):
            return mpq(value)
        if hasattr(value, "numerator") and hasattr(value, "denominator"):
            return mpq(int(value.numerator), int(value.denominator))
        if isinstance(value, str):
            return parse_rational(value)
        raise TypeError(f"cannot convert {value!r} to a rational")


ZZ = IntegerRing()
QQ = RationalField()


def _domain_by_name(name):
    return {"ZZ": ZZ, "QQ": QQ}[name]


def int_arith(a, b, op):
    """Exact integer arithmetic; ``op`` is one of add, sub, mul, divexact, mod."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "divexact":
        if b == 0:
            raise ZeroDivisionError("division by zero")
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError(f"{b} does not divide {a}")
        return q
    if op == "mod":
        if b == 0:
            raise ZeroDivisionError("modulus is zero")
        return a % b
    raise ValueError(f"unknown integer operation {op!r}")


def ext_gcd(a, b):
    """Return ``(g, u, v)`` with ``g = gcd(a, b) > 0`` and ``u*a + v*b == g``."""
    if a == 0 and b == 0:
        raise ValueError("gcd of (0, 0) is undefined")
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v


def rat_arith(a, b, op):
    """Exact rational arithmetic; ``op`` is one of add, sub, mul, div."""
    a, b = mpq(a), mpq(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return a / b
    raise ValueError(f"unknown rational operation {op!r}")


_RAT_RE = re.compile(r"\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_integer(text):
    text = text.strip()
    if not re.fullmatch(r"[+-]?\d+", text):
        raise ValueError(f"not an integer literal: {text!r}")
    return int(text)


def parse_rational(text):
    m = _RAT_RE.match(text)
    if not m:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    return mpq(num, den)


def format_scalar(c):
    """Decimal text for an integer or rational (``p/q``, or ``p`` when integral)."""
    if isinstance(c, int):
        return str(c)
    c = mpq(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"
