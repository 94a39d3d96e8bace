"""Exact scalars: rationals and rational functions in the Hecke parameter ``r``.

Rationals are plain :class:`fractions.Fraction` values. A
:class:`RationalFunction` is a reduced quotient of two integer polynomials
kept in a canonical form, so ``==`` is mathematical equality.

>>> f = parse_rational_function("(r^2 - 1)/(2*r + 2)")
>>> str(f)
'(r - 1)/2'
>>> specialize(f, -1)
Fraction(-1, 1)
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import reduce
from typing import Union

__all__ = [
    "Rational",
    "RationalFunction",
    "PoleError",
    "R",
    "ONE",
    "ZERO",
    "as_rational",
    "as_rational_function",
    "specialize",
    "parse_rational_function",
]

Rational = Fraction
Poly = tuple  # ascending integer coefficients, trailing zeros trimmed


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated at a root of its denominator."""


# ---------------------------------------------------------------------------
# dense integer polynomials


def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def _pneg(a):
    return tuple(-x for x in a)


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _pscale(a, k):
    return _trim(x * k for x in a)


def _content(a):
    return reduce(math.gcd, a, 0)


def _primitive(a):
    g = _content(a)
    if g == 0:
        return ()
    if a[-1] < 0:
        g = -g
    return tuple(x // g for x in a)


def _prem_gcd(a, b):
    """Primitive gcd of two integer polynomials (positive leading coefficient)."""
    a, b = _primitive(a), _primitive(b)
    while b:
        a, b = b, _primitive(_pseudo_rem(a, b))
    return a


def _pseudo_rem(a, b):
    # lc(b)^k * a mod b, computed without fractions
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and a:
        shift = len(a) - 1 - db
        lead = a[-1]
        a = [x * lb for x in a]
        for i, y in enumerate(b):
            a[i + shift] -= lead * y
        a = list(_trim(a))
    return tuple(a)


def _pexact_div(a, b):
    """Exact quotient a / b over Z (caller guarantees divisibility)."""
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    lb = b[-1]
    for k in range(len(q) - 1, -1, -1):
        num = a[k + len(b) - 1]
        if num % lb:
            raise ArithmeticError("inexact polynomial division")
        c = num // lb
        q[k] = c
        if c:
            for i, y in enumerate(b):
                a[k + i] -= c * y
    if any(a):
        raise ArithmeticError("inexact polynomial division")
    return _trim(q)


def _peval(a, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _poly_str(a) -> str:
    if not a:
        return "0"
    parts = []
    for deg in range(len(a) - 1, -1, -1):
        c = a[deg]
        if c == 0:
            continue
        mag = abs(c)
        if deg == 0:
            body = str(mag)
        else:
            mono = "r" if deg == 1 else f"r^{deg}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


def _nterms(a) -> int:
    return sum(1 for c in a if c)


# ---------------------------------------------------------------------------


class RationalFunction:
    """Reduced quotient ``num/den`` of integer polynomials in ``r``.

    Canonical form: ``gcd(num, den) = 1`` over Q[r], the leading coefficient
    of ``den`` is positive and the integer coefficients of ``num`` and ``den``
    have no common factor. The zero function is ``0/1``.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=(), den=(1,), *, _canonical=False):
        num, den = _trim(num), _trim(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not _canonical:
            num, den = _canonicalize(num, den)
        self.num = num
        self.den = den
        self._hash = None

    # constructors ---------------------------------------------------------

    @classmethod
    def constant(cls, value) -> "RationalFunction":
        q = Fraction(value)
        if q == 0:
            return ZERO
        return cls((q.numerator,), (q.denominator,), _canonical=True)

    @classmethod
    def polynomial(cls, coeffs) -> "RationalFunction":
        return cls(coeffs, (1,))

    # predicates -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def is_polynomial(self) -> bool:
        return len(self.den) == 1

    def is_constant(self) -> bool:
        return len(self.num) <= 1 and len(self.den) == 1

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return Fraction(self.num[0] if self.num else 0, self.den[0])

    def polynomial_coefficients(self) -> tuple[Fraction, ...]:
        """Coefficients (ascending) of a polynomial-valued function."""
        if not self.is_polynomial():
            raise ValueError(f"{self} is not a polynomial")
        d = self.den[0]
        return tuple(Fraction(c, d) for c in self.num)

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self.num:
            return other
        if not other.num:
            return self
        if self.den == other.den:
            return RationalFunction(_padd(self.num, other.num), self.den)
        return RationalFunction(
            _padd(_pmul(self.num, other.den), _pmul(other.num, self.den)),
            _pmul(self.den, other.den),
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(_pneg(self.num), self.den, _canonical=True)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self.num or not other.num:
            return ZERO
        if len(self.den) == 1 and len(other.den) == 1 and self.den[0] == 1 == other.den[0]:
            return RationalFunction(_pmul(self.num, other.num), (1,), _canonical=True)
        return RationalFunction(_pmul(self.num, other.num), _pmul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not other.num:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(_pmul(self.num, other.den), _pmul(self.den, other.num))

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return ONE / (self ** (-k))
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # comparison / hashing -------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self == RationalFunction.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __bool__(self):
        return bool(self.num)

    def leading_sign(self) -> int:
        """Sign of the numerator's leading coefficient (0 for zero)."""
        if not self.num:
            return 0
        return 1 if self.num[-1] > 0 else -1

    # text -----------------------------------------------------------------

    def __str__(self):
        n = _poly_str(self.num)
        if self.den == (1,):
            return n
        d = _poly_str(self.den)
        if _nterms(self.num) > 1:
            n = f"({n})"
        if _nterms(self.den) > 1 or (len(self.den) > 1 and self.den[-1] != 1):
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self):
        return f"RationalFunction({str(self)!r})"

    def needs_parens(self) -> bool:
        """True when the printed form must be wrapped before a ``*``."""
        return self.den == (1,) and _nterms(self.num) > 1


def _canonicalize(num, den):
    if not num:
        return (), (1,)
    if len(den) == 1 and len(num) >= 1:
        g = _content(num)
        g = math.gcd(g, den[0])
        if den[0] < 0:
            g = -g
        return tuple(x // g for x in num), (den[0] // g,)
    g = _prem_gcd(num, den)
    if len(g) > 1:
        num = _pexact_div(num, g)
        den = _pexact_div(den, g)
    c = math.gcd(_content(num), _content(den))
    if den[-1] < 0:
        c = -c
    return tuple(x // c for x in num), tuple(x // c for x in den)


def _coerce(x):
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, (int, Fraction)):
        return RationalFunction.constant(x)
    return NotImplemented


ZERO = RationalFunction((), (1,), _canonical=True)
ONE = RationalFunction((1,), (1,), _canonical=True)
R = RationalFunction((0, 1), (1,), _canonical=True)


def as_rational(x) -> Fraction:
    if isinstance(x, RationalFunction):
        return x.constant_value()
    if isinstance(x, str):
        return as_rational_function(x).constant_value()
    return Fraction(x)


def as_rational_function(x) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, str):
        return parse_rational_function(x)
    return RationalFunction.constant(x)


def specialize(f: RationalFunction, a) -> Fraction:
    """Evaluate ``f`` at ``r = a`` exactly; raises :class:`PoleError` at a pole."""
    a = Fraction(a)
    d = _peval(f.den, a)
    if d == 0:
        raise PoleError(f"{f} has a pole at r = {a}")
    return _peval(f.num, a) / d


# ---------------------------------------------------------------------------
# parser: integers, r, + - * / ^ and parentheses

_TOKEN = re.compile(r"\s*(?:(\d+)|(r)|(\*\*|[-+*/^()]))")


def _tokenize(text: str):
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        if m.group(1):
            out.append(("int", int(m.group(1))))
        elif m.group(2):
            out.append(("r", None))
        else:
            op = m.group(3)
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens):
        self.toks = tokens
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, op=None):
        tok = self.peek()
        if tok[0] is None or (op is not None and tok != ("op", op)):
            raise ValueError(f"expected {op or 'token'}, found {tok[1]!r}")
        self.i += 1
        return tok

    def expr(self):
        v = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            v = v + rhs if op == "+" else v - rhs
        return v

    def term(self):
        v = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            rhs = self.unary()
            v = v * rhs if op == "*" else v / rhs
        return v

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            sign = 1
            if self.peek() == ("op", "-"):
                self.take()
                sign = -1
            kind, val = self.take()
            if kind != "int":
                raise ValueError("exponent must be an integer literal")
            return base ** (sign * val)
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "int":
            return RationalFunction.constant(val)
        if kind == "r":
            return R
        if val == "(":
            v = self.expr()
            self.take(")")
            return v
        raise ValueError(f"unexpected token {val!r}")


def parse_rational_function(text: str) -> RationalFunction:
    """Parse e.g. ``"(r^2 - 1)/(2*r + 2)"``; inverse of ``str``."""
    p = _Parser(_tokenize(text))
    if not p.toks:
        raise ValueError("empty expression")
    v = p.expr()
    if p.i != len(p.toks):
        raise ValueError(f"trailing input after position {p.i}")
    return v
