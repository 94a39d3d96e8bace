"""GL_2(Q_p) with rational entries: valuations, level subgroups, coset keys.

A right coset ``K y`` (``K = GL_2(Z_p)``) is determined by the row lattice
``Z_p^2 y``; its Hermite normal form

    [[p^v, b], [0, p^d]],   b taken mod p^d,

is the canonical key. The Iwahori subgroup ``I`` (upper triangular mod p)
equals ``{k in K : Pi k Pi^-1 in K}`` with ``Pi = [[0, 1], [p, 0]]``, so
``I y = I y'`` iff ``K y = K y'`` and ``K Pi y = K Pi y'``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

__all__ = [
    "PadicContext",
    "GL2Element",
    "Level",
    "INF",
    "valuation",
    "in_subgroup",
    "coset_equal",
    "right_coset_key",
    "lattice_key",
    "pi_matrix",
    "weyl_matrix",
    "cartan_exponents",
]

INF = math.inf


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, math.isqrt(p) + 1))


@dataclass(frozen=True)
class PadicContext:
    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not _is_prime(self.p):
            raise ValueError(f"p must be a prime, got {self.p!r}")


class Level(Enum):
    MAXIMAL_COMPACT = "K"
    IWAHORI = "I"

    @classmethod
    def parse(cls, s) -> "Level":
        if isinstance(s, Level):
            return s
        for lev in cls:
            if s in (lev.value, lev.name, lev.name.lower()):
                return lev
        raise ValueError(f"unknown level {s!r}")


@dataclass(frozen=True, slots=True)
class GL2Element:
    """``[[a, b], [c, d]]`` with rational entries and nonzero determinant."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.det == 0:
            raise ValueError("singular matrix")

    @classmethod
    def of(cls, rows) -> "GL2Element":
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    @classmethod
    def identity(cls) -> "GL2Element":
        return cls(1, 0, 0, 1)

    @property
    def det(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    def entries(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    def __mul__(self, o: "GL2Element") -> "GL2Element":
        return GL2Element(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def inverse(self) -> "GL2Element":
        det = self.det
        return GL2Element(self.d / det, -self.b / det, -self.c / det, self.a / det)

    def scaled(self, s) -> "GL2Element":
        s = Fraction(s)
        return GL2Element(self.a * s, self.b * s, self.c * s, self.d * s)

    def __str__(self):
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"

    def to_json(self) -> list:
        return [[x.numerator, x.denominator] for x in self.entries()]

    @classmethod
    def from_json(cls, obj) -> "GL2Element":
        if len(obj) != 4:
            raise ValueError("matrix must have four [num, den] entries")
        return cls(*(Fraction(int(n), int(d)) for n, d in obj))


def _vint(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def valuation(x, p: int):
    """p-adic valuation of a rational; ``math.inf`` for zero."""
    x = Fraction(x)
    if x == 0:
        return INF
    return _vint(x.numerator, p) - _vint(x.denominator, p)


def in_subgroup(g: GL2Element, level: Level, p: int) -> bool:
    level = Level.parse(level)
    if any(valuation(x, p) < 0 for x in g.entries()) or valuation(g.det, p) != 0:
        return False
    if level is Level.IWAHORI:
        return valuation(g.c, p) >= 1
    return True


def coset_equal(g: GL2Element, h: GL2Element, level: Level, p: int, side: str = "right") -> bool:
    """``gU = hU`` (side="left") or ``Ug = Uh`` (side="right")."""
    if side == "left":
        return in_subgroup(g.inverse() * h, level, p)
    if side == "right":
        return in_subgroup(h * g.inverse(), level, p)
    raise ValueError("side must be 'left' or 'right'")


def pi_matrix(p: int) -> GL2Element:
    return GL2Element(0, 1, p, 0)


def _reduce_mod(b: Fraction, d: int, p: int) -> Fraction:
    """Canonical representative of ``b + p^d Z_p`` in ``Z[1/p] cap [0, p^d)``."""
    if b == 0 or valuation(b, p) >= d:
        return Fraction(0)
    k = _vint(b.denominator, p)
    rest = b.denominator // p**k
    mod = p ** (d + k)
    c = (b.numerator * pow(rest, -1, mod)) % mod
    return Fraction(c, p**k)


def lattice_key(y: GL2Element, p: int) -> tuple[int, int, Fraction]:
    """Hermite form ``(v, d, b)`` of the row lattice of ``y``; identifies ``GL_2(Z_p) y``."""
    rows = [(y.a, y.b), (y.c, y.d)]
    if valuation(rows[1][0], p) < valuation(rows[0][0], p):
        rows.reverse()
    (xi, yi), (xj, yj) = rows
    v = valuation(xi, p)
    unit = xi / Fraction(p) ** v
    b = yi / unit
    z = yj - (xj / xi) * yi
    d = valuation(z, p)
    return (v, d, _reduce_mod(b, d, p))


def right_coset_key(y: GL2Element, level: Level, p: int):
    level = Level.parse(level)
    if level is Level.MAXIMAL_COMPACT:
        return lattice_key(y, p)
    return (lattice_key(y, p), lattice_key(pi_matrix(p) * y, p))


def weyl_matrix(w, p: int) -> GL2Element:
    """Monomial matrix ``diag(p^lam) P_sigma`` of a rank-2 Weyl group element."""
    if w.rank != 2:
        raise ValueError("only rank-2 Weyl elements have GL_2 matrices")
    rows = [[Fraction(0)] * 2 for _ in range(2)]
    for j in (1, 2):
        i = w.sigma(j)
        rows[i - 1][j - 1] = Fraction(p) ** w.lam[i - 1]
    return GL2Element.of(rows)


def cartan_exponents(g: GL2Element, p: int) -> tuple[int, int]:
    """``(a, b)``, ``a <= b``, with ``g in K diag(p^a, p^b) K``."""
    a = min(valuation(x, p) for x in g.entries())
    return a, valuation(g.det, p) - a


def iwahori_reduce(g: GL2Element, p: int) -> GL2Element:
    """Monomial matrix with entries ``p^k`` in the Iwahori double coset ``I g I``.

    Gaussian elimination with Iwahori row and column operations: pick a pivot
    whose row and column can be cleared (entries below the diagonal may only
    absorb multiples from ``pZ_p``), clear them, then scale by units.
    """
    a, b, c, d = g.entries()
    va, vb, vc, vd = (valuation(x, p) for x in (a, b, c, d))
    m = min(va, vb, vc, vd)
    if vc == m:
        b, a, d = b - (a / c) * d, Fraction(0), Fraction(0)
    elif vb == m and vb < va and vb < vd:
        c, a, d = c - (a / b) * d, Fraction(0), Fraction(0)
    elif va == m:
        d, b, c = d - (b / a) * c, Fraction(0), Fraction(0)
    else:
        a, b, c = a - (b / d) * c, Fraction(0), Fraction(0)
    return GL2Element(*(Fraction(0) if x == 0 else Fraction(p) ** valuation(x, p) for x in (a, b, c, d)))
