"""Bi-U-invariant functions on GL_2(Q_p) under convolution.

Haar measure is normalized by ``mu(U) = 1`` at the level ``U`` of the
functions involved, so ``1_U`` is the unit and

    (f1 * f2)(g) = sum_j f1(g y_j^-1) f2(y_j)

over right-coset representatives ``U y_j`` of the support of ``f2``.
Double cosets are stored by canonical representatives: ``diag(p^a, p^b)``
(``a <= b``) at level K, the monomial matrix of the affine Weyl group
element indexing ``I w I`` at level I.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .. import weyl
from .core import GL2Element, Level, PadicContext, cartan_exponents, iwahori_reduce, pi_matrix, weyl_matrix
from .cosets import DEFAULT_SPREAD_BOUND, decompose, left_coset_reps

__all__ = [
    "BiInvariantFunction",
    "canonical_double_coset",
    "indicator",
    "unit_idempotent",
    "convolve",
    "l1_norm",
    "iwahori_relation_check",
    "HAAR_NOTE",
]

HAAR_NOTE = "Haar measure normalized so that mu(U) = 1 for the level subgroup U"


def _weyl_candidates(a: int, b: int):
    swap = weyl.simple_reflection(2, 1)
    out = []
    for lam in {(a, b), (b, a)}:
        t = weyl.translation(lam)
        out += [t, weyl.multiply(t, swap)]
    return sorted(out, key=lambda w: (w.lam, w.sigma.images))


@lru_cache(maxsize=1 << 14)
def _canonical(g: GL2Element, level: Level, p: int):
    a, b = cartan_exponents(g, p)
    if level is Level.MAXIMAL_COMPACT:
        return GL2Element(Fraction(p) ** a, 0, 0, Fraction(p) ** b), None
    rep = iwahori_reduce(g, p)
    hits = [w for w in _weyl_candidates(a, b) if weyl_matrix(w, p) == rep]
    if len(hits) != 1:
        raise AssertionError(f"no affine Weyl element matches the reduction {rep} of {g}")
    return rep, hits[0]


def canonical_double_coset(g: GL2Element, level, p: int, bound: int = DEFAULT_SPREAD_BOUND):
    """``(rep, w)``: canonical representative of ``U g U`` and, at level I, its Weyl element.

    ``bound`` is accepted for signature compatibility; canonicalization needs no enumeration.
    """
    return _canonical(g, Level.parse(level), p)


@dataclass(frozen=True)
class BiInvariantFunction:
    """Finite sum of ``value * 1_{U rep U}`` over distinct double cosets."""

    ctx: PadicContext
    level: Level
    terms: tuple[tuple[GL2Element, Fraction], ...]
    bound: int = field(default=DEFAULT_SPREAD_BOUND, compare=False)

    @classmethod
    def from_terms(cls, ctx: PadicContext, level, terms, bound: int = DEFAULT_SPREAD_BOUND) -> "BiInvariantFunction":
        """Canonicalize representatives, merging terms that share a double coset."""
        level = Level.parse(level)
        acc: dict = {}
        for g, v in terms:
            rep, _ = canonical_double_coset(g, level, ctx.p, bound)
            acc[rep] = acc.get(rep, Fraction(0)) + Fraction(v)
        items = [(g, v) for g, v in acc.items() if v != 0]
        items.sort(key=lambda t: _sort_key(t[0], level, ctx.p, bound))
        return cls(ctx, level, tuple(items), bound)

    def as_dict(self) -> dict:
        return dict(self.terms)

    def __call__(self, x: GL2Element) -> Fraction:
        rep, _ = _canonical(x, self.level, self.ctx.p)
        for g, v in self.terms:
            if g == rep:
                return v
        return Fraction(0)

    def _check(self, other):
        if not isinstance(other, BiInvariantFunction):
            raise TypeError("expected a BiInvariantFunction")
        if other.ctx != self.ctx or other.level != self.level:
            raise ValueError("functions live at different primes or levels")

    def __add__(self, other):
        self._check(other)
        return BiInvariantFunction.from_terms(self.ctx, self.level, self.terms + other.terms, self.bound)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "BiInvariantFunction":
        c = Fraction(c)
        if c == 0:
            return BiInvariantFunction(self.ctx, self.level, (), self.bound)
        return BiInvariantFunction(self.ctx, self.level, tuple((g, c * v) for g, v in self.terms), self.bound)

    def __rmul__(self, c):
        return self.scale(c)

    def __mul__(self, other):
        if isinstance(other, BiInvariantFunction):
            return convolve(self, other)
        return self.scale(other)

    def labels(self) -> list[str]:
        out = []
        for g, _ in self.terms:
            rep, w = canonical_double_coset(g, self.level, self.ctx.p, self.bound)
            if w is None:
                a, b = cartan_exponents(g, self.ctx.p)
                out.append(f"K diag(p^{a}, p^{b}) K")
            else:
                out.append(f"I [{weyl.format_word_form(w)}] I")
        return out

    def to_json(self) -> dict:
        return {
            "p": self.ctx.p,
            "level": self.level.value,
            "terms": [{"rep": g.to_json(), "value": [v.numerator, v.denominator]} for g, v in self.terms],
        }

    @classmethod
    def from_json(cls, obj: dict, bound: int = DEFAULT_SPREAD_BOUND) -> "BiInvariantFunction":
        ctx = PadicContext(int(obj["p"]))
        level = Level.parse(obj["level"])
        terms = []
        for t in obj["terms"]:
            num, den = t["value"]
            terms.append((GL2Element.from_json(t["rep"]), Fraction(int(num), int(den))))
        return cls.from_terms(ctx, level, terms, bound)


def _sort_key(g, level, p, bound):
    rep, w = canonical_double_coset(g, level, p, bound)
    if w is None:
        return cartan_exponents(g, p), ()
    k, word = weyl.reduced_word(w)
    return (len(word), k), word


def indicator(ctx: PadicContext, level, g: GL2Element, bound: int = DEFAULT_SPREAD_BOUND) -> BiInvariantFunction:
    return BiInvariantFunction.from_terms(ctx, level, [(g, 1)], bound)


def unit_idempotent(ctx: PadicContext, level="K") -> BiInvariantFunction:
    """``e = 1_U / mu(U)`` for the trivial representation of ``U`` (here ``mu(U) = 1``)."""
    return indicator(ctx, level, GL2Element.identity())


def convolve(f1: BiInvariantFunction, f2: BiInvariantFunction) -> BiInvariantFunction:
    f1._check(f2)
    p, level, bound = f1.ctx.p, f1.level, f1.bound
    candidates: dict = {}
    for h1, _ in f1.terms:
        for h2, _ in f2.terms:
            for x in left_coset_reps(level, h2, p, bound):
                rep, _ = canonical_double_coset(h1 * x, level, p, bound)
                candidates.setdefault(rep, None)
    right = [(decompose(level, h2, p, bound).reps, v2) for h2, v2 in f2.terms]
    out = []
    for c in candidates:
        total = Fraction(0)
        for reps, v2 in right:
            total += v2 * sum((f1(c * y.inverse()) for y in reps), Fraction(0))
        out.append((c, total))
    return BiInvariantFunction.from_terms(f1.ctx, level, out, bound)


def l1_norm(f: BiInvariantFunction) -> Fraction:
    """``sum |value| * [U rep U : U]`` with ``mu(U) = 1``."""
    return sum(
        (abs(v) * len(decompose(f.level, g, f.ctx.p, f.bound)) for g, v in f.terms),
        Fraction(0),
    )


def iwahori_relation_check(p: int) -> dict:
    """Quadratic relation, invertibility of ``1_{Pi I}`` and centrality of its square at Iwahori level."""
    ctx = PadicContext(p)
    lev = Level.IWAHORI
    one = unit_idempotent(ctx, lev)
    s = GL2Element(0, 1, 1, 0)
    pi = pi_matrix(p)
    Ts = indicator(ctx, lev, s)
    Tpi = indicator(ctx, lev, pi)
    Tpi_inv = indicator(ctx, lev, pi.inverse())

    sq = convolve(Ts, Ts)
    c_s, c_1 = sq(s), sq(GL2Element.identity())
    quadratic = sq == Ts.scale(p - 1) + one.scale(p)
    inverse_ok = convolve(Tpi, Tpi_inv) == one and convolve(Tpi_inv, Tpi) == one
    Tpi2 = convolve(Tpi, Tpi)
    rotation = convolve(Tpi2, Ts) == convolve(Ts, Tpi2)
    checks = [
        {"check": "1_IsI * 1_IsI = (p-1) 1_IsI + p 1_I", "passed": quadratic},
        {"check": "1_PiI * 1_Pi^-1I = 1_I = 1_Pi^-1I * 1_PiI", "passed": inverse_ok},
        {"check": "1_PiI^2 * 1_IsI = 1_IsI * 1_PiI^2", "passed": rotation},
    ]
    return {
        "p": p,
        "level": lev.value,
        "haar": HAAR_NOTE,
        "coset_counts": {"IsI": len(decompose(lev, s, p)), "IPiI": len(decompose(lev, pi, p))},
        "structure_constants": {"r-1": str(c_s), "r": str(c_1)},
        "checks": checks,
        "passed": all(c["passed"] for c in checks),
    }
