"""Right-coset decompositions ``U g U = U y_1 u ... u U y_k``."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .core import GL2Element, Level, right_coset_key, valuation
from ._kernels import active_backend, enumerate_coset_keys

__all__ = [
    "CosetBoundError",
    "CosetDecomposition",
    "DEFAULT_SPREAD_BOUND",
    "congruence_level",
    "right_coset_reps",
    "left_coset_reps",
    "decompose",
    "validate_decomposition",
]

DEFAULT_SPREAD_BOUND = 4


class CosetBoundError(ValueError):
    pass


@dataclass(frozen=True)
class CosetDecomposition:
    level: Level
    p: int
    g: GL2Element
    congruence_level: int
    reps: tuple[GL2Element, ...]
    keys: frozenset

    def __len__(self):
        return len(self.reps)

    def contains(self, y: GL2Element) -> bool:
        return right_coset_key(y, self.level, self.p) in self.keys


def _spread(g: GL2Element, p: int) -> int:
    vmin = min(valuation(x, p) for x in g.entries())
    return valuation(g.det, p) - 2 * vmin


def congruence_level(g: GL2Element, p: int) -> int:
    """``m`` such that ``g K(p^m) g^-1`` lies in the Iwahori subgroup.

    ``1 + v(det g) - 2 min v(entries)``; for monomial ``g`` this is one more
    than the valuation spread of its entries.
    """
    return 1 + _spread(g, p)


def _integral_scaling(g: GL2Element, p: int):
    """Integer matrix ``G = s g`` with ``s`` central, entries coprime-to-p scaled, min valuation 0."""
    vmin = min(valuation(x, p) for x in g.entries())
    unit_den = 1
    for x in g.entries():
        den = x.denominator
        while den % p == 0:
            den //= p
        unit_den = unit_den * den // math.gcd(unit_den, den)
    s = Fraction(unit_den) * Fraction(p) ** (-vmin)
    G = g.scaled(s)
    assert all(x.denominator == 1 for x in G.entries())
    return G


def _sample_transversal(rng: random.Random, p: int, m: int, level: Level) -> GL2Element:
    q = p**m
    while True:
        a, b, c, d = (rng.randrange(q) for _ in range(4))
        if level is Level.IWAHORI:
            c -= c % p
        if (a * d - b * c) % p:
            return GL2Element(a, b, c, d)


def validate_decomposition(dec: CosetDecomposition, samples: int = 200, seed: int = 0) -> None:
    """Raise if representatives collide or a sampled ``g u`` misses every found coset."""
    keys = [right_coset_key(y, dec.level, dec.p) for y in dec.reps]
    if len(set(keys)) != len(keys):
        raise AssertionError("coset representatives are not pairwise inequivalent")
    rng = random.Random(seed)
    for _ in range(samples):
        u = _sample_transversal(rng, dec.p, dec.congruence_level, dec.level)
        if not dec.contains(dec.g * u):
            raise AssertionError(f"sample {dec.g * u} lies in no enumerated coset")


@lru_cache(maxsize=2048)
def _decompose_cached(g: GL2Element, level: Level, p: int, bound: int, backend: str) -> CosetDecomposition:
    spread = _spread(g, p)
    if spread > bound:
        raise CosetBoundError(f"valuation spread {spread} of {g} exceeds bound {bound}")
    m = 1 + spread
    G = _integral_scaling(g, p)
    N = valuation(G.det, p) + 2
    M = p**N
    Gmod = np.array([int(x) % M for x in G.entries()], dtype=np.int64)
    a, b, c, d = G.entries()
    monomial = (b == 0 and c == 0) or (a == 0 and d == 0)
    us = enumerate_coset_keys(Gmod, p, m, N, level is Level.IWAHORI, backend, normalized=monomial)
    reps = tuple(g * GL2Element(*(int(x) for x in row)) for row in us)
    keys = frozenset(right_coset_key(y, level, p) for y in reps)
    dec = CosetDecomposition(level, p, g, m, reps, keys)
    validate_decomposition(dec)
    return dec


def decompose(level, g: GL2Element, p: int, bound: int = DEFAULT_SPREAD_BOUND, backend: str | None = None) -> CosetDecomposition:
    return _decompose_cached(g, Level.parse(level), p, bound, backend or active_backend())


def right_coset_reps(level, g: GL2Element, p: int, bound: int = DEFAULT_SPREAD_BOUND) -> list[GL2Element]:
    """Representatives ``y_j`` with ``U g U`` the disjoint union of the ``U y_j``."""
    return list(decompose(level, g, p, bound).reps)


def left_coset_reps(level, g: GL2Element, p: int, bound: int = DEFAULT_SPREAD_BOUND) -> list[GL2Element]:
    """Representatives ``x_j`` with ``U g U`` the disjoint union of the ``x_j U``."""
    return [y.inverse() for y in right_coset_reps(level, g.inverse(), p, bound)]
