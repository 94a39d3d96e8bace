"""Seeded random elements for property checks."""

from __future__ import annotations

import random
from fractions import Fraction

from . import group_algebra, weyl
from .hecke import HeckeElement
from .scalars import R, RationalFunction


def random_coefficient(rng: random.Random) -> RationalFunction:
    """Small nonzero coefficient: an integer, ``a r + b``, or such over a small integer."""
    kind = rng.randrange(3)
    a = rng.choice([x for x in range(-3, 4) if x])
    if kind == 0:
        return RationalFunction.constant(a)
    b = rng.randrange(-3, 4)
    lin = R * a + b
    if kind == 1:
        return lin
    return lin / rng.choice([2, 3, 5])


def random_weyl_element(rng: random.Random, n: int, max_len: int, pi_range: int = 1) -> weyl.ExtAffineWeylElement:
    word = [rng.randrange(n) for _ in range(rng.randint(0, max_len))] if n >= 2 else []
    w = weyl.power(weyl.pi_element(n), rng.randint(-pi_range, pi_range))
    # length never exceeds the word length, reduced or not
    for i in word:
        w = weyl.multiply(w, weyl.simple_reflection(n, i))
    return w


def random_hecke_element(rng, m: int, max_len: int, n_terms: int = 3, pi_range: int = 1, param=R) -> HeckeElement:
    terms = {}
    for _ in range(n_terms):
        w = random_weyl_element(rng, m, max_len, pi_range)
        terms[w] = random_coefficient(rng)
    return HeckeElement(m, terms, param)


def random_group_element(rng, n: int, max_len: int, n_terms: int = 3, pi_range: int = 1):
    terms = {}
    for _ in range(n_terms):
        terms[random_weyl_element(rng, n, max_len, pi_range)] = random_coefficient(rng)
    return group_algebra.GroupAlgebraElement(n, terms)


def random_fraction(rng: random.Random, lo: int = -5, hi: int = 5) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, 4))
