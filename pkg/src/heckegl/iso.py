"""The isomorphism H(2, r) -> C[W_2] and the rank-3 braid obstruction.

``phi`` sends ``T_{s_1}`` to ``s1bar = ((r+1)/2) s_1 + (r-1)/2`` and ``T_Pi``
to ``Pi``; the image of ``T_{s_0}`` follows by conjugating with ``Pi``.
The inverse sends ``s_1`` to ``(2/(r+1)) T_{s_1} - (r-1)/(r+1)``, which is
why ``r = -1`` is excluded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import group_algebra as ga
from . import hecke, weyl
from .hecke import HeckeElement
from .group_algebra import GroupAlgebraElement
from .scalars import ONE, R, RationalFunction, as_rational, specialize

__all__ = ["IsoContext", "phi", "phi_inverse", "braid_obstruction"]


@dataclass(frozen=True)
class IsoContext:
    """``value=None`` means generic ``r``; otherwise ``r`` is specialized to ``value``."""

    value: Fraction | None = None

    def __post_init__(self):
        if self.value is not None:
            v = as_rational(self.value)
            if v == -1:
                raise ValueError("the isomorphism H(2, r) = C[W_2] requires r != -1")
            object.__setattr__(self, "value", v)

    @property
    def mode(self) -> str:
        return "generic" if self.value is None else "specialized"

    @property
    def param(self) -> RationalFunction:
        return R if self.value is None else RationalFunction.constant(self.value)

    def coerce_hecke(self, a: HeckeElement) -> HeckeElement:
        if a.param == self.param:
            return a
        if self.value is not None and a.param == R:
            return hecke.specialize_element(a, self.value)
        raise ValueError(f"element lives in H(2, {a.param}), context is H(2, {self.param})")

    def coerce_group(self, b: GroupAlgebraElement) -> GroupAlgebraElement:
        if self.value is None:
            return b
        return b.map_coefficients(lambda c: RationalFunction.constant(specialize(c, self.value)))


@lru_cache(maxsize=4096)
def _phi_basis(w: weyl.ExtAffineWeylElement, q: RationalFunction) -> GroupAlgebraElement:
    k, word = weyl.reduced_word(w)
    pi = ga.basis(weyl.pi_element(2))
    pi_inv = ga.basis(weyl.inverse(weyl.pi_element(2)))
    s1 = ga.s_bar(2, 1, q)
    images = {1: s1, 0: pi * s1 * pi_inv}
    out = ga.basis(weyl.power(weyl.pi_element(2), k))
    for i in word:
        out = out * images[i]
    return out


def phi(ctx: IsoContext, a: HeckeElement) -> GroupAlgebraElement:
    if a.rank != 2:
        raise weyl.RankMismatchError("phi is defined on H(2, r)")
    a = ctx.coerce_hecke(a)
    out = GroupAlgebraElement(2, {})
    for w, c in a.items():
        out = out + _phi_basis(w, ctx.param) * c
    return out


@lru_cache(maxsize=4096)
def _phi_inv_basis(w: weyl.ExtAffineWeylElement, q: RationalFunction) -> HeckeElement:
    k, word = weyl.reduced_word(w)
    T = hecke.generator_T(2, q)
    T_inv = hecke.generator_T_inv(2, q)
    s1 = hecke.generator_S(2, 1, q) * (2 / (q + 1)) - (q - 1) / (q + 1)
    images = {1: s1, 0: T * s1 * T_inv}
    out = hecke.from_basis(weyl.power(weyl.pi_element(2), k), q)
    for i in word:
        out = out * images[i]
    return out


def phi_inverse(ctx: IsoContext, b: GroupAlgebraElement) -> HeckeElement:
    if b.rank != 2:
        raise weyl.RankMismatchError("phi_inverse is defined on C[W_2]")
    b = ctx.coerce_group(b)
    out = HeckeElement(2, {}, ctx.param)
    for w, c in b.items():
        out = out + _phi_inv_basis(w, ctx.param) * c
    return out


def braid_obstruction(r=None) -> GroupAlgebraElement:
    """``s1bar s2bar s1bar - s2bar s1bar s2bar`` in C[W_3]; zero iff the naive map respects the braid relation."""
    q = R if r is None else RationalFunction.constant(as_rational(r))
    a, b = ga.s_bar(3, 1, q), ga.s_bar(3, 2, q)
    return a * b * a - b * a * b
