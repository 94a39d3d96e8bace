"""Exact affine Hecke algebras of GL_n, the rank-two group-algebra isomorphism,
Bernstein block descriptors and p-adic convolution for GL_2."""

from . import bernstein, group_algebra, hecke, iso, padic, scalars, weyl
from .exprs import parse_expression
from .group_algebra import GroupAlgebraElement
from .hecke import HeckeElement
from .scalars import R, RationalFunction
from .weyl import ExtAffineWeylElement, Permutation

__version__ = "0.1.0"

__all__ = [
    "bernstein",
    "group_algebra",
    "hecke",
    "iso",
    "padic",
    "scalars",
    "weyl",
    "parse_expression",
    "GroupAlgebraElement",
    "HeckeElement",
    "R",
    "RationalFunction",
    "ExtAffineWeylElement",
    "Permutation",
]
