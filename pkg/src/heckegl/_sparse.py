"""Shared machinery for sparse linear combinations of Weyl group elements."""

from __future__ import annotations

from fractions import Fraction

from . import weyl
from .scalars import ONE, RationalFunction, as_rational_function


def _is_scalar(x) -> bool:
    return isinstance(x, (RationalFunction, int, Fraction))


def term_sort_key(w: weyl.ExtAffineWeylElement):
    k, word = weyl.reduced_word(w)
    return (len(word), k, word)


class SparseElement:
    """Finite sum ``sum c_w B_w`` with nonzero :class:`RationalFunction` coefficients.

    Values are immutable; arithmetic returns new elements.
    """

    __slots__ = ("rank", "_terms")
    marker = "?"

    def __init__(self, rank: int, terms=None):
        self.rank = rank
        clean = {}
        for w, c in (terms or {}).items():
            if w.rank != rank:
                raise weyl.RankMismatchError(f"term of rank {w.rank} in rank-{rank} element")
            c = as_rational_function(c)
            if c:
                clean[w] = c
        self._terms = clean

    # subclasses override -------------------------------------------------

    def _new(self, terms):
        return type(self)(self.rank, terms)

    def _check_compatible(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.rank != self.rank:
            raise weyl.RankMismatchError(f"rank {self.rank} vs {other.rank}")

    def _multiply(self, other):
        raise NotImplementedError

    # access ----------------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, w) -> RationalFunction:
        return self._terms.get(w, RationalFunction.constant(0))

    def support(self):
        return set(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    # linear structure ------------------------------------------------------

    def __add__(self, other):
        if _is_scalar(other):
            other = self._new({weyl.identity(self.rank): as_rational_function(other)})
        elif not isinstance(other, SparseElement):
            return NotImplemented
        self._check_compatible(other)
        out = dict(self._terms)
        for w, c in other._terms.items():
            out[w] = out[w] + c if w in out else c
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        return self._new({w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        if _is_scalar(other) or isinstance(other, SparseElement):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = as_rational_function(c)
        if not c:
            return self._new({})
        return self._new({w: c * x for w, x in self._terms.items()})

    def __mul__(self, other):
        if _is_scalar(other):
            return self.scale(other)
        if not isinstance(other, SparseElement):
            return NotImplemented
        self._check_compatible(other)
        return self._multiply(other)

    def __rmul__(self, other):
        if _is_scalar(other):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if _is_scalar(other):
            return self.scale(ONE / as_rational_function(other))
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers of algebra elements")
        out = self._new({weyl.identity(self.rank): ONE})
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if _is_scalar(other):
            other = self._new({weyl.identity(self.rank): as_rational_function(other)})
        if type(other) is not type(self):
            return NotImplemented
        return self.rank == other.rank and self._terms == other._terms and self._eq_extra(other)

    def _eq_extra(self, other) -> bool:
        return True

    __hash__ = None

    def map_coefficients(self, fn):
        return self._new({w: fn(c) for w, c in self._terms.items()})

    # text ------------------------------------------------------------------

    def basis_label(self, w) -> str:
        k, word = weyl.reduced_word(w)
        return f"{self.marker}[Pi^{k}; {' '.join(str(i) for i in word)}]".replace("; ]", ";]")

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for w in sorted(self._terms, key=term_sort_key):
            c = self._terms[w]
            neg = c.leading_sign() < 0
            mag = -c if neg else c
            cs = f"({mag})" if mag.needs_parens() else str(mag)
            body = f"{cs} * {self.basis_label(w)}"
            if not out:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return f"{type(self).__name__}(rank={self.rank}, {str(self)!r})"

    def to_json(self) -> list:
        return [
            {"basis": self.basis_label(w), "coeff": str(self._terms[w])}
            for w in sorted(self._terms, key=term_sort_key)
        ]
