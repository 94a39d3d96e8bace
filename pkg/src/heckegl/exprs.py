"""One parser for scalars, Hecke elements ``T[...]`` and group-algebra elements ``G[...]``.

    (r - 1) * T[Pi^0; 1] + r * T[Pi^0;]
    1/2 * G[Pi^1; 1 0] - G[t(0,1)*perm[2,1]]

Inside the brackets either ``Pi^k; i1 i2 ...`` (a reduced or unreduced word in
the simple reflections) or the translation form accepted by
:func:`heckegl.weyl.parse_element`.
"""

from __future__ import annotations

import re

from . import group_algebra, hecke, weyl
from .scalars import R, RationalFunction, _Parser

__all__ = ["parse_expression", "parse_basis_label"]

_SCALAR = re.compile(r"\s*(?:(\d+)|(r)|(\*\*|[-+*/^()]))")
_BASIS_OPEN = re.compile(r"\s*([TG])\[")
_WORDFORM = re.compile(r"^\s*Pi\^(-?\d+)\s*;\s*([\d\s]*)$")


def parse_basis_label(body: str, rank: int) -> weyl.ExtAffineWeylElement:
    m = _WORDFORM.match(body)
    if m:
        word = [int(x) for x in m.group(2).split()]
        if any(not 0 <= i < rank for i in word) or (word and rank < 2):
            raise ValueError(f"reflection index out of range for rank {rank}: {word}")
        return weyl.from_word(rank, int(m.group(1)), word)
    return weyl.parse_element(body, rank)


def _tokenize(text: str):
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _BASIS_OPEN.match(text, pos)
        if m:
            depth, j = 1, m.end()
            while j < len(text) and depth:
                depth += {"[": 1, "]": -1}.get(text[j], 0)
                j += 1
            if depth:
                raise ValueError("unterminated basis bracket")
            out.append(("basis", (m.group(1), text[m.end():j - 1])))
            pos = j
            continue
        m = _SCALAR.match(text, pos)
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


class _ElementParser(_Parser):
    def __init__(self, tokens, rank, param):
        super().__init__(tokens)
        self.rank = rank
        self.param = param
        self.kinds = set()

    def atom(self):
        kind, val = self.peek()
        if kind == "basis":
            self.take()
            marker, body = val
            self.kinds.add(marker)
            w = parse_basis_label(body, self.rank)
            if marker == "T":
                return hecke.from_basis(w, self.param)
            return group_algebra.basis(w)
        return super().atom()


def parse_expression(text: str, rank: int, param: RationalFunction = R):
    """Evaluate an expression; returns a RationalFunction, HeckeElement or GroupAlgebraElement."""
    p = _ElementParser(_tokenize(text), rank, param)
    if not p.toks:
        raise ValueError("empty expression")
    try:
        v = p.expr()
    except TypeError as exc:
        raise ValueError(f"ill-typed expression: {exc}") from exc
    if p.i != len(p.toks):
        raise ValueError(f"trailing input in {text!r}")
    if p.kinds == {"T", "G"}:
        raise ValueError("expression mixes T[...] and G[...] basis elements")
    return v
