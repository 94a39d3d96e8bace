"""Group algebras C[W_n] of extended affine Weyl groups.

``C[W_1]`` is the Laurent polynomial ring in one variable (``W_1 = Z``); the
two-variable Laurent ring is represented as pairs of rank-1 elements.

Words in the quotient ``C[S, T, T^-1] / <S^2 - 1, T^2 S - S T^2>`` are
brought to the normal form ``T^(2a) * w`` where ``w`` alternates the letters
``S`` and ``T`` (``T^2`` is central and ``S^2 = 1``, so any word reduces to
this shape).
"""

from __future__ import annotations

import itertools

from . import weyl
from ._sparse import SparseElement
from .scalars import ONE, R

__all__ = [
    "GroupAlgebraElement",
    "basis",
    "unit",
    "s_bar",
    "quotient_normal_form",
    "word_image",
    "presentation_check_rank2",
]


class GroupAlgebraElement(SparseElement):
    __slots__ = ()
    marker = "G"

    def _multiply(self, other):
        out: dict = {}
        for x, a in self._terms.items():
            for y, b in other._terms.items():
                w = weyl.multiply(x, y)
                c = a * b
                out[w] = out[w] + c if w in out else c
        return self._new(out)


def basis(w: weyl.ExtAffineWeylElement) -> GroupAlgebraElement:
    return GroupAlgebraElement(w.rank, {w: ONE})


def unit(n: int) -> GroupAlgebraElement:
    return basis(weyl.identity(n))


def s_bar(n: int, i: int, param=R) -> GroupAlgebraElement:
    """``((r+1)/2) s_i + (r-1)/2``: the deformed reflection satisfying the quadratic relation."""
    return basis(weyl.simple_reflection(n, i)) * ((param + 1) / 2) + (param - 1) / 2


# ---------------------------------------------------------------------------
# the presentation <S, T | S^2, T^2 S = S T^2>


def quotient_normal_form(word: str) -> tuple[int, str]:
    """Normal form ``(a, w)`` meaning ``T^(2a) w`` of a word over ``S``, ``T``, ``t = T^-1``."""
    a = 0
    stack: list[str] = []
    for letter in word:
        if letter == "t":
            a -= 1  # T^-1 = T^-2 T
            letter = "T"
        if letter not in "ST":
            raise ValueError(f"bad letter {letter!r}")
        if stack and stack[-1] == letter:
            stack.pop()
            if letter == "T":
                a += 1
        else:
            stack.append(letter)
    return a, "".join(stack)


def word_image(word: str) -> weyl.ExtAffineWeylElement:
    """Group element of ``W_2`` under ``S -> s_1``, ``T -> Pi``."""
    gens = {
        "S": weyl.simple_reflection(2, 1),
        "T": weyl.pi_element(2),
        "t": weyl.inverse(weyl.pi_element(2)),
    }
    out = weyl.identity(2)
    for letter in word:
        out = weyl.multiply(out, gens[letter])
    return out


def _normal_form_image(a: int, w: str) -> weyl.ExtAffineWeylElement:
    return weyl.multiply(weyl.power(weyl.pi_element(2), 2 * a), word_image(w))


def presentation_check_rank2(max_len: int = 6) -> dict:
    """Relations of the quotient presentation vanish in C[W_2]; bounded injectivity evidence."""
    S = basis(weyl.simple_reflection(2, 1))
    T = basis(weyl.pi_element(2))
    rel_S = S * S - unit(2)
    rel_T = T * T * S - S * T * T

    classes: dict = {}
    consistent = True
    n_words = 0
    for length in range(max_len + 1):
        for letters in itertools.product("STt", repeat=length):
            word = "".join(letters)
            n_words += 1
            nf = quotient_normal_form(word)
            img = word_image(word)
            if nf in classes:
                consistent &= classes[nf] == img
            else:
                classes[nf] = img
                consistent &= _normal_form_image(*nf) == img
    images = list(classes.values())
    injective = len(set(images)) == len(images)
    checks = [
        {"check": "S^2 - 1 -> 0", "passed": rel_S.is_zero()},
        {"check": "T^2 S - S T^2 -> 0", "passed": rel_T.is_zero()},
        {"check": "words with equal normal form have equal images", "passed": bool(consistent)},
        {"check": "distinct normal forms have distinct images", "passed": injective},
    ]
    return {
        "max_word_length": max_len,
        "words": n_words,
        "normal_forms": len(classes),
        "checks": checks,
        "passed": all(c["passed"] for c in checks),
    }
