"""Extended affine Weyl group of GL_n, stored as translation-times-permutation.

An element ``t_lam * sigma`` corresponds to the monomial matrix
``diag(w^lam) . P_sigma`` (``w`` a uniformiser, ``P_sigma e_j = e_sigma(j)``),
so multiplication here is matrix multiplication of those monomial matrices:

    (t_lam sigma)(t_mu tau) = t_{lam + sigma.mu} (sigma tau),
    (sigma.mu)_i = mu_{sigma^-1(i)}.

Permutations are 1-based image tuples.
"""

from __future__ import annotations

import os
import re
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "Permutation",
    "ExtAffineWeylElement",
    "RankMismatchError",
    "SearchRadiusExceeded",
    "identity",
    "translation",
    "simple_reflection",
    "pi_element",
    "special_elements",
    "multiply",
    "inverse",
    "power",
    "pi_power",
    "length",
    "length_bfs",
    "bfs_ball",
    "reduced_word",
    "from_word",
    "format_word_form",
    "format_translation_form",
    "parse_element",
]

DEFAULT_BFS_RADIUS = 12


class RankMismatchError(ValueError):
    pass


class SearchRadiusExceeded(RuntimeError):
    pass


@dataclass(frozen=True, slots=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if n < 1 or sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """``(self o other)(i) = self(other(i))``."""
        s = self.images
        return Permutation(tuple(s[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))


@dataclass(frozen=True, slots=True)
class ExtAffineWeylElement:
    """``t_lam * sigma`` in ``S_n |x Z^n``."""

    sigma: Permutation
    lam: tuple[int, ...]

    def __post_init__(self):
        if len(self.lam) != self.sigma.n:
            raise RankMismatchError("permutation and translation have different ranks")

    @property
    def rank(self) -> int:
        return len(self.lam)

    def __mul__(self, other):
        if not isinstance(other, ExtAffineWeylElement):
            return NotImplemented
        return multiply(self, other)

    def __str__(self):
        return format_translation_form(self)

    def matrix(self, uniformiser=None):
        """Monomial matrix as nested lists; entries ``uniformiser**lam_i``.

        With ``uniformiser=None`` the entries are the exponents themselves
        (``None`` marks a zero entry).
        """
        n = self.rank
        rows = [[None if uniformiser is None else 0] * n for _ in range(n)]
        for j in range(1, n + 1):
            i = self.sigma(j)
            lam = self.lam[i - 1]
            rows[i - 1][j - 1] = lam if uniformiser is None else uniformiser**lam
        return rows


def identity(n: int) -> ExtAffineWeylElement:
    return ExtAffineWeylElement(Permutation.identity(n), (0,) * n)


def translation(lam) -> ExtAffineWeylElement:
    lam = tuple(int(x) for x in lam)
    return ExtAffineWeylElement(Permutation.identity(len(lam)), lam)


def simple_reflection(n: int, i: int) -> ExtAffineWeylElement:
    """``s_i`` for ``1 <= i <= n-1``; ``s_0`` is ``Pi s_1 Pi^-1``."""
    if i == 0:
        return _s0(n)
    if not 1 <= i <= n - 1:
        raise ValueError(f"s_{i} undefined in rank {n}")
    im = list(range(1, n + 1))
    im[i - 1], im[i] = i + 1, i
    return ExtAffineWeylElement(Permutation(tuple(im)), (0,) * n)


@lru_cache(maxsize=None)
def pi_element(n: int) -> ExtAffineWeylElement:
    """Weyl image of the matrix with 1 at (i, i+1) and the uniformiser at (n, 1)."""
    if n < 1:
        raise ValueError("rank must be positive")
    # column i+1 -> row i, column 1 -> row n
    im = [n] + list(range(1, n))
    return ExtAffineWeylElement(Permutation(tuple(im)), (0,) * (n - 1) + (1,))


@lru_cache(maxsize=None)
def _s0(n: int) -> ExtAffineWeylElement:
    if n < 2:
        raise ValueError("s_0 needs rank >= 2")
    p = pi_element(n)
    return multiply(multiply(p, simple_reflection(n, 1)), inverse(p))


def special_elements(n: int) -> dict[str, ExtAffineWeylElement]:
    """``{"s0": .., "s1": .., ..., "Pi": ..}`` for rank ``n >= 2``."""
    if n < 2:
        raise ValueError("special elements need n >= 2")
    out = {f"s{i}": simple_reflection(n, i) for i in range(1, n)}
    out["s0"] = _s0(n)
    out["Pi"] = pi_element(n)
    return out


def multiply(a: ExtAffineWeylElement, b: ExtAffineWeylElement) -> ExtAffineWeylElement:
    if a.rank != b.rank:
        raise RankMismatchError(f"rank {a.rank} vs {b.rank}")
    s = a.sigma.images
    sinv = _inv_images(s)
    mu = b.lam
    lam = tuple(x + mu[sinv[i] - 1] for i, x in enumerate(a.lam))
    return ExtAffineWeylElement(Permutation(tuple(s[j - 1] for j in b.sigma.images)), lam)


def _inv_images(s):
    inv = [0] * len(s)
    for i, j in enumerate(s, start=1):
        inv[j - 1] = i
    return inv


def inverse(a: ExtAffineWeylElement) -> ExtAffineWeylElement:
    """``(t_lam sigma)^-1 = t_{-sigma^-1.lam} sigma^-1``."""
    sinv = a.sigma.inverse()
    # (sigma^-1 . lam)_i = lam_{sigma(i)}
    lam = tuple(-a.lam[a.sigma(i) - 1] for i in range(1, a.rank + 1))
    return ExtAffineWeylElement(sinv, lam)


def power(a: ExtAffineWeylElement, k: int) -> ExtAffineWeylElement:
    if k < 0:
        a, k = inverse(a), -k
    out = identity(a.rank)
    for _ in range(k):
        out = multiply(out, a)
    return out


def pi_power(w: ExtAffineWeylElement) -> int:
    """The ``k`` with ``w in Pi^k W_aff``; ``Pi`` has translation sum 1, ``s_i`` sum 0."""
    return sum(w.lam)


@lru_cache(maxsize=1 << 16)
def length(w: ExtAffineWeylElement) -> int:
    """Coxeter length of the ``W_aff``-part of ``w``.

    Sum over row pairs ``i < j`` of ``|lam_i - lam_j|`` when the columns
    holding rows i, j are in order, and ``|lam_i - lam_j + 1|`` when they
    are inverted.
    """
    lam = w.lam
    col = _inv_images(w.sigma.images)
    n = len(lam)
    total = 0
    for i in range(n):
        for j in range(i + 1, n):
            d = lam[i] - lam[j]
            total += abs(d) if col[i] < col[j] else abs(d + 1)
    return total


def _radius() -> int:
    return int(os.environ.get("HECKE_BFS_RADIUS", DEFAULT_BFS_RADIUS))


@lru_cache(maxsize=None)
def bfs_ball(n: int, radius: int) -> dict[ExtAffineWeylElement, int]:
    """Word lengths of all ``W_aff`` elements reachable by ``<= radius`` simple reflections."""
    gens = [simple_reflection(n, i) for i in range(n)] if n >= 2 else []
    start = identity(n)
    dist = {start: 0}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        d = dist[x]
        if d == radius:
            continue
        for s in gens:
            y = multiply(s, x)
            if y not in dist:
                dist[y] = d + 1
                queue.append(y)
    return dist


def length_bfs(w: ExtAffineWeylElement, radius: int | None = None) -> int:
    """Minimal word length in ``s_0..s_{n-1}`` after stripping the ``Pi`` power."""
    radius = _radius() if radius is None else radius
    core = multiply(power(pi_element(w.rank), -pi_power(w)), w)
    ball = bfs_ball(w.rank, radius)
    if core not in ball:
        raise SearchRadiusExceeded(f"{w} not reached within radius {radius}")
    return ball[core]


@lru_cache(maxsize=1 << 16)
def reduced_word(w: ExtAffineWeylElement, tiebreak: str = "smallest") -> tuple[int, tuple[int, ...]]:
    """``(k, word)`` with ``w = Pi^k s_{i1} ... s_{iL}`` and ``L = length(w)``.

    Greedy left descent; ``tiebreak`` picks the smallest or largest descent.
    """
    n = w.rank
    k = pi_power(w)
    rest = multiply(power(pi_element(n), -k), w)
    word = []
    ell = length(rest)
    order = range(n) if tiebreak == "smallest" else range(n - 1, -1, -1)
    while ell > 0:
        for i in order:
            cand = multiply(simple_reflection(n, i), rest)
            if length(cand) < ell:
                word.append(i)
                rest = cand
                ell -= 1
                break
        else:
            raise RuntimeError(f"no left descent for {rest} of length {ell}")
    if rest != identity(n):
        raise RuntimeError(f"reduction of {w} ended at {rest}")
    return k, tuple(word)


def from_word(n: int, k: int, word) -> ExtAffineWeylElement:
    out = power(pi_element(n), k)
    for i in word:
        out = multiply(out, simple_reflection(n, i))
    return out


# ---------------------------------------------------------------------------
# text forms


def format_word_form(w: ExtAffineWeylElement) -> str:
    k, word = reduced_word(w)
    if not word:
        return f"Pi^{k}"
    return f"Pi^{k} * " + " ".join(f"s{i}" for i in word)


def format_translation_form(w: ExtAffineWeylElement) -> str:
    lam = ",".join(str(x) for x in w.lam)
    perm = ",".join(str(x) for x in w.sigma.images)
    return f"t({lam})*perm[{perm}]"


_TRANS = re.compile(r"^\s*t\(\s*([-\d,\s]*)\)\s*\*\s*perm\[\s*([\d,\s]*)\]\s*$")
_WORD = re.compile(r"^\s*Pi\^(-?\d+)\s*(?:\*\s*((?:s\d+\s*)*))?$")


def parse_element(text: str, n: int | None = None) -> ExtAffineWeylElement:
    """Parse ``Pi^k * s1 s0`` (needs ``n``) or ``t(a1,..,an)*perm[...]``."""
    m = _TRANS.match(text)
    if m:
        lam = tuple(int(x) for x in m.group(1).split(",") if x.strip())
        perm = tuple(int(x) for x in m.group(2).split(",") if x.strip())
        w = ExtAffineWeylElement(Permutation(perm), lam)
        if n is not None and w.rank != n:
            raise RankMismatchError(f"expected rank {n}, got {w.rank}")
        return w
    m = _WORD.match(text)
    if m:
        if n is None:
            raise ValueError("word form needs an explicit rank")
        word = [int(tok[1:]) for tok in (m.group(2) or "").split()]
        return from_word(n, int(m.group(1)), word)
    raise ValueError(f"cannot parse Weyl group element {text!r}")
