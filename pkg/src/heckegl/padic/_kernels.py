"""Coset-key kernels for right-coset decompositions.

``U G U`` is the union of the right cosets ``U G u`` with ``u`` running over a
transversal of ``U`` modulo its congruence subgroup of level ``p^m``.
Candidates ``u`` are built row by row. For monomial ``G`` the diagonal units
of ``U`` pass through ``G`` and are absorbed on the left, so each row of ``u``
may be normalized to ``(1, b)`` or ``(a, 1)`` with ``p | a``; this cuts the
search from about ``p^4m`` to about ``p^2m`` candidates.

For each candidate the kernels compute the Hermite key of ``G u mod p^N``
(and of ``Pi G u`` at Iwahori level). The first candidate seen for every
distinct key is kept, in candidate order. The numba backend is the default;
the numpy one is used when ``HECKE_DISABLE_NUMBA`` is set or numba is
unavailable, and both return identical arrays.

Keys are exact provided ``N > v_p(det(G u))``; callers pass
``N = v_p(det G) + 2`` so the ``Pi G u`` key is covered as well.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

__all__ = [
    "HAVE_NUMBA",
    "active_backend",
    "candidate_rows",
    "coset_keys_numba",
    "coset_keys_numpy",
    "enumerate_coset_keys",
]

CHUNK = 1 << 16


def active_backend() -> str:
    if not HAVE_NUMBA or os.environ.get("HECKE_DISABLE_NUMBA", "") not in ("", "0"):
        return "numpy"
    return "numba"


def candidate_rows(p: int, m: int, iwahori: bool, normalized: bool):
    """Admissible first and second rows of ``u`` modulo ``p^m``."""
    q = p**m
    if normalized:
        ones_first = [(1, b) for b in range(q)]
        ones_second = [(a, 1) for a in range(0, q, p)]
        r1 = ones_first if iwahori else ones_first + ones_second
        r2 = ones_second if iwahori else ones_first + ones_second
    else:
        pairs = [(a, b) for a in range(q) for b in range(q)]
        if iwahori:
            r1 = [(a, b) for a, b in pairs if a % p]
            r2 = [(c, d) for c, d in pairs if c % p == 0 and d % p]
        else:
            r1 = r2 = [(a, b) for a, b in pairs if a % p or b % p]
    return np.array(r1, dtype=np.int64), np.array(r2, dtype=np.int64)


# ---------------------------------------------------------------------------
# numba path

if HAVE_NUMBA:

    @njit(cache=True)
    def _val(x, p, N):
        if x == 0:
            return N
        v = 0
        while x % p == 0:
            x //= p
            v += 1
        return v

    @njit(cache=True)
    def _inv_mod(a, M):
        r0, r1 = a % M, M
        s0, s1 = 1, 0
        while r1 != 0:
            q = r0 // r1
            r0, r1 = r1, r0 - q * r1
            s0, s1 = s1, s0 - q * s1
        return s0 % M

    @njit(cache=True)
    def _hnf_code(y11, y12, y21, y22, p, N, M, pw):
        v1 = _val(y11, p, N)
        v2 = _val(y21, p, N)
        if v2 < v1:
            xi, yi, xj, yj, v = y21, y22, y11, y12, v2
        else:
            xi, yi, xj, yj, v = y11, y12, y21, y22, v1
        if v >= N:
            return -1
        w = xi // pw[v]
        b = (_inv_mod(w, M) * yi) % M
        t = xj // pw[v]
        z = (yj - t * b) % M
        d = _val(z, p, N)
        if v + d >= N:
            return -1
        return (v * (N + 1) + d) * M + b % pw[d]

    @njit(cache=True)
    def _keys_nb(G, U, p, N, iwahori):
        M = p**N
        pw = np.empty(N + 1, dtype=np.int64)
        pw[0] = 1
        for i in range(1, N + 1):
            pw[i] = pw[i - 1] * p
        n = U.shape[0]
        k1 = np.empty(n, dtype=np.int64)
        k2 = np.zeros(n, dtype=np.int64)
        g00, g01, g10, g11 = G[0], G[1], G[2], G[3]
        for i in range(n):
            a, b, c, d = U[i, 0], U[i, 1], U[i, 2], U[i, 3]
            y11 = (g00 * a + g01 * c) % M
            y12 = (g00 * b + g01 * d) % M
            y21 = (g10 * a + g11 * c) % M
            y22 = (g10 * b + g11 * d) % M
            k1[i] = _hnf_code(y11, y12, y21, y22, p, N, M, pw)
            if iwahori:
                k2[i] = _hnf_code(y21, y22, (p * y11) % M, (p * y12) % M, p, N, M, pw)
        return k1, k2


def coset_keys_numba(G, U, p: int, N: int, iwahori: bool):
    if not HAVE_NUMBA:  # pragma: no cover
        raise RuntimeError("numba is not installed")
    k1, k2 = _keys_nb(np.asarray(G, dtype=np.int64), U, p, N, iwahori)
    if (k1 < 0).any() or (k2 < 0).any():
        raise ArithmeticError("working precision too small for coset keys")
    return k1, k2


# ---------------------------------------------------------------------------
# numpy path


def _val_np(x, p, N):
    v = np.zeros(x.shape, dtype=np.int64)
    pk = 1
    for _ in range(N):
        pk *= p
        v += (x % pk == 0)
    return v


def _pow_mod_np(w, e, M):
    out = np.ones_like(w)
    base = w % M
    while e:
        if e & 1:
            out = (out * base) % M
        base = (base * base) % M
        e >>= 1
    return out


def _hnf_code_np(y11, y12, y21, y22, p, N, M, pw):
    v1 = _val_np(y11, p, N)
    v2 = _val_np(y21, p, N)
    swap = v2 < v1
    xi = np.where(swap, y21, y11)
    yi = np.where(swap, y22, y12)
    xj = np.where(swap, y11, y21)
    yj = np.where(swap, y12, y22)
    v = np.minimum(v1, v2)
    if np.any(v >= N):
        raise ArithmeticError("working precision too small for coset keys")
    pv = pw[v]
    w = xi // pv
    phi = (p - 1) * p ** (N - 1)
    b = (_pow_mod_np(w, phi - 1, M) * yi) % M
    t = xj // pv
    z = (yj - t * b) % M
    d = _val_np(z, p, N)
    if np.any(v + d >= N):
        raise ArithmeticError("working precision too small for coset keys")
    return (v * (N + 1) + d) * M + b % pw[d]


def coset_keys_numpy(G, U, p: int, N: int, iwahori: bool):
    M = p**N
    if M * M >= 2**62:
        raise OverflowError("modulus too large for int64 arithmetic")
    pw = p ** np.arange(N + 1, dtype=np.int64)
    g00, g01, g10, g11 = (int(x) for x in G)
    a, b, c, d = U[:, 0], U[:, 1], U[:, 2], U[:, 3]
    y11 = (g00 * a + g01 * c) % M
    y12 = (g00 * b + g01 * d) % M
    y21 = (g10 * a + g11 * c) % M
    y22 = (g10 * b + g11 * d) % M
    k1 = _hnf_code_np(y11, y12, y21, y22, p, N, M, pw)
    if iwahori:
        k2 = _hnf_code_np(y21, y22, (p * y11) % M, (p * y12) % M, p, N, M, pw)
    else:
        k2 = np.zeros_like(k1)
    return k1, k2


def _chunks(r1, r2, p):
    block = max(1, CHUNK // len(r2))
    for s in range(0, len(r1), block):
        top = r1[s:s + block]
        U = np.concatenate([np.repeat(top, len(r2), axis=0), np.tile(r2, (len(top), 1))], axis=1)
        det = U[:, 0] * U[:, 3] - U[:, 1] * U[:, 2]
        yield U[det % p != 0]


def enumerate_coset_keys(G, p: int, m: int, N: int, iwahori: bool, backend: str | None = None,
                         normalized: bool = False) -> np.ndarray:
    """Representatives ``u`` (rows ``a, b, c, d``), one per distinct right coset ``U G u``.

    ``normalized=True`` is only valid for monomial ``G``.
    """
    backend = backend or active_backend()
    if backend == "numba":
        keys_fn = coset_keys_numba
    elif backend == "numpy":
        keys_fn = coset_keys_numpy
    else:
        raise ValueError(f"unknown backend {backend!r}")
    r1, r2 = candidate_rows(p, m, iwahori, normalized)
    found: dict = {}
    for U in _chunks(r1, r2, p):
        k1, k2 = keys_fn(G, U, p, N, iwahori)
        keys, first = np.unique(np.stack([k1, k2], axis=1), axis=0, return_index=True)
        for idx in np.argsort(first, kind="stable"):
            key = (int(keys[idx, 0]), int(keys[idx, 1]))
            if key not in found:
                found[key] = tuple(int(x) for x in U[first[idx]])
    return np.array(list(found.values()), dtype=np.int64).reshape(-1, 4)
