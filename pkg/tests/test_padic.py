import itertools
from fractions import Fraction

import numpy as np
import pytest

from heckegl import hecke, weyl
from heckegl import padic
from heckegl.padic import GL2Element as M, Level
from heckegl.padic import _kernels
from heckegl.scalars import RationalFunction

import oracles as O

K, I = Level.MAXIMAL_COMPACT, Level.IWAHORI
S = M(0, 1, 1, 0)


def diag(a, b):
    return M(a, 0, 0, b)


def test_valuation():
    assert padic.valuation(12, 2) == 2
    assert padic.valuation(Fraction(1, 3), 3) == -1
    assert padic.valuation(0, 5) == padic.INF


def test_membership():
    assert padic.in_subgroup(M.identity(), I, 3)
    assert not padic.in_subgroup(S, I, 3)
    assert padic.in_subgroup(S, K, 3)
    u = M(2, 1, 3, 5)
    assert padic.coset_equal(diag(1, 3), diag(1, 3) * u, K, 3, side="left")
    assert padic.coset_equal(diag(1, 3), u * diag(1, 3), K, 3, side="right")


def test_bad_prime():
    with pytest.raises(ValueError):
        padic.PadicContext(4)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_coset_counts_against_brute_force(p):
    assert len(padic.decompose(K, M.identity(), p)) == 1
    assert len(padic.decompose(I, M.identity(), p)) == 1
    # brute-force level: p^1 suffices when the conjugate of K(p) lands in U
    cases = [(S, I, p, 1), (diag(1, p), K, p + 1, 1), (diag(1, p * p), K, p * p + p, 2)]
    for g, level, expected, lvl in cases:
        assert len(padic.decompose(level, g, p)) == expected
        if p ** (4 * lvl) <= 10**4:
            assert len(O.brute_right_cosets(g.entries(), p, level is I, lvl)) == expected


@pytest.mark.parametrize("p", [2, 3])
def test_iwahori_index_is_p_to_length(p):
    for k in range(-1, 2):
        for word in ([], [0], [1], [0, 1], [1, 0], [0, 1, 0], [1, 0, 1]):
            w = weyl.from_word(2, k, word)
            g = padic.weyl_matrix(w, p)
            assert len(padic.decompose(I, g, p)) == p ** weyl.length(w)


@pytest.mark.parametrize("p", [2, 3])
def test_representatives_are_distinct_cosets(p):
    for g, level in [(S, I), (diag(1, p), K), (M(1, 1, 0, p), K)]:
        reps = padic.right_coset_reps(level, g, p)
        for y, z in itertools.combinations(reps, 2):
            assert not O.in_U((y * z.inverse()).entries(), p, level is I)
        left = padic.left_coset_reps(level, g, p)
        assert len(left) == len(reps)


def test_backends_agree():
    for p in (2, 3, 5):
        for g, level in [(S, I), (diag(1, p), K), (diag(1, p * p), K), (padic.pi_matrix(p) * S, I)]:
            G = padic.cosets._integral_scaling(g, p)
            N = padic.valuation(G.det, p) + 2
            Gmod = np.array([int(x) % p**N for x in G.entries()], dtype=np.int64)
            m = padic.congruence_level(g, p)
            for normalized in (True, False):
                if not normalized and m > 2:
                    continue
                a = _kernels.enumerate_coset_keys(Gmod, p, m, N, level is I, "numpy", normalized)
                b = _kernels.enumerate_coset_keys(Gmod, p, m, N, level is I, "numba", normalized)
                assert np.array_equal(a, b)


def test_normalized_transversal_matches_full():
    # row normalization is only a reduction for monomial g; the counts must agree
    for p in (2, 3):
        for g, level in [(S, I), (diag(1, p), K), (padic.pi_matrix(p), I), (M(p, 0, 0, 1), I)]:
            G = padic.cosets._integral_scaling(g, p)
            N = padic.valuation(G.det, p) + 2
            Gmod = np.array([int(x) % p**N for x in G.entries()], dtype=np.int64)
            m = padic.congruence_level(g, p)
            full = _kernels.enumerate_coset_keys(Gmod, p, m, N, level is I, "numpy", False)
            norm = _kernels.enumerate_coset_keys(Gmod, p, m, N, level is I, "numpy", True)
            assert len(full) == len(norm)


def test_non_monomial_input():
    g = M(1, 1, 0, 2)
    dec = padic.decompose(K, g, 2)
    assert len(dec) == 3
    assert dec.contains(diag(1, 2))


def test_backend_flag(monkeypatch):
    monkeypatch.setenv("HECKE_DISABLE_NUMBA", "1")
    assert padic.active_backend() == "numpy"
    monkeypatch.setenv("HECKE_DISABLE_NUMBA", "0")
    assert padic.active_backend() in ("numba", "numpy")


def test_bound_error():
    with pytest.raises(padic.CosetBoundError):
        padic.decompose(K, diag(1, 2**6), 2)


def test_unit_idempotent():
    for p in (2, 3):
        ctx = padic.PadicContext(p)
        for level in (K, I):
            e = padic.unit_idempotent(ctx, level)
            assert padic.convolve(e, e) == e


@pytest.mark.parametrize("p", [2, 3])
def test_iwahori_quadratic(p):
    ctx = padic.PadicContext(p)
    Ts = padic.indicator(ctx, I, S)
    one = padic.unit_idempotent(ctx, I)
    assert padic.convolve(Ts, Ts) == Ts.scale(p - 1) + one.scale(p)


def test_pi_normalizes_iwahori():
    for p in (2, 3):
        ctx = padic.PadicContext(p)
        pi = padic.pi_matrix(p)
        a, b = padic.indicator(ctx, I, pi), padic.indicator(ctx, I, pi.inverse())
        assert padic.convolve(a, b) == padic.unit_idempotent(ctx, I)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_iwahori_relation_check(p):
    rep = padic.iwahori_relation_check(p)
    assert rep["passed"]
    assert rep["structure_constants"] == {"r-1": str(p - 1), "r": str(p)}
    assert rep["coset_counts"] == {"IsI": p, "IPiI": 1}


def test_norms():
    for p in (2, 3):
        ctx = padic.PadicContext(p)
        one = padic.unit_idempotent(ctx, K)
        assert padic.l1_norm(one) == 1
        t = padic.indicator(ctx, K, diag(1, p))
        assert padic.l1_norm(t) == p + 1
        assert padic.l1_norm(t.scale(Fraction(-3, 2))) == Fraction(3, 2) * (p + 1)


@pytest.mark.parametrize("p", [2, 3])
def test_spherical_square(p):
    ctx = padic.PadicContext(p)
    t = padic.indicator(ctx, K, diag(1, p))
    sq = padic.convolve(t, t)
    expected = padic.indicator(ctx, K, diag(1, p * p)) + padic.indicator(ctx, K, diag(p, p)).scale(p + 1)
    assert sq == expected
    assert padic.l1_norm(sq) == (p + 1) ** 2


def test_convolution_matches_hecke_structure_constants():
    # Iwahori-level convolution at p realizes H(2, p) on the basis 1_{IwI} <-> T_w
    p = 2
    ctx = padic.PadicContext(p)
    q = RationalFunction.constant(p)
    basis = [weyl.from_word(2, k, w) for k in (0, 1) for w in ([], [0], [1], [0, 1])]
    basis = basis[:6]

    def to_function(x):
        terms = [(padic.weyl_matrix(w, p), c.constant_value()) for w, c in x.items()]
        return padic.BiInvariantFunction.from_terms(ctx, I, terms)

    for v, w in itertools.product(basis, repeat=2):
        prod = hecke.from_basis(v, q) * hecke.from_basis(w, q)
        conv = padic.convolve(to_function(hecke.from_basis(v, q)), to_function(hecke.from_basis(w, q)))
        assert conv == to_function(prod), (v, w)


def test_canonical_double_coset():
    p = 3
    rep, w = padic.canonical_double_coset(M(3, 1, 0, 9), K, p)
    assert rep == diag(1, 27) and w is None
    for word in ([0], [1], [0, 1]):
        x = weyl.from_word(2, 1, word)
        g = padic.weyl_matrix(x, p) * M(1, 1, 3, 4)
        rep, got = padic.canonical_double_coset(g, I, p)
        assert got == x


def test_function_json_round_trip():
    ctx = padic.PadicContext(3)
    f = padic.indicator(ctx, I, S).scale(Fraction(2, 3)) + padic.unit_idempotent(ctx, I)
    g = padic.BiInvariantFunction.from_json(f.to_json())
    assert g == f
    assert f.labels() == ["I [Pi^0] I", "I [Pi^0 * s1] I"]


def test_function_evaluation():
    ctx = padic.PadicContext(2)
    f = padic.indicator(ctx, K, diag(1, 2)).scale(5)
    assert f(M(2, 0, 0, 1)) == 5
    assert f(M(1, 1, 0, 2)) == 5
    assert f(M.identity()) == 0


def test_level_mismatch():
    ctx = padic.PadicContext(2)
    with pytest.raises(ValueError):
        padic.convolve(padic.unit_idempotent(ctx, K), padic.unit_idempotent(ctx, I))


def _single_coset_functions(ctx, level):
    p = ctx.p
    gens = [M.identity(), diag(1, p), diag(p, 1), diag(1, p * p), S, padic.pi_matrix(p)]
    out = []
    for g in gens:
        f = padic.indicator(ctx, level, g)
        if f not in out:
            out.append(f)
    return out


@pytest.mark.parametrize("p,level", [(2, K), (2, I), (3, K), (3, I)])
def test_unit_and_mass(p, level):
    ctx = padic.PadicContext(p)
    one = padic.unit_idempotent(ctx, level)
    fs = _single_coset_functions(ctx, level)
    for f in fs:
        assert padic.convolve(one, f) == f == padic.convolve(f, one)
    for f, g in itertools.product(fs, repeat=2):
        assert padic.l1_norm(padic.convolve(f, g)) == padic.l1_norm(f) * padic.l1_norm(g)


@pytest.mark.parametrize("p,level", [(2, K), (2, I), (3, I)])
def test_convolution_associative(p, level):
    ctx = padic.PadicContext(p)
    fs = _single_coset_functions(ctx, level)[:4]
    for f, g, h in itertools.product(fs, repeat=3):
        assert padic.convolve(padic.convolve(f, g), h) == padic.convolve(f, padic.convolve(g, h))


def test_iwahori_reduction_matches_enumeration():
    # canonical representatives by elimination agree with coset membership
    import random

    rng = random.Random(4)
    for p in (2, 3):
        for k in (-1, 0, 1):
            for word in ([], [0], [1], [0, 1], [1, 0]):
                w = weyl.from_word(2, k, word)
                h = padic.weyl_matrix(w, p)
                dec = padic.decompose(I, h, p)
                for _ in range(5):
                    i1 = M(1 + p * rng.randrange(5), rng.randrange(9),
                           p * rng.randrange(9), 1 + p * rng.randrange(5))
                    i2 = M(1, rng.randrange(9), p * rng.randrange(9), 1)
                    g = i1 * h * i2
                    assert dec.contains(g)
                    assert padic.canonical_double_coset(g, I, p) == (h, w)
