import pytest
from hypothesis import given, strategies as st

from heckegl import weyl
from heckegl.weyl import (
    ExtAffineWeylElement,
    Permutation,
    RankMismatchError,
    SearchRadiusExceeded,
)

import oracles as O


def elements(n, max_len=5, pi=2):
    word = st.lists(st.integers(0, n - 1), max_size=max_len)
    return st.builds(lambda k, w: weyl.from_word(n, k, w), st.integers(-pi, pi), word)


# examples


def test_reflection_is_involution():
    s1 = weyl.simple_reflection(2, 1)
    assert weyl.multiply(s1, s1) == weyl.identity(2)


def test_pi_times_s1_is_translation():
    got = weyl.multiply(weyl.pi_element(2), weyl.simple_reflection(2, 1))
    assert got == weyl.translation((0, 1))
    oracle = O.mono_mul(O.mono_pi(2), O.mono_s(2, 1))
    assert O.mono_of(got) == oracle == O.mono_translation((0, 1))


def test_translations_add():
    assert weyl.multiply(weyl.translation((1, 0)), weyl.translation((0, 1))) == weyl.translation((1, 1))


def test_inverse_examples():
    assert weyl.inverse(weyl.identity(3)) == weyl.identity(3)
    s1 = weyl.simple_reflection(2, 1)
    assert weyl.inverse(s1) == s1
    pinv = weyl.inverse(weyl.pi_element(2))
    assert pinv == weyl.multiply(weyl.translation((-1, 0)), s1)
    assert weyl.multiply(weyl.pi_element(2), pinv) == weyl.identity(2)


def test_pi_squared_is_central_translation():
    assert weyl.power(weyl.pi_element(2), 2) == weyl.translation((1, 1))
    assert O.mono_power(O.mono_pi(2), 2) == O.mono_translation((1, 1))


def test_pi_conjugates_s2_to_s1():
    p = weyl.pi_element(3)
    got = weyl.multiply(weyl.multiply(p, weyl.simple_reflection(3, 2)), weyl.inverse(p))
    assert got == weyl.simple_reflection(3, 1)


def test_s0_is_involution():
    s0 = weyl.simple_reflection(2, 0)
    assert weyl.multiply(s0, s0) == weyl.identity(2)
    assert s0 == ExtAffineWeylElement(Permutation((2, 1)), (-1, 1))


def test_length_examples():
    assert weyl.length(weyl.identity(2)) == 0
    for n in (2, 3, 4):
        for i in range(n):
            assert weyl.length(weyl.simple_reflection(n, i)) == 1
    for k in range(-3, 4):
        w = weyl.power(weyl.pi_element(2), k)
        assert weyl.length(w) == 0 == weyl.length_bfs(w)
    t10 = weyl.translation((1, 0))
    assert weyl.length(t10) == 1 == weyl.length_bfs(t10)


def test_length_bfs_examples():
    s0, s1 = weyl.simple_reflection(2, 0), weyl.simple_reflection(2, 1)
    assert weyl.length_bfs(weyl.identity(2)) == 0
    assert weyl.length_bfs(s0 * s1) == 2
    assert weyl.length_bfs(s1 * s0 * s1) == 3


def test_reduced_word_examples():
    assert weyl.reduced_word(weyl.identity(2)) == (0, ())
    assert weyl.reduced_word(weyl.simple_reflection(2, 0)) == (0, (0,))
    assert weyl.reduced_word(weyl.translation((0, 1))) == (1, (1,))


# oracles and invariants


@pytest.mark.parametrize("n", [2, 3, 4])
def test_generators_match_matrix_model(n):
    assert O.mono_of(weyl.pi_element(n)) == O.mono_pi(n)
    for i in range(n):
        assert O.mono_of(weyl.simple_reflection(n, i)) == O.mono_s(n, i)


@pytest.mark.parametrize("n", [2, 3])
@given(data=st.data())
def test_multiply_matches_matrix_oracle(n, data):
    a = data.draw(elements(n))
    b = data.draw(elements(n))
    assert O.mono_of(weyl.multiply(a, b)) == O.mono_mul(O.mono_of(a), O.mono_of(b))
    assert O.mono_of(weyl.inverse(a)) == O.mono_inv(O.mono_of(a))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_length_matches_matrix_bfs(n):
    radius = {2: 7, 3: 6, 4: 4}[n]
    table = O.bfs_lengths(n, radius)
    pis = [O.mono_power(O.mono_pi(n), k) for k in range(-2, 3)]
    for core, d in table.items():
        for p in pis:
            m = O.mono_mul(p, core)
            w = weyl.from_word(n, 0, [])
            # rebuild the package element from the matrix rows
            lam = [0] * n
            images = [0] * n
            for i, (j, e) in enumerate(m):
                lam[i] = e
                images[j] = i + 1
            w = ExtAffineWeylElement(Permutation(tuple(images)), tuple(lam))
            assert O.mono_of(w) == m
            assert weyl.length(w) == d


@given(w=elements(3, 6))
def test_reduced_word_reconstructs(w):
    for tb in ("smallest", "largest"):
        k, word = weyl.reduced_word(w, tiebreak=tb)
        assert len(word) == weyl.length(w)
        assert weyl.from_word(3, k, word) == w
        assert k == weyl.pi_power(w)


@given(w=elements(2, 6))
def test_length_properties(w):
    assert weyl.length(weyl.inverse(w)) == weyl.length(w)
    for i in range(2):
        s = weyl.simple_reflection(2, i)
        assert abs(weyl.length(weyl.multiply(s, w)) - weyl.length(w)) == 1
    p = weyl.pi_element(2)
    assert weyl.length(weyl.multiply(p, w)) == weyl.length(w)


@given(a=elements(3), b=elements(3), c=elements(3))
def test_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(w=elements(3, 4))
def test_text_forms_round_trip(w):
    assert weyl.parse_element(weyl.format_translation_form(w)) == w
    assert weyl.parse_element(weyl.format_word_form(w), 3) == w


def test_rank_mismatch():
    with pytest.raises(RankMismatchError):
        weyl.multiply(weyl.identity(2), weyl.identity(3))
    with pytest.raises(RankMismatchError):
        weyl.parse_element("t(0,0,0)*perm[1,2,3]", 2)


def test_bad_inputs():
    with pytest.raises(ValueError):
        Permutation((1, 1))
    with pytest.raises(ValueError):
        weyl.simple_reflection(2, 2)
    with pytest.raises(ValueError):
        weyl.parse_element("nonsense")


def test_bfs_radius_env(monkeypatch):
    w = weyl.from_word(2, 0, [0, 1, 0, 1, 0])
    monkeypatch.setenv("HECKE_BFS_RADIUS", "3")
    with pytest.raises(SearchRadiusExceeded):
        weyl.length_bfs(w)
    monkeypatch.setenv("HECKE_BFS_RADIUS", "8")
    assert weyl.length_bfs(w) == 5
