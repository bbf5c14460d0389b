import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gtkl.perms import (
    Interval,
    PermutationError,
    all_permutations,
    bruhat_leq,
    chain_from_bits,
    chain_permutation,
    compose,
    cycle_type,
    format_oneline,
    from_word,
    identity,
    image,
    inverse,
    left_descents,
    length,
    longest,
    longest_element,
    parse_oneline,
    reduced_word,
    right_descents,
    simple,
)
from gtkl.tableaux import all_words, word_complement

from oracles import bruhat_by_covers, inv_count


def test_parse_and_format():
    assert parse_oneline("1324") == (1, 3, 2, 4)
    assert parse_oneline("4 3 2 5 6 1") == (4, 3, 2, 5, 6, 1)
    assert parse_oneline("10,1,2,3,4,5,6,7,8,9")[0] == 10
    assert format_oneline((4, 3, 2, 5, 6, 1)) == "432561"
    assert format_oneline(tuple(range(10, 0, -1))) == "10,9,8,7,6,5,4,3,2,1"
    with pytest.raises(PermutationError):
        parse_oneline("1224")


def test_longest_elements():
    assert longest(5) == (5, 4, 3, 2, 1)
    assert longest_element(Interval(1, 6), 6) == (6, 5, 4, 3, 2, 1)
    assert longest_element(Interval(2, 4), 6) == (1, 4, 3, 2, 5, 6)
    for lo in range(1, 6):
        for hi in range(lo + 1, 6):
            w = longest_element(Interval(lo, hi), 5)
            assert compose(w, w) == identity(5)


def test_reduced_words():
    assert reduced_word(identity(4)) == ()
    w0 = longest(3)
    word = reduced_word(w0)
    assert len(word) == 3 and from_word(word, 3) == w0
    for w in all_permutations(5):
        word = reduced_word(w)
        assert len(word) == inv_count(w)
        assert from_word(word, 5) == w


def test_simple_conventions():
    w = (2, 3, 1)
    # s_k w swaps values, w s_k swaps positions
    assert compose(simple(1, 3), w) == (1, 3, 2)
    assert compose(w, simple(1, 3)) == (3, 2, 1)
    for v in all_permutations(4):
        assert left_descents(v) == {k for k in range(1, 4) if length(compose(simple(k, 4), v)) < length(v)}
        assert right_descents(v) == {k for k in range(1, 4) if length(compose(v, simple(k, 4))) < length(v)}


def test_length_properties():
    perms = all_permutations(4)
    for u in perms:
        assert length(inverse(u)) == length(u) == inv_count(u)
        for v in perms:
            assert length(compose(u, v)) <= length(u) + length(v)


def test_bruhat_examples():
    n = 3
    s1, s2 = simple(1, n), simple(2, n)
    assert bruhat_leq(s1, compose(s1, s2))
    for w in all_permutations(4):
        assert bruhat_leq(identity(4), w)
    with pytest.raises(PermutationError):
        bruhat_leq(identity(3), identity(4))


@pytest.mark.parametrize("n", [3, 4])
def test_bruhat_matches_cover_oracle(n):
    below = bruhat_by_covers(n)
    for w, lower in below.items():
        for x in below:
            assert bruhat_leq(x, w) == (x in lower)


def test_bruhat_antisymmetric_s4():
    perms = all_permutations(4)
    for x in perms:
        for w in perms:
            if bruhat_leq(x, w) and bruhat_leq(w, x):
                assert x == w


def test_chain_examples():
    assert chain_from_bits(4, "00").to_list() == [[1, 4], [1, 3], [1, 2]]
    assert chain_from_bits(4, "11").to_list() == [[1, 4], [2, 4], [3, 4]]
    assert chain_from_bits(6, "1001").to_list() == [[1, 6], [2, 6], [2, 5], [2, 4], [3, 4]]
    with pytest.raises(ValueError):
        chain_from_bits(5, "10")


@pytest.mark.parametrize("n", range(2, 8))
def test_chains_bijective(n):
    chains = {tuple(chain_from_bits(n, b).to_list()[i][0] for i in range(n - 1)) + (b,) for b in all_words(n - 2)}
    distinct = {tuple(map(tuple, chain_from_bits(n, b).to_list())) for b in all_words(n - 2)}
    assert len(chains) == len(distinct) == 2 ** (n - 2)


def test_chain_permutation_examples():
    assert chain_permutation(6, "0000") == identity(6)
    w = lambda lo, hi: longest_element(Interval(lo, hi), 6)
    expected = compose(w(2, 4), compose(w(2, 6), w(1, 6)))
    assert expected == (4, 3, 2, 5, 6, 1)
    assert chain_permutation(6, "1001") == expected


@pytest.mark.parametrize("n", range(2, 8))
def test_chain_permutation_images(n):
    for b in all_words(n - 2):
        u = chain_permutation(n, b)
        for m, iv in enumerate(chain_from_bits(n, b).intervals, start=1):
            assert image(u, range(1, n - m + 2)) == set(range(iv.lo, iv.hi + 1))


@pytest.mark.parametrize("n", range(3, 8))
def test_complement_multiplies_by_w0(n):
    for b in all_words(n - 2):
        assert chain_permutation(n, word_complement(b)) == compose(longest(n), chain_permutation(n, b))


def test_cycle_type():
    assert cycle_type((2, 3, 1, 4)) == (3, 1)
    assert cycle_type(identity(3)) == (1, 1, 1)


@settings(max_examples=80, deadline=None)
@given(st.permutations(list(range(1, 8))), st.permutations(list(range(1, 8))))
def test_group_laws_random(u, v):
    u, v = tuple(u), tuple(v)
    assert compose(u, inverse(u)) == identity(7)
    assert inverse(compose(u, v)) == compose(inverse(v), inverse(u))
    assert from_word(reduced_word(u), 7) == u
