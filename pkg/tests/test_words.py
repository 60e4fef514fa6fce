import pytest
from hypothesis import given

from pclwords.words import (
    ABC,
    AlphabetError,
    OrderedAlphabet,
    alph,
    conjugates,
    factors_k,
    is_lyndon,
    is_palindrome,
    is_primitive,
    lyndon_conjugate,
    lyndon_words,
    parikh,
    reverse,
)

from conftest import all_words, naive_is_lyndon, ternary, ternary_nonempty


@pytest.mark.parametrize("w, expected", [("abc", "cba"), ("", ""), ("ababaababa", "ababaababa")])
def test_reverse(w, expected):
    assert reverse(w) == expected


@pytest.mark.parametrize("w, expected", [("bcb", True), ("cbccbbc", False), ("", True)])
def test_is_palindrome(w, expected):
    assert is_palindrome(w) is expected


def test_parikh():
    assert parikh("acbcbbcbc") == {"a": 1, "b": 4, "c": 4}
    assert parikh("") == {"a": 0, "b": 0, "c": 0}
    assert parikh("abac") == {"a": 2, "b": 1, "c": 1}
    with pytest.raises(AlphabetError):
        parikh("abd")


def test_alph():
    assert alph("abac") == {"a", "b", "c"}
    assert alph("bb") == {"b"}
    assert alph("") == set()


def test_factors_k():
    assert factors_k("abcbb", 2) == {"ab", "bc", "cb", "bb"}
    assert factors_k("acbcbbcbc", 2) == {"ac", "cb", "bc", "bb"}
    assert factors_k("ab", 3) == set()
    assert factors_k("ab", 0) == {""}


@pytest.mark.parametrize("w, expected", [("abab", False), ("abac", True), ("a", True), ("aaa", False), ("abcabc", False)])
def test_is_primitive(w, expected):
    assert is_primitive(w) is expected


def test_primitivity_and_lyndon_reject_empty():
    with pytest.raises(ValueError):
        is_primitive("")
    with pytest.raises(ValueError):
        is_lyndon("")


def test_conjugates():
    assert conjugates("abac") == ["abac", "baca", "acab", "caba"]
    assert conjugates("aa") == ["aa", "aa"]
    assert conjugates("a") == ["a"]


@pytest.mark.parametrize("w, expected", [("abac", True), ("baca", False), ("aa", False)])
def test_is_lyndon(w, expected):
    assert is_lyndon(w) is expected


def test_lyndon_conjugate():
    assert lyndon_conjugate("baca") == "abac"
    assert lyndon_conjugate("abac") == "abac"
    assert lyndon_conjugate("cba") == "acb"
    with pytest.raises(ValueError):
        lyndon_conjugate("abab")


def test_alphabet_order_is_by_rank():
    cab = OrderedAlphabet("cab")
    assert is_lyndon("cab", cab)
    assert not is_lyndon("abc", cab)
    assert lyndon_conjugate("abc", cab) == "cab"
    assert cab.sorted_letters("abcab", reverse=True) == "bbaac"


def test_alphabet_validation():
    with pytest.raises(AlphabetError):
        OrderedAlphabet("aba")
    with pytest.raises(AlphabetError):
        ABC.word("abd")
    assert ABC.word("cab") == "cab"


def test_lyndon_and_primitive_against_brute_force():
    for w in all_words("abc", 7, min_len=1):
        primitive = all(w != w[:d] * (len(w) // d) for d in range(1, len(w)) if len(w) % d == 0)
        assert is_primitive(w) == primitive, w
        assert is_lyndon(w) == naive_is_lyndon(w), w


def test_lyndon_generator_matches_filter():
    expected = [w for w in all_words("abc", 7, min_len=1) if naive_is_lyndon(w)]
    got = list(lyndon_words("abc", 7))
    assert got == sorted(expected)


def test_lyndon_generator_counts_follow_necklace_formula():
    # number of Lyndon words of length n on k letters: (1/n) sum_{d|n} mu(d) k^(n/d)
    def mobius(n):
        result, p = 1, 2
        while p * p <= n:
            if n % p == 0:
                n //= p
                if n % p == 0:
                    return 0
                result = -result
            p += 1
        return -result if n > 1 else result

    counts = {}
    for w in lyndon_words("abcd", 9):
        counts[len(w)] = counts.get(len(w), 0) + 1
    for n in range(1, 10):
        expected = sum(mobius(d) * 4 ** (n // d) for d in range(1, n + 1) if n % d == 0) // n
        assert counts[n] == expected


@given(ternary)
def test_reverse_is_an_involution(w):
    assert reverse(reverse(w)) == w


@given(ternary)
def test_parikh_invariant_under_reversal_and_conjugation(w):
    assert parikh(reverse(w)) == parikh(w)
    assert all(parikh(c) == parikh(w) for c in conjugates(w))


@given(ternary)
def test_letters_are_the_length_one_factors(w):
    assert len(factors_k(w, 1)) == len(alph(w))


@given(ternary_nonempty)
def test_lyndon_conjugate_properties(w):
    if is_lyndon(w):
        assert is_primitive(w)
    if is_primitive(w):
        l = lyndon_conjugate(w)
        assert is_lyndon(l)
        assert lyndon_conjugate(l) == l
        assert all(lyndon_conjugate(c) == l for c in conjugates(w))
        assert len(set(conjugates(w))) == len(w)
