"""Palindromic closure, iterated palindromization and Christoffel words."""

from __future__ import annotations

from typing import Optional

from .words import AlphabetError, AlphabetLike, as_alphabet, factors_k


def longest_palindromic_suffix(w: str) -> str:
    if not w:
        raise ValueError("the empty word has no nonempty palindromic suffix")
    for i in range(len(w)):
        s = w[i:]
        if s == s[::-1]:
            return s
    raise AssertionError("unreachable: a single letter is a palindrome")


def palindromic_closure(w: str) -> str:
    """Shortest palindrome having ``w`` as a prefix."""
    if not w:
        return w
    p = w[:len(w) - len(longest_palindromic_suffix(w))]
    return w + p[::-1]


def pal(u: str) -> str:
    """Iterated palindrome directed by ``u``."""
    w = ""
    for x in u:
        w = palindromic_closure(w + x)
    return w


def pal_prefixes(u: str) -> list[str]:
    """``[pal(u[:0]), pal(u[:1]), ..., pal(u)]``."""
    out = [""]
    for x in u:
        out.append(palindromic_closure(out[-1] + x))
    return out


def directive_of(w: str) -> Optional[str]:
    """The directive word of ``w``, or ``None`` if ``w`` is not an iterated palindrome.

    Each palindromic prefix in the chain forces the next directive letter (the
    letter following it in ``w``), so a greedy walk either rebuilds ``w`` or
    overshoots it.
    """
    if w != w[::-1]:
        return None
    p = ""
    u = []
    while len(p) < len(w):
        x = w[len(p)]
        p = palindromic_closure(p + x)
        if not w.startswith(p):
            return None
        u.append(x)
    return "".join(u)


def is_iterated_palindrome(w: str) -> bool:
    return directive_of(w) is not None


def is_separating(x: str, w: str) -> bool:
    """True iff ``x`` occurs in every factor of length 2 of ``w``."""
    return all(x in f for f in factors_k(w, 2))


def is_christoffel(w: str, alphabet: AlphabetLike = None) -> bool:
    """Christoffel test for a word on at most two letters: ``w = x m y`` with x < y
    and ``m`` an iterated palindrome.

    Single letters count as (trivial) Christoffel words; the empty word does not.
    """
    letters = set(w)
    if len(letters) > 2:
        raise AlphabetError(f"{w!r} uses {len(letters)} letters; Christoffel words are binary")
    if len(w) <= 1:
        return len(w) == 1
    if len(letters) < 2:
        return False
    alphabet = as_alphabet(alphabet, w)
    lo, hi = sorted(letters, key=alphabet.rank)
    return w[0] == lo and w[-1] == hi and directive_of(w[1:-1]) is not None
