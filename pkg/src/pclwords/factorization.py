"""Special factorizations and the two perfectly clustering Lyndon classifiers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .bwt import is_perfectly_clustering
from .words import ABC, AlphabetError, AlphabetLike, as_alphabet, factors_k, is_lyndon

LEMMA1_SETS: dict[str, frozenset[str]] = {
    "S1": frozenset({"ab", "ac", "ba", "bb", "ca"}),
    "S2": frozenset({"ac", "bb", "bc", "ca", "cb"}),
    "S3": frozenset({"aa", "ab", "ac", "ba", "ca"}),
    "S4": frozenset({"ac", "bc", "ca", "cb", "cc"}),
}


class UniquenessViolation(RuntimeError):
    """A word classified perfectly clustering Lyndon has two palindromic special factorizations."""


@dataclass(frozen=True)
class SpecialFactorization:
    separators: tuple[str, ...]
    parts: tuple[str, ...]

    @property
    def palindromic(self) -> bool:
        return all(p == p[::-1] for p in self.parts)

    @property
    def word(self) -> str:
        out = [self.separators[0]]
        for sep, part in zip(self.separators[1:], self.parts):
            out += [part, sep]
        return "".join(out)

    @property
    def pi1(self) -> str:
        return self.parts[0]

    @property
    def pi2(self) -> str:
        return self.parts[1]

    def __str__(self):
        # empty parts are dropped, as in "a · cac · b · c"
        out = [self.separators[0]]
        for sep, part in zip(self.separators[1:], self.parts):
            if part:
                out.append(part)
            out.append(sep)
        return " · ".join(out)


@dataclass(frozen=True)
class PalindromePairSplit:
    left: str
    right: str


def _require_ternary(w: str):
    ABC.word(w)
    if set(w) != set("abc"):
        raise AlphabetError(f"{w!r} does not use all three letters a, b, c")


def special_factorizations(w: str) -> list[SpecialFactorization]:
    """Every factorization ``w = a p1 b p2 c``, ordered by the position of the separating b."""
    _require_ternary(w)
    if w[0] != "a" or w[-1] != "c":
        return []
    return [
        SpecialFactorization(("a", "b", "c"), (w[1:i], w[i + 1:-1]))
        for i in range(1, len(w) - 1)
        if w[i] == "b"
    ]


def palindromic_factorizations(w: str) -> list[SpecialFactorization]:
    return [f for f in special_factorizations(w) if f.palindromic]


def palindromic_special_factorization(w: str) -> Optional[SpecialFactorization]:
    """The special factorization of ``w`` with both parts palindromes, if any.

    Several may exist for words that are not products of two palindromes; the
    one with the shortest first part is returned then. For a perfectly
    clustering Lyndon word two of them raise :class:`UniquenessViolation`.
    """
    found = palindromic_factorizations(w)
    if not found:
        return None
    if len(found) > 1 and product_of_two_palindromes(w) is not None:
        raise UniquenessViolation(
            f"{w!r} has {len(found)} palindromic special factorizations: "
            + ", ".join(str(f) for f in found)
        )
    return found[0]


def general_palindromic_factorization(
    w: str, alphabet: AlphabetLike = None
) -> Optional[SpecialFactorization]:
    """``w = x1 p1 x2 ... p_{k-1} xk`` with ``x1 < ... < xk`` the letters of ``w``
    and every ``pi`` a palindrome."""
    if not w:
        raise ValueError("the empty word has no special factorization")
    alphabet = as_alphabet(alphabet, w)
    alphabet.word(w)
    seps = tuple(sorted(set(w), key=alphabet.rank))
    k = len(seps)
    if k == 1:
        return SpecialFactorization(seps, ()) if len(w) == 1 else None
    if w[0] != seps[0] or w[-1] != seps[-1]:
        return None

    def search(start, j, parts):
        # start: index just after separator j-1
        if j == k - 1:
            part = w[start:-1]
            if len(w) - 1 >= start and part == part[::-1]:
                return parts + [part]
            return None
        for i in range(start, len(w) - 1):
            if w[i] == seps[j]:
                part = w[start:i]
                if part == part[::-1]:
                    found = search(i + 1, j + 1, parts + [part])
                    if found is not None:
                        return found
        return None

    parts = search(1, 1, [])
    if parts is None:
        return None
    return SpecialFactorization(seps, tuple(parts))


def product_of_two_palindromes(w: str) -> Optional[PalindromePairSplit]:
    """Split ``w`` into two palindromes (either may be empty), shortest left part first."""
    for i in range(len(w) + 1):
        left, right = w[:i], w[i:]
        if left == left[::-1] and right == right[::-1]:
            return PalindromePairSplit(left, right)
    return None


def lemma1_compatible(f2) -> list[str]:
    """Names of the admissible length-2 factor sets containing ``f2``."""
    f2 = frozenset(f2)
    return [name for name, s in LEMMA1_SETS.items() if f2 <= s]


def p1_certificate(candidate: str) -> Optional[frozenset[str]]:
    """Factor set of ``a candidate b`` if it fits no admissible set, else ``None``.

    Every word ``a candidate b u c`` contains these factors, so a non-``None``
    result proves ``candidate`` never occurs as a first palindromic part.
    """
    ABC.word(candidate)
    f2 = factors_k("a" + candidate + "b", 2)
    return None if lemma1_compatible(f2) else f2


def p1_obstruction(candidate: str) -> bool:
    return p1_certificate(candidate) is not None


def is_pcl(w: str) -> bool:
    """Product of two palindromes with a palindromic special factorization."""
    _require_ternary(w)
    return (
        product_of_two_palindromes(w) is not None
        and palindromic_special_factorization(w) is not None
    )


def is_pcl_via_bwt(w: str) -> bool:
    """Lyndon with a nonincreasing Burrows-Wheeler transform."""
    ABC.word(w)
    return is_lyndon(w, ABC) and is_perfectly_clustering(w, ABC)
