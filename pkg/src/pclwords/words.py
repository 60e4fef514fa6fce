"""Finite words over a totally ordered alphabet.

Words are plain ``str`` values. An :class:`OrderedAlphabet` carries the letter
order; every comparison that depends on the order goes through
:meth:`OrderedAlphabet.encode`, so alphabets whose order differs from code
point order (``"cab"``, say) behave correctly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional, Union


class AlphabetError(ValueError):
    """A word uses a letter outside its alphabet, or an alphabet is malformed."""


@dataclass(frozen=True)
class OrderedAlphabet:
    symbols: str
    _rank: dict = field(init=False, repr=False, compare=False)
    _table: Optional[dict] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(set(self.symbols)) != len(self.symbols):
            raise AlphabetError(f"alphabet {self.symbols!r} has repeated symbols")
        object.__setattr__(self, "_rank", {x: i for i, x in enumerate(self.symbols)})
        # identity encoding when the given order already is code point order
        if list(self.symbols) == sorted(self.symbols):
            table = None
        else:
            table = str.maketrans({x: chr(0x100 + i) for i, x in enumerate(self.symbols)})
        object.__setattr__(self, "_table", table)

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __contains__(self, x):
        return x in self._rank

    def rank(self, x: str) -> int:
        """0-based position of ``x`` in the alphabet."""
        try:
            return self._rank[x]
        except KeyError:
            raise AlphabetError(f"letter {x!r} not in alphabet {self.symbols!r}") from None

    def word(self, w: str) -> str:
        """Validate ``w`` against the alphabet and return it."""
        for i, x in enumerate(w):
            if x not in self._rank:
                raise AlphabetError(
                    f"letter {x!r} at position {i} of {w!r} not in alphabet {self.symbols!r}"
                )
        return w

    def encode(self, w: str) -> str:
        """A string whose code point order matches the alphabet order of ``w``."""
        return w if self._table is None else w.translate(self._table)

    def sorted_letters(self, w: str, reverse: bool = False) -> str:
        return "".join(sorted(w, key=self.rank, reverse=reverse))


AlphabetLike = Union[OrderedAlphabet, str, None]

ABC = OrderedAlphabet("abc")


def as_alphabet(alphabet: AlphabetLike, w: str = "") -> OrderedAlphabet:
    """Coerce ``alphabet``; ``None`` means the letters of ``w`` in code point order."""
    if isinstance(alphabet, OrderedAlphabet):
        return alphabet
    if alphabet is None:
        return OrderedAlphabet("".join(sorted(set(w))))
    return OrderedAlphabet(alphabet)


def reverse(w: str) -> str:
    return w[::-1]


def is_palindrome(w: str) -> bool:
    return w == w[::-1]


def parikh(w: str, alphabet: AlphabetLike = ABC) -> dict[str, int]:
    """Occurrence count of every alphabet symbol in ``w`` (zeros included)."""
    alphabet = as_alphabet(alphabet, w)
    alphabet.word(w)
    return {x: w.count(x) for x in alphabet}


def alph(w: str) -> frozenset[str]:
    return frozenset(w)


def factors_k(w: str, k: int) -> frozenset[str]:
    """Distinct factors of length ``k``; ``{""}`` when ``k == 0``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return frozenset(w[i:i + k] for i in range(len(w) - k + 1))


def _require_nonempty(w: str, what: str):
    if not w:
        raise ValueError(f"{what} is undefined for the empty word")


def is_primitive(w: str) -> bool:
    _require_nonempty(w, "primitivity")
    # w is a proper power iff it occurs inside ww at a position other than 0 and |w|
    return (w + w).find(w, 1) == len(w)


def conjugates(w: str) -> list[str]:
    """All rotations in rotation-index order, repeats kept."""
    return [w[i:] + w[:i] for i in range(len(w))]


def is_lyndon(w: str, alphabet: AlphabetLike = None) -> bool:
    """Primitive and strictly smaller than every other rotation."""
    _require_nonempty(w, "the Lyndon property")
    e = as_alphabet(alphabet, w).encode(w)
    return all(e[i:] + e[:i] > e for i in range(1, len(e)))


def lyndon_conjugate(w: str, alphabet: AlphabetLike = None) -> str:
    """The Lyndon word conjugate to the primitive word ``w``."""
    if not is_primitive(w):
        raise ValueError(f"{w!r} is not primitive; its conjugation class has no Lyndon word")
    alphabet = as_alphabet(alphabet, w)
    return min(conjugates(w), key=alphabet.encode)


def lyndon_words(alphabet: AlphabetLike, max_len: int) -> Iterator[str]:
    """Every Lyndon word of length <= max_len, in lexicographic order (Duval 1988)."""
    alphabet = as_alphabet(alphabet)
    symbols = alphabet.symbols
    k = len(symbols)
    if k == 0 or max_len < 1:
        return
    w = [-1]
    while w:
        w[-1] += 1
        yield "".join(symbols[i] for i in w)
        m = len(w)
        while len(w) < max_len:
            w.append(w[-m])
        while w and w[-1] == k - 1:
            w.pop()
