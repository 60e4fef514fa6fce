"""The a/c exchange, its reversed antimorphism, and four automorphisms of F(a, b, c)."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .bwt import is_perfectly_clustering
from .words import ABC

SignedLetter = tuple[str, int]

_SUPERSCRIPT_INV = "⁻¹"


class FreeGroupWord:
    """Freely reduced word in the free group on single-character generators.

    Letters are ``(symbol, exponent)`` pairs with exponent +1 or -1.
    """

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[SignedLetter] = ()):
        self.letters: tuple[SignedLetter, ...] = free_reduce(letters)

    @classmethod
    def from_word(cls, w: str) -> "FreeGroupWord":
        return cls((x, 1) for x in w)

    @classmethod
    def parse(cls, s: str) -> "FreeGroupWord":
        """Parse ``"ab^-1c"``, ``"ab⁻¹c"`` or ``"aB"`` (capital = inverse)."""
        letters = []
        for sym, inv in re.findall(r"([A-Za-z])(\^-1|" + _SUPERSCRIPT_INV + ")?", s):
            if sym.isupper():
                letters.append((sym.lower(), -1))
            else:
                letters.append((sym, -1 if inv else 1))
        return cls(letters)

    def __mul__(self, other: "FreeGroupWord") -> "FreeGroupWord":
        return FreeGroupWord(self.letters + other.letters)

    def __invert__(self) -> "FreeGroupWord":
        return FreeGroupWord((x, -e) for x, e in reversed(self.letters))

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        if isinstance(other, str):
            other = FreeGroupWord.from_word(other)
        return isinstance(other, FreeGroupWord) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def is_positive(self) -> bool:
        return all(e == 1 for _, e in self.letters)

    def to_word(self) -> str:
        if not self.is_positive():
            raise ValueError(f"{self} has inverse letters")
        return "".join(x for x, _ in self.letters)

    def __str__(self):
        return "".join(x if e == 1 else x + _SUPERSCRIPT_INV for x, e in self.letters) or "ε"

    def __repr__(self):
        return f"FreeGroupWord({str(self)!r})"


def free_reduce(letters: Iterable[SignedLetter]) -> tuple[SignedLetter, ...]:
    """Cancel adjacent inverse pairs until none remain."""
    stack: list[SignedLetter] = []
    for x, e in letters:
        if e not in (1, -1):
            raise ValueError(f"exponent {e} of {x!r} is not +1 or -1")
        if stack and stack[-1] == (x, -e):
            stack.pop()
        else:
            stack.append((x, e))
    return tuple(stack)


FreeWordLike = Union[FreeGroupWord, str]


def _as_free(w: FreeWordLike) -> FreeGroupWord:
    return w if isinstance(w, FreeGroupWord) else FreeGroupWord.from_word(w)


@dataclass(frozen=True)
class Automorphism:
    name: str
    images: dict

    def __call__(self, w: FreeWordLike) -> FreeGroupWord:
        return apply_automorphism(self, w)

    def __hash__(self):
        return hash(self.name)


def _auto(name: str, **images: str) -> Automorphism:
    return Automorphism(name, {x: FreeGroupWord.parse(s) for x, s in images.items()})


LAMBDA_A = _auto("lambda_a", a="a", b="ab", c="ac")
LAMBDA_B = _auto("lambda_b", a="aB", b="b", c="bc")
RHO_B = _auto("rho_b", a="ab", b="b", c="Bc")
RHO_C = _auto("rho_c", a="ac", b="bc", c="c")

# also the trial order used by decompose()
AUTOMORPHISMS: dict[str, Automorphism] = {
    f.name: f for f in (LAMBDA_A, LAMBDA_B, RHO_B, RHO_C)
}

_INVERSES: dict[str, Automorphism] = {
    "lambda_a": _auto("lambda_a^-1", a="a", b="Ab", c="Ac"),
    "lambda_b": _auto("lambda_b^-1", a="ab", b="b", c="Bc"),
    "rho_b": _auto("rho_b^-1", a="aB", b="b", c="bc"),
    "rho_c": _auto("rho_c^-1", a="aC", b="bC", c="c"),
}


def apply_automorphism(f: Automorphism, w: FreeWordLike) -> FreeGroupWord:
    out: list[SignedLetter] = []
    for x, e in _as_free(w).letters:
        image = f.images[x]
        out.extend(image.letters if e == 1 else (~image).letters)
    return FreeGroupWord(out)


def inverse_automorphism(f: Automorphism) -> Automorphism:
    base = f.name.removesuffix("^-1")
    if f.name.endswith("^-1"):
        return AUTOMORPHISMS[base]
    return _INVERSES[base]


_THETA = str.maketrans("ac", "ca")


def theta(w: str) -> str:
    """Exchange a and c."""
    return ABC.word(w).translate(_THETA)


def omega(w: str) -> str:
    """Reversal of ``theta(w)``."""
    return theta(w)[::-1]


DIRECTIVE_MAPS = {"a": LAMBDA_A, "b": RHO_B, "c": RHO_C}


def witness_from_directive(u: str) -> str:
    """Perfectly clustering Lyndon word ``a pal(u) b q c`` built from ``abac``.

    With ``u = x1 ... xn`` the maps are applied innermost-last-letter first:
    ``f_x1(f_x2(... f_xn(abac)))``, where a, b, c select lambda_a, rho_b, rho_c.
    """
    if not re.fullmatch(r"[ac]*[ab]*", u):
        raise ValueError(f"{u!r} is not in {{a,c}}*{{a,b}}*")
    w = FreeGroupWord.from_word("abac")
    for x in reversed(u):
        w = apply_automorphism(DIRECTIVE_MAPS[x], w)
    if not w.is_positive():
        raise ValueError(f"composition for {u!r} left inverse letters: {w}")
    return w.to_word()


def decompositions(w: str) -> list[tuple[str, str]]:
    """Every ``(name, u)`` with ``AUTOMORPHISMS[name](u) == w``, ``u`` positive,
    shorter than ``w`` and perfectly clustering."""
    ABC.word(w)
    out = []
    for name in AUTOMORPHISMS:
        pre = apply_automorphism(_INVERSES[name], w)
        if pre.is_positive() and 0 < len(pre) < len(w):
            u = pre.to_word()
            if is_perfectly_clustering(u, ABC):
                out.append((name, u))
    return out


def decompose(w: str) -> Optional[tuple[str, str]]:
    """First qualifying decomposition in the order lambda_a, lambda_b, rho_b, rho_c."""
    if len(w) < 3:
        raise ValueError(f"{w!r} is shorter than 3")
    if not is_perfectly_clustering(w, ABC):
        raise ValueError(f"{w!r} is not perfectly clustering")
    found = decompositions(w)
    return found[0] if found else None
