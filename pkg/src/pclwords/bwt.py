"""Burrows-Wheeler transform and clustering analysis."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby
from typing import Optional

from .words import AlphabetLike, as_alphabet


@dataclass(frozen=True)
class ClusteringReport:
    word: str
    bwt: str
    runs: tuple[tuple[str, int], ...]
    permutation: Optional[tuple[int, ...]]
    perfect: bool

    @property
    def permutation_string(self) -> Optional[str]:
        if self.permutation is None:
            return None
        return "".join(map(str, self.permutation))


def sorted_rotations(w: str, alphabet: AlphabetLike = None) -> list[int]:
    """Start indices of the rotations of ``w`` in lexicographic order.

    Equal rotations (non-primitive ``w``) keep rotation-index order.
    """
    if not w:
        raise ValueError("the Burrows-Wheeler transform of the empty word is undefined")
    e = as_alphabet(alphabet, w).encode(w)
    n = len(e)
    ee = e + e
    return sorted(range(n), key=lambda i: ee[i:i + n])


def bwt(w: str, alphabet: AlphabetLike = None) -> str:
    """Last letters of the sorted rotations of ``w``."""
    return "".join(w[i - 1] for i in sorted_rotations(w, alphabet))


def runs(w: str) -> tuple[tuple[str, int], ...]:
    return tuple((x, len(list(g))) for x, g in groupby(w))


def clustering_report(w: str, alphabet: AlphabetLike = None) -> ClusteringReport:
    alphabet = as_alphabet(alphabet, w)
    alphabet.word(w)
    b = bwt(w, alphabet)
    r = runs(b)
    present = sorted(set(w), key=alphabet.rank)
    permutation = None
    if len(r) == len(present):
        local = {x: i + 1 for i, x in enumerate(present)}
        permutation = tuple(local[x] for x, _ in r)
    return ClusteringReport(
        word=w,
        bwt=b,
        runs=r,
        permutation=permutation,
        perfect=b == alphabet.sorted_letters(w, reverse=True),
    )


def is_perfectly_clustering(w: str, alphabet: AlphabetLike = None) -> bool:
    """True iff the transform of ``w`` lists its letters in nonincreasing order."""
    alphabet = as_alphabet(alphabet, w)
    return bwt(w, alphabet) == alphabet.sorted_letters(w, reverse=True)
