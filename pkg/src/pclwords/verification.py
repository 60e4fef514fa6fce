"""Bounded enumeration of perfectly clustering Lyndon words and claim checks.

Everything here is exhaustive up to a word-length bound. Non-membership in the
palindrome sets is only asserted with a factor-set certificate; otherwise the
answer is "unknown up to the bound".
"""

from __future__ import annotations

import enum
import random
import re
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

from .bwt import is_perfectly_clustering
from .factorization import (
    LEMMA1_SETS,
    SpecialFactorization,
    UniquenessViolation,
    is_pcl,
    is_pcl_via_bwt,
    lemma1_compatible,
    p1_certificate,
    palindromic_factorizations,
    palindromic_special_factorization,
)
from .morphisms import decompose, omega, theta, witness_from_directive
from .palindromes import directive_of, is_christoffel, is_separating, pal, palindromic_closure
from .words import ABC, conjugates, factors_k, lyndon_words

DEFAULT_BOUND = 12

LANGUAGES = {
    "acs-abs": re.compile(r"[ac]*[ab]*"),
    "acs-bcs": re.compile(r"[ac]*[bc]*"),
    "acs-bs": re.compile(r"[ac]*b*"),
}


def language_membership(u: str, language: str) -> bool:
    """Membership of ``u`` in {a,c}*{a,b}*, {a,c}*{b,c}* or {a,c}*b*."""
    try:
        pattern = LANGUAGES[language]
    except KeyError:
        raise ValueError(f"unknown language {language!r}; expected one of {sorted(LANGUAGES)}") from None
    return pattern.fullmatch(u) is not None


# ---------------------------------------------------------------------------
# enumeration

_PAIR_MASK = {
    x + y: sum(1 << i for i, s in enumerate(LEMMA1_SETS.values()) if x + y in s)
    for x in "abc"
    for y in "abc"
}
_ALL_SETS = (1 << len(LEMMA1_SETS)) - 1


@dataclass(frozen=True)
class PclCatalog:
    bound: int
    entries: tuple[tuple[str, SpecialFactorization], ...]

    @property
    def words(self) -> list[str]:
        return [w for w, _ in self.entries]

    def __len__(self):
        return len(self.entries)

    def __contains__(self, w):
        return any(w == x for x, _ in self.entries)

    def restrict(self, bound: int) -> "PclCatalog":
        return PclCatalog(bound, tuple(e for e in self.entries if len(e[0]) <= bound))


def _canonical(words):
    return sorted(words, key=lambda w: (len(w), w))


def _dfs(prefix: str, bound: int) -> list[str]:
    """Perfectly clustering Lyndon words with full alphabet extending ``prefix``.

    Nodes are prenecklaces (tracked by the period ``p`` of the FKM algorithm)
    whose length-2 factors fit in at least one admissible set.
    """
    mask = _ALL_SETS
    p = 1
    for i in range(1, len(prefix)):
        mask &= _PAIR_MASK[prefix[i - 1:i + 1]]
        if prefix[i] > prefix[i - p]:
            p = i + 1
        elif prefix[i] < prefix[i - p]:
            return []
    if not mask:
        return []
    out = []
    stack = [(prefix, mask, p)]
    while stack:
        w, mask, p = stack.pop()
        n = len(w)
        if (
            p == n
            and n >= 3
            and mask & _PAIR_MASK[w[-1] + w[0]]
            and "b" in w
            and "c" in w
            and is_perfectly_clustering(w, ABC)
        ):
            out.append(w)
        if n == bound:
            continue
        ref = w[n - p]
        for x in "abc":
            if x < ref:
                continue
            m = mask & _PAIR_MASK[w[-1] + x]
            if m:
                stack.append((w + x, m, p if x == ref else n + 1))
    return out


def _split_prefixes(bound: int, depth: int) -> list[str]:
    prefixes = ["a"]
    for _ in range(depth - 1):
        prefixes = [w + x for w in prefixes for x in "abc"]
    return prefixes


def _dfs_task(args):
    prefix, bound, exact = args
    if exact:
        # the prefix itself only; deeper words belong to the longer prefixes
        return _dfs(prefix, len(prefix))
    return _dfs(prefix, bound)


def _enumerate_pruned(bound: int, workers: int) -> list[str]:
    if workers <= 1:
        return _dfs("a", bound)
    depth = min(bound, 6)
    tasks = [(w, bound, False) for w in _split_prefixes(bound, depth)]
    # words shorter than the split depth
    for d in range(1, depth):
        tasks += [(w, d, True) for w in _split_prefixes(bound, d)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_dfs_task, tasks, chunksize=8))
    return [w for part in parts for w in part]


def enumerate_pcl_bruteforce(bound: int) -> list[str]:
    """No-prune oracle: every Lyndon word with full alphabet, checked by its transform."""
    return _canonical(
        w for w in lyndon_words(ABC, bound)
        if len(set(w)) == 3 and is_perfectly_clustering(w, ABC)
    )


_CATALOGS: dict[tuple[int, bool], PclCatalog] = {}


def _build_catalog(bound, words) -> PclCatalog:
    entries = []
    for w in _canonical(words):
        f = palindromic_special_factorization(w)
        if f is None or not is_pcl(w):
            raise RuntimeError(f"{w!r} is perfectly clustering Lyndon but fails the palindromic classifier")
        entries.append((w, f))
    return PclCatalog(bound, tuple(entries))


def enumerate_pcl(bound: int, workers: int = 1, prune: bool = True) -> PclCatalog:
    """All perfectly clustering Lyndon words over {a,b,c} using all three letters,
    of length at most ``bound``, sorted by length then lexicographically.

    Results are cached per bound; the worker count never changes the output.
    """
    if bound < 3:
        raise ValueError(f"bound must be at least 3, got {bound}")
    key = (bound, prune)
    if key not in _CATALOGS:
        words = _enumerate_pruned(bound, workers) if prune else enumerate_pcl_bruteforce(bound)
        _CATALOGS[key] = _build_catalog(bound, words)
    return _CATALOGS[key]


# ---------------------------------------------------------------------------
# palindrome sets and membership


class Side(str, enum.Enum):
    P1 = "P1"
    P2 = "P2"


@dataclass(frozen=True)
class PalindromeSetSlice:
    side: Side
    bound: int
    elements: dict  # palindrome -> shortest witness

    def __contains__(self, p):
        return p in self.elements

    def __len__(self):
        return len(self.elements)


def compute_sets(catalog: PclCatalog) -> tuple[PalindromeSetSlice, PalindromeSetSlice]:
    p1: dict[str, str] = {}
    p2: dict[str, str] = {}
    # catalog order is (length, word), so the first witness seen is the one kept
    for w, f in catalog.entries:
        p1.setdefault(f.pi1, w)
        p2.setdefault(f.pi2, w)
    return (
        PalindromeSetSlice(Side.P1, catalog.bound, p1),
        PalindromeSetSlice(Side.P2, catalog.bound, p2),
    )


_SETS: dict[int, tuple[PalindromeSetSlice, PalindromeSetSlice]] = {}


def _sets(bound: int):
    if bound not in _SETS:
        _SETS[bound] = compute_sets(enumerate_pcl(bound))
    return _SETS[bound]


class Status(str, enum.Enum):
    MEMBER = "member"
    NON_MEMBER = "non-member-decisive"
    UNKNOWN = "unknown-up-to"


@dataclass(frozen=True)
class MembershipVerdict:
    side: Side
    candidate: str
    status: Status
    bound: int
    witness: Optional[str] = None
    certificate: Optional[frozenset] = None

    def to_dict(self) -> dict:
        return {
            "side": self.side.value,
            "candidate": self.candidate,
            "status": self.status.value,
            "bound": self.bound,
            "witness": self.witness,
            "certificate": sorted(self.certificate) if self.certificate is not None else None,
        }


def obstruction_certificate(side, candidate: str) -> Optional[frozenset]:
    """Lemma-1 incompatible factor set ruling ``candidate`` out of ``side``.

    Second parts are handled through the a/c exchange, since the first and
    second parts are exchanged by it.
    """
    side = Side(side)
    return p1_certificate(candidate if side is Side.P1 else theta(candidate))


def membership(side, candidate: str, bound: int = DEFAULT_BOUND) -> MembershipVerdict:
    side = Side(side)
    ABC.word(candidate)
    if candidate != candidate[::-1]:
        raise ValueError(f"{candidate!r} is not a palindrome")
    sets = _sets(bound)
    slice_ = sets[0] if side is Side.P1 else sets[1]
    if candidate in slice_:
        return MembershipVerdict(side, candidate, Status.MEMBER, bound, witness=slice_.elements[candidate])
    cert = obstruction_certificate(side, candidate)
    if cert is not None:
        return MembershipVerdict(side, candidate, Status.NON_MEMBER, bound, certificate=cert)
    return MembershipVerdict(side, candidate, Status.UNKNOWN, bound)


def p2_witness_from_directive(u: str) -> str:
    """Perfectly clustering Lyndon word ``a q b pal(u) c`` for ``u`` in {a,c}*{b,c}*."""
    return omega(witness_from_directive(theta(u)))


# ---------------------------------------------------------------------------
# claims


@dataclass
class VerificationReport:
    claim: str
    bound: int
    status: str
    counterexamples: list = field(default_factory=list)
    words_checked: int = 0
    elapsed_ms: float = 0.0
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if (self.status == "counterexample") != bool(self.counterexamples):
            raise ValueError("status 'counterexample' iff counterexamples is nonempty")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "bound": self.bound,
            "status": self.status,
            "counterexamples": list(self.counterexamples),
            "details": self.details,
            "stats": {"words_checked": self.words_checked},
            "timing": {"elapsed_ms": round(self.elapsed_ms, 3)},
        }


def _directives_by_pal_length(max_len: int):
    """Yield ``(u, pal(u))`` for every ``u`` with ``len(pal(u)) <= max_len``."""
    stack = [("", "")]
    while stack:
        u, p = stack.pop()
        yield u, p
        for x in "abc":
            q = palindromic_closure(p + x)
            if len(q) <= max_len:
                stack.append((u + x, q))


def _check_lemma1(bound, workers, seed):
    cat = enumerate_pcl(bound, workers)
    bad, checked = [], 0
    for w in cat.words:
        for c in conjugates(w):
            checked += 1
            if not lemma1_compatible(factors_k(c, 2)):
                bad.append(c)
    return bad, checked, {"catalog_size": len(cat)}


def _check_prop2(bound, workers, seed):
    in_p2 = membership(Side.P2, "bcb", bound)
    in_p1 = membership(Side.P1, "bcb", bound)
    details = {"P2": in_p2.to_dict(), "P1": in_p1.to_dict()}
    bad = []
    if in_p1.status is Status.MEMBER:
        bad.append(in_p1.witness)
    if in_p2.status is Status.NON_MEMBER:
        bad.append("bcb")
    if not bad and (in_p2.status is not Status.MEMBER or in_p1.status is not Status.NON_MEMBER):
        return None, 2, details
    return bad, 2, details


def _check_lemma3(bound, workers, seed):
    enumerate_pcl(bound, workers)
    p1, p2 = _sets(bound)
    mapped = {theta(p): len(w) for p, w in p2.elements.items()}
    direct = {p: len(w) for p, w in p1.elements.items()}
    bad = sorted(set(mapped) ^ set(direct))
    bad += sorted(p for p in set(mapped) & set(direct) if mapped[p] != direct[p])
    return bad, len(p1) + len(p2), {"P1_size": len(p1), "P2_size": len(p2)}


def _directive_claim(side_languages, bound, workers):
    """Shared body of the three directive-language propositions.

    ``side_languages`` lists the sides the claim concerns and the language.
    Every directive with ``len(pal(u)) <= bound - 3`` is visited: in-language
    ones must yield valid constructed witnesses, the rest must never be
    members of all listed sides at once.
    """
    sides, language = side_languages
    enumerate_pcl(bound, workers)
    bad, checked, constructed = [], 0, 0
    for u, p in _directives_by_pal_length(bound - 3):
        checked += 1
        verdicts = [membership(s, p, bound) for s in sides]
        if language_membership(u, language):
            for s, v in zip(sides, verdicts):
                wit = _witness_for(s, u)
                constructed += 1
                f = palindromic_special_factorization(wit)
                part = None if f is None else (f.pi1 if s is Side.P1 else f.pi2)
                ok = is_pcl_via_bwt(wit) and is_pcl(wit) and part == p
                if len(wit) <= bound:
                    ok = ok and v.status is Status.MEMBER
                if not ok:
                    bad.append(u)
        elif all(v.status is Status.MEMBER for v in verdicts):
            bad.append(u)
    return bad, checked, {"language": language, "witnesses_constructed": constructed}


def _witness_for(side, u):
    return witness_from_directive(u) if side is Side.P1 else p2_witness_from_directive(u)


def _check_prop4(bound, workers, seed):
    return _directive_claim(((Side.P1,), "acs-abs"), bound, workers)


def _check_prop6(bound, workers, seed):
    return _directive_claim(((Side.P2,), "acs-bcs"), bound, workers)


def _check_prop7(bound, workers, seed):
    return _directive_claim(((Side.P1, Side.P2), "acs-bs"), bound, workers)


def lemma5_samples(n: int = 200, max_pal_len: int = 40, seed: int = 0) -> list[str]:
    """``n`` distinct random words ``u`` using a, b, c with ``len(pal(b u)) <= max_pal_len``."""
    rng = random.Random(seed)
    seen: dict[str, None] = {}
    attempts = 0
    while len(seen) < n:
        attempts += 1
        if attempts > 1000 * n:
            raise RuntimeError(f"could not draw {n} samples with |pal(bu)| <= {max_pal_len}")
        u = "".join(rng.choice("abc") for _ in range(rng.randint(3, 7)))
        if set(u) == set("abc") and len(pal("b" + u)) <= max_pal_len:
            seen.setdefault(u)
    return list(seen)


def _check_lemma5(bound, workers, seed):
    enumerate_pcl(bound, workers)
    bad = []
    samples = lemma5_samples(seed=seed)
    for u in samples:
        p = pal("b" + u)
        if "ac" in factors_k(p, 2) or not is_separating("b", p):
            bad.append(u)
        elif any(membership(s, p, bound).status is Status.MEMBER for s in Side):
            bad.append(u)
    return bad, len(samples), {"samples": len(samples), "seed": seed}


def _check_conjecture8(bound, workers, seed):
    enumerate_pcl(bound, workers)
    p1, p2 = _sets(bound)
    both = sorted(set(p1.elements) & set(p2.elements), key=lambda p: (len(p), p))
    bad = []
    for p in both:
        u = directive_of(p)
        if u is None or not language_membership(u, "acs-bs"):
            bad.append(p)
    return bad, len(both), {"intersection": both}


def _check_char_equivalence(bound, workers, seed):
    bad, checked = [], 0
    for w in lyndon_words(ABC, bound):
        if len(set(w)) < 3:
            continue
        checked += 1
        try:
            agree = is_pcl(w) == is_pcl_via_bwt(w)
        except UniquenessViolation:
            agree = False
        if not agree:
            bad.append(w)
    return bad, checked, {}


def _check_binary_christoffel(bound, workers, seed):
    bad, checked = [], 0
    for w in lyndon_words("ab", bound):
        if len(w) < 2:
            continue
        checked += 1
        if is_perfectly_clustering(w, "ab") != is_christoffel(w, "ab"):
            bad.append(w)
    return bad, checked, {"min_length": 2}


def _check_uniqueness(bound, workers, seed):
    cat = enumerate_pcl(bound, workers)
    bad = [w for w in cat.words if len(palindromic_factorizations(w)) != 1]
    return bad, len(cat), {}


def _check_decomposition(bound, workers, seed):
    cat = enumerate_pcl(bound, workers)
    bad = [w for w in cat.words if decompose(w) is None]
    return bad, len(cat), {}


CLAIMS: dict[str, Callable] = {
    "lemma1": _check_lemma1,
    "prop2": _check_prop2,
    "lemma3": _check_lemma3,
    "prop4": _check_prop4,
    "prop6": _check_prop6,
    "prop7": _check_prop7,
    "lemma5": _check_lemma5,
    "conjecture8": _check_conjecture8,
    "char-equivalence": _check_char_equivalence,
    "binary-christoffel": _check_binary_christoffel,
    "uniqueness": _check_uniqueness,
    "decomposition": _check_decomposition,
}


def verify_claim(claim: str, bound: int = DEFAULT_BOUND, workers: int = 1, seed: int = 0) -> VerificationReport:
    try:
        check = CLAIMS[claim]
    except KeyError:
        raise ValueError(f"unknown claim {claim!r}; expected one of {', '.join(CLAIMS)}") from None
    start = time.perf_counter()
    bad, checked, details = check(bound, workers, seed)
    elapsed = (time.perf_counter() - start) * 1000
    if bad is None:
        status, bad = "unknown", []
    else:
        status = "counterexample" if bad else "pass"
    return VerificationReport(claim, bound, status, list(bad), checked, elapsed, details)
