"""Perfectly clustering Lyndon words and their palindromic special factorization.

Run: python demos/03_special_factorizations.py
"""

from pclwords import (
    is_pcl,
    is_pcl_via_bwt,
    lemma1_compatible,
    factors_k,
    palindromic_special_factorization,
    product_of_two_palindromes,
    special_factorizations,
)

# Two classifiers: palindromic structure, and Lyndon plus decreasing transform.
for w in ("acbcbbcbc", "acacbc", "acbcacc", "abacabbac", "abac", "abcbbbcbc"):
    f = palindromic_special_factorization(w)
    print(f"{w:10s} pcl={is_pcl(w)!s:5s} via_bwt={is_pcl_via_bwt(w)!s:5s} {f}")

# Every a . x . b . y . c split, palindromic or not.
for f in special_factorizations("acbcbbcbc"):
    print(f.parts, f.palindromic)

print(product_of_two_palindromes("acbcbbcbc"))

# The length-2 factors of a perfectly clustering word fit one of four sets.
print(lemma1_compatible(factors_k("acbcbbcbc", 2)))
print(lemma1_compatible(factors_k("abcbb", 2)))  # [] : no word a.bcb.b...c qualifies
