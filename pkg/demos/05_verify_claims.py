"""Exhaustive bounded checks over the catalog of perfectly clustering Lyndon words.

Run: python demos/05_verify_claims.py [bound]
"""

import sys

from pclwords import CLAIMS, compute_sets, enumerate_pcl, membership, verify_claim

bound = int(sys.argv[1]) if len(sys.argv) > 1 else 12

catalog = enumerate_pcl(bound)
print(f"{len(catalog)} perfectly clustering Lyndon words of length <= {bound}")
for w, f in catalog.entries[:8]:
    print(f"  {w:10s} {f}")

p1, p2 = compute_sets(catalog)
print(f"P1 slice: {len(p1)} palindromes, P2 slice: {len(p2)}")
common = sorted(set(p1.elements) & set(p2.elements), key=lambda p: (len(p), p))
print("in both:", common[:15], "...")

for side in ("P1", "P2"):
    v = membership(side, "bcb", bound)
    print(side, "bcb:", v.status.value, v.witness or sorted(v.certificate or ()))

for claim in CLAIMS:
    r = verify_claim(claim, bound)
    print(f"{claim:20s} {r.status:14s} checked={r.words_checked}")
