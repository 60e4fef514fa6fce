"""Burrows-Wheeler transform and clustering.

Run: python demos/01_burrows_wheeler.py
"""

from pclwords import bwt, clustering_report, is_perfectly_clustering, conjugates

# The transform sorts the rotations and reads off their last letters.
for w in ("apartment", "aluminium", "banana"):
    print(f"bwt({w}) = {bwt(w)}")

# aluminium clusters every letter into one run; the order of the runs,
# as ranks among {a, i, l, m, n, u}, is the clustering permutation.
r = clustering_report("aluminium")
print("runs:", r.runs)
print("permutation:", r.permutation_string)

# A word is perfectly clustering when the runs come out in decreasing order.
w = "acbcbbcbc"
r = clustering_report(w)
print(f"{w}: bwt={r.bwt} perfect={r.perfect}")

# Perfect clustering is a property of the conjugation class.
print(all(is_perfectly_clustering(c) for c in conjugates(w)))

# The letter order is configurable; ranks, not code points, drive the sort.
print(bwt("abc", "cab"), "vs", bwt("abc"))
