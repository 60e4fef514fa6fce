"""Free-group automorphisms that build perfectly clustering words.

Run: python demos/04_automorphisms.py
"""

from pclwords import (
    AUTOMORPHISMS,
    FreeGroupWord,
    decompose,
    inverse_automorphism,
    omega,
    palindromic_special_factorization,
    witness_from_directive,
)

for name, f in AUTOMORPHISMS.items():
    images = ", ".join(f"{x}->{f.images[x]}" for x in "abc")
    print(f"{name:9s} {images:22s} abac -> {f('abac')}")

# Inverses undo the maps, cancellation included.
g = inverse_automorphism(AUTOMORPHISMS["lambda_b"])
print(g(FreeGroupWord.from_word("aac")))

# A directive word in {a,c}*{a,b}* selects a composition applied to abac;
# the result has pal(u) as its first palindromic part.
for u in ("", "a", "c", "ca", "cab"):
    w = witness_from_directive(u)
    print(f"{u!r:6s} {w:20s} {palindromic_special_factorization(w)}")

# Exchanging a and c and reversing swaps the two parts.
w = witness_from_directive("ca")
print(palindromic_special_factorization(omega(w)))

# Every perfectly clustering word of length >= 3 comes from a shorter one.
w = "acbcbbcbc"
while len(w) >= 3:
    name, u = decompose(w)
    print(f"{w} = {name}({u})")
    w = u
