"""Palindromic closure, iterated palindromes and directive words.

Run: python demos/02_iterated_palindromes.py
"""

from pclwords import directive_of, is_christoffel, is_separating, pal, palindromic_closure
from pclwords.palindromes import pal_prefixes
from pclwords.words import lyndon_words

print(palindromic_closure("ab"), palindromic_closure("ababaa"))

# Pal folds the closure over a directive word; each step is a palindromic prefix
# of the final word.
for p in pal_prefixes("abba"):
    print(repr(p))

# Going back: the directive word, or None for palindromes outside the image.
print(directive_of("ababaababa"), directive_of("bacab"))

# The first directive letter appears in every length-2 factor.
u = "bcab"
print(pal(u), is_separating("b", pal(u)))

# Christoffel words a m b have an iterated palindrome in the middle.
print([w for w in lyndon_words("ab", 7) if len(w) == 7 and is_christoffel(w)])
