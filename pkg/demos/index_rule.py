"""
Ranking and unranking constrained words
=======================================

Every GF(4) word avoiding ``a2 0 a2`` has a lexicographic index that
the closed-form rule computes symbol by symbol.  Here we check it on a
six-symbol word and against a brute-force sort.
"""

from tdloco import code_params, codeword_of, index_of
from tdloco.oracle import enumerate_words
from tdloco.symbols import format_symbols, parse_gf4

p = code_params(6)
print("N(0..6) =", p.card)
print("inner sums =", p.inner_sum)

word = parse_gf4("1 a2 1 a2 a 0")
g = index_of(word, p)
print(format_symbols(word), "->", g)
print(g, "->", format_symbols(codeword_of(g, p)))

# The brute-force list agrees with the formula at every position.
words = enumerate_words(6)
print("brute force position:", words.index(word))
print("all agree:", all(index_of(w, p) == k for k, w in enumerate(words)))
