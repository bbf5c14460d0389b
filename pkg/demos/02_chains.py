# Multiplicity-free chains of interval subgroups and the permutations that
# carry the standard chain onto them.

from gtkl.perms import chain_from_bits, chain_permutation, format_oneline, image, longest, compose
from gtkl.tableaux import all_words, word_complement

n = 6
for b in ["0000", "1001", "1111"]:
    chain = chain_from_bits(n, b)
    u = chain_permutation(n, b)
    print(b, " ".join(str(iv) for iv in chain.intervals), " u =", format_oneline(u))

# u maps each initial segment [1, n-m+1] onto the m-th interval.

b = "1001"
u = chain_permutation(n, b)
for m, iv in enumerate(chain_from_bits(n, b).intervals, start=1):
    print(m, sorted(image(u, range(1, n - m + 2))), "->", iv)

# Complementing the word multiplies u by the longest element on the left.

print(all(chain_permutation(n, word_complement(c)) == compose(longest(n), chain_permutation(n, c)) for c in all_words(n - 2)))
