# Kazhdan-Lusztig polynomials of S_4 and S_5 from a shared column table.

from collections import Counter

from gtkl.kl import KLTable, kl_polynomial, poly_str
from gtkl.perms import all_permutations, parse_oneline

table = KLTable()
print(poly_str(kl_polynomial(parse_oneline("1324"), parse_oneline("3412"), table)))
print(poly_str(kl_polynomial(parse_oneline("2143"), parse_oneline("4231"), table)))

# Distribution of polynomials over all Bruhat pairs of S_5.

table.populate(all_permutations(5))
dist = Counter(poly_str(p) for w in all_permutations(5) for p in table.column(w).values())
for p, count in sorted(dist.items(), key=lambda kv: (-kv[1], kv[0])):
    print(f"{count:6d}  {p}")
