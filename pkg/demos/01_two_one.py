# The smallest interesting case: the two-dimensional Specht module of shape (2,1).
#
# We build the cell module, look at its generators, then expand the KL basis
# in the two GT bases (one per binary word of length 1).

from gtkl import Tableau
from gtkl.verify import Workspace

ws = Workspace()
module = ws.module((2, 1))

# Basis vectors are indexed by standard tableaux; columns are images.

print("basis:", [str(t) for t in module.basis])
for k in (1, 2):
    print(f"s_{k} =", module.gen(k))

# The standard chain (word "0") and the reversed chain (word "1").

S = Tableau.of([[1, 3], [2]])
T = Tableau.of([[1, 2], [3]])

for b in ("0", "1"):
    tm = ws.transition((2, 1), b)
    print(f"\nword {b}: order", " < ".join(str(t) for t in tm.order))
    for j, c in enumerate(tm.order):
        terms = [f"{tm.entries[i][j]}*v[{tm.phi[s]}]" for i, s in enumerate(tm.order) if tm.entries[i][j]]
        print(f"  c[{c}] =", " + ".join(terms))

# Each c_T only involves GT vectors lower in the order, with a nonzero,
# integral leading coefficient.
