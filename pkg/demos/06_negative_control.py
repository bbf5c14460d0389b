# The checks are not vacuous: change one W-graph weight and watch the
# triangularity check fail with a witness.

from gtkl.kl import KLTable
from gtkl.perms import format_oneline
from gtkl.tableaux import all_words
from gtkl.verify import Workspace, verify_main_theorem

shape = (3, 2)
table = KLTable()
module = Workspace(table).module(shape)
perms = [module.cell[t] for t in module.basis]
x, w = next((x, w) for w in perms for x in perms if table.mu(x, w))
print("corrupting mu", format_oneline(x), format_oneline(w), "from", table.mu(x, w), "to 2")
table.inject_mu_fault(x, w, 2)

corrupt = Workspace(table)
for b in all_words(3):
    r = verify_main_theorem(shape, b, corrupt)
    print(b, r.outcome, r.witnesses[:1])
