# The longest element acts on the KL basis by a signed permutation, and the
# underlying permutation of tableaux is evacuation.

from gtkl.cellmodule import act_permutation
from gtkl.perms import longest
from gtkl.tableaux import evacuate, partitions
from gtkl.verify import Workspace, shape_sign

ws = Workspace()
for lam in partitions(5):
    module = ws.module(lam)
    w0 = act_permutation(module, longest(5))
    hits = sum(1 for j, t in enumerate(module.basis) if w0[module.index(evacuate(t))][j] != 0)
    print(lam, "dim", module.dim, "sign", shape_sign(module), "evacuation matches", hits == module.dim)
