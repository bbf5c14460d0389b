"""Specht modules realized on the KL basis of a left cell, at ``q = 1``.

The coordinate basis is ``{c_T}`` indexed by the insertion tableaux of the
cell.  A simple transposition ``s_k`` acts by ``-1`` on ``c_T`` when ``k`` is
a descent of ``T``; otherwise

    s_k c_T = c_T + sum over T' with k in Des(T') of mu(T', T) c_{T'}

where ``mu`` is the symmetrized W-graph weight between the cell elements.
Generator matrices are integral; matrix column ``j`` is the image of the
``j``-th basis vector.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import linalg
from .kl import KLTable, left_cell
from .perms import (
    Interval,
    Permutation,
    PermutationError,
    cycle_type,
    identity,
    inverse,
    left_mul_simple,
    reduced_word,
)
from .tableaux import (
    Partition,
    Tableau,
    check_partition,
    descent_set,
    enumerate_syt,
    hook_length_count,
    partitions,
    superstandard_column,
)


class CellModuleError(RuntimeError):
    pass


@dataclass(frozen=True)
class CellModule:
    shape: Partition
    basis: tuple[Tableau, ...]
    gens: dict[int, tuple[tuple[int, ...], ...]]
    cell: dict[Tableau, Permutation] = field(compare=False, repr=False)
    table: KLTable | None = field(default=None, compare=False, repr=False)
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def n(self) -> int:
        return sum(self.shape)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index(self, t: Tableau) -> int:
        idx = self._cache.get("index")
        if idx is None:
            idx = self._cache["index"] = {b: i for i, b in enumerate(self.basis)}
        return idx[t]

    def gen(self, k: int) -> list[list[int]]:
        return [list(r) for r in self.gens[k]]


def build_cell_module(shape: Sequence[int], table: KLTable, q0: Tableau | None = None) -> CellModule:
    """The cell module of ``shape`` with integral generator matrices.

    The KL columns of the cell are populated here unless ``table`` is
    frozen, in which case they must already be present.
    """
    shape = check_partition(shape)
    q0 = q0 or superstandard_column(shape)
    cell = left_cell(shape, q0)
    basis = enumerate_syt(shape)
    n = sum(shape)
    perms = [cell[t] for t in basis]
    if not table.frozen:
        table.populate(perms)
    d = len(basis)
    descents = [descent_set(t) for t in basis]
    weight = [[0] * d for _ in range(d)]
    for i in range(d):
        for j in range(d):
            if i != j:
                weight[i][j] = table.mu(perms[i], perms[j]) + table.mu(perms[j], perms[i])
    gens = {}
    for k in range(1, n):
        m = [[0] * d for _ in range(d)]
        for j in range(d):
            if k in descents[j]:
                m[j][j] = -1
                continue
            m[j][j] = 1
            for i in range(d):
                if k in descents[i] and weight[i][j]:
                    m[i][j] = weight[i][j]
        gens[k] = tuple(tuple(r) for r in m)
    return CellModule(shape, basis, gens, cell, table)


def act_permutation(module: CellModule, w: Sequence[int]) -> list[list[int]]:
    """Matrix of ``w`` as a product of generators along a reduced word."""
    w = tuple(w)
    if len(w) != module.n:
        raise PermutationError(f"permutation of rank {len(w)} acting on a rank-{module.n} module")
    cache = module._cache.setdefault("act", {})
    m = cache.get(w)
    if m is None:
        m = linalg.identity(module.dim)
        for k in reduced_word(w):
            m = linalg.matmul(m, module.gens[k])
        cache[w] = m
    return [list(r) for r in m]


def character(module: CellModule, w: Sequence[int]) -> int:
    return linalg.trace(act_permutation(module, w))


def _class_rep(ct: tuple[int, ...], n: int) -> Permutation:
    # product of consecutive cycles (1 2 .. a)(a+1 ..) ...
    w = list(range(1, n + 1))
    start = 0
    for c in ct:
        block = list(range(start + 1, start + c + 1))
        for i, x in enumerate(block):
            w[x - 1] = block[(i + 1) % c]
        start += c
    return tuple(w)


def character_by_class(module: CellModule) -> dict[tuple[int, ...], int]:
    """Character values keyed by cycle type."""
    cached = module._cache.get("classes")
    if cached is None:
        n = module.n
        cached = {ct: character(module, _class_rep(ct, n)) for ct in partitions(n)}
        module._cache["classes"] = cached
    return cached


_modules: dict[tuple[int, Partition], CellModule] = {}


def module_for(shape: Sequence[int], table: KLTable) -> CellModule:
    """Cell module memoized per (table, shape)."""
    key = (id(table), check_partition(shape))
    m = _modules.get(key)
    if m is None or m.table is not table:
        m = _modules[key] = build_cell_module(key[1], table)
    return m


def group_elements(interval: Interval, n: int) -> list[Permutation]:
    """All of ``S_I`` inside ``S_n``, found by breadth-first search on simple generators."""
    gens = [k for k in range(interval.lo, interval.hi)]
    start = identity(n)
    seen = {start}
    order = [start]
    frontier = [start]
    while frontier:
        nxt = []
        for g in frontier:
            for k in gens:
                h = left_mul_simple(k, g)
                if h not in seen:
                    seen.add(h)
                    order.append(h)
                    nxt.append(h)
        frontier = nxt
    return order


def _restricted_cycle_type(g: Permutation, interval: Interval) -> tuple[int, ...]:
    ct = list(cycle_type(g))
    # drop the fixed points contributed by the complement of the interval
    for _ in range(len(g) - len(interval)):
        ct.remove(1)
    return tuple(ct)


def isotypic_projector(module: CellModule, interval: Interval, sub_shape: Sequence[int]) -> list[list[Fraction | int]]:
    """Central idempotent of ``sub_shape`` for ``S_I`` acting on ``module``.

    ``(dim / |S_I|) * sum_g chi(g^-1) rho(g)``, with ``chi`` taken from the
    cell module of ``sub_shape`` itself.
    """
    sub_shape = check_partition(sub_shape)
    if sum(sub_shape) != len(interval):
        raise ValueError(f"{sub_shape} is not a partition of |{interval}| = {len(interval)}")
    if interval.hi > module.n:
        raise ValueError(f"{interval} is not inside [1,{module.n}]")
    key = ("proj", interval, sub_shape)
    cached = module._cache.get(key)
    if cached is not None:
        return [list(r) for r in cached]
    if module.table is None:
        raise CellModuleError("module has no KL table for building sub-shape characters")
    sub = module_for(sub_shape, module.table)
    chi = character_by_class(sub)
    acc = linalg.zeros(module.dim, module.dim)
    # rho(g) is built incrementally along the BFS tree: rho(s_k g) = rho(s_k) rho(g)
    gens = [k for k in range(interval.lo, interval.hi)]
    start = identity(module.n)
    mats = {start: linalg.identity(module.dim)}
    seen = {start}
    frontier = [start]
    count = 0
    while frontier:
        nxt = []
        for g in frontier:
            mg = mats.pop(g)
            c = chi[_restricted_cycle_type(inverse(g), interval)]
            if c:
                for i, row in enumerate(mg):
                    arow = acc[i]
                    for j, x in enumerate(row):
                        if x:
                            arow[j] += c * x
            count += 1
            for k in gens:
                h = left_mul_simple(k, g)
                if h not in seen:
                    seen.add(h)
                    mats[h] = linalg.matmul(module.gens[k], mg)
                    nxt.append(h)
        frontier = nxt
    scale = Fraction(sub.dim, count)
    proj = [[linalg.normalize_number(scale * x) for x in row] for row in acc]
    module._cache[key] = proj
    return [list(r) for r in proj]
