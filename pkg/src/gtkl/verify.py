"""Executable checks of the triangularity theorem and the facts it rests on.

Every check returns a :class:`VerificationReport`.  A failing report always
carries witnesses: the matrix entry, tableau or vector that broke the check.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import linalg
from .cellmodule import CellModule, act_permutation, build_cell_module
from .gt import (
    BasisFamily,
    GTConstructionError,
    TransitionMatrix,
    generalized_gt_basis,
    gt_type_failures,
    normalize_and_transition,
    standard_gt_basis,
    support_violations,
)
from .kl import KLTable
from .perms import (
    all_permutations,
    chain_from_bits,
    chain_permutation,
    compose,
    image,
    longest,
)
from .tableaux import (
    Partition,
    Tableau,
    all_words,
    check_partition,
    delete_max,
    evacuate,
    leq,
    partitions,
    remove_box,
    removable_rows,
    row_index,
    word_complement,
)

CHECK_ORDER = (
    "chain_images",
    "w0_evacuation",
    "restriction_filtration",
    "w0_twisted_filtration",
    "gt_types",
    "jm_transport",
    "w0_gt_transport",
    "triangularity",
    "leading_coefficients",
    "homomorphism_sample",
    "kl_pinning",
)


@dataclass
class VerificationReport:
    check: str
    n: int
    shape: Partition | None
    word: str | None
    outcome: str  # "pass" | "fail" | "resource" | "info"
    witnesses: list = field(default_factory=list)
    metrics: dict = field(default_factory=dict)
    payload: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.outcome in ("pass", "info")

    def key(self) -> tuple:
        shape_key = tuple(-p for p in self.shape) if self.shape else ()
        return (self.n, shape_key, CHECK_ORDER.index(self.check), self.word or "")

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "n": self.n,
            "shape": list(self.shape) if self.shape else None,
            "word": self.word,
            "outcome": self.outcome,
            "witnesses": self.witnesses,
            "metrics": self.metrics,
            "payload": self.payload,
        }


def _report(check, n, shape, word, witnesses, **extra) -> VerificationReport:
    return VerificationReport(check, n, shape, word, "fail" if witnesses else "pass", witnesses, **extra)


class Workspace:
    """Shared KL table plus per-shape caches of modules, GT bases and transition data."""

    def __init__(self, table: KLTable | None = None) -> None:
        self.table = table if table is not None else KLTable()
        self._modules: dict[Partition, CellModule] = {}
        self._standard: dict[Partition, BasisFamily] = {}
        self._families: dict[tuple[Partition, str], BasisFamily] = {}
        self._transitions: dict[tuple[Partition, str], TransitionMatrix] = {}
        self._signs: dict[Partition, int | None] = {}

    def module(self, shape: Sequence[int]) -> CellModule:
        shape = check_partition(shape)
        if shape not in self._modules:
            self._modules[shape] = build_cell_module(shape, self.table)
        return self._modules[shape]

    def standard(self, shape: Partition) -> BasisFamily:
        if shape not in self._standard:
            self._standard[shape] = standard_gt_basis(self.module(shape))
        return self._standard[shape]

    def family(self, shape: Partition, b: str) -> BasisFamily:
        key = (shape, b)
        if key not in self._families:
            self._families[key] = generalized_gt_basis(self.module(shape), b, self.standard(shape))
        return self._families[key]

    def transition(self, shape: Partition, b: str) -> TransitionMatrix:
        key = (shape, b)
        if key not in self._transitions:
            self._transitions[key] = normalize_and_transition(self.module(shape), self.family(shape, b))
        return self._transitions[key]


def _words(n: int) -> list[str]:
    return all_words(max(n - 2, 0))


def verify_main_theorem(shape: Sequence[int], b: str, ws: Workspace | None = None) -> VerificationReport:
    """Triangularity of the KL basis against the normalized GT basis of ``b``."""
    ws = ws or Workspace()
    shape = check_partition(shape)
    n = sum(shape)
    try:
        tm = ws.transition(shape, b)
    except GTConstructionError as exc:
        return _report("triangularity", n, shape, b, [exc.witness()])
    witnesses = support_violations(tm)
    for j, t in enumerate(tm.order):
        for i in range(len(tm.order)):
            x = tm.entries[i][j]
            if not isinstance(x, int):
                witnesses.append({"kind": "non-integral", "c": t.to_list(), "coefficient": str(x)})
    return _report(
        "triangularity",
        n,
        shape,
        b,
        witnesses,
        metrics={"dim": len(tm.order)},
        payload={
            "transition": tm.to_dict(),
            "diagonal": [str(x) for x in tm.diagonal()],
            "total_order": _is_total(shape, b, tm.order),
        },
    )


def recheck_triangularity(record: dict) -> list[dict]:
    """Redo the triangularity decision using only a serialized report.

    Support and integrality are read off the stored matrix, order and
    ``phi`` map; the order relation itself is recomputed.
    """
    from .serialize import transition_from_json

    tr = transition_from_json(record["payload"]["transition"])
    shape, word, order, entries = tr["shape"], tr["word"], tr["order"], tr["entries"]
    bad = []
    for j, t in enumerate(order):
        for i, s in enumerate(order):
            x = entries[i][j]
            if x and not leq(shape, word, s, t):
                bad.append({"kind": "support", "c": t.to_list(), "v_label": s.to_list()})
            if not isinstance(x, int):
                bad.append({"kind": "non-integral", "c": t.to_list()})
        if entries[j][j] == 0:
            bad.append({"kind": "zero-diagonal", "c": t.to_list()})
    if sorted(p.row_word for p in tr["phi"].values()) != sorted(t.row_word for t in order):
        bad.append({"kind": "phi-not-bijective"})
    return bad


def _is_total(shape: Partition, b: str, order: Sequence[Tableau]) -> bool:
    return all(leq(shape, b, s, t) or leq(shape, b, t, s) for i, s in enumerate(order) for t in order[i + 1:])


def _w0_images(module: CellModule) -> tuple[dict[Tableau, tuple[Tableau, int]], list[dict]]:
    # image of each c_T under w0 when it is a signed basis vector
    mat = act_permutation(module, longest(module.n))
    images = {}
    bad = []
    for j, t in enumerate(module.basis):
        nz = [(i, mat[i][j]) for i in range(module.dim) if mat[i][j]]
        if len(nz) != 1 or nz[0][1] not in (1, -1):
            bad.append({"kind": "not-signed-basis", "c": t.to_list(), "column": [str(mat[i][j]) for i in range(module.dim)]})
            continue
        images[t] = (module.basis[nz[0][0]], nz[0][1])
    return images, bad


def shape_sign(module: CellModule) -> int | None:
    images, bad = _w0_images(module)
    signs = {s for _, s in images.values()}
    return signs.pop() if not bad and len(signs) == 1 else None


def verify_mbs(shape: Sequence[int], ws: Workspace | None = None) -> VerificationReport:
    """``w0 c_T = sign * c_{ev T}`` with one sign for the whole shape."""
    ws = ws or Workspace()
    shape = check_partition(shape)
    module = ws.module(shape)
    images, witnesses = _w0_images(module)
    signs = set()
    for t, (target, sign) in images.items():
        signs.add(sign)
        if target != evacuate(t):
            witnesses.append({"kind": "not-evacuation", "c": t.to_list(), "image": target.to_list(), "evacuation": evacuate(t).to_list()})
    if len(signs) > 1:
        witnesses.append({"kind": "mixed-signs", "signs": sorted(signs)})
    sign = signs.pop() if len(signs) == 1 else None
    ws._signs[shape] = sign if not witnesses else None
    return _report("w0_evacuation", sum(shape), shape, None, witnesses, metrics={"dim": module.dim}, payload={"sign": sign})


def _filtration_check(
    module: CellModule,
    level: dict[Tableau, int],
    relabel: dict[Tableau, Tableau],
    gen_index: dict[int, int],
    ws: Workspace,
) -> list[dict]:
    """Invariance of the filtration by ``level`` and exact quotient matrices.

    ``gen_index[i]`` names the generator of the big module that plays the
    role of ``s_i`` of the smaller symmetric group.
    """
    shape = module.shape
    n = module.n
    witnesses = []
    for a in removable_rows(shape):
        sub = ws.module(remove_box(shape, a))
        inside = [j for j, t in enumerate(module.basis) if level[t] <= a]
        layer = [j for j, t in enumerate(module.basis) if level[t] == a]
        inside_set = set(inside)
        for i, k in gen_index.items():
            g = module.gens[k]
            for j in inside:
                leak = [r for r in range(module.dim) if g[r][j] and r not in inside_set]
                if leak:
                    witnesses.append({
                        "kind": "not-invariant", "row": a, "generator": i,
                        "c": module.basis[j].to_list(), "leaks_to": [module.basis[r].to_list() for r in leak],
                    })
            for jj in layer:
                for ii in layer:
                    big = g[ii][jj]
                    small = sub.gens[i][sub.index(relabel[module.basis[ii]])][sub.index(relabel[module.basis[jj]])]
                    if big != small:
                        witnesses.append({
                            "kind": "quotient-mismatch", "row": a, "generator": i,
                            "entry": [module.basis[ii].to_list(), module.basis[jj].to_list()],
                            "quotient": big, "sub_module": small,
                        })
    return witnesses


def verify_restriction(shape: Sequence[int], ws: Workspace | None = None) -> VerificationReport:
    """Subspaces ``span{c_T : row of n <= a}`` are ``S_{n-1}``-stable with cell-module quotients."""
    ws = ws or Workspace()
    shape = check_partition(shape)
    module = ws.module(shape)
    n = module.n
    if n < 2:
        return _report("restriction_filtration", n, shape, None, [])
    level = {t: row_index(t, n) for t in module.basis}
    relabel = {t: delete_max(t) for t in module.basis}
    witnesses = _filtration_check(module, level, relabel, {i: i for i in range(1, n - 1)}, ws)
    return _report("restriction_filtration", n, shape, None, witnesses, metrics={"dim": module.dim, "layers": len(removable_rows(shape))})


def verify_case2_structures(shape: Sequence[int], ws: Workspace | None = None) -> VerificationReport:
    """``w0`` carries the ev-filtration onto the plain one; the twisted quotient maps are isomorphisms."""
    ws = ws or Workspace()
    shape = check_partition(shape)
    module = ws.module(shape)
    n = module.n
    if n < 2 or module.dim == 1:
        return _report("w0_twisted_filtration", n, shape, None, [])
    if shape not in ws._signs:
        verify_mbs(shape, ws)
    sign = ws._signs[shape]
    if sign is None:
        return _report("w0_twisted_filtration", n, shape, None, [{"kind": "no-shape-sign"}])
    w0 = act_permutation(module, longest(n))
    plain = {t: row_index(t, n) for t in module.basis}
    twisted = {t: row_index(evacuate(t), n) for t in module.basis}
    witnesses = []
    for a in removable_rows(shape):
        src = [j for j, t in enumerate(module.basis) if plain[t] <= a]
        dst = {i for i, t in enumerate(module.basis) if twisted[t] <= a}
        if len(src) != len(dst):
            witnesses.append({"kind": "dimension", "row": a, "plain": len(src), "twisted": len(dst)})
        for j in src:
            leak = [i for i in range(module.dim) if w0[i][j] and i not in dst]
            if leak:
                witnesses.append({"kind": "w0-image", "row": a, "c": module.basis[j].to_list()})
        # commuting triangle: w0 then d on the plain layer equals sign * d(ev T)
        below = {i for i, t in enumerate(module.basis) if plain[t] < a}
        for j, t in enumerate(module.basis):
            if twisted[t] != a:
                continue
            col = {i: w0[i][j] for i in range(module.dim) if w0[i][j] and i not in below}
            expected = {module.index(evacuate(t)): sign}
            if col != expected:
                witnesses.append({"kind": "triangle", "row": a, "c": t.to_list()})
    relabel = {t: delete_max(evacuate(t)) for t in module.basis}
    witnesses += _filtration_check(module, twisted, relabel, {i: n - i for i in range(1, n - 1)}, ws)
    return _report("w0_twisted_filtration", n, shape, None, witnesses, metrics={"dim": module.dim}, payload={"sign": sign})


def verify_gt_types(shape: Sequence[int], b: str, ws: Workspace | None = None) -> VerificationReport:
    ws = ws or Workspace()
    shape = check_partition(shape)
    module = ws.module(shape)
    fam = ws.family(shape, b)
    bad = gt_type_failures(module, fam)
    return _report("gt_types", module.n, shape, b, [{"vector": t.to_list(), "step": m} for t, m in bad], metrics={"dim": module.dim})


def verify_w0_transport(shape: Sequence[int], ws: Workspace | None = None) -> VerificationReport:
    """``w0 v_T^b`` spans the line of ``v_T^{complement b}``."""
    ws = ws or Workspace()
    shape = check_partition(shape)
    module = ws.module(shape)
    n = module.n
    witnesses = []
    if n >= 3:
        w0 = act_permutation(module, longest(n))
        for b in _words(n):
            fam = ws.family(shape, b)
            bar = ws.family(shape, word_complement(b))
            for t in module.basis:
                if not linalg.proportional(linalg.matvec(w0, fam.vectors[t]), bar.vectors[t]):
                    witnesses.append({"word": b, "vector": t.to_list()})
    return _report("w0_gt_transport", n, shape, None, witnesses, metrics={"words": len(_words(n))})


def verify_jm_transport(shape: Sequence[int], ws: Workspace | None = None) -> VerificationReport:
    """The transported and conjugated-JM constructions give the same lines for every word."""
    ws = ws or Workspace()
    shape = check_partition(shape)
    n = sum(shape)
    witnesses = []
    for b in _words(n):
        try:
            ws.family(shape, b)
        except GTConstructionError as exc:
            witnesses.append({"word": b, **exc.witness()})
    return _report("jm_transport", n, shape, None, witnesses, metrics={"words": len(_words(n))})


def verify_chain_images(n: int) -> VerificationReport:
    """``u_b`` maps ``[1, n-m+1]`` onto ``I_m`` and complementing ``b`` multiplies by ``w0``."""
    witnesses = []
    for b in _words(n):
        if n < 2:
            break
        u = chain_permutation(n, b)
        chain = chain_from_bits(n, b)
        for m, iv in enumerate(chain.intervals, start=1):
            if image(u, range(1, n - m + 2)) != frozenset(iv.elements()):
                witnesses.append({"word": b, "step": m, "u": list(u)})
        if n >= 3 and chain_permutation(n, word_complement(b)) != compose(longest(n), u):
            witnesses.append({"word": b, "kind": "complement", "u": list(u)})
    return _report("chain_images", n, None, None, witnesses, metrics={"chains": len(_words(n))})


def verify_leading_coefficients(shape: Sequence[int], ws: Workspace | None = None) -> VerificationReport:
    """``|a_T|`` does not depend on the word.

    The leading coefficient is attached to the GT label ``P = phi_b(T)`` of
    the vector it multiplies; keyed that way it is the same for every word.
    """
    ws = ws or Workspace()
    shape = check_partition(shape)
    n = sum(shape)
    table: dict[Tableau, dict[str, int]] = {}
    for b in _words(n):
        try:
            tm = ws.transition(shape, b)
        except GTConstructionError as exc:
            return _report("leading_coefficients", n, shape, None, [{"word": b, **exc.witness()}])
        for i, t in enumerate(tm.order):
            table.setdefault(tm.phi[t], {})[b] = tm.entries[i][i]
    witnesses = []
    for p, per_word in table.items():
        if len({abs(x) for x in per_word.values()}) > 1:
            witnesses.append({"v_label": p.to_list(), "values": {w: str(x) for w, x in per_word.items()}})
    rows = sorted(table.items(), key=lambda kv: kv[0].row_word)
    payload = {"leading": [[p.to_list(), sorted({str(abs(x)) for x in v.values()})] for p, v in rows]}
    return _report("leading_coefficients", n, shape, None, witnesses, payload=payload)


def verify_homomorphism_sample(shape: Sequence[int], ws: Workspace | None = None, seed: int = 0, samples: int = 10) -> VerificationReport:
    ws = ws or Workspace()
    shape = check_partition(shape)
    module = ws.module(shape)
    n = module.n
    rng = random.Random(f"{seed}:{shape}")
    perms = all_permutations(n)
    witnesses = []
    for _ in range(samples):
        u, v = rng.choice(perms), rng.choice(perms)
        lhs = act_permutation(module, compose(u, v))
        rhs = linalg.matmul(act_permutation(module, u), act_permutation(module, v))
        if lhs != rhs:
            witnesses.append({"u": list(u), "v": list(v)})
    return _report("homomorphism_sample", n, shape, None, witnesses, metrics={"samples": samples, "seed": seed})


def kl_pinning(shape: Sequence[int], ws: Workspace | None = None) -> VerificationReport:
    """Exploratory: for each T, dimension of the intersection over all words of the triangular spans.

    All dimensions equal to 1 means triangularity against every GT basis
    determines each ``c_T`` up to scalar.  No pass/fail meaning.
    """
    ws = ws or Workspace()
    shape = check_partition(shape)
    module = ws.module(shape)
    n = module.n
    dims = {}
    for t in module.basis:
        constraints = []
        for b in _words(n):
            tm = ws.transition(shape, b)
            # annihilators of span{v_phi(S) : S <= T} pinned within the full space
            span = [tm.family.vectors[tm.phi[s]] for s in tm.order if leq(shape, b, s, t)]
            constraints.extend(linalg.nullspace(span, module.dim))
        if constraints:
            dims[t] = len(linalg.nullspace(constraints, module.dim))
        else:
            dims[t] = module.dim
    pinned = all(d == 1 for d in dims.values())
    return VerificationReport(
        "kl_pinning", n, shape, None, "info",
        payload={"pinned": pinned, "dims": [[t.to_list(), d] for t, d in dims.items()]},
    )


def shape_reports(shape: Partition, words: Iterable[str] | None, seed: int, ws: Workspace, checks: set[str] | None = None, timings: bool = False) -> list[VerificationReport]:
    n = sum(shape)
    words = list(_words(n) if words is None else words)
    runs = []

    def want(name: str) -> bool:
        return checks is None or name in checks

    def timed(fn, *args, **kwargs) -> VerificationReport:
        t0 = time.perf_counter()
        try:
            rep = fn(*args, **kwargs)
        except (MemoryError, RecursionError) as exc:
            word = args[1] if len(args) > 1 and isinstance(args[1], str) else None
            rep = VerificationReport(_CHECK_OF[fn.__name__], n, shape, word, "resource", [{"detail": repr(exc)}])
        if timings:
            rep.metrics["seconds"] = round(time.perf_counter() - t0, 6)
        return rep

    if want("w0_evacuation"):
        runs.append(timed(verify_mbs, shape, ws))
    if want("restriction_filtration"):
        runs.append(timed(verify_restriction, shape, ws))
    if want("w0_twisted_filtration"):
        runs.append(timed(verify_case2_structures, shape, ws))
    if want("jm_transport"):
        runs.append(timed(verify_jm_transport, shape, ws))
    if want("w0_gt_transport"):
        runs.append(timed(verify_w0_transport, shape, ws))
    for b in words:
        if want("gt_types"):
            runs.append(timed(verify_gt_types, shape, b, ws))
        if want("triangularity"):
            runs.append(timed(verify_main_theorem, shape, b, ws))
    if want("leading_coefficients"):
        runs.append(timed(verify_leading_coefficients, shape, ws))
    if want("homomorphism_sample"):
        runs.append(timed(verify_homomorphism_sample, shape, ws, seed=seed))
    if want("kl_pinning") and n <= 5:
        runs.append(timed(kl_pinning, shape, ws))
    return runs


_CHECK_OF = {
    "verify_mbs": "w0_evacuation",
    "verify_restriction": "restriction_filtration",
    "verify_case2_structures": "w0_twisted_filtration",
    "verify_jm_transport": "jm_transport",
    "verify_w0_transport": "w0_gt_transport",
    "verify_gt_types": "gt_types",
    "verify_main_theorem": "triangularity",
    "verify_leading_coefficients": "leading_coefficients",
    "verify_homomorphism_sample": "homomorphism_sample",
    "kl_pinning": "kl_pinning",
}

_worker_ws: Workspace | None = None


def _shape_task(args) -> list[dict]:
    global _worker_ws
    shape, words, seed, checks, timings = args
    if _worker_ws is None:
        _worker_ws = Workspace()
    return [r.to_dict() for r in shape_reports(shape, words, seed, _worker_ws, checks, timings)]


def _from_dict(d: dict) -> VerificationReport:
    return VerificationReport(
        d["check"], d["n"], tuple(d["shape"]) if d["shape"] else None, d["word"], d["outcome"],
        d["witnesses"], d["metrics"], d["payload"],
    )


def run_suite(
    n_min: int,
    n_max: int,
    shapes: Iterable[Sequence[int]] | None = None,
    words: Iterable[str] | None = None,
    jobs: int = 1,
    seed: int = 0,
    checks: Iterable[str] | None = None,
    ws: Workspace | None = None,
    timings: bool = False,
) -> list[VerificationReport]:
    """Run every check for each shape of each rank in ``n_min..n_max``.

    ``shapes`` and ``words`` filter the sweep; ``checks`` restricts it to the
    named checks.  Reports come back sorted by (n, shape, check, word)
    whatever the completion order.
    """
    if not 2 <= n_min <= n_max:
        raise ValueError("need 2 <= n_min <= n_max")
    shape_filter = {check_partition(s) for s in shapes} if shapes is not None else None
    word_list = list(words) if words is not None else None
    check_set = set(checks) if checks is not None else None
    unknown = (check_set or set()) - set(CHECK_ORDER)
    if unknown:
        raise ValueError(f"unknown checks: {sorted(unknown)}")
    reports: list[VerificationReport] = []
    tasks = []
    for n in range(n_min, n_max + 1):
        if check_set is None or "chain_images" in check_set:
            reports.append(verify_chain_images(n))
        for shape in partitions(n):
            if shape_filter is not None and shape not in shape_filter:
                continue
            wl = None
            if word_list is not None:
                wl = [b for b in word_list if len(b) == max(n - 2, 0)]
            tasks.append((shape, wl, seed, check_set, timings))
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for batch in pool.map(_shape_task, tasks):
                reports.extend(_from_dict(d) for d in batch)
    else:
        ws = ws or Workspace()
        for shape, wl, sd, cs, tm in tasks:
            reports.extend(shape_reports(shape, wl, sd, ws, cs, tm))
    reports.sort(key=VerificationReport.key)
    return reports


def summarize(reports: Sequence[VerificationReport]) -> dict:
    counts: dict[str, int] = {}
    by_check: dict[str, dict[str, int]] = {}
    signs = {}
    diagonals: dict[str, dict[str, list[str]]] = {}
    for r in reports:
        counts[r.outcome] = counts.get(r.outcome, 0) + 1
        by_check.setdefault(r.check, {}).setdefault(r.outcome, 0)
        by_check[r.check][r.outcome] += 1
        label = ",".join(map(str, r.shape)) if r.shape else None
        if r.check == "w0_evacuation":
            signs[label] = r.payload.get("sign")
        if r.check == "triangularity" and "diagonal" in r.payload:
            diagonals.setdefault(label, {})[r.word] = r.payload["diagonal"]
    return {
        "reports": len(reports),
        "outcomes": dict(sorted(counts.items())),
        "by_check": {k: dict(sorted(v.items())) for k, v in sorted(by_check.items(), key=lambda kv: CHECK_ORDER.index(kv[0]))},
        "signs": signs,
        "diagonals": diagonals,
        "all_passed": all(r.passed for r in reports),
    }
