"""Gelfand-Tsetlin bases along multiplicity-free chains, in KL coordinates.

The standard basis is the joint eigenbasis of the Jucys-Murphy elements,
with the contents of ``T`` as eigenvalues.  The basis for a word ``b`` is
transported from it by the chain permutation ``u_b`` and cross-checked
against the joint eigenbasis of the conjugated Jucys-Murphy elements.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from . import linalg
from .cellmodule import CellModule, act_permutation, isotypic_projector
from .perms import Interval, chain_from_bits, chain_permutation, identity, transposition
from .tableaux import (
    Partition,
    Tableau,
    check_word,
    delete_max,
    leq,
    phi,
    sorted_by_order,
)


class GTConstructionError(RuntimeError):
    """Raised with the offending tableau and, for eigenspaces, the dimension found."""

    def __init__(self, message: str, tableau: Tableau | None = None, dimension: int | None = None) -> None:
        super().__init__(message)
        self.tableau = tableau
        self.dimension = dimension

    def witness(self) -> dict:
        out: dict = {"kind": "construction", "detail": str(self)}
        if self.tableau is not None:
            out["tableau"] = self.tableau.to_list()
        if self.dimension is not None:
            out["eigenspace_dim"] = self.dimension
        return out


@dataclass(frozen=True)
class BasisFamily:
    """GT vectors in KL coordinates, keyed by type tableau."""

    shape: Partition
    word: str
    vectors: dict[Tableau, tuple]

    def matrix(self, order) -> list[list]:
        """Matrix whose columns are the vectors in ``order``."""
        return linalg.from_columns([self.vectors[t] for t in order])


@dataclass(frozen=True)
class TransitionMatrix:
    """Expansion of the KL basis in a normalized GT basis.

    ``entries[i][j]`` is the coefficient of ``v_{phi(order[i])}`` in
    ``c_{order[j]}``.
    """

    shape: Partition
    word: str
    order: tuple[Tableau, ...]
    phi: dict[Tableau, Tableau]
    entries: list[list[int | Fraction]]
    family: BasisFamily = field(repr=False)
    scales: dict[Tableau, Fraction] = field(repr=False, default_factory=dict)

    def diagonal(self) -> list[int | Fraction]:
        return [self.entries[i][i] for i in range(len(self.order))]

    def to_dict(self) -> dict:
        return {
            "shape": list(self.shape),
            "word": self.word,
            "order": [t.to_list() for t in self.order],
            "phi": [[t.to_list(), self.phi[t].to_list()] for t in self.order],
            "entries": [[linalg.format_number(x) for x in row] for row in self.entries],
        }


def jucys_murphy_matrix(module: CellModule, k: int, u: tuple[int, ...] | None = None) -> list[list[int]]:
    """Matrix of ``u X_k u^-1`` with ``X_k = sum_{i<k} (i k)``."""
    n = module.n
    if not 2 <= k <= n:
        raise ValueError(f"Jucys-Murphy index {k} out of range 2..{n}")
    u = identity(n) if u is None else tuple(u)
    cache = module._cache.setdefault("jm", {})
    key = (k, u)
    if key not in cache:
        acc = linalg.zeros(module.dim, module.dim)
        for i in range(1, k):
            acc = linalg.add(acc, act_permutation(module, transposition(u[i - 1], u[k - 1], n)))
        cache[key] = acc
    return [list(r) for r in cache[key]]


def _joint_eigenline(module: CellModule, t: Tableau, u: tuple[int, ...] | None) -> list[int]:
    d = module.dim
    stacked = []
    for k in range(2, module.n + 1):
        x = jucys_murphy_matrix(module, k, u)
        c = t.content(k)
        for i in range(d):
            x[i][i] -= c
        stacked.extend(x)
    kernel = linalg.nullspace(stacked, d) if stacked else [[1] * d]
    if len(kernel) != 1:
        raise GTConstructionError(
            f"joint eigenspace for {t} in shape {module.shape} has dimension {len(kernel)}, expected 1",
            t,
            len(kernel),
        )
    return kernel[0]


def standard_gt_basis(module: CellModule) -> BasisFamily:
    """Joint Jucys-Murphy eigenvectors, one line per tableau, primitively scaled."""
    word = "0" * max(module.n - 2, 0)
    vectors = {t: tuple(_joint_eigenline(module, t, None)) for t in module.basis}
    return BasisFamily(module.shape, word, vectors)


def generalized_gt_basis(module: CellModule, b: str, standard: BasisFamily | None = None) -> BasisFamily:
    """Transport the standard basis by ``u_b``; agree with the conjugated-JM eigenlines or fail."""
    check_word(b)
    n = module.n
    if len(b) != max(n - 2, 0):
        raise ValueError(f"word {b!r} must have length {n - 2}")
    if standard is None:
        standard = standard_gt_basis(module)
    if n < 3:
        return BasisFamily(module.shape, b, dict(standard.vectors))
    u = chain_permutation(n, b)
    rho_u = act_permutation(module, u)
    vectors = {}
    for t in module.basis:
        moved = linalg.primitive(linalg.matvec(rho_u, standard.vectors[t]))
        line = _joint_eigenline(module, t, u)
        if not linalg.proportional(moved, line):
            raise GTConstructionError(
                f"transported vector for {t} (word {b}) is not the conjugated Jucys-Murphy eigenline", t
            )
        vectors[t] = tuple(moved)
    return BasisFamily(module.shape, b, vectors)


def restriction_type(t: Tableau, m: int) -> Partition:
    """Shape of ``t`` restricted to entries ``1..n-m+1``."""
    s = t
    for _ in range(m - 1):
        s = delete_max(s)
    return s.shape


def gt_type_failures(module: CellModule, family: BasisFamily) -> list[tuple[Tableau, int]]:
    """Pairs ``(T, m)`` where the isotypic projector along the chain moves ``v_T``."""
    n = module.n
    if n < 2:
        return []
    intervals = chain_from_bits(n, family.word).intervals
    bad = []
    for t in module.basis:
        v = list(family.vectors[t])
        for m in range(1, n):
            proj = isotypic_projector(module, intervals[m - 1], restriction_type(t, m))
            if linalg.matvec(proj, v) != v:
                bad.append((t, m))
    return bad


def verify_gt_types(module: CellModule, family: BasisFamily) -> bool:
    return not gt_type_failures(module, family)


def normalize_and_transition(module: CellModule, family: BasisFamily) -> TransitionMatrix:
    """Rescale each GT vector so its row of coefficients is primitive with positive diagonal.

    The row of ``v_P`` collects its coefficients across all expansions of
    the ``c_T``; its diagonal entry sits in the column of ``T = phi^-1(P)``.
    """
    shape, word = family.shape, family.word
    basis = module.basis
    order = sorted_by_order(shape, word, basis)
    phimap = {t: phi(shape, word, t) for t in basis}
    inv_phi = {v: k for k, v in phimap.items()}
    labels = [phimap[t] for t in order]
    v_mat = family.matrix(labels)
    try:
        coeffs = linalg.inverse(v_mat)
    except linalg.SingularMatrixError:
        raise GTConstructionError(f"GT family for {shape}, word {word!r} is singular") from None
    # coeffs[i][j]: coefficient of v_{labels[i]} in the basis vector c_{basis[j]}
    col = [module.index(t) for t in order]
    raw = [[Fraction(coeffs[i][col[j]]) for j in range(len(order))] for i in range(len(order))]
    entries = []
    scales = {}
    new_vectors = {}
    for i, p in enumerate(labels):
        row = raw[i]
        den = 1
        for x in row:
            den = den * x.denominator // gcd(den, x.denominator)
        ints = [int(x * den) for x in row]
        g = 0
        for x in ints:
            g = gcd(g, x)
        diag = ints[order.index(inv_phi[p])]
        if diag < 0:
            g = -g
        if g == 0:
            raise GTConstructionError(f"GT vector {p} never occurs in the KL expansion", p)
        entries.append([x // g for x in ints])
        # coefficient row is multiplied by den/g, so the vector is divided by it
        scales[p] = Fraction(g, den)
        new_vectors[p] = tuple(linalg.normalize_number(x * scales[p]) for x in family.vectors[p])
    normalized = BasisFamily(shape, word, {t: new_vectors[t] for t in basis})
    return TransitionMatrix(shape, word, tuple(order), phimap, entries, normalized, scales)


def support_violations(tm: TransitionMatrix) -> list[dict]:
    """Entries that break triangularity, plus vanishing diagonal entries."""
    out = []
    for j, t in enumerate(tm.order):
        for i, s in enumerate(tm.order):
            x = tm.entries[i][j]
            if x and not leq(tm.shape, tm.word, s, t):
                out.append({"kind": "support", "c": t.to_list(), "v_label": s.to_list(), "coefficient": str(x)})
        if tm.entries[j][j] == 0:
            out.append({"kind": "zero-diagonal", "c": t.to_list()})
    return out


__all__ = [
    "BasisFamily",
    "GTConstructionError",
    "Interval",
    "TransitionMatrix",
    "generalized_gt_basis",
    "gt_type_failures",
    "jucys_murphy_matrix",
    "normalize_and_transition",
    "restriction_type",
    "standard_gt_basis",
    "support_violations",
    "verify_gt_types",
]
