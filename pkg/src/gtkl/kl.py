"""Kazhdan-Lusztig polynomials of symmetric groups, mu-coefficients and left cells.

Polynomials are tuples of ints indexed by degree in ``q`` (``()`` is zero).
The table is filled one column ``w -> {x: P_{x,w}}`` at a time; a column
holds every ``x`` in the Bruhat interval ``[e, w]``.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .perms import (
    Permutation,
    format_oneline,
    identity,
    left_descents,
    left_mul_simple,
    length,
)
from .tableaux import Tableau, check_partition, enumerate_syt, rsk, rsk_inverse, TableauError

Poly = tuple[int, ...]

ONE: Poly = (1,)
ZERO: Poly = ()


class KLTableMiss(LookupError):
    """A lookup touched a column that was never populated."""


class FrozenTableError(RuntimeError):
    pass


def _trim(c: list[int]) -> Poly:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_add_into(acc: list[int], p: Poly, shift: int = 0, factor: int = 1) -> None:
    need = len(p) + shift
    if len(acc) < need:
        acc.extend([0] * (need - len(acc)))
    for i, c in enumerate(p):
        acc[i + shift] += factor * c


def poly_str(p: Poly, var: str = "q") -> str:
    if not p:
        return "0"
    terms = []
    for d, c in enumerate(p):
        if c == 0:
            continue
        mono = "" if d == 0 else var if d == 1 else f"{var}^{d}"
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}{mono}"
        terms.append(("-" if c < 0 else "+", body))
    out = terms[0][1] if terms[0][0] == "+" else "-" + terms[0][1]
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


class KLTable:
    """Memo of KL polynomials, sharded by the upper element ``w``.

    ``populate`` is the only writer.  After ``freeze`` the table is read-only
    and a lookup in a missing column raises :class:`KLTableMiss` instead of
    computing silently.
    """

    def __init__(self) -> None:
        self._columns: dict[Permutation, dict[Permutation, Poly]] = {}
        self._mus: dict[Permutation, list[tuple[Permutation, int]]] = {}
        self._length: dict[Permutation, int] = {}
        self._mu_faults: dict[tuple[Permutation, Permutation], int] = {}
        self.frozen = False

    def __contains__(self, w: Permutation) -> bool:
        return w in self._columns

    def __len__(self) -> int:
        return sum(len(c) for c in self._columns.values())

    @property
    def columns(self) -> int:
        return len(self._columns)

    def freeze(self) -> None:
        self.frozen = True

    def ell(self, w: Permutation) -> int:
        v = self._length.get(w)
        if v is None:
            v = self._length[w] = length(w)
        return v

    def populate(self, ws: Iterable[Permutation] | Permutation) -> None:
        if isinstance(ws, tuple) and ws and isinstance(ws[0], int):
            ws = [ws]
        for w in ws:
            if w not in self._columns:
                if self.frozen:
                    raise FrozenTableError(f"table is frozen; column {format_oneline(w)} missing")
                self._populate_column(w)

    def _populate_column(self, w: Permutation) -> None:
        # iterative over the dependency stack; recursion depth would be l(w)
        stack = [w]
        while stack:
            top = stack[-1]
            if top in self._columns:
                stack.pop()
                continue
            deps = self._dependencies(top)
            missing = [d for d in deps if d not in self._columns]
            if missing:
                stack.extend(missing)
                continue
            self._compute_column(top)
            stack.pop()

    @staticmethod
    def descent_for(w: Permutation) -> int | None:
        ds = left_descents(w)
        return min(ds) if ds else None

    def _dependencies(self, w: Permutation) -> list[Permutation]:
        s = self.descent_for(w)
        if s is None:
            return []
        v = left_mul_simple(s, w)
        if v not in self._columns:
            return [v]
        return [z for z, _ in self._mus[v] if s in left_descents(z) and z not in self._columns]

    def _compute_column(self, w: Permutation) -> None:
        lw = self.ell(w)
        s = self.descent_for(w)
        if s is None:
            col = {w: ONE}
        else:
            v = left_mul_simple(s, w)
            colv = self._columns[v]
            corrections = [
                (z, m, (lw - self.ell(z)) // 2)
                for z, m in self._mus[v]
                if s in left_descents(z)
            ]
            lower = set(colv)
            lower.update(left_mul_simple(s, x) for x in colv)
            col = {}
            for x in lower:
                sx = left_mul_simple(s, x)
                x_has_s = self.ell(sx) < self.ell(x)
                acc: list[int] = []
                # q^{1-c} P_{sx,v} + q^c P_{x,v}, with c = 1 when sx < x
                p1 = colv.get(sx)
                if p1:
                    poly_add_into(acc, p1, 0 if x_has_s else 1)
                p2 = colv.get(x)
                if p2:
                    poly_add_into(acc, p2, 1 if x_has_s else 0)
                for z, m, shift in corrections:
                    pz = self._columns[z].get(x)
                    if pz:
                        poly_add_into(acc, pz, shift, -m)
                p = _trim(acc)
                if p:
                    lx = self.ell(x)
                    if x != w and 2 * (len(p) - 1) > lw - lx - 1:
                        raise ArithmeticError(
                            f"degree bound violated for P_{{{format_oneline(x)},{format_oneline(w)}}} = {p}"
                        )
                    col[x] = p
        self._columns[w] = col
        mus = []
        for x, p in col.items():
            d = lw - self.ell(x) - 1
            if d >= 0 and d % 2 == 0 and len(p) > d // 2 and p[d // 2]:
                mus.append((x, p[d // 2]))
        mus.sort()
        self._mus[w] = mus

    def column(self, w: Permutation) -> dict[Permutation, Poly]:
        try:
            return self._columns[w]
        except KeyError:
            raise KLTableMiss(f"column {format_oneline(w)} was not populated") from None

    def lookup(self, x: Permutation, w: Permutation) -> Poly:
        return self.column(w).get(x, ZERO)

    def mu(self, x: Permutation, w: Permutation) -> int:
        fault = self._mu_faults.get((x, w))
        if fault is not None:
            return fault
        p = self.lookup(x, w)
        if not p:
            return 0
        d = self.ell(w) - self.ell(x) - 1
        if d < 0 or d % 2:
            return 0
        return p[d // 2] if len(p) > d // 2 else 0

    def mu_nonzero(self, w: Permutation) -> list[tuple[Permutation, int]]:
        self.column(w)
        return list(self._mus[w])

    def inject_mu_fault(self, x: Permutation, w: Permutation, value: int) -> None:
        """Test hook: make ``mu(x, w)`` report ``value``; the stored polynomials are untouched."""
        self._mu_faults[(x, w)] = value

    def clear_faults(self) -> None:
        self._mu_faults.clear()

    def dump_lines(self) -> list[str]:
        """``"x w c0 c1 ..."`` for every stored nonzero entry, sorted."""
        lines = []
        for w in sorted(self._columns):
            for x in sorted(self._columns[w]):
                coeffs = " ".join(map(str, self._columns[w][x]))
                lines.append(f"{format_oneline(x)} {format_oneline(w)} {coeffs}")
        return lines


def kl_polynomial(x: Permutation, w: Permutation, table: KLTable) -> Poly:
    """``P_{x,w}``; populates the column of ``w`` unless the table is frozen."""
    if len(x) != len(w):
        raise ValueError("permutations of different rank")
    if w not in table:
        table.populate([w])
    return table.lookup(x, w)


def mu(x: Permutation, w: Permutation, table: KLTable) -> int:
    """Coefficient of ``q^{(l(w)-l(x)-1)/2}`` in ``P_{x,w}``, read from the stored column."""
    if len(x) != len(w):
        raise ValueError("permutations of different rank")
    return table.mu(x, w)


def left_cell(shape: Sequence[int], q0: Tableau) -> dict[Tableau, Permutation]:
    """Permutations whose recording tableau is ``q0``, keyed by insertion tableau."""
    shape = check_partition(shape)
    if q0.shape != shape:
        raise TableauError(f"recording tableau {q0} does not have shape {shape}")
    return {p: rsk_inverse(p, q0) for p in enumerate_syt(shape)}


def left_cell_by_rsk(q0: Tableau) -> dict[Tableau, Permutation]:
    """Same cell found by running RSK over all of ``S_n``; slow oracle for small n."""
    from .perms import all_permutations

    out = {}
    for w in all_permutations(q0.n):
        p, q = rsk(w)
        if q == q0:
            out[p] = w
    return dict(sorted(out.items(), key=lambda kv: kv[0].row_word))


__all__ = [
    "KLTable",
    "KLTableMiss",
    "FrozenTableError",
    "Poly",
    "kl_polynomial",
    "mu",
    "left_cell",
    "left_cell_by_rsk",
    "poly_str",
    "identity",
]
