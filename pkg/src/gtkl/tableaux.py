"""Partitions, standard Young tableaux and the recursive relabelings on them.

Partitions are plain tuples of positive ints, binary words are strings over
``"01"``, and tableaux are immutable :class:`Tableau` values.  Rows are
numbered from 1 at the top.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import factorial
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]


class TableauError(ValueError):
    pass


def check_partition(parts: Iterable[int]) -> Partition:
    """Validate and return ``parts`` as a partition tuple."""
    parts = tuple(parts)
    if not parts or any(not isinstance(p, int) or p <= 0 for p in parts):
        raise TableauError(f"partition parts must be positive integers: {parts!r}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise TableauError(f"partition parts must be weakly decreasing: {parts!r}")
    return parts


def partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse lexicographic order, ``(n)`` first."""

    def gen(rest: int, cap: int) -> Iterator[Partition]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return list(gen(n, n))


def removable_rows(shape: Partition) -> list[int]:
    """1-based rows whose last box can be removed, top to bottom."""
    return [i + 1 for i in range(len(shape)) if i == len(shape) - 1 or shape[i] > shape[i + 1]]


def remove_box(shape: Partition, row: int) -> Partition:
    parts = list(shape)
    parts[row - 1] -= 1
    if parts[row - 1] < 0 or (row < len(parts) and parts[row - 1] < parts[row]):
        raise TableauError(f"row {row} of {shape} has no removable box")
    return tuple(p for p in parts if p)


def conjugate(shape: Partition) -> Partition:
    return tuple(sum(1 for p in shape if p > j) for j in range(shape[0])) if shape else ()


@dataclass(frozen=True)
class Tableau:
    """A standard Young tableau stored as rows of entries, top row first."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if any(len(r) == 0 for r in rows):
            raise TableauError("tableau rows must be nonempty")
        shape = tuple(len(r) for r in rows)
        if rows:
            check_partition(shape)
        entries = sorted(x for r in rows for x in r)
        if entries != list(range(1, len(entries) + 1)):
            raise TableauError(f"entries must be 1..n exactly once: {rows!r}")
        for i, r in enumerate(rows):
            if any(r[j] >= r[j + 1] for j in range(len(r) - 1)):
                raise TableauError(f"row {i + 1} is not increasing: {rows!r}")
            if i and any(rows[i - 1][j] >= r[j] for j in range(len(r))):
                raise TableauError(f"a column is not increasing: {rows!r}")

    @classmethod
    def of(cls, rows: Iterable[Iterable[int]]) -> "Tableau":
        return cls(tuple(tuple(r) for r in rows))

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.rows)

    @cached_property
    def positions(self) -> dict[int, tuple[int, int]]:
        """Entry -> (row, column), both 0-based."""
        return {x: (i, j) for i, r in enumerate(self.rows) for j, x in enumerate(r)}

    @cached_property
    def row_word(self) -> tuple[int, ...]:
        return tuple(x for r in self.rows for x in r)

    def row_of(self, k: int) -> int:
        return row_index(self, k)

    def content(self, k: int) -> int:
        i, j = self.positions[k]
        return j - i

    def to_list(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __str__(self) -> str:
        return "/".join(",".join(map(str, r)) for r in self.rows)


def one_row(n: int) -> Tableau:
    return Tableau(((*range(1, n + 1),),))


def superstandard_column(shape: Partition) -> Tableau:
    """Fill the columns of ``shape`` top to bottom, left to right."""
    shape = check_partition(shape)
    cols = conjugate(shape)
    rows: list[list[int]] = [[] for _ in shape]
    k = 1
    for height in cols:
        for i in range(height):
            rows[i].append(k)
            k += 1
    return Tableau.of(rows)


@lru_cache(maxsize=None)
def _syt(shape: Partition) -> tuple[Tableau, ...]:
    n = sum(shape)
    if n == 0:
        return ()
    if n == 1:
        return (Tableau(((1,),)),)
    found = []
    for row in removable_rows(shape):
        for s in _syt(remove_box(shape, row)):
            found.append(append_max(s, shape))
    return tuple(sorted(found, key=lambda t: t.row_word))


def enumerate_syt(shape: Iterable[int]) -> tuple[Tableau, ...]:
    """All standard tableaux of ``shape``, sorted by row reading word."""
    return _syt(check_partition(shape))


def hook_length_count(shape: Iterable[int]) -> int:
    shape = check_partition(shape)
    cols = conjugate(shape)
    prod = 1
    for i, p in enumerate(shape):
        for j in range(p):
            prod *= (p - j - 1) + (cols[j] - i - 1) + 1
    return factorial(sum(shape)) // prod


def row_index(t: Tableau, k: int) -> int:
    """1-based row containing ``k``."""
    if not 1 <= k <= t.n:
        raise TableauError(f"entry {k} out of range 1..{t.n}")
    return t.positions[k][0] + 1


def descent_set(t: Tableau) -> frozenset[int]:
    """Entries ``k`` whose successor ``k+1`` sits in a strictly lower row."""
    pos = t.positions
    return frozenset(k for k in range(1, t.n) if pos[k + 1][0] > pos[k][0])


def delete_max(t: Tableau) -> Tableau:
    n = t.n
    if n == 0:
        raise TableauError("cannot delete from an empty tableau")
    i = t.positions[n][0]
    rows = [list(r) for r in t.rows]
    rows[i].pop()
    return Tableau.of(r for r in rows if r)


def append_max(s: Tableau, target: Iterable[int]) -> Tableau:
    """Add the box ``n+1`` to ``s`` so that its shape becomes ``target``."""
    target = check_partition(target)
    shape = s.shape
    if sum(target) != sum(shape) + 1:
        raise TableauError(f"{target} is not a one-box extension of {shape}")
    padded = shape + (0,) * (len(target) - len(shape))
    if len(padded) != len(target):
        raise TableauError(f"{target} is not a one-box extension of {shape}")
    diff = [t - p for t, p in zip(target, padded)]
    if sorted(diff) != [0] * (len(diff) - 1) + [1]:
        raise TableauError(f"{target} is not a one-box extension of {shape}")
    row = diff.index(1)
    rows = [list(r) for r in s.rows] + [[]]
    rows[row].append(s.n + 1)
    return Tableau.of(r for r in rows if r)


@lru_cache(maxsize=None)
def evacuate(t: Tableau) -> Tableau:
    """Schuetzenberger evacuation by repeated jeu-de-taquin deletion of the minimum.

    At step ``i`` the smallest remaining entry is removed, the hole is slid
    out to the rim, and the vacated outer cell is labelled ``n + 1 - i``.
    """
    n = t.n
    grid = [list(r) for r in t.rows]
    out = [[0] * len(r) for r in t.rows]
    for step in range(1, n + 1):
        i, j = 0, 0
        while True:
            right = grid[i][j + 1] if j + 1 < len(grid[i]) else None
            below = grid[i + 1][j] if i + 1 < len(grid) and j < len(grid[i + 1]) else None
            if right is None and below is None:
                break
            if below is None or (right is not None and right < below):
                grid[i][j] = right
                j += 1
            else:
                grid[i][j] = below
                i += 1
        grid[i].pop()
        if not grid[i]:
            grid.pop()
        out[i][j] = n + 1 - step
    return Tableau.of(out)


def rsk(w: Sequence[int]) -> tuple[Tableau, Tableau]:
    """Row-insertion RSK of a permutation in one-line notation: ``(P, Q)``."""
    p: list[list[int]] = []
    q: list[list[int]] = []
    for step, x in enumerate(w, start=1):
        i = 0
        while True:
            if i == len(p):
                p.append([x])
                q.append([step])
                break
            row = p[i]
            bumped = next((j for j, y in enumerate(row) if y > x), None)
            if bumped is None:
                row.append(x)
                q[i].append(step)
                break
            row[bumped], x = x, row[bumped]
            i += 1
    return Tableau.of(p), Tableau.of(q)


def rsk_inverse(p: Tableau, q: Tableau) -> tuple[int, ...]:
    if p.shape != q.shape:
        raise TableauError(f"shape mismatch: {p.shape} vs {q.shape}")
    prow = [list(r) for r in p.rows]
    n = p.n
    w = [0] * n
    qpos = q.positions
    for step in range(n, 0, -1):
        i = qpos[step][0]
        x = prow[i].pop()
        for k in range(i - 1, -1, -1):
            row = prow[k]
            # largest entry smaller than x is bumped back up
            j = max(j for j, y in enumerate(row) if y < x)
            row[j], x = x, row[j]
        w[step - 1] = x
    return tuple(w)


def check_word(b: str) -> str:
    if not isinstance(b, str) or any(c not in "01" for c in b):
        raise TableauError(f"binary word must be a string over 01: {b!r}")
    return b


def word_complement(b: str) -> str:
    return "".join("1" if c == "0" else "0" for c in check_word(b))


def word_truncate(b: str) -> str:
    if not check_word(b):
        raise TableauError("cannot truncate the empty word")
    return b[1:]


def all_words(length: int) -> list[str]:
    return [format(i, f"0{length}b") if length else "" for i in range(2**length)]


def _check_rank(shape: Partition, b: str, n: int) -> None:
    if n >= 2 and len(b) != n - 2:
        raise TableauError(f"word {b!r} must have length {n - 2} for shape {shape}")
    if n < 2 and b:
        raise TableauError(f"word {b!r} must be empty for shape {shape}")


@lru_cache(maxsize=None)
def _phi(shape: Partition, b: str, t: Tableau) -> Tableau:
    if not b:
        return t
    if b[0] == "0":
        d = delete_max(t)
        return append_max(_phi(d.shape, b[1:], d), shape)
    d = delete_max(evacuate(t))
    return append_max(_phi(d.shape, word_complement(b[1:]), d), shape)


def phi(shape: Iterable[int], b: str, t: Tableau) -> Tableau:
    """The recursive relabeling bijection of SYT(shape) attached to ``b``.

    A leading 0 strips the maximal box and recurses on the rest of the word;
    a leading 1 first evacuates and recurses on the complemented rest.
    """
    shape = check_partition(shape)
    check_word(b)
    if t.shape != shape:
        raise TableauError(f"tableau {t} does not have shape {shape}")
    _check_rank(shape, b, t.n)
    return _phi(shape, b, t)


@lru_cache(maxsize=None)
def _leq(b: str, s: Tableau, t: Tableau) -> bool:
    if s == t:
        return True
    if not b:
        return False
    if b[0] == "1":
        s, t = evacuate(s), evacuate(t)
        rest = word_complement(b[1:])
    else:
        rest = b[1:]
    n = s.n
    es, et = row_index(s, n), row_index(t, n)
    if es != et:
        return es < et
    return _leq(rest, delete_max(s), delete_max(t))


def leq(shape: Iterable[int], b: str, s: Tableau, t: Tableau) -> bool:
    """Whether ``s`` precedes or equals ``t`` in the order on SYT(shape) attached to ``b``."""
    shape = check_partition(shape)
    check_word(b)
    if s.shape != shape or t.shape != shape:
        raise TableauError(f"tableaux {s}, {t} must both have shape {shape}")
    _check_rank(shape, b, s.n)
    return _leq(b, s, t)


def sorted_by_order(shape: Iterable[int], b: str, tableaux: Sequence[Tableau] | None = None) -> list[Tableau]:
    """Linear extension of the order for ``b``; ties resolved by enumeration order."""
    shape = check_partition(shape)
    remaining = list(enumerate_syt(shape) if tableaux is None else tableaux)
    out = []
    while remaining:
        for idx, cand in enumerate(remaining):
            if not any(o != cand and leq(shape, b, o, cand) for o in remaining):
                out.append(remaining.pop(idx))
                break
        else:
            raise TableauError("order relation has a cycle")
    return out


def word_family(b: str) -> str | None:
    """Which tabulated family ``b`` belongs to: 'zeros', 'ones', 'zero-ones', 'one-zeros'."""
    check_word(b)
    if set(b) <= {"0"}:
        return "zeros"
    if set(b) == {"1"}:
        return "ones"
    if b[0] == "0" and set(b[1:]) == {"1"}:
        return "zero-ones"
    if b[0] == "1" and set(b[1:]) == {"0"}:
        return "one-zeros"
    return None


def row_sequence(t: Tableau) -> tuple[int, ...]:
    return tuple(row_index(t, k) for k in range(1, t.n + 1))


def sigma_special(shape: Iterable[int], b: str, t: Tableau) -> tuple[int, ...]:
    """Closed-form statistic whose reverse-lex order matches ``leq`` for the tabulated words."""
    shape = check_partition(shape)
    family = word_family(b)
    if family is None:
        raise TableauError(f"no closed-form statistic for word {b!r}")
    _check_rank(shape, b, t.n)
    n = t.n
    if family == "zeros":
        return row_sequence(t)
    if family == "ones":
        return row_sequence(evacuate(t))
    if family == "zero-ones":
        head = evacuate(delete_max(t))
        return row_sequence(head) + (row_index(t, n),)
    ev = evacuate(t)
    head = evacuate(delete_max(ev))
    return row_sequence(head) + (row_index(ev, n),)


def revlex_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    return tuple(reversed(a)) <= tuple(reversed(b))
