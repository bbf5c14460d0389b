"""Permutations in one-line notation, Bruhat order and multiplicity-free chains.

A permutation of ``1..n`` is a tuple ``(w(1), ..., w(n))``.  Products compose
right to left: ``compose(u, v)(i) == u(v(i))``.  The simple transposition
``s_k`` swaps ``k`` and ``k + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations as _itperms
from typing import Iterable, Sequence

from .tableaux import check_word

Permutation = tuple[int, ...]


class PermutationError(ValueError):
    pass


def check_permutation(w: Iterable[int]) -> Permutation:
    w = tuple(w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise PermutationError(f"not a permutation of 1..{len(w)}: {w!r}")
    return w


def parse_oneline(text: str) -> Permutation:
    """Accept ``"1324"`` for n < 10, or separators (``"1,3,2,4"``, ``"1 3 2 4"``)."""
    text = text.strip()
    if any(c in text for c in ", "):
        parts = [p for p in text.replace(",", " ").split() if p]
        return check_permutation(int(p) for p in parts)
    return check_permutation(int(c) for c in text)


def format_oneline(w: Sequence[int]) -> str:
    if len(w) < 10:
        return "".join(map(str, w))
    return ",".join(map(str, w))


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def all_permutations(n: int) -> list[Permutation]:
    return [tuple(p) for p in _itperms(range(1, n + 1))]


def compose(u: Sequence[int], v: Sequence[int]) -> Permutation:
    if len(u) != len(v):
        raise PermutationError("size mismatch")
    return tuple(u[x - 1] for x in v)


def inverse(w: Sequence[int]) -> Permutation:
    out = [0] * len(w)
    for i, x in enumerate(w, start=1):
        out[x - 1] = i
    return tuple(out)


def length(w: Sequence[int]) -> int:
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def simple(k: int, n: int) -> Permutation:
    if not 1 <= k < n:
        raise PermutationError(f"s_{k} does not exist in S_{n}")
    w = list(range(1, n + 1))
    w[k - 1], w[k] = w[k], w[k - 1]
    return tuple(w)


def transposition(a: int, b: int, n: int) -> Permutation:
    w = list(range(1, n + 1))
    w[a - 1], w[b - 1] = w[b - 1], w[a - 1]
    return tuple(w)


def left_mul_simple(k: int, w: Sequence[int]) -> Permutation:
    """``s_k w``: swap the values ``k`` and ``k+1``."""
    return tuple(k + 1 if x == k else k if x == k + 1 else x for x in w)


def right_mul_simple(w: Sequence[int], k: int) -> Permutation:
    """``w s_k``: swap the positions ``k`` and ``k+1``."""
    w = list(w)
    w[k - 1], w[k] = w[k], w[k - 1]
    return tuple(w)


def left_descents(w: Sequence[int]) -> frozenset[int]:
    """``k`` with ``l(s_k w) < l(w)``, i.e. ``k+1`` appears before ``k``."""
    pos = inverse(w)
    return frozenset(k for k in range(1, len(w)) if pos[k] < pos[k - 1])


def right_descents(w: Sequence[int]) -> frozenset[int]:
    return frozenset(k for k in range(1, len(w)) if w[k - 1] > w[k])


@lru_cache(maxsize=None)
def reduced_word(w: Permutation) -> tuple[int, ...]:
    """A reduced word ``(k1, ..., kl)`` with ``w = s_k1 ... s_kl``, found by bubble sort."""
    w = list(w)
    word: list[int] = []
    n = len(w)
    # peel right descents: w = (w s_i) s_i
    changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            if w[i] > w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                word.append(i + 1)
                changed = True
    return tuple(reversed(word))


def from_word(word: Iterable[int], n: int) -> Permutation:
    w = identity(n)
    for k in word:
        w = right_mul_simple(w, k)
    return w


@lru_cache(maxsize=None)
def bruhat_leq(x: Permutation, w: Permutation) -> bool:
    """Bruhat order by the subword property, scanning a reduced word of ``w`` from the right.

    If ``w s < w`` then ``x <= w`` iff ``min(x, x s) <= w s``; this greedy
    choice is exactly a subword match.
    """
    if len(x) != len(w):
        raise PermutationError("size mismatch")
    word = reduced_word(w)
    cur = x
    for k in reversed(word):
        if cur[k - 1] > cur[k]:
            cur = right_mul_simple(cur, k)
    return all(cur[i] == i + 1 for i in range(len(cur)))


@dataclass(frozen=True)
class Interval:
    """The integer interval ``[lo, hi]`` with at least two elements."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if not 1 <= self.lo < self.hi:
            raise PermutationError(f"invalid interval [{self.lo},{self.hi}]")

    def __len__(self) -> int:
        return self.hi - self.lo + 1

    def __contains__(self, k: object) -> bool:
        return isinstance(k, int) and self.lo <= k <= self.hi

    def elements(self) -> range:
        return range(self.lo, self.hi + 1)

    def to_list(self) -> list[int]:
        return [self.lo, self.hi]

    def __str__(self) -> str:
        return f"[{self.lo},{self.hi}]"


def longest_element(interval: Interval, n: int) -> Permutation:
    """Reverse ``interval`` inside ``S_n`` and fix everything else."""
    if interval.hi > n:
        raise PermutationError(f"{interval} is not inside [1,{n}]")
    return tuple(interval.lo + interval.hi - i if i in interval else i for i in range(1, n + 1))


def longest(n: int) -> Permutation:
    return tuple(range(n, 0, -1))


@dataclass(frozen=True)
class ParabolicChain:
    """Nested intervals ``[1,n] = I_1 > I_2 > ... > I_{n-1}`` with ``|I_m| = n - m + 1``."""

    intervals: tuple[Interval, ...]
    word: str

    @property
    def n(self) -> int:
        return self.intervals[0].hi

    def to_list(self) -> list[list[int]]:
        return [iv.to_list() for iv in self.intervals]


def chain_from_bits(n: int, b: str) -> ParabolicChain:
    """Bit ``m`` of ``b`` drops the largest (0) or smallest (1) element of ``I_m``."""
    check_word(b)
    if n < 2 or len(b) != n - 2:
        raise PermutationError(f"word {b!r} must have length n-2 = {n - 2}")
    lo, hi = 1, n
    intervals = [Interval(lo, hi)]
    for bit in b:
        if bit == "0":
            hi -= 1
        else:
            lo += 1
        intervals.append(Interval(lo, hi))
    return ParabolicChain(tuple(intervals), b)


def image(w: Sequence[int], items: Iterable[int]) -> frozenset[int]:
    return frozenset(w[i - 1] for i in items)


@lru_cache(maxsize=None)
def chain_permutation(n: int, b: str) -> Permutation:
    """Permutation carrying the standard chain onto the chain labelled ``b``.

    Walk down the target chain.  Whenever the current (already reflected)
    standard chain leaves node ``I_m`` in the wrong direction, reflect it at
    that node with the long element of ``I_m``; later reflections multiply on
    the left.
    """
    chain = chain_from_bits(n, b)
    u = identity(n)
    for m in range(1, n - 1):
        target_next = frozenset(chain.intervals[m].elements())
        current_next = image(u, range(1, n - m + 1))
        if current_next != target_next:
            u = compose(longest_element(chain.intervals[m - 1], n), u)
    return u


def cycle_type(w: Sequence[int]) -> tuple[int, ...]:
    seen = [False] * len(w)
    lengths = []
    for i in range(len(w)):
        if not seen[i]:
            c = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = w[j] - 1
                c += 1
            lengths.append(c)
    return tuple(sorted(lengths, reverse=True))
