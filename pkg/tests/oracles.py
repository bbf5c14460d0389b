"""Slow, independent reference computations used only by the tests."""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from math import factorial


def hook_count(shape):
    """n! / prod(hooks), hooks computed cell by cell from the diagram."""
    cells = {(i, j) for i, p in enumerate(shape) for j in range(p)}
    prod = 1
    for i, j in cells:
        arm = sum(1 for (a, b) in cells if a == i and b > j)
        leg = sum(1 for (a, b) in cells if b == j and a > i)
        prod *= arm + leg + 1
    return factorial(len(cells)) // prod


def brute_syt(shape):
    """Every filling of the diagram by a permutation, kept when standard."""
    n = sum(shape)
    out = []
    for perm in permutations(range(1, n + 1)):
        rows, k = [], 0
        for p in shape:
            rows.append(perm[k:k + p])
            k += p
        ok = all(r[j] < r[j + 1] for r in rows for j in range(len(r) - 1))
        ok = ok and all(rows[i - 1][j] < rows[i][j] for i in range(1, len(rows)) for j in range(len(rows[i])))
        if ok:
            out.append(tuple(tuple(r) for r in rows))
    return out


def murnaghan_nakayama(shape, cycle_type):
    """Character value by recursive border-strip removal on beta-sets."""

    @lru_cache(maxsize=None)
    def chi(beta, mus):
        if not mus:
            return 1
        r, rest = mus[0], mus[1:]
        total = 0
        bset = set(beta)
        for b in beta:
            if b - r >= 0 and (b - r) not in bset:
                between = sum(1 for c in beta if b - r < c < b)
                new = tuple(sorted((bset - {b}) | {b - r}, reverse=True))
                total += (-1) ** between * chi(new, rest)
        return total

    length = len(shape)
    beta = tuple(p + length - 1 - i for i, p in enumerate(shape))
    return chi(beta, tuple(cycle_type))


def compose(u, v):
    return tuple(u[x - 1] for x in v)


def inv_count(w):
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def bruhat_by_covers(n):
    """Bruhat order on S_n as the transitive closure of w < w t with l(w t) = l(w) + 1."""
    perms = list(permutations(range(1, n + 1)))
    up = {w: set() for w in perms}
    for w in perms:
        for a in range(n):
            for b in range(a + 1, n):
                x = list(w)
                x[a], x[b] = x[b], x[a]
                x = tuple(x)
                if inv_count(x) == inv_count(w) + 1:
                    up[w].add(x)
    below = {w: {w} for w in perms}
    for w in sorted(perms, key=inv_count):
        for x in up[w]:
            below[x] |= below[w]
    return below


def brute_kl(n, pick="rightmost"):
    """KL polynomials by the defining recursion over all of S_n, with a selectable descent rule.

    Returns a function ``P(x, w)`` giving coefficient tuples.  Bruhat order
    comes from the cover-relation oracle, the mu-sum ranges over all of S_n.
    """
    below = bruhat_by_covers(n)
    perms = list(below)
    ell = {w: inv_count(w) for w in perms}

    def smul(s, w):
        return tuple(s + 1 if x == s else s if x == s + 1 else x for x in w)

    def padd(a, b):
        m = max(len(a), len(b))
        a = list(a) + [0] * (m - len(a))
        b = list(b) + [0] * (m - len(b))
        c = [x + y for x, y in zip(a, b)]
        while c and c[-1] == 0:
            c.pop()
        return tuple(c)

    def pshift(a, k, f=1):
        return tuple([0] * k + [f * x for x in a]) if a else ()

    @lru_cache(maxsize=None)
    def P(x, w):
        if x not in below[w]:
            return ()
        if x == w:
            return (1,)
        descents = [s for s in range(1, n) if ell[smul(s, w)] < ell[w]]
        s = descents[-1] if pick == "rightmost" else descents[0]
        v = smul(s, w)
        sx = smul(s, x)
        c = 1 if ell[sx] < ell[x] else 0
        out = padd(pshift(P(sx, v), 1 - c), pshift(P(x, v), c))
        for z in perms:
            if z in below[v] and z != v and ell[smul(s, z)] < ell[z]:
                m = mu(z, v)
                if m:
                    out = padd(out, pshift(P(x, z), (ell[w] - ell[z]) // 2, -m))
        return out

    def mu(x, w):
        p = P(x, w)
        d = ell[w] - ell[x] - 1
        if d < 0 or d % 2 or len(p) <= d // 2:
            return 0
        return p[d // 2]

    return P
