import random

import pytest

from gtkl import linalg
from gtkl.cellmodule import (
    act_permutation,
    build_cell_module,
    character,
    character_by_class,
    group_elements,
    isotypic_projector,
)
from gtkl.kl import KLTable
from gtkl.perms import Interval, PermutationError, all_permutations, compose, identity, inverse, longest
from gtkl.tableaux import Tableau, enumerate_syt, evacuate, partitions

from oracles import murnaghan_nakayama

S = Tableau.of([[1, 3], [2]])
T = Tableau.of([[1, 2], [3]])


def _mat(m, module, images):
    # images: basis tableau -> {tableau: coefficient}
    out = [[0] * module.dim for _ in range(module.dim)]
    for src, img in images.items():
        for dst, c in img.items():
            out[module.index(dst)][module.index(src)] = c
    return out


def test_two_one_generators(ws):
    m = ws.module((2, 1))
    assert m.gen(1) == _mat(m, m, {S: {S: -1}, T: {T: 1, S: 1}})
    assert m.gen(2) == _mat(m, m, {S: {S: 1, T: 1}, T: {T: -1}})


def test_two_one_against_example_coordinates(ws):
    # the cell basis realized inside the permutation module of S_3
    coords = {S: (1, -1, 0), T: (0, 1, -1)}
    m = ws.module((2, 1))

    def act(w, v):
        out = [0, 0, 0]
        for i, x in enumerate(v):
            out[w[i] - 1] += x
        return tuple(out)

    for k in (1, 2):
        sk = tuple(k + 1 if i == k else k if i == k + 1 else i for i in (1, 2, 3))
        g = m.gen(k)
        for j, t in enumerate(m.basis):
            lhs = act(sk, coords[t])
            rhs = tuple(sum(g[i][j] * coords[m.basis[i]][c] for i in range(2)) for c in range(3))
            assert lhs == rhs


@pytest.mark.parametrize("n", range(1, 7))
def test_trivial_and_sign(ws, n):
    triv, sign = ws.module((n,)), ws.module((1,) * n)
    for k in range(1, n):
        assert triv.gen(k) == [[1]]
        assert sign.gen(k) == [[-1]]


@pytest.mark.parametrize("n", range(2, 8))
def test_coxeter_relations(ws, n):
    for lam in partitions(n):
        m = ws.module(lam)
        one = linalg.identity(m.dim)
        g = {k: m.gen(k) for k in range(1, n)}
        for k in g:
            assert linalg.matmul(g[k], g[k]) == one
            if k + 1 in g:
                a, b = g[k], g[k + 1]
                assert linalg.matmul(a, linalg.matmul(b, a)) == linalg.matmul(b, linalg.matmul(a, b))
            for j in g:
                if abs(j - k) > 1:
                    assert linalg.matmul(g[j], g[k]) == linalg.matmul(g[k], g[j])


@pytest.mark.parametrize("n", range(1, 6))
def test_recording_tableau_independence(n):
    for lam in partitions(n):
        mats = set()
        for q0 in enumerate_syt(lam):
            m = build_cell_module(lam, KLTable(), q0)
            mats.add(tuple(sorted(m.gens.items())))
        assert len(mats) == 1


@pytest.mark.parametrize("n", range(1, 6))
def test_characters_match_murnaghan_nakayama(ws, n):
    for lam in partitions(n):
        chars = character_by_class(ws.module(lam))
        for ct in partitions(n):
            assert chars[ct] == murnaghan_nakayama(lam, ct), (lam, ct)


def test_character_examples(ws):
    m = ws.module((2, 1))
    assert character(m, identity(3)) == 2
    assert character(m, (2, 1, 3)) == 0
    assert character(m, (2, 3, 1)) == -1


def test_character_class_function(ws):
    m = ws.module((3, 1, 1))
    perms = all_permutations(5)
    rng = random.Random(1)
    for w in rng.sample(perms, 20):
        c = character(m, w)
        for g in rng.sample(perms, 5):
            assert character(m, compose(g, compose(w, inverse(g)))) == c


def test_homomorphism(ws):
    rng = random.Random(2)
    perms = all_permutations(5)
    mods = [ws.module(lam) for lam in partitions(5)]
    for _ in range(100):
        u, v = rng.choice(perms), rng.choice(perms)
        for m in mods:
            assert act_permutation(m, compose(u, v)) == linalg.matmul(act_permutation(m, u), act_permutation(m, v))


def test_action_errors_and_identity(ws):
    m = ws.module((2, 1))
    assert act_permutation(m, identity(3)) == linalg.identity(2)
    with pytest.raises(PermutationError):
        act_permutation(m, identity(4))


def test_w0_two_one(ws):
    m = ws.module((2, 1))
    assert act_permutation(m, longest(3)) == _mat(m, m, {S: {T: -1}, T: {S: -1}})


@pytest.mark.parametrize("n", range(1, 8))
def test_w0_is_signed_evacuation(ws, n):
    for lam in partitions(n):
        m = ws.module(lam)
        w0 = act_permutation(m, longest(n))
        signs = set()
        for j, t in enumerate(m.basis):
            nz = [(i, x) for i, x in enumerate(linalg.column(w0, j)) if x]
            assert len(nz) == 1
            i, x = nz[0]
            assert m.basis[i] == evacuate(t)
            signs.add(x)
        assert len(signs) == 1 and signs <= {1, -1}


def test_group_elements():
    assert len(group_elements(Interval(2, 5), 6)) == 24
    assert all(w[0] == 1 and w[5] == 6 for w in group_elements(Interval(2, 5), 6))


def test_projector_examples(ws):
    m = ws.module((2, 1))
    p = isotypic_projector(m, Interval(1, 2), (2,))
    assert linalg.rank(p) == 1
    with pytest.raises(ValueError):
        isotypic_projector(m, Interval(1, 2), (2, 1))


@pytest.mark.parametrize("lam", [(3, 1), (2, 2), (3, 2), (2, 2, 1), (3, 1, 1)])
def test_projectors_decompose_identity(ws, lam):
    m = ws.module(lam)
    n = sum(lam)
    for iv in (Interval(1, n - 1), Interval(2, n), Interval(2, n - 1)):
        total = linalg.zeros(m.dim, m.dim)
        for mu in partitions(len(iv)):
            p = isotypic_projector(m, iv, mu)
            assert linalg.matmul(p, p) == p
            total = linalg.add(total, p)
        assert total == linalg.identity(m.dim)


def test_projector_full_group_is_identity(ws):
    m = ws.module((3, 2))
    assert isotypic_projector(m, Interval(1, 5), (3, 2)) == linalg.identity(m.dim)
    assert linalg.is_zero(isotypic_projector(m, Interval(1, 5), (4, 1)))
