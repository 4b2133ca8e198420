import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from hocoalg import _linalg
from hocoalg.graded import (
    UNIT,
    Gen,
    GradedSpace,
    Tensor,
    apply_at,
    compose,
    full_symmetrize,
    kernel,
    permutation_sign,
    permute,
    shuffle_sum,
    shuffles,
    slot_product,
)

LETTERS = [Gen("a", 1), Gen("b", 2), Gen("c", 3), Gen("e", 4)]


def perms(r):
    return st.permutations(list(range(r))).map(tuple)


def words(r):
    return st.lists(st.sampled_from(LETTERS), min_size=r, max_size=r).map(tuple)


def test_space_validation():
    with pytest.raises(ValueError):
        GradedSpace((UNIT, Gen("x", 2), Gen("x", 3)))
    with pytest.raises(ValueError):
        GradedSpace((Gen("x", 2),))
    with pytest.raises(ValueError):
        Gen("x", -1)
    GradedSpace((Gen("p", 0), Gen("q", 0)), connected=False)


def test_tensor_arithmetic():
    a, b = LETTERS[:2]
    t = Tensor.word(a, b) * 3 - Tensor.word(a, b)
    assert t.coeff((a, b)) == 2
    assert t - t == 0
    assert str(Tensor({(a,): Fraction(1, 2)})) == "1/2·a"
    with pytest.raises(ValueError):
        Tensor({(a,): 1, (a, b): 1})


def test_swap_signs():
    a, b, c = LETTERS[:3]
    assert permute((1, 0), Tensor.word(a, c)) == -Tensor.word(c, a)
    assert permute((1, 0), Tensor.word(a, b)) == Tensor.word(b, a)


@given(perms(4), perms(4), words(4))
def test_permute_is_a_left_action(s, t, w):
    x = Tensor.word(*w)
    assert permute(s, permute(t, x)) == permute(compose(s, t), x)


@given(perms(4), words(4))
def test_permute_inverse(s, w):
    inv = tuple(sorted(range(4), key=lambda p: s[p]))
    x = Tensor.word(*w)
    assert permute(inv, permute(s, x)) == x


@given(words(3))
def test_symmetrizer_idempotent_up_to_factorial(w):
    x = Tensor.word(*w)
    s = full_symmetrize(3, x)
    assert full_symmetrize(3, s) == s * math.factorial(3)


@given(words(4))
def test_symmetrizer_absorbs_signed_permutations(w):
    x = Tensor.word(*w)
    s = full_symmetrize(4, x)
    for sigma in [(1, 0, 2, 3), (1, 2, 3, 0)]:
        assert permute(sigma, s) == s * permutation_sign(sigma)


@pytest.mark.parametrize("i,r", [(0, 3), (1, 3), (2, 4), (3, 6)])
def test_shuffle_count(i, r):
    sh = shuffles(i, r)
    assert len(sh) == math.comb(r, i) == len(set(sh))


def test_shuffle_sum_times_block_symmetrizers_is_full():
    # S(r) = S(i, r-i) o (S(i) (x) S(r-i))
    a, b, c = LETTERS[:3]
    x = Tensor.word(a, b, c)
    block = full_symmetrize(2, Tensor.word(a, b)) @ Tensor.word(c)
    assert shuffle_sum(2, 3, block) == full_symmetrize(3, x)


def test_apply_at_koszul_sign():
    a, b = LETTERS[:2]
    from hocoalg.graded import GradedMap
    f = GradedMap(1, lambda g: Tensor.word(g, g))
    assert apply_at(f, Tensor.word(a, b), 1) == -Tensor.word(a, b, b)
    assert apply_at(f, Tensor.word(b, a), 1) == Tensor.word(b, a, a)


def test_slot_product_sign():
    a, b, c, e = LETTERS
    # (a (x) b) . (c (x) e): c passes b -> sign (-1)^{|b||c|} = +1
    assert slot_product(Tensor.word((a,), (b,)), Tensor.word((c,), (e,))) == Tensor.word((a, c), (b, e))
    # (a (x) c) . (a (x) e): a passes c -> -1
    assert slot_product(Tensor.word((a,), (c,)), Tensor.word((a,), (e,))) == -Tensor.word((a, a), (c, e))


def test_kernel_per_degree():
    x, y = Gen("x", 2), Gen("y", 2)
    f = {x: Tensor.word(x, x), y: Tensor.word(x, x) * 2}
    ker = kernel(lambda g: f[g], [x, y])
    assert len(ker) == 1
    assert ker[0] == Tensor({(x,): -2, (y,): 1}) or ker[0] == Tensor({(x,): 2, (y,): -1})


# -- exact linear algebra against sympy ----------------------------------------

matrices = st.lists(st.lists(st.integers(-3, 3), min_size=5, max_size=5), min_size=1, max_size=6)


@given(matrices)
def test_rank_matches_sympy(rows):
    vecs = [{j: v for j, v in enumerate(r) if v} for r in rows]
    assert _linalg.rank(vecs) == sympy.Matrix(rows).rank()


@given(matrices)
def test_nullspace_is_exact(rows):
    vecs = [{j: v for j, v in enumerate(r) if v} for r in rows]
    null = _linalg.nullspace(vecs)
    assert len(null) == len(rows) - sympy.Matrix(rows).rank()
    for combo in null:
        total = [sum(combo.get(i, 0) * rows[i][j] for i in range(len(rows))) for j in range(5)]
        assert all(v == 0 for v in total)


@given(matrices, st.lists(st.integers(-3, 3), min_size=5, max_size=5))
def test_solve_matches_sympy(rows, target):
    vecs = [{j: v for j, v in enumerate(r) if v} for r in rows]
    tgt = {j: v for j, v in enumerate(target) if v}
    sol = _linalg.solve(vecs, tgt)
    M = sympy.Matrix(rows).T
    solvable = M.rank() == M.row_join(sympy.Matrix(target)).rank()
    assert (sol is not None) == solvable
    if sol is not None:
        got = [sum(sol.get(i, 0) * rows[i][j] for i in range(len(rows))) for j in range(5)]
        assert got == target
