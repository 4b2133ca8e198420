import itertools

import pytest

from hocoalg import associahedron as K
from hocoalg.ainf import AInfCoalgebra
from hocoalg.graded import UNIT, Gen, GradedSpace, Tensor, degree
from hocoalg.hopf import (
    LieSpan,
    PsiExtension,
    RhoExtension,
    bracket,
    check_bialgebra,
    check_brformula,
    check_eq9,
    check_extension_ainf,
    check_primitive_ainf,
    check_primitive_ainf_on_lie,
    check_rho_preserves_primitives,
    cooperate,
    find_psi_witness,
    generator_lie_basis,
    insertion_formula,
    is_primitive_element,
    lie_basis,
    multiply,
    primitive_dimensions,
    primitives,
    tensor_primitives,
    words,
)

from oracles import pbw_lie_dimensions, shuffle_coproduct


def odd_structure():
    a, b, c, w = Gen("a", 1), Gen("b", 1), Gen("c", 3), Gen("w", 4)
    space = GradedSpace((UNIT, a, b, c, w))
    return AInfCoalgebra(space, {3: {w: Tensor.word(a, b, c)}}, name="odd")


def one_generator(d):
    x = Gen("x", d)
    return AInfCoalgebra(GradedSpace((UNIT, x)), name=f"one{d}")


# -- oracles -----------------------------------------------------------------

# -- products and brackets ----------------------------------------------------

def test_bracket_signs(ex1, word):
    x, y = Tensor.word(word(ex1, "x")), Tensor.word(word(ex1, "y"))
    w = Tensor.word(word(ex1, "w"))
    assert bracket(x, y) == multiply(x, y) - multiply(y, x)
    assert bracket(w, w) == multiply(w, w) * 2
    assert bracket(x, x) == 0
    assert bracket(Tensor.word(()), x) == 0 == bracket(x, Tensor.word(()))


def test_words_respect_caps(ex1):
    ws = words(ex1.space.reduced, 6, 2)
    assert all(degree(w) <= 6 and 1 <= len(w) <= 2 for w in ws)
    assert len(ws) == 4 + 9


# -- psi-extension --------------------------------------------------------------

def test_psi2_is_the_shuffle_coproduct(ex1):
    T = PsiExtension(ex1)
    for w in words(ex1.space.reduced, 12, 4):
        assert T.coop(2)(w) == shuffle_coproduct(w)


def test_psi2_on_xy(ex1, word):
    T = PsiExtension(ex1)
    xy = word(ex1, "xy")
    x, y = xy[:1], xy[1:]
    expected = Tensor({(xy, ()): 1, (x, y): 1, (y, x): 1, ((), xy): 1})
    assert T.coop(2)(xy) == expected
    wx = word(ex1, "wx")
    # odd w past even x: no sign
    assert T.coop(2)(wx).coeff((wx[1:], wx[:1])) == 1


def test_psi_on_generators_is_delta(ex1, word):
    T = PsiExtension(ex1)
    w = word(ex1, "w")
    x, y, z = (word(ex1, c) for c in "xyz")
    assert T.coop(3)(w) == Tensor.word(x, y, z)
    assert T.coop(4)(w) == 0


def test_psi3_on_wx(ex1, word):
    T = PsiExtension(ex1)
    x, y, z = (word(ex1, c) for c in "xyz")
    # K_3 diagonal: (psi_2 psi_2)(w) . psi_3(x) + psi_3(w) . (psi_2 psi_2)(x); psi_3(x) = 0
    expected = Tensor.word(x, y, z + x) + Tensor.word(x, y + x, z) + Tensor.word(x + x, y, z)
    assert T.coop(3)(word(ex1, "wx")) == expected


def test_psi_extension_is_ainf(ex1):
    assert check_extension_ainf(ex1, degree_cap=12, length_cap=4, max_n=5).passed


def test_bialgebra_relation(ex1):
    rep = check_bialgebra(ex1, (2, 3, 4), 12, 4)
    assert rep.passed, str(rep)


def test_bialgebra_mutation_is_caught(ex1):
    def dropped(t):
        d = K.diagonal(t)
        if len(t) != 4:
            return d
        key = (K.parse("((***)*)"), K.parse("(*(***))"))
        return d - K.BiChain({key: d[key]})

    rep = check_bialgebra(ex1, (4,), 12, 4, diagonal=dropped)
    assert not rep.passed


def test_derivation_property(ex1):
    a, b = Gen("a", 1), Gen("b", 2)
    C = AInfCoalgebra(GradedSpace((UNIT, a, b)), {}, {b: Tensor.word(a)})
    T = PsiExtension(C)
    assert T.coop(1)((b, b)) == Tensor({((a, b),): 1, ((b, a),): 1})
    assert T.coop(1)((a, b)) == Tensor({((a, a),): -1})
    # coderivation of psi_2 and d^2 = 0
    assert check_extension_ainf(C, 8, 4, max_n=3).passed


# -- rho-extension ----------------------------------------------------------------

def test_rho_peel_independent(ex1):
    L, R = RhoExtension(ex1), RhoExtension(ex1, peel="right")
    for w in words(ex1.space.reduced, 12, 4):
        for r in (2, 3, 4):
            assert L.coop(r)(w) == R.coop(r)(w)


def test_rho_on_generators(ex1, word):
    R = RhoExtension(ex1)
    assert R.coop(3)(word(ex1, "w")) == Tensor.word(*(word(ex1, c) for c in "xyz"))
    assert R.coop(4)(word(ex1, "w")) == 0


def test_rho2_is_twice_psi2_on_length_two(ex1):
    assert check_eq9(ex1, 12, 2).passed


def test_rho2_is_length_times_psi2(ex1):
    T, R = PsiExtension(ex1), RhoExtension(ex1)
    for w in words(ex1.space.reduced, 12, 4):
        assert R.coop(2)(w) == T.coop(2)(w) * len(w)


def test_rho3_equals_psi3_on_all_words(ex1):
    T, R = PsiExtension(ex1), RhoExtension(ex1)
    for w in words(ex1.space.reduced, 12, 4):
        assert R.coop(3)(w) == T.coop(3)(w)


def test_eq9_fails_beyond_length_two(ex1):
    rep = check_eq9(ex1, 12, 3)
    assert not rep.passed
    assert rep.witnesses[0].location.startswith("rho_2 - 2 psi_2 on")


@pytest.mark.parametrize("make", [lambda: None, odd_structure])
def test_closed_form_insertion_on_lie_pairs(ex1, make):
    C = make() or ex1
    R = RhoExtension(C)
    basis = generator_lie_basis(C, 8, 4)
    for x, y in itertools.product(basis.elements, repeat=2):
        if degree_of(x) + degree_of(y) > 8:
            continue
        for r in (2, 3, 4):
            lhs = cooperate(R, r, multiply(x, y))
            assert lhs == insertion_formula(r, x, y, cooperate(R, r, x), cooperate(R, r, y))


def degree_of(t):
    (d,) = t.degrees()
    return d


@pytest.mark.parametrize("make", [lambda: None, odd_structure])
def test_bracket_formula(ex1, make):
    C = make() or ex1
    rep = check_brformula(C, (2, 3, 4), 9, 5)
    assert rep.passed, str(rep)


# -- primitives and the free Lie algebra -------------------------------------------

def test_generators_are_primitive(ex1):
    assert [next(iter(p))[0] for p in primitives(ex1)] == list(ex1.space.reduced)


def test_one_even_generator():
    C = one_generator(2)
    dims = primitive_dimensions(C, 4, 4)
    assert dims == {2: 1}


def test_one_odd_generator():
    C = one_generator(1)
    prims = tensor_primitives(C, 2, 2)
    a = C.space.by_name("x")
    assert prims[-1] == Tensor.word((a, a)) or prims[-1] == Tensor.word((a, a)) * -1
    assert primitive_dimensions(C, 6, 6) == {1: 1, 2: 1}


def test_degree_four_dimension(ex1):
    # [x,x] = 0 for even x, so only [x,y], [x,z], [y,z] survive
    assert generator_lie_basis(ex1, 4, 2).dimensions()[4] == 3
    assert primitive_dimensions(ex1, 4, 2)[4] == 3


@pytest.mark.parametrize("make,cap,length", [(lambda: None, 10, 5), (odd_structure, 8, 8)])
def test_milnor_moore_dimensions(ex1, make, cap, length):
    C = make() or ex1
    kernel_dims = primitive_dimensions(C, cap, length)
    lyndon_dims = generator_lie_basis(C, cap, length).dimensions()
    pbw = pbw_lie_dimensions([g.degree for g in C.space.reduced], cap)
    assert kernel_dims == lyndon_dims == pbw


def test_lie_basis_elements_are_primitive_and_independent(ex1):
    from hocoalg.graded import tensor_rank
    basis = generator_lie_basis(ex1, 10, 5)
    T = PsiExtension(ex1)
    assert all(is_primitive_element(T, e) for e in basis.elements)
    assert tensor_rank(basis.elements) == len(basis)


def test_lie_span_membership(ex1, word):
    span = LieSpan(generator_lie_basis(ex1, 12, 4))
    x, y = word(ex1, "x"), word(ex1, "y")
    assert span.contains(Tensor({(x, x + y): 1, (x, y + x): -1}))
    assert not span.contains(Tensor.word(x, x + x))
    assert span.contains(Tensor.word((), x))


def test_lie_basis_on_letters():
    a, b = Gen("a", 1), Gen("b", 2)
    basis = lie_basis([Tensor.word((a,)), Tensor.word((b,))], 4, 3, ["a", "b"])
    assert "[a,a]" in basis.names and "[a,b]" in basis.names
    assert basis.dimensions() == pbw_lie_dimensions([1, 2], 4)


# -- preservation of primitives and the primitive relations --------------------------

def test_rho_preserves_primitives(ex1):
    rep = check_rho_preserves_primitives(ex1, (2, 3, 4), 10, 5)
    assert rep.passed, str(rep)


def test_rho_preserves_primitives_odd():
    assert check_rho_preserves_primitives(odd_structure(), (2, 3, 4), 8, 6).passed


def test_psi_leaves_primitives(ex1):
    wit = find_psi_witness(ex1, (4,), 10, 5)
    assert wit is not None
    assert wit.location == "r=4, b=[w,w]"


def test_psi_keeps_primitives_without_higher_structure(ex2):
    assert find_psi_witness(ex2, (4,), 10, 5) is None


def test_primitive_relations_fail_on_words(ex1, ex2):
    for C in (ex1, ex2):
        rep = check_primitive_ainf(C, 12, 4)
        assert not rep.passed
        # rho_2 = m psi_2 on length-m words is not coassociative
        assert rep.witnesses[0].location.startswith("n=3")


def test_primitive_relations_on_lie_algebra(ex1, ex2, ex1_cinf):
    assert check_primitive_ainf_on_lie(ex2, 12, 4).passed
    assert check_primitive_ainf_on_lie(ex1, 9, 4).passed
    rep = check_primitive_ainf_on_lie(ex1, 12, 4)
    assert not rep.passed
    assert rep.witnesses[0].location == "n=5, x=[w,w]"
