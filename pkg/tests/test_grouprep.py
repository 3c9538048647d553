import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from equisig.exactnum import CyclotomicNumber, root_of_unity
from equisig.grouprep import (
    FiniteAbelianGroup,
    Subgroup,
    VirtualRep,
    all_subgroups,
    cyclic_subgroups,
    element_order,
    evaluate,
    induce,
    inflate,
    inner_product,
    lambda_minus1,
    lambda_total,
    quotient,
    restrict,
    restrict_character,
    subgroup_generated,
)

Q = CyclotomicNumber.rational
Z4 = FiniteAbelianGroup((4,))

GROUP_SHAPES = [(), (2,), (3,), (4,), (6,), (2, 2), (2, 4), (3, 3), (2, 6), (2, 2, 2), (12,)]
groups = st.sampled_from(GROUP_SHAPES).map(FiniteAbelianGroup)


@st.composite
def reps(draw, group):
    return VirtualRep(group, {a: draw(st.integers(-3, 3)) for a in group.characters()})


@st.composite
def group_with_reps(draw, count=2):
    g = draw(groups)
    return (g,) + tuple(draw(reps(g)) for _ in range(count))


@st.composite
def group_subgroup_rep(draw):
    g = draw(groups)
    subs = all_subgroups(g)
    h = subs[draw(st.integers(0, len(subs) - 1))]
    return g, h, draw(reps(g)), draw(reps(h.group))


def chi(group, *a):
    return VirtualRep.char(group, a)


def brute_value(v: VirtualRep, g) -> complex:
    """Numeric character value straight from the definition."""
    total = 0j
    for a, c in v.items():
        phase = sum(Fraction(ai * gi, f) for ai, gi, f in zip(a, g, v.group.factors))
        total += c * cmath.exp(2j * cmath.pi * float(phase))
    return total


# --- groups -----------------------------------------------------------------------

def test_invariant_factor_normalization():
    assert FiniteAbelianGroup((2, 3)).factors == (6,)
    assert FiniteAbelianGroup((4, 2)).factors == (2, 4)
    assert FiniteAbelianGroup((1, 1)).factors == ()
    assert FiniteAbelianGroup((2, 2)).order == 4


def test_subgroup_enumeration_examples():
    triv = FiniteAbelianGroup(())
    assert [s.order for s in cyclic_subgroups(triv)] == [1]
    assert len(cyclic_subgroups(Z4)) == 3
    v4 = FiniteAbelianGroup((2, 2))
    assert len(cyclic_subgroups(v4)) == 4
    assert len(all_subgroups(v4)) == 5
    assert element_order(Z4, (1,)) == 4
    assert subgroup_generated(Z4, (2,)).order == 2


@pytest.mark.parametrize("shape", GROUP_SHAPES)
def test_subgroup_lattice_brute_force(shape):
    group = FiniteAbelianGroup(shape)
    elements = group.elements()
    # brute force: closure of every pair of elements
    brute = set()
    for x in elements:
        for y in elements:
            brute.add(Subgroup.generated_by(group, [x, y]).elements)
    if group.rank <= 2:
        assert brute == {s.elements for s in all_subgroups(group)}
    for s in all_subgroups(group):
        assert group.order % s.order == 0
        # abstract structure agrees with the element list
        assert s.group.order == s.order
        assert sorted(s.embed(h) for h in s.group.elements()) == list(s.elements)
        for x in s.elements:
            assert s.embed(s.locate(x)) == x
        for x in s.group.elements():
            for y in s.group.elements():
                assert s.embed(s.group.add(x, y)) == group.add(s.embed(x), s.embed(y))


@pytest.mark.parametrize("shape", GROUP_SHAPES)
def test_character_table_is_unitary(shape):
    group = FiniteAbelianGroup(shape)
    for a in group.characters():
        for b in group.characters():
            total = Q(0)
            for g in group.elements():
                total = total + group.character_value(a, g) * group.character_value(b, g).conjugate()
            assert total == Q(group.order if a == b else 0)


# --- ring operations -------------------------------------------------------------------

def test_ring_examples():
    z3 = FiniteAbelianGroup((3,))
    one = VirtualRep.one(Z4)
    x = chi(Z4, 1)
    assert (one - x) * (one + x) == one - chi(Z4, 2)
    reg = VirtualRep.regular(z3)
    assert reg * chi(z3, 1) == reg
    assert reg + VirtualRep.zero(z3) == reg
    assert evaluate(reg, (1,)) == Q(0)
    assert evaluate(reg, (0,)) == Q(3)
    assert evaluate(x, (1,)) == root_of_unity(1, 4)


def test_string_forms():
    assert str(lambda_minus1(Z4, [(1,), (2,)])) == "1 − χ − χ² + χ³"
    assert str(induce(VirtualRep.one(FiniteAbelianGroup(())), Subgroup.trivial(FiniteAbelianGroup((2,))))) == "1 + χ"
    assert str(VirtualRep.zero(Z4)) == "0"


def test_restrict_examples():
    h = subgroup_generated(Z4, (2,))
    assert restrict(VirtualRep.one(Z4), h) == VirtualRep.one(h.group)
    r = restrict(chi(Z4, 1), h)
    (a,) = [a for a, _ in r.items()]
    assert any(a)
    assert restrict(VirtualRep.regular(Z4), h) == VirtualRep.regular(h.group) * 2


def test_induce_examples():
    triv = Subgroup.trivial(Z4)
    assert induce(VirtualRep.one(triv.group), triv) == VirtualRep.regular(Z4)
    h = subgroup_generated(Z4, (2,))
    nontrivial = next(a for a in h.group.characters() if any(a))
    assert induce(VirtualRep.char(h.group, nontrivial), h) == chi(Z4, 1) + chi(Z4, 3)


def test_inflate_examples():
    n = subgroup_generated(Z4, (2,))
    q = quotient(Z4, n)
    assert q.group.order == 2
    assert inflate(VirtualRep.one(q.group), q) == VirtualRep.one(Z4)
    assert inflate(VirtualRep.char(q.group, (1,)), q) == chi(Z4, 2)


def test_lambda_examples():
    assert lambda_minus1(Z4, []) == VirtualRep.one(Z4)
    assert lambda_total(Z4, []) == VirtualRep.one(Z4)
    assert lambda_minus1(Z4, [(1,)]) == VirtualRep.one(Z4) - chi(Z4, 1)


@settings(max_examples=60, deadline=None)
@given(group_with_reps(3))
def test_ring_axioms(data):
    group, u, v, w = data
    assert (u + v) * w == u * w + v * w
    assert (u * v) * w == u * (v * w)
    assert u * v == v * u
    assert u * VirtualRep.one(group) == u


@settings(max_examples=60, deadline=None)
@given(group_with_reps(2))
def test_evaluation_is_a_ring_map(data):
    group, u, v = data
    for g in group.elements():
        assert evaluate(u * v, g) == evaluate(u, g) * evaluate(v, g)
        assert abs(complex(evaluate(u, g)) - brute_value(u, g)) < 1e-8


@settings(max_examples=50, deadline=None)
@given(group_subgroup_rep())
def test_frobenius_reciprocity(data):
    group, h, v, w = data
    assert inner_product(induce(w, h), v) == inner_product(w, restrict(v, h))


@settings(max_examples=50, deadline=None)
@given(group_subgroup_rep())
def test_induced_character_formula(data):
    group, h, _, w = data
    ind = induce(w, h)
    for g in group.elements():
        expected = Q(0)
        if g in h:
            # abelian: Ind w (g) = [G:H] w(g) on H, zero off H
            expected = evaluate(w, h.locate(g)) * h.index
        assert evaluate(ind, g) == expected


@settings(max_examples=50, deadline=None)
@given(group_subgroup_rep())
def test_restriction_is_evaluation_on_h(data):
    group, h, v, _ = data
    r = restrict(v, h)
    for x in h.group.elements():
        assert evaluate(r, x) == evaluate(v, h.embed(x))


@settings(max_examples=40, deadline=None)
@given(group_subgroup_rep(), st.data())
def test_inflation_factors_through_the_quotient(data, draw):
    group, n, _, _ = data
    q = quotient(group, n)
    w = draw.draw(reps(q.group))
    inflated = inflate(w, q)
    for g in group.elements():
        assert evaluate(inflated, g) == evaluate(w, q.project(g))
    for x in n.elements:
        assert evaluate(inflated, x) == Q(w.dimension())


@settings(max_examples=40, deadline=None)
@given(groups, st.data())
def test_lambda_operations_are_products(group, data):
    chars = data.draw(st.lists(st.sampled_from(group.characters()), max_size=4))
    for g in group.elements():
        expected_minus, expected_total = Q(1), Q(1)
        for a in chars:
            z = group.character_value(a, g)
            expected_minus = expected_minus * (Q(1) - z)
            expected_total = expected_total * (Q(1) + z)
        assert evaluate(lambda_minus1(group, chars), g) == expected_minus
        assert evaluate(lambda_total(group, chars), g) == expected_total


@settings(max_examples=40, deadline=None)
@given(group_with_reps(1))
def test_serialization_round_trip(data):
    group, v = data
    assert VirtualRep.from_dict(group, v.to_dict()) == v
    assert VirtualRep.from_vector(group, v.vector()) == v
    assert FiniteAbelianGroup.from_dict(group.to_dict()) == group


def test_restrict_character_matches_pairing():
    g = FiniteAbelianGroup((2, 4))
    for h in all_subgroups(g):
        for a in g.characters():
            b = restrict_character(a, h)
            for x in h.group.elements():
                assert h.group.pairing(b, x) == g.pairing(a, h.embed(x))
