import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from equisig.exactnum import CyclotomicNumber
from equisig.grouprep import (
    FiniteAbelianGroup,
    Subgroup,
    VirtualRep,
    all_subgroups,
    restrict,
    subgroup_generated,
)
from equisig.primeloc import (
    InvalidPrime,
    LocalizedElement,
    NotInvertible,
    PrimeIdealSpec,
    contains,
    is_unit_localized,
    lemma_GtoH_check,
    localize_restriction_module,
    localized_equals,
    localized_is_zero,
    minimal_primes_contained,
    p_regular_part,
    prime_ideal,
    restriction_kernel,
    segal_vanishing,
    support,
)

Z2 = FiniteAbelianGroup((2,))
Z4 = FiniteAbelianGroup((4,))
V4 = FiniteAbelianGroup((2, 2))


def chi(group, *a):
    return VirtualRep.char(group, a)


def one(group):
    return VirtualRep.one(group)


# --- membership ---------------------------------------------------------------------

def test_contains_examples():
    p0 = prime_ideal(Z2, (1,), 0)
    assert contains(p0, one(Z2) + chi(Z2, 1))
    assert not contains(p0, one(Z2) - chi(Z2, 1))
    p3 = prime_ideal(Z2, (1,), 3)
    assert contains(p3, one(Z2) * 3)
    assert not contains(p3, one(Z2) * 2)


def test_unit_examples():
    g = prime_ideal(Z4, (1,), 0)
    from equisig.grouprep import lambda_minus1

    assert is_unit_localized(g, lambda_minus1(Z4, [(1,), (2,), (3,)]))
    assert not is_unit_localized(g, VirtualRep.zero(Z4))
    h = subgroup_generated(Z4, (2,))
    prime = prime_ideal(Z4, (2,), 3)
    assert is_unit_localized(prime, one(Z4) * h.index)


def test_invalid_primes():
    with pytest.raises(InvalidPrime):
        PrimeIdealSpec(Z4, (1,), 2)
    with pytest.raises(InvalidPrime):
        prime_ideal(Z4, (1,), 4)
    # the factory passes to the p-regular part instead of failing
    assert prime_ideal(Z4, (1,), 2).element == (0,)
    assert p_regular_part(FiniteAbelianGroup((6,)), (1,), 2) == (4,)


def test_support_examples():
    assert support(prime_ideal(Z4, (0,), 0)).is_trivial()
    z6 = FiniteAbelianGroup((6,))
    assert support(prime_ideal(z6, (2,), 0)).order == 3
    assert support(prime_ideal(Z4, (1,), 3)).is_whole()


def test_minimal_primes_examples():
    z5 = FiniteAbelianGroup((5,))
    assert minimal_primes_contained(prime_ideal(z5, (2,), 0)) == [(1,)]
    assert minimal_primes_contained(prime_ideal(Z2, (0,), 2)) == [(0,), (1,)]
    assert minimal_primes_contained(prime_ideal(FiniteAbelianGroup(()), (), 5)) == [()]


def test_localized_examples():
    prime = prime_ideal(Z4, (1,), 0)
    x = chi(Z4, 1)
    e = LocalizedElement(one(Z4) - chi(Z4, 2), one(Z4) - x, prime)
    assert localized_equals(e, LocalizedElement.of(one(Z4) + x, prime))
    assert localized_is_zero(LocalizedElement.of(VirtualRep.zero(Z4), prime))
    p2 = prime_ideal(Z2, (0,), 2)
    assert not localized_is_zero(LocalizedElement.of(one(Z2) - chi(Z2, 1), p2))
    with pytest.raises(NotInvertible):
        LocalizedElement(one(Z4), one(Z4) + chi(Z4, 2), prime)


def test_lemma_gtoh_examples():
    assert lemma_GtoH_check(prime_ideal(Z4, (1,), 0)).certified
    assert lemma_GtoH_check(prime_ideal(Z4, (2,), 3)).certified
    r = lemma_GtoH_check(prime_ideal(Z4, (2,), 2))
    assert not r.certified
    assert "divides |G/H|" in r.reason


def test_segal_examples():
    prime = prime_ideal(V4, (1, 0), 0)
    assert not segal_vanishing(prime, Subgroup.whole(V4))
    assert segal_vanishing(prime, subgroup_generated(V4, (0, 1)))
    assert segal_vanishing(prime, Subgroup.trivial(V4))


# --- properties over all small groups ------------------------------------------------------

SHAPES = [(2,), (3,), (4,), (2, 2), (5,), (6,), (7,), (8,), (2, 4), (2, 2, 2), (9,), (3, 3), (10,), (11,), (12,), (2, 6)]


def all_primes(group):
    for g in group.elements():
        for p in (0, 2, 3, 5):
            if p and group.element_order(g) % p == 0:
                continue
            yield PrimeIdealSpec(group, g, p)


@pytest.mark.parametrize("shape", SHAPES)
def test_ideal_and_prime_axioms(shape):
    group = FiniteAbelianGroup(shape)
    rng = random.Random(hash(shape) & 0xFFFF)
    chars = group.characters()

    def rand():
        return VirtualRep(group, {a: rng.randint(-2, 2) for a in rng.sample(chars, min(3, len(chars)))})

    for prime in all_primes(group):
        members = [b for b in restriction_kernel(group, subgroup_generated(group, prime.element))]
        for _ in range(6):
            u, v = rand(), rand()
            if contains(prime, u):
                assert contains(prime, u * v)
                members.append(u)
            if contains(prime, u * v):
                assert contains(prime, u) or contains(prime, v)
        for a in members[:4]:
            for b in members[:4]:
                assert contains(prime, a + b)
        assert not contains(prime, one(group))
        if prime.p:
            assert contains(prime, one(group) * prime.p)


@pytest.mark.parametrize("shape", SHAPES)
def test_nontrivial_character_gives_unit(shape):
    group = FiniteAbelianGroup(shape)
    for prime in all_primes(group):
        for a in group.characters():
            if group.pairing(a, prime.element) != 0:
                assert not contains(prime, one(group) - VirtualRep.char(group, a))


@pytest.mark.parametrize("shape", SHAPES)
def test_lemma_gtoh_certified_iff_coprime(shape):
    group = FiniteAbelianGroup(shape)
    for prime in all_primes(group):
        report = lemma_GtoH_check(prime)
        assert report.pulls_back
        expected = prime.p == 0 or report.support.index % prime.p != 0
        assert report.certified == expected


@pytest.mark.parametrize("shape", SHAPES)
def test_support_is_the_minimal_pullback(shape):
    group = FiniteAbelianGroup(shape)
    subs = all_subgroups(group)
    for prime in all_primes(group):
        h = support(prime)
        pulls = [k for k in subs if all(contains(prime, b) for b in restriction_kernel(group, k))]
        assert {k.elements for k in pulls} == {k.elements for k in subs if h.is_subgroup_of(k)}


@pytest.mark.parametrize("shape", [s for s in SHAPES if FiniteAbelianGroup(s).order <= 8])
def test_segal_vanishing_cross_validated(shape):
    group = FiniteAbelianGroup(shape)
    for prime in all_primes(group):
        for k in all_subgroups(group):
            vanishes, witness = localize_restriction_module(prime, k)
            assert vanishes == segal_vanishing(prime, k)
            if witness is not None:
                # the witness annihilates R(K) as an R(G)-module and is a unit at p
                assert restrict(witness, k).is_zero()
                assert is_unit_localized(prime, witness)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([(4,), (6,), (2, 2), (8,)]), st.data())
def test_localized_field_operations(shape, data):
    group = FiniteAbelianGroup(shape)
    g = data.draw(st.sampled_from(group.elements()))
    prime = PrimeIdealSpec(group, g, 0)
    chars = group.characters()
    units = [VirtualRep.one(group) - VirtualRep.char(group, a) for a in chars if group.pairing(a, g) != 0]
    units.append(VirtualRep.one(group) * 2)
    num = VirtualRep(group, {a: data.draw(st.integers(-2, 2)) for a in chars})
    den = data.draw(st.sampled_from(units))
    e = LocalizedElement(num, den, prime)
    assert localized_equals(e + e, e * LocalizedElement.of(VirtualRep.one(group) * 2, prime))
    assert (e - e).is_zero()
    assert e.value_at() == CyclotomicNumber.rational(0) or not e.is_zero()
    assert LocalizedElement.from_dict(e.to_dict()) == e
    if not contains(prime, num):
        assert localized_equals(e * e.inverse(), LocalizedElement.of(VirtualRep.one(group), prime))


def test_prime_round_trip():
    for prime in all_primes(FiniteAbelianGroup((2, 6))):
        assert PrimeIdealSpec.from_dict(prime.to_dict()) == prime
