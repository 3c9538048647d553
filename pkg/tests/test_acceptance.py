"""Acceptance criteria 1-8, each at its stated tolerance and time budget.

Run with ``pytest tests/test_acceptance.py -v``; the terminal summary ends with
one PASS/FAIL line per criterion.
"""

import random
import time
from fractions import Fraction
from importlib import resources
from itertools import combinations_with_replacement
from math import gcd

import pytest

from equisig.artin import artin_certificate, transfer_identity_check
from equisig.charseries import (
    IntersectionFunctional,
    LinearForm,
    TruncatedSeries,
    angle_factor,
    coth_identity_check,
    l_class_factor,
)
from equisig.exactnum import CyclotomicNumber, root_of_unity
from equisig.grouprep import FiniteAbelianGroup, Subgroup, VirtualRep, all_subgroups, subgroup_generated
from equisig.gsig import (
    FixedComponentDescriptor,
    NormalPiece,
    decompose_localized_class,
    dedekind_sum,
    fiber_class_point,
    fiber_series,
    g_signature,
    load_fixed_data,
    reciprocity_check,
    signature_from_cohomology,
)
from equisig.lens import (
    LensSpace,
    find_exotic_pairs,
    homotopy_equivalent,
    isometric,
    isometry_witness,
    rho_vector,
    units,
)
from equisig.models import cp2_action, hirzebruch_models, model_cup_form, s2_rotation
from equisig.primeloc import (
    PrimeIdealSpec,
    contains,
    is_unit_localized,
    lemma_GtoH_check,
    localize_restriction_module,
    prime_ideal,
    restriction_kernel,
    segal_vanishing,
    support,
)

Q = CyclotomicNumber.rational


def abelian_groups(max_order):
    """Every finite abelian group of order <= max_order, once, via invariant factor chains."""

    def chains(n, prev):
        # factor lists d_1 | d_2 | ... with product n, d_1 > 1 and prev | d_1
        if n == 1:
            yield ()
            return
        for d in range(2, n + 1):
            if d % prev == 0 and n % d == 0:
                for rest in chains(n // d, d):
                    yield (d,) + rest

    for n in range(1, max_order + 1):
        for factors in chains(n, 1):
            yield FiniteAbelianGroup(factors)


def bundled_fixed_data():
    root = resources.files("equisig") / "data"
    out = {}
    for p in sorted(root.iterdir(), key=lambda p: p.name):
        if p.name.endswith(".json") and not p.name.startswith("lens"):
            with resources.as_file(p) as path:
                out[p.name[:-5]] = load_fixed_data(path)
    return out


def test_group_enumeration_counts():
    # number of abelian groups of order n is a product of partition numbers
    counts = {}
    for g in abelian_groups(36):
        counts[g.order] = counts.get(g.order, 0) + 1
    assert [counts[n] for n in (1, 4, 8, 12, 16, 32, 36)] == [1, 2, 3, 2, 5, 7, 4]
    assert len({g.factors for g in abelian_groups(36)}) == sum(counts.values()) == 62


# ---------------------------------------------------------------------------

@pytest.mark.criterion(1, "Artin suite: |G| <= 36, certificate and transfer identity, < 60 s")
def test_criterion_1_artin(criterion):
    start = time.perf_counter()
    rng = random.Random(1)
    groups = list(abelian_groups(36))
    for group in groups:
        cert = artin_certificate(group)
        assert cert.verify(), group
        chars = group.characters()
        for _ in range(20):
            v = VirtualRep(group, {a: rng.randint(-3, 3) for a in rng.sample(chars, min(len(chars), 6))})
            assert transfer_identity_check(group, v, cert), group
    elapsed = time.perf_counter() - start
    criterion.append(f"{len(groups)} groups, {elapsed:.1f} s")
    assert elapsed < 60


@pytest.mark.criterion(2, "Localization suite: |G| <= 12, all g, p in {0,2,3,5}, < 120 s")
def test_criterion_2_localization(criterion):
    start = time.perf_counter()
    rng = random.Random(2)
    n_primes = 0
    for group in abelian_groups(12):
        chars = group.characters()
        subs = all_subgroups(group)
        one = VirtualRep.one(group)

        def rand():
            return VirtualRep(group, {a: rng.randint(-2, 2) for a in rng.sample(chars, min(3, len(chars)))})

        for g in group.elements():
            for p in (0, 2, 3, 5):
                if p and group.element_order(g) % p == 0:
                    continue
                prime = PrimeIdealSpec(group, g, p)
                n_primes += 1
                # ideal axioms
                assert not contains(prime, one)
                if p:
                    assert contains(prime, one * p)
                members = restriction_kernel(group, subgroup_generated(group, g))[:4]
                for a in members:
                    assert contains(prime, a * rand())
                    for b in members:
                        assert contains(prime, a + b)
                # primality spot checks
                for _ in range(4):
                    u, v = rand(), rand()
                    if contains(prime, u * v):
                        assert contains(prime, u) or contains(prime, v)
                # chi(g) != 1 forces 1 - chi outside the ideal
                for a in chars:
                    if group.pairing(a, g) != 0:
                        assert not contains(prime, one - VirtualRep.char(group, a))
                # G -> H certification exactly when p = 0 or p prime to |G/H|
                report = lemma_GtoH_check(prime)
                h = support(prime)
                assert report.certified == (p == 0 or gcd(p, h.index) == 1)
                if group.order <= 8:
                    for k in subs:
                        vanishes, _ = localize_restriction_module(prime, k)
                        assert vanishes == segal_vanishing(prime, k)
    elapsed = time.perf_counter() - start
    criterion.append(f"{n_primes} primes, {elapsed:.1f} s")
    assert elapsed < 120


@pytest.mark.criterion(3, "Series/identity suite: coth identity, L-factor, angle-factor reciprocity")
def test_criterion_3_series(criterion):
    signs = set()
    for m in range(2, 13):
        for a in range(1, m):
            for d in range(0, 7):
                c = coth_identity_check(a, m, d)
                assert c.holds, (a, m, d)
                signs.add(c.sign)
    criterion.append(f"coth sign recorded as {sorted(signs)}")

    y = ("y",)
    expected = TruncatedSeries(y, 8, {(0,): 1, (2,): Fraction(1, 3), (4,): Fraction(-1, 45)})
    assert l_class_factor([1], y, 8) == expected

    # The literal product form af(z, l) * af(1/z, -l) = 1 is false: the pair is
    # related by a sign, af(1/z, -l) = -af(z, l).  Checked here in that form, and
    # together with the genuine reciprocity af(z, l) * af(-z, l) = 1.
    rng = random.Random(3)
    v = ("u", "w")
    for _ in range(50):
        m = rng.randint(3, 12)
        a = rng.choice([a for a in range(1, m) if 2 * a != m])
        ell = [rng.randint(-3, 3), rng.randint(-3, 3)]
        z = root_of_unity(a, m)
        f = angle_factor(z, ell, v, 6)
        assert angle_factor(z.inverse(), [-c for c in ell], v, 6) == -f
        assert f * angle_factor(-z, ell, v, 6) == TruncatedSeries.constant(v, 6, 1)
    criterion.append("reciprocity verified in sign-corrected form on 50 cases")


@pytest.mark.xfail(strict=True, reason="af(z, l) * af(1/z, -l) equals -af(z, l)^2, not 1")
def test_literal_angle_factor_product_form():
    v = ("u",)
    z = root_of_unity(1, 5)
    f = angle_factor(z, [1], v, 4)
    assert f * angle_factor(z.inverse(), [-1], v, 4) == TruncatedSeries.constant(v, 4, 1)


@pytest.mark.criterion(4, "G-signature calibration: S^2, CP^2 for n <= 12, Hirzebruch models, < 30 s")
def test_criterion_4_calibration(criterion):
    start = time.perf_counter()
    for n in range(2, 13):
        s2 = s2_rotation(n)
        assert all(g_signature(s2, (k,)) == Q(0) for k in range(n))
        cp2 = cp2_action(n)
        sig = signature_from_cohomology(model_cup_form(cp2))
        assert sig == 1
        assert all(g_signature(cp2, (k,)) == Q(sig) for k in range(1, n))
    values = []
    for model in hirzebruch_models():
        sig = signature_from_cohomology(model_cup_form(model))
        assert g_signature(model, ()) == Q(sig), model.name
        values.append(sig)
    elapsed = time.perf_counter() - start
    criterion.append(f"Hirzebruch values {values}, {elapsed:.1f} s")
    assert elapsed < 30


@pytest.mark.criterion(5, "Fiber-class consistency: point classes vs series constant term, m <= 12")
def test_criterion_5_fiber_class(criterion):
    cases = 0
    for m in range(2, 13):
        group = FiniteAbelianGroup((m,))
        for g in range(1, m):
            prime = PrimeIdealSpec(group, (g,), 0)
            for a in range(1, m):
                if a * g % m == 0:
                    continue
                fc = fiber_class_point(prime, [(a,)])
                assert fc.numerator == VirtualRep.one(group) + VirtualRep.char(group, (a,))
                assert fc.denominator == VirtualRep.one(group) - VirtualRep.char(group, (a,))
                assert is_unit_localized(prime, fc.denominator)
                c = FixedComponentDescriptor("p", Subgroup.whole(group), 1, IntersectionFunctional.point(), (),
                                             (NormalPiece((a,), 1, (LinearForm.of([]),)),))
                assert fc.value_at((g,)) == fiber_series(group, (g,), c).constant_term
                cases += 1
    criterion.append(f"{cases} cases")


@pytest.mark.criterion(6, "Dedekind cross-check: reciprocity on 20 pairs, s(1,3) = 1/18")
def test_criterion_6_dedekind(criterion):
    assert dedekind_sum(1, 3) == Fraction(1, 18)
    rng = random.Random(6)
    pairs = []
    while len(pairs) < 20:
        q, n = rng.randint(1, 50), rng.randint(1, 50)
        if gcd(q, n) == 1:
            pairs.append((q, n))
    for q, n in pairs:
        assert reciprocity_check(q, n)
        lhs = dedekind_sum(q, n) + dedekind_sum(n, q)
        assert lhs == Fraction(-1, 4) + (Fraction(q, n) + Fraction(n, q) + Fraction(1, q * n)) / 12


@pytest.mark.criterion(7, "Lens witness: L(7;1), L(7;2) and isometry consistency n <= 13, < 60 s")
def test_criterion_7_lens(criterion):
    start = time.perf_counter()
    pairs = find_exotic_pairs(7, 1)
    hit = [p for p in pairs if p.first == LensSpace(7, (1, 1)) and p.second == LensSpace(7, (1, 2))]
    assert len(hit) == 1
    p = hit[0]
    assert homotopy_equivalent(p.first, p.second) and not isometric(p.first, p.second)
    assert rho_vector(p.first) != rho_vector(p.second) and p.difference != Q(0)
    checked = 0
    for n in range(2, 14):
        for m in (1, 2):
            spaces = _weight_vectors(n, m)
            rhos = [rho_vector(s) for s in spaces]
            for i, a in enumerate(spaces):
                for j, b in enumerate(spaces):
                    u = isometry_witness(a, b)
                    if u is None:
                        continue
                    assert homotopy_equivalent(a, b)
                    assert rhos[j] == rhos[i].reindexed(u, _isometry_sign(a, b, u))
                    checked += 1
    elapsed = time.perf_counter() - start
    criterion.append(f"{checked} isometric pairs checked, {elapsed:.1f} s")
    assert elapsed < 60


def _isometry_sign(a, b, u):
    """Product of the signs in q'_j = +-u q_j, matched as multisets."""
    remaining = list(b.weights)
    sign = 1
    for q in a.weights:
        v = u * q % a.n
        if v in remaining:
            remaining.remove(v)
        else:
            remaining.remove(-v % a.n)
            sign = -sign
    return sign


def _weight_vectors(n, m):
    return [LensSpace(n, qs) for qs in combinations_with_replacement(units(n), m)]


@pytest.mark.criterion(8, "Pipeline structure on bundled inputs: orbits, inflation, units, branches")
def test_criterion_8_pipeline(criterion):
    datasets = bundled_fixed_data()
    reports = 0
    for name, data in datasets.items():
        group = data.group
        for g in group.elements():
            for p in sorted({0, 2, 3, 5, 7}):
                if p and group.element_order(g) % p == 0:
                    continue
                prime = prime_ideal(group, g, p)
                h = support(prime)
                rep = decompose_localized_class(data, prime, g)
                reports += 1
                assert rep.support.elements == h.elements
                if h.is_trivial():
                    assert rep.branch == ("collapse" if p == 0 or group.order % p else "restriction"), name
                    continue
                comps = data.fixed_set(h).components
                orbit_ids = {c.orbit if c.orbit is not None else c.label for c in comps}
                assert len(rep.entries) == len(orbit_ids)
                assert rep.component_count == len(comps) == sum(e.orbit_size for e in rep.entries)
                full = len(comps) == 1 and comps[0].dimension == data.dimension
                assert rep.branch == ("inflation" if full else "orbits")
                for e in rep.entries:
                    assert e.orbit_size * e.stabilizer.order == group.order
                    assert e.inflation["kernel_order"] == h.order
                    quotient_order = 1
                    for f in e.inflation["to"]:
                        quotient_order *= f
                    assert quotient_order * h.order == e.stabilizer.order
                    assert e.unit_certified
                if subgroup_generated(group, g).elements == h.elements:
                    assert rep.total == g_signature(data, g)

    # hand-derived expectations
    s2 = datasets["s2_z6"]
    rep = decompose_localized_class(s2, prime_ideal(s2.group, (1,), 0), (1,))
    assert [e.orbit_size for e in rep.entries] == [1, 1] and rep.total == Q(0)
    klein = datasets["s2_klein"]
    rep = decompose_localized_class(klein, prime_ideal(klein.group, (1, 0), 0), (1, 0))
    assert [e.orbit_size for e in rep.entries] == [2] and rep.entries[0].inflation["to"] == []
    half = datasets["s2_z4_half_turn"]
    rep = decompose_localized_class(half, prime_ideal(half.group, (2,), 0))
    assert rep.branch == "inflation" and rep.entries[0].inflation == {"from": [4], "to": [2], "kernel_order": 2}
    cp2 = datasets["cp2_z5"]
    assert decompose_localized_class(cp2, prime_ideal(cp2.group, (0,), 0)).branch == "collapse"
    assert decompose_localized_class(cp2, prime_ideal(cp2.group, (0,), 5)).branch == "restriction"
    criterion.append(f"{len(datasets)} inputs, {reports} decompositions")
