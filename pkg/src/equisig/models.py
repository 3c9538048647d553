"""Fixed-point data for standard G-manifolds, built from first principles.

The tangent Chern roots of CP^s are (1 - w) h for the nontrivial (s+1)-st
roots of unity w: their elementary symmetric functions are the binomial
coefficients C(s+1, k), so their product is the total Chern class (1 + h)^(s+1)
truncated at h^(s+1) = 0.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .charseries import IntersectionFunctional, LinearForm
from .exactnum import CyclotomicNumber, root_of_unity
from .grouprep import FiniteAbelianGroup, Subgroup, cyclic_subgroups, restrict_character
from .gsig import FixedComponentDescriptor, FixedSet, GManifoldFixedData, NormalPiece, cup_form


def projective_tangent_roots(s: int) -> list[CyclotomicNumber]:
    one = CyclotomicNumber.rational(1)
    return [one - root_of_unity(k, s + 1) for k in range(1, s + 1)]


def _projective_component(label, stab, s, normal_chars):
    variables = ("h",) if s else ()
    inter = IntersectionFunctional(variables, 2 * s, {(s,): Fraction(1)} if s else {(): Fraction(1)})
    root = [1] if s else []
    tangent = tuple(LinearForm.of([c]) for c in projective_tangent_roots(s))
    pieces = tuple(NormalPiece(a, 1, (LinearForm.of(root),)) for a in normal_chars)
    return FixedComponentDescriptor(label, stab, 1, inter, tangent, pieces)


def linear_projective_action(group: FiniteAbelianGroup, characters: Sequence[Sequence[int]], name: str = "") -> GManifoldFixedData:
    """G acting on CP^k by scaling homogeneous coordinate i with character chi_i.

    For every cyclic H the fixed set is the disjoint union of the projective
    subspaces spanned by coordinates whose characters agree on H.  The normal
    line through coordinate j at the component of class S carries chi_j / chi_S.
    """
    chars = [group.character(a) for a in characters]
    k = len(chars) - 1
    if k < 1:
        raise ValueError("need at least two homogeneous coordinates")
    whole = Subgroup.whole(group)
    sets = []
    for h in cyclic_subgroups(group):
        classes: dict[tuple, list[int]] = {}
        for i, a in enumerate(chars):
            classes.setdefault(restrict_character(a, h), []).append(i)
        comps = []
        for members in classes.values():
            base = chars[members[0]]
            normal = [tuple((x - y) % f for x, y, f in zip(chars[j], base, group.factors))
                      for j in range(k + 1) if j not in members]
            label = "P{" + ",".join(map(str, members)) + "}"
            comps.append(_projective_component(label, whole, len(members) - 1, normal))
        sets.append(FixedSet(h, tuple(comps)))
    return GManifoldFixedData(group, 2 * k, tuple(sets), name or f"CP{k} with characters {[list(a) for a in chars]}")


def cyclic_projective_action(n: int, weights: Sequence[int]) -> GManifoldFixedData:
    return linear_projective_action(FiniteAbelianGroup((n,)), [(w,) for w in weights],
                                    f"Z/{n} on CP{len(weights) - 1}, weights {tuple(weights)}")


def s2_rotation(n: int, w: int = 1) -> GManifoldFixedData:
    """Z/n rotating S^2 = CP^1; the poles have rotation numbers w and -w."""
    return cyclic_projective_action(n, (0, w))


def cp2_action(n: int) -> GManifoldFixedData:
    return cyclic_projective_action(n, (0, 1, 2))


def s2_klein() -> GManifoldFixedData:
    """Z/2 x Z/2 on S^2 by half turns about three perpendicular axes.

    Each half turn fixes two antipodal points, which the other half turns swap:
    every fixed set is one orbit of size 2 with stabilizer of order 2.
    """
    group = FiniteAbelianGroup((2, 2))
    sets = [FixedSet(Subgroup.trivial(group), (_sphere(group),))]
    for h in cyclic_subgroups(group):
        if h.is_trivial():
            continue
        (x,) = h.minimal_generators()
        # any character of G that is -1 on x describes the rotation by pi
        chi = next(a for a in group.characters() if group.pairing(a, x) != 0)
        comps = tuple(
            FixedComponentDescriptor(f"pt{i}[{x[0]}{x[1]}]", h, 1, IntersectionFunctional.point(), (),
                                     (NormalPiece(chi, 1, (LinearForm.of([]),)),), orbit=f"axis[{x[0]}{x[1]}]")
            for i in (0, 1)
        )
        sets.append(FixedSet(h, comps))
    return GManifoldFixedData(group, 2, tuple(sets), "Z/2 x Z/2 on S^2 by half turns")


def _sphere(group) -> FixedComponentDescriptor:
    return FixedComponentDescriptor("S2", Subgroup.whole(group), 1,
                                    IntersectionFunctional(("u",), 2, {(1,): Fraction(1)}),
                                    (LinearForm.of([2]),), ())


def s2_through_quotient() -> GManifoldFixedData:
    """Z/4 rotating S^2 by half turns, so that {0, 2} acts trivially."""
    return cyclic_projective_action(4, (0, 2))


def free_action(group: FiniteAbelianGroup, whole: FixedComponentDescriptor, dimension: int, name: str) -> GManifoldFixedData:
    """A free action: M itself over the trivial subgroup, empty fixed sets elsewhere."""
    sets = [FixedSet(h, (whole,) if h.is_trivial() else ()) for h in cyclic_subgroups(group)]
    return GManifoldFixedData(group, dimension, tuple(sets), name)


def _whole_model(name, variables, dimension, values, tangent) -> GManifoldFixedData:
    group = FiniteAbelianGroup(())
    comp = FixedComponentDescriptor(name, Subgroup.whole(group), 1,
                                    IntersectionFunctional(variables, dimension, values),
                                    tuple(LinearForm.of(r) for r in tangent), ())
    return GManifoldFixedData(group, dimension, (FixedSet(Subgroup.trivial(group), (comp,)),), name)


def cp1xcp1() -> GManifoldFixedData:
    return _whole_model("CP1xCP1", ("a", "b"), 4, {(1, 1): 1}, [[2, 0], [0, 2]])


def cpk(k: int) -> GManifoldFixedData:
    tangent = [[c] for c in projective_tangent_roots(k)]
    return _whole_model(f"CP{k}", ("h",), 2 * k, {(k,): 1}, tangent)


def cp2xcp2() -> GManifoldFixedData:
    r = projective_tangent_roots(2)
    zero = CyclotomicNumber.rational(0)
    tangent = [[r[0], zero], [r[1], zero], [zero, r[0]], [zero, r[1]]]
    return _whole_model("CP2xCP2", ("s", "t"), 8, {(2, 2): 1}, tangent)


def cp2_reversed() -> GManifoldFixedData:
    """CP^2 with the opposite orientation: the fundamental class changes sign."""
    return _whole_model("-CP2", ("h",), 4, {(2,): -1}, [[c] for c in projective_tangent_roots(2)])


def hirzebruch_models() -> list[GManifoldFixedData]:
    return [cpk(1), cpk(2), cp1xcp1(), cp2_reversed(), cpk(4), cp2xcp2()]


def model_cup_form(data: GManifoldFixedData):
    return cup_form(data.whole_component().intersection)


def s2xs2_free_z2() -> GManifoldFixedData:
    """Z/2 acting freely on S^2 x S^2 by the antipodal map on both factors."""
    group = FiniteAbelianGroup((2,))
    w = cp1xcp1().whole_component()
    whole = FixedComponentDescriptor("S2xS2", Subgroup.whole(group), 1, w.intersection, w.tangent_roots, ())
    return free_action(group, whole, 4, "Z/2 acting freely on S2xS2 by the antipodal map on both factors")
