"""Artin induction: |G| * 1 as an integral combination of induced characters.

Columns Ind_S^G(psi), for S cyclic and psi a character of S, are collected
into an integer matrix and the target |G| * 1_G is solved for with the Smith
normal form.  The transfer identity

    sum_i a_i Ind_{S_i}(psi_i * Res_{S_i} v) = |G| * v

then follows from the projection formula and is checked by expansion.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactnum import smith_solve
from .grouprep import (
    FiniteAbelianGroup,
    Subgroup,
    VirtualRep,
    cyclic_subgroups,
    induce,
    restrict,
)


class ArtinFailure(ArithmeticError):
    """No integral certificate was found; Artin's theorem says this cannot happen."""


@dataclass(frozen=True)
class ArtinTerm:
    subgroup: Subgroup
    character: tuple[int, ...]
    coefficient: int

    def induced(self) -> VirtualRep:
        return induce(VirtualRep.char(self.subgroup.group, self.character), self.subgroup)

    def to_dict(self) -> dict:
        return {
            "subgroup": self.subgroup.to_dict(),
            "character": list(self.character),
            "coefficient": self.coefficient,
        }


@dataclass(frozen=True)
class ArtinCertificate:
    group: FiniteAbelianGroup
    terms: tuple[ArtinTerm, ...]

    def __post_init__(self):
        if not self.verify():
            raise ArtinFailure(f"certificate does not sum to |G| * 1 for {self.group}")

    def total(self) -> VirtualRep:
        total = VirtualRep.zero(self.group)
        for t in self.terms:
            total = total + t.induced() * t.coefficient
        return total

    def verify(self) -> bool:
        return self.total() == VirtualRep.one(self.group) * self.group.order

    def to_dict(self) -> dict:
        return {"group": list(self.group.factors), "terms": [t.to_dict() for t in self.terms]}

    @classmethod
    def from_dict(cls, data) -> "ArtinCertificate":
        group = FiniteAbelianGroup(tuple(data["group"]))
        terms = []
        for t in data["terms"]:
            sub = Subgroup.generated_by(group, t["subgroup"])
            terms.append(ArtinTerm(sub, tuple(t["character"]), int(t["coefficient"])))
        return cls(group, tuple(terms))


def artin_certificate(group: FiniteAbelianGroup) -> ArtinCertificate:
    if group.is_cyclic():
        whole = Subgroup.whole(group)
        return ArtinCertificate(group, (ArtinTerm(whole, whole.group.identity, group.order),))
    columns: list[tuple[Subgroup, tuple]] = []
    vectors: list[list[int]] = []
    for s in cyclic_subgroups(group):
        for psi in s.group.characters():
            columns.append((s, psi))
            vectors.append(induce(VirtualRep.char(s.group, psi), s).vector())
    matrix = [[vec[i] for vec in vectors] for i in range(group.order)]
    target = (VirtualRep.one(group) * group.order).vector()
    sol = smith_solve(matrix, target)
    if sol is None:
        raise ArtinFailure(f"no integral Artin certificate for {group}")
    terms = tuple(ArtinTerm(s, psi, c) for (s, psi), c in zip(columns, sol) if c)
    return ArtinCertificate(group, terms)


def transfer_identity_check(group: FiniteAbelianGroup, v: VirtualRep, certificate: ArtinCertificate | None = None) -> bool:
    """Restriction to cyclic subgroups followed by weighted induction is |G|."""
    cert = certificate or artin_certificate(group)
    lhs = VirtualRep.zero(group)
    for t in cert.terms:
        w = VirtualRep.char(t.subgroup.group, t.character) * restrict(v, t.subgroup)
        lhs = lhs + induce(w, t.subgroup) * t.coefficient
    return lhs == v * group.order
