"""Fixed-point data, the fixed-point signature formula and the localized decomposition.

Conventions (frozen by the calibration suite, see ``calibration`` tests):

* each tangent Chern root y of a fixed component contributes y / tanh(y);
* each normal Chern root y, rotated by zeta = chi(g) != 1, contributes
  ``NORMAL_SIGN * angle_factor(zeta, NORMAL_SCALE * y)``, which is
  coth(y + i theta / 2) written without transcendental numbers;
* the component carries its orientation sign epsilon, +1 when the complex
  orientations of the normal pieces and of F together give that of M.

With these, rotations of S^2 give 0, every linear action on CP^2 gives 1, and
g = 1 reproduces the Hirzebruch signature of the bundled models.
"""

from __future__ import annotations

import json
from collections import OrderedDict
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from pathlib import Path
from typing import Optional, Sequence

from ._parallel import ordered_map
from .charseries import (
    IntersectionFunctional,
    LinearForm,
    TruncatedSeries,
    angle_factor,
    integrate,
    l_class,
)
from .exactnum import CyclotomicNumber, format_rational, root_of_unity
from .grouprep import (
    FiniteAbelianGroup,
    Subgroup,
    lambda_minus1,
    lambda_total,
    quotient,
    restrict_character,
    subgroup_generated,
)
from .primeloc import (
    GtoHReport,
    LocalizedElement,
    PrimeIdealSpec,
    is_unit_localized,
    lemma_GtoH_check,
    support,
)

NORMAL_SCALE = 2
NORMAL_SIGN = -1

Element = tuple[int, ...]


class HypothesisViolation(ValueError):
    """The trivial representation of H occurs in a normal piece."""


class MissingFixedData(KeyError):
    """No fixed-point data was supplied for the requested cyclic subgroup."""


class SchemaError(ValueError):
    """Malformed fixed-point data; ``path`` locates the offending entry."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


TRIVIAL_REP_TEXT = (
    "the trivial representation of H must not occur in the normal bundle "
    "(every normal piece needs chi(g) != 1)"
)


# ---------------------------------------------------------------------------
# data model

@dataclass(frozen=True)
class NormalPiece:
    """A complex normal summand on which g acts by the scalar chi(g).

    ``character`` is given by residues with respect to the ambient group G;
    only its restriction to the stabilizer matters.
    """

    character: Element
    rank: int
    roots: tuple[LinearForm, ...]

    def __post_init__(self):
        object.__setattr__(self, "character", tuple(int(a) for a in self.character))
        object.__setattr__(self, "roots", tuple(r if isinstance(r, LinearForm) else LinearForm.of(r) for r in self.roots))
        if self.rank < 1:
            raise ValueError("normal pieces have complex rank >= 1")
        if len(self.roots) != self.rank:
            raise ValueError(f"rank {self.rank} piece needs {self.rank} Chern roots, got {len(self.roots)}")

    def to_dict(self) -> dict:
        return {"character": list(self.character), "rank": self.rank, "roots": [r.to_list() for r in self.roots]}


@dataclass(frozen=True)
class FixedComponentDescriptor:
    label: str
    stabilizer: Subgroup
    sign: int
    intersection: IntersectionFunctional
    tangent_roots: tuple[LinearForm, ...]
    normal_pieces: tuple[NormalPiece, ...]
    orbit: Optional[str] = None

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("orientation sign must be +1 or -1")
        nvars = len(self.variables)
        if len(self.tangent_roots) != self.dimension // 2:
            raise ValueError(
                f"{self.label}: {len(self.tangent_roots)} tangent roots for a component of dimension {self.dimension}"
            )
        for r in self.tangent_roots + tuple(r for p in self.normal_pieces for r in p.roots):
            if len(r.coefficients) != nvars:
                raise ValueError(f"{self.label}: root {r.to_list()} does not match variables {self.variables}")

    @property
    def variables(self) -> tuple[str, ...]:
        return self.intersection.variables

    @property
    def dimension(self) -> int:
        return self.intersection.dimension

    @property
    def normal_rank(self) -> int:
        return sum(p.rank for p in self.normal_pieces)

    def characters(self) -> list[Element]:
        """Normal characters with multiplicity."""
        return [p.character for p in self.normal_pieces for _ in range(p.rank)]

    def to_dict(self) -> dict:
        out = {
            "label": self.label,
            "stabilizer": self.stabilizer.to_dict(),
            "sign": self.sign,
            "variables": list(self.variables),
            "dimension": self.dimension,
            "intersection": self.intersection.to_dict(),
            "tangent_roots": [r.to_list() for r in self.tangent_roots],
            "normal_pieces": [p.to_dict() for p in self.normal_pieces],
        }
        if self.orbit is not None:
            out["orbit"] = self.orbit
        return out


@dataclass(frozen=True)
class FixedSet:
    """The components of M^H for one cyclic subgroup H."""

    subgroup: Subgroup
    components: tuple[FixedComponentDescriptor, ...]


@dataclass(frozen=True)
class GManifoldFixedData:
    group: FiniteAbelianGroup
    dimension: int
    fixed_sets: tuple[FixedSet, ...]
    name: str = ""

    def __post_init__(self):
        if self.dimension % 2:
            raise ValueError("only even-dimensional manifolds are modelled")
        seen = set()
        for fs in self.fixed_sets:
            if fs.subgroup.ambient != self.group:
                raise ValueError("fixed set filed under a subgroup of another group")
            if not fs.subgroup.is_cyclic():
                raise ValueError(f"fixed sets are filed under cyclic subgroups, got {fs.subgroup}")
            if fs.subgroup.elements in seen:
                raise ValueError(f"subgroup {fs.subgroup} filed twice")
            seen.add(fs.subgroup.elements)
            for c in fs.components:
                _validate_component(self, fs.subgroup, c)

    def fixed_set(self, h: Subgroup) -> FixedSet:
        for fs in self.fixed_sets:
            if fs.subgroup.elements == h.elements:
                return fs
        raise MissingFixedData(f"no fixed-point data for H = {h}")

    def whole_component(self) -> FixedComponentDescriptor:
        """The component M itself, filed under the trivial subgroup."""
        fs = self.fixed_set(Subgroup.trivial(self.group))
        if len(fs.components) != 1 or fs.components[0].dimension != self.dimension:
            raise SchemaError("fixed_sets[trivial]", "the trivial subgroup must carry M itself")
        return fs.components[0]

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "group": list(self.group.factors),
            "dimension": self.dimension,
            "fixed_sets": [
                {"subgroup": fs.subgroup.to_dict(), "components": [c.to_dict() for c in fs.components]}
                for fs in self.fixed_sets
            ],
        }

    @classmethod
    def from_dict(cls, data) -> "GManifoldFixedData":
        return load_fixed_data_dict(data)


def _validate_component(data: GManifoldFixedData, h: Subgroup, c: FixedComponentDescriptor):
    where = f"H={h}, component {c.label!r}"
    if c.stabilizer.ambient != data.group:
        raise SchemaError(where, "stabilizer lives in another group")
    if not h.is_subgroup_of(c.stabilizer):
        raise SchemaError(where, f"stabilizer {c.stabilizer} does not contain H")
    if c.dimension + 2 * c.normal_rank != data.dimension:
        raise SchemaError(
            where, f"dim F + 2 * (normal rank) = {c.dimension} + 2 * {c.normal_rank} != dim M = {data.dimension}"
        )
    gens = h.minimal_generators()
    for p in c.normal_pieces:
        if gens and all(data.group.pairing(p.character, x) == 0 for x in gens):
            raise HypothesisViolation(f"{where}: character {p.character} is trivial on H; {TRIVIAL_REP_TEXT}")


# ---------------------------------------------------------------------------
# fiber class and the numeric evaluation

def fiber_class_point(prime: PrimeIdealSpec, characters: Sequence[Sequence[int]]) -> LocalizedElement:
    """lambda(E) / lambda_{-1}(E) for E a sum of characters of prime.group."""
    group = prime.group
    g = prime.element
    for a in characters:
        if group.pairing(group.character(a), g) == 0:
            raise HypothesisViolation(f"character {tuple(a)} is trivial at g; {TRIVIAL_REP_TEXT}")
    return LocalizedElement(lambda_total(group, characters), lambda_minus1(group, characters), prime)


def _rotation(group: FiniteAbelianGroup, a: Element, g: Element) -> CyclotomicNumber:
    zeta = group.character_value(a, g)
    if zeta == CyclotomicNumber.rational(1):
        raise HypothesisViolation(f"chi(g) = 1 for character {a} at g = {g}; {TRIVIAL_REP_TEXT}")
    return zeta


def component_integrand(group: FiniteAbelianGroup, g: Sequence[int], c: FixedComponentDescriptor) -> TruncatedSeries:
    """L(tangent roots) times the normalized angle factor of every normal root."""
    g = group.element(g)
    if g not in c.stabilizer:
        raise ValueError(f"g = {g} does not preserve component {c.label!r}")
    variables, order = c.variables, c.dimension
    s = l_class(c.tangent_roots, variables, order)
    for piece in c.normal_pieces:
        zeta = _rotation(group, piece.character, g)
        for root in piece.roots:
            s = s * angle_factor(zeta, root.scaled(NORMAL_SCALE), variables, order) * NORMAL_SIGN
    return s


def component_contribution(group: FiniteAbelianGroup, g: Sequence[int], c: FixedComponentDescriptor) -> CyclotomicNumber:
    return integrate(component_integrand(group, g, c), c.intersection) * c.sign


def g_signature(data: GManifoldFixedData, g: Sequence[int]) -> CyclotomicNumber:
    """Sum of the component contributions over the fixed set of <g>."""
    g = data.group.element(g)
    fs = data.fixed_set(subgroup_generated(data.group, g))
    values = ordered_map(lambda c: component_contribution(data.group, g, c), fs.components)
    total = CyclotomicNumber.rational(0)
    for v in values:
        total = total + v
    return total


def fiber_series(group: FiniteAbelianGroup, g: Sequence[int], c: FixedComponentDescriptor) -> TruncatedSeries:
    """The Chern-character form of the fiber class: prod over normal roots of angle factors."""
    g = group.element(g)
    s = TruncatedSeries.constant(c.variables, c.dimension, 1)
    for piece in c.normal_pieces:
        zeta = _rotation(group, piece.character, g)
        for root in piece.roots:
            s = s * angle_factor(zeta, root, c.variables, c.dimension)
    return s


# ---------------------------------------------------------------------------
# brute-force oracles

def signature_from_cohomology(b: Sequence[Sequence]) -> int:
    """Signature of a symmetric rational form by congruence diagonalization."""
    m = [[Fraction(x) for x in row] for row in b]
    n = len(m)
    if any(len(row) != n for row in m) or any(m[i][j] != m[j][i] for i in range(n) for j in range(n)):
        raise ValueError("form must be a symmetric square matrix")
    pos = neg = 0
    k = 0
    while k < n:
        if m[k][k] == 0:
            j = next((j for j in range(k + 1, n) if m[j][j] != 0), None)
            if j is not None:
                m[k], m[j] = m[j], m[k]
                for row in m:
                    row[k], row[j] = row[j], row[k]
            else:
                j = next((j for j in range(k + 1, n) if m[k][j] != 0), None)
                if j is None:
                    k += 1  # radical direction
                    continue
                # e_k -> e_k + e_j makes the pivot 2 m[k][j] != 0
                for i in range(n):
                    m[k][i] += m[j][i]
                for i in range(n):
                    m[i][k] += m[i][j]
        d = m[k][k]
        pos += d > 0
        neg += d < 0
        for i in range(k + 1, n):
            f = m[i][k] / d
            if f:
                # the same operation on rows and columns keeps the form congruent
                for t in range(n):
                    m[i][t] -= f * m[k][t]
                for t in range(n):
                    m[t][i] -= f * m[t][k]
        k += 1
    return pos - neg


def _middle_monomials(variables: Sequence[str], degree: int) -> list[tuple[int, ...]]:
    out = []

    def rec(prefix, left, slots):
        if slots == 1:
            out.append(prefix + (left,))
            return
        for e in range(left, -1, -1):
            rec(prefix + (e,), left - e, slots - 1)

    if variables:
        rec((), degree, len(variables))
    else:
        out.append(())
    return sorted(out)


def cup_form(f: IntersectionFunctional) -> list[list[Fraction]]:
    """Gram matrix of the middle-degree monomials under the intersection functional.

    The monomials span the middle cohomology of the models used here; a
    spanning set gives the same signature as a basis.
    """
    if f.dimension % 4:
        return []
    basis = _middle_monomials(f.variables, f.dimension // 4)
    return [[f.value(tuple(a + b for a, b in zip(u, v))) for v in basis] for u in basis]


def dedekind_sum(q: int, n: int) -> Fraction:
    """s(q, n) = -(1/4n) sum_j f(zeta^j) f(zeta^(qj)) with f(z) = (1 + z)/(1 - z)."""
    if n < 1:
        raise ValueError("n must be positive")
    if gcd(q, n) != 1:
        raise ValueError(f"dedekind_sum needs gcd(q, n) = 1, got ({q}, {n})")
    if n == 1:
        return Fraction(0)
    one = CyclotomicNumber.rational(1)
    f = [None] + [(one + root_of_unity(j, n)) / (one - root_of_unity(j, n)) for j in range(1, n)]
    total = CyclotomicNumber.rational(0)
    for j in range(1, n):
        total = total + f[j] * f[(q * j) % n]
    value = total * Fraction(-1, 4 * n)
    if not value.is_rational():
        raise ArithmeticError("Dedekind sum came out irrational")
    return value.to_fraction()


def dedekind_sum_sawtooth(q: int, n: int) -> Fraction:
    """Independent oracle: sum_k ((k/n)) ((qk/n)) with the sawtooth ((x))."""

    def saw(x: Fraction) -> Fraction:
        if x.denominator == 1:
            return Fraction(0)
        return x - (x.numerator // x.denominator) - Fraction(1, 2)

    return sum((saw(Fraction(k, n)) * saw(Fraction(q * k, n)) for k in range(1, n)), Fraction(0))


def reciprocity_check(q: int, n: int) -> bool:
    lhs = dedekind_sum(q, n) + dedekind_sum(n, q)
    rhs = Fraction(-1, 4) + (Fraction(q, n) + Fraction(n, q) + Fraction(1, q * n)) / 12
    return lhs == rhs


# ---------------------------------------------------------------------------
# localized decomposition

@dataclass
class OrbitEntry:
    orbit: str
    labels: list[str]
    orbit_size: int
    stabilizer: Subgroup
    inflation: dict
    sub_prime: PrimeIdealSpec
    fiber_class: LocalizedElement
    unit_certified: bool
    base_token: str
    series: Optional[TruncatedSeries] = None
    pairing: Optional[CyclotomicNumber] = None

    def to_dict(self) -> dict:
        return {
            "orbit": self.orbit,
            "components": self.labels,
            "orbit_size": self.orbit_size,
            "stabilizer": self.stabilizer.to_dict(),
            "stabilizer_order": self.stabilizer.order,
            "inflation": self.inflation,
            "sub_prime": self.sub_prime.to_dict(),
            "fiber_class": self.fiber_class.to_dict(),
            "fiber_class_text": str(self.fiber_class),
            "unit_certified": self.unit_certified,
            "base_token": self.base_token,
            "series": self.series.to_dict() if self.series is not None else None,
            "pairing": self.pairing.to_dict() if self.pairing is not None else None,
            "pairing_text": str(self.pairing) if self.pairing is not None else None,
        }


@dataclass
class ContributionReport:
    prime: PrimeIdealSpec
    support: Subgroup
    branch: str
    statement: str
    gtoh: Optional[GtoHReport] = None
    entries: list[OrbitEntry] = field(default_factory=list)
    component_count: int = 0
    evaluation_element: Optional[Element] = None
    total: Optional[CyclotomicNumber] = None

    def orbit_sizes_consistent(self) -> bool:
        return sum(e.orbit_size for e in self.entries) == self.component_count

    def all_units(self) -> bool:
        return all(e.unit_certified for e in self.entries)

    def to_dict(self) -> dict:
        return {
            "prime": self.prime.to_dict(),
            "prime_text": str(self.prime),
            "support": self.support.to_dict(),
            "support_order": self.support.order,
            "branch": self.branch,
            "statement": self.statement,
            "gtoh": self.gtoh.to_dict() if self.gtoh else None,
            "component_count": self.component_count,
            "orbit_count": len(self.entries),
            "entries": [e.to_dict() for e in self.entries],
            "evaluation_element": list(self.evaluation_element) if self.evaluation_element is not None else None,
            "total": self.total.to_dict() if self.total is not None else None,
            "total_text": str(self.total) if self.total is not None else None,
        }

    def to_text(self) -> str:
        lines = [f"prime {self.prime}", f"support H = {self.support} (order {self.support.order})",
                 f"branch: {self.branch}", f"  {self.statement}"]
        for e in self.entries:
            lines.append(
                f"  orbit {e.orbit}: {', '.join(e.labels)} | size {e.orbit_size} | stabilizer order "
                f"{e.stabilizer.order} | inflate {e.inflation['from']} -> {e.inflation['to']}"
            )
            lines.append(f"    fiber class {e.fiber_class} * {e.base_token}"
                         f" (unit: {'yes' if e.unit_certified else 'NO'})")
            if e.series is not None:
                lines.append(f"    series form {e.series}")
            if e.pairing is not None:
                lines.append(f"    pairing at g: {e.pairing}")
        if self.total is not None:
            lines.append(f"total at g = {self.evaluation_element}: {self.total}")
        return "\n".join(lines)


def _group_orbits(components: Sequence[FixedComponentDescriptor]) -> "OrderedDict[str, list]":
    orbits: OrderedDict[str, list] = OrderedDict()
    for c in components:
        orbits.setdefault(c.orbit if c.orbit is not None else c.label, []).append(c)
    return orbits


def decompose_localized_class(
    data: GManifoldFixedData, prime: PrimeIdealSpec, evaluate_at: Optional[Sequence[int]] = None
) -> ContributionReport:
    """Split the localized signature class into orbit contributions.

    Each orbit G.F with stabilizer G' gives an induced-up class built from the
    fiber class in R(G')_q and the signature class of F, which stays an
    opaque token inflated from G'/H.
    """
    if prime.group != data.group:
        raise ValueError("prime ideal over a different group")
    group = data.group
    h = support(prime)
    g_eval = group.element(evaluate_at) if evaluate_at is not None else None
    if h.is_trivial():
        gtoh = lemma_GtoH_check(prime)
        if prime.p == 0 or group.order % prime.p:
            branch = "collapse"
            statement = (f"support trivial and p = {prime.p} prime to |G| = {group.order}: "
                         f"R(G)_p is Z_(p) and forgetting the G-action loses no information")
        else:
            branch = "restriction"
            statement = (f"support trivial but p = {prime.p} divides |G| = {group.order}: "
                         f"restricting to the trivial group kills only p-primary torsion")
        report = ContributionReport(prime, h, branch, statement, gtoh)
        try:
            report.component_count = 1
            whole = data.whole_component()
            report.entries.append(_orbit_entry(data, prime, h, whole.label, [whole], g_eval))
        except MissingFixedData:
            report.component_count = 0
        return report

    fs = data.fixed_set(h)
    orbits = _group_orbits(fs.components)
    entries = [_orbit_entry(data, prime, h, name, members, g_eval) for name, members in orbits.items()]
    whole = len(fs.components) == 1 and fs.components[0].dimension == data.dimension
    if whole:
        branch = "inflation"
        statement = "H acts trivially on M: the class is inflated from G/H"
    else:
        branch = "orbits"
        statement = f"{len(fs.components)} components of M^H in {len(entries)} G-orbits"
    report = ContributionReport(prime, h, branch, statement, lemma_GtoH_check(prime), entries, len(fs.components))
    if g_eval is not None:
        total = CyclotomicNumber.rational(0)
        for e in entries:
            total = total + e.pairing
        report.evaluation_element = g_eval
        report.total = total
    return report


def _orbit_entry(data, prime, h, name, members, g_eval) -> OrbitEntry:
    group = data.group
    stab = members[0].stabilizer
    for c in members[1:]:
        if c.stabilizer.elements != stab.elements:
            raise SchemaError(f"orbit {name!r}", "members have different stabilizers")
    if len(members) != stab.index:
        raise SchemaError(
            f"orbit {name!r}", f"orbit has {len(members)} members but |G/G'| = {stab.index}"
        )
    rep = members[0]
    sub_prime = PrimeIdealSpec(stab.group, stab.locate(prime.element), prime.p, prime.residue_prime)
    chars = [restrict_character(group.character(a), stab) for a in rep.characters()]
    fc = fiber_class_point(sub_prime, chars)
    local_h = Subgroup.generated_by(stab.group, [stab.locate(x) for x in h.minimal_generators()])
    q = quotient(stab.group, local_h)
    inflation = {"from": list(stab.group.factors), "to": list(q.group.factors),
                 "kernel_order": h.order}
    series = fiber_series(group, prime.element, rep) if rep.variables else None
    pairing = None
    if g_eval is not None:
        pairing = CyclotomicNumber.rational(0)
        for c in members:
            pairing = pairing + component_contribution(group, g_eval, c)
    return OrbitEntry(
        orbit=name,
        labels=[c.label for c in members],
        orbit_size=len(members),
        stabilizer=stab,
        inflation=inflation,
        sub_prime=sub_prime,
        fiber_class=fc,
        unit_certified=is_unit_localized(sub_prime, fc.denominator),
        base_token=f"[D_{rep.label}]",
        series=series,
        pairing=pairing,
    )


# ---------------------------------------------------------------------------
# JSON ingestion

def _parse_component(group: FiniteAbelianGroup, raw: dict, path: str) -> FixedComponentDescriptor:
    try:
        label = str(raw["label"])
        stab_gens = raw.get("stabilizer")
        stab = Subgroup.whole(group) if stab_gens is None else Subgroup.generated_by(group, stab_gens)
        variables = tuple(raw.get("variables", ()))
        dim = int(raw.get("dimension", 0))
        inter_raw = raw.get("intersection")
        if inter_raw is None:
            if dim:
                raise SchemaError(path + ".intersection", "required for positive-dimensional components")
            inter = IntersectionFunctional.point()
        else:
            inter = IntersectionFunctional.from_dict(variables, dim, inter_raw)
        tangent = tuple(LinearForm.from_list(r) for r in raw.get("tangent_roots", ()))
        pieces = []
        for i, p in enumerate(raw.get("normal_pieces", ())):
            rank = int(p.get("rank", 1))
            roots = p.get("roots")
            if roots is None:
                if variables:
                    raise SchemaError(f"{path}.normal_pieces[{i}].roots", "required when F has cohomology")
                roots = [[] for _ in range(rank)]
            pieces.append(NormalPiece(group.character(p["character"]), rank,
                                      tuple(LinearForm.from_list(r) for r in roots)))
        return FixedComponentDescriptor(label, stab, int(raw.get("sign", 1)), inter, tangent, tuple(pieces),
                                        raw.get("orbit"))
    except SchemaError:
        raise
    except HypothesisViolation:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(path, str(exc)) from exc


def load_fixed_data_dict(data: dict) -> GManifoldFixedData:
    try:
        group = FiniteAbelianGroup(tuple(int(x) for x in data["group"]))
        dim = int(data["dimension"])
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError("$", f"needs 'group' and 'dimension': {exc}") from exc
    sets = []
    for i, fs in enumerate(data.get("fixed_sets", ())):
        path = f"$.fixed_sets[{i}]"
        try:
            gens = fs["subgroup"]
            h = Subgroup.generated_by(group, gens) if gens else Subgroup.trivial(group)
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(path + ".subgroup", str(exc)) from exc
        comps = tuple(_parse_component(group, c, f"{path}.components[{j}]")
                      for j, c in enumerate(fs.get("components", ())))
        sets.append(FixedSet(h, comps))
    try:
        return GManifoldFixedData(group, dim, tuple(sets), str(data.get("name", "")))
    except SchemaError:
        raise
    except HypothesisViolation:
        raise
    except ValueError as exc:
        raise SchemaError("$", str(exc)) from exc


def load_fixed_data(path) -> GManifoldFixedData:
    return load_fixed_data_dict(json.loads(Path(path).read_text()))


def dump_fixed_data(data: GManifoldFixedData, path) -> None:
    Path(path).write_text(json.dumps(data.to_dict(), indent=2) + "\n")


def format_value(z: CyclotomicNumber) -> str:
    return format_rational(z.to_fraction()) if z.is_rational() else str(z)
