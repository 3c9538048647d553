"""Finite abelian groups, their character groups, and the representation ring.

For abelian G the representation ring R(G) is the integral group ring of the
dual group; a :class:`VirtualRep` is a finitely supported integer function on
characters.  Group elements and characters are tuples of residues with
respect to the invariant factors ``d_1 | d_2 | ... | d_k``; the pairing is

    chi_a(g) = exp(2 pi i * sum_i a_i g_i / d_i).

Subgroups and quotients are materialised as new :class:`FiniteAbelianGroup`
values together with explicit maps, computed from a Smith normal form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, reduce
from itertools import product
from math import gcd, lcm, prod
from typing import Iterable, Mapping, Sequence

from .exactnum import CyclotomicNumber, smith_normal_form
from .exactnum.intmatrix import identity

MAX_GROUP_ORDER = 10_000

Element = tuple[int, ...]
Character = tuple[int, ...]


_SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


class GroupMismatch(ValueError):
    """Operands live over different groups."""


def _invariant_factors(orders: Sequence[int]) -> tuple[int, ...]:
    orders = [int(d) for d in orders]
    if any(d < 1 for d in orders):
        raise ValueError(f"cyclic factor orders must be positive: {orders}")
    if not orders:
        return ()
    d, _, _ = smith_normal_form([[o if i == j else 0 for j in range(len(orders))] for i, o in enumerate(orders)])
    diag = [d[i][i] for i in range(len(orders))]
    return tuple(x for x in diag if x != 1)


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Product of cyclic groups Z/d_1 x ... x Z/d_k with d_i | d_{i+1}.

    Arbitrary cyclic factor lists are normalised to invariant factors; use
    :func:`presentation_map` to transport elements written in the original
    factors.
    """

    factors: tuple[int, ...] = ()

    def __post_init__(self):
        facs = tuple(int(d) for d in self.factors)
        ok = all(d >= 2 for d in facs) and all(b % a == 0 for a, b in zip(facs, facs[1:]))
        if not ok:
            facs = _invariant_factors(facs)
        object.__setattr__(self, "factors", facs)
        if prod(facs) > MAX_GROUP_ORDER:
            raise ValueError(f"group order {prod(facs)} exceeds {MAX_GROUP_ORDER}")

    @property
    def order(self) -> int:
        return prod(self.factors)

    @property
    def rank(self) -> int:
        return len(self.factors)

    @property
    def exponent(self) -> int:
        return self.factors[-1] if self.factors else 1

    @property
    def identity(self) -> Element:
        return (0,) * self.rank

    trivial_character = identity

    def is_cyclic(self) -> bool:
        return self.rank <= 1

    def elements(self) -> list[Element]:
        return list(product(*(range(d) for d in self.factors)))

    def characters(self) -> list[Character]:
        return self.elements()

    def element(self, residues: Iterable[int]) -> Element:
        residues = tuple(int(r) for r in residues)
        if len(residues) != self.rank:
            raise ValueError(f"expected {self.rank} residues, got {residues}")
        return tuple(r % d for r, d in zip(residues, self.factors))

    character = element

    def add(self, g: Element, h: Element) -> Element:
        return tuple((a + b) % d for a, b, d in zip(g, h, self.factors))

    def neg(self, g: Element) -> Element:
        return tuple(-a % d for a, d in zip(g, self.factors))

    def scale(self, k: int, g: Element) -> Element:
        return tuple(k * a % d for a, d in zip(g, self.factors))

    def element_order(self, g: Element) -> int:
        return reduce(lcm, (d // gcd(a, d) for a, d in zip(g, self.factors)), 1)

    def pairing(self, a: Character, g: Element) -> Fraction:
        """Rotation number of chi_a(g), as a fraction in [0, 1)."""
        return sum((Fraction(x * y, d) for x, y, d in zip(a, g, self.factors)), Fraction(0)) % 1

    def character_value(self, a: Character, g: Element) -> CyclotomicNumber:
        q = self.pairing(a, g)
        return CyclotomicNumber.from_exponents(q.denominator, [(q.numerator, 1)])

    def standard_generators(self) -> list[Element]:
        return [tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank)]

    def to_dict(self) -> list[int]:
        return list(self.factors)

    @classmethod
    def from_dict(cls, data) -> "FiniteAbelianGroup":
        return cls(tuple(int(d) for d in data))

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " x ".join(f"Z/{d}" for d in self.factors)


def presentation_map(orders: Sequence[int]):
    """Group for the cyclic factors ``orders`` plus the map from old residues."""
    pres = _Presentation.build(list(orders), [])
    return pres.group, pres.project


@dataclass
class _Presentation:
    """Z^r modulo a relation lattice, diagonalised to invariant factors.

    ``project`` sends integer coordinates in Z^r to the invariant-factor
    residues of the quotient; ``lifts[i]`` are Z^r coordinates of the i-th
    invariant-factor generator.
    """

    group: FiniteAbelianGroup
    transform: list[list[int]]
    keep: list[int]
    lifts: list[list[int]]

    @classmethod
    def build(cls, moduli: Sequence[int], relations: Sequence[Sequence[int]]) -> "_Presentation":
        # relation columns: moduli on the diagonal plus the extra relations
        r = len(moduli)
        cols = [[m if i == j else 0 for i in range(r)] for j, m in enumerate(moduli)]
        cols += [list(rel) for rel in relations]
        if r == 0:
            return cls(FiniteAbelianGroup(()), [], [], [])
        mat = [[c[i] for c in cols] for i in range(r)]
        d, u, _ = smith_normal_form(mat)
        diag = [d[i][i] if i < len(cols) else 0 for i in range(r)]
        if any(x == 0 for x in diag):
            raise ValueError("presentation is not finite")
        keep = [i for i, x in enumerate(diag) if x != 1]
        u_inv = _unimodular_inverse(u)
        lifts = [[u_inv[k][i] for k in range(r)] for i in keep]
        group = FiniteAbelianGroup(tuple(diag[i] for i in keep))
        return cls(group, u, keep, lifts)

    def project(self, coords: Sequence[int]) -> Element:
        out = []
        for pos, i in enumerate(self.keep):
            row = self.transform[i]
            out.append(sum(a * b for a, b in zip(row, coords)) % self.group.factors[pos])
        return tuple(out)


def _unimodular_inverse(u: list[list[int]]) -> list[list[int]]:
    n = len(u)
    aug = [list(row) + identity(n)[i] for i, row in enumerate(u)]
    for col in range(n):
        # Euclid on the column to reach a +-1 pivot
        while True:
            rows = [r for r in range(col, n) if aug[r][col]]
            piv = min(rows, key=lambda r: abs(aug[r][col]))
            aug[col], aug[piv] = aug[piv], aug[col]
            done = True
            for r in range(col + 1, n):
                if aug[r][col]:
                    q = aug[r][col] // aug[col][col]
                    aug[r] = [x - q * y for x, y in zip(aug[r], aug[col])]
                    if aug[r][col]:
                        done = False
            if done:
                break
        if aug[col][col] < 0:
            aug[col] = [-x for x in aug[col]]
    for col in range(n - 1, -1, -1):
        for r in range(col):
            q = aug[r][col]
            if q:
                aug[r] = [x - q * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


# ---------------------------------------------------------------------------
# subgroups and quotients

@dataclass(frozen=True)
class Subgroup:
    """Subgroup of ``ambient`` stored as its sorted element list."""

    ambient: FiniteAbelianGroup
    elements: tuple[Element, ...]
    generators: tuple[Element, ...] = field(default=(), compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(sorted(set(self.elements))))

    @classmethod
    def generated_by(cls, group: FiniteAbelianGroup, gens: Iterable[Sequence[int]]) -> "Subgroup":
        gens = tuple(group.element(g) for g in gens)
        members = {group.identity}
        frontier = [group.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for s in gens:
                    y = group.add(x, s)
                    if y not in members:
                        members.add(y)
                        nxt.append(y)
            frontier = nxt
        return cls(group, tuple(members), gens)

    @classmethod
    def trivial(cls, group: FiniteAbelianGroup) -> "Subgroup":
        return cls(group, (group.identity,), ())

    @classmethod
    def whole(cls, group: FiniteAbelianGroup) -> "Subgroup":
        return cls(group, tuple(group.elements()), tuple(group.standard_generators()))

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def index(self) -> int:
        return self.ambient.order // self.order

    def __contains__(self, g) -> bool:
        return tuple(g) in self._element_set

    @cached_property
    def _element_set(self) -> frozenset:
        return frozenset(self.elements)

    def is_subgroup_of(self, other: "Subgroup") -> bool:
        return self._element_set <= other._element_set

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_whole(self) -> bool:
        return self.order == self.ambient.order

    def is_cyclic(self) -> bool:
        return self.structure.group.is_cyclic()

    @cached_property
    def structure(self) -> "_SubgroupStructure":
        return _SubgroupStructure.build(self)

    @property
    def group(self) -> FiniteAbelianGroup:
        """This subgroup as an abstract group in invariant-factor form."""
        return self.structure.group

    def embed(self, h: Element) -> Element:
        return self.structure.embed[tuple(h)]

    def locate(self, g: Element) -> Element:
        """Abstract coordinates of an ambient element lying in this subgroup."""
        return self.structure.locate[tuple(g)]

    def minimal_generators(self) -> tuple[Element, ...]:
        return tuple(self.embed(t) for t in self.group.standard_generators())

    def to_dict(self) -> list[list[int]]:
        return [list(g) for g in self.minimal_generators()]

    def __str__(self) -> str:
        gens = ", ".join("(" + ",".join(map(str, g)) + ")" for g in self.minimal_generators())
        return f"<{gens}>" if gens else "<>"


@dataclass
class _SubgroupStructure:
    group: FiniteAbelianGroup
    generators: list[Element]
    embed: dict
    locate: dict

    @classmethod
    def build(cls, sub: Subgroup) -> "_SubgroupStructure":
        g = sub.ambient
        gens = list(sub.generators) or _greedy_generators(sub)
        gens = [s for s in gens if any(s)]
        if len(gens) == 1 and g.element_order(gens[0]) == sub.order:
            abstract = FiniteAbelianGroup((sub.order,) if sub.order > 1 else ())
            tgens = [gens[0]] if sub.order > 1 else []
        else:
            abstract, tgens = _structure_from_generators(g, gens)
        embed = {}
        for c in abstract.elements():
            x = g.identity
            for k, t in zip(c, tgens):
                x = g.add(x, g.scale(k, t))
            embed[c] = x
        if len(set(embed.values())) != sub.order or set(embed.values()) != set(sub.elements):
            raise ArithmeticError("subgroup presentation does not match its elements")
        locate = {v: k for k, v in embed.items()}
        return cls(abstract, tgens, embed, locate)


def _greedy_generators(sub: Subgroup) -> list[Element]:
    g = sub.ambient
    gens: list[Element] = []
    span = Subgroup.generated_by(g, [])
    for x in sorted(sub.elements, key=lambda e: (-g.element_order(e), e)):
        if x not in span:
            gens.append(x)
            span = Subgroup.generated_by(g, gens)
            if span.order == sub.order:
                break
    return gens


def _structure_from_generators(g: FiniteAbelianGroup, gens: list[Element]):
    """Invariant-factor form of the subgroup generated by ``gens``.

    The relation lattice of Z^r -> G is computed as the kernel of the map
    modulo the exponent; Smith form then yields generators.
    """
    from .exactnum import lattice_kernel

    r = len(gens)
    if r == 0:
        return FiniteAbelianGroup(()), []
    n = g.exponent
    # x in Z^r is a relation iff sum x_j s_j = 0, i.e. for each coordinate i
    # sum_j x_j s_ji * (n/d_i) = 0 mod n; add slack variables for the "mod n"
    k = g.rank
    rows = []
    for i, d in enumerate(g.factors):
        row = [s[i] * (n // d) for s in gens] + [n if t == i else 0 for t in range(k)]
        rows.append(row)
    kern = lattice_kernel(rows)
    relations = [vec[:r] for vec in kern]
    mat = [[c[i] for c in relations] for i in range(r)]
    d, u, _ = smith_normal_form(mat)
    diag = [d[i][i] if i < len(relations) else 0 for i in range(r)]
    keep = [i for i, x in enumerate(diag) if x != 1]
    u_inv = _unimodular_inverse(u)
    tgens = []
    for i in keep:
        coeffs = [u_inv[j][i] for j in range(r)]
        x = g.identity
        for c, s in zip(coeffs, gens):
            x = g.add(x, g.scale(c, s))
        tgens.append(x)
    return FiniteAbelianGroup(tuple(diag[i] for i in keep)), tgens


@dataclass(frozen=True)
class Quotient:
    """G/N with its projection map."""

    ambient: FiniteAbelianGroup
    kernel: Subgroup
    group: FiniteAbelianGroup
    _pres: _Presentation = field(compare=False, repr=False)

    def project(self, g: Element) -> Element:
        return self._pres.project(g)


def quotient(group: FiniteAbelianGroup, n: Subgroup) -> Quotient:
    if n.ambient != group:
        raise GroupMismatch("subgroup of a different group")
    pres = _Presentation.build(list(group.factors), [list(x) for x in n.minimal_generators()])
    return Quotient(group, n, pres.group, pres)


def subgroup_generated(group: FiniteAbelianGroup, g: Sequence[int]) -> Subgroup:
    g = group.element(g)
    if not any(g):
        return Subgroup.trivial(group)
    return Subgroup.generated_by(group, [g])


def element_order(group: FiniteAbelianGroup, g: Sequence[int]) -> int:
    return group.element_order(group.element(g))


def cyclic_subgroups(group: FiniteAbelianGroup) -> list[Subgroup]:
    """All cyclic subgroups, sorted by (order, elements)."""
    seen = {}
    for g in group.elements():
        s = subgroup_generated(group, g)
        key = s.elements
        # keep the least generator for determinism
        if key not in seen:
            seen[key] = s
    return sorted(seen.values(), key=lambda s: (s.order, s.elements))


def all_subgroups(group: FiniteAbelianGroup) -> list[Subgroup]:
    """Every subgroup, sorted by (order, elements)."""
    found = {Subgroup.trivial(group).elements: Subgroup.trivial(group)}
    frontier = list(found.values())
    elements = group.elements()
    while frontier:
        nxt = []
        for s in frontier:
            for g in elements:
                if g in s:
                    continue
                t = Subgroup.generated_by(group, list(s.minimal_generators()) + [g])
                if t.elements not in found:
                    found[t.elements] = t
                    nxt.append(t)
        frontier = nxt
    return sorted(found.values(), key=lambda s: (s.order, s.elements))


# ---------------------------------------------------------------------------
# the representation ring

class VirtualRep:
    """Integer combination of characters of a finite abelian group."""

    __slots__ = ("group", "_coeffs", "_hash")

    def __init__(self, group: FiniteAbelianGroup, coeffs: Mapping[Sequence[int], int] | None = None):
        clean: dict[Character, int] = {}
        for a, c in (coeffs or {}).items():
            c = int(c)
            if c:
                key = group.character(a)
                clean[key] = clean.get(key, 0) + c
        clean = {a: c for a, c in clean.items() if c}
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "_coeffs", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("VirtualRep is immutable")

    # constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, group) -> "VirtualRep":
        return cls(group, {})

    @classmethod
    def one(cls, group) -> "VirtualRep":
        return cls(group, {group.trivial_character: 1})

    @classmethod
    def char(cls, group, a: Sequence[int], coeff: int = 1) -> "VirtualRep":
        return cls(group, {tuple(a): coeff})

    @classmethod
    def regular(cls, group) -> "VirtualRep":
        return cls(group, {a: 1 for a in group.characters()})

    # access ---------------------------------------------------------------

    @property
    def coefficients(self) -> dict[Character, int]:
        return dict(self._coeffs)

    def __getitem__(self, a) -> int:
        return self._coeffs.get(tuple(a), 0)

    def items(self):
        return sorted(self._coeffs.items())

    def is_zero(self) -> bool:
        return not self._coeffs

    def dimension(self) -> int:
        return sum(self._coeffs.values())

    def vector(self) -> list[int]:
        """Coordinates in the basis ``group.characters()``."""
        return [self._coeffs.get(a, 0) for a in self.group.characters()]

    @classmethod
    def from_vector(cls, group, vec: Sequence[int]) -> "VirtualRep":
        return cls(group, dict(zip(group.characters(), vec)))

    # ring structure -------------------------------------------------------

    def _check(self, other: "VirtualRep"):
        if not isinstance(other, VirtualRep):
            raise TypeError(f"expected VirtualRep, got {type(other).__name__}")
        if other.group != self.group:
            raise GroupMismatch(f"{self.group} vs {other.group}")

    def __add__(self, other):
        if isinstance(other, int):
            other = VirtualRep.one(self.group) * other
        self._check(other)
        out = dict(self._coeffs)
        for a, c in other._coeffs.items():
            out[a] = out.get(a, 0) + c
        return VirtualRep(self.group, out)

    __radd__ = __add__

    def __neg__(self):
        return VirtualRep(self.group, {a: -c for a, c in self._coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = VirtualRep.one(self.group) * other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return VirtualRep(self.group, {a: c * other for a, c in self._coeffs.items()})
        self._check(other)
        g = self.group
        out: dict[Character, int] = {}
        for a, x in self._coeffs.items():
            for b, y in other._coeffs.items():
                k = g.add(a, b)
                out[k] = out.get(k, 0) + x * y
        return VirtualRep(g, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = VirtualRep.one(self.group)
        for _ in range(k):
            result = result * self
        return result

    def dual(self) -> "VirtualRep":
        g = self.group
        return VirtualRep(g, {g.neg(a): c for a, c in self._coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, VirtualRep):
            return NotImplemented
        return self.group == other.group and self._coeffs == other._coeffs

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.group, frozenset(self._coeffs.items())))
            object.__setattr__(self, "_hash", h)
        return h

    # rendering ------------------------------------------------------------

    def _char_name(self, a: Character) -> str:
        if self.group.rank == 1:
            k = a[0]
            return "χ" if k == 1 else "χ" + str(k).translate(_SUPERSCRIPTS)
        return "χ[" + ",".join(map(str, a)) + "]"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for a, c in self.items():
            name = "1" if not any(a) else self._char_name(a)
            mag = abs(c)
            if mag == 1:
                term = name
            elif name == "1":
                term = str(mag)
            else:
                term = f"{mag}·{name}"
            parts.append(("−" if c < 0 else "+", term))
        text = ("−" if parts[0][0] == "−" else "") + parts[0][1]
        for sign, term in parts[1:]:
            text += f" {sign} {term}"
        return text

    def __repr__(self) -> str:
        return f"VirtualRep({self.group.factors}, {dict(self.items())})"

    def to_dict(self) -> dict:
        return {",".join(map(str, a)): c for a, c in self.items()}

    @classmethod
    def from_dict(cls, group, data: Mapping[str, int]) -> "VirtualRep":
        coeffs = {}
        for key, c in data.items():
            residues = tuple(int(x) for x in str(key).split(",") if x.strip() != "")
            coeffs[residues] = int(c)
        return cls(group, coeffs)


def rep_add(u: VirtualRep, v: VirtualRep) -> VirtualRep:
    return u + v


def rep_mul(u: VirtualRep, v: VirtualRep) -> VirtualRep:
    return u * v


def inner_product(u: VirtualRep, v: VirtualRep) -> int:
    u._check(v)
    return sum(c * v[a] for a, c in u.items())


def evaluate(v: VirtualRep, g: Sequence[int]) -> CyclotomicNumber:
    """Character value sum_a c_a chi_a(g), in Q(zeta_m) with m = ord(g)."""
    group = v.group
    g = group.element(g)
    m = group.element_order(g)
    terms: dict[int, int] = {}
    for a, c in v.items():
        q = group.pairing(a, g)
        e = q.numerator * (m // q.denominator)
        terms[e] = terms.get(e, 0) + c
    return CyclotomicNumber.from_exponents(m, terms)


def restrict_character(a: Character, h: Subgroup) -> Character:
    g = h.ambient
    out = []
    for t, e in zip(h.structure.generators, h.group.factors):
        q = g.pairing(a, t)
        out.append(int(q * e) % e)
    return tuple(out)


def restrict(v: VirtualRep, h: Subgroup) -> VirtualRep:
    """Restriction R(G) -> R(H); the result lives over ``h.group``."""
    if v.group != h.ambient:
        raise GroupMismatch("subgroup of a different group")
    out: dict[Character, int] = {}
    for a, c in v.items():
        b = restrict_character(a, h)
        out[b] = out.get(b, 0) + c
    return VirtualRep(h.group, out)


def _restriction_fibres(h: Subgroup) -> dict[Character, list[Character]]:
    cache = h.__dict__.setdefault("_fibres", None)
    if cache is None:
        cache = {}
        for a in h.ambient.characters():
            cache.setdefault(restrict_character(a, h), []).append(a)
        h.__dict__["_fibres"] = cache
    return cache


def induce(w: VirtualRep, h: Subgroup) -> VirtualRep:
    """Induction R(H) -> R(G): Ind chi = sum of psi in G^ restricting to chi."""
    if w.group != h.group:
        raise GroupMismatch("representation does not live over the subgroup")
    fibres = _restriction_fibres(h)
    out: dict[Character, int] = {}
    for b, c in w.items():
        for a in fibres[b]:
            out[a] = out.get(a, 0) + c
    return VirtualRep(h.ambient, out)


def inflate(w: VirtualRep, q: Quotient) -> VirtualRep:
    """Pull back characters of G/N to characters of G trivial on N."""
    if w.group != q.group:
        raise GroupMismatch("representation does not live over the quotient")
    g = q.ambient
    images = [q.project(e) for e in g.standard_generators()]
    out: dict[Character, int] = {}
    for b, c in w.items():
        a = tuple(int(q.group.pairing(b, img) * d) % d for img, d in zip(images, g.factors))
        out[a] = out.get(a, 0) + c
    return VirtualRep(g, out)


def lambda_total(group: FiniteAbelianGroup, characters: Iterable[Sequence[int]]) -> VirtualRep:
    """Total exterior power: prod (1 + chi_i)."""
    result = VirtualRep.one(group)
    for a in characters:
        result = result * (VirtualRep.one(group) + VirtualRep.char(group, a))
    return result


def lambda_minus1(group: FiniteAbelianGroup, characters: Iterable[Sequence[int]]) -> VirtualRep:
    """lambda_{-1} = prod (1 - chi_i)."""
    result = VirtualRep.one(group)
    for a in characters:
        result = result * (VirtualRep.one(group) - VirtualRep.char(group, a))
    return result
