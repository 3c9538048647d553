"""Prime ideals of R(G), membership, localization and the support checks.

A prime ideal is given constructively by an element g, a residual
characteristic p (0 or a prime not dividing ord(g)), and for p > 0 an
irreducible factor f of Phi_m mod p, m = ord(g).  Membership of v means that
the character value v(g) vanishes in Q(zeta_m) (p = 0) or in the residue
field F_p[x]/(f) with zeta_m -> x (p > 0).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import gcd
from typing import Optional, Sequence

from .exactnum import (
    CyclotomicNumber,
    ModPolynomial,
    cyclotomic_mod_p,
    factor_cyclotomic_mod_p,
    is_irreducible,
    is_prime,
    lattice_kernel,
)
from .exactnum.cyclotomic import _power_table
from .grouprep import (
    Element,
    FiniteAbelianGroup,
    GroupMismatch,
    Subgroup,
    VirtualRep,
    evaluate,
    induce,
    restrict_character,
    subgroup_generated,
)


class InvalidPrime(ValueError):
    """The data does not describe a prime ideal of R(G)."""


class NotInvertible(ValueError):
    """A denominator lies in the prime ideal."""


class InconsistentSupport(ArithmeticError):
    """The support verification pass failed."""


@dataclass(frozen=True)
class PrimeIdealSpec:
    group: FiniteAbelianGroup
    element: Element
    p: int = 0
    residue_prime: Optional[ModPolynomial] = None

    def __post_init__(self):
        g = self.group.element(self.element)
        object.__setattr__(self, "element", g)
        m = self.group.element_order(g)
        if self.p:
            if not is_prime(self.p):
                raise InvalidPrime(f"residual characteristic {self.p} is not prime")
            if m % self.p == 0:
                raise InvalidPrime(f"p = {self.p} divides the order {m} of the evaluation element")
            f = self.residue_prime
            if f is None:
                object.__setattr__(self, "residue_prime", factor_cyclotomic_mod_p(m, self.p))
            else:
                if f.characteristic != self.p:
                    raise InvalidPrime("residue prime has the wrong characteristic")
                f = f.monic()
                if not (cyclotomic_mod_p(m, self.p) % f).is_zero() or not is_irreducible(f):
                    raise InvalidPrime(f"{f} is not an irreducible factor of Phi_{m} mod {self.p}")
                object.__setattr__(self, "residue_prime", f)
        elif self.residue_prime is not None:
            raise InvalidPrime("residue prime given for characteristic 0")

    @property
    def order(self) -> int:
        return self.group.element_order(self.element)

    def residue(self, v: VirtualRep):
        """Image of v in the residue field R(G)/p.

        A CyclotomicNumber for p = 0, a reduced ModPolynomial otherwise.
        """
        if v.group != self.group:
            raise GroupMismatch("representation over a different group")
        if not self.p:
            return evaluate(v, self.element)
        m = self.order
        coeffs = [0] * m
        for a, c in v.items():
            q = self.group.pairing(a, self.element)
            coeffs[q.numerator * (m // q.denominator)] += c
        return ModPolynomial(self.p, tuple(coeffs)) % self.residue_prime

    @cached_property
    def minimal_primes(self) -> tuple[Element, ...]:
        return tuple(minimal_primes_contained(self))

    def to_dict(self) -> dict:
        return {
            "group": list(self.group.factors),
            "element": list(self.element),
            "p": self.p,
            "residue_prime": list(self.residue_prime.coefficients) if self.residue_prime else None,
        }

    @classmethod
    def from_dict(cls, data) -> "PrimeIdealSpec":
        group = FiniteAbelianGroup(tuple(data["group"]))
        p = int(data.get("p", 0))
        rp = data.get("residue_prime")
        f = ModPolynomial(p, tuple(rp)) if rp else None
        return cls(group, tuple(data["element"]), p, f)

    def __str__(self) -> str:
        g = ",".join(map(str, self.element))
        base = f"p(g=({g}), p={self.p}"
        if self.residue_prime is not None:
            base += f", f={self.residue_prime}"
        return base + ")"


def p_regular_part(group: FiniteAbelianGroup, g: Sequence[int], p: int) -> Element:
    """The component of g of order prime to p (g itself when p = 0)."""
    g = group.element(g)
    if not p:
        return g
    m = group.element_order(g)
    pp = 1
    while m % (pp * p) == 0:
        pp *= p
    rest = m // pp
    if pp == 1:
        return g
    # k = 1 mod rest, k = 0 mod pp
    k = pp * pow(pp, -1, rest) if rest > 1 else 0
    return group.scale(k, g)


def prime_ideal(group: FiniteAbelianGroup, g: Sequence[int], p: int = 0) -> PrimeIdealSpec:
    """The prime of characters vanishing at g modulo the canonical prime above p.

    Roots of unity of p-power order are 1 modulo any prime above p, so g is
    first replaced by its p-regular part.
    """
    if p and not is_prime(p):
        raise InvalidPrime(f"residual characteristic {p} is not prime")
    return PrimeIdealSpec(group, p_regular_part(group, g, p), p)


def contains(prime: PrimeIdealSpec, v: VirtualRep) -> bool:
    r = prime.residue(v)
    return r.is_zero()


def is_unit_localized(prime: PrimeIdealSpec, v: VirtualRep) -> bool:
    """R(G)_p is local: v is a unit there iff v is outside p."""
    return not contains(prime, v)


# ---------------------------------------------------------------------------
# lattices attached to restriction and evaluation

def restriction_kernel(group: FiniteAbelianGroup, k: Subgroup) -> list[VirtualRep]:
    """Z-basis of ker(R(G) -> R(K))."""
    chars = group.characters()
    kchars = {b: i for i, b in enumerate(k.group.characters())}
    rows = [[0] * len(chars) for _ in kchars]
    for j, a in enumerate(chars):
        rows[kchars[restrict_character(a, k)]][j] = 1
    return [VirtualRep.from_vector(group, vec) for vec in lattice_kernel(rows, ncols=len(chars))]


def evaluation_kernel(group: FiniteAbelianGroup, x: Element) -> list[VirtualRep]:
    """Z-basis of the minimal prime q_x = ker(R(G) -> Z[zeta_m]), m = ord(x)."""
    m = group.element_order(x)
    table = _power_table(m)
    chars = group.characters()
    cols = []
    for a in chars:
        q = group.pairing(a, x)
        cols.append(table[q.numerator * (m // q.denominator)])
    rows = [[col[i] for col in cols] for i in range(len(cols[0]))]
    return [VirtualRep.from_vector(group, vec) for vec in lattice_kernel(rows, ncols=len(chars))]


def galois_orbit(group: FiniteAbelianGroup, x: Element) -> list[Element]:
    m = group.element_order(x)
    return sorted({group.scale(k, x) for k in range(1, m + 1) if gcd(k, m) == 1})


def galois_orbit_representatives(group: FiniteAbelianGroup) -> list[Element]:
    seen: set = set()
    reps = []
    for x in group.elements():
        if x in seen:
            continue
        orbit = galois_orbit(group, x)
        seen.update(orbit)
        reps.append(orbit[0])
    return reps


def minimal_primes_contained(prime: PrimeIdealSpec) -> list[Element]:
    """Least representatives x (one per Galois orbit) with q_x contained in p."""
    out = []
    for x in galois_orbit_representatives(prime.group):
        if all(contains(prime, b) for b in evaluation_kernel(prime.group, x)):
            out.append(x)
    return out


def support(prime: PrimeIdealSpec) -> Subgroup:
    """The cyclic subgroup <g>, verified to be the minimal one p pulls back from."""
    group = prime.group
    h = subgroup_generated(group, prime.element)
    if not all(contains(prime, b) for b in restriction_kernel(group, h)):
        raise InconsistentSupport(f"{prime} does not pull back from <g>")
    m = prime.order
    for ell in _prime_divisors(m):
        smaller = subgroup_generated(group, group.scale(ell, prime.element))
        if all(contains(prime, b) for b in restriction_kernel(group, smaller)):
            raise InconsistentSupport(f"{prime} already pulls back from {smaller}")
    return h


def _prime_divisors(n: int) -> list[int]:
    from .exactnum import prime_factors

    return list(prime_factors(n)) if n > 1 else []


def segal_vanishing(prime: PrimeIdealSpec, k: Subgroup) -> bool:
    """True when R(K)_p = 0, i.e. the support of p is not contained in K."""
    if k.ambient != prime.group:
        raise GroupMismatch("subgroup of a different group")
    h = subgroup_generated(prime.group, prime.element)
    return not h.is_subgroup_of(k)


def localize_restriction_module(prime: PrimeIdealSpec, k: Subgroup):
    """Decide R(K)_p = 0 directly from the module R(G)/ker(R(G) -> R(K)).

    Returns (vanishes, witness): the witness is an element of the kernel lying
    outside p, which annihilates R(K) and is invertible after localizing.
    """
    for b in restriction_kernel(prime.group, k):
        if not contains(prime, b):
            return True, b
    return False, None


# ---------------------------------------------------------------------------
# localized fractions

@dataclass(frozen=True, eq=False)
class LocalizedElement:
    """numerator / denominator in R(G)_p, with denominator outside p."""

    numerator: VirtualRep
    denominator: VirtualRep
    prime: PrimeIdealSpec

    def __post_init__(self):
        g = self.prime.group
        if self.numerator.group != g or self.denominator.group != g:
            raise GroupMismatch("fraction over a different group")
        if contains(self.prime, self.denominator):
            raise NotInvertible(f"denominator {self.denominator} lies in {self.prime}")

    @classmethod
    def of(cls, v: VirtualRep, prime: PrimeIdealSpec) -> "LocalizedElement":
        return cls(v, VirtualRep.one(prime.group), prime)

    def _check(self, other):
        if not isinstance(other, LocalizedElement):
            other = LocalizedElement.of(other, self.prime)
        if other.prime != self.prime:
            raise GroupMismatch("fractions localized at different primes")
        return other

    def __add__(self, other):
        other = self._check(other)
        return LocalizedElement(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
            self.prime,
        )

    def __neg__(self):
        return LocalizedElement(-self.numerator, self.denominator, self.prime)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __mul__(self, other):
        other = self._check(other)
        return LocalizedElement(
            self.numerator * other.numerator, self.denominator * other.denominator, self.prime
        )

    def inverse(self) -> "LocalizedElement":
        return LocalizedElement(self.denominator, self.numerator, self.prime)

    def is_zero(self) -> bool:
        return localized_is_zero(self)

    def __eq__(self, other):
        if not isinstance(other, LocalizedElement):
            return NotImplemented
        return localized_equals(self, other)

    __hash__ = None

    def value_at(self, g: Optional[Sequence[int]] = None) -> CyclotomicNumber:
        """numerator(g) / denominator(g); defaults to the prime's element."""
        g = self.prime.element if g is None else g
        return evaluate(self.numerator, g) / evaluate(self.denominator, g)

    def __str__(self) -> str:
        return f"({self.numerator}) / ({self.denominator})"

    def to_dict(self) -> dict:
        return {
            "numerator": self.numerator.to_dict(),
            "denominator": self.denominator.to_dict(),
            "prime": self.prime.to_dict(),
        }

    @classmethod
    def from_dict(cls, data) -> "LocalizedElement":
        prime = PrimeIdealSpec.from_dict(data["prime"])
        return cls(
            VirtualRep.from_dict(prime.group, data["numerator"]),
            VirtualRep.from_dict(prime.group, data["denominator"]),
            prime,
        )


def localized_is_zero(e: LocalizedElement) -> bool:
    # R(G)_p is reduced and embeds in the product of its quotients by the
    # minimal primes q_x inside p; denominators are nonzero in each of them
    return all(evaluate(e.numerator, x).is_zero() for x in e.prime.minimal_primes)


def localized_equals(e1: LocalizedElement, e2: LocalizedElement) -> bool:
    if e1.prime != e2.prime:
        raise GroupMismatch("fractions localized at different primes")
    diff = e1.numerator * e2.denominator - e2.numerator * e1.denominator
    return localized_is_zero(LocalizedElement.of(diff, e1.prime))


# ---------------------------------------------------------------------------
# passing from G to the support H

@dataclass
class GtoHReport:
    prime: PrimeIdealSpec
    support: Subgroup
    sub_prime: PrimeIdealSpec
    pulls_back: bool
    certified: bool
    reason: str
    index_character: Optional[VirtualRep] = None
    index_value: Optional[CyclotomicNumber] = None
    kernel_rank: int = 0
    annihilates_kernel: Optional[bool] = None
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "prime": self.prime.to_dict(),
            "support": self.support.to_dict(),
            "support_order": self.support.order,
            "sub_prime": self.sub_prime.to_dict(),
            "pulls_back": self.pulls_back,
            "certified": self.certified,
            "reason": self.reason,
            "index_character": self.index_character.to_dict() if self.index_character else None,
            "index_value": str(self.index_value) if self.index_value is not None else None,
            "kernel_rank": self.kernel_rank,
            "annihilates_kernel": self.annihilates_kernel,
        }


def lemma_GtoH_check(prime: PrimeIdealSpec) -> GtoHReport:
    """Certify R(G)_p = R(H)_q for the support H when p = 0 or p is prime to |G/H|.

    The certificate is the character of Ind_H^G 1, which equals |G/H| on H and
    vanishes off H: it lies outside p and kills ker(R(G) -> R(H)).
    """
    group = prime.group
    h = support(prime)
    local_g = h.locate(prime.element)
    sub_prime = PrimeIdealSpec(h.group, local_g, prime.p, prime.residue_prime)
    kernel = restriction_kernel(group, h)
    pulls_back = all(contains(prime, b) for b in kernel) and all(
        contains(prime, VirtualRep.char(group, a)) == contains(sub_prime, VirtualRep.char(h.group, restrict_character(a, h)))
        for a in group.characters()
    )
    index = h.index
    if h.is_whole():
        return GtoHReport(prime, h, sub_prime, pulls_back, True, "support is all of G", kernel_rank=0)
    ind = induce(VirtualRep.one(h.group), h)
    value = evaluate(ind, prime.element)
    outside = not contains(prime, ind)
    annihilates = all((ind * b).is_zero() for b in kernel)
    if prime.p and index % prime.p == 0:
        return GtoHReport(
            prime, h, sub_prime, pulls_back, False,
            f"iso not certified: p = {prime.p} divides |G/H| = {index}",
            ind, value, len(kernel), annihilates,
        )
    certified = outside and annihilates and pulls_back
    reason = "Ind_H^G 1 is a unit at p annihilating ker(R(G) -> R(H))" if certified else "certificate failed"
    return GtoHReport(prime, h, sub_prime, pulls_back, certified, reason, ind, value, len(kernel), annihilates)
