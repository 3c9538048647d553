"""Lens spaces L(n; q_1, ..., q_m) and their exact rho-vectors.

``LensSpace`` takes the weights literally: S^(2m-1) in C^m divided by the
generator acting by zeta_n^(q_j) on coordinate j.  The classical 3-dimensional
L(n; q) is ``LensSpace(n, (1, q))``; the pair search enumerates exactly these
normalized weight vectors (1, q_1, ..., q_m).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from math import gcd
from typing import Optional

from ._parallel import ordered_map
from .exactnum import CyclotomicNumber, root_of_unity


@dataclass(frozen=True)
class LensSpace:
    n: int
    weights: tuple[int, ...]

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("lens spaces need n >= 2")
        w = tuple(int(q) % self.n for q in self.weights)
        if not w:
            raise ValueError("at least one weight is needed")
        bad = [q for q in w if gcd(q, self.n) != 1]
        if bad:
            raise ValueError(f"weights {bad} are not coprime to n = {self.n}")
        object.__setattr__(self, "weights", w)

    @property
    def m(self) -> int:
        return len(self.weights)

    @property
    def dimension(self) -> int:
        return 2 * self.m - 1

    def __str__(self) -> str:
        return f"L({self.n}; {', '.join(map(str, self.weights))})"

    def classical_name(self) -> str:
        """L(n; q_1..q_{m-1}) when the first weight is 1, as in the classical notation."""
        if self.weights[0] == 1 and self.m > 1:
            return f"L({self.n};{','.join(map(str, self.weights[1:]))})"
        return str(self)

    def to_dict(self) -> dict:
        return {"n": self.n, "weights": list(self.weights)}

    @classmethod
    def from_dict(cls, data) -> "LensSpace":
        return cls(int(data["n"]), tuple(int(q) for q in data["weights"]))


@dataclass(frozen=True)
class RhoVector:
    n: int
    entries: tuple[CyclotomicNumber, ...]  # index k - 1 for k = 1..n-1

    def __getitem__(self, k: int) -> CyclotomicNumber:
        k %= self.n
        if k == 0:
            raise KeyError("rho-vectors are indexed by nontrivial elements")
        return self.entries[k - 1]

    def galois_equivariant(self) -> bool:
        units = [j for j in range(1, self.n) if gcd(j, self.n) == 1]
        return all(self[k * j] == self[k].galois(j) for k in range(1, self.n) for j in units)

    def conjugation_symmetric(self) -> bool:
        return all(self[self.n - k] == self[k].conjugate() for k in range(1, self.n))

    def reindexed(self, u: int, sign: int = 1) -> "RhoVector":
        """k -> sign * rho(u k)."""
        return RhoVector(self.n, tuple(self[u * k] if sign > 0 else -self[u * k] for k in range(1, self.n)))

    def to_dict(self) -> dict:
        return {"n": self.n, "entries": {str(k): self[k].to_dict() for k in range(1, self.n)}}


@lru_cache(maxsize=None)
def _f_primitive(d: int) -> CyclotomicNumber:
    one = CyclotomicNumber.rational(1)
    z = root_of_unity(1, d)
    return (one + z) / (one - z)


def _f(n: int, e: int) -> CyclotomicNumber:
    """(1 + zeta_n^e) / (1 - zeta_n^e) as a Galois conjugate of the primitive value."""
    g = gcd(e, n)
    d = n // g
    return _f_primitive(d).galois(e // g)


def rho_vector(lens: LensSpace) -> RhoVector:
    """k -> prod_j (1 + zeta^(k q_j)) / (1 - zeta^(k q_j))."""
    n = lens.n
    table = {}
    entries = []
    for k in range(1, n):
        v = CyclotomicNumber.rational(1)
        for q in lens.weights:
            e = (k * q) % n
            if e not in table:
                table[e] = _f(n, e)
            v = v * table[e]
        entries.append(v)
    return RhoVector(n, tuple(entries))


def units(n: int) -> list[int]:
    return [u for u in range(1, n) if gcd(u, n) == 1]


def homotopy_equivalent(a: LensSpace, b: LensSpace) -> bool:
    """prod q = +-c^m prod q' (mod n) for some unit c."""
    if a.n != b.n or a.m != b.m:
        return False
    n, m = a.n, a.m
    pa = pb = 1
    for q in a.weights:
        pa = pa * q % n
    for q in b.weights:
        pb = pb * q % n
    for c in units(n) or [1]:
        t = pow(c, m, n) * pb % n
        if pa == t or pa == (-t) % n:
            return True
    return False


def _sign_normal(q: int, n: int) -> int:
    return min(q % n, (-q) % n)


def isometry_witness(a: LensSpace, b: LensSpace) -> Optional[int]:
    """A unit u with {+-u q_j} = {q'_j} as multisets mod n, if any."""
    if a.n != b.n or a.m != b.m:
        return None
    n = a.n
    target = sorted(_sign_normal(q, n) for q in b.weights)
    for u in units(n) or [1]:
        if sorted(_sign_normal(u * q, n) for q in a.weights) == target:
            return u
    return None


def isometric(a: LensSpace, b: LensSpace) -> bool:
    return isometry_witness(a, b) is not None


def isometry_canonical(lens: LensSpace) -> tuple[int, ...]:
    n = lens.n
    return min(tuple(sorted(_sign_normal(u * q, n) for q in lens.weights)) for u in units(n) or [1])


def rho_equivalent(a: RhoVector, b: RhoVector) -> bool:
    """b = +-a(u k) for some unit u: equality up to reindexing and orientation."""
    if a.n != b.n:
        return False
    n = a.n
    for u in units(n) or [1]:
        for s in (1, -1):
            if all(b[k] == (a[u * k] if s > 0 else -a[u * k]) for k in range(1, n)):
                return True
    return False


@dataclass(frozen=True)
class ExoticPair:
    first: LensSpace
    second: LensSpace
    k: int
    difference: CyclotomicNumber
    invariantly_distinct: bool

    def to_dict(self) -> dict:
        return {
            "first": self.first.to_dict(),
            "second": self.second.to_dict(),
            "first_name": self.first.classical_name(),
            "second_name": self.second.classical_name(),
            "k": self.k,
            "difference": self.difference.to_dict(),
            "difference_text": str(self.difference),
            "invariantly_distinct": self.invariantly_distinct,
        }


def _pairs_for(n: int, m: int) -> list[ExoticPair]:
    reps: dict[tuple, LensSpace] = {}
    for qs in combinations_with_replacement(units(n), m):
        lens = LensSpace(n, (1,) + qs)
        reps.setdefault(isometry_canonical(lens), lens)
    spaces = list(reps.values())
    rhos = [rho_vector(s) for s in spaces]
    out = []
    for i in range(len(spaces)):
        for j in range(i + 1, len(spaces)):
            a, b = spaces[i], spaces[j]
            if not homotopy_equivalent(a, b) or isometric(a, b):
                continue
            ra, rb = rhos[i], rhos[j]
            k = next((k for k in range(1, n) if ra[k] != rb[k]), None)
            if k is None:
                continue
            out.append(ExoticPair(a, b, k, rb[k] - ra[k], not rho_equivalent(ra, rb)))
    return out


def find_exotic_pairs(n_max: int, m: int) -> list[ExoticPair]:
    """Homotopy equivalent, non-isometric pairs with different rho-vectors.

    Spaces are L(n; 1, q_1, ..., q_m) of dimension 2m + 1, one per isometry
    class, for 2 <= n <= n_max; pairs come out sorted by n then weights.
    """
    if n_max > 200 or m > 4 or m < 1:
        raise ValueError("desk scale: n_max <= 200 and 1 <= m <= 4")
    chunks = ordered_map(lambda n: _pairs_for(n, m), range(2, n_max + 1))
    return [p for chunk in chunks for p in chunk]
