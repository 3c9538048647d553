"""Polynomials over the prime field F_p, and the canonical prime of Z[zeta_n] above p."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .cyclotomic import cyclotomic_polynomial


def _trim(coeffs) -> tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def multiplicative_order(a: int, n: int) -> int:
    if n == 1:
        return 1
    a %= n
    k, x = 1, a
    while x != 1:
        x = x * a % n
        k += 1
        if k > n:
            raise ValueError(f"{a} is not a unit modulo {n}")
    return k


@dataclass(frozen=True)
class ModPolynomial:
    """Polynomial over F_p; coefficients are residues, constant term first."""

    characteristic: int
    coefficients: tuple[int, ...]

    def __post_init__(self):
        p = self.characteristic
        object.__setattr__(self, "coefficients", _trim(c % p for c in self.coefficients))

    @classmethod
    def from_ints(cls, p: int, coeffs) -> "ModPolynomial":
        return cls(p, tuple(coeffs))

    @classmethod
    def x(cls, p: int) -> "ModPolynomial":
        return cls(p, (0, 1))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def _like(self, coeffs) -> "ModPolynomial":
        return ModPolynomial(self.characteristic, tuple(coeffs))

    def __add__(self, other: "ModPolynomial") -> "ModPolynomial":
        a, b = self.coefficients, other.coefficients
        n = max(len(a), len(b))
        return self._like((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))

    def __neg__(self) -> "ModPolynomial":
        return self._like(-c for c in self.coefficients)

    def __sub__(self, other: "ModPolynomial") -> "ModPolynomial":
        return self + (-other)

    def __mul__(self, other: "ModPolynomial") -> "ModPolynomial":
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return self._like(())
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return self._like(out)

    def __divmod__(self, other: "ModPolynomial"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.characteristic
        rem = list(self.coefficients)
        b = other.coefficients
        inv_lead = pow(b[-1], -1, p)
        quot = [0] * max(len(rem) - len(b) + 1, 0)
        while len(rem) >= len(b):
            c = rem[-1] * inv_lead % p
            shift = len(rem) - len(b)
            quot[shift] = c
            for j, bj in enumerate(b):
                rem[shift + j] = (rem[shift + j] - c * bj) % p
            rem = list(_trim(rem))
        return self._like(quot), self._like(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "ModPolynomial":
        if self.is_zero():
            return self
        inv = pow(self.coefficients[-1], -1, self.characteristic)
        return self._like(c * inv for c in self.coefficients)

    def gcd(self, other: "ModPolynomial") -> "ModPolynomial":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def powmod(self, k: int, modulus: "ModPolynomial") -> "ModPolynomial":
        result = self._like((1,)) % modulus
        base = self % modulus
        while k:
            if k & 1:
                result = result * base % modulus
            base = base * base % modulus
            k >>= 1
        return result

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coefficients):
            acc = (acc * x + c) % self.characteristic
        return acc

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coefficients[i]
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms)

    def to_dict(self) -> dict:
        return {"characteristic": self.characteristic, "coefficients": list(self.coefficients)}

    @classmethod
    def from_dict(cls, data) -> "ModPolynomial":
        return cls(int(data["characteristic"]), tuple(int(c) for c in data["coefficients"]))


def cyclotomic_mod_p(n: int, p: int) -> ModPolynomial:
    return ModPolynomial(p, cyclotomic_polynomial(n))


def _probes(p: int, max_degree: int):
    # deterministic enumeration of nonconstant polynomials of degree < max_degree
    for deg in range(1, max_degree):
        for tail in product(range(p), repeat=deg):
            for lead in range(1, p):
                yield ModPolynomial(p, tail + (lead,))


def _split_equal_degree(f: ModPolynomial, d: int) -> list[ModPolynomial]:
    """Split a squarefree product of degree-d irreducibles into its factors."""
    if f.degree <= d:
        return [f.monic()]
    p = f.characteristic
    one = ModPolynomial(p, (1,))
    for h in _probes(p, f.degree):
        if p == 2:
            t, power = h % f, h % f
            for _ in range(d - 1):
                power = power * power % f
                t = t + power
        else:
            t = h.powmod((p ** d - 1) // 2, f) - one
        g = f.gcd(t)
        if 0 < g.degree < f.degree:
            return _split_equal_degree(g, d) + _split_equal_degree(f // g, d)
    raise ArithmeticError(f"could not split {f} over F_{p}")


def _canonical_key(f: ModPolynomial) -> tuple[int, ...]:
    # elementary symmetric functions of the roots, norm first; for linear
    # factors x - r this orders by the root r
    p, d = f.characteristic, f.degree
    return tuple(((-1) ** (d - i)) * c % p for i, c in enumerate(f.coefficients[:-1]))


def cyclotomic_factors_mod_p(n: int, p: int) -> list[ModPolynomial]:
    """All monic irreducible factors of Phi_n over F_p, canonical one first."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n % p == 0:
        raise ValueError(f"p = {p} divides n = {n}")
    d = multiplicative_order(p, n)
    factors = _split_equal_degree(cyclotomic_mod_p(n, p), d)
    return sorted(factors, key=_canonical_key)


def factor_cyclotomic_mod_p(n: int, p: int) -> ModPolynomial:
    """Canonical irreducible factor of Phi_n mod p.

    Its degree is the multiplicative order of p modulo n. Among the factors we
    take the one whose root symmetric functions (e_d, ..., e_1) are
    lexicographically least; for linear factors this is x - r with r the
    least primitive n-th root of unity in F_p.
    """
    return cyclotomic_factors_mod_p(n, p)[0]


def is_irreducible(f: ModPolynomial) -> bool:
    """Rabin-style test: gcd(f, x^(p^k) - x) = 1 for k < deg f and f | x^(p^d) - x."""
    p, d = f.characteristic, f.degree
    if d <= 0:
        return False
    x = ModPolynomial.x(p)
    power = x % f
    for _ in range(1, d):
        power = power.powmod(p, f)
        if f.gcd(power - x).degree > 0:
            return False
    return power.powmod(p, f) == x % f
