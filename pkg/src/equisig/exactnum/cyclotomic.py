"""Exact arithmetic in cyclotomic fields Q(zeta_n).

An element is stored in the power basis ``1, z, ..., z^(phi(n)-1)`` of
Q(zeta_n) modulo the n-th cyclotomic polynomial, always at its minimal
conductor, so that two equal numbers have identical representations.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from .rational import as_rational, format_rational, parse_rational


class CyclotomicDivisionByZero(ZeroDivisionError):
    """Raised on inversion of the zero element."""


# ---------------------------------------------------------------------------
# integer helpers

@lru_cache(maxsize=None)
def prime_factors(n: int) -> tuple[int, ...]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return tuple(out)


def divisors(n: int) -> list[int]:
    small = [d for d in range(1, int(n ** 0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    result = n
    for p in prime_factors(n):
        result -= result // p
    return result


def _field_conductor(n: int) -> int:
    # Q(zeta_n) == Q(zeta_{n/2}) for n = 2 mod 4
    return n // 2 if n % 4 == 2 else n


# ---------------------------------------------------------------------------
# cyclotomic polynomials (integer coefficient tuples, lowest degree first)

def _poly_divexact(num: list[int], den: tuple[int, ...]) -> list[int]:
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            quot[i - dd] = c
            for j, dc in enumerate(den):
                num[i - dd + j] -= c * dc
    if any(num[:dd]):
        raise ArithmeticError("inexact polynomial division")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, constant term first.

    Obtained by dividing ``x^n - 1`` by ``Phi_d`` for every proper divisor d.
    """
    if n < 1:
        raise ValueError("cyclotomic_polynomial needs n >= 1")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n):
        if d < n:
            poly = _poly_divexact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Power-basis coordinates of zeta_n^e for e = 0..n-1."""
    phi = euler_phi(n)
    cyc = cyclotomic_polynomial(n)
    rows = []
    cur = [1] + [0] * (phi - 1) if phi > 0 else []
    for _ in range(n):
        rows.append(tuple(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for j in range(phi):
                cur[j] -= top * cyc[j]
    return tuple(rows)


def _reduce_exponents(n: int, terms) -> list:
    """Sum of ``coef * zeta_n^e`` for (e, coef) pairs, in the power basis."""
    table = _power_table(n)
    out = [0] * euler_phi(n)
    for e, c in terms:
        if c:
            row = table[e % n]
            for j, r in enumerate(row):
                if r:
                    out[j] += c * r
    return out


@lru_cache(maxsize=None)
def _descent_data(n: int, d: int):
    """Embedding of Q(zeta_d) into Q(zeta_n) and a left inverse of it.

    Returns (embedding columns as row-major matrix, pivot rows, inverse of
    the pivot submatrix).
    """
    step = n // d
    phi_n, phi_d = euler_phi(n), euler_phi(d)
    table = _power_table(n)
    emb = [[table[(step * j) % n][i] for j in range(phi_d)] for i in range(phi_n)]
    # choose phi_d independent rows by elimination on a Fraction copy
    work = [[Fraction(x) for x in row] for row in emb]
    pivots: list[int] = []
    basis: list[list[Fraction]] = []
    for i, row in enumerate(work):
        v = list(row)
        for b, pcol in basis:
            if v[pcol]:
                f = v[pcol] / b[pcol]
                v = [x - f * y for x, y in zip(v, b)]
        nz = next((k for k, x in enumerate(v) if x), None)
        if nz is not None:
            basis.append((v, nz))
            pivots.append(i)
            if len(pivots) == phi_d:
                break
    sub = [[Fraction(emb[i][j]) for j in range(phi_d)] for i in pivots]
    inv = _invert_square(sub)
    return emb, tuple(pivots), inv


def _invert_square(m: list[list[Fraction]]) -> list[list[Fraction]]:
    k = len(m)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(k)] for i, row in enumerate(m)]
    for col in range(k):
        piv = next(r for r in range(col, k) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(k):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[k:] for row in aug]


def _try_descend(n: int, d: int, coeffs: tuple) -> tuple | None:
    emb, pivots, inv = _descent_data(n, d)
    rhs = [coeffs[i] for i in pivots]
    y = [sum((a * b for a, b in zip(row, rhs)), Fraction(0)) for row in inv]
    for i, row in enumerate(emb):
        if sum((r * yj for r, yj in zip(row, y) if r), Fraction(0)) != coeffs[i]:
            return None
    return tuple(y)


@lru_cache(maxsize=200_000)
def _canonicalize(n: int, coeffs: tuple) -> tuple[int, tuple]:
    changed = True
    while changed and n > 1:
        changed = False
        for p in prime_factors(n):
            d = _field_conductor(n // p)
            y = _try_descend(n, d, coeffs)
            if y is not None:
                n, coeffs = d, y
                changed = True
                break
    return n, coeffs


# ---------------------------------------------------------------------------
# rational polynomial helpers for inversion

def _qpoly_trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _qpoly_divmod(a: list, b: list) -> tuple[list, list]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        c = a[-1] / lead
        shift = len(a) - len(b)
        q[shift] = c
        for j, bj in enumerate(b):
            a[shift + j] -= c * bj
        _qpoly_trim(a)
    return _qpoly_trim(q), a


def _qpoly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _qpoly_trim(out)


def _qpoly_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _qpoly_trim([Fraction(x) for x in out])


def _qpoly_inverse_mod(a: list, m: list) -> list:
    """Inverse of a modulo m over Q via the extended Euclidean algorithm."""
    r0, r1 = list(m), list(a)
    s0, s1 = [], [Fraction(1)]
    while r1:
        q, r = _qpoly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _qpoly_sub(s0, _qpoly_mul(q, s1))
    if len(r0) != 1:
        raise CyclotomicDivisionByZero("element is not invertible")
    c = r0[0]
    return [x / c for x in s0]


# ---------------------------------------------------------------------------

class CyclotomicNumber:
    """An element of Q(zeta_n), kept at minimal conductor.

    >>> z = root_of_unity(1, 4)
    >>> z * z
    CyclotomicNumber(-1)
    """

    __slots__ = ("conductor", "coefficients", "_hash")

    def __init__(self, conductor: int, coefficients=None):
        if conductor < 1:
            raise ValueError("conductor must be positive")
        phi = euler_phi(conductor)
        if coefficients is None:
            coefficients = [0] * phi
        coeffs = tuple(as_rational(c) for c in coefficients)
        if len(coeffs) != phi:
            raise ValueError(f"expected {phi} coefficients for conductor {conductor}")
        n, coeffs = _canonicalize(conductor, coeffs)
        object.__setattr__(self, "conductor", n)
        object.__setattr__(self, "coefficients", coeffs)
        object.__setattr__(self, "_hash", hash((n, coeffs)))

    def __setattr__(self, name, value):
        raise AttributeError("CyclotomicNumber is immutable")

    # constructors ---------------------------------------------------------

    @classmethod
    def from_exponents(cls, n: int, terms) -> "CyclotomicNumber":
        """Build ``sum coef * zeta_n^e`` from a mapping or pairs (e, coef)."""
        if hasattr(terms, "items"):
            terms = terms.items()
        return cls(n, _reduce_exponents(n, [(e, as_rational(c)) for e, c in terms]))

    @classmethod
    def rational(cls, value) -> "CyclotomicNumber":
        return cls(1, [as_rational(value)])

    # coercion -------------------------------------------------------------

    @staticmethod
    def coerce(value) -> "CyclotomicNumber":
        if isinstance(value, CyclotomicNumber):
            return value
        return CyclotomicNumber(1, [as_rational(value)])

    def embed(self, n: int) -> tuple:
        """Power-basis coordinates of this number inside Q(zeta_n)."""
        if n % self.conductor:
            raise ValueError(f"conductor {self.conductor} does not divide {n}")
        if n == self.conductor:
            return self.coefficients
        step = n // self.conductor
        return tuple(_reduce_exponents(n, [(step * i, c) for i, c in enumerate(self.coefficients)]))

    # predicates -----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.conductor == 1 and self.coefficients[0] == 0

    def is_rational(self) -> bool:
        return self.conductor == 1

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coefficients[0]

    def __bool__(self) -> bool:
        return not self.is_zero()

    # arithmetic -----------------------------------------------------------

    def _unify(self, other):
        n = lcm(self.conductor, other.conductor)
        return n, self.embed(n), other.embed(n)

    def __add__(self, other):
        try:
            other = CyclotomicNumber.coerce(other)
        except TypeError:
            return NotImplemented
        n, a, b = self._unify(other)
        return CyclotomicNumber(n, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.conductor, [-c for c in self.coefficients])

    def __sub__(self, other):
        try:
            other = CyclotomicNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = CyclotomicNumber.coerce(other)
        except TypeError:
            return NotImplemented
        if other.conductor == 1:
            c = other.coefficients[0]
            return CyclotomicNumber(self.conductor, [c * x for x in self.coefficients])
        if self.conductor == 1:
            c = self.coefficients[0]
            return CyclotomicNumber(other.conductor, [c * x for x in other.coefficients])
        n, a, b = self._unify(other)
        terms: dict[int, Fraction] = {}
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        k = (i + j) % n
                        terms[k] = terms.get(k, 0) + x * y
        return CyclotomicNumber(n, _reduce_exponents(n, terms.items()))

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        if self.is_zero():
            raise CyclotomicDivisionByZero("inverse of zero")
        n = self.conductor
        if n == 1:
            return CyclotomicNumber(1, [1 / self.coefficients[0]])
        a = _qpoly_trim(list(self.coefficients))
        m = [Fraction(c) for c in cyclotomic_polynomial(n)]
        inv = _qpoly_inverse_mod(a, m)
        _, rem = _qpoly_divmod(inv, m) if len(inv) >= len(m) else ([], inv)
        rem = list(rem) + [Fraction(0)] * (euler_phi(n) - len(rem))
        return CyclotomicNumber(n, rem)

    def __truediv__(self, other):
        try:
            other = CyclotomicNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return CyclotomicNumber.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CyclotomicNumber.rational(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # Galois action --------------------------------------------------------

    def galois(self, k: int) -> "CyclotomicNumber":
        """Apply the automorphism zeta -> zeta^k (k coprime to the conductor)."""
        n = self.conductor
        if gcd(k, n) != 1:
            raise ValueError(f"{k} is not a unit modulo {n}")
        return CyclotomicNumber.from_exponents(n, [(i * k, c) for i, c in enumerate(self.coefficients)])

    def conjugate(self) -> "CyclotomicNumber":
        return self.galois(-1)

    # comparison / hashing -------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, CyclotomicNumber):
            return self.conductor == other.conductor and self.coefficients == other.coefficients
        try:
            other = CyclotomicNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return self == other

    def __hash__(self):
        return self._hash

    # rendering ------------------------------------------------------------

    def __complex__(self) -> complex:
        n = self.conductor
        return sum(
            (float(c) * cmath.exp(2j * cmath.pi * i / n) for i, c in enumerate(self.coefficients)),
            0j,
        )

    def __repr__(self) -> str:
        if self.conductor == 1:
            return f"CyclotomicNumber({format_rational(self.coefficients[0])})"
        return f"CyclotomicNumber({self.conductor}, {[format_rational(c) for c in self.coefficients]})"

    def __str__(self) -> str:
        n = self.conductor
        if n == 1:
            return format_rational(self.coefficients[0])
        parts = []
        for i, c in enumerate(self.coefficients):
            if not c:
                continue
            mono = "" if i == 0 else (f"ζ{n}" if i == 1 else f"ζ{n}^{i}")
            if not mono:
                term = format_rational(abs(c))
            elif abs(c) == 1:
                term = mono
            else:
                term = f"{format_rational(abs(c))}*{mono}"
            parts.append(("-" if c < 0 else "+", term))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, term in parts[1:]:
            text += f" {sign} {term}"
        return text

    # serialization ----------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "conductor": self.conductor,
            "coefficients": [format_rational(c) for c in self.coefficients],
        }

    @classmethod
    def from_dict(cls, data) -> "CyclotomicNumber":
        if isinstance(data, (int, str)):
            return cls.rational(parse_rational(str(data)))
        return cls(int(data["conductor"]), [parse_rational(str(c)) for c in data["coefficients"]])


def root_of_unity(a: int, m: int) -> CyclotomicNumber:
    """zeta_m^a, stored at its minimal conductor m / gcd(a, m)."""
    if m < 1:
        raise ValueError("m must be positive")
    a %= m
    g = gcd(a, m)
    return CyclotomicNumber.from_exponents(m // g, [(a // g, 1)])


def root_of_unity_frac(q: Fraction) -> CyclotomicNumber:
    """exp(2 pi i q) for a rational rotation number q."""
    q = Fraction(q)
    return root_of_unity(q.numerator, q.denominator)


def cyc_add(a, b) -> CyclotomicNumber:
    return CyclotomicNumber.coerce(a) + b


def cyc_mul(a, b) -> CyclotomicNumber:
    return CyclotomicNumber.coerce(a) * b


def cyc_inv(a) -> CyclotomicNumber:
    return CyclotomicNumber.coerce(a).inverse()
