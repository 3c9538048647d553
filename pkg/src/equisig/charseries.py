"""Truncated multivariate power series with cyclotomic coefficients.

Every variable stands for a degree-2 cohomology class (a Chern root), and a
series of truncation order D keeps monomials of cohomological degree <= D,
i.e. polynomial degree <= D // 2.  Rotation angles never appear as real
numbers: an angle theta = 2 pi a/m enters only through zeta = zeta_m^a.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping, Sequence

from .exactnum import CyclotomicNumber, format_rational, parse_rational, root_of_unity

Monomial = tuple[int, ...]
ZERO = CyclotomicNumber.rational(0)
ONE = CyclotomicNumber.rational(1)


class NotInvertibleSeries(ZeroDivisionError):
    """The constant term of a series to be inverted is zero."""


def _coerce(x) -> CyclotomicNumber:
    return CyclotomicNumber.coerce(x)


class TruncatedSeries:
    __slots__ = ("variables", "order", "_terms")

    def __init__(self, variables: Sequence[str], order: int, terms: Mapping[Monomial, object] | None = None):
        if order < 0:
            raise ValueError("truncation order must be non-negative")
        variables = tuple(variables)
        cap = order // 2
        clean: dict[Monomial, CyclotomicNumber] = {}
        for mono, c in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != len(variables):
                raise ValueError(f"monomial {mono} does not match variables {variables}")
            if sum(mono) > cap:
                continue
            c = _coerce(c)
            if c:
                clean[mono] = clean.get(mono, ZERO) + c
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "_terms", {m: c for m, c in clean.items() if c})

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    # constructors ---------------------------------------------------------

    @classmethod
    def constant(cls, variables, order, c) -> "TruncatedSeries":
        return cls(variables, order, {(0,) * len(tuple(variables)): c})

    @classmethod
    def linear(cls, variables, order, coeffs: Sequence) -> "TruncatedSeries":
        variables = tuple(variables)
        if len(coeffs) != len(variables):
            raise ValueError("linear form has the wrong length")
        terms = {}
        for i, c in enumerate(coeffs):
            mono = tuple(int(i == j) for j in range(len(variables)))
            terms[mono] = c
        return cls(variables, order, terms)

    def _like(self, terms) -> "TruncatedSeries":
        return TruncatedSeries(self.variables, self.order, terms)

    # access ---------------------------------------------------------------

    def coefficient(self, mono: Sequence[int]) -> CyclotomicNumber:
        return self._terms.get(tuple(mono), ZERO)

    def items(self):
        return sorted(self._terms.items())

    @property
    def constant_term(self) -> CyclotomicNumber:
        return self.coefficient((0,) * len(self.variables))

    def homogeneous_part(self, degree: int) -> "TruncatedSeries":
        """Part of polynomial degree ``degree`` (cohomological degree 2*degree)."""
        return self._like({m: c for m, c in self._terms.items() if sum(m) == degree})

    def is_zero(self) -> bool:
        return not self._terms

    # arithmetic -----------------------------------------------------------

    def _check(self, other) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries.constant(self.variables, self.order, other)
        if other.variables != self.variables:
            raise ValueError(f"variable mismatch: {self.variables} vs {other.variables}")
        if other.order != self.order:
            order = min(self.order, other.order)
            return TruncatedSeries(other.variables, order, other._terms)
        return other

    def __add__(self, other):
        other = self._check(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, ZERO) + c
        return TruncatedSeries(self.variables, min(self.order, other.order), out)

    __radd__ = __add__

    def __neg__(self):
        return self._like({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            c = _coerce(other)
            return self._like({m: c * x for m, x in self._terms.items()})
        other = self._check(other)
        order = min(self.order, other.order)
        cap = order // 2
        out: dict[Monomial, CyclotomicNumber] = {}
        for m1, c1 in self._terms.items():
            d1 = sum(m1)
            for m2, c2 in other._terms.items():
                if d1 + sum(m2) > cap:
                    continue
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, ZERO) + c1 * c2
        return TruncatedSeries(self.variables, order, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = TruncatedSeries.constant(self.variables, self.order, 1)
        for _ in range(k):
            result = result * self
        return result

    def inverse(self) -> "TruncatedSeries":
        """Solve a * b = 1 one polynomial degree at a time."""
        c0 = self.constant_term
        if not c0:
            raise NotInvertibleSeries("constant term is zero")
        inv0 = c0.inverse()
        parts = [self.homogeneous_part(k) for k in range(self.order // 2 + 1)]
        result = [TruncatedSeries.constant(self.variables, self.order, inv0)]
        for k in range(1, self.order // 2 + 1):
            acc = TruncatedSeries(self.variables, self.order)
            for j in range(1, k + 1):
                acc = acc + parts[j] * result[k - j]
            result.append(acc * (-inv0))
        total = TruncatedSeries(self.variables, self.order)
        for r in result:
            total = total + r
        return total

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return self * other.inverse()
        return self * _coerce(other).inverse()

    def substitute_scale(self, factor) -> "TruncatedSeries":
        """Replace every variable x by factor * x."""
        f = _coerce(factor)
        return self._like({m: c * f ** sum(m) for m, c in self._terms.items()})

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.variables == other.variables and self.order == other.order and self._terms == other._terms

    __hash__ = None

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m, c in self.items():
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(self.variables, m) if e
            )
            coef = str(c)
            if not mono:
                parts.append(coef)
            elif coef == "1":
                parts.append(mono)
            else:
                parts.append(f"({coef})*{mono}")
        return " + ".join(parts)

    __repr__ = __str__

    def to_dict(self) -> dict:
        return {
            "variables": list(self.variables),
            "truncation": self.order,
            "terms": [
                {"monomial": list(m), "coefficient": c.to_dict()} for m, c in self.items()
            ],
        }

    @classmethod
    def from_dict(cls, data) -> "TruncatedSeries":
        terms = {
            tuple(t["monomial"]): CyclotomicNumber.from_dict(t["coefficient"]) for t in data["terms"]
        }
        return cls(data["variables"], int(data["truncation"]), terms)


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a + b


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def series_invert(a: TruncatedSeries) -> TruncatedSeries:
    return a.inverse()


# ---------------------------------------------------------------------------
# linear forms and the standard factors

@dataclass(frozen=True)
class LinearForm:
    """sum_i c_i x_i with cyclotomic coefficients."""

    coefficients: tuple[CyclotomicNumber, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(_coerce(c) for c in self.coefficients))

    @classmethod
    def of(cls, coeffs: Iterable) -> "LinearForm":
        return cls(tuple(coeffs))

    def __neg__(self):
        return LinearForm(tuple(-c for c in self.coefficients))

    def __add__(self, other: "LinearForm"):
        return LinearForm(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def scaled(self, k) -> "LinearForm":
        k = _coerce(k)
        return LinearForm(tuple(k * c for c in self.coefficients))

    def series(self, variables, order) -> TruncatedSeries:
        return TruncatedSeries.linear(variables, order, self.coefficients)

    def to_list(self) -> list:
        out = []
        for c in self.coefficients:
            out.append(format_rational(c.to_fraction()) if c.is_rational() else c.to_dict())
        return out

    @classmethod
    def from_list(cls, data) -> "LinearForm":
        return cls(tuple(_parse_coefficient(c) for c in data))


def _parse_coefficient(c) -> CyclotomicNumber:
    if isinstance(c, dict):
        return CyclotomicNumber.from_dict(c)
    if isinstance(c, (int, Fraction)):
        return CyclotomicNumber.rational(c)
    return CyclotomicNumber.rational(parse_rational(str(c)))


def _as_series(ell, variables, order) -> TruncatedSeries:
    if isinstance(ell, TruncatedSeries):
        if ell.constant_term:
            raise ValueError("linear form must have zero constant term")
        return ell
    if not isinstance(ell, LinearForm):
        ell = LinearForm.of(ell)
    return ell.series(variables, order)


def exp_series(s: TruncatedSeries) -> TruncatedSeries:
    """exp(s) for s without constant term: sum s^k / k!."""
    if s.constant_term:
        raise ValueError("exp_series needs zero constant term")
    result = TruncatedSeries.constant(s.variables, s.order, 1)
    power = TruncatedSeries.constant(s.variables, s.order, 1)
    for k in range(1, s.order // 2 + 1):
        power = power * s
        result = result + power * Fraction(1, factorial(k))
    return result


def exp_linear(ell, variables: Sequence[str], order: int) -> TruncatedSeries:
    return exp_series(_as_series(ell, variables, order))


def angle_factor(zeta, ell, variables: Sequence[str], order: int) -> TruncatedSeries:
    """(1 + zeta e^ell) / (1 - zeta e^ell), defined for zeta != 1."""
    zeta = _coerce(zeta)
    if zeta == ONE:
        raise ValueError("angle factor needs zeta != 1: the trivial representation must not occur")
    e = exp_linear(ell, variables, order) * zeta
    return (1 + e) * (1 - e).inverse()


def _bernoulli_tanh_coefficients(n_terms: int) -> list[Fraction]:
    """Coefficients c_k of x / tanh(x) = sum c_k x^(2k)."""
    # x/tanh(x) = x cosh(x) / sinh(x); divide the even series x*cosh by x*sinh/x
    cosh = [Fraction(1, factorial(2 * k)) for k in range(n_terms)]
    sinh_over_x = [Fraction(1, factorial(2 * k + 1)) for k in range(n_terms)]
    out: list[Fraction] = []
    for k in range(n_terms):
        acc = cosh[k] - sum((sinh_over_x[j] * out[k - j] for j in range(1, k + 1)), Fraction(0))
        out.append(acc / sinh_over_x[0])
    return out


def l_class_factor(ell, variables: Sequence[str], order: int) -> TruncatedSeries:
    """ell / tanh(ell), an even series with rational coefficients."""
    s = _as_series(ell, variables, order)
    coeffs = _bernoulli_tanh_coefficients(order // 4 + 1)
    result = TruncatedSeries.constant(s.variables, s.order, 1)
    sq = s * s
    power = TruncatedSeries.constant(s.variables, s.order, 1)
    for k in range(1, len(coeffs)):
        power = power * sq
        result = result + power * coeffs[k]
    return result


def l_class(roots: Iterable, variables: Sequence[str], order: int) -> TruncatedSeries:
    result = TruncatedSeries.constant(variables, order, 1)
    for ell in roots:
        result = result * l_class_factor(ell, variables, order)
    return result


@dataclass(frozen=True)
class CothCheck:
    numerator: int
    denominator: int
    order: int
    holds: bool
    sign: int

    def to_dict(self) -> dict:
        return {"rotation": f"{self.numerator}/{self.denominator}", "truncation": self.order,
                "holds": self.holds, "sign": self.sign}


def coth_half_angle(a: int, m: int, order: int, variables=("x",)) -> TruncatedSeries:
    """coth((x + i theta)/2) for theta = 2 pi a/m, in the variable x.

    With u = (x + i theta)/2 we have e^u = zeta_{2m}^a e^(x/2).
    """
    half = root_of_unity(a, 2 * m)
    ex = exp_linear([Fraction(1, 2)] + [0] * (len(variables) - 1), variables, order)
    emx = exp_linear([Fraction(-1, 2)] + [0] * (len(variables) - 1), variables, order)
    eu = ex * half
    emu = emx * half.inverse()
    return (eu + emu) * (eu - emu).inverse()


def coth_identity_check(a: int, m: int, order: int) -> CothCheck:
    """Compare coth((x + i theta)/2) with +-(1 + zeta e^x)/(1 - zeta e^x).

    Returns whether one of the two signs matches exactly, and which.
    """
    if not 0 < a < m:
        raise ValueError("rotation number a/m must lie strictly between 0 and 1")
    variables = ("x",)
    coth = coth_half_angle(a, m, order, variables)
    af = angle_factor(root_of_unity(a, m), [1], variables, order)
    # test -1 first: where both sides vanish identically the sign is moot
    if coth == -af:
        return CothCheck(a, m, order, True, -1)
    if coth == af:
        return CothCheck(a, m, order, True, 1)
    return CothCheck(a, m, order, False, 0)


# ---------------------------------------------------------------------------
# integration against a fundamental class

@dataclass(frozen=True)
class IntersectionFunctional:
    """Values of the top-degree monomials on the fundamental class.

    Top monomials missing from ``values`` integrate to zero.
    """

    variables: tuple[str, ...]
    dimension: int
    values: tuple[tuple[Monomial, Fraction], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if self.dimension % 2:
            raise ValueError("intersection functionals live in even dimension")
        top = self.dimension // 2
        vals = []
        for m, v in (self.values.items() if isinstance(self.values, dict) else self.values):
            m = tuple(int(e) for e in m)
            if len(m) != len(self.variables) or sum(m) != top:
                raise ValueError(f"monomial {m} is not of top degree {self.dimension}")
            vals.append((m, Fraction(v)))
        object.__setattr__(self, "values", tuple(sorted(vals)))

    @classmethod
    def point(cls) -> "IntersectionFunctional":
        return cls((), 0, {(): Fraction(1)})

    def value(self, mono: Monomial) -> Fraction:
        return dict(self.values).get(tuple(mono), Fraction(0))

    def to_dict(self) -> dict:
        return {",".join(map(str, m)): format_rational(v) for m, v in self.values}

    @classmethod
    def from_dict(cls, variables, dimension, data) -> "IntersectionFunctional":
        vals = {}
        for key, v in data.items():
            mono = tuple(int(x) for x in str(key).split(",") if x.strip() != "")
            vals[mono] = parse_rational(str(v))
        return cls(tuple(variables), dimension, vals)


def integrate(s: TruncatedSeries, f: IntersectionFunctional) -> CyclotomicNumber:
    if s.variables != f.variables:
        raise ValueError("series and functional use different variables")
    if s.order < f.dimension:
        raise ValueError(f"truncation {s.order} below the top degree {f.dimension}")
    total = ZERO
    for mono, v in f.values:
        c = s.coefficient(mono)
        if c and v:
            total = total + c * v
    return total
