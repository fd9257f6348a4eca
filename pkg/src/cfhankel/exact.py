"""Exact scalars and truncated power series.

Scalars come in three exact forms:

* ``fractions.Fraction`` for plain rational values,
* :class:`ParamPoly` for univariate polynomials in one formal parameter
  (printed as ``gamma``) with rational coefficients,
* :class:`PolyFrac` for reduced quotients of two such polynomials, used
  where a construction needs a symbolic reciprocal without leaving exact
  arithmetic.

A :class:`Series` couples a coefficient vector with the truncation order
through which those coefficients are trusted.  Every operation propagates
the trusted order pessimistically: a result never claims coefficients the
operands did not supply.  All values are immutable, so everything here is
safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union


class DomainError(Exception):
    """Base class for arithmetic contract violations in this package."""


class ZeroConstantTerm(DomainError):
    """Reciprocal requested for a series whose constant term is zero."""


class NonInvertibleScalar(DomainError):
    """Inversion would leave the polynomial ring (non-constant scalar)."""


class InexactDivision(DomainError):
    """A division that must be exact left a remainder: a ring-arithmetic bug."""


# ---------------------------------------------------------------------------
# gamma-polynomials


def _coerce_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot use {value!r} as a rational coefficient")


@dataclass(frozen=True)
class ParamPoly:
    """Dense polynomial in the formal parameter ``gamma`` over the rationals.

    Trailing zero coefficients are stripped; the zero polynomial stores an
    empty tuple.
    """

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable = ()):
        cs = [_coerce_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # degree of the zero polynomial is -1 by convention
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def constant(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def evaluate(self, value) -> Fraction:
        """Value of the polynomial at a rational point (Horner)."""
        x = _coerce_fraction(value)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ParamPoly((other,))
        if not isinstance(other, ParamPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return ParamPoly(self.coeff(k) + other.coeff(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return ParamPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ParamPoly((other,))
        if not isinstance(other, ParamPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ParamPoly(c * other for c in self.coeffs)
        if not isinstance(other, ParamPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return ParamPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return ParamPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("ParamPoly power requires a non-negative integer")
        acc = ParamPoly((1,))
        base = self
        e = exponent
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def div_rem(self, other: "ParamPoly") -> tuple["ParamPoly", "ParamPoly"]:
        """Quotient and remainder of dense polynomial division."""
        if not isinstance(other, ParamPoly) or other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quo = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        d = other.degree
        lead = other.coeffs[-1]
        for k in range(len(rem) - 1, d - 1, -1):
            c = rem[k] / lead
            if c == 0:
                continue
            quo[k - d] = c
            for j, b in enumerate(other.coeffs):
                rem[k - d + j] -= c * b
        return ParamPoly(quo), ParamPoly(rem)

    def exact_div(self, other: "ParamPoly") -> "ParamPoly":
        quo, rem = self.div_rem(other)
        if not rem.is_zero:
            raise InexactDivision(f"{self} is not divisible by {other}")
        return quo

    def __eq__(self, other):
        if isinstance(other, ParamPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return self.is_zero
            return self.degree == 0 and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self.degree <= 0:
            return hash(self.constant)
        return hash(self.coeffs)

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeff(k)
            if c == 0:
                continue
            if k == 0:
                term = str(c)
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                var = "gamma" if k == 1 else f"gamma^{k}"
                term = f"{mag}{var}"
                if c < 0:
                    term = "-" + term
            if parts and not term.startswith("-"):
                parts.append("+ " + term)
            elif parts:
                parts.append("- " + term[1:])
            else:
                parts.append(term)
        return " ".join(parts)

    def __repr__(self):
        return f"ParamPoly({self.coeffs!r})"


#: the formal parameter itself
GAMMA = ParamPoly((0, 1))

_ONE_POLY = ParamPoly((1,))


def param_gcd(a: ParamPoly, b: ParamPoly) -> ParamPoly:
    """Monic greatest common divisor by the Euclidean algorithm."""
    while not b.is_zero:
        a, b = b, a.div_rem(b)[1]
    if a.is_zero:
        return a
    return a * (Fraction(1) / a.coeffs[-1])


@dataclass(frozen=True)
class PolyFrac:
    """Reduced quotient of two gamma-polynomials; denominator kept monic."""

    num: ParamPoly
    den: ParamPoly

    def __init__(self, num, den=_ONE_POLY):
        num = num if isinstance(num, ParamPoly) else ParamPoly((num,))
        den = den if isinstance(den, ParamPoly) else ParamPoly((den,))
        if den.is_zero:
            raise ZeroDivisionError("zero denominator in polynomial quotient")
        if num.is_zero:
            num, den = ParamPoly(), _ONE_POLY
        else:
            g = param_gcd(num, den)
            if g.degree > 0:
                num, den = num.exact_div(g), den.exact_div(g)
            scale = Fraction(1) / den.coeffs[-1]
            num, den = num * scale, den * scale
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, ParamPoly)):
            other = PolyFrac(other)
        if not isinstance(other, PolyFrac):
            return NotImplemented
        return PolyFrac(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __neg__(self):
        return PolyFrac(-self.num, self.den)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, ParamPoly)):
            other = PolyFrac(other)
        if not isinstance(other, PolyFrac):
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by zero polynomial quotient")
        return PolyFrac(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction, ParamPoly)):
            return PolyFrac(other) / self
        return NotImplemented

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            raise ValueError("PolyFrac power requires an integer")
        if exponent < 0:
            if self.is_zero:
                raise ZeroDivisionError("negative power of zero")
            return PolyFrac(self.den ** (-exponent), self.num ** (-exponent))
        return PolyFrac(self.num**exponent, self.den**exponent)

    def evaluate(self, value) -> Fraction:
        return self.num.evaluate(value) / self.den.evaluate(value)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, ParamPoly)):
            other = PolyFrac(other)
        if not isinstance(other, PolyFrac):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self.den == _ONE_POLY:
            return hash(self.num)
        return hash((self.num.coeffs, self.den.coeffs))

    def __str__(self):
        if self.den == _ONE_POLY:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"PolyFrac({self.num!r}, {self.den!r})"


Scalar = Union[Fraction, ParamPoly, PolyFrac]


def as_scalar(value) -> Scalar:
    """Coerce ints and strings to Fraction; pass exact scalars through."""
    if isinstance(value, (Fraction, ParamPoly, PolyFrac)):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"{value!r} is not an exact scalar")


def is_zero_scalar(value: Scalar) -> bool:
    if isinstance(value, Fraction):
        return value == 0
    return value.is_zero


def simplify_scalar(value: Scalar) -> Scalar:
    """Collapse a scalar to its simplest exact representation."""
    if isinstance(value, PolyFrac):
        if value.den == _ONE_POLY:
            value = value.num
        else:
            return value
    if isinstance(value, ParamPoly):
        if value.degree <= 0:
            return value.constant
        return value
    return as_scalar(value)


def invert_scalar(value: Scalar) -> Scalar:
    """Exact multiplicative inverse; polynomials invert into PolyFrac."""
    value = as_scalar(value)
    if is_zero_scalar(value):
        raise ZeroDivisionError("inverse of zero")
    if isinstance(value, Fraction):
        return Fraction(1) / value
    if isinstance(value, ParamPoly):
        if value.degree == 0:
            return Fraction(1) / value.constant
        return PolyFrac(_ONE_POLY, value)
    return PolyFrac(value.den, value.num)


def scalar_pow(base: Scalar, exponent: int) -> Scalar:
    """base**exponent for any integer exponent, staying exact."""
    base = as_scalar(base)
    if exponent >= 0:
        return base**exponent
    if isinstance(base, Fraction):
        return base**exponent
    return invert_scalar(base) ** (-exponent) if isinstance(base, ParamPoly) else base**exponent


def scalar_eval_gamma(value: Scalar, point) -> Fraction:
    """Evaluate a scalar at gamma = point (rationals are constants)."""
    value = as_scalar(value)
    if isinstance(value, Fraction):
        return value
    return value.evaluate(point)


# ---------------------------------------------------------------------------
# polynomials in x (no truncation), used for approximants and rational g.f.s


@dataclass(frozen=True)
class Poly:
    """Dense polynomial in x over exact scalars; trailing zeros stripped."""

    coeffs: tuple[Scalar, ...]

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_scalar(c) for c in coeffs]
        while cs and is_zero_scalar(cs[-1]):
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Scalar:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.coeff(k) + other.coeff(k) for k in range(n))

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if is_zero_scalar(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    def scale(self, factor: Scalar) -> "Poly":
        return Poly(c * factor for c in self.coeffs)

    def shift(self, k: int) -> "Poly":
        """Multiply by x**k."""
        if self.is_zero:
            return self
        return Poly((Fraction(0),) * k + self.coeffs)

    def to_series(self, order: int) -> "Series":
        return series(self.coeffs, order)

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if is_zero_scalar(c):
                continue
            parts.append(f"({c})*x^{k}" if k else f"({c})")
        return " + ".join(parts)


def poly(values: Iterable) -> Poly:
    return Poly(values)


def monomial(coefficient, k: int) -> Poly:
    return Poly((Fraction(0),) * k + (as_scalar(coefficient),))


# ---------------------------------------------------------------------------
# truncated power series


@dataclass(frozen=True)
class Series:
    """Coefficients trusted for x^0 .. x^order; len(coeffs) == order + 1."""

    coeffs: tuple[Scalar, ...]
    order: int

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("series order must be non-negative")
        if len(self.coeffs) != self.order + 1:
            raise ValueError(
                f"series stores {len(self.coeffs)} coefficients but claims order {self.order}"
            )

    def coeff(self, k: int) -> Scalar:
        return self.coeffs[k]

    def __str__(self):
        return f"series[{', '.join(str(c) for c in self.coeffs)}; order {self.order}]"


def series(values: Iterable, order: int | None = None) -> Series:
    """Build a Series, coercing values and zero-padding up to ``order``."""
    cs = [as_scalar(v) for v in values]
    if order is None:
        if not cs:
            raise ValueError("cannot infer the order of an empty series")
        order = len(cs) - 1
    if len(cs) < order + 1:
        cs.extend(Fraction(0) for _ in range(order + 1 - len(cs)))
    return Series(tuple(cs[: order + 1]), order)


def series_one(order: int) -> Series:
    return series([Fraction(1)], order)


def series_zero(order: int) -> Series:
    return series([], order) if order < 0 else series([Fraction(0)], order)


def series_add(f: Series, g: Series) -> Series:
    n = min(f.order, g.order)
    return Series(tuple(f.coeffs[k] + g.coeffs[k] for k in range(n + 1)), n)


def series_sub(f: Series, g: Series) -> Series:
    n = min(f.order, g.order)
    return Series(tuple(f.coeffs[k] - g.coeffs[k] for k in range(n + 1)), n)


def series_neg(f: Series) -> Series:
    return Series(tuple(-c for c in f.coeffs), f.order)


def series_scale(f: Series, factor: Scalar) -> Series:
    factor = as_scalar(factor)
    return Series(tuple(c * factor for c in f.coeffs), f.order)


def series_mul(f: Series, g: Series) -> Series:
    """Truncated product; the result order is the smaller operand order."""
    n = min(f.order, g.order)
    out = [Fraction(0)] * (n + 1)
    for i in range(n + 1):
        a = f.coeffs[i]
        if is_zero_scalar(a):
            continue
        for j in range(n + 1 - i):
            b = g.coeffs[j]
            if is_zero_scalar(b):
                continue
            out[i + j] = out[i + j] + a * b
    return Series(tuple(out), n)


def series_valuation(f: Series) -> int | None:
    """Index of the first nonzero stored coefficient.

    Returns None ("zero so far") when every stored coefficient vanishes,
    which deliberately does not distinguish the zero series from a series
    whose first nonzero term lies beyond the trusted order.
    """
    for k, c in enumerate(f.coeffs):
        if not is_zero_scalar(c):
            return k
    return None


def _invert_constant(c0: Scalar) -> Scalar:
    if is_zero_scalar(c0):
        raise ZeroConstantTerm("series has no reciprocal: constant term is zero")
    if isinstance(c0, Fraction):
        return Fraction(1) / c0
    if isinstance(c0, ParamPoly) and c0.degree == 0:
        return Fraction(1) / c0.constant
    raise NonInvertibleScalar(
        f"constant term {c0} has no inverse inside the polynomial ring"
    )


def series_reciprocal(f: Series) -> Series:
    """Multiplicative inverse, exact through the operand's trusted order."""
    inv0 = _invert_constant(f.coeffs[0])
    out: list[Scalar] = [as_scalar(inv0)]
    for k in range(1, f.order + 1):
        acc: Scalar = Fraction(0)
        for j in range(1, k + 1):
            c = f.coeffs[j]
            if is_zero_scalar(c):
                continue
            acc = acc + c * out[k - j]
        out.append(-(inv0 * acc))
    return Series(tuple(out), f.order)


def series_shift_down(f: Series, k: int) -> Series:
    """Divide by x**k, dropping the first k coefficients (assumed zero)."""
    if k > f.order:
        raise ValueError("shift below the trusted window")
    return Series(f.coeffs[k:], f.order - k)


def series_eval_gamma(f: Series, point) -> Series:
    return Series(tuple(scalar_eval_gamma(c, point) for c in f.coeffs), f.order)


# ---------------------------------------------------------------------------
# wire formats: rationals as "p/q" strings, polynomials as coefficient lists


def scalar_to_json(value: Scalar):
    value = simplify_scalar(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, ParamPoly):
        return {"coeffs": [str(c) for c in value.coeffs]}
    raise ValueError(f"{value} has no wire format (unreduced quotient)")


def scalar_from_json(obj) -> Scalar:
    if isinstance(obj, str):
        return Fraction(obj)
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, dict) and set(obj) == {"coeffs"}:
        return simplify_scalar(ParamPoly(Fraction(c) for c in obj["coeffs"]))
    raise ValueError(f"not a scalar encoding: {obj!r}")


def series_to_json(f: Series) -> dict:
    return {"coeffs": [scalar_to_json(c) for c in f.coeffs], "order": f.order}


def series_from_json(obj) -> Series:
    if not isinstance(obj, dict) or "coeffs" not in obj:
        raise ValueError("series encoding must be an object with 'coeffs'")
    coeffs = [scalar_from_json(c) for c in obj["coeffs"]]
    order = obj.get("order", len(coeffs) - 1)
    if not isinstance(order, int):
        raise ValueError("series order must be an integer")
    if len(coeffs) != order + 1:
        raise ValueError("series coefficient count does not match its order")
    return Series(tuple(coeffs), order)
