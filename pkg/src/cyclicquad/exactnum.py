"""Exact scalar arithmetic: arbitrary-precision rationals extended with
single quadratic surds, plus a configurable-precision decimal approximation
for the cases where surd arithmetic is not closed.

A value is either a ``fractions.Fraction`` (exact rational) or a ``Surd``,
``coefficient * sqrt(radicand)`` with a squarefree radicand.  Sums of surds
over distinct radicands are not representable; they raise
``IncompatibleRadicands`` and the caller decides whether to fall back to
``ApproxScalar``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Union

ScalarLike = Union[int, Fraction, "Surd"]


class ExactnessError(ArithmeticError):
    """Base for failures of the exact-arithmetic substrate."""


class IncompatibleRadicands(ExactnessError):
    """Sum of surds over distinct radicands has no single-surd form."""


class NegativeRadicand(ValueError):
    """Square roots of negative quantities are not supported."""


def square_free_split(n: int) -> tuple[int, int]:
    """Split n >= 1 as outer**2 * core with core squarefree.

    Trial division up to the cube root; the remainder then has at most two
    prime factors, so it is squarefree unless it is a perfect square.
    """
    if n < 1:
        raise ValueError("square_free_split requires n >= 1")
    outer = 1
    core = 1
    d = 2
    while d * d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            outer *= d ** (e // 2)
            if e % 2:
                core *= d
        d += 1 if d == 2 else 2
    r = isqrt(n)
    if r * r == n:
        outer *= r
    else:
        core *= n
    return outer, core


class Surd:
    """An exact value coefficient * sqrt(radicand), radicand squarefree.

    radicand == 1 iff the value is rational.  Immutable; all arithmetic
    returns new instances.  Mixed arithmetic with int and Fraction coerces
    the rational operand to a radicand-1 Surd.
    """

    __slots__ = ("coefficient", "radicand")

    coefficient: Fraction
    radicand: int

    def __init__(self, coefficient: Union[int, Fraction] = 1, radicand: int = 1):
        if radicand != int(radicand):
            raise TypeError("radicand must be an integer")
        radicand = int(radicand)
        if radicand < 0:
            raise NegativeRadicand(f"negative radicand {radicand}")
        coefficient = Fraction(coefficient)
        if coefficient == 0 or radicand == 0:
            coefficient, radicand = Fraction(0), 1
        elif radicand > 1:
            outer, core = square_free_split(radicand)
            coefficient *= outer
            radicand = core
        object.__setattr__(self, "coefficient", coefficient)
        object.__setattr__(self, "radicand", radicand)

    def __setattr__(self, name, value):
        raise AttributeError("Surd is immutable")

    # -- classification ----------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.radicand == 1

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise IncompatibleRadicands(
                f"sqrt({self.radicand}) is irrational; no rational form"
            )
        return self.coefficient

    @staticmethod
    def sqrt(value: ScalarLike) -> "Surd":
        """Exact square root of a nonnegative rational, as a Surd."""
        x = to_exact(value)
        if isinstance(x, Surd):
            x = x.as_fraction()
        if x < 0:
            raise NegativeRadicand(f"sqrt of negative value {x}")
        # sqrt(p/q) = sqrt(p*q)/q
        return Surd(Fraction(1, x.denominator), x.numerator * x.denominator)

    # -- arithmetic --------------------------------------------------------

    def __neg__(self) -> "Surd":
        return Surd(-self.coefficient, self.radicand)

    def __abs__(self) -> "Surd":
        return Surd(abs(self.coefficient), self.radicand)

    def __add__(self, other) -> "Surd":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.coefficient == 0:
            return other
        if other.coefficient == 0:
            return self
        if self.radicand != other.radicand:
            raise IncompatibleRadicands(
                f"cannot add sqrt({self.radicand}) and sqrt({other.radicand}) terms"
            )
        return Surd(self.coefficient + other.coefficient, self.radicand)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Surd":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Surd(
            self.coefficient * other.coefficient, self.radicand * other.radicand
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Surd":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.coefficient == 0:
            raise ZeroDivisionError("division by zero Surd")
        # sqrt(r1)/sqrt(r2) = sqrt(r1*r2)/r2
        return Surd(
            self.coefficient / (other.coefficient * other.radicand),
            self.radicand * other.radicand,
        )

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int) -> "Surd":
        if exponent != int(exponent) or exponent < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = Surd(1)
        base = self
        for _ in range(int(exponent)):
            result = result * base
        return result

    # -- exact comparison --------------------------------------------------

    def _sign(self) -> int:
        c = self.coefficient
        return (c > 0) - (c < 0)

    def _cmp(self, other) -> int:
        other = _coerce(other)
        if other is NotImplemented:
            raise TypeError(f"cannot compare Surd with {type(other).__name__}")
        s1, s2 = self._sign(), other._sign()
        if s1 != s2:
            return 1 if s1 > s2 else -1
        if s1 == 0:
            return 0
        # same nonzero sign: compare squares, which are rational
        sq1 = self.coefficient**2 * self.radicand
        sq2 = other.coefficient**2 * other.radicand
        if sq1 == sq2:
            return 0
        return s1 if sq1 > sq2 else -s1

    def __eq__(self, other):
        try:
            return self._cmp(other) == 0
        except TypeError:
            return NotImplemented

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __hash__(self):
        if self.is_rational:
            return hash(self.coefficient)
        return hash((self.coefficient, self.radicand))

    def __bool__(self):
        return self.coefficient != 0

    def __repr__(self):
        if self.is_rational:
            return f"Surd({self.coefficient!r})"
        return f"Surd({self.coefficient!r}, {self.radicand})"

    def __str__(self):
        if self.is_rational:
            return str(self.coefficient)
        if self.coefficient == 1:
            return f"sqrt({self.radicand})"
        return f"{self.coefficient}*sqrt({self.radicand})"

    # -- approximation -----------------------------------------------------

    def approx(self, digits: int = 50) -> "ApproxScalar":
        if digits < 1:
            raise ValueError("digits must be >= 1")
        if self.is_rational:
            return ApproxScalar(self.coefficient, digits)
        root = sqrt_fraction(Fraction(self.radicand), digits + _GUARD_DIGITS)
        return ApproxScalar(self.coefficient * root, digits)


def _coerce(value) -> Union[Surd, type(NotImplemented)]:
    if isinstance(value, Surd):
        return value
    if isinstance(value, (int, Fraction)):
        return Surd(value)
    return NotImplemented


def to_exact(value: ScalarLike) -> Union[Fraction, Surd]:
    """Normalize a scalar-like input: rationals become Fraction, Surds with
    radicand 1 collapse to Fraction, other Surds pass through."""
    if isinstance(value, Surd):
        return value.coefficient if value.is_rational else value
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    raise TypeError(f"not an exact scalar: {value!r}")


def normalize_surd(coefficient: Union[int, Fraction], radicand: int) -> Surd:
    """Construct a Surd, extracting all square factors of the radicand."""
    return Surd(coefficient, radicand)


def surd_mul(a: Surd, b: Surd) -> Surd:
    return a * b


def surd_add(a: Surd, b: Surd) -> Surd:
    return a + b


def surd_cmp(a: ScalarLike, b: ScalarLike) -> int:
    """Exact three-way comparison: -1, 0 or 1."""
    return _coerce(a)._cmp(b)


# One extra block of digits absorbs rounding in intermediate square roots.
_GUARD_DIGITS = 10

DEFAULT_DIGITS = 50


def sqrt_fraction(x: Fraction, digits: int) -> Fraction:
    """Rational approximation of sqrt(x) with relative error below
    10**(-digits), via integer square root of a scaled integer."""
    if x < 0:
        raise NegativeRadicand(f"sqrt of negative value {x}")
    if x == 0:
        return Fraction(0)
    scale = 10**digits
    # sqrt(n/d) = isqrt(n*d*scale^2) / (d*scale), floor rounding
    n, d = x.numerator, x.denominator
    return Fraction(isqrt(n * d * scale * scale), d * scale)


@dataclass(frozen=True)
class ApproxScalar:
    """A decimal-grade rational approximation carrying its significant-digit
    budget.  Field arithmetic is exact on the stored rational; only square
    roots introduce rounding, bounded by the digit budget."""

    value: Fraction
    digits: int = DEFAULT_DIGITS

    def __post_init__(self):
        if self.digits < 1:
            raise ValueError("digits must be >= 1")
        object.__setattr__(self, "value", Fraction(self.value))

    def _lift(self, other) -> tuple[Fraction, int]:
        if isinstance(other, ApproxScalar):
            return other.value, min(self.digits, other.digits)
        if isinstance(other, (int, Fraction)):
            return Fraction(other), self.digits
        if isinstance(other, Surd):
            return other.approx(self.digits).value, self.digits
        raise TypeError(f"cannot combine ApproxScalar with {type(other).__name__}")

    def __add__(self, other):
        v, d = self._lift(other)
        return ApproxScalar(self.value + v, d)

    __radd__ = __add__

    def __sub__(self, other):
        v, d = self._lift(other)
        return ApproxScalar(self.value - v, d)

    def __rsub__(self, other):
        v, d = self._lift(other)
        return ApproxScalar(v - self.value, d)

    def __mul__(self, other):
        v, d = self._lift(other)
        return ApproxScalar(self.value * v, d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v, d = self._lift(other)
        return ApproxScalar(self.value / v, d)

    def __neg__(self):
        return ApproxScalar(-self.value, self.digits)

    def __abs__(self):
        return ApproxScalar(abs(self.value), self.digits)

    def sqrt(self) -> "ApproxScalar":
        return ApproxScalar(
            sqrt_fraction(self.value, self.digits + _GUARD_DIGITS), self.digits
        )

    def _other_value(self, other) -> Fraction:
        if isinstance(other, ApproxScalar):
            return other.value
        if isinstance(other, (int, Fraction)):
            return Fraction(other)
        if isinstance(other, Surd):
            return other.approx(self.digits).value
        raise TypeError(f"cannot compare ApproxScalar with {type(other).__name__}")

    def __eq__(self, other):
        return self.value == self._other_value(other)

    def __lt__(self, other):
        return self.value < self._other_value(other)

    def __le__(self, other):
        return self.value <= self._other_value(other)

    def __gt__(self, other):
        return self.value > self._other_value(other)

    def __ge__(self, other):
        return self.value >= self._other_value(other)

    def __hash__(self):
        return hash(self.value)

    def decimal(self) -> str:
        """Fixed-point rendering: sign, integer part, '.', fraction part,
        no exponent.  Byte-identical across platforms for given digits."""
        return render_decimal(self.value, self.digits)

    def __str__(self):
        return self.decimal()


def approx(value: ScalarLike, digits: int = DEFAULT_DIGITS) -> ApproxScalar:
    """Decimal approximation of any exact scalar, correct to `digits`
    significant digits."""
    x = to_exact(value)
    if isinstance(x, Surd):
        return x.approx(digits)
    return ApproxScalar(x, digits)


def render_decimal(value: Fraction, digits: int) -> str:
    """Render a rational as a plain decimal string with `digits` significant
    digits (at least one fractional digit is kept for exact integers too,
    unless the digit budget is exhausted by the integer part)."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    value = Fraction(value)
    sign = "-" if value < 0 else ""
    mag = abs(value)
    int_digits = len(str(int(mag))) if mag >= 1 else 1
    frac_digits = max(digits - int_digits, 0)
    scaled = mag * 10**frac_digits
    # round half away from zero, deterministically
    units = (2 * scaled.numerator + scaled.denominator) // (2 * scaled.denominator)
    text = str(units).rjust(frac_digits + 1, "0")
    if frac_digits:
        head, tail = text[:-frac_digits], text[-frac_digits:]
        out = f"{head}.{tail}"
    else:
        out = text
    if units == 0:
        sign = ""
    return sign + out
