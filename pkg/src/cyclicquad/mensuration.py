"""Area, diagonal and perpendicular formulas for triangles, trapezia,
rhombuses and quadrilaterals, over exact scalar arithmetic.

The quadrilateral rules implemented here are the gross rule (product of the
half-sums of opposite sides), the square-root rule
sqrt((s-a)(s-b)(s-c)(s-d)) which is exact only for cyclic quadrilaterals,
Heron's rule for triangles, the perpendicular-foot (abadha) split, and the
cyclic diagonal formulas tied to Ptolemy's theorem.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .exactnum import (
    IncompatibleRadicands,
    ScalarLike,
    Surd,
    approx,
    to_exact,
)

Exact = Union[Fraction, Surd]


class GeometryError(ValueError):
    """A figure violates one of its defining constraints."""


class InvalidTriangle(GeometryError):
    pass


class InvalidQuad(GeometryError):
    pass


class InvalidTrapezium(GeometryError):
    pass


class DegenerateRhombus(GeometryError):
    pass


def _sq(x: ScalarLike) -> Fraction:
    """Exact rational square of a scalar (a single surd squared is rational)."""
    v = to_exact(x)
    if isinstance(v, Surd):
        return v.coefficient**2 * v.radicand
    return v * v


def _is_positive(x: ScalarLike) -> bool:
    return to_exact(x) > 0


def _lt_sum2(c: ScalarLike, a: ScalarLike, b: ScalarLike) -> bool:
    """Exact test c < a + b for nonnegative scalars, via squaring: works
    even when a + b itself is not single-surd representable."""
    if (
        isinstance(c, Fraction)
        and isinstance(a, Fraction)
        and isinstance(b, Fraction)
    ):
        return c < a + b
    rest = _sq(c) - _sq(a) - _sq(b)
    if rest < 0:
        return True
    two_ab = 2 * to_exact(a) * to_exact(b)
    return Surd(1) * two_ab > rest  # rational vs single surd, exact


def _exact_sum(values) -> Exact:
    total = Surd(0)
    for v in values:
        total = total + to_exact(v)
    return to_exact(total)


def _lt_sum(side: ScalarLike, others) -> bool:
    """side < sum(others); exact when the sum is representable, otherwise
    decided at 60-digit approximation."""
    try:
        return to_exact(side) < Surd(1) * _exact_sum(others)
    except IncompatibleRadicands:
        total = approx(others[0], 60)
        for v in others[1:]:
            total = total + approx(v, 60)
        return approx(side, 60) < total


@dataclass(frozen=True)
class Triangle:
    a: Exact
    b: Exact
    c: Exact

    def __post_init__(self):
        sides = [to_exact(self.a), to_exact(self.b), to_exact(self.c)]
        object.__setattr__(self, "a", sides[0])
        object.__setattr__(self, "b", sides[1])
        object.__setattr__(self, "c", sides[2])
        if not all(_is_positive(s) for s in sides):
            raise InvalidTriangle(f"sides must be positive: {sides}")
        for i in range(3):
            if not _lt_sum2(sides[i], sides[(i + 1) % 3], sides[(i + 2) % 3]):
                raise InvalidTriangle(
                    f"triangle inequality fails: {sides[i]} >= sum of the others"
                )

    @property
    def sides(self) -> tuple[Exact, Exact, Exact]:
        return (self.a, self.b, self.c)


@dataclass(frozen=True)
class QuadSides:
    """Four side lengths in cyclic order (a, b, c, d)."""

    sides: tuple[Exact, Exact, Exact, Exact]

    def __post_init__(self):
        if len(self.sides) != 4:
            raise InvalidQuad("exactly four sides required")
        sides = tuple(to_exact(s) for s in self.sides)
        object.__setattr__(self, "sides", sides)
        if not all(_is_positive(s) for s in sides):
            raise InvalidQuad(f"sides must be positive: {sides}")
        for i in range(4):
            others = [sides[j] for j in range(4) if j != i]
            if not _lt_sum(sides[i], others):
                raise InvalidQuad(
                    f"closure fails: side {sides[i]} >= sum of the other three"
                )

    @property
    def a(self) -> Exact:
        return self.sides[0]

    @property
    def b(self) -> Exact:
        return self.sides[1]

    @property
    def c(self) -> Exact:
        return self.sides[2]

    @property
    def d(self) -> Exact:
        return self.sides[3]

    def rotated(self, k: int) -> "QuadSides":
        k %= 4
        return QuadSides(self.sides[k:] + self.sides[:k])


def quad(a: ScalarLike, b: ScalarLike, c: ScalarLike, d: ScalarLike) -> QuadSides:
    return QuadSides((to_exact(a), to_exact(b), to_exact(c), to_exact(d)))


@dataclass(frozen=True)
class DiagQuad:
    """A quadrilateral with one diagonal fixed.  The diagonal always joins
    the vertex between sides d and a to the vertex between sides b and c,
    splitting the figure into triangles (a, b, diagonal) and
    (c, d, diagonal); rotate the side order for any other split."""

    sides: QuadSides
    diagonal: Exact

    def __post_init__(self):
        object.__setattr__(self, "diagonal", to_exact(self.diagonal))
        if not _is_positive(self.diagonal):
            raise InvalidQuad(f"diagonal must be positive: {self.diagonal}")
        # both induced triangles must be valid; Triangle raises otherwise
        self.first_triangle()
        self.second_triangle()

    def first_triangle(self) -> Triangle:
        return Triangle(self.sides.a, self.sides.b, self.diagonal)

    def second_triangle(self) -> Triangle:
        return Triangle(self.sides.c, self.sides.d, self.diagonal)


@dataclass(frozen=True)
class Trapezium:
    """Trapezium with parallel base and face, base the longer one."""

    base: Exact
    face: Exact
    legs: tuple[Exact, Exact]
    height: Exact

    def __post_init__(self):
        object.__setattr__(self, "base", to_exact(self.base))
        object.__setattr__(self, "face", to_exact(self.face))
        object.__setattr__(self, "legs", tuple(to_exact(v) for v in self.legs))
        object.__setattr__(self, "height", to_exact(self.height))
        values = (self.base, self.face, *self.legs, self.height)
        if not all(_is_positive(v) for v in values):
            raise InvalidTrapezium(f"all lengths must be positive: {values}")
        # face == base is the parallelogram limit, still measurable
        if self.face > self.base:
            raise InvalidTrapezium("face must not exceed the base")
        if any(self.height > leg for leg in self.legs):
            raise InvalidTrapezium("height exceeds a leg")


@dataclass(frozen=True)
class Rhombus:
    side: Exact
    d1: Exact

    def __post_init__(self):
        object.__setattr__(self, "side", to_exact(self.side))
        object.__setattr__(self, "d1", to_exact(self.d1))
        if not _is_positive(self.side) or not _is_positive(self.d1):
            raise DegenerateRhombus("side and diagonal must be positive")
        if not self.d1 < 2 * (Surd(1) * self.side):
            raise DegenerateRhombus(
                f"diagonal {self.d1} must be strictly less than twice the side"
            )


@dataclass(frozen=True)
class MensurationReport:
    semiperimeter: Exact
    gross_area: Exact
    sutra_area: Exact
    split_area: Optional[Exact] = None
    perpendiculars: Optional[tuple[Exact, Exact]] = None


@dataclass(frozen=True)
class DiagonalPair:
    """The two diagonals of the cyclic configuration: p joins the vertex
    between d,a to the vertex between b,c; q joins the other two."""

    p: Exact
    q: Exact


def semiperimeter(sides) -> Exact:
    return to_exact(_exact_sum(sides) / 2)


def gross_area(q: QuadSides) -> Exact:
    """The gross rule: product of the half-sums of opposite sides."""
    a, b, c, d = q.sides
    return to_exact(((Surd(1) * a + c) / 2) * ((Surd(1) * b + d) / 2))


def sutra_area(q: QuadSides) -> Exact:
    """The square-root rule sqrt((s-a)(s-b)(s-c)(s-d)).  Evaluated
    unconditionally, as the classical texts state it; it equals the true
    area only when the quadrilateral is cyclic."""
    a, b, c, d = q.sides
    s = semiperimeter(q.sides)
    product = (s - a) * (s - b) * (s - c) * (s - d)
    return to_exact(Surd.sqrt(product))


def heron_area(t: Triangle) -> Exact:
    """Triangle area sqrt(s(s-a)(s-b)(s-c)).  Computed from the equivalent
    polynomial in the squared sides, which stays exact even when a side is
    itself a surd (its square is rational)."""
    a2, b2, c2 = (_sq(s) for s in t.sides)
    sixteen_t2 = 2 * (a2 * b2 + b2 * c2 + c2 * a2) - a2 * a2 - b2 * b2 - c2 * c2
    if sixteen_t2 <= 0:
        raise InvalidTriangle(f"degenerate triangle {t.sides}")
    return to_exact(Surd.sqrt(sixteen_t2) / 4)


def trapezium_area(t: Trapezium) -> Exact:
    """Half the sum of base and face, times the height."""
    return to_exact(((Surd(1) * t.base + t.face) / 2) * t.height)


def rhombus_second_diagonal(r: Rhombus) -> Exact:
    """d2 = sqrt(4 a**2 - d1**2)."""
    return to_exact(Surd.sqrt(4 * _sq(r.side) - _sq(r.d1)))


def rhombus_area(r: Rhombus) -> Exact:
    """Half the product of the diagonals."""
    return to_exact((Surd(1) * r.d1 * rhombus_second_diagonal(r)) / 2)


def abadha_split(
    base: ScalarLike, flank_left: ScalarLike, flank_right: ScalarLike
) -> tuple[Exact, Exact, Exact]:
    """Foot-of-perpendicular split of a triangle base: returns the two base
    segments (left one adjacent to flank_left) and the height."""
    base = to_exact(base)
    left = to_exact(flank_left)
    right = to_exact(flank_right)
    if not (_is_positive(base) and _is_positive(left) and _is_positive(right)):
        raise InvalidTriangle(
            f"no triangle with base {base} and flanks {left}, {right}"
        )
    if isinstance(base, Fraction):
        segment_left = (_sq(base) + _sq(left) - _sq(right)) / (2 * base)
        segment_right = base - segment_left
    else:
        segment_left = to_exact(
            (_sq(base) + _sq(left) - _sq(right)) / (2 * (Surd(1) * base))
        )
        segment_right = to_exact(Surd(1) * base - segment_left)
    height_sq = _sq(left) - _sq(segment_left)
    # positive altitude squared is equivalent to the strict triangle
    # inequality, given positive lengths
    if height_sq <= 0:
        raise InvalidTriangle(
            f"no triangle with base {base} and flanks {left}, {right}"
        )
    height = to_exact(Surd.sqrt(height_sq))
    return segment_left, segment_right, height


def area_by_diagonal(dq: DiagQuad) -> MensurationReport:
    """Split the quadrilateral along its diagonal, apply Heron to both
    triangles and report the summed area plus the perpendiculars from the
    off-diagonal vertices onto the diagonal.

    Raises IncompatibleRadicands when the two triangle areas are
    incommensurable surds; the caller may then fall back to the
    coordinate-embedding oracle.
    """
    t1 = heron_area(dq.first_triangle())
    t2 = heron_area(dq.second_triangle())
    diag = Surd(1) * dq.diagonal
    split = to_exact(Surd(1) * t1 + t2)
    perpendiculars = (to_exact(2 * (Surd(1) * t1) / diag), to_exact(2 * (Surd(1) * t2) / diag))
    return MensurationReport(
        semiperimeter=semiperimeter(dq.sides.sides),
        gross_area=gross_area(dq.sides),
        sutra_area=sutra_area(dq.sides),
        split_area=split,
        perpendiculars=perpendiculars,
    )


def split_triangle_areas(dq: DiagQuad) -> tuple[Exact, Exact]:
    """The two Heron areas on either side of the diagonal, unsummed."""
    return heron_area(dq.first_triangle()), heron_area(dq.second_triangle())


def cyclic_diagonal_pair(q: QuadSides) -> DiagonalPair:
    """Diagonals of the cyclic configuration with the given side order:
    p = sqrt((ac+bd)(ad+bc)/(ab+cd)), q = sqrt((ac+bd)(ab+cd)/(ad+bc)).
    Stated unconditionally in the classical sources; valid only for the
    cyclic configuration."""
    a, b, c, d = q.sides
    ac_bd = to_exact(a * (Surd(1) * c) + b * (Surd(1) * d))
    ad_bc = to_exact(a * (Surd(1) * d) + b * (Surd(1) * c))
    ab_cd = to_exact(a * (Surd(1) * b) + c * (Surd(1) * d))
    p = Surd.sqrt(ac_bd * ad_bc / ab_cd)
    qq = Surd.sqrt(ac_bd * ab_cd / ad_bc)
    return DiagonalPair(p=to_exact(p), q=to_exact(qq))


def ptolemy_check(q: QuadSides, d: DiagonalPair) -> bool:
    """Exact Ptolemy equality: p*q == ac + bd."""
    a, b, c, d_side = q.sides
    lhs = Surd(1) * d.p * d.q
    rhs = a * (Surd(1) * c) + b * (Surd(1) * d_side)
    return lhs == Surd(1) * rhs


def triangle_circumradius(t: Triangle) -> Exact:
    """Circumradius abc / (4 * area); standard plumbing for the
    concyclicity oracle."""
    product = Surd(1) * t.a * t.b * t.c
    return to_exact(product / (4 * (Surd(1) * heron_area(t))))
