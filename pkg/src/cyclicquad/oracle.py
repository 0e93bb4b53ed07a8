"""Independent verification by coordinate embedding: lay the diagonal on
the x-axis, place the two off-diagonal vertices via the perpendicular-foot
split, then measure with the shoelace rule and a circumcenter equidistance
test.  Also hosts the diagonal scan that demonstrates the indeterminacy of
a quadrilateral's area when only the four sides are fixed."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactnum import (
    DEFAULT_DIGITS,
    ApproxScalar,
    Surd,
    approx,
    to_exact,
)
from .mensuration import (
    DiagQuad,
    GeometryError,
    QuadSides,
    Triangle,
    _sq,
    abadha_split,
    triangle_circumradius,
)

Point = tuple[ApproxScalar, ApproxScalar]


class DegenerateCollinear(GeometryError):
    """The three points meant to define a circle are (nearly) collinear."""


@dataclass(frozen=True)
class EmbeddedQuad:
    """Planar realization of a DiagQuad: vertex 0 at the origin, vertex 2
    on the positive x-axis at the diagonal's length, the apex of the
    (a, b) triangle strictly above the axis and the apex of the (c, d)
    triangle strictly below (convex position)."""

    points: tuple[Point, Point, Point, Point]
    precision: int
    source: DiagQuad


def embed(dq: DiagQuad, digits: int = DEFAULT_DIGITS) -> EmbeddedQuad:
    a, b, c, d = dq.sides.sides
    diag = dq.diagonal
    seg1, _, h1 = abadha_split(diag, a, b)
    seg2, _, h2 = abadha_split(diag, d, c)
    zero = ApproxScalar(Fraction(0), digits)
    points = (
        (zero, zero),
        (approx(seg1, digits), approx(h1, digits)),
        (approx(diag, digits), zero),
        (approx(seg2, digits), -approx(h2, digits)),
    )
    return EmbeddedQuad(points=points, precision=digits, source=dq)


def embed_triangle(t: Triangle, digits: int = DEFAULT_DIGITS) -> tuple[Point, Point, Point]:
    """Planar realization of a triangle with side a on the x-axis."""
    seg, _, h = abadha_split(t.a, t.b, t.c)
    zero = ApproxScalar(Fraction(0), digits)
    return (
        (zero, zero),
        (approx(t.a, digits), zero),
        (approx(seg, digits), approx(h, digits)),
    )


def shoelace_area(points_or_quad) -> ApproxScalar:
    """Polygon area by the shoelace rule, at the embedding's precision."""
    if isinstance(points_or_quad, EmbeddedQuad):
        points = points_or_quad.points
        digits = points_or_quad.precision
    else:
        points = tuple(points_or_quad)
        digits = min(p[0].digits for p in points)
    total = Fraction(0)
    n = len(points)
    for i in range(n):
        x1, y1 = points[i]
        x2, y2 = points[(i + 1) % n]
        total += x1.value * y2.value - x2.value * y1.value
    return ApproxScalar(abs(total) / 2, digits)


def _circumcenter(p0: Point, p1: Point, p2: Point) -> tuple[Fraction, Fraction]:
    x0, y0 = p0[0].value, p0[1].value
    x1, y1 = p1[0].value, p1[1].value
    x2, y2 = p2[0].value, p2[1].value
    ax, ay = 2 * (x1 - x0), 2 * (y1 - y0)
    bx, by = 2 * (x2 - x0), 2 * (y2 - y0)
    ra = x1 * x1 + y1 * y1 - x0 * x0 - y0 * y0
    rb = x2 * x2 + y2 * y2 - x0 * x0 - y0 * y0
    det = ax * by - ay * bx
    if det == 0:
        raise DegenerateCollinear("circumcenter undefined for collinear points")
    cx = (ra * by - rb * ay) / det
    cy = (ax * rb - bx * ra) / det
    return cx, cy


def concyclic(e: EmbeddedQuad, tolerance=None) -> bool:
    """True iff all four embedded points are equidistant, within tolerance,
    from the circumcenter of the first three.  Default tolerance 1e-30."""
    if tolerance is None:
        tolerance = Fraction(1, 10**30)
    elif isinstance(tolerance, ApproxScalar):
        tolerance = tolerance.value
    else:
        tolerance = Fraction(tolerance)
    digits = e.precision
    p0, p1, p2, p3 = e.points
    span = max(abs(q[0].value) + abs(q[1].value) for q in e.points)
    # collinearity guard on the first three points, scale-relative
    x0, y0 = p0[0].value, p0[1].value
    x1, y1 = p1[0].value, p1[1].value
    x2, y2 = p2[0].value, p2[1].value
    cross = (x1 - x0) * (y2 - y0) - (y1 - y0) * (x2 - x0)
    if span > 0 and abs(cross) <= tolerance * span * span:
        raise DegenerateCollinear("first three points are collinear within tolerance")
    cx, cy = _circumcenter(p0, p1, p2)
    radii = [
        ApproxScalar((q[0].value - cx) ** 2 + (q[1].value - cy) ** 2, digits).sqrt()
        for q in e.points
    ]
    spread = max(r.value for r in radii) - min(r.value for r in radii)
    return spread < tolerance


def concyclic_exact(dq: DiagQuad) -> bool:
    """Exact concyclicity of the convex embedding: both triangles must have
    the same circumcenter.  Both centers lie on the diagonal's perpendicular
    bisector, so the test reduces to one exact surd comparison."""
    a, b, c, d = dq.sides.sides
    diag_sq = _sq(dq.diagonal)
    _, _, h1 = abadha_split(dq.diagonal, a, b)
    _, _, h2 = abadha_split(dq.diagonal, d, c)
    # center heights: (a^2 + b^2 - diag^2)/(4 h1) above, mirrored below
    lhs = (_sq(a) + _sq(b) - diag_sq) * (Surd(1) * h2)
    rhs = -((_sq(d) + _sq(c) - diag_sq) * (Surd(1) * h1))
    return Surd(1) * lhs == Surd(1) * rhs


def circumradii(dq: DiagQuad):
    """Exact circumradii of the two diagonal triangles; equal radii plus a
    shared center (see concyclic_exact) characterize cyclicity."""
    return (
        triangle_circumradius(dq.first_triangle()),
        triangle_circumradius(dq.second_triangle()),
    )


def diagonal_range(q: QuadSides):
    """Open interval of diagonals that hinge the (a,b)/(c,d) split into a
    genuine quadrilateral: (max(|a-b|, |c-d|), min(a+b, c+d))."""
    a, b, c, d = q.sides
    lower = max(abs(Surd(1) * a - b), abs(Surd(1) * c - d))
    upper = min(Surd(1) * a + b, Surd(1) * c + d)
    return to_exact(lower), to_exact(upper)


@dataclass(frozen=True)
class ScanResult:
    samples: tuple[tuple[ApproxScalar, ApproxScalar], ...]
    argmax_diagonal: ApproxScalar
    max_area: ApproxScalar


def area_scan(q: QuadSides, steps: int, digits: int = DEFAULT_DIGITS) -> ScanResult:
    """Sample the feasible diagonal interval at `steps` interior grid
    points and measure each hinged configuration with the embedding oracle.
    The family realizes the classical indeterminacy argument: same four
    sides, many diagonals, many areas."""
    if steps < 3:
        raise ValueError("steps must be >= 3")
    lower, upper = diagonal_range(q)
    lo = approx(lower, digits).value
    hi = approx(upper, digits).value
    step = (hi - lo) / (steps + 1)
    samples = []
    best = None
    for i in range(1, steps + 1):
        diag = lo + i * step
        dq = DiagQuad(q, diag)
        area = shoelace_area(embed(dq, digits))
        entry = (ApproxScalar(diag, digits), area)
        samples.append(entry)
        if best is None or area.value > best[1].value:
            best = entry
    return ScanResult(
        samples=tuple(samples), argmax_diagonal=best[0], max_area=best[1]
    )
