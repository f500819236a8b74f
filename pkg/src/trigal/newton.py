"""Newton polygons over a valued field, and the tame-slope cycle deduction.

Coefficient valuations are supplied directly as exact rationals (None for
+infinity); every polygon of interest here has monomial-in-t coefficients,
so the valuation is read off an exponent and no Laurent-series arithmetic is
ever needed.  Slopes use the lower-convex-hull convention: a segment of slope
-h/e corresponds to roots of valuation +h/e.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import TooFewPoints

Valuation = Fraction | None  # None encodes +infinity (a zero coefficient)


@dataclass(frozen=True)
class ValuedPoints:
    """Pairs (exponent, valuation of the coefficient), exponents increasing."""

    points: tuple[tuple[int, Valuation], ...]

    def __post_init__(self):
        exps = [i for i, _ in self.points]
        if exps != sorted(set(exps)):
            raise ValueError("exponents must be strictly increasing")
        if any(i < 0 for i in exps):
            raise ValueError("exponents must be nonnegative")
        finite = self.finite()
        if len(finite) < 2:
            raise TooFewPoints("need at least two points of finite valuation")
        if self.points[-1][1] is None:
            raise ValueError("the largest-exponent entry must be finite")

    def finite(self) -> list[tuple[int, Fraction]]:
        return [(i, v) for i, v in self.points if v is not None]


def valued_points(pairs) -> ValuedPoints:
    """Build ValuedPoints from (exponent, valuation) pairs; valuations may be
    ints, Fractions, 2-tuples (num, den) or None for +infinity."""
    norm = []
    for i, v in pairs:
        if v is None:
            norm.append((int(i), None))
        elif isinstance(v, tuple):
            norm.append((int(i), Fraction(*v)))
        else:
            norm.append((int(i), Fraction(v)))
    return ValuedPoints(tuple(norm))


@dataclass(frozen=True)
class NewtonPolygon:
    """Lower convex hull as (slope, run) segments, slopes strictly increasing."""

    segments: tuple[tuple[Fraction, int], ...]

    def total_run(self) -> int:
        return sum(run for _, run in self.segments)

    def slope_multiset(self) -> tuple[Fraction, ...]:
        """Each segment's slope repeated run times (one entry per root)."""
        out: list[Fraction] = []
        for s, run in self.segments:
            out.extend([s] * run)
        return tuple(out)


def lower_hull(points: ValuedPoints) -> NewtonPolygon:
    """Exact lower convex hull of the finite points, collinear points merged."""
    pts = points.finite()
    # monotone chain, lower hull only; x-coordinates are already increasing
    hull: list[tuple[int, Fraction]] = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop the middle point unless it turns strictly left
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    segments = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        segments.append((Fraction(y2 - y1, x2 - x1), x2 - x1))
    return NewtonPolygon(tuple(segments))


@dataclass(frozen=True)
class TameCyclePattern:
    """Cycle lengths an inertia generator is forced to have, when deducible.

    wild=True means some nonflat segment has ramification index divisible by
    the characteristic and no deduction is made at all.  Flat (slope-zero)
    segments never contribute cycles; their total run is reported separately
    as unconstrained.
    """

    wild: bool
    cycles: tuple[int, ...]
    unconstrained_run: int


def tame_cycle_pattern(np_: NewtonPolygon, p: int) -> TameCyclePattern:
    """For each segment of slope h/e in lowest terms: if p | e for any
    nonflat segment the whole deduction is abandoned (wild); otherwise the
    segment contributes run/e cycles of length e."""
    cycles: list[int] = []
    unconstrained = 0
    for slope, run in np_.segments:
        if slope == 0:
            unconstrained += run
            continue
        e = slope.denominator  # positive by Fraction normalisation
        if p > 0 and e % p == 0:
            return TameCyclePattern(wild=True, cycles=(), unconstrained_run=0)
        assert run % e == 0, "segment run must be a multiple of its denominator"
        cycles.extend([e] * (run // e))
    return TameCyclePattern(
        wild=False, cycles=tuple(sorted(cycles)), unconstrained_run=unconstrained
    )
