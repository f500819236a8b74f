import random
from fractions import Fraction

import pytest

from trigal.errors import TooFewPoints
from trigal.newton import lower_hull, tame_cycle_pattern, valued_points


def test_single_segment_example():
    np_ = lower_hull(valued_points([(0, 1), (4, 0)]))
    assert np_.segments == ((Fraction(-1, 4), 4),)


def test_two_segment_example():
    np_ = lower_hull(valued_points([(0, 0), (3, -1), (11, 0)]))
    assert np_.segments == ((Fraction(-1, 3), 3), (Fraction(1, 8), 8))


def test_flat_hull():
    np_ = lower_hull(valued_points([(0, 0), (5, 0)]))
    assert np_.segments == ((Fraction(0), 5),)


def test_interior_points_absorbed():
    # collinear interior point merges; points above the hull are ignored
    assert lower_hull(valued_points([(0, 0), (2, 1), (4, 2)])).segments == (
        (Fraction(1, 2), 4),
    )
    assert lower_hull(valued_points([(0, 0), (2, 7), (4, 2)])).segments == (
        (Fraction(1, 2), 4),
    )


def test_infinite_valuations_skipped():
    np_ = lower_hull(valued_points([(0, 1), (2, None), (4, 0)]))
    assert np_.segments == ((Fraction(-1, 4), 4),)


def test_too_few_points():
    with pytest.raises(TooFewPoints):
        valued_points([(0, 1)])
    with pytest.raises(TooFewPoints):
        valued_points([(0, 1), (2, None), (5, None)])


def test_validation():
    with pytest.raises(ValueError):
        valued_points([(3, 0), (1, 0)])  # not increasing
    with pytest.raises(ValueError):
        valued_points([(0, 0), (2, 0), (4, None)])  # top exponent must be finite


def test_tame_cycles_two_segments():
    np_ = lower_hull(valued_points([(0, 0), (3, -1), (11, 0)]))
    pat = tame_cycle_pattern(np_, 7)
    assert not pat.wild
    assert pat.cycles == (3, 8)


def test_tame_single_cycle():
    np_ = lower_hull(valued_points([(0, 1), (5, 0)]))
    assert tame_cycle_pattern(np_, 3).cycles == (5,)


def test_wild_segment_aborts():
    np_ = lower_hull(valued_points([(0, 1), (2, 0), (4, 1)]))
    assert np_.segments[0] == (Fraction(-1, 2), 2)
    assert tame_cycle_pattern(np_, 2).wild
    assert not tame_cycle_pattern(np_, 3).wild


def test_flat_segments_report_unconstrained_run():
    np_ = lower_hull(valued_points([(0, 1), (2, 0), (6, 0)]))
    pat = tame_cycle_pattern(np_, 5)
    assert pat.cycles == (2,)
    assert pat.unconstrained_run == 4


def _random_points(rng, count):
    exps = sorted(rng.sample(range(0, 40), count))
    pts = [(e, Fraction(rng.randrange(-12, 13), rng.randrange(1, 7))) for e in exps]
    return valued_points(pts)


def test_hull_invariants_random():
    rng = random.Random(42)
    for _ in range(200):
        pts = _random_points(rng, rng.randrange(2, 12))
        hull = lower_hull(pts)
        slopes = [s for s, _ in hull.segments]
        assert slopes == sorted(slopes)
        assert len(set(slopes)) == len(slopes)
        finite = pts.finite()
        assert hull.total_run() == finite[-1][0] - finite[0][0]
        # hull lies on or below every input point
        y = finite[0][1]
        x = finite[0][0]
        heights = {x: y}
        for s, run in hull.segments:
            y = y + s * run
            x += run
            heights[x] = y
        for e, v in finite:
            # interpolate hull height at e
            hx = finite[0][0]
            hy = finite[0][1]
            for s, run in hull.segments:
                if hx + run >= e:
                    hy = hy + s * (e - hx)
                    break
                hy = hy + s * run
                hx += run
            assert hy <= v


def test_union_hull_never_above_either():
    rng = random.Random(7)
    for _ in range(100):
        a = _random_points(rng, rng.randrange(2, 8))
        b = _random_points(rng, rng.randrange(2, 8))
        merged = {}
        for e, v in list(a.finite()) + list(b.finite()):
            merged[e] = min(v, merged.get(e, v))
        if len(merged) < 2:
            continue
        u = valued_points(sorted(merged.items()))
        hull_u = lower_hull(u)
        for single in (a, b):
            for e, v in single.finite():
                assert _hull_height(hull_u, u, e) <= v


def _hull_height(hull, pts, e):
    finite = pts.finite()
    x, y = finite[0]
    if e < x:
        return Fraction(10**9)
    for s, run in hull.segments:
        if x + run >= e:
            return y + s * (e - x)
        y += s * run
        x += run
    return Fraction(10**9)


def test_product_polygon_slopes_union():
    """Polygon of a product of polynomials with monomial t-coefficients:
    slope multiset of the product is the union of the factors' multisets.
    Valuations are chosen strictly convex so no minimum in the coefficient
    sums can tie or cancel."""
    rng = random.Random(13)
    for _ in range(100):
        va = [Fraction(3 * i * i - rng.randrange(2) * i, 1) for i in range(rng.randrange(2, 6))]
        vb = [Fraction(3 * i * i + i, 1) for i in range(rng.randrange(2, 6))]
        pa = valued_points(list(enumerate(va)))
        pb = valued_points(list(enumerate(vb)))
        # product coefficient valuation: min over i+j=k of va[i]+vb[j]
        prod = []
        for k in range(len(va) + len(vb) - 1):
            vals = [
                va[i] + vb[k - i]
                for i in range(len(va))
                if 0 <= k - i < len(vb)
            ]
            prod.append((k, min(vals)))
        hull_prod = lower_hull(valued_points(prod))
        union = sorted(
            lower_hull(pa).slope_multiset() + lower_hull(pb).slope_multiset()
        )
        assert sorted(hull_prod.slope_multiset()) == union
