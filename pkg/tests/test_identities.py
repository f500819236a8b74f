import pytest

from trigal.errors import BadParameters
from trigal.identities import (
    all_identity_reports,
    check_m23_substitution,
    check_m24,
    check_pgl,
    check_psl25,
    m24_chain_members,
    numeric_check_m23,
    numeric_check_m24,
    numeric_check_pgl,
    numeric_check_psl25,
    psl25_ring_and_sides,
)
from trigal.mvpoly import TriangularRing, context, qreduce


def test_psl25_holds():
    rep = check_psl25()
    assert rep.holds and rep.witness is None
    assert any("residual b*(1+c^4)" in n for n in rep.notes)


def test_psl25_perturbation_control():
    """Setting alpha to 0 (violating alpha^2 + alpha + 1 = 0) breaks it."""
    ring, lhs, rhs = psl25_ring_and_sides()
    ctx = ring.ctx
    a, b, c, x = (ctx.var(v) for v in ("a", "b", "c", "x"))
    cub1 = c**2 * x**3 + c**3 * x**2 + a  # alpha -> 0
    cub2 = c**2 * x**3 + c**3 * x**2 + c**4 * x + a + c**5
    residual = qreduce(cub1 * cub2 - rhs, ring)
    assert not residual.is_zero()


def test_m24_chain_holds():
    rep = check_m24()
    assert rep.holds
    assert any("[1, 8, 16, 512, 2048]" in n for n in rep.notes)


def test_m24_perturbation_control():
    """Flipping the a^89 coefficient to a^88 leaves a nonzero residual."""
    ctx, members = m24_chain_members()
    a, b, x = ctx.var("a"), ctx.var("b"), ctx.var("x")
    ring = TriangularRing(ctx, [("x", x**24 + a * x + b)])
    good = members[-1]
    bad = good - a**89 * x + a**88 * x
    assert qreduce(good, ring).is_zero()
    assert not qreduce(bad, ring).is_zero()


def test_m23_substitution_holds():
    rep = check_m23_substitution()
    assert rep.holds
    assert any("degree 23" in n for n in rep.notes)


def test_m23_perturbation_control():
    """Replacing the cube exponent by a square breaks the substitution."""
    ctx = context(2, "a", "b", "alpha", "y")
    a, b, alpha, y = (ctx.var(v) for v in ("a", "b", "alpha", "y"))
    ring = TriangularRing(ctx, [("alpha", alpha**23 + b)])
    lhs = (alpha * y) ** 23 + a * (alpha * y) ** 2 + b
    rhs = b * y**23 + a * alpha**3 * y**3 + b
    assert not qreduce(lhs - rhs, ring).is_zero()


@pytest.mark.parametrize("params", [(2, 1, 3, 2), (3, 1, 3, 2), (2, 2, 2, 1)])
def test_pgl_holds(params):
    rep = check_pgl(*params)
    assert rep.holds


def test_pgl_bad_parameters():
    with pytest.raises(BadParameters):
        check_pgl(4, 1, 3, 2)
    with pytest.raises(BadParameters):
        check_pgl(2, 1, 2, 2)


def test_full_suite_reports():
    reports = all_identity_reports()
    assert len(reports) == 6
    assert all(r.holds for r in reports)


def test_numeric_spot_checks():
    assert numeric_check_psl25(trials=10, seed=1)
    assert numeric_check_m24(trials=5, seed=2)
    assert numeric_check_m23(trials=10, seed=3)
    assert numeric_check_pgl(2, 1, 3, 2, trials=10, seed=4)
    assert numeric_check_pgl(2, 2, 2, 1, trials=5, seed=5)
