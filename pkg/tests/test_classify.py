from math import gcd

import pytest

from trigal.classify import (
    GaussDegrees,
    TrinomialShape,
    an_sn_refine,
    classify_trinomial,
    gauss_degrees,
    pgl_params,
)
from trigal.errors import BadCharacteristic, BadExponent, InvalidShape, NotCoprime


def test_shape_validation():
    with pytest.raises(NotCoprime):
        TrinomialShape(12, 2, 3)
    with pytest.raises(BadExponent):
        TrinomialShape(5, 5, 3)
    with pytest.raises(BadExponent):
        TrinomialShape(5, 0, 3)
    with pytest.raises(BadCharacteristic):
        TrinomialShape(5, 2, 4)
    with pytest.raises(InvalidShape):
        TrinomialShape(1, 0, 2)


def test_gauss_degrees_cases():
    assert gauss_degrees(TrinomialShape(11, 2, 3)) == GaussDegrees(1, 9, True)
    assert gauss_degrees(TrinomialShape(12, 1, 3)) == GaussDegrees(4, 3, True)
    assert gauss_degrees(TrinomialShape(7, 3, 5)) == GaussDegrees(1, 1, False)
    assert gauss_degrees(TrinomialShape(7, 3, 2)) == GaussDegrees(1, 4, True)
    # in characteristic 2 one of n, m, n-m is always even, so a coprime
    # trinomial curve is always strange; here k = m = 2
    assert gauss_degrees(TrinomialShape(9, 2, 2)) == GaussDegrees(1, 2, True)
    assert gauss_degrees(TrinomialShape(9, 4, 7)) == GaussDegrees(1, 1, False)
    assert gauss_degrees(TrinomialShape(9, 2, 0)) == GaussDegrees(1, 1, False)


def test_gauss_degree_invariant():
    for p in (2, 3, 5, 7):
        for n in range(2, 25):
            for m in range(1, n):
                if gcd(n, m) != 1:
                    continue
                g = gauss_degrees(TrinomialShape(n, m, p))
                if g.strange:
                    k = g.sep * g.insep
                    assert k in (n, m, n - m) and k % p == 0
                    q = g.insep
                    while q % p == 0:
                        q //= p
                    assert q == 1  # insep is a p-power


def test_pgl_params_examples():
    assert pgl_params(TrinomialShape(13, 4, 3)) == [(3, 3, 2)]
    assert pgl_params(TrinomialShape(7, 3, 2)) == [(2, 3, 2)]
    assert pgl_params(TrinomialShape(11, 2, 3)) == []
    assert pgl_params(TrinomialShape(5, 1, 2)) == [(4, 2, 1)]
    assert pgl_params(TrinomialShape(13, 9, 3)) == [(3, 3, 2)]  # n - m = 4


def test_an_sn_refinement():
    group, _ = an_sn_refine(TrinomialShape(13, 3, 5))
    assert str(group) == "A13"  # 5 | 10, separable degree 2 is even
    group, _ = an_sn_refine(TrinomialShape(7, 3, 5))
    assert str(group) == "S7"
    group, notes = an_sn_refine(TrinomialShape(11, 1, 2))
    assert str(group) == "S11" and notes
    group, _ = an_sn_refine(TrinomialShape(11, 2, 5))
    assert str(group) == "S11"
    group, notes = an_sn_refine(TrinomialShape(11, 9, 2))
    assert str(group) == "A11"  # min(m, n-m) = 2 in characteristic 2
    group, _ = an_sn_refine(TrinomialShape(10, 3, 2))
    assert str(group) == "A10"  # even degree in characteristic 2
    group, _ = an_sn_refine(TrinomialShape(9, 2, 0))
    assert str(group) == "S9"


@pytest.mark.parametrize(
    "n,m,p,label,clause",
    [
        (8, 1, 2, "AGL(1,8)", 1),
        (9, 8, 3, "AGL(1,9)", 1),
        (6, 1, 2, "PSL(2,5)", 2),
        (12, 1, 3, "M11@12", 3),
        (24, 23, 2, "M24", 4),
        (11, 9, 3, "M11@11", 5),
        (23, 20, 2, "M23", 6),
        (13, 4, 3, "PGL(3,3)", 7),
        (7, 3, 2, "PGL(3,2)", 7),
        (2, 1, 5, "S2", "trivial"),
        (9, 2, 0, "S9", "char-0"),
        (11, 1, 2, "S11", 8),
        (13, 3, 5, "A13", 8),
    ],
)
def test_classify_cases(n, m, p, label, clause):
    v = classify_trinomial(TrinomialShape(n, m, p))
    assert str(v.group) == label
    assert v.clause == clause


def test_classify_symmetry():
    for p in (2, 3, 5, 7, 11, 13):
        for n in range(2, 41):
            for m in range(1, n):
                if gcd(n, m) != 1:
                    continue
                a = classify_trinomial(TrinomialShape(n, m, p))
                b = classify_trinomial(TrinomialShape(n, n - m, p))
                assert a.group == b.group and a.clause == b.clause


def test_cohen_consistency():
    # p not dividing m(n-m), and (m' != 1 or p not dividing n): A_n <= G
    for p in (2, 3, 5, 7, 11, 13):
        for n in range(3, 31):
            for m in range(1, n):
                if gcd(n, m) != 1:
                    continue
                if (m * (n - m)) % p == 0:
                    continue
                shape = TrinomialShape(n, m, p)
                if shape.m_low == 1 and n % p == 0:
                    continue
                v = classify_trinomial(shape)
                assert v.group.family in ("A", "S"), (n, m, p, str(v.group))


def test_clause_seven_notes_mention_parameters():
    v = classify_trinomial(TrinomialShape(7, 3, 2))
    assert any("q=2" in note for note in v.notes)


def test_projective_parameter_uniqueness_up_to_ten_thousand():
    """For each characteristic there is at most one (q, d) writing n as a
    projective point count with q a power of p; the classifier's ambiguity
    error is therefore unreachable in this range."""
    for p in (2, 3, 5, 7, 11, 13):
        reps = {}
        q = p
        while q <= 10**4:
            total, d = 1 + q, 2
            while total <= 10**4:
                reps.setdefault(total, []).append((q, d))
                total = total * q + 1
                d += 1
            q *= p
        for n, hits in reps.items():
            assert len(hits) == 1, (p, n, hits)
