import random
from math import factorial

import pytest

from trigal.errors import BadK, BudgetExceeded, DegreeMismatch, UnknownName
from trigal.permgrp import (
    GroupName,
    builtin_group,
    contains_all_types,
    cycle_type,
    cycle_type_set,
    format_cycles,
    group_generate,
    group_order,
    identity,
    is_primitive,
    jones_candidates,
    parse_cycles,
    parse_group_name,
    perm_from_cycles,
    transitivity_degree,
    triply_transitive_candidates,
    type_display,
    type_parity_even,
)

MATHIEU_ORDERS = {
    "M11@11": 7920,
    "M11@12": 7920,
    "M12": 95040,
    "M22": 443520,
    "AutM22": 887040,
    "M23": 10200960,
    "M24": 244823040,
}

MIN_TRANSITIVITY = {
    "M11@11": 4,
    "M11@12": 3,
    "M12": 5,
    "M22": 3,
    "AutM22": 3,
    "M23": 4,
    "M24": 5,
}


def test_cycle_type_examples():
    assert cycle_type(identity(11)) == (1,) * 11
    g = perm_from_cycles(5, [[0, 1], [2, 3, 4]])
    assert cycle_type(g) == (2, 3)
    # an order-11 element of M11 on 11 points is a full 11-cycle
    m11 = builtin_group(parse_group_name("M11@11"))
    rng = random.Random(0)
    assert any(
        cycle_type(m11.random_element(rng)) == (11,) for _ in range(500)
    )


def test_group_generate_s5():
    handle = group_generate(
        [perm_from_cycles(5, [[0, 1]]), perm_from_cycles(5, [list(range(5))])]
    )
    assert handle.order == 120


def test_generator_validation():
    with pytest.raises(DegreeMismatch):
        group_generate([identity(4), identity(5)])
    with pytest.raises(ValueError):
        group_generate([(0, 0, 1)])


def test_parse_and_format_cycles():
    g = parse_cycles("(0,1,2)(3,4)", 6)
    assert g == perm_from_cycles(6, [[0, 1, 2], [3, 4]])
    assert format_cycles(g) == "(0,1,2)(3,4)"
    assert parse_cycles("()", 3) == identity(3)
    with pytest.raises(ValueError):
        parse_cycles("(0,1)(1,2)", 3)
    with pytest.raises(ValueError):
        parse_cycles("0,1", 3)


def test_mathieu_orders_from_data_file():
    for label, order in MATHIEU_ORDERS.items():
        name = parse_group_name(label)
        handle = builtin_group(name)
        assert handle.order == order, label
        assert handle.degree == name.degree(), label
        assert transitivity_degree(handle, 5) >= MIN_TRANSITIVITY[label], label


def test_builtin_examples():
    pgl25 = builtin_group(parse_group_name("PGL(2,5)"))
    assert (pgl25.degree, pgl25.order) == (6, 120)
    agl18 = builtin_group(parse_group_name("AGL(1,8)"))
    assert (agl18.degree, agl18.order) == (8, 56)
    m23 = builtin_group(parse_group_name("M23"))
    assert (m23.degree, m23.order) == (23, 10200960)
    with pytest.raises(UnknownName):
        parse_group_name("E8")


def test_cycle_type_set_s3():
    s3 = builtin_group(parse_group_name("S3"))
    assert cycle_type_set(s3) == {(1, 1, 1), (1, 2), (3,)}


def test_cycle_type_set_counts_partitions():
    # |cycle_type_set(S_n)| = p(n)
    partition_counts = {4: 5, 5: 7, 6: 11, 7: 15}
    for n, pn in partition_counts.items():
        assert len(cycle_type_set(builtin_group(parse_group_name(f"S{n}")))) == pn


def test_cycle_type_set_alternating_even_partitions():
    for n in (4, 5, 6, 7):
        types = cycle_type_set(builtin_group(parse_group_name(f"A{n}")))
        evens = {
            t
            for t in cycle_type_set(builtin_group(parse_group_name(f"S{n}")))
            if type_parity_even(t)
        }
        assert types == evens


def test_budget_exceeded():
    with pytest.raises(BudgetExceeded):
        cycle_type_set(builtin_group(parse_group_name("S13")))


def test_transitivity_degrees():
    assert transitivity_degree(builtin_group(parse_group_name("S5")), 5) == 5
    assert transitivity_degree(builtin_group(parse_group_name("A5")), 4) == 3
    assert transitivity_degree(builtin_group(parse_group_name("PGL(2,7)")), 4) == 3


def test_primitivity():
    assert is_primitive(builtin_group(parse_group_name("S4")))
    assert not is_primitive(builtin_group(parse_group_name("C8")))
    assert is_primitive(builtin_group(parse_group_name("AGL(1,9)")))
    # intransitive groups report False
    handle = group_generate([perm_from_cycles(6, [[0, 1, 2]])])
    assert not is_primitive(handle)


def test_two_transitive_builtins_are_primitive():
    for label in ("PGL(2,5)", "PSL(2,7)", "AGL(1,8)", "M11@11", "PGL(3,2)"):
        handle = builtin_group(parse_group_name(label))
        assert transitivity_degree(handle, 2) == 2
        assert is_primitive(handle), label


def test_membership_consistency():
    m12 = builtin_group(parse_group_name("M12"))
    rng = random.Random(17)
    for _ in range(200):
        g = m12.random_element(rng)
        assert m12.contains(g)
    # an odd transposition is never in M12 (M12 is inside A12)
    assert not m12.contains(perm_from_cycles(12, [[0, 1]]))
    with pytest.raises(DegreeMismatch):
        m12.contains(identity(5))


def test_order_divides_factorial():
    for label in MATHIEU_ORDERS:
        handle = builtin_group(parse_group_name(label))
        assert factorial(handle.degree) % handle.order == 0


def test_jones_candidates_examples():
    assert [str(g) for g in jones_candidates(11, 0)] == [
        "C11", "AGL(1,11)", "PSL(2,11)@11", "M11@11", "A11", "S11",
    ]
    assert [str(g) for g in jones_candidates(12, 1)] == [
        "PSL(2,11)", "PGL(2,11)", "M11@12", "M12", "A12", "S12",
    ]
    assert [str(g) for g in jones_candidates(10, 2)] == [
        "PGL(2,9)", "PGammaL(2,9)", "A10", "S10",
    ]
    assert [str(g) for g in jones_candidates(15, 3)] == ["A15", "S15"]
    with pytest.raises(BadK):
        jones_candidates(10, 9)


def test_triply_transitive_examples():
    assert [str(g) for g in triply_transitive_candidates(22)] == [
        "M22", "AutM22", "A22", "S22",
    ]
    assert [str(g) for g in triply_transitive_candidates(12)] == [
        "PSL(2,11)", "PGL(2,11)", "M11@12", "M12", "A12", "S12",
    ]
    assert [str(g) for g in triply_transitive_candidates(7)] == ["A7", "S7"]


def test_contains_all_types_examples():
    # a 2x9 cycle type is an odd permutation
    assert not contains_all_types(GroupName("A", (11,)), [(2, 9)])
    assert contains_all_types(GroupName("S", (11,)), [(2, 9)])
    assert contains_all_types(parse_group_name("M11@11"), [(1, 2, 8)])
    assert not contains_all_types(parse_group_name("M11@11"), [(2, 9)])
    with pytest.raises(DegreeMismatch):
        contains_all_types(GroupName("A", (11,)), [(2, 2)])


def test_type_display():
    assert type_display((1, 1, 1, 2, 2, 4)) == (2, 2, 4)
    assert type_display((1,) * 5) == ()


def test_group_name_degrees_and_orders():
    assert parse_group_name("PGL(2,5)").degree() == 6
    assert parse_group_name("AGL(1,8)").degree() == 8
    assert parse_group_name("M11@12").degree() == 12
    assert group_order(parse_group_name("PGL(2,9)")) == 720
    assert group_order(parse_group_name("PGammaL(2,9)")) == 1440
    assert group_order(parse_group_name("S6")) == 720
    assert group_order(parse_group_name("PSL(2,9)")) == 360


def test_pgl_orders_and_transitivity_family():
    for q in (4, 5, 7, 8, 9, 11):
        handle = builtin_group(GroupName("PGL", (2, q)))
        assert handle.order == (q + 1) * q * (q - 1)
        assert transitivity_degree(handle, 4) == 3


def test_membership_accepts_random_generator_products():
    """10^4 random words in the generators sift to members."""
    rng = random.Random(31337)
    handles = [
        builtin_group(parse_group_name(lbl))
        for lbl in ("M11@11", "PGL(2,9)", "AGL(3,2)")
    ]
    for handle in handles:
        gens = handle.gens
        for _ in range(3400):
            word = identity(handle.degree)
            for _ in range(rng.randrange(1, 6)):
                g = rng.choice(gens)
                word = tuple(word[x] for x in g)
            assert handle.contains(word)


def test_data_file_env_override(tmp_path):
    """A broken data-file path surfaces as MissingDataFile (checked in a
    subprocess so the in-process caches stay clean)."""
    import os
    import subprocess
    import sys

    env = dict(os.environ, TRIGAL_MATHIEU_DATA=str(tmp_path / "nope.txt"))
    proc = subprocess.run(
        [
            sys.executable,
            "-c",
            "from trigal.permgrp import builtin_group, parse_group_name\n"
            "from trigal.errors import MissingDataFile\n"
            "try:\n"
            "    builtin_group(parse_group_name('M12'))\n"
            "except MissingDataFile:\n"
            "    print('missing-ok')\n",
        ],
        capture_output=True,
        text=True,
        env=env,
    )
    assert proc.stdout.strip() == "missing-ok", proc.stderr
