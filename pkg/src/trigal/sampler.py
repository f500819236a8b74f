"""Frobenius-specialization sampling and the reference-table reproductions.

Specializing x^n + a*x^m + b at random (a, b) over a finite field and
factoring gives the cycle type of a Frobenius element of the arithmetic
Galois group, as long as the specialization stays squarefree of full degree.
This module collects those cycle-type statistics, tests them for consistency
against candidate groups, and reproduces the two published reference tables
(trinomial factorization patterns, Mathieu cycle types) bit for bit.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from . import permgrp
from .errors import (
    BadExponents,
    CharacteristicMismatch,
    EmptyStats,
    InvalidShape,
)
from .classify import TrinomialShape
from .gf import FieldSpec, parse_element
from .permgrp import (
    CycleType,
    GroupName,
    contains_all_types,
    group_order,
    jones_candidates,
    triply_transitive_candidates,
    type_display,
)
from .upoly import Poly, factor_pattern, is_squarefree

# -- deterministic splittable per-trial randomness ---------------------------

_MASK = (1 << 64) - 1
_PHI = 0x9E3779B97F4A7C15


def _mix(z: int) -> int:
    """splitmix64 finalizer."""
    z &= _MASK
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & _MASK
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & _MASK
    return z ^ (z >> 31)


def trial_values(seed: int, trial: int, count: int) -> list[int]:
    """The per-trial 64-bit draws: a splitmix64 stream whose state is the
    64-bit mix of (seed, trial).  Trials are independent of each other and
    of evaluation order."""
    state = _mix((seed + (trial + 1) * _PHI) & _MASK)
    out = []
    for _ in range(count):
        state = (state + _PHI) & _MASK
        out.append(_mix(state))
    return out


# -- pattern statistics -------------------------------------------------------

@dataclass(frozen=True)
class PatternStats:
    """Histogram of observed Frobenius cycle types for one sampling run."""

    degree: int
    field: FieldSpec
    trials: int
    accepted: int
    discarded: int
    histogram: dict[CycleType, int]
    seed: int

    def to_json_dict(self) -> dict:
        return {
            "degree": self.degree,
            "field": self.field.spec_string(),
            "seed": self.seed,
            "trials": self.trials,
            "accepted": self.accepted,
            "patterns": [
                {"type": list(t), "count": self.histogram[t]}
                for t in sorted(self.histogram)
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


@lru_cache(maxsize=65536)
def _trinomial_pattern(field: FieldSpec, n: int, m: int, a: int, b: int):
    """Cycle type of the (a, b) specialization, or None if rejected.

    Cached: over the small sampling fields the same (a, b) recurs constantly
    and the pattern is a pure function of the inputs.
    """
    f = Poly.trinomial(field, n, m, a, b)
    if not is_squarefree(f):
        return None
    return tuple(factor_pattern(f).degrees)


def sample_trinomial(
    n: int,
    m: int,
    field: FieldSpec,
    trials: int,
    seed: int = 0,
    p: int | None = None,
) -> PatternStats:
    """Factor x^n + a*x^m + b at per-trial uniform (a, b); keep the degree
    multiset of each squarefree specialization as a Frobenius cycle type."""
    if not (0 < m < n) or gcd(n, m) != 1:
        raise InvalidShape(f"need 0 < m < n coprime, got ({n}, {m})")
    if p is not None and field.p != p:
        raise CharacteristicMismatch(f"field has characteristic {field.p}, not {p}")
    hist: dict[CycleType, int] = {}
    accepted = discarded = 0
    q = field.q
    for i in range(trials):
        za, zb = trial_values(seed, i, 2)
        pattern = _trinomial_pattern(field, n, m, za % q, zb % q)
        if pattern is None:
            discarded += 1
        else:
            accepted += 1
            hist[pattern] = hist.get(pattern, 0) + 1
    return PatternStats(
        degree=n, field=field, trials=trials,
        accepted=accepted, discarded=discarded, histogram=hist, seed=seed,
    )


def sample_sectional(
    exponents: tuple[int, ...],
    field: FieldSpec,
    trials: int,
    seed: int = 0,
) -> PatternStats:
    """Hyperplane-section sampling for the monomial curve t -> (t^e1, ..., t^er):
    draw all r+1 coefficients of c0 + sum_i ci*t^ei, keep squarefree full-degree
    outcomes.  For exponents (m, n) this is trinomial sampling up to the
    coefficient-naming convention (the leading coefficient is drawn too)."""
    exps = tuple(int(e) for e in exponents)
    if len(exps) < 2 or any(e <= 0 for e in exps) or list(exps) != sorted(set(exps)):
        raise BadExponents(f"need strictly increasing positive exponents, got {exps}")
    n = exps[-1]
    q = field.q
    hist: dict[CycleType, int] = {}
    accepted = discarded = 0
    for i in range(trials):
        draws = trial_values(seed, i, len(exps) + 1)
        coeffs = [z % q for z in draws]
        if coeffs[-1] == 0:  # degree drop
            discarded += 1
            continue
        pattern = _sectional_pattern(field, exps, tuple(coeffs))
        if pattern is None:
            discarded += 1
        else:
            accepted += 1
            hist[pattern] = hist.get(pattern, 0) + 1
    return PatternStats(
        degree=n, field=field, trials=trials,
        accepted=accepted, discarded=discarded, histogram=hist, seed=seed,
    )


@lru_cache(maxsize=65536)
def _sectional_pattern(field: FieldSpec, exps: tuple[int, ...], coeffs: tuple[int, ...]):
    arr = [0] * (exps[-1] + 1)
    arr[0] = coeffs[0]
    for e, c in zip(exps, coeffs[1:]):
        arr[e] = field.add(arr[e], c)
    f = Poly(field, arr)
    if f.degree != exps[-1] or not is_squarefree(f):
        return None
    return tuple(factor_pattern(f).degrees)


# -- consistency identification -----------------------------------------------

@dataclass(frozen=True)
class ConsistencyReport:
    """Which catalogued groups contain every observed cycle type.

    Observed Frobenius elements live in the arithmetic Galois group, which
    contains the geometric one; the minimal consistent candidate therefore
    identifies a group containing all observed classes, not a proven equality.
    """

    candidates: tuple[GroupName, ...]
    consistent: tuple[GroupName, ...]
    minimal: GroupName
    violations: tuple[tuple[GroupName, CycleType], ...]

    def to_json_dict(self) -> dict:
        return {
            "candidates": [str(c) for c in self.candidates],
            "consistent": [str(c) for c in self.consistent],
            "minimal": str(self.minimal),
            "violations": [
                {"candidate": str(c), "type": list(t)} for c, t in self.violations
            ],
            "note": "minimal group containing all observed Frobenius classes; "
            "observed elements lie in the arithmetic group, which contains "
            "the geometric one",
        }


def candidate_pool(n: int) -> list[GroupName]:
    """Alternating/symmetric plus every cycle-lookup and triple-transitivity
    candidate of degree n, deduplicated, sorted by order then label."""
    names: dict[str, GroupName] = {}
    pool = [permgrp.name_alternating(n), permgrp.name_symmetric(n)]
    for k in (0, 1, 2):
        if 0 <= k <= n - 2:
            pool.extend(jones_candidates(n, k))
    if n >= 4:
        pool.extend(triply_transitive_candidates(n))
    for name in pool:
        if name.degree() == n:
            names.setdefault(str(name), name)
    return sorted(names.values(), key=lambda g: (group_order(g), str(g)))


def identify_group(
    stats: PatternStats, shape: TrinomialShape | None = None
) -> ConsistencyReport:
    """Test every candidate group against the observed cycle types and report
    the smallest consistent one (ties broken lexicographically by label)."""
    if stats.accepted == 0:
        raise EmptyStats("no accepted specializations")
    if shape is not None:
        if shape.n != stats.degree:
            raise InvalidShape("shape degree disagrees with the statistics")
        if shape.p != stats.field.p:
            raise CharacteristicMismatch(
                f"shape characteristic {shape.p} vs field {stats.field.p}"
            )
    observed = sorted(stats.histogram)
    candidates = candidate_pool(stats.degree)
    consistent = []
    violations = []
    for cand in candidates:
        bad = None
        if cand.family == "S":
            pass
        elif cand.family == "A":
            bad = next(
                (t for t in observed if not permgrp.type_parity_even(t)), None
            )
        else:
            tset = permgrp._builtin_type_set(cand)
            bad = next((t for t in observed if t not in tset), None)
        if bad is None:
            consistent.append(cand)
        else:
            violations.append((cand, bad))
    minimal = consistent[0]  # pool is sorted by (order, label)
    return ConsistencyReport(
        candidates=tuple(candidates),
        consistent=tuple(consistent),
        minimal=minimal,
        violations=tuple(violations),
    )


# -- reference tables ---------------------------------------------------------

# Factorization patterns of selected trinomials over small fields: rows are
# (n, m, a, b, field spec, expected degree multiset); the coefficient "c"
# denotes the power-basis generator of the extension field.
TRINOMIAL_FACTOR_TABLE: tuple[tuple[int, int, str, str, str, tuple[int, ...]], ...] = (
    (11, 1, "1", "1", "2", (2, 9)),
    (11, 1, "-1", "-1", "5", (1, 3, 7)),
    (11, 3, "1", "1", "2", (5, 6)),
    (11, 4, "1", "1", "7", (1, 1, 2, 7)),
    (11, 5, "1", "1", "3", (1, 3, 7)),
    (11, 5, "1", "1", "2", (3, 8)),
    (23, 1, "1", "1", "2", (2, 8, 13)),
    (23, 1, "1", "1", "11", (1, 2, 5, 15)),
    (23, 2, "1", "1", "3", (1, 2, 20)),
    (23, 2, "1", "1", "7", (7, 16)),
    (23, 3, "1", "1", "5", (1, 22)),
    (23, 4, "1", "1", "19", (1, 1, 1, 4, 7, 9)),
    (23, 5, "1", "1", "3", (1, 2, 5, 7, 8)),
    (23, 5, "c", "1", "2^2", (1, 9, 13)),
    (23, 6, "1", "1", "17", (2, 3, 9, 9)),
    (23, 7, "1", "1", "2", (2, 10, 11)),
    (23, 8, "1", "1", "3", (1, 3, 19)),
    (23, 8, "1", "1", "5", (1, 4, 5, 13)),
    (23, 9, "1", "c", "2^2", (1, 2, 20)),
    (23, 9, "1", "1", "7", (4, 19)),
    (23, 10, "1", "1", "13", (1, 1, 4, 6, 11)),
    (23, 11, "1", "1", "2", (5, 6, 12)),
    (23, 11, "1", "1", "3", (1, 3, 19)),
)

# Cycle types of the Mathieu groups in their multiply transitive actions,
# 1-parts and the identity dropped.  The M24 entry (3, 21) corrects the
# published "(2, 21)": 2 + 21 = 23 would force a fixed point, and an element
# of type (1, 2, 21) has order 42, which M24 does not contain.
MATHIEU_CYCLE_TYPES: dict[str, frozenset[CycleType]] = {
    "M11@11": frozenset({
        (2, 2, 2, 2), (3, 3, 3), (4, 4), (5, 5), (2, 3, 6), (2, 8), (11,),
    }),
    "M11@12": frozenset({
        (2, 2, 2, 2), (3, 3, 3), (2, 2, 4, 4), (5, 5), (2, 3, 6), (4, 8), (11,),
    }),
    "M12": frozenset({
        (2,) * 6, (2,) * 4, (3, 3, 3), (3, 3, 3, 3), (2, 2, 4, 4), (4, 4),
        (5, 5), (6, 6), (2, 3, 6), (4, 8), (2, 8), (2, 10), (11,),
    }),
    "M22": frozenset({
        (2,) * 8, (3,) * 6, (2, 2, 4, 4, 4, 4), (5, 5, 5, 5),
        (2, 2, 3, 3, 6, 6), (7, 7, 7), (2, 4, 8, 8), (11, 11),
    }),
    "AutM22": frozenset({
        (2,) * 7, (2,) * 8, (2,) * 11, (2, 4, 4, 4, 4), (2, 2, 2, 4, 4, 4, 4),
        (3,) * 6, (2, 2, 4, 4, 4, 4), (5, 5, 5, 5), (2, 3, 3, 6, 6),
        (2, 2, 3, 3, 6, 6), (7, 7, 7), (2, 4, 8, 8), (4, 8, 8), (2, 10, 10),
        (11, 11), (4, 6, 12), (7, 14),
    }),
    "M23": frozenset({
        (2,) * 8, (3,) * 6, (2, 2, 4, 4, 4, 4), (5, 5, 5, 5),
        (2, 2, 3, 3, 6, 6), (7, 7, 7), (2, 4, 8, 8), (11, 11),
        (2, 7, 14), (3, 5, 15), (23,),
    }),
    "M24": frozenset({
        (2,) * 8, (2,) * 12, (3,) * 6, (3,) * 8, (2, 2, 2, 2, 4, 4, 4, 4),
        (2, 2, 4, 4, 4, 4), (4,) * 6, (5, 5, 5, 5), (2, 2, 3, 3, 6, 6),
        (6, 6, 6, 6), (7, 7, 7), (2, 4, 8, 8), (2, 2, 10, 10), (11, 11),
        (2, 4, 6, 12), (12, 12), (2, 7, 14), (3, 5, 15), (3, 21), (23,),
    }),
}

_M24_SOURCE_NOTE = (
    'published table prints "(2,21)" in the M24 row; 2+21 = 23 forces a '
    "fixed point and lcm 42, impossible in M24, so the entry is compared "
    "against the realizable (3,21)"
)


@dataclass(frozen=True)
class TableRow:
    label: str
    expected: object
    computed: object
    match: bool
    note: str = ""


def reproduce_table2(seed: int = 0) -> list[TableRow]:
    """Factor each reference trinomial over its stated field and compare the
    degree multiset with the published one; mismatches are reported, not
    raised."""
    from .gf import parse_field

    rows = []
    for n, m, a_s, b_s, fspec, expected in TRINOMIAL_FACTOR_TABLE:
        field = parse_field(fspec)
        a = parse_element(field, a_s)
        b = parse_element(field, b_s)
        f = Poly.trinomial(field, n, m, a.code, b.code)
        computed = tuple(factor_pattern(f, seed).degrees)
        label = _trinomial_label(n, m, a_s, b_s, fspec)
        rows.append(TableRow(label, expected, computed, computed == expected))
    return rows


def _trinomial_label(n: int, m: int, a_s: str, b_s: str, fspec: str) -> str:
    mid = "x" if m == 1 else f"x^{m}"
    a_part = mid if a_s == "1" else (f"-{mid}" if a_s == "-1" else f"{a_s}*{mid}")
    const = b_s if not b_s.startswith("-") else b_s
    sign = "+" if not a_part.startswith("-") else ""
    csign = "+" if not const.startswith("-") else ""
    return f"x^{n}{sign}{a_part}{csign}{const} over GF({fspec})"


def reproduce_table1() -> list[TableRow]:
    """Enumerate each Mathieu group's cycle types and compare with the
    published table after dropping 1-parts and the identity class."""
    rows = []
    for label in ("M11@11", "M11@12", "M12", "M22", "AutM22", "M23", "M24"):
        types = permgrp._builtin_type_set(permgrp.name_mathieu(label))
        computed = frozenset(type_display(t) for t in types) - {()}
        expected = MATHIEU_CYCLE_TYPES[label]
        note = _M24_SOURCE_NOTE if label == "M24" else ""
        rows.append(
            TableRow(label, expected, computed, computed == expected, note)
        )
    return rows
