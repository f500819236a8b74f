"""Permutation groups of degree <= 30.

Provides raw permutation machinery (composition, cycle types), a
deterministic Schreier-Sims base-and-strong-generating-set construction with
exact orders and membership tests, streaming enumeration of the full
cycle-type set, and the catalogue of named groups the classification
lookups draw from: symmetric, alternating, cyclic, affine and projective
(semi)linear groups built from explicit matrices, and the Mathieu groups
loaded from a bundled generator data file.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod

import numpy as np

from .errors import (
    BadK,
    BudgetExceeded,
    DegreeMismatch,
    DegreeTooLarge,
    MissingDataFile,
    UnknownName,
)
from .gf import field_make, is_prime

MAX_DEGREE = 30
ORDER_BUDGET = 250_000_000  # streaming enumeration cap

Permutation = tuple[int, ...]  # images of 0..n-1
CycleType = tuple[int, ...]  # ascending partition of n, fixed points included


def identity(n: int) -> Permutation:
    return tuple(range(n))


def compose(g: Permutation, h: Permutation) -> Permutation:
    """g after h: (g*h)(x) = g(h(x))."""
    return tuple(g[x] for x in h)


def inverse(g: Permutation) -> Permutation:
    inv = [0] * len(g)
    for i, j in enumerate(g):
        inv[j] = i
    return tuple(inv)


def perm_from_cycles(n: int, cycles: list[list[int]]) -> Permutation:
    img = list(range(n))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:]):
            img[a] = b
        if cyc:
            img[cyc[-1]] = cyc[0]
    return tuple(img)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, n: int) -> Permutation:
    """Parse '(0,1,2)(3,4)' over 0-based points into a permutation."""
    squeezed = text.replace(" ", "")
    if not re.fullmatch(r"(\((\d+(,\d+)*)?\))+", squeezed):
        raise ValueError(f"cannot parse cycles {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(squeezed):
        if body:
            cycles.append([int(t) for t in body.split(",")])
    pts = [p for c in cycles for p in c]
    if len(pts) != len(set(pts)):
        raise ValueError(f"repeated point in {text!r}")
    if any(p < 0 or p >= n for p in pts):
        raise ValueError(f"point out of range in {text!r}")
    return perm_from_cycles(n, cycles)


def format_cycles(g: Permutation) -> str:
    out = []
    seen = [False] * len(g)
    for i in range(len(g)):
        if seen[i] or g[i] == i:
            seen[i] = True
            continue
        cyc = [i]
        seen[i] = True
        j = g[i]
        while j != i:
            cyc.append(j)
            seen[j] = True
            j = g[j]
        out.append("(" + ",".join(map(str, cyc)) + ")")
    return "".join(out) or "()"


def cycle_type(g: Permutation) -> CycleType:
    """Ascending partition of n given by the orbit lengths of g."""
    seen = [False] * len(g)
    parts = []
    for i in range(len(g)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = g[j]
            length += 1
        parts.append(length)
    return tuple(sorted(parts))


def type_display(t: CycleType) -> CycleType:
    """Drop 1-parts: the display convention of cycle-type tables."""
    return tuple(p for p in t if p > 1)


def type_parity_even(t: CycleType) -> bool:
    return sum(p - 1 for p in t) % 2 == 0


# --------------------------------------------------------------------------
# Schreier-Sims

class _Level:
    __slots__ = ("beta", "gens", "transversal")

    def __init__(self, beta: int, n: int):
        self.beta = beta
        self.gens: list[Permutation] = []  # strong gens installed at this level
        self.transversal: dict[int, Permutation] = {beta: identity(n)}

    def rebuild(self, acting_gens: list[Permutation], n: int) -> None:
        """Recompute the orbit/transversal of beta under the given generators."""
        tr = {self.beta: identity(n)}
        queue = [self.beta]
        while queue:
            a = queue.pop(0)
            for g in acting_gens:
                b = g[a]
                if b not in tr:
                    tr[b] = compose(g, tr[a])
                    queue.append(b)
        self.transversal = tr


class GroupHandle:
    """A permutation group with a base and strong generating set.

    Immutable after construction: order, membership and enumeration queries
    are all answered from the stabilizer chain.
    """

    def __init__(self, gens: list[Permutation], base_hint: tuple[int, ...] = ()):
        if not gens:
            raise ValueError("need at least one generator (possibly identity)")
        n = len(gens[0])
        if any(len(g) != n for g in gens):
            raise DegreeMismatch("generators of different degrees")
        if n > MAX_DEGREE:
            raise DegreeTooLarge(f"degree {n} exceeds cap {MAX_DEGREE}")
        for g in gens:
            if sorted(g) != list(range(n)):
                raise ValueError(f"not a permutation: {g}")
        self.degree = n
        self.gens = [g for g in gens if g != identity(n)]
        self._levels: list[_Level] = []
        self._base_hint = tuple(base_hint)
        self._build()

    # construction ---------------------------------------------------------
    #
    # Standard deterministic Schreier-Sims: level i holds the strong
    # generators that fix the first i base points but not necessarily the
    # i-th, the acting set of level i is the union of the buckets at levels
    # >= i, and closure is established bottom-up, dropping back down whenever
    # a Schreier generator fails to sift to the identity.

    def _gens_from(self, i: int) -> list[Permutation]:
        return [g for lv in self._levels[i:] for g in lv.gens]

    def _new_level(self, g: Permutation) -> None:
        used = {lv.beta for lv in self._levels}
        for b in self._base_hint:
            if b not in used and g[b] != b:
                beta = b
                break
        else:
            beta = min(i for i in range(self.degree) if g[i] != i)
        self._levels.append(_Level(beta, self.degree))

    def _place(self, g: Permutation) -> int:
        """Bucket g at the deepest level whose base prefix it fixes."""
        i = 0
        while i < len(self._levels) and g[self._levels[i].beta] == self._levels[i].beta:
            i += 1
        if i == len(self._levels):
            self._new_level(g)
        self._levels[i].gens.append(g)
        return i

    def _strip(self, g: Permutation, start: int = 0) -> tuple[Permutation, int]:
        """Sift g through levels >= start; return (residue, stop level)."""
        for i in range(start, len(self._levels)):
            lv = self._levels[i]
            u = lv.transversal.get(g[lv.beta])
            if u is None:
                return g, i
            g = compose(inverse(u), g)
        return g, len(self._levels)

    def _build(self) -> None:
        ident = identity(self.degree)
        for b in self._base_hint:
            self._levels.append(_Level(b, self.degree))
        for g in self.gens:
            if g != ident:
                self._place(g)
        i = len(self._levels) - 1
        while i >= 0:
            lv = self._levels[i]
            acting = self._gens_from(i)
            lv.rebuild(acting, self.degree)
            dropped = False
            for a in sorted(lv.transversal):
                ua = lv.transversal[a]
                for s in acting:
                    ub = lv.transversal[s[a]]
                    schreier = compose(inverse(ub), compose(s, ua))
                    if schreier == ident:
                        continue
                    residue, j = self._strip(schreier, i + 1)
                    if residue != ident:
                        if j == len(self._levels):
                            self._new_level(residue)
                        self._levels[j].gens.append(residue)
                        i = j  # reprocess from the level that changed
                        dropped = True
                        break
                if dropped:
                    break
            if not dropped:
                i -= 1
        # trailing hint levels that stayed trivial are redundant
        while self._levels and not self._levels[-1].gens and (
            len(self._levels[-1].transversal) == 1
        ):
            self._levels.pop()

    # queries ----------------------------------------------------------------

    @property
    def base(self) -> tuple[int, ...]:
        return tuple(lv.beta for lv in self._levels)

    @property
    def order(self) -> int:
        return prod(len(lv.transversal) for lv in self._levels)

    def orbit_sizes(self) -> tuple[int, ...]:
        return tuple(len(lv.transversal) for lv in self._levels)

    def contains(self, g: Permutation) -> bool:
        if len(g) != self.degree:
            raise DegreeMismatch("degree mismatch in membership test")
        residue, _ = self._strip(g)
        return residue == identity(self.degree)

    def random_element(self, rng) -> Permutation:
        """Uniformly random element: one transversal pick per level."""
        g = identity(self.degree)
        for lv in self._levels:
            pick = rng.choice(sorted(lv.transversal))
            g = compose(g, lv.transversal[pick])
        return g

    def stabilizer_of_prefix(self, points: tuple[int, ...]) -> "GroupHandle":
        """Pointwise stabilizer of the given points, as a new handle.

        With the base forced to start with those points, the strong
        generators at the deeper levels are exactly a generating set.
        """
        rebased = GroupHandle(self.gens or [identity(self.degree)], base_hint=points)
        sub = [g for lv in rebased._levels[len(points):] for g in lv.gens]
        return GroupHandle(sub or [identity(self.degree)])

    def element_mapping(self, src: tuple[int, ...], dst: tuple[int, ...]):
        """Some group element carrying the tuple src pointwise to dst, or None."""
        if len(src) != len(dst):
            raise ValueError("tuple length mismatch")
        rebased = GroupHandle(self.gens or [identity(self.degree)], base_hint=tuple(src))
        g = identity(self.degree)
        for i, (s, d) in enumerate(zip(src, dst)):
            if i < len(rebased._levels) and rebased._levels[i].beta == s:
                # choose a coset representative sending s where g^-1 needs it
                u = rebased._levels[i].transversal.get(inverse(g)[d])
                if u is None:
                    return None
                g = compose(g, u)
            elif g[s] != d:
                return None
        for s, d in zip(src, dst):
            if g[s] != d:
                return None
        return g


def group_generate(gens: list[Permutation]) -> GroupHandle:
    """Schreier-Sims closure of the given generators."""
    return GroupHandle(gens)


# --------------------------------------------------------------------------
# Streaming cycle-type enumeration

def _transversal_arrays(handle: GroupHandle) -> list[np.ndarray]:
    out = []
    for lv in handle._levels:
        perms = [lv.transversal[a] for a in sorted(lv.transversal)]
        out.append(np.array(perms, dtype=np.uint8))
    return out


def _compose_all(arrays: list[np.ndarray], n: int) -> np.ndarray:
    """All products u_0 * u_1 * ... (one factor per array), as a matrix."""
    acc = np.arange(n, dtype=np.uint8)[None, :]
    for arr in arrays:
        # (A, n) x (B, n) -> (A*B, n): row a composed with row b is a[b]
        acc = acc[:, arr].reshape(-1, n)
    return acc


def _cycle_count_rows(perms: np.ndarray) -> np.ndarray:
    """Row-wise cycle-length census: out[j, L] = #points in cycles of length L.

    Works on globally-indexed int32 copies so each power step is one flat
    gather regardless of the number of rows.
    """
    m, n = perms.shape
    rowoff = (n * np.arange(m, dtype=np.int32))[:, None]
    glob = perms.astype(np.int32) + rowoff  # g(x), globally indexed
    flat = glob.ravel()
    idx = np.arange(m * n, dtype=np.int32).reshape(m, n)
    power = glob
    length = np.zeros((m, n), dtype=np.uint8)
    for k in range(1, n + 1):
        closed = (power == idx) & (length == 0)
        length[closed] = k
        if k < n:
            power = flat[power]
    counts_flat = np.bincount(
        (length.astype(np.int32) + (n + 1) * np.arange(m, dtype=np.int32)[:, None]).ravel(),
        minlength=m * (n + 1),
    )
    return counts_flat.reshape(m, n + 1)


def _composed_count_rows_numpy(outer_row: np.ndarray, inner: np.ndarray) -> np.ndarray:
    batch = outer_row[inner.astype(np.intp)]
    return _cycle_count_rows(batch).astype(np.uint8)


_numba_kernel = None


def _get_numba_kernel():
    """JIT-compiled fused kernel: census of outer_row composed with every
    inner row, without materialising the composed batch.  Falls back to the
    numpy path when numba is unavailable."""
    global _numba_kernel
    if _numba_kernel is not None:
        return _numba_kernel
    try:
        import numba
    except ImportError:  # pragma: no cover - numba is a declared dependency
        _numba_kernel = False
        return _numba_kernel

    @numba.njit(nogil=True)
    def kernel(a, inner, out):  # out: (m, n+1) uint8, zeroed by caller
        m, n = inner.shape
        for j in range(m):
            seen = np.zeros(n, dtype=np.uint8)
            for s in range(n):
                if seen[s]:
                    continue
                ln = 0
                x = s
                while not seen[x]:
                    seen[x] = 1
                    x = a[inner[j, x]]
                    ln += 1
                out[j, ln] += ln

    _numba_kernel = kernel
    return _numba_kernel


def _counts_to_type(row: np.ndarray) -> CycleType:
    parts = []
    for length in range(1, len(row)):
        c = int(row[length])
        if c:
            parts.extend([length] * (c // length))
    return tuple(sorted(parts))


def cycle_type_set(handle: GroupHandle) -> frozenset[CycleType]:
    """Exact set of cycle types over all group elements, streamed through the
    BSGS transversal product without storing the group; identity included."""
    if handle.order > ORDER_BUDGET:
        raise BudgetExceeded(
            f"order {handle.order} exceeds enumeration budget {ORDER_BUDGET}"
        )
    n = handle.degree
    arrays = _transversal_arrays(handle)
    if not arrays:
        return frozenset({cycle_type(identity(n))})
    # split the chain so the streamed inner block stays a convenient size
    split = len(arrays)
    inner = 1
    while split > 0 and inner * len(arrays[split - 1]) <= 1_000_000:
        split -= 1
        inner *= len(arrays[split])
    outer = _compose_all(arrays[:split], n)
    inner_block = _compose_all(arrays[split:], n)
    kernel = _get_numba_kernel()
    seen: set[bytes] = set()
    types: set[CycleType] = set()
    void_w = np.dtype((np.void, n + 1))
    counts = np.zeros((len(inner_block), n + 1), dtype=np.uint8)
    for a in outer:
        if kernel:
            counts[:] = 0
            kernel(a, inner_block, counts)
        else:
            counts = _composed_count_rows_numpy(a, inner_block)
        rows = np.unique(np.ascontiguousarray(counts).view(void_w).ravel())
        for raw in rows:
            key = bytes(raw)
            if key not in seen:
                seen.add(key)
                types.add(_counts_to_type(np.frombuffer(key, dtype=np.uint8)))
    return frozenset(types)


# --------------------------------------------------------------------------
# Transitivity and primitivity

def transitivity_degree(handle: GroupHandle, max_k: int = 5) -> int:
    """Largest k <= max_k acting transitively on ordered k-tuples, read off a
    stabilizer chain whose base is forced to 0, 1, ..., max_k-1."""
    if max_k > 5:
        raise ValueError("max_k capped at 5")
    n = handle.degree
    rebased = GroupHandle(
        handle.gens or [identity(n)], base_hint=tuple(range(min(max_k, n)))
    )
    sizes = dict(zip(rebased.base, rebased.orbit_sizes()))
    k = 0
    while k < max_k and k < n and sizes.get(k, 1) == n - k:
        k += 1
    return k


def is_primitive(handle: GroupHandle) -> bool:
    """True iff transitive with no nontrivial block system (minimal-block
    search seeded by every pair {0, beta})."""
    n = handle.degree
    if n == 1:
        return True
    rebased = GroupHandle(handle.gens or [identity(n)], base_hint=(0,))
    if not rebased._levels or len(rebased._levels[0].transversal) != n:
        return False  # not transitive
    gens = handle.gens
    for beta in range(1, n):
        # union-find minimal block containing {0, beta}
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x: int, y: int) -> bool:
            rx, ry = find(x), find(y)
            if rx == ry:
                return False
            parent[ry] = rx
            return True

        union(0, beta)
        queue = [(0, beta)]
        classes = n - 1
        while queue:
            x, y = queue.pop()
            for g in gens:
                if union(g[x], g[y]):
                    classes -= 1
                    queue.append((g[x], g[y]))
        if 1 < classes < n:
            return False
    return True


# --------------------------------------------------------------------------
# Group names

_MATHIEU_LABELS = ("M11@11", "M11@12", "M12", "M22", "AutM22", "M23", "M24")

# PSL(2,11) also has an exceptional 2-transitive action on the 11 cosets of
# an A5 subgroup (the biplane action); it needs its own label because the
# natural action lives on 12 points.
_PSL211_LABEL = "PSL(2,11)@11"

_MATHIEU_DEGREE = {
    "M11@11": 11,
    "M11@12": 12,
    "M12": 12,
    "M22": 22,
    "AutM22": 22,
    "M23": 23,
    "M24": 24,
}

_MATHIEU_ORDER = {
    "M11@11": 7920,
    "M11@12": 7920,
    "M12": 95040,
    "M22": 443520,
    "AutM22": 887040,
    "M23": 10200960,
    "M24": 244823040,
}


@dataclass(frozen=True, order=True)
class GroupName:
    """A labelled group: family plus parameters, e.g. PGL(2, 5) or M24.

    Families: S, A, C (degree parameter n); AGL, AGammaL, PGL, PSL, PGammaL
    (parameters d, q); and the Mathieu labels M11@11, M11@12, M12, M22,
    AutM22, M23, M24 (no parameters).
    """

    family: str
    params: tuple[int, ...] = ()

    def __str__(self) -> str:
        if self.family in ("S", "A", "C"):
            return f"{self.family}{self.params[0]}"
        if self.family in _MATHIEU_LABELS or self.family == _PSL211_LABEL:
            return self.family
        d, q = self.params
        return f"{self.family}({d},{q})"

    @property
    def label(self) -> str:
        return str(self)

    def degree(self) -> int:
        f = self.family
        if f in ("S", "A", "C"):
            return self.params[0]
        if f in _MATHIEU_LABELS:
            return _MATHIEU_DEGREE[f]
        if f == _PSL211_LABEL:
            return 11
        d, q = self.params
        if f in ("AGL", "AGammaL"):
            return q**d
        if f in ("PGL", "PSL", "PGammaL"):
            return (q**d - 1) // (q - 1)
        raise UnknownName(f"unknown family {f!r}")


def name_symmetric(n: int) -> GroupName:
    return GroupName("S", (n,))


def name_alternating(n: int) -> GroupName:
    return GroupName("A", (n,))


def name_cyclic(n: int) -> GroupName:
    return GroupName("C", (n,))


def name_mathieu(label: str) -> GroupName:
    if label not in _MATHIEU_LABELS:
        raise UnknownName(f"not a Mathieu label: {label!r}")
    return GroupName(label)


_NAME_RE = re.compile(r"^(AGL|AGammaL|PGL|PSL|PGammaL)\((\d+),(\d+)\)$")


def parse_group_name(text: str) -> GroupName:
    text = text.strip()
    if text in _MATHIEU_LABELS:
        return GroupName(text)
    if text.replace(" ", "") == _PSL211_LABEL:
        return GroupName(_PSL211_LABEL)
    m = re.match(r"^([SAC])(\d+)$", text)
    if m:
        return GroupName(m.group(1), (int(m.group(2)),))
    m = _NAME_RE.match(text.replace(" ", ""))
    if m:
        return GroupName(m.group(1), (int(m.group(2)), int(m.group(3))))
    raise UnknownName(f"cannot parse group name {text!r}")


# --------------------------------------------------------------------------
# Built-in constructions

def _prime_power(q: int) -> tuple[int, int] | None:
    """(p, k) with q = p^k, or None."""
    if q < 2:
        return None
    for p in range(2, q + 1):
        if is_prime(p) and q % p == 0:
            k = 0
            m = q
            while m % p == 0:
                m //= p
                k += 1
            return (p, k) if m == 1 else None
    return None


def _projective_points(field, d: int) -> list[tuple[int, ...]]:
    """Canonical representatives (last nonzero coordinate = 1) of the
    projective space of lines in field^d, in lexicographic code order."""
    q = field.q
    pts = []
    for height in range(d):
        # representatives with trailing coordinate pattern (..., 1, 0, ..., 0)
        free = height
        for code in range(q**free):
            vec = [(code // q**i) % q for i in range(free)]
            vec.append(1)
            vec.extend([0] * (d - height - 1))
            pts.append(tuple(vec))
    return sorted(pts)


def _normalize_projective(field, vec: tuple[int, ...]) -> tuple[int, ...]:
    last = max(i for i, c in enumerate(vec) if c)
    inv = field.inv(vec[last])
    return tuple(field.mul(inv, c) for c in vec)


def _mat_apply(field, mat, vec):
    return tuple(
        _dotrow(field, row, vec) for row in mat
    )


def _dotrow(field, row, vec) -> int:
    acc = 0
    for a, b in zip(row, vec):
        acc = field.add(acc, field.mul(a, b))
    return acc


def _perm_from_point_map(points, fn) -> Permutation:
    index = {pt: i for i, pt in enumerate(points)}
    return tuple(index[fn(pt)] for pt in points)


def _gl_generator_matrices(field, d: int) -> tuple[list, list]:
    """(SL generators, extra GL generator).

    SL_d(q) is generated by the transvections I + xi^j*E01 (one per basis
    power of the multiplicative generator), the opposite transvection
    I + E10, and a determinant-one signed coordinate cycle; adding
    diag(xi, 1, ..., 1) extends to GL_d(q).  Orders are verified by tests.
    """
    xi = field.generator_code
    eye = [[1 if i == j else 0 for j in range(d)] for i in range(d)]
    sl = []
    if d > 1:
        for j in range(field.k):
            t = [row[:] for row in eye]
            t[0][1] = field.pow(xi, j)
            sl.append(t)
        low = [row[:] for row in eye]
        low[1][0] = 1
        sl.append(low)
        cyc = [[0] * d for _ in range(d)]
        for i in range(d - 1):
            cyc[i + 1][i] = 1
        sign = field.neg(1) if (d - 1) % 2 else 1  # det(cycle) = (-1)^(d-1)
        cyc[0][d - 1] = sign
        sl.append(cyc)
    diag = [row[:] for row in eye]
    diag[0][0] = xi
    return sl, [diag]


def _projective_group(kind: str, d: int, q: int) -> list[Permutation]:
    pp = _prime_power(q)
    if pp is None:
        raise UnknownName(f"{q} is not a prime power")
    p, k = pp
    field = field_make(p, k)
    points = _projective_points(field, d)
    if len(points) > MAX_DEGREE:
        raise DegreeTooLarge(f"projective degree {len(points)} exceeds cap")
    sl, gl_extra = _gl_generator_matrices(field, d)
    mats = list(sl)
    if kind in ("PGL", "PGammaL"):
        mats += gl_extra
    gens = [
        _perm_from_point_map(
            points, lambda v, m=m: _normalize_projective(field, _mat_apply(field, m, v))
        )
        for m in mats
    ]
    if kind == "PGammaL" and k > 1:
        frob = _perm_from_point_map(
            points,
            lambda v: _normalize_projective(field, tuple(field.pow(c, p) for c in v)),
        )
        gens.append(frob)
    return gens


def _affine_group(kind: str, d: int, q: int) -> list[Permutation]:
    pp = _prime_power(q)
    if pp is None:
        raise UnknownName(f"{q} is not a prime power")
    p, k = pp
    field = field_make(p, k)
    if q**d > MAX_DEGREE:
        raise DegreeTooLarge(f"affine degree {q**d} exceeds cap")
    points = sorted(
        tuple((code // q**i) % q for i in range(d)) for code in range(q**d)
    )
    sl, gl_extra = _gl_generator_matrices(field, d)
    mats = sl + gl_extra
    gens = [
        _perm_from_point_map(points, lambda v, m=m: _mat_apply(field, m, v))
        for m in mats
    ]
    if d == 1:
        # no transvections exist; scaling comes from the diagonal alone
        pass
    shift = _perm_from_point_map(
        points, lambda v: (field.add(v[0], 1),) + v[1:]
    )
    gens.append(shift)
    if kind == "AGammaL" and k > 1:
        frob = _perm_from_point_map(
            points, lambda v: tuple(field.pow(c, p) for c in v)
        )
        gens.append(frob)
    return gens


def _enumerate_elements(handle: GroupHandle) -> list[Permutation]:
    """All group elements in deterministic transversal-product order."""
    out = [identity(handle.degree)]
    for lv in handle._levels:
        reps = [lv.transversal[a] for a in sorted(lv.transversal)]
        out = [compose(g, u) for g in out for u in reps]
    return out


def _mulclose_capped(gens: list[Permutation], cap: int):
    """Closure of the generators, or None once it exceeds cap elements."""
    n = len(gens[0])
    elems = {identity(n)}
    frontier = [identity(n)]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = compose(s, g)
                if h not in elems:
                    elems.add(h)
                    if len(elems) > cap:
                        return None
                    nxt.append(h)
        frontier = nxt
    return elems


def _psl2_11_exceptional_gens() -> list[Permutation]:
    """The 2-transitive degree-11 action of PSL(2,11), realised as the left
    action on the cosets of an A5 subgroup of the natural degree-12 copy.
    The A5 is located deterministically: first order-2 and order-5 elements
    (in transversal enumeration order) whose closure has exactly 60 elements.
    """
    natural = GroupHandle(_projective_group("PSL", 2, 11))
    elements = _enumerate_elements(natural)
    order2 = [g for g in elements if g != identity(12) and compose(g, g) == identity(12)]
    order5 = []
    for g in elements:
        if g == identity(12):
            continue
        g5 = compose(compose(compose(compose(g, g), g), g), g)
        if g5 == identity(12) :
            order5.append(g)
    subgroup = None
    for b in order5:
        for a in order2:
            closed = _mulclose_capped([a, b], 60)
            if closed is not None and len(closed) == 60:
                subgroup = closed
                break
        if subgroup:
            break
    assert subgroup is not None, "no A5 subgroup located"
    sub = sorted(subgroup)

    def coset_key(g: Permutation) -> Permutation:
        return min(compose(g, h) for h in sub)

    keys: list[Permutation] = []
    index: dict[Permutation, int] = {}
    for g in elements:
        k = coset_key(g)
        if k not in index:
            index[k] = len(keys)
            keys.append(k)
    assert len(keys) == 11
    gens = []
    for s in natural.gens:
        img = [index[coset_key(compose(s, k))] for k in keys]
        gens.append(tuple(img))
    return gens


_DATA_ENV = "TRIGAL_MATHIEU_DATA"


def _mathieu_data_path() -> str:
    override = os.environ.get(_DATA_ENV)
    if override:
        return override
    return os.path.join(os.path.dirname(__file__), "data", "mathieu_generators.txt")


@lru_cache(maxsize=1)
def _load_mathieu_generators() -> dict[str, list[Permutation]]:
    path = _mathieu_data_path()
    if not os.path.exists(path):
        raise MissingDataFile(f"Mathieu generator data file not found: {path}")
    table: dict[str, list[Permutation]] = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            name, deg_s, *gen_strs = line.split()
            n = int(deg_s)
            table[name] = [parse_cycles(s, n) for s in gen_strs]
    return table


def _symmetric_gens(n: int) -> list[Permutation]:
    if n <= 1:
        return [identity(max(n, 1))]
    if n == 2:
        return [perm_from_cycles(2, [[0, 1]])]
    return [perm_from_cycles(n, [[0, 1]]), perm_from_cycles(n, [list(range(n))])]


def _alternating_gens(n: int) -> list[Permutation]:
    if n <= 2:
        return [identity(max(n, 1))]
    if n == 3:
        return [perm_from_cycles(3, [[0, 1, 2]])]
    if n % 2 == 1:
        big = perm_from_cycles(n, [list(range(n))])
    else:
        big = perm_from_cycles(n, [list(range(1, n))])
    return [perm_from_cycles(n, [[0, 1, 2]]), big]


@lru_cache(maxsize=None)
def builtin_group(name: GroupName) -> GroupHandle:
    """Construct a named group: matrices for the (semi)linear families, the
    bundled data file for the Mathieu groups, direct generators otherwise."""
    f = name.family
    if name.degree() > MAX_DEGREE:
        raise DegreeTooLarge(f"{name} has degree {name.degree()} > {MAX_DEGREE}")
    if f == "S":
        return GroupHandle(_symmetric_gens(name.params[0]))
    if f == "A":
        return GroupHandle(_alternating_gens(name.params[0]))
    if f == "C":
        n = name.params[0]
        return GroupHandle([perm_from_cycles(n, [list(range(n))])])
    if f in ("PGL", "PSL", "PGammaL"):
        return GroupHandle(_projective_group(f, *name.params))
    if f in ("AGL", "AGammaL"):
        return GroupHandle(_affine_group(f, *name.params))
    if f == _PSL211_LABEL:
        return GroupHandle(_psl2_11_exceptional_gens())
    if f in _MATHIEU_LABELS:
        gens = _load_mathieu_generators().get(f)
        if gens is None:
            raise MissingDataFile(f"no generators for {f} in data file")
        return GroupHandle(gens)
    raise UnknownName(f"no construction for {name!r}")


def group_order(name: GroupName) -> int:
    """Exact order, from the closed formula per family."""
    f = name.family
    if f == "S":
        return factorial(name.params[0])
    if f == "A":
        n = name.params[0]
        return max(factorial(n) // 2, 1)
    if f == "C":
        return name.params[0]
    if f in _MATHIEU_LABELS:
        return _MATHIEU_ORDER[f]
    if f == _PSL211_LABEL:
        return 660
    d, q = name.params
    p, k = _prime_power(q)
    gl = prod(q**d - q**i for i in range(d))
    if f == "AGL":
        return q**d * gl
    if f == "AGammaL":
        return q**d * gl * k
    if f == "PGL":
        return gl // (q - 1)
    if f == "PGammaL":
        return gl // (q - 1) * k
    if f == "PSL":
        from math import gcd

        return gl // (q - 1) // gcd(d, q - 1)
    raise UnknownName(f"no order formula for {name!r}")


@lru_cache(maxsize=None)
def _builtin_type_set(name: GroupName) -> frozenset[CycleType]:
    return cycle_type_set(builtin_group(name))


def contains_all_types(name: GroupName, observed) -> bool:
    """Whether every observed cycle type occurs in the named group.

    Symmetric groups contain every type; alternating groups exactly the even
    ones; anything else is answered by enumerating the group's type set.
    """
    n = name.degree()
    observed = list(observed)
    for t in observed:
        if sum(t) != n:
            raise DegreeMismatch(f"type {t} is not a partition of {n}")
    if name.family == "S":
        return True
    if name.family == "A":
        return all(type_parity_even(t) for t in observed)
    tset = _builtin_type_set(name)
    return all(tuple(sorted(t)) in tset for t in observed)


# --------------------------------------------------------------------------
# Classification lookups

def jones_candidates(n: int, k: int) -> list[GroupName]:
    """Primitive groups of degree n, other than groups containing A_n, that
    can contain a cycle fixing exactly k points, for k in {0, 1, 2}; the
    always-possible A_n and S_n are appended.  Families are reported through
    their endpoints (e.g. both PGL(d,q) and PGammaL(d,q) when they differ).
    """
    if not 0 <= k <= n - 2:
        raise BadK(f"need 0 <= k <= n-2, got k={k}, n={n}")
    out: list[GroupName] = []
    if k == 0:
        if is_prime(n):
            out += [name_cyclic(n), GroupName("AGL", (1, n))]
        for d, q in _pgl_degree_solutions(n):
            out.append(GroupName("PGL", (d, q)))
            if _prime_power(q)[1] > 1:
                out.append(GroupName("PGammaL", (d, q)))
        if n == 11:
            out += [GroupName(_PSL211_LABEL), name_mathieu("M11@11")]
        if n == 23:
            out.append(name_mathieu("M23"))
    elif k == 1:
        for d, q in _affine_degree_solutions(n):
            out.append(GroupName("AGL", (d, q)))
            if _prime_power(q)[1] > 1:
                out.append(GroupName("AGammaL", (d, q)))
        if is_prime(n - 1) and n - 1 >= 5:
            out += [GroupName("PSL", (2, n - 1)), GroupName("PGL", (2, n - 1))]
        if n == 12:
            out += [name_mathieu("M11@12"), name_mathieu("M12")]
        if n == 24:
            out.append(name_mathieu("M24"))
    elif k == 2:
        q = n - 1
        if _prime_power(q):
            out.append(GroupName("PGL", (2, q)))
            if _prime_power(q)[1] > 1:
                out.append(GroupName("PGammaL", (2, q)))
    out += [name_alternating(n), name_symmetric(n)]
    return out


def _pgl_degree_solutions(n: int) -> list[tuple[int, int]]:
    """(d, q) with d >= 2, q a prime power, (q^d - 1)/(q - 1) = n."""
    out = []
    for q in range(2, n):
        if not _prime_power(q):
            continue
        total, d = 1 + q, 2
        while total < n:
            total = total * q + 1
            d += 1
        if total == n:
            out.append((d, q))
    return out


def _affine_degree_solutions(n: int) -> list[tuple[int, int]]:
    """(d, q) with d >= 1, q a prime power > 1, q^d = n."""
    out = []
    for q in range(2, n + 1):
        if not _prime_power(q):
            continue
        d, total = 0, 1
        while total < n:
            total *= q
            d += 1
        if total == n:
            out.append((d, q))
    return out


def triply_transitive_candidates(d: int) -> list[GroupName]:
    """Triply transitive groups of degree d not containing A_d, plus A_d and
    S_d.  The exceptional degree-16 group without a catalogue name is covered
    by its AGL(4,2) overgroup, which is already in the list at d = 16.
    """
    if d < 4:
        raise ValueError("triple transitivity needs degree >= 4")
    out: list[GroupName] = []
    for dd, q in _affine_degree_solutions(d):
        if q == 2 and dd >= 2:
            out.append(GroupName("AGL", (dd, 2)))
    r = d - 1
    if _prime_power(r):
        out.append(GroupName("PSL", (2, r)))
        out.append(GroupName("PGL", (2, r)))
        if _prime_power(r)[1] > 1:
            out.append(GroupName("PGammaL", (2, r)))
    for label, deg in _MATHIEU_DEGREE.items():
        if deg == d:
            out.append(name_mathieu(label))
    out += [name_alternating(d), name_symmetric(d)]
    return out
