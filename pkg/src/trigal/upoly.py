"""Dense univariate polynomials over a finite field, with complete
factorization into monic irreducibles.

Coefficients are stored as numpy arrays of field codes, index = exponent,
trailing zeros trimmed.  The factorization pipeline is squarefree
decomposition (with p-th-root descent for derivative-zero parts), a
distinct-degree split via gcd(f, x^(q^i) - x), and a seeded probabilistic
equal-degree split (the trace-map variant in characteristic 2).  Output order
is canonical - sorted by degree, then by coefficient codes - so the result is
independent of the seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .errors import (
    ConstantPolynomial,
    DivisionByZero,
    FieldMismatch,
    ZeroPolynomial,
)
from .gf import FieldElement, FieldSpec, parse_element

NEG_INF = float("-inf")  # degree of the zero polynomial


class Poly:
    """A dense univariate polynomial over a fixed field.

    Value-semantic: operations return new instances and never mutate.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldSpec, coeffs):
        arr = np.asarray(coeffs, dtype=np.int64)
        n = len(arr)
        while n > 0 and arr[n - 1] == 0:
            n -= 1
        self.field = field
        self.coeffs = arr[:n].copy()

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_elements(cls, elements: list[FieldElement]) -> "Poly":
        if not elements:
            raise ValueError("need at least one coefficient")
        field = elements[0].field
        for e in elements:
            if e.field != field:
                raise FieldMismatch("coefficients from different fields")
        return cls(field, [e.code for e in elements])

    @classmethod
    def zero(cls, field: FieldSpec) -> "Poly":
        return cls(field, [])

    @classmethod
    def one(cls, field: FieldSpec) -> "Poly":
        return cls(field, [1])

    @classmethod
    def x(cls, field: FieldSpec) -> "Poly":
        return cls(field, [0, 1])

    @classmethod
    def monomial(cls, field: FieldSpec, e: int, coeff: int = 1) -> "Poly":
        c = np.zeros(e + 1, dtype=np.int64)
        c[e] = coeff
        return cls(field, c)

    @classmethod
    def trinomial(cls, field: FieldSpec, n: int, m: int, a: int, b: int) -> "Poly":
        """x^n + a*x^m + b with a, b given as field codes."""
        c = np.zeros(n + 1, dtype=np.int64)
        c[0] = b
        c[m] = field.add(int(c[m]), a)
        c[n] = field.add(int(c[n]), 1)
        return cls(field, c)

    # -- basic structure -----------------------------------------------------

    @property
    def degree(self):
        """Degree as an int; -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if len(self.coeffs) else NEG_INF

    def is_zero(self) -> bool:
        return len(self.coeffs) == 0

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def lead(self) -> int:
        if self.is_zero():
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return int(self.coeffs[-1])

    def coefficient(self, i: int) -> FieldElement:
        code = int(self.coeffs[i]) if i < len(self.coeffs) else 0
        return self.field.element(code)

    def elements(self) -> list[FieldElement]:
        return [self.field.element(int(c)) for c in self.coeffs]

    def _check(self, other: "Poly") -> None:
        if self.field != other.field:
            raise FieldMismatch("polynomials over different fields")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and len(self.coeffs) == len(other.coeffs)
            and bool(np.all(self.coeffs == other.coeffs))
        )

    def __hash__(self):
        return hash((self.field, self.coeffs.tobytes()))

    def key(self) -> tuple:
        """Canonical sort key: degree, then coefficient codes."""
        return (len(self.coeffs), tuple(int(c) for c in self.coeffs))

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = a.copy()
        out[: len(b)] = self.field.add_arr(out[: len(b)], b)
        return Poly(self.field, out)

    def __neg__(self) -> "Poly":
        return Poly(self.field, self.field.neg_arr(self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Poly.zero(self.field)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) > len(b):
            a, b = b, a
        out = np.zeros(len(a) + len(b) - 1, dtype=np.int64)
        for i, c in enumerate(a):
            c = int(c)
            if c:
                out[i : i + len(b)] = f.add_arr(out[i : i + len(b)], f.scale_arr(c, b))
        return Poly(f, out)

    def scale(self, c: int) -> "Poly":
        return Poly(self.field, self.field.scale_arr(c, self.coeffs))

    def monic(self) -> "Poly":
        if self.is_zero():
            raise ZeroPolynomial("cannot normalise the zero polynomial")
        lead = self.lead()
        if lead == 1:
            return self
        return self.scale(self.field.inv(lead))

    def shift(self, e: int) -> "Poly":
        """Multiply by x^e."""
        if self.is_zero():
            return self
        return Poly(self.field, np.concatenate([np.zeros(e, dtype=np.int64), self.coeffs]))

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        self._check(other)
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        f = self.field
        dm = len(other.coeffs) - 1
        rem = self.coeffs.copy()
        if len(rem) <= dm:
            return Poly.zero(f), Poly(f, rem)
        quo = np.zeros(len(rem) - dm, dtype=np.int64)
        inv_lead = f.inv(other.lead())
        body = other.coeffs[:-1]
        for i in range(len(rem) - 1, dm - 1, -1):
            c = int(rem[i])
            if c:
                qc = f.mul(c, inv_lead)
                quo[i - dm] = qc
                if dm:
                    off = i - dm
                    rem[off : off + dm] = f.add_arr(
                        rem[off : off + dm], f.neg_arr(f.scale_arr(qc, body))
                    )
        return Poly(f, quo), Poly(f, rem[:dm])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def gcd(self, other: "Poly") -> "Poly":
        """Monic greatest common divisor."""
        self._check(other)
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        if a.is_zero():
            return a
        return a.monic()

    def derivative(self) -> "Poly":
        if self.is_constant():
            return Poly.zero(self.field)
        f = self.field
        exps = np.arange(1, len(self.coeffs), dtype=np.int64) % f.p
        return Poly(f, f.mul_arr(self.coeffs[1:], exps))

    def evaluate(self, x: FieldElement) -> FieldElement:
        if x.field != self.field:
            raise FieldMismatch("evaluation point in wrong field")
        acc = 0
        f = self.field
        for c in self.coeffs[::-1]:
            acc = f.add(f.mul(acc, x.code), int(c))
        return f.element(acc)

    def compose_power(self, e: int) -> "Poly":
        """f(x^e): spread the coefficients e apart."""
        if self.is_zero() or e == 1:
            return self
        out = np.zeros((len(self.coeffs) - 1) * e + 1, dtype=np.int64)
        out[::e] = self.coeffs
        return Poly(self.field, out)

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            c = int(c)
            if c == 0:
                continue
            cs = str(self.field.element(c))
            cs = f"({cs})" if "+" in cs else cs
            if i == 0:
                parts.append(cs)
            elif i == 1:
                parts.append("x" if cs == "1" else f"{cs}*x")
            else:
                parts.append(f"x^{i}" if cs == "1" else f"{cs}*x^{i}")
        return " + ".join(reversed(parts))


def poly_arith(f: Poly, g: Poly, op: str):
    """Binary polynomial operation by name: add, mul, divmod or gcd."""
    table = {
        "add": Poly.__add__,
        "mul": Poly.__mul__,
        "divmod": Poly.divmod,
        "gcd": Poly.gcd,
    }
    if op not in table:
        raise ValueError(f"unknown operation {op!r}")
    return table[op](f, g)


def powmod(base: Poly, e: int, modulus: Poly) -> Poly:
    """base^e mod modulus by square and multiply; never forms base^e."""
    if modulus.is_constant():
        raise ConstantPolynomial("modulus must be nonconstant")
    if e < 0:
        raise ValueError("negative exponent")
    result = Poly.one(base.field)
    acc = base % modulus
    while e:
        if e & 1:
            result = (result * acc) % modulus
        acc = (acc * acc) % modulus
        e >>= 1
    return result


def is_squarefree(f: Poly) -> bool:
    """True iff gcd(f, f') is constant; a vanishing derivative of a
    nonconstant polynomial means a p-th power, hence not squarefree."""
    if f.is_zero():
        raise ZeroPolynomial("squarefreeness of the zero polynomial")
    if f.is_constant():
        return True
    d = f.derivative()
    if d.is_zero():
        return False
    return f.gcd(d).is_constant()


@dataclass(frozen=True)
class Factorization:
    """unit * product(factor^multiplicity) == the factored input."""

    unit: FieldElement
    factors: tuple[tuple[Poly, int], ...]

    def reassemble(self) -> Poly:
        field = self.unit.field
        out = Poly(field, [self.unit.code])
        for g, mult in self.factors:
            for _ in range(mult):
                out = out * g
        return out

    def pattern(self) -> "FactorPattern":
        degs = []
        for g, mult in self.factors:
            degs.extend([int(g.degree)] * mult)
        return FactorPattern(tuple(sorted(degs)))


@dataclass(frozen=True)
class FactorPattern:
    """Sorted multiset of irreducible-factor degrees, multiplicity included."""

    degrees: tuple[int, ...]

    def __iter__(self):
        return iter(self.degrees)


def _pth_root(f: Poly) -> Poly:
    """Inverse of x -> x^p on a polynomial with vanishing derivative:
    f(x) = g(x^p) with the coefficients' p-th roots taken."""
    field = f.field
    codes = f.coeffs[:: field.p]
    root_exp = field.q // field.p  # a -> a^(q/p) is the p-th root in GF(q)
    out = [field.pow(int(c), root_exp) for c in codes]
    return Poly(field, out)


def _squarefree_parts(f: Poly) -> list[tuple[Poly, int]]:
    """Yun-style squarefree decomposition with p-th-root descent.

    Returns monic pairwise-coprime squarefree parts with multiplicities,
    whose product with multiplicity reassembles monic(f).
    """
    field = f.field
    p = field.p
    out: list[tuple[Poly, int]] = []
    f = f.monic()

    def recurse(g: Poly, outer_mult: int) -> None:
        if g.is_constant():
            return
        d = g.derivative()
        if d.is_zero():
            recurse(_pth_root(g), outer_mult * p)
            return
        c = g.gcd(d)
        w = g // c
        i = 1
        while not w.is_constant():
            y = w.gcd(c)
            part = w // y
            if not part.is_constant():
                out.append((part.monic(), i * outer_mult))
            w = y
            c = c // y
            i += 1
        # what is left of c collects the factors with p | multiplicity; it has
        # zero derivative, so the recursion takes its p-th root (and only
        # there does the multiplicity pick up the factor p)
        if not c.is_constant():
            recurse(c, outer_mult)

    recurse(f, 1)
    return out


def _distinct_degree(f: Poly) -> list[tuple[int, Poly]]:
    """Split monic squarefree f into (degree d, product of its degree-d
    irreducible factors) pairs, ascending in d."""
    field = f.field
    q = field.q
    out = []
    g = f
    h = Poly.x(field) % g
    d = 1
    while int(g.degree) >= 2 * d:
        h = powmod(h, q, g)
        t = g.gcd(h - Poly.x(field))
        if not t.is_constant():
            out.append((d, t))
            g = g // t
            h = h % g
        d += 1
    if int(g.degree) > 0:
        out.append((int(g.degree), g))
    return out


def _random_poly(field: FieldSpec, deg_below: int, rng: random.Random) -> Poly:
    codes = [rng.randrange(field.q) for _ in range(deg_below)]
    return Poly(field, codes)


def _equal_degree(f: Poly, d: int, rng: random.Random) -> list[Poly]:
    """Split a monic product of distinct degree-d irreducibles completely."""
    field = f.field
    n = int(f.degree)
    if n == d:
        return [f]
    q = field.q
    while True:
        u = _random_poly(field, n, rng)
        if u.is_constant():
            continue
        if field.p == 2:
            # trace map over GF(2^k): T = u + u^2 + u^4 + ... (kd terms)
            k = field.k
            t = u % f
            v = t
            for _ in range(k * d - 1):
                v = (v * v) % f
                t = t + v
            w = f.gcd(t)
        else:
            s = powmod(u, (q**d - 1) // 2, f)
            w = f.gcd(s - Poly.one(field))
        if not w.is_constant() and int(w.degree) < n:
            return sorted(
                _equal_degree(w, d, rng) + _equal_degree(f // w, d, rng),
                key=Poly.key,
            )


def factor(f: Poly, seed: int = 0) -> Factorization:
    """Complete factorization of a nonconstant polynomial into monic
    irreducibles, deterministic in output order regardless of seed."""
    if f.is_constant():
        raise ConstantPolynomial("cannot factor a constant")
    rng = random.Random(seed)
    unit = f.field.element(f.lead())
    pairs: list[tuple[Poly, int]] = []
    for part, mult in _squarefree_parts(f):
        for d, block in _distinct_degree(part):
            for irr in _equal_degree(block, d, rng):
                pairs.append((irr, mult))
    pairs.sort(key=lambda pm: pm[0].key())
    return Factorization(unit=unit, factors=tuple(pairs))


def factor_pattern(f: Poly, seed: int = 0) -> FactorPattern:
    """Degree multiset of the irreducible factors, with multiplicity.

    Computed from the squarefree and distinct-degree splits alone (no
    equal-degree splitting is needed to know the degrees), so this is fast
    and seed-independent by construction.
    """
    if f.is_constant():
        raise ConstantPolynomial("cannot factor a constant")
    degs: list[int] = []
    for part, mult in _squarefree_parts(f):
        for d, block in _distinct_degree(part):
            degs.extend([d] * (int(block.degree) // d) * mult)
    return FactorPattern(tuple(sorted(degs)))


def is_irreducible_certified(g: Poly) -> bool:
    """Irreducibility certificate: x^(q^d) = x mod g, and for each prime
    l | d the gcd of g with x^(q^(d/l)) - x is trivial."""
    from .gf import prime_factors

    d = int(g.degree)
    if d < 1:
        return False
    field = g.field
    x = Poly.x(field)
    h = x % g
    frob = [h]  # frob[i] = x^(q^i) mod g  (computed incrementally)
    for _ in range(d):
        frob.append(powmod(frob[-1], field.q, g))
    if frob[d] != x % g:
        return False
    for ell in prime_factors(d):
        if not g.gcd(frob[d // ell] - x).is_constant():
            return False
    return True


def parse_poly(field: FieldSpec, text: str) -> Poly:
    """Parse the CLI coefficient syntax: comma-separated, constant first,
    entries are integers (prime field) or 'c'-expressions (extension)."""
    parts = [s for s in text.split(",")]
    if not parts or not any(s.strip() for s in parts):
        raise ValueError("empty polynomial")
    coeffs = [parse_element(field, s.strip() or "0") for s in parts]
    return Poly.from_elements(coeffs)
