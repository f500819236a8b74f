"""Exact arithmetic in finite fields GF(p^k), realised as GF(p)[w]/(modulus).

Elements are stored as integer codes in [0, p^k): the base-p digits of the
code are the coordinates in the power basis 1, w, ..., w^(k-1).  Each field
precomputes exp/log tables over a primitive element, so multiplication,
inversion and powering are table lookups; addition is an XOR in
characteristic 2 and a digit-wise table otherwise.  The same tables back the
vectorised (numpy) coefficient kernels used by the polynomial layer.

Field specs are interned: ``field_make`` returns the same object for the same
(p, k, modulus) triple, and elements of distinct specs never mix.
"""

from __future__ import annotations

import re

import numpy as np

from .errors import (
    DegreeMismatch,
    DivisionByZero,
    FieldMismatch,
    NotPrime,
    ReducibleModulus,
)

# Moduli fixed for reproducibility.  GF(4) and GF(9) are chosen so that the
# power-basis generator c satisfies c^2 = c + 1 in both fields.
_DEFAULT_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),        # w^2 + w + 1
    (2, 3): (1, 1, 0, 1),     # w^3 + w + 1
    (2, 4): (1, 1, 0, 0, 1),  # w^4 + w + 1
    (3, 2): (2, 2, 1),        # w^2 + 2w + 2  (= w^2 - w - 1)
    (5, 2): (2, 1, 1),        # w^2 + w + 2
}

_MAX_ORDER = 1 << 20


def is_prime(n: int) -> bool:
    """Trial-division primality test; adequate for the characteristics in play."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


# --------------------------------------------------------------------------
# Dense polynomial helpers over the prime field GF(p), used only to bootstrap
# field construction (irreducibility checks, primitive-element search).
# Polynomials are lists of ints, constant term first, no trailing zeros.

def _pp_trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _pp_mulmod(f: list[int], g: list[int], m: list[int], p: int) -> list[int]:
    prod = [0] * (len(f) + len(g) - 1) if f and g else []
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                prod[i + j] = (prod[i + j] + a * b) % p
    return _pp_rem(prod, m, p)


def _pp_rem(f: list[int], m: list[int], p: int) -> list[int]:
    f = list(f)
    dm = len(m) - 1
    inv_lead = pow(m[-1], -1, p)
    while len(f) - 1 >= dm and f:
        if f[-1]:
            c = f[-1] * inv_lead % p
            off = len(f) - 1 - dm
            for j, b in enumerate(m):
                f[off + j] = (f[off + j] - c * b) % p
        f.pop()
    return _pp_trim(f)


def _pp_gcd(f: list[int], g: list[int], p: int) -> list[int]:
    f, g = _pp_trim(list(f)), _pp_trim(list(g))
    while g:
        f, g = g, _pp_rem(f, g, p)
    return f


def _pp_powmod_x(e: int, m: list[int], p: int) -> list[int]:
    """x^e mod m over GF(p), by square and multiply."""
    result = [1]
    base = _pp_rem([0, 1], m, p)
    while e:
        if e & 1:
            result = _pp_mulmod(result, base, m, p)
        base = _pp_mulmod(base, base, m, p)
        e >>= 1
    return result


def _pp_is_irreducible(m: list[int], p: int) -> bool:
    """Degree-d gcd test: m irreducible over GF(p) of degree k iff
    x^(p^k) = x mod m and gcd(x^(p^(k/l)) - x, m) = 1 for primes l | k."""
    k = len(m) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    h = _pp_powmod_x(p**k, m, p)
    if _pp_trim([(a - b) % p for a, b in _pad_sub(h, [0, 1], p)]):
        return False
    for ell in prime_factors(k):
        h = _pp_powmod_x(p ** (k // ell), m, p)
        diff = _pp_trim([(a - b) % p for a, b in _pad_sub(h, [0, 1], p)])
        if len(_pp_gcd(m, diff, p)) != 1:
            return False
    return True


def _pad_sub(f: list[int], g: list[int], p: int):
    n = max(len(f), len(g))
    return zip(f + [0] * (n - len(f)), g + [0] * (n - len(g)))


def default_modulus(p: int, k: int) -> tuple[int, ...]:
    """Bundled modulus for (p, k): the fixed table entry when present,
    otherwise the irreducible monic of degree k with the smallest code
    sum(c_i * p^i) over its lower coefficients."""
    if k == 1:
        return (0, 1)
    if (p, k) in _DEFAULT_MODULI:
        return _DEFAULT_MODULI[(p, k)]
    for code in range(p**k):
        lower = [(code // p**i) % p for i in range(k)]
        m = lower + [1]
        if _pp_is_irreducible(m, p):
            return tuple(m)
    raise AssertionError("no irreducible polynomial found")  # unreachable


# --------------------------------------------------------------------------

class FieldSpec:
    """A finite field GF(p^k) with an explicit modulus.

    Do not call directly; use :func:`field_make`, which interns specs so that
    equal (p, k, modulus) triples share one object.
    """

    def __init__(self, p: int, k: int, modulus: tuple[int, ...]):
        self.p = p
        self.k = k
        self.modulus = modulus
        self.q = p**k
        self._init_tables()

    def _init_tables(self) -> None:
        p, k, q = self.p, self.k, self.q
        # raw digit-vector multiplication, only used to build the tables
        mod_list = list(self.modulus)

        def raw_mul(a: int, b: int) -> int:
            fa = [(a // p**i) % p for i in range(k)]
            fb = [(b // p**i) % p for i in range(k)]
            prod = _pp_mulmod(fa, fb, mod_list, p)
            return sum(c * p**i for i, c in enumerate(prod))

        # exp/log over a primitive element
        gen = None
        factors = prime_factors(q - 1) if q > 2 else []
        for cand in range(2 if q > 2 else 1, q):
            ok = True
            for ell in factors:
                acc, e = 1, (q - 1) // ell
                b = cand
                while e:
                    if e & 1:
                        acc = raw_mul(acc, b)
                    b = raw_mul(b, b)
                    e >>= 1
                if acc == 1:
                    ok = False
                    break
            if ok:
                gen = cand
                break
        assert gen is not None
        exp = np.zeros(2 * (q - 1), dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        acc = 1
        for i in range(q - 1):
            exp[i] = acc
            exp[i + q - 1] = acc
            log[acc] = i
            acc = raw_mul(acc, gen)
        self._exp = exp
        self._log = log
        self.generator_code = gen

        # digit matrix, for the generic addition path and coordinate access
        digits = np.zeros((q, k), dtype=np.int64)
        for code in range(q):
            for i in range(k):
                digits[code, i] = (code // p**i) % p
        self._digits = digits
        self._powers = np.array([p**i for i in range(k)], dtype=np.int64)

        if p != 2 and q <= 1024:
            self._add_table = (
                (digits[:, None, :] + digits[None, :, :]) % p @ self._powers
            )
        else:
            self._add_table = None
        self._neg_table = ((-digits) % p) @ self._powers

    # -- scalar code arithmetic ------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self._add_table is not None:
            return int(self._add_table[a, b])
        return int(((self._digits[a] + self._digits[b]) % self.p) @ self._powers)

    def neg(self, a: int) -> int:
        return int(self._neg_table[a])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self._exp[self._log[a] + self._log[b]])

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return int(self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)])

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            raise ValueError("negative exponent")
        if a == 0:
            return 0 if e else 1
        return int(self._exp[(int(self._log[a]) * e) % (self.q - 1)])

    def embed_int(self, n: int) -> int:
        """Code of the prime-subfield element n mod p."""
        return n % self.p

    # -- vectorised code arithmetic (int64 numpy arrays of codes) ---------

    def add_arr(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.p == 2:
            return a ^ b
        if self._add_table is not None:
            return self._add_table[a, b]
        return ((self._digits[a] + self._digits[b]) % self.p) @ self._powers

    def neg_arr(self, a: np.ndarray) -> np.ndarray:
        return self._neg_table[a]

    def mul_arr(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        out = self._exp[self._log[a] + self._log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def scale_arr(self, c: int, a: np.ndarray) -> np.ndarray:
        if c == 0:
            return np.zeros_like(a)
        out = self._exp[int(self._log[c]) + self._log[a]]
        return np.where(a == 0, 0, out)

    # -- structure ---------------------------------------------------------

    def element(self, code: int) -> "FieldElement":
        return FieldElement(self, code % self.q)

    def from_coeffs(self, coeffs) -> "FieldElement":
        if len(coeffs) > self.k:
            raise DegreeMismatch("too many coordinates for this field")
        code = sum((int(c) % self.p) * self.p**i for i, c in enumerate(coeffs))
        return FieldElement(self, code)

    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def gen(self) -> "FieldElement":
        """The power-basis generator w (named c in rendered output)."""
        if self.k == 1:
            raise DegreeMismatch("prime field has no extension generator")
        return FieldElement(self, self.p)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldSpec)
            and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.k, self.modulus))

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    def spec_string(self) -> str:
        """Round-trippable 'p', 'p^k' or 'p^k:c0,...,1' form."""
        if self.k == 1:
            return str(self.p)
        if self.modulus == default_modulus(self.p, self.k):
            return f"{self.p}^{self.k}"
        return f"{self.p}^{self.k}:" + ",".join(str(c) for c in self.modulus)


class FieldElement:
    """An element of a :class:`FieldSpec`, value-semantic and immutable."""

    __slots__ = ("field", "code")

    def __init__(self, field: FieldSpec, code: int):
        self.field = field
        self.code = code

    @property
    def coeffs(self) -> tuple[int, ...]:
        p = self.field.p
        return tuple((self.code // p**i) % p for i in range(self.field.k))

    def _check(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement) or other.field != self.field:
            raise FieldMismatch(f"cannot mix {self!r} with {other!r}")

    def __add__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.add(self.code, other.code))

    def __sub__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.sub(self.code, other.code))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.code))

    def __mul__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.mul(self.code, other.code))

    def __truediv__(self, other):
        self._check(other)
        if other.code == 0:
            raise DivisionByZero("division by zero field element")
        return self * other.inverse()

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.code))

    def __pow__(self, e: int) -> "FieldElement":
        return FieldElement(self.field, self.field.pow(self.code, e))

    def frobenius(self) -> "FieldElement":
        return self ** self.field.p

    def __bool__(self) -> bool:
        return self.code != 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldElement)
            and self.field == other.field
            and self.code == other.code
        )

    def __hash__(self) -> int:
        return hash((self.field, self.code))

    def __repr__(self) -> str:
        return f"{self}"

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                var = "c" if i == 1 else f"c^{i}"
                parts.append(var if c == 1 else f"{c}{var}")
        return "+".join(parts) if parts else "0"


_SPEC_CACHE: dict[tuple[int, int, tuple[int, ...]], FieldSpec] = {}


def field_make(p: int, k: int = 1, modulus=None) -> FieldSpec:
    """Construct (or fetch the interned) GF(p^k) with the given modulus.

    When modulus is omitted the bundled default for (p, k) is used.  A
    supplied modulus must be monic of degree k, constant term first, and is
    always verified irreducible over GF(p).
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if k < 1:
        raise DegreeMismatch("extension degree must be >= 1")
    if p**k > _MAX_ORDER:
        raise DegreeMismatch(f"field order {p}^{k} exceeds supported bound")
    if modulus is None:
        modulus = default_modulus(p, k)
    modulus = tuple(int(c) % p for c in modulus)
    if len(modulus) != k + 1:
        raise DegreeMismatch(f"modulus must have degree {k}")
    if modulus[-1] != 1:
        raise DegreeMismatch("modulus must be monic")
    if k > 1 and not _pp_is_irreducible(list(modulus), p):
        raise ReducibleModulus(f"{modulus} is reducible over GF({p})")
    key = (p, k, modulus)
    spec = _SPEC_CACHE.get(key)
    if spec is None:
        spec = FieldSpec(p, k, modulus)
        _SPEC_CACHE[key] = spec
    return spec


def field_arith(x: FieldElement, y: FieldElement, op: str) -> FieldElement:
    """Binary field operation by name: add, sub, mul or div."""
    table = {
        "add": FieldElement.__add__,
        "sub": FieldElement.__sub__,
        "mul": FieldElement.__mul__,
        "div": FieldElement.__truediv__,
    }
    if op not in table:
        raise ValueError(f"unknown operation {op!r}")
    return table[op](x, y)


def frobenius(x: FieldElement) -> FieldElement:
    """The p-power Frobenius x -> x^p."""
    return x.frobenius()


def field_elements(spec: FieldSpec) -> list[FieldElement]:
    """All p^k elements, ordered lexicographically on their coordinate vectors."""
    codes = sorted(range(spec.q), key=lambda c: spec.element(c).coeffs)
    return [spec.element(c) for c in codes]


# --------------------------------------------------------------------------
# CLI-facing string syntax.

_FIELD_RE = re.compile(r"^(\d+)(?:\^(\d+))?(?::([0-9,]+))?$")


def parse_field(text: str) -> FieldSpec:
    """Parse 'p', 'p^k' or 'p^k:c0,c1,...,1' (monic, constant first, mod p)."""
    m = _FIELD_RE.match(text.strip())
    if not m:
        raise ValueError(f"cannot parse field spec {text!r}")
    p = int(m.group(1))
    k = int(m.group(2)) if m.group(2) else 1
    modulus = None
    if m.group(3):
        modulus = [int(c) for c in m.group(3).split(",")]
    return field_make(p, k, modulus)


_TERM_RE = re.compile(r"^(\d*)(?:(c)(?:\^(\d+))?)?$")


def parse_element(spec: FieldSpec, text: str) -> FieldElement:
    """Parse an element: an integer for prime fields, or a 'c'-polynomial
    expression like 'c+1' or '2c^3+c+2' for extension fields."""
    text = text.replace(" ", "")
    if not text:
        raise ValueError("empty element")
    # normalise leading sign, then split on signs
    acc = spec.zero()
    for signed in re.finditer(r"([+-]?)([^+-]+)", text):
        sign, term = signed.group(1), signed.group(2)
        m = _TERM_RE.match(term)
        if not m or (not m.group(1) and not m.group(2)):
            raise ValueError(f"cannot parse element term {term!r}")
        coeff = int(m.group(1)) if m.group(1) else 1
        exp = 0
        if m.group(2):
            exp = int(m.group(3)) if m.group(3) else 1
        if exp >= spec.k and exp > 0:
            raise ValueError(f"power c^{exp} not reduced in {spec!r}")
        val = spec.element(spec.embed_int(coeff)) * (
            spec.gen() ** exp if exp else spec.one()
        )
        acc = acc + (-val if sign == "-" else val)
    return acc
