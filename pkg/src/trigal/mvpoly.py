"""Sparse multivariate polynomials over a prime field GF(p), plus reduction
modulo a triangular system of monic relations.

Coefficients stay in the prime field; extension-field constants are adjoined
as bound variables carrying their minimal polynomials as relations.  Only
triangular monic relation systems are supported: each relation is monic in
its own bound variable and may mention free variables and earlier bound
variables, which keeps reduction a terminating rewrite and avoids Groebner
machinery entirely.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContextMismatch, NonMonicRelation, UnknownVariable


@dataclass(frozen=True)
class MContext:
    """A prime characteristic and an ordered tuple of variable names."""

    p: int
    names: tuple[str, ...]

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UnknownVariable(f"{name!r} not in context {self.names}") from None

    def var(self, name: str) -> "MPoly":
        e = [0] * len(self.names)
        e[self.index(name)] = 1
        return MPoly(self, {tuple(e): 1})

    def const(self, c: int) -> "MPoly":
        c %= self.p
        zero = (0,) * len(self.names)
        return MPoly(self, {zero: c} if c else {})

    def zero(self) -> "MPoly":
        return MPoly(self, {})

    def one(self) -> "MPoly":
        return self.const(1)


def context(p: int, *names: str) -> MContext:
    return MContext(p, tuple(names))


class MPoly:
    """Sparse polynomial: exponent vector -> nonzero coefficient mod p."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: MContext, terms: dict[tuple[int, ...], int]):
        self.ctx = ctx
        self.terms = terms  # invariant: values nonzero, keys of fixed arity

    def _check(self, other: "MPoly") -> None:
        if not isinstance(other, MPoly) or other.ctx != self.ctx:
            raise ContextMismatch("operands from different polynomial contexts")

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, MPoly) and self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self):
        return hash((self.ctx, frozenset(self.terms.items())))

    def __add__(self, other: "MPoly") -> "MPoly":
        self._check(other)
        p = self.ctx.p
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = (out.get(e, 0) + c) % p
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MPoly(self.ctx, out)

    def __neg__(self) -> "MPoly":
        p = self.ctx.p
        return MPoly(self.ctx, {e: (-c) % p for e, c in self.terms.items()})

    def __sub__(self, other: "MPoly") -> "MPoly":
        return self + (-other)

    def __mul__(self, other: "MPoly") -> "MPoly":
        self._check(other)
        p = self.ctx.p
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = (out.get(e, 0) + c1 * c2) % p
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return MPoly(self.ctx, out)

    def __pow__(self, e: int) -> "MPoly":
        if e < 0:
            raise ValueError("negative exponent")
        result = self.ctx.one()
        acc = self
        while e:
            if e & 1:
                result = result * acc
            acc = acc * acc
            e >>= 1
        return result

    def scale(self, c: int) -> "MPoly":
        c %= self.ctx.p
        if c == 0:
            return self.ctx.zero()
        p = self.ctx.p
        return MPoly(self.ctx, {e: (k * c) % p for e, k in self.terms.items()})

    def degree_in(self, var: str) -> int:
        """Largest exponent of var; -1 for the zero polynomial."""
        i = self.ctx.index(var)
        return max((e[i] for e in self.terms), default=-1)

    def coefficient_of(self, var: str, power: int) -> "MPoly":
        """Coefficient of var^power, as a polynomial with var zeroed out."""
        i = self.ctx.index(var)
        out = {}
        for e, c in self.terms.items():
            if e[i] == power:
                key = e[:i] + (0,) + e[i + 1 :]
                out[key] = c
        return MPoly(self.ctx, out)

    def exponents_of(self, var: str) -> set[int]:
        i = self.ctx.index(var)
        return {e[i] for e in self.terms}

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms in lexicographic exponent order (the canonical form)."""
        return sorted(self.terms.items())

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for e, c in self.sorted_terms():
            factors = [str(c)] if (c != 1 or not any(e)) else []
            for name, k in zip(self.ctx.names, e):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}^{k}")
            bits.append("*".join(factors))
        return " + ".join(bits)


def mv_arith(f: MPoly, g: MPoly, op: str) -> MPoly:
    """Binary operation by name: add, mul; pow takes an integer second arg."""
    if op == "add":
        return f + g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown operation {op!r}")


def substitute(f: MPoly, var: str, replacement: MPoly) -> MPoly:
    """Exact substitution of a polynomial for a variable, expanded."""
    f._check(replacement)
    i = f.ctx.index(var)
    out = f.ctx.zero()
    # group by the power of var, reuse replacement powers
    powers: dict[int, MPoly] = {0: f.ctx.one()}

    def rep_pow(k: int) -> MPoly:
        if k not in powers:
            powers[k] = replacement ** k
        return powers[k]

    for e, c in f.terms.items():
        rest = MPoly(f.ctx, {e[:i] + (0,) + e[i + 1 :]: c})
        out = out + rest * rep_pow(e[i])
    return out


class TriangularRing:
    """Quotient of a context by an ordered triangular list of monic relations.

    Each relation is monic of positive degree in a distinct bound variable;
    its lower-order terms may mention free variables and previously bound
    variables only.  Reduction rewrites bound-variable powers >= the relation
    degree and terminates because the tuple of bound degrees drops
    lexicographically (later variables weighted first).
    """

    def __init__(self, ctx: MContext, relations: list[tuple[str, MPoly]]):
        self.ctx = ctx
        self.bound: list[tuple[int, int, MPoly]] = []  # (var index, degree, tail)
        indices = [ctx.index(var) for var, _ in relations]
        if len(set(indices)) != len(indices):
            raise NonMonicRelation("a variable is bound by two relations")
        for pos, (var, rel) in enumerate(relations):
            rel._check(ctx.zero())
            i = indices[pos]
            d = rel.degree_in(var)
            if d < 1:
                raise NonMonicRelation(f"relation for {var!r} must have positive degree")
            lead = rel.coefficient_of(var, d)
            if lead.terms != {(0,) * len(ctx.names): 1}:
                raise NonMonicRelation(f"relation for {var!r} is not monic")
            tail = rel - MPoly(ctx, {_unit_exp(ctx, i, d): 1})
            later = set(indices[pos + 1 :])
            for e in tail.terms:
                if e[i] >= d:
                    raise NonMonicRelation(f"relation tail for {var!r} not reduced")
                if any(e[j] for j in later):
                    raise NonMonicRelation(
                        f"relation for {var!r} mentions a later bound variable"
                    )
            self.bound.append((i, d, -tail))  # var^d == -tail in the quotient

    def reduce(self, f: MPoly) -> MPoly:
        """Normal form of f: every bound-variable degree below its relation's."""
        if f.ctx != self.ctx:
            raise ContextMismatch("polynomial from a different context")
        # rewrite later-bound variables first; earlier relations cannot
        # reintroduce later variables, so one backward pass per round suffices
        for i, d, repl in reversed(self.bound):
            f = _reduce_var(f, i, d, repl)
        return f


def _unit_exp(ctx: MContext, i: int, d: int) -> tuple[int, ...]:
    e = [0] * len(ctx.names)
    e[i] = d
    return tuple(e)


def _reduce_var(f: MPoly, i: int, d: int, repl: MPoly) -> MPoly:
    """Rewrite var_i^e (e >= d) as var_i^(e-d) * repl until all exponents of
    var_i are below d, merging like terms every round."""
    ctx = f.ctx
    p = ctx.p
    terms = f.terms
    while True:
        out: dict[tuple[int, ...], int] = {}
        dirty = False
        for e, c in terms.items():
            if e[i] >= d:
                dirty = True
                for re_, rc in repl.terms.items():
                    key = list(e)
                    key[i] = e[i] - d + re_[i]
                    for j, rj in enumerate(re_):
                        if rj and j != i:
                            key[j] += rj
                    key = tuple(key)
                    s = (out.get(key, 0) + c * rc) % p
                    if s:
                        out[key] = s
                    else:
                        out.pop(key, None)
            else:
                s = (out.get(e, 0) + c) % p
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        if not dirty:
            return MPoly(ctx, out)
        terms = out


def qreduce(f: MPoly, ring: TriangularRing) -> MPoly:
    """Normal form of f modulo the ring's relation ideal (idempotent)."""
    return ring.reduce(f)
