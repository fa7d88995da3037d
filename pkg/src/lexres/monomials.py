"""Exponent-vector monomials over a fixed ring and the three orders on them.

Everything downstream works with monomials of one ambient ring x_1..x_n,
compared in plain lex, in increasing reverse-lex (the generator order for
the colon computations), or in the bar-degree-then-lex order attached to a
split index l.  Variable indices are 1-based in every public signature;
the exponent tuple itself is 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class RingContext:
    """The ambient polynomial ring; only the variable count matters here."""

    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"need at least 2 variables, got n={self.n}")


class Monomial:
    """An immutable monomial given by its dense exponent vector.

    The degree is computed once at construction and never recomputed.
    """

    __slots__ = ("ctx", "exponents", "degree")

    def __init__(self, ctx: RingContext, exponents):
        exps = tuple(int(e) for e in exponents)
        if len(exps) != ctx.n:
            raise ValueError(f"expected {ctx.n} exponents, got {len(exps)}")
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        self.ctx = ctx
        self.exponents = exps
        self.degree = sum(exps)

    # -- basic queries ----------------------------------------------------

    def exponent(self, i: int) -> int:
        """nu_i: the exponent of x_i (1-based)."""
        return self.exponents[i - 1]

    def support(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, e in enumerate(self.exponents) if e)

    def is_one(self) -> bool:
        return self.degree == 0

    def min_index(self) -> int:
        """min(supp(m)); undefined for the monomial 1."""
        for i, e in enumerate(self.exponents):
            if e:
                return i + 1
        raise ValueError("min_index of the monomial 1 is undefined")

    def max_index(self) -> int:
        for i in range(self.ctx.n - 1, -1, -1):
            if self.exponents[i]:
                return i + 1
        raise ValueError("max_index of the monomial 1 is undefined")

    # -- arithmetic --------------------------------------------------------

    def __mul__(self, other: "Monomial") -> "Monomial":
        _same_ctx(self, other)
        return Monomial(self.ctx, tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __pow__(self, k: int) -> "Monomial":
        if k < 0:
            raise ValueError("negative power")
        return Monomial(self.ctx, tuple(e * k for e in self.exponents))

    def try_divide(self, other: "Monomial"):
        """self / other, or None when some exponent would go negative."""
        _same_ctx(self, other)
        diff = tuple(a - b for a, b in zip(self.exponents, other.exponents))
        if any(e < 0 for e in diff):
            return None
        return Monomial(self.ctx, diff)

    def gcd(self, other: "Monomial") -> "Monomial":
        _same_ctx(self, other)
        return Monomial(self.ctx, tuple(min(a, b) for a, b in zip(self.exponents, other.exponents)))

    def lcm(self, other: "Monomial") -> "Monomial":
        _same_ctx(self, other)
        return Monomial(self.ctx, tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def divides(self, other: "Monomial") -> bool:
        _same_ctx(self, other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    # -- plumbing ----------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Monomial)
            and self.ctx.n == other.ctx.n
            and self.exponents == other.exponents
        )

    def __hash__(self):
        return hash((self.ctx.n, self.exponents))

    def __str__(self):
        if self.degree == 0:
            return "1"
        parts = []
        for i, e in enumerate(self.exponents):
            if e == 1:
                parts.append(f"x{i + 1}")
            elif e > 1:
                parts.append(f"x{i + 1}^{e}")
        return "".join(parts)

    def __repr__(self):
        return f"Monomial({self})"


def monomial_from_exponents(ctx: RingContext, exponents) -> Monomial:
    """Build a monomial, validating length and non-negativity."""
    return Monomial(ctx, exponents)


def one(ctx: RingContext) -> Monomial:
    return Monomial(ctx, (0,) * ctx.n)


def variable(ctx: RingContext, i: int) -> Monomial:
    if not 1 <= i <= ctx.n:
        raise ValueError(f"variable index {i} out of range 1..{ctx.n}")
    return Monomial(ctx, tuple(1 if j == i - 1 else 0 for j in range(ctx.n)))


def _same_ctx(a: Monomial, b: Monomial):
    if a.ctx.n != b.ctx.n:
        raise ValueError(f"ring context mismatch: n={a.ctx.n} vs n={b.ctx.n}")


def check_split_index(ctx: RingContext, l: int):
    if not 2 <= l <= ctx.n - 1:
        raise ValueError(f"split index l={l} outside 2..{ctx.n - 1}")


# -- the three orders -------------------------------------------------------
# Comparators return negative / 0 / positive so that one sorting code path
# (functools.cmp_to_key or the explicit key functions below) serves all.


def cmp_lex(a: Monomial, b: Monomial) -> int:
    """x_1 > ... > x_n lex: decided at the first differing exponent."""
    _same_ctx(a, b)
    for ea, eb in zip(a.exponents, b.exponents):
        if ea != eb:
            return 1 if ea > eb else -1
    return 0


def cmp_revlex(a: Monomial, b: Monomial) -> int:
    """Reverse lex on equal degrees: a < b iff at the last differing index s
    the exponent of a is the larger one."""
    _same_ctx(a, b)
    if a.degree != b.degree:
        raise ValueError(f"revlex needs equal degrees, got {a.degree} and {b.degree}")
    for i in range(a.ctx.n - 1, -1, -1):
        ea, eb = a.exponents[i], b.exponents[i]
        if ea != eb:
            return -1 if ea > eb else 1
    return 0


def bar_degree(m: Monomial, l: int) -> int:
    """Degree of the factor of m supported on x_1..x_l."""
    check_split_index(m.ctx, l)
    return sum(m.exponents[:l])


def cmp_prec(a: Monomial, b: Monomial, l: int) -> int:
    """Compare by bar-degree first, then by lex (on equal total degree)."""
    _same_ctx(a, b)
    check_split_index(a.ctx, l)
    da, db = bar_degree(a, l), bar_degree(b, l)
    if da != db:
        return -1 if da < db else 1
    return cmp_lex(a, b)


def lex_key(m: Monomial):
    """Sort key: sorting by this ascending is lex-ascending."""
    return m.exponents


def revlex_key(m: Monomial):
    """Sort key: sorting by this ascending is revlex-increasing."""
    return tuple(-e for e in reversed(m.exponents))


# -- the bar/tilde split ----------------------------------------------------


@dataclass(frozen=True)
class BarTildeSplit:
    """The unique factorization m = bar * tilde with bar supported on
    x_1..x_l and tilde on x_{l+1}..x_n."""

    bar: Monomial
    tilde: Monomial
    l: int


def bar_tilde_split(m: Monomial, l: int) -> BarTildeSplit:
    check_split_index(m.ctx, l)
    n = m.ctx.n
    bar = Monomial(m.ctx, m.exponents[:l] + (0,) * (n - l))
    tilde = Monomial(m.ctx, (0,) * l + m.exponents[l:])
    return BarTildeSplit(bar=bar, tilde=tilde, l=l)


def min_tilde_index(m: Monomial, l: int) -> int:
    """min of supp(m) restricted to x_{l+1}..x_n."""
    check_split_index(m.ctx, l)
    for i in range(l, m.ctx.n):
        if m.exponents[i]:
            return i + 1
    raise ValueError(f"{m} has no support beyond x{l}")
