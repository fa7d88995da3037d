"""Shared oracles and generators for the test suite.

Everything here recomputes results by a route independent of the library
code under test: comparator definitions re-read from scratch, interval
membership by filtering the full degree slice, shadows by divisibility,
power generators from k-tuples instead of multisets.
"""

import itertools

from lexres import (
    Monomial,
    RingContext,
    make_classified_spec,
)


def brute_cmp_lex(a, b):
    """Scan for the first differing exponent; bigger exponent wins."""
    for i in range(a.ctx.n):
        ea, eb = a.exponents[i], b.exponents[i]
        if ea != eb:
            return 1 if ea > eb else -1
    return 0


def brute_cmp_revlex(a, b):
    """a < b iff there is s with equal exponents above s and nu_s(a) > nu_s(b)."""
    for s in range(a.ctx.n - 1, -1, -1):
        if a.exponents[s] != b.exponents[s]:
            return -1 if a.exponents[s] > b.exponents[s] else 1
    return 0


def brute_cmp_prec(a, b, l):
    da = sum(a.exponents[:l])
    db = sum(b.exponents[:l])
    if da != db:
        return -1 if da < db else 1
    return brute_cmp_lex(a, b)


def all_monomials(ctx, d):
    """Every degree-d monomial via combinations with repetition."""
    out = []
    for combo in itertools.combinations_with_replacement(range(ctx.n), d):
        e = [0] * ctx.n
        for i in combo:
            e[i] += 1
        out.append(Monomial(ctx, e))
    return out


def interval_filter(u, v):
    """The lexsegment by brute filtering of the full degree slice."""
    return [
        m
        for m in sorted(all_monomials(u.ctx, u.degree), key=lambda m: m.exponents, reverse=True)
        if brute_cmp_lex(u, m) >= 0 and brute_cmp_lex(m, v) >= 0
    ]


def shadow_by_divisibility(segment, steps=1):
    """Shad^i(L) as the degree-(d+i) monomials divisible by some member."""
    segment = list(segment)
    ctx = segment[0].ctx
    d = segment[0].degree + steps
    return {
        m for m in all_monomials(ctx, d) if any(g.divides(m) for g in segment)
    }


def brute_power_products(segment, k):
    """Distinct products of k-tuples (not multisets) of generators."""
    seen = set()
    for tup in itertools.product(segment, repeat=k):
        e = [0] * segment[0].ctx.n
        for m in tup:
            for i, x in enumerate(m.exponents):
                e[i] += x
        seen.add(tuple(e))
    return seen


def random_monomial(rng, ctx, max_degree):
    d = rng.randrange(0, max_degree + 1)
    e = [0] * ctx.n
    for _ in range(d):
        e[rng.randrange(ctx.n)] += 1
    return Monomial(ctx, e)


def in_monomial_ideal(gens, m):
    return any(g.divides(m) for g in gens)


def theorem_family_specs():
    """Every (n, d, l, exponent) pattern of the classified shape for
    n in 3..6 and d in 2..3."""
    out = []
    for n in range(3, 7):
        ctx = RingContext(n)
        for d in (2, 3):
            for l in range(2, n):
                slots = n - l
                for cuts in itertools.combinations_with_replacement(range(slots), d - 1):
                    a = [0] * slots
                    for c in cuts:
                        a[c] += 1
                    ue = [0] * n
                    ue[0] = 1
                    for j, aj in enumerate(a):
                        ue[l + j] += aj
                    ve = [0] * n
                    ve[l - 1] = 1
                    ve[n - 1] += d - 1
                    out.append((n, d, l, tuple(ue), tuple(ve)))
    return out


def build_family_spec(n, ue, ve):
    ctx = RingContext(n)
    spec, _, cls = make_classified_spec(Monomial(ctx, ue), Monomial(ctx, ve))
    return spec, cls


def random_normalized_pair(rng, ctx, d):
    """A random (u, v) with deg d, nu_1(u) >= 1, nu_1(v) = 0, u >=_lex v."""
    while True:
        u = random_monomial_of_degree(rng, ctx, d)
        if u.exponents[0] == 0:
            continue
        v = random_monomial_of_degree(rng, ctx, d)
        if v.exponents[0] != 0:
            continue
        if brute_cmp_lex(u, v) >= 0:
            return u, v


def random_monomial_of_degree(rng, ctx, d):
    e = [0] * ctx.n
    for _ in range(d):
        e[rng.randrange(ctx.n)] += 1
    return Monomial(ctx, e)
