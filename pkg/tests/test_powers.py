import math
import random

import pytest

import support
from lexres import (
    BudgetError,
    Monomial,
    RingContext,
    bar_degree,
    enumerate_lexsegment,
    power_generators,
    prefix_membership,
)
from lexres.lexsegment import LexSegmentSpec


def test_example_order_k1(example_power):
    assert [str(g) for g in example_power.generators] == [
        "x2x4",
        "x1x4",
        "x2x3",
        "x1x3",
        "x2^2",
    ]


def test_example_k2_count_and_collision(example_spec, example_power_squared):
    gens = example_power_squared.generators
    assert len(gens) == 14  # 15 unordered pairs, one collision
    collision = Monomial(example_spec.ctx, (1, 1, 1, 1))  # u1u4 = u2u3
    assert example_power_squared.contains_generator(collision)
    segment = enumerate_lexsegment(example_spec.u, example_spec.v)
    assert {g.exponents for g in gens} == support.brute_power_products(segment, 2)


def test_single_generator_power():
    ctx = RingContext(3)
    u = Monomial(ctx, (1, 1, 0))
    spec = LexSegmentSpec(ctx=ctx, d=2, u=u, v=u)
    pi = power_generators(spec, 4)
    assert pi.generators == (u**4,)


def test_increasing_revlex_and_minimality(example_spec):
    from lexres.monomials import cmp_revlex

    for k in (1, 2, 3):
        pi = power_generators(example_spec, k)
        gens = pi.generators
        for a, b in zip(gens, gens[1:]):
            assert cmp_revlex(a, b) < 0
        for i, a in enumerate(gens):
            for b in gens[i + 1 :]:
                assert not a.divides(b) and not b.divides(a)


def test_products_match_tuple_oracle(example_spec):
    segment = enumerate_lexsegment(example_spec.u, example_spec.v)
    for k in (1, 2, 3):
        pi = power_generators(example_spec, k)
        assert {g.exponents for g in pi.generators} == support.brute_power_products(segment, k)


def test_bar_degree_bound_on_family():
    rng = random.Random(5)
    picks = rng.sample(support.theorem_family_specs(), 8)
    for n, d, l, ue, ve in picks:
        spec, cls = support.build_family_spec(n, ue, ve)
        assert cls.linear_form_l == l
        for k in (1, 2):
            pi = power_generators(spec, k)
            for g in pi.generators:
                assert bar_degree(g, l) >= k


def test_budget_guard(example_spec):
    with pytest.raises(BudgetError):
        power_generators(example_spec, 12, budget=100)
    assert math.comb(5 + 12 - 1, 12) > 100


def test_prefix_membership(example_power):
    u1, u2, u3, u4, u5 = example_power.generators
    ctx = example_power.spec.ctx
    assert prefix_membership(example_power, u1, Monomial(ctx, (0, 2, 0, 1)))  # u1 | x2^2 x4
    assert not prefix_membership(example_power, u1, Monomial(ctx, (1, 1, 1, 0)))  # only u3, u4 divide
    assert prefix_membership(example_power, u3, Monomial(ctx, (1, 1, 1, 0)))
    rng = random.Random(31)
    for _ in range(50):
        m = support.random_monomial(rng, ctx, 3) * u5
        assert prefix_membership(example_power, u5, m)
    with pytest.raises(ValueError):
        prefix_membership(example_power, Monomial(ctx, (2, 0, 0, 0)), u1)


def test_index_of(example_power):
    for i, g in enumerate(example_power.generators):
        assert example_power.index_of(g) == i
    with pytest.raises(ValueError):
        example_power.index_of(Monomial(example_power.spec.ctx, (2, 0, 0, 0)))
