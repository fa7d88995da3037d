import random

import pytest

import support
from lexres import (
    Monomial,
    RingContext,
    colon_minimal_generators,
    linear_quotients_check,
    power_generators,
    set_cardinality_profile,
    set_bound_report,
)
from lexres.lexsegment import LexSegmentSpec
from lexres.powers import PowerIdeal


def test_example_sets(example_quotients):
    assert example_quotients.is_linear
    assert example_quotients.sets == [(), (2,), (4,), (2, 4), (3, 4)]


def test_colon_examples(example_power):
    u1, u2, u3, u4, u5 = example_power.generators
    ctx = example_power.spec.ctx
    x2 = Monomial(ctx, (0, 1, 0, 0))
    x4 = Monomial(ctx, (0, 0, 0, 1))
    assert colon_minimal_generators((u1, u2, u3), u4) == {x2, x4}
    assert colon_minimal_generators((u1,), u2) == {x2}
    assert colon_minimal_generators((), u1) == set()


def test_colon_with_nonlinear_result():
    ctx = RingContext(3)
    a = Monomial(ctx, (2, 0, 0))
    b = Monomial(ctx, (0, 0, 2))
    colon = colon_minimal_generators((a,), b)
    assert colon == {a}  # gcd is 1: the quotient is x1^2, degree 2


def test_colon_membership_oracle_bothways(example_power, example_power_squared):
    rng = random.Random(41)
    for pi in (example_power, example_power_squared):
        gens = pi.generators
        for _ in range(1000):
            i = rng.randrange(1, len(gens))
            prefix = gens[:i]
            m = gens[i]
            colon = colon_minimal_generators(prefix, m)
            z = support.random_monomial(rng, pi.spec.ctx, 4)
            in_colon = support.in_monomial_ideal(colon, z)
            in_prefix_after_mul = support.in_monomial_ideal(prefix, z * m)
            assert in_colon == in_prefix_after_mul


def test_linear_quotients_k2(example_quotients_squared):
    qs = example_quotients_squared
    assert qs.is_linear
    assert qs.sets[0] == ()
    assert set_bound_report(qs) == []
    # independent recomputation through the public colon operation
    pi = qs.power
    for i in range(1, len(pi.generators)):
        colon = colon_minimal_generators(pi.generators[:i], pi.generators[i])
        assert all(g.degree == 1 for g in colon)
        assert tuple(sorted(g.min_index() for g in colon)) == qs.sets[i]


def test_membership_characterization_remark(example_quotients):
    # s in set(m) iff there are w <_revlex m and t with x_s m = x_t w
    pi = example_quotients.power
    gens = pi.generators
    ctx = pi.spec.ctx
    for i, (m, st) in enumerate(zip(gens, example_quotients.sets)):
        for s in range(1, ctx.n + 1):
            witness = None
            for w in gens[:i]:
                q = (m * Monomial(ctx, tuple(1 if j == s - 1 else 0 for j in range(ctx.n)))).try_divide(w)
                if q is not None and q.degree == 1:
                    witness = (w, q.min_index())
                    break
            assert (s in st) == (witness is not None)
            if witness is not None:
                w, t = witness
                assert s > t
                assert m.exponents[t - 1] >= 1


def test_failure_is_data():
    # increasing revlex orders these as x2^2, x1^2; the colon
    # (x2^2):(x1^2) is generated by x2^2, which is not a variable
    ctx = RingContext(3)
    a = Monomial(ctx, (2, 0, 0))
    b = Monomial(ctx, (0, 2, 0))
    spec = LexSegmentSpec(ctx=ctx, d=2, u=a, v=b)
    pi = PowerIdeal(spec, 1, sorted([a, b], key=lambda m: tuple(-e for e in reversed(m.exponents))))
    assert pi.generators == (b, a)
    qs = linear_quotients_check(pi)
    assert not qs.is_linear
    assert qs.failure_index == 1
    assert qs.offending == b
    with pytest.raises(ValueError):
        set_cardinality_profile(qs)


def test_single_generator_profile():
    ctx = RingContext(3)
    u = Monomial(ctx, (1, 1, 0))
    spec = LexSegmentSpec(ctx=ctx, d=2, u=u, v=u)
    qs = linear_quotients_check(power_generators(spec, 2))
    assert qs.is_linear and qs.sets == [()]
    assert set_cardinality_profile(qs) == [0]


def test_profile_example(example_quotients, example_quotients_squared):
    assert set_cardinality_profile(example_quotients) == [0, 1, 1, 2, 2]
    profile = set_cardinality_profile(example_quotients_squared)
    assert len(profile) == 14 and profile[0] == 0


def test_set_lemmas_on_family_samples():
    rng = random.Random(2)
    picks = rng.sample(support.theorem_family_specs(), 6)
    for n, d, l, ue, ve in picks:
        spec, _ = support.build_family_spec(n, ue, ve)
        for k in (1, 2):
            qs = linear_quotients_check(power_generators(spec, k))
            assert qs.is_linear
            assert set_bound_report(qs) == []
