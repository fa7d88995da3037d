"""The decomposition function of a power ideal with linear quotients.

Two routes to g(x_s * m): the closed form, which divides out x_min(m) or
x_min(tilde m) depending on how x_s*m/x_min(m) compares with v^k in the
bar-degree-then-lex order, and the definitional oracle, which scans the
increasing-revlex generator list for the earliest divisor.  The closed form
is only claimed for classified specs; the oracle is always available and is
the ground truth whenever the two are run side by side.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .monomials import Monomial, cmp_prec, min_tilde_index, variable
from .quotients import QuotientStructure


@dataclass(frozen=True)
class DecompositionContext:
    """Quotient structure plus the precomputed v^k and split index l."""

    qs: QuotientStructure
    vk: Monomial
    l: int

    @classmethod
    def from_quotients(cls, qs: QuotientStructure) -> "DecompositionContext":
        spec = qs.power.spec
        if spec.l is None:
            raise ValueError("spec is not classified: no split index l")
        return cls(qs=qs, vk=spec.v**qs.power.k, l=spec.l)


@dataclass(frozen=True)
class DecompositionRecord:
    """One closed-form evaluation: which branch fired and what it produced."""

    m: Monomial
    s: int
    branch: str  # "high": x_s*m/x_min(m) on or above v^k; "low": below
    g_value: Monomial
    coefficient: Monomial  # x_s*m / g_value, always a single variable


def g_closed_form(ctx: DecompositionContext, m: Monomial, s: int) -> DecompositionRecord:
    """Evaluate the closed form of g at x_s * m for s in set(m)."""
    pi = ctx.qs.power
    idx = pi.index_of(m)
    if s not in ctx.qs.sets[idx]:
        raise ValueError(f"x{s} is not in set({m})")
    xs_m = m * variable(m.ctx, s)
    cand = xs_m.try_divide(variable(m.ctx, m.min_index()))
    if cmp_prec(cand, ctx.vk, ctx.l) >= 0:
        branch, g = "high", cand
    else:
        branch, g = "low", xs_m.try_divide(variable(m.ctx, min_tilde_index(m, ctx.l)))
    if not pi.contains_generator(g):
        raise ValueError(
            f"closed form left G(I^k): g(x{s}*{m}) = {g} is not a generator "
            f"(branch {branch}); the instance violates the classified shape's guarantees"
        )
    coeff = xs_m.try_divide(g)
    if coeff.degree != 1:
        raise ValueError(f"coefficient {coeff} of g(x{s}*{m}) is not a variable")
    return DecompositionRecord(m=m, s=s, branch=branch, g_value=g, coefficient=coeff)


def g_oracle_index(qs: QuotientStructure, x: Monomial) -> int:
    """Position of the earliest generator (increasing revlex) dividing x."""
    pi = qs.power
    xv = np.array(x.exponents, dtype=np.int64)
    hits = np.all(pi.exponent_matrix <= xv, axis=1)
    pos = np.nonzero(hits)[0]
    if pos.size == 0:
        raise ValueError(f"{x} is not in I^{pi.k}")
    return int(pos[0])


def g_oracle(qs: QuotientStructure, x: Monomial) -> Monomial:
    """The decomposition function by definition: earliest dividing generator."""
    return qs.power.generators[g_oracle_index(qs, x)]


def closed_form_matches_oracle(ctx: DecompositionContext):
    """Compare both routes on every (m, s); returns (ok, first mismatch)."""
    qs = ctx.qs
    for m, st in zip(qs.power.generators, qs.sets):
        for s in st:
            rec = g_closed_form(ctx, m, s)
            orc = g_oracle(qs, m * variable(m.ctx, s))
            if rec.g_value != orc:
                return False, (m, s, rec.g_value, orc)
    return True, None


@dataclass(frozen=True)
class RegularityReport:
    regular: bool
    counterexample: tuple[Monomial, int, int] | None = None  # (m, s, offending t)

    def describe(self) -> str:
        if self.regular:
            return "regular: set(g(x_s*m)) ⊆ set(m) for every generator m and s in set(m)"
        m, s, t = self.counterexample
        return f"not regular: t={t} in set(g(x{s}*{m})) but not in set({m})"


def _regularity_scan(qs: QuotientStructure, ctx: DecompositionContext | None) -> RegularityReport:
    pi = qs.power
    set_lookup = qs.sets
    for idx, (m, st) in enumerate(zip(pi.generators, set_lookup)):
        for s in st:
            g_idx = g_oracle_index(qs, m * variable(m.ctx, s))
            if ctx is not None:
                rec = g_closed_form(ctx, m, s)
                if pi.index_of(rec.g_value) != g_idx:
                    raise ValueError(
                        f"closed form disagrees with oracle at ({m}, x{s}): "
                        f"{rec.g_value} vs {pi.generators[g_idx]}"
                    )
            g_set = set_lookup[g_idx]
            m_set = set(st)
            for t in g_set:
                if t not in m_set:
                    return RegularityReport(regular=False, counterexample=(m, s, t))
    return RegularityReport(regular=True)


def regularity_check(ctx: DecompositionContext) -> RegularityReport:
    """Verify set(g(x_s*m)) ⊆ set(m) for all (m, s), oracle-evaluated with the
    closed form cross-checked on every evaluation."""
    if not ctx.qs.is_linear:
        raise ValueError("quotient structure is not linear")
    return _regularity_scan(ctx.qs, ctx)


def regularity_check_oracle(qs: QuotientStructure) -> RegularityReport:
    """Regularity via the oracle alone; works without a classified spec."""
    if not qs.is_linear:
        raise ValueError("quotient structure is not linear")
    return _regularity_scan(qs, None)
