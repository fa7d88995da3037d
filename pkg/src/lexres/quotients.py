"""Colon ideals of generator prefixes and the linear-quotients check.

For the prefix (m_1,...,m_{i-1}) : (m_i) the candidate generators are the
quotients m_j / gcd(m_j, m_i); the colon is generated by variables exactly
when every quotient is divisible by a quotient that is itself a variable.
That early exit keeps the check near-linear; full minimalization runs only
on the failure path and in colon_minimal_generators.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .monomials import Monomial, min_tilde_index, cmp_prec, variable
from .powers import PowerIdeal


def _minimalize(monomials) -> set[Monomial]:
    """Drop every element divisible by another (distinct) element."""
    ms = sorted(set(monomials), key=lambda m: (m.degree, m.exponents))
    out: list[Monomial] = []
    for m in ms:
        if not any(g.divides(m) for g in out):
            out.append(m)
    return set(out)


def colon_minimal_generators(prefix, m: Monomial) -> set[Monomial]:
    """Minimal monomial generators of (prefix) : (m)."""
    quotients = []
    for g in prefix:
        q = g.try_divide(g.gcd(m))
        if q.is_one():
            return {q}
        quotients.append(q)
    return _minimalize(quotients)


@dataclass
class QuotientStructure:
    """set(m_i) for every generator of a power ideal, plus a verdict.

    sets[i] is the sorted tuple of variable indices generating the i-th
    colon; a non-linear colon is recorded as data (index and offending
    minimal generator), never raised.
    """

    power: PowerIdeal
    sets: list[tuple[int, ...]] = field(default_factory=list)
    status: str = "linear"
    failure_index: int | None = None
    offending: Monomial | None = None

    @property
    def is_linear(self) -> bool:
        return self.status == "linear"


def linear_quotients_check(pi: PowerIdeal) -> QuotientStructure:
    """Walk the increasing-revlex generators, collecting set(m_i)."""
    G = pi.exponent_matrix
    r = len(pi.generators)
    sets: list[tuple[int, ...]] = [()]
    for i in range(1, r):
        D = G[:i] - G[i]
        np.clip(D, 0, None, out=D)
        degs = D.sum(axis=1)
        unit_rows = np.nonzero(degs == 1)[0]
        var_cols = sorted(set(int(D[j].argmax()) for j in unit_rows))
        covered = (
            np.any(D[:, var_cols] > 0, axis=1) if var_cols else np.zeros(i, dtype=bool)
        )
        if not covered.all():
            colon = colon_minimal_generators(pi.generators[:i], pi.generators[i])
            bad = sorted(
                (g for g in colon if g.degree != 1),
                key=lambda g: g.exponents,
                reverse=True,
            )
            return QuotientStructure(
                power=pi,
                sets=sets,
                status="failure",
                failure_index=i,
                offending=bad[0],
            )
        m_min = int(np.nonzero(G[i])[0][0]) + 1
        for s in var_cols:
            # increasing revlex forces every colon variable past min(m_i)
            if s + 1 <= m_min:
                raise AssertionError(
                    f"set({pi.generators[i]}) contains x{s + 1} <= x_min"
                )
        sets.append(tuple(s + 1 for s in var_cols))
    return QuotientStructure(power=pi, sets=sets)


def set_cardinality_profile(qs: QuotientStructure) -> list[int]:
    """The multiset {|set(m_i)|}, sorted; the maximum fixes proj dim."""
    if not qs.is_linear:
        raise ValueError("quotient structure is not linear")
    return sorted(len(s) for s in qs.sets)


@dataclass(frozen=True)
class SetBoundViolation:
    bound: str  # "min-bound" or "tilde-min-bound"
    generator: Monomial
    s: int


def set_bound_report(qs: QuotientStructure) -> list[SetBoundViolation]:
    """Check s > min(m) for all s in set(m), and s > min(tilde m) whenever
    x_s*m/x_min(m) precedes v^k in the bar-degree-then-lex order.

    Returns the violations (empty = both facts hold).  Needs a classified
    spec for the second check; the first is order-theoretic and always runs.
    """
    violations: list[SetBoundViolation] = []
    pi = qs.power
    spec = pi.spec
    vk = spec.v**pi.k if spec.l is not None else None
    for m, st in zip(pi.generators, qs.sets):
        if not st:
            continue
        mn = m.min_index()
        for s in st:
            if s <= mn:
                violations.append(SetBoundViolation("min-bound", m, s))
                continue
            if vk is None:
                continue
            cand = (m * variable(m.ctx, s)).try_divide(variable(m.ctx, mn))
            if cmp_prec(cand, vk, spec.l) < 0 and s <= min_tilde_index(m, spec.l):
                violations.append(SetBoundViolation("tilde-min-bound", m, s))
    return violations
