"""Export formats for the resolution: JSON (round-trippable), text matrices
in the row-labeled layout, and a Macaulay2 cross-check script."""

from __future__ import annotations

import json

from .lexsegment import LexSegmentSpec
from .monomials import Monomial, RingContext
from .powers import PowerIdeal
from .quotients import QuotientStructure
from .resolution import BasisSymbol, ResolutionComplex, SignedVariableEntry, SignedVariableMatrix

JSON_ORDER_TAG = "increasing-revlex"


def resolution_to_dict(rc: ResolutionComplex) -> dict:
    """JSON-ready dict; key order is part of the format."""
    spec = rc.power.spec
    out = {
        "n": spec.ctx.n,
        "d": spec.d,
        "k": rc.power.k,
        "l": spec.l,
        "order": JSON_ORDER_TAG,
        "u": list(spec.u.exponents),
        "v": list(spec.v.exponents),
        "generators": [list(g.exponents) for g in rc.power.generators],
        "sets": [list(s) for s in rc.quotients.sets],
        "betti": list(rc.betti),
        "shifts": [list(s) for s in rc.shifts],
        "bases": {
            str(i): [{"sigma": list(b.sigma), "gen": b.gen} for b in symbols]
            for i, symbols in sorted(rc.bases.items())
        },
        "matrices": {
            str(i): {
                "rows": mat.nrows,
                "cols": mat.ncols,
                "entries": [
                    {"r": e.row, "c": e.col, "sign": e.sign, "var": e.var}
                    for e in mat.entries()
                ],
            }
            for i, mat in sorted(rc.matrices.items())
        },
    }
    return out


def resolution_to_json(rc: ResolutionComplex) -> str:
    return json.dumps(resolution_to_dict(rc), indent=2) + "\n"


def resolution_from_dict(data: dict) -> ResolutionComplex:
    """Rebuild the in-memory complex from its JSON form."""
    ctx = RingContext(data["n"])
    spec = LexSegmentSpec(
        ctx=ctx,
        d=data["d"],
        u=Monomial(ctx, data["u"]),
        v=Monomial(ctx, data["v"]),
        l=data["l"],
    )
    gens = [Monomial(ctx, e) for e in data["generators"]]
    pi = PowerIdeal(spec, data["k"], gens)
    qs = QuotientStructure(power=pi, sets=[tuple(s) for s in data["sets"]])
    kd = spec.d * data["k"]
    bases = {
        int(i): [
            BasisSymbol(sigma=tuple(b["sigma"]), gen=b["gen"], degree=kd + int(i) - 1)
            for b in symbols
        ]
        for i, symbols in data["bases"].items()
    }
    matrices = {}
    for i, mat in data["matrices"].items():
        columns = [[] for _ in range(mat["cols"])]
        for e in mat["entries"]:
            columns[e["c"]].append(
                SignedVariableEntry(row=e["r"], col=e["c"], sign=e["sign"], var=e["var"])
            )
        matrices[int(i)] = SignedVariableMatrix(mat["rows"], mat["cols"], columns)
    return ResolutionComplex(
        quotients=qs,
        bases=bases,
        d0=tuple(gens),
        matrices=matrices,
        betti=tuple(data["betti"]),
        shifts=tuple(tuple(s) for s in data["shifts"]),
        g_mode="imported",
    )


def resolution_from_json(text: str) -> ResolutionComplex:
    return resolution_from_dict(json.loads(text))


def matrix_grid(rc: ResolutionComplex, i: int) -> list[list[str]]:
    """The entries of d_i as strings ("x1", "-x3", "0"), rows x cols."""
    if i == 0:
        return [[str(g) for g in rc.d0]]
    mat = rc.matrices[i]
    grid = [["0"] * mat.ncols for _ in range(mat.nrows)]
    for e in mat.entries():
        grid[e.row][e.col] = ("-" if e.sign < 0 else "") + f"x{e.var}"
    return grid


def _row_labels(rc: ResolutionComplex, i: int) -> list[str]:
    if i == 0:
        return ["1"]
    return [b.label() for b in rc.bases[i]]


def resolution_to_text(rc: ResolutionComplex) -> str:
    spec = rc.power.spec
    lines = [
        f"S = K[x1..x{spec.ctx.n}],  I = L({spec.u}, {spec.v}),  k = {rc.power.k}"
        + (f",  l = {spec.l}" if spec.l is not None else ""),
        "generators of I^k (increasing revlex): "
        + ", ".join(f"u{j + 1} = {g}" for j, g in enumerate(rc.power.generators)),
        "sets: "
        + "; ".join(
            f"set(u{j + 1}) = {{{', '.join(map(str, s))}}}"
            for j, s in enumerate(rc.quotients.sets)
        ),
        "betti: " + str(tuple(rc.betti)),
        "shifts: "
        + " <- ".join(
            "S" if shift == 0 else f"S({shift})^{rank}" for shift, rank in rc.shifts
        ),
    ]
    for i in range(0, rc.proj_dim):
        lines.append("")
        lines.append(f"d{i}  (rows F_{i}, cols F_{i + 1}):")
        grid = matrix_grid(rc, i)
        labels = _row_labels(rc, i)
        width = max((len(s) for row in grid for s in row), default=1)
        lwidth = max(len(s) for s in labels)
        col_syms = rc.bases[i + 1]
        lines.append(" " * (lwidth + 2) + "  ".join(b.label() for b in col_syms))
        for label, row in zip(labels, grid):
            lines.append(f"{label:<{lwidth}}  " + "  ".join(f"{s:>{width}}" for s in row))
    return "\n".join(lines) + "\n"


def power_ideal_to_m2(pi: PowerIdeal) -> str:
    """A Macaulay2 script declaring the ring and ideal, for external checks.

    The script is plain text output; nothing here shells out to M2.
    """
    n = pi.spec.ctx.n
    ring_vars = ",".join(f"x{i}" for i in range(1, n + 1))
    gens = ",".join(_m2_monomial(g) for g in pi.generators)
    return (
        f"-- generators of I^{pi.k} for I = L({pi.spec.u}, {pi.spec.v})\n"
        f"R = QQ[{ring_vars}];\n"
        f"I = ideal({gens});\n"
        "C = res coker gens I;\n"
        "betti C\n"
    )


def _m2_monomial(m: Monomial) -> str:
    if m.degree == 0:
        return "1"
    parts = []
    for i, e in enumerate(m.exponents):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts)
