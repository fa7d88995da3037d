"""Command-line surface: build, inspect and verify resolutions.

Commands: gen, classify, power, quotients, resolve, verify, export.
Exit codes: 0 ok, 1 failed check, 2 input error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass

from .decomposition import (
    DecompositionContext,
    closed_form_matches_oracle,
    regularity_check,
    regularity_check_oracle,
)
from .errors import BudgetError
from .lexsegment import (
    enumerate_lexsegment,
    is_completely_lexsegment,
    make_classified_spec,
)
from .monomials import Monomial, RingContext
from .powers import power_generators
from .quotients import linear_quotients_check, set_bound_report
from .resolution import assemble_resolution, compose_check, minimality_check
from .serialize import (
    power_ideal_to_m2,
    resolution_to_json,
    resolution_to_text,
)
from .verify import euler_check, hilbert_numerator, random_rank_check

_FACTOR = re.compile(r"\*?x(\d+)(?:\^(\d+))?")


def parse_monomial(text: str, ctx: RingContext) -> Monomial:
    """Parse "1", "x1x3", "x2^2", "x1*x4^2" into a monomial of the ring."""
    text = text.strip()
    if text == "1":
        return Monomial(ctx, (0,) * ctx.n)
    exps = [0] * ctx.n
    pos = 0
    while pos < len(text):
        m = _FACTOR.match(text, pos)
        if m is None:
            raise ValueError(f"malformed monomial {text!r} at position {pos}")
        i = int(m.group(1))
        e = int(m.group(2)) if m.group(2) else 1
        if not 1 <= i <= ctx.n:
            raise ValueError(f"variable x{i} out of range 1..{ctx.n}")
        if e < 1:
            raise ValueError(f"exponent {e} must be >= 1 in {text!r}")
        exps[i - 1] += e
        pos = m.end()
    return Monomial(ctx, exps)


@dataclass
class JobSpec:
    command: str
    n: int
    u: str
    v: str
    k: int = 1
    depth: int | None = None
    seed: int = 0
    trials: int = 5
    fmt: str = "text"
    out: str | None = None
    oracle_g: bool = False
    first_shadow_persistence: bool = False


def _emit(job: JobSpec, text: str):
    if job.out:
        with open(job.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _spec_pipeline(job: JobSpec):
    ctx = RingContext(job.n)
    u = parse_monomial(job.u, ctx)
    v = parse_monomial(job.v, ctx)
    return make_classified_spec(u, v)


def _json_dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def run_command(job: JobSpec) -> int:
    if job.command == "gen":
        spec, _, _ = _spec_pipeline(job)
        segment = enumerate_lexsegment(spec.u, spec.v)
        if job.fmt == "json":
            _emit(job, _json_dumps({"n": job.n, "d": spec.d, "monomials": [list(m.exponents) for m in segment]}))
        else:
            _emit(job, "\n".join(str(m) for m in segment) + "\n")
        return 0

    if job.command == "classify":
        spec, record, cls = _spec_pipeline(job)
        verdict = is_completely_lexsegment(
            spec, depth=job.depth, first_shadow_persistence=job.first_shadow_persistence
        )
        if job.fmt == "json":
            payload = {
                "n": job.n,
                "d": spec.d,
                "normalized_u": list(spec.u.exponents),
                "normalized_v": list(spec.v.exponents),
                "shift": record.shift,
                "ring_drop": record.ring_drop,
                "completely_lex": {
                    "status": verdict.status,
                    "depth_checked": verdict.depth_checked,
                    "failing_depth": verdict.failing_depth,
                    "witness": list(verdict.witness.exponents) if verdict.witness else None,
                },
                "linear_form": {"status": "yes" if cls.has_linear_form else "no", "l": cls.linear_form_l},
                "notes": cls.notes,
            }
            _emit(job, _json_dumps(payload))
        else:
            lines = [
                f"normalized: u = {spec.u}, v = {spec.v}"
                + (f" (divided by x1^{record.shift})" if record.shift else ""),
                f"completely lexsegment: {verdict.describe()}",
                "linear-resolution shape: "
                + (f"yes with l = {cls.linear_form_l}" if cls.has_linear_form else "no"),
                f"notes: {cls.notes}",
            ]
            _emit(job, "\n".join(lines) + "\n")
        return 0

    if job.command == "power":
        spec, _, _ = _spec_pipeline(job)
        pi = power_generators(spec, job.k)
        if job.fmt == "json":
            _emit(job, _json_dumps({"n": job.n, "d": spec.d, "k": job.k, "generators": [list(g.exponents) for g in pi.generators]}))
        else:
            _emit(job, "\n".join(f"u{j + 1} = {g}" for j, g in enumerate(pi.generators)) + "\n")
        return 0

    if job.command == "quotients":
        spec, _, _ = _spec_pipeline(job)
        qs = linear_quotients_check(power_generators(spec, job.k))
        if job.fmt == "json":
            payload = {
                "n": job.n,
                "d": spec.d,
                "k": job.k,
                "status": qs.status,
                "failure_index": qs.failure_index,
                "offending": list(qs.offending.exponents) if qs.offending else None,
                "sets": [list(s) for s in qs.sets],
            }
            _emit(job, _json_dumps(payload))
        else:
            lines = [f"status: {qs.status}"]
            if not qs.is_linear:
                lines.append(
                    f"colon at u{qs.failure_index + 1} has non-variable generator {qs.offending}"
                )
            lines += [
                f"set(u{j + 1}) = {{{', '.join(map(str, s))}}}" for j, s in enumerate(qs.sets)
            ]
            _emit(job, "\n".join(lines) + "\n")
        return 1 if not qs.is_linear else 0

    if job.command in ("resolve", "export"):
        rc = _build_resolution(job)
        if job.fmt == "json":
            _emit(job, resolution_to_json(rc))
        elif job.fmt == "m2":
            _emit(job, power_ideal_to_m2(rc.power))
        else:
            _emit(job, resolution_to_text(rc))
        return 0

    if job.command == "verify":
        return _verify(job)

    raise ValueError(f"unknown command {job.command!r}")


def _build_resolution(job: JobSpec):
    spec, _, cls = _spec_pipeline(job)
    if not cls.has_linear_form and not job.oracle_g:
        raise ValueError(
            "the (u, v) shape is outside the classified linear-resolution form "
            f"({cls.notes}); rerun with --oracle-g to build from the definitional "
            "decomposition function (requires linear quotients and regularity)"
        )
    pi = power_generators(spec, job.k)
    qs = linear_quotients_check(pi)
    if not qs.is_linear:
        raise CheckFailure(
            f"linear quotients fail at u{qs.failure_index + 1}: "
            f"colon contains {qs.offending}"
        )
    return assemble_resolution(qs, use_oracle=not cls.has_linear_form)


class CheckFailure(RuntimeError):
    pass


def _verify(job: JobSpec) -> int:
    spec, _, cls = _spec_pipeline(job)
    pi = power_generators(spec, job.k)
    qs = linear_quotients_check(pi)
    lines = []
    ok = True

    def tick(name: str, passed: bool, detail: str = ""):
        nonlocal ok
        ok = ok and passed
        lines.append(f"[{'PASS' if passed else 'FAIL'}] {name}" + (f": {detail}" if detail else ""))

    tick("linear quotients", qs.is_linear,
         "" if qs.is_linear else f"fails at u{(qs.failure_index or 0) + 1}")
    if not qs.is_linear:
        _emit(job, "\n".join(lines) + "\n")
        return 1

    lemmas = set_bound_report(qs)
    tick("set(m) bounds (min / tilde-min)", not lemmas,
         "" if not lemmas else f"{len(lemmas)} violations, first {lemmas[0]}")

    if cls.has_linear_form:
        ctx = DecompositionContext.from_quotients(qs)
        agree, mismatch = closed_form_matches_oracle(ctx)
        tick("closed-form g equals definitional g", agree,
             "" if agree else f"first mismatch {mismatch}")
        reg = regularity_check(ctx)
    else:
        reg = regularity_check_oracle(qs)
    tick("decomposition function regular", reg.regular,
         "" if reg.regular else reg.describe())
    if not reg.regular:
        _emit(job, "\n".join(lines) + "\n")
        return 1

    rc = assemble_resolution(qs, use_oracle=not cls.has_linear_form)
    for i in range(0, rc.proj_dim):
        tick(f"d{i} ∘ d{i + 1} = 0", compose_check(rc, i))
    tick("minimality (entries are ±x_j)", minimality_check(rc))

    try:
        euler_ok = euler_check(rc)
        tick(
            "Euler characteristic equals Hilbert numerator",
            euler_ok,
            str(hilbert_numerator(rc.power.generators)) if euler_ok else "",
        )
    except BudgetError as exc:
        lines.append(f"[SKIP] Euler/Hilbert identity: {exc}")

    report = random_rank_check(rc, seed=job.seed, trials=job.trials)
    tick(
        f"rank additivity at {job.trials} random points (necessary condition)",
        report.passed,
        f"ranks {report.trials[0].ranks}" if report.trials else "",
    )

    _emit(job, "\n".join(lines) + "\n")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lexres",
        description="Minimal free resolutions of powers of lexsegment ideals with linear quotients",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, helptext in [
        ("gen", "print the lexsegment L(u,v), lex-descending"),
        ("classify", "normalize (u,v) and run both classifiers"),
        ("power", "print G(I^k) in increasing revlex order"),
        ("quotients", "print set(m) for every generator of I^k"),
        ("resolve", "build the minimal free resolution of S/I^k"),
        ("verify", "run all independent checks on the resolution"),
        ("export", "write the resolution in the chosen format"),
    ]:
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--n", type=int, required=True, help="number of variables")
        p.add_argument("--u", type=str, required=True, help="upper end of the lexsegment, e.g. x1x3")
        p.add_argument("--v", type=str, required=True, help="lower end of the lexsegment, e.g. x2x4")
        p.add_argument("--k", type=int, default=1, help="power of the ideal (default 1)")
        p.add_argument("--depth", type=int, default=None, help="shadow depth for classify (default n)")
        p.add_argument("--seed", type=int, default=0, help="seed for the randomized rank check")
        p.add_argument("--trials", type=int, default=5, help="random evaluation points per rank check")
        p.add_argument("--format", dest="fmt", choices=["json", "text", "m2"], default="text")
        p.add_argument("--out", type=str, default=None, help="output path (default stdout)")
        p.add_argument("--oracle-g", action="store_true", help="allow the definitional g outside the classified shape")
        p.add_argument(
            "--first-shadow-persistence",
            action="store_true",
            help="report 'yes' when the first shadow is a lexsegment set",
        )
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    job = JobSpec(
        command=args.command,
        n=args.n,
        u=args.u,
        v=args.v,
        k=args.k,
        depth=args.depth,
        seed=args.seed,
        trials=args.trials,
        fmt=args.fmt,
        out=args.out,
        oracle_g=args.oracle_g,
        first_shadow_persistence=args.first_shadow_persistence,
    )
    try:
        return run_command(job)
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    except CheckFailure as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
