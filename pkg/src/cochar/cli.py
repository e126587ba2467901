"""Command-line front end.

Exit codes: 0 success, 1 a verification failed, 2 usage error, 3 work limit.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .errors import CocharError, DegreeTooLarge, InsufficientTruncation
from .freealg import WorkLimits, berele_drensky_crosscheck, multilinear_quotient, relfree_dims
from .partitions import partitions_of
from .series import IdealSpec, formanek_product_many
from .symfunc import schur_expand, sm_decompose
from .verify import (FAIL, SKIPPED, VerificationReport, bounds_suite, check_formanek,
                     check_inclusion, check_product_additivity, check_sl_degree_bounds,
                     format_univariate, poly_degree, profile_for_spec, sl_degree_bounds,
                     sl_invariant_series)

MAX_N, MAX_D, MAX_M = 4, 8, 7
SUITES = ("bounds", "formanek", "inclusion", "sl-invariants", "additivity", "all")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    spec: IdealSpec | None
    n: int | None
    D: int | None
    m: int | None
    fmt: str
    limits: WorkLimits
    out: str | None
    force: bool


def _spec(text):
    if text is None:
        return None
    try:
        return IdealSpec.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _config(args) -> RunConfig:
    limits = WorkLimits.from_env()
    if args.limit_words is not None:
        if args.limit_words < 1:
            raise UsageError("--limit-words must be positive")
        limits = WorkLimits(args.limit_words, limits.max_m)
    if args.force:
        limits = WorkLimits(max(limits.max_words, 10 ** 12), 10 ** 6)
    cfg = RunConfig(_spec(getattr(args, "spec", None)), getattr(args, "n", None),
                    getattr(args, "D", None), getattr(args, "m", None),
                    args.format, limits, args.out, args.force)
    if cfg.n is not None and cfg.n < 1:
        raise UsageError("--n must be at least 1")
    if cfg.D is not None and cfg.D < 0:
        raise UsageError("--D must be nonnegative")
    if cfg.m is not None and cfg.m < 1:
        raise UsageError("--m must be at least 1")
    if not cfg.force:
        if cfg.n is not None and cfg.n > MAX_N:
            raise DegreeTooLarge(f"n={cfg.n} exceeds the cap {MAX_N} (use --force)")
        if cfg.D is not None and cfg.D > MAX_D:
            raise DegreeTooLarge(f"D={cfg.D} exceeds the cap {MAX_D} (use --force)")
        if cfg.m is not None and cfg.m > MAX_M:
            raise DegreeTooLarge(f"m={cfg.m} exceeds the cap {MAX_M} (use --force)")
    return cfg


def _need(cfg: RunConfig, *names):
    for name in names:
        if getattr(cfg, name) is None:
            raise UsageError(f"--{name} is required")


def _multidegree_order(mu):
    return (sum(mu), tuple(-x for x in mu))


# ------------------------------------------------------------------ commands


def cmd_hilbert(cfg: RunConfig) -> tuple[int, str]:
    _need(cfg, "spec", "n", "D")
    n, D = cfg.n, cfg.D
    dims = relfree_dims(cfg.spec, n, D, cfg.limits)
    formula = None
    if cfg.spec.k >= 2:
        parts = [relfree_dims((p,), n, D, cfg.limits).to_series() for p in cfg.spec.factors]
        formula = formanek_product_many(parts, n, D).poly
    order = sorted(dims.dims, key=_multidegree_order)

    if cfg.fmt == "json":
        doc = {"spec": cfg.spec.cli_form(), "n": n, "D": D,
               "series": dims.to_series().to_json()}
        if formula is not None:
            doc["formula"] = formula.to_json()
            doc["agree"] = formula == dims.to_series().poly
        return 0, json.dumps(doc, indent=2)

    header = [f"e{i}" for i in range(1, n + 1)] + ["dim"]
    if formula is not None:
        header.append("formula")
    rows = []
    for mu in order:
        row = [str(x) for x in mu] + [str(dims[mu])]
        if formula is not None:
            row.append(str(formula.coefficient(mu)))
        rows.append(row)
    if cfg.fmt == "csv":
        return 0, "\n".join(",".join(r) for r in [header] + rows)

    width = [max(len(r[i]) for r in [header] + rows) for i in range(len(header))]
    lines = [f"spec {cfg.spec} n={n} D={D}"]
    lines += ["  ".join(c.rjust(w) for c, w in zip(r, width)) for r in [header] + rows]
    lines.append("per degree: " + ",".join(map(str, dims.by_degree())))
    if formula is not None:
        lines.append("formula per degree: " + ",".join(map(str, formula.degree_sums())))
    return 0, "\n".join(lines)


def _part_str(lam) -> str:
    return "(" + ",".join(map(str, lam)) + ")"


def cmd_cocharacter(cfg: RunConfig, crosscheck: bool) -> tuple[int, str]:
    _need(cfg, "spec", "m")
    m = cfg.m
    codim, chi = multilinear_quotient(cfg.spec, m, cfg.limits)
    decomposition = sm_decompose(chi)
    code = 0
    verdict = None
    if crosscheck:
        ok = berele_drensky_crosscheck(cfg.spec, m, cfg.limits)
        verdict = "OK" if ok else "MISMATCH"
        code = 0 if ok else 1
    if cfg.fmt == "json":
        doc = {"spec": cfg.spec.cli_form(), "m": m, "codim": codim,
               "character": [{"cycle_type": list(rho), "value": chi[rho]}
                             for rho in partitions_of(m)],
               "decomposition": decomposition.to_json()["terms"]}
        if verdict is not None:
            doc["crosscheck"] = verdict
        return code, json.dumps(doc, indent=2)
    if cfg.fmt == "csv":
        lines = ["cycle_type,value"] + chi.to_csv_rows()
    else:
        lines = [f"c_{m} = {codim}"]
        lines += [f"{_part_str(lam)}: {c}" for lam, c in decomposition.items()]
    if verdict is not None:
        lines.append(f"crosscheck: {verdict}")
    return code, "\n".join(lines)


def cmd_verify(cfg: RunConfig, suite: str, spec_a, spec_b) -> tuple[int, str]:
    if suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}")
    pair = spec_a is not None and spec_b is not None
    reports = []
    if suite in ("bounds", "formanek", "sl-invariants", "all"):
        if suite != "all":
            _need(cfg, "spec", "n", "D")
        if cfg.spec is not None:
            _need(cfg, "n", "D")
            if suite in ("bounds", "all"):
                reports += bounds_suite(cfg.spec, cfg.n, cfg.D, cfg.limits)
            if suite in ("formanek", "all"):
                reports.append(check_formanek(cfg.spec, cfg.n, cfg.D, cfg.limits))
            if suite in ("sl-invariants", "all"):
                try:
                    reports.append(check_sl_degree_bounds(cfg.spec, cfg.n, cfg.D, cfg.limits))
                except InsufficientTruncation as exc:
                    if suite != "all":
                        raise
                    reports.append(VerificationReport(
                        "sl-invariants", {"spec": cfg.spec, "n": cfg.n, "D": cfg.D},
                        SKIPPED, notes=[str(exc)]))
    if suite in ("inclusion", "additivity", "all"):
        if suite != "all" and not pair:
            raise UsageError("--specA and --specB are required")
        if pair:
            _need(cfg, "n", "D")
            if suite in ("inclusion", "all"):
                reports.append(check_inclusion(spec_a, spec_b, cfg.n, cfg.D, cfg.limits))
            if suite in ("additivity", "all"):
                reports.append(check_product_additivity(spec_a, spec_b, cfg.n, cfg.D, cfg.limits))
    if not reports:
        raise UsageError("nothing to verify: give --spec and/or --specA/--specB")
    code = 1 if any(r.verdict == FAIL for r in reports) else 0
    if cfg.fmt == "json":
        return code, json.dumps([r.to_json() for r in reports], indent=2)
    if cfg.fmt == "csv":
        lines = ["claim,verdict,witnesses"]
        for r in reports:
            wit = " ".join(_part_str(w) if isinstance(w, (tuple, list)) else str(w)
                           for w in r.witnesses)
            lines.append(f"{r.claim},{r.verdict},{wit}")
        return code, "\n".join(lines)
    return code, "\n".join(r.to_text() for r in reports)


def cmd_invariants(cfg: RunConfig) -> tuple[int, str]:
    _need(cfg, "spec", "n", "D")
    n, D = cfg.n, cfg.D
    expansion = schur_expand(relfree_dims(cfg.spec, n, D, cfg.limits).to_series().poly)
    coeffs = sl_invariant_series(expansion, n)
    deg = poly_degree(coeffs)
    bounds = sl_degree_bounds(cfg.spec, n)
    code = 0
    results = []
    for name, b in bounds:
        if D < b:
            status = f"InsufficientTruncation (D={D} < {b})"
        elif deg > b:
            status = "violated"
            code = 1
        else:
            status = "certified"
        results.append((name, b, status))
    if cfg.fmt == "json":
        doc = {"spec": cfg.spec.cli_form(), "n": n, "D": D, "series": coeffs,
               "bounds": [{"name": nm, "value": b, "status": st} for nm, b, st in results]}
        return code, json.dumps(doc, indent=2)
    if cfg.fmt == "csv":
        lines = ["degree,coefficient"] + [f"{i},{c}" for i, c in enumerate(coeffs)]
        return code, "\n".join(lines)
    text = format_univariate(coeffs)
    if not results:
        prof = profile_for_spec(cfg.spec)
        return code, f"{text}; no bound applies (n={n} <= omega0={prof.omega0})"
    first = results[0]
    lines = [f"{text}; bound {first[0]} = {first[1]}: {first[2]}"]
    lines += [f"bound {nm} = {b}: {st}" for nm, b, st in results[1:]]
    return code, "\n".join(lines)


# --------------------------------------------------------------------- main


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cochar",
        description="Hilbert series, cocharacters and shape checks for products of "
                    "commutator T-ideals.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "table"), default="table")
    common.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
    common.add_argument("--force", action="store_true", help="lift the default size caps")
    common.add_argument("--limit-words", type=int, metavar="N",
                        help="cap on the number of words per computation")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hilbert", parents=[common], help="truncated Hilbert series")
    p.add_argument("--spec", required=True, help="comma-separated p_i, e.g. 2,1")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--D", type=int, required=True)

    p = sub.add_parser("cocharacter", parents=[common], help="S_m cocharacter and codimension")
    p.add_argument("--spec", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--crosscheck", action="store_true",
                   help="compare with the GL(m) Schur expansion")

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", required=True, choices=SUITES)
    p.add_argument("--spec")
    p.add_argument("--specA")
    p.add_argument("--specB")
    p.add_argument("--n", type=int)
    p.add_argument("--D", type=int)

    p = sub.add_parser("invariants", parents=[common], help="SL(n)-invariant Hilbert polynomial")
    p.add_argument("--spec", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--D", type=int, required=True)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = _config(args)
        if args.command == "hilbert":
            code, text = cmd_hilbert(cfg)
        elif args.command == "cocharacter":
            code, text = cmd_cocharacter(cfg, args.crosscheck)
        elif args.command == "verify":
            code, text = cmd_verify(cfg, args.suite, _spec(args.specA), _spec(args.specB))
        else:
            code, text = cmd_invariants(cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DegreeTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except InsufficientTruncation as exc:
        print(f"InsufficientTruncation: {exc}", file=sys.stderr)
        return 2
    except CocharError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
