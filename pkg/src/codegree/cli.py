"""Command-line front end.

Every JSON-emitting command writes a schema-stable report; hypergraph
construction commands emit the plain text format.  Exit codes: 0 all pass,
1 any fail, 2 usage or config error.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import fields
from pathlib import Path

from .badtriples import SearchLimits, audit_intersection_lemmas, search_bad_triple
from .campaigns import (
    SUITES,
    CHECK_BUILDERS,
    CampaignConfig,
    counterexample_audit,
    run_checks,
    verify_theorem,
)
from .errors import BudgetExceeded, HypothesisViolation, ParseError
from .extremal import enumerate_feasible, find_covering_kernel_set, max_feasible
from .hypergraph import Hypergraph, Params, format_hypergraph, parse_hypergraph
from .kernels import KernelSpec, build_kernel, codegree_check, counterexample_family, kernel_edge_count
from .reports import (
    FAIL,
    INCONCLUSIVE,
    PASS,
    Report,
    Verdict,
    canonical_json,
    hypergraph_json,
    sunflower_json,
    vertexset_json,
    witness_from_json,
    witness_json,
)
from .shadows import SetFamily, shadow, verify_kruskal_katona_cell
from .sunflowers import check_core_lower_bound, find_bounded_core_sunflower, find_sunflower

import json


def _emit(text: str, args) -> None:
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _emit_report(report: Report, args) -> int:
    _emit(canonical_json(report.to_json_dict()), args)
    return report.exit_code


def _read_hypergraph(path: str) -> Hypergraph:
    return parse_hypergraph(Path(path).read_text())


def _single_report(command: str, params: dict, check: str, status: str, details: dict, started: float) -> Report:
    return Report(
        command=command,
        params=params,
        verdicts=[Verdict(check, status, details)],
        timing_ms=int((time.monotonic() - started) * 1000),
    )


def _params_from_args(args, r: int) -> Params:
    return Params(k=args.k, r=r, s=args.s, t=args.t)


# ---------------------------------------------------------------------------
# kernel


def _cmd_kernel_build(args) -> int:
    H = build_kernel(KernelSpec.prefix(args.n, args.r, args.a, args.b))
    _emit(format_hypergraph(H), args)
    return 0


def _cmd_kernel_count(args) -> int:
    started = time.monotonic()
    count = kernel_edge_count(args.n, args.r, args.a, args.b)
    report = _single_report(
        "kernel-count",
        {"n": args.n, "r": args.r, "a": args.a, "b": args.b},
        "kernel-count",
        PASS,
        {"count": count},
        started,
    )
    return _emit_report(report, args)


def _cmd_kernel_check_codegree(args) -> int:
    started = time.monotonic()
    params = _params_from_args(args, args.r)
    rep = codegree_check(params, args.n)
    report = _single_report(
        "kernel-check-codegree",
        {"k": args.k, "s": args.s, "t": args.t, "r": args.r, "n": args.n},
        "codegree",
        PASS if rep.ok else FAIL,
        {
            "delta": rep.delta.to_json(),
            "expected": rep.expected,
            "tIntersecting": rep.t_intersecting,
            "guaranteed": rep.guaranteed,
        },
        started,
    )
    return _emit_report(report, args)


def _cmd_kernel_counterexample(args) -> int:
    H = counterexample_family(args.r, args.n)
    _emit(format_hypergraph(H), args)
    return 0


# ---------------------------------------------------------------------------
# sunflower


def _cmd_sunflower_find(args) -> int:
    H = _read_hypergraph(args.input)
    sf = find_sunflower(H, args.p)
    _emit(canonical_json(sunflower_json(sf)) if sf else "null\n", args)
    return 0


def _cmd_sunflower_bounded(args) -> int:
    H = _read_hypergraph(args.input)
    sf = find_bounded_core_sunflower(H, args.p, args.c)
    _emit(canonical_json(sunflower_json(sf)) if sf else "null\n", args)
    return 0


def _cmd_sunflower_check_core_bound(args) -> int:
    H = _read_hypergraph(args.input)
    params = _params_from_args(args, H.r)
    sf = check_core_lower_bound(H, params)
    _emit(canonical_json(sunflower_json(sf)) if sf else "null\n", args)
    return 1 if sf else 0  # a witness refutes the core lower bound


# ---------------------------------------------------------------------------
# shadow


def _cmd_shadow_compute(args) -> int:
    H = _read_hypergraph(args.input)
    family = SetFamily(H.n, H.r, H.edges)
    sh = shadow(family, args.i)
    out = Hypergraph.from_masks(H.n, args.i, (m.bits for m in sh.members))
    _emit(format_hypergraph(out), args)
    return 0


def _cmd_shadow_verify_kk(args) -> int:
    started = time.monotonic()
    v = verify_kruskal_katona_cell(args.k, args.s, args.i, args.m, args.budget)
    details = {
        "familySize": v.family_size,
        "required": v.required,
        "totalFamilies": v.total_families,
        "minShadow": v.min_shadow,
        "status": v.status,
    }
    if v.violator is not None:
        details["violator"] = [vertexset_json(m) for m in v.violator.members]
    status = {"verified": PASS, "violated": FAIL, "inconclusive": INCONCLUSIVE}[v.status]
    report = _single_report(
        "shadow-verify-kk",
        {"k": args.k, "s": args.s, "i": args.i, "m": args.m, "budget": args.budget},
        "kruskal-katona",
        status,
        details,
        started,
    )
    return _emit_report(report, args)


# ---------------------------------------------------------------------------
# badtriple


def _limits_from_args(args) -> SearchLimits:
    return SearchLimits(
        max_pairs=args.max_pairs,
        petal_cap=args.petal_cap,
        wall_clock_s=args.wall_clock,
    )


def _cmd_badtriple_search(args) -> int:
    started = time.monotonic()
    H = _read_hypergraph(args.input)
    params = _params_from_args(args, H.r)
    limits = _limits_from_args(args)
    cli_params = {"k": args.k, "s": args.s, "t": args.t, "input": args.input}
    try:
        witness = search_bad_triple(H, params, limits)
    except BudgetExceeded as exc:
        report = _single_report(
            "badtriple-search",
            cli_params,
            "bad-triple",
            INCONCLUSIVE,
            {"error": str(exc), "limits": limits.to_json(H.r), **exc.stats},
            started,
        )
        return _emit_report(report, args)
    details = {
        "witness": witness_json(witness) if witness else None,
        "limits": limits.to_json(H.r),
    }
    report = _single_report(
        "badtriple-search",
        cli_params,
        "bad-triple",
        FAIL if witness else PASS,
        details,
        started,
    )
    return _emit_report(report, args)


def _cmd_badtriple_check(args) -> int:
    started = time.monotonic()
    H = _read_hypergraph(args.input)
    params = _params_from_args(args, H.r)
    witness = witness_from_json(H.n, json.loads(Path(args.witness).read_text()))
    from .badtriples import evaluate_conditions

    checked = evaluate_conditions(H, witness, params)
    report = _single_report(
        "badtriple-check",
        {"k": args.k, "s": args.s, "t": args.t, "input": args.input},
        "bad-triple-conditions",
        FAIL if checked.is_bad else PASS,
        {"witness": witness_json(checked), "isBadTriple": checked.is_bad},
        started,
    )
    return _emit_report(report, args)


def _cmd_badtriple_lemmas(args) -> int:
    started = time.monotonic()
    H = _read_hypergraph(args.input)
    params = _params_from_args(args, H.r)
    limits = _limits_from_args(args)
    audit = audit_intersection_lemmas(H, params, limits)
    details = {
        "pairsExamined": audit.pairs_examined,
        "structures": audit.structures,
        "candidates": audit.candidates,
        "genuineBadTriples": audit.genuine_bad_triples,
        "meetBoundViolations": audit.meet_bound_violations,
        "nearMissMeetFailures": audit.near_miss_meet_failures,
        "nearMissNormalizedMatches": audit.near_miss_normalized_matches,
        "normalizedFormOk": audit.normalized_form_ok,
        "limits": limits.to_json(H.r),
    }
    report = _single_report(
        "badtriple-lemmas",
        {"k": args.k, "s": args.s, "t": args.t, "input": args.input},
        "intersection-lemmas",
        PASS if audit.ok else FAIL,
        details,
        started,
    )
    return _emit_report(report, args)


# ---------------------------------------------------------------------------
# extremal


def _cmd_extremal_max(args) -> int:
    started = time.monotonic()
    params = _params_from_args(args, args.r)
    res = max_feasible(
        args.n,
        params,
        budget_nodes=args.budget_nodes,
        symmetry=not args.no_symmetry,
    )
    details = {
        "maxEdges": res.max_edges,
        "witness": hypergraph_json(res.witness),
        "optimal": res.optimal,
        "nodesExplored": res.nodes_explored,
        "kernelCount": res.kernel_count,
        "matchesKernel": res.matches_kernel,
        "witnessIsKernel": res.witness_is_kernel,
    }
    report = _single_report(
        "extremal-max",
        {"n": args.n, "k": args.k, "s": args.s, "t": args.t, "r": args.r},
        "max-feasible",
        PASS if res.optimal else INCONCLUSIVE,
        details,
        started,
    )
    return _emit_report(report, args)


def _cmd_extremal_enumerate(args) -> int:
    started = time.monotonic()
    params = _params_from_args(args, args.r)
    families = list(
        enumerate_feasible(
            args.n, params, args.cap, canonical_only=args.canonical
        )
    )
    report = _single_report(
        "extremal-enumerate",
        {"n": args.n, "k": args.k, "s": args.s, "t": args.t, "r": args.r, "cap": args.cap},
        "enumerate-feasible",
        PASS,
        {"count": len(families), "families": [hypergraph_json(H) for H in families]},
        started,
    )
    return _emit_report(report, args)


def _cmd_extremal_check_subset_kernel(args) -> int:
    started = time.monotonic()
    H = _read_hypergraph(args.input)
    params = _params_from_args(args, H.r)
    w = find_covering_kernel_set(H, params)
    report = _single_report(
        "extremal-check-subset-kernel",
        {"k": args.k, "s": args.s, "t": args.t, "input": args.input},
        "covering-kernel-set",
        PASS,
        {"coveringSet": vertexset_json(w) if w else None},
        started,
    )
    return _emit_report(report, args)


# ---------------------------------------------------------------------------
# campaigns


def _cmd_verify_theorem(args) -> int:
    cells = []
    for spec in args.cell:
        parts = spec.split(",")
        if len(parts) != 5:
            raise ParseError(f"cell must be 'k,s,t,r,n', got {spec!r}")
        k, s, t, r, n = (int(p) for p in parts)
        cells.append({"k": k, "s": s, "t": t, "r": r, "n": n})
    cfg = CampaignConfig(
        workers=args.workers, seed=args.seed, budget_nodes=args.budget_nodes
    )
    return _emit_report(verify_theorem(cells, cfg), args)


def _cmd_counterexample_audit(args) -> int:
    cfg = CampaignConfig(workers=args.workers, seed=args.seed)
    return _emit_report(counterexample_audit(args.r, args.n, cfg), args)


_INT_CONFIG_KEYS = {f.name for f in fields(CampaignConfig)}


def parse_suite_config(text: str) -> dict:
    """Line-oriented `key = value` config; '#' comments; errors name lines."""
    raw: dict[str, tuple[int, str]] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise ParseError(f"expected 'key = value', got {stripped!r}", lineno)
        key, _, value = stripped.partition("=")
        key, value = key.strip(), value.strip()
        if key not in _INT_CONFIG_KEYS and key not in ("suite", "checks", "output"):
            raise ParseError(f"unknown config key {key!r}", lineno)
        raw[key] = (lineno, value)
    out: dict = {}
    for key, (lineno, value) in raw.items():
        if key in _INT_CONFIG_KEYS:
            try:
                out[key] = int(value)
            except ValueError:
                raise ParseError(f"key {key!r} needs an integer, got {value!r}", lineno) from None
        elif key == "checks":
            names = [c.strip() for c in value.split(",") if c.strip()]
            for name in names:
                if name not in CHECK_BUILDERS:
                    raise ParseError(f"unknown check {name!r}", lineno)
            out["checks"] = names
        elif key == "suite":
            if value not in SUITES:
                raise ParseError(f"unknown suite {value!r}", lineno)
            out["suite"] = value
        else:
            out["output"] = value
    return out


def _cmd_run_suite(args) -> int:
    config = parse_suite_config(Path(args.config).read_text())
    if "checks" in config:
        checks = config["checks"]
    elif "suite" in config:
        checks = SUITES[config["suite"]]
    else:
        raise ParseError("config must name a 'suite' or list 'checks'")
    cfg_kwargs = {k: v for k, v in config.items() if k in _INT_CONFIG_KEYS}
    cfg_kwargs.setdefault("workers", args.workers)
    cfg_kwargs.setdefault("seed", args.seed)
    cfg = CampaignConfig(**cfg_kwargs)
    report = run_checks(checks, cfg)
    if args.output is None and "output" in config:
        Path(config["output"]).write_text(canonical_json(report.to_json_dict()))
        return report.exit_code
    return _emit_report(report, args)


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="codegree",
        description="Exact verification toolkit for intersecting families",
    )
    parser.add_argument("--output", help="write the result to a file instead of stdout")
    parser.add_argument("--workers", type=int, default=1, help="parallel campaign cells")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
    sub = parser.add_subparsers(dest="command", required=True)

    kernel = sub.add_parser("kernel", help="kernel system constructions")
    ksub = kernel.add_subparsers(dest="subcommand", required=True)
    p = ksub.add_parser("build", help="emit an (a,b)-kernel system, X = {0..a-1}")
    for flag in ("--n", "--r", "--a", "--b"):
        p.add_argument(flag, type=int, required=True)
    p.set_defaults(func=_cmd_kernel_build)
    p = ksub.add_parser("count", help="closed-form kernel edge count")
    for flag in ("--n", "--r", "--a", "--b"):
        p.add_argument(flag, type=int, required=True)
    p.set_defaults(func=_cmd_kernel_count)
    p = ksub.add_parser("check-codegree", help="codegree of the extremal kernel vs C(k,s)")
    for flag in ("--k", "--s", "--t", "--r", "--n"):
        p.add_argument(flag, type=int, required=True)
    p.set_defaults(func=_cmd_kernel_check_codegree)
    p = ksub.add_parser("counterexample", help="the punctured 6-set family")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_kernel_counterexample)

    sunflower = sub.add_parser("sunflower", help="sunflower search")
    ssub = sunflower.add_subparsers(dest="subcommand", required=True)
    p = ssub.add_parser("find", help="greedy recursion, complete above r!(p-1)^r edges")
    p.add_argument("--input", required=True)
    p.add_argument("--p", type=int, required=True)
    p.set_defaults(func=_cmd_sunflower_find)
    p = ssub.add_parser("bounded", help="exhaustive search with a core-size cap")
    p.add_argument("--input", required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.set_defaults(func=_cmd_sunflower_bounded)
    p = ssub.add_parser("check-core-bound", help="hunt for a too-small core (must find none)")
    p.add_argument("--input", required=True)
    for flag in ("--k", "--s", "--t"):
        p.add_argument(flag, type=int, required=True)
    p.set_defaults(func=_cmd_sunflower_check_core_bound)

    shadow_p = sub.add_parser("shadow", help="shadows and the Kruskal-Katona cell check")
    shsub = shadow_p.add_subparsers(dest="subcommand", required=True)
    p = shsub.add_parser("compute", help="i-th shadow of a uniform family")
    p.add_argument("--input", required=True)
    p.add_argument("--i", type=int, required=True)
    p.set_defaults(func=_cmd_shadow_compute)
    p = shsub.add_parser("verify-kk", help="exhaustive shadow lower bound check")
    for flag in ("--k", "--s", "--i", "--m"):
        p.add_argument(flag, type=int, required=True)
    p.add_argument("--budget", type=int, default=10_000_000)
    p.set_defaults(func=_cmd_shadow_verify_kk)

    bad = sub.add_parser("badtriple", help="bad-triple certificates and search")
    bsub = bad.add_subparsers(dest="subcommand", required=True)
    for name, func, needs_witness in (
        ("search", _cmd_badtriple_search, False),
        ("check", _cmd_badtriple_check, True),
        ("lemmas", _cmd_badtriple_lemmas, False),
    ):
        p = bsub.add_parser(name)
        p.add_argument("--input", required=True)
        for flag in ("--k", "--s", "--t"):
            p.add_argument(flag, type=int, required=True)
        if needs_witness:
            p.add_argument("--witness", required=True)
        else:
            p.add_argument("--max-pairs", type=int, default=None)
            p.add_argument("--petal-cap", type=int, default=None)
            p.add_argument("--wall-clock", type=float, default=None)
        p.set_defaults(func=func)

    ext = sub.add_parser("extremal", help="exact maximization and enumeration")
    esub = ext.add_subparsers(dest="subcommand", required=True)
    p = esub.add_parser("max", help="branch-and-bound maximum feasible family")
    for flag in ("--n", "--k", "--s", "--t", "--r"):
        p.add_argument(flag, type=int, required=True)
    p.add_argument("--budget-nodes", type=int, default=None)
    p.add_argument("--no-symmetry", action="store_true")
    p.set_defaults(func=_cmd_extremal_max)
    p = esub.add_parser("enumerate", help="all feasible families up to a cap")
    for flag in ("--n", "--k", "--s", "--t", "--r"):
        p.add_argument(flag, type=int, required=True)
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--canonical", action="store_true")
    p.set_defaults(func=_cmd_extremal_enumerate)
    p = esub.add_parser("check-subset-kernel", help="find a kernel set covering H")
    p.add_argument("--input", required=True)
    for flag in ("--k", "--s", "--t"):
        p.add_argument(flag, type=int, required=True)
    p.set_defaults(func=_cmd_extremal_check_subset_kernel)

    p = sub.add_parser("verify-theorem", help="full per-cell verification campaign")
    p.add_argument("--cell", action="append", default=[], metavar="k,s,t,r,n")
    p.add_argument("--budget-nodes", type=int, default=100_000_000)
    p.set_defaults(func=_cmd_verify_theorem)

    p = sub.add_parser("counterexample-audit", help="audit the punctured 6-set family")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_counterexample_audit)

    p = sub.add_parser("run-suite", help="run a named campaign from a config file")
    p.add_argument("--config", required=True)
    p.set_defaults(func=_cmd_run_suite)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except HypothesisViolation as exc:
        print(f"hypothesis violation: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
