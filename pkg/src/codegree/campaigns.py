"""Verification campaigns: named checks over parameter grids.

Each check expands into self-contained cells that run independently (and in
parallel under a worker pool); per-cell errors become fail verdicts, budget
exhaustion becomes "inconclusive", and the assembled report is byte-identical
for identical inputs regardless of worker count (timing aside).
"""

from __future__ import annotations

import multiprocessing
import random
import time
from dataclasses import asdict, dataclass
from math import comb

from .badtriples import SearchLimits, search_bad_triple
from .bitset import iter_masks_of_size
from .errors import BudgetExceeded
from .extremal import enumerate_feasible, exhaustive_max, max_feasible
from .hypergraph import Hypergraph, Params, is_t_intersecting, min_positive_degree
from .kernels import (
    codegree_check,
    counterexample_family,
    extremal_family,
    kernel_edge_count,
)
from .reports import (
    FAIL,
    INCONCLUSIVE,
    PASS,
    Report,
    Verdict,
    vertexset_json,
    witness_json,
)
from .shadows import DEFAULT_FAMILY_BUDGET, verify_kruskal_katona_cell
from .sunflowers import erdos_rado_bound, find_sunflower, validate_sunflower

DEFAULT_BUDGET_NODES = 100_000_000
SUNFLOWER_GROUND = 20
_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class CampaignConfig:
    """Budgets and grid bounds for the named checks; all fields overridable
    from suite config files."""

    workers: int = 1
    seed: int = 0
    budget_nodes: int = DEFAULT_BUDGET_NODES
    kk_budget: int = DEFAULT_FAMILY_BUDGET
    sunflower_instances: int = 200
    bnb_cells: int = 50
    codegree_k_max: int = 4
    codegree_t_max: int = 3
    codegree_r_max: int = 5
    triv_k_max: int = 4
    triv_t_max: int = 4
    triv_n_max: int = 7
    kk_k_max: int = 5
    kk_s_max: int = 3
    kk_m_max: int = 7
    nobad_n_max: int = 10


def _mix(seed: int, *parts: int) -> int:
    h = seed & _MASK64
    for p in parts:
        h = (h ^ (p & _MASK64)) * 0x100000001B3 & _MASK64
    return h


# ---------------------------------------------------------------------------
# cell builders: one (check, cell_id, payload) triple per unit of work


def _cells_counterexample(cfg: CampaignConfig) -> list[tuple]:
    return [("counterexample-audit", "r=4,n=12", {"r": 4, "n": 12})]


def _codegree_grid(cfg: CampaignConfig):
    for k in range(1, cfg.codegree_k_max + 1):
        for s in range(1, k + 1):
            for t in range(s, cfg.codegree_t_max + 1):
                for r in range(k - s + t, cfg.codegree_r_max + 1):
                    yield k, s, t, r, (2 * k - 2 * s + t) + r


def _cells_codegree(cfg: CampaignConfig) -> list[tuple]:
    return [
        (
            "codegree-grid",
            f"k={k},s={s},t={t},r={r},n={n}",
            {"k": k, "s": s, "t": t, "r": r, "n": n},
        )
        for k, s, t, r, n in _codegree_grid(cfg)
    ]


def _cells_sunflower(cfg: CampaignConfig) -> list[tuple]:
    cells = []
    for r in (1, 2, 3):
        for p in (2, 3):
            cells.append(
                (
                    "sunflower-random",
                    f"r={r},p={p}",
                    {
                        "r": r,
                        "p": p,
                        "n": SUNFLOWER_GROUND,
                        "instances": cfg.sunflower_instances,
                        "seed": _mix(cfg.seed, 1, r, p),
                    },
                )
            )
    return cells


def _cells_kk(cfg: CampaignConfig) -> list[tuple]:
    cells = []
    for k in range(2, cfg.kk_k_max + 1):
        for s in range(1, min(cfg.kk_s_max, k - 1) + 1):
            for i in range(0, s + 1):
                for m in range(s, cfg.kk_m_max + 1):
                    if comb(m, s) < comb(k - 1, s):
                        continue
                    cells.append(
                        (
                            "kk-grid",
                            f"k={k},s={s},i={i},m={m}",
                            {"k": k, "s": s, "i": i, "m": m, "budget": cfg.kk_budget},
                        )
                    )
    return cells


def _cells_theorem(cfg: CampaignConfig) -> list[tuple]:
    pinned = [
        {"n": 6, "k": 2, "s": 1, "t": 1, "r": 2, "expected": 3},
        {"n": 5, "k": 1, "s": 1, "t": 1, "r": 2, "expected": 4},
    ]
    return [
        (
            "theorem-cells",
            f"n={p['n']},k={p['k']},s={p['s']},t={p['t']},r={p['r']}",
            {**p, "budget": cfg.budget_nodes},
        )
        for p in pinned
    ]


def _cells_triv(cfg: CampaignConfig) -> list[tuple]:
    cells = []
    for k in range(1, cfg.triv_k_max + 1):
        for s in range(1, k + 1):
            for t in range(s, cfg.triv_t_max + 1):
                for r in range(t, (k - s + t - 1) + 1):
                    for n in range(r, cfg.triv_n_max + 1):
                        cells.append(
                            (
                                "triv-grid",
                                f"k={k},s={s},t={t},r={r},n={n}",
                                {
                                    "k": k,
                                    "s": s,
                                    "t": t,
                                    "r": r,
                                    "n": n,
                                    "budget": cfg.budget_nodes,
                                },
                            )
                        )
    return cells


def _cells_nobad(cfg: CampaignConfig) -> list[tuple]:
    cells = [
        (
            "nobad-enumerate",
            "n=5,k=2,s=1,t=1,r=2",
            {"n": 5, "k": 2, "s": 1, "t": 1, "r": 2},
        )
    ]
    for k, s, t, r, n in _codegree_grid(cfg):
        if n <= cfg.nobad_n_max:
            cells.append(
                (
                    "nobad-kernel",
                    f"k={k},s={s},t={t},r={r},n={n}",
                    {"k": k, "s": s, "t": t, "r": r, "n": n},
                )
            )
    cells.append(
        (
            "nobad-counterexample",
            "r=4,n=12,k=4,s=2,t=2",
            {"r": 4, "n": 12, "k": 4, "s": 2, "t": 2},
        )
    )
    return cells


def _bnb_pool() -> list[tuple[int, int, int, int, int]]:
    pool = []
    for r in range(1, 7):
        for n in range(r, 17):
            if comb(n, r) > 16:
                continue
            for k in range(1, 5):
                for s in range(1, min(k, r) + 1):
                    for t in range(s, r + 1):
                        pool.append((n, r, k, s, t))
    return pool


def _cells_bnb(cfg: CampaignConfig) -> list[tuple]:
    pool = _bnb_pool()
    rng = random.Random(_mix(cfg.seed, 2))
    chosen = rng.sample(pool, min(cfg.bnb_cells, len(pool)))
    return [
        (
            "bnb-oracle",
            f"cell{idx:02d}:n={n},r={r},k={k},s={s},t={t}",
            {
                "n": n,
                "r": r,
                "k": k,
                "s": s,
                "t": t,
                "budget": cfg.budget_nodes,
            },
        )
        for idx, (n, r, k, s, t) in enumerate(chosen)
    ]


# ---------------------------------------------------------------------------
# cell executors


def _run_counterexample(payload: dict) -> tuple[str, dict]:
    r, n = payload["r"], payload["n"]
    H = counterexample_family(r, n)
    expected_edges = kernel_edge_count(n, r, 6, 4) - comb(n - 4, r - 4)
    delta = min_positive_degree(H, r - 2)
    removed_core_edges = sum(1 for m in H.masks if m & 0b1111 == 0b1111)
    two_intersecting = is_t_intersecting(H, 2)
    details = {
        "edges": len(H),
        "expectedEdges": expected_edges,
        "delta": delta.to_json(),
        "expectedDelta": 5,
        "twoIntersecting": two_intersecting,
        "removedFourSetEdges": removed_core_edges,
    }
    ok = (
        len(H) == expected_edges
        and delta == 5
        and two_intersecting
        and removed_core_edges == 0
    )
    return (PASS if ok else FAIL), details


def _run_codegree(payload: dict) -> tuple[str, dict]:
    params = Params(k=payload["k"], r=payload["r"], s=payload["s"], t=payload["t"])
    rep = codegree_check(params, payload["n"])
    details = {
        "delta": rep.delta.to_json(),
        "expected": rep.expected,
        "tIntersecting": rep.t_intersecting,
        "guaranteed": rep.guaranteed,
    }
    return (PASS if rep.ok else FAIL), details


def _run_sunflower(payload: dict) -> tuple[str, dict]:
    r, p, n = payload["r"], payload["p"], payload["n"]
    bound = erdos_rado_bound(r, p)
    universe = list(iter_masks_of_size(n, r))
    rng = random.Random(payload["seed"])
    failures = 0
    for _ in range(payload["instances"]):
        H = Hypergraph.from_masks(n, r, rng.sample(universe, bound + 1))
        sf = find_sunflower(H, p)
        if sf is None or sf.petal_count < p:
            failures += 1
            continue
        validate_sunflower(sf, H)  # raises on a malformed witness
    details = {
        "instances": payload["instances"],
        "bound": bound,
        "edgesPerInstance": bound + 1,
        "failures": failures,
    }
    return (PASS if failures == 0 else FAIL), details


def _run_kk(payload: dict) -> tuple[str, dict]:
    v = verify_kruskal_katona_cell(
        payload["k"], payload["s"], payload["i"], payload["m"], payload["budget"]
    )
    details = {
        "familySize": v.family_size,
        "required": v.required,
        "totalFamilies": v.total_families,
        "minShadow": v.min_shadow,
        "status": v.status,
    }
    if v.violator is not None:
        details["violator"] = [vertexset_json(m) for m in v.violator.members]
    status = {"verified": PASS, "violated": FAIL, "inconclusive": INCONCLUSIVE}[
        v.status
    ]
    return status, details


def _run_theorem(payload: dict) -> tuple[str, dict]:
    params = Params(k=payload["k"], r=payload["r"], s=payload["s"], t=payload["t"])
    res = max_feasible(payload["n"], params, budget_nodes=payload["budget"])
    oracle_value, _ = exhaustive_max(payload["n"], params)
    details = {
        "maxEdges": res.max_edges,
        "expected": payload["expected"],
        "kernelCount": res.kernel_count,
        "oracleMaxEdges": oracle_value,
        "optimal": res.optimal,
        "witnessIsKernel": res.witness_is_kernel,
        "nodesExplored": res.nodes_explored,
    }
    ok = (
        res.optimal
        and res.max_edges == payload["expected"]
        and res.max_edges == res.kernel_count
        and res.max_edges == oracle_value
        and res.witness_is_kernel
    )
    if not res.optimal:
        return INCONCLUSIVE, details
    return (PASS if ok else FAIL), details


def _run_triv(payload: dict) -> tuple[str, dict]:
    params = Params(k=payload["k"], r=payload["r"], s=payload["s"], t=payload["t"])
    res = max_feasible(payload["n"], params, budget_nodes=payload["budget"])
    details = {
        "maxEdges": res.max_edges,
        "optimal": res.optimal,
        "nodesExplored": res.nodes_explored,
    }
    if not res.optimal:
        return INCONCLUSIVE, details
    return (PASS if res.max_edges == 0 else FAIL), details


def _run_nobad_enumerate(payload: dict) -> tuple[str, dict]:
    params = Params(k=payload["k"], r=payload["r"], s=payload["s"], t=payload["t"])
    checked = 0
    for H in enumerate_feasible(payload["n"], params):
        checked += 1
        witness = search_bad_triple(H, params)
        if witness is not None:
            return FAIL, {"familiesChecked": checked, "witness": witness_json(witness)}
    return PASS, {"familiesChecked": checked, "witnesses": 0}


def _run_nobad_kernel(payload: dict) -> tuple[str, dict]:
    params = Params(k=payload["k"], r=payload["r"], s=payload["s"], t=payload["t"])
    H = extremal_family(params, payload["n"])
    witness = search_bad_triple(H, params)
    details = {"edges": len(H), "witnesses": 0 if witness is None else 1}
    if witness is not None:
        details["witness"] = witness_json(witness)
        return FAIL, details
    return PASS, details


def _run_nobad_counterexample(payload: dict) -> tuple[str, dict]:
    params = Params(k=payload["k"], r=payload["r"], s=payload["s"], t=payload["t"])
    H = counterexample_family(payload["r"], payload["n"])
    witness = search_bad_triple(H, params)
    details = {"edges": len(H), "witnesses": 0 if witness is None else 1}
    if witness is not None:
        details["witness"] = witness_json(witness)
        return FAIL, details
    return PASS, details


def _run_bnb(payload: dict) -> tuple[str, dict]:
    params = Params(k=payload["k"], r=payload["r"], s=payload["s"], t=payload["t"])
    res = max_feasible(payload["n"], params, budget_nodes=payload["budget"])
    oracle_value, _ = exhaustive_max(payload["n"], params)
    details = {
        "maxEdges": res.max_edges,
        "oracleMaxEdges": oracle_value,
        "optimal": res.optimal,
        "nodesExplored": res.nodes_explored,
    }
    if not res.optimal:
        return INCONCLUSIVE, details
    return (PASS if res.max_edges == oracle_value else FAIL), details


def _run_theorem_verify(payload: dict) -> tuple[str, dict]:
    """One cell of the theorem verification campaign: kernel, codegree claim,
    exact maximum, and a bad-triple sweep of the witness."""
    try:
        params = Params(
            k=payload["k"], r=payload["r"], s=payload["s"], t=payload["t"]
        )
    except ValueError as exc:
        return FAIL, {"error": f"outside theorem regime: {exc}"}
    n = payload["n"]
    a, b = params.kernel_dimensions()
    details: dict = {"kernelSetSize": a, "kernelThreshold": b}
    codegree_ok = True
    kernel_count_matches = True
    if params.r >= b and n >= a:
        rep = codegree_check(params, n)
        details["codegree"] = {
            "delta": rep.delta.to_json(),
            "expected": rep.expected,
            "tIntersecting": rep.t_intersecting,
            "guaranteed": rep.guaranteed,
        }
        codegree_ok = rep.ok or not rep.guaranteed
        kernel_count_matches = len(extremal_family(params, n)) == kernel_edge_count(
            n, params.r, a, b
        )
        details["kernelCountMatches"] = kernel_count_matches
    res = max_feasible(n, params, budget_nodes=payload["budget"])
    details.update(
        {
            "maxEdges": res.max_edges,
            "kernelCount": res.kernel_count,
            "matchesKernel": res.matches_kernel,
            "witnessIsKernel": res.witness_is_kernel,
            "optimal": res.optimal,
            "nodesExplored": res.nodes_explored,
        }
    )
    bad = search_bad_triple(res.witness, params)
    details["badTripleWitness"] = None if bad is None else witness_json(bad)
    if not res.optimal:
        return INCONCLUSIVE, details
    if params.r < b:
        ok = res.max_edges == 0
    else:
        ok = (
            res.max_edges >= res.kernel_count
            and bad is None
            and codegree_ok
            and kernel_count_matches
        )
    return (PASS if ok else FAIL), details


CHECK_BUILDERS = {
    "counterexample-audit": _cells_counterexample,
    "codegree-grid": _cells_codegree,
    "sunflower-random": _cells_sunflower,
    "kk-grid": _cells_kk,
    "theorem-cells": _cells_theorem,
    "triv-grid": _cells_triv,
    "nobad": _cells_nobad,
    "bnb-oracle": _cells_bnb,
}

_EXECUTORS = {
    "counterexample-audit": _run_counterexample,
    "codegree-grid": _run_codegree,
    "sunflower-random": _run_sunflower,
    "kk-grid": _run_kk,
    "theorem-cells": _run_theorem,
    "triv-grid": _run_triv,
    "nobad-enumerate": _run_nobad_enumerate,
    "nobad-kernel": _run_nobad_kernel,
    "nobad-counterexample": _run_nobad_counterexample,
    "bnb-oracle": _run_bnb,
    "theorem-verify": _run_theorem_verify,
}

# campaign order of the full acceptance run; "quick" is the same pinned set
ACCEPTANCE_CHECKS = [
    "counterexample-audit",
    "codegree-grid",
    "sunflower-random",
    "kk-grid",
    "theorem-cells",
    "triv-grid",
    "nobad",
    "bnb-oracle",
]

SUITES = {
    "quick": ACCEPTANCE_CHECKS,
    "acceptance": ACCEPTANCE_CHECKS,
}


def _run_cell(cell: tuple) -> dict:
    kind, cell_id, payload = cell
    label = f"{kind}[{cell_id}]"
    try:
        status, details = _EXECUTORS[kind](payload)
    except BudgetExceeded as exc:
        return {
            "check": label,
            "status": INCONCLUSIVE,
            "details": {"error": str(exc), **exc.stats},
        }
    except Exception as exc:  # captured per cell, never aborts the campaign
        return {
            "check": label,
            "status": FAIL,
            "details": {"error": f"{type(exc).__name__}: {exc}"},
        }
    return {"check": label, "status": status, "details": details}


def _execute(cells: list[tuple], workers: int) -> list[Verdict]:
    if workers > 1 and len(cells) > 1:
        with multiprocessing.Pool(workers) as pool:
            raw = pool.map(_run_cell, cells)
    else:
        raw = [_run_cell(c) for c in cells]
    return [Verdict(**v) for v in raw]


def _config_echo(cfg: CampaignConfig) -> dict:
    # workers is execution machinery, not an input: reports must not depend on it
    echo = asdict(cfg)
    del echo["workers"]
    return echo


def run_checks(names: list[str], cfg: CampaignConfig) -> Report:
    for name in names:
        if name not in CHECK_BUILDERS:
            raise ValueError(f"unknown check {name!r}")
    cells: list[tuple] = []
    for name in names:
        cells.extend(CHECK_BUILDERS[name](cfg))
    start = time.monotonic()
    verdicts = _execute(cells, cfg.workers)
    return Report(
        command="run-suite",
        params={"checks": list(names), **_config_echo(cfg)},
        verdicts=verdicts,
        timing_ms=int((time.monotonic() - start) * 1000),
    )


def verify_theorem(cells: list[dict], cfg: CampaignConfig) -> Report:
    work = [
        (
            "theorem-verify",
            f"k={c['k']},s={c['s']},t={c['t']},r={c['r']},n={c['n']}",
            {**c, "budget": cfg.budget_nodes},
        )
        for c in cells
    ]
    start = time.monotonic()
    verdicts = _execute(work, cfg.workers)
    return Report(
        command="verify-theorem",
        params={"cells": cells, **_config_echo(cfg)},
        verdicts=verdicts,
        timing_ms=int((time.monotonic() - start) * 1000),
    )


def counterexample_audit(r: int, n: int, cfg: CampaignConfig) -> Report:
    start = time.monotonic()
    verdicts = _execute(
        [("counterexample-audit", f"r={r},n={n}", {"r": r, "n": n})], cfg.workers
    )
    return Report(
        command="counterexample-audit",
        params={"r": r, "n": n},
        verdicts=verdicts,
        timing_ms=int((time.monotonic() - start) * 1000),
    )
