"""Machine-readable reports and the JSON codecs for domain objects.

Reports are byte-identical across repeated runs with the same inputs; the
single timing field is excluded from determinism comparisons and everything
else is plain deterministic data (no floats, no machine state).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import __version__
from .bitset import VertexSet, mask_from_members
from .hypergraph import Hypergraph
from .sunflowers import Sunflower
from .badtriples import BadTripleWitness

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"
STATUSES = (PASS, FAIL, INCONCLUSIVE)


@dataclass
class Verdict:
    check: str
    status: str
    details: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    def to_json_dict(self) -> dict:
        return {"check": self.check, "status": self.status, "details": self.details}


@dataclass
class Report:
    command: str
    params: dict
    verdicts: list[Verdict]
    timing_ms: int = 0
    tool_version: str = __version__

    def to_json_dict(self) -> dict:
        return {
            "command": self.command,
            "params": self.params,
            "verdicts": [v.to_json_dict() for v in self.verdicts],
            "timingMs": self.timing_ms,
            "toolVersion": self.tool_version,
        }

    @property
    def failed(self) -> bool:
        return any(v.status == FAIL for v in self.verdicts)

    @property
    def exit_code(self) -> int:
        return 1 if self.failed else 0


def canonical_json(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def strip_timing(obj):
    """Drop timing fields anywhere in a JSON-ish structure (for determinism
    comparisons)."""
    if isinstance(obj, dict):
        return {k: strip_timing(v) for k, v in obj.items() if k != "timingMs"}
    if isinstance(obj, list):
        return [strip_timing(v) for v in obj]
    return obj


def vertexset_json(v: VertexSet) -> list[int]:
    return list(v.members())


def hypergraph_json(H: Hypergraph) -> dict:
    return {"n": H.n, "r": H.r, "edges": [vertexset_json(e) for e in H.edges]}


def sunflower_json(sf: Sunflower) -> dict:
    return {
        "core": vertexset_json(sf.core),
        "petals": [vertexset_json(p) for p in sf.petals],
    }


def sunflower_from_json(n: int, obj: dict) -> Sunflower:
    core = VertexSet.of(n, obj["core"])
    petals = sorted(mask_from_members(p) for p in obj["petals"])
    return Sunflower(core, tuple(VertexSet(p, n) for p in petals))


def witness_json(w: BadTripleWitness) -> dict:
    out = {
        "h": vertexset_json(w.h),
        "Y": vertexset_json(w.Y),
        "Z": vertexset_json(w.Z),
        "FY": sunflower_json(w.flower_Y),
        "FZ": sunflower_json(w.flower_Z),
    }
    if w.conditions is not None:
        out["conditions"] = list(w.conditions)
    return out


def witness_from_json(n: int, obj: dict) -> BadTripleWitness:
    conditions = obj.get("conditions")
    return BadTripleWitness(
        h=VertexSet.of(n, obj["h"]),
        Y=VertexSet.of(n, obj["Y"]),
        Z=VertexSet.of(n, obj["Z"]),
        flower_Y=sunflower_from_json(n, obj["FY"]),
        flower_Z=sunflower_from_json(n, obj["FZ"]),
        conditions=tuple(conditions) if conditions is not None else None,
    )
