"""Worked examples replayed against committed golden JSON files.

Each case computes a flat dict of named values.  The golden files under
``golden/`` were produced by :func:`write_golden` and checked by hand
against the published numbers; ``run`` recomputes every case and reports
the keys that differ.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Optional

from .criteria import (
    UniformBundle,
    ample_by_nef_decomposition,
    ample_general,
    ample_nagata_conditional,
    ample_uniform,
    ample_uniform_lambda,
    gg_general,
    min_degree,
    necessary_obstructions,
)
from .interpolation import DEFAULT_PRIME, curve_class_effective
from .lattice import DivisorClass, intersect
from .weyl import is_exceptional_class, reduce_to_fundamental

GOLDEN_DIR = Path(__file__).with_name("golden")
ORACLE_SEED = 20160621

TWELVE_A = (3,) + (2,) * 7 + (1,) * 4
TWELVE_B = (3,) + (2,) * 9 + (1,) * 2
UNIFORM_TABLE = ((10, 10), (10, 30), (30, 10))


def _twelve_points_optimal():
    d = min_degree("ample_general", mults=TWELVE_A)
    v = ample_general(DivisorClass(d, TWELVE_A))
    rec = v.record("(4) s=12")
    L6 = DivisorClass(6, TWELVE_A)
    return {
        "min_degree": d,
        "s12_lhs": rec.lhs,
        "s12_rhs": rec.rhs,
        "outcome": v.outcome.value,
        "L6_self_intersection": intersect(L6, L6),
        "gg_min_degree_permissive": min_degree("gg_general", mults=TWELVE_A, permissive=True),
    }


def _twelve_points_ten_doubles():
    d = min_degree("ample_general", mults=TWELVE_B)
    v = ample_general(DivisorClass(d, TWELVE_B))
    L7 = DivisorClass(7, TWELVE_B)
    return {
        "min_degree": d,
        "worst_s": v.notes["worst_s"],
        "s12_lhs": v.record("(4) s=12").lhs,
        "s12_rhs": v.record("(4) s=12").rhs,
        "L7_self_intersection": intersect(L7, L7),
        "L7_outcome": ample_general(L7).outcome.value,
        "gg_min_degree_permissive": min_degree("gg_general", mults=TWELVE_B, permissive=True),
    }


def _five_points():
    L25 = DivisorClass.uniform(25, 5, 10)
    v25 = ample_general(L25)
    return {
        "L26_outcome": ample_general(DivisorClass.uniform(26, 5, 10)).outcome.value,
        "L25_outcome": v25.outcome.value,
        "L25_failed": [[h.label, h.lhs, h.rhs] for h in v25.failed()],
        "L25_obstructions": [[str(C), x] for C, x in necessary_obstructions(L25)],
        "L25_self_intersection": intersect(L25, L25),
        "lambda_min_degree": min_degree("ample_uniform_lambda", r=5, m=10),
        "gg_L25": gg_general(L25).outcome.value,
    }


def _eight_points():
    F = DivisorClass.uniform(17, 8, 6)
    nef = ample_by_nef_decomposition(DivisorClass.uniform(171, 8, 60), F)
    trace = reduce_to_fundamental(F)
    L170 = DivisorClass.uniform(170, 8, 60)
    L169 = DivisorClass.uniform(169, 8, 60)
    E = DivisorClass(6, (3,) + (2,) * 7)
    return {
        "L169_self_intersection": intersect(L169, L169),
        "L170_self_intersection": intersect(L170, L170),
        "L170_dot_degree48": intersect(L170, DivisorClass.uniform(48, 8, 17)),
        "L170_obstructions": [[str(C), x] for C, x in necessary_obstructions(L170)],
        "E_is_exceptional": is_exceptional_class(E)[0],
        "lambda_178": ample_uniform_lambda(UniformBundle(178, 8, 60)).outcome.value,
        "lambda_177": ample_uniform_lambda(UniformBundle(177, 8, 60)).outcome.value,
        "uniform_min_degree": min_degree("ample_uniform", r=8, m=60),
        "nef_decomposition_171": nef.outcome.value,
        "nef_k": nef.notes["k"],
        "nef_a": nef.notes["a"],
        "nef_decomposition_170": ample_by_nef_decomposition(L170, F).outcome.value,
        "F_reduces_to": str(trace.end),
        "F_cremona_steps": trace.cremona_steps,
    }


def _uniform_ample_table():
    out = {}
    for r, m in UNIFORM_TABLE:
        key = f"r{r}_m{m}"
        out[f"{key}_ample_uniform"] = min_degree("ample_uniform", r=r, m=m)
        out[f"{key}_st_ample"] = min_degree("st_ample", r=r, m=m)
        d_nagata = next(d for d in range(1, 10 ** 4)
                        if ample_nagata_conditional(UniformBundle(d, r, m)).conjecture)
        out[f"{key}_nagata_conditional"] = d_nagata
    out["r9_d32_is_exceptional"] = is_exceptional_class(DivisorClass(32, (15,) + (10,) * 8))[0]
    out["r10_m10_d32"] = ample_uniform(UniformBundle(32, 10, 10)).outcome.value
    return out


def _general_gg():
    out = {}
    for name, L in (("twelve_a_d8", DivisorClass(8, TWELVE_A)),
                    ("twelve_b_d8", DivisorClass(8, TWELVE_B)),
                    ("five_d25", DivisorClass.uniform(25, 5, 10))):
        v = gg_general(L, permissive=True)
        out[name] = v.outcome.value
        last = v.hypotheses[-1]
        out[f"{name}_last"] = [last.label, last.lhs, last.rhs]
    out["twelve_a_d8_strict"] = gg_general(DivisorClass(8, TWELVE_A)).outcome.value
    return out


def _uniform_table(certifier: str, st: Optional[str]):
    def case():
        out = {}
        for r, m in UNIFORM_TABLE:
            key = f"r{r}_m{m}"
            out[f"{key}_{certifier}"] = min_degree(certifier, r=r, m=m)
            if st:
                out[f"{key}_{st}"] = min_degree(st, r=r, m=m)
        return out
    return case


def _nagata_curve_oracle():
    trials = 3
    return {
        "degree48_mult17_effective": curve_class_effective(
            DivisorClass.uniform(48, 8, 17), trials, DEFAULT_PRIME, ORACLE_SEED),
        "quartic_double_point_13_simple_effective": curve_class_effective(
            DivisorClass(4, (2,) + (1,) * 13), trials, DEFAULT_PRIME, ORACLE_SEED),
        "sextic_exceptional_effective": curve_class_effective(
            DivisorClass(6, (3,) + (2,) * 7), trials, DEFAULT_PRIME, ORACLE_SEED),
    }


@dataclass(frozen=True)
class Case:
    id: str
    description: str
    compute: Callable[[], dict]
    metadata: dict = field(default_factory=dict)


CASES = [
    Case("twelve-points-optimal", "L_d = dH - 3E1 - 2(E2..E8) - (E9..E12): smallest ample degree 7",
         _twelve_points_optimal),
    Case("twelve-points-ten-doubles", "L_d = dH - 3E1 - 2(E2..E10) - (E11, E12): smallest certified 8",
         _twelve_points_ten_doubles),
    Case("five-points-m10", "dH - 10(E1..E5): 25 fails at the conic, 26 ample", _five_points),
    Case("eight-points-m60", "dH - 60(E1..E8): bounds 178, 172 and the nef decomposition at 171",
         _eight_points),
    Case("uniform-ample-table", "uniform ampleness thresholds vs the earlier bound", _uniform_ample_table),
    Case("general-gg", "global generation for non-uniform bundles", _general_gg),
    Case("uniform-gg-table", "uniform global generation thresholds", _uniform_table("gg_uniform", "st_gg")),
    Case("uniform-va-table", "uniform very ampleness thresholds", _uniform_table("va_uniform", None)),
    Case("nagata-curve-oracle", "existence checks over F_p", _nagata_curve_oracle,
         {"prime": DEFAULT_PRIME, "seed": ORACLE_SEED, "trials": 3}),
]


class GoldenMissing(FileNotFoundError):
    pass


@dataclass
class CaseResult:
    id: str
    passed: bool
    diffs: list = field(default_factory=list)

    def to_dict(self):
        return {"id": self.id, "pass": self.passed, "diffs": self.diffs}


def select(only: Optional[str] = None) -> list[Case]:
    if only is None:
        return list(CASES)
    chosen = [c for c in CASES if c.id == only]
    if not chosen:
        raise KeyError(f"unknown case {only!r}; known: {', '.join(c.id for c in CASES)}")
    return chosen


def _normalize_json(values: dict) -> dict:
    # tuples -> lists etc., so comparison matches what was written
    return json.loads(json.dumps(values))


def load_golden(case_id: str, golden_dir: Optional[Path] = None) -> dict:
    path = Path(golden_dir or GOLDEN_DIR) / f"{case_id}.json"
    if not path.exists():
        raise GoldenMissing(str(path))
    return json.loads(path.read_text())


def run_case(case: Case, golden_dir: Optional[Path] = None) -> CaseResult:
    golden = load_golden(case.id, golden_dir)
    got = _normalize_json(case.compute())
    want = golden["values"]
    diffs = []
    for key in sorted(set(got) | set(want)):
        if got.get(key) != want.get(key):
            diffs.append({"key": key, "expected": want.get(key), "got": got.get(key)})
    return CaseResult(case.id, not diffs, diffs)


def run(only: Optional[str] = None, golden_dir: Optional[Path] = None) -> list[CaseResult]:
    return [run_case(c, golden_dir) for c in select(only)]


def write_golden(golden_dir: Optional[Path] = None, only: Optional[str] = None) -> list[Path]:
    out_dir = Path(golden_dir or GOLDEN_DIR)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for case in select(only):
        doc = {"schema": 1, "id": case.id, "description": case.description,
               "metadata": case.metadata, "values": _normalize_json(case.compute())}
        path = out_dir / f"{case.id}.json"
        path.write_text(json.dumps(doc, indent=2) + "\n")
        written.append(path)
    return written
