"""Analysis pipeline producing a stable JSON report.

The serializer is hand-rolled so identical inputs yield byte-identical
output: keys keep insertion order and floats are rendered with 17
significant digits.  Exact rationals are carried as decimal num/den strings
plus a float convenience field; undefined values are null.
"""

from __future__ import annotations

import json
import time
from fractions import Fraction

from . import __version__
from .almost import CensusCounts, InternalConsistencyError, count_all_ads
from .closing import BaselineReport, build_profile, er_baseline
from .complexes import build_flag_complex
from .graph import DirectedGraph
from .motifs import MotifReport, census_motifs

SCHEMA = "simplicia/1"


def canonical_json(value, _level: int = 0) -> str:
    pad = "  " * _level
    inner = "  " * (_level + 1)
    if value is None:
        return "null"
    if value is True:
        return "true"
    if value is False:
        return "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format(value, ".17g")
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        items = ",\n".join(inner + canonical_json(v, _level + 1) for v in value)
        return "[\n" + items + "\n" + pad + "]"
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = ",\n".join(
            f"{inner}{json.dumps(str(k))}: {canonical_json(v, _level + 1)}"
            for k, v in value.items()
        )
        return "{\n" + items + "\n" + pad + "}"
    raise TypeError(f"cannot serialize {type(value)!r}")


def rational(x: Fraction | None) -> dict | None:
    if x is None:
        return None
    return {"num": str(x.numerator), "den": str(x.denominator), "float": float(x)}


def _baseline_block(rep: BaselineReport) -> dict:
    return {
        "replicates": rep.replicates,
        "master_seed": rep.master_seed,
        "seeds": list(rep.seeds),
        "dimensions": [
            {
                "d": row.dimension,
                "simplices_mean": rational(row.simplices_mean),
                "simplices_std": row.simplices_std,
                "p_mean": rational(row.p_mean),
                "p_std": row.p_std,
                "p_defined": row.p_defined,
                "p_hat_mean": rational(row.p_hat_mean),
                "p_hat_std": row.p_hat_std,
                "p_hat_defined": row.p_hat_defined,
            }
            for row in rep.rows
        ],
    }


def _motif_block(rep: MotifReport, strict: bool) -> dict:
    block: dict = {"strict": strict}
    for kind in ("divergent", "chain", "convergent"):
        counts = rep.kind(kind)
        block[kind] = {
            "total": counts.total,
            "completed": counts.completed,
            "ratio": rational(counts.ratio),
            "strict_total": counts.strict_total,
            "strict_completed": counts.strict_completed,
            "strict_ratio": rational(counts.strict_ratio),
        }
    block["edge_density"] = rational(rep.edge_density)
    block["chance_level"] = rational(rep.chance)
    return block


def _check_motif_identity(counts: CensusCounts, motifs: MotifReport) -> None:
    if len(counts.rows) < 2 and counts.truncated:
        return  # capped below dimension 2, nothing to cross-check against
    almost2 = counts.rows[1].almost if len(counts.rows) > 1 else 0
    if motifs.almost_two_count != almost2:
        raise InternalConsistencyError(
            f"motif census implies {motifs.almost_two_count} almost-2-simplices, "
            f"engine counted {almost2}"
        )


def analyze_graph(
    g: DirectedGraph,
    max_dim: int | None = None,
    baseline: int = 0,
    motifs: bool = False,
    strict: bool = False,
    seed: int = 0,
    threads: int = 1,
    input_path: str | None = None,
    timings: bool = False,
) -> dict:
    """Full census + closing profile, with optional matched-random baseline
    and motif blocks, as a JSON-ready dict.

    Identical inputs, flags and seed produce byte-identical serialized
    reports for any worker count; wall time is reported only when asked.
    """
    t0 = time.monotonic()
    complex = build_flag_complex(g, max_dim=max_dim, threads=threads)
    counts = count_all_ads(g, complex, threads=threads)
    profile = build_profile(counts)
    dims = []
    for idx, row in enumerate(counts.rows):
        d = row.dimension
        dims.append(
            {
                "d": d,
                "simplices": row.simplices,
                "almost": row.almost,
                "completed": row.completed,
                "rejected_pairs": row.rejected_pairs,
                "p": rational(profile.p[idx]) if idx < len(profile.p) else None,
                "p_hat": rational(profile.p_hat[idx]) if idx < len(profile.p_hat) else None,
                "p_hat2": rational(profile.p_hat2[idx]) if idx < len(profile.p_hat2) else None,
                "cap_adjacent": row.cap_adjacent,
                "beyond_top": row.simplices == 0 and not row.cap_adjacent,
            }
        )
    report = {
        "schema": SCHEMA,
        "tool": {"name": "simplicia", "version": __version__},
        "input": {"path": input_path, "vertices": g.n, "edges": g.edge_count},
        "truncated": complex.truncated,
        "max_dimension": complex.dimension,
        "dimensions": dims,
        "baseline": None,
        "motifs": None,
        "wall_time_ms": None,
    }
    if baseline:
        report["baseline"] = _baseline_block(er_baseline(g, baseline, seed, threads=threads))
    if motifs:
        motif_report = census_motifs(g, threads=threads)
        _check_motif_identity(counts, motif_report)
        report["motifs"] = _motif_block(motif_report, strict)
    if timings:
        report["wall_time_ms"] = (time.monotonic() - t0) * 1000.0
    return report


_CSV_HEADER = (
    "d,simplices,almost,completed,rejected_pairs,"
    "p_num,p_den,p_float,p_hat_num,p_hat_den,p_hat_float,"
    "p_hat2_num,p_hat2_den,p_hat2_float,cap_adjacent,beyond_top"
)


def report_to_csv(report: dict) -> str:
    """Flat per-dimension table only (baseline/motif blocks are JSON-only)."""

    def rat_cols(value):
        if value is None:
            return ["", "", ""]
        return [value["num"], value["den"], format(value["float"], ".17g")]

    lines = [_CSV_HEADER]
    for row in report["dimensions"]:
        cols = [
            str(row["d"]),
            str(row["simplices"]),
            str(row["almost"]),
            str(row["completed"]),
            str(row["rejected_pairs"]),
            *rat_cols(row["p"]),
            *rat_cols(row["p_hat"]),
            *rat_cols(row["p_hat2"]),
            str(row["cap_adjacent"]).lower(),
            str(row["beyond_top"]).lower(),
        ]
        lines.append(",".join(cols))
    return "\n".join(lines) + "\n"
