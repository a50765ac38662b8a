"""JSON / CSV / plain renderers for CLI results.

Every renderer is a pure function of the run configuration and the result,
so equal inputs give byte-identical output.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Any

from orient.mappings import all_transformations, mapping_orientation, rank_of
from orient.sequences import OrientationSort

SCHEMA_VERSION = "1"


def _fmt_seq(s) -> str:
    return ",".join(map(str, s))


def render_json(command: str, config: dict, result: Any) -> str:
    doc = {
        "command": command,
        "config": config,
        "result": result,
        "version": SCHEMA_VERSION,
    }
    return json.dumps(doc, indent=2) + "\n"


def _csv(header: list[str], rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def render_csv(command: str, result: Any) -> str:
    if command == "classify":
        return _csv(
            ["sequence", "orientation", "rank", "cyclic_descents",
             "cyclic_ascents", "predicted_from_triples", "determined_by_triples"],
            [[
                _fmt_seq(result["sequence"]),
                result["orientation"],
                result["rank"],
                result["cyclic_descents"],
                result["cyclic_ascents"],
                result.get("predicted_from_triples", ""),
                result.get("determined_by_triples", ""),
            ]],
        )
    if command == "classify-map":
        return _csv(
            ["mapping", "n", "orientation", "orientation_preserving",
             "orientation_reversing", "rank"],
            [[
                _fmt_seq(result["mapping"]),
                result["n"],
                result["orientation"],
                result["orientation_preserving"],
                result["orientation_reversing"],
                result["rank"],
            ]],
        )
    if command == "enumerate":
        # one row per mapping, regenerated lazily rather than held in the census
        rows = (
            [_fmt_seq(f.images), mapping_orientation(f).value, rank_of(f)]
            for f in all_transformations(result["n"])
        )
        return _csv(["mapping", "orientation", "rank"], rows)
    if command in ("verify", "closure-check"):
        rows = [["violation", _fmt_seq(s)] for s in result["violations"]]
        rows += [["counterexample", _fmt_seq(s)] for s in result["counterexamples"]]
        return _csv(["kind", "sequence"], rows)
    if command == "counterexamples":
        return _csv(
            ["sequence", "predicted", "actual"],
            [[_fmt_seq(r["sequence"]), r["predicted"], r["actual"]]
             for r in result["items"]],
        )
    raise ValueError(f"unknown command {command!r}")


def render_plain(command: str, result: Any) -> str:
    if command in ("classify", "classify-map"):
        return f"orientationSort.{result['orientation']}\n"
    if command == "enumerate":
        counts = " ".join(f"{o.value}={result['counts'][o.value]}" for o in OrientationSort)
        return f"n={result['n']} total={result['total']} {counts}\n"
    if command in ("verify", "closure-check"):
        return (
            f"checked={result['checked']} violations={len(result['violations'])}"
            f" counterexamples={len(result['counterexamples'])}\n"
        )
    if command == "counterexamples":
        return "".join(
            f"{_fmt_seq(r['sequence'])} predicted={r['predicted']} actual={r['actual']}\n"
            for r in result["items"]
        )
    raise ValueError(f"unknown command {command!r}")
