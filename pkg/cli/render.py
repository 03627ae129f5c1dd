"""
@description: Human-readable and JSON rendering of a RunReport. Both are deterministic for identical reports.
"""
from __future__ import annotations

import json
from typing import Any

from core.foundation.models.report_model import RunReport
from core.utils.encoders.transport_encoder import transportify


def _set(vertices) -> str:
    return "{" + ",".join(str(v) for v in vertices) + "}"


def _value(v: Any) -> str:
    if isinstance(v, bool):
        return str(v).lower()
    if v is None:
        return "n/a"
    return str(v)


def render_json(report: RunReport) -> str:
    return json.dumps(transportify(report), indent=2)


def render_text(report: RunReport) -> str:
    out = [f"command: {report.command}",
           f"input: {report.input.kind} n={report.input.n} edges={report.input.edge_count}"]

    if report.labeling.pairs:
        mapped = " ".join(f"{a}->{b}" for a, b in report.labeling.pairs if a != b) or "identity"
        out.append(f"labeling: {report.labeling.strategy or 'search'} ({mapped})")

    if report.trace:
        out.append("trace:")
        for step in report.trace:
            witnesses = " ".join(_set(w) for w in step.witnesses)
            out.append(f"  + {_set(step.added_edge)}  {step.rule.value}  from {witnesses}")

    if report.verdicts:
        out.append("verdicts:")
        for key, v in report.verdicts.items():
            if key == "components":
                for comp in v:
                    fields = " ".join(f"{k}={_value(x)}" for k, x in comp.items() if k != "vertices")
                    out.append(f"  component {_set(comp['vertices'])}: {fields}")
            else:
                out.append(f"  {key}: {_value(v)}")

    if report.primes:
        out.append("minimal primes:")
        for row in report.primes:
            out.append(f"  T={_set(row.T)}  c={row.c}  height={row.height}  {row.generators}")

    entries = report.output.get("entries")
    if entries:
        out.append("vertex deletions:")
        for e in entries:
            out.append(f"  -{e['vertex']}: closed={_value(e['deleted_graph_closed'])} "
                       f"connected={_value(e['deleted_connected'])} unmixed={_value(e['deleted_unmixed'])} "
                       f"cm={e['deleted_cm']} free={_value(e['v_free'])} facet_condition={_value(e['facet_condition'])}")

    for key in ("graph", "clutter"):
        if key in report.output:
            body = report.output[key]
            edges = " ".join(_set(e) for e in body["edges"])
            out.append(f"output {key}: n={body['n']} {edges}")

    if report.timing:
        out.append("timing: " + " ".join(f"{k}={v:.6f}s" for k, v in report.timing.items()))
    return "\n".join(out) + "\n"
