"""JSON and text rendering of an FpdReport.

Real numbers are written as decimal strings so the JSON is stable across
platforms; integers stay integers. The text report is built from the same
dictionary, so both carry identical numbers.
"""
from __future__ import annotations

import json

from .fpd import NEG_INF, FpdReport
from .spectral import SpectralRadius

__all__ = ["report_dict", "to_json", "to_text", "format_real"]

DIGITS = 12


def format_real(x: float) -> str:
    return f"{x:.{DIGITS}f}"


def format_bound(x: float) -> str:
    return f"{x:.3e}"


def _rho_fields(rho: SpectralRadius) -> dict:
    out = {"rho": format_real(rho.value), "rho_bound": format_bound(rho.bound)}
    if rho.exact is not None:
        out["rho_exact"] = str(rho.exact)
    return out


def report_dict(report: FpdReport) -> dict:
    spec = report.spec
    out = {
        "spec": {
            "vertices": spec.vertex_count,
            "arrows": [[a.id, a.source, a.target] for a in spec.arrows],
            "loop_counts": list(spec.loop_counts),
            "relations": spec.relation_kind.value,
        },
        "mode": report.bricks.mode,
        "bricks": [{"name": b.name, "dim_vector": list(b.dim_vector)} for b in report.bricks],
        "hom_matrix": [list(r) for r in report.hom_matrix],
        "ext_matrix": [list(r) for r in report.ext_matrix],
        "maximal_brick_sets": [
            {"indices": list(s.brick_indices), "adjacency": [list(r) for r in s.adjacency], **_rho_fields(s.rho)}
            for s in report.brick_sets
        ],
        "fpd": format_real(report.fpd_value),
        "fpd_bound": format_bound(report.fpd_bound),
        "fpd_n": {str(k): (str(v) if v is NEG_INF else format_real(v)) for k, v in report.fpd_n.items()},
        "completeness": report.completeness.value,
    }
    if report.fpd_exact is not None:
        out["fpd_exact"] = str(report.fpd_exact)
    if report.family is not None:
        out["spec"]["family"] = report.family.label()
    if report.closed_form is not None:
        cf = report.closed_form
        out["closed_form"] = {
            "expected": str(cf.expected),
            "expected_decimal": format_real(float(cf.expected)),
            "delta": format_bound(cf.delta),
            "match": cf.match,
        }
    return out


def to_json(report: FpdReport | dict) -> str:
    data = report if isinstance(report, dict) else report_dict(report)
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _matrix_lines(title: str, labels: list[str], rows) -> list[str]:
    width = max([len(x) for x in labels] + [3])
    head = " " * width + " | " + " ".join(f"{x:>{width}}" for x in labels)
    lines = [title, head, "-" * len(head)]
    for label, row in zip(labels, rows):
        lines.append(f"{label:>{width}} | " + " ".join(f"{x:>{width}}" for x in row))
    return lines


def to_text(report: FpdReport | dict) -> str:
    d = report if isinstance(report, dict) else report_dict(report)
    names = [b["name"] for b in d["bricks"]]
    spec = d["spec"]
    lines = [
        f"algebra: {spec.get('family', 'custom')}  vertices={spec['vertices']}  "
        f"arrows={len(spec['arrows'])}  loops={spec['loop_counts']}",
        f"mode: {d['mode']}  completeness: {d['completeness']}",
        "",
        f"bricks ({len(names)}):",
    ]
    lines += [f"  [{i}] {b['name']:<12} dim={b['dim_vector']}" for i, b in enumerate(d["bricks"])]
    lines.append("")
    lines += _matrix_lines("Hom matrix (row i, column j = dim Hom(X_i, X_j)):", names, d["hom_matrix"])
    lines.append("")
    lines += _matrix_lines("Ext^1 matrix (row i, column j = dim Ext^1(X_i, X_j)):", names, d["ext_matrix"])
    lines.append("")
    lines.append(f"maximal brick sets ({len(d['maximal_brick_sets'])}):")
    for s in d["maximal_brick_sets"]:
        members = ", ".join(names[i] for i in s["indices"])
        exact = f"  exact={s['rho_exact']}" if "rho_exact" in s else ""
        lines.append(f"  {{{members}}}  rho={s['rho']} +/- {s['rho_bound']}{exact}  A={s['adjacency']}")
    lines.append("")
    exact = f"  exact={d['fpd_exact']}" if "fpd_exact" in d else ""
    lines.append(f"fpd = {d['fpd']} +/- {d['fpd_bound']}{exact}")
    if d["fpd_n"]:
        lines.append("fpd^n: " + ", ".join(f"{k}:{v}" for k, v in d["fpd_n"].items()))
    if "closed_form" in d:
        cf = d["closed_form"]
        lines.append(
            f"closed form: {cf['expected']} = {cf['expected_decimal']}  "
            f"delta={cf['delta']}  match={'true' if cf['match'] else 'false'}"
        )
    return "\n".join(lines) + "\n"
