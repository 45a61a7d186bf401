"""Report rendering: structured JSON, tables, delimited records and figures.

The structured report is JSON with a fixed key order so identical inputs
produce byte-identical output.  Exact rationals travel as [numerator,
denominator] pairs.  The report directory written for a sweep or a verify
run holds the JSON report, the per-k records as CSV, and two matplotlib
figures (ratio against k with the limit line, and regularity against k
with the fitted line) rendered straight to files.
"""

from __future__ import annotations

import csv
import json
from fractions import Fraction
from pathlib import Path

from .asymptotics import LinearFit, PowerRecord, SweepResult, Verdict
from .ideal_io import ideal_to_dict
from .monomial import MonomialIdeal


def _frac(value: Fraction) -> list[int]:
    return [value.numerator, value.denominator]


def record_payload(r: PowerRecord) -> dict:
    return {
        "k": r.k,
        "reg": r.reg,
        "reg_i": list(r.reg_strands),
        "e": r.e,
        "U": _frac(r.U),
        "L": _frac(r.L),
        "ratio": _frac(r.ratio),
    }


def fit_payload(fit: LinearFit | None) -> dict | None:
    if fit is None:
        return None
    return {"q": fit.q, "r": fit.r, "k0": fit.k0, "validated": fit.validated}


def sweep_payload(sweep: SweepResult) -> dict:
    return {
        "ideal": ideal_to_dict(sweep.ideal),
        "fieldChar": sweep.field_char,
        "K": sweep.K,
        "c": sweep.c,
        "records": [record_payload(r) for r in sweep.records],
        "truncated_at": sweep.truncated_at,
        "failure": sweep.failure,
    }


def verdict_payload(v: Verdict) -> dict:
    cls = v.classification
    return {
        "ideal": ideal_to_dict(v.ideal),
        "fieldChar": v.field_char,
        "K": v.K,
        "records": [record_payload(r) for r in v.sweep.records],
        "fit": fit_payload(v.fit),
        "classification": {
            "radicalSquarefree": cls.radical_squarefree,
            "monomialDifferentDegrees": cls.monomial_different_degrees,
            "zeroDimDifferentDegrees": cls.zero_dim_different_degrees,
            "completeIntersection": cls.complete_intersection,
            "theoremApplies": cls.theorem_applies,
            "strictExpected": cls.strict_expected,
        },
        "E": v.limit.E if v.limit else None,
        "limit_num": v.limit.limit.numerator if v.limit else None,
        "limit_den": v.limit.limit.denominator if v.limit else None,
        "verdict": v.status,
        "fit_strands": [fit_payload(f) for f in v.strand_fits],
        "annotations": list(v.annotations),
    }


def to_json(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


# -- tabular rendering ---------------------------------------------------


def records_table(records, c: int) -> str:
    head = ["k", "reg"] + [f"reg_{i}" for i in range(c)] + ["e", "U", "L", "e/U"]
    rows = [head]
    for r in records:
        rows.append([str(r.k), str(r.reg)] + [str(s) for s in r.reg_strands]
                    + [str(r.e), str(r.U), str(r.L), str(r.ratio)])
    widths = [max(len(row[i]) for row in rows) for i in range(len(head))]
    lines = ["  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in rows]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def verdict_table(v: Verdict) -> str:
    lines = [f"ideal: {v.ideal}", f"field characteristic: {v.field_char}",
             records_table(v.sweep.records, v.sweep.c)]
    if v.fit:
        lines.append(f"regularity fit: reg(I^k) = {v.fit.q} k + {v.fit.r} "
                     f"from k0 = {v.fit.k0}")
    cls = v.classification
    flags = [name for name, on in (
        ("radical-squarefree", cls.radical_squarefree),
        ("different-degrees", cls.monomial_different_degrees),
        ("zero-dimensional-different-degrees", cls.zero_dim_different_degrees),
        ("complete-intersection", cls.complete_intersection)) if on]
    lines.append("classification: " + (", ".join(flags) if flags else "outside proven classes"))
    if v.limit:
        lines.append(f"E = {v.limit.E}, q = {v.limit.q}, c = {v.limit.c}, "
                     f"limit e/U = {v.limit.limit}"
                     + (" (strict expected)" if v.limit.strict_expected else ""))
    for note in v.annotations:
        lines.append(f"note: {note}")
    lines.append(f"verdict: {v.status}")
    return "\n".join(lines) + "\n"


def sweep_table(sweep: SweepResult) -> str:
    lines = [f"ideal: {sweep.ideal}", records_table(sweep.records, sweep.c)]
    if sweep.truncated_at is not None:
        lines.append(f"truncated at k = {sweep.truncated_at}: {sweep.failure}")
    return "\n".join(lines) + "\n"


# -- delimited output -----------------------------------------------------


def write_records_csv(records, c: int, path: Path) -> None:
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["k", "reg"] + [f"reg_{i}" for i in range(c)]
                        + ["e", "U", "L", "ratio", "ratio_float"])
        for r in records:
            writer.writerow([r.k, r.reg, *r.reg_strands, r.e, str(r.U), str(r.L),
                             str(r.ratio), f"{float(r.ratio):.12g}"])


# -- figures ---------------------------------------------------------------


def _new_axes(title: str):
    from matplotlib.figure import Figure

    fig = Figure(figsize=(6.0, 4.0), dpi=150)
    ax = fig.subplots()
    ax.set_title(title)
    ax.grid(True, alpha=0.3)
    return fig, ax


def save_ratio_figure(records, limit: Fraction | None, path: Path,
                      title: str = "") -> None:
    fig, ax = _new_axes(title or "multiplicity against the upper bound")
    ks = [r.k for r in records]
    ax.plot(ks, [float(r.ratio) for r in records], "o-", label="e(A/I^k) / U(I^k)")
    if limit is not None:
        ax.axhline(float(limit), linestyle="--", color="tab:red",
                   label=f"limit = {limit}")
    ax.set_xlabel("k")
    ax.set_ylabel("e / U")
    ax.set_xticks(ks)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path)


def save_regularity_figure(records, fit: LinearFit | None, path: Path,
                           title: str = "") -> None:
    fig, ax = _new_axes(title or "regularity growth")
    ks = [r.k for r in records]
    ax.plot(ks, [r.reg for r in records], "o", label="reg(I^k)")
    if fit is not None:
        ax.plot(ks, [fit.q * k + fit.r for k in ks], "-", color="tab:green",
                label=f"{fit.q} k + {fit.r} (from k0 = {fit.k0})")
    ax.set_xlabel("k")
    ax.set_ylabel("regularity")
    ax.set_xticks(ks)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path)


def write_report_dir(payload: dict, records, c: int, outdir: str | Path, *,
                     fit: LinearFit | None = None,
                     limit: Fraction | None = None,
                     ideal: MonomialIdeal | None = None) -> list[Path]:
    """Write report.json, records.csv and the two figures into ``outdir``."""
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    title = str(ideal) if ideal is not None else ""
    paths = [out / "report.json", out / "records.csv",
             out / "ratio.png", out / "regularity.png"]
    paths[0].write_text(to_json(payload))
    write_records_csv(records, c, paths[1])
    save_ratio_figure(records, limit, paths[2], title=title)
    save_regularity_figure(records, fit, paths[3], title=title)
    return paths
