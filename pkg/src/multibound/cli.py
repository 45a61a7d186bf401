"""Command-line front door.

Subcommands: betti, hilbert, mult, decompose, reduction, bounds, sweep,
verify, corpus.  Reports go to standard output as deterministic JSON
(``--format structured``, default) or a plain table (``--format tabular``);
``--out`` additionally writes the same bytes to a file, and sweep/verify
accept ``--report-dir`` to drop the JSON report, the CSV records and the
rendered figures into a directory.

Exit codes: 0 success / PASS, 1 VIOLATION, 2 INCONCLUSIVE or resource
limit, 3 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import corpus as corpus_mod
from . import decomposition, hilbert, report
from .asymptotics import (INCONCLUSIVE, PASS, VIOLATION, fit_regularity,
                          power_sweep, verify_upper_bound)
from .errors import (DomainError, FitError, MultiboundError, ParseError,
                     ResourceLimitError, StabilizationError, UsageError)
from .ideal_io import ideal_to_dict, load_ideal
from .monomial import MonomialIdeal
from .resolution import ResourceCaps, betti_table, bounds

EXIT_PASS = 0
EXIT_VIOLATION = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # noqa: A002 - argparse API
        raise UsageError(message)


def build_parser() -> _Parser:
    parser = _Parser(prog="multibound",
                     description="Exact invariants of monomial ideals and "
                                 "the asymptotics of their powers.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--char", type=int, default=0, metavar="P",
                        help="coefficient field characteristic, 0 or a prime")
    common.add_argument("--max-gens", type=int, default=24,
                        help="generator cap for Betti computations")
    common.add_argument("--max-lattice", type=int, default=200_000,
                        help="lcm lattice size cap")
    common.add_argument("--format", choices=("structured", "tabular"),
                        default="structured")
    common.add_argument("--out", metavar="PATH",
                        help="also write the report to this file")

    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_, with_k=False, with_report_dir=False):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("ideal", metavar="IDEAL_FILE")
        if with_k:
            p.add_argument("--K", type=int, default=4,
                           help="number of powers to sweep (default 4)")
        if with_report_dir:
            p.add_argument("--report-dir", metavar="DIR",
                           help="write report.json, records.csv and figures here")
        return p

    add("betti", "Betti table, shifts, bounds and regularity")
    add("hilbert", "Hilbert series numerator, dimension, height, multiplicity")
    add("mult", "multiplicity by the series and by the Assh sum, cross-checked")
    add("decompose", "minimal primes, Assh, localized lengths and multiplicities")
    add("bounds", "shift bounds U and L next to the multiplicity")
    add("sweep", "per-power records and the regularity fit", with_k=True,
        with_report_dir=True)
    add("verify", "full upper-bound verdict over the power sweep", with_k=True,
        with_report_dir=True)

    red = sub.add_parser("reduction", parents=[common],
                         help="test whether J * I^m = I^(m+1) for some m")
    red.add_argument("j_ideal", metavar="J_FILE")
    red.add_argument("i_ideal", metavar="I_FILE")
    red.add_argument("--m-max", type=int, default=10)

    cor = sub.add_parser("corpus", parents=[common],
                         help="list, export or verify the bundled corpus")
    cor.add_argument("action", choices=("list", "export", "verify"))
    cor.add_argument("--dir", metavar="DIR", help="target directory for export")
    cor.add_argument("--K", type=int, default=None,
                     help="override the per-entry sweep length")
    return parser


def _caps(args) -> ResourceCaps:
    return ResourceCaps(max_gens=args.max_gens, max_lattice=args.max_lattice)


def _check_char(value: int) -> int:
    if value == 0:
        return 0
    if value < 2 or any(value % q == 0 for q in range(2, int(value**0.5) + 1)):
        raise UsageError(f"--char must be 0 or a prime, got {value}")
    return value


def _load(path: str) -> MonomialIdeal:
    ideal, warnings = load_ideal(path)
    for w in warnings:
        print(f"warning: {w}", file=sys.stderr)
    if ideal.is_zero() or ideal.is_unit():
        raise ParseError(f"{path}: the zero and unit ideals are rejected here")
    return ideal


def _emit(args, payload: dict, tabular: str) -> None:
    text = report.to_json(payload) if args.format == "structured" else tabular
    sys.stdout.write(text)
    if args.out:
        Path(args.out).write_text(text)


# -- subcommand handlers ----------------------------------------------------


def _cmd_betti(args) -> int:
    I = _load(args.ideal)
    char = _check_char(args.char)
    table = betti_table(I, field_char=char, caps=_caps(args))
    c = hilbert.height(I)
    U, L = bounds(table, c)
    payload = {
        "ideal": ideal_to_dict(I),
        "fieldChar": char,
        "c": c,
        "p": table.p,
        "beta": [[i, j, v] for i, j, v in table.rows()],
        "M": list(table.M),
        "m": list(table.m),
        "U": [U.numerator, U.denominator],
        "L": [L.numerator, L.denominator],
        "reg": table.regularity(),
        "reg_i": [table.reg_i(i) for i in range(table.p)],
    }
    lines = [f"ideal: {I}", f"projective dimension: {table.p}, height: {c}"]
    lines += [f"beta[{i},{j}] = {v}" for i, j, v in table.rows()]
    lines += [f"M = {list(table.M)}, m = {list(table.m)}",
              f"U = {U}, L = {L}, reg = {table.regularity()}"]
    _emit(args, payload, "\n".join(lines) + "\n")
    return EXIT_PASS


def _cmd_hilbert(args) -> int:
    I = _load(args.ideal)
    data = hilbert.hilbert_data(I)
    numerator = hilbert.series_numerator(I)
    payload = {
        "ideal": ideal_to_dict(I),
        "numerator": list(numerator),
        "d": data.d,
        "c": data.c,
        "e": data.e,
        "length": data.length,
    }
    tab = (f"ideal: {I}\nnumerator: {list(numerator)}\n"
           f"dim A/I = {data.d}, height = {data.c}, e(A/I) = {data.e}"
           + (f", length = {data.length}" if data.length is not None else "")
           + "\n")
    _emit(args, payload, tab)
    return EXIT_PASS


def _cmd_mult(args) -> int:
    I = _load(args.ideal)
    e_series = hilbert.multiplicity(I)
    e_assh = decomposition.multiplicity_via_assh(I)
    payload = {
        "ideal": ideal_to_dict(I),
        "e_series": e_series,
        "e_assh": e_assh,
        "agree": e_series == e_assh,
    }
    tab = (f"ideal: {I}\ne from the Hilbert series: {e_series}\n"
           f"e from Assh lengths:       {e_assh}\n"
           f"agree: {e_series == e_assh}\n")
    _emit(args, payload, tab)
    return EXIT_PASS if e_series == e_assh else EXIT_VIOLATION


def _cmd_decompose(args) -> int:
    I = _load(args.ideal)
    primes = decomposition.minimal_primes(I)
    assh_set = set(decomposition.assh(I))
    rows = []
    for P in primes:
        row = {
            "vars": [I.ring.names[i] for i in P.support],
            "height": P.height,
            "in_assh": P in assh_set,
            "localLength": decomposition.local_length(I, P),
            "localMult": (decomposition.local_multiplicity(I, P)
                          if P in assh_set else None),
        }
        rows.append(row)
    E = sum(r["localMult"] for r in rows if r["localMult"] is not None)
    payload = {"ideal": ideal_to_dict(I), "c": min(P.height for P in primes),
               "primes": rows, "E": E}
    lines = [f"ideal: {I}"]
    for r in rows:
        mark = "assh" if r["in_assh"] else "    "
        mult = r["localMult"] if r["localMult"] is not None else "-"
        lines.append(f"  ({', '.join(r['vars'])})  height {r['height']}  {mark}"
                     f"  length {r['localLength']}  mult {mult}")
    lines.append(f"E = {E}")
    _emit(args, payload, "\n".join(lines) + "\n")
    return EXIT_PASS


def _cmd_bounds(args) -> int:
    I = _load(args.ideal)
    char = _check_char(args.char)
    table = betti_table(I, field_char=char, caps=_caps(args))
    c = hilbert.height(I)
    U, L = bounds(table, c)
    e = hilbert.multiplicity(I)
    payload = {
        "ideal": ideal_to_dict(I),
        "fieldChar": char,
        "c": c,
        "e": e,
        "U": [U.numerator, U.denominator],
        "L": [L.numerator, L.denominator],
        "lower_holds": L <= e,
        "upper_holds": e <= U,
    }
    tab = (f"ideal: {I}\nU = {U}, L = {L}, e = {e}\n"
           f"L <= e: {L <= e}, e <= U: {e <= U}\n")
    _emit(args, payload, tab)
    return EXIT_PASS


def _cmd_sweep(args) -> int:
    I = _load(args.ideal)
    char = _check_char(args.char)
    sweep = power_sweep(I, args.K, field_char=char, caps=_caps(args))
    payload = report.sweep_payload(sweep)
    fit = None
    try:
        fit = fit_regularity([r.reg for r in sweep.records])
        payload["fit"] = report.fit_payload(fit)
    except (FitError, DomainError) as err:
        payload["fit"] = None
        payload["fit_error"] = str(err)
    if args.report_dir:
        report.write_report_dir(payload, sweep.records, sweep.c, args.report_dir,
                                fit=fit, limit=None, ideal=I)
    _emit(args, payload, report.sweep_table(sweep))
    return EXIT_PASS if sweep.truncated_at is None else EXIT_INCONCLUSIVE


def _cmd_verify(args) -> int:
    I = _load(args.ideal)
    char = _check_char(args.char)
    verdict = verify_upper_bound(I, K=args.K, field_char=char, caps=_caps(args))
    payload = report.verdict_payload(verdict)
    if args.report_dir:
        report.write_report_dir(
            payload, verdict.sweep.records, verdict.sweep.c, args.report_dir,
            fit=verdict.fit, limit=verdict.limit.limit if verdict.limit else None,
            ideal=I)
    _emit(args, payload, report.verdict_table(verdict))
    return {PASS: EXIT_PASS, VIOLATION: EXIT_VIOLATION,
            INCONCLUSIVE: EXIT_INCONCLUSIVE}[verdict.status]


def _cmd_reduction(args) -> int:
    J = _load(args.j_ideal)
    I = _load(args.i_ideal)
    ok, witness = decomposition.is_reduction(J, I, m_max=args.m_max)
    payload = {
        "J": ideal_to_dict(J),
        "I": ideal_to_dict(I),
        "is_reduction": ok,
        "witness_m": witness,
        "m_max": args.m_max,
    }
    tab = (f"J = {J}\nI = {I}\n"
           + (f"J is a reduction of I with witness m = {witness}\n" if ok
              else f"not a reduction up to m = {args.m_max} (unknown beyond)\n"))
    _emit(args, payload, tab)
    return EXIT_PASS


def _cmd_corpus(args) -> int:
    entries = corpus_mod.entries()
    if args.action == "list":
        payload = {"entries": [
            {"name": e.name, "description": e.description, "tags": list(e.tags),
             "K": e.K, "gens": len(e.gens)} for e in entries]}
        tab = "\n".join(f"{e.name:20s} {e.description}  [{', '.join(e.tags)}]"
                        for e in entries) + "\n"
        _emit(args, payload, tab)
        return EXIT_PASS
    if args.action == "export":
        if not args.dir:
            raise UsageError("corpus export needs --dir")
        out = Path(args.dir)
        out.mkdir(parents=True, exist_ok=True)
        from .ideal_io import dump_ideal
        written = []
        for e in entries:
            path = out / f"{e.name}.ideal"
            dump_ideal(e.ideal(), path)
            written.append(str(path))
        payload = {"written": written}
        _emit(args, payload, "\n".join(written) + "\n")
        return EXIT_PASS

    # action == "verify"
    char = _check_char(args.char)
    results = []
    worst = EXIT_PASS
    for e in entries:
        entry = e if args.K is None else corpus_mod.CorpusEntry(
            **{**e.__dict__, "K": args.K})
        res = corpus_mod.verify_entry(entry, field_char=char)
        results.append(res)
        if res.verdict.status == VIOLATION or res.mismatches:
            worst = max(worst, EXIT_VIOLATION)
        elif res.verdict.status == INCONCLUSIVE:
            worst = max(worst, EXIT_INCONCLUSIVE)
    payload = {"results": [
        {"name": r.entry.name,
         "verdict": r.verdict.status,
         "limit": ([r.verdict.limit.limit.numerator,
                    r.verdict.limit.limit.denominator] if r.verdict.limit else None),
         "mismatches": list(r.mismatches)} for r in results]}
    lines = []
    for r in results:
        lim = f"limit {r.verdict.limit.limit}" if r.verdict.limit else ""
        status = "ok" if r.ok else "FAIL"
        lines.append(f"{r.entry.name:20s} {r.verdict.status:12s} {lim:12s} {status}")
        for msg in r.mismatches:
            lines.append(f"    mismatch: {msg}")
    lines.append("all entries ok" if worst == EXIT_PASS else "corpus verification FAILED")
    _emit(args, payload, "\n".join(lines) + "\n")
    return worst


_HANDLERS = {
    "betti": _cmd_betti,
    "hilbert": _cmd_hilbert,
    "mult": _cmd_mult,
    "decompose": _cmd_decompose,
    "bounds": _cmd_bounds,
    "sweep": _cmd_sweep,
    "verify": _cmd_verify,
    "reduction": _cmd_reduction,
    "corpus": _cmd_corpus,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _HANDLERS[args.command](args)
    except (UsageError, ParseError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except (ResourceLimitError, StabilizationError, FitError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except DomainError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
