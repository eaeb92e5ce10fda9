"""Command-line entry point: ``conndom <subcommand> [flags]``.

Data goes to stdout in the selected format; diagnostics go to stderr.
Exit codes: 0 success, 1 violations found, 2 usage or input error,
3 a proof-guaranteed fact failed (DefectError).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence

from . import harness
from .construct import theorem2_pipeline, theorem3_pipeline
from .detect import is_member, parse_class_spec
from .errors import ClassViolation, ContractViolation, DefectError
from .families import parse_family
from .graph import EdgeListError, Graph, Graph6Error, parse_edge_list, write_edge_list, write_graph6
from .solve import gamma, gamma_c

EXIT_OK, EXIT_VIOLATIONS, EXIT_USAGE, EXIT_DEFECT = 0, 1, 2, 3


class InputError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(_usage(f"{self.prog}: error: {message}"))


def _usage(message: str) -> int:
    print(message, file=sys.stderr)
    return EXIT_USAGE


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="ascii") as fh:
            return fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def parse_graphs(text: str) -> list[Graph]:
    """graph6 lines, or a single edge list when any nonblank line contains whitespace."""
    lines = [ln.strip() for ln in text.splitlines()]
    if any(len(ln.split()) > 1 for ln in lines):
        try:
            return [parse_edge_list(text)]
        except EdgeListError as exc:
            raise InputError(f"edge list: {exc}") from None
    try:
        return list(harness.ingest_graph6_stream(lines))
    except harness.CorpusError as exc:
        raise InputError(f"graph6: {exc}") from None


def _load(args) -> list[tuple[str, Graph]]:
    """(label, graph) pairs from ``--family`` or ``--input``."""
    if getattr(args, "family", None):
        try:
            fam = parse_family(args.family)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        return [(str(fam), fam.build())]
    if args.input is None:
        raise InputError("no graph given: use --input PATH|- or --family TOKEN")
    graphs = parse_graphs(_read_text(args.input))
    if not graphs:
        raise InputError("input contains no graphs")
    return [(write_graph6(g), g) for g in graphs]


def _emit_rows(rows: list[dict], fmt: str, text_line) -> None:
    out = sys.stdout
    if fmt == "json":
        json.dump(rows if len(rows) != 1 else rows[0], out, indent=2, sort_keys=True)
        out.write("\n")
    elif fmt == "csv":
        flat = [{k: (" ".join(map(str, v)) if isinstance(v, list) else v) for k, v in r.items()} for r in rows]
        out.write(harness.rows_to_csv(flat))
    else:
        for r in rows:
            out.write(text_line(r) + "\n")


# --- subcommands -------------------------------------------------------------------


def cmd_gen(args) -> int:
    try:
        fam = parse_family(args.family)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    g = fam.build()
    fmt = args.format
    if fmt == "graph6":
        print(write_graph6(g))
    elif fmt == "edgelist":
        sys.stdout.write(write_edge_list(g))
    elif fmt == "json":
        print(json.dumps({"family": str(fam), "n": g.n, "edges": [list(e) for e in g.edges()]}, sort_keys=True))
    else:
        print(f"{fam}: n={g.n} m={g.num_edges()}")
        for u, v in g.edges():
            print(u, v)
    return EXIT_OK


def cmd_solve(args) -> int:
    rows = []
    for label, g in _load(args):
        row: dict = {"graph": label, "n": g.n}
        if args.what in ("gamma", "both"):
            cert = gamma(g)
            row["gamma"] = cert.value
            row["gamma_witness"] = cert.witness.sorted()
        if args.what in ("gamma-c", "both"):
            if not g.is_connected():
                raise InputError(f"{label}: gamma_c needs a connected graph")
            cert = gamma_c(g)
            row["gamma_c"] = cert.value
            row["gamma_c_witness"] = cert.witness.sorted()
        rows.append(row)

    def line(r):
        return " ".join(f"{k}={r[k]}" for k in ("gamma", "gamma_c") if k in r)

    _emit_rows(rows, args.format, line)
    return EXIT_OK


def _witness_label(w) -> str:
    if w.kind == "path":
        return f"P{len(w.vertices)}"
    if w.kind == "cycle":
        return f"C{len(w.vertices)}"
    return w.name


def cmd_free(args) -> int:
    try:
        spec = parse_class_spec(args.pattern)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    rows = []
    for label, g in _load(args):
        member, w = is_member(g, spec)
        rows.append({
            "graph": label,
            "class": str(spec),
            "member": member,
            "witness_kind": _witness_label(w) if w else "",
            "witness": list(w.vertices) if w else [],
        })

    def line(r):
        if r["member"]:
            return f"member=true class={r['class']}"
        return f"member=false witness={r['witness_kind']}:{','.join(map(str, r['witness']))}"

    _emit_rows(rows, args.format, line)
    return EXIT_OK


def cmd_construct(args) -> int:
    pipeline = theorem2_pipeline if args.theorem == "p6c6" else theorem3_pipeline
    rows = []
    for label, g in _load(args):
        tr = pipeline(g)
        row = tr.to_dict() if args.trace else {
            "theorem": tr.theorem,
            "final": tr.final.sorted(),
            "bound": tr.bound,
            "satisfied": tr.satisfied,
        }
        row = {"graph": label, **row}
        rows.append(row)

    def line(r):
        if args.trace:
            return json.dumps(r, sort_keys=True)
        return f"cds={','.join(map(str, r['final']))} size={len(r['final'])} bound={r['bound']}"

    if args.trace and args.format == "text":
        args.format = "json"
    _emit_rows(rows, args.format, line)
    return EXIT_OK


def cmd_verify(args) -> int:
    if (args.enumerate is None) == (args.input is None):
        raise InputError("verify needs exactly one of --enumerate N or --input PATH|-")
    checks = harness.CHECK_IDS if args.check == "all" else (args.check,)
    workers = args.workers or harness.default_workers()
    if args.enumerate is not None:
        try:
            source = harness.LabeledCorpus(args.enumerate, n_min=args.enumerate)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    else:
        source = parse_graphs(_read_text(args.input))
    reports = []
    for check in checks:
        reports.append(harness.run_check(
            check, source, ks=args.ks, starts=args.starts, seed=args.seed,
            budget=args.budget, workers=workers,
        ))
    out = sys.stdout
    if args.format == "json":
        payload = [json.loads(r.to_json()) for r in reports]
        json.dump(payload if len(payload) > 1 else payload[0], out, indent=2, sort_keys=True)
        out.write("\n")
    elif args.format == "csv":
        for r in reports:
            out.write(r.to_csv())
    else:
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            out.write(f"{r.check_id}: {status} examined={r.graphs_examined} skipped={r.skipped} "
                      f"members={r.members} violations={len(r.violations)} "
                      f"undecided={len(r.undecided)} elapsed={r.elapsed:.2f}s\n")
            for v in r.violations:
                out.write(f"  {v.graph6} n={v.n} gamma={v.gamma} gamma_c={v.gamma_c} bound={v.bound} {v.detail}\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_VIOLATIONS


def cmd_report(args) -> int:
    if args.max_k < 1:
        raise InputError("--max-k must be >= 1")
    rows = harness.family_report(args.max_k)
    out = sys.stdout
    if args.format == "json":
        json.dump(rows, out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        out.write(harness.rows_to_csv(rows))
    else:
        for r in rows:
            classes = " ".join(name for name in harness.REPORT_CLASSES if r[name])
            out.write(f"{r['family']:>5} {r['param']:>3} n={r['n']:<3} gamma={r['gamma']:<3} "
                      f"gamma_c={r['gamma_c']:<3} ratio={r['ratio']:<6} free:{classes}\n")
    return EXIT_OK


# --- parser --------------------------------------------------------------------------


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="conndom", description="Domination versus connected domination in graph classes.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_input(sp):
        sp.add_argument("--input", metavar="PATH|-", help="graph6 lines or an 'n m' edge list")
        sp.add_argument("--family", metavar="TOKEN", help="path:N, cycle:N, F:K, H:K, G:K or Hpattern")

    def fmt(sp, choices=("text", "json", "csv")):
        sp.add_argument("--format", choices=choices, default=choices[0])

    sp = sub.add_parser("gen", help="generate a named family member")
    sp.add_argument("--family", metavar="TOKEN", required=True)
    fmt(sp, ("graph6", "edgelist", "json", "text"))
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("solve", help="exact gamma and gamma_c with witnesses")
    graph_input(sp)
    sp.add_argument("--what", choices=("gamma", "gamma-c", "both"), default="both")
    fmt(sp)
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("free", help="class membership with a forbidden-subgraph witness")
    graph_input(sp)
    sp.add_argument("--pattern", metavar="SPEC", required=True, help='e.g. "P6,C6" or "P9,C9,H"')
    fmt(sp)
    sp.set_defaults(func=cmd_free)

    sp = sub.add_parser("construct", help="run a constructive proof pipeline")
    graph_input(sp)
    sp.add_argument("--theorem", choices=("p6c6", "p8c8"), required=True)
    sp.add_argument("--trace", action="store_true", help="emit the full construction trace")
    fmt(sp)
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("verify", help="check a bound over a corpus")
    sp.add_argument("--check", choices=harness.CHECK_IDS + ("all",), required=True)
    sp.add_argument("--enumerate", type=int, metavar="N", help="all labeled graphs on N vertices")
    sp.add_argument("--input", metavar="PATH|-", help="graph6 corpus")
    sp.add_argument("--workers", type=_nonneg, default=0, help="default: available CPUs")
    sp.add_argument("--budget", type=float, default=harness.DEFAULT_BUDGET, metavar="SECONDS",
                    help="per-graph solver budget for conjecture1 at n >= 10")
    sp.add_argument("--ks", type=int, nargs="+", default=[6, 7, 8], help="lemma1 path/cycle lengths")
    sp.add_argument("--starts", type=_nonneg, default=100, help="lemma1 random CDS starts per graph")
    sp.add_argument("--seed", type=int, default=0)
    fmt(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("report", help="family table of gamma, gamma_c and ratios")
    sp.add_argument("--max-k", type=int, default=4, metavar="K")
    fmt(sp)
    sp.set_defaults(func=cmd_report)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except DefectError as exc:
        print(f"defect: {exc}", file=sys.stderr)
        return EXIT_DEFECT
    except ClassViolation as exc:
        print(f"input outside class: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InputError, ContractViolation, Graph6Error, EdgeListError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
