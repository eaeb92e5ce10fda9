"""Corpus generation and ingestion, bound checks, and the family report.

Every check runs over a stream of graphs and produces a :class:`CheckReport`.
Streams are either arbitrary iterables of :class:`Graph` (evaluated with the
pure-Python solvers) or :class:`LabeledCorpus` objects describing all labeled
connected graphs up to some order, which are scanned by the compiled kernels
in :mod:`conndom.kernels` when the check allows it.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, TextIO

import numpy as np

from . import kernels
from .construct import theorem2_pipeline, theorem3_pipeline
from .detect import ClassSpec, has_induced_cycle, has_induced_path, is_member
from .errors import BudgetExceeded, ClassViolation, ContractViolation, DefectError
from .families import gen_cycle, gen_F, gen_G, gen_H, gen_path
from .graph import Graph, Graph6Error, bits, parse_graph6, write_graph6
from .solve import gamma_c_value, gamma_value, minimalize_cds_mask

__all__ = [
    "CHECK_IDS",
    "CLASS_OF_CHECK",
    "CheckReport",
    "Violation",
    "CorpusError",
    "LabeledCorpus",
    "enumerate_connected",
    "ingest_graph6_stream",
    "run_check",
    "replay_violation",
    "minimal_cds_family",
    "family_report",
]

log = logging.getLogger(__name__)

CHECK_IDS = ("observation1", "zverovich", "theorem2", "theorem3", "lemma1", "conjecture1")

CLASS_OF_CHECK = {
    "observation1": None,
    "zverovich": ClassSpec((5,), (5,)),
    "theorem2": ClassSpec((6,), (6,)),
    "theorem3": ClassSpec((8,), (8,)),
    "conjecture1": ClassSpec((9,), (9,), ("H",)),
}

MAX_ENUMERATE_N = 9
DEFAULT_BUDGET = 10.0
BUDGET_MIN_N = 10


class CorpusError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


# --- corpora ----------------------------------------------------------------------


def _edge_pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, n) for i in range(j)]


def graph_from_edge_mask(n: int, mask: int) -> Graph:
    """Graph whose edge ``b`` (graph6 column order) is present iff bit ``b`` of ``mask`` is set."""
    pairs = _edge_pairs(n)
    return Graph(n, [pairs[b] for b in bits(mask)] if mask < 1 << 12 else
                 [pairs[b] for b in range(len(pairs)) if mask >> b & 1])


def enumerate_connected(n: int) -> Iterator[Graph]:
    """Every labeled connected graph on ``n`` vertices, in ascending edge-mask order."""
    if not 1 <= n <= MAX_ENUMERATE_N:
        raise ValueError(
            f"labeled enumeration is limited to 1 <= n <= {MAX_ENUMERATE_N}; "
            "ingest a graph6 corpus from an external generator for larger n"
        )
    pairs = _edge_pairs(n)
    m = len(pairs)
    for mask in range(1 << m):
        adj = [0] * n
        b = 0
        x = mask
        while x:
            if x & 1:
                u, v = pairs[b]
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            x >>= 1
            b += 1
        g = Graph.__new__(Graph)
        g._init(n, tuple(adj))
        if g.is_connected():
            yield g


@dataclass(frozen=True)
class LabeledCorpus:
    """All labeled graphs on ``n_min..n_max`` vertices (disconnected ones are counted as skipped)."""

    n_max: int
    n_min: int = 1

    def __post_init__(self):
        if not 1 <= self.n_min <= self.n_max <= MAX_ENUMERATE_N:
            raise ValueError(
                f"labeled corpus needs 1 <= n_min <= n_max <= {MAX_ENUMERATE_N}; "
                "ingest a graph6 corpus from an external generator for larger n"
            )

    def __iter__(self) -> Iterator[Graph]:
        for n in range(self.n_min, self.n_max + 1):
            pairs = _edge_pairs(n)
            for mask in range(1 << len(pairs)):
                yield graph_from_edge_mask(n, mask)


def ingest_graph6_stream(reader: TextIO | Iterable[str]) -> Iterator[Graph]:
    """Graphs from a graph6 file, one per nonempty line; a header ``>>graph6<<`` is accepted."""
    for lineno, line in enumerate(reader, 1):
        text = line.strip()
        if not text:
            continue
        if text.startswith(">>graph6<<"):
            text = text[len(">>graph6<<"):]
        try:
            yield parse_graph6(text)
        except Graph6Error as exc:
            raise CorpusError(str(exc), lineno) from None


# --- reports -------------------------------------------------------------------------


@dataclass
class Violation:
    graph6: str
    n: int
    gamma: int | None
    gamma_c: int | None
    bound: int | None
    detail: str


@dataclass
class CheckReport:
    check_id: str
    graphs_examined: int = 0
    skipped: int = 0
    members: int = 0
    violations: list[Violation] = field(default_factory=list)
    undecided: list[str] = field(default_factory=list)
    elapsed: float = 0.0
    info: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self, with_elapsed: bool = True) -> dict:
        out = asdict(self)
        out["passed"] = self.passed
        if not with_elapsed:
            out.pop("elapsed")
        return out

    def to_json(self, with_elapsed: bool = True) -> str:
        return json.dumps(self.to_dict(with_elapsed), indent=2, sort_keys=True)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["graph6", "n", "gamma", "gamma_c", "bound", "detail"])
        for v in self.violations:
            w.writerow([v.graph6, v.n, v.gamma, v.gamma_c, v.bound, v.detail])
        w.writerow([
            "#summary", "", "", "", "",
            f"check={self.check_id};examined={self.graphs_examined};skipped={self.skipped};"
            f"members={self.members};violations={len(self.violations)};undecided={len(self.undecided)}",
        ])
        return buf.getvalue()

    def merge(self, other: "CheckReport") -> None:
        self.graphs_examined += other.graphs_examined
        self.skipped += other.skipped
        self.members += other.members
        self.violations.extend(other.violations)
        self.undecided.extend(other.undecided)
        for key, val in other.info.items():
            if isinstance(val, int) and not isinstance(val, bool):
                self.info[key] = self.info.get(key, 0) + val
            else:
                self.info.setdefault(key, val)


# --- per-graph evaluation ------------------------------------------------------------------


def minimal_cds_family(g: Graph, starts: int = 100, seed: int = 0) -> list[int]:
    """Distinct minimal CDS masks reached from the full vertex set and ``starts`` random starts.

    Random starts are grown from a random vertex by adding random frontier
    vertices until dominating, then each further neighbour is kept with
    probability 1/2.  The stream is seeded from ``seed`` and the adjacency, so
    the compiled kernel reproduces the same starts.
    """
    adj, closed = g.adj, g.closed
    found = [minimalize_cds_mask(g, g.full_mask)]
    state = kernels.rng_seed(seed, kernels.graph_key(g.n, adj))
    for _ in range(starts):
        start, state = kernels.random_cds_start(g.n, adj, closed, state)
        x = minimalize_cds_mask(g, start)
        if x not in found:
            found.append(x)
    return found


def _class_member(g: Graph, spec: ClassSpec | None) -> bool:
    if spec is None:
        return True
    full = g.full_mask
    for k in spec.forbidden_paths:
        if has_induced_path(g.adj, k, full):
            return False
    for k in spec.forbidden_cycles:
        if has_induced_cycle(g.adj, k, full):
            return False
    if spec.forbidden_patterns:
        return is_member(g, ClassSpec((), (), spec.forbidden_patterns))[0]
    return True


def _evaluate(check_id: str, g: Graph, cfg: dict) -> tuple[bool, list[Violation], dict, bool]:
    """(member, violations, info counters, undecided) for one connected graph."""
    info: dict = {}
    if check_id == "lemma1":
        ks = [k for k in cfg["ks"] if _class_member(g, ClassSpec.pk_ck(k))]
        if not ks:
            return False, [], info, False
        out = []
        for x in minimal_cds_family(g, cfg["starts"], cfg["seed"]):
            info["minimal_cds_checked"] = info.get("minimal_cds_checked", 0) + 1
            for k in ks:
                if has_induced_path(g.adj, k - 2, x):
                    out.append(Violation(write_graph6(g), g.n, None, None, None,
                                         f"k={k}: minimal CDS {list(bits(x))} contains an induced P{k - 2}"))
        for k in ks:
            info[f"members_k{k}"] = 1
        return True, out, info, False

    if not _class_member(g, CLASS_OF_CHECK[check_id]):
        return False, [], info, False
    deadline = None
    budget = cfg.get("budget")
    if check_id == "conjecture1" and budget and g.n >= BUDGET_MIN_N:
        deadline = time.monotonic() + budget
    try:
        gm = gamma_value(g, deadline)
        gc = gamma_c_value(g, gm, deadline)
    except BudgetExceeded:
        return True, [], info, True
    bound = {
        "observation1": 3 * gm - 2,
        "zverovich": gm,
        "theorem2": gm + 1,
        "theorem3": 2 * gm,
        "conjecture1": 2 * gm,
    }[check_id]
    out = []
    bad = gc != gm if check_id == "zverovich" else gc > bound
    if bad:
        out.append(Violation(write_graph6(g), g.n, gm, gc, bound, f"gamma_c={gc} violates bound {bound}"))
    if check_id in ("theorem2", "theorem3") and cfg.get("pipelines", True):
        pipeline = theorem2_pipeline if check_id == "theorem2" else theorem3_pipeline
        try:
            tr = pipeline(g, checked=True)
        except DefectError as exc:
            info["pipeline_defects"] = 1
            out.append(Violation(write_graph6(g), g.n, gm, gc, bound, f"pipeline defect: {exc}"))
        else:
            key = tr.branch if check_id == "theorem2" else tr.structure
            info[f"pipeline_{key}"] = 1
            if tr.notes:
                info["pipeline_notes"] = 1
            if len(tr.final) > bound:
                info["pipeline_defects"] = 1
                out.append(Violation(write_graph6(g), g.n, gm, gc, bound,
                                     f"pipeline CDS {tr.final.sorted()} exceeds bound {bound}"))
    return True, out, info, False


def _evaluate_packed(args):
    check_id, n, adj, cfg = args
    g = Graph.__new__(Graph)
    g._init(n, adj)
    return _evaluate(check_id, g, cfg)


# --- running checks ---------------------------------------------------------------------


def _config(check_id, ks, starts, seed, budget, pipelines) -> dict:
    if check_id not in CHECK_IDS:
        raise ValueError(f"unknown check id {check_id!r}; expected one of {', '.join(CHECK_IDS)}")
    ks = tuple(sorted(set(ks)))
    if check_id == "lemma1" and any(k < 4 for k in ks):
        raise ValueError("Lemma 1 needs k >= 4")
    return {"ks": ks, "starts": starts, "seed": seed, "budget": budget, "pipelines": pipelines}


def run_check(
    check_id: str,
    source: Iterable[Graph] | LabeledCorpus,
    *,
    ks: Iterable[int] = (6, 7, 8),
    starts: int = 100,
    seed: int = 0,
    budget: float | None = DEFAULT_BUDGET,
    workers: int = 1,
    engine: str = "auto",
    pipelines: bool = True,
) -> CheckReport:
    """Evaluate ``check_id`` over every connected graph of ``source``.

    ``engine`` selects "python" (reference solvers), "kernel" (compiled scan,
    only for :class:`LabeledCorpus`) or "auto" (kernel for labeled corpora
    unless the check runs a construction pipeline).  Reports are merged in
    input order, so the result does not depend on ``workers``.
    """
    cfg = _config(check_id, ks, starts, seed, budget, pipelines)
    use_kernel = engine == "kernel" or (
        engine == "auto"
        and isinstance(source, LabeledCorpus)
        and not (check_id in ("theorem2", "theorem3") and pipelines)
    )
    if use_kernel:
        if not isinstance(source, LabeledCorpus):
            raise ValueError("the compiled engine only scans labeled corpora")
        return _run_kernel(check_id, source, cfg, workers)
    return _run_python(check_id, source, cfg, workers)


def _run_python(check_id: str, source: Iterable[Graph], cfg: dict, workers: int) -> CheckReport:
    t0 = time.perf_counter()
    report = CheckReport(check_id)
    if check_id == "theorem3":
        report.info["all_examined_are_members"] = True

    def connected_items():
        for g in source:
            if g.n == 0 or not g.is_connected():
                report.skipped += 1
                continue
            report.graphs_examined += 1
            yield g

    def absorb(g_n, result):
        member, viol, info, undecided = result
        if member:
            report.members += 1
        elif check_id == "theorem3":
            report.info["all_examined_are_members"] = False
        report.violations.extend(viol)
        if undecided:
            report.undecided.append(g_n)
        for key, val in info.items():
            report.info[key] = report.info.get(key, 0) + val

    if workers <= 1:
        for g in connected_items():
            result = _evaluate(check_id, g, cfg)
            absorb(write_graph6(g) if result[3] else None, result)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            graphs = ((check_id, g.n, g.adj, cfg) for g in connected_items())
            for args, result in zip_lazy(graphs, pool, chunksize=256):
                n, adj = args[1], args[2]
                g6 = None
                if result[3]:
                    g = Graph.__new__(Graph)
                    g._init(n, adj)
                    g6 = write_graph6(g)
                absorb(g6, result)
    report.elapsed = time.perf_counter() - t0
    return report


def zip_lazy(items, pool, chunksize: int):
    """Ordered ``pool.map`` over a lazy iterable, yielding (item, result) pairs batch by batch."""
    batch = []
    for item in items:
        batch.append(item)
        if len(batch) == chunksize * 16:
            yield from zip(batch, pool.map(_evaluate_packed, batch, chunksize=chunksize))
            batch = []
    if batch:
        yield from zip(batch, pool.map(_evaluate_packed, batch, chunksize=chunksize))


_KERNEL_CHUNK = 1 << 20
_MAX_RECORDS = 10_000


def _kernel_chunk(args):
    code, n, lo, hi, ks, starts, seed = args
    p = kernels.pairs(n)
    subs, st = kernels.subsets_by_size(n)
    pu = np.ascontiguousarray(p[:, 0]) if len(p) else np.zeros(0, dtype=np.int64)
    pv = np.ascontiguousarray(p[:, 1]) if len(p) else np.zeros(0, dtype=np.int64)
    counts, records, nrec = kernels.scan_range(
        code, n, lo, hi, pu, pv, subs, st, np.array(ks, dtype=np.int64), starts, seed, _MAX_RECORDS
    )
    return counts, records[:nrec]


def _run_kernel(check_id: str, corpus: LabeledCorpus, cfg: dict, workers: int) -> CheckReport:
    t0 = time.perf_counter()
    code = kernels.CHECK_CODES[check_id]
    report = CheckReport(check_id, info={"engine": "kernel"})
    if check_id == "theorem3":
        report.info["all_examined_are_members"] = True
    jobs = []
    for n in range(corpus.n_min, corpus.n_max + 1):
        total = 1 << (n * (n - 1) // 2)
        for lo in range(0, total, _KERNEL_CHUNK):
            jobs.append((code, n, lo, min(total, lo + _KERNEL_CHUNK), cfg["ks"], cfg["starts"], cfg["seed"]))
    if workers <= 1:
        results = map(_kernel_chunk, jobs)
        pool = None
    else:
        pool = ProcessPoolExecutor(max_workers=workers)
        results = pool.map(_kernel_chunk, jobs)
    try:
        for job, (counts, records) in zip(jobs, results):
            n = job[1]
            report.graphs_examined += int(counts[0])
            report.skipped += int(counts[1])
            report.members += int(counts[2])
            if counts[3] > len(records):
                report.info["unrecorded_violations"] = report.info.get("unrecorded_violations", 0) + int(
                    counts[3] - len(records))
            for mask, gm, gc, aux in records.tolist():
                g = graph_from_edge_mask(n, mask)
                g6 = write_graph6(g)
                if check_id == "lemma1":
                    detail = f"k={aux}: minimal CDS {list(bits(gc))} contains an induced P{aux - 2}"
                    report.violations.append(Violation(g6, n, None, None, None, detail))
                else:
                    report.violations.append(Violation(g6, n, gm, gc, aux, f"gamma_c={gc} violates bound {aux}"))
            log.debug("%s n=%d masks %d..%d done", check_id, n, job[2], job[3])
    finally:
        if pool is not None:
            pool.shutdown()
    if check_id == "theorem3":
        report.info["all_examined_are_members"] = report.members == report.graphs_examined
    report.elapsed = time.perf_counter() - t0
    return report


def replay_violation(v: Violation) -> bool:
    """Recompute gamma and gamma_c from the graph6 string alone and compare with the record."""
    g = parse_graph6(v.graph6)
    if v.gamma is None:
        return True
    return gamma_value(g) == v.gamma and gamma_c_value(g) == v.gamma_c


def default_workers() -> int:
    return len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else (os.cpu_count() or 1)


# --- family report ----------------------------------------------------------------------


REPORT_CLASSES = {
    "P5C5": ClassSpec((5,), (5,)),
    "P6C6": ClassSpec((6,), (6,)),
    "P7C7": ClassSpec((7,), (7,)),
    "P8C8": ClassSpec((8,), (8,)),
    "P9C9": ClassSpec((9,), (9,)),
    "P9C9H": ClassSpec((9,), (9,), ("H",)),
}


def _row(family: str, param: int, g: Graph) -> dict:
    gm = gamma_value(g)
    gc = gamma_c_value(g, gm)
    ratio = Fraction(gc, gm)
    row = {
        "family": family,
        "param": param,
        "n": g.n,
        "gamma": gm,
        "gamma_c": gc,
        "ratio": f"{ratio.numerator}/{ratio.denominator}",
        "ratio_value": round(gc / gm, 6),
    }
    for name, spec in REPORT_CLASSES.items():
        row[name] = is_member(g, spec)[0]
    return row


def family_report(max_k: int) -> list[dict]:
    """gamma, gamma_c, their ratio and class memberships for F_k, H_k, G_k (k <= max_k) and
    for paths and cycles up to 3 * max_k vertices."""
    if max_k < 1:
        raise ValueError("max_k must be >= 1")
    rows = []
    for name, gen in (("F", gen_F), ("H", gen_H), ("G", gen_G)):
        for k in range(1, max_k + 1):
            rows.append(_row(name, k, gen(k)))
    for n in range(1, 3 * max_k + 1):
        rows.append(_row("path", n, gen_path(n)))
    for n in range(3, 3 * max_k + 1):
        rows.append(_row("cycle", n, gen_cycle(n)))
    return rows


def rows_to_csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()
