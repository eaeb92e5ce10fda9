"""Acceptance criteria 1-12, one test each, exact integer tolerance.

Each test prints a single PASS/FAIL line; the lines are repeated in the
pytest terminal summary.  Criteria 5-9 and 12 scan every labeled connected
graph up to 7 or 8 vertices and take minutes.  Skip them with
``-m "not acceptance"``.
"""

import random
import time
from fractions import Fraction

import pytest

from conndom.detect import ClassSpec, is_member
from conndom.families import gen_cycle, gen_F, gen_G, gen_H, gen_path, gen_pattern_H
from conndom.graph import Graph
from conndom.harness import LabeledCorpus, default_workers, replay_violation, run_check
from conndom.solve import gamma_c_value, gamma_value

from . import oracles as O

pytestmark = pytest.mark.acceptance

WORKERS = default_workers()
# labeled connected graphs on 1..7 vertices: 1 + 1 + 4 + 38 + 728 + 26704 + 1866256
CONNECTED_UP_TO_7 = 1893732


def _values(g):
    gm = gamma_value(g)
    return gm, gamma_c_value(g, gm)


def test_c01_ratio_endpoints(criterion):
    t0 = time.perf_counter()
    got = [_values(gen_path(8)), _values(gen_cycle(8))]
    dt = time.perf_counter() - t0
    criterion("C1", got == [(3, 6), (3, 6)] and dt < 1.0,
              f"P8 (gamma, gamma_c)={got[0]} C8={got[1]} expected (3, 6) both; {dt:.3f}s < 1s")


def test_c02_f_family(criterion):
    t0 = time.perf_counter()
    bad = []
    for k in range(1, 7):
        g = gen_F(k)
        got = _values(g)
        member = is_member(g, ClassSpec((6,), (6,)))[0]
        if got != (k + 1, k + 2) or not member:
            bad.append((k, got, member))
    dt = time.perf_counter() - t0
    criterion("C2", not bad and dt < 30.0,
              f"F_k k=1..6 gamma=k+1, gamma_c=k+2, (P6,C6)-free; mismatches={bad}; {dt:.2f}s < 30s")


def test_c03_h_family(criterion):
    bad = []
    for k in range(1, 7):
        g = gen_H(k)
        got = _values(g)
        member = is_member(g, ClassSpec((7,), (7,)))[0]
        if got != (k, 2 * k) or not member:
            bad.append((k, got, member))
    criterion("C3", not bad,
              f"H_k k=1..6 gamma=k, gamma_c=2k, (P7,C7)-free; mismatches (k, (gamma, gamma_c), member)={bad}")


def test_c04_g_family(criterion):
    bad, ratios = [], []
    for k in range(2, 6):
        g = gen_G(k)
        got = _values(g)
        member = is_member(g, ClassSpec((9,), (9,)))[0]
        if got != (k + 1, 3 * k) or not member:
            bad.append((k, got, member))
        ratios.append(Fraction(got[1], got[0]))
    increasing = all(a < b for a, b in zip(ratios, ratios[1:]))
    criterion("C4", not bad and increasing,
              f"G_k k=2..5 gamma=k+1, gamma_c=3k, (P9,C9)-free; mismatches={bad}; "
              f"ratios {[str(r) for r in ratios]} strictly increasing={increasing}")


def test_c05_observation1(criterion):
    r = run_check("observation1", LabeledCorpus(7), workers=WORKERS)
    ok = r.passed and r.graphs_examined == CONNECTED_UP_TO_7
    criterion("C5", ok,
              f"gamma_c <= 3 gamma - 2 over {r.graphs_examined} labeled connected graphs n<=7: "
              f"{len(r.violations)} violations; {r.elapsed:.1f}s with {WORKERS} worker(s)")


def test_c06_zverovich(criterion):
    r = run_check("zverovich", LabeledCorpus(7), workers=WORKERS)
    criterion("C6", r.passed and r.graphs_examined == CONNECTED_UP_TO_7,
              f"gamma_c = gamma on {r.members} (P5,C5)-free of {r.graphs_examined} connected graphs n<=7: "
              f"{len(r.violations)} violations; {r.elapsed:.1f}s")


def test_c07_theorem2(criterion):
    r = run_check("theorem2", LabeledCorpus(7), workers=WORKERS)
    defects = r.info.get("pipeline_defects", 0)
    branches = {k: v for k, v in r.info.items() if k.startswith("pipeline_") and k != "pipeline_defects"}
    criterion("C7", r.passed and defects == 0 and r.members > 0,
              f"gamma_c <= gamma+1 and pipeline |X| <= gamma+1 on {r.members} (P6,C6)-free graphs n<=7: "
              f"{len(r.violations)} violations, {defects} pipeline defects; {branches}; {r.elapsed:.0f}s")


def test_c08_theorem3(criterion):
    r = run_check("theorem3", LabeledCorpus(7), workers=WORKERS)
    defects = r.info.get("pipeline_defects", 0)
    all_members = r.info.get("all_examined_are_members") and r.members == r.graphs_examined
    criterion("C8", r.passed and defects == 0 and all_members,
              f"gamma_c <= 2 gamma and pipeline CDS <= 2 gamma on {r.members} (P8,C8)-free graphs n<=7 "
              f"(all {r.graphs_examined} connected graphs are members: {all_members}): "
              f"{len(r.violations)} violations, {defects} pipeline defects; {r.elapsed:.0f}s")


def test_c09_lemma1(criterion):
    r = run_check("lemma1", LabeledCorpus(7), ks=(6, 7, 8), starts=100, seed=0, workers=WORKERS)
    criterion("C9", r.passed and r.members > 0,
              f"every minimal CDS (full start + 100 seeded random starts) is P(k-2)-free, k in 6,7,8, "
              f"on {r.members} graphs n<=7: {len(r.violations)} violations; {r.elapsed:.0f}s")


def test_c10_pattern_h(criterion):
    got = {"H": _values(gen_pattern_H()), "P9": _values(gen_path(9)), "C9": _values(gen_cycle(9))}
    brute = O.naive_gamma(10, gen_pattern_H().edges()), O.naive_gamma_c(10, gen_pattern_H().edges())
    ok = all(v == (3, 7) for v in got.values()) and brute == (3, 7)
    violate = all(gc > 2 * gm for gm, gc in got.values())
    criterion("C10", ok and violate,
              f"(gamma, gamma_c) {got}, exhaustive oracle on H {brute}; all exceed 2 gamma: {violate}")


def test_c11_oracle_equivalence(criterion):
    rng = random.Random(20240611)
    mismatches = []
    sizes = []
    for _ in range(1000):
        n, e = O.random_connected(rng, 12)
        g = Graph(n, e)
        sizes.append(n)
        got = _values(g)
        want = O.naive_gamma(n, e), O.naive_gamma_c(n, e)
        if got != want:
            mismatches.append((n, e, got, want))
    criterion("C11", not mismatches,
              f"1000 seeded random connected graphs (n {min(sizes)}..{max(sizes)}): "
              f"{len(mismatches)} mismatches against increasing-cardinality enumeration")


def test_c12_conjecture1_scan(criterion):
    r = run_check("conjecture1", LabeledCorpus(8), workers=WORKERS)
    replay_ok = all(replay_violation(v) for v in r.violations)
    detail = ", ".join(v.graph6 for v in r.violations[:10])
    criterion("C12", replay_ok and not r.undecided,
              f"scan of {r.members} (P9,C9,H)-free labeled connected graphs n<=8 completed: "
              f"{len(r.violations)} violations{(' [' + detail + ']') if detail else ''}; "
              f"replayable={replay_ok}; {r.elapsed:.0f}s")
