"""Exhaustive bound checks over small labeled graphs, and what a violation looks like."""

from conndom import LabeledCorpus, gen_cycle, gen_path, gen_pattern_H, run_check
import conndom.harness as harness

# every labeled connected graph on up to 6 vertices
for check in ("observation1", "zverovich", "theorem2", "theorem3"):
    r = run_check(check, LabeledCorpus(6))
    print(f"{check:<13} examined={r.graphs_examined:<6} members={r.members:<6} "
          f"violations={len(r.violations)} {r.elapsed:.1f}s")

# minimal CDSs from random starts, checked for long induced paths
r = run_check("lemma1", LabeledCorpus(6), ks=(6, 7, 8), starts=20)
print("lemma1 members", r.members, "violations", len(r.violations))

# the conjecture scan at n <= 7 (the pattern H needs 10 vertices, so only P9/C9 filter)
r = run_check("conjecture1", LabeledCorpus(7))
print("conjecture1 members", r.members, "violations", len(r.violations))

# drop the class filter and the three known extremal graphs show up as violations
harness.CLASS_OF_CHECK["conjecture1"] = None
r = run_check("conjecture1", [gen_path(9), gen_cycle(9), gen_pattern_H()])
print(r.to_csv())
