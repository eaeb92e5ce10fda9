"""Walk the constructive proofs step by step on small members of each class."""

import json

from conndom import Graph, gen_cycle, gen_F, gen_H, theorem2_pipeline, theorem3_pipeline

# (P6,C6)-free: D plus a minimal connector, trimmed to a minimal CDS X
g = gen_F(3)
tr = theorem2_pipeline(g)
print("D =", tr.D.sorted(), " C =", tr.C.sorted(), " X =", tr.X.sorted())
print("components of G[D]:", [c.sorted() for c in tr.D_components])
print("I =", tr.I, " picks =", tr.picks, " S =", tr.S.sorted())
print("branch:", tr.branch, " |X| =", len(tr.X), "<= gamma + 1 =", tr.bound)

# (P8,C8)-free: a structured CDS Y of G[X] that is either C6 or spanning complete bipartite
g = gen_H(3)
tr = theorem3_pipeline(g)
print("\nH_3:", tr.structure, "Y =", tr.Y.sorted(), "A =", tr.A.sorted(), "B =", tr.B.sorted())
print("y picks:", tr.y_picks, " z =", tr.z, " l =", tr.l)
print("final CDS", tr.final.sorted(), "size", len(tr.final), "<= 2 gamma =", tr.bound)

# a sunlet (C6 with a pendant on every cycle vertex) drives the C6 branch
c6 = gen_cycle(6)
sun = Graph(12, c6.edges() + [(i, 6 + i) for i in range(6)])
tr = theorem3_pipeline(sun)
print("\nsunlet:", tr.structure, "Y order", list(tr.Y_order), "Y' =", tr.Y_prime.sorted())
print("final", tr.final.sorted(), "bound", tr.bound)

# the full trace is a flat JSON record
print(json.dumps(tr.to_dict(), sort_keys=True)[:300], "...")
