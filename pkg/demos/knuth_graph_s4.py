"""Walk through the P-Knuth classes of S_4 for the order with lambda = (2, 1).

Run:  python3 demos/knuth_graph_s4.py
"""
from pknuth import build_graph, check_d_graph_axioms, components, expand_in_schur, from_partition, gamma

P = from_partition((2, 1), 4)
print(f"{P!r}: relations {P.relations()}")

comps = components(P)
print(f"{len(comps)} classes, sizes {sorted(len(c) for c in comps)}\n")

for c in comps:
    words = " ".join("".join(map(str, w)) for w in c)
    print(f"{words:<28} {expand_in_schur(gamma(P, c)).render()}")

# the five-element class is a D graph but not a dual equivalence graph
big = max(comps, key=len)
rep = check_d_graph_axioms(build_graph(P, big))
print("\naxioms on the largest class:", {k: ok for k, (ok, _) in rep.results.items()})
print("note:", rep.notes["dual_equivalence"])
