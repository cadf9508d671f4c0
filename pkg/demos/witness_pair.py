"""
One degree sequence, two very different graphs
==============================================

The same degree sequence can be realized both by a graph that is not
k-connected and by one that is — so no counting condition on degrees
alone can ever be sufficient.  This script builds the canonical pair
for n = 7, k = 2 and measures both sides.
"""

from kconnseq import (
    associated_pair,
    build_G1,
    build_G2,
    degree_sequence,
    internally_disjoint_path_count,
    is_maximally_non_k_connected,
    vertex_connectivity,
    witness_sequence,
)

N, K = 7, 2

s = witness_sequence(N, K)
pair = associated_pair(s)
print(f"witness sequence for n={N}, k={K}: {{{s}}}")
print(f"phi = {pair.phi}, epsilon = {pair.epsilon_str()}")
print()

# G1 glues a small clique and a large clique along a shared (k-1)-clique,
# so those shared vertices form a cutset of size k-1.
g1 = build_G1(N, K)
print(f"G1: {g1.edge_count} edges, degrees {list(degree_sequence(g1))}")
print(f"    vertex connectivity = {vertex_connectivity(g1)}  (< k)")

# And G1 is extremal: adding any missing edge makes it k-connected.
print(f"    maximally non-{K}-connected: {is_maximally_non_k_connected(g1, K)}")
print()

# G2 swaps two edges of G1 — same degree everywhere — and the cut heals.
g2 = build_G2(N, K)
print(f"G2: {g2.edge_count} edges, degrees {list(degree_sequence(g2))}")
print(f"    vertex connectivity = {vertex_connectivity(g2)}  (>= k)")
print()

# Menger's view of the same fact: vertex 1 is one of the degree-k
# vertices trapped behind the small cutset in G1, vertex N-1 sits deep in
# the big clique.  Count internally disjoint paths between them.
a, b = 1, N - 1
print(f"internally disjoint {a}-{b} paths: "
      f"G1 has {internally_disjoint_path_count(g1, a, b)}, "
      f"G2 has {internally_disjoint_path_count(g2, a, b)}")
