"""
Graphs with no 3-coclique that no solvable group realizes
==========================================================

A graph is the prime graph of a solvable group exactly when it has no
3-coclique and its complement is 3-colourable.  The complement of the
Groetzsch graph passes the first test and fails the second, so it is the
smallest natural candidate for a prime graph that only a non-solvable
group could have.  Whether such a group exists is not settled here.
"""

from gkgraph.prime_graph import (
    find_3_coclique,
    grotzsch_graph,
    mycielski_graph,
    relabel_on_primes,
    solvable_realizable,
    three_coloring,
)

n, edges = grotzsch_graph()
grotzsch = relabel_on_primes(n, edges)
candidate = grotzsch.complement()
print("vertices:", candidate.vertices)
print("3-coclique in the candidate:", find_3_coclique(candidate))
print("3-colouring of its complement:", three_coloring(grotzsch))
print(solvable_realizable(candidate))

# %%
# Mycielski graphs are triangle-free with growing chromatic number; from
# M_4 on their complements are all candidates.
for k in range(2, 6):
    n, edges = mycielski_graph(k)
    rep = solvable_realizable(relabel_on_primes(n, edges).complement())
    print(f"M_{k}: {n} vertices, candidate = {rep.no_3_coclique and not rep.complement_3_colorable}")
