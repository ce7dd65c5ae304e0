"""
From an almost simple group to a solvable group with the same prime graph
==========================================================================

Take a few almost simple groups whose prime graphs have no 3-coclique,
read off the two cliques from their certificates, and build a metabelian
group F x| C with exactly that graph.
"""

from gkgraph import classify, presets, realize, verify

for name in ["PGL2_7", "S5", "J2", "3D4(2)", "PSU4(2)"]:
    v = classify(presets(name))
    cert = v.certificate
    print(f"{name}: no 3-coclique = {v.no_3_coclique}  ({v.provenance})")
    print(f"  cliques {cert.clique_a_symbolic} | {cert.clique_b_symbolic}"
          f" = {sorted(cert.clique_a)} | {sorted(cert.clique_b)}")

    # The certificate graph carries the cross edges known for the group;
    # realize() keeps every one of them.
    g = cert.graph
    b = realize(g, cert.partition)
    for t in b.towers:
        print(f"  GF({t.p}^{t.m})^+  with C acting through the primes {list(t.D)}")
    rep = verify(b, g, cap=10**6)
    print(f"  |H| = {rep.group_order}, analytic match {rep.analytic_match},"
          f" enumerated match {rep.enumerated_match}")
    print()

# %%
# A negative verdict comes with three pairwise non-adjacent primes instead.
v = classify(presets("M10"))
print("M10:", v.no_3_coclique, v.certificate.witness)

# %%
# Large groups are fine: only number theory is involved.
from gkgraph.descriptors import AlmostSimpleDescriptor, Exceptional

v = classify(AlmostSimpleDescriptor(Exceptional("E8", 2)))
print("E8(2) witness:", v.certificate.witness, [w.declared for w in v.certificate.primes])
