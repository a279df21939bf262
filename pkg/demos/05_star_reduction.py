"""Edge demands as a set-family instance: the star reduction.

Replacing each vertex by its star (the set of incident edge ids) with
requirement c(v) turns a demand edge-coloring instance into a set-family
instance over the edges.  Stars of distinct vertices never share three-way,
so the family is automatically triple-wise closed, and a stable overloaded
set makes the over-budget stars pairwise disjoint.  Both solvers must agree.
"""

from supercolor import DemandInstance, Multigraph, from_graph_stars
from supercolor.demand import solve as solve_edges
from supercolor.demand import validate, verify
from supercolor.families import elements_of
from supercolor.supermodular import solve as solve_family
from supercolor.supermodular import validate as validate_family
from supercolor.supermodular import verify as verify_family

g = Multigraph(4, [(0, 1), (0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
k, c = 4, (3, 2, 2, 1)
inst = DemandInstance(g, k, c)
print("demand instance ok?", not validate(inst))

fam = from_graph_stars(g, c, k)
print("\nstar family over the", fam.ground, "edge ids:")
for x, gx in zip(fam.sets, fam.g):
    print(f"  {set(elements_of(x))} needs {gx} colors")
print("family hypotheses:", validate_family(fam) or "ok")

pi = solve_family(fam)
direct = solve_edges(inst)
print("\nfamily solver :", pi, "->", verify_family(fam, pi) or "meets every star")
print("direct solver :", direct, "->", verify(inst, direct) or "meets every demand")

# The family assignment is itself an edge coloring meeting the demands.
as_edges = {e: pi[e] for e in g.edge_ids()}
print("family assignment read as an edge coloring:",
      verify(inst, as_edges) or "meets every demand")

# Twin vertices (identical stars) merge, keeping the larger requirement.
bundle = Multigraph(2, [(0, 1), (0, 1), (0, 1)])
merged = from_graph_stars(bundle, (1, 2), 4)
print("\nthree parallel edges, demands (1, 2):",
      [set(elements_of(x)) for x in merged.sets], "with requirement", merged.g)
