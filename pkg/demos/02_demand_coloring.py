"""Demand-driven edge coloring: ask each vertex for a color count.

Instead of properness, each vertex v carries a demand c(v): the coloring
must show at least c(v) distinct colors on the edges at v.  The solver
handles any instance with c(v) <= min(deg(v), k) whose overloaded vertices
(c(v) + mu(v) > k) form a stable set.  Watching the trace shows the fan and
trail recolorings fire on the harder augmentations.
"""

import json

from supercolor import DemandInstance, Multigraph
from supercolor.demand import overloaded_vertices, solve, validate, verify

# A five-wheel-ish multigraph with a doubled spoke.
g = Multigraph(5, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 4),
                   (1, 2), (2, 3), (3, 4), (4, 1)])
k = 4
c = (4, 2, 2, 2, 2)
inst = DemandInstance(g, k, c)

print("demands:", c, "palette size:", k)
print("hypothesis report:", validate(inst) or "ok")
print("overloaded vertices:", sorted(overloaded_vertices(inst)))

stats = {}
events = []
coloring = solve(inst, trace=events.append, stats=stats)
print("\ncoloring:", coloring)
print("violations:", verify(inst, coloring) or "none")
print("augmentation branches:", json.dumps(stats, indent=2))

print("\ntrace of the non-direct steps:")
for event in events:
    if event["event"] not in ("direct",):
        print(" ", event)

# Demands above min(deg, k) or an unstable overloaded set are rejected:
bad = DemandInstance(Multigraph(2, [(0, 1)]), 1, (1, 1))
print("\nsingle edge, one color, both ends demanding it:")
for line in validate(bad):
    print("  rejected:", line)
