"""Shared JSON formats for graphs, instances and colorings.

Formats (all ids 0-based, colors 1-based):

* graph:     {"n": int, "edges": [[a, b], ...]}   edge order defines edge ids
* demand:    {"graph": <graph>, "k": int, "c": [int per vertex]}
* family:    {"ground": int, "k": int, "sets": [[element, ...], ...], "g": [int, ...]}
* coloring:  {"colors": [int per edge or element, 1-based]}
"""

from __future__ import annotations

from typing import Mapping

from .demand import DemandInstance
from .families import FamilyInstance, elements_of, mask_of
from .multigraph import Multigraph


def load_graph(obj) -> Multigraph:
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise ValueError("graph object must have 'n' and 'edges'")
    edges = [tuple(e) for e in obj["edges"]]
    if any(len(e) != 2 for e in edges):
        raise ValueError("each edge must be a pair [a, b]")
    return Multigraph(obj["n"], edges)


def dump_graph(g: Multigraph) -> dict:
    return {"n": g.n, "edges": [list(g.endpoints(e)) for e in g.edge_ids()]}


def load_demand(obj) -> DemandInstance:
    for key in ("graph", "k", "c"):
        if not isinstance(obj, dict) or key not in obj:
            raise ValueError(f"demand instance object must have '{key}'")
    return DemandInstance(load_graph(obj["graph"]), obj["k"], tuple(obj["c"]))


def dump_demand(inst: DemandInstance) -> dict:
    return {"graph": dump_graph(inst.graph), "k": inst.k, "c": list(inst.c)}


def load_family(obj) -> FamilyInstance:
    for key in ("ground", "k", "sets", "g"):
        if not isinstance(obj, dict) or key not in obj:
            raise ValueError(f"family instance object must have '{key}'")
    return FamilyInstance(
        ground=obj["ground"],
        sets=tuple(mask_of(s) for s in obj["sets"]),
        g=tuple(obj["g"]),
        k=obj["k"],
    )


def dump_family(inst: FamilyInstance) -> dict:
    return {
        "ground": inst.ground,
        "k": inst.k,
        "sets": [list(elements_of(x)) for x in inst.sets],
        "g": list(inst.g),
    }


def load_coloring(obj, ids) -> dict[int, int]:
    """Coloring over the given ids from {"colors": [...]} in id order."""
    if not isinstance(obj, dict) or "colors" not in obj:
        raise ValueError("coloring object must have 'colors'")
    colors = obj["colors"]
    ids = list(ids)
    if len(colors) != len(ids):
        raise ValueError(f"coloring has {len(colors)} entries, expected {len(ids)}")
    return {i: c for i, c in zip(ids, colors)}


def dump_coloring(coloring: Mapping[int, int], ids) -> dict:
    ids = list(ids)
    missing = [i for i in ids if i not in coloring]
    if missing:
        raise ValueError(f"coloring is missing ids {missing}")
    return {"colors": [coloring[i] for i in ids]}


def detect_kind(obj) -> str:
    """Classify an instance object as 'graph', 'demand' or 'family'."""
    if isinstance(obj, dict):
        if {"graph", "k", "c"} <= obj.keys():
            return "demand"
        if {"ground", "k", "sets", "g"} <= obj.keys():
            return "family"
        if {"n", "edges"} <= obj.keys():
            return "graph"
    raise ValueError("object is not a recognized graph, demand or family instance")
