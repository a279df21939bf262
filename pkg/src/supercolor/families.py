"""Explicit set families over a finite ground set, and their structure checkers.

Sets are integer bitmasks over ground elements 0..ground-1 (Python integers
are unbounded, so there is no size cap).  A family is an ordered list of
distinct masks paired with an integer requirement g per set.  The checkers
cover the hypothesis classes of the set-family solver:

* intersecting family / intersecting supermodular function,
* triple-wise closure ("strongly triple-intersecting"): every three sets
  with a common element have at least two of their three pairs closed under
  union and intersection (and, for the supermodular variant, satisfying the
  supermodular inequality on those pairs),
* the overlap statistic d_value(F, X): the largest |X & Y| over members Y
  inclusion-incomparable with X,
* the capacity check on L = {X : g(X) + d_value(X) > k}: every pair of L
  must be nested, disjoint, or closed with the supermodular inequality.

The triple checkers scan all O(|F|^3) triples; they are correctness tools
for desk-scale instances, not a hot path.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import demand
from .errors import HypothesisViolation
from .multigraph import _GraphQueries


def mask_of(elements: Iterable[int]) -> int:
    """Bitmask of an iterable of element ids."""
    m = 0
    for x in elements:
        if x < 0:
            raise ValueError(f"negative element id {x}")
        m |= 1 << x
    return m


def elements_of(mask: int) -> tuple[int, ...]:
    """Sorted element ids of a bitmask."""
    out = []
    x = mask
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return tuple(out)


def set_key(mask: int) -> tuple[int, ...]:
    """Canonical sort key for sets: the sorted element tuple."""
    return elements_of(mask)


@dataclass(frozen=True)
class FamilyInstance:
    """Ground set size, family of distinct sets, requirements g, palette k."""

    ground: int
    sets: tuple[int, ...]
    g: tuple[int, ...]
    k: int

    def __post_init__(self):
        if not isinstance(self.ground, int) or self.ground < 0:
            raise ValueError(f"ground size must be a nonnegative integer, got {self.ground!r}")
        if not isinstance(self.k, int) or self.k < 1:
            raise ValueError(f"k must be a positive integer, got {self.k!r}")
        sets = tuple(int(x) for x in self.sets)
        g = tuple(int(x) for x in self.g)
        if len(sets) != len(g):
            raise ValueError(f"{len(sets)} sets but {len(g)} requirements")
        universe = (1 << self.ground) - 1
        for i, x in enumerate(sets):
            if x < 0 or x & ~universe:
                raise ValueError(f"set {i} has elements outside the ground set")
        if len(set(sets)) != len(sets):
            raise ValueError("duplicate sets in the family")
        object.__setattr__(self, "sets", sets)
        object.__setattr__(self, "g", g)

    def index_of(self, mask: int) -> int:
        try:
            return self.sets.index(mask)
        except ValueError:
            raise ValueError(f"set {elements_of(mask)} is not in the family") from None

    def g_of(self, mask: int) -> int:
        return self.g[self.index_of(mask)]

    def bound_violations(self) -> list[int]:
        """Indices where min(|X|, k) >= g(X) fails."""
        return [i for i, (x, gx) in enumerate(zip(self.sets, self.g))
                if min(x.bit_count(), self.k) < gx]


def is_intersecting_family(sets: Sequence[int]) -> bool:
    """Closure under union and intersection for every intersecting pair."""
    members = set(sets)
    for i, x in enumerate(sets):
        for y in sets[i + 1:]:
            if x & y and not ((x | y) in members and (x & y) in members):
                return False
    return True


def is_intersecting_supermodular(sets: Sequence[int], g: Sequence[int]) -> bool:
    """Intersecting family whose g obeys g(X)+g(Y) <= g(X|Y)+g(X&Y) on
    intersecting pairs."""
    if not is_intersecting_family(sets):
        return False
    lookup = {x: gx for x, gx in zip(sets, g)}
    for i, x in enumerate(sets):
        for y in sets[i + 1:]:
            if x & y and lookup[x] + lookup[y] > lookup[x | y] + lookup[x & y]:
                return False
    return True


def is_strongly_triple_intersecting_family(sets: Sequence[int]) -> bool:
    """Every triple with a common element has >= 2 of its 3 pairs closed."""
    members = set(sets)
    n = len(sets)
    for i in range(n):
        for j in range(i + 1, n):
            for l in range(j + 1, n):
                x, y, z = sets[i], sets[j], sets[l]
                if not (x & y & z):
                    continue
                ok = 0
                for a, b in ((x, y), (y, z), (z, x)):
                    if (a | b) in members and (a & b) in members:
                        ok += 1
                if ok < 2:
                    return False
    return True


def is_strongly_triple_intersecting_supermodular(sets: Sequence[int], g: Sequence[int]) -> bool:
    """Like the family check, but the two closed pairs must also satisfy the
    supermodular inequality."""
    members = {x: gx for x, gx in zip(sets, g)}
    n = len(sets)
    for i in range(n):
        for j in range(i + 1, n):
            for l in range(j + 1, n):
                x, y, z = sets[i], sets[j], sets[l]
                if not (x & y & z):
                    continue
                ok = 0
                for a, b in ((x, y), (y, z), (z, x)):
                    u, w = a | b, a & b
                    if u in members and w in members and \
                            members[a] + members[b] <= members[u] + members[w]:
                        ok += 1
                if ok < 2:
                    return False
    return True


def d_value(sets: Sequence[int], x: int) -> int:
    """Largest overlap of x with an inclusion-incomparable family member.

    Zero when no member is incomparable with x.  This direct scan is the
    definition itself and doubles as the oracle for any faster variant.
    """
    if x not in set(sets):
        raise ValueError(f"set {elements_of(x)} is not in the family")
    best = 0
    for y in sets:
        if (x | y) != x and (x | y) != y:  # neither contains the other
            best = max(best, (x & y).bit_count())
    return best


def over_budget_sets(sets: Sequence[int], g: Sequence[int], k: int) -> list[int]:
    """Members with g(X) + d_value(X) > k, in family order."""
    return [x for x, gx in zip(sets, g) if gx + d_value(sets, x) > k]


def laminar_check(sets: Sequence[int], g: Sequence[int], k: int):
    """Check every pair of over-budget sets; return (ok, witness pair or None).

    A pair passes when one of the two sides is nested or disjoint, or when
    both union and intersection belong to the family and the supermodular
    inequality holds.
    """
    lookup = {x: gx for x, gx in zip(sets, g)}
    members = set(sets)
    core = over_budget_sets(sets, g, k)
    for i, x in enumerate(core):
        for y in core[i + 1:]:
            nested_or_disjoint = (x & ~y) == 0 or (y & ~x) == 0 or (x & y) == 0
            if nested_or_disjoint:
                continue
            if (x | y) in members and (x & y) in members and \
                    lookup[x] + lookup[y] <= lookup[x | y] + lookup[x & y]:
                continue
            return False, (x, y)
    return True, None


def from_graph_stars(g: _GraphQueries, c: Sequence[int], k: int) -> FamilyInstance:
    """Family of edge stars of a demand instance, over ground set = edge ids.

    Each vertex v contributes the set of its incident edge ids with
    requirement c(v); twin vertices whose stars coincide are merged with the
    larger of their demands.  Isolated vertices contribute nothing (their
    star is empty and their demand is forced to zero).  The source demand
    instance must be valid.
    """
    inst = demand.DemandInstance(g, k, tuple(c))
    report = demand.validate(inst)
    if report:
        raise HypothesisViolation(report)
    merged: dict[int, int] = {}
    order: list[int] = []
    for v in g.vertices():
        if g.degree(v) == 0:
            continue
        star = mask_of(g.incident(v))
        if star in merged:
            merged[star] = max(merged[star], inst.c[v])
        else:
            merged[star] = inst.c[v]
            order.append(star)
    return FamilyInstance(
        ground=g.edge_count,
        sets=tuple(order),
        g=tuple(merged[star] for star in order),
        k=k,
    )
