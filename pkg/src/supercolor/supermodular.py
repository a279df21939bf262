"""Set-family coloring by sequential recoloring over tight sets.

Given a family instance (ground set U, family F of sets with requirements g,
palette [1..k]) satisfying

* F is strongly triple-intersecting and g is strongly triple-intersecting
  supermodular,
* the over-budget family L = {X : g(X) + d_value(X) > k} passes the
  laminar-style capacity check, and
* min(|X|, k) >= g(X) for every X,

the solver colors every ground element so each X in F sees at least g(X)
distinct colors.  It extends a partial assignment one element at a time
while preserving, for every X in F, the satisfaction inequality

    f(X) = |X \\ T| + |colors on X & T| >= g(X)

(T is the assigned domain).  A set is *tight* when equality holds.  The
augmentation for a new element u0 inspects the maximal tight sets through
u0 (never more than two, an enforced consequence of the closure
hypotheses):

* none: any color works;
* one: any color missing from it works;
* two (an anchor Z and a mover Y0): a displacement sequence is grown --
  each step vacates an already-colored element of Z whose color can slide
  into the previous mover -- and when the sequence is exhausted the solver
  either places a color missing from both sides, re-seats the whole
  procedure at a freshly vacated element (at most once, enforced), or swaps
  a maximal two-color chain of elements outside Z and closes it with one of
  a small family of terminal recolorings.

Every structural fact the recolorings rely on (at most two maximal tight
sets, uniqueness of the unsatisfied witness along the chain, membership of
the chain exit in the displacement sequence, and so on) is enforced with
``ensure`` checks; a failure aborts with diagnostics and indicates a bug,
never a property of validated input.  A step budget turns any unexpected
non-termination into a diagnostic error as well.
"""

from __future__ import annotations

from typing import Callable, Mapping, Sequence

from . import families
from .errors import HypothesisViolation, ensure
from .families import FamilyInstance, elements_of, set_key

Trace = Callable[[dict], None] | None

DEFAULT_STEP_BUDGET = 1_000_000


# ---------------------------------------------------------------------------
# Assignment queries


class PartialAssignment:
    """Partial map element -> color with satisfaction and tightness queries."""

    def __init__(self, inst: FamilyInstance, pi: Mapping[int, int] | None = None):
        self.inst = inst
        self.pi: dict[int, int] = dict(pi or {})
        for t, col in self.pi.items():
            if not 0 <= t < inst.ground:
                raise ValueError(f"element {t} outside the ground set")
            if not 1 <= col <= inst.k:
                raise ValueError(f"color {col} outside [1..{inst.k}]")

    @property
    def domain(self) -> set:
        return set(self.pi)

    def f_value(self, x: int) -> int:
        return f_value(x, self.pi)

    def is_satisfying(self, x: int) -> bool:
        return self.f_value(x) >= self.inst.g_of(x)

    def is_tight(self, x: int) -> bool:
        return self.f_value(x) == self.inst.g_of(x)

    def unsatisfied(self) -> list[int]:
        return unsatisfied_sets(self.inst, self.pi)


def f_value(x: int, pi: Mapping[int, int]) -> int:
    """Unassigned elements of x plus distinct colors on its assigned part."""
    free = 0
    cols = set()
    for t in elements_of(x):
        if t in pi:
            cols.add(pi[t])
        else:
            free += 1
    return free + len(cols)


def colors_on(x: int, pi: Mapping[int, int]) -> set:
    return {pi[t] for t in elements_of(x) if t in pi}


def unsatisfied_sets(inst: FamilyInstance, pi: Mapping[int, int]) -> list[int]:
    return [x for x, gx in zip(inst.sets, inst.g) if f_value(x, pi) < gx]


def maximal_members(masks: Sequence[int]) -> list[int]:
    """Inclusion-maximal members, sorted canonically."""
    out = [x for x in masks
           if not any(y != x and (x | y) == y for y in masks)]
    return sorted(out, key=set_key)


def tight_sets_containing(inst: FamilyInstance, pi: Mapping[int, int], u: int) -> list[int]:
    return [x for x, gx in zip(inst.sets, inst.g)
            if (x >> u) & 1 and f_value(x, pi) == gx]


def maximal_tight_containing(inst: FamilyInstance, pi: Mapping[int, int], u: int) -> list[int]:
    """Inclusion-maximal tight sets through u (canonically sorted)."""
    return maximal_members(tight_sets_containing(inst, pi, u))


# ---------------------------------------------------------------------------
# Hypothesis validation


def validate(inst: FamilyInstance) -> list[str]:
    """Check the solver preconditions; empty report means ok."""
    report = []
    bad = inst.bound_violations()
    for i in bad:
        report.append(
            f"set {elements_of(inst.sets[i])}: requirement {inst.g[i]} exceeds "
            f"min(|X|, k) = {min(inst.sets[i].bit_count(), inst.k)}")
    if not families.is_strongly_triple_intersecting_family(inst.sets):
        report.append("family is not strongly triple-intersecting")
    elif not families.is_strongly_triple_intersecting_supermodular(inst.sets, inst.g):
        report.append("requirements are not strongly triple-intersecting supermodular")
    ok, witness = families.laminar_check(inst.sets, inst.g, inst.k)
    if not ok:
        x, y = witness
        report.append(
            f"over-budget sets {elements_of(x)} and {elements_of(y)} fail the capacity check")
    return report


# ---------------------------------------------------------------------------
# The augmentation engine


class _Augmenter:
    """State for coloring one element; throwaway per augmentation."""

    def __init__(self, inst: FamilyInstance, pi: dict[int, int], u0: int,
                 trace: Trace, stats: dict | None, step_budget: int):
        self.inst = inst
        self.pi0 = pi          # current committed assignment (not mutated here)
        self.u0 = u0
        self.trace = trace
        self.stats = stats
        self.steps = 0
        self.step_budget = step_budget
        self.over_budget = set(families.over_budget_sets(inst.sets, inst.g, inst.k))
        # displacement sequence state, reset per pass
        self.us: list[int] = []
        self.alphas: list[int | None] = []
        self.ys: list[int] = []
        self.z = 0

    # -- bookkeeping ------------------------------------------------------

    def bump(self, key: str):
        if self.stats is not None:
            self.stats[key] = self.stats.get(key, 0) + 1

    def emit(self, event: dict):
        if self.trace:
            self.trace(event)

    def tick(self):
        self.steps += 1
        ensure(self.steps <= self.step_budget,
               "augmentation step budget exhausted", element=self.u0)

    def assert_all_satisfied(self, pi: Mapping[int, int], where: str):
        bad = unsatisfied_sets(self.inst, pi)
        ensure(not bad, f"some set is unsatisfied after {where}",
               sets=[elements_of(x) for x in bad])

    # -- derived assignments ----------------------------------------------

    def seq_assignment(self, i: int) -> dict[int, int]:
        """Assignment after sliding colors along the first i sequence steps.

        Domain is (T0 + u0) - u_i: elements u_0..u_{i-1} carry the colors
        vacated by their successors; u_i is vacated.
        """
        pi = dict(self.pi0)
        for j in range(i):
            pi[self.us[j]] = self.alphas[j + 1]
        if i > 0:
            del pi[self.us[i]]
        return pi

    @staticmethod
    def chain_swapped(pi: dict[int, int], chain: Sequence[int], alpha: int, beta: int) -> dict[int, int]:
        """Even chain positions get alpha, odd get beta (they held the
        opposite colors)."""
        out = dict(pi)
        for idx, t in enumerate(chain):
            out[t] = alpha if idx % 2 == 0 else beta
        return out

    # -- commit -----------------------------------------------------------

    def commit(self, pi: dict[int, int], where: str) -> dict[int, int]:
        ensure(len(pi) == len(self.pi0) + 1, "augmentation must grow the domain by one",
               where=where)
        self.assert_all_satisfied(pi, where)
        self._assert_submodular_sample(pi)
        self.emit({"event": "commit", "via": where, "element": self.u0})
        self.bump(f"finish_{where}")
        return pi

    def _assert_submodular_sample(self, pi: Mapping[int, int]):
        """Spot-check that f is submodular on closed pairs of the family."""
        sets = self.inst.sets
        members = set(sets)
        checked = 0
        for i, x in enumerate(sets):
            if checked >= 50:
                break
            for y in sets[i + 1:]:
                if checked >= 50:
                    break
                if (x | y) in members and (x & y) in members:
                    checked += 1
                    ensure(f_value(x, pi) + f_value(y, pi)
                           >= f_value(x | y, pi) + f_value(x & y, pi),
                           "f lost submodularity on a closed pair",
                           pair=(elements_of(x), elements_of(y)))

    # -- main flow ----------------------------------------------------------

    def run(self) -> dict[int, int]:
        """Color u0; returns the grown assignment."""
        reseats = 0
        while True:
            result = self._pass()
            if result is not None:
                return result
            reseats += 1
            ensure(reseats <= 1, "augmentation re-seated twice", element=self.u0)
            self.bump("reseat")

    def _pass(self) -> dict[int, int] | None:
        """One full pass; None means the pass re-seated at a new element."""
        inst, pi0, u0 = self.inst, self.pi0, self.u0
        tight0 = maximal_tight_containing(inst, pi0, u0)
        ensure(len(tight0) <= 2, "more than two maximal tight sets through an element",
               element=u0, sets=[elements_of(x) for x in tight0])

        if not tight0:
            pi = dict(pi0)
            pi[u0] = 1
            return self.commit(pi, "free")

        if len(tight0) == 1:
            m = tight0[0]
            col = self._lowest_color_missing(colors_on(m, pi0))
            ensure(col is not None, "no color missing from the unique maximal tight set",
                   set=elements_of(m))
            pi = dict(pi0)
            pi[u0] = col
            return self.commit(pi, "unique_tight")

        a, b = tight0
        in_l = ((a in self.over_budget), (b in self.over_budget))
        ensure(not all(in_l), "both maximal tight sets are over budget",
               sets=(elements_of(a), elements_of(b)))
        if in_l[0]:
            z, y0 = a, b
        elif in_l[1]:
            z, y0 = b, a
        else:
            z, y0 = (a, b) if set_key(a) > set_key(b) else (b, a)
        self.z = z
        self.us = [u0]
        self.alphas = [None]
        self.ys = [y0]
        self.emit({"event": "anchor", "z": elements_of(z), "y0": elements_of(y0)})

        self._grow_sequence()
        return self._endgame()

    def _lowest_color_missing(self, used, forbidden=()) -> int | None:
        for col in range(1, self.inst.k + 1):
            if col not in used and col not in forbidden:
                return col
        return None

    # -- displacement sequence ---------------------------------------------

    def _grow_sequence(self):
        """Extend the displacement sequence while a valid step exists.

        A step vacates an element u of the anchor Z (already colored, unused
        so far) whose color is missing from the current mover, is new among
        colors fanned into that mover, and whose vacated tight structure
        offers a mover outside the over-budget family.
        """
        inst, pi0 = self.inst, self.pi0
        z = self.z
        while True:
            self.tick()
            cur_y = self.ys[-1]
            m = len(self.us) - 1
            mover_cols = colors_on(cur_y, pi0)
            fanned = {self.alphas[i + 1] for i in range(m) if (cur_y >> self.us[i]) & 1}
            extended = False
            for u in elements_of(z):
                if u not in pi0 or u in self.us:
                    continue
                alpha = pi0[u]
                if alpha in mover_cols or alpha in fanned:
                    continue
                nxt = self._inspect_candidate(u, alpha)
                if nxt is None:
                    continue
                self.us.append(u)
                self.alphas.append(alpha)
                self.ys.append(nxt)
                self.emit({"event": "sequence_extend", "element": u, "color": alpha,
                           "mover": elements_of(nxt)})
                self.bump("sequence_extend")
                extended = True
                break
            if not extended:
                self._assert_sequence_shape()
                return

    def _inspect_candidate(self, u: int, alpha: int) -> int | None:
        """Mover for vacating u, or None when u does not extend the sequence.

        Vacating u must leave the anchor maximal among tight sets through u
        and produce at most one other maximal tight set; only a mover outside
        the over-budget family extends the sequence.
        """
        trial = self.seq_assignment_with(u)
        self.assert_all_satisfied(trial, "sequence slide")
        maxs = maximal_tight_containing(self.inst, trial, u)
        ensure(self.z in maxs, "anchor lost maximality after a slide", element=u)
        ensure(len(maxs) <= 2, "more than two maximal tight sets after a slide", element=u)
        others = [x for x in maxs if x != self.z]
        if not others or others[0] in self.over_budget:
            return None
        return others[0]

    def seq_assignment_with(self, u: int) -> dict[int, int]:
        """Assignment sliding all committed steps, the last taking u's color,
        and vacating u."""
        pi = dict(self.pi0)
        last = len(self.us) - 1
        for j, uj in enumerate(self.us):
            pi[uj] = self.alphas[j + 1] if j < last else self.pi0[u]
        del pi[u]
        return pi

    def _assert_sequence_shape(self):
        """Movers repeat only via shared elements, per the closure argument."""
        for i in range(len(self.us)):
            for j in range(len(self.us)):
                if i != j and (self.ys[j] >> self.us[i]) & 1:
                    ensure(self.ys[i] == self.ys[j],
                           "sequence movers through a shared element differ",
                           indices=(i, j))

    # -- endgame ------------------------------------------------------------

    def _endgame(self) -> dict[int, int] | None:
        inst, pi0 = self.inst, self.pi0
        k = inst.k
        z = self.z
        l = len(self.us) - 1
        y_last = self.ys[-1]
        u_last = self.us[-1]

        shared = [u for u in self.us if (y_last >> u) & 1]
        ensure(len(colors_on(y_last, pi0)) + len(shared) <= k,
               "no room to pick the next displaced color", mover=elements_of(y_last))
        fanned = {self.alphas[i + 1] for i in range(l) if (y_last >> self.us[i]) & 1}
        alpha_next = self._lowest_color_missing(colors_on(y_last, pi0), fanned)
        ensure(alpha_next is not None, "next displaced color must exist")

        pi_l = self.seq_assignment(l)
        z_cols = colors_on(z, pi0)

        if alpha_next not in z_cols:
            pi = pi_l
            pi[u_last] = alpha_next
            return self.commit(pi, "color_free_at_anchor")

        carriers = [u for u in elements_of(z)
                    if u in pi0 and u not in self.us and pi0[u] == alpha_next]
        if carriers:
            return self._reseat(min(carriers), alpha_next)

        beta = self._lowest_color_missing(z_cols)
        ensure(beta is not None, "anchor shows every color", anchor=elements_of(z))

        if beta not in colors_on(y_last, pi_l):
            pi = pi_l
            pi[u_last] = beta
            return self.commit(pi, "beta_free_at_mover")

        return self._chain_phase(pi_l, alpha_next, beta)

    def _reseat(self, u_next: int, alpha_next: int) -> dict[int, int] | None:
        """Slide every step, vacate the carrier of the displaced color, and
        either finish (anchor uniquely maximal) or restart there."""
        inst = self.inst
        l = len(self.us) - 1
        pi = dict(self.pi0)
        for j in range(l + 1):
            pi[self.us[j]] = self.alphas[j + 1] if j < l else alpha_next
        del pi[u_next]
        self.assert_all_satisfied(pi, "carrier slide")
        maxs = maximal_tight_containing(inst, pi, u_next)
        ensure(self.z in maxs, "anchor lost maximality at the carrier", element=u_next)
        ensure(len(maxs) <= 2, "more than two maximal tight sets at the carrier")
        others = [x for x in maxs if x != self.z]
        if not others:
            col = self._lowest_color_missing(colors_on(self.z, self.pi0))
            ensure(col is not None, "no free color at the anchor")
            pi[u_next] = col
            return self.commit(pi, "carrier_free")
        y_new = others[0]
        ensure(y_new in self.over_budget,
               "carrier mover should have been over budget (sequence was maximal)",
               mover=elements_of(y_new))
        ensure(self.z not in self.over_budget,
               "anchor unexpectedly over budget at re-seat")
        # Commit the slide and restart the whole augmentation at the carrier.
        self.pi0 = pi
        self.u0 = u_next
        self.emit({"event": "reseat", "element": u_next})
        return None

    # -- two-color chain -----------------------------------------------------

    def _chain_phase(self, pi_l: dict[int, int], alpha_next: int, beta: int) -> dict[int, int]:
        inst = self.inst
        z = self.z
        u_last = self.us[-1]
        y_last = self.ys[-1]

        start_candidates = [t for t in elements_of(y_last)
                            if t in pi_l and pi_l[t] == beta]
        ensure(start_candidates, "chain start carrying beta must exist")
        x0 = min(start_candidates)
        ensure(not (z >> x0) & 1, "chain start lies inside the anchor", element=x0)

        chain, witnesses, terminal = bicolor_chain(
            inst, pi_l, x0, (alpha_next, beta), excluded=z,
            on_step=lambda t: (self.tick(), self.bump("chain_extend"),
                               self.emit({"event": "chain_extend", "element": t})))

        if terminal is None:
            pi = self.chain_swapped(pi_l, chain, alpha_next, beta)
            pi[u_last] = beta
            return self.commit(pi, "chain_clean")

        # The chain stopped while one set stayed unsatisfied: its repair
        # element lives in the anchor and must be one of the vacated ones.
        x_exit, q = self._chain_exit(pi_l, chain, terminal, alpha_next, beta)
        full = chain + [x_exit]
        pi_swapped = self.chain_swapped(pi_l, full, alpha_next, beta)
        self.assert_all_satisfied(pi_swapped, "chain swap with exit")

        for i in range(len(self.us) - 2, q, -1):
            partial = self.chain_swapped(self.seq_assignment(i), full, alpha_next, beta)
            self.assert_all_satisfied(partial, f"chain unwind at step {i}")

        pi = self.chain_swapped(self.seq_assignment(q + 1), full, alpha_next, beta)
        pi[self.us[q + 1]] = alpha_next
        ensure(self.alphas[q + 1] == alpha_next,
               "exit color disagrees with the vacated color", q=q)
        return self.commit(pi, "chain_exit")

    def _chain_exit(self, pi_l, chain, terminal, alpha_next, beta):
        """Locate the chain's exit into the anchor; returns (element, q)."""
        p = len(chain) - 1
        want = beta if pi_l[chain[p]] == alpha_next else alpha_next
        raw = [t for t in elements_of(terminal)
               if t in pi_l and pi_l[t] == want and t != chain[p]]
        ensure(raw, "unsatisfied witness offers no exit element")
        ensure(all(t not in chain for t in raw),
               "exit element collides with the chain", witness=elements_of(terminal))
        in_anchor = [t for t in raw if (self.z >> t) & 1]
        ensure(len(in_anchor) == len(raw),
               "chain could still extend outside the anchor (not maximal)")
        x_exit = min(in_anchor)
        ensure(pi_l[x_exit] == alpha_next, "exit element carries the wrong color")
        ensure(p % 2 == 0, "chain exits on an odd prefix")
        ensure(x_exit in self.us[:-1], "exit element is not one of the vacated ones",
               element=x_exit)
        q = self.us.index(x_exit)
        return x_exit, q


def bicolor_chain(inst: FamilyInstance, pi: Mapping[int, int], x0: int,
                  color_pair: tuple[int, int], excluded: int = 0, on_step=None):
    """Maximal two-color swap chain from x0 avoiding the excluded set.

    ``color_pair`` is (alpha, beta) with pi[x0] == beta.  Even chain
    positions carry beta and swap to alpha; odd positions the reverse.  The
    chain extends while swapping the prefix leaves exactly one set
    unsatisfied and that set offers a next element outside ``excluded``.

    Returns (chain, witnesses, terminal): ``witnesses[i]`` is the unique set
    unsatisfied after swapping the prefix ending at position i; ``terminal``
    is the unsatisfied set at the maximal prefix, or None when swapping the
    whole chain satisfies everything.
    """
    alpha, beta = color_pair
    if pi.get(x0) != beta:
        raise ValueError(f"chain start must carry color {beta}")
    if (excluded >> x0) & 1:
        raise ValueError("chain start lies inside the excluded set")
    chain = [x0]
    witnesses: list[int] = []
    while True:
        swapped = _Augmenter.chain_swapped(dict(pi), chain, alpha, beta)
        unsat = unsatisfied_sets(inst, swapped)
        ensure(len(unsat) <= 1, "more than one set unsatisfied along the chain",
               sets=[elements_of(x) for x in unsat])
        if not unsat:
            return chain, witnesses, None
        x_p = unsat[0]
        p = len(chain) - 1
        ensure((x_p >> chain[p]) & 1, "unsatisfied witness misses the chain head",
               witness=elements_of(x_p))
        want = beta if pi[chain[p]] == alpha else alpha
        raw = [t for t in elements_of(x_p)
               if t in pi and pi[t] == want and t != chain[p]]
        ensure(all(t not in chain for t in raw),
               "chain candidate revisits an earlier element")
        outside = [t for t in raw if not (excluded >> t) & 1]
        if not outside:
            witnesses.append(x_p)
            return chain, witnesses, x_p
        nxt = min(outside)
        witnesses.append(x_p)
        chain.append(nxt)
        if on_step:
            on_step(nxt)


# ---------------------------------------------------------------------------
# Public entry points


def augment(inst: FamilyInstance, pi: Mapping[int, int], u0: int, *, trace: Trace = None,
            stats: dict | None = None, step_budget: int = DEFAULT_STEP_BUDGET) -> dict[int, int]:
    """Extend the assignment to u0, preserving satisfaction of every set."""
    if u0 in pi:
        raise ValueError(f"element {u0} is already assigned")
    if not 0 <= u0 < inst.ground:
        raise ValueError(f"element {u0} outside the ground set")
    eng = _Augmenter(inst, dict(pi), u0, trace, stats, step_budget)
    return eng.run()


def solve(inst: FamilyInstance, *, trace: Trace = None, stats: dict | None = None,
          step_budget: int = DEFAULT_STEP_BUDGET) -> dict[int, int]:
    """Color the whole ground set so every X in F sees >= g(X) colors.

    Validates the hypotheses first and raises HypothesisViolation naming the
    failure; the solver never runs on unvalidated instances.
    """
    report = validate(inst)
    if report:
        raise HypothesisViolation(report)
    pi: dict[int, int] = {}
    for u in range(inst.ground):
        pi = augment(inst, pi, u, trace=trace, stats=stats, step_budget=step_budget)
        if stats is not None:
            stats["augmentations"] = stats.get("augmentations", 0) + 1
    bad = verify(inst, pi)
    ensure(not bad, "solver output failed verification",
           sets=[elements_of(x) for x in bad])
    return pi


def verify(inst: FamilyInstance, assignment: Mapping[int, int]) -> list[int]:
    """Sets whose requirement is unmet by a total assignment (empty = ok)."""
    for u in range(inst.ground):
        if u not in assignment:
            raise ValueError(f"assignment is not total: element {u} missing")
        col = assignment[u]
        if not isinstance(col, int) or not 1 <= col <= inst.k:
            raise ValueError(f"element {u} has color {col!r} outside [1..{inst.k}]")
    return [x for x, gx in zip(inst.sets, inst.g)
            if len({assignment[t] for t in elements_of(x)}) < gx]
