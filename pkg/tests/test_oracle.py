import pytest

from supercolor import BudgetExceeded, DemandInstance, FamilyInstance, Multigraph
from supercolor.demand import verify
from supercolor.oracle import (brute_force_edge, brute_force_family, chromatic_index,
                               gen_demand, gen_family, gen_multigraph)
from supercolor import demand, supermodular

from conftest import random_multigraph


def test_brute_force_edge_triangle(triangle):
    inst = DemandInstance(triangle, 3, (2, 2, 2))
    feasible, witness = brute_force_edge(inst)
    assert feasible
    assert not verify(inst, witness)


def test_brute_force_edge_single_edge_one_color():
    inst = DemandInstance(Multigraph(2, [(0, 1)]), 1, (1, 1))
    feasible, witness = brute_force_edge(inst)
    assert feasible
    assert witness == {0: 1}


def test_brute_force_edge_shannon_five_colors_infeasible(shannon):
    # full demands = proper coloring; five colors cannot properly color six
    # pairwise adjacent edges
    inst = DemandInstance(shannon, 5, tuple(shannon.degree(v) for v in range(3)))
    feasible, witness = brute_force_edge(inst)
    assert not feasible
    assert witness is None


def test_brute_force_edge_budget():
    g = gen_multigraph(6, 15, 3, seed=1)
    inst = DemandInstance(g, 4, tuple(0 for _ in range(6)))
    with pytest.raises(BudgetExceeded):
        brute_force_edge(inst, budget=1000)


def test_brute_force_family_empty():
    inst = FamilyInstance(2, (), (), 2)
    feasible, witness = brute_force_family(inst)
    assert feasible
    assert witness == {0: 1, 1: 1}


def test_brute_force_family_interval():
    inst = FamilyInstance(3, (0b011, 0b110, 0b111), (2, 2, 3), 3)
    feasible, witness = brute_force_family(inst)
    assert feasible
    assert sorted(witness.values()) == [1, 2, 3]


def test_brute_force_family_infeasible_small_k():
    # requirement 3 on a 3-set with k=2 colors cannot be met
    inst = FamilyInstance(3, (0b111,), (3,), 2)
    feasible, witness = brute_force_family(inst)
    assert not feasible
    assert witness is None


def test_chromatic_index_basics(triangle, shannon):
    assert chromatic_index(Multigraph(2, [])) == 0
    assert chromatic_index(Multigraph(2, [(0, 1)])) == 1
    assert chromatic_index(triangle) == 3
    assert chromatic_index(shannon) == 6


def test_chromatic_index_envelope():
    computed = 0
    for seed in range(40):
        g = random_multigraph(seed, n_max=5, m_max=8)
        if g.edge_count == 0:
            continue
        try:
            chi = chromatic_index(g)
        except BudgetExceeded:
            continue
        assert g.max_degree() <= chi <= g.max_degree() + g.multiplicity()
        computed += 1
    assert computed >= 20


def test_gen_multigraph_deterministic_and_bounded():
    a = gen_multigraph(6, 12, 2, seed=99)
    b = gen_multigraph(6, 12, 2, seed=99)
    assert a.edges == b.edges
    assert a.edge_count == 12
    assert a.multiplicity() <= 2


def test_gen_demand_always_valid():
    for seed in range(60):
        g = random_multigraph(seed, n_max=6, m_max=12)
        k = 1 + seed % max(1, g.max_degree() + g.multiplicity())
        try:
            inst = gen_demand(g, k, seed)
        except Exception:
            continue
        assert not demand.validate(inst)
        assert all(0 <= inst.c[v] <= min(g.degree(v), k) for v in g.vertices())


def test_gen_demand_large_palette_never_overloads():
    for seed in range(20):
        g = random_multigraph(seed, n_max=6, m_max=10)
        k = max(1, g.max_degree() + g.multiplicity())
        inst = gen_demand(g, k, seed)
        assert not demand.overloaded_vertices(inst)


def test_gen_family_shapes_validate():
    for shape in ("stars", "intervals", "laminar", "random-filtered"):
        for seed in range(12):
            inst = gen_family(5 + seed % 4, 1 + seed % 4, shape, seed)
            assert not supermodular.validate(inst), (shape, seed)


def test_gen_family_deterministic():
    a = gen_family(6, 3, "laminar", seed=5)
    b = gen_family(6, 3, "laminar", seed=5)
    assert a == b
