import random

import pytest

from oracles import is_hamiltonian_by_permutation
from ssp2hcp.graph import DiGraph
from ssp2hcp.solver import Cycle, Status, find_hamiltonian_cycle, verify_cycle


def random_graph(rng, n_max=7):
    n = rng.randint(1, n_max)
    density = rng.random()
    arcs = [(a, b) for a in range(1, n + 1) for b in range(1, n + 1) if a != b and rng.random() < density]
    return DiGraph(n, tuple(arcs))


def test_example1_hamiltonian(art1):
    outcome = find_hamiltonian_cycle(art1.graph)
    assert outcome.status is Status.HAMILTONIAN
    assert outcome.cycle.order[0] == 1
    assert verify_cycle(art1.graph, outcome.cycle)


def test_example2_non_hamiltonian(art2):
    assert find_hamiltonian_cycle(art2.graph).status is Status.NON_HAMILTONIAN


def test_triangle():
    g = DiGraph(3, ((1, 2), (2, 3), (3, 1)))
    outcome = find_hamiltonian_cycle(g)
    assert outcome.hamiltonian
    assert outcome.cycle.order == (1, 2, 3)


def test_single_arc():
    assert find_hamiltonian_cycle(DiGraph(2, ((1, 2),))).status is Status.NON_HAMILTONIAN


def test_two_cycle():
    outcome = find_hamiltonian_cycle(DiGraph(2, ((1, 2), (2, 1))))
    assert outcome.cycle.order == (1, 2)


def test_single_vertex_and_empty():
    assert find_hamiltonian_cycle(DiGraph(1, ())).status is Status.NON_HAMILTONIAN
    with pytest.raises(ValueError):
        find_hamiltonian_cycle(DiGraph(0, ()))


def test_ascending_exploration_order():
    # complete digraph on 4 vertices: first cycle in ascending order is 1,2,3,4
    arcs = tuple((a, b) for a in range(1, 5) for b in range(1, 5) if a != b)
    assert find_hamiltonian_cycle(DiGraph(4, arcs)).cycle.order == (1, 2, 3, 4)
    assert find_hamiltonian_cycle(DiGraph(4, arcs), prune=False).cycle.order == (1, 2, 3, 4)


def test_verify_cycle_found(art1):
    cyc = find_hamiltonian_cycle(art1.graph).cycle
    assert verify_cycle(art1.graph, cyc)
    assert verify_cycle(art1.graph, Cycle(cyc.order[5:] + cyc.order[:5]))


def test_verify_cycle_reversed(art1):
    cyc = find_hamiltonian_cycle(art1.graph).cycle
    reverse = Cycle(cyc.order[::-1])
    reverse_ok = all(art1.graph.has_arc(b, a) for a, b in cyc.arcs())
    assert not reverse_ok
    assert not verify_cycle(art1.graph, reverse)


def test_verify_cycle_malformed(art1):
    cyc = find_hamiltonian_cycle(art1.graph).cycle
    repeated = Cycle(cyc.order[:-1] + (cyc.order[0],))
    assert not verify_cycle(art1.graph, repeated)
    assert not verify_cycle(art1.graph, Cycle(cyc.order[:-1]))
    assert not verify_cycle(art1.graph, Cycle(()))
    assert not verify_cycle(art1.graph, Cycle(tuple(range(1, 59))))


def test_cycle_canonical():
    assert Cycle((3, 1, 2)).canonical().order == (1, 2, 3)


def test_budget_exhaustion(art2):
    outcome = find_hamiltonian_cycle(art2.graph, budget=0)
    assert outcome.status is Status.INDETERMINATE


def test_completeness_against_permutations():
    rng = random.Random(2024)
    for _ in range(300):
        g = random_graph(rng)
        outcome = find_hamiltonian_cycle(g)
        assert outcome.hamiltonian == is_hamiltonian_by_permutation(g.n, g.arcs), g
        if outcome.hamiltonian:
            assert verify_cycle(g, outcome.cycle)


def test_pruning_does_not_change_decisions():
    rng = random.Random(99)
    for _ in range(100):
        g = random_graph(rng, n_max=9)
        pruned = find_hamiltonian_cycle(g)
        plain = find_hamiltonian_cycle(g, prune=False)
        assert pruned.status == plain.status, g


def test_deterministic(art1):
    a = find_hamiltonian_cycle(art1.graph)
    b = find_hamiltonian_cycle(art1.graph)
    assert a.cycle == b.cycle and a.status == b.status
    assert a.stats == b.stats
