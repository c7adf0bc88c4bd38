"""Exit criteria. Each test records one PASS/FAIL line, printed in the terminal summary."""

import functools
import random
import time

import pytest

from checks import degree_profile_problems
from conftest import random_instances, random_reduced
from oracles import is_hamiltonian_by_permutation
from ssp2hcp import (
    DecidedNo,
    DecidedYes,
    DiGraph,
    Partition,
    Reduced,
    SimpleForm,
    SspInstance,
    Status,
    TraceFailure,
    brute_force_ssp,
    build_graph,
    check_partition,
    cycle_from_partition,
    expected_counts,
    extract_partition,
    find_hamiltonian_cycle,
    occurrence_tables,
    simplify,
    verify_cycle,
)

BUDGET = 50_000_000
RESULTS: list[str] = []


def criterion(number, title):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            start = time.perf_counter()
            try:
                fn(*args, **kwargs)
            except BaseException:
                RESULTS.append(f"FAIL  criterion {number}: {title}")
                raise
            RESULTS.append(f"PASS  criterion {number}: {title} ({time.perf_counter() - start:.2f}s)")
        return run
    return wrap


def _equivalence_corpus():
    # half with mixed subset sizes, half with pairs only (more NO instances)
    return random_reduced(100, seed=505, max_size=4) + random_reduced(100, seed=606, max_size=2)


@functools.cache
def equivalence_runs():
    runs = []
    start = time.perf_counter()
    for inst, simple in _equivalence_corpus():
        art = build_graph(simple)
        outcome = find_hamiltonian_cycle(art.graph, BUDGET)
        runs.append((inst, simple, art, outcome, brute_force_ssp(inst)))
    return runs, time.perf_counter() - start


@criterion(1, "Example 1 end-to-end (58/122, Hamiltonian < 5 s, witness splits)")
def test_criterion_1_example1():
    inst = SspInstance(4, ((1, 2, 3), (2, 4)))
    result = simplify(inst)
    assert isinstance(result, Reduced)
    art = build_graph(result.simple)
    assert (art.graph.n, art.graph.m) == (58, 122) == expected_counts(4, 2, 5)
    start = time.perf_counter()
    outcome = find_hamiltonian_cycle(art.graph, BUDGET)
    assert time.perf_counter() - start < 5.0
    assert outcome.status is Status.HAMILTONIAN
    assert verify_cycle(art.graph, outcome.cycle)
    p = result.simple.lift(extract_partition(art, outcome.cycle))
    assert check_partition(inst, p).unsplit == ()
    assert check_partition(inst, p).is_solution
    assert check_partition(inst, Partition.from_one(4, {1, 4})).is_solution


@criterion(2, "Example 2 end-to-end (65/134, non-Hamiltonian < 60 s, brute force NO)")
def test_criterion_2_example2():
    inst = SspInstance(3, ((1, 2), (1, 3), (2, 3)))
    art = build_graph(simplify(inst).simple)
    assert (art.graph.n, art.graph.m) == (65, 134) == expected_counts(3, 3, 6)
    start = time.perf_counter()
    outcome = find_hamiltonian_cycle(art.graph, BUDGET)
    assert time.perf_counter() - start < 60.0
    assert outcome.status is Status.NON_HAMILTONIAN
    assert brute_force_ssp(inst) is None


@criterion(3, "occurrence tables of the worked example")
def test_criterion_3_occurrence_tables():
    inst = SspInstance(6, ((1, 3, 6), (2, 3, 4), (2, 4, 6), (1, 2, 5)))
    occ = occurrence_tables(SimpleForm.from_instance(inst))
    assert (occ.F[0], occ.R[0]) == ((1, 4), (1, 1))
    assert (occ.F[1], occ.R[1]) == ((2, 3, 4), (1, 1, 2))


@criterion(4, "cardinality and degree profile on 500 random simple forms (< 30 s)")
def test_criterion_4_cardinality():
    start = time.perf_counter()
    corpus = random_reduced(500, seed=404, u_range=(2, 6), s_range=(1, 5), max_size=4)
    for _, simple in corpus:
        inst = simple.instance
        assert 2 <= inst.u <= 6 and 1 <= inst.s <= 5
        assert all(2 <= len(x) <= 4 for x in inst.subsets)
        art = build_graph(simple)
        assert (art.graph.n, art.graph.m) == (
            4 * inst.u + 5 * inst.s + 6 * inst.c + 2,
            7 * inst.u + inst.s + 18 * inst.c + 2,
        )
        assert degree_profile_problems(art) == []
    assert time.perf_counter() - start < 30.0


@criterion(5, "SSP solvable iff converted graph Hamiltonian on 200 random instances (< 10 min)")
def test_criterion_5_equivalence():
    runs, elapsed = equivalence_runs()
    assert len(runs) == 200
    disagreements = []
    for inst, simple, art, outcome, direct in runs:
        assert inst.u <= 5 and inst.s <= 4
        assert outcome.status is not Status.INDETERMINATE
        if outcome.hamiltonian != (direct is not None):
            disagreements.append(inst)
    assert disagreements == []
    assert elapsed < 600.0


@criterion(6, "witness properties on every YES instance of criterion 5")
def test_criterion_6_witnesses():
    runs, _ = equivalence_runs()
    failures = []
    for inst, simple, art, outcome, direct in runs:
        if direct is None:
            continue
        q = simple.restrict(direct)
        traced = cycle_from_partition(art, q)
        if not verify_cycle(art.graph, traced):
            failures.append(("trace", inst))
        found = extract_partition(art, outcome.cycle)
        if not check_partition(simple.instance, found).is_solution:
            failures.append(("extract", inst))
        if extract_partition(art, traced) != q:
            failures.append(("round trip", inst))
    assert failures == []


@criterion(7, "partition {1,3}|{2,4} of Example 1 fails on subset 2")
def test_criterion_7_negative_trace():
    art = build_graph(simplify(SspInstance(4, ((1, 2, 3), (2, 4)))).simple)
    with pytest.raises(TraceFailure) as info:
        cycle_from_partition(art, Partition.from_one(4, {1, 3}))
    assert info.value.subset_index == 2


@criterion(8, "solver matches permutation oracle on 200 random digraphs with n <= 7")
def test_criterion_8_solver_completeness():
    rng = random.Random(808)
    disagreements = []
    for _ in range(200):
        n = rng.randint(1, 7)
        density = rng.random()
        arcs = tuple((a, b) for a in range(1, n + 1) for b in range(1, n + 1) if a != b and rng.random() < density)
        outcome = find_hamiltonian_cycle(DiGraph(n, arcs), BUDGET)
        if outcome.hamiltonian != is_hamiltonian_by_permutation(n, arcs):
            disagreements.append((n, arcs))
    assert disagreements == []


@criterion(9, "simplification rules and fixpoint idempotence on 100 random instances")
def test_criterion_9_simplification():
    # rule 1
    assert isinstance(simplify(SspInstance(3, ((2,),))), DecidedNo)
    # rule 2
    r = simplify(SspInstance(5, ((1, 2), (2, 4), (4, 5), (1, 5))))
    assert isinstance(r, Reduced) and r.simple.element_map == {1: 1, 2: 2, 4: 3, 5: 4}
    # rule 3
    r = simplify(SspInstance(4, ((1, 2, 3, 4), (1, 2), (2, 3), (1, 3), (3, 4))))
    assert isinstance(r, Reduced) and r.simple.dropped_subsets == (1,)
    # rule 4
    r = simplify(SspInstance(4, ((1, 2), (1, 2, 4), (2, 3), (1, 3), (3, 4))))
    assert isinstance(r, Reduced) and r.simple.dropped_subsets == (2,)
    # trivial YES with a witness
    r = simplify(SspInstance(4, ((1, 2), (3, 4))))
    assert isinstance(r, DecidedYes) and r.witness == Partition.from_one(4, {1, 3})

    checked = 0
    for inst in random_instances(10_000, seed=909, u_range=(2, 7), s_range=(1, 6)):
        result = simplify(inst)
        if not isinstance(result, Reduced):
            continue
        again = simplify(result.simple.instance)
        assert isinstance(again, Reduced)
        assert again.simple.instance == result.simple.instance
        assert again.simple.dropped_subsets == ()
        checked += 1
        if checked == 100:
            break
    assert checked == 100
