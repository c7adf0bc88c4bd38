"""Map set splittings to Hamiltonian cycles of the constructed graph and back."""

from __future__ import annotations

from .reduction import C, ReductionArtifact, S, U
from .solver import Cycle, verify_cycle
from .ssp import Partition, Side


class TraceFailure(Exception):
    """The partition cannot be traced into a Hamiltonian cycle.

    ``subset_index`` is the 1-based subset (of the simple form) whose block
    could not be completed.
    """

    def __init__(self, subset_index: int, detail: str):
        super().__init__(f"subset {subset_index}: {detail}")
        self.subset_index = subset_index
        self.detail = detail


def cycle_from_partition(art: ReductionArtifact, p: Partition) -> Cycle:
    """Walk the cycle that encodes ``p`` (given on the simple-form universe).

    Each element block is passed 1->3->2 for side ONE and 1->2->3 for side TWO,
    and the path leaving it consumes the opposite side's triples in every
    subset holding the element. In the second stage each subset block takes
    the remaining triples in order and detours through its middle triple at
    the first pair of neighbouring elements on opposite sides.
    """
    inst = art.source.instance
    if p.u != inst.u:
        raise ValueError(f"partition covers 1..{p.u}, artifact universe is 1..{inst.u}")
    sizes = art.subset_sizes

    for idx, subset in enumerate(inst.subsets, start=1):
        if len({p.side(e) for e in subset}) == 1:
            raise TraceFailure(idx, "missing-flip")

    walk = []
    for i in range(1, inst.u + 1):
        shifted = p.side(i) is Side.ONE
        walk.append(U(i, 1))
        walk += [U(i, 3), U(i, 2)] if shifted else [U(i, 2), U(i, 3)]
        for f, r in zip(art.occ.F[i - 1], art.occ.R[i - 1]):
            base = 3 * r + (3 * sizes[f - 1] if shifted else 0)
            walk += [S(f, base + 5), S(f, base + 4), S(f, base + 3)]
        walk.append(U(i, 4))
    walk.append(C(1))

    for idx, subset in enumerate(inst.subsets, start=1):
        k = len(subset)
        sides = [p.side(e) for e in subset]
        flip = next(j for j in range(1, k) if sides[j - 1] != sides[j])
        walk.append(S(idx, 1))
        for j in range(1, k + 1):
            # stage 1 used the opposite copy, so side ONE is left unshifted
            base = 3 * j + (0 if sides[j - 1] is Side.ONE else 3 * k)
            walk += [S(idx, base + 3), S(idx, base + 4), S(idx, base + 5)]
            if j == flip:
                middle = [S(idx, 3), S(idx, 4), S(idx, 5)]
                walk += middle if sides[j - 1] is Side.ONE else middle[::-1]
        walk.append(S(idx, 2))
    walk.append(C(2))

    order = tuple(art.flat_id(x) for x in walk)
    if len(set(order)) != len(order):
        raise RuntimeError("trace revisited a vertex; the construction is inconsistent")
    cyc = Cycle(order)
    if not verify_cycle(art.graph, cyc):
        raise RuntimeError("traced walk is not a Hamiltonian cycle of the artifact graph")
    return cyc


def extract_partition(art: ReductionArtifact, cyc: Cycle) -> Partition:
    """Side ONE for element ``i`` iff ``U(i,2)`` comes after ``U(i,3)`` counting from ``U(1,1)``.

    The result is on the simple-form universe; ``art.source.lift`` maps it to
    original element ids.
    """
    if not verify_cycle(art.graph, cyc):
        raise ValueError("not a Hamiltonian cycle of this graph")
    start = art.flat_id(U(1, 1))
    k = cyc.order.index(start)
    order = cyc.order[k:] + cyc.order[:k]
    position = {v: t for t, v in enumerate(order)}
    u = art.source.instance.u
    return Partition(tuple(
        Side.ONE if position[art.flat_id(U(i, 2))] > position[art.flat_id(U(i, 3))] else Side.TWO
        for i in range(1, u + 1)
    ))
