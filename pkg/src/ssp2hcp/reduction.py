"""Construction of the directed graph whose Hamiltonian cycles encode set splittings.

Vertex groups:

* ``U(i, 1..4)`` for each element ``i``. Visiting ``U(i,2)`` after ``U(i,3)``
  puts ``i`` on side ONE.
* ``S(i, 1..5+6k)`` for each subset ``i`` of size ``k``. The triple at
  ``3+3j, 4+3j, 5+3j`` stands for its ``j``-th element on side ONE, the copy
  shifted by ``3k`` for side TWO, and ``S(i, 3..5)`` is the middle triple that
  can only be passed where two neighbouring elements sit on opposite sides.
* ``C(1)``, ``C(2)`` join the element part and the subset part into one loop.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .graph import DiGraph
from .simplify import SimpleForm


class ConstructionError(RuntimeError):
    """The built graph disagrees with the closed-form construction."""


class VertexLabel(NamedTuple):
    kind: str  # "U", "S" or "C"
    i: int  # element or subset id; 0 for connector vertices
    j: int

    def __str__(self):
        if self.kind == "C":
            return f"C {self.j}"
        return f"{self.kind} {self.i} {self.j}"


def U(i: int, j: int) -> VertexLabel:
    return VertexLabel("U", i, j)


def S(i: int, j: int) -> VertexLabel:
    return VertexLabel("S", i, j)


def C(j: int) -> VertexLabel:
    return VertexLabel("C", 0, j)


def expected_counts(u: int, s: int, c: int) -> tuple[int, int]:
    """Closed-form vertex and arc counts of the constructed graph."""
    return 4 * u + 5 * s + 6 * c + 2, 7 * u + s + 18 * c + 2


class Layout:
    """1-based flat ids: element blocks of 4, then subset blocks of 5+6k, then C1, C2."""

    def __init__(self, u: int, subset_sizes):
        self.u = u
        self.subset_sizes = tuple(subset_sizes)
        self.s_offsets = []
        pos = 4 * u
        for k in self.subset_sizes:
            self.s_offsets.append(pos)
            pos += 5 + 6 * k
        self.n = pos + 2
        self._labels = [None] + [self._compute_label(v) for v in range(1, self.n + 1)]

    def flat_id(self, label: VertexLabel) -> int:
        kind, i, j = label
        if kind == "U" and 1 <= i <= self.u and 1 <= j <= 4:
            return 4 * (i - 1) + j
        if kind == "S" and 1 <= i <= len(self.subset_sizes) and 1 <= j <= 5 + 6 * self.subset_sizes[i - 1]:
            return self.s_offsets[i - 1] + j
        if kind == "C" and i == 0 and j in (1, 2):
            return self.n - 2 + j
        raise ValueError(f"label {label!r} out of range for this layout")

    def label_of(self, v: int) -> VertexLabel:
        if not 1 <= v <= self.n:
            raise ValueError(f"vertex id {v} outside 1..{self.n}")
        return self._labels[v]

    def _compute_label(self, v: int) -> VertexLabel:
        if v <= 4 * self.u:
            return U((v - 1) // 4 + 1, (v - 1) % 4 + 1)
        if v > self.n - 2:
            return C(v - (self.n - 2))
        for idx in range(len(self.s_offsets) - 1, -1, -1):
            if v > self.s_offsets[idx]:
                return S(idx + 1, v - self.s_offsets[idx])
        raise AssertionError("unreachable")


@dataclass(frozen=True)
class OccurrenceTables:
    """``F[i-1]``: ascending subsets holding element ``i``; ``R[i-1]``: its positions there."""

    F: tuple[tuple[int, ...], ...]
    R: tuple[tuple[int, ...], ...]


def occurrence_tables(simple: SimpleForm) -> OccurrenceTables:
    inst = simple.instance
    F = [[] for _ in range(inst.u)]
    R = [[] for _ in range(inst.u)]
    for idx, subset in enumerate(inst.subsets, start=1):
        for pos, e in enumerate(subset, start=1):
            F[e - 1].append(idx)
            R[e - 1].append(pos)
    for e, f in enumerate(F, start=1):
        if not f:
            raise ValueError(f"element {e} occurs in no subset")
    return OccurrenceTables(tuple(map(tuple, F)), tuple(map(tuple, R)))


@dataclass(frozen=True)
class ReductionArtifact:
    graph: DiGraph
    layout: Layout
    occ: OccurrenceTables
    source: SimpleForm

    @property
    def subset_sizes(self) -> tuple[int, ...]:
        return self.layout.subset_sizes

    def flat_id(self, label: VertexLabel) -> int:
        return self.layout.flat_id(label)

    def label_of(self, v: int) -> VertexLabel:
        return self.layout.label_of(v)


class _ArcList:
    def __init__(self, layout: Layout):
        self.layout = layout
        self.arcs = []
        self.seen = set()

    def add(self, a: VertexLabel, b: VertexLabel):
        arc = (self.layout.flat_id(a), self.layout.flat_id(b))
        if arc in self.seen:
            raise ConstructionError(f"duplicate arc {a} -> {b}")
        self.seen.add(arc)
        self.arcs.append(arc)

    def both(self, a: VertexLabel, b: VertexLabel):
        self.add(a, b)
        self.add(b, a)


def build_graph(simple: SimpleForm) -> ReductionArtifact:
    inst = simple.instance
    u, s = inst.u, inst.s
    sizes = tuple(len(x) for x in inst.subsets)
    if s < 1 or u < 2:
        raise ValueError("construction needs at least one subset and two elements")
    if min(sizes) < 2:
        raise ValueError("every subset needs at least two elements")

    layout = Layout(u, sizes)
    occ = occurrence_tables(simple)
    out = _ArcList(layout)

    # element blocks: 1 -> 2, 1 -> 3, 2 <-> 3; U(i,4) stays isolated for now
    for i in range(1, u + 1):
        out.add(U(i, 1), U(i, 2))
        out.add(U(i, 1), U(i, 3))
        out.both(U(i, 2), U(i, 3))

    for i, k in enumerate(sizes, start=1):
        # group I: entry, exit, middle triple
        out.add(S(i, 1), S(i, 6))
        out.add(S(i, 1), S(i, 6 + 3 * k))
        out.add(S(i, 5 + 3 * k), S(i, 2))
        out.add(S(i, 5 + 6 * k), S(i, 2))
        out.both(S(i, 3), S(i, 4))
        out.both(S(i, 4), S(i, 5))
        # group II: one triple per element and side
        for j in range(1, k + 1):
            a, b, c = 3 + 3 * j, 4 + 3 * j, 5 + 3 * j
            out.both(S(i, a), S(i, b))
            out.both(S(i, b), S(i, c))
            out.both(S(i, a + 3 * k), S(i, b + 3 * k))
            out.both(S(i, b + 3 * k), S(i, c + 3 * k))
        # group III: moves to the next element, directly or through the middle triple
        for j in range(1, k):
            c = 5 + 3 * j
            out.add(S(i, c), S(i, c + 1))
            out.add(S(i, c), S(i, c + 1 + 3 * k))
            out.add(S(i, c + 3 * k), S(i, c + 1))
            out.add(S(i, c + 3 * k), S(i, c + 1 + 3 * k))
            out.add(S(i, c), S(i, 3))
            out.add(S(i, 3), S(i, c + 1))
            out.add(S(i, c + 3 * k), S(i, 5))
            out.add(S(i, 5), S(i, c + 3 * k + 1))

    # connectors; subset blocks are left through S(i,2), which collects both exits
    out.add(U(u, 4), C(1))
    out.add(C(1), S(1, 1))
    out.add(S(s, 2), C(2))
    out.add(C(2), U(1, 1))
    for i in range(1, u):
        out.add(U(i, 4), U(i + 1, 1))
    for j in range(1, s):
        out.add(S(j, 2), S(j + 1, 1))

    # per element: the side-TWO path (d offsets) leaves from U(i,3), the
    # side-ONE path (e offsets) from U(i,2); both end at U(i,4)
    for i in range(1, u + 1):
        F, R = occ.F[i - 1], occ.R[i - 1]
        d = [3 + 3 * r for r in R]
        e = [3 + 3 * sizes[f - 1] + 3 * r for f, r in zip(F, R)]
        last = len(F) - 1
        out.add(U(i, 2), S(F[0], 2 + e[0]))
        out.add(S(F[last], e[last]), U(i, 4))
        out.add(U(i, 3), S(F[0], 2 + d[0]))
        out.add(S(F[last], d[last]), U(i, 4))
        for j in range(last):
            out.add(S(F[j], e[j]), S(F[j + 1], 2 + e[j + 1]))
            out.add(S(F[j], d[j]), S(F[j + 1], 2 + d[j + 1]))

    n_expected, m_expected = expected_counts(u, s, inst.c)
    if layout.n != n_expected or len(out.arcs) != m_expected:
        raise ConstructionError(
            f"built {layout.n} vertices / {len(out.arcs)} arcs, "
            f"expected {n_expected} / {m_expected}"
        )
    return ReductionArtifact(DiGraph(layout.n, tuple(out.arcs)), layout, occ, simple)
