"""Exhaustive directed Hamiltonian cycle search with forced-arc propagation.

The search grows a path from vertex 1 and branches on the successor of the
path head in ascending id order. Between branches, candidate arcs are pruned
to a fixpoint:

* a vertex with a single remaining out-arc (in-arc) fixes that arc, which
  removes every other in-arc of its head (out-arc of its tail);
* fixed arcs form path fragments, and the arc that would close a fragment
  into a cycle shorter than ``n`` is removed;
* a vertex left with no out-arc or no in-arc kills the branch.

Forced moves through degree-2 vertices and through the only remaining in-arc
of a vertex fall out of these rules. The search is complete: a
NON_HAMILTONIAN answer means the whole space was exhausted.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .graph import DiGraph

DEFAULT_BUDGET = 50_000_000


class Status(enum.Enum):
    HAMILTONIAN = "hamiltonian"
    NON_HAMILTONIAN = "non-hamiltonian"
    INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class Cycle:
    order: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(int(v) for v in self.order))

    def __len__(self):
        return len(self.order)

    def canonical(self) -> Cycle:
        """Rotate so the sequence starts at vertex 1 (unchanged if 1 is absent)."""
        if 1 not in self.order:
            return self
        k = self.order.index(1)
        return Cycle(self.order[k:] + self.order[:k])

    def arcs(self):
        n = len(self.order)
        return [(self.order[t], self.order[(t + 1) % n]) for t in range(n)]


@dataclass
class SearchStats:
    expansions: int = 0
    backtracks: int = 0
    arcs_pruned: int = 0


@dataclass(frozen=True)
class SolveOutcome:
    status: Status
    cycle: Cycle | None = None
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def hamiltonian(self) -> bool:
        return self.status is Status.HAMILTONIAN


def verify_cycle(g: DiGraph, cyc: Cycle) -> bool:
    order = cyc.order
    if len(order) != g.n or g.n == 0 or sorted(order) != list(range(1, g.n + 1)):
        return False
    return all(g.has_arc(a, b) for a, b in cyc.arcs())


class _BudgetExhausted(Exception):
    pass


class _Search:
    def __init__(self, g: DiGraph, budget: int, prune: bool):
        self.n = g.n
        self.budget = budget
        self.prune = prune
        self.stats = SearchStats()
        # 0-based working copies
        self.succ = [set(v - 1 for v in g.out_adj[x]) for x in range(g.n)]
        self.pred = [set(v - 1 for v in g.in_adj[x]) for x in range(g.n)]
        self.trail: list[tuple[int, int]] = []

    # arc removal with undo

    def _remove(self, a: int, b: int, queue: list[int]):
        self.succ[a].discard(b)
        self.pred[b].discard(a)
        self.trail.append((a, b))
        self.stats.arcs_pruned += 1
        queue.append(a)
        queue.append(b)

    def _undo(self, mark: int):
        trail, succ, pred = self.trail, self.succ, self.pred
        while len(trail) > mark:
            a, b = trail.pop()
            succ[a].add(b)
            pred[b].add(a)

    def _fragment_ends(self, a: int, b: int) -> tuple[int, int, int] | None:
        """Start, end and size of the fixed fragment through arc a->b; None if it is a cycle."""
        succ, pred = self.succ, self.pred
        size = 2
        end = b
        while len(succ[end]) == 1:
            nxt = next(iter(succ[end]))
            if len(pred[nxt]) != 1:
                break
            if nxt == a:
                return None
            end = nxt
            size += 1
        start = a
        while len(pred[start]) == 1:
            prv = next(iter(pred[start]))
            if len(succ[prv]) != 1:
                break
            start = prv
            size += 1
        return start, end, size

    def _propagate(self, queue: list[int]) -> bool:
        succ, pred = self.succ, self.pred
        while queue:
            x = queue.pop()
            if not succ[x] or not pred[x]:
                return False
            if len(succ[x]) == 1:
                y = next(iter(succ[x]))
                if len(pred[y]) > 1:
                    for w in [w for w in pred[y] if w != x]:
                        self._remove(w, y, queue)
                if not self._close_fragment(x, y, queue):
                    return False
            if len(pred[x]) == 1:
                w = next(iter(pred[x]))
                if len(succ[w]) > 1:
                    for y in [y for y in succ[w] if y != x]:
                        self._remove(w, y, queue)
                if not self._close_fragment(w, x, queue):
                    return False
        return True

    def _close_fragment(self, a: int, b: int, queue: list[int]) -> bool:
        if len(self.succ[a]) != 1 or len(self.pred[b]) != 1:
            return True
        ends = self._fragment_ends(a, b)
        if ends is None:
            # fixed arcs already close a cycle; fine only if it spans everything
            return self._fixed_cycle_len(a) == self.n
        start, end, size = ends
        if size < self.n and start in self.succ[end]:
            self._remove(end, start, queue)
        return True

    def _fixed_cycle_len(self, a: int) -> int:
        length, x = 1, next(iter(self.succ[a]))
        while x != a:
            length += 1
            x = next(iter(self.succ[x]))
        return length

    # search

    def run(self) -> SolveOutcome:
        n = self.n
        try:
            if n == 1:
                return SolveOutcome(Status.NON_HAMILTONIAN, stats=self.stats)
            if self.prune:
                path = self._search_pruned()
            else:
                path = self._search_plain()
        except _BudgetExhausted:
            return SolveOutcome(Status.INDETERMINATE, stats=self.stats)
        if path is None:
            return SolveOutcome(Status.NON_HAMILTONIAN, stats=self.stats)
        return SolveOutcome(Status.HAMILTONIAN, Cycle(tuple(v + 1 for v in path)), self.stats)

    def _expand(self):
        self.stats.expansions += 1
        if self.stats.expansions > self.budget:
            raise _BudgetExhausted

    def _search_pruned(self) -> list[int] | None:
        queue = list(range(self.n))
        if not self._propagate(queue):
            return None
        return self._branch()

    def _head(self) -> tuple[int, list[int]]:
        """Follow fixed arcs from vertex 0; return the path head and the path."""
        succ, pred = self.succ, self.pred
        path = [0]
        x = 0
        while len(succ[x]) == 1:
            y = next(iter(succ[x]))
            if len(pred[y]) != 1 or y == 0:
                break
            path.append(y)
            x = y
        return x, path

    def _branch(self) -> list[int] | None:
        self._expand()
        head, path = self._head()
        if len(path) == self.n:
            if 0 in self.succ[head]:
                return path
            return None
        choices = sorted(self.succ[head])
        for y in choices:
            mark = len(self.trail)
            queue: list[int] = []
            for z in choices:
                if z != y and z in self.succ[head]:
                    self._remove(head, z, queue)
            if self._propagate(queue):
                found = self._branch()
                if found is not None:
                    return found
            self._undo(mark)
            self.stats.backtracks += 1
        return None

    def _search_plain(self) -> list[int] | None:
        n, succ = self.n, self.succ
        visited = [False] * n
        visited[0] = True
        path = [0]

        def extend(x: int) -> bool:
            self._expand()
            if len(path) == n:
                return 0 in succ[x]
            for y in sorted(succ[x]):
                if not visited[y]:
                    visited[y] = True
                    path.append(y)
                    if extend(y):
                        return True
                    path.pop()
                    visited[y] = False
                    self.stats.backtracks += 1
            return False

        return path if extend(0) else None


def find_hamiltonian_cycle(g: DiGraph, budget: int = DEFAULT_BUDGET, prune: bool = True) -> SolveOutcome:
    """Decide Hamiltonicity of ``g``; ``prune=False`` runs a plain DFS for cross-checking.

    ``budget`` bounds the number of search-node expansions; running out gives
    an INDETERMINATE outcome. Returned cycles start at vertex 1.
    """
    if g.n == 0:
        raise ValueError("graph has no vertices")
    return _Search(g, budget, prune).run()

