from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class DiGraph:
    """Simple directed graph on vertices ``1..n``.

    ``arcs`` keeps the insertion order, which serialisation reproduces.
    ``out_adj[v - 1]`` and ``in_adj[v - 1]`` are ascending neighbour tuples.
    """

    n: int
    arcs: tuple[tuple[int, int], ...]
    out_adj: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    in_adj: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    arc_set: frozenset[tuple[int, int]] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        arcs = tuple((int(a), int(b)) for a, b in self.arcs)
        out = [[] for _ in range(self.n)]
        inn = [[] for _ in range(self.n)]
        seen = set()
        for a, b in arcs:
            if not (1 <= a <= self.n and 1 <= b <= self.n):
                raise ValueError(f"arc ({a}, {b}) outside 1..{self.n}")
            if a == b:
                raise ValueError(f"self-loop at {a}")
            if (a, b) in seen:
                raise ValueError(f"duplicate arc ({a}, {b})")
            seen.add((a, b))
            out[a - 1].append(b)
            inn[b - 1].append(a)
        object.__setattr__(self, "arcs", arcs)
        object.__setattr__(self, "arc_set", frozenset(seen))
        object.__setattr__(self, "out_adj", tuple(tuple(sorted(x)) for x in out))
        object.__setattr__(self, "in_adj", tuple(tuple(sorted(x)) for x in inn))

    @property
    def m(self) -> int:
        return len(self.arcs)

    def successors(self, v: int) -> tuple[int, ...]:
        return self.out_adj[v - 1]

    def predecessors(self, v: int) -> tuple[int, ...]:
        return self.in_adj[v - 1]

    def has_arc(self, a: int, b: int) -> bool:
        return (a, b) in self.arc_set
