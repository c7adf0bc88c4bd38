"""Reduction rules that bring an SSP instance into simple form.

Rules, applied in the order 1, 3, 4, 2 and repeated until nothing changes:

1. a singleton subset can never be split, so the answer is NO;
3. a subset equal to the current universe is split by every partition;
4. a subset containing another subset is split whenever the smaller one is
   (for identical subsets the later one is dropped);
2. an element that occurs in no subset can go on either side.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .ssp import Partition, Side, SspInstance


@dataclass(frozen=True)
class SimpleForm:
    """An instance with no removable element or subset, plus how it was derived.

    ``element_map`` maps original element ids to the contiguous ids used in
    ``instance``; ``kept_subsets[i]`` is the original (1-based) index of
    reduced subset ``i + 1``.
    """

    instance: SspInstance
    element_map: dict[int, int]
    dropped_subsets: tuple[int, ...]
    kept_subsets: tuple[int, ...]
    original: SspInstance = field(repr=False)

    def __post_init__(self):
        problems = simple_form_violations(self.instance)
        if problems:
            raise ValueError("not in simple form: " + "; ".join(problems))
        values = sorted(self.element_map.values())
        if values != list(range(1, self.instance.u + 1)):
            raise ValueError("element_map must be a bijection onto 1..u'")
        if any(not 1 <= e <= self.original.u for e in self.element_map):
            raise ValueError("element_map keys must be original element ids")

    @classmethod
    def from_instance(cls, inst: SspInstance) -> SimpleForm:
        """Wrap an instance that is already in simple form, with identity maps."""
        return cls(
            instance=inst,
            element_map={e: e for e in range(1, inst.u + 1)},
            dropped_subsets=(),
            kept_subsets=tuple(range(1, inst.s + 1)),
            original=inst,
        )

    def lift(self, p: Partition, default: Side = Side.TWO) -> Partition:
        """Map a partition of the reduced universe back to original element ids."""
        if p.u != self.instance.u:
            raise ValueError(f"partition covers 1..{p.u}, reduced universe is 1..{self.instance.u}")
        sides = [default] * self.original.u
        for orig, new in self.element_map.items():
            sides[orig - 1] = p.side(new)
        return Partition(tuple(sides))

    def restrict(self, p: Partition) -> Partition:
        """Project a partition of the original universe onto the reduced one."""
        if p.u != self.original.u:
            raise ValueError(f"partition covers 1..{p.u}, original universe is 1..{self.original.u}")
        inverse = {new: orig for orig, new in self.element_map.items()}
        return Partition(tuple(p.side(inverse[e]) for e in range(1, self.instance.u + 1)))


@dataclass(frozen=True)
class DecidedNo:
    rule: str
    subset_index: int | None = None


@dataclass(frozen=True)
class DecidedYes:
    witness: Partition
    reason: str


@dataclass(frozen=True)
class Reduced:
    simple: SimpleForm


SimplificationResult = Union[DecidedNo, DecidedYes, Reduced]


def simple_form_violations(inst: SspInstance) -> list[str]:
    problems = []
    covered = set()
    for idx, subset in enumerate(inst.subsets, start=1):
        covered.update(subset)
        if len(subset) < 2:
            problems.append(f"subset {idx} has fewer than two elements")
        if len(subset) == inst.u:
            problems.append(f"subset {idx} equals the universe")
    missing = set(range(1, inst.u + 1)) - covered
    if missing:
        problems.append(f"element {min(missing)} occurs in no subset")
    sets = [frozenset(x) for x in inst.subsets]
    for i, a in enumerate(sets):
        for j, b in enumerate(sets):
            if i != j and a <= b:
                problems.append(f"subset {j + 1} contains subset {i + 1}")
    return problems


def simplify(inst: SspInstance) -> SimplificationResult:
    for idx, subset in enumerate(inst.subsets, start=1):
        if len(subset) == 1:
            return DecidedNo("rule 1: singleton subset cannot be split", idx)

    if not inst.subsets:
        if inst.u >= 2:
            return DecidedYes(Partition.from_one(inst.u, {1}), "empty family")
        return DecidedNo("universe has fewer than two elements")

    universe = set(range(1, inst.u + 1))
    live = {idx: frozenset(x) for idx, x in enumerate(inst.subsets, start=1)}
    dropped = []
    # most recent subset removed by rule 3; every dropped subset contains it
    anchor = None

    changed = True
    while changed:
        changed = False

        for idx in sorted(live):
            if live[idx] == universe:
                anchor = live.pop(idx)
                dropped.append(idx)
                changed = True

        doomed = [
            j for j, b in live.items()
            if any(i != j and a <= b and (a != b or i < j) for i, a in live.items())
        ]
        for j in doomed:
            del live[j]
            dropped.append(j)
            changed = True

        covered = set().union(*live.values())
        if covered != universe:
            universe = covered
            changed = True

    if not live:
        # rule 3 must have fired; splitting the anchor splits every dropped subset
        first = min(anchor)
        return DecidedYes(Partition.from_one(inst.u, {first}), "all subsets removed by rules 3 and 4")

    order = sorted(universe)
    element_map = {e: new for new, e in enumerate(order, start=1)}
    kept = tuple(sorted(live))
    reduced = SspInstance(
        len(order),
        tuple(tuple(element_map[e] for e in sorted(live[idx])) for idx in kept),
    )

    if reduced.c == reduced.u:
        # every element occurs exactly once, so the subsets are disjoint
        firsts = {order[x[0] - 1] for x in reduced.subsets}
        return DecidedYes(Partition.from_one(inst.u, firsts), "c = u: subsets are disjoint")

    return Reduced(SimpleForm(reduced, element_map, tuple(sorted(dropped)), kept, inst))
