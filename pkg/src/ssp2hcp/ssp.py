"""Set splitting instances, partitions, and the brute-force decision oracle."""

from __future__ import annotations

import enum
import itertools
import json
import random
from dataclasses import dataclass, field

BRUTE_FORCE_MAX_U = 24


class Side(enum.IntEnum):
    ONE = 1
    TWO = 2

    def other(self) -> Side:
        return Side.TWO if self is Side.ONE else Side.ONE


@dataclass(frozen=True)
class SspInstance:
    """A universe ``{1..u}`` and an ordered family of subsets.

    Subsets are normalised to ascending tuples on construction. Element ids
    outside ``1..u``, duplicates inside a subset and empty subsets are rejected.
    """

    u: int
    subsets: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        if not isinstance(self.u, int) or self.u < 0:
            raise ValueError(f"universe size must be a non-negative integer, got {self.u!r}")
        normalised = []
        for idx, subset in enumerate(self.subsets, start=1):
            elems = sorted(subset)
            if not elems:
                raise ValueError(f"subset {idx} is empty")
            for a, b in zip(elems, elems[1:]):
                if a == b:
                    raise ValueError(f"subset {idx} repeats element {a}")
            if elems[0] < 1 or elems[-1] > self.u:
                raise ValueError(f"subset {idx} has an element outside 1..{self.u}")
            normalised.append(tuple(elems))
        object.__setattr__(self, "subsets", tuple(normalised))

    @property
    def s(self) -> int:
        return len(self.subsets)

    @property
    def c(self) -> int:
        return sum(len(x) for x in self.subsets)

    def to_dict(self) -> dict:
        return {"u": self.u, "subsets": [list(x) for x in self.subsets]}


@dataclass(frozen=True)
class Partition:
    """Side assignment for elements ``1..u``; ``sides[e - 1]`` is the side of ``e``."""

    sides: tuple[Side, ...]

    def __post_init__(self):
        object.__setattr__(self, "sides", tuple(Side(x) for x in self.sides))

    @classmethod
    def from_one(cls, u: int, one) -> Partition:
        one = set(one)
        if any(e < 1 or e > u for e in one):
            raise ValueError(f"element outside 1..{u}")
        return cls(tuple(Side.ONE if e in one else Side.TWO for e in range(1, u + 1)))

    @classmethod
    def from_mapping(cls, mapping: dict[int, Side], u: int | None = None) -> Partition:
        if u is None:
            u = max(mapping, default=0)
        if set(mapping) != set(range(1, u + 1)):
            raise ValueError(f"partition must assign every element of 1..{u} exactly once")
        return cls(tuple(mapping[e] for e in range(1, u + 1)))

    @property
    def u(self) -> int:
        return len(self.sides)

    def side(self, element: int) -> Side:
        if not 1 <= element <= self.u:
            raise IndexError(f"element {element} outside 1..{self.u}")
        return self.sides[element - 1]

    @property
    def one(self) -> frozenset[int]:
        return frozenset(e for e, x in enumerate(self.sides, start=1) if x is Side.ONE)

    @property
    def two(self) -> frozenset[int]:
        return frozenset(e for e, x in enumerate(self.sides, start=1) if x is Side.TWO)

    def swapped(self) -> Partition:
        return Partition(tuple(x.other() for x in self.sides))

    def as_dict(self) -> dict[int, Side]:
        return {e: x for e, x in enumerate(self.sides, start=1)}


@dataclass(frozen=True)
class SplitReport:
    unsplit: tuple[int, ...] = ()
    side_empty: Side | None = None
    is_solution: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "is_solution", not self.unsplit and self.side_empty is None)


def check_partition(inst: SspInstance, p: Partition) -> SplitReport:
    """Report which subsets (1-based) lie wholly on one side, and any empty side."""
    if p.u != inst.u:
        raise ValueError(f"partition covers 1..{p.u} but the instance universe is 1..{inst.u}")
    unsplit = tuple(
        idx
        for idx, subset in enumerate(inst.subsets, start=1)
        if len({p.sides[e - 1] for e in subset}) == 1
    )
    side_empty = None
    if Side.ONE not in p.sides:
        side_empty = Side.ONE
    elif Side.TWO not in p.sides:
        side_empty = Side.TWO
    return SplitReport(unsplit, side_empty)


def brute_force_ssp(inst: SspInstance) -> Partition | None:
    """Enumerate assignments with element 1 pinned to ONE; ONE sorts before TWO.

    Returns the lexicographically first solution, or None if there is none.
    """
    if inst.u > BRUTE_FORCE_MAX_U:
        raise ValueError(f"brute force limited to u <= {BRUTE_FORCE_MAX_U}, got u={inst.u}")
    if inst.u < 2:
        return None
    # bitmask per subset over elements 2..u; element 1 is always ONE
    masks = []
    for subset in inst.subsets:
        m = 0
        for e in subset:
            m |= 1 << (e - 1)
        masks.append(m)
    full = (1 << inst.u) - 1
    for rest in itertools.product((Side.ONE, Side.TWO), repeat=inst.u - 1):
        one_mask = 1
        for e, side in enumerate(rest, start=2):
            if side is Side.ONE:
                one_mask |= 1 << (e - 1)
        if one_mask == full:
            continue
        if all(m & one_mask and m & ~one_mask for m in masks):
            return Partition((Side.ONE,) + rest)
    return None


def generate_random_instance(u: int, s: int, size_range: tuple[int, int], seed: int) -> SspInstance:
    lo, hi = size_range
    if not 2 <= lo <= hi <= u:
        raise ValueError(f"need 2 <= min <= max <= u, got size_range={size_range} with u={u}")
    if s < 0:
        raise ValueError("subset count must be non-negative")
    rng = random.Random(seed)
    subsets = []
    for _ in range(s):
        k = rng.randint(lo, hi)
        subsets.append(tuple(sorted(rng.sample(range(1, u + 1), k))))
    return SspInstance(u, tuple(subsets))


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ValueError(f"line {lineno}: expected integers, got {' '.join(tokens)!r}") from None


def parse_ssp(text: str) -> SspInstance:
    """Parse the line-oriented ``u s`` text format.

    Comment-only lines are ignored everywhere; a blank line where a subset is
    expected is an empty subset and is rejected.
    """
    header = None
    subsets: list[tuple[int, ...]] = []
    expected = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = _strip_comment(raw)
        if header is None:
            if not body:
                continue
            nums = _ints(body.split(), lineno)
            if len(nums) != 2 or nums[0] < 0 or nums[1] < 0:
                raise ValueError(f"line {lineno}: malformed header {raw!r}, expected 'u s'")
            header = nums
            expected = nums[1]
            continue
        if len(subsets) == expected:
            if body:
                raise ValueError(f"line {lineno}: more subset lines than the declared {expected}")
            continue
        if not body:
            if "#" in raw:
                continue
            raise ValueError(f"line {lineno}: empty subset")
        elems = _ints(body.split(), lineno)
        if len(set(elems)) != len(elems):
            raise ValueError(f"line {lineno}: duplicate element in subset")
        u = header[0]
        bad = [e for e in elems if not 1 <= e <= u]
        if bad:
            raise ValueError(f"line {lineno}: element {bad[0]} outside 1..{u}")
        subsets.append(tuple(sorted(elems)))
    if header is None:
        raise ValueError("missing 'u s' header")
    if len(subsets) != expected:
        raise ValueError(f"header declares {expected} subsets but {len(subsets)} were given")
    return SspInstance(header[0], tuple(subsets))


def format_ssp(inst: SspInstance) -> str:
    lines = [f"{inst.u} {inst.s}"]
    lines += [" ".join(map(str, x)) for x in inst.subsets]
    return "\n".join(lines) + "\n"


def parse_ssp_json(text: str) -> SspInstance:
    data = json.loads(text)
    if not isinstance(data, dict) or set(data) != {"u", "subsets"}:
        raise ValueError('JSON instance must be an object with exactly "u" and "subsets"')
    u, subsets = data["u"], data["subsets"]
    if not isinstance(u, int) or isinstance(u, bool):
        raise ValueError('"u" must be an integer')
    if not isinstance(subsets, list) or not all(isinstance(x, list) for x in subsets):
        raise ValueError('"subsets" must be a list of lists')
    for x in subsets:
        if not all(isinstance(e, int) and not isinstance(e, bool) for e in x):
            raise ValueError("subset elements must be integers")
    return SspInstance(u, tuple(tuple(x) for x in subsets))


def format_ssp_json(inst: SspInstance) -> str:
    return json.dumps(inst.to_dict()) + "\n"


def load_ssp(text: str) -> SspInstance:
    """Dispatch on content: JSON if the first non-space character is ``{``."""
    if text.lstrip().startswith("{"):
        return parse_ssp_json(text)
    return parse_ssp(text)
