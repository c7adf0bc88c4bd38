"""Text formats for graphs, vertex labels, partitions, cycles, and DOT rendering.

All readers are strict: anything unexpected raises ValueError.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import DiGraph
from .reduction import C, ReductionArtifact, VertexLabel
from .solver import Cycle, verify_cycle
from .ssp import Partition, Side


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ValueError(f"line {lineno}: expected an integer, got {token!r}") from None


def write_edge_list(g: DiGraph | ReductionArtifact) -> str:
    if isinstance(g, ReductionArtifact):
        g = g.graph
    lines = [f"p hcp {g.n} {g.m}"]
    lines += [f"a {a} {b}" for a, b in g.arcs]
    return "\n".join(lines) + "\n"


def read_edge_list(text: str) -> DiGraph:
    header = None
    arcs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        tokens = line.split()
        if not tokens or tokens[0] == "c":
            continue
        if tokens[0] == "p":
            if header is not None:
                raise ValueError(f"line {lineno}: second header")
            if len(tokens) != 4 or tokens[1] != "hcp":
                raise ValueError(f"line {lineno}: header must be 'p hcp <n> <m>'")
            header = (_int(tokens[2], lineno), _int(tokens[3], lineno))
        elif tokens[0] == "a":
            if header is None:
                raise ValueError(f"line {lineno}: arc before header")
            if len(tokens) != 3:
                raise ValueError(f"line {lineno}: arc must be 'a <from> <to>'")
            a, b = _int(tokens[1], lineno), _int(tokens[2], lineno)
            if not (1 <= a <= header[0] and 1 <= b <= header[0]):
                raise ValueError(f"line {lineno}: arc ({a}, {b}) out of range 1..{header[0]}")
            arcs.append((a, b))
        else:
            raise ValueError(f"line {lineno}: unknown record {tokens[0]!r}")
    if header is None:
        raise ValueError("missing 'p hcp' header")
    n, m = header
    if len(arcs) != m:
        raise ValueError(f"header declares {m} arcs but {len(arcs)} were given")
    return DiGraph(n, tuple(arcs))


def write_labels(art: ReductionArtifact) -> str:
    return "".join(f"{v} {art.label_of(v)}\n" for v in range(1, art.graph.n + 1))


def read_labels(text: str) -> list[VertexLabel]:
    """Labels in flat-id order; ids must be exactly 1..n, listed in order."""
    labels = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        tokens = line.split()
        if not tokens:
            continue
        v = _int(tokens[0], lineno)
        if v != len(labels) + 1:
            raise ValueError(f"line {lineno}: expected id {len(labels) + 1}, got {v}")
        kind = tokens[1] if len(tokens) > 1 else ""
        if kind in ("U", "S") and len(tokens) == 4:
            labels.append(VertexLabel(kind, _int(tokens[2], lineno), _int(tokens[3], lineno)))
        elif kind == "C" and len(tokens) == 3:
            labels.append(C(_int(tokens[2], lineno)))
        else:
            raise ValueError(f"line {lineno}: malformed label {line!r}")
    return labels


def write_partition(p: Partition) -> str:
    return "".join(f"{e} {int(side)}\n" for e, side in enumerate(p.sides, start=1))


def read_partition(text: str, u: int | None = None) -> Partition:
    mapping = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        tokens = line.split()
        if not tokens:
            continue
        if len(tokens) != 2 or tokens[1] not in ("1", "2"):
            raise ValueError(f"line {lineno}: expected '<element> 1|2', got {line!r}")
        e = _int(tokens[0], lineno)
        if e in mapping:
            raise ValueError(f"line {lineno}: element {e} assigned twice")
        mapping[e] = Side(int(tokens[1]))
    return Partition.from_mapping(mapping, u)


def write_cycle(cyc: Cycle) -> str:
    return " ".join(map(str, cyc.order)) + "\n"


def read_cycle(text: str) -> Cycle:
    lines = [x for x in text.splitlines() if x.strip()]
    if len(lines) != 1:
        raise ValueError("cycle file must hold exactly one non-empty line")
    return Cycle(tuple(_int(t, 1) for t in lines[0].split()))


@dataclass(frozen=True)
class RenderOptions:
    highlight: Cycle | None = None
    stage_split: bool = False
    collapse_bidirectional: bool = True


_BIDIRECTIONAL = 'dir=none, penwidth=3'
_STAGE_STYLE = {1: 'style=dashed, color=blue, penwidth=2', 2: 'style=dotted, color=red, penwidth=2'}
_CYCLE_STYLE = 'color=red, penwidth=2'


def write_dot(art: ReductionArtifact, opts: RenderOptions = RenderOptions()) -> str:
    """Render the graph as a DOT digraph.

    Highlighted cycle arcs are split into two stages at vertex ``C 1``: arcs
    leaving a vertex before it (counting from vertex 1) are stage 1.
    """
    g = art.graph
    style = {}
    if opts.highlight is not None:
        if not verify_cycle(g, opts.highlight):
            raise ValueError("highlighted cycle is not a Hamiltonian cycle of this graph")
        order = opts.highlight.canonical().order
        boundary = order.index(art.flat_id(C(1)))
        for t, (a, b) in enumerate(opts.highlight.canonical().arcs()):
            if opts.stage_split:
                style[(a, b)] = _STAGE_STYLE[1 if t < boundary else 2]
            else:
                style[(a, b)] = _CYCLE_STYLE

    lines = ["digraph G {"]
    for v in range(1, g.n + 1):
        lines.append(f'  {v} [label="{art.label_of(v)}"];')
    for a, b in g.arcs:
        if (a, b) in style:
            lines.append(f"  {a} -> {b} [{style[(a, b)]}];")
            continue
        paired = (
            opts.collapse_bidirectional
            and g.has_arc(b, a)
            and (b, a) not in style
        )
        if paired:
            if a < b:
                lines.append(f"  {a} -> {b} [{_BIDIRECTIONAL}];")
        else:
            lines.append(f"  {a} -> {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
