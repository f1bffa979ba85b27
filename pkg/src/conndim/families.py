"""Closed-form graph families and composition formulas.

Threshold graphs (built by isolated/dominating vertex additions) and
vertex-joined triangle chains admit exact dimension formulas; disjoint
unions compose by an isolated-count rule.  Fixed named graphs used across
the test corpus live here too.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, make_graph


@dataclass(frozen=True)
class ThresholdSequence:
    """Binary build sequence: 0 adds an isolated vertex, 1 a dominating one.

    The first bit never affects the graph, so construction canonicalizes it
    to equal the second bit; run-length formulas may then assume the leading
    run has length at least two.
    """

    bits: tuple[int, ...]

    def __init__(self, bits):
        bits = tuple(int(b) for b in bits)
        if not bits:
            raise ValueError("threshold sequence must be non-empty")
        if any(b not in (0, 1) for b in bits):
            raise ValueError("threshold sequence bits must be 0 or 1")
        if len(bits) >= 2:
            bits = (bits[1],) + bits[1:]
        object.__setattr__(self, "bits", bits)

    @property
    def n(self) -> int:
        return len(self.bits)

    def runs(self) -> tuple[tuple[int, int], ...]:
        """Maximal constant runs as (bit, length) pairs."""
        out = []
        for b in self.bits:
            if out and out[-1][0] == b:
                out[-1][1] += 1
            else:
                out.append([b, 1])
        return tuple((b, l) for b, l in out)

    def is_connected_form(self) -> bool:
        """True when the generated graph is connected (last bit dominating,
        or a single vertex)."""
        return self.n == 1 or self.bits[-1] == 1


def threshold_graph(seq: ThresholdSequence) -> Graph:
    edges = []
    for i, b in enumerate(seq.bits):
        if i >= 1 and b == 1:
            edges.extend((j, i) for j in range(i))
    return make_graph(seq.n, edges)


def threshold_cdim(seq: ThresholdSequence) -> int:
    """Dimension of a connected threshold graph from its run structure.

    With runs k_1..k_m of the canonical sequence: n - m when the final run
    is longer than one, n - m + 1 when it has length one.
    """
    if not seq.is_connected_form():
        raise ValueError(
            "sequence ends in 0: the graph is disconnected; split off the "
            "trailing isolated vertices and use disjoint_union_cdim")
    if seq.n == 1:
        return 0
    r = seq.runs()
    m = len(r)
    k_last = r[-1][1]
    return seq.n - m if k_last > 1 else seq.n - m + 1


def threshold_cdim_routed(seq: ThresholdSequence) -> int:
    """threshold_cdim extended to disconnected sequences.

    A sequence ending in 0 generates the connected prefix up to its last
    dominating vertex plus trailing isolated vertices; the disjoint-union
    rule combines the two.
    """
    if seq.is_connected_form():
        return threshold_cdim(seq)
    bits = seq.bits
    last_dom = max((i for i in range(1, len(bits)) if bits[i] == 1),
                   default=None)
    if last_dom is None:
        # no edges at all: every vertex is isolated
        return max(seq.n - 1, 0)
    isolated = seq.n - 1 - last_dom
    prefix = ThresholdSequence(bits[:last_dom + 1])
    return max(isolated - 1, 0) + threshold_cdim(prefix)


def triangle_chain(b: int) -> Graph:
    """b - 1 triangles joined in a path at shared vertices, plus one leaf.

    2b vertices: tops 0..b-1 form a path, bottom b+i completes a triangle
    on tops i, i+1, and vertex 2b-1 hangs off the far top.  The graph has
    exactly b blocks.
    """
    if b < 2:
        raise ValueError("triangle chains need b >= 2")
    edges = []
    for i in range(b - 1):
        edges.append((i, i + 1))
        edges.append((i, b + i))
        edges.append((i + 1, b + i))
    edges.append((b - 1, 2 * b - 1))
    return make_graph(2 * b, edges)


def triangle_chain_cdim(b: int) -> int:
    """Dimension of triangle_chain(b): 2b/3 rounded up in thirds —
    2b/3, (2b+1)/3, (2b+2)/3 as b mod 3 is 0, 1, 2."""
    if b < 2:
        raise ValueError("triangle chains need b >= 2")
    return (2 * b + [0, 1, 2][b % 3]) // 3


def disjoint_union_cdim(components: list[tuple[int, int]]) -> int:
    """Dimension of a disjoint union from per-component (order, dimension).

    Components of order one are isolated vertices: all but one of them must
    be landmarks, contributing max(count - 1, 0); the rest contribute their
    own dimensions.
    """
    isolated = 0
    total = 0
    for order, value in components:
        if order < 1:
            raise ValueError("component order must be at least 1")
        if order == 1:
            if value != 0:
                raise ValueError("an isolated vertex has dimension 0")
            isolated += 1
        else:
            if value < 0:
                raise ValueError("component dimension must be non-negative")
            total += value
    return max(isolated - 1, 0) + total


_HOUSE_EDGES = ((0, 1), (0, 3), (1, 3), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4))

# 8-vertex worked example: the two degree-2 vertices 6,7 hang off 5
_FIGURE1_EDGES = ((0, 1), (1, 2), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5),
                  (3, 4), (4, 5), (5, 6), (5, 7), (6, 7))

# 9-vertex bridge-composition example: a dense 5-vertex part joined by the
# bridge (4,5) to a 4-cycle
_FIGURE5_EDGES = ((0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (1, 4), (2, 4),
                  (3, 4), (4, 5), (5, 6), (5, 7), (6, 8), (7, 8))


def standard_graph(kind: str, n: int | None = None) -> Graph:
    """Named fixture graphs: path, cycle, complete, star (sized by n) and
    the fixed house / figure1 / figure5 examples."""
    sized = {"path", "cycle", "complete", "star"}
    if kind in sized:
        if n is None:
            raise ValueError(f"kind {kind!r} needs a vertex count")
        if kind == "path":
            if n < 1:
                raise ValueError("paths need n >= 1")
            return make_graph(n, ((i, i + 1) for i in range(n - 1)))
        if kind == "cycle":
            if n < 3:
                raise ValueError("cycles need n >= 3")
            return make_graph(n, [(i, (i + 1) % n) for i in range(n)])
        if kind == "complete":
            if n < 1:
                raise ValueError("complete graphs need n >= 1")
            return make_graph(
                n, ((i, j) for i in range(n) for j in range(i + 1, n)))
        if n < 2:
            raise ValueError("stars need n >= 2")
        return make_graph(n, ((0, i) for i in range(1, n)))
    fixed = {"house": (5, _HOUSE_EDGES), "figure1": (8, _FIGURE1_EDGES),
             "figure5": (9, _FIGURE5_EDGES)}
    if kind not in fixed:
        raise ValueError(f"unknown graph kind {kind!r}")
    if n is not None:
        raise ValueError(f"kind {kind!r} has a fixed size")
    order, edges = fixed[kind]
    return make_graph(order, edges)
