"""Graph representation, graph6/edge-list parsing, and the structural
decompositions (components, blocks, twins) the rest of the package consumes.

Vertices are contiguous integers 0..n-1. Graphs are simple, undirected, and
immutable after construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator


class GraphFormatError(ValueError):
    """Malformed textual graph input. `offset` is the byte position when known."""

    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)


class EmptyGraphError(ValueError):
    """Raised by operations that require at least one vertex."""


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices 0..n-1."""

    n: int
    edges: frozenset  # frozenset of (u, v) tuples with u < v

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        """Per-vertex sorted neighbor tuples."""
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(x)) for x in nbrs)

    @cached_property
    def sorted_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.edges))

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        if self.n == 0:
            raise EmptyGraphError("maximum degree of the empty graph is undefined")
        return max(len(a) for a in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def edge_count(self) -> int:
        return len(self.edges)

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range for graph on {self.n} vertices")


def make_graph(n: int, edge_iter: Iterable[tuple[int, int]] = ()) -> Graph:
    """Build a Graph, validating indices and collapsing duplicate edges.

    Raises ValueError for self-loops or out-of-range endpoints.
    """
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    edges = set()
    for u, v in edge_iter:
        if u == v:
            raise ValueError(f"self-loop at vertex {u} rejected")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for {n} vertices")
        edges.add((min(u, v), max(u, v)))
    return Graph(n, frozenset(edges))


# --------------------------------------------------------------------------
# graph6 format
#
# Encoding: every byte stores value+63.  n <= 62 fits in one size byte; '~'
# introduces a 3-byte (18-bit) size, '~~' a 6-byte (36-bit) size.  The upper
# adjacency triangle is serialized column by column ((0,1), (0,2), (1,2),
# (0,3), ...), packed into 6-bit groups, zero-padded at the end.
# --------------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def parse_graph6(text: str) -> Graph:
    """Decode a one-line graph6 string."""
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise GraphFormatError("empty graph6 input")
    data = s.encode("ascii", errors="replace")
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise GraphFormatError(f"graph6 byte 0x{b:02x} outside printable range", i)

    pos = 0
    if data[0] != 126:  # ord('~')
        n = data[0] - 63
        pos = 1
    elif len(data) >= 2 and data[1] != 126:
        if len(data) < 4:
            raise GraphFormatError("truncated 3-byte size header", len(data))
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        pos = 4
    else:
        if len(data) < 8:
            raise GraphFormatError("truncated 6-byte size header", len(data))
        n = 0
        for i in range(2, 8):
            n = (n << 6) | (data[i] - 63)
        pos = 8

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos != nbytes:
        raise GraphFormatError(
            f"graph6 body holds {len(data) - pos} bytes, expected {nbytes} for n={n}",
            pos,
        )

    edges = []
    bit = 0
    u, v = 0, 1
    for i in range(pos, len(data)):
        group = data[i] - 63
        for k in range(5, -1, -1):
            if bit >= nbits:
                if (group >> k) & 1:
                    raise GraphFormatError("nonzero padding bits in graph6 body", i)
                continue
            if (group >> k) & 1:
                edges.append((u, v))
            bit += 1
            u += 1
            if u == v:
                u, v = 0, v + 1
    return make_graph(n, edges)


def to_graph6(g: Graph) -> str:
    """Encode a graph as a canonical graph6 string."""
    n = g.n
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126, 63 + (n >> 12), 63 + ((n >> 6) & 63), 63 + (n & 63)]
    else:
        head = [126, 126] + [63 + ((n >> (6 * i)) & 63) for i in range(5, -1, -1)]

    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(1 if g.has_edge(u, v) else 0)
    body = []
    for i in range(0, len(bits), 6):
        group = 0
        chunk = bits[i:i + 6]
        for j, b in enumerate(chunk):
            group |= b << (5 - j)
        body.append(group + 63)
    return bytes(head + body).decode("ascii")


# --------------------------------------------------------------------------
# edge-list format: first line "n <vertex count>", then one "u v" line per edge
# --------------------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphFormatError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "n":
        raise GraphFormatError(f"edge-list header must be 'n <count>', got {lines[0]!r}")
    try:
        n = int(head[1])
    except ValueError:
        raise GraphFormatError(f"bad vertex count {head[1]!r}") from None
    if n < 0:
        raise GraphFormatError(f"negative vertex count {n}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"edge line must be 'u v', got {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"non-integer endpoint in {ln!r}") from None
        if u == v:
            raise GraphFormatError(f"self-loop {u} {v} rejected")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"edge {u} {v} out of range for n={n}")
        edges.append((u, v))
    return make_graph(n, edges)


def to_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines += [f"{u} {v}" for u, v in g.sorted_edges]
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# connectivity structure
# --------------------------------------------------------------------------

def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Partition of the vertex set by reachability, each part sorted,
    parts ordered by smallest member."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        out.append(tuple(sorted(comp)))
    return out


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        raise EmptyGraphError("connectivity of the empty graph is undefined")
    return len(connected_components(g)) == 1


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph on the given vertices.

    Returns the subgraph (relabeled 0..k-1 in ascending original order) and
    the list mapping new index -> original vertex.
    """
    verts = sorted(set(vertices))
    for v in verts:
        g.check_vertex(v)
    index = {v: i for i, v in enumerate(verts)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return make_graph(len(verts), edges), verts


def disjoint_union(graphs: Iterable[Graph]) -> Graph:
    total = 0
    edges = []
    for g in graphs:
        edges += [(u + total, v + total) for u, v in g.sorted_edges]
        total += g.n
    return make_graph(total, edges)


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    e = (min(u, v), max(u, v))
    if e not in g.edges:
        raise ValueError(f"edge {e} not present")
    return Graph(g.n, g.edges - {e})


# --------------------------------------------------------------------------
# blocks (biconnected components) and the block-cut tree
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class BlockCutTree:
    """Blocks, cut vertices, and their bipartite incidence structure."""

    blocks: tuple[tuple[int, ...], ...]
    cut_vertices: tuple[int, ...]
    incidences: tuple[tuple[int, int], ...]  # (cut vertex, block index)

    @property
    def block_count(self) -> int:
        return len(self.blocks)


def block_cut_tree(g: Graph) -> BlockCutTree:
    """Decompose a connected graph into blocks (maximal subgraphs without an
    internal cut vertex) and cut vertices.

    A single vertex with no edges is reported as one isolated-vertex block.
    Raises on empty or disconnected input.
    """
    if g.n == 0:
        raise EmptyGraphError("block decomposition of the empty graph is undefined")
    if not is_connected(g):
        raise ValueError("graph is disconnected; split into components first")
    if g.n == 1:
        return BlockCutTree(((0,),), (), ())

    # Iterative depth-first search with discovery/low values and an edge stack;
    # a block is popped when a child subtree cannot reach above its parent.
    disc = [-1] * g.n
    low = [0] * g.n
    parent = [-1] * g.n
    cut = [False] * g.n
    edge_stack: list[tuple[int, int]] = []
    raw_blocks: list[list[tuple[int, int]]] = []

    timer = 0
    it_stack: list[tuple[int, Iterator[int]]] = []
    disc[0] = low[0] = timer
    timer += 1
    it_stack.append((0, iter(g.adj[0])))
    root_children = 0

    while it_stack:
        u, it = it_stack[-1]
        advanced = False
        for w in it:
            if disc[w] == -1:
                parent[w] = u
                edge_stack.append((u, w))
                disc[w] = low[w] = timer
                timer += 1
                it_stack.append((w, iter(g.adj[w])))
                if u == 0:
                    root_children += 1
                advanced = True
                break
            elif w != parent[u] and disc[w] < disc[u]:
                edge_stack.append((u, w))
                low[u] = min(low[u], disc[w])
        if advanced:
            continue
        it_stack.pop()
        if it_stack:
            p = it_stack[-1][0]
            low[p] = min(low[p], low[u])
            if low[u] >= disc[p]:
                # p separates u's subtree: pop one block
                blk = []
                while edge_stack:
                    e = edge_stack.pop()
                    blk.append(e)
                    if e == (p, u):
                        break
                raw_blocks.append(blk)
                if p != 0:
                    cut[p] = True
    if root_children >= 2:
        cut[0] = True

    blocks = []
    for blk in raw_blocks:
        verts = sorted({x for e in blk for x in e})
        blocks.append(tuple(verts))
    blocks.sort()
    cut_vertices = tuple(v for v in range(g.n) if cut[v])
    incidences = tuple(
        (v, bi) for bi, blk in enumerate(blocks) for v in blk if cut[v]
    )
    return BlockCutTree(tuple(blocks), cut_vertices, incidences)


def bridges(g: Graph) -> list[tuple[int, int]]:
    """Bridges of a connected graph: edges forming two-vertex blocks, sorted."""
    t = block_cut_tree(g)
    return sorted(blk for blk in t.blocks if len(blk) == 2)


# --------------------------------------------------------------------------
# twins
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class TwinClasses:
    """Twin pairs (vertices with identical neighborhoods outside the pair) and
    the size of a maximum matching in the graph they induce."""

    twin_pairs: frozenset  # frozenset of (u, v) tuples, u < v
    matching_bound: int
    # The partition underlying the matching bound; the twin relation is
    # transitive, so the pair graph is a disjoint union of cliques.
    classes: tuple[tuple[int, ...], ...] = field(compare=False, default=())


def twin_classes(g: Graph) -> TwinClasses:
    """Detect all twin pairs and compute the matching lower bound.

    Two vertices are twins when their neighborhoods agree after removing both
    vertices, which covers adjacent and non-adjacent twins uniformly.
    """
    nbr = [set(a) for a in g.adj]
    pairs = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if nbr[u] - {v} == nbr[v] - {u}:
                pairs.append((u, v))

    # Union-find over the pairs; transitivity makes each class a clique in the
    # twin-pair graph, so a maximum matching takes floor(size/2) per class.
    root = list(range(g.n))

    def find(x: int) -> int:
        while root[x] != x:
            root[x] = root[root[x]]
            x = root[x]
        return x

    for u, v in pairs:
        ru, rv = find(u), find(v)
        if ru != rv:
            root[max(ru, rv)] = min(ru, rv)
    members: dict[int, list[int]] = {}
    for v in range(g.n):
        members.setdefault(find(v), []).append(v)
    classes = tuple(
        tuple(sorted(c)) for c in sorted(members.values()) if len(c) >= 2
    )
    bound = sum(len(c) // 2 for c in classes)
    return TwinClasses(frozenset(pairs), bound, classes)
