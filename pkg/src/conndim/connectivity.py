"""Local connectivity: kappa(u,v) is the maximum number of u-v paths that are
pairwise disjoint except at their endpoints, infinity for u = v, and 0 across
components.  Computed as unit-capacity max flow on the vertex-split network.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import _kernels
from .graphs import EmptyGraphError, Graph


class _Infinity:
    """Singleton sentinel strictly greater than every integer.

    Serializes as the string "inf"; never an in-band integer.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return isinstance(other, _Infinity)

    def __hash__(self):
        return hash("conndim-infinity")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return isinstance(other, _Infinity)

    def __gt__(self, other):
        return not isinstance(other, _Infinity)

    def __ge__(self, other):
        return True

    def __repr__(self):
        return "inf"


INF = _Infinity()

# A kappa value is either a non-negative int or INF.
KappaValue = object


def value_to_json(v) -> object:
    """int values pass through; the infinity sentinel becomes "inf"."""
    return "inf" if isinstance(v, _Infinity) else v


@dataclass(frozen=True)
class KappaMatrix:
    """Symmetric table of local connectivities with infinity on the diagonal.

    Off-diagonal entries are plain ints internally; `value` adds the sentinel.
    """

    n: int
    table: tuple[tuple[int, ...], ...]

    def value(self, u: int, v: int):
        if u == v:
            return INF
        return self.table[u][v]

    def to_json_obj(self) -> dict:
        rows = []
        for u in range(self.n):
            rows.append(["inf" if u == v else self.table[u][v]
                         for v in range(self.n)])
        return {"n": self.n, "kappa": rows}


@dataclass(frozen=True)
class DistanceMatrix:
    """Shortest-path distances of a connected graph; zeros on the diagonal.

    Duck-types KappaMatrix's `value` so resolving-set machinery can run on
    either notion of separation.
    """

    n: int
    table: tuple[tuple[int, ...], ...]

    def value(self, u: int, v: int):
        return self.table[u][v]


def local_connectivity(g: Graph, u: int, v: int):
    """kappa(u, v): INF when u = v, else the max-flow path count."""
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        return INF
    return _kernels.flow_many(g.n, g.sorted_edges, [(u, v)])[0]


def kappa_matrix(g: Graph, threads: int = 1) -> KappaMatrix:
    """All-pairs local connectivity.

    `threads` splits the pair list across workers for the compiled kernel's
    benefit; results are reassembled in order, so output never depends on it.
    """
    n = g.n
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if threads > 1 and len(pairs) >= 64:
        chunks = [pairs[i::threads] for i in range(threads)]
        with ThreadPoolExecutor(max_workers=threads) as ex:
            outs = list(ex.map(
                lambda ch: _kernels.flow_many(n, g.sorted_edges, ch), chunks))
        flat = {}
        for ch, vals in zip(chunks, outs):
            for p, k in zip(ch, vals):
                flat[p] = k
        values = [flat[p] for p in pairs]
    else:
        values = _kernels.flow_many(n, g.sorted_edges, pairs)

    table = [[0] * n for _ in range(n)]
    for (u, v), k in zip(pairs, values):
        table[u][v] = table[v][u] = k
    return KappaMatrix(n, tuple(tuple(row) for row in table))


def distance_matrix(g: Graph) -> DistanceMatrix:
    """Breadth-first all-pairs distances; requires a connected graph."""
    if g.n == 0:
        raise EmptyGraphError("distance matrix of the empty graph is undefined")
    n = g.n
    table = []
    for s in range(n):
        dist = [-1] * n
        dist[s] = 0
        frontier = [s]
        while frontier:
            nxt = []
            for u in frontier:
                for w in g.adj[u]:
                    if dist[w] < 0:
                        dist[w] = dist[u] + 1
                        nxt.append(w)
            frontier = nxt
        if any(d < 0 for d in dist):
            raise ValueError("graph is disconnected; distances are undefined")
        table.append(tuple(dist))
    return DistanceMatrix(n, tuple(table))


def uniform_connectivity(km: KappaMatrix):
    """The single k with kappa(u,v) = k for every pair, when it exists.

    Returns None otherwise.  Requires at least two vertices.
    """
    if km.n < 2:
        raise ValueError("uniform connectivity needs at least two vertices")
    k = km.table[0][1]
    for u in range(km.n):
        for v in range(u + 1, km.n):
            if km.table[u][v] != k:
                return None
    return k


def uniformly_connected_vertices(km: KappaMatrix) -> dict:
    """Per-vertex variant: v maps to k when row v is constant k off the
    diagonal, else to None."""
    if km.n < 2:
        raise ValueError("per-vertex uniform connectivity needs two vertices")
    out = {}
    for v in range(km.n):
        row = [km.table[v][w] for w in range(km.n) if w != v]
        out[v] = row[0] if all(x == row[0] for x in row) else None
    return out
