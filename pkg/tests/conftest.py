import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conndim import Graph, make_graph


def _connected_mask(n: int, mask: int, pair_index) -> bool:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (u, v), idx in pair_index.items():
        if (mask >> idx) & 1:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
    return len({find(v) for v in range(n)}) == 1


def all_connected_graphs(n: int):
    """Every connected labeled graph on n vertices."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    pair_index = {p: i for i, p in enumerate(pairs)}
    out = []
    for mask in range(1 << len(pairs)):
        if _connected_mask(n, mask, pair_index):
            edges = [p for p, i in pair_index.items() if (mask >> i) & 1]
            out.append(make_graph(n, edges))
    return out


@pytest.fixture(scope="session")
def corpus():
    """All connected labeled graphs on 1..6 vertices, keyed by order."""
    by_n = {n: all_connected_graphs(n) for n in range(1, 7)}
    assert [len(by_n[n]) for n in range(1, 7)] == [1, 1, 4, 38, 728, 26704]
    return by_n
