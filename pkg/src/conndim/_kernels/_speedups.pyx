# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled unit-capacity max-flow kernel; same contract as pure.flow_many.

Vertex v splits into entry node v and exit node v+n joined by a unit arc, an
undirected edge {a,b} becomes arcs a_exit->b_entry and b_exit->a_entry, and
pair (s,t) is solved as max flow from s's exit node to t's entry node by
breadth-first augmentation.  Arc i^1 is the reverse of arc i.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memcpy


def kernel_name():
    return "compiled"


def flow_many(int n, edges, pairs):
    cdef int nn = 2 * n
    cdef int m = len(edges)
    cdef int n_arcs = 2 * (n + 2 * m)
    cdef int n_pairs = len(pairs)

    cdef int *arc_to = <int *> malloc(n_arcs * sizeof(int))
    cdef int *arc_cap = <int *> malloc(n_arcs * sizeof(int))
    cdef int *init_cap = <int *> malloc(n_arcs * sizeof(int))
    cdef int *deg = <int *> malloc(nn * sizeof(int))
    cdef int *adj_start = <int *> malloc((nn + 1) * sizeof(int))
    cdef int *adj_arc = <int *> malloc(n_arcs * sizeof(int))
    cdef int *parent = <int *> malloc(nn * sizeof(int))
    cdef int *queue = <int *> malloc(nn * sizeof(int))
    cdef int *pair_buf = <int *> malloc(2 * max(n_pairs, 1) * sizeof(int))
    cdef int *res_buf = <int *> malloc(max(n_pairs, 1) * sizeof(int))

    if (arc_to == NULL or arc_cap == NULL or init_cap == NULL or deg == NULL
            or adj_start == NULL or adj_arc == NULL or parent == NULL
            or queue == NULL or pair_buf == NULL or res_buf == NULL):
        free(arc_to); free(arc_cap); free(init_cap); free(deg)
        free(adj_start); free(adj_arc); free(parent); free(queue)
        free(pair_buf); free(res_buf)
        raise MemoryError()

    cdef int i, a, b, arc_id
    try:
        # ---- build the arc table (Python loop: reads Python tuples) ----
        arc_id = 0
        for i in range(n):
            arc_to[arc_id] = i + n; arc_cap[arc_id] = 1; arc_id += 1
            arc_to[arc_id] = i;     arc_cap[arc_id] = 0; arc_id += 1
        for a, b in edges:
            arc_to[arc_id] = b;     arc_cap[arc_id] = 1; arc_id += 1
            arc_to[arc_id] = a + n; arc_cap[arc_id] = 0; arc_id += 1
            arc_to[arc_id] = a;     arc_cap[arc_id] = 1; arc_id += 1
            arc_to[arc_id] = b + n; arc_cap[arc_id] = 0; arc_id += 1
        for i, (a, b) in enumerate(pairs):
            pair_buf[2 * i] = a
            pair_buf[2 * i + 1] = b

        with nogil:
            _solve(n, nn, m, n_arcs, n_pairs, arc_to, arc_cap, init_cap, deg,
                   adj_start, adj_arc, parent, queue, pair_buf, res_buf)

        return [res_buf[i] for i in range(n_pairs)]
    finally:
        free(arc_to); free(arc_cap); free(init_cap); free(deg)
        free(adj_start); free(adj_arc); free(parent); free(queue)
        free(pair_buf); free(res_buf)


cdef void _solve(int n, int nn, int m, int n_arcs, int n_pairs, int *arc_to,
                 int *arc_cap, int *init_cap, int *deg, int *adj_start,
                 int *adj_arc, int *parent, int *queue, int *pair_buf,
                 int *res_buf) noexcept nogil:
    cdef int i, p, u, w, a, k, src, sink, value, qh, qt, found, tail

    # tail node of each arc: forward internal arcs start at v, reverse at v+n;
    # edge arcs alternate exit/entry tails in the order they were added.
    memcpy(init_cap, arc_cap, n_arcs * sizeof(int))
    for i in range(nn):
        deg[i] = 0
    for i in range(n_arcs):
        deg[_tail(i, n, arc_to)] += 1
    adj_start[0] = 0
    for i in range(nn):
        adj_start[i + 1] = adj_start[i] + deg[i]
        deg[i] = 0
    for i in range(n_arcs):
        tail = _tail(i, n, arc_to)
        adj_arc[adj_start[tail] + deg[tail]] = i
        deg[tail] += 1

    for p in range(n_pairs):
        src = pair_buf[2 * p] + n
        sink = pair_buf[2 * p + 1]
        memcpy(arc_cap, init_cap, n_arcs * sizeof(int))
        value = 0
        while True:
            for i in range(nn):
                parent[i] = -1
            parent[src] = -2
            queue[0] = src
            qh = 0
            qt = 1
            found = 0
            while qh < qt:
                u = queue[qh]
                qh += 1
                if u == sink:
                    found = 1
                    break
                for k in range(adj_start[u], adj_start[u + 1]):
                    a = adj_arc[k]
                    w = arc_to[a]
                    if arc_cap[a] > 0 and parent[w] == -1:
                        parent[w] = a
                        queue[qt] = w
                        qt += 1
            if found == 0:
                break
            u = sink
            while u != src:
                a = parent[u]
                arc_cap[a] -= 1
                arc_cap[a ^ 1] += 1
                u = arc_to[a ^ 1]
            value += 1
        res_buf[p] = value


cdef inline int _tail(int a, int n, int *arc_to) noexcept nogil:
    # the tail of arc a is the head of its partner arc a^1
    return arc_to[a ^ 1]
