"""Exact and approximate dimension solvers.

The exact solver is a branch-and-bound over the pair-coverage set-cover
instance: branch on an uncovered pair with the fewest remaining covering
vertices, prune with the best known lower bound and a covering-rate bound,
and fix all but the lowest-indexed member of every twin class into the
solution up front (twin swaps are automorphisms, so this loses no optima).
"""

from __future__ import annotations

from dataclasses import dataclass

from .connectivity import (INF, KappaMatrix, distance_matrix, kappa_matrix,
                           value_to_json)
from .families import disjoint_union_cdim
from .graphs import (EmptyGraphError, Graph, block_cut_tree, bridges,
                     connected_components, induced_subgraph, is_connected,
                     remove_edge, twin_classes)
from .resolver import PairCoverage, is_resolving, pair_coverage

DEFAULT_BUDGET = 10 ** 8
FORCING_GATE = 16


class BudgetExceeded(Exception):
    """Raised when a search exceeds its node budget without an exact answer."""


@dataclass(frozen=True)
class BoundsReport:
    """All lower bounds plus the greedy upper bound for a connected graph."""

    delta_log_bound: int
    delta_exact_bound: int
    twin_matching_bound: int
    blocks_bound: int
    best_lower: int
    greedy_upper: int

    def to_json_obj(self) -> dict:
        return {
            "delta_log_bound": self.delta_log_bound,
            "delta_exact_bound": self.delta_exact_bound,
            "twin_matching_bound": self.twin_matching_bound,
            "blocks_bound": self.blocks_bound,
            "best_lower": self.best_lower,
            "greedy_upper": self.greedy_upper,
        }


@dataclass(frozen=True)
class DimensionResult:
    value: int
    basis: tuple[int, ...]
    method: str  # "exact" | "greedy-upper" | "decomposition"
    verified: bool
    conclusive: bool = True
    bounds: BoundsReport | None = None

    def to_json_obj(self) -> dict:
        return {
            "value": self.value,
            "basis": list(self.basis),
            "method": self.method,
            "bounds": None if self.bounds is None else self.bounds.to_json_obj(),
            "conclusive": self.conclusive,
        }


# --------------------------------------------------------------------------
# greedy cover
# --------------------------------------------------------------------------

def _greedy_complete(cov: PairCoverage, start: tuple[int, ...] = ()) -> list[int]:
    """Extend `start` greedily (largest gain, lowest index on ties) until all
    pairs are covered."""
    chosen = list(start)
    mask = 0
    for w in chosen:
        mask |= cov.cover[w]
    full = cov.full_mask
    while mask != full:
        best_w, best_gain = -1, 0
        for w in range(cov.n):
            if w in chosen:
                continue
            gain = (cov.cover[w] & ~mask).bit_count()
            if gain > best_gain:
                best_w, best_gain = w, gain
        # a vertex always covers its own untouched pairs, so progress is
        # guaranteed while anything remains uncovered
        chosen.append(best_w)
        mask |= cov.cover[best_w]
    return chosen


# --------------------------------------------------------------------------
# bounds
# --------------------------------------------------------------------------

def _bounds_from(g: Graph, cov: PairCoverage) -> BoundsReport:
    n = g.n
    delta = g.max_degree()
    if delta >= 2:
        k = 1
        while 2 * delta ** k < n + 1:
            k += 1
        delta_log = k
    else:
        # a connected graph with maximum degree 1 is a single edge
        delta_log = 1
    k = 1
    while n > k + delta ** k:
        k += 1
    delta_exact = k
    twins = twin_classes(g).matching_bound
    blocks = block_cut_tree(g).block_count
    blocks_bound = (blocks + 2) // 2  # ceil((blocks+1)/2)
    greedy = len(_greedy_complete(cov))
    best = max(delta_log, delta_exact, twins, blocks_bound)
    return BoundsReport(delta_log, delta_exact, twins, blocks_bound, best, greedy)


def lower_bounds(g: Graph, threads: int = 1) -> BoundsReport:
    """All lower bounds and the greedy upper bound; connected graphs with at
    least two vertices only."""
    if g.n < 2:
        raise ValueError("bounds need a graph on at least two vertices")
    if not is_connected(g):
        raise ValueError("bounds are defined for connected graphs")
    km = kappa_matrix(g, threads=threads)
    return _bounds_from(g, pair_coverage(km))


# --------------------------------------------------------------------------
# exact branch-and-bound
# --------------------------------------------------------------------------

class _Search:
    def __init__(self, cov: PairCoverage, budget: int):
        self.cov = cov
        self.budget = budget
        self.nodes = 0
        self.best_size = 0
        self.best: list[int] = []
        self.stop_at = 0  # proven-optimal threshold

    def run(self, forced: tuple[int, ...], lower: int, upper_start: list[int]):
        self.best = list(upper_start)
        self.best_size = len(upper_start)
        self.stop_at = lower
        if self.best_size <= lower:
            return  # greedy already optimal
        mask = 0
        for w in forced:
            mask |= self.cov.cover[w]
        try:
            self._dfs(list(forced), mask, 0)
        except _OptimalFound:
            pass

    def _dfs(self, chosen: list[int], mask: int, excluded: int) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(f"search exceeded {self.budget} nodes")
        cov = self.cov
        full = cov.full_mask
        if mask == full:
            if len(chosen) < self.best_size:
                self.best_size = len(chosen)
                self.best = sorted(chosen)
                if self.best_size <= self.stop_at:
                    raise _OptimalFound
            return
        if len(chosen) + 1 >= self.best_size:
            return
        uncovered = full & ~mask
        # lower bound: every added vertex covers at most max_gain new pairs
        max_gain = 0
        for w in range(cov.n):
            if not (excluded >> w) & 1:
                gain = (cov.cover[w] & uncovered).bit_count()
                if gain > max_gain:
                    max_gain = gain
        if max_gain == 0:
            return
        need = -(-uncovered.bit_count() // max_gain)
        if len(chosen) + need >= self.best_size:
            return
        # branch on the uncovered pair with the fewest allowed coverers
        best_pair_bit = -1
        best_cands: list[int] | None = None
        u = uncovered
        while u:
            bit = u & -u
            u &= u - 1
            cands = [w for w in range(cov.n)
                     if cov.cover[w] & bit and not (excluded >> w) & 1]
            if best_cands is None or len(cands) < len(best_cands):
                best_pair_bit, best_cands = bit, cands
                if len(cands) <= 1:
                    break
        if not best_cands:
            return
        new_excluded = excluded
        for w in best_cands:
            chosen.append(w)
            self._dfs(chosen, mask | cov.cover[w], new_excluded)
            chosen.pop()
            new_excluded |= 1 << w


class _OptimalFound(Exception):
    pass


def _forced_landmarks(g: Graph) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """All-but-lowest member of each twin class, plus the classes themselves."""
    classes = twin_classes(g).classes
    forced = []
    for c in classes:
        forced.extend(c[1:])
    return tuple(sorted(forced)), classes


def _solve_cover(g: Graph, matrix, budget: int, lower: int,
                 use_twins: bool = True) -> tuple[int, tuple[int, ...], bool, int]:
    """Minimum resolving set over an arbitrary value matrix.

    Returns (value, basis, conclusive, nodes).  When the budget trips, value
    is the incumbent upper bound and its basis is still resolving.
    """
    cov = pair_coverage(matrix)
    forced = _forced_landmarks(g)[0] if use_twins else ()
    greedy = _greedy_complete(cov, forced)
    search = _Search(cov, budget)
    try:
        search.run(forced, lower, greedy)
    except BudgetExceeded:
        return search.best_size, tuple(sorted(search.best)), False, search.nodes
    return search.best_size, tuple(sorted(search.best)), True, search.nodes


def _cdim_connected(g: Graph, budget: int, threads: int) -> DimensionResult:
    if g.n == 1:
        return DimensionResult(0, (), "exact", True)
    km = kappa_matrix(g, threads=threads)
    cov = pair_coverage(km)
    bounds = _bounds_from(g, cov)
    value, basis, conclusive, _ = _solve_cover(g, km, budget, bounds.best_lower)
    verified = bool(is_resolving(km, basis))
    return DimensionResult(value, basis, "exact", verified, conclusive, bounds)


def _combine_components(g: Graph, solve_part,
                        method: str = "exact") -> DimensionResult:
    """Disjoint-union composition: solve each component and apply the
    isolated-count formula, assembling a concrete basis."""
    comps = connected_components(g)
    isolated = [c[0] for c in comps if len(c) == 1]
    basis: list[int] = []
    conclusive = True
    entries = []
    for comp in comps:
        if len(comp) == 1:
            entries.append((1, 0))
            continue
        sub, back = induced_subgraph(g, comp)
        r = solve_part(sub)
        conclusive = conclusive and r.conclusive
        entries.append((len(comp), r.value))
        basis.extend(back[v] for v in r.basis)
    total = disjoint_union_cdim(entries)
    # all but one isolated vertex must be landmarks
    basis.extend(isolated[:-1] if isolated else [])
    basis = sorted(basis)
    km = kappa_matrix(g)
    verified = bool(is_resolving(km, basis))
    return DimensionResult(total, tuple(basis), method, verified, conclusive)


def cdim_exact(g: Graph, budget: int = DEFAULT_BUDGET,
               threads: int = 1) -> DimensionResult:
    """Connectivity dimension with a resolving-basis certificate.

    Disconnected graphs are split into components and recombined with the
    disjoint-union formula.  If the node budget trips, the result is marked
    inconclusive and carries the best verified upper bound found.
    """
    if g.n == 0:
        raise EmptyGraphError("dimension of the empty graph is undefined")
    if is_connected(g):
        return _cdim_connected(g, budget, threads)
    return _combine_components(
        g, lambda sub: _cdim_connected(sub, budget, threads))


def cdim_direct(g: Graph, budget: int = DEFAULT_BUDGET,
                threads: int = 1) -> DimensionResult:
    """Set-cover solve on the whole graph with no component splitting.

    Slower than cdim_exact on disconnected input but independent of the
    disjoint-union formula, which makes it the cross-check for it.
    """
    if g.n == 0:
        raise EmptyGraphError("dimension of the empty graph is undefined")
    if g.n == 1:
        return DimensionResult(0, (), "exact", True)
    km = kappa_matrix(g, threads=threads)
    value, basis, conclusive, _ = _solve_cover(g, km, budget, 1)
    verified = bool(is_resolving(km, basis))
    return DimensionResult(value, basis, "exact", verified, conclusive)


def cdim_greedy(g: Graph, threads: int = 1) -> DimensionResult:
    """Greedy set-cover upper bound; the returned set is verified resolving."""
    if g.n == 0:
        raise EmptyGraphError("dimension of the empty graph is undefined")
    if g.n == 1:
        return DimensionResult(0, (), "greedy-upper", True)
    km = kappa_matrix(g, threads=threads)
    cov = pair_coverage(km)
    chosen = tuple(sorted(_greedy_complete(cov)))
    verified = bool(is_resolving(km, chosen))
    bounds = _bounds_from(g, cov) if is_connected(g) else None
    return DimensionResult(len(chosen), chosen, "greedy-upper", verified,
                           True, bounds)


# --------------------------------------------------------------------------
# basis enumeration and the all-ones forcing property
# --------------------------------------------------------------------------

def enumerate_bases(g: Graph, budget: int = DEFAULT_BUDGET,
                    threads: int = 1) -> list[tuple[int, ...]]:
    """Every minimum resolving set, sorted.

    The search runs over twin-normalized sets (all but the lowest member of
    each twin class included) and re-expands each hit across the automorphic
    per-class choices of which member to drop.
    """
    from itertools import combinations, product

    if g.n == 0:
        raise EmptyGraphError("no bases for the empty graph")
    base = cdim_exact(g, budget=budget, threads=threads)
    if not base.conclusive:
        raise BudgetExceeded("exact solve inconclusive; cannot enumerate bases")
    k = base.value
    km = kappa_matrix(g, threads=threads)
    cov = pair_coverage(km)
    forced, classes = _forced_landmarks(g)
    forced_mask = 0
    for w in forced:
        forced_mask |= cov.cover[w]
    free = [v for v in range(g.n) if v not in set(forced)]
    slots = k - len(forced)

    nodes = 0
    normalized = []
    for extra in combinations(free, slots):
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded("basis enumeration exceeded the node budget")
        mask = forced_mask
        for w in extra:
            mask |= cov.cover[w]
        if mask == cov.full_mask:
            normalized.append(set(forced) | set(extra))

    out = set()
    for B in normalized:
        choices = []
        rest = set(B)
        for c in classes:
            cs = set(c)
            inside = cs & B
            rest -= cs
            if inside == cs:
                choices.append([tuple(sorted(cs))])
            else:
                # exactly the lowest member is missing; any member may be the
                # excluded one (twin swaps are automorphisms)
                choices.append([tuple(sorted(cs - {m})) for m in sorted(cs)])
        for combo in product(*choices):
            basis = tuple(sorted(set().union(rest, *map(set, combo))))
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded("basis enumeration exceeded the node budget")
            if not cov.covers(basis):
                raise AssertionError(
                    f"twin-expanded set {basis} unexpectedly fails to resolve")
            out.add(basis)
    return sorted(out)


def _forcing_info(g: Graph, km: KappaMatrix | None = None,
                  budget: int = DEFAULT_BUDGET):
    """(forces, witness_basis, all_ones_vertex).

    forces is True when every minimum resolving set leaves some non-landmark
    vertex whose vector is all ones; the witness basis is then any basis and
    all_ones_vertex its unique all-ones vertex.  When forces is False the
    witness basis is one with no all-ones vertex and the vertex is None.
    A single vertex has the empty basis and vacuously forces.
    """
    if g.n == 1:
        return True, (), 0
    if km is None:
        km = kappa_matrix(g)
    bases = enumerate_bases(g, budget=budget)
    first_forcing = None
    for B in bases:
        ones = [v for v in range(g.n)
                if v not in set(B)
                and all(km.value(v, w) == 1 for w in B)]
        if len(ones) > 1:
            raise AssertionError(
                f"two all-ones vertices {ones} under {B}; they would collide")
        if not ones:
            return False, B, None
        if first_forcing is None:
            first_forcing = (B, ones[0])
    assert first_forcing is not None
    return True, first_forcing[0], first_forcing[1]


def forces_one_representation(g: Graph, budget: int = DEFAULT_BUDGET,
                              gate: int = FORCING_GATE) -> bool:
    """Whether every minimum resolving set leaves a vertex seeing only ones.

    Enumerates all bases, so it is gated to small graphs; past the gate a
    BudgetExceeded is raised for the caller to handle.
    """
    if g.n < 2:
        raise ValueError("forcing is defined for graphs on at least two vertices")
    if not is_connected(g):
        raise ValueError("forcing is defined for connected graphs")
    if g.n > gate:
        raise BudgetExceeded(
            f"forcing check gated to {gate} vertices (got {g.n})")
    return _forcing_info(g, budget=budget)[0]


# --------------------------------------------------------------------------
# bridge decomposition
# --------------------------------------------------------------------------

def _decompose_connected(g: Graph, budget: int, gate: int):
    """Recursive bridge split; returns (value, basis, conclusive)."""
    if g.n == 1:
        return 0, (), True
    br = bridges(g)
    if not br:
        r = cdim_exact(g, budget=budget)
        return r.value, r.basis, r.conclusive
    u, v = br[0]
    parts = connected_components(remove_edge(g, u, v))
    assert len(parts) == 2
    part_u = next(p for p in parts if u in p)
    part_v = next(p for p in parts if v in p)

    def solve(part):
        sub, back = induced_subgraph(g, part)
        val, basis, ok = _decompose_connected(sub, budget, gate)
        if sub.n > gate:
            raise _GateTrip
        forces, wit_basis, ones = _forcing_info(sub, budget=budget)
        return val, ok, forces, [back[w] for w in wit_basis], \
            None if ones is None else back[ones]

    val_u, ok_u, f_u, basis_u, ones_u = solve(part_u)
    val_v, ok_v, f_v, basis_v, ones_v = solve(part_v)
    value = val_u + val_v + (1 if f_u and f_v else 0)
    basis = basis_u + basis_v
    if f_u and f_v:
        basis.append(ones_u)
    return value, tuple(sorted(basis)), ok_u and ok_v


class _GateTrip(Exception):
    pass


def cdim_decompose(g: Graph, budget: int = DEFAULT_BUDGET,
                   gate: int = FORCING_GATE) -> DimensionResult:
    """Dimension by recursive bridge splitting.

    Each bridge contributes the two part dimensions plus one exactly when
    both parts force an all-ones representation; a single-vertex part has
    dimension zero and forces.  Parts too large for the forcing check make
    the whole call fall back to the exact solver.
    """
    if g.n == 0:
        raise EmptyGraphError("dimension of the empty graph is undefined")
    if not is_connected(g):
        return _combine_components(
            g, lambda sub: cdim_decompose(sub, budget=budget, gate=gate),
            method="decomposition")
    try:
        value, basis, conclusive = _decompose_connected(g, budget, gate)
    except _GateTrip:
        return cdim_exact(g, budget=budget)
    km = kappa_matrix(g)
    verified = bool(is_resolving(km, basis))
    if not verified:
        raise AssertionError(
            "decomposition produced a non-resolving basis; this is a bug")
    return DimensionResult(value, basis, "decomposition", verified, conclusive)


# --------------------------------------------------------------------------
# metric dimension
# --------------------------------------------------------------------------

def mdim_exact(g: Graph, budget: int = DEFAULT_BUDGET,
               threads: int = 1) -> DimensionResult:
    """Minimum landmark set distinguishing all vertices by shortest-path
    distance, via the same set-cover search on the distance matrix."""
    if g.n == 0:
        raise EmptyGraphError("dimension of the empty graph is undefined")
    if not is_connected(g):
        raise ValueError("metric dimension is defined for connected graphs")
    if g.n == 1:
        return DimensionResult(0, (), "exact", True)
    dm = distance_matrix(g)
    lower = max(1, twin_classes(g).matching_bound)
    value, basis, conclusive, _ = _solve_cover(g, dm, budget, lower)
    verified = bool(is_resolving(dm, basis))
    return DimensionResult(value, basis, "exact", verified, conclusive)
