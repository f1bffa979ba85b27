"""3-CNF to graph reduction with predicted local connectivities.

Each variable becomes a 5-vertex gadget (complete minus the edge between
roles 4 and 5), each clause a 6-vertex gadget (complete minus the three
edges among roles 1, 2 and 6).  Roles 1 and 2 are the only vertices with
outside edges: literal edges tie clause gateways to the gadgets of their
variables, and every pair of clauses is tied gateway-to-gateway.  The
resulting graph on 5n + 6m vertices has dimension 2(m+n) exactly when a
normalized landmark family derived from a satisfying assignment resolves
it, which is what decide_sat searches for.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .connectivity import KappaMatrix, kappa_matrix
from .graphs import Graph, is_connected, make_graph
from .resolver import is_resolving


@dataclass(frozen=True)
class CnfFormula:
    """3-CNF over variables 1..n: clauses are signed triples over three
    distinct variables, and every variable occurs somewhere."""

    n: int
    clauses: tuple[tuple[int, int, int], ...]
    warnings: tuple[str, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "clauses",
                           tuple(tuple(c) for c in self.clauses))
        if self.n < 1:
            raise ValueError("formula needs at least one variable")
        if not self.clauses:
            raise ValueError("formula needs at least one clause")
        seen = set()
        for idx, clause in enumerate(self.clauses, start=1):
            if len(clause) != 3:
                raise ValueError(f"clause {idx}: expected 3 literals, "
                                 f"got {len(clause)}")
            for lit in clause:
                if not isinstance(lit, int) or lit == 0:
                    raise ValueError(f"clause {idx}: literals are nonzero "
                                     f"integers, got {lit!r}")
                if abs(lit) > self.n:
                    raise ValueError(f"clause {idx}: variable {abs(lit)} "
                                     f"exceeds declared count {self.n}")
            names = {abs(lit) for lit in clause}
            if len(names) != 3:
                raise ValueError(f"clause {idx}: variables must be three "
                                 "distinct names (no duplicate or "
                                 "complementary literals)")
            seen |= names
        missing = sorted(set(range(1, self.n + 1)) - seen)
        if missing:
            raise ValueError(f"variables never used: {missing}")

    @property
    def m(self) -> int:
        return len(self.clauses)


def assignment_satisfies(f: CnfFormula, assignment) -> bool:
    if len(assignment) != f.n:
        raise ValueError(f"assignment length {len(assignment)} != {f.n}")
    return all(any((lit > 0) == bool(assignment[abs(lit) - 1])
                   for lit in clause)
               for clause in f.clauses)


def parse_dimacs(text: str) -> CnfFormula:
    """DIMACS CNF parser; unused declared variables are renumbered away
    densely, recorded in the formula's warnings."""
    declared_n = declared_m = None
    literals: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if declared_n is not None:
                raise ValueError(f"line {lineno}: duplicate problem line")
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"line {lineno}: malformed problem line "
                                 f"{line!r}, expected 'p cnf <vars> <clauses>'")
            try:
                declared_n, declared_m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ValueError(f"line {lineno}: non-integer counts in "
                                 f"problem line") from None
            continue
        if declared_n is None:
            raise ValueError(f"line {lineno}: clause data before the "
                             "problem line")
        for tok in line.split():
            try:
                literals.append(int(tok))
            except ValueError:
                raise ValueError(f"line {lineno}: bad token {tok!r}") from None
    if declared_n is None:
        raise ValueError("missing 'p cnf' problem line")

    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    for lit in literals:
        if lit == 0:
            clauses.append(tuple(current))
            current = []
        else:
            current.append(lit)
    if current:
        raise ValueError(f"clause {len(clauses) + 1} not terminated by 0")
    if len(clauses) != declared_m:
        raise ValueError(f"header declares {declared_m} clauses, "
                         f"found {len(clauses)}")
    for idx, clause in enumerate(clauses, start=1):
        if len(clause) != 3:
            raise ValueError(f"clause {idx}: expected 3 literals, "
                             f"got {len(clause)}")
        if any(abs(lit) > declared_n for lit in clause):
            raise ValueError(f"clause {idx}: variable beyond declared "
                             f"count {declared_n}")
        if len({abs(lit) for lit in clause}) != 3:
            raise ValueError(f"clause {idx}: variables must be three "
                             "distinct names (no duplicate or "
                             "complementary literals)")

    used = sorted({abs(lit) for clause in clauses for lit in clause})
    warnings: tuple[str, ...] = ()
    if len(used) != declared_n:
        renum = {old: new for new, old in enumerate(used, start=1)}
        clauses = [tuple((1 if lit > 0 else -1) * renum[abs(lit)]
                         for lit in clause) for clause in clauses]
        warnings = (f"{declared_n} variables declared but only {len(used)} "
                    "used; renumbered densely",)
        declared_n = len(used)
    return CnfFormula(declared_n, tuple(clauses), warnings)


@dataclass(frozen=True)
class GadgetMap:
    """Vertex layout of a reduction graph plus per-variable literal counts.

    Variable gadget vertices come first, five per variable, then six per
    clause; within a gadget the role number orders them.  alpha and beta
    are the positive / negative occurrence counts per variable, and the
    clause list is retained so occurrence lookups and graph rebuilds need
    no separate formula object.
    """

    n_vars: int
    n_clauses: int
    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    clauses: tuple[tuple[int, int, int], ...]

    @property
    def total_vertices(self) -> int:
        return 5 * self.n_vars + 6 * self.n_clauses

    def variable_vertex(self, i: int, role: int) -> int:
        if not 1 <= i <= self.n_vars:
            raise ValueError(f"variable index {i} out of range")
        if not 1 <= role <= 5:
            raise ValueError(f"variable role {role} out of range 1..5")
        return 5 * (i - 1) + (role - 1)

    def clause_vertex(self, j: int, role: int) -> int:
        if not 1 <= j <= self.n_clauses:
            raise ValueError(f"clause index {j} out of range")
        if not 1 <= role <= 6:
            raise ValueError(f"clause role {role} out of range 1..6")
        return 5 * self.n_vars + 6 * (j - 1) + (role - 1)

    def locate(self, v: int) -> tuple[str, int, int]:
        """(kind, index, role) for a vertex: ('var', i, 1..5) or
        ('clause', j, 1..6)."""
        if not 0 <= v < self.total_vertices:
            raise ValueError(f"vertex {v} is not labeled; graph has "
                             f"{self.total_vertices} vertices")
        if v < 5 * self.n_vars:
            return "var", v // 5 + 1, v % 5 + 1
        v -= 5 * self.n_vars
        return "clause", v // 6 + 1, v % 6 + 1

    def label_of(self, v: int) -> str:
        kind, idx, role = self.locate(v)
        return f"{kind}{idx}:{role}"

    def occurrence(self, i: int, j: int) -> int:
        """+1 / -1 / 0 as variable i occurs positively / negatively / not
        at all in clause j."""
        if not 1 <= j <= self.n_clauses:
            raise ValueError(f"clause index {j} out of range")
        for lit in self.clauses[j - 1]:
            if abs(lit) == i:
                return 1 if lit > 0 else -1
        return 0


def build_reduction(f: CnfFormula) -> tuple[Graph, GadgetMap]:
    n, m = f.n, f.m
    alpha = [0] * (n + 1)
    beta = [0] * (n + 1)
    for clause in f.clauses:
        for lit in clause:
            if lit > 0:
                alpha[lit] += 1
            else:
                beta[-lit] += 1
    gmap = GadgetMap(n, m, tuple(alpha[1:]), tuple(beta[1:]), f.clauses)
    X, C = gmap.variable_vertex, gmap.clause_vertex

    edges = []
    for i in range(1, n + 1):
        for a in range(1, 6):
            for b in range(a + 1, 6):
                if (a, b) != (4, 5):
                    edges.append((X(i, a), X(i, b)))
    for j in range(1, m + 1):
        for a in range(1, 7):
            for b in range(a + 1, 7):
                if (a, b) not in ((1, 2), (1, 6), (2, 6)):
                    edges.append((C(j, a), C(j, b)))
    for j, clause in enumerate(f.clauses, start=1):
        for lit in clause:
            i = abs(lit)
            if lit > 0:
                edges += [(C(j, 1), X(i, 1)), (C(j, 2), X(i, 1)),
                          (C(j, 2), X(i, 2))]
            else:
                edges += [(C(j, 1), X(i, 1)), (C(j, 1), X(i, 2)),
                          (C(j, 2), X(i, 2))]
    for j in range(1, m + 1):
        for k in range(j + 1, m + 1):
            edges += [(C(j, 1), C(k, 1)), (C(j, 1), C(k, 2)),
                      (C(j, 2), C(k, 1)), (C(j, 2), C(k, 2))]

    g = make_graph(gmap.total_vertices, edges)
    assert is_connected(g), "reduction graph must be connected"
    return g, gmap


@dataclass(frozen=True)
class Prediction:
    """Exact value or strict lower bound for one local connectivity."""

    kind: str  # "exact" | "greater_than"
    value: int

    def holds_for(self, actual: int) -> bool:
        return actual == self.value if self.kind == "exact" \
            else actual > self.value

    def to_json_obj(self) -> dict:
        return {"kind": self.kind, "value": self.value}


def predicted_kappa(gmap: GadgetMap, p: int, q: int) -> Prediction:
    """Closed-form local connectivity between two labeled gadget vertices.

    Within a gadget the role pair decides everything; across gadgets any
    role-3-or-higher vertex is pinched behind its two gateways, and the
    gateway-to-gateway clause/variable values follow the occurrence counts
    of the variable (with corrections depending on which gateway and on
    whether the variable occurs in the clause at all).
    """
    if p == q:
        raise ValueError("need two distinct vertices")
    kp, ip, rp = gmap.locate(p)
    kq, iq, rq = gmap.locate(q)

    if kp == kq and ip == iq:
        a, b = sorted((rp, rq))
        if kp == "var":
            if (a, b) == (1, 2):
                return Prediction("greater_than", 4)
            if (a, b) in ((1, 3), (2, 3)):
                return Prediction("exact", 4)
            return Prediction("exact", 3)
        if (a, b) == (1, 2):
            return Prediction("greater_than", 5)
        if 3 <= a and b <= 5:
            return Prediction("exact", 5)
        if a <= 2 and 3 <= b <= 5:
            return Prediction("exact", 4)
        return Prediction("exact", 3)

    if rp >= 3 or rq >= 3:
        return Prediction("exact", 2)
    if kp == kq:
        # two gateways of different gadgets of the same kind
        return Prediction("greater_than", 1)

    # variable gateway vs clause gateway
    if kp == "clause":
        j, a, i, b = ip, rp, iq, rq
    else:
        j, a, i, b = iq, rq, ip, rp
    A, B = gmap.alpha[i - 1], gmap.beta[i - 1]
    occ = gmap.occurrence(i, j)
    if b == 1:
        base = 2 * A + B
        if occ > 0:
            extra = 1 if a == 2 else (1 if B >= 1 else 0)
        elif occ < 0:
            extra = 1
        else:
            extra = 1 if B >= 1 else 0
    else:
        base = A + 2 * B
        if occ < 0:
            extra = 1 if a == 1 else (1 if A >= 1 else 0)
        elif occ > 0:
            extra = 1
        else:
            extra = 1 if A >= 1 else 0
    return Prediction("exact", base + extra)


def _candidate_set(gmap: GadgetMap, assignment) -> tuple[int, ...]:
    """The normalized landmark family member for one assignment: both free
    twins of every clause gadget, the free twin of every variable gadget,
    and the gateway matching the assigned polarity."""
    picks = []
    for j in range(1, gmap.n_clauses + 1):
        picks += [gmap.clause_vertex(j, 4), gmap.clause_vertex(j, 5)]
    for i in range(1, gmap.n_vars + 1):
        picks.append(gmap.variable_vertex(i, 5))
        picks.append(gmap.variable_vertex(i, 1 if assignment[i - 1] else 2))
    return tuple(sorted(picks))


def basis_from_assignment(f: CnfFormula, gmap: GadgetMap,
                          assignment) -> tuple[int, ...]:
    """The size-2(m+n) candidate landmark set for a satisfying assignment."""
    if len(assignment) != f.n:
        raise ValueError(f"assignment length {len(assignment)} != {f.n}")
    if not assignment_satisfies(f, assignment):
        raise ValueError("assignment does not satisfy the formula")
    return _candidate_set(gmap, assignment)


def extract_assignment(basis, gmap: GadgetMap,
                       km: KappaMatrix | None = None) -> tuple[bool, ...]:
    """Read an assignment off a resolving set of size 2(m+n): variable i is
    true exactly when its role-1 gateway is a landmark.  The result is
    asserted to satisfy the formula."""
    basis = tuple(sorted(set(basis)))
    target = 2 * (gmap.n_clauses + gmap.n_vars)
    if len(basis) != target:
        raise ValueError(f"basis has size {len(basis)}, expected {target}")
    if km is None:
        g, _ = build_reduction(CnfFormula(gmap.n_vars, gmap.clauses))
        km = kappa_matrix(g)
    verdict = is_resolving(km, basis)
    if not verdict:
        raise ValueError(f"set is not resolving; witness {verdict.witness}")
    bset = set(basis)
    assignment = tuple(gmap.variable_vertex(i, 1) in bset
                       for i in range(1, gmap.n_vars + 1))
    f = CnfFormula(gmap.n_vars, gmap.clauses)
    if not assignment_satisfies(f, assignment):
        raise AssertionError(
            "resolving set of the target size produced a non-satisfying "
            "assignment; the normalized-form assumption does not hold here")
    return assignment


@dataclass(frozen=True)
class SatResult:
    status: str  # "sat" | "unsat"
    assignment: tuple[bool, ...] | None
    graph_vertices: int
    candidates_checked: int

    def to_json_obj(self) -> dict:
        obj = {
            "status": self.status,
            "graph_vertices": self.graph_vertices,
            "criterion": "cdim == 2(m+n)",
            "normalization_assumed": True,
        }
        if self.assignment is not None:
            obj["assignment"] = {str(i + 1): bool(v)
                                 for i, v in enumerate(self.assignment)}
        return obj


def decide_sat(f: CnfFormula, threads: int = 1) -> SatResult:
    """Satisfiability through the dimension criterion.

    Checks the 2^n normalized candidate sets (one per assignment, in
    lexicographic order, false before true) against the max-flow kappa
    matrix; the first resolving one wins.  An unsat verdict is sound only
    under the normalized-form assumption recorded in the result.
    """
    g, gmap = build_reduction(f)
    km = kappa_matrix(g, threads=threads)
    checked = 0
    for assignment in product((False, True), repeat=f.n):
        checked += 1
        if is_resolving(km, _candidate_set(gmap, assignment)):
            return SatResult("sat", assignment, g.n, checked)
    return SatResult("unsat", None, g.n, checked)


def verify_gadget_lemmas(f: CnfFormula, gmap: GadgetMap, basis) -> dict:
    """Structural landmark counts that any minimum resolving set must show:
    exactly two of each clause gadget's three free twins, at least one of
    each variable gadget's twin pair, at least two vertices per variable
    gadget, and total size at least 2(m+n)."""
    if (f.n, f.clauses) != (gmap.n_vars, gmap.clauses):
        raise ValueError("formula and gadget map disagree")
    bset = set(basis)
    clause_counts = []
    for j in range(1, gmap.n_clauses + 1):
        core = {gmap.clause_vertex(j, r) for r in (3, 4, 5)}
        clause_counts.append(len(core & bset))
    var_twin_counts = []
    var_gadget_counts = []
    for i in range(1, gmap.n_vars + 1):
        upper = {gmap.variable_vertex(i, r) for r in (4, 5)}
        whole = {gmap.variable_vertex(i, r) for r in range(1, 6)}
        var_twin_counts.append(len(upper & bset))
        var_gadget_counts.append(len(whole & bset))
    required = 2 * (gmap.n_clauses + gmap.n_vars)
    report = {
        "clause_core_counts": clause_counts,
        "clause_core_exactly_two": all(c == 2 for c in clause_counts),
        "variable_twin_counts": var_twin_counts,
        "variable_twin_at_least_one": all(c >= 1 for c in var_twin_counts),
        "variable_gadget_counts": var_gadget_counts,
        "variable_gadget_at_least_two": all(c >= 2
                                            for c in var_gadget_counts),
        "size": len(bset),
        "size_required": required,
        "size_at_least_target": len(bset) >= required,
    }
    report["all_ok"] = (report["clause_core_exactly_two"]
                        and report["variable_twin_at_least_one"]
                        and report["variable_gadget_at_least_two"]
                        and report["size_at_least_target"])
    return report
