"""3-CNF reduction: formula parsing and validation, gadget layout, the
closed-form connectivity predictions against max flow, and the dimension
criterion for satisfiability with its documented one-sidedness."""

import random

import pytest

from conndim import (
    CnfFormula,
    GadgetMap,
    Prediction,
    SatResult,
    assignment_satisfies,
    basis_from_assignment,
    build_reduction,
    decide_sat,
    extract_assignment,
    is_resolving,
    kappa_matrix,
    parse_dimacs,
    predicted_kappa,
    twin_classes,
    verify_gadget_lemmas,
)
from oracles import purely_satisfiable, random_3cnf, truth_table_sat

TWO_CLAUSE = CnfFormula(3, ((1, 2, -3), (-1, 2, -3)))
ONE_CLAUSE = CnfFormula(3, ((1, 2, 3),))
ALL_SIGNS_UNSAT = CnfFormula(3, tuple(
    (s1 * 1, s2 * 2, s3 * 3)
    for s1 in (1, -1) for s2 in (1, -1) for s3 in (1, -1)))
# satisfiable, but no clause can be satisfied by a single-polarity variable
IMPURE_SAT = CnfFormula(3, ((-3, 2, 1), (1, 3, -2), (-1, 3, 2), (1, 2, 3)))


def random_formulas(seed, count, n_max=4, m_max=4):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        drawn = random_3cnf(rng, n_max=n_max, m_max=m_max)
        if drawn is not None:
            out.append(CnfFormula(drawn[0], drawn[1]))
    return out


class TestCnfFormula:
    def test_counts(self):
        assert TWO_CLAUSE.n == 3
        assert TWO_CLAUSE.m == 2
        assert TWO_CLAUSE.warnings == ()

    def test_validation_messages_carry_clause_index(self):
        with pytest.raises(ValueError, match="clause 1: expected 3"):
            CnfFormula(3, ((1, 2),))
        with pytest.raises(ValueError, match="clause 2: variable 5"):
            CnfFormula(4, ((1, 2, 3), (1, 2, 5), (1, 2, 4)))
        with pytest.raises(ValueError, match="clause 1: literals"):
            CnfFormula(3, ((1, 0, 2),))
        with pytest.raises(ValueError, match="clause 1: variables must be"):
            CnfFormula(3, ((1, 1, 2),))
        with pytest.raises(ValueError, match="clause 1: variables must be"):
            CnfFormula(3, ((1, -1, 2),))

    def test_every_variable_must_occur(self):
        with pytest.raises(ValueError, match=r"never used: \[3\]"):
            CnfFormula(4, ((1, 2, 4),))

    def test_needs_variables_and_clauses(self):
        with pytest.raises(ValueError):
            CnfFormula(0, ((1, 2, 3),))
        with pytest.raises(ValueError):
            CnfFormula(3, ())

    def test_assignment_satisfies(self):
        assert assignment_satisfies(TWO_CLAUSE, (False, False, False))
        assert assignment_satisfies(TWO_CLAUSE, (False, True, True))
        assert not assignment_satisfies(TWO_CLAUSE, (True, False, True))
        with pytest.raises(ValueError, match="length"):
            assignment_satisfies(TWO_CLAUSE, (True,))


class TestParseDimacs:
    def test_basic(self):
        f = parse_dimacs("p cnf 3 2\n1 2 -3 0\n-1 2 -3 0\n")
        assert f == TWO_CLAUSE
        assert f.warnings == ()

    def test_comments_blanks_and_split_clauses(self):
        f = parse_dimacs("c header comment\n\np cnf 3 2\n1 2\n-3 0 -1 2 -3 0\n")
        assert f == TWO_CLAUSE

    def test_unused_variables_renumbered_with_warning(self):
        f = parse_dimacs("p cnf 5 1\n1 2 5 0\n")
        assert f.n == 3
        assert f.clauses == ((1, 2, 3),)
        assert f.warnings == (
            "5 variables declared but only 3 used; renumbered densely",)

    @pytest.mark.parametrize("text,pattern", [
        ("1 2 3 0\n", "problem line"),
        ("p cnf 3 1\np cnf 3 1\n1 2 3 0\n", "duplicate"),
        ("p cnf x 1\n1 2 3 0\n", "non-integer"),
        ("p dnf 3 1\n1 2 3 0\n", "malformed"),
        ("p cnf 3 1\n1 2 three 0\n", "bad token"),
        ("p cnf 3 1\n1 2 3\n", "not terminated"),
        ("p cnf 3 2\n1 2 3 0\n", "declares 2 clauses"),
        ("p cnf 3 1\n1 2 3 4 0\n", "expected 3"),
        ("p cnf 3 1\n1 4 3 0\n", "beyond declared"),
        ("p cnf 3 1\n1 1 2 0\n", "distinct"),
        ("p cnf 3 1\n1 -1 2 0\n", "distinct"),
        ("", "missing"),
    ])
    def test_errors(self, text, pattern):
        with pytest.raises(ValueError, match=pattern):
            parse_dimacs(text)


class TestGadgetMap:
    def test_vertex_numbering_round_trip(self):
        _, gmap = build_reduction(TWO_CLAUSE)
        assert gmap.total_vertices == 27
        for i in (1, 2, 3):
            for role in range(1, 6):
                v = gmap.variable_vertex(i, role)
                assert gmap.locate(v) == ("var", i, role)
        for j in (1, 2):
            for role in range(1, 7):
                v = gmap.clause_vertex(j, role)
                assert gmap.locate(v) == ("clause", j, role)

    def test_labels(self):
        _, gmap = build_reduction(TWO_CLAUSE)
        assert gmap.label_of(gmap.variable_vertex(1, 3)) == "var1:3"
        assert gmap.label_of(gmap.clause_vertex(2, 5)) == "clause2:5"

    def test_occurrence_counts(self):
        _, gmap = build_reduction(TWO_CLAUSE)
        assert gmap.alpha == (1, 2, 0)
        assert gmap.beta == (1, 0, 2)
        assert gmap.occurrence(1, 1) == 1
        assert gmap.occurrence(1, 2) == -1
        assert gmap.occurrence(3, 1) == -1

    def test_range_errors(self):
        _, gmap = build_reduction(TWO_CLAUSE)
        with pytest.raises(ValueError):
            gmap.variable_vertex(4, 1)
        with pytest.raises(ValueError):
            gmap.variable_vertex(1, 6)
        with pytest.raises(ValueError):
            gmap.clause_vertex(3, 1)
        with pytest.raises(ValueError):
            gmap.locate(27)
        with pytest.raises(ValueError):
            gmap.occurrence(1, 3)


class TestBuildReduction:
    def test_two_clause_size(self):
        g, gmap = build_reduction(TWO_CLAUSE)
        assert g.n == 27
        assert g.edge_count() == 73

    def test_single_clause_size(self):
        g, _ = build_reduction(ONE_CLAUSE)
        assert g.n == 21
        assert g.edge_count() == 48

    def test_size_formula_on_random_formulas(self):
        for f in random_formulas(31, 10):
            g, gmap = build_reduction(f)
            assert g.n == 5 * f.n + 6 * f.m
            assert gmap.n_vars == f.n and gmap.n_clauses == f.m

    def test_gadget_twin_structure(self):
        g, gmap = build_reduction(TWO_CLAUSE)
        classes = {frozenset(c) for c in twin_classes(g).classes
                   if len(c) > 1}
        for i in (1, 2, 3):
            pair = frozenset(gmap.variable_vertex(i, r) for r in (4, 5))
            assert pair in classes
        for j in (1, 2):
            triple = frozenset(gmap.clause_vertex(j, r) for r in (3, 4, 5))
            assert triple in classes


class TestPrediction:
    def test_holds_for(self):
        assert Prediction("exact", 4).holds_for(4)
        assert not Prediction("exact", 4).holds_for(5)
        assert Prediction("greater_than", 4).holds_for(5)
        assert not Prediction("greater_than", 4).holds_for(4)

    def test_json(self):
        assert Prediction("exact", 3).to_json_obj() == {
            "kind": "exact", "value": 3}


class TestPredictedKappa:
    def test_rejects_equal_vertices(self):
        _, gmap = build_reduction(TWO_CLAUSE)
        with pytest.raises(ValueError):
            predicted_kappa(gmap, 3, 3)

    def check_formula_against_flow(self, f):
        g, gmap = build_reduction(f)
        km = kappa_matrix(g)
        mismatches = []
        for p in range(g.n):
            for q in range(p + 1, g.n):
                pred = predicted_kappa(gmap, p, q)
                if not pred.holds_for(km.table[p][q]):
                    mismatches.append(
                        (gmap.label_of(p), gmap.label_of(q), pred,
                         km.table[p][q]))
        assert not mismatches, mismatches[:10]

    def test_two_clause_instance_all_pairs(self):
        self.check_formula_against_flow(TWO_CLAUSE)

    def test_single_clause_instance_all_pairs(self):
        self.check_formula_against_flow(ONE_CLAUSE)

    def test_random_instances_all_pairs(self):
        for f in random_formulas(37, 12):
            self.check_formula_against_flow(f)

    def test_spot_values_on_two_clause_instance(self):
        _, gmap = build_reduction(TWO_CLAUSE)
        X, C = gmap.variable_vertex, gmap.clause_vertex
        # within a variable gadget
        assert predicted_kappa(gmap, X(1, 1), X(1, 2)) == Prediction("greater_than", 4)
        assert predicted_kappa(gmap, X(1, 1), X(1, 3)) == Prediction("exact", 4)
        assert predicted_kappa(gmap, X(1, 4), X(1, 5)) == Prediction("exact", 3)
        # within a clause gadget
        assert predicted_kappa(gmap, C(1, 1), C(1, 2)) == Prediction("greater_than", 5)
        assert predicted_kappa(gmap, C(1, 3), C(1, 4)) == Prediction("exact", 5)
        assert predicted_kappa(gmap, C(1, 1), C(1, 6)) == Prediction("exact", 3)
        # any non-gateway across gadgets is pinched to exactly 2
        assert predicted_kappa(gmap, X(1, 3), C(2, 4)) == Prediction("exact", 2)
        assert predicted_kappa(gmap, X(1, 4), X(2, 1)) == Prediction("exact", 2)


class TestDecideSat:
    def test_two_clause_instance_is_sat_on_first_candidate(self):
        r = decide_sat(TWO_CLAUSE)
        assert r.status == "sat"
        assert r.assignment == (False, False, False)
        assert r.candidates_checked == 1
        assert r.graph_vertices == 27
        assert assignment_satisfies(TWO_CLAUSE, r.assignment)

    def test_all_sign_patterns_unsat(self):
        r = decide_sat(ALL_SIGNS_UNSAT)
        assert r.status == "unsat"
        assert r.assignment is None
        assert r.candidates_checked == 8
        assert truth_table_sat(ALL_SIGNS_UNSAT.n, ALL_SIGNS_UNSAT.clauses) is None

    def test_verdict_matches_pure_satisfaction_oracle(self):
        for f in random_formulas(41, 15):
            expected = purely_satisfiable(f.n, f.clauses)
            got = decide_sat(f)
            if expected is None:
                assert got.status == "unsat"
                assert got.assignment is None
            else:
                assert got.status == "sat"
                assert got.assignment == expected

    def test_sat_verdicts_are_sound(self):
        for f in random_formulas(43, 15):
            r = decide_sat(f)
            if r.status == "sat":
                assert assignment_satisfies(f, r.assignment)
                assert truth_table_sat(f.n, f.clauses) is not None

    def test_documented_incompleteness_on_impure_instance(self):
        # satisfiable by truth table, yet every candidate set fails: the
        # criterion certifies only assignments with single-polarity support
        assert truth_table_sat(IMPURE_SAT.n, IMPURE_SAT.clauses) is not None
        assert purely_satisfiable(IMPURE_SAT.n, IMPURE_SAT.clauses) is None
        r = decide_sat(IMPURE_SAT)
        assert r.status == "unsat"
        assert r.candidates_checked == 8

    def test_json_shapes(self):
        sat = decide_sat(TWO_CLAUSE).to_json_obj()
        assert sat == {
            "status": "sat", "graph_vertices": 27,
            "criterion": "cdim == 2(m+n)", "normalization_assumed": True,
            "assignment": {"1": False, "2": False, "3": False}}
        unsat = SatResult("unsat", None, 48, 8).to_json_obj()
        assert unsat == {
            "status": "unsat", "graph_vertices": 48,
            "criterion": "cdim == 2(m+n)", "normalization_assumed": True}


class TestBasisExtraction:
    def test_round_trip_on_two_clause_instance(self):
        g, gmap = build_reduction(TWO_CLAUSE)
        km = kappa_matrix(g)
        assignment = (False, False, False)
        basis = basis_from_assignment(TWO_CLAUSE, gmap, assignment)
        assert len(basis) == 2 * (TWO_CLAUSE.m + TWO_CLAUSE.n)
        assert is_resolving(km, basis).resolving
        assert extract_assignment(basis, gmap, km) == assignment
        assert extract_assignment(basis, gmap) == assignment  # rebuild path

    def test_round_trip_on_random_sat_instances(self):
        hits = 0
        for f in random_formulas(47, 20):
            assignment = purely_satisfiable(f.n, f.clauses)
            if assignment is None:
                continue
            hits += 1
            g, gmap = build_reduction(f)
            km = kappa_matrix(g)
            basis = basis_from_assignment(f, gmap, assignment)
            assert is_resolving(km, basis).resolving
            assert extract_assignment(basis, gmap, km) == assignment
        assert hits >= 3  # the sample must actually exercise the path

    def test_rejects_non_satisfying_assignment(self):
        _, gmap = build_reduction(TWO_CLAUSE)
        with pytest.raises(ValueError, match="does not satisfy"):
            basis_from_assignment(TWO_CLAUSE, gmap, (True, False, True))
        with pytest.raises(ValueError, match="length"):
            basis_from_assignment(TWO_CLAUSE, gmap, (True,))

    def test_satisfying_but_impure_candidate_does_not_resolve(self):
        g, gmap = build_reduction(IMPURE_SAT)
        km = kappa_matrix(g)
        witness = truth_table_sat(IMPURE_SAT.n, IMPURE_SAT.clauses)
        basis = basis_from_assignment(IMPURE_SAT, gmap, witness)
        assert not is_resolving(km, basis).resolving

    def test_extract_validates_size_and_resolution(self):
        g, gmap = build_reduction(TWO_CLAUSE)
        km = kappa_matrix(g)
        with pytest.raises(ValueError, match="size"):
            extract_assignment((0, 1, 2), gmap, km)
        with pytest.raises(ValueError, match="not resolving"):
            extract_assignment(tuple(range(10)), gmap, km)


class TestGadgetLemmas:
    def test_two_clause_basis_passes_all_checks(self):
        g, gmap = build_reduction(TWO_CLAUSE)
        basis = basis_from_assignment(TWO_CLAUSE, gmap, (False, False, False))
        report = verify_gadget_lemmas(TWO_CLAUSE, gmap, basis)
        assert report["all_ok"]
        assert report["clause_core_counts"] == [2, 2]
        assert report["variable_twin_counts"] == [1, 1, 1]
        assert report["variable_gadget_counts"] == [2, 2, 2]
        assert report["size"] == report["size_required"] == 10

    def test_empty_basis_fails_checks(self):
        _, gmap = build_reduction(TWO_CLAUSE)
        report = verify_gadget_lemmas(TWO_CLAUSE, gmap, ())
        assert not report["all_ok"]
        assert not report["clause_core_exactly_two"]
        assert not report["size_at_least_target"]

    def test_mismatched_formula_and_map(self):
        _, gmap = build_reduction(TWO_CLAUSE)
        with pytest.raises(ValueError, match="disagree"):
            verify_gadget_lemmas(ONE_CLAUSE, gmap, ())
