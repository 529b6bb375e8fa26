from fractions import Fraction

import pytest

import prymtyurin as pt


def test_permutations():
    assert pt.compose([2, 3, 1], [2, 1, 3]) == [3, 2, 1]
    assert pt.cycle_type([2, 1, 4, 3, 5, 6]) == [2, 2, 1, 1]
    induced = pt.induced_subset_action([2, 1, 3, 4], 2)
    assert len(induced) == 6
    assert pt.cycle_type(induced) == [2, 2, 1, 1]
    assert pt.orbits(4, [[2, 1, 3, 4]]) == [[0, 1], [2], [3]]


def test_covering():
    assert pt.ramification_degree(6, [[2, 2, 2], [2, 2, 2]], 8) == 14
    assert pt.riemann_hurwitz_genus(9, 0, 6 * 3 + 12) == 7
    with pytest.raises(pt.ValidationError, match="parity"):
        pt.riemann_hurwitz_genus(6, 0, 7)


def test_identities():
    d = pt.subset_matrix(5)
    assert pt.discover_identity(d) == {"a": 4, "b": -3, "c": 6, "unique": True}
    assert pt.verify_identity(d, 4, -3, 6)
    grid = pt.discover_identity(pt.grid_matrix(3))
    assert (grid["a"], grid["b"], grid["c"]) == (2, -1, 2)
    assert pt.exponent(2, -1, 2)["q"] == 3
    assert not pt.exponent(Fraction(3, 2), Fraction(1, 2), 0)["ok"]
    assert pt.identity_report("grid", 4)["q"] is None


def test_fibers():
    merged = pt.merged_fiber(3, [[1, 2], [3, 4], [5]])
    assert merged["indices"] == [4, 2, 2, 1, 1]
    assert merged["w_contribution"] == 5
    assert pt.orbit_fiber(3, [2, 1, 4, 3, 5])["w_contribution"] == 4


def test_reports():
    report = pt.pn_case(4, 2)
    assert report["verdict"]["g_C"] == 11
    assert report["verdict"]["dim_P"] == 2
    assert report["verdict"]["combinatorial_hypotheses"] == "verified"

    hyper = pt.hyperelliptic(5)
    assert hyper["verdict"]["dim_P"] == 4

    both = pt.run_scenario({"n": 2, "upstairs_genus": 2, "special_fibers": [[2, 2], [2, 2]]}, model="both")
    assert [m["model"] for m in both["models"]] == ["paper", "monodromy"]
    assert pt.pn_case(2, 2, model="monodromy")["verdict"]["combinatorial_hypotheses"] == "failed"

    with pytest.raises(pt.ValidationError, match="colour"):
        pt.run_scenario({"n": 3, "upstairs_genus": 1, "colour": "red"})
