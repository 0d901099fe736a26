"""
Test the verification suite on computed invariants, and its ability to catch broken ones.

Programmer: liepyx team
Since:  2026-10
"""

import json

import pytest
import sympy

from liepyx.adaptors import compute_invariant, compute_all_invariants
from liepyx.kostant import build_frame
from liepyx.polycore import Polynomial
from liepyx.rootdata import build_lie_algebra, build_root_system
from liepyx.verify import (VerificationReport, verify_invariant, check_homogeneity, check_invariance,
                           check_slice_normalization, check_weyl_invariance, check_independence,
                           oracle_type_a, slice_restriction, slice_variables)


@pytest.fixture(scope="module")
def g2():
    frame = build_frame(build_lie_algebra("G", 2))
    return frame, compute_invariant(frame=frame, index=2)


def test_g2_full_invariant(g2):
    frame, invariant = g2
    assert invariant.degree == 6
    report = verify_invariant(invariant, frame)
    assert report.passed, report.to_text()
    assert [check.name for check in report.checks] == ["homogeneity", "invariance", "slice_normalization", "weyl_invariance"]
    assert not any(check.skipped for check in report.checks)


def test_g2_slice_restriction(g2):
    frame, invariant = g2
    xi = slice_variables(2)
    assert slice_restriction(invariant.polynomial, frame) == Polynomial.variable(xi, "xi2")
    doubled = compute_invariant(frame=frame, mode="generic", constants={(2,): 240}, degree=6, scope="borel")
    assert check_slice_normalization(doubled, frame, expected=Polynomial.variable(xi, "xi2").scale(2)) == (True, None)
    assert verify_invariant(doubled, frame).passed
    skipped = [check.name for check in verify_invariant(doubled, frame).checks if check.skipped]
    assert skipped == ["homogeneity", "invariance", "slice_normalization"]


def test_broken_invariants_are_caught(g2):
    frame, invariant = g2
    algebra = frame.algebra
    V = invariant.variables
    broken = invariant.polynomial + Polynomial.variable(V, "p1") ** 6
    passed, witness = check_invariance(broken, algebra)
    assert not passed and witness.startswith("x = ")
    passed, witness = check_weyl_invariance(Polynomial.from_text("p1^6 + p2^6", ("p1", "p2")), algebra.root_system)
    assert not passed and witness.startswith("reflection")
    wrong_degree = type(invariant)(invariant.polynomial + Polynomial.variable(V, "p1"), "full", "G", 2, 6, 2)
    assert check_homogeneity(wrong_degree)[0] is False
    report = verify_invariant(wrong_degree, frame)
    assert not report.passed
    assert "homogeneity" in [check.name for check in report.failures()]
    assert json.loads(report.dumps())["passed"] is False


def test_bumped_cartan_coefficient_breaks_weyl_invariance(g2):
    frame, invariant = g2
    root_system = frame.algebra.root_system
    restriction = invariant.cartan_restriction()
    exps, c = restriction.sorted_terms()[0]
    bump = Polynomial(restriction.variables, {exps: 1})
    assert check_weyl_invariance(restriction, root_system) == (True, None)
    passed, witness = check_weyl_invariance(restriction + bump, root_system)
    assert not passed and witness.startswith("reflection")
    # in a borel-scope form p never meets the slice, so only the Weyl check can see the change
    borel = invariant.borel_restriction()
    bumped = type(borel)(borel.polynomial + bump.with_variables(borel.variables), "borel", "G", 2, 6, 2)
    report = verify_invariant(bumped, frame)
    assert [check.name for check in report.failures()] == ["weyl_invariance"]


def test_borel_scope_skips_the_full_checks():
    frame = build_frame(build_lie_algebra("B", 2))
    invariant = compute_invariant(frame=frame, index=2, scope="borel")
    report = verify_invariant(invariant, frame)
    assert report.passed
    assert [check.name for check in report.checks if check.skipped] == ["homogeneity", "invariance"]


@pytest.mark.parametrize("family, rank", [("A", 2), ("B", 2), ("G", 2)])
def test_independence(family, rank):
    frame = build_frame(build_lie_algebra(family, rank))
    invariants = compute_all_invariants(frame=frame, scope="borel")
    assert check_independence(invariants, frame) == (True, None)
    assert check_independence(invariants, frame, expected=sympy.eye(rank) * 2)[0] is False


def test_d4_middle_invariants():
    frame = build_frame(build_lie_algebra("D", 4))
    assert frame.exponents == [1, 3, 3, 5]
    xi = slice_variables(4)
    for j in (2, 3):
        invariant = compute_invariant(frame=frame, index=j, scope="borel")
        assert invariant.degree == 4
        assert slice_restriction(invariant.polynomial, frame) == Polynomial.variable(xi, xi[j - 1])
        assert verify_invariant(invariant, frame).passed


@pytest.mark.slow
def test_d4_middle_invariants_full():
    frame = build_frame(build_lie_algebra("D", 4))
    for j in (2, 3):
        assert verify_invariant(compute_invariant(frame=frame, index=j), frame).passed


@pytest.mark.parametrize("rank", [1, 2, 3])
def test_type_a_oracle(rank):
    assert oracle_type_a(rank) == (True, None)


def test_weyl_invariance_of_cartan_restrictions():
    for family, rank in [("A", 3), ("B", 3), ("C", 3)]:
        frame = build_frame(build_lie_algebra(family, rank))
        for invariant in compute_all_invariants(frame=frame, scope="borel"):
            assert check_weyl_invariance(invariant.cartan_restriction(), frame.algebra.root_system) == (True, None)


@pytest.mark.slow
def test_e6_degree_12_borel_form():
    frame = build_frame(build_lie_algebra("E", 6))
    invariant = compute_invariant(frame=frame, index=6, scope="borel")
    assert invariant.degree == 12
    assert verify_invariant(invariant, frame).passed


def test_report_text():
    report = VerificationReport()
    assert report.passed
    assert report.to_text() == "all checks passed"
    assert check_weyl_invariance(Polynomial.from_text("p1^2", ("p1",)), build_root_system("A", 1)) == (True, None)


if __name__ == "__main__":
    pytest.main(["-v", __file__])
