"""
Test the explanation loggers on small computations.

Programmer: liepyx team
Since:  2026-10
"""

import logging

import pytest

from liepyx.engine import compute_valuedata, assemble
from liepyx.explanations import (ExplanationLogger, ConsoleExplanationLogger, StringsExplanationLogger,
                                 FilesExplanationLogger, SingleExplanationLogger, STAGES)
from liepyx.kostant import build_frame
from liepyx.rootdata import build_lie_algebra


@pytest.fixture(scope="module")
def a1_frame():
    return build_frame(build_lie_algebra("A", 1))


def test_strings_explanation_logger(a1_frame):
    explanation_logger = StringsExplanationLogger()
    table = compute_valuedata(a1_frame, 1, 2, explanation_logger=explanation_logger)
    assemble(table, explanation_logger=explanation_logger)
    explanations = explanation_logger.map_stage_to_explanation()
    assert set(explanations) == set(STAGES)
    assert explanations["seeds"] == "W=() U=(f2) b=1 a=0 is a pure-slice term; its value is fixed by the normalization: 1\n"
    assert explanations["cartan"] == "Stage cartan: 1 terms.\nW=() U=() b=0 a=2 is the pure-Cartan term: 2 * p1^2\n"
    assert explanations["ttms"] == ""
    assert explanations["ntms"] == ""
    assert explanations["assembly"] == "Assembled a polynomial with 2 monomials of degree 2.\n"


def test_explanations_name_the_rule():
    explanation_logger = StringsExplanationLogger(stages=STAGES)
    compute_valuedata(build_frame(build_lie_algebra("A", 2)), 2, 3, explanation_logger=explanation_logger)
    assert explanation_logger.stage_string("ttms") == ""
    assert "writes one copy of p as [epsilon, x_p]" in explanation_logger.stage_string("ptms")
    assert "peels its first negative factor" in explanation_logger.stage_string("ntms")
    explanation_logger = StringsExplanationLogger(stages=["seeds", "ttms", "ptms", "cartan"])
    compute_valuedata(build_frame(build_lie_algebra("G", 2)), 2, 6, scope="borel", explanation_logger=explanation_logger)
    assert "peels a factor through its ad-epsilon preimage" in explanation_logger.stage_string("ttms")
    assert "Stage ttms" in explanation_logger.stage_string("ttms")


def test_files_explanation_logger(a1_frame, tmp_path):
    filenames = {stage: str(tmp_path / f"{stage}.log") for stage in ("seeds", "cartan", "assembly", "ttms", "ptms", "ntms")}
    explanation_logger = FilesExplanationLogger(filenames, mode="w")
    assemble(compute_valuedata(a1_frame, 1, 2, explanation_logger=explanation_logger), explanation_logger=explanation_logger)
    with open(filenames["cartan"]) as file:
        assert "pure-Cartan term" in file.read()
    with open(filenames["ntms"]) as file:
        assert file.read() == ""


def test_single_and_silent_loggers(a1_frame, caplog):
    logger = logging.getLogger("liepyx.tests.explanations")
    with caplog.at_level(logging.DEBUG, logger="liepyx.tests.explanations"):
        compute_valuedata(a1_frame, 1, 2, explanation_logger=SingleExplanationLogger(logger))
    assert "cartan: W=() U=() b=0 a=2 is the pure-Cartan term: 2 * p1^2" in caplog.messages
    # the base logger and the console logger must not interfere with the computation
    assert len(compute_valuedata(a1_frame, 1, 2, explanation_logger=ExplanationLogger())) == 2
    assert len(compute_valuedata(a1_frame, 1, 2, explanation_logger=ConsoleExplanationLogger(level=logging.WARNING))) == 2


if __name__ == "__main__":
    pytest.main(["-v", __file__])
