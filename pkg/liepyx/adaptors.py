"""
Adaptor functions that compute invariants from convenient inputs.

They build the algebra and the frame, run the engine and assemble the result in one call.

Programmer: liepyx team
Since: 2026-10
"""

import logging

from liepyx.engine import InvariantPolynomial, compute_valuedata, assemble
from liepyx.explanations import ExplanationLogger
from liepyx.kostant import KostantFrame, build_frame
from liepyx.rootdata import build_lie_algebra

logger = logging.getLogger(__name__)


def compute_invariant(
    family: str = None,
    rank: int = None,
    index: int = None,
    frame: KostantFrame = None,
    scope: str = "full",
    mode: str = "primitive",
    constants: dict = None,
    degree: int = None,
    **kwargs
) -> InvariantPolynomial:
    """
    Compute one invariant of a simple Lie algebra.

    :param family, rank: the type of the algebra, e.g. ("G", 2). Ignored when a frame is given.
    :param index: the 1-based slice index j of the primitive invariant I_j.
    :param frame (optional): a prebuilt Kostant frame.
    :param scope: "full" for a polynomial on all of g, "borel" for its restriction to epsilon + b.
    :param mode, constants: "primitive" seeds, or "generic" seeds given by `constants` (then `degree` is required).
    :param kwargs: passed on to compute_valuedata (workers, checkpoint_path, explanation_logger).

    :return: the assembled invariant.

    >>> print(compute_invariant("A", 1, 1).polynomial)
    p1^2 + x[1]*x[-1]
    >>> print(compute_invariant("A", 2, 1, scope="borel").polynomial)
    p1^2 - p1*p2 + p2^2 + x[1,0] + x[0,1]
    """
    if frame is None:
        frame = build_frame(build_lie_algebra(family, rank))
    if mode == "primitive":
        degree = frame.degrees[index - 1] if index is not None and 1 <= index <= len(frame.degrees) else degree
    elif degree is None:
        raise ValueError("generic seeds need an explicit degree")
    explanation_logger: ExplanationLogger = kwargs.get("explanation_logger", ExplanationLogger())
    table = compute_valuedata(frame, index, degree, scope=scope, mode=mode, constants=constants, **kwargs)
    return assemble(table, explanation_logger=explanation_logger)


def compute_all_invariants(family: str = None, rank: int = None, frame: KostantFrame = None, scope: str = "full", **kwargs) -> list[InvariantPolynomial]:
    """
    Compute the primitive invariants I_1..I_l, in ascending degree.

    >>> [invariant.degree for invariant in compute_all_invariants("A", 3)]
    [2, 3, 4]
    """
    if frame is None:
        frame = build_frame(build_lie_algebra(family, rank))
    invariants = []
    for j, d in enumerate(frame.degrees):
        logger.info("Computing I_%d of degree %d for %s", j + 1, d, frame.algebra.label)
        invariants.append(compute_invariant(frame=frame, index=j + 1, scope=scope, **kwargs))
    return invariants


if __name__ == "__main__":
    import doctest
    print(doctest.testmod())
