"""
Test the Kostant frame: exponents, slice, cyclic basis and ad-epsilon preimages.

Programmer: liepyx team
Since:  2026-10
"""

import json
from fractions import Fraction

import numpy as np
import pytest

from liepyx.errors import NotInImageError, SliceSelectionError
from liepyx.kostant import KostantFrame, build_frame, exponent_multiplicities
from liepyx.rootdata import GVector, build_lie_algebra

NUM_OF_RANDOM_INSTANCES = 10

EXPONENTS = {
    ("A", 1): [1], ("A", 2): [1, 2], ("A", 3): [1, 2, 3], ("B", 2): [1, 3], ("B", 3): [1, 3, 5],
    ("C", 3): [1, 3, 5], ("D", 4): [1, 3, 3, 5], ("G", 2): [1, 5],
}


def random_vector(dim: int) -> GVector:
    coords = np.random.randint(-3, 4, size=dim)
    return GVector(dim, {i: int(c) for i, c in enumerate(coords) if c})


@pytest.mark.parametrize("family, rank", sorted(EXPONENTS))
def test_exponents(family, rank):
    frame = build_frame(build_lie_algebra(family, rank))
    assert frame.exponents == EXPONENTS[(family, rank)]
    assert frame.degrees == [m + 1 for m in frame.exponents]
    assert sum(frame.exponents) == frame.algebra.num_of_positive_roots
    assert len(frame.U) + len(frame.W) + 2 * frame.rank == frame.dim


@pytest.mark.slow
def test_exponents_of_exceptional_algebras():
    assert build_frame(build_lie_algebra("F", 4)).exponents == [1, 5, 7, 11]
    assert build_frame(build_lie_algebra("E", 6)).exponents == [1, 4, 5, 7, 8, 11]


def test_g2_frame():
    frame = build_frame(build_lie_algebra("G", 2))
    algebra = frame.algebra
    assert frame.slice_f == [2, 7]
    assert frame.f_vectors[2] == algebra.root_vector((0, 1))
    assert frame.f_vectors[7] == algebra.root_vector((3, 2))
    assert frame.f_vectors[10] == 28 * algebra.root_vector((-1, -1))
    assert frame.f_cyclic[10] == (1, 7)


def test_cyclic_chains_may_continue_past_the_slice_block():
    algebra = build_lie_algebra("G", 2)
    frame = build_frame(algebra)
    chain = frame.cyclic[0]
    assert len(chain) == 3
    assert chain[0] == algebra.root_vector((0, 1))
    assert chain[1] == -algebra.cartan_vector(1)
    assert frame.ad_epsilon(chain[-1]) == 3 * algebra.root_vector((-1, -1))


@pytest.mark.parametrize("family, rank", [("A", 2), ("A", 3), ("B", 2), ("C", 3), ("D", 4), ("G", 2)])
def test_frame_is_a_basis(family, rank):
    frame = build_frame(build_lie_algebra(family, rank))
    for j, m in enumerate(frame.exponents):
        assert len(frame.cyclic[j]) == 2 * m + 1
        assert not frame.cyclic[j][-1].is_zero()
    assert len(frame.f_vectors) == frame.dim
    assert frame.to_f_basis(frame.f_vectors[-1]) == {frame.dim - 1: 1}


def test_d4_has_two_slice_vectors_at_height_3():
    algebra = build_lie_algebra("D", 4)
    assert exponent_multiplicities(algebra) == {1: 1, 3: 2, 5: 1}
    frame = build_frame(algebra)
    middle = [s for s in frame.slice if algebra.height_of(s) == 3]
    assert len(middle) == 2
    assert middle[0] != middle[1]
    for s in middle:
        with pytest.raises(NotInImageError):
            frame.ad_epsilon_preimage(s)


@pytest.mark.parametrize("family, rank", [("A", 2), ("B", 2), ("G", 2)])
def test_change_of_basis(family, rank):
    frame = build_frame(build_lie_algebra(family, rank))
    for i in range(NUM_OF_RANDOM_INSTANCES):
        np.random.seed(i)
        x = random_vector(frame.dim)
        assert frame.to_root_basis(frame.to_f_basis(x)) == x, f"Seed {i}"


@pytest.mark.parametrize("family, rank", [("A", 2), ("B", 2), ("G", 2)])
def test_preimages(family, rank):
    frame = build_frame(build_lie_algebra(family, rank))
    for i in range(NUM_OF_RANDOM_INSTANCES):
        np.random.seed(i)
        u = frame.ad_epsilon(random_vector(frame.dim))
        assert frame.ad_epsilon(frame.ad_epsilon_preimage(u)) == u, f"Seed {i}"
    for f, preimage in frame.preimages.items():
        assert frame.ad_epsilon(preimage) == frame.f_vectors[f]
    for f in frame.slice_f:
        with pytest.raises(NotInImageError):
            frame.preimage_of_f(f)


def test_kernel_basis():
    frame = build_frame(build_lie_algebra("G", 2))
    algebra = frame.algebra
    for height in range(-frame.max_height, frame.max_height + 1):
        kernel = frame.kernel_basis(height)
        for vector in kernel:
            assert frame.ad_epsilon(vector).is_zero()
            assert algebra.height_of(vector) == height
    # ad epsilon is injective above height 0 and kills one vector per exponent at the bottom of each chain
    assert frame.kernel_basis(1) == []
    assert len(frame.kernel_basis(-1)) == 1
    assert len(frame.kernel_basis(-5)) == 1


def test_serialization_and_determinism():
    algebra = build_lie_algebra("B", 3)
    frame = build_frame(algebra)
    assert build_frame(algebra).content_hash() == frame.content_hash()
    restored = KostantFrame.from_json(json.loads(json.dumps(frame.to_json())), algebra)
    assert restored.content_hash() == frame.content_hash()
    assert restored.f_vectors == frame.f_vectors
    with pytest.raises(ValueError):
        KostantFrame.from_json(frame.to_json(), build_lie_algebra("C", 3))


def test_frame_document():
    algebra = build_lie_algebra("G", 2)
    frame = build_frame(algebra)
    document = json.loads(json.dumps(frame.to_json()))
    matrix = document["transition_matrix"]
    assert len(matrix) == len(matrix[0]) == 14
    assert matrix[algebra.root_index[(-1, -1)]][10] == "28"
    preimages = dict(document["preimages"])
    assert sorted(preimages) == sorted(frame.preimages)
    assert GVector(14, {i: Fraction(c) for i, c in preimages[10]}) == frame.cyclic[1][6]
    document["transition_matrix"][0][0] = "5"
    with pytest.raises(ValueError):
        KostantFrame.from_json(document, algebra)


def test_invalid_slices():
    algebra = build_lie_algebra("A", 2)
    with pytest.raises(SliceSelectionError):
        build_frame(algebra, slice_vectors=[algebra.root_vector((1, 0))])
    with pytest.raises(SliceSelectionError):
        build_frame(algebra, slice_vectors=[algebra.root_vector((1, 0)), algebra.root_vector((0, 1))])
    with pytest.raises(SliceSelectionError):
        build_frame(algebra, slice_vectors=[algebra.root_vector((1, 0)), algebra.root_vector((-1, 0))])


if __name__ == "__main__":
    pytest.main(["-v", __file__])
