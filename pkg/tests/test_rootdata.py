"""
Test the root systems and the Chevalley bases.

Programmer: liepyx team
Since:  2026-10
"""

import json
from fractions import Fraction

import numpy as np
import pytest

from liepyx.errors import InvalidRootSystemError, DimensionMismatchError
from liepyx.rootdata import (RootSystem, GVector, LieAlgebra, build_root_system, build_lie_algebra,
                             check_jacobi, bracket, cartan_matrix)
from liepyx.verify import defining_representation

NUM_OF_RANDOM_INSTANCES = 10

NUM_OF_POSITIVE_ROOTS = {
    ("A", 1): 1, ("A", 2): 3, ("A", 3): 6, ("B", 2): 4, ("B", 3): 9, ("C", 3): 9,
    ("D", 4): 12, ("D", 5): 20, ("G", 2): 6, ("F", 4): 24, ("E", 6): 36, ("E", 7): 63, ("E", 8): 120,
}

SMALL_ALGEBRAS = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 3), ("G", 2), ("D", 4)]


def random_vector(algebra: LieAlgebra) -> GVector:
    coords = np.random.randint(-3, 4, size=algebra.dim)
    return GVector(algebra.dim, {i: int(c) for i, c in enumerate(coords) if c})


@pytest.mark.parametrize("family, rank", sorted(NUM_OF_POSITIVE_ROOTS))
def test_root_counts(family, rank):
    root_system = build_root_system(family, rank)
    assert len(root_system.positive_roots) == NUM_OF_POSITIVE_ROOTS[(family, rank)]
    assert root_system.positive_roots[:rank] == root_system.simple_roots
    assert root_system.heights == sorted(root_system.heights)


@pytest.mark.parametrize("family, rank", SMALL_ALGEBRAS)
def test_roots_are_closed_under_reflections(family, rank):
    root_system = build_root_system(family, rank)
    for root in root_system.positive_roots:
        for i in range(1, rank + 1):
            assert root_system.is_root(root_system.reflect_root(i, root))
            assert root_system.norm(root_system.reflect_root(i, root)) == root_system.norm(root)


def test_invalid_root_systems():
    with pytest.raises(InvalidRootSystemError):
        cartan_matrix("H", 3)
    with pytest.raises(InvalidRootSystemError):
        cartan_matrix("D", 3)
    with pytest.raises(InvalidRootSystemError):
        cartan_matrix("E", 5)
    with pytest.raises(InvalidRootSystemError):
        RootSystem([[2, 0], [0, 2]])                 # disconnected: A1 x A1
    with pytest.raises(InvalidRootSystemError):
        RootSystem([[2, -1], [0, 2]])                # inconsistent zero pattern
    with pytest.raises(InvalidRootSystemError):
        RootSystem([[2, -2], [-2, 2]])               # affine A1
    with pytest.raises(ValueError):
        build_root_system("A", 2).reflect_root(3, (1, 0))


@pytest.mark.parametrize("family, rank", SMALL_ALGEBRAS)
def test_chevalley_basis(family, rank):
    algebra = build_lie_algebra(family, rank)
    root_system = algebra.root_system
    for root in root_system.positive_roots:
        e, f = algebra.root_vector(root), algebra.root_vector(tuple(-n for n in root))
        coroot = GVector(algebra.dim, algebra.coroot(root))
        assert algebra.bracket(e, f) == coroot
        # alpha(H_alpha) = 2
        assert algebra.bracket(coroot, e) == 2 * e
        for i in range(rank):
            assert algebra.bracket(algebra.cartan_vector(i), e) == root_system.pairing(root, i) * e
    for (r, s), N in algebra.structure.items():
        # |N_{r,s}| = p + 1, where p is the largest integer with s - p r a root
        p = 0
        while root_system.is_root(tuple(b - (p + 1) * a for a, b in zip(r, s))):
            p += 1
        assert abs(N) == p + 1, f"N{r, s} = {N}"


@pytest.mark.parametrize("family, rank", [("A", 2), ("B", 2), ("G", 2), ("B", 3), ("C", 3), ("A", 4), ("D", 4)])
def test_jacobi_exhaustive(family, rank):
    assert check_jacobi(build_lie_algebra(family, rank)) is None


@pytest.mark.slow
def test_jacobi_exhaustive_f4():
    assert check_jacobi(build_lie_algebra("F", 4)) is None


@pytest.mark.slow
@pytest.mark.parametrize("family, rank", [("D", 5), ("E", 6)])
def test_jacobi_on_random_triples(family, rank):
    assert check_jacobi(build_lie_algebra(family, rank), samples=10**4) is None


@pytest.mark.parametrize("family, rank", SMALL_ALGEBRAS)
def test_bracket_adds_heights(family, rank):
    algebra = build_lie_algebra(family, rank)
    for i in range(algebra.dim):
        for j in range(algebra.dim):
            result = algebra.bracket(algebra.basis_vector(i), algebra.basis_vector(j))
            if result.is_zero():
                continue
            assert algebra.height_of(result) == algebra.heights[i] + algebra.heights[j], f"[{algebra.labels[i]}, {algebra.labels[j]}]"
            total = tuple(a + b for a, b in zip(algebra.root_of(i), algebra.root_of(j)))
            if any(total):
                assert result == algebra.bracket_basis(i, j)[0][1] * algebra.root_vector(total)


def test_antisymmetry_and_jacobi_on_random_vectors():
    algebra = build_lie_algebra("G", 2)
    for i in range(NUM_OF_RANDOM_INSTANCES):
        np.random.seed(i)
        x, y, z = random_vector(algebra), random_vector(algebra), random_vector(algebra)
        assert bracket(algebra, x, y) == -bracket(algebra, y, x), f"Seed {i}"
        jacobi = bracket(algebra, x, bracket(algebra, y, z)) + bracket(algebra, y, bracket(algebra, z, x)) + bracket(algebra, z, bracket(algebra, x, y))
        assert jacobi.is_zero(), f"Seed {i}"


def test_simple_reflections_preserve_the_pairing():
    root_system = build_root_system("B", 3)
    for i in range(NUM_OF_RANDOM_INSTANCES):
        np.random.seed(i)
        p = tuple(int(c) for c in np.random.randint(-5, 6, size=3))
        for k in range(1, 4):
            once = root_system.simple_reflection(k, p)
            assert root_system.simple_reflection(k, once) == tuple(Fraction(c) for c in p), f"Seed {i}"


def test_serialization():
    algebra = build_lie_algebra("B", 2)
    document = json.loads(json.dumps(algebra.to_json()))
    restored = LieAlgebra.from_json(document)
    assert restored.content_hash() == algebra.content_hash()
    assert restored.structure == algebra.structure
    document["roots"] = document["roots"][::-1]
    with pytest.raises(ValueError):
        LieAlgebra.from_json(document)


def test_serialization_keeps_the_extraspecial_pairs():
    algebra = build_lie_algebra("A", 3)
    restored = LieAlgebra.from_json(json.loads(json.dumps(algebra.to_json())))
    assert len(algebra.extraspecial_pairs) == 3
    assert restored.extraspecial_pairs == algebra.extraspecial_pairs
    images = defining_representation(restored)
    assert all(image is not None for image in images)
    assert images == defining_representation(algebra)


def test_dimension_mismatch():
    a1, a2 = build_lie_algebra("A", 1), build_lie_algebra("A", 2)
    with pytest.raises(DimensionMismatchError):
        a1.bracket(a1.basis_vector(0), a2.basis_vector(0))
    with pytest.raises(DimensionMismatchError):
        a1.basis_vector(0) + a2.basis_vector(0)


if __name__ == "__main__":
    pytest.main(["-v", __file__])
