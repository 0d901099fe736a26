"""
The Kostant frame: the principal nilpotent epsilon, a homogeneous slice complementing [epsilon, g],
the cyclic basis s_j^k = (ad epsilon)^k s_j, and the transition between the cyclic ("f") basis and the root basis.

Every linear-algebra step is exact: the ad_epsilon blocks between neighbouring heights are sympy matrices
over the rationals, and the results are converted back to fractions.

f-basis order: heights 0 (H_1..H_l), 1, 2, ..., max; then heights -1 (e_{-alpha_1}..e_{-alpha_l}), -2, ..., -max.
Within one height, the cyclic vectors come in ascending slice index.
U is the set of f-indices of positive height; W is the set of f-indices of height <= -2.

Programmer: liepyx team
Since: 2026-10
"""

import hashlib
import json
import logging
from fractions import Fraction
from itertools import combinations

import numpy as np
import sympy

from liepyx.errors import NotInImageError, SliceSelectionError
from liepyx.polycore import to_fraction
from liepyx.rootdata import LieAlgebra, GVector

logger = logging.getLogger(__name__)

FALLBACK_ATTEMPTS = 200
FALLBACK_COEFFICIENT_BOUND = 3
DEFAULT_RANDOM_SEED = 1
JSON_FORMAT_VERSION = 1


def _to_sympy_column(vector: GVector, indices: list[int]) -> sympy.Matrix:
    return sympy.Matrix([sympy.Rational(vector[i].numerator, vector[i].denominator) for i in indices])


def _from_sympy_column(column, indices: list[int], dim: int) -> GVector:
    return GVector(dim, {index: to_fraction(value) for index, value in zip(indices, column)})


class KostantFrame:
    """
    The coordinate system the invariant construction runs in.

    >>> from liepyx.rootdata import build_lie_algebra
    >>> frame = build_frame(build_lie_algebra("G", 2))
    >>> frame.exponents, frame.degrees
    ([1, 5], [2, 6])
    >>> [frame.algebra.labels[i] for s in frame.slice for i in s.coords]
    ['e[0,1]', 'e[3,2]']
    >>> frame.f_heights
    [0, 0, 1, 1, 2, 3, 4, 5, -1, -1, -2, -3, -4, -5]
    >>> frame.to_f_basis(frame.algebra.root_vector((-1, -1)))
    {10: Fraction(1, 28)}
    """

    def __init__(self, algebra: LieAlgebra, slice_vectors: list[GVector], random_seed: int = DEFAULT_RANDOM_SEED):
        self.algebra = algebra
        self.rank = algebra.rank
        self.dim = algebra.dim
        self.max_height = algebra.root_system.max_height
        self.random_seed = random_seed
        self.epsilon = algebra.epsilon()
        self._ad_blocks = {}
        self.slice = sorted(slice_vectors, key=algebra.height_of)
        self.exponents = [algebra.height_of(s) for s in self.slice]
        self.degrees = [m + 1 for m in self.exponents]
        self._build_cyclic_vectors()
        self._build_f_basis()
        self._build_transition()
        logger.info("Kostant frame of %s: exponents %s, |U| = %d, |W| = %d",
                    algebra.label, self.exponents, len(self.U), len(self.W))

    ### construction

    def ad_epsilon(self, x: GVector) -> GVector:
        return self.algebra.bracket(self.epsilon, x)

    def ad_block(self, h: int) -> sympy.Matrix:
        """The matrix of ad_epsilon from height h+1 to height h (rows: height h, columns: height h+1)."""
        if h not in self._ad_blocks:
            rows = self.algebra.indices_by_height.get(h, [])
            columns = self.algebra.indices_by_height.get(h + 1, [])
            matrix = sympy.zeros(len(rows), len(columns))
            for c, index in enumerate(columns):
                image = self.ad_epsilon(self.algebra.basis_vector(index))
                for r, row_index in enumerate(rows):
                    value = image[row_index]
                    if value:
                        matrix[r, c] = sympy.Rational(value.numerator, value.denominator)
            self._ad_blocks[h] = matrix
        return self._ad_blocks[h]

    def _build_cyclic_vectors(self):
        self.cyclic: list[list[GVector]] = []
        for j, s in enumerate(self.slice):
            m = self.exponents[j]
            chain = [s]
            for _ in range(2 * m):
                chain.append(self.ad_epsilon(chain[-1]))
            assert not chain[-1].is_zero(), f"(ad epsilon)^{2*m} s_{j+1} vanishes"
            self.cyclic.append(chain)

    def _build_f_basis(self):
        algebra = self.algebra
        l = self.rank
        self.f_vectors: list[GVector] = []
        self.f_heights: list[int] = []
        self.f_cyclic: list = []            # (j, k) for cyclic vectors, None for the natural ones
        self.f_index_of: dict[tuple[int, int], int] = {}

        def add(vector: GVector, height: int, cyclic_label):
            if cyclic_label is not None:
                self.f_index_of[cyclic_label] = len(self.f_vectors)
            self.f_vectors.append(vector)
            self.f_heights.append(height)
            self.f_cyclic.append(cyclic_label)

        def add_cyclic_at(height: int):
            for j, m in enumerate(self.exponents):
                k = m - height
                if 0 <= k <= 2 * m:
                    add(self.cyclic[j][k], height, (j, k))

        for i in range(l):
            add(algebra.cartan_vector(i), 0, None)
        for height in range(1, self.max_height + 1):
            add_cyclic_at(height)
        for root in algebra.root_system.simple_roots:
            add(algebra.root_vector(tuple(-n for n in root)), -1, None)
        for height in range(-2, -self.max_height - 1, -1):
            add_cyclic_at(height)
        if len(self.f_vectors) != self.dim:
            raise SliceSelectionError(f"the cyclic vectors give {len(self.f_vectors)} basis vectors, expected {self.dim}", 0)

        self.U = [f for f, h in enumerate(self.f_heights) if h >= 1]
        self.W = [f for f, h in enumerate(self.f_heights) if h <= -2]
        self.cartan_f = [f for f, h in enumerate(self.f_heights) if h == 0]
        self.negative_simple_f = [f for f, h in enumerate(self.f_heights) if h == -1]
        self.slice_f = [self.f_index_of[(j, 0)] for j in range(len(self.slice))]
        self.f_labels = [f"f{f+1}" for f in range(self.dim)]
        # [epsilon, s_j^{k-1}] = s_j^k
        self.preimages: dict[int, GVector] = {
            f: self.cyclic[label[0]][label[1] - 1]
            for f, label in enumerate(self.f_cyclic) if label is not None and label[1] >= 1
        }

    def _build_transition(self):
        """Invert the transition matrix block by block: root index -> {f index: coefficient}."""
        algebra = self.algebra
        self.root_to_f: dict[int, dict[int, Fraction]] = {}
        for height, root_indices in algebra.indices_by_height.items():
            f_indices = [f for f, h in enumerate(self.f_heights) if h == height]
            block = sympy.Matrix([[self.f_vectors[f][r] for f in f_indices] for r in root_indices])
            if block.rank() != len(root_indices):
                raise SliceSelectionError(f"the cyclic vectors of height {height} are linearly dependent", height)
            inverse = block.inv()
            for c, root_index in enumerate(root_indices):
                self.root_to_f[root_index] = {
                    f: to_fraction(inverse[r, c]) for r, f in enumerate(f_indices) if inverse[r, c] != 0
                }

    ### coordinates

    def to_f_basis(self, x: GVector) -> dict[int, Fraction]:
        """The coordinates of x over the f-basis, as a sparse dict."""
        result = {}
        for root_index, value in x.coords.items():
            for f, c in self.root_to_f[root_index].items():
                result[f] = result.get(f, 0) + value * c
        return {f: c for f, c in sorted(result.items()) if c}

    def to_root_basis(self, coordinates: dict) -> GVector:
        result = self.algebra.zero()
        for f, c in coordinates.items():
            result = result + self.f_vectors[f] * c
        return result

    def transition_matrix(self) -> list[list[Fraction]]:
        """M, with column f holding the root-basis coordinates of the f-th frame vector."""
        return [[self.f_vectors[f][r] for f in range(self.dim)] for r in range(self.dim)]

    ### preimages

    def ad_epsilon_preimage(self, u: GVector) -> GVector:
        """
        A vector v with [epsilon, v] = u. For u of height >= -1 the preimage is unique;
        below, the free parameters of the reduced echelon form are set to zero.

        >>> from liepyx.rootdata import build_lie_algebra
        >>> a1 = build_lie_algebra("A", 1)
        >>> frame = build_frame(a1)
        >>> frame.ad_epsilon_preimage(-a1.cartan_vector(0)) == a1.root_vector((1,))
        True
        >>> frame.ad_epsilon_preimage(a1.root_vector((1,)))
        Traceback (most recent call last):
        ...
        liepyx.errors.NotInImageError: the height-1 part of the vector is not in the image of ad epsilon
        """
        algebra = self.algebra
        result = algebra.zero()
        for height in sorted(algebra.height_set(u)):
            rows = algebra.indices_by_height[height]
            columns = algebra.indices_by_height.get(height + 1, [])
            target = _to_sympy_column(u, rows)
            if not columns:
                raise NotInImageError(f"the height-{height} part of the vector is not in the image of ad epsilon")
            try:
                solution, parameters = self.ad_block(height).gauss_jordan_solve(target)
            except ValueError:
                raise NotInImageError(f"the height-{height} part of the vector is not in the image of ad epsilon") from None
            if parameters.shape[0] > 0:
                solution = solution.subs({t: 0 for t in parameters})
            logger.debug("Preimage at height %d with %d free parameters", height, parameters.shape[0])
            result = result + _from_sympy_column(solution, columns, self.dim)
        return result

    def kernel_basis(self, height: int) -> list[GVector]:
        """A basis of the kernel of ad_epsilon on the height-h part of g."""
        columns = self.algebra.indices_by_height.get(height, [])
        if not columns:
            return []
        block = self.ad_block(height - 1)
        if block.shape[0] == 0:
            return [self.algebra.basis_vector(i) for i in columns]
        return [_from_sympy_column(vector, columns, self.dim) for vector in block.nullspace()]

    def preimage_of_f(self, f: int) -> GVector:
        """The chosen preimage of a frame vector: the previous cyclic vector."""
        if f not in self.preimages:
            raise NotInImageError(f"frame vector f{f+1} has no cyclic preimage")
        return self.preimages[f]

    ### serialization

    def to_json(self) -> dict:
        return {
            "format": "liepyx-kostant-frame",
            "version": JSON_FORMAT_VERSION,
            "algebra_hash": self.algebra.content_hash(),
            "slice": [[[i, str(c)] for i, c in s.items()] for s in self.slice],
            "exponents": self.exponents,
            "transition_matrix": [[str(c) for c in row] for row in self.transition_matrix()],
            "preimages": [[f, [[i, str(c)] for i, c in v.items()]] for f, v in sorted(self.preimages.items())],
        }

    @classmethod
    def from_json(cls, obj: dict, algebra: LieAlgebra) -> "KostantFrame":
        if obj.get("format") != "liepyx-kostant-frame" or obj.get("version") != JSON_FORMAT_VERSION:
            raise ValueError(f"not a version-{JSON_FORMAT_VERSION} liepyx frame document")
        if obj["algebra_hash"] != algebra.content_hash():
            raise ValueError("the frame was built for another Lie algebra")
        slice_vectors = [GVector(algebra.dim, {i: Fraction(c) for i, c in s}) for s in obj["slice"]]
        frame = build_frame(algebra, slice_vectors=slice_vectors)
        if obj["transition_matrix"] != [[str(c) for c in row] for row in frame.transition_matrix()]:
            raise ValueError("the stored transition matrix does not match the one rebuilt from the slice")
        return frame

    def content_hash(self) -> str:
        document = {"algebra": self.algebra.to_json(), "slice": self.to_json()["slice"]}
        return hashlib.sha256(json.dumps(document, sort_keys=True).encode()).hexdigest()


def exponent_multiplicities(frame_or_algebra) -> dict[int, int]:
    """
    mult(h) = dim g_h - rank(ad_epsilon: g_{h+1} -> g_h) for every positive height h.

    >>> from liepyx.rootdata import build_lie_algebra
    >>> exponent_multiplicities(build_lie_algebra("D", 4))
    {1: 1, 3: 2, 5: 1}
    """
    helper = frame_or_algebra if isinstance(frame_or_algebra, _HeightBlocks) else _HeightBlocks(frame_or_algebra)
    algebra = helper.algebra
    multiplicities = {}
    for h in range(1, algebra.root_system.max_height + 1):
        mult = len(algebra.indices_by_height[h]) - helper.ad_block(h).rank()
        if mult:
            multiplicities[h] = mult
    return multiplicities


class _HeightBlocks:
    """The ad_epsilon blocks of an algebra, before a slice is known."""

    def __init__(self, algebra: LieAlgebra):
        self.algebra = algebra
        self.epsilon = algebra.epsilon()
        self._ad_blocks = {}

    ad_epsilon = KostantFrame.ad_epsilon
    ad_block = KostantFrame.ad_block


def _complements_image(block: sympy.Matrix, candidates: list[GVector], rows: list[int]) -> bool:
    columns = [_to_sympy_column(c, rows) for c in candidates]
    augmented = block.row_join(sympy.Matrix.hstack(*columns)) if block.shape[1] else sympy.Matrix.hstack(*columns)
    return augmented.rank() == len(rows)


def select_slice(algebra: LieAlgebra, random_seed: int = DEFAULT_RANDOM_SEED) -> list[GVector]:
    """
    Choose homogeneous slice vectors height by height: first subsets of root vectors
    (latest in canonical order first), then random small-integer combinations.
    """
    helper = _HeightBlocks(algebra)
    slice_vectors = []
    rng = None
    for height, mult in exponent_multiplicities(helper).items():
        rows = algebra.indices_by_height[height]
        block = helper.ad_block(height)
        chosen = None
        for subset in combinations(reversed(rows), mult):
            candidates = [algebra.basis_vector(i) for i in subset]
            logger.debug("Height %d: testing slice candidates %s", height, [algebra.labels[i] for i in subset])
            if _complements_image(block, candidates, rows):
                chosen = candidates
                break
        if chosen is None:
            if rng is None:
                rng = np.random.default_rng(random_seed)
            logger.warning("No root vectors complement [epsilon, g] at height %d; searching random combinations (seed %d)",
                           height, random_seed)
            for _ in range(FALLBACK_ATTEMPTS):
                coefficients = rng.integers(-FALLBACK_COEFFICIENT_BOUND, FALLBACK_COEFFICIENT_BOUND + 1, size=(mult, len(rows)))
                candidates = [GVector(algebra.dim, {i: int(c) for i, c in zip(rows, row)}) for row in coefficients]
                if not any(c.is_zero() for c in candidates) and _complements_image(block, candidates, rows):
                    chosen = candidates
                    break
        if chosen is None:
            raise SliceSelectionError(f"no slice complement found at height {height}", height)
        slice_vectors.extend(chosen)
    return slice_vectors


def _validate_slice(algebra: LieAlgebra, slice_vectors: list[GVector]):
    helper = _HeightBlocks(algebra)
    multiplicities = exponent_multiplicities(helper)
    by_height = {}
    for s in slice_vectors:
        if s.dim != algebra.dim:
            raise SliceSelectionError(f"slice vector of dimension {s.dim} in an algebra of dimension {algebra.dim}", 0)
        height = algebra.height_of(s)
        if height is None or height < 1:
            raise SliceSelectionError("slice vectors must be nonzero, homogeneous and of positive height", height or 0)
        by_height.setdefault(height, []).append(s)
    for height in sorted(set(by_height) | set(multiplicities)):
        vectors = by_height.get(height, [])
        if len(vectors) != multiplicities.get(height, 0):
            raise SliceSelectionError(f"{len(vectors)} slice vectors at height {height}, expected {multiplicities.get(height, 0)}", height)
        rows = algebra.indices_by_height[height]
        if not _complements_image(helper.ad_block(height), vectors, rows):
            raise SliceSelectionError(f"the slice vectors do not complement [epsilon, g] at height {height}", height)


def build_frame(algebra: LieAlgebra, slice_vectors: list[GVector] = None, random_seed: int = DEFAULT_RANDOM_SEED) -> KostantFrame:
    """
    Build the frame, choosing a slice unless one is given.

    >>> from liepyx.rootdata import build_lie_algebra
    >>> build_frame(build_lie_algebra("A", 3)).exponents
    [1, 2, 3]
    """
    if slice_vectors is None:
        slice_vectors = select_slice(algebra, random_seed=random_seed)
    else:
        _validate_slice(algebra, slice_vectors)
    return KostantFrame(algebra, slice_vectors, random_seed=random_seed)


if __name__ == "__main__":
    import doctest
    print(doctest.testmod())
