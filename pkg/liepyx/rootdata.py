"""
Root systems and Chevalley bases of the complex simple Lie algebras.

A RootSystem is built from a Cartan matrix by the root-string closure.
A LieAlgebra holds the structure constants of a Chevalley basis; every bracket in liepyx reduces to it.

Conventions:
* cartan_matrix[i][j] = alpha_j(H_i), so [H_i, e_{alpha_j}] = cartan_matrix[i][j] * e_{alpha_j}.
* Positive roots are integer vectors over the simple roots, ordered by height and then so that
  the simple roots appear in index order ("canonical order").
* Basis order: H_1..H_l, then e_alpha for the positive roots in canonical order,
  then e_{-alpha} in the same order (heights -1 down to the negative maximal height).
* [e_alpha, e_{-alpha}] = H_alpha with alpha(H_alpha) = 2; N_{-alpha,-beta} = -N_{alpha,beta};
  the extraspecial pairs get the sign +1.

Programmer: liepyx team
Since: 2026-10
"""

import hashlib
import json
import logging
from fractions import Fraction
from itertools import combinations

import networkx as nx
import numpy as np

from liepyx.errors import InvalidRootSystemError, DimensionMismatchError, ChevalleyConsistencyError
from liepyx.polycore import root_variable, cartan_variables, to_fraction

logger = logging.getLogger(__name__)

FAMILIES = "ABCDEFG"
MAX_NUM_OF_ROOTS = 500          # larger closures mean the matrix is not of finite type
DEFAULT_JACOBI_SAMPLES = 200
DEFAULT_RANDOM_SEED = 1
JSON_FORMAT_VERSION = 1

Root = tuple[int, ...]


def cartan_matrix(family: str, rank: int) -> np.ndarray:
    """
    The Cartan matrix of a simple type, with A[i][j] = alpha_j(H_i).

    >>> cartan_matrix("A", 2).tolist()
    [[2, -1], [-1, 2]]
    >>> cartan_matrix("G", 2).tolist()
    [[2, -3], [-1, 2]]
    >>> cartan_matrix("B", 3).tolist()
    [[2, -1, 0], [-1, 2, -1], [0, -2, 2]]
    >>> cartan_matrix("G", 3)
    Traceback (most recent call last):
    ...
    liepyx.errors.InvalidRootSystemError: G must have rank 2, got 3
    """
    family = str(family).upper()
    if family not in FAMILIES or len(family) != 1:
        raise InvalidRootSystemError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    min_ranks = {"A": 1, "B": 2, "C": 2, "D": 4}
    fixed_ranks = {"E": (6, 7, 8), "F": (4,), "G": (2,)}
    if not isinstance(rank, (int, np.integer)):
        raise InvalidRootSystemError(f"rank must be an integer, got {rank!r}")
    if family in min_ranks and rank < min_ranks[family]:
        raise InvalidRootSystemError(f"{family} must have rank at least {min_ranks[family]}, got {rank}")
    if family in fixed_ranks and rank not in fixed_ranks[family]:
        allowed = " or ".join(str(r) for r in fixed_ranks[family])
        raise InvalidRootSystemError(f"{family} must have rank {allowed}, got {rank}")

    A = 2 * np.eye(rank, dtype=int)
    if family in "ABCD":
        A[range(rank - 1), range(1, rank)] = -1
        A[range(1, rank), range(rank - 1)] = -1
    if family == "B":
        A[-1, -2] = -2      # the last simple root is short
    elif family == "C":
        A[-2, -1] = -2      # the last simple root is long
    elif family == "D":
        A[-2, -1] = A[-1, -2] = 0
        A[-3, -1] = A[-1, -3] = -1
    elif family == "E":
        edges = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(k, k + 1) for k in range(4, rank - 1)]
        for i, j in edges:
            A[i, j] = A[j, i] = -1
    elif family == "F":
        A[0, 1] = A[1, 0] = -1
        A[1, 2], A[2, 1] = -1, -2
        A[2, 3] = A[3, 2] = -1
    elif family == "G":
        A[0, 1], A[1, 0] = -3, -1    # alpha_1 is the short root
    return A


def _add(r: Root, s: Root) -> Root:
    return tuple(a + b for a, b in zip(r, s))


def _sub(r: Root, s: Root) -> Root:
    return tuple(a - b for a, b in zip(r, s))


def _neg(r: Root) -> Root:
    return tuple(-a for a in r)


def _is_positive(r: Root) -> bool:
    return any(a > 0 for a in r)


def canonical_root_key(root: Root):
    """Heights ascending; within a height the simple roots come in index order."""
    return (sum(root), tuple(-n for n in root))


class RootSystem:
    """
    The root system of a simple Lie algebra.

    >>> rs = build_root_system("G", 2)
    >>> rs.positive_roots
    [(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)]
    >>> rs.heights
    [1, 1, 2, 3, 4, 5]
    >>> rs.label, rs.max_height
    ('G2', 5)
    >>> len(build_root_system("A", 4).positive_roots), len(build_root_system("E", 6).positive_roots)
    (10, 36)
    """

    def __init__(self, matrix, family: str = None):
        A = np.array(matrix, dtype=int)
        if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape[0] == 0:
            raise InvalidRootSystemError(f"a Cartan matrix must be a nonempty square matrix, got shape {A.shape}")
        self.rank = A.shape[0]
        self.family = family if family is not None else "?"
        self.cartan_matrix = tuple(tuple(int(a) for a in row) for row in A)
        self._validate_cartan_matrix()
        self.symmetrizer = self._compute_symmetrizer()
        self.positive_roots = self._compute_positive_roots()
        self.heights = [sum(root) for root in self.positive_roots]
        self.max_height = max(self.heights)
        self.root_set = set(self.positive_roots) | {_neg(r) for r in self.positive_roots}
        self.simple_roots = [tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank)]
        logger.info("Root system %s: %d positive roots, maximal height %d", self.label, len(self.positive_roots), self.max_height)

    @classmethod
    def from_cartan_matrix(cls, matrix, family: str = None) -> "RootSystem":
        return cls(matrix, family)

    @property
    def label(self) -> str:
        return f"{self.family}{self.rank}"

    def _validate_cartan_matrix(self):
        A, l = self.cartan_matrix, self.rank
        dynkin_diagram = nx.Graph()
        dynkin_diagram.add_nodes_from(range(l))
        for i in range(l):
            if A[i][i] != 2:
                raise InvalidRootSystemError(f"diagonal entry {i} of the Cartan matrix is {A[i][i]}, not 2")
            for j in range(l):
                if i != j and (A[i][j] > 0 or (A[i][j] == 0) != (A[j][i] == 0)):
                    raise InvalidRootSystemError(f"entries ({i},{j}) and ({j},{i}) of the Cartan matrix are inconsistent")
                if i < j and A[i][j] != 0:
                    dynkin_diagram.add_edge(i, j)
        if not nx.is_connected(dynkin_diagram):
            raise InvalidRootSystemError("the Dynkin diagram is disconnected: the algebra is not simple")
        self.dynkin_diagram = dynkin_diagram

    def _compute_symmetrizer(self) -> list[Fraction]:
        """Half-squared lengths c_i of the simple roots, with c_i*A[i][j] symmetric."""
        A = self.cartan_matrix
        c = [None] * self.rank
        c[0] = Fraction(1)
        for i, j in nx.bfs_edges(self.dynkin_diagram, 0):
            c[j] = c[i] * A[i][j] / A[j][i]
        for i, j in combinations(range(self.rank), 2):
            if c[i] * A[i][j] != c[j] * A[j][i]:
                raise InvalidRootSystemError("the Cartan matrix is not symmetrizable")
        return c

    def _compute_positive_roots(self) -> list[Root]:
        l = self.rank
        simple = [tuple(int(i == j) for j in range(l)) for i in range(l)]
        roots = set(simple)
        layer = sorted(simple, key=canonical_root_key)
        while layer:
            next_layer = set()
            for beta in layer:
                for j, alpha_j in enumerate(simple):
                    if beta == alpha_j:
                        continue
                    p, gamma = 0, _sub(beta, alpha_j)
                    while gamma in roots:
                        p, gamma = p + 1, _sub(gamma, alpha_j)
                    if p - self.pairing(beta, j) > 0:
                        next_layer.add(_add(beta, alpha_j))
            roots |= next_layer
            if len(roots) > MAX_NUM_OF_ROOTS:
                raise InvalidRootSystemError("the root closure does not terminate: the Cartan matrix is not of finite type")
            layer = sorted(next_layer, key=canonical_root_key)
        return sorted(roots, key=canonical_root_key)

    def pairing(self, root: Root, i: int) -> int:
        """root(H_i) for a 0-based simple index i."""
        row = self.cartan_matrix[i]
        return sum(n * row[k] for k, n in enumerate(root))

    def inner(self, r: Root, s: Root) -> Fraction:
        A, c = self.cartan_matrix, self.symmetrizer
        return sum((c[i] * A[i][j] * r[i] * s[j] for i in range(self.rank) for j in range(self.rank) if r[i] and s[j]), Fraction(0))

    def norm(self, r: Root) -> Fraction:
        return self.inner(r, r)

    def is_root(self, r: Root) -> bool:
        return tuple(r) in self.root_set

    def height(self, root: Root) -> int:
        return sum(root)

    def simple_reflection(self, i: int, p) -> tuple[Fraction, ...]:
        """
        r_i(p) = p - alpha_i(p) H_i for a point p of the Cartan subalgebra, given by its coordinates
        over H_1..H_l. The index i is 1-based.

        >>> build_root_system("A", 1).simple_reflection(1, (5,))
        (Fraction(-5, 1),)
        >>> g2 = build_root_system("G", 2)
        >>> g2.simple_reflection(1, (1, 0)), g2.simple_reflection(1, (0, 1))
        ((Fraction(-1, 1), Fraction(0, 1)), (Fraction(1, 1), Fraction(1, 1)))
        """
        if not 1 <= i <= self.rank:
            raise ValueError(f"reflection index {i} out of range 1..{self.rank}")
        if len(p) != self.rank:
            raise DimensionMismatchError(f"Cartan point has {len(p)} coordinates, expected {self.rank}")
        p = [to_fraction(x) for x in p]
        k = i - 1
        alpha_of_p = sum((p[j] * self.cartan_matrix[j][k] for j in range(self.rank)), Fraction(0))
        p[k] -= alpha_of_p
        return tuple(p)

    def reflect_root(self, i: int, root: Root) -> Root:
        """
        s_i(beta) = beta - beta(H_i) alpha_i, with a 1-based index i.

        >>> build_root_system("G", 2).reflect_root(1, (0, 1))
        (3, 1)
        """
        if not 1 <= i <= self.rank:
            raise ValueError(f"reflection index {i} out of range 1..{self.rank}")
        k = i - 1
        coefficient = self.pairing(root, k)
        return tuple(n - coefficient * (j == k) for j, n in enumerate(root))


def build_root_system(family: str, rank: int) -> RootSystem:
    return RootSystem(cartan_matrix(family, rank), str(family).upper())


class GVector:
    """
    A vector of the Lie algebra, stored sparsely over the Chevalley basis with exact coordinates.

    >>> x = GVector(3, {0: 1, 2: Fraction(1, 2)})
    >>> y = GVector.basis(3, 2)
    >>> (x - y * Fraction(1, 2)) == GVector.basis(3, 0)
    True
    >>> x + GVector(4)
    Traceback (most recent call last):
    ...
    liepyx.errors.DimensionMismatchError: cannot combine vectors of dimensions 3 and 4
    """

    __slots__ = ("dim", "coords")

    def __init__(self, dim: int, coords: dict = None):
        self.dim = dim
        self.coords = {}
        for i, value in (coords or {}).items():
            if not 0 <= i < dim:
                raise DimensionMismatchError(f"coordinate index {i} out of range for dimension {dim}")
            value = to_fraction(value)
            if value:
                self.coords[i] = value

    @classmethod
    def _raw(cls, dim: int, coords: dict) -> "GVector":
        vector = object.__new__(cls)
        vector.dim = dim
        vector.coords = coords
        return vector

    @classmethod
    def basis(cls, dim: int, i: int) -> "GVector":
        return cls(dim, {i: 1})

    def _check(self, other: "GVector"):
        if not isinstance(other, GVector) or other.dim != self.dim:
            raise DimensionMismatchError(f"cannot combine vectors of dimensions {self.dim} and {getattr(other, 'dim', None)}")

    def __add__(self, other: "GVector") -> "GVector":
        self._check(other)
        coords = dict(self.coords)
        for i, value in other.coords.items():
            total = coords.get(i, 0) + value
            if total:
                coords[i] = total
            else:
                coords.pop(i, None)
        return GVector._raw(self.dim, coords)

    def __neg__(self) -> "GVector":
        return GVector._raw(self.dim, {i: -v for i, v in self.coords.items()})

    def __sub__(self, other: "GVector") -> "GVector":
        return self + (-other)

    def __mul__(self, scalar) -> "GVector":
        scalar = to_fraction(scalar)
        if not scalar:
            return GVector._raw(self.dim, {})
        return GVector._raw(self.dim, {i: v * scalar for i, v in self.coords.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, GVector) and self.dim == other.dim and self.coords == other.coords

    def __hash__(self):
        return hash((self.dim, frozenset(self.coords.items())))

    def __getitem__(self, i: int) -> Fraction:
        return self.coords.get(i, Fraction(0))

    def is_zero(self) -> bool:
        return not self.coords

    def items(self):
        return sorted(self.coords.items())

    def to_list(self) -> list[Fraction]:
        return [self[i] for i in range(self.dim)]

    def __repr__(self):
        return "GVector(%d, {%s})" % (self.dim, ", ".join(f"{i}: {v}" for i, v in self.items()))


class LieAlgebra:
    """
    A simple Lie algebra given by the structure constants of a Chevalley basis.

    >>> a1 = chevalley_constants(build_root_system("A", 1))
    >>> a1.labels
    ['H1', 'e[1]', 'e[-1]']
    >>> e, f, h = a1.basis_vector(1), a1.basis_vector(2), a1.basis_vector(0)
    >>> a1.bracket(e, f) == h, a1.bracket(h, e) == 2 * e
    (True, True)
    >>> a1.bracket(e, e).is_zero()
    True
    """

    def __init__(self, root_system: RootSystem, constants: dict, extraspecial_pairs: dict = None, structure: dict = None):
        self.root_system = root_system
        self.rank = l = root_system.rank
        positive = root_system.positive_roots
        self.num_of_positive_roots = P = len(positive)
        self.dim = l + 2 * P
        self.basis_roots: list[Root] = [(0,) * l] * l + list(positive) + [_neg(r) for r in positive]
        self.heights = [sum(r) for r in self.basis_roots]
        self.root_index = {r: l + k for k, r in enumerate(positive)}
        self.root_index.update({_neg(r): l + P + k for k, r in enumerate(positive)})
        self.labels = [f"H{i+1}" for i in range(l)] + ["e[" + ",".join(map(str, r)) + "]" for r in self.basis_roots[l:]]
        self.variables = cartan_variables(l) + tuple(root_variable(r) for r in self.basis_roots[l:])
        self.constants = constants                                 # (i, j) -> tuple of (k, c)
        self.extraspecial_pairs = extraspecial_pairs or {}         # positive root -> (alpha, beta)
        self.structure = structure or {}                           # (r, s) -> N_{r,s}, roots r, s, r+s
        self.indices_by_height: dict[int, list[int]] = {}
        for index, h in enumerate(self.heights):
            self.indices_by_height.setdefault(h, []).append(index)

    @property
    def label(self) -> str:
        return self.root_system.label

    ### basis elements

    def basis_vector(self, i: int) -> GVector:
        return GVector._raw(self.dim, {i: Fraction(1)})

    def cartan_vector(self, i: int) -> GVector:
        """H_{alpha_i} for a 0-based index i."""
        return self.basis_vector(i)

    def root_vector(self, root: Root) -> GVector:
        return self.basis_vector(self.root_index[tuple(root)])

    def zero(self) -> GVector:
        return GVector._raw(self.dim, {})

    def epsilon(self) -> GVector:
        """The principal nilpotent of height -1: the sum of the negative simple root vectors."""
        return GVector._raw(self.dim, {self.root_index[_neg(r)]: Fraction(1) for r in self.root_system.simple_roots})

    def coroot(self, root: Root) -> dict[int, int]:
        """
        The coordinates of H_alpha over H_1..H_l, for a positive root alpha.

        >>> g2 = chevalley_constants(build_root_system("G", 2))
        >>> g2.coroot((1, 1)), g2.coroot((3, 2))
        ({0: 1, 1: 3}, {0: 1, 1: 2})
        """
        rs = self.root_system
        norm = rs.norm(root)
        result = {}
        for i, n in enumerate(root):
            if n:
                value = n * 2 * rs.symmetrizer[i] / norm
                assert value.denominator == 1, f"non-integral coroot of {root}"
                result[i] = int(value)
        return result

    ### heights

    def height_set(self, x: GVector) -> set[int]:
        return {self.heights[i] for i in x.coords}

    def height_of(self, x: GVector):
        """The height of a nonzero homogeneous vector, or None."""
        heights = self.height_set(x)
        return heights.pop() if len(heights) == 1 else None

    def is_homogeneous(self, x: GVector) -> bool:
        return len(self.height_set(x)) <= 1

    def root_of(self, i: int) -> Root:
        return self.basis_roots[i]

    ### brackets

    def bracket_basis(self, i: int, j: int) -> tuple:
        """[b_i, b_j] as a tuple of (k, c) pairs."""
        return self.constants.get((i, j), ())

    def bracket(self, x: GVector, y: GVector) -> GVector:
        """
        The bilinear extension of the structure constants.

        >>> a2 = chevalley_constants(build_root_system("A", 2))
        >>> a2.bracket(a2.cartan_vector(0), a2.root_vector((1, 1))) == a2.root_vector((1, 1))
        True
        """
        if x.dim != self.dim or y.dim != self.dim:
            raise DimensionMismatchError(f"cannot bracket vectors of dimensions {x.dim} and {y.dim} in an algebra of dimension {self.dim}")
        coords = {}
        for i, xi in x.coords.items():
            for j, yj in y.coords.items():
                for k, c in self.constants.get((i, j), ()):
                    coords[k] = coords.get(k, 0) + xi * yj * c
        return GVector._raw(self.dim, {k: v for k, v in coords.items() if v})

    def ad_matrix(self, x: GVector) -> list[list[Fraction]]:
        """The matrix of ad_x (columns are the images of the basis vectors)."""
        columns = [self.bracket(x, self.basis_vector(j)).to_list() for j in range(self.dim)]
        return [[columns[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def structure_constant(self, r: Root, s: Root) -> int:
        """N_{r,s}, with [e_r, e_s] = N_{r,s} e_{r+s}; 0 when r+s is not a root."""
        return self.structure.get((tuple(r), tuple(s)), 0)

    def simple_reflection(self, i: int, p) -> tuple[Fraction, ...]:
        return self.root_system.simple_reflection(i, p)

    ### serialization

    def to_json(self) -> dict:
        return {
            "format": "liepyx-lie-algebra",
            "version": JSON_FORMAT_VERSION,
            "family": self.root_system.family,
            "rank": self.rank,
            "cartan_matrix": [list(row) for row in self.root_system.cartan_matrix],
            "labels": self.labels,
            "roots": [list(r) for r in self.basis_roots],
            "constants": [[i, j, k, c] for (i, j), entries in sorted(self.constants.items()) for k, c in entries],
            "extraspecial_pairs": [[list(eta), list(alpha), list(beta)]
                                   for eta, (alpha, beta) in sorted(self.extraspecial_pairs.items())],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "LieAlgebra":
        if obj.get("format") != "liepyx-lie-algebra" or obj.get("version") != JSON_FORMAT_VERSION:
            raise ValueError(f"not a version-{JSON_FORMAT_VERSION} liepyx Lie algebra document")
        root_system = RootSystem(obj["cartan_matrix"], obj["family"])
        constants = {}
        for i, j, k, c in obj["constants"]:
            constants.setdefault((i, j), []).append((k, c))
        pairs = {tuple(eta): (tuple(alpha), tuple(beta)) for eta, alpha, beta in obj["extraspecial_pairs"]}
        algebra = cls(root_system, {key: tuple(value) for key, value in constants.items()}, pairs)
        if [list(r) for r in algebra.basis_roots] != obj["roots"]:
            raise ValueError("the stored roots do not match the closure of the stored Cartan matrix")
        algebra.structure = _structure_from_constants(algebra)
        return algebra

    def content_hash(self) -> str:
        return hashlib.sha256(json.dumps(self.to_json(), sort_keys=True).encode()).hexdigest()


def _structure_from_constants(algebra: LieAlgebra) -> dict:
    structure = {}
    l = algebra.rank
    for (i, j), entries in algebra.constants.items():
        if i >= l and j >= l:
            for k, c in entries:
                if k >= l:
                    structure[(algebra.basis_roots[i], algebra.basis_roots[j])] = c
    return structure


def chevalley_constants(root_system: RootSystem, jacobi_samples: int = DEFAULT_JACOBI_SAMPLES,
                        random_seed: int = DEFAULT_RANDOM_SEED) -> LieAlgebra:
    """
    Build the structure constants of a Chevalley basis.

    The constants N_{alpha,beta} of the extraspecial pairs are +(p+1); the other special pairs
    follow from the four-root identity, and pairs with mixed signs from the three-root identity.

    >>> g2 = chevalley_constants(build_root_system("G", 2))
    >>> g2.dim
    14
    >>> g2.structure_constant((1, 0), (0, 1)), g2.structure_constant((1, 0), (2, 1)), g2.structure_constant((1, 1), (2, 1))
    (1, 3, -3)
    """
    rs = root_system
    positive = rs.positive_roots
    positive_set = set(positive)
    order = {r: k for k, r in enumerate(positive)}
    root_set = rs.root_set
    N: dict[tuple[Root, Root], int] = {}
    extraspecial = {}

    def string_length(r: Root, s: Root) -> int:
        # the largest p with s - p*r a root
        p, t = 0, _sub(s, r)
        while t in root_set:
            p, t = p + 1, _sub(t, r)
        return p

    def n(r: Root, s: Root) -> Fraction:
        total = _add(r, s)
        if total not in root_set:
            return Fraction(0)
        r_positive, s_positive = _is_positive(r), _is_positive(s)
        if r_positive and s_positive:
            return Fraction(N[(r, s)])
        if not r_positive and not s_positive:
            return -Fraction(N[(_neg(r), _neg(s))])
        psi = _neg(total)          # r + s + psi = 0
        if _is_positive(psi) == s_positive:
            return rs.norm(psi) / rs.norm(r) * n(s, psi)
        return rs.norm(psi) / rs.norm(s) * n(psi, r)

    for eta in positive:
        pairs = sorted(
            ((xi, _sub(eta, xi)) for xi in positive if _sub(eta, xi) in positive_set and order[xi] < order[_sub(eta, xi)]),
            key=lambda pair: order[pair[0]])
        if not pairs:
            continue
        alpha, beta = pairs[0]
        extraspecial[eta] = (alpha, beta)
        N[(alpha, beta)] = string_length(alpha, beta) + 1
        N[(beta, alpha)] = -N[(alpha, beta)]
        for xi, zeta in pairs[1:]:
            value = Fraction(0)
            if _sub(zeta, alpha) in root_set and _sub(xi, beta) in root_set:
                value += n(zeta, _neg(alpha)) * n(xi, _neg(beta)) / rs.norm(_sub(zeta, alpha))
            if _sub(xi, alpha) in root_set and _sub(zeta, beta) in root_set:
                value += n(_neg(alpha), xi) * n(zeta, _neg(beta)) / rs.norm(_sub(xi, alpha))
            value *= rs.norm(eta) / N[(alpha, beta)]
            expected = string_length(xi, zeta) + 1
            if value.denominator != 1 or abs(value) != expected:
                raise ChevalleyConsistencyError(f"N{xi, zeta} = {value}, expected +-{expected}")
            N[(xi, zeta)] = int(value)
            N[(zeta, xi)] = -int(value)

    algebra = LieAlgebra(rs, {}, extraspecial)
    l, dim = rs.rank, algebra.dim
    constants = {}
    structure = {}
    roots = algebra.basis_roots
    for i in range(dim):
        for j in range(dim):
            entries = ()
            if i < l and j >= l:
                value = rs.pairing(roots[j], i)
                entries = ((j, value),) if value else ()
            elif i >= l and j < l:
                value = rs.pairing(roots[i], j)
                entries = ((i, -value),) if value else ()
            elif i >= l and j >= l:
                r, s = roots[i], roots[j]
                total = _add(r, s)
                if not any(total):
                    if _is_positive(r):
                        entries = tuple(sorted(algebra.coroot(r).items()))
                    else:
                        entries = tuple(sorted((k, -c) for k, c in algebra.coroot(s).items()))
                elif total in root_set:
                    value = n(r, s)
                    if value.denominator != 1 or value == 0:
                        raise ChevalleyConsistencyError(f"non-integral structure constant N{r, s} = {value}")
                    entries = ((algebra.root_index[total], int(value)),)
                    structure[(r, s)] = int(value)
            if entries:
                constants[(i, j)] = entries
    algebra.constants = constants
    algebra.structure = structure

    for (i, j), entries in constants.items():
        if constants.get((j, i), ()) != tuple((k, -c) for k, c in entries):
            raise ChevalleyConsistencyError(f"bracket of basis elements {i}, {j} is not antisymmetric")
    violation = check_jacobi(algebra, samples=jacobi_samples, random_seed=random_seed)
    if violation is not None:
        raise ChevalleyConsistencyError(f"Jacobi identity fails on the basis triple {violation}")
    logger.info("Chevalley basis of %s: dimension %d, %d nonzero brackets", algebra.label, dim, len(constants))
    return algebra


def bracket(algebra: LieAlgebra, x: GVector, y: GVector) -> GVector:
    return algebra.bracket(x, y)


def jacobi_sum(algebra: LieAlgebra, i: int, j: int, k: int) -> GVector:
    x, y, z = algebra.basis_vector(i), algebra.basis_vector(j), algebra.basis_vector(k)
    return (algebra.bracket(x, algebra.bracket(y, z))
            + algebra.bracket(y, algebra.bracket(z, x))
            + algebra.bracket(z, algebra.bracket(x, y)))


def check_jacobi(algebra: LieAlgebra, samples: int = None, random_seed: int = DEFAULT_RANDOM_SEED):
    """
    Check the Jacobi identity on basis triples: all triples when samples is None,
    otherwise the given number of random triples. Returns the first failing triple, or None.

    >>> check_jacobi(chevalley_constants(build_root_system("B", 2))) is None
    True
    """
    dim = algebra.dim
    if samples is None:
        triples = combinations(range(dim), 3)
    else:
        rng = np.random.default_rng(random_seed)
        logger.debug("Sampling %d Jacobi triples with seed %d", samples, random_seed)
        triples = (tuple(int(t) for t in rng.choice(dim, size=3, replace=False)) for _ in range(samples))
    for triple in triples:
        if not jacobi_sum(algebra, *triple).is_zero():
            return triple
    return None


def build_lie_algebra(family: str, rank: int, **kwargs) -> LieAlgebra:
    return chevalley_constants(build_root_system(family, rank), **kwargs)


if __name__ == "__main__":
    import doctest
    print(doctest.testmod())
