"""
Compute the pairing values <d_W d_eps^b d_p^a d_U, I> of an invariant I by induction,
and assemble I from them.

Every reduction rests on one identity: for an invariant I and any v in g,
the sum over the factors y of a pairing term, with y replaced by [v, y], vanishes.
Choosing v as an ad-epsilon preimage of one factor turns that factor into one more copy of epsilon:
    (b+1) <w eps^b rest> = sum over the other factors <eps^{b+1} ... [v, y] ...> + a <eps^{b+1} p^{a-1} [v, p] rest>
where [epsilon, v] = w. Writing p = [epsilon, x_p] with x_p = -sum p_i e_{alpha_i} gives the rule for a >= 1.

Factors of height 0 and -1 never appear in keys: H_i factors become p-derivatives,
and e_{-alpha_i} factors are absorbed into powers of epsilon by the multinomial expansion of eps^b.

Programmer: liepyx team
Since: 2026-10
"""

import hashlib
import json
import logging
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, prod

from liepyx.errors import InductionOrderError, NotInImageError, SeedError, CheckpointMismatchError
from liepyx.explanations import ExplanationLogger
from liepyx.kostant import KostantFrame
from liepyx.polycore import Polynomial, cartan_variables, to_fraction
from liepyx.rootdata import GVector
from liepyx.termgen import TermKey, TermLists, generate_terms, is_admissible, pure_cartan_key, ntms_strata

logger = logging.getLogger(__name__)

SCOPES = ("borel", "full")
SEED_MODES = ("primitive", "generic")
JSON_FORMAT_VERSION = 1


class ValueTable:
    """
    The values of the pairing terms of one invariant: TermKey -> polynomial in p1..pl.
    Append-only; a key that is admissible but missing is an induction-order defect.
    """

    def __init__(self, frame: KostantFrame, degree: int, term_lists: TermLists, index: int = None,
                 scope: str = "full", mode: str = "primitive"):
        self.frame = frame
        self.degree = degree
        self.term_lists = term_lists
        self.index = index
        self.scope = scope
        self.mode = mode
        self.variables = cartan_variables(frame.rank)
        self.zero = Polynomial.zero(self.variables)
        self.one = Polynomial.one(self.variables)
        self.p = [Polynomial.variable(self.variables, name) for name in self.variables]
        self.seeds: dict[TermKey, Fraction] = {}
        self.values: dict[TermKey, Polynomial] = {}
        self._monomial_cache: dict = {}

    def __len__(self):
        return len(self.values)

    def __contains__(self, key: TermKey) -> bool:
        return key in self.values

    def lookup(self, key: TermKey) -> Polynomial:
        value = self.values.get(key)
        if value is not None:
            return value
        if not is_admissible(self.frame, key, self.degree):
            return self.zero
        if self.scope == "borel" and key.W:
            raise InductionOrderError(f"{key.bookkeeping()} has negative factors, which a borel-scope table does not hold")
        raise InductionOrderError(f"the value of {key.bookkeeping()} is needed before it is computed")

    def store(self, key: TermKey, value: Polynomial):
        if key in self.values:
            raise InductionOrderError(f"the value of {key.bookkeeping()} is already stored")
        if not is_admissible(self.frame, key, self.degree):
            raise InductionOrderError(f"{key.bookkeeping()} is not an admissible term of degree {self.degree}")
        assert value.degree() <= key.a, f"{key.bookkeeping()} got a value of degree {value.degree()}"
        self.values[key] = value

    ### serialization and checkpoints

    def seeds_json(self) -> list:
        return [[key.to_json_obj(), str(value)] for key, value in sorted(self.seeds.items())]

    def content_hash(self) -> str:
        document = {"frame": self.frame.content_hash(), "degree": self.degree, "scope": self.scope, "seeds": self.seeds_json()}
        return hashlib.sha256(json.dumps(document, sort_keys=True).encode()).hexdigest()

    def to_json(self) -> dict:
        return {
            "format": "liepyx-value-table",
            "version": JSON_FORMAT_VERSION,
            "content_hash": self.content_hash(),
            "degree": self.degree,
            "index": self.index,
            "scope": self.scope,
            "mode": self.mode,
            "seeds": self.seeds_json(),
            "values": [[key.to_json_obj(), value.to_json_obj()] for key, value in self.values.items()],
        }

    def save_checkpoint(self, path: str):
        temporary = f"{path}.tmp"
        with open(temporary, "w") as file:
            json.dump(self.to_json(), file)
        os.replace(temporary, path)
        logger.debug("Checkpoint with %d values written to %s", len(self.values), path)

    def resume_from(self, path: str) -> int:
        """Load the values of a checkpoint written for the same frame, degree, scope and seeds. Returns the number loaded."""
        with open(path) as file:
            document = json.load(file)
        if document.get("format") != "liepyx-value-table" or document.get("version") != JSON_FORMAT_VERSION:
            raise CheckpointMismatchError(f"{path} is not a version-{JSON_FORMAT_VERSION} liepyx value table")
        if document["content_hash"] != self.content_hash():
            raise CheckpointMismatchError(f"{path} was written for another frame, degree, scope or seed vector")
        loaded = 0
        for key_obj, poly_obj in document["values"]:
            key = TermKey.from_json_obj(key_obj)
            if key not in self.values:
                self.values[key] = Polynomial.from_json_obj(poly_obj, self.variables)
                loaded += 1
        logger.info("Resumed %d values from %s", loaded, path)
        return loaded


@dataclass(frozen=True)
class RootMonomial:
    """
    A product of root vectors: its factors (root-basis indices), total root, factor count and height.
    """
    factors: tuple
    total_root: tuple
    count: int
    height: int

    @classmethod
    def of(cls, algebra, factors) -> "RootMonomial":
        factors = tuple(sorted(factors))
        total = [0] * algebra.rank
        for index in factors:
            for i, n in enumerate(algebra.basis_roots[index]):
                total[i] += n
        return cls(factors, tuple(total), len(factors), sum(total))


### the pairing evaluator

def key_factors(table: ValueTable, key: TermKey) -> list:
    """A factor is a list of (polynomial coefficient, f-coordinates) pairs."""
    return [[(table.one, {f: Fraction(1)})] for f in key.W + key.U]


def pairing(table: ValueTable, factors: list, b: int, a: int) -> Polynomial:
    """
    The pairing of a formal product of factors with eps^b p^a, expanded multilinearly over the f-basis.
    """
    terms = {(): table.one}
    for factor in factors:
        expanded = {}
        for monomial, coefficient in terms.items():
            for poly, coordinates in factor:
                scaled = coefficient * poly
                for f, c in coordinates.items():
                    new_monomial = tuple(sorted(monomial + (f,)))
                    term = scaled.scale(c)
                    expanded[new_monomial] = expanded[new_monomial] + term if new_monomial in expanded else term
        terms = expanded
    heights = table.frame.f_heights
    result = table.zero
    for monomial, coefficient in terms.items():
        if coefficient.is_zero() or sum(heights[f] for f in monomial) != b:
            continue
        value = monomial_value(table, monomial, b, a)
        if not value.is_zero():
            result = result + coefficient * value
    return result


def monomial_value(table: ValueTable, monomial: tuple, b: int, a: int) -> Polynomial:
    """The pairing of a product of f-basis vectors (sorted f-indices) with eps^b p^a."""
    cache_key = (monomial, b, a)
    cached = table._monomial_cache.get(cache_key)
    if cached is not None:
        return cached
    frame = table.frame
    heights = frame.f_heights
    assert len(monomial) + a + b == table.degree, f"pairing of degree {len(monomial) + a + b}, expected {table.degree}"
    if sum(heights[f] for f in monomial) != b:
        value = table.zero
    elif any(heights[f] == -1 for f in monomial):
        value = reduce_mixed(table, monomial, b, a)
    else:
        cartan = [f for f in monomial if heights[f] == 0]
        W = tuple(f for f in monomial if heights[f] <= -2)
        U = tuple(f for f in monomial if heights[f] >= 1)
        value = table.lookup(TermKey(W, U, b, a + len(cartan)))
        # <p^a H_i ...> = a!/(a+1)! d/dp_i <p^{a+1} ...>
        for f in cartan:
            value = value.partial_derivative(f)
        if cartan and not value.is_zero():
            value = value.scale(Fraction(factorial(a), factorial(a + len(cartan))))
    table._monomial_cache[cache_key] = value
    return value


def reduce_mixed(table: ValueTable, monomial: tuple, b: int, a: int) -> Polynomial:
    """
    Absorb the e_{-alpha_i} factors into eps^b.

    Expanding eps^N multinomially, only the power prod e_{-alpha_i}^{n_i} with n = total root of the
    other factors survives, so
        <eps^b prod e_{-alpha_i}^{k_i} V> = b! prod n_i! / (N! prod (n_i - k_i)!) <eps^N V>,  N = b + sum k_i,
    for every root monomial V. The other factors are therefore expanded over root vectors first.
    """
    frame = table.frame
    algebra = frame.algebra
    heights = frame.f_heights
    k = [0] * frame.rank
    cartan, rest = [], []
    for f in monomial:
        if heights[f] == -1:
            k[frame.negative_simple_f.index(f)] += 1
        elif heights[f] == 0:
            cartan.append(f)
        else:
            rest.append(f)
    N = b + sum(k)

    root_terms = {(): Fraction(1)}
    for f in rest:
        expanded = {}
        for roots, coefficient in root_terms.items():
            for r, c in frame.f_vectors[f].coords.items():
                new_roots = tuple(sorted(roots + (r,)))
                expanded[new_roots] = expanded.get(new_roots, 0) + coefficient * c
        root_terms = {roots: c for roots, c in expanded.items() if c}

    result = table.zero
    for roots, coefficient in root_terms.items():
        V = RootMonomial.of(algebra, roots)
        n = V.total_root
        if V.height != N or any(n_i < k_i for n_i, k_i in zip(n, k)):
            continue
        ratio = Fraction(factorial(b) * prod(factorial(n_i) for n_i in n),
                         factorial(N) * prod(factorial(n_i - k_i) for n_i, k_i in zip(n, k)))
        factors = [[(table.one, frame.root_to_f[r])] for r in V.factors] + [[(table.one, {f: Fraction(1)})] for f in cartan]
        value = pairing(table, factors, N, a)
        if not value.is_zero():
            result = result + value.scale(coefficient * ratio)
    return result


### reductions

def _bracket_factor(frame: KostantFrame, v: GVector, factor: list) -> list:
    return [(poly, frame.to_f_basis(frame.algebra.bracket(v, frame.to_root_basis(coordinates))))
            for poly, coordinates in factor]


def _peel(table: ValueTable, factors: list, position: int, v1: GVector, b: int, a: int) -> Polynomial:
    """Replace factors[position] = [epsilon, v1] by one more copy of epsilon."""
    frame = table.frame
    others = factors[:position] + factors[position + 1:]
    total = table.zero
    for n, y in enumerate(others):
        bracketed = _bracket_factor(frame, v1, y)
        total = total + pairing(table, others[:n] + [bracketed] + others[n + 1:], b + 1, a)
    if a >= 1:
        p_factor = [(table.p[i], frame.to_f_basis(frame.algebra.bracket(v1, frame.algebra.cartan_vector(i))))
                    for i in range(frame.rank)]
        total = total + pairing(table, others + [p_factor], b + 1, a - 1).scale(a)
    return total.scale(Fraction(1, b + 1))


def _checked_preimage(frame: KostantFrame, f: int, preimage: GVector) -> GVector:
    if preimage is None:
        return frame.preimage_of_f(f)
    if frame.ad_epsilon(preimage) != frame.f_vectors[f]:
        raise NotInImageError(f"the given vector is not an ad-epsilon preimage of f{f+1}")
    return preimage


def reduce_top(table: ValueTable, key: TermKey, position: int = None, preimage: GVector = None) -> Polynomial:
    """
    Peel the U-factor at the given position (by default the first one outside the slice)
    through its ad-epsilon preimage.
    """
    frame = table.frame
    if position is None:
        position = next((n for n, f in enumerate(key.U) if f not in frame.slice_f), None)
        if position is None:
            raise NotInImageError(f"{key.bookkeeping()} is a pure-slice term: no factor can be peeled")
    v1 = _checked_preimage(frame, key.U[position], preimage)
    return _peel(table, key_factors(table, key), key.beta + position, v1, key.b, key.a)


def reduce_negative(table: ValueTable, key: TermKey, position: int = 0, preimage: GVector = None,
                    kernel_element: GVector = None) -> Polynomial:
    """
    Peel the W-factor at the given position through an ad-epsilon preimage,
    optionally shifted by an element of the kernel of ad epsilon.
    """
    frame = table.frame
    if not key.W:
        raise ValueError(f"{key.bookkeeping()} has no negative factor")
    v1 = _checked_preimage(frame, key.W[position], preimage)
    if kernel_element is not None:
        if not frame.ad_epsilon(kernel_element).is_zero():
            raise ValueError("the kernel element is not killed by ad epsilon")
        v1 = v1 + kernel_element
    return _peel(table, key_factors(table, key), position, v1, key.b, key.a)


def alpha_of_p(table: ValueTable, i: int) -> Polynomial:
    """alpha_i(p) = sum_k A[k][i] p_k."""
    A = table.frame.algebra.root_system.cartan_matrix
    return Polynomial.linear(table.variables, {k: A[k][i] for k in range(table.frame.rank)})


def reduce_p(table: ValueTable, key: TermKey) -> Polynomial:
    """
    Write one copy of p as [epsilon, x_p] with x_p = -sum p_i e_{alpha_i} and peel it.
    """
    if key.a < 1:
        raise ValueError(f"{key.bookkeeping()} has no factor p")
    frame = table.frame
    algebra = frame.algebra
    simple = [algebra.root_vector(root) for root in algebra.root_system.simple_roots]
    factors = key_factors(table, key)
    b, a = key.b, key.a
    total = table.zero
    for n, y in enumerate(factors):
        y_vector = frame.to_root_basis(y[0][1])
        replaced = [(table.p[i], frame.to_f_basis(algebra.bracket(y_vector, simple[i]))) for i in range(frame.rank)]
        total = total + pairing(table, factors[:n] + [replaced] + factors[n + 1:], b + 1, a - 1)
    if a >= 2:
        extra = [(table.p[i] * alpha_of_p(table, i), frame.to_f_basis(simple[i])) for i in range(frame.rank)]
        total = total + pairing(table, factors + [extra], b + 1, a - 2).scale(a - 1)
    return total.scale(Fraction(1, b + 1))


def pure_cartan(table: ValueTable) -> Polynomial:
    """<d_p^d, I>, a polynomial of degree d in p."""
    return reduce_p(table, pure_cartan_key(table.degree))


def cartan_restriction(table: ValueTable) -> Polynomial:
    """
    I(p) = <d_p^d, I> / d!.

    >>> from liepyx.rootdata import build_lie_algebra
    >>> from liepyx.kostant import build_frame
    >>> print(cartan_restriction(compute_valuedata(build_frame(build_lie_algebra("A", 1)), 1, 2)))
    p1^2
    """
    return table.lookup(pure_cartan_key(table.degree)).scale(Fraction(1, factorial(table.degree)))


### seeds

def pure_slice_keys(frame: KostantFrame, term_lists: TermLists) -> list[TermKey]:
    slice_f = set(frame.slice_f)
    return [key for key in term_lists.ttms if all(f in slice_f for f in key.U)]


def slice_indices_of(frame: KostantFrame, key: TermKey) -> tuple[int, ...]:
    """The 1-based slice indices of the factors of a pure-slice key."""
    return tuple(sorted(frame.slice_f.index(f) + 1 for f in key.U))


def seed_values(frame: KostantFrame, j: int, d: int, mode: str = "primitive", constants: dict = None,
                term_lists: TermLists = None, scope: str = "full") -> ValueTable:
    """
    Start a value table with the values of the pure-slice terms.

    In primitive mode, <d_{s_j} d_eps^{m_j}, I_j> = m_j! and every other pure-slice term is 0.
    In generic mode the values come from `constants`, keyed by the multiset of 1-based slice indices.

    >>> from liepyx.rootdata import build_lie_algebra
    >>> from liepyx.kostant import build_frame
    >>> table = seed_values(build_frame(build_lie_algebra("G", 2)), 2, 6)
    >>> sorted((key.bookkeeping(), value) for key, value in table.seeds.items())
    [('W=() U=(f3,f3,f3) b=3 a=0', Fraction(0, 1)), ('W=() U=(f8) b=5 a=0', Fraction(120, 1))]
    """
    if mode not in SEED_MODES:
        raise SeedError(f"unknown seed mode {mode!r}; expected one of {SEED_MODES}")
    if scope not in SCOPES:
        raise ValueError(f"unknown scope {scope!r}; expected one of {SCOPES}")
    num_of_slices = len(frame.slice)
    if mode == "primitive":
        if j is None or not 1 <= j <= num_of_slices:
            raise SeedError(f"slice index {j} out of range 1..{num_of_slices}")
        if d != frame.degrees[j - 1]:
            raise SeedError(f"the primitive invariant I_{j} has degree {frame.degrees[j - 1]}, not {d}")
    if term_lists is None:
        term_lists = generate_terms(frame, d, borel_only=(scope == "borel"))
    table = ValueTable(frame, d, term_lists, index=j, scope=scope, mode=mode)

    keys = pure_slice_keys(frame, term_lists)
    if mode == "primitive":
        m = frame.exponents[j - 1]
        top = TermKey((), (frame.slice_f[j - 1],), m, 0)
        for key in keys:
            table.seeds[key] = Fraction(factorial(m)) if key == top else Fraction(0)
    else:
        by_indices = {slice_indices_of(frame, key): key for key in keys}
        constants = {tuple(sorted(indices)): to_fraction(value) for indices, value in (constants or {}).items()}
        for indices in constants:
            if indices not in by_indices:
                raise SeedError(f"{indices} is not a pure-slice term of degree {d}; the pure-slice terms are {sorted(by_indices)}")
        for indices, key in by_indices.items():
            table.seeds[key] = constants.get(indices, Fraction(0))
    for key, value in table.seeds.items():
        table.store(key, Polynomial.constant(table.variables, value))
    return table


### the driver

def _strata(table: ValueTable) -> list:
    """(stage, label, keys, rule) in evaluation order."""
    frame, term_lists = table.frame, table.term_lists
    strata = []
    for key in term_lists.ttms:
        if not strata or strata[-1][1] != ("b", key.b):
            strata.append(("ttms", ("b", key.b), [], "top"))
        strata[-1][2].append(key)
    for key in term_lists.ptms:
        if not strata or strata[-1][0] != "ptms" or strata[-1][1] != ("a", key.a):
            strata.append(("ptms", ("a", key.a), [], "p"))
        strata[-1][2].append(key)
    strata.append(("cartan", ("a", table.degree), [term_lists.pure_cartan], "cartan"))
    for label, keys in ntms_strata(frame, term_lists.ntms):
        strata.append(("ntms", label, keys, "negative"))
    return strata


RULES = {
    "top": reduce_top,
    "p": reduce_p,
    "cartan": lambda table, key: pure_cartan(table),
    "negative": reduce_negative,
}


def compute_valuedata(frame: KostantFrame, j: int, d: int, scope: str = "full", mode: str = "primitive",
                      constants: dict = None, workers: int = 1, checkpoint_path: str = None,
                      explanation_logger: ExplanationLogger = ExplanationLogger()) -> ValueTable:
    """
    Fill the value table stratum by stratum: ttms by descending b, ptms by ascending a,
    the pure-Cartan term, then ntms by ascending (|W|, |o(W)|).

    >>> from liepyx.rootdata import build_lie_algebra
    >>> from liepyx.kostant import build_frame
    >>> table = compute_valuedata(build_frame(build_lie_algebra("A", 1)), 1, 2)
    >>> len(table), str(table.lookup(pure_cartan_key(2)))
    (2, '2 * p1^2')
    """
    table = seed_values(frame, j, d, mode=mode, constants=constants, scope=scope)
    for key, value in table.seeds.items():
        explanation_logger.explain_value("seeds", key, "seed", value)
    if checkpoint_path is not None and os.path.exists(checkpoint_path):
        table.resume_from(checkpoint_path)

    for stage, label, keys, rule in _strata(table):
        pending = [key for key in keys if key not in table]
        if not pending:
            continue
        explanation_logger.explain_stage(stage, len(pending))
        reducer = RULES[rule]
        start = time.perf_counter()
        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as executor:
                values = list(executor.map(lambda key: reducer(table, key), pending))
        else:
            values = [reducer(table, key) for key in pending]
        for key, value in zip(pending, values):
            table.store(key, value)
            explanation_logger.explain_value(stage, key, rule, value)
        logger.info("Stratum %s %s: %d values in %.3f seconds", stage, label, len(pending), time.perf_counter() - start)
        if checkpoint_path is not None:
            table.save_checkpoint(checkpoint_path)
    return table


### assembly

def borel_variables(algebra) -> tuple[str, ...]:
    return algebra.variables[:algebra.rank + algebra.num_of_positive_roots]


def root_of_variable(name: str):
    """The root of an "x[...]" coordinate name, or None for a Cartan coordinate."""
    if not name.startswith("x["):
        return None
    return tuple(int(n) for n in name[2:-1].split(","))


@dataclass
class InvariantPolynomial:
    """
    An assembled invariant: over all coordinates of g (scope "full"),
    or over p and the positive-root coordinates, as I(p + epsilon + sum x_alpha e_alpha) (scope "borel").
    """
    polynomial: Polynomial
    scope: str
    family: str
    rank: int
    degree: int
    index: int = None
    mode: str = "primitive"
    seeds: dict = field(default_factory=dict)
    metadata: dict = field(default_factory=dict)

    @property
    def variables(self) -> tuple[str, ...]:
        return self.polynomial.variables

    def borel_restriction(self) -> "InvariantPolynomial":
        """x_{-alpha_i} -> 1 and the other negative-root coordinates -> 0."""
        if self.scope == "borel":
            return self
        assignment, kept = {}, []
        for name in self.variables:
            root = root_of_variable(name)
            if root is not None and any(n < 0 for n in root):
                assignment[name] = 1 if sum(root) == -1 else 0
            else:
                kept.append(name)
        polynomial = self.polynomial.substitute(assignment, variables=kept)
        return InvariantPolynomial(polynomial, "borel", self.family, self.rank, self.degree, self.index,
                                   self.mode, dict(self.seeds), dict(self.metadata))

    def cartan_restriction(self) -> Polynomial:
        """I(p): every root coordinate -> 0 (for a borel-scope form this is I(p + epsilon), which is the same)."""
        assignment = {name: 0 for name in self.variables if root_of_variable(name) is not None}
        return self.polynomial.substitute(assignment, variables=cartan_variables(self.rank))

    def to_text(self) -> str:
        return self.polynomial.to_text()

    def to_json(self) -> dict:
        return {
            "format": "liepyx-invariant",
            "version": JSON_FORMAT_VERSION,
            "family": self.family,
            "rank": self.rank,
            "degree": self.degree,
            "index": self.index,
            "scope": self.scope,
            "mode": self.mode,
            "seeds": self.seeds,
            "metadata": self.metadata,
            "variables": list(self.variables),
            "terms": self.polynomial.to_json_obj(),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "InvariantPolynomial":
        if obj.get("format") != "liepyx-invariant" or obj.get("version") != JSON_FORMAT_VERSION:
            raise ValueError(f"not a version-{JSON_FORMAT_VERSION} liepyx invariant document")
        polynomial = Polynomial.from_json_obj(obj["terms"], tuple(obj["variables"]))
        return cls(polynomial, obj["scope"], obj["family"], obj["rank"], obj["degree"], obj.get("index"),
                   obj.get("mode", "primitive"), obj.get("seeds", {}), obj.get("metadata", {}))


def assemble(table: ValueTable, scope: str = None, explanation_logger: ExplanationLogger = ExplanationLogger()) -> InvariantPolynomial:
    """
    Taylor-assemble the invariant from its pairing values:
        I(eps + p + sum y_f f) = sum over keys of value / (a! b! prod mult!) * prod y_f,
    then substitute the root coordinates for the y_f. The full form restores the coordinates of
    the negative simple root vectors by the torus action: each monomial of total root n gets prod x_{-alpha_i}^{n_i}.

    >>> from liepyx.rootdata import build_lie_algebra
    >>> from liepyx.kostant import build_frame
    >>> print(assemble(compute_valuedata(build_frame(build_lie_algebra("A", 1)), 1, 2)).polynomial)
    p1^2 + x[1]*x[-1]
    """
    scope = scope or table.scope
    if scope not in SCOPES:
        raise ValueError(f"unknown scope {scope!r}; expected one of {SCOPES}")
    if scope == "full" and table.scope == "borel":
        raise ValueError("a borel-scope table cannot be assembled into a full form")
    frame = table.frame
    algebra = frame.algebra
    variables = algebra.variables if scope == "full" else borel_variables(algebra)
    position = {name: k for k, name in enumerate(variables)}

    y_coefficients: dict[int, dict[str, Fraction]] = {}
    for root_index, expansion in frame.root_to_f.items():
        name = algebra.variables[root_index]
        if name in position and algebra.heights[root_index] not in (0, -1):
            for f, c in expansion.items():
                y_coefficients.setdefault(f, {})[name] = c
    y = {f: Polynomial.linear(variables, coefficients) for f, coefficients in y_coefficients.items()}

    epsilon_form = Polynomial.zero(variables)
    for key, value in table.values.items():
        if value.is_zero() or (scope == "borel" and key.W):
            continue
        multiplicities = {}
        for f in key.W + key.U:
            multiplicities[f] = multiplicities.get(f, 0) + 1
        denominator = factorial(key.a) * factorial(key.b) * prod(factorial(m) for m in multiplicities.values())
        term = value.with_variables(variables).scale(Fraction(1, denominator))
        for f, m in multiplicities.items():
            term = term * y[f] ** m
        epsilon_form = epsilon_form + term

    if scope == "full":
        polynomial = _restore_negative_simple(epsilon_form, algebra)
    else:
        polynomial = epsilon_form
    explanation_logger.explain_assembly(len(polynomial.terms), table.degree)
    logger.info("Assembled the %s form of degree %d for %s: %d monomials", scope, table.degree, algebra.label, len(polynomial.terms))
    seeds = {",".join(map(str, slice_indices_of(frame, key))): str(value) for key, value in table.seeds.items()}
    metadata = {
        "algebra": algebra.label,
        "frame_hash": frame.content_hash(),
        "table_hash": table.content_hash(),
        "term_counts": table.term_lists.counts(),
        "table_size": len(table),
    }
    return InvariantPolynomial(polynomial, scope, algebra.root_system.family, algebra.rank, table.degree,
                               table.index, table.mode, seeds, metadata)


def _restore_negative_simple(epsilon_form: Polynomial, algebra) -> Polynomial:
    variables = epsilon_form.variables
    roots = [algebra.basis_roots[k] for k in range(len(variables))]
    negative_simple = [variables.index(algebra.variables[algebra.root_index[tuple(-n for n in root)]])
                       for root in algebra.root_system.simple_roots]
    terms = {}
    for exps, c in epsilon_form.terms.items():
        n = [0] * algebra.rank
        for k, e in enumerate(exps):
            if e:
                for i, r in enumerate(roots[k]):
                    n[i] += e * r
        assert all(n_i >= 0 for n_i in n), f"monomial of total root {n} in the epsilon form"
        new_exps = list(exps)
        for i, k in enumerate(negative_simple):
            new_exps[k] += n[i]
        terms[tuple(new_exps)] = c
    polynomial = Polynomial(variables, terms)
    return polynomial


if __name__ == "__main__":
    import doctest
    print(doctest.testmod())
