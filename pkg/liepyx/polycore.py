"""
Exact sparse multivariate polynomials.

A Polynomial lives over a fixed tuple of variable names (its "universe").
Value-table entries are polynomials over the Cartan coordinates p1..pl ("CartanPoly");
assembled invariants are polynomials over all coordinates of the Lie algebra ("FullPoly").
Both are the same class; arithmetic between different universes is an error.

Coefficients are fractions.Fraction, so nothing is ever rounded.

Text format:  "3/2 * p1^2*x[1,0] - x[0,1]*x[-1,-1] + 5"
JSON format:  [{"coeff": "3/2", "exps": {"p1": 2, "x[1,0]": 1}}, ...]

Programmer: liepyx team
Since: 2026-10
"""

import json
import logging
import numbers
import re
from fractions import Fraction
from operator import add

from liepyx.errors import VariableUniverseError, UnboundVariableError, PolynomialFormatError

logger = logging.getLogger(__name__)

Monomial = tuple[int, ...]


def to_fraction(value) -> Fraction:
    """
    Convert an exact number (int, Fraction, numpy integer, sympy Rational or a "num/den" string) to a Fraction.

    >>> to_fraction(3), to_fraction("-3/6")
    (Fraction(3, 1), Fraction(-1, 2))
    >>> to_fraction(0.5)
    Traceback (most recent call last):
    ...
    TypeError: inexact coefficient 0.5
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return Fraction(value.strip())
    if hasattr(value, "p") and hasattr(value, "q"):    # sympy Rational / Integer
        return Fraction(int(value.p), int(value.q))
    if isinstance(value, numbers.Rational):
        return Fraction(int(value.numerator), int(value.denominator))
    raise TypeError(f"inexact coefficient {value}")


def cartan_variables(rank: int) -> tuple[str, ...]:
    """
    >>> cartan_variables(2)
    ('p1', 'p2')
    """
    return tuple(f"p{i+1}" for i in range(rank))


def root_variable(root: tuple[int, ...]) -> str:
    """
    The name of the coordinate of the root vector e_root.

    >>> root_variable((3, 2)), root_variable((-1, 0))
    ('x[3,2]', 'x[-1,0]')
    """
    return "x[" + ",".join(str(n) for n in root) + "]"


def _grlex_key(exps: Monomial):
    return (sum(exps), exps)


class Polynomial:
    """
    An immutable sparse polynomial with exact rational coefficients.

    >>> V = ("p1", "p2")
    >>> p1, p2 = Polynomial.variable(V, "p1"), Polynomial.variable(V, "p2")
    >>> print((p1 + p2) * (p1 - p2))
    p1^2 - p2^2
    >>> print((p1 + p2).scale(0))
    0
    >>> print(Fraction(1, 2) * p1 * p1 * p2 - 3)
    1/2 * p1^2*p2 - 3
    >>> (p1 + p2) ** 2 == p1*p1 + 2*p1*p2 + p2*p2
    True
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables, terms: dict = None):
        self.variables = tuple(variables)
        clean = {}
        num_of_variables = len(self.variables)
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != num_of_variables or min(exps, default=0) < 0:
                raise PolynomialFormatError(f"exponent vector {exps} does not fit the variables {self.variables}")
            coeff = to_fraction(coeff)
            if coeff != 0:
                clean[exps] = clean.get(exps, 0) + coeff
        self.terms = {exps: c for exps, c in clean.items() if c != 0}

    @classmethod
    def _raw(cls, variables: tuple, terms: dict) -> "Polynomial":
        # terms are trusted: Fraction coefficients, no zeros, right lengths.
        poly = object.__new__(cls)
        poly.variables = variables
        poly.terms = terms
        return poly

    ### Constructors

    @classmethod
    def zero(cls, variables) -> "Polynomial":
        return cls._raw(tuple(variables), {})

    @classmethod
    def constant(cls, variables, value) -> "Polynomial":
        variables = tuple(variables)
        value = to_fraction(value)
        return cls._raw(variables, {(0,) * len(variables): value} if value else {})

    @classmethod
    def one(cls, variables) -> "Polynomial":
        return cls.constant(variables, 1)

    @classmethod
    def variable(cls, variables, name) -> "Polynomial":
        """
        >>> print(Polynomial.variable(("p1", "p2"), "p2"))
        p2
        >>> Polynomial.variable(("p1",), "q")
        Traceback (most recent call last):
        ...
        liepyx.errors.UnboundVariableError: variable 'q' is not one of ('p1',)
        """
        variables = tuple(variables)
        index = _index_of(variables, name)
        exps = [0] * len(variables)
        exps[index] = 1
        return cls._raw(variables, {tuple(exps): Fraction(1)})

    @classmethod
    def linear(cls, variables, coefficients: dict, constant=0) -> "Polynomial":
        """
        Build constant + sum(coefficients[v] * v).

        >>> print(Polynomial.linear(("p1", "p2"), {"p1": 2, 1: -1}))
        2 * p1 - p2
        """
        variables = tuple(variables)
        terms = {}
        if to_fraction(constant):
            terms[(0,) * len(variables)] = to_fraction(constant)
        for name, coeff in coefficients.items():
            coeff = to_fraction(coeff)
            if coeff:
                exps = [0] * len(variables)
                exps[_index_of(variables, name)] = 1
                exps = tuple(exps)
                terms[exps] = terms.get(exps, 0) + coeff
        return cls._raw(variables, {e: c for e, c in terms.items() if c})

    ### Queries

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(exps) for exps in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.variables), Fraction(0))

    def coefficient(self, monomial) -> Fraction:
        """
        The coefficient of a monomial, given as an exponent tuple or as a dict {variable: power}.

        >>> P = Polynomial.from_text("3 * p1^2*p2 + p2", ("p1", "p2"))
        >>> P.coefficient({"p1": 2, "p2": 1}), P.coefficient((0, 2))
        (Fraction(3, 1), Fraction(0, 1))
        """
        if isinstance(monomial, dict):
            exps = [0] * len(self.variables)
            for name, power in monomial.items():
                exps[_index_of(self.variables, name)] = power
            monomial = tuple(exps)
        return self.terms.get(tuple(monomial), Fraction(0))

    def degree(self) -> int:
        """
        Total degree; the zero polynomial has degree -1.

        >>> Polynomial.from_text("p1^2*p2 + p2", ("p1", "p2")).degree()
        3
        """
        return max((sum(exps) for exps in self.terms), default=-1)

    def homogeneous_degree(self):
        """
        Return d if every stored monomial has total degree d, and None otherwise (or for the zero polynomial).

        >>> V = ("p1", "p2")
        >>> Polynomial.from_text("p1^2 - p1*p2", V).homogeneous_degree()
        2
        >>> Polynomial.from_text("p1^2 - p2", V).homogeneous_degree() is None
        True
        """
        degrees = {sum(exps) for exps in self.terms}
        return degrees.pop() if len(degrees) == 1 else None

    def is_homogeneous(self, degree: int) -> bool:
        return self.is_zero() or self.homogeneous_degree() == degree

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in the canonical order: descending graded-lex."""
        return sorted(self.terms.items(), key=lambda item: _grlex_key(item[0]), reverse=True)

    def used_variables(self) -> list[str]:
        return [name for k, name in enumerate(self.variables) if any(exps[k] for exps in self.terms)]

    ### Arithmetic

    def _check_universe(self, other: "Polynomial"):
        if self.variables != other.variables:
            raise VariableUniverseError(f"cannot combine polynomials over {self.variables} and {other.variables}")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check_universe(other)
            return other
        return Polynomial.constant(self.variables, other)

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            value = terms.get(exps, 0) + c
            if value:
                terms[exps] = value
            else:
                terms.pop(exps, None)
        return Polynomial._raw(self.variables, terms)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.variables, {exps: -c for exps, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def scale(self, factor) -> "Polynomial":
        factor = to_fraction(factor)
        if not factor:
            return Polynomial.zero(self.variables)
        return Polynomial._raw(self.variables, {exps: c * factor for exps, c in self.terms.items()})

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check_universe(other)
        if len(other.terms) == 1 and not any(next(iter(other.terms))):
            return self.scale(next(iter(other.terms.values())))
        terms = {}
        for exps_a, ca in self.terms.items():
            for exps_b, cb in other.terms.items():
                exps = tuple(map(add, exps_a, exps_b))
                terms[exps] = terms.get(exps, 0) + ca * cb
        return Polynomial._raw(self.variables, {e: c for e, c in terms.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, divisor) -> "Polynomial":
        divisor = to_fraction(divisor)
        assert divisor != 0, "division of a polynomial by zero"
        return self.scale(1 / divisor)

    def __pow__(self, exponent: int) -> "Polynomial":
        assert exponent >= 0
        result = Polynomial.one(self.variables)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.variables == other.variables and self.terms == other.terms
        if isinstance(other, (numbers.Rational, Fraction)):
            return self.is_constant() and self.constant_term() == other
        return NotImplemented

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    ### Calculus and substitution

    def partial_derivative(self, variable) -> "Polynomial":
        """
        Partial derivative by a variable name or a 0-based variable index.

        >>> V = ("p1", "p2")
        >>> print(Polynomial.from_text("p1^2*p2", V).partial_derivative("p1"))
        2 * p1*p2
        >>> print(Polynomial.from_text("7", V).partial_derivative(1))
        0
        """
        k = variable if isinstance(variable, int) else _index_of(self.variables, variable)
        terms = {}
        for exps, c in self.terms.items():
            e = exps[k]
            if e:
                new_exps = exps[:k] + (e - 1,) + exps[k + 1:]
                terms[new_exps] = c * e
        return Polynomial._raw(self.variables, terms)

    def substitute(self, assignment: dict, variables=None) -> "Polynomial":
        """
        Replace variables by polynomials (over the target universe) or by rationals.

        Variables that are not assigned are kept, and must then belong to the target universe,
        which defaults to the current one.

        >>> V = ("p1", "p2")
        >>> P = Polynomial.from_text("p1^2 + 2 * p1*p2 + 5", V)
        >>> print(P.substitute({"p1": -Polynomial.variable(V, "p1")}))
        p1^2 - 2 * p1*p2 + 5
        >>> print(P.substitute({"p1": 0, "p2": 0}))
        5
        >>> print(P.substitute({"p2": 1}, variables=("p1",)))
        p1^2 + 2 * p1 + 5
        >>> P.substitute({}, variables=("p1",))
        Traceback (most recent call last):
        ...
        liepyx.errors.UnboundVariableError: variable 'p2' is neither assigned nor one of ('p1',)
        """
        target = self.variables if variables is None else tuple(variables)
        target_index = {name: i for i, name in enumerate(target)}
        kept = {}     # source index -> target index
        images = {}   # source index -> Polynomial over target
        for k, name in enumerate(self.variables):
            if name in assignment:
                value = assignment[name]
                if isinstance(value, Polynomial):
                    if value.variables != target:
                        raise VariableUniverseError(f"image of {name} is over {value.variables}, expected {target}")
                    images[k] = value
                else:
                    images[k] = Polynomial.constant(target, value)
            elif name in target_index:
                kept[k] = target_index[name]
            else:
                raise UnboundVariableError(f"variable '{name}' is neither assigned nor one of {target}")
        powers = {}

        def power(k: int, e: int) -> Polynomial:
            if (k, e) not in powers:
                powers[(k, e)] = images[k] ** e
            return powers[(k, e)]

        result = {}
        width = len(target)
        for exps, c in self.terms.items():
            base = [0] * width
            for k, t in kept.items():
                base[t] += exps[k]
            partial = {tuple(base): c}
            for k in images:
                if exps[k]:
                    factor = power(k, exps[k]).terms
                    product_terms = {}
                    for ea, ca in partial.items():
                        for eb, cb in factor.items():
                            e = tuple(map(add, ea, eb))
                            product_terms[e] = product_terms.get(e, 0) + ca * cb
                    partial = product_terms
            for e, v in partial.items():
                result[e] = result.get(e, 0) + v
        return Polynomial._raw(target, {e: c for e, c in result.items() if c})

    def evaluate(self, point: dict) -> Fraction:
        """
        >>> Polynomial.from_text("p1^2 - 1/2 * p2", ("p1", "p2")).evaluate({"p1": 3, "p2": 1})
        Fraction(17, 2)
        """
        return self.substitute(point, variables=()).constant_term()

    def with_variables(self, variables) -> "Polynomial":
        """Embed into a larger universe that contains every variable of this one."""
        return self.substitute({}, variables=variables)

    ### Formats

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for exps, c in self.sorted_terms():
            monomial = "*".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(self.variables, exps) if e
            )
            magnitude = abs(c)
            if not monomial:
                body = str(magnitude)
            elif magnitude == 1:
                body = monomial
            else:
                body = f"{magnitude} * {monomial}"
            if not pieces:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append((" - " if c < 0 else " + ") + body)
        return "".join(pieces)

    __str__ = to_text

    def __repr__(self):
        return f"Polynomial({self.variables!r}, '{self.to_text()}')"

    @classmethod
    def from_text(cls, text: str, variables) -> "Polynomial":
        """
        Parse the text format; parse(print(P)) == P.

        >>> V = ("p1", "x[1,0]", "x[-1,0]")
        >>> P = Polynomial.from_text("-2/3 * p1^2 + x[1,0]*x[-1,0] - 4", V)
        >>> Polynomial.from_text(P.to_text(), V) == P
        True
        >>> Polynomial.from_text("3 * q", V)
        Traceback (most recent call last):
        ...
        liepyx.errors.PolynomialFormatError: unknown variable 'q' in term '3 * q'
        """
        variables = tuple(variables)
        index = {name: i for i, name in enumerate(variables)}
        text = text.strip()
        if not text:
            raise PolynomialFormatError("empty polynomial text")
        first_sign = 1
        if text.startswith("-"):
            first_sign, text = -1, text[1:].lstrip()
        pieces = _TERM_SPLIT.split(text)
        signs = [first_sign] + [1 if op == "+" else -1 for op in pieces[1::2]]
        terms = {}
        for sign, body in zip(signs, pieces[0::2]):
            body = body.strip()
            if " * " in body:
                coeff_text, monomial_text = body.split(" * ", 1)
            elif _NUMBER.fullmatch(body):
                coeff_text, monomial_text = body, ""
            else:
                coeff_text, monomial_text = "1", body
            try:
                coeff = sign * Fraction(coeff_text)
            except ValueError:
                raise PolynomialFormatError(f"bad coefficient '{coeff_text}' in term '{body}'")
            exps = [0] * len(variables)
            for factor in filter(None, monomial_text.split("*")):
                name, _, power = factor.partition("^")
                if name not in index:
                    raise PolynomialFormatError(f"unknown variable '{name}' in term '{body}'")
                if power and not power.isdigit():
                    raise PolynomialFormatError(f"bad exponent '{power}' in term '{body}'")
                exps[index[name]] += int(power) if power else 1
            exps = tuple(exps)
            terms[exps] = terms.get(exps, 0) + coeff
        return cls(variables, terms)

    def to_json_obj(self) -> list[dict]:
        return [
            {"coeff": str(c), "exps": {name: e for name, e in zip(self.variables, exps) if e}}
            for exps, c in self.sorted_terms()
        ]

    @classmethod
    def from_json_obj(cls, obj: list, variables) -> "Polynomial":
        """
        >>> V = ("p1", "p2")
        >>> P = Polynomial.from_text("1/2 * p1*p2 - p2^3", V)
        >>> Polynomial.from_json_obj(json.loads(json.dumps(P.to_json_obj())), V) == P
        True
        """
        variables = tuple(variables)
        index = {name: i for i, name in enumerate(variables)}
        terms = {}
        try:
            for entry in obj:
                exps = [0] * len(variables)
                for name, power in entry["exps"].items():
                    if name not in index:
                        raise PolynomialFormatError(f"unknown variable '{name}'")
                    exps[index[name]] += int(power)
                exps = tuple(exps)
                terms[exps] = terms.get(exps, 0) + Fraction(entry["coeff"])
        except (KeyError, TypeError, ValueError) as error:
            if isinstance(error, PolynomialFormatError):
                raise
            raise PolynomialFormatError(f"malformed polynomial JSON: {error}")
        return cls(variables, terms)


_TERM_SPLIT = re.compile(r"\s+([+-])\s+")
_NUMBER = re.compile(r"\d+(/\d+)?")


def _index_of(variables: tuple, name) -> int:
    if isinstance(name, int):
        if not 0 <= name < len(variables):
            raise UnboundVariableError(f"variable index {name} out of range for {variables}")
        return name
    try:
        return variables.index(name)
    except ValueError:
        raise UnboundVariableError(f"variable '{name}' is not one of {variables}") from None


if __name__ == "__main__":
    import doctest
    print(doctest.testmod())
