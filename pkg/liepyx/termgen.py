"""
Enumerate the pairing terms that can be nonzero for an invariant of degree d.

A pairing term <d_W d_eps^b d_p^a d_U, I> is keyed by the multisets W (frame vectors of height <= -2)
and U (frame vectors of height >= 1) and by the powers b of epsilon and a of the Cartan point p.
It can be nonzero only if
  * |W| + a + b + |U| = d, and
  * the heights balance: o(U) = b + |o(W)|.

The key lists come in the order the engine fills them:
  * ttms: no W, a = 0, by descending b;
  * ptms: no W, a >= 1, by ascending a; then the pure-Cartan key (a = d);
  * ntms: W nonempty, by ascending (|W|, |o(W)|), then descending b.

Programmer: liepyx team
Since: 2026-10
"""

import json
import logging
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product
from typing import Generator

from liepyx.kostant import KostantFrame

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class TermKey:
    """
    The key of a pairing term. W and U are sorted tuples of f-indices (0-based).

    >>> key = TermKey(W=(), U=(7,), b=5, a=0)
    >>> key.beta, key.c, key.degree
    (0, 1, 6)
    >>> key.bookkeeping()
    'W=() U=(f8) b=5 a=0'
    """
    W: tuple = ()
    U: tuple = ()
    b: int = 0
    a: int = 0

    def __post_init__(self):
        object.__setattr__(self, "W", tuple(sorted(self.W)))
        object.__setattr__(self, "U", tuple(sorted(self.U)))

    @property
    def beta(self) -> int:
        return len(self.W)

    @property
    def c(self) -> int:
        return len(self.U)

    @property
    def degree(self) -> int:
        return len(self.W) + self.a + self.b + len(self.U)

    def bookkeeping(self) -> str:
        def names(indices): return "(" + ",".join(f"f{f+1}" for f in indices) + ")"
        return f"W={names(self.W)} U={names(self.U)} b={self.b} a={self.a}"

    def to_json_obj(self) -> list:
        return [list(self.W), list(self.U), self.b, self.a]

    @classmethod
    def from_json_obj(cls, obj: list) -> "TermKey":
        W, U, b, a = obj
        return cls(tuple(W), tuple(U), int(b), int(a))


def pure_cartan_key(d: int) -> TermKey:
    return TermKey((), (), 0, d)


def _bounded_partitions(total: int, parts: int, low: int, high: int) -> Generator[tuple[int, ...], None, None]:
    """Non-increasing tuples of `parts` integers in [low, high] summing to `total`, in decreasing lex order."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    first_max = min(high, total - (parts - 1) * low)
    first_min = -(-total // parts)
    for first in range(first_max, max(first_min, low) - 1, -1):
        for rest in _bounded_partitions(total - first, parts - 1, low, first):
            yield (first,) + rest


def negpart(x: int, y: int, z: int) -> list[tuple[int, ...]]:
    """
    Partitions of x into z parts, each in [2, y].

    >>> negpart(4, 5, 2)
    [(2, 2)]
    >>> negpart(3, 5, 2)
    []
    """
    return list(_bounded_partitions(x, z, 2, y))


def pospart(x: int, y: int, z: int) -> list[tuple[int, ...]]:
    """
    Partitions of x into z parts, each in [1, y].

    >>> pospart(5, 5, 1)
    [(5,)]
    >>> pospart(6, 5, 2)
    [(5, 1), (4, 2), (3, 3)]
    >>> pospart(0, 5, 0)
    [()]
    """
    return list(_bounded_partitions(x, z, 1, y))


def allmul(heights: tuple[int, ...], basis_by_height: dict[int, list[int]]) -> list[tuple[int, ...]]:
    """
    All multisets of basis indices realizing the given multiset of heights.

    >>> allmul((1, 1, 2), {1: [2, 3], 2: [4]})
    [(2, 2, 4), (2, 3, 4), (3, 3, 4)]
    >>> allmul((3,), {1: [2, 3]})
    []
    """
    counts = {}
    for h in heights:
        counts[h] = counts.get(h, 0) + 1
    choices = [list(combinations_with_replacement(basis_by_height.get(h, []), k)) for h, k in sorted(counts.items())]
    return sorted(tuple(sorted(sum(parts, ()))) for parts in product(*choices))


def is_admissible(frame: KostantFrame, key: TermKey, d: int) -> bool:
    """The degree and height-balance conditions for a nonzero pairing term."""
    heights = frame.f_heights
    if key.degree != d or key.a < 0 or key.b < 0:
        return False
    if any(heights[f] > -2 for f in key.W) or any(heights[f] < 1 for f in key.U):
        return False
    return sum(heights[f] for f in key.U) == key.b - sum(heights[f] for f in key.W)


def absolute_height(frame: KostantFrame, indices) -> int:
    return sum(abs(frame.f_heights[f]) for f in indices)


@dataclass
class TermLists:
    degree: int
    ttms: list = field(default_factory=list)
    ptms: list = field(default_factory=list)
    ntms: list = field(default_factory=list)

    @property
    def pure_cartan(self) -> TermKey:
        return pure_cartan_key(self.degree)

    def all_keys(self) -> list[TermKey]:
        return self.ttms + self.ptms + [self.pure_cartan] + self.ntms

    def counts(self) -> dict[str, int]:
        return {"ttms": len(self.ttms), "ptms": len(self.ptms), "pure_cartan": 1, "ntms": len(self.ntms)}

    def __len__(self):
        return len(self.ttms) + len(self.ptms) + 1 + len(self.ntms)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "counts": self.counts(),
            "ttms": [key.to_json_obj() for key in self.ttms],
            "ptms": [key.to_json_obj() for key in self.ptms],
            "pure_cartan": self.pure_cartan.to_json_obj(),
            "ntms": [key.to_json_obj() for key in self.ntms],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1)


def generate_terms(frame: KostantFrame, d: int, borel_only: bool = False) -> TermLists:
    """
    Generate the term lists by the bounded partition loops over |W|, |o(W)|, a and b.

    >>> from liepyx.rootdata import build_lie_algebra
    >>> from liepyx.kostant import build_frame
    >>> generate_terms(build_frame(build_lie_algebra("G", 2)), 6).counts()
    {'ttms': 8, 'ptms': 10, 'pure_cartan': 1, 'ntms': 535}
    >>> generate_terms(build_frame(build_lie_algebra("A", 1)), 2).ttms
    [TermKey(W=(), U=(1,), b=1, a=0)]
    """
    if d < 1:
        raise ValueError(f"degree must be positive, got {d}")
    mx = frame.max_height
    heights = frame.f_heights
    u_by_height, w_by_height = {}, {}
    for f in frame.U:
        u_by_height.setdefault(heights[f], []).append(f)
    for f in frame.W:
        w_by_height.setdefault(-heights[f], []).append(f)

    term_lists = TermLists(d)
    max_beta = 0 if borel_only else d * mx // (mx + 2)
    for beta in range(0, max_beta + 1):
        for ow in range(2 * beta, min(beta, d - beta) * mx + 1):
            w_multisets = [W for partition in negpart(ow, mx, beta) for W in allmul(partition, w_by_height)]
            if not w_multisets:
                continue
            for a in range(0, d - beta):
                b_min = max(0, -(-(d - beta - a - ow) // 2))
                b_max = ((d - beta - a) * mx - ow) // (mx + 1)
                for b in range(b_min, b_max + 1):
                    c = d - beta - a - b
                    u_multisets = [U for partition in pospart(ow + b, mx, c) for U in allmul(partition, u_by_height)]
                    for W in w_multisets:
                        for U in u_multisets:
                            key = TermKey(W, U, b, a)
                            if beta > 0:
                                term_lists.ntms.append(key)
                            elif a > 0:
                                term_lists.ptms.append(key)
                            else:
                                term_lists.ttms.append(key)

    term_lists.ttms.sort(key=lambda key: (-key.b, key.U))
    term_lists.ptms.sort(key=lambda key: (key.a, -key.b, key.U))
    term_lists.ntms.sort(key=lambda key: (key.beta, absolute_height(frame, key.W), -key.b, key.W, key.U, key.a))
    logger.info("Terms of degree %d for %s: %s", d, frame.algebra.label, term_lists.counts())
    return term_lists


def borel_only_terms(frame: KostantFrame, d: int) -> TermLists:
    """
    The terms needed on epsilon + b only: no W factors.

    >>> from liepyx.rootdata import build_lie_algebra
    >>> from liepyx.kostant import build_frame
    >>> len(borel_only_terms(build_frame(build_lie_algebra("G", 2)), 6))
    19
    """
    return generate_terms(frame, d, borel_only=True)


def ntms_strata(frame: KostantFrame, keys: list[TermKey]) -> list[tuple[tuple[int, int], list[TermKey]]]:
    """Group the ntms keys by (|W|, |o(W)|), preserving their order."""
    strata = []
    for key in keys:
        label = (key.beta, absolute_height(frame, key.W))
        if not strata or strata[-1][0] != label:
            strata.append((label, []))
        strata[-1][1].append(key)
    return strata


if __name__ == "__main__":
    import doctest
    print(doctest.testmod())
