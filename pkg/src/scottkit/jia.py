"""A countable dcpo whose Scott topology is not coherent.

Elements are triples ``(i, j, m)`` with ``m`` a natural or infinity
(``math.inf``).  Inside one ``(i, j)`` block the order is the order of ``m``;
in addition every finite ``(i, j, m)`` lies below ``(i + 1, j2, inf)``
whenever ``m <= j2``.
"""

import math
from dataclasses import dataclass
from itertools import count, product

from .errors import InvalidArgument
from .ideals import EnumerablePoset, IdealDescriptor
from .poset import FinitePoset, is_directed

__all__ = [
    "INF", "JiaElem", "jia_leq", "jia_truncation", "jia_poset", "diagonal_pairs",
    "JiaNoncoherenceReport", "jia_noncoherence_witness", "finite_directed_blocks",
]

INF = math.inf


@dataclass(frozen=True, order=True)
class JiaElem:
    i: int
    j: int
    m: float

    def __post_init__(self):
        for v in (self.i, self.j):
            if not isinstance(v, int) or v < 1:
                raise InvalidArgument(f"coordinates must be naturals >= 1, got {self!r}")
        if not (self.m == INF or (isinstance(self.m, int) and self.m >= 1)):
            raise InvalidArgument(f"third coordinate must be >= 1 or inf, got {self.m!r}")

    def __str__(self):
        m = "inf" if self.m == INF else self.m
        return f"({self.i},{self.j},{m})"


def jia_leq(x, y):
    if x.i == y.i and x.j == y.j:
        return x.m <= y.m
    return y.i == x.i + 1 and x.m <= y.j and y.m == INF


def diagonal_pairs():
    """(1,1), (1,2), (2,1), (1,3), (2,2), (3,1), ..."""
    for d in count(2):
        for i in range(1, d):
            yield i, d - i


def _elements():
    # by total weight i + j + m, with (i, j, inf) weighted as m = 1
    for d in count(3):
        for i in range(1, d - 1):
            for j in range(1, d - i):
                yield JiaElem(i, j, d - i - j)
            if d - i - 1 >= 1:
                yield JiaElem(i, d - i - 1, INF)


def _parse(text):
    parts = text.strip().strip("()").split(",")
    if len(parts) != 3:
        raise InvalidArgument(f"bad element {text!r}")
    try:
        i, j = int(parts[0]), int(parts[1])
        m = INF if parts[2].strip() in ("inf", "oo") else int(parts[2])
    except ValueError:
        raise InvalidArgument(f"bad element {text!r}") from None
    return JiaElem(i, j, m)


def jia_poset():
    def ideals():
        for n, (i, j) in enumerate(diagonal_pairs(), start=1):
            yield IdealDescriptor(
                n, f"({i},{j},*)",
                lambda x, i=i, j=j: x.i == i and x.j == j and x.m != INF,
                JiaElem(i, j, INF),
                lambda i=i, j=j: (JiaElem(i, j, m) for m in count(1)),
                jia_leq,
            )

    return EnumerablePoset("jia", jia_leq, _elements, ideals, _parse, str)


def jia_truncation(depth=6):
    """Coordinates ``i, j, m`` in ``1..depth`` plus ``m = inf``."""
    if depth < 1:
        raise InvalidArgument("depth must be >= 1")
    elems = [JiaElem(i, j, m)
             for i, j in product(range(1, depth + 1), repeat=2)
             for m in list(range(1, depth + 1)) + [INF]]
    return FinitePoset.from_relation(elems, jia_leq)


def finite_directed_blocks(p):
    """Maximal directed subsets of the finite-``m`` part of a truncation (brute force).

    Elements are grouped by "has a common upper bound among finite elements";
    each group is checked to be directed.
    """
    fin = [k for k, x in enumerate(p.labels) if x.m != INF]
    parent = {k: k for k in fin}

    def find(k):
        while parent[k] != k:
            parent[k] = parent[parent[k]]
            k = parent[k]
        return k

    for a in fin:
        for b in fin:
            if a < b and any(p.leq_i(a, c) and p.leq_i(b, c) for c in fin):
                parent[find(a)] = find(b)
    groups = {}
    for k in fin:
        groups.setdefault(find(k), set()).add(k)
    out = []
    for g in groups.values():
        if not is_directed(p, g):
            raise AssertionError("finite part has a non-directed block")
        out.append(frozenset(p.labels[k] for k in g))
    return out


@dataclass(frozen=True)
class JiaNoncoherenceReport:
    j_cap: int
    depth: int
    intersection: tuple       # the filter intersection inside the window
    expected: tuple
    closed: bool              # every truncated C_j is a down-set
    filtered: bool            # the C_j decrease
    meets: bool               # each C_j meets the intersection (while j <= depth)
    survivors: tuple          # sizes of the running intersection for J = 1..j_cap

    @property
    def ok(self):
        shrink = all(a >= b for a, b in zip(self.survivors, self.survivors[1:]))
        return (self.intersection == self.expected and self.closed and self.filtered
                and self.meets and shrink)


def jia_noncoherence_witness(j_cap, depth=None):
    """Finite shadow of the non-compact intersection of two principal filters.

    Within the window ``1..depth`` (default ``j_cap``): the two filters meet
    in ``{(2, j, inf)}``; the closed sets ``C_j`` are down-sets forming a
    decreasing family, each meeting that intersection while ``j <= depth``;
    and the running intersection of the ``C_j`` with it shrinks to
    ``{(2, depth, inf)}`` and then to nothing.
    """
    if j_cap < 2:
        raise InvalidArgument("j_cap must be >= 2")
    depth = depth or j_cap
    p = jia_truncation(depth)
    labels = p.labels
    a, b = JiaElem(1, 2, 1), JiaElem(1, 3, 1)
    inter = tuple(sorted(x for x in labels if jia_leq(a, x) and jia_leq(b, x)))
    expected = tuple(JiaElem(2, j, INF) for j in range(1, depth + 1))

    def c_set(j):
        tops = [JiaElem(2, k, INF) for k in range(j, depth + 1)]
        tops += [JiaElem(1, n, INF) for n in range(1, depth + 1)]
        return frozenset(x for x in labels if any(jia_leq(x, t) for t in tops))

    cs = [c_set(j) for j in range(1, j_cap + 1)]
    closed = all(
        all(y in c for x in c for y in labels if jia_leq(y, x)) for c in cs
    )
    filtered = all(c2 <= c1 for c1, c2 in zip(cs, cs[1:]))
    meets = all(c & set(inter) for c in cs[:depth])
    survivors, run = [], set(inter)
    for c in cs:
        run &= c
        survivors.append(len(run))
    return JiaNoncoherenceReport(j_cap, depth, inter, expected, closed, filtered, meets,
                                 tuple(survivors))
