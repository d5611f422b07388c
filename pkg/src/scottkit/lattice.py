"""The closure system M of intersections of principal ideals of P, and the
lattices R = M + {top} and F (finitely generated down-sets of R).

Every element of M is stored in one of eight canonical shapes.  Internally all
set operations go through :class:`Region`, a normal form for the down-sets
that occur: a set of whole columns, a set of sequence pieces ``(col, s)``
(all prefixes of ``s`` in that column) and a set of nat pieces ``(col, k)``
(all ``n:j`` with ``j <= k``).  Intersecting regions is a few lines;
:func:`from_region` then recognises the result as a canonical shape.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import InvalidArgument
from .gadget import (
    TOP, Nat, PairCode, Seq, common_prefix, f_mn, f_mn_decode, is_prefix,
    sequences_up_to_weight,
)
from .pposet import PElem, cross_below, leq_P

__all__ = [
    "Region", "MElem", "Empty", "TypeI", "TypeII", "TypeIII", "TypeIV", "TypeV",
    "TypeI_II_1", "TypeI_II_2", "EMPTY", "TAGS",
    "member", "classify_principal", "g_map", "intersect", "subset", "maxima",
    "from_region", "closure", "directed_sup", "generators", "readings",
    "parse_M", "render_M", "canonical_elements",
    "TopR", "TOP_R", "leq_R", "join_R", "meet_R", "render_R", "parse_R",
    "FElem", "f_join", "f_meet", "f_leq", "f_map_R", "g_map_F", "adjunction_holds",
    "distributivity_check", "NoUpperBoundRecord", "no_upper_bound_witness",
    "REFERENCE_TABLE", "intersection_table", "compare_tables", "related_elements",
]


# -- regions ---------------------------------------------------------------------

@dataclass(frozen=True)
class Region:
    cols: frozenset = frozenset()
    seqs: frozenset = frozenset()   # (col, tuple)
    nats: frozenset = frozenset()   # (col, k)

    def contains(self, x):
        if x.col in self.cols:
            return True
        v = x.val
        if isinstance(v, Seq):
            return any(c == x.col and is_prefix(v.s, t) for c, t in self.seqs)
        if isinstance(v, Nat):
            return any(c == x.col and v.k <= k for c, k in self.nats)
        return False

    def maxima(self):
        out = [PElem(c, TOP) for c in sorted(self.cols)]
        out += [PElem(c, Seq(t)) for c, t in sorted(self.seqs)]
        out += [PElem(c, Nat(k)) for c, k in sorted(self.nats)]
        return out

    def is_empty(self):
        return not (self.cols or self.seqs or self.nats)


def _region(cols=(), seqs=(), nats=()):
    cols = frozenset(cols)
    seqs = {(c, tuple(t)) for c, t in seqs if c not in cols}
    seqs = {(c, t) for c, t in seqs
            if not any(d == c and u != t and is_prefix(t, u) for d, u in seqs)}
    best = {}
    for c, k in nats:
        if c not in cols:
            best[c] = max(best.get(c, 0), k)
    return Region(cols, frozenset(seqs), frozenset(best.items()))


def region_meet(a, b):
    cols = a.cols & b.cols
    seqs = [p for p in a.seqs if p[0] in b.cols] + [p for p in b.seqs if p[0] in a.cols]
    nats = [p for p in a.nats if p[0] in b.cols] + [p for p in b.nats if p[0] in a.cols]
    for c, s in a.seqs:
        for d, t in b.seqs:
            if c == d:
                u = common_prefix(s, t)
                if u:
                    seqs.append((c, u))
    for c, j in a.nats:
        for d, k in b.nats:
            if c == d:
                nats.append((c, min(j, k)))
    return _region(cols, seqs, nats)


# -- canonical shapes -------------------------------------------------------------

def _nat(v, what):
    if not isinstance(v, int) or v < 1:
        raise InvalidArgument(f"{what} must be a natural >= 1, got {v!r}")


def _seq(s):
    try:
        return Seq(s).s
    except (TypeError, InvalidArgument) as exc:
        raise InvalidArgument(f"bad sequence parameter {s!r}") from exc


def _pair(m, n):
    _nat(m, "m0")
    _nat(n, "n0")
    if not m < n:
        raise InvalidArgument(f"need m0 < n0, got ({m}, {n})")
    return PairCode(m, n)


class MElem:
    tag = ""

    def region(self):
        raise NotImplementedError

    def __contains__(self, x):
        return self.region().contains(x)

    def __str__(self):
        return render_M(self)


@dataclass(frozen=True)
class Empty(MElem):
    tag = "empty"

    def region(self):
        return Region()


EMPTY = Empty()


@dataclass(frozen=True)
class TypeI(MElem):
    """All prefixes of ``s0`` in column ``n0``."""
    n0: int
    s0: tuple
    tag = "I"

    def __post_init__(self):
        _nat(self.n0, "n0")
        object.__setattr__(self, "s0", _seq(self.s0))

    def region(self):
        return _region(seqs=[(self.n0, self.s0)])


@dataclass(frozen=True)
class TypeII(MElem):
    """``n:1 .. n:n0`` in column ``m0``."""
    m0: int
    n0: int
    tag = "II"

    def __post_init__(self):
        _nat(self.m0, "m0")
        _nat(self.n0, "n0")

    def region(self):
        return _region(nats=[(self.m0, self.n0)])


@dataclass(frozen=True)
class TypeIII(MElem):
    """A whole column that nothing from other columns reaches."""
    n0: int
    tag = "III"

    def __post_init__(self):
        _nat(self.n0, "n0")
        if f_mn_decode(self.n0) is not None:
            raise InvalidArgument(f"column {self.n0} lies in an index set; use IV or V")

    def region(self):
        return _region(cols=[self.n0])


@dataclass(frozen=True)
class TypeIV(MElem):
    m0: int
    n0: int
    s0: tuple
    tag = "IV"

    def __post_init__(self):
        _pair(self.m0, self.n0)
        object.__setattr__(self, "s0", _seq(self.s0))
        if len(self.s0) != 1:
            raise InvalidArgument(f"TypeIV needs a length-1 sequence, got {self.s0}")

    @property
    def column(self):
        return f_mn((self.m0, self.n0), self.s0)

    def region(self):
        return _region([self.column], [(self.m0, self.s0)], [(self.n0, self.s0[0])])


@dataclass(frozen=True)
class TypeV(MElem):
    m0: int
    n0: int
    s0: tuple
    tag = "V"

    def __post_init__(self):
        _pair(self.m0, self.n0)
        object.__setattr__(self, "s0", _seq(self.s0))
        if len(self.s0) < 2:
            raise InvalidArgument(f"TypeV needs a sequence of length >= 2, got {self.s0}")

    @property
    def column(self):
        return f_mn((self.m0, self.n0), self.s0)

    def region(self):
        pc = (self.m0, self.n0)
        return _region([self.column], [(self.m0, self.s0)],
                       [(f_mn(pc, self.s0[:-1]), self.s0[-1])])


@dataclass(frozen=True)
class TypeI_II_1(MElem):
    """``(m0, s0)`` with ``|s0| = 1`` together with ``n:1 .. n:k0`` in column ``n0``.

    Only the parameter choices that really lie in M are accepted: ``n0`` must
    be ``f_{m0,q}(t)`` for some ``q`` and some ``t`` of length >= 2 starting
    with ``s0``.  (When ``t = s0`` the same set is a :class:`TypeI_II_2`.)
    """
    m0: int
    n0: int
    s0: tuple
    k0: int
    tag = "I+II1"

    def __post_init__(self):
        _pair(self.m0, self.n0)
        object.__setattr__(self, "s0", _seq(self.s0))
        _nat(self.k0, "k0")
        if len(self.s0) != 1 or self.k0 > self.s0[0]:
            raise InvalidArgument(f"need |s0| = 1 and k0 <= s0, got {self.s0}, {self.k0}")
        dec = f_mn_decode(self.n0)
        if dec is None or dec[0].m != self.m0 or dec[1][0] != self.s0[0] or len(dec[1]) < 2:
            raise InvalidArgument(
                f"({self.m0}, {self.s0}) and column {self.n0} do not span an element of M")

    def region(self):
        return _region(seqs=[(self.m0, self.s0)], nats=[(self.n0, self.k0)])


@dataclass(frozen=True)
class TypeI_II_2(MElem):
    """Prefixes of ``s0`` in column ``m0`` with ``n:1 .. n:k0`` in column ``f_{m0,n0}(s0)``."""
    m0: int
    n0: int
    s0: tuple
    k0: int
    tag = "I+II2"

    def __post_init__(self):
        _pair(self.m0, self.n0)
        object.__setattr__(self, "s0", _seq(self.s0))
        _nat(self.k0, "k0")

    @property
    def nat_column(self):
        return f_mn((self.m0, self.n0), self.s0)

    def region(self):
        return _region(seqs=[(self.m0, self.s0)], nats=[(self.nat_column, self.k0)])


TAGS = ("empty", "I", "II", "III", "IV", "V", "I+II1", "I+II2")


# -- basic operations -------------------------------------------------------------

def _check_m(m):
    if not isinstance(m, MElem):
        raise InvalidArgument(f"not an element of M: {m!r}")
    return m


def member(m, x):
    return _check_m(m).region().contains(x)


def classify_principal(x):
    """Canonical form of the principal ideal below ``x``."""
    if not isinstance(x, PElem):
        raise InvalidArgument(f"not an element of P: {x!r}")
    v = x.val
    if isinstance(v, Seq):
        return TypeI(x.col, v.s)
    if isinstance(v, Nat):
        return TypeII(x.col, v.k)
    dec = f_mn_decode(x.col)
    if dec is None:
        return TypeIII(x.col)
    pc, t = dec
    if len(t) == 1:
        return TypeIV(pc.m, pc.n, t)
    return TypeV(pc.m, pc.n, t)


g_map = classify_principal


def maxima(m):
    return _check_m(m).region().maxima()


def subset(a, b):
    rb = _check_m(b).region()
    return all(rb.contains(x) for x in maxima(a))


def from_region(r):
    """The canonical element denoting region ``r``; raises if ``r`` is not in M."""
    if r.is_empty():
        return EMPTY
    if r.cols:
        if len(r.cols) != 1:
            raise InvalidArgument(f"region with several full columns is not in M: {r}")
        (c,) = r.cols
        if f_mn_decode(c) is None and not (r.seqs or r.nats):
            return TypeIII(c)
        m = classify_principal(PElem(c, TOP))
        if m.region() != r:
            raise InvalidArgument(f"region is not a principal ideal: {r}")
        return m
    if len(r.seqs) > 1 or len(r.nats) > 1:
        raise InvalidArgument(f"region is not in M: {r}")
    if not r.nats:
        ((c, s),) = r.seqs
        return TypeI(c, s)
    if not r.seqs:
        ((c, k),) = r.nats
        return TypeII(c, k)
    ((m0, sigma),), ((n, k),) = r.seqs, r.nats
    dec = f_mn_decode(n)
    if dec is not None and dec[0].m == m0:
        pc, t = dec
        if sigma == t:
            return TypeI_II_2(m0, pc.n, sigma, k)
        if len(sigma) == 1 and sigma[0] == t[0] and len(t) >= 2 and k <= sigma[0]:
            return TypeI_II_1(m0, n, sigma, k)
    raise InvalidArgument(f"region is not in M: {r}")


def intersect(a, b):
    return from_region(region_meet(_check_m(a).region(), _check_m(b).region()))


def generators(m):
    """Points of P whose principal ideals intersect to ``m`` (a membership certificate)."""
    m = _check_m(m)
    if isinstance(m, Empty):
        return [PElem(1, Seq((1,))), PElem(1, Nat(1))]
    if isinstance(m, TypeI_II_1):
        pc, t = f_mn_decode(m.n0)
        return [PElem(f_mn((m.m0, m.n0), m.s0), TOP),
                PElem(f_mn(pc, t + (m.k0,)), TOP)]
    if isinstance(m, TypeI_II_2):
        pc = (m.m0, m.n0)
        return [PElem(f_mn(pc, m.s0 + (m.k0,)), TOP),
                PElem(f_mn(pc, m.s0 + (m.k0 + 1,)), TOP)]
    return maxima(m)


def readings(r):
    """Shape names a region can be read as, following the unrestricted
    two-piece definitions (so a region may have two readings)."""
    if isinstance(r, MElem):
        r = r.region()
    if r.is_empty():
        return {"empty"}
    if r.cols:
        return {from_region(r).tag}
    if not r.nats:
        return {"I"}
    if not r.seqs:
        return {"II"}
    ((m0, sigma),), ((n, k),) = r.seqs, r.nats
    out = set()
    if len(sigma) == 1 and m0 < n and k <= sigma[0]:
        out.add("I+II1")
    dec = f_mn_decode(n)
    if dec is not None and dec[0].m == m0 and dec[1] == sigma:
        out.add("I+II2")
    return out


# -- closure of a finite set of points ----------------------------------------------

def _chain_max(points):
    for x in points:
        if all(leq_P(y, x) for y in points):
            return x
    return None


def closure(points):
    """Least element of M containing every point, or ``TOP_R`` when there is none."""
    points = list(dict.fromkeys(points))
    if not points:
        return EMPTY
    top = _chain_max(points)
    if top is not None:
        return classify_principal(top)
    regions = []
    for c in sorted({x.col for x in points}):
        t = PElem(c, TOP)
        if all(leq_P(x, t) for x in points):
            regions.append(classify_principal(t).region())
    regions += _offcolumn_candidates(points)
    if not regions:
        return TOP_R
    r = regions[0]
    for other in regions[1:]:
        r = region_meet(r, other)
    return from_region(r)


def _offcolumn_candidates(points):
    seqs = [x for x in points if isinstance(x.val, Seq)]
    nats = [x for x in points if isinstance(x.val, Nat)]
    if not seqs or not nats or len(seqs) + len(nats) != len(points):
        return []
    if len({x.col for x in seqs}) != 1 or len({x.col for x in nats}) != 1:
        return []
    smax, nmax = _chain_max(seqs), _chain_max(nats)
    if smax is None:
        return []
    m0, sigma, q, j = smax.col, smax.val.s, nmax.col, nmax.val.k
    out = []
    if len(sigma) == 1 and m0 < q and j <= sigma[0]:
        out.append(TypeIV(m0, q, sigma).region())
    dec = f_mn_decode(q)
    if dec is not None and dec[0].m == m0:
        pc, t = dec
        if is_prefix(sigma, t):
            # every f(t.e) with e >= j is above; these tops meet in this region
            out.append(_region(seqs=[(m0, t)], nats=[(q, j)]))
        elif len(sigma) == len(t) + 1 and is_prefix(t, sigma) and sigma[-1] >= j:
            out.append(TypeV(pc.m, pc.n, sigma).region())
    return out


# -- directed sups ----------------------------------------------------------------

def directed_sup(chain, limit=False):
    """Least upper bound of a subset-increasing chain.

    A finite chain has its last element as sup.  With ``limit=True`` the chain
    is read as the start of a strictly increasing sequence continuing in the
    same pattern, and the sup of that infinite chain is returned.
    """
    chain = [_check_m(m) for m in chain]
    if not chain:
        raise InvalidArgument("empty chain")
    for a, b in zip(chain, chain[1:]):
        if not subset(a, b):
            raise InvalidArgument(f"not an increasing chain: {a} is not below {b}")
    last = chain[-1]
    if not limit or len(chain) < 2 or chain[-2] == last:
        return last
    prev = chain[-2]
    if isinstance(last, TypeI) and isinstance(prev, TypeI) and last.n0 == prev.n0:
        return classify_principal(PElem(last.n0, TOP))
    if isinstance(last, TypeII) and isinstance(prev, TypeII) and last.m0 == prev.m0:
        return classify_principal(PElem(last.m0, TOP))
    if (isinstance(last, TypeI_II_2) and isinstance(prev, TypeI_II_2)
            and (last.m0, last.n0, last.s0) == (prev.m0, prev.n0, prev.s0)):
        return classify_principal(PElem(last.nat_column, TOP))
    if isinstance(last, TypeI_II_1):
        raise InvalidArgument("a chain of this shape can only grow finitely often")
    raise InvalidArgument(f"no infinite continuation pattern for {prev} < {last}")


# -- text form --------------------------------------------------------------------

def _s(s):
    return ".".join(str(v) for v in s)


def render_M(m):
    m = _check_m(m)
    if isinstance(m, Empty):
        return "empty"
    if isinstance(m, TypeI):
        return f"I({m.n0};{_s(m.s0)})"
    if isinstance(m, TypeII):
        return f"II({m.m0};{m.n0})"
    if isinstance(m, TypeIII):
        return f"III({m.n0})"
    if isinstance(m, (TypeIV, TypeV)):
        return f"{m.tag}({m.m0},{m.n0};{_s(m.s0)})"
    return f"{m.tag}({m.m0},{m.n0};{_s(m.s0)};{m.k0})"


_PARSERS = {
    "I": (TypeI, "n;s"), "II": (TypeII, "n;n"), "III": (TypeIII, "n"),
    "IV": (TypeIV, "n,n;s"), "V": (TypeV, "n,n;s"),
    "I+II1": (TypeI_II_1, "n,n;s;n"), "I+II2": (TypeI_II_2, "n,n;s;n"),
}


def parse_M(text):
    text = text.strip()
    if text == "empty":
        return EMPTY
    head, sep, rest = text.partition("(")
    if not sep or not rest.endswith(")") or head not in _PARSERS:
        raise InvalidArgument(f"bad M element text {text!r}")
    cls, shape = _PARSERS[head]
    fields = rest[:-1].replace(";", ",").split(",")
    kinds = shape.replace(";", ",").split(",")
    if len(fields) != len(kinds):
        raise InvalidArgument(f"bad M element text {text!r}")
    try:
        args = [tuple(int(v) for v in f.split(".")) if k == "s" else int(f)
                for f, k in zip(fields, kinds)]
    except ValueError:
        raise InvalidArgument(f"bad M element text {text!r}") from None
    return cls(*args)


# -- bounded enumeration -----------------------------------------------------------

def canonical_elements(col_bound, seq_weight=4, k_bound=3):
    """Canonical elements whose small parameters are bounded.

    Columns range over ``1..col_bound`` together with the columns produced
    by ``f_mn`` from those, so that the elements can actually interact.
    """
    small = range(1, col_bound + 1)
    seqs = sequences_up_to_weight(seq_weight)
    cols = set(small)
    for m, n in combinations(small, 2):
        cols.update(f_mn((m, n), s) for s in seqs)
    cols = sorted(cols)
    out = [EMPTY]
    out += [TypeI(c, s) for c in cols for s in seqs]
    out += [TypeII(c, k) for c in cols for k in range(1, k_bound + 1)]
    out += [TypeIII(c) for c in cols if f_mn_decode(c) is None]
    for m in small:
        for n in cols:
            if n <= m:
                continue
            for s in seqs:
                out.append(TypeIV(m, n, s) if len(s) == 1 else TypeV(m, n, s))
                for k in range(1, k_bound + 1):
                    out.append(TypeI_II_2(m, n, s, k))
                    if len(s) == 1 and k <= s[0]:
                        try:
                            out.append(TypeI_II_1(m, n, s, k))
                        except InvalidArgument:
                            pass
    return out


# -- R = M + top ------------------------------------------------------------------

class TopR:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "TOP_R"

    def __str__(self):
        return "top"

    def __reduce__(self):
        return (TopR, ())


TOP_R = TopR()


def leq_R(a, b):
    if b is TOP_R:
        return True
    if a is TOP_R:
        return False
    return subset(a, b)


def join_R(a, b):
    if a is TOP_R or b is TOP_R:
        return TOP_R
    return closure(maxima(a) + maxima(b))


def meet_R(a, b):
    if a is TOP_R:
        return b
    if b is TOP_R:
        return a
    return intersect(a, b)


def render_R(x):
    return "top" if x is TOP_R else render_M(x)


def parse_R(text):
    return TOP_R if text.strip() == "top" else parse_M(text)


# -- F: finitely generated down-sets of R -------------------------------------------

@dataclass(frozen=True)
class FElem:
    gens: frozenset

    def __post_init__(self):
        gens = list(dict.fromkeys(self.gens))
        for g in gens:
            if g is not TOP_R:
                _check_m(g)
        keep = [g for g in gens
                if not any(h != g and leq_R(g, h) for h in gens)]
        object.__setattr__(self, "gens", frozenset(keep))

    @classmethod
    def of(cls, *gens):
        return cls(frozenset(gens))

    def __str__(self):
        return "{" + ", ".join(sorted(render_R(g) for g in self.gens)) + "}"


F_BOTTOM = FElem(frozenset())


def f_join(a, b):
    return FElem(a.gens | b.gens)


def f_meet(a, b):
    return FElem(frozenset(meet_R(x, y) for x in a.gens for y in b.gens))


def f_leq(a, b):
    return all(any(leq_R(x, y) for y in b.gens) for x in a.gens)


def f_map_R(x):
    return FElem(frozenset([x]))


def g_map_F(a):
    out = EMPTY
    for x in sorted(a.gens, key=render_R):
        out = join_R(out, x)
    return out


def adjunction_holds(x, a):
    """``g(A) <= x`` iff ``A`` is below ``f(x)``: sup is left adjoint to principal down-set."""
    return leq_R(g_map_F(a), x) == f_leq(a, f_map_R(x))


def distributivity_check(a, b, c):
    return f_meet(a, f_join(b, c)) == f_join(f_meet(a, b), f_meet(a, c))


# -- no upper bound for the image of P -----------------------------------------------

@dataclass(frozen=True)
class NoUpperBoundRecord:
    bound: int
    checked: int
    per_tag: tuple
    violations: tuple

    @property
    def ok(self):
        return not self.violations


def no_upper_bound_witness(bound=12):
    """Check that no canonical element with bounded parameters holds two tops.

    The bounded space is every tag with naturals ``<= bound`` and sequences of
    weight ``<= bound``.  A region with a single full column holds exactly one
    top, so the check also inspects every candidate's top count.
    """
    counts = dict.fromkeys(TAGS, 0)
    bad = []
    t1, t2 = PElem(1, TOP), PElem(2, TOP)

    def visit(m):
        counts[m.tag] += 1
        r = m.region()
        if len(r.cols) > 1 or (r.contains(t1) and r.contains(t2)):
            bad.append(render_M(m))

    seqs = sequences_up_to_weight(bound)
    ks = range(1, bound + 1)
    visit(EMPTY)
    for n in ks:
        for s in seqs:
            visit(TypeI(n, s))
        for k in ks:
            visit(TypeII(n, k))
        if f_mn_decode(n) is None:
            visit(TypeIII(n))
    for m, n in combinations(ks, 2):
        for s in seqs:
            visit(TypeIV(m, n, s) if len(s) == 1 else TypeV(m, n, s))
            for k in ks:
                visit(TypeI_II_2(m, n, s, k))
                if len(s) == 1 and k <= s[0]:
                    try:
                        visit(TypeI_II_1(m, n, s, k))
                    except InvalidArgument:
                        pass
    return NoUpperBoundRecord(bound, sum(counts.values()), tuple(counts.items()), tuple(bad))


# -- the symbolic intersection tables ----------------------------------------------

_ORDER = ("I", "II", "III", "IV", "V", "I+II1", "I+II2")


def _cells(text):
    return {name: set(v.split("/")) for name, v in text}


# Reference tables (upper triangle; "0" is the empty ideal).
REFERENCE_TABLE = {
    ("I", "I"): {"I", "empty"}, ("I", "II"): {"empty"}, ("I", "III"): {"I", "empty"},
    ("I", "IV"): {"I", "empty"}, ("I", "V"): {"I", "empty"},
    ("II", "II"): {"II", "empty"}, ("II", "III"): {"II", "empty"},
    ("II", "IV"): {"II", "empty"}, ("II", "V"): {"II", "empty"},
    ("III", "III"): {"III", "empty"}, ("III", "IV"): {"I", "II", "empty"},
    ("III", "V"): {"I", "II", "empty"},
    ("IV", "IV"): {"I", "II", "IV", "I+II1", "empty"},
    ("IV", "V"): {"I", "II", "I+II1", "I+II2", "empty"},
    ("V", "V"): {"I", "II", "V", "I+II2", "empty"},
    ("I", "I+II1"): {"I", "empty"}, ("II", "I+II1"): {"II", "empty"},
    ("III", "I+II1"): {"I", "II", "empty"}, ("IV", "I+II1"): {"I", "II", "I+II1", "empty"},
    ("V", "I+II1"): {"I", "II", "I+II1", "empty"},
    ("I+II1", "I+II1"): {"I", "II", "I+II1", "empty"},
    ("I+II1", "I+II2"): {"I", "II", "I+II1", "empty"},
    ("I", "I+II2"): {"I", "empty"}, ("II", "I+II2"): {"II", "empty"},
    ("III", "I+II2"): {"I", "II", "empty"}, ("IV", "I+II2"): {"I", "II", "I+II1", "empty"},
    ("V", "I+II2"): {"I", "II", "I+II2", "empty"},
    ("I+II2", "I+II2"): {"I", "II", "I+II2", "empty"},
}


def _key(a, b):
    return (a, b) if _ORDER.index(a) <= _ORDER.index(b) else (b, a)


@lru_cache(maxsize=1)
def _background():
    return tuple(m for m in canonical_elements(2, seq_weight=4, k_bound=1) if m.tag != "empty")


def related_elements(m, ks=(1, 2, 3), pair_cap=64):
    """Canonical elements built from the columns, sequences and bounds of ``m``.

    Two canonical elements can only meet non-trivially through shared
    parameters, so pairing ``m`` with these covers its interesting cases.
    """
    r = m.region()
    cols = set(r.cols) | {c for c, _ in r.seqs} | {c for c, _ in r.nats}
    seqs = {(1,), (2,)}
    kset = set(ks)
    for _, t in r.seqs:
        seqs.update(t[:i] for i in range(1, len(t) + 1))
        seqs.update({t + (1,), t + (2,)})
    for _, k in r.nats:
        kset.update({k, k + 1})
    for c in list(cols):
        dec = f_mn_decode(c)
        if dec is not None:
            pc, t = dec
            cols.update({pc.m, pc.n})
            if len(t) > 1:
                cols.add(f_mn(pc, t[:-1]))
            cols.update(f_mn(pc, t[:-1] + (e,)) for e in (1, 2, 3))
            seqs.update(t[:i] for i in range(1, len(t) + 1))
            seqs.update({t + (1,), t + (2,)})
            kset.add(t[-1])
    out = list(_background())
    for c in sorted(cols):
        out.append(classify_principal(PElem(c, TOP)))
        out += [TypeI(c, s) for s in sorted(seqs)]
        out += [TypeII(c, k) for k in sorted(kset)]
    for a, b in combinations(sorted(c for c in cols if c <= pair_cap), 2):
        for s in sorted(seqs):
            out.append(TypeIV(a, b, s) if len(s) == 1 else TypeV(a, b, s))
            for k in sorted(kset):
                out.append(TypeI_II_2(a, b, s, k))
                if len(s) == 1 and k <= s[0]:
                    try:
                        out.append(TypeI_II_1(a, b, s, k))
                    except InvalidArgument:
                        pass
    return out


def intersection_table(elements=None, col_bound=3, reference=None):
    """For each pair of shapes, the shapes of the intersections met.

    Every element of ``elements`` (by default the bounded canonical family)
    is intersected with its :func:`related_elements`.  A two-piece result
    may be readable as both union shapes; when a ``reference`` table is
    given the readings it lists for that cell are preferred, otherwise every
    reading is recorded.
    """
    if elements is None:
        elements = canonical_elements(col_bound, seq_weight=4, k_bound=2)
    table = {k: set() for k in REFERENCE_TABLE}
    for a in elements:
        if a.tag == "empty":
            continue
        ra = a.region()
        for b in related_elements(a):
            key = _key(a.tag, b.tag)
            r = region_meet(ra, b.region())
            from_region(r)   # must be a genuine element of M
            names = readings(r)
            if reference is not None:
                names = (names & reference[key]) or names
            table[key] |= names
    return table


def compare_tables(table, reference=REFERENCE_TABLE):
    """Per-cell status: ``exact``, ``over`` (reference lists shapes never produced)
    or ``missing`` (a produced shape is absent from the reference)."""
    out = {}
    for key, ref in reference.items():
        got = table.get(key, set())
        if got - ref:
            status = "missing"
        elif ref - got:
            status = "over"
        else:
            status = "exact"
        out[key] = (status, sorted(got), sorted(ref))
    return out
