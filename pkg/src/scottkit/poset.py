"""Finite posets and their Scott topology.

On a finite poset every directed subset contains its own supremum, so the
Scott topology coincides with the Alexandrov topology (all upper sets).  The
functions here still run the literal definitions where that is cheap, which
is what makes them useful as oracles for the symbolic constructions.

Elements are addressed by integer index ``0..n-1``; ``labels`` holds the
display objects (any hashable value).
"""

from dataclasses import dataclass, field
from itertools import combinations, permutations
import random
from typing import Protocol, runtime_checkable

import numpy as np

from .errors import InvalidArgument

__all__ = [
    "OrderOracle", "FinitePoset", "DownSet", "UpSet",
    "down_closure", "up_closure", "is_scott_open", "is_directed", "least_upper_bound",
    "closed_sets", "open_sets", "irreducible_closed_sets", "is_irreducible",
    "is_sober", "is_compact_saturated", "is_coherent", "is_well_filtered",
    "chain", "antichain", "diamond", "vee", "all_posets", "dumps", "loads",
]

EXHAUSTIVE_LIMIT = 12


@runtime_checkable
class OrderOracle(Protocol):
    def leq(self, x, y) -> bool: ...


class FinitePoset:
    """Explicit finite poset; the order table is validated on construction."""

    def __init__(self, labels, leq, *, check=True):
        labels = list(labels)
        leq = np.array(leq, dtype=bool)
        n = len(labels)
        if leq.shape != (n, n):
            raise InvalidArgument(f"order table must be {n}x{n}, got {leq.shape}")
        self.labels = tuple(labels)
        self.index = {lab: i for i, lab in enumerate(labels)}
        if len(self.index) != n:
            raise InvalidArgument("element labels must be pairwise distinct")
        leq.setflags(write=False)
        self.table = leq
        if check:
            self._check()

    def _check(self):
        t = self.table
        if not t.diagonal().all():
            raise InvalidArgument("order relation is not reflexive")
        off = t & t.T
        np.fill_diagonal(off, False)
        if off.any():
            i, j = map(int, np.argwhere(off)[0])
            raise InvalidArgument(f"order relation not antisymmetric at {self.labels[i]!r}, {self.labels[j]!r}")
        if len(t):
            ti = t.astype(np.float32)
            comp = (ti @ ti) > 0
            if (comp & ~t).any():
                i, j = map(int, np.argwhere(comp & ~t)[0])
                raise InvalidArgument(f"order relation not transitive at {self.labels[i]!r}, {self.labels[j]!r}")

    @classmethod
    def from_relation(cls, labels, leq_fn):
        labels = list(labels)
        t = np.array([[bool(leq_fn(a, b)) for b in labels] for a in labels], dtype=bool).reshape(len(labels), len(labels))
        return cls(labels, t)

    @classmethod
    def from_covers(cls, labels, covers):
        """Build from a cover (or any generating) relation ``{i: [j, ...]}`` on indices."""
        n = len(labels)
        t = np.eye(n, dtype=bool)
        for i, ups in covers.items():
            for j in ups:
                t[i, j] = True
        # transitive closure by repeated squaring
        while True:
            nxt = (t.astype(np.float32) @ t.astype(np.float32)) > 0
            nxt |= t
            if (nxt == t).all():
                break
            t = nxt
        return cls(labels, t)

    def __len__(self):
        return len(self.labels)

    def __repr__(self):
        return f"FinitePoset(n={len(self)})"

    def __eq__(self, other):
        return isinstance(other, FinitePoset) and self.labels == other.labels and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash((self.labels, self.table.tobytes()))

    def idx(self, x):
        try:
            return self.index[x]
        except KeyError:
            raise InvalidArgument(f"unknown element {x!r}") from None

    def leq(self, x, y):
        return bool(self.table[self.idx(x), self.idx(y)])

    def leq_i(self, i, j):
        return bool(self.table[i, j])

    def indices(self, elems):
        return frozenset(self.idx(x) for x in elems)

    def below(self, i):
        return frozenset(np.flatnonzero(self.table[:, i]).tolist())

    def above(self, i):
        return frozenset(np.flatnonzero(self.table[i, :]).tolist())

    def covers(self):
        """Cover relation ``{i: [j...]}`` (j covers i)."""
        t = self.table.copy()
        np.fill_diagonal(t, False)
        ti = t.astype(np.float32)
        two_step = (ti @ ti) > 0
        cov = t & ~two_step
        return {i: np.flatnonzero(cov[i]).tolist() for i in range(len(self))}

    def maximal(self, idxs):
        idxs = set(idxs)
        return frozenset(i for i in idxs if not any(j != i and self.table[i, j] for j in idxs))

    def minimal(self, idxs):
        idxs = set(idxs)
        return frozenset(i for i in idxs if not any(j != i and self.table[j, i] for j in idxs))


@dataclass(frozen=True)
class DownSet:
    carrier: frozenset
    parent: FinitePoset = field(repr=False, compare=False)

    def labels(self):
        return frozenset(self.parent.labels[i] for i in self.carrier)


@dataclass(frozen=True)
class UpSet:
    carrier: frozenset
    parent: FinitePoset = field(repr=False, compare=False)

    def labels(self):
        return frozenset(self.parent.labels[i] for i in self.carrier)


def _mask(p, idxs):
    m = np.zeros(len(p), dtype=bool)
    if idxs:
        m[list(idxs)] = True
    return m


def down_closure(p, s):
    """Smallest down-set containing the labelled elements ``s``."""
    idxs = p.indices(s)
    if not idxs:
        return DownSet(frozenset(), p)
    m = p.table[:, sorted(idxs)].any(axis=1)
    return DownSet(frozenset(np.flatnonzero(m).tolist()), p)


def up_closure(p, s):
    idxs = p.indices(s)
    if not idxs:
        return UpSet(frozenset(), p)
    m = p.table[sorted(idxs), :].any(axis=0)
    return UpSet(frozenset(np.flatnonzero(m).tolist()), p)


def _is_upper(p, idxs):
    if not idxs:
        return True
    return set(np.flatnonzero(p.table[sorted(idxs), :].any(axis=0)).tolist()) <= set(idxs)


def _is_lower(p, idxs):
    if not idxs:
        return True
    return set(np.flatnonzero(p.table[:, sorted(idxs)].any(axis=1)).tolist()) <= set(idxs)


def is_directed(p, idxs):
    idxs = list(idxs)
    if not idxs:
        return False
    for a, b in combinations(idxs, 2):
        if not any(p.table[a, c] and p.table[b, c] for c in idxs):
            return False
    return True


def least_upper_bound(p, idxs):
    """Index of the supremum of ``idxs`` or ``None`` when it does not exist."""
    idxs = sorted(idxs)
    ub = p.table[idxs, :].all(axis=0) if idxs else np.ones(len(p), dtype=bool)
    cands = np.flatnonzero(ub).tolist()
    least = [c for c in cands if all(p.table[c, d] for d in cands)]
    return least[0] if least else None


def _directed_subsets(p, rng, samples):
    n = len(p)
    if n <= EXHAUSTIVE_LIMIT:
        for r in range(1, n + 1):
            for d in combinations(range(n), r):
                if is_directed(p, d):
                    yield d
        return
    # above the limit: random chains plus random small subsets
    for _ in range(samples):
        r = rng.randint(1, min(n, 6))
        d = tuple(rng.sample(range(n), r))
        if is_directed(p, d):
            yield d


def is_scott_open(p, u, *, rng=None, samples=2000):
    """Upper set that every directed set with supremum inside it meets."""
    idxs = p.indices(u)
    if not _is_upper(p, idxs):
        return False
    rng = rng or random.Random(0)
    for d in _directed_subsets(p, rng, samples):
        s = least_upper_bound(p, d)
        if s is not None and s in idxs and not idxs.intersection(d):
            return False
    return True


def _all_lower_sets(p):
    """Every down-set, as frozensets of indices, via antichain enumeration."""
    n = len(p)
    out = set()
    # grow from the empty set by adding minimal elements of the complement
    frontier = [frozenset()]
    out.add(frozenset())
    while frontier:
        nxt = []
        for d in frontier:
            for i in range(n):
                if i in d:
                    continue
                if all(j in d for j in p.below(i) if j != i):
                    e = d | {i}
                    if e not in out:
                        out.add(e)
                        nxt.append(e)
        frontier = nxt
    return sorted(out, key=lambda s: (len(s), sorted(s)))


def closed_sets(p):
    return [DownSet(c, p) for c in _all_lower_sets(p)]


def open_sets(p):
    full = frozenset(range(len(p)))
    return [UpSet(full - c, p) for c in _all_lower_sets(p)]


def is_irreducible(p, c, opens=None):
    """``c`` meets U and V individually implies it meets U ∩ V, for all opens."""
    c = frozenset(c)
    if not c:
        return False
    opens = opens if opens is not None else [u.carrier for u in open_sets(p)]
    hit = [u for u in opens if u & c]
    for u, v in combinations(hit, 2):
        if not (u & v & c):
            return False
    return True


def irreducible_closed_sets(p):
    opens = [u.carrier for u in open_sets(p)]
    return [DownSet(c, p) for c in _all_lower_sets(p) if is_irreducible(p, c, opens)]


def is_sober(p):
    # T0 holds for every poset (antisymmetry of the specialisation order)
    principal = {p.below(i): i for i in range(len(p))}
    return all(c.carrier in principal for c in irreducible_closed_sets(p))


def is_compact_saturated(p, k):
    """On a finite carrier: saturated and generated by its (finite) minimal elements."""
    k = frozenset(k)
    if not _is_upper(p, k):
        return False
    mins = p.minimal(k)
    return up_closure(p, [p.labels[i] for i in mins]).carrier == k


def is_coherent(p):
    sats = [u.carrier for u in open_sets(p)]  # saturated = upper on a poset
    for a, b in combinations(sats, 2):
        if not is_compact_saturated(p, a & b):
            return False
    return True


def is_well_filtered(p, *, max_family=2):
    """Literal check over filter bases of at most ``max_family`` compact saturated sets.

    A finite filter base always contains a least member, which is why bounded
    families already exhaust the finite case.
    """
    sats = [u.carrier for u in open_sets(p) if is_compact_saturated(p, u.carrier)]
    opens = sats
    for r in range(1, max_family + 1):
        for fam in combinations(sats, r):
            if not _is_filter_base(fam):
                continue
            inter = frozenset.intersection(*fam)
            for u in opens:
                if inter <= u and not any(k <= u for k in fam):
                    return False
    return True


def _is_filter_base(fam):
    return all(any(c <= a & b for c in fam) for a in fam for b in fam)


# -- small named posets -----------------------------------------------------------

def chain(n):
    return FinitePoset(list(range(n)), [[i <= j for j in range(n)] for i in range(n)])


def antichain(labels):
    labels = list(labels)
    return FinitePoset(labels, np.eye(len(labels), dtype=bool))


def diamond():
    return FinitePoset.from_covers(["bot", "a", "b", "top"], {0: [1, 2], 1: [3], 2: [3]})


def vee():
    """``a > c < b``."""
    return FinitePoset.from_covers(["c", "a", "b"], {0: [1, 2]})


def _canonical_form(t):
    n = len(t)
    best = None
    for perm in permutations(range(n)):
        key = tuple(bool(t[perm[i], perm[j]]) for i in range(n) for j in range(n))
        if best is None or key < best:
            best = key
    return best


def all_posets(n, *, up_to_iso=True):
    """All posets on ``n`` points (naturally labelled DAG closures, deduplicated)."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    seen = set()
    out = []
    for bits in range(1 << len(pairs)):
        t = np.eye(n, dtype=bool)
        for b, (i, j) in enumerate(pairs):
            if bits >> b & 1:
                t[i, j] = True
        # only keep relations that are already transitively closed
        ti = t.astype(np.int64)
        if ((ti @ ti > 0) & ~t).any():
            continue
        key = _canonical_form(t) if up_to_iso else tuple(t.ravel().tolist())
        if key in seen:
            continue
        seen.add(key)
        out.append(FinitePoset(list(range(n)), t))
    return out


# -- text serialisation -----------------------------------------------------------

def dumps(p, render=str):
    lines = [f"poset {len(p)}"]
    cov = p.covers()
    for i, lab in enumerate(p.labels):
        lines.append(f"{i} {render(lab)} : {' '.join(str(j) for j in cov[i])}".rstrip())
    return "\n".join(lines) + "\n"


def loads(text, parse=str):
    """Parse the ``poset <n>`` format; the order is the reflexive-transitive cover closure."""
    rows = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows or not rows[0].startswith("poset "):
        raise InvalidArgument("missing 'poset <n>' header")
    try:
        n = int(rows[0].split()[1])
    except (IndexError, ValueError):
        raise InvalidArgument(f"bad header {rows[0]!r}") from None
    if len(rows) - 1 != n:
        raise InvalidArgument(f"header declares {n} elements, found {len(rows) - 1} lines")
    labels = [None] * n
    covers = {}
    for row in rows[1:]:
        head, sep, tail = row.partition(":")
        if not sep:
            raise InvalidArgument(f"missing ':' in {row!r}")
        parts = head.split(None, 1)
        if len(parts) != 2:
            raise InvalidArgument(f"expected '<id> <label>' in {row!r}")
        try:
            i = int(parts[0])
            ups = [int(v) for v in tail.split()]
        except ValueError:
            raise InvalidArgument(f"non-integer id in {row!r}") from None
        if not 0 <= i < n or labels[i] is not None:
            raise InvalidArgument(f"bad or duplicate id {i} in {row!r}")
        if any(not 0 <= j < n for j in ups):
            raise InvalidArgument(f"cover id out of range in {row!r}")
        labels[i] = parse(parts[1].strip())
        covers[i] = ups
    return FinitePoset.from_covers(labels, covers)
