"""Boxing a point of a Scott-open subset of a product inside a product of opens.

Given posets P and Q with enumerated non-trivial ideals and an open U of
P x Q containing ``(a1, b1)``, :func:`run_stages` builds finite sets
``A_1, A_2, ...`` and ``B_1, B_2, ...`` with ``(U A) x (U B)`` inside U at
every stage.  At stage n the index set E lists the ideals whose supremum has
just become reachable from the A's, and a member of each such ideal is added
to ``A_n``; then the same happens for Q.
"""

from dataclasses import dataclass
from itertools import product as cartesian

import numpy as np

from .errors import OracleNotScottOpen, PreconditionViolation
from .poset import FinitePoset

__all__ = [
    "StageState", "StageRecord", "run_stages", "upclosure_is_scott_open",
    "product_poset", "index_set",
]


@dataclass(frozen=True)
class StageRecord:
    n: int
    E: tuple
    F: tuple
    A: tuple
    B: tuple


@dataclass(frozen=True)
class StageState:
    A: tuple          # tuple of frozensets A_1..A_n
    B: tuple
    n: int
    E: tuple          # last computed index set
    F: tuple
    history: tuple    # StageRecord per stage

    def union_A(self):
        return frozenset().union(*self.A)

    def union_B(self):
        return frozenset().union(*self.B)


def _in_up(p, x, sets):
    return any(p.leq(a, x) for s in sets for a in s)


def index_set(p, stream, sets, n):
    """Indices ``i <= n - 1`` whose ideal supremum first became reachable.

    ``sets`` holds ``A_1 .. A_{n-1}``.  Index ``i <= n - 2`` qualifies when
    its supremum is outside ``up(A_1 .. A_i)`` but inside ``up(A_{i+1} ..
    A_{n-1})``; index ``n - 1`` qualifies when its supremum is inside
    ``up(A_1 .. A_{n-1})``.
    """
    out = []
    for i in range(1, n - 1):
        d = stream.get(i)
        if d is None:
            break
        if not _in_up(p, d.sup, sets[:i]) and _in_up(p, d.sup, sets[i:n - 1]):
            out.append(i)
    d = stream.get(n - 1)
    if d is not None and _in_up(p, d.sup, sets[:n - 1]):
        out.append(n - 1)
    return tuple(out)


def run_stages(p, q, u, start, max_stage):
    """Run stages ``1..max_stage``; ``u`` is a membership predicate on pairs."""
    a1, b1 = start
    if not u((a1, b1)):
        raise PreconditionViolation(f"start point {start} is not in the open set")
    if max_stage < 1:
        raise PreconditionViolation("max_stage must be >= 1")
    sp, sq = p.ideals(), q.ideals()
    A, B = [frozenset([a1])], [frozenset([b1])]
    hist = [StageRecord(1, (), (), tuple(A[0]), tuple(B[0]))]
    E = F = ()
    for n in range(2, max_stage + 1):
        E = index_set(p, sp, A, n)
        bs = frozenset().union(*B)
        an = set()
        for i in E:
            d = _pick(sp.get(i), lambda x: all(u((x, b)) for b in bs), n)
            an.add(d)
        A.append(frozenset(an))
        F = index_set(q, sq, B, n)
        as_ = frozenset().union(*A)
        bn = set()
        for i in F:
            d = _pick(sq.get(i), lambda y: all(u((a, y)) for a in as_), n)
            bn.add(d)
        B.append(frozenset(bn))
        _check_box(u, A, B, n)
        hist.append(StageRecord(n, E, F, tuple(sorted(an, key=str)), tuple(sorted(bn, key=str))))
    return StageState(tuple(A), tuple(B), max_stage, E, F, tuple(hist))


def _pick(desc, pred, n):
    try:
        return desc.pick_above((), pred)
    except OracleNotScottOpen as exc:
        raise OracleNotScottOpen(
            f"stage {n}: ideal {desc.name} has its supremum in the open set "
            f"but no member found inside it", ideal=desc.name, stage=n,
        ) from exc


def _check_box(u, A, B, n):
    for a, b in cartesian(frozenset().union(*A), frozenset().union(*B)):
        if not u((a, b)):
            raise AssertionError(f"stage {n}: ({a}, {b}) escaped the open set")


def upclosure_is_scott_open(p, a, stages=None, max_index=None):
    """Check ``up(a)`` against the declared ideals seen so far.

    For every ideal with index up to ``max_index`` (default: the number of
    stages run), a supremum inside ``up(a)`` must come with a member of the
    ideal inside ``a`` itself.
    """
    a = list(a)
    if max_index is None:
        max_index = stages.n if stages is not None else 1
    stream = p.ideals()
    for i in range(1, max_index + 1):
        d = stream.get(i)
        if d is None:
            break
        if any(p.leq(x, d.sup) for x in a) and not any(d.contains(x) for x in a):
            return False
    return True


def product_poset(p, q):
    """Coordinatewise product of two finite posets."""
    labels = [(x, y) for x in p.labels for y in q.labels]
    t = np.kron(p.table, q.table).astype(bool)
    return FinitePoset(labels, t)
