"""The poset P = N x L: countably many copies of the gadget glued at their tops.

Cross-column relations only ever point at a top element ``(m, top)`` and the
target column ``m`` always exceeds the source column, so every decision
reduces to decoding ``m`` with :func:`f_mn_decode`.
"""

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import InvalidArgument, OracleNotScottOpen, PreconditionViolation
from .gadget import (
    TOP, Nat, PairCode, Seq, f_mn, f_mn_decode, is_prefix, leq_L, lt_L,
    parse_L, render_L, sequences_up_to_weight,
)
from .poset import FinitePoset

__all__ = [
    "PElem", "StrictWitness", "strictly_below", "leq_P", "cross_below",
    "truncation", "window", "column_elements",
    "ScottOpenP", "UpSetP", "everything",
    "IrreducibilityTrace", "irreducibility_trace", "irreducibility_witness",
    "parse_P",
]


@dataclass(frozen=True)
class PElem:
    col: int
    val: object

    def __post_init__(self):
        if not isinstance(self.col, int) or self.col < 1:
            raise InvalidArgument(f"column must be a natural >= 1, got {self.col!r}")
        if not (self.val is TOP or isinstance(self.val, (Nat, Seq))):
            raise InvalidArgument(f"not an element of L: {self.val!r}")

    def __str__(self):
        return f"({self.col}|{render_L(self.val)})"

    __repr__ = __str__


def parse_P(text):
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")") and "|" in text):
        raise InvalidArgument(f"bad P element text {text!r}")
    col, _, val = text[1:-1].partition("|")
    try:
        return PElem(int(col), parse_L(val))
    except ValueError:
        raise InvalidArgument(f"bad P element text {text!r}") from None


@dataclass(frozen=True)
class StrictWitness:
    """Which clause puts ``x`` strictly below ``y``, with its existential parameters.

    ``clause`` is one of ``R1 R2 R3 R4 R1;R2 R1;R3 R1;R4``.  For the composed
    clauses ``params`` starts with the intermediate L-value in the source column.
    """

    clause: str
    params: tuple

    def replay(self, x, y):
        if self.clause == "R1":
            return x.col == y.col and lt_L(x.val, y.val)
        if ";" in self.clause:
            mid_val, inner = self.params[0], StrictWitness(self.clause[3:], self.params[1:])
            mid = PElem(x.col, mid_val)
            return lt_L(x.val, mid_val) and inner.replay(mid, y)
        if y.val is not TOP:
            return False
        if self.clause == "R2":
            (k,) = self.params
            return isinstance(x.val, Seq) and k > x.col and y.col == f_mn((x.col, k), x.val.s)
        if self.clause == "R3":
            (d,) = self.params
            return isinstance(x.val, Nat) and d < x.col and y.col == f_mn((d, x.col), (x.val.k,))
        if self.clause == "R4":
            a, b, s = self.params
            return (isinstance(x.val, Nat) and a < b and f_mn((a, b), s) == x.col
                    and f_mn((a, b), tuple(s) + (x.val.k,)) == y.col)
        return False


def strictly_below(x, y):
    """A :class:`StrictWitness` when ``x < y`` in P, else ``None``."""
    if x.col == y.col:
        return StrictWitness("R1", ()) if lt_L(x.val, y.val) else None
    if y.val is not TOP or x.val is TOP:
        return None
    dec = f_mn_decode(y.col)
    if dec is None:
        return None
    pc, t = dec
    v = x.val
    if isinstance(v, Seq):
        if pc.m == x.col and is_prefix(v.s, t):
            if v.s == t:
                return StrictWitness("R2", (pc.n,))
            return StrictWitness("R1;R2", (Seq(t), pc.n))
        return None
    j = v.k
    if len(t) == 1:
        if pc.n == x.col and j <= t[0]:
            if j == t[0]:
                return StrictWitness("R3", (pc.m,))
            return StrictWitness("R1;R3", (Nat(t[0]), pc.m))
        return None
    if j <= t[-1] and f_mn(pc, t[:-1]) == x.col:
        if j == t[-1]:
            return StrictWitness("R4", (pc.m, pc.n, t[:-1]))
        return StrictWitness("R1;R4", (Nat(t[-1]), pc.m, pc.n, t[:-1]))
    return None


def leq_P(x, y):
    return x == y or strictly_below(x, y) is not None


@lru_cache(maxsize=1 << 14)
def cross_below(c):
    """Maximal elements of other columns lying below ``(c, top)`` (at most two)."""
    dec = f_mn_decode(c)
    if dec is None:
        return ()
    pc, t = dec
    if len(t) == 1:
        return (PElem(pc.m, Seq(t)), PElem(pc.n, Nat(t[0])))
    return (PElem(pc.m, Seq(t)), PElem(f_mn(pc, t[:-1]), Nat(t[-1])))


# -- finite windows ------------------------------------------------------------

def column_elements(col, nat_max, seqs):
    out = [PElem(col, Nat(k)) for k in range(1, nat_max + 1)]
    out += [PElem(col, Seq(s)) for s in seqs]
    out.append(PElem(col, TOP))
    return out


def window(columns, nat_max, seq_weight_max, extra_seqs=()):
    """Finite induced sub-poset on the given columns, ordered by ``leq_P``."""
    seqs = list(sequences_up_to_weight(seq_weight_max))
    have = set(seqs)
    for s in extra_seqs:
        for i in range(1, len(s) + 1):
            if tuple(s[:i]) not in have:
                have.add(tuple(s[:i]))
                seqs.append(tuple(s[:i]))
    elems = []
    for c in sorted(set(columns)):
        elems += column_elements(c, nat_max, seqs)
    return _poset_from_elems(elems)


def _poset_from_elems(elems):
    import numpy as np
    n = len(elems)
    t = np.eye(n, dtype=bool)
    for i, x in enumerate(elems):
        for j, y in enumerate(elems):
            if i != j and strictly_below(x, y) is not None:
                t[i, j] = True
    return FinitePoset(elems, t)


@lru_cache(maxsize=8)
def truncation(col_max, seq_weight_max):
    """Columns ``1..col_max``; Nat values up to ``col_max``; sequences up to the weight bound."""
    if col_max < 1 or seq_weight_max < 1:
        raise InvalidArgument("truncation bounds must be >= 1")
    return window(range(1, col_max + 1), col_max, seq_weight_max)


# -- constructive Scott-open sets ---------------------------------------------------

@dataclass(frozen=True)
class ScottOpenP:
    """Scott-open completion of ``up(seeds)``.

    Whenever ``(c, top)`` is in the set, so is every ``(c, n:j)`` with
    ``j >= nat_from(c)`` and every ``(c, s)`` with ``len(s) >= seq_len(c)``
    (plus everything above those).  The thresholds vary with the column
    through ``salt`` so that the witness search has real work to do.
    """

    seeds: tuple
    nat_from: int = 1
    seq_len: int = 1
    salt: int = 0
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def nat_threshold(self, c):
        return self.nat_from + ((c * self.salt) % 3 if self.salt else 0)

    def seq_threshold(self, c):
        return self.seq_len + ((c * (self.salt + 1)) % 2 if self.salt else 0)

    def __call__(self, x):
        if any(leq_P(f, x) for f in self.seeds):
            return True
        if not self._top(x.col):
            return False
        v = x.val
        if v is TOP:
            return True
        if isinstance(v, Nat):
            return v.k >= self.nat_threshold(x.col)
        return len(v.s) >= self.seq_threshold(x.col)

    def _top(self, c):
        hit = self._cache.get(c)
        if hit is None:
            top = PElem(c, TOP)
            hit = any(leq_P(f, top) for f in self.seeds) or any(self(y) for y in _cross_down(c))
            self._cache[c] = hit
        return hit


def _cross_down(c):
    """All elements of other columns below ``(c, top)``; finite."""
    out = []
    for m in cross_below(c):
        if isinstance(m.val, Seq):
            out += [PElem(m.col, Seq(m.val.s[:i])) for i in range(1, len(m.val.s) + 1)]
        else:
            out += [PElem(m.col, Nat(j)) for j in range(1, m.val.k + 1)]
    return out


@dataclass(frozen=True)
class UpSetP:
    """Plain up-closure of finitely many points: upper, generally not Scott-open."""

    seeds: tuple

    def __call__(self, x):
        return any(leq_P(f, x) for f in self.seeds)


def everything(x):
    return True


# -- irreducibility of P ----------------------------------------------------------

@dataclass(frozen=True)
class IrreducibilityTrace:
    point: PElem
    same_column: bool
    swapped: bool
    chain: tuple       # the naturals a_1, ..., a_k
    steps: tuple       # (clause, element) pairs in the order they were forced into V


def irreducibility_trace(u_seed, v_seed, u, v, depth=32, search=1000):
    """Find a point of ``u ∩ v`` by threading through the R3/R4 staircase."""
    if not u(u_seed):
        raise PreconditionViolation(f"{u_seed} is not in the first open set")
    if not v(v_seed):
        raise PreconditionViolation(f"{v_seed} is not in the second open set")
    n0, m0 = u_seed.col, v_seed.col
    if n0 == m0:
        z = PElem(n0, TOP)
        _verify(z, u, v)
        return IrreducibilityTrace(z, True, False, (), (("R1", z),))
    swapped = n0 > m0
    if swapped:
        u, v, n0, m0 = v, u, m0, n0
    pc = PairCode(n0, m0)
    steps = []

    def smallest_nat(col):
        for a in range(1, search + 1):
            if v(PElem(col, Nat(a))):
                return a
        raise OracleNotScottOpen(f"no (({col}, n:a)) in the open set for a <= {search} although its top is")

    a1 = smallest_nat(m0)
    seq = (a1,)
    top = PElem(f_mn(pc, seq), TOP)
    steps.append(("R3", top))
    if not v(top):
        raise OracleNotScottOpen(f"open set is not upward closed at {top}")
    for _ in range(depth):
        if u(PElem(n0, Seq(seq))):
            z = PElem(f_mn(pc, seq), TOP)
            steps.append(("R2", z))
            _verify(z, u, v)
            return IrreducibilityTrace(z, False, swapped, seq, tuple(steps))
        a = smallest_nat(top.col)
        seq = seq + (a,)
        top = PElem(f_mn(pc, seq), TOP)
        steps.append(("R4", top))
        if not v(top):
            raise OracleNotScottOpen(f"open set is not upward closed at {top}")
    raise OracleNotScottOpen(
        f"no prefix of length <= {depth} of {seq} enters the first open set in column {n0}"
    )


def _verify(z, u, v):
    if not (u(z) and v(z)):
        raise OracleNotScottOpen(f"constructed point {z} is not in both open sets")


def irreducibility_witness(u_seed, v_seed, u, v, depth=32):
    return irreducibility_trace(u_seed, v_seed, u, v, depth=depth).point
