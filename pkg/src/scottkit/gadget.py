"""The gadget lattice L and the integer encodings used to glue copies of it.

L has three components: positive naturals (numeric order), non-empty finite
sequences of positive naturals (prefix order) and a top element.  Sequences
are plain tuples of ints throughout.

Encodings
---------
``mono_inj`` ranks sequences by weight ``len(s) + sum(s)`` and then
lexicographically.  A proper prefix always has smaller weight, so the rank is
strictly monotone for the prefix order, and it is a bijection onto 1, 2, 3, ...

``i_set(m, n)`` is the set of naturals with 2-adic valuation ``code(m, n) + 1``
that exceed ``n``; distinct pairs get distinct valuations, hence disjoint sets.
``f_mn`` composes the increasing enumeration of that set with ``mono_inj``.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from .errors import InvalidArgument, OutOfRange

__all__ = [
    "Nat", "Seq", "Top", "TOP", "LElem",
    "leq_L", "lt_L", "is_prefix", "common_prefix", "weight",
    "mono_inj", "mono_inj_decode", "sequences_of_weight", "sequences_up_to_weight",
    "count_sequences", "PairCode", "i_set", "i_set_members",
    "f_mn", "f_mn_decode", "render_L", "parse_L",
]


@dataclass(frozen=True, order=True)
class Nat:
    k: int

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 1:
            raise InvalidArgument(f"Nat payload must be a natural >= 1, got {self.k!r}")

    def __str__(self):
        return render_L(self)


@dataclass(frozen=True, order=True)
class Seq:
    s: tuple

    def __post_init__(self):
        s = tuple(self.s)
        object.__setattr__(self, "s", s)
        _check_seq(s)

    def __str__(self):
        return render_L(self)


class Top:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "TOP"

    def __str__(self):
        return "top"

    def __reduce__(self):
        return (Top, ())


TOP = Top()
LElem = (Nat, Seq, Top)


def _check_seq(s):
    if len(s) == 0:
        raise InvalidArgument("sequences must be non-empty")
    for v in s:
        if not isinstance(v, int) or v < 1:
            raise InvalidArgument(f"sequence entries must be naturals >= 1, got {s!r}")


def is_prefix(s, t):
    """True iff ``s`` is a prefix of ``t`` (equality allowed)."""
    return len(s) <= len(t) and tuple(t[: len(s)]) == tuple(s)


def common_prefix(s, t):
    out = []
    for a, b in zip(s, t):
        if a != b:
            break
        out.append(a)
    return tuple(out)


def leq_L(x, y):
    if y is TOP:
        return True
    if isinstance(x, Nat) and isinstance(y, Nat):
        return x.k <= y.k
    if isinstance(x, Seq) and isinstance(y, Seq):
        return is_prefix(x.s, y.s)
    return False


def lt_L(x, y):
    return x != y and leq_L(x, y)


# -- weight-then-lex ranking of sequences ------------------------------------

def weight(s):
    return len(s) + sum(s)


_C0 = [1, 0]      # number of (possibly empty) sequences of each exact weight
_CUM0 = [1, 1]    # prefix sums of _C0


def _grow(w):
    while len(_C0) <= w:
        n = len(_C0)
        _C0.append(_C0[n - 1] + _C0[n - 2])
        _CUM0.append(_CUM0[-1] + _C0[-1])


def _c0(w):
    if w < 0:
        return 0
    _grow(w)
    return _C0[w]


def _cum0(w):
    if w < 0:
        return 0
    _grow(w)
    return _CUM0[w]


def count_sequences(w):
    """Number of non-empty sequences of weight exactly ``w``."""
    return _c0(w) if w >= 1 else 0


def mono_inj(s):
    """Rank of ``s`` in the weight-then-lex enumeration, starting at 1."""
    s = tuple(s)
    _check_seq(s)
    w = weight(s)
    r = _cum0(w - 1) - 1  # non-empty sequences of smaller weight
    rem = w
    for v in s:
        # completions after placing a smaller value v' at this position
        r += _cum0(rem - 2) - _cum0(rem - v - 1)
        rem -= 1 + v
    return r + 1


def mono_inj_decode(r):
    if not isinstance(r, int) or r < 1:
        raise InvalidArgument(f"rank must be a natural >= 1, got {r!r}")
    w = 2
    while _cum0(w) - 1 < r:
        w += 1
    r -= _cum0(w - 1) - 1
    rem, out = w, []
    while rem > 0:
        v = 1
        while True:
            cnt = _c0(rem - 1 - v)
            if r <= cnt:
                break
            r -= cnt
            v += 1
        out.append(v)
        rem -= 1 + v
    return tuple(out)


def sequences_of_weight(w):
    """All non-empty sequences of weight ``w`` in lexicographic order."""
    def rec(rem):
        if rem == 0:
            yield ()
            return
        for v in range(1, rem):
            for tail in rec(rem - 1 - v):
                yield (v,) + tail
    if w < 2:
        return []
    return [s for s in rec(w) if s]


def sequences_up_to_weight(w):
    out = []
    for u in range(2, w + 1):
        out.extend(sequences_of_weight(u))
    return out


# -- the disjoint index family and the per-pair bijections ---------------------

@dataclass(frozen=True, order=True)
class PairCode:
    """A pair ``m < n`` of naturals with its Cantor-style index ``code``."""

    m: int
    n: int

    def __post_init__(self):
        if not (isinstance(self.m, int) and isinstance(self.n, int)) or not 1 <= self.m < self.n:
            raise InvalidArgument(f"PairCode needs 1 <= m < n, got ({self.m!r}, {self.n!r})")

    @property
    def code(self):
        return (self.n - 1) * (self.n - 2) // 2 + self.m

    @classmethod
    def from_code(cls, code):
        if not isinstance(code, int) or code < 1:
            raise InvalidArgument(f"pair code must be >= 1, got {code!r}")
        # largest n with (n-1)(n-2)/2 < code
        n = (3 + isqrt(8 * code - 7)) // 2
        while (n - 1) * (n - 2) // 2 >= code:
            n -= 1
        while n * (n - 1) // 2 < code:
            n += 1
        return cls(code - (n - 1) * (n - 2) // 2, n)


def _as_pair(pc):
    if isinstance(pc, PairCode):
        return pc
    m, n = pc
    return PairCode(m, n)


def _valuation(k):
    return (k & -k).bit_length() - 1


def i_set(pc):
    """Membership predicate of the infinite index set for ``pc``."""
    pc = _as_pair(pc)
    a = pc.code + 1

    def member(k):
        return isinstance(k, int) and k > pc.n and _valuation(k) == a

    return member


def _first_t(pc):
    a = pc.code + 1
    return ((pc.n >> a) + 1) // 2


def i_set_members(pc, count=None, below=None):
    """Increasing enumeration of ``i_set(pc)``; bounded by ``count`` or ``below``."""
    pc = _as_pair(pc)
    a = pc.code + 1
    t = _first_t(pc)
    produced = 0
    while True:
        k = (2 * t + 1) << a
        if below is not None and k >= below:
            return
        if count is not None and produced >= count:
            return
        yield k
        produced += 1
        t += 1


# f_mn(pc, s) has about code(pc) bits; beyond this we refuse to build it
MAX_CODE = 1 << 16


def f_mn(pc, s):
    """Monotone bijection from sequences onto ``i_set(pc)``."""
    pc = _as_pair(pc)
    idx = mono_inj(s)
    a = pc.code + 1
    if a > MAX_CODE:
        raise OutOfRange(f"f_mn{(pc.m, pc.n)} has over {MAX_CODE} bits")
    return (2 * (_first_t(pc) + idx - 1) + 1) << a


@lru_cache(maxsize=1 << 16)
def f_mn_decode(k):
    """Inverse of ``f_mn``: ``(PairCode, seq)`` or ``None`` outside every index set."""
    if not isinstance(k, int) or k < 1:
        return None
    a = _valuation(k)
    if a < 2:
        return None
    pc = PairCode.from_code(a - 1)
    if k <= pc.n:
        return None
    t = ((k >> a) - 1) // 2
    idx = t - _first_t(pc) + 1
    return pc, mono_inj_decode(idx)


# -- text form ------------------------------------------------------------------

def render_L(x):
    if x is TOP:
        return "top"
    if isinstance(x, Nat):
        return f"n:{x.k}"
    if isinstance(x, Seq):
        return "s:" + ".".join(str(v) for v in x.s)
    raise InvalidArgument(f"not an element of L: {x!r}")


def parse_L(text):
    text = text.strip()
    if text == "top":
        return TOP
    try:
        if text.startswith("n:"):
            return Nat(int(text[2:]))
        if text.startswith("s:"):
            return Seq(tuple(int(v) for v in text[2:].split(".")))
    except ValueError as exc:
        raise InvalidArgument(f"bad L element text {text!r}") from exc
    raise InvalidArgument(f"bad L element text {text!r}")
