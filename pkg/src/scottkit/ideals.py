"""Ideals of finite posets and declared streams of non-trivial ideals.

A finite poset has no non-trivial ideal (a finite directed set contains its
maximum), so the interesting objects are infinite posets whose ideals are
*declared*: an :class:`EnumerablePoset` carries an order oracle, a canonical
enumeration of its elements and a factory for its ideal stream.
"""

from dataclasses import dataclass
from itertools import count, islice

from .errors import InvalidArgument, OracleNotScottOpen
from .poset import is_directed

__all__ = [
    "Ideal", "IdealDescriptor", "NonTrivialIdealStream", "EnumerablePoset",
    "enumerate_nontrivial_ideals", "principal_ideals", "OMEGA", "omega_plus_one", "omega_sup",
    "jia_ideal_stream", "finite_enumerable",
]

PICK_LIMIT = 10_000


@dataclass(frozen=True)
class Ideal:
    """A directed down-set of a finite poset, as a frozenset of indices."""

    carrier: frozenset
    parent: object

    def __post_init__(self):
        p, c = self.parent, self.carrier
        if not c:
            raise InvalidArgument("ideals are non-empty")
        if any(not p.below(i) <= c for i in c) or not is_directed(p, c):
            raise InvalidArgument("not a directed down-set")

    def labels(self):
        return [self.parent.labels[i] for i in sorted(self.carrier)]

    def maximum(self):
        p = self.parent
        for i in self.carrier:
            if all(p.leq_i(j, i) for j in self.carrier):
                return i
        return None


def principal_ideals(p):
    return [Ideal(frozenset(p.below(i)), p) for i in range(len(p))]


def enumerate_nontrivial_ideals(p):
    """Non-trivial ideals of a finite poset: always none.

    Checked rather than assumed: every ideal of a finite poset is the
    principal ideal of its maximum.
    """
    for ideal in principal_ideals(p):
        m = ideal.maximum()
        assert m is not None and ideal.carrier == frozenset(p.below(m))
    return []


@dataclass(frozen=True)
class IdealDescriptor:
    """One declared non-trivial ideal of an enumerable poset."""

    index: int
    name: str
    contains: object      # element -> bool
    sup: object
    members: object       # () -> iterator over the carrier in canonical order
    leq: object

    def pick_above(self, s, pred, limit=PICK_LIMIT):
        """Smallest member ``m`` (in canonical order) with ``pred(m)`` lying
        above every element of ``s`` that belongs to the ideal."""
        inside = [x for x in s if self.contains(x)]
        for m in islice(self.members(), limit):
            if pred(m) and all(self.leq(x, m) for x in inside):
                return m
        raise OracleNotScottOpen(
            f"no member of ideal {self.name} among the first {limit} satisfies the predicate",
            ideal=self.name,
        )


class NonTrivialIdealStream:
    """Iterator over declared ideal descriptors with 1-based random access."""

    def __init__(self, factory):
        self._it = factory()
        self._seen = []
        self._done = False

    def __iter__(self):
        i = 0
        while True:
            d = self.get(i + 1)
            if d is None:
                return
            yield d
            i += 1

    def __next__(self):
        d = self.get(len(self._seen) + 1)
        if d is None:
            raise StopIteration
        return d

    def get(self, i):
        """The ``i``-th descriptor, or ``None`` when the stream is shorter."""
        while len(self._seen) < i and not self._done:
            try:
                d = next(self._it)
            except StopIteration:
                self._done = True
                break
            if any(d.name == e.name for e in self._seen):
                raise InvalidArgument(f"ideal stream repeated {d.name}")
            self._seen.append(d)
        return self._seen[i - 1] if i <= len(self._seen) else None


@dataclass(frozen=True)
class EnumerablePoset:
    name: str
    leq: object
    elements: object          # () -> iterator in canonical order
    ideal_factory: object     # () -> iterator of IdealDescriptor
    parse: object = None
    render: object = str
    sup: object = None        # finite set -> supremum, when the poset offers one

    def ideals(self):
        return NonTrivialIdealStream(self.ideal_factory)

    def up(self, a, x):
        return any(self.leq(y, x) for y in a)


# -- omega + 1 ------------------------------------------------------------------

class _Omega:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "OMEGA"

    def __str__(self):
        return "w"

    def __reduce__(self):
        return (_Omega, ())


OMEGA = _Omega()


def _omega_leq(x, y):
    if y is OMEGA:
        return True
    if x is OMEGA:
        return False
    return x <= y


def _omega_elements():
    yield OMEGA
    yield from count(0)


def _omega_parse(text):
    text = text.strip()
    if text in ("w", "omega"):
        return OMEGA
    try:
        v = int(text)
    except ValueError:
        raise InvalidArgument(f"bad element of omega+1: {text!r}") from None
    if v < 0:
        raise InvalidArgument(f"bad element of omega+1: {text!r}")
    return v


def omega_sup(s):
    s = list(s)
    if not s:
        return 0
    return OMEGA if OMEGA in s else max(s)


def omega_plus_one():
    """The chain 0 < 1 < 2 < ... < w with its single non-trivial ideal N."""

    def ideals():
        yield IdealDescriptor(
            1, "N", lambda x: x is not OMEGA, OMEGA, lambda: count(0), _omega_leq,
        )

    return EnumerablePoset("omega+1", _omega_leq, _omega_elements, ideals,
                           _omega_parse, str, omega_sup)


# -- finite posets seen as enumerable ones --------------------------------------

def finite_enumerable(p, name=None):
    """A finite poset with its (empty) stream of non-trivial ideals."""

    def leq(x, y):
        return p.leq(x, y)

    def parse(text):
        for lab in p.labels:
            if str(lab) == text.strip():
                return lab
        raise InvalidArgument(f"unknown element {text!r}")

    return EnumerablePoset(name or repr(p), leq, lambda: iter(p.labels), lambda: iter(()),
                           parse, str)


def jia_ideal_stream(p=None):
    from .jia import jia_poset
    return (p or jia_poset()).ideals()
