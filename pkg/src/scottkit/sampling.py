"""Seeded random generators shared by the verification scenarios and the tests."""

from functools import lru_cache

from .gadget import TOP, Nat, Seq, sequences_up_to_weight
from .lattice import TOP_R, FElem, TypeI_II_2, canonical_elements, related_elements
from .pposet import PElem, ScottOpenP

__all__ = [
    "SMALL_COL", "is_small", "random_m", "random_r", "random_f", "random_f_triple", "random_p",
    "random_open_pair", "i2_chain", "p_chain",
]

# elements whose columns stay below this keep every derived column computable
SMALL_COL = 300


def is_small(m):
    if m is TOP_R:
        return True
    r = m.region()
    cols = list(r.cols) + [c for c, _ in r.seqs] + [c for c, _ in r.nats]
    return max(cols, default=0) <= SMALL_COL


@lru_cache(maxsize=1)
def _base():
    return tuple(m for m in canonical_elements(3, seq_weight=4, k_bound=2) if is_small(m))


@lru_cache(maxsize=4096)
def _related(m):
    return tuple(x for x in related_elements(m) if is_small(x))


def random_m(rng):
    a = rng.choice(_base())
    if rng.random() < 0.5:
        return a
    return rng.choice(_related(a))


def random_r(rng):
    return TOP_R if rng.random() < 0.05 else random_m(rng)


def random_f(rng, max_gens=3, anchor=None):
    """Generators drawn near a common element, so that meets are not all empty."""
    anchor = anchor or random_m(rng)
    pool = [x for x in _related(anchor) if x is not anchor] or [anchor]
    gens = []
    for _ in range(rng.randint(0, max_gens)):
        gens.append(TOP_R if rng.random() < 0.05 else rng.choice(pool))
    return FElem(frozenset(gens))


def random_f_triple(rng):
    anchor = random_m(rng)
    return tuple(random_f(rng, anchor=anchor) for _ in range(3))


def random_p(rng, col_max=8, seq_weight=5):
    c = rng.randint(1, col_max)
    kind = rng.random()
    if kind < 0.4:
        return PElem(c, Nat(rng.randint(1, 5)))
    if kind < 0.85:
        return PElem(c, Seq(rng.choice(sequences_up_to_weight(seq_weight))))
    return PElem(c, TOP)


def random_open_pair(rng):
    """Two members of the Scott-open family together with seeds inside them."""
    def one():
        seed = random_p(rng)
        u = ScottOpenP((seed,), nat_from=rng.randint(1, 4), seq_len=rng.randint(1, 3),
                       salt=rng.randint(0, 3))
        return seed, u

    (a, u), (b, v) = one(), one()
    return a, b, u, v


def i2_chain(rng, length=None):
    """Strictly increasing chain of two-piece elements with fixed shape and growing bound."""
    while True:
        m = rng.randint(1, 4)
        n = rng.randint(m + 1, 6)
        s = rng.choice(sequences_up_to_weight(5))
        k0 = rng.randint(1, 3)
        length = length or rng.randint(2, 6)
        chain = [TypeI_II_2(m, n, s, k0 + i) for i in range(length)]
        if is_small(chain[-1]):
            return chain


def p_chain(rng, col_max=24):
    """A strictly increasing chain inside one column, whose supremum is that column's top."""
    c = rng.randint(1, col_max)
    length = rng.randint(2, 6)
    if rng.random() < 0.5:
        start = rng.randint(1, 4)
        return [PElem(c, Nat(start + i)) for i in range(length)]
    s = rng.choice(sequences_up_to_weight(4))
    out = []
    for i in range(length):
        out.append(PElem(c, Seq(s)))
        s = s + (rng.randint(1, 3),)
    return out
