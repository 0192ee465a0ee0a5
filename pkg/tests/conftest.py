from functools import lru_cache

import pytest

from grouplab.corpus import builtin_corpus
from grouplab.lattice import all_subgroups, closure

_ENTRIES = {e.name: e for e in builtin_corpus(100)}


@lru_cache(maxsize=None)
def corpus_group(name):
    return _ENTRIES[name].build()


def element_of_order(G, n, avoid=0):
    """Smallest-index element of order n outside the bitset ``avoid``."""
    return next(g for g in range(G.order) if G.element_orders[g] == n and not avoid >> g & 1)


class D8Parts:
    """D8 with a rotation a of order 4, a reflection b, and the named subgroups."""

    def __init__(self):
        G = self.G = corpus_group("D8")
        self.L = all_subgroups(G)
        mul = G.mul
        self.a = element_of_order(G, 4)
        rot = closure(G, [self.a])
        self.b = element_of_order(G, 2, avoid=rot.members)
        self.a2 = mul[self.a][self.a]
        self.ab = mul[self.a][self.b]
        self.rot = rot
        self.klein = closure(G, [self.a2, self.b])  # V1 = <a^2, b>
        self.refl_b = closure(G, [self.b])
        self.refl_ab = closure(G, [self.ab])
        self.center = closure(G, [self.a2])


@pytest.fixture(scope="session")
def d8():
    return D8Parts()


@pytest.fixture(scope="session")
def group():
    return corpus_group
