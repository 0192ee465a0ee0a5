"""Finite permutation groups with a full, canonically ordered element table."""

from __future__ import annotations

import os
from collections import deque
from functools import cached_property
from math import gcd

import numpy as np

from .errors import CapExceededError, PermutationError, PreconditionError
from .perm import Permutation, format_cycles, identity

__all__ = ["FiniteGroup", "generate", "default_order_cap", "DEFAULT_ORDER_CAP"]

DEFAULT_ORDER_CAP = 2000


def default_order_cap() -> int:
    """Order cap from ``GROUPLAB_ORDER_CAP`` if set, else 2000."""
    raw = os.environ.get("GROUPLAB_ORDER_CAP")
    if raw:
        try:
            cap = int(raw)
        except ValueError:
            raise PreconditionError(f"GROUPLAB_ORDER_CAP must be an integer, got {raw!r}") from None
        if cap < 1:
            raise PreconditionError("GROUPLAB_ORDER_CAP must be positive")
        return cap
    return DEFAULT_ORDER_CAP


# Stabilizer chain. Permutations here are 0-based tuples and products are
# left to right, matching perm.compose.


def _mul(a, b):
    return tuple(b[x] for x in a)


def _inv(a):
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def _orbit_transversal(point, gens, ident):
    trans = {point: ident}
    queue = deque([point])
    while queue:
        pt = queue.popleft()
        u = trans[pt]
        for s in gens:
            q = s[pt]
            if q not in trans:
                trans[q] = _mul(u, s)
                queue.append(q)
    return trans


class _StabChain:
    """Base and strong generating set built by the deterministic Schreier-Sims method."""

    def __init__(self, gens, degree):
        self.degree = degree
        ident = tuple(range(degree))
        self.ident = ident
        strong = [g for g in dict.fromkeys(gens) if g != ident]
        base: list[int] = []
        for g in strong:
            if all(g[b] == b for b in base):
                base.append(next(i for i in range(degree) if g[i] != i))
        self.base = base
        self.strong = strong
        self._rebuild()
        while True:
            residue = self._find_nonsifting()
            if residue is None:
                break
            self.strong.append(residue)
            if all(residue[b] == b for b in self.base):
                self.base.append(next(i for i in range(degree) if residue[i] != i))
            self._rebuild()

    def _rebuild(self):
        self.level_gens = []
        self.trans = []
        for i, b in enumerate(self.base):
            fixed = self.base[:i]
            gens = [s for s in self.strong if all(s[x] == x for x in fixed)]
            self.level_gens.append(gens)
            self.trans.append(_orbit_transversal(b, gens, self.ident))

    def sift(self, g, start=0):
        for i in range(start, len(self.base)):
            pt = g[self.base[i]]
            t = self.trans[i]
            if pt not in t:
                return g, i
            g = _mul(g, _inv(t[pt]))
        return g, len(self.base)

    def _find_nonsifting(self):
        for i in reversed(range(len(self.base))):
            t = self.trans[i]
            for pt, u in t.items():
                for s in self.level_gens[i]:
                    h = _mul(_mul(u, s), _inv(t[s[pt]]))
                    if h == self.ident:
                        continue
                    r, _ = self.sift(h, i + 1)
                    if r != self.ident:
                        return r
        return None

    @property
    def order(self) -> int:
        out = 1
        for t in self.trans:
            out *= len(t)
        return out

    def contains(self, g) -> bool:
        r, _ = self.sift(g)
        return r == self.ident


class FiniteGroup:
    """A permutation group together with the sorted table of all its elements.

    ``elements[0]`` is the identity and the table is sorted lexicographically
    on image tuples, so element indices are reproducible. Instances are
    treated as immutable; derived tables are computed lazily and cached.
    """

    def __init__(self, degree, generators, elements, chain, name=None):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = tuple(elements)
        self.order = len(self.elements)
        self.index = {p.images: i for i, p in enumerate(self.elements)}
        self.name = name
        self._chain = chain
        self._lattice = None

    def __repr__(self):
        label = self.name or "group"
        return f"<FiniteGroup {label} order={self.order} degree={self.degree}>"

    def __len__(self):
        return self.order

    def __contains__(self, perm: Permutation) -> bool:
        if perm.degree != self.degree:
            return False
        return self._chain.contains(tuple(x - 1 for x in perm.images))

    def index_of(self, perm: Permutation) -> int:
        return self.index[perm.images]

    @cached_property
    def gen_indices(self) -> tuple[int, ...]:
        return tuple(self.index[g.images] for g in self.generators)

    @cached_property
    def mul_array(self) -> np.ndarray:
        """``mul_array[i, j]`` is the index of ``elements[i]`` followed by ``elements[j]``."""
        n = self.order
        base = list(self._chain.base)
        if not base:
            return np.zeros((1, 1), dtype=np.int32)
        E = np.array([p.images for p in self.elements], dtype=np.int64) - 1
        m = len(base)
        table = np.empty((n, n), dtype=np.int32)
        if self.degree ** m < 2**62:
            weights = np.array([self.degree**j for j in range(m)], dtype=np.int64)
            keys = E[:, base] @ weights
            order = np.argsort(keys)
            sorted_keys = keys[order]
            for i in range(n):
                prod = E[:, E[i, base]] @ weights
                table[i, :] = order[np.searchsorted(sorted_keys, prod)]
        else:
            lookup = {tuple(row): i for i, row in enumerate(E[:, base].tolist())}
            for i in range(n):
                prod = E[:, E[i, base]].tolist()
                table[i, :] = [lookup[tuple(r)] for r in prod]
        return table

    @cached_property
    def mul(self) -> list[list[int]]:
        """Multiplication table as nested lists (fast scalar access)."""
        return self.mul_array.tolist()

    @cached_property
    def inv(self) -> list[int]:
        return [int(np.flatnonzero(row == 0)[0]) for row in self.mul_array]

    @cached_property
    def element_orders(self) -> list[int]:
        mul = self.mul
        out = []
        for g in range(self.order):
            x, k = g, 1
            while x != 0:
                x = mul[x][g]
                k += 1
            out.append(k)
        return out

    def power(self, g: int, e: int) -> int:
        e %= self.element_orders[g]
        x = 0
        row = self.mul
        for _ in range(e):
            x = row[x][g]
        return x

    def describe(self, g: int) -> str:
        return format_cycles(self.elements[g])

    @property
    def strong_order(self) -> int:
        """Order as computed from the stabilizer chain."""
        return self._chain.order

    @property
    def base(self) -> tuple[int, ...]:
        return tuple(b + 1 for b in self._chain.base)

    def p_part(self, p: int) -> int:
        n, q = self.order, 1
        while n % p == 0:
            n //= p
            q *= p
        return q

    def is_p_group(self, p: int) -> bool:
        return self.p_part(p) == self.order

    def is_abelian(self) -> bool:
        mul = self.mul
        gens = self.gen_indices
        return all(mul[a][b] == mul[b][a] for a in gens for b in gens)

    def is_coprime_to(self, m: int) -> bool:
        return gcd(self.order, m) == 1


def generate(generators, order_cap=None, degree=None, name=None) -> FiniteGroup:
    """Build the group generated by ``generators``.

    ``degree`` is required when ``generators`` is empty. The full element table
    is enumerated by closure; its size is cross-checked against the stabilizer
    chain order.
    """
    gens = list(generators)
    if degree is None:
        if not gens:
            raise PermutationError("degree is required for an empty generating set")
        degree = gens[0].degree
    for g in gens:
        if g.degree != degree:
            raise PermutationError(f"generator degree {g.degree} != {degree}")
    cap = default_order_cap() if order_cap is None else order_cap

    raw = [tuple(x - 1 for x in g.images) for g in gens]
    chain = _StabChain(raw, degree)

    start = identity(degree).images
    seen = {start}
    queue = deque([start])
    img_gens = [g.images for g in gens]
    while queue:
        x = queue.popleft()
        for g in img_gens:
            y = tuple(g[i - 1] for i in x)
            if y not in seen:
                seen.add(y)
                if len(seen) > cap:
                    raise CapExceededError(cap, len(seen), chain.order)
                queue.append(y)
    if len(seen) != chain.order:
        raise AssertionError(f"closure size {len(seen)} != stabilizer chain order {chain.order}")
    elements = [Permutation(t) for t in sorted(seen)]
    return FiniteGroup(degree, gens, elements, chain, name=name)
