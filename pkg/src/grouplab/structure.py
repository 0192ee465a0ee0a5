"""Structural subgroups and predicates computed from the subgroup lattice."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import PreconditionError
from .group import FiniteGroup, generate
from .lattice import SubgroupLattice, SubgroupRef, all_subgroups, closure, iter_bits
from .perm import Permutation

__all__ = [
    "ProductSet",
    "QuotientMap",
    "StructureTag",
    "ScalarActionWitness",
    "is_prime",
    "multiplicative_order",
    "frattini",
    "frattini_of",
    "center",
    "centralizer",
    "derived_subgroup",
    "o_p_prime",
    "sylow",
    "product_set",
    "quotient",
    "classify_small",
    "is_supersolvable",
    "p_complements",
    "scalar_action",
    "subgroup_as_group",
]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def multiplicative_order(d: int, m: int) -> int:
    if gcd(d, m) != 1:
        raise ValueError(f"{d} is not a unit modulo {m}")
    x, k = d % m, 1
    while x != 1 % m:
        x = x * d % m
        k += 1
    return k


def _require_prime(p):
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")


def frattini_of(L: SubgroupLattice, i: int) -> int:
    """Bitset of the intersection of the maximal subgroups of subgroup ``i``."""
    maxes = L.maximal_of(i)
    if not maxes:
        return 1
    out = L.bits[i]
    for j in maxes:
        out &= L.bits[j]
    return out


def frattini(L: SubgroupLattice) -> SubgroupRef:
    return SubgroupRef(L.parent, frattini_of(L, L.whole))


def center(parent: FiniteGroup) -> SubgroupRef:
    mul = parent.mul
    gens = parent.gen_indices
    bits = 0
    for g in range(parent.order):
        if all(mul[g][s] == mul[s][g] for s in gens):
            bits |= 1 << g
    return SubgroupRef(parent, bits)


def centralizer(parent: FiniteGroup, S: SubgroupRef) -> SubgroupRef:
    mul = parent.mul
    members = S.indices()
    bits = 0
    for g in range(parent.order):
        row = mul[g]
        if all(row[s] == mul[s][g] for s in members):
            bits |= 1 << g
    return SubgroupRef(parent, bits)


def derived_subgroup(parent: FiniteGroup) -> SubgroupRef:
    """Normal closure of the commutators of generator pairs."""
    mul, inv = parent.mul, parent.inv
    gens = parent.gen_indices

    def comm(a, b):
        return mul[mul[mul[inv[a]][inv[b]]][a]][b]

    seed = [comm(a, b) for a in gens for b in gens]
    D = closure(parent, seed)
    while True:
        extra = [mul[mul[inv[x]][h]][x] for x in gens for h in D.indices()]
        bigger = closure(parent, D.indices() + extra)
        if bigger.members == D.members:
            return D
        D = bigger


def o_p_prime(L: SubgroupLattice, p: int) -> SubgroupRef:
    """Largest normal subgroup of order coprime to ``p``."""
    _require_prime(p)
    cands = [i for i in range(len(L)) if L.normal_flags[i] and L.orders[i] % p]
    top = cands[-1]
    if any(not L.contains(top, j) for j in cands):
        raise AssertionError("normal p'-subgroups have no unique maximum")
    return L.subgroups[top]


def sylow(L: SubgroupLattice, p: int) -> SubgroupRef:
    """First subgroup in lattice order whose order is the p-part of |G|."""
    _require_prime(p)
    return L.subgroups[L.of_order(L.parent.p_part(p))[0]]


def p_complements(L: SubgroupLattice, p: int) -> list[SubgroupRef]:
    _require_prime(p)
    m = L.parent.order // L.parent.p_part(p)
    return [L.subgroups[i] for i in L.of_order(m)]


@dataclass(frozen=True)
class ProductSet:
    members: int
    is_subgroup: bool

    @property
    def size(self) -> int:
        return self.members.bit_count()


def product_set(H: SubgroupRef, K: SubgroupRef) -> ProductSet:
    """The set HK = {hk} and whether it is a subgroup."""
    if H.parent is not K.parent:
        raise PreconditionError("subgroups of different groups")
    mul = H.parent.mul
    k_elems = K.indices()
    bits = 0
    for h in H.indices():
        row = mul[h]
        for k in k_elems:
            bits |= 1 << row[k]
    size = bits.bit_count()
    expected = H.order * K.order // (H.members & K.members).bit_count()
    if size != expected:
        raise AssertionError(f"|HK| = {size} but |H||K|/|H∩K| = {expected}")
    elems = list(iter_bits(bits))
    closed = all(bits >> mul[a][b] & 1 for a in elems for b in elems)
    return ProductSet(bits, closed)


@dataclass
class QuotientMap:
    """G/N realized on the right cosets of N, with the projection G -> G/N."""

    parent: FiniteGroup
    kernel: SubgroupRef
    group: FiniteGroup
    projection: list[int]

    def image(self, H: SubgroupRef) -> SubgroupRef:
        """HN/N as a subgroup of the quotient."""
        bits = 0
        for h in H.indices():
            bits |= 1 << self.projection[h]
        return SubgroupRef(self.group, bits)

    def preimage(self, Q: SubgroupRef) -> SubgroupRef:
        bits = 0
        for g, q in enumerate(self.projection):
            if Q.members >> q & 1:
                bits |= 1 << g
        return SubgroupRef(self.parent, bits)


def quotient(parent: FiniteGroup, N: SubgroupRef, name=None) -> QuotientMap:
    L = all_subgroups(parent)
    if not L.normal_flags[L.pos(N)]:
        raise PreconditionError("quotient by a subgroup that is not normal")
    mul = parent.mul
    n_elems = N.indices()
    coset_of = [-1] * parent.order
    reps = []
    for g in range(parent.order):
        if coset_of[g] < 0:
            for x in n_elems:
                coset_of[mul[x][g]] = len(reps)
            reps.append(g)
    degree = len(reps)

    def action(g):
        return Permutation(tuple(coset_of[mul[r][g]] + 1 for r in reps))

    gens = [action(g) for g in parent.gen_indices]
    label = name or (f"{parent.name}/N{N.order}" if parent.name else None)
    Q = generate(gens, order_cap=max(parent.order, 1), degree=degree, name=label)
    if Q.order * N.order != parent.order:
        raise AssertionError("quotient order law violated")
    projection = [Q.index[action(g).images] for g in range(parent.order)]
    return QuotientMap(parent, N, Q, projection)


def subgroup_as_group(H: SubgroupRef, name=None) -> tuple[FiniteGroup, list[int]]:
    """H as a FiniteGroup in its own right, plus the map H-index -> parent index."""
    G = H.parent
    L = all_subgroups(G)
    gens = [G.elements[g] for g in L.gens[L.pos(H)]]
    sub = generate(gens, order_cap=max(H.order, 1), degree=G.degree, name=name)
    to_parent = [G.index[p.images] for p in sub.elements]
    return sub, to_parent


@dataclass(frozen=True)
class StructureTag:
    kind: str  # cyclic | elementary_abelian | quaternion8 | other
    params: tuple[int, ...] = ()

    def __str__(self):
        if self.params:
            return f"{self.kind}({', '.join(map(str, self.params))})"
        return self.kind


def classify_small(H: SubgroupRef) -> StructureTag:
    G = H.parent
    orders = G.element_orders
    members = H.indices()
    n = H.order
    if any(orders[h] == n for h in members):
        return StructureTag("cyclic", (n,))
    mul = G.mul
    abelian = all(mul[a][b] == mul[b][a] for a in members for b in members)
    non_id = [orders[h] for h in members if h != 0]
    if abelian and len(set(non_id)) == 1 and is_prime(non_id[0]):
        p = non_id[0]
        rank = 0
        while p**rank < n:
            rank += 1
        return StructureTag("elementary_abelian", (p, rank))
    if n == 8 and not abelian and non_id.count(2) == 1:
        return StructureTag("quaternion8")
    return StructureTag("other")


def is_supersolvable(parent: FiniteGroup, L: SubgroupLattice | None = None) -> bool:
    """Every maximal subgroup has prime index."""
    L = L or all_subgroups(parent)
    return all(is_prime(parent.order // L.orders[m]) for m in L.maximal_of(L.whole))


@dataclass(frozen=True)
class ScalarActionWitness:
    d: int
    faithful: bool
    p: int


def scalar_action(parent: FiniteGroup, x: int, P: SubgroupRef, p: int) -> ScalarActionWitness | None:
    """Does conjugation by element ``x`` act on P/Phi(P) as v -> v^d for a single d?

    Returns the witness with the smallest such d in 1..p-1, or None.
    """
    _require_prime(p)
    L = all_subgroups(parent)
    i = L.pos(P)
    if not L.normal_flags[i]:
        raise PreconditionError("P must be normal")
    if not _is_p_power(P.order, p):
        raise PreconditionError("P must be a p-group")
    phi = frattini_of(L, i)
    mul, inv = parent.mul, parent.inv
    xi = inv[x]
    members = P.indices()
    conj = {v: mul[mul[xi][v]][x] for v in members}
    for d in range(1, p):
        if all(phi >> mul[conj[v]][inv[parent.power(v, d)]] & 1 for v in members):
            faithful = multiplicative_order(d, p) == parent.element_orders[x]
            return ScalarActionWitness(d, faithful, p)
    return None


def _is_p_power(n, p):
    while n % p == 0:
        n //= p
    return n == 1
