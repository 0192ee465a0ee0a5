"""Subgroups as bitsets and the full subgroup lattice of a FiniteGroup.

A subgroup is an ``int`` whose bit ``i`` is set when ``parent.elements[i]``
belongs to it. The lattice is enumerated once per group by cyclic extension
and cached on the group object.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BudgetError, PreconditionError
from .group import FiniteGroup

__all__ = [
    "SubgroupRef",
    "SubgroupLattice",
    "DEFAULT_LATTICE_BUDGET",
    "iter_bits",
    "closure",
    "all_subgroups",
    "subgroups_of_order",
    "maximal_subgroups_of",
    "is_normal",
]

DEFAULT_LATTICE_BUDGET = 100_000


def iter_bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def bits_of(indices) -> int:
    out = 0
    for i in indices:
        out |= 1 << i
    return out


@dataclass(frozen=True, eq=False)
class SubgroupRef:
    """A subgroup of ``parent`` given by its membership bitset."""

    parent: FiniteGroup
    members: int
    order: int = field(default=0)

    def __post_init__(self):
        size = self.members.bit_count()
        object.__setattr__(self, "order", size)
        if not self.members & 1:
            raise PreconditionError("subgroup must contain the identity")
        if self.parent.order % size:
            raise PreconditionError(f"subgroup order {size} does not divide {self.parent.order}")

    def __eq__(self, other):
        if not isinstance(other, SubgroupRef):
            return NotImplemented
        return self.parent is other.parent and self.members == other.members

    def __hash__(self):
        return hash((id(self.parent), self.members))

    def __contains__(self, index: int) -> bool:
        return bool(self.members >> index & 1)

    def __le__(self, other: SubgroupRef) -> bool:
        return self.members & ~other.members == 0

    def __lt__(self, other: SubgroupRef) -> bool:
        return self <= other and self.members != other.members

    def __len__(self):
        return self.order

    def indices(self) -> list[int]:
        return list(iter_bits(self.members))

    def is_trivial(self) -> bool:
        return self.members == 1

    def is_whole(self) -> bool:
        return self.order == self.parent.order

    def __repr__(self):
        return f"<SubgroupRef order={self.order} of {self.parent.name or 'group'}>"


def _join_with(mul, h_elems, h_bits, gens, g):
    """Elements of <H, g> as (list, bitset), built as a union of right cosets of H."""
    elems = list(h_elems)
    bits = h_bits
    reps = [0]
    all_gens = list(gens) + [g]
    i = 0
    while i < len(reps):
        r = reps[i]
        i += 1
        row = mul[r]
        for s in all_gens:
            t = row[s]
            if not bits >> t & 1:
                for h in h_elems:
                    x = mul[h][t]
                    elems.append(x)
                    bits |= 1 << x
                reps.append(t)
    return elems, bits


def closure(parent: FiniteGroup, seed) -> SubgroupRef:
    """Smallest subgroup containing the element indices in ``seed``."""
    mul = parent.mul
    elems, bits, gens = [0], 1, []
    for g in seed:
        if not bits >> g & 1:
            elems, bits = _join_with(mul, elems, bits, gens, g)
            gens.append(g)
    return SubgroupRef(parent, bits)


def _enumerate(parent: FiniteGroup, budget: int):
    mul = parent.mul
    n = parent.order
    found: dict[int, tuple[int, ...]] = {1: ()}
    elems_of: dict[int, list[int]] = {1: [0]}
    cyclic_gens = []
    for g in range(n):
        elems, bits = _join_with(mul, [0], 1, (), g)
        if bits not in found:
            found[bits] = (g,)
            elems_of[bits] = elems
            cyclic_gens.append(g)
    frontier = [b for b in found if b != 1]
    while frontier:
        fresh = []
        for h in frontier:
            gens = found[h]
            h_elems = elems_of[h]
            for g in cyclic_gens:
                if h >> g & 1:
                    continue
                elems, bits = _join_with(mul, h_elems, h, gens, g)
                if bits not in found:
                    found[bits] = gens + (g,)
                    elems_of[bits] = elems
                    fresh.append(bits)
                    if len(found) > budget:
                        raise BudgetError(
                            f"subgroup enumeration of {parent.name or parent!r} exceeded budget {budget}"
                        )
        frontier = fresh
    return found


class SubgroupLattice:
    """All subgroups of a group, ordered by (order, sorted member indices).

    Besides the list itself this keeps, for every subgroup, a mask over
    lattice positions of the subgroups containing it. Joins then reduce to
    picking the lowest common set bit, since positions are sorted by order.
    """

    def __init__(self, parent: FiniteGroup, found: dict[int, tuple[int, ...]]):
        self.parent = parent
        keyed = sorted(found, key=lambda b: (b.bit_count(), tuple(iter_bits(b))))
        self.bits = keyed
        self.orders = [b.bit_count() for b in keyed]
        self.gens = [found[b] for b in keyed]
        self.subgroups = [SubgroupRef(parent, b) for b in keyed]
        self.position = {b: i for i, b in enumerate(keyed)}
        self._by_order: dict[int, list[int]] = {}
        for i, m in enumerate(self.orders):
            self._by_order.setdefault(m, []).append(i)

        count = len(keyed)
        containing = [0] * parent.order
        for i, b in enumerate(keyed):
            for e in iter_bits(b):
                containing[e] |= 1 << i
        full = (1 << count) - 1
        sup = []
        for gens in self.gens:
            m = full
            for g in gens:
                m &= containing[g]
            sup.append(m)
        self.sup = sup

        mul, inv = parent.mul, parent.inv
        pg = parent.gen_indices
        normal = []
        for b, gens in zip(keyed, self.gens):
            normal.append(
                all(b >> mul[mul[inv[x]][h]][x] & 1 for x in pg for h in gens)
            )
        self.normal_flags = normal
        self._sub_cache: dict[int, list[int]] = {}
        self._max_cache: dict[int, list[int]] = {}

    def __len__(self):
        return len(self.subgroups)

    def __iter__(self):
        return iter(self.subgroups)

    def __getitem__(self, i) -> SubgroupRef:
        return self.subgroups[i]

    @property
    def trivial(self) -> int:
        return 0

    @property
    def whole(self) -> int:
        return len(self.subgroups) - 1

    def pos(self, H) -> int:
        """Lattice position of a SubgroupRef or bitset."""
        b = H.members if isinstance(H, SubgroupRef) else H
        try:
            return self.position[b]
        except KeyError:
            raise PreconditionError("not a subgroup of this lattice's group") from None

    def ref(self, bits: int) -> SubgroupRef:
        return self.subgroups[self.position[bits]]

    def of_order(self, m: int) -> list[int]:
        return list(self._by_order.get(m, ()))

    def join(self, i: int, j: int) -> int:
        common = self.sup[i] & self.sup[j]
        return (common & -common).bit_length() - 1

    def meet(self, i: int, j: int) -> int:
        return self.position[self.bits[i] & self.bits[j]]

    def contains(self, big: int, small: int) -> bool:
        return bool(self.sup[small] >> big & 1)

    def contained_in(self, i: int) -> list[int]:
        """Positions of all subgroups of subgroup ``i`` (``i`` included)."""
        out = self._sub_cache.get(i)
        if out is None:
            sup = self.sup
            out = [j for j in range(i + 1) if sup[j] >> i & 1]
            self._sub_cache[i] = out
        return out

    def containing(self, i: int) -> list[int]:
        return list(iter_bits(self.sup[i]))

    def maximal_of(self, i: int) -> list[int]:
        """Positions of the maximal proper subgroups of subgroup ``i``."""
        out = self._max_cache.get(i)
        if out is None:
            below = [j for j in self.contained_in(i) if j != i]
            mask = bits_of(below)
            out = [j for j in below if self.sup[j] & mask == 1 << j]
            self._max_cache[i] = out
        return out

    def is_normal(self, i: int) -> bool:
        return self.normal_flags[i]

    def describe(self, i: int) -> str:
        """Generators of subgroup ``i`` in cycle notation, e.g. ``<(1 2), (3 4)>``."""
        gens = self.gens[i]
        if not gens:
            return "<()>"
        return "<" + ", ".join(self.parent.describe(g) for g in gens) + ">"

    def conjugate_bits(self, i: int, g: int) -> int:
        mul, inv = self.parent.mul, self.parent.inv
        gi = inv[g]
        out = 0
        for h in iter_bits(self.bits[i]):
            out |= 1 << mul[mul[gi][h]][g]
        return out


def all_subgroups(parent: FiniteGroup, budget: int = DEFAULT_LATTICE_BUDGET) -> SubgroupLattice:
    """The subgroup lattice of ``parent``, computed once and cached on it."""
    if parent._lattice is None:
        parent._lattice = SubgroupLattice(parent, _enumerate(parent, budget))
    return parent._lattice


def subgroups_of_order(L: SubgroupLattice, m: int) -> list[SubgroupRef]:
    return [L.subgroups[i] for i in L.of_order(m)]


def maximal_subgroups_of(L: SubgroupLattice, H: SubgroupRef) -> list[SubgroupRef]:
    return [L.subgroups[j] for j in L.maximal_of(L.pos(H))]


def is_normal(L: SubgroupLattice, H: SubgroupRef) -> bool:
    return L.normal_flags[L.pos(H)]
