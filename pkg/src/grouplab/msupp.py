"""Complemented and M-supplemented subgroups, the class M(p^k), and the
structural characterizations of that class.

A subgroup H of G is M-supplemented when some K <= G gives G = HK while
H_i K is a *proper subgroup* of G for every maximal subgroup H_i of H. The
product set H_i K is required to be a subgroup, not merely a proper subset.
(In D8 the set reading would accept the Klein group <a^2, b> with K = <ab>,
even though <b><ab> is not closed.)

Every search walks candidates in lattice order and returns the first hit,
so witnesses are reproducible.

Predicates take an optional ``within`` subgroup: the question is then asked
inside that subgroup regarded as a group in its own right, reusing the
lattice of the big group. Subgroups of ``within`` are exactly the lattice
entries it contains, and joins are the same in both, so nothing is lost.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import HypothesisError, PreconditionError
from .group import FiniteGroup
from .lattice import SubgroupLattice, SubgroupRef, all_subgroups
from .structure import (
    ScalarActionWitness,
    StructureTag,
    centralizer,
    classify_small,
    frattini_of,
    is_prime,
    is_supersolvable,
    o_p_prime,
    quotient,
    scalar_action,
    sylow,
)

__all__ = [
    "MClassQuery",
    "MClassReport",
    "TheoremVerdict",
    "TheoremDResult",
    "THEOREM_TAGS",
    "is_complemented",
    "is_m_supplemented",
    "in_m_class",
    "theorem_a_rhs",
    "theorem_d_classify",
    "corollary_b_rhs",
    "corollary_c_rhs",
    "valid_queries",
]

THEOREM_TAGS = (
    "A_forward", "A_backward", "B", "C", "D",
    "L2.1.1", "L2.1.2", "L2.1.3",
    "C2.2.1", "C2.2.2", "C2.2.3",
    "L2.4", "P2.6.1", "P2.6.2",
    "prime_order_remark",
)


@dataclass(frozen=True)
class MClassQuery:
    p: int
    k: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise HypothesisError(f"{self.p} is not prime")
        if self.k < 1:
            raise HypothesisError(f"exponent k must be at least 1, got {self.k}")

    @property
    def pk(self) -> int:
        return self.p**self.k

    def check(self, order: int) -> None:
        """Require p <= p^k <= |G|_p for a group of the given order."""
        if order % self.pk:
            raise HypothesisError(
                f"p^k = {self.pk} does not divide |G| = {order}"
            )

    def __str__(self):
        return f"p={self.p}, k={self.k}"


@dataclass
class MClassReport:
    query: MClassQuery
    holds: bool
    witnesses: list[tuple[SubgroupRef, SubgroupRef | None]] = field(default_factory=list)
    first_violation: SubgroupRef | None = None


@dataclass(frozen=True)
class TheoremVerdict:
    theorem: str
    passed: bool
    detail: str

    def __post_init__(self):
        if not self.passed and not self.detail:
            raise ValueError("a failed verdict needs a detail")


@dataclass(frozen=True)
class TheoremDResult:
    tag: str  # Case1 | Case2 | NotCriticalType | CONTRADICTION
    detail: str
    scalar: ScalarActionWitness | None = None


def valid_queries(order: int):
    """All (p, k) with p prime and p^k dividing ``order``, sorted."""
    out = []
    n = order
    p = 2
    while n > 1:
        if n % p == 0:
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            out.extend(MClassQuery(p, j) for j in range(1, k + 1))
        p += 1
    return out


def _ambient(L: SubgroupLattice, within) -> int:
    return L.whole if within is None else L.pos(within)


def _search(L: SubgroupLattice, h: int, a: int, complement: bool) -> int | None:
    bits, orders = L.bits, L.orders
    a_order = orders[a]
    h_bits, h_order = bits[h], orders[h]
    step = a_order // h_order
    maxes = [] if complement else L.maximal_of(h)
    for k in L.contained_in(a):
        k_order = orders[k]
        if k_order % step:
            continue
        k_bits = bits[k]
        meet = (h_bits & k_bits).bit_count()
        if h_order * k_order != a_order * meet:
            continue
        if complement:
            if meet == 1:
                return k
            continue
        for m in maxes:
            size = orders[m] * k_order // (bits[m] & k_bits).bit_count()
            if size >= a_order or orders[L.join(m, k)] != size:
                break
        else:
            return k
    return None


def _pos_in(L, H, a):
    h = L.pos(H)
    if not L.contains(a, h):
        raise PreconditionError("H is not contained in the ambient group")
    return h


def is_complemented(G: FiniteGroup, H: SubgroupRef, within: SubgroupRef | None = None) -> SubgroupRef | None:
    """First K with G = HK and H ∩ K = 1, or None."""
    L = all_subgroups(G)
    a = _ambient(L, within)
    k = _search(L, _pos_in(L, H, a), a, complement=True)
    return None if k is None else L.subgroups[k]


def is_m_supplemented(G: FiniteGroup, H: SubgroupRef, within: SubgroupRef | None = None) -> SubgroupRef | None:
    """First M-supplement K of H, or None."""
    L = all_subgroups(G)
    a = _ambient(L, within)
    k = _search(L, _pos_in(L, H, a), a, complement=False)
    return None if k is None else L.subgroups[k]


def _mclass_cache(L):
    cache = getattr(L, "_mclass", None)
    if cache is None:
        cache = L._mclass = {}
    return cache


def in_m_class(G: FiniteGroup, q: MClassQuery, within: SubgroupRef | None = None) -> MClassReport:
    """Are all subgroups of order p^k M-supplemented (in ``within``, default G)?"""
    L = all_subgroups(G)
    a = _ambient(L, within)
    q.check(L.orders[a])
    cache = _mclass_cache(L)
    key = (q, a)
    if key not in cache:
        witnesses = []
        violation = None
        for h in L.contained_in(a):
            if L.orders[h] != q.pk:
                continue
            k = _search(L, h, a, complement=False)
            K = None if k is None else L.subgroups[k]
            witnesses.append((L.subgroups[h], K))
            if K is None and violation is None:
                violation = L.subgroups[h]
        cache[key] = MClassReport(q, violation is None, witnesses, violation)
    return cache[key]


def _cyclic_generator(G, C: SubgroupRef) -> int:
    orders = G.element_orders
    return next(g for g in C.indices() if orders[g] == C.order)


def theorem_a_rhs(G: FiniteGroup, q: MClassQuery) -> TheoremVerdict:
    """Normal Sylow P with cyclic complement <x>, Phi(G) = Phi(P) inside every
    subgroup of order p^(k-1), and x acting on P/Phi(P) as a faithful scalar."""
    q.check(G.p_part(q.p))
    if q.k < 2:
        raise PreconditionError("the characterization is stated for k >= 2 only")
    L = all_subgroups(G)
    p = q.p
    if not o_p_prime(L, p).is_trivial():
        raise PreconditionError(f"O_{p}'(G) is not trivial")
    P = sylow(L, p)
    i = L.pos(P)
    if not L.normal_flags[i]:
        return TheoremVerdict("A", False, f"Sylow {p}-subgroup is not normal")
    phi_g = frattini_of(L, L.whole)
    phi_p = frattini_of(L, i)
    if phi_g != phi_p:
        return TheoremVerdict(
            "A", False, f"Phi(G) order {phi_g.bit_count()} != Phi(P) order {phi_p.bit_count()}"
        )
    below = L.of_order(q.pk // p)
    for u in below:
        if phi_g & ~L.bits[u]:
            return TheoremVerdict(
                "A", False, f"Phi(G) not contained in {L.describe(u)} of order {q.pk // p}"
            )
    complements = [L.subgroups[c] for c in L.of_order(G.order // P.order)]
    cyclic = [C for C in complements if classify_small(C).kind == "cyclic"]
    if not cyclic:
        return TheoremVerdict("A", False, f"no cyclic {p}-complement")
    for C in cyclic:
        x = _cyclic_generator(G, C)
        w = scalar_action(G, x, P, p)
        if w is not None and w.faithful:
            return TheoremVerdict(
                "A",
                True,
                f"x={G.describe(x)} d={w.d}; |Phi(G)|={phi_g.bit_count()} in all {len(below)} "
                f"subgroups of order {q.pk // p}",
            )
    return TheoremVerdict("A", False, "no cyclic complement acts as a faithful scalar on P/Phi(P)")


def theorem_d_classify(G: FiniteGroup, q: MClassQuery) -> TheoremDResult:
    """Case1, Case2, NotCriticalType, or CONTRADICTION (a counterexample)."""
    p, k = q.p, q.k
    if k < 2:
        return TheoremDResult("NotCriticalType", "k < 2")
    q.check(G.p_part(p))
    if not in_m_class(G, q).holds:
        return TheoremDResult("NotCriticalType", f"G not in M({q.pk})")
    L = all_subgroups(G)
    if not o_p_prime(L, p).is_trivial():
        return TheoremDResult("NotCriticalType", f"O_{p}'(G) nontrivial")
    phi = frattini_of(L, L.whole).bit_count()
    if phi != q.pk // p:
        return TheoremDResult("NotCriticalType", f"|Phi(G)| = {phi} != {q.pk // p}")

    P = sylow(L, p)
    i = L.pos(P)
    case1 = None
    if L.normal_flags[i] and classify_small(P) == StructureTag("cyclic", (q.pk,)) and centralizer(G, P) == P:
        for c in L.of_order(G.order // P.order):
            C = L.subgroups[c]
            if (p - 1) % C.order == 0 and classify_small(C).kind == "cyclic":
                x = _cyclic_generator(G, C)
                case1 = (C, scalar_action(G, x, P, p))
                break
    case2 = q.pk == 4 and classify_small(L.subgroups[L.whole]).kind == "quaternion8"
    if case1 and case2:
        return TheoremDResult("CONTRADICTION", "both cases hold")
    if case1:
        C, w = case1
        d = f" d={w.d}" if w else ""
        return TheoremDResult("Case1", f"|H|={C.order} P=C_G(P) cyclic({q.pk}){d}", w)
    if case2:
        return TheoremDResult("Case2", "G is quaternion of order 8")
    return TheoremDResult("CONTRADICTION", "critical type but neither case applies")


def corollary_b_rhs(G: FiniteGroup, q: MClassQuery) -> TheoremVerdict:
    """G/O_p'(G) supersolvable with normal Sylow p-subgroup and cyclic p-complement."""
    if q.k < 2:
        raise PreconditionError("corollary B is stated for k >= 2")
    p = q.p
    O = o_p_prime(all_subgroups(G), p)
    Q = G if O.is_trivial() else quotient(G, O).group
    LQ = all_subgroups(Q)
    problems = []
    if not is_supersolvable(Q, LQ):
        problems.append("quotient not supersolvable")
    if not LQ.normal_flags[LQ.pos(sylow(LQ, p))]:
        problems.append(f"Sylow {p}-subgroup of quotient not normal")
    comps = LQ.of_order(Q.order // Q.p_part(p))
    if not any(classify_small(LQ.subgroups[c]).kind == "cyclic" for c in comps):
        problems.append(f"no cyclic {p}-complement in quotient")
    if problems:
        return TheoremVerdict("B", False, "; ".join(problems))
    return TheoremVerdict("B", True, f"|G/O_{p}'(G)|={Q.order} supersolvable, normal Sylow, cyclic complement")


def corollary_c_rhs(G: FiniteGroup, q: MClassQuery) -> TheoremVerdict:
    """For a p-group: Phi(G) lies in every subgroup of order p^(k-1)."""
    if not G.is_p_group(q.p) or G.order == 1:
        raise PreconditionError(f"G is not a nontrivial {q.p}-group")
    q.check(G.order)
    L = all_subgroups(G)
    phi = frattini_of(L, L.whole)
    below = L.of_order(q.pk // q.p)
    for u in below:
        if phi & ~L.bits[u]:
            return TheoremVerdict(
                "C", False, f"Phi(G) not contained in {L.describe(u)} of order {q.pk // q.p}"
            )
    return TheoremVerdict("C", True, f"|Phi(G)|={phi.bit_count()} in all {len(below)} subgroups of order {q.pk // q.p}")
