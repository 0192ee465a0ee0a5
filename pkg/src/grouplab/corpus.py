"""Constructive group families and the built-in verification corpus."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .errors import PreconditionError
from .group import FiniteGroup, generate
from .perm import Permutation, parse_cycles
from .structure import is_prime, multiplicative_order

__all__ = [
    "cyclic",
    "dihedral",
    "generalized_quaternion",
    "elementary_abelian",
    "symmetric",
    "alternating",
    "direct_product",
    "metacyclic",
    "affine_extension",
    "regular_representation",
    "scalar_extension",
    "CorpusEntry",
    "builtin_corpus",
    "build_family",
]


def _cycle(points, degree):
    return parse_cycles("(" + " ".join(map(str, points)) + ")", degree)


def regular_representation(table, name=None, order_cap=None) -> FiniteGroup:
    """Right regular representation of a group given by its Cayley table.

    ``table[i][j]`` is the index of the product of elements i and j (0-based,
    element 0 the identity). Element g becomes the permutation x -> xg.
    """
    n = len(table)
    reached = {0}
    gens = []
    for g in range(1, n):
        if g in reached:
            continue
        gens.append(Permutation(tuple(table[x][g] + 1 for x in range(n))))
        frontier = list(reached)
        while frontier:
            step = []
            for x in frontier:
                for s in gens:
                    y = table[x][s.images[0] - 1]
                    if y not in reached:
                        reached.add(y)
                        step.append(y)
            frontier = step
    return generate(gens, order_cap=order_cap or max(n, 1), degree=n, name=name)


def metacyclic(n: int, r: int, s: int, m: int = 2, name=None) -> FiniteGroup:
    """<a, b | a^n = 1, b^m = a^s, a^b = a^r> via its Cayley table.

    Elements a^i b^j (0 <= j < m) are numbered i + n*j.
    """
    if (pow(r, m, n) - 1) % n or (s * r - s) % n or gcd(r, n) != 1:
        raise PreconditionError(f"inconsistent metacyclic parameters n={n} r={r} s={s} m={m}")
    size = m * n
    table = [[0] * size for _ in range(size)]
    for x in range(size):
        i, j = x % n, x // n
        rj = pow(r, j, n)
        for y in range(size):
            k, l = y % n, y // n
            e = i + k * rj
            f = j + l
            if f >= m:
                e += s
                f -= m
            table[x][y] = e % n + n * f
    return regular_representation(table, name=name)


def affine_extension(moduli, matrix, name=None) -> FiniteGroup:
    """Translations of Z_m1 x ... x Z_mr together with the linear map ``matrix``.

    The action is on the vectors themselves, so translations act regularly
    and the group is the semidirect product of the abelian group with the
    cyclic group generated by ``matrix``.
    """
    from itertools import product

    moduli = tuple(moduli)
    vecs = list(product(*(range(m) for m in moduli)))
    pos = {v: i for i, v in enumerate(vecs)}

    def perm(f):
        return Permutation(tuple(pos[f(v)] + 1 for v in vecs))

    gens = []
    for axis, m in enumerate(moduli):
        gens.append(perm(lambda v, a=axis: tuple((x + (i == a)) % moduli[i] for i, x in enumerate(v))))
    gens.append(perm(lambda v: tuple(
        sum(row[j] * v[j] for j in range(len(v))) % moduli[i] for i, row in enumerate(matrix)
    )))
    return generate(gens, name=name)


def _heisenberg27():
    elems = [(a, b, c) for a in range(3) for b in range(3) for c in range(3)]
    pos = {e: i for i, e in enumerate(elems)}
    table = [
        [pos[((a + x) % 3, (b + y) % 3, (c + z + a * y) % 3)] for (x, y, z) in elems]
        for (a, b, c) in elems
    ]
    return regular_representation(table, name="He27")


def _sl23():
    # linear action on the 8 nonzero vectors of F_3^2
    vecs = [(x, y) for x in range(3) for y in range(3) if (x, y) != (0, 0)]
    pos = {v: i for i, v in enumerate(vecs)}

    def mat(a, b, c, d):
        return Permutation(tuple(pos[((a * x + b * y) % 3, (c * x + d * y) % 3)] + 1 for x, y in vecs))

    return generate([mat(1, 1, 0, 1), mat(1, 0, 1, 1)], name="SL(2,3)")


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise PreconditionError("cyclic group order must be positive")
    name = f"C{n}"
    if n == 1:
        return generate([], degree=1, name=name)
    return generate([_cycle(range(1, n + 1), n)], name=name)


def dihedral(order: int) -> FiniteGroup:
    """Dihedral group of the given order (2n)."""
    if order < 2 or order % 2:
        raise PreconditionError("dihedral order must be an even number >= 2")
    n = order // 2
    name = f"D{order}"
    if n <= 2:
        return metacyclic(n, -1 % n if n > 1 else 0, 0, name=name)
    rot = _cycle(range(1, n + 1), n)
    ref = Permutation(tuple([1] + [n + 2 - i for i in range(2, n + 1)]))
    return generate([rot, ref], name=name)


def generalized_quaternion(order: int) -> FiniteGroup:
    if order < 8 or order & (order - 1):
        raise PreconditionError("generalized quaternion order must be a power of 2, at least 8")
    n = order // 2
    return metacyclic(n, n - 1, n // 2, name=f"Q{order}")


def semidihedral(order: int) -> FiniteGroup:
    if order < 16 or order & (order - 1):
        raise PreconditionError("semidihedral order must be a power of 2, at least 16")
    n = order // 2
    return metacyclic(n, n // 2 - 1, 0, name=f"SD{order}")


def modular(order: int) -> FiniteGroup:
    if order < 16 or order & (order - 1):
        raise PreconditionError("modular group order must be a power of 2, at least 16")
    n = order // 2
    return metacyclic(n, n // 2 + 1, 0, name=f"M{order}")


def elementary_abelian(p: int, r: int) -> FiniteGroup:
    if not is_prime(p) or r < 1:
        raise PreconditionError(f"invalid elementary abelian parameters p={p} r={r}")
    degree = p * r
    gens = [_cycle(range(i * p + 1, i * p + p + 1), degree) for i in range(r)]
    return generate(gens, name=f"C{p}^{r}" if r > 1 else f"C{p}")


def symmetric(n: int) -> FiniteGroup:
    if n < 1:
        raise PreconditionError("degree must be positive")
    name = f"S{n}"
    if n == 1:
        return generate([], degree=1, name=name)
    gens = [_cycle((1, 2), n)]
    if n > 2:
        gens.append(_cycle(range(1, n + 1), n))
    return generate(gens, name=name)


def alternating(n: int) -> FiniteGroup:
    if n < 1:
        raise PreconditionError("degree must be positive")
    name = f"A{n}"
    if n < 3:
        return generate([], degree=n, name=name)
    return generate([_cycle((1, 2, k), n) for k in range(3, n + 1)], name=name)


def direct_product(A: FiniteGroup, B: FiniteGroup, name=None) -> FiniteGroup:
    """A x B acting on the disjoint union of their point sets."""
    degree = A.degree + B.degree
    shift = A.degree
    gens = [Permutation(g.images + tuple(range(shift + 1, degree + 1))) for g in A.generators]
    gens += [
        Permutation(tuple(range(1, shift + 1)) + tuple(x + shift for x in g.images))
        for g in B.generators
    ]
    label = name or (f"{A.name}x{B.name}" if A.name and B.name else None)
    return generate(gens, order_cap=max(A.order * B.order, 1), degree=degree, name=label)


def scalar_extension(p: int, n: int, d: int) -> FiniteGroup:
    """<x> acting on C_{p^n} as a unit multiplication congruent to d mod p.

    Points are the residues 0..p^n - 1 (shifted by one). P is the translation
    i -> i + 1 and x is i -> w*i where w is the unique unit of order
    ord_p(d) with w = d (mod p), so x induces multiplication by d on
    P/Phi(P) and acts faithfully there.
    """
    if not is_prime(p) or n < 1:
        raise PreconditionError(f"invalid parameters p={p} n={n}")
    if gcd(d, p) != 1 or not 1 <= d <= p - 1:
        raise PreconditionError(f"d={d} must be a unit in 1..{p - 1}")
    m = p**n
    w = pow(d, p ** (n - 1), m)
    if multiplicative_order(w, m) != multiplicative_order(d, p):
        raise AssertionError("unit lift has the wrong order")
    name = f"SE({p},{n},{d})"
    if m == 1:
        return generate([], degree=1, name=name)
    trans = Permutation(tuple((i + 1) % m + 1 for i in range(m)))
    gens = [trans]
    if w != 1:
        gens.append(Permutation(tuple(w * i % m + 1 for i in range(m))))
    return generate(gens, name=name)


def _c3xs3():
    return direct_product(cyclic(3), symmetric(3), name="C3xS3")


def _generalized_dihedral_c3c3():
    # inversion on C3 x C3, points 1..6
    a = _cycle((1, 2, 3), 6)
    b = _cycle((4, 5, 6), 6)
    t = parse_cycles("(2 3)(5 6)", 6)
    return generate([a, b, t], name="Dih(C3^2)")


_FAMILIES = {
    "cyclic": cyclic,
    "dihedral": dihedral,
    "generalized_quaternion": generalized_quaternion,
    "semidihedral": semidihedral,
    "modular": modular,
    "elementary_abelian": elementary_abelian,
    "symmetric": symmetric,
    "alternating": alternating,
    "scalar_extension": scalar_extension,
    "metacyclic": metacyclic,
}

_SPECIAL = {
    "C3xS3": _c3xs3,
    "Dih(C3^2)": _generalized_dihedral_c3c3,
    "He27": _heisenberg27,
    "M27": lambda: metacyclic(9, 4, 0, 3, name="M27"),
    "SL(2,3)": _sl23,
    "C3^2:C4": lambda: affine_extension((3, 3), ((0, 2), (1, 0)), name="C3^2:C4"),
    "C5^2:C4": lambda: affine_extension((5, 5), ((2, 0), (0, 2)), name="C5^2:C4"),
    "(C3xC9):C2": lambda: affine_extension((3, 9), ((2, 0), (0, 8)), name="(C3xC9):C2"),
}


def build_family(family: str, params: tuple) -> FiniteGroup:
    """Build a group from a family name and parameters.

    ``direct_product`` takes two nested (family, params) pairs; ``special``
    takes a single name from the fixed list of hand-built groups.
    """
    if family == "direct_product":
        (fa, pa), (fb, pb) = params
        A, B = build_family(fa, pa), build_family(fb, pb)
        return direct_product(A, B)
    if family == "special":
        if params[0] not in _SPECIAL:
            raise PreconditionError(f"unknown special group {params[0]!r}")
        return _SPECIAL[params[0]]()
    try:
        fn = _FAMILIES[family]
    except KeyError:
        raise PreconditionError(f"unknown family {family!r}") from None
    return fn(*params)


@dataclass(frozen=True)
class CorpusEntry:
    """A reproducible corpus group.

    ``expected`` maps (p, k) to the known verdict of "G in M(p^k)";
    ``provenance`` says where each expected fact comes from.
    """

    name: str
    family: str
    params: tuple
    order: int
    expected: dict = field(default_factory=dict, compare=False, hash=False)
    provenance: str = ""

    def build(self) -> FiniteGroup:
        G = build_family(self.family, self.params)
        G.name = self.name
        if G.order != self.order:
            raise AssertionError(f"{self.name}: built order {G.order} != {self.order}")
        return G


# Non-cyclic 2-groups of order <= 16 used as direct factors; (name, family, params, order).
_TWO_GROUPS = [
    ("C2^2", "elementary_abelian", (2, 2), 4),
    ("C2xC4", "direct_product", (("cyclic", (2,)), ("cyclic", (4,))), 8),
    ("C2^3", "elementary_abelian", (2, 3), 8),
    ("D8", "dihedral", (8,), 8),
    ("Q8", "generalized_quaternion", (8,), 8),
    ("C2xC8", "direct_product", (("cyclic", (2,)), ("cyclic", (8,))), 16),
    ("C2^2xC4", "direct_product", (("elementary_abelian", (2, 2)), ("cyclic", (4,))), 16),
    ("C4xC4", "direct_product", (("cyclic", (4,)), ("cyclic", (4,))), 16),
    ("C2^4", "elementary_abelian", (2, 4), 16),
    ("C2xD8", "direct_product", (("cyclic", (2,)), ("dihedral", (8,))), 16),
    ("C2xQ8", "direct_product", (("cyclic", (2,)), ("generalized_quaternion", (8,))), 16),
    ("M16", "modular", (16,), 16),
    ("D16", "dihedral", (16,), 16),
    ("Q16", "generalized_quaternion", (16,), 16),
    ("SD16", "semidihedral", (16,), 16),
]

# Hand-built groups beyond the families: normal Sylow subgroups with scalar
# and non-scalar actions, plus the nonabelian groups of order 27.
_EXTRA_ORDERS = {
    "C3xS3": 18,
    "Dih(C3^2)": 18,
    "He27": 27,
    "M27": 27,
    "SL(2,3)": 24,
    "C3^2:C4": 36,
    "C5^2:C4": 100,
    "(C3xC9):C2": 54,
}

_KNOWN_FACTS = {
    "Q8": ({(2, 1): False, (2, 2): True, (2, 3): True}, "literature: (2,2) is the quaternion case; (2,1) and (2,3) oracle-derived"),
    "D8": ({(2, 2): False}, "oracle-derived: Klein subgroup <a^2,b> has no M-supplement"),
    "SE(3,2,2)": ({(3, 2): True}, "literature and oracle: dihedral group of order 18"),
}


def _entries(limit):
    out = []

    def add(name, family, params, order):
        if order <= limit:
            facts, prov = _KNOWN_FACTS.get(name, ({}, ""))
            out.append(CorpusEntry(name, family, params, order, dict(facts), prov))

    for n in range(1, limit + 1):
        add(f"C{n}", "cyclic", (n,), n)
    for n in range(4, limit // 2 + 1):
        add(f"D{2 * n}", "dihedral", (2 * n,), 2 * n)
    for p in range(2, limit + 1):
        if is_prime(p):
            r = 2
            while p**r <= limit:
                add(f"C{p}^{r}", "elementary_abelian", (p, r), p**r)
                r += 1
    m = 8
    while m <= limit:
        add(f"Q{m}", "generalized_quaternion", (m,), m)
        m *= 2
    add("S3", "symmetric", (3,), 6)
    add("S4", "symmetric", (4,), 24)
    add("A4", "alternating", (4,), 12)
    for p in (3, 5, 7):
        # one d per multiplicative order; d = 1 only reproduces the cyclic group
        reps = {}
        for d in range(2, p):
            reps.setdefault(multiplicative_order(d, p), d)
        for n in (1, 2, 3):
            for e, d in sorted(reps.items()):
                if (p, n, d) != (3, 1, 2):  # that one is S3
                    add(f"SE({p},{n},{d})", "scalar_extension", (p, n, d), e * p**n)
    for name, family, params, order in _TWO_GROUPS:
        add(name, family, params, order)
    for m in range(3, limit // 4 + 1, 2):
        for name, family, params, order in _TWO_GROUPS:
            add(f"C{m}x{name}", "direct_product", (("cyclic", (m,)), (family, params)), m * order)
    add("C3xC9", "direct_product", (("cyclic", (3,)), ("cyclic", (9,))), 27)
    for name, order in _EXTRA_ORDERS.items():
        add(name, "special", (name,), order)
    return out


def builtin_corpus(max_order: int) -> list[CorpusEntry]:
    """The fixed constructive corpus restricted to groups of order <= max_order.

    Entries are sorted by (order, name) and names are unique.
    """
    seen = {}
    for e in _entries(max_order):
        seen.setdefault(e.name, e)
    return sorted(seen.values(), key=lambda e: (e.order, e.name))
