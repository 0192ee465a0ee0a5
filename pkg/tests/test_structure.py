import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import corpus_group, element_of_order
from grouplab.corpus import builtin_corpus, cyclic
from grouplab.errors import PreconditionError
from grouplab.lattice import all_subgroups, closure
from grouplab.structure import (
    StructureTag,
    center,
    centralizer,
    classify_small,
    derived_subgroup,
    frattini,
    is_prime,
    is_supersolvable,
    multiplicative_order,
    o_p_prime,
    p_complements,
    product_set,
    quotient,
    scalar_action,
    subgroup_as_group,
    sylow,
)

CORPUS_48 = [e.name for e in builtin_corpus(48)]


def _prime_of(n):
    """The prime p when n is a power of p, else None."""
    p = 2
    while n % p:
        p += 1
    return p if _is_power(n, p) else None


def _is_power(n, p):
    while n % p == 0:
        n //= p
    return n == 1


P_GROUPS = [
    e.name for e in builtin_corpus(64) if e.order > 1 and _prime_of(e.order) is not None
]


@pytest.mark.parametrize("n, prime", [(1, False), (2, True), (9, False), (13, True), (91, False)])
def test_is_prime(n, prime):
    assert is_prime(n) is prime


@pytest.mark.parametrize("d, m, order", [(2, 3, 2), (2, 5, 4), (4, 5, 2), (2, 9, 6), (1, 7, 1)])
def test_multiplicative_order(d, m, order):
    assert multiplicative_order(d, m) == order


@pytest.mark.parametrize("name, order", [("D8", 2), ("C2^3", 1), ("C9", 3), ("Q8", 2), ("C1", 1), ("D18", 3), ("S4", 1)])
def test_frattini_orders(name, order):
    assert frattini(all_subgroups(corpus_group(name))).order == order


def test_frattini_d8_is_center(d8):
    assert frattini(d8.L) == d8.center


@pytest.mark.parametrize("name, z, d", [("Q8", 2, 2), ("D8", 2, 2), ("S4", 1, 12), ("C6", 6, 1), ("D18", 1, 9), ("C1", 1, 1)])
def test_center_and_derived(name, z, d):
    G = corpus_group(name)
    assert center(G).order == z
    assert derived_subgroup(G).order == d


def test_centralizer_examples():
    G = corpus_group("D18")
    L = all_subgroups(G)
    assert centralizer(G, L.subgroups[0]).is_whole()
    P = sylow(L, 3)
    assert centralizer(G, P) == P


@pytest.mark.parametrize("name, p, order", [("D18", 3, 1), ("D18", 2, 9), ("C6", 2, 3), ("Q8", 2, 1), ("C3xQ8", 2, 3), ("S4", 3, 4), ("S4", 2, 1)])
def test_o_p_prime(name, p, order):
    assert o_p_prime(all_subgroups(corpus_group(name)), p).order == order


def test_sylow_examples():
    L = all_subgroups(corpus_group("D18"))
    P = sylow(L, 3)
    assert P.order == 9 and classify_small(P) == StructureTag("cyclic", (9,))
    assert sylow(all_subgroups(corpus_group("Q8")), 2).is_whole()
    assert sylow(all_subgroups(corpus_group("S4")), 2).order == 8
    assert sylow(L, 5).is_trivial()


def test_p_complements():
    L = all_subgroups(corpus_group("D18"))
    comps = p_complements(L, 3)
    assert len(comps) == 9 and all(H.order == 2 for H in comps)
    LQ = all_subgroups(corpus_group("Q8"))
    assert p_complements(LQ, 2) == [LQ.subgroups[0]]


def test_product_set_examples(d8):
    ps = product_set(d8.refl_b, d8.refl_ab)
    assert ps.size == 4 and not ps.is_subgroup
    ps = product_set(d8.center, d8.refl_ab)
    assert ps.size == 4 and ps.is_subgroup
    assert ps.members == closure(d8.G, [d8.ab, d8.a2]).members
    triv = d8.L.subgroups[0]
    ps = product_set(d8.klein, triv)
    assert ps.members == d8.klein.members and ps.is_subgroup


def test_product_set_different_parents():
    A = all_subgroups(corpus_group("C2")).subgroups[0]
    B = all_subgroups(corpus_group("C3")).subgroups[0]
    with pytest.raises(PreconditionError):
        product_set(A, B)


@pytest.mark.parametrize("name", ["D8", "S4", "D18", "C3xS3"])
def test_product_set_size_symmetric(name):
    G = corpus_group(name)
    L = all_subgroups(G)
    for H in L.subgroups:
        for K in L.subgroups:
            hk, kh = product_set(H, K), product_set(K, H)
            assert hk.size == kh.size
            # HK is a subgroup exactly when HK = KH
            assert hk.is_subgroup == (hk.members == kh.members)


def test_quotient_examples(d8):
    Q8 = corpus_group("Q8")
    qm = quotient(Q8, center(Q8))
    assert qm.group.order == 4
    assert classify_small(all_subgroups(qm.group).subgroups[-1]).kind == "elementary_abelian"
    qm = quotient(d8.G, d8.center)
    assert qm.group.order == 4 and qm.group.is_abelian()
    assert quotient(d8.G, d8.L.subgroups[0]).group.order == 8
    with pytest.raises(PreconditionError):
        quotient(d8.G, d8.refl_b)


def test_quotient_image_and_preimage(d8):
    qm = quotient(d8.G, d8.center)
    img = qm.image(d8.klein)
    assert img.order == 2
    assert qm.preimage(img) == d8.klein
    assert qm.image(d8.refl_b).order == 2
    assert qm.preimage(qm.image(d8.refl_b)) == d8.klein


@pytest.mark.parametrize("name", [n for n in CORPUS_48 if n not in ("C1",)][:60])
def test_quotient_order_law(name):
    G = corpus_group(name)
    L = all_subgroups(G)
    for i in range(len(L)):
        if L.normal_flags[i]:
            qm = quotient(G, L.subgroups[i])
            assert qm.group.order * L.orders[i] == G.order
            for g in range(G.order):
                for h in range(G.order):
                    assert qm.projection[G.mul[g][h]] == qm.group.mul[qm.projection[g]][qm.projection[h]]


@pytest.mark.parametrize(
    "name, tag",
    [
        ("Q8", StructureTag("quaternion8")),
        ("C1", StructureTag("cyclic", (1,))),
        ("C2^3", StructureTag("elementary_abelian", (2, 3))),
        ("C3^2", StructureTag("elementary_abelian", (3, 2))),
        ("D8", StructureTag("other")),
        ("C2xC4", StructureTag("other")),
        ("C12", StructureTag("cyclic", (12,))),
    ],
)
def test_classify_small(name, tag):
    L = all_subgroups(corpus_group(name))
    assert classify_small(L.subgroups[L.whole]) == tag


@pytest.mark.parametrize("n", range(1, 31))
def test_classify_cyclic_constructor(n):
    G = cyclic(n)
    assert classify_small(all_subgroups(G).subgroups[-1]) == StructureTag("cyclic", (n,))


@pytest.mark.parametrize(
    "name, expected",
    [("D8", True), ("C12", True), ("S4", False), ("A4", False), ("D18", True), ("S3", True), ("SL(2,3)", False), ("C1", True)],
)
def test_is_supersolvable(name, expected):
    assert is_supersolvable(corpus_group(name)) is expected


def test_scalar_action_inversion():
    G = corpus_group("D18")
    L = all_subgroups(G)
    P = sylow(L, 3)
    b = element_of_order(G, 2)
    w = scalar_action(G, b, P, 3)
    assert (w.d, w.faithful, w.p) == (2, True, 3)


def test_scalar_action_identity():
    G = corpus_group("D18")
    w = scalar_action(G, 0, sylow(all_subgroups(G), 3), 3)
    assert (w.d, w.faithful) == (1, True)


def test_scalar_action_two_eigenvalues():
    # C2 fixes one C3 factor and inverts the other
    G = corpus_group("C3xS3")
    L = all_subgroups(G)
    P = sylow(L, 3)
    t = element_of_order(G, 2)
    assert scalar_action(G, t, P, 3) is None


def test_scalar_action_unfaithful():
    # in D12 a rotation of order 6 centralizes the subgroup of order 3
    G = corpus_group("D12")
    L = all_subgroups(G)
    (c3,) = L.of_order(3)
    P = L.subgroups[c3]
    w = scalar_action(G, element_of_order(G, 6), P, 3)
    assert (w.d, w.faithful) == (1, False)
    reflection = next(g for g in range(G.order) if G.element_orders[g] == 2 and g not in centralizer(G, P))
    w = scalar_action(G, reflection, P, 3)
    assert (w.d, w.faithful) == (2, True)


def test_scalar_action_faithful_order_four():
    G = corpus_group("SE(5,1,2)")
    P = sylow(all_subgroups(G), 5)
    x = element_of_order(G, 4)
    w = scalar_action(G, x, P, 5)
    assert w.faithful and w.d in (2, 3)


def test_scalar_action_preconditions():
    G = corpus_group("S3")
    L = all_subgroups(G)
    with pytest.raises(PreconditionError):
        scalar_action(G, 1, L.subgroups[L.of_order(2)[0]], 2)
    with pytest.raises(PreconditionError):
        scalar_action(G, 1, L.subgroups[L.whole], 3)
    with pytest.raises(PreconditionError):
        scalar_action(G, 1, L.subgroups[L.of_order(3)[0]], 4)


def _burnside(G, p):
    mul, inv = G.mul, G.inv
    seed = [mul[mul[mul[inv[a]][inv[b]]][a]][b] for a in range(G.order) for b in range(G.order)]
    seed += [G.power(g, p) for g in range(G.order)]
    return closure(G, seed)


@pytest.mark.parametrize("name", P_GROUPS)
def test_burnside_basis(name):
    G = corpus_group(name)
    p = _prime_of(G.order)
    assert frattini(all_subgroups(G)) == _burnside(G, p)


@pytest.mark.parametrize("name", [n for n in CORPUS_48 if corpus_group(n).order > 1])
def test_frattini_of_normal_sylow(name):
    # computed inside P as a group of its own, compared with P ∩ Phi(G)
    G = corpus_group(name)
    L = all_subgroups(G)
    phi = frattini(L).members
    for p in range(2, G.order + 1):
        if not (is_prime(p) and G.order % p == 0):
            continue
        P = sylow(L, p)
        if not L.normal_flags[L.pos(P)]:
            continue
        own, to_parent = subgroup_as_group(P)
        inner = frattini(all_subgroups(own))
        assert {to_parent[i] for i in inner.indices()} == set(closure(G, []).indices()) | {
            i for i in P.indices() if phi >> i & 1
        }


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(CORPUS_48), st.data())
def test_subgroup_as_group_preserves_structure(name, data):
    G = corpus_group(name)
    L = all_subgroups(G)
    H = L.subgroups[data.draw(st.integers(0, len(L) - 1))]
    own, to_parent = subgroup_as_group(H)
    assert own.order == H.order
    assert sorted(to_parent) == H.indices()
    for i in range(own.order):
        for j in range(own.order):
            assert to_parent[own.mul[i][j]] == G.mul[to_parent[i]][to_parent[j]]
