import pytest

from conftest import corpus_group
from grouplab.corpus import (
    affine_extension,
    build_family,
    builtin_corpus,
    cyclic,
    dihedral,
    direct_product,
    elementary_abelian,
    generalized_quaternion,
    metacyclic,
    scalar_extension,
    semidihedral,
    symmetric,
)
from grouplab.errors import PreconditionError
from grouplab.lattice import all_subgroups
from grouplab.msupp import MClassQuery, in_m_class
from grouplab.structure import StructureTag, classify_small, o_p_prime

CORPUS = builtin_corpus(100)


def top(G):
    L = all_subgroups(G)
    return L.subgroups[L.whole]


def census(G, n):
    return sum(1 for o in G.element_orders if o == n)


@pytest.mark.parametrize("m", [8, 16, 32, 64])
def test_generalized_quaternion(m):
    G = generalized_quaternion(m)
    assert G.order == m
    assert census(G, 2) == 1
    assert census(G, m // 2) > 0


@pytest.mark.parametrize("order", [2, 4, 6, 8, 10, 18, 30])
def test_dihedral_orders(order):
    G = dihedral(order)
    assert G.order == order
    if order > 4:
        assert census(G, 2) == order // 2 + (1 if order % 4 == 0 else 0)


def test_cyclic_one_is_trivial():
    assert cyclic(1).order == 1


def test_semidihedral_census():
    G = semidihedral(16)
    assert (census(G, 2), census(G, 4), census(G, 8)) == (5, 6, 4)


def test_direct_product_c3_q8():
    G = direct_product(cyclic(3), generalized_quaternion(8))
    assert G.order == 24
    assert o_p_prime(all_subgroups(G), 2).order == 3


def test_elementary_abelian_tags():
    assert classify_small(top(elementary_abelian(3, 2))) == StructureTag("elementary_abelian", (3, 2))


@pytest.mark.parametrize(
    "p, n, d, order",
    [(3, 2, 2, 18), (5, 1, 2, 20), (5, 1, 4, 10), (7, 2, 2, 147), (3, 3, 2, 54), (5, 2, 1, 25)],
)
def test_scalar_extension_orders(p, n, d, order):
    assert scalar_extension(p, n, d).order == order


def test_scalar_extension_trivial_d_is_cyclic():
    G = scalar_extension(5, 2, 1)
    assert classify_small(top(G)) == StructureTag("cyclic", (25,))


def test_scalar_extension_is_dihedral_18():
    G = scalar_extension(3, 2, 2)
    assert census(G, 2) == 9 and census(G, 9) == 6


@pytest.mark.parametrize("args", [(4, 1, 1), (3, 1, 3), (3, 1, 0), (3, 0, 1)])
def test_scalar_extension_bad_parameters(args):
    with pytest.raises(PreconditionError):
        scalar_extension(*args)


@pytest.mark.parametrize(
    "fn, args",
    [(cyclic, (0,)), (dihedral, (7,)), (generalized_quaternion, (12,)), (generalized_quaternion, (4,)),
     (elementary_abelian, (4, 2)), (symmetric, (0,)), (metacyclic, (4, 2, 0))],
)
def test_constructor_errors(fn, args):
    with pytest.raises(PreconditionError):
        fn(*args)


def test_unknown_family():
    with pytest.raises(PreconditionError):
        build_family("sporadic", (1,))
    with pytest.raises(PreconditionError):
        build_family("special", ("nope",))


def test_affine_extension():
    G = affine_extension((3, 3), ((0, 2), (1, 0)))
    assert G.order == 36


def test_builtin_corpus_small():
    assert [e.name for e in builtin_corpus(1)] == ["C1"]
    names = {e.name for e in builtin_corpus(8)}
    assert {"C2", "C4", "C8", "C2^2", "C2^3", "D8", "Q8", "S3", "C6", "C2xC4"} <= names
    names24 = {e.name for e in builtin_corpus(24)}
    assert {"C3xQ8", "S4", "A4", "SL(2,3)", "D24"} <= names24


def test_corpus_sorted_and_unique():
    keys = [(e.order, e.name) for e in CORPUS]
    assert keys == sorted(keys)
    assert len({e.name for e in CORPUS}) == len(CORPUS)


def test_corpus_respects_max_order():
    assert all(e.order <= 30 for e in builtin_corpus(30))
    assert {e.name for e in builtin_corpus(30)} == {e.name for e in CORPUS if e.order <= 30}


@pytest.mark.parametrize("entry", CORPUS, ids=lambda e: e.name)
def test_every_entry_builds(entry):
    G = corpus_group(entry.name)
    assert G.order == entry.order
    assert len(all_subgroups(G)) >= 1
    tag = classify_small(top(G))
    if entry.family == "cyclic":
        assert tag == StructureTag("cyclic", entry.params)
    if entry.family == "elementary_abelian":
        assert tag == StructureTag("elementary_abelian", entry.params)
    if entry.name == "Q8":
        assert tag == StructureTag("quaternion8")


@pytest.mark.parametrize("entry", [e for e in CORPUS if e.expected], ids=lambda e: e.name)
def test_expected_facts(entry):
    assert entry.provenance
    G = corpus_group(entry.name)
    for (p, k), holds in entry.expected.items():
        assert in_m_class(G, MClassQuery(p, k)).holds is holds
