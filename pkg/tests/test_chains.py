import random

import pytest

from koszulkit.chains import KoszulChain
from koszulkit.errors import NonCycleError
from koszulkit.grammar import parse_ideal
from koszulkit.homology import strand_basis, vector_to_chain, strand_homology
from koszulkit.linalg import GF, QQ
from koszulkit.samplers import random_monomial_ideal

BI = parse_ideal("n=4; (x1,x2)*(x1,x2,x3,x4)[2]")


def test_construction_drops_ideal_terms():
    c = KoszulChain(BI, QQ, 2, [(1, (3, 0, 0, 0), (1, 2)), (2, (1, 1, 1, 1), (3, 4))])
    assert c.length == 1  # x1^3 lies in the ideal
    assert ((1, 1, 1, 1), (3, 4)) in c.terms
    zero = KoszulChain(BI, QQ, 2, [(1, (1, 1, 1, 1), (3, 4)), (-1, (1, 1, 1, 1), (3, 4))])
    assert zero.is_zero


def test_term_validation():
    with pytest.raises(ValueError):
        KoszulChain(BI, QQ, 2, [(1, (1, 1, 1, 1), (2, 1))])
    with pytest.raises(ValueError):
        KoszulChain(BI, QQ, 2, [(1, (1, 1, 1, 1), (1, 2, 3))])
    with pytest.raises(ValueError):
        KoszulChain(BI, QQ, 1, [(1, (1, 1, 1, 1), (5,))])


def test_boundary_definition():
    free = parse_ideal("n=2; ()")
    c = KoszulChain(free, QQ, 2, [(1, (0, 0), (1, 2))])
    d = c.boundary()
    assert d.terms == {((1, 0), (2,)): QQ.of(1), ((0, 1), (1,)): QQ.of(-1)}
    assert c.boundary().boundary().is_zero


def test_boundary_squares_to_zero_random():
    rng = random.Random("dd")
    for _ in range(60):
        n = rng.randint(2, 5)
        ideal = random_monomial_ideal(rng, n, 4, 3)
        field = rng.choice([QQ, GF(2), GF(3)])
        i = rng.randint(1, n)
        items = []
        for _ in range(rng.randint(1, 4)):
            u = tuple(rng.randint(0, 2) for _ in range(n))
            sigma = tuple(sorted(rng.sample(range(1, n + 1), i)))
            items.append((rng.randint(-2, 2), u, sigma))
        chain = KoszulChain(ideal, field, i, items)
        assert chain.boundary().boundary().is_zero


def test_multidegree_and_leading():
    z = KoszulChain(BI, QQ, 3, [(1, (0, 1, 1, 1), (1, 3, 4)),
                                (-1, (1, 0, 1, 1), (2, 3, 4))])
    assert z.multidegree() == (1, 1, 2, 2)
    assert z.is_multigraded()
    u, s, c = z.leading_term()
    assert (u, s, c) == ((0, 1, 1, 1), (1, 3, 4), QQ.of(1))
    mixed = KoszulChain(BI, QQ, 1, [(1, (1, 1, 0, 0), (3,)), (1, (0, 0, 1, 1), (1,))])
    assert not mixed.is_multigraded()
    with pytest.raises(NonCycleError):
        mixed.multidegree()


def test_arithmetic_roundtrip():
    z = KoszulChain(BI, GF(5), 3, [(2, (0, 1, 1, 1), (1, 3, 4)),
                                   (3, (1, 0, 1, 1), (2, 3, 4))])
    w = z.scale(2)
    assert (w - z - z).is_zero
    assert (z + (-z)).is_zero
    back = z.times_monomial((0, 0, 0, 1))
    assert all(u[3] == 2 for (u, s) in back.terms)


def test_with_field_and_json():
    z = KoszulChain(BI, QQ, 3, [(1, (0, 1, 1, 1), (1, 3, 4))])
    w = z.with_field(GF(2))
    assert w.field == GF(2)
    assert list(w.terms.values()) == [1]
    data = z.to_json()
    assert data["i"] == 3
    assert data["terms"][0]["sigma"] == [1, 3, 4]


def test_wedge_index():
    pref = parse_ideal("n=3; (x1^2, x2^2)")
    c = KoszulChain(pref, QQ, 1, [(1, (1, 0, 0), (1,))])
    w = c.wedge_index(3)
    assert set(w.terms) == {((1, 0, 0), (1, 3))}
    with pytest.raises(ValueError):
        w.wedge_index(2)


def test_strand_vector_roundtrip():
    field = GF(3)
    sh = strand_homology(BI, 3, (1, 1, 2, 2), field)
    for vec in sh.cycle_vectors:
        chain = vector_to_chain(BI, field, 3, sh.basis, vec)
        assert sh.class_vector(chain) == vec
    assert strand_basis(BI, 3, (1, 1, 2, 2)) == sh.basis
