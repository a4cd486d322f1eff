import random
from math import comb

import pytest

from koszulkit.grammar import parse_ideal
from koszulkit.homology import (
    BettiTable,
    all_multidegrees_upto,
    betti_table,
    candidate_multidegrees,
    chain_corner_candidates,
    eliahou_kervaire_table,
    lcm_lattice,
    strand_basis,
    strand_homology,
)
from koszulkit.ideals import maximal_ideal, unit_ideal
from koszulkit.linalg import GF, QQ
from koszulkit.monomials import lcm
from koszulkit.samplers import random_monomial_ideal, random_stable_ideal

FIELDS = (QQ, GF(2), GF(3))


def test_strand_basis_bounds():
    bi = parse_ideal("n=4; (x1,x2)*(x1,x2,x3,x4)[2]")
    assert strand_basis(bi, 5, (1, 1, 1, 1)) == []
    assert strand_basis(bi, 2, (0, 0, 0, 0)) == []
    basis = strand_basis(bi, 3, (1, 1, 2, 2))
    assert len(basis) == 4
    # descending in the term order
    from koszulkit.monomials import element_key

    keys = [element_key(u, s) for u, s in basis]
    assert keys == sorted(keys, reverse=True)


def test_residue_field_table():
    for n in (2, 3, 4):
        table = betti_table(maximal_ideal(n), GF(2))
        assert table.entries == {(i, i): comb(n, i) for i in range(n + 1)}
        assert table.regularity() == 0
        assert table.corner_values() == {(n, 0): 1}


def test_power_ideal_table():
    ideal = parse_ideal("n=2; (x1,x2)^4")
    for field in FIELDS:
        table = betti_table(ideal, field)
        assert table.entries == {(0, 0): 1, (1, 4): 5, (2, 5): 4}
        assert table.regularity() == 3
        assert table.ideal_regularity() == 4
        assert table.corner_values() == {(2, 3): 4}


def test_first_syzygies_count_generators():
    rng = random.Random("beta1")
    for _ in range(20):
        ideal = random_monomial_ideal(rng, rng.randint(2, 4), 5, 4)
        table = betti_table(ideal, GF(2))
        assert table.get(0, 0) == 1
        for j in set(ideal.generator_degrees()):
            assert table.get(1, j) == sum(
                1 for d in ideal.generator_degrees() if d == j
            )


def test_unit_ideal_rejected():
    with pytest.raises(ValueError):
        betti_table(unit_ideal(2), QQ)


def test_candidates():
    pair = parse_ideal("n=2; (x1^2, x2^2)")
    assert candidate_multidegrees(pair, 2) == [(2, 2)]
    assert candidate_multidegrees(pair, 0) == [(0, 0)]
    bi = parse_ideal("n=4; (x1,x2)*(x1,x2,x3,x4)[2]")
    assert sorted(candidate_multidegrees(bi, 1)) == sorted(bi.gens)


def test_candidate_level_counts():
    rng = random.Random("lattice")
    for _ in range(20):
        ideal = random_monomial_ideal(rng, 3, 5, 3)
        lattice = lcm_lattice(ideal)
        from itertools import combinations

        for i in (1, 2, 3):
            brute = set()
            for subset in combinations(ideal.gens, i):
                acc = subset[0]
                for g in subset[1:]:
                    acc = lcm(acc, g)
                brute.add(acc)
            assert set(candidate_multidegrees(ideal, i, lattice)) == brute


def test_candidates_catch_all_homology():
    rng = random.Random("support")
    for _ in range(12):
        ideal = random_monomial_ideal(rng, rng.randint(2, 3), 4, 2)
        field = rng.choice(FIELDS)
        assert betti_table(ideal, field) == betti_table(ideal, field, bruteforce=True)


def test_multidegree_enumeration():
    assert len(all_multidegrees_upto((1, 2))) == 6


def test_strand_homology_dimension_bookkeeping():
    rng = random.Random("strand")
    for _ in range(25):
        ideal = random_monomial_ideal(rng, rng.randint(2, 4), 4, 3)
        field = rng.choice(FIELDS)
        i = rng.randint(1, ideal.n)
        for a in candidate_multidegrees(ideal, i)[:4]:
            sh = strand_homology(ideal, i, a, field)
            assert len(sh.cycle_vectors) >= sh.betti >= 0
            assert len(sh.rep_vectors) == sh.betti
            for rep in sh.representatives:
                assert rep.is_cycle()
                assert not sh.is_boundary(rep)


def test_ek_oracle_values():
    square = parse_ideal("n=2; (x1,x2)^2")
    table = eliahou_kervaire_table(square)
    assert table.entries == {(0, 0): 1, (1, 2): 3, (2, 3): 2}
    m = maximal_ideal(4)
    assert eliahou_kervaire_table(m).entries == {
        (i, i): comb(4, i) for i in range(5)
    }
    quartic = parse_ideal("n=2; (x1,x2)^4")
    assert eliahou_kervaire_table(quartic).get(2, 5) == 4
    with pytest.raises(ValueError):
        eliahou_kervaire_table(parse_ideal("n=2; (x2)"))


def test_ek_matches_homology():
    rng = random.Random("ek")
    for _ in range(10):
        ideal = random_stable_ideal(rng, rng.randint(2, 4), max_gens=2, max_degree=3)
        predicted = eliahou_kervaire_table(ideal).entries
        for field in FIELDS:
            assert betti_table(ideal, field).entries == predicted


def test_chain_corner_candidates():
    assert chain_corner_candidates(maximal_ideal(3)) == {(3, 0, 1)}
    assert chain_corner_candidates(parse_ideal("n=2; (x1,x2)^4")) == {(2, 3, 4)}


def test_table_rendering_and_json():
    table = betti_table(parse_ideal("n=2; (x1,x2)^4"), QQ)
    out = table.render()
    assert "total:" in out and "4" in out
    data = table.to_json()
    assert data["field"] == "QQ"
    assert {"i": 2, "j": 5, "dim": 4} in data["entries"]
    rebuilt = BettiTable(data["field"], {(e["i"], e["j"]): e["dim"] for e in data["entries"]})
    assert rebuilt == table
