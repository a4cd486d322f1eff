"""Seeded random generators for the verification suites and property tests.

Every sampler takes an explicit ``random.Random`` so that suite runs are
reproducible from a seed string and single instances can be replayed.
"""

from __future__ import annotations

import random

from .ideals import (
    MonomialIdeal,
    PBorelFactorization,
    is_strongly_stable,
    principal_p_borel,
)
from .monomials import variable


def random_monomial(rng: random.Random, n: int, max_degree: int, min_degree: int = 0):
    """Exponent vector with total degree between the bounds (bars and stars)."""
    degree = rng.randint(min_degree, max_degree)
    exps = [0] * n
    for _ in range(degree):
        exps[rng.randrange(n)] += 1
    return tuple(exps)


def random_monomial_ideal(
    rng: random.Random, n: int, max_gens: int, max_degree: int
) -> MonomialIdeal:
    """Random proper nonzero monomial ideal."""
    while True:
        gens = [
            random_monomial(rng, n, max_degree, min_degree=1)
            for _ in range(rng.randint(1, max_gens))
        ]
        ideal = MonomialIdeal(n, gens)
        if not ideal.is_zero and not ideal.is_unit:
            return ideal


def random_principal_pborel(
    rng: random.Random, p: int, n: int, max_degree: int, gen_cap: int = 150
):
    """Factorization of a random principal p-Borel ideal with bounded expansion."""
    while True:
        u = random_monomial(rng, n, max_degree, min_degree=1)
        fact = principal_p_borel(u, p)
        ideal = fact.expand()
        if ideal.is_unit or ideal.is_zero:
            continue
        if len(ideal.gens) <= gen_cap:
            return u, fact


def random_prefix_product(rng: random.Random, n: int, weight: int = 4):
    """Plain nested-power product prod_q (x_1..x_q)^{a_q} as a factorization."""
    while True:
        exps = [0] * n
        for _ in range(rng.randint(1, weight)):
            exps[rng.randrange(n)] += 1
        if any(exps):
            rows = [(e,) for e in exps]
            return PBorelFactorization(n, 2, rows)  # layer 0 only; p is irrelevant


def random_stable_ideal(
    rng: random.Random, n: int, max_gens: int = 4, max_degree: int = 4
) -> MonomialIdeal:
    """Strongly stable closure of a few random monomials."""
    seeds = [
        random_monomial(rng, n, max_degree, min_degree=1)
        for _ in range(rng.randint(1, max_gens))
    ]
    closed = set(seeds)
    frontier = list(seeds)
    while frontier:
        g = frontier.pop()
        for i in range(1, n + 1):
            if g[i - 1] == 0:
                continue
            for j in range(1, i):
                h = list(g)
                h[i - 1] -= 1
                h[j - 1] += 1
                h = tuple(h)
                if h not in closed:
                    closed.add(h)
                    frontier.append(h)
    ideal = MonomialIdeal(n, closed)
    if not is_strongly_stable(ideal):
        raise RuntimeError("stable closure failed")
    return ideal


def random_borel_type_ideal(rng: random.Random, n: int) -> MonomialIdeal:
    """Borel-type sample: stable ideals, principal p-Borel ideals, products, colons."""
    kind = rng.randrange(4)
    if kind == 0:
        ideal = random_stable_ideal(rng, n, max_gens=3, max_degree=4)
    elif kind == 1:
        _, fact = random_principal_pborel(rng, rng.choice([2, 3]), n, 6, gen_cap=40)
        ideal = fact.expand()
    elif kind == 2:
        ideal = random_prefix_product(rng, n, weight=4).expand()
    else:
        _, fact = random_principal_pborel(rng, 2, n, 5, gen_cap=40)
        ideal = fact.expand()
        a = rng.randint(1, 3)
        ideal = ideal.colon(variable(n, rng.randint(max(1, n - 1), n), a))
        if ideal.is_unit or ideal.is_zero:
            ideal = random_stable_ideal(rng, n, max_gens=2, max_degree=3)
    return ideal


def random_theorem_shape(rng: random.Random):
    """(gamma, alpha, p, n) with digitwise gamma_j + alpha_j < p and alpha bounded."""
    while True:
        p = rng.choice([2, 3])
        n = rng.randint(2, 4)
        layers = rng.randint(1, 2 if p == 3 else 3)
        gamma = alpha = 0
        for j in range(layers):
            s = rng.randint(0, p - 1)
            a_j = rng.randint(0, s)
            g_j = s - a_j if rng.random() < 0.7 else rng.randint(0, s - a_j)
            gamma += g_j * p**j
            alpha += a_j * p**j
        if gamma == 0 and alpha == 0:
            continue
        if alpha <= 12:
            return gamma, alpha, p, n


def random_strand_cycle(rng: random.Random, sh, field):
    """Random combination of a strand's kernel basis; may be zero."""
    if not sh.cycle_vectors:
        return None
    vec = [field.zero] * len(sh.basis)
    for v in sh.cycle_vectors:
        c = field.of(rng.randint(-2, 2))
        if not c:
            continue
        for k, x in enumerate(v):
            vec[k] = field.add(vec[k], field.mul(c, x))
    if not any(vec):
        return None
    from .homology import vector_to_chain

    return vector_to_chain(sh.ideal, field, sh.i, sh.basis, vec)
