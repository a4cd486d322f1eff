import random

import pytest

from koszulkit.errors import KoszulkitError, NotPrimeError
from koszulkit.linalg import (
    GF,
    QQ,
    RowSpace,
    SparseMatrix,
    kernel_basis,
    parse_field,
    quotient_representatives,
    rank,
    solve_combination,
)


def from_rows(rows):
    m = SparseMatrix(len(rows), len(rows[0]) if rows else 0)
    for r, row in enumerate(rows):
        for c, v in enumerate(row):
            if v:
                m.entries[(r, c)] = v
    return m


def test_parse_field():
    assert parse_field("qq") is QQ
    assert parse_field("gf:5").p == 5
    assert parse_field("GF(7)").p == 7
    with pytest.raises(NotPrimeError):
        parse_field("gf:6")
    with pytest.raises(ValueError):
        parse_field("float64")


def test_rank_small():
    assert rank(from_rows([[1, 0], [0, 1]]), QQ) == 2
    assert rank(from_rows([[1, 1], [1, -1]]), QQ) == 2
    assert rank(from_rows([[1, 1], [1, -1]]), GF(2)) == 1
    assert rank(SparseMatrix(3, 3), QQ) == 0


def test_kernel_small():
    assert kernel_basis(from_rows([[1, 0], [0, 1]]), QQ) == []
    vecs = kernel_basis(SparseMatrix(3, 3), GF(3))
    assert len(vecs) == 3
    assert vecs[0][0] == 1 and not any(vecs[0][1:])


def random_matrix(rng, rows, cols, field):
    m = SparseMatrix(rows, cols)
    for r in range(rows):
        for c in range(cols):
            v = rng.randint(-3, 3)
            if v:
                m.entries[(r, c)] = v
    return m


def test_kernel_multiplies_back():
    rng = random.Random("kernel")
    for _ in range(60):
        field = rng.choice([QQ, GF(2), GF(5)])
        m = random_matrix(rng, rng.randint(1, 5), rng.randint(1, 6), field)
        vecs = kernel_basis(m, field)
        assert len(vecs) == m.cols - rank(m, field)
        for v in vecs:
            assert not any(m.apply(v, field))


def test_rank_transpose_and_char_drop():
    rng = random.Random("rank")
    for _ in range(60):
        m = random_matrix(rng, rng.randint(1, 5), rng.randint(1, 5), QQ)
        assert rank(m, QQ) == rank(m.transpose(), QQ)
        for p in (2, 3):
            assert rank(m, GF(p)) <= rank(m, QQ)


def test_quotient_representatives():
    field = QQ
    z = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    b = [[1, 1, 0]]
    reps = quotient_representatives([[field.of(x) for x in v] for v in z],
                                    [[field.of(x) for x in v] for v in b], field)
    assert len(reps) == 2
    # dependent Z-input gives the same dimension count
    z2 = z + [[1, 1, 1]]
    reps2 = quotient_representatives([[field.of(x) for x in v] for v in z2],
                                     [[field.of(x) for x in v] for v in b], field)
    assert len(reps2) == 2
    # outside span: rejected
    with pytest.raises(KoszulkitError):
        quotient_representatives([[field.one, field.zero]],
                                 [[field.zero, field.one]], field)


def test_quotient_representatives_edges():
    field = GF(3)
    z = [[1, 0], [0, 1]]
    assert quotient_representatives(z, z, field) == []
    assert len(quotient_representatives(z, [], field)) == 2


def test_quotient_size_order_independent():
    rng = random.Random("order")
    for _ in range(30):
        field = rng.choice([QQ, GF(2)])
        dim = rng.randint(2, 5)
        z = [[field.of(rng.randint(-2, 2)) for _ in range(dim)]
             for _ in range(rng.randint(1, 4))]
        space = RowSpace(field, z)
        b = []
        for _ in range(rng.randint(0, 2)):
            combo = [field.zero] * dim
            for v in z:
                c = field.of(rng.randint(-1, 1))
                combo = [field.add(x, field.mul(c, y)) for x, y in zip(combo, v)]
            b.append(combo)
        base = len(quotient_representatives(z, b, field))
        z2, b2 = list(reversed(z)), list(reversed(b))
        assert len(quotient_representatives(z2, b2, field)) == base


def test_rowspace_and_solve():
    rng = random.Random("solve")
    for _ in range(60):
        field = rng.choice([QQ, GF(2), GF(7)])
        cols = [[field.of(rng.randint(-2, 2)) for _ in range(4)] for _ in range(3)]
        coeffs = [field.of(rng.randint(-2, 2)) for _ in range(3)]
        target = [field.zero] * 4
        for c, col in zip(coeffs, cols):
            for k, x in enumerate(col):
                target[k] = field.add(target[k], field.mul(c, x))
        found = solve_combination(cols, target, field)
        assert found is not None
        rebuilt = [field.zero] * 4
        for c, col in zip(found, cols):
            for k, x in enumerate(col):
                rebuilt[k] = field.add(rebuilt[k], field.mul(c, x))
        assert rebuilt == target
        space = RowSpace(field, cols)
        assert space.contains(target)
