import numpy as np
import pytest

from graphcodes.errors import DivisionByZero, NotAPrimePower
from graphcodes.gfq import make_field

PRIME_POWERS = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64]


def test_make_field_gf5():
    F = make_field(5)
    assert (F.p, F.e) == (5, 1)
    assert F.mul(2, 3) == 1


def test_make_field_gf9():
    F = make_field(9)
    assert (F.p, F.e) == (3, 2)
    assert F.q == 9


@pytest.mark.parametrize("q", [0, 1, 6, 10, 12, 100])
def test_not_a_prime_power(q):
    with pytest.raises(NotAPrimePower):
        make_field(q)


def test_inverse_examples():
    assert make_field(5).inv(2) == 3
    for q in PRIME_POWERS:
        assert make_field(q).inv(1) == 1


def test_inv_zero_raises():
    with pytest.raises(DivisionByZero):
        make_field(7).inv(0)


def test_gf4_cubes_are_one():
    F = make_field(4)
    for a in range(1, 4):
        assert F.pow(a, 3) == 1


@pytest.mark.parametrize("q", PRIME_POWERS)
def test_field_axioms_exhaustive(q):
    # Vectorized over all q^3 triples via the dense tables.
    F = make_field(q)
    a = np.arange(q)
    add, mul = F.add_table.astype(np.int64), F.mul_table.astype(np.int64)
    A, B, C = np.meshgrid(a, a, a, indexing="ij")
    assert np.array_equal(add[A, B], add[B, A])
    assert np.array_equal(mul[A, B], mul[B, A])
    assert np.array_equal(add[add[A, B], C], add[A, add[B, C]])
    assert np.array_equal(mul[mul[A, B], C], mul[A, mul[B, C]])
    assert np.array_equal(mul[A, add[B, C]], add[mul[A, B], mul[A, C]])
    # Identities and inverses.
    assert np.array_equal(add[a, 0], a)
    assert np.array_equal(mul[a, 1], a)
    assert np.array_equal(add[a, F.neg_table.astype(np.int64)[a]], np.zeros(q, dtype=np.int64))
    nz = a[1:]
    assert np.array_equal(mul[nz, F.inv_table.astype(np.int64)[nz]], np.ones(q - 1, dtype=np.int64))


@pytest.mark.parametrize("q", PRIME_POWERS)
def test_little_fermat(q):
    F = make_field(q)
    for x in range(1, q):
        assert F.pow(x, q - 1) == 1


@pytest.mark.parametrize("q", PRIME_POWERS)
def test_encoding_round_trip(q):
    F = make_field(q)
    for x in range(q):
        assert F.encode(F.decode(x)) == x


@pytest.mark.parametrize("q", PRIME_POWERS)
def test_log_exp_consistency(q):
    F = make_field(q)
    for x in range(1, q):
        assert F.exp_table[F.log_table[x]] == x


def test_construction_is_deterministic():
    import graphcodes.gfq as gfq

    a = gfq.FieldSpec(8)
    b = gfq.FieldSpec(8)
    assert a.reducing_poly == b.reducing_poly
    assert a.primitive == b.primitive
    assert np.array_equal(a.mul_table, b.mul_table)
