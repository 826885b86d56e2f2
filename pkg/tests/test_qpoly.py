"""Polynomial core: ring laws, Gaussian polynomials and their oracle."""

import random

import pytest

from fbpaths import (
    QPoly, add, box_partition_oracle, div_exact, gaussian, gaussian_modified,
    invert_q, mul, pochhammer, shift, truncate,
)

ONE = QPoly.one()
Q = QPoly.q_int(1)


def rand_poly(rng, nterms=4, span=8):
    return QPoly({rng.randrange(-span, span + 1): rng.randrange(-5, 6)
                  for _ in range(nterms)})


def test_add_examples():
    assert add(ONE + Q, Q) == ONE + 2 * Q
    p = rand_poly(random.Random(0))
    assert add(p, QPoly.zero()) == p
    assert add(ONE + Q, -(ONE + Q)) == QPoly.zero()
    assert not (ONE + Q - ONE - Q).terms  # cancellation empties the map


def test_mul_examples():
    assert mul(ONE + Q, ONE + Q) == ONE + 2 * Q + QPoly.q_int(2)
    p = rand_poly(random.Random(1))
    assert mul(p, ONE) == p
    assert QPoly.monomial(1, 1) * QPoly.monomial(1, 3) == Q  # q^(1/4) * q^(3/4)


def test_shift_examples():
    assert shift(ONE, 4) == Q
    assert shift(Q, -4) == ONE
    assert shift(ONE + Q, 2) == QPoly({2: 1, 6: 1})  # half-integer exponents


def test_invert_q_examples():
    assert invert_q(ONE + Q) == ONE + QPoly.q_int(-1)
    p = rand_poly(random.Random(2))
    assert invert_q(invert_q(p)) == p
    assert invert_q(QPoly.q_int(2)) == QPoly.q_int(-2)


def test_ring_laws_randomized():
    rng = random.Random(12345)
    for _ in range(200):
        a, b, c = (rand_poly(rng) for _ in range(3))
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_pochhammer():
    assert pochhammer(1, 0) == ONE
    assert pochhammer(1, 1) == ONE - Q
    assert pochhammer(1, 2) == QPoly({0: 1, 4: -1, 8: -1, 12: 1})  # (1-q)(1-q^2)


def test_gaussian_examples():
    assert gaussian(3, 1) == box_partition_oracle(1, 2)
    assert gaussian(3, 1) == ONE + Q + QPoly.q_int(2)
    for a in range(0, 7):
        assert gaussian(a, 0) == ONE
    assert gaussian(2, 3) == QPoly.zero()
    assert gaussian(-1, 0) == QPoly.zero()


def test_gaussian_modified_examples():
    assert gaussian_modified(-1, 0) == ONE
    assert gaussian_modified(3, 1) == gaussian(3, 1)
    # literal evaluation of (q^-2)_1/(q)_1
    assert gaussian_modified(-2, 1) == QPoly.q_int(-2, -1) + QPoly.q_int(-1, -1)
    assert gaussian_modified(5, -1) == QPoly.zero()


def test_box_partition_oracle_small():
    assert box_partition_oracle(0, 5) == ONE
    assert box_partition_oracle(1, 2) == ONE + Q + QPoly.q_int(2)
    assert box_partition_oracle(2, 2) == QPoly({0: 1, 4: 1, 8: 2, 12: 1, 16: 1})


@pytest.mark.parametrize("a", range(13))
def test_gaussian_matches_partition_oracle(a):
    for b in range(a + 1):
        assert gaussian(a, b) == box_partition_oracle(b, a - b)


def test_gaussian_symmetry():
    for a in range(13):
        for b in range(a + 1):
            assert gaussian(a, b) == gaussian(a, a - b)


def test_gaussian_inversion_laws():
    # [m+n over m] at 1/q equals q^{-mn} [m+n over m], same for the modified form
    for m in range(7):
        for n in range(7):
            g = gaussian(m + n, m)
            assert invert_q(g) == shift(g, -4 * m * n)
    for a in range(-4, 9):
        for b in range(0, 7):
            g = gaussian_modified(a, b)
            assert invert_q(g) == shift(g, -4 * b * (a - b))


def test_gaussian_modified_agrees_on_overlap():
    for a in range(-5, 9):
        for b in range(-2, 9):
            if a >= 0 or b < 0:
                assert gaussian_modified(a, b) == gaussian(a, b), (a, b)


def test_truncate():
    p = ONE + Q + QPoly.q_int(5)
    assert truncate(p, 2) == ONE + Q
    assert truncate(QPoly.zero(), 3) == QPoly.zero()
    assert truncate(p, 5) == p


def test_div_exact_round_trip():
    rng = random.Random(7)
    for _ in range(100):
        a = rand_poly(rng, nterms=5)
        b = rand_poly(rng, nterms=3)
        if not a or not b:
            continue
        assert div_exact(a * b, b) == a
    with pytest.raises(ValueError):
        div_exact(ONE + Q, ONE - Q)


def test_json_round_trip_and_integer_exponent_guard():
    p = gaussian(4, 2).shift(-8)  # Laurent with integer exponents
    d = p.to_json_dict()
    assert list(d) == sorted(d, key=int)  # ascending exponent order
    assert QPoly.from_json_dict(d) == p
    with pytest.raises(ValueError):
        QPoly.monomial(1, 2).to_json_dict()  # q^(1/2) must not escape
