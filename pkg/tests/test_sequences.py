from math import gcd

import pytest

from lenspairs.sequences import IDENTITIES, InvalidIndex, check_identity, fib, pair


def test_fib_values():
    assert fib(0) == 0
    assert fib(1) == 1
    assert fib(2) == 1
    assert fib(10) == 55
    with pytest.raises(InvalidIndex):
        fib(-1)


def test_pair_values():
    assert (pair("pell", 1).a, pair("pell", 1).b) == (2, 3)
    assert (pair("pell", 3).a, pair("pell", 3).b) == (12, 17)
    assert (pair("fibonacci", 1).a, pair("fibonacci", 1).b) == (2, 4)
    assert (pair("fibonacci", 2).a, pair("fibonacci", 2).b) == (3, 7)


def test_pair_errors():
    with pytest.raises(InvalidIndex):
        pair("pell", 0)
    with pytest.raises(InvalidIndex):
        pair("lucas", 1)


def test_check_identity_spot_values():
    # fib_cross at n = 2: 5*7 - 1 = 3*11 + 1 = 34
    cur, nxt = pair("fibonacci", 2), pair("fibonacci", 3)
    assert nxt.a * cur.b - 1 == cur.a * nxt.b + 1 == 34
    assert check_identity("fib_cross", 2)
    # pell_product at n = 1: 4*25*49 + 1 = 4901 = 169 * 29
    assert 4 * 25 * 49 + 1 == 169 * 29 == 4901
    assert check_identity("pell_product", 1)
    # fib_quartic at n = 3: 4*16 - 25 = 39 = (40 - 1)(25 - 24)
    assert 4 * fib(3) ** 4 - fib(5) ** 2 == 39 == (40 - 1) * (25 - 24)
    assert check_identity("fib_quartic", 3)


def test_identity_sweeps():
    for k in range(1, 201):
        assert check_identity("cassini", k)
    for n in range(1, 201):
        assert check_identity("fib_cross", n)
        assert check_identity("pell_cross", n)
        assert check_identity("pell_product", n)
    for n in range(0, 101):
        assert check_identity("fib_quartic", n)


def test_identity_range_errors():
    with pytest.raises(InvalidIndex):
        check_identity("cassini", 0)
    with pytest.raises(InvalidIndex):
        check_identity("fib_cross", 0)
    with pytest.raises(InvalidIndex):
        check_identity("fib_quartic", -1)
    with pytest.raises(InvalidIndex):
        check_identity("nope", 3)


def test_identities_tuple_is_exhaustive():
    for name in IDENTITIES:
        assert check_identity(name, 1)


def test_cross_coprimality():
    for family in ("fibonacci", "pell"):
        for n in range(1, 51):
            cur, nxt = pair(family, n), pair(family, n + 1)
            assert gcd(nxt.a, cur.b) == 1
            assert gcd(cur.a, nxt.b) == 1


def test_pell_ordering_chain():
    for n in range(1, 51):
        cur, nxt = pair("pell", n), pair("pell", n + 1)
        assert cur.a < cur.b < nxt.a < nxt.b


def test_fibonacci_ordering_chain():
    for n in range(1, 51):
        cur, nxt = pair("fibonacci", n), pair("fibonacci", n + 1)
        assert cur.a < nxt.a < cur.b < nxt.b


def test_fibonacci_cross_is_sum_of_squares():
    for n in range(1, 51):
        cur, nxt = pair("fibonacci", n), pair("fibonacci", n + 1)
        assert nxt.a * cur.b + (-1) ** (n + 1) == fib(n + 2) ** 2 + fib(n + 3) ** 2
