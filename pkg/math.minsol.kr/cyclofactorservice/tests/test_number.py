"""
정수론 연산 테스트
"""
import random
from fractions import Fraction
from math import gcd

import pytest
from sympy import isprime, primerange

from app.number.number_dataset import RadicalSplit
from app.number.number_method import (
    MAX_MAGNITUDE,
    divisor_weight,
    divisors,
    euler_phi,
    factorize,
    mult_order,
    prime_power,
    prime_powers,
    radical,
    radical_split,
    valuation,
)
from common.exceptions import ValidationException


def test_factorize_sorted_pairs():
    assert factorize(104).factors == ((2, 3), (13, 1))
    assert factorize(2 ** 20 * 3).factors == ((2, 20), (3, 1))
    assert factorize(1).factors == ()
    assert factorize(360).exponent(3) == 2
    assert factorize(360).exponent(7) == 0


def test_factorize_rejects_out_of_range():
    with pytest.raises(ValidationException):
        factorize(0)
    with pytest.raises(ValidationException):
        factorize(MAX_MAGNITUDE)


def test_radical_valuation_phi():
    assert radical(72) == 6
    assert radical(1) == 1
    assert valuation(2, 24) == 3
    assert valuation(3, 24) == 1
    assert valuation(5, 24) == 0
    assert euler_phi(12) == 4
    assert euler_phi(1) == 1
    with pytest.raises(ValidationException):
        valuation(4, 16)


@pytest.mark.parametrize("q, m, expected", [(2, 7, 3), (3, 13, 3), (4, 21, 3), (8, 21, 2), (5, 6, 2), (7, 1, 1)])
def test_mult_order(q, m, expected):
    assert mult_order(q, m) == expected


def _naive_order(q: int, m: int) -> int:
    k, x = 1, q % m
    while x != 1 % m:
        x = x * q % m
        k += 1
    return k


PRIME_POWERS = [q for q, _, _ in prime_powers(101)]


@pytest.mark.parametrize("q", PRIME_POWERS)
def test_mult_order_matches_repeated_multiplication(q):
    for m in range(1, 301):
        if gcd(q, m) == 1:
            assert mult_order(q, m) == _naive_order(q, m), m
    rng = random.Random(q)
    sampled = 0
    while sampled < 20:
        m = rng.randint(301, 10 ** 4)
        if gcd(q, m) != 1:
            continue
        assert mult_order(q, m) == _naive_order(q, m), m
        sampled += 1


def test_mult_order_requires_coprime():
    with pytest.raises(ValidationException):
        mult_order(3, 12)


def test_divisors_and_weight():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisor_weight(12) == Fraction(10, 3)
    assert divisor_weight(12, odd_only=True) == Fraction(5, 3)
    assert divisor_weight(1) == 1
    for m in (8, 45, 98):
        assert divisor_weight(m) == sum(Fraction(euler_phi(t), t) for t in divisors(m))


def test_prime_power():
    assert prime_power(8) == (2, 3)
    assert prime_power(7) == (7, 1)
    with pytest.raises(ValidationException):
        prime_power(12)
    with pytest.raises(ValidationException):
        prime_power(1)
    assert [q for q, _, _ in prime_powers(10)] == [2, 3, 4, 5, 7, 8, 9]


def test_radical_split():
    assert radical_split(104, 3, 3) == RadicalSplit(w_exponent=0, n1=8, n2=13, w=3)
    assert radical_split(24, 5, 2) == RadicalSplit(w_exponent=3, n1=1, n2=3, w=2)
    assert radical_split(63, 4, 3) == RadicalSplit(w_exponent=2, n1=1, n2=7, w=3)
    assert radical_split(63, 4, 3).value == 63
    with pytest.raises(ValidationException):
        radical_split(7, 3, 2)


def _split_grid():
    for q in (2, 3, 4, 5, 7, 8, 9, 11, 13, 16):
        for n in range(2, 301):
            if gcd(n, q) != 1:
                continue
            w = mult_order(q, radical(n))
            if w > 1 and isprime(w):
                yield q, n, w


def test_radical_split_round_trip():
    points = list(_split_grid())
    assert len(points) > 100
    for q, n, w in points:
        split = radical_split(n, q, w)
        cofactor = (q ** w - 1) // (q - 1)
        assert split.value == n, (q, n)
        assert split.w_exponent == valuation(w, n)
        assert (q - 1) % radical(split.n1) == 0
        assert cofactor % radical(split.n2) == 0
        assert gcd(split.n1, split.n2) == 1
        assert split.n1 % w and split.n2 % w


# ---------------------------------------------------------------------------
# q - 1 과 (q^w - 1)/(q - 1) 의 공약수 성질 (q < 100, w < 20)
# ---------------------------------------------------------------------------

GRID = [(q, w) for q, _, _ in prime_powers(100) for w in primerange(2, 20)]


def _cofactor(q: int, w: int) -> int:
    return (q ** w - 1) // (q - 1)


def test_cofactor_coprime_when_w_does_not_divide():
    for q, w in GRID:
        if (q - 1) % w:
            assert gcd(q - 1, _cofactor(q, w)) == 1


def test_cofactor_simple_w_part_for_odd_w():
    for q, w in GRID:
        if w % 2 and (q - 1) % w == 0:
            assert valuation(w, _cofactor(q, w)) == 1


def test_w_does_not_divide_cofactor():
    for q, w in GRID:
        if (q - 1) % w:
            assert _cofactor(q, w) % w != 0
