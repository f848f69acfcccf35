"""
정수론 기본 연산
소인수분해, 근기(radical), 값매김, 곱셈 위수, 오일러 함수, n = w^e n1 n2 분해.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from math import gcd, prod
from typing import List, Tuple, Union

from sympy import divisors as sympy_divisors
from sympy import factorint, isprime, multiplicity

from app.number.number_dataset import FactoredNat, RadicalSplit
from common.exceptions import ValidationException

logger = logging.getLogger(__name__)

# 128비트 이상은 다루지 않는다
MAX_MAGNITUDE = 1 << 128

NatLike = Union[int, FactoredNat]


def factorize(n: int) -> FactoredNat:
    """정확한 소인수분해 (sympy: 시행 나눗셈 후 고정 시드 Pollard rho)"""
    if n < 1:
        raise ValidationException(f"factorize: n must be >= 1, got {n}")
    if n >= MAX_MAGNITUDE:
        raise ValidationException(f"factorize: {n} exceeds the 128-bit input limit")
    return _factorize_cached(int(n))


@lru_cache(maxsize=8192)
def _factorize_cached(n: int) -> FactoredNat:
    if n == 1:
        return FactoredNat(1, ())
    table = factorint(n)
    return FactoredNat(n, tuple(sorted((int(p), int(e)) for p, e in table.items())))


def _as_factored(n: NatLike) -> FactoredNat:
    return n if isinstance(n, FactoredNat) else factorize(n)


def radical(n: NatLike) -> int:
    """rad(n): 서로 다른 소인수의 곱"""
    return prod(_as_factored(n).primes)


def valuation(p: int, n: int) -> int:
    """v_p(n): p^e | n 인 최대 e"""
    if not isprime(p):
        raise ValidationException(f"valuation: {p} is not prime")
    if n < 1:
        raise ValidationException(f"valuation: n must be >= 1, got {n}")
    return int(multiplicity(p, n))


def euler_phi(n: NatLike) -> int:
    """오일러 함수"""
    factored = _as_factored(n)
    return prod(p ** (e - 1) * (p - 1) for p, e in factored.factors)


def mult_order(q: int, m: int) -> int:
    """ord_m(q): 군 위수 phi(m) 를 소인수분해해 지수를 줄여 나간다 (반복 곱셈 없음)"""
    if m < 1:
        raise ValidationException(f"mult_order: modulus must be >= 1, got {m}")
    if gcd(q, m) != 1:
        raise ValidationException(f"mult_order: gcd({q}, {m}) != 1")
    if m == 1:
        return 1
    return _mult_order_cached(q % m, m)


@lru_cache(maxsize=65536)
def _mult_order_cached(q: int, m: int) -> int:
    order = euler_phi(m)
    for r, e in factorize(order).factors:
        for _ in range(e):
            if pow(q, order // r, m) == 1:
                order //= r
            else:
                break
    return order


def divisors(n: int) -> List[int]:
    """양의 약수 (오름차순)"""
    return [int(d) for d in sympy_divisors(n)]


def divisor_weight(m: int, odd_only: bool = False) -> Fraction:
    """sum_{t | m} phi(t)/t = prod_{p | m} (1 + v_p(m)(p-1)/p)"""
    weight = Fraction(1)
    for p, e in factorize(m).factors:
        if odd_only and p == 2:
            continue
        weight *= 1 + Fraction(e * (p - 1), p)
    return weight


def prime_power(q: int) -> Tuple[int, int]:
    """q = p^s 분해"""
    if q < 2:
        raise ValidationException(f"{q} is not a prime power")
    factored = factorize(q)
    if len(factored.factors) != 1:
        raise ValidationException(f"{q} is not a prime power")
    return factored.factors[0]


def prime_powers(limit: int) -> List[Tuple[int, int, int]]:
    """limit 미만의 모든 소수 거듭제곱 (q, p, s)"""
    result = []
    for q in range(2, limit):
        factored = factorize(q)
        if len(factored.factors) == 1:
            p, s = factored.factors[0]
            result.append((q, p, s))
    return result


def radical_split(n: int, q: int, w: int) -> RadicalSplit:
    """n = w^{v_w(n)} n1 n2 (w = 2 이면 n = 2^{v_2(n)} n1 n2, n1, n2 홀수)

    q-1 과 (q^w-1)/(q-1) 을 동시에 나누는 소수는 w 뿐이므로 그 부분은 전부 w 자리로 간다.
    """
    if n < 1:
        raise ValidationException(f"radical_split: n must be >= 1, got {n}")
    if not isprime(w):
        raise ValidationException(f"radical_split: w = {w} is not prime")
    if gcd(n, q) != 1:
        raise ValidationException(f"radical_split: gcd({n}, {q}) != 1")
    top = q ** w - 1
    if top % radical(n) != 0:
        raise ValidationException(f"radical_split: rad({n}) does not divide {q}^{w} - 1")

    cofactor = (q ** w - 1) // (q - 1)
    w_exponent = 0
    n1 = 1
    n2 = 1
    for p, e in factorize(n).factors:
        if p == w:
            w_exponent = e
        elif (q - 1) % p == 0:
            n1 *= p ** e
        elif cofactor % p == 0:
            n2 *= p ** e
    return RadicalSplit(w_exponent=w_exponent, n1=n1, n2=n2, w=w)
