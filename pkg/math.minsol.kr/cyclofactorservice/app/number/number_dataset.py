"""
정수론 자료형
Nat 은 파이썬 int (임의 정밀도) 를 그대로 쓴다.
"""
from dataclasses import dataclass
from typing import Tuple


@dataclass(frozen=True)
class FactoredNat:
    """소인수분해된 자연수 (소수 오름차순)"""
    value: int
    factors: Tuple[Tuple[int, int], ...] = ()

    @property
    def primes(self) -> Tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def exponent(self, prime: int) -> int:
        for p, e in self.factors:
            if p == prime:
                return e
        return 0


@dataclass(frozen=True)
class RadicalSplit:
    """n = w^{w_exponent} * n1 * n2 분해

    n1 은 q-1 을 나누는 소수들, n2 는 (q^w-1)/(q-1) 을 나누는 소수들로 이루어진다.
    w = 2 이면 w_exponent 는 v_2(n) 이고 n1, n2 는 홀수.
    """
    w_exponent: int
    n1: int
    n2: int
    w: int

    @property
    def value(self) -> int:
        return self.w ** self.w_exponent * self.n1 * self.n2
