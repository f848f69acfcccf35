"""
유한체 자료형
FieldContext 는 F_p[x]/(modulus) 로 구현한 F_{p^d}, FieldElement 는 잉여류 기저 좌표(상수항 먼저).
"""
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Tuple

# 이 크기 이하의 체는 exp/log 표를 만든다
LOG_TABLE_LIMIT = 1 << 16


@dataclass(frozen=True)
class FieldElement:
    """체 원소 (좌표 벡터, 상수항 먼저)"""
    coords: Tuple[int, ...]

    def is_zero(self) -> bool:
        return not any(self.coords)

    def code(self, p: int) -> int:
        """sum c_i p^i 정수 부호화"""
        value = 0
        for c in reversed(self.coords):
            value = value * p + c
        return value

    def render(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class FieldContext:
    """F_{p^d} 구현 (modulus 는 상수항 먼저, 모닉 기약)"""
    p: int
    degree: int
    modulus: Tuple[int, ...]
    generator_check: bool = True

    @property
    def order(self) -> int:
        return self.p ** self.degree

    @property
    def group_order(self) -> int:
        return self.order - 1

    def zero(self) -> FieldElement:
        return FieldElement((0,) * self.degree)

    def one(self) -> FieldElement:
        return self.constant(1)

    def constant(self, c: int) -> FieldElement:
        return FieldElement((c % self.p,) + (0,) * (self.degree - 1))

    def gen(self) -> FieldElement:
        """잉여류 x (generator_check 이면 곱셈군 생성원)"""
        if self.degree == 1:
            return self.constant(-self.modulus[0])
        return FieldElement((0, 1) + (0,) * (self.degree - 2))

    def element(self, coords) -> FieldElement:
        values = [int(c) % self.p for c in coords][: self.degree]
        values += [0] * (self.degree - len(values))
        return FieldElement(tuple(values))

    @cached_property
    def gf_modulus(self) -> List[int]:
        """galoistools 용 modulus (최고차항 먼저)"""
        return list(reversed(self.modulus))

    @cached_property
    def log_tables(self) -> Optional[Tuple[List[FieldElement], Dict[Tuple[int, ...], int]]]:
        """(exp, log) 표: exp[k] = x^k, log[coords] = k"""
        if not self.generator_check or self.order > LOG_TABLE_LIMIT:
            return None
        exp: List[FieldElement] = []
        log: Dict[Tuple[int, ...], int] = {}
        current = list(self.one().coords)
        for k in range(self.group_order):
            element = FieldElement(tuple(current))
            exp.append(element)
            log[element.coords] = k
            current = self._times_x(current)
        return exp, log

    def _times_x(self, coords: List[int]) -> List[int]:
        top = coords[-1]
        shifted = [0] + coords[:-1]
        return [(c - top * m) % self.p for c, m in zip(shifted, self.modulus)]

    def render(self) -> str:
        terms = []
        for k, c in enumerate(self.modulus):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
                continue
            power = "x" if k == 1 else f"x^{k}"
            terms.append(power if c == 1 else f"{c}*{power}")
        return f"GF({self.p}^{self.degree}), modulus = " + " + ".join(terms)


@dataclass(frozen=True)
class SubfieldEmbedding:
    """큰 체 안의 F_q 부분체와 표준 F_q 컨텍스트 사이의 좌표 변환

    rho 는 표준 modulus 의 근이며 기저는 1, rho, ..., rho^{s-1}.
    pivots/inverse 는 F_p 위 선형계 풀이를 캐시한 것이다.
    """
    big: FieldContext
    fq: FieldContext
    rho: FieldElement
    basis: Tuple[FieldElement, ...]
    pivots: Tuple[int, ...]
    inverse: Tuple[Tuple[int, ...], ...]

    @property
    def q(self) -> int:
        return self.fq.order


@dataclass(frozen=True)
class Tower:
    """F_q < F_{q^w} < F_{q^{2w}} 를 하나의 큰 체 안에 구현"""
    big: FieldContext
    fq: FieldContext
    q: int
    w: int
    pi: FieldElement
    delta: FieldElement
    alpha: FieldElement
    theta: FieldElement
    embedding: SubfieldEmbedding

    @property
    def s(self) -> int:
        return self.fq.degree

    @property
    def fq_basis(self) -> Tuple[FieldElement, ...]:
        return self.embedding.basis

    @property
    def fq_modulus(self) -> Tuple[int, ...]:
        return self.fq.modulus
