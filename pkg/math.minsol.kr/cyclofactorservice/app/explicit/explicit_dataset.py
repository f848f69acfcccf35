"""
명시적 인수분해 자료형
"""
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Dict, Tuple

from app.field.field_dataset import FieldContext
from app.number.number_dataset import RadicalSplit
from app.poly.poly_dataset import Polynomial


class CaseTag(str, Enum):
    BASE_SIMPLE = "BaseSimple"
    BASE_TRINOMIAL = "BaseTrinomial"
    W_ODD_SIMPLE = "WOddSimple"
    W_ODD_8N = "WOdd8n"
    W_TWO = "WTwo"
    UNSUPPORTED = "Unsupported"


class FactorSource(str, Enum):
    BINOMIAL = "Binomial"
    TRINOMIAL = "Trinomial"
    ORBIT_BINOMIAL_PRODUCT = "OrbitBinomialProduct"
    ORBIT_TRINOMIAL_PRODUCT = "OrbitTrinomialProduct"
    CHAR_POWER = "CharPower"
    COSET = "Coset"


@dataclass(frozen=True)
class Case:
    """경우 분류 (w = ord_{rad(n)}(q))"""
    tag: CaseTag
    w: int


@dataclass(frozen=True)
class CaseParams:
    """경우별 파생 매개변수

    각 단계 s 에 대해 g_s = gcd(n, q^s - 1), m_s = n / g_s, l_s = (q^s - 1) / g_s.
    """
    case: Case
    n: int
    q: int
    w: int
    split: RadicalSplit
    g1: int
    m1: int
    l1: int
    g2: int
    m2: int
    l2: int
    gw: int
    mw: int
    lw: int
    g2w: int
    m2w: int
    l2w: int
    mw1: int
    r: int

    @property
    def cofactor(self) -> int:
        """(q^w - 1)/(q - 1)"""
        return (self.q ** self.w - 1) // (self.q - 1)


@dataclass(frozen=True)
class LabeledFactor:
    """출처가 붙은 모닉 기약 인수 (계수는 표준 F_q 컨텍스트)"""
    poly: Polynomial
    degree: int
    source: FactorSource
    multiplicity: int = 1


@dataclass(frozen=True)
class Factorization:
    """x^n - 1 의 기약 인수분해 (인수는 CanonicalKey 순)"""
    n: int
    q: int
    p: int
    s: int
    case: Case
    fq: FieldContext
    factors: Tuple[LabeledFactor, ...]
    counts_by_degree: Dict[int, int] = field(default_factory=dict)
    total: int = 0
    notes: Tuple[str, ...] = ()
    engine: str = "explicit"

    def with_notes(self, *notes: str) -> "Factorization":
        return replace(self, notes=self.notes + tuple(notes))


@dataclass(frozen=True)
class CountResult:
    """닫힌 꼴 개수 (p | n 이면 각 인수의 중복도는 multiplicity = p^e)"""
    n: int
    q: int
    case: Case
    total: int
    by_degree: Dict[int, int]
    multiplicity: int = 1
