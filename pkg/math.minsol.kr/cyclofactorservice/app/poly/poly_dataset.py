"""
다항식 자료형
"""
from dataclasses import dataclass
from typing import NamedTuple, Tuple

from app.field.field_dataset import FieldContext, FieldElement


@dataclass(frozen=True)
class Polynomial:
    """FieldContext 위 조밀 다항식 (계수는 상수항 먼저, 정규화됨; 영다항식은 빈 튜플)"""
    ctx: FieldContext
    coeffs: Tuple[FieldElement, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> FieldElement:
        return self.coeffs[-1] if self.coeffs else self.ctx.zero()

    def coeff(self, k: int) -> FieldElement:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.ctx.zero()


class CanonicalKey(NamedTuple):
    """정렬 키: 차수 오름차순, 그 다음 계수 부호 (최고차항부터) 사전순"""
    degree: int
    code: Tuple[int, ...]
