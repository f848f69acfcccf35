"""
오라클 자료형
"""
from dataclasses import dataclass, field
from typing import List, Tuple


@dataclass(frozen=True)
class CosetPartition:
    """q-원분 잉여류 분할 (최소 원소 순)"""
    n: int
    q: int
    cosets: Tuple[Tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.cosets)


@dataclass
class VerificationReport:
    """검증 결과 (네 플래그가 모두 참이면 통과)"""
    product_ok: bool = False
    all_irreducible: bool = False
    degrees_ok: bool = False
    count_match: bool = False
    notes: List[str] = field(default_factory=list)

    @property
    def accepted(self) -> bool:
        return self.product_ok and self.all_irreducible and self.degrees_ok and self.count_match

    def failed_checks(self) -> List[str]:
        checks = ("product_ok", "all_irreducible", "degrees_ok", "count_match")
        return [name for name in checks if not getattr(self, name)]
