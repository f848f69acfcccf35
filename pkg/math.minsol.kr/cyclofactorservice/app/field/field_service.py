"""
유한체 서비스
탑과 부분체 임베딩을 (p, s, w) 단위로 캐시한다.
"""
import logging
from typing import Dict, Optional, Tuple

from app.field.field_dataset import FieldContext, SubfieldEmbedding, Tower
from app.field.field_method import (
    build_embedding,
    build_tower,
    field_bound,
    find_primitive_polynomial,
)

logger = logging.getLogger(__name__)


class FieldService:
    """탑/임베딩 생성과 캐시"""

    def __init__(self):
        self._towers: Dict[Tuple[int, int, int, int], Tower] = {}
        self._embeddings: Dict[Tuple[FieldContext, FieldContext], SubfieldEmbedding] = {}

    def get_fq_context(self, p: int, s: int, bound: Optional[int] = None) -> FieldContext:
        """표준 F_q 컨텍스트"""
        return find_primitive_polynomial(p, s, bound)

    def get_tower(self, p: int, s: int, w: int, bound: Optional[int] = None) -> Tower:
        limit = field_bound(bound)
        key = (p, s, w, limit)
        if key not in self._towers:
            logger.info(f"Tower 생성 중: p={p}, s={s}, w={w}")
            self._towers[key] = build_tower(p, s, w, limit)
            logger.info(f"Tower 생성 완료: {self._towers[key].big.render()}")
        return self._towers[key]

    def get_embedding(self, big: FieldContext, fq: FieldContext) -> SubfieldEmbedding:
        key = (big, fq)
        if key not in self._embeddings:
            self._embeddings[key] = build_embedding(big, fq)
        return self._embeddings[key]


# 서비스 인스턴스 (싱글톤 패턴)
_service_instance: Optional[FieldService] = None


def get_service() -> FieldService:
    """FieldService 싱글톤 인스턴스 반환"""
    global _service_instance
    if _service_instance is None:
        logger.info("FieldService 인스턴스 생성 중...")
        _service_instance = FieldService()
        logger.info("FieldService 인스턴스 생성 완료")
    return _service_instance
