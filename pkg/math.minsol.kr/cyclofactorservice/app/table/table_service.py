"""
인수 개수 표 서비스
표의 각 행을 지수 격자 위에서 닫힌 꼴 개수, 잉여류 개수와 대조한다.
"""
import logging
from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Sequence

import pandas as pd

from app.explicit.explicit_method import count_factors
from app.oracle.oracle_method import coset_count
from app.table.table_dataset import TABLES, TableCheck, TableRow, TableSummary
from common.exceptions import ValidationException

logger = logging.getLogger(__name__)

DEFAULT_MAX_SPAN = 3

TABLE_COLUMNS = ("table", "q", "family", "exponents", "n", "printed", "expected", "computed", "cosets", "status")


def table_rows(table: str) -> List[TableRow]:
    if table not in TABLES:
        raise ValidationException(f"unknown table {table!r}, expected one of {', '.join(TABLES)}")
    return TABLES[table]()


def _exponent_values(low: int, high: Optional[int], max_span: int) -> range:
    top = low + max_span - 1
    if high is not None:
        top = min(top, high)
    return range(low, top + 1)


def evaluate_rows(rows: Sequence[TableRow], max_span: int = DEFAULT_MAX_SPAN) -> List[TableCheck]:
    """각 지수 범위의 하한부터 최대 max_span 개 값을 돌며 대조한다"""
    if max_span < 1:
        raise ValidationException(f"max_span must be >= 1, got {max_span}")
    checks: List[TableCheck] = []
    for row in rows:
        names = [name for name, _, _ in row.ranges]
        grids = [_exponent_values(low, high, max_span) for _, low, high in row.ranges]
        for values in product(*grids):
            exponents: Dict[str, int] = dict(zip(names, values))
            n = row.n_of(exponents)
            printed = Fraction(row.printed(exponents))
            expected = Fraction(row.corrected(exponents)) if row.corrected else printed
            computed = count_factors(n, row.q).total
            cosets = coset_count(n, row.q)
            if printed == computed == cosets:
                status = "match"
            elif row.corrected is not None and expected == computed == cosets:
                status = "erratum"
            else:
                status = "mismatch"
                logger.warning(
                    f"표 {row.table} 불일치: q={row.q}, n={n} ({exponents}), "
                    f"공식={printed}, 닫힌 꼴={computed}, 잉여류={cosets}"
                )
            checks.append(
                TableCheck(
                    table=row.table,
                    q=row.q,
                    family=row.family,
                    exponents=tuple(exponents.items()),
                    n=n,
                    printed=printed,
                    expected=expected,
                    computed=computed,
                    cosets=cosets,
                    status=status,
                )
            )
    return checks


def _fraction_text(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else str(value)


class TableService:
    """개수 표 재현"""

    def __init__(self):
        self.logger = logging.getLogger(__name__)

    def check_table(self, table: str, max_span: int = DEFAULT_MAX_SPAN) -> TableSummary:
        rows = table_rows(table)
        self.logger.info(f"표 {table} 대조 시작: 행 {len(rows)}개, max_span={max_span}")
        summary = TableSummary(table=table, checks=evaluate_rows(rows, max_span))
        self.logger.info(
            f"표 {table} 대조 완료: 격자점 {len(summary.checks)}개, "
            f"정오표 {len(summary.errata)}개, 불일치 {len(summary.mismatches)}개"
        )
        return summary

    def records(self, checks: Sequence[TableCheck]) -> List[dict]:
        """JSON 으로 바로 내보낼 수 있는 행 목록"""
        return [
            {
                "table": c.table,
                "q": c.q,
                "family": c.family,
                "exponents": c.exponent_text,
                "n": c.n,
                "printed": _fraction_text(c.printed),
                "expected": _fraction_text(c.expected),
                "computed": c.computed,
                "cosets": c.cosets,
                "status": c.status,
            }
            for c in checks
        ]

    def to_frame(self, checks: Sequence[TableCheck]) -> pd.DataFrame:
        return pd.DataFrame.from_records(self.records(checks), columns=list(TABLE_COLUMNS))


# 서비스 인스턴스 (싱글톤 패턴)
_service_instance: Optional[TableService] = None


def get_service() -> TableService:
    """TableService 싱글톤 인스턴스 반환"""
    global _service_instance
    if _service_instance is None:
        logger.info("TableService 인스턴스 생성 중...")
        _service_instance = TableService()
        logger.info("TableService 인스턴스 생성 완료")
    return _service_instance
