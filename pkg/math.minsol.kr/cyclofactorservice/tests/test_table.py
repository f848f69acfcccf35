"""
개수 표 재현 테스트
"""
import pytest

from app.table.table_dataset import TABLE_NAMES
from app.table.table_service import TABLE_COLUMNS, evaluate_rows, table_rows
from common.exceptions import ValidationException


@pytest.mark.parametrize("table", TABLE_NAMES)
def test_tables_have_no_mismatch(table, table_service):
    summary = table_service.check_table(table, max_span=2)
    assert summary.checks
    assert summary.mismatches == []
    for check in summary.checks:
        assert check.computed == check.cosets == check.expected


def test_registered_errata_are_reported(table_service):
    errata = table_service.check_table("1", max_span=2).errata
    assert {(c.q, c.family) for c in errata} == {(3, "2^k1 13^k"), (9, "2^k1 7^k2 13^k")}
    assert table_service.check_table("2", max_span=2).errata
    assert all(c.q == 8 for c in table_service.check_table("2", max_span=2).errata)
    assert table_service.check_table("3.5", max_span=2).errata == []


def test_known_points(table_service):
    checks = {(c.q, c.n): c for c in table_service.check_table("1", max_span=2).checks}
    assert checks[(4, 63)].computed == 23
    assert checks[(3, 104)].computed == 25
    assert checks[(3, 104)].status == "erratum"
    assert checks[(2, 7)].status == "match"


def test_records_and_frame(table_service):
    summary = table_service.check_table("3.5", max_span=1)
    records = table_service.records(summary.checks)
    assert records == [
        {
            "table": "3.5",
            "q": 3,
            "family": "2^k1 13^k",
            "exponents": "k1=3, k=1",
            "n": 104,
            "printed": "25",
            "expected": "25",
            "computed": 25,
            "cosets": 25,
            "status": "match",
        }
    ]
    frame = table_service.to_frame(summary.checks)
    assert list(frame.columns) == list(TABLE_COLUMNS)
    assert len(frame) == 1


def test_bad_table_arguments():
    with pytest.raises(ValidationException):
        table_rows("4")
    with pytest.raises(ValidationException):
        evaluate_rows(table_rows("2"), max_span=0)
