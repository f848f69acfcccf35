"""
명시적 인수분해와 잉여류 오라클의 일치 (작은 격자)
전체 격자는 sweep 명령으로 돌린다.
"""
from math import gcd

import pytest

from app.explicit.explicit_dataset import CaseTag
from app.explicit.explicit_method import classify_case
from common.exceptions import ResourceBoundException

QS = (2, 3, 4, 5, 7, 8, 9)
N_MAX = 20

GRID = [
    (q, n)
    for q in QS
    for n in range(1, N_MAX + 1)
    if gcd(n, q) == 1 and classify_case(n, q).tag != CaseTag.UNSUPPORTED
]


@pytest.mark.parametrize("q, n", GRID)
def test_explicit_matches_oracle(q, n, explicit_service, oracle_service):
    try:
        explicit = explicit_service.factor(n, q)
    except ResourceBoundException:
        pytest.skip(f"field for (q={q}, n={n}) exceeds the size bound")
    report = oracle_service.verify_factorization(explicit)
    assert report.accepted, report.failed_checks()
    oracle = oracle_service.oracle_factor(n, q)
    assert oracle_service.compare_factorizations(explicit, oracle) == ([], [])


# n > 20 인 8 | n, w = 2 경우
LARGER = [
    (3, 104, CaseTag.W_ODD_8N),
    (7, 152, CaseTag.W_ODD_8N),
    (3, 208, CaseTag.W_ODD_8N),
    (5, 24, CaseTag.W_TWO),
    (9, 40, CaseTag.W_TWO),
    (9, 80, CaseTag.W_TWO),
    (7, 57, CaseTag.W_ODD_SIMPLE),
    (4, 63, CaseTag.W_ODD_SIMPLE),
]


@pytest.mark.parametrize("q, n, tag", LARGER)
def test_explicit_matches_oracle_beyond_small_grid(q, n, tag, explicit_service, oracle_service):
    explicit = explicit_service.factor(n, q)
    assert explicit.case.tag == tag
    report = oracle_service.verify_factorization(explicit)
    assert report.accepted, report.failed_checks()
    oracle = oracle_service.oracle_factor(n, q)
    assert oracle_service.compare_factorizations(explicit, oracle) == ([], [])
