"""
오라클 서비스
원분 잉여류와 최소 다항식으로 x^n - 1 을 독립적으로 인수분해하고, 임의의 인수분해를 검증한다.
"""
import logging
from collections import Counter
from math import gcd
from typing import List, Optional, Tuple

from app.explicit.explicit_dataset import Case, Factorization, LabeledFactor
from app.explicit.explicit_method import classify_case, degree_counts, sort_factors
from app.field.field_method import find_primitive_polynomial
from app.field.field_service import get_service as get_field_service
from app.number.number_method import mult_order, prime_power, valuation
from app.oracle.oracle_dataset import VerificationReport
from app.oracle.oracle_method import OracleMethod, coset_count, is_irreducible
from app.poly.poly_method import canonical_key, poly_equal_x_pow_minus_one, poly_mul, poly_one, poly_pow
from common.exceptions import ValidationException

logger = logging.getLogger(__name__)


def factor_multiset(fz: Factorization) -> Counter:
    return Counter((canonical_key(f.poly), f.multiplicity) for f in fz.factors)


class OracleService:
    """잉여류 오라클"""

    def __init__(self):
        self.logger = logging.getLogger(__name__)
        self.method = OracleMethod()
        self.field_service = get_field_service()

    def oracle_factor(self, n: int, q: int, case: Optional[Case] = None) -> Factorization:
        """F_{q^m} (m = ord_n(q)) 에서 beta = gamma^{(q^m-1)/n} 를 잡고 잉여류마다 prod (x - beta^i)"""
        p, s = prime_power(q)
        if n < 1:
            raise ValidationException(f"n must be >= 1, got {n}")
        if gcd(n, q) != 1:
            raise ValidationException(f"oracle_factor: gcd({n}, {q}) != 1")
        m = mult_order(q, n)
        big = find_primitive_polynomial(p, s * m)
        fq = self.field_service.get_fq_context(p, s)
        embedding = self.field_service.get_embedding(big, fq)
        self.logger.info(f"오라클: n={n}, q={q}, 확대 차수 m={m}, {big.render()}")

        ordered = sort_factors(self.method.coset_factors(n, q, embedding))
        return Factorization(
            n=n,
            q=q,
            p=p,
            s=s,
            case=case if case is not None else classify_case(n, q),
            fq=fq,
            factors=ordered,
            counts_by_degree=degree_counts(ordered),
            total=len(ordered),
            engine="oracle",
        )

    def verify_factorization(self, fz: Factorization) -> VerificationReport:
        """곱 = x^n - 1, 각 인수 기약, 차수 합 = n, 인수 개수 = 잉여류 개수"""
        report = VerificationReport()
        product = poly_one(fz.fq)
        for f in fz.factors:
            product = poly_mul(product, poly_pow(f.poly, f.multiplicity))
        report.product_ok = poly_equal_x_pow_minus_one(product, fz.n)
        if not report.product_ok:
            report.notes.append("product of the factors differs from x^n - 1")

        failing = [f for f in fz.factors if not is_irreducible(f.poly, fz.q)]
        report.all_irreducible = not failing
        for f in failing[:5]:
            report.notes.append(f"reducible factor of degree {f.poly.degree}")

        degree_sum = sum(f.poly.degree * f.multiplicity for f in fz.factors)
        report.degrees_ok = degree_sum == fz.n and all(f.degree == f.poly.degree for f in fz.factors)
        if not report.degrees_ok:
            report.notes.append(f"degree bookkeeping: sum = {degree_sum}, n = {fz.n}")

        n0 = fz.n // fz.p ** valuation(fz.p, fz.n)
        expected = coset_count(n0, fz.q)
        report.count_match = len(fz.factors) == expected == fz.total
        if not report.count_match:
            report.notes.append(f"factor count {len(fz.factors)} (total {fz.total}) vs {expected} cyclotomic cosets")
        return report

    def compare_factorizations(
        self, left: Factorization, right: Factorization
    ) -> Tuple[List[LabeledFactor], List[LabeledFactor]]:
        """(CanonicalKey, 중복도) 다중집합 차이 (양쪽 모두 비면 일치)"""
        a = factor_multiset(left)
        b = factor_multiset(right)
        index = {(canonical_key(f.poly), f.multiplicity): f for f in left.factors + right.factors}
        only_left = [index[key] for key in sorted((a - b).elements())]
        only_right = [index[key] for key in sorted((b - a).elements())]
        return only_left, only_right


# 서비스 인스턴스 (싱글톤 패턴)
_service_instance: Optional[OracleService] = None


def get_service() -> OracleService:
    """OracleService 싱글톤 인스턴스 반환"""
    global _service_instance
    if _service_instance is None:
        logger.info("OracleService 인스턴스 생성 중...")
        _service_instance = OracleService()
        logger.info("OracleService 인스턴스 생성 완료")
    return _service_instance
