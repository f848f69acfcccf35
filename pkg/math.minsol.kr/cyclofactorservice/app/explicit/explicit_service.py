"""
명시적 인수분해 서비스
경우별 닫힌 꼴(이항식, 삼항식, Frobenius 궤도 곱)로 x^n - 1 의 기약 인수를 조립한다.
"""
import logging
from dataclasses import replace
from typing import Dict, List, Optional, Tuple

from app.explicit.explicit_dataset import CaseParams, CaseTag, FactorSource, Factorization, LabeledFactor
from app.explicit.explicit_method import (
    ExplicitMethod,
    classify_case,
    degree_counts,
    derive_params,
    enum_R1_t,
    enum_R2_t,
    enum_R_t,
    enum_S_t,
    sort_factors,
    tower_width,
)
from app.field.field_dataset import Tower
from app.field.field_service import get_service as get_field_service
from app.number.number_method import divisors, prime_power, valuation
from app.oracle.oracle_service import get_service as get_oracle_service
from common.exceptions import ValidationException

logger = logging.getLogger(__name__)

# 지표 집합을 두 가지로 읽을 수 있는 곳에서 택한 해석 (결과 notes 에 남긴다)
RESOLUTION_NOTES: Dict[CaseTag, Tuple[str, ...]] = {
    CaseTag.BASE_TRINOMIAL: (
        "R_t pairs u with q*u mod gcd(n, q^2-1); indices divisible by 2^r give the odd-degree binomials",
        "closed-form total G1*(1/2 + 2^(r-2)*(2 + v2(m2)))*P_odd(m2) agrees with the coset count",
    ),
    CaseTag.W_ODD_SIMPLE: (
        "S_t excludes u with (q^w-1)/(q-1) | u*l_w (indices fixed by the q-power map)",
    ),
    CaseTag.W_ODD_8N: (
        "m_{w,1} = n1/gcd(n1, q^2-1)",
        "R1_t conjugates by q (q^w = q modulo gcd(n, q^2-1) for odd w)",
        "w-orbit binomial products restricted to odd t",
        "trinomial middle coefficient alpha^(u*l2) + alpha^(q*u*l2)",
        "R2_t excludes u divisible by gcd(n, q^(2w)-1)/gcd(n, q^2-1) or by 2^r",
    ),
    CaseTag.W_TWO: (
        "R_t excludes u with (q+1) | u*l2 (indices fixed by the q-power map)",
    ),
}


class ExplicitService:
    """닫힌 꼴 인수분해"""

    def __init__(self):
        self.logger = logging.getLogger(__name__)
        self.method = ExplicitMethod()
        self.field_service = get_field_service()

    def _assemble(self, params: CaseParams, tower: Tower, factors: List[LabeledFactor]) -> Factorization:
        ordered = sort_factors(factors)
        return Factorization(
            n=params.n,
            q=params.q,
            p=tower.fq.p,
            s=tower.fq.degree,
            case=params.case,
            fq=tower.fq,
            factors=ordered,
            counts_by_degree=degree_counts(ordered),
            total=len(ordered),
            notes=RESOLUTION_NOTES.get(params.case.tag, ()),
        )

    def _require(self, params: CaseParams, tag: CaseTag) -> None:
        if params.case.tag != tag:
            raise ValidationException(
                f"parameters of case {params.case.tag.value} passed to the {tag.value} factorizer"
            )

    # ------------------------------------------------------------------
    # 경우별 조립
    # ------------------------------------------------------------------

    def factor_base_simple(self, params: CaseParams, tower: Tower) -> Factorization:
        """rad(n) | q-1: x^t - theta^{u l1}, t | m1"""
        self._require(params, CaseTag.BASE_SIMPLE)
        roots = self.method.roots(params, tower)
        factors: List[LabeledFactor] = []
        for t in divisors(params.m1):
            factors.extend(self.method.base_binomials(tower, t, roots, params.g1))
        return self._assemble(params, tower, factors)

    def factor_base_trinomial(self, params: CaseParams, tower: Tower) -> Factorization:
        """rad(n) | q-1, q = 3 (mod 4), 8 | n: 홀수 t 이항식과 R_t 삼항식"""
        self._require(params, CaseTag.BASE_TRINOMIAL)
        roots = self.method.roots(params, tower)
        q = params.q
        factors: List[LabeledFactor] = []
        for t in divisors(params.m2):
            if t % 2:
                factors.extend(self.method.base_binomials(tower, t, roots, params.g1))
            for u in enum_R_t(t, params):
                factors.append(self.method.trinomial(tower, t, roots.level2[u], roots.level2[q * u]))
        return self._assemble(params, tower, factors)

    def factor_w_odd_simple(self, params: CaseParams, tower: Tower) -> Factorization:
        """w 홀수 소수: t | m_{w,1} 이항식과 S_t 의 w-궤도 곱"""
        self._require(params, CaseTag.W_ODD_SIMPLE)
        roots = self.method.roots(params, tower)
        factors: List[LabeledFactor] = []
        for t in divisors(params.mw1):
            factors.extend(self.method.base_binomials(tower, t, roots, params.g1))
        for t in divisors(params.mw):
            for u in enum_S_t(t, params):
                factors.append(self.method.orbit_binomial(tower, t, roots.level_w[u], params.w))
        return self._assemble(params, tower, factors)

    def factor_w_odd_8n(self, params: CaseParams, tower: Tower) -> Factorization:
        """w 홀수 소수, q = 3 (mod 4), 8 | n: 네 가지 곱 모양"""
        self._require(params, CaseTag.W_ODD_8N)
        roots = self.method.roots(params, tower)
        q, w = params.q, params.w
        lift = q ** w
        factors: List[LabeledFactor] = []
        for t in divisors(params.mw1):
            if t % 2:
                factors.extend(self.method.base_binomials(tower, t, roots, params.g1))
            for u in enum_R1_t(t, params):
                factors.append(self.method.trinomial(tower, t, roots.level2[u], roots.level2[q * u]))
        for t in divisors(params.m2w):
            if t % 2:
                for u in enum_S_t(t, params):
                    factors.append(self.method.orbit_binomial(tower, t, roots.level_w[u], w))
            for u in enum_R2_t(t, params):
                factors.append(
                    self.method.orbit_trinomial(tower, t, roots.level_2w[u], roots.level_2w[lift * u], w)
                )
        return self._assemble(params, tower, factors)

    def factor_w_two(self, params: CaseParams, tower: Tower) -> Factorization:
        """w = 2: t | m_{2,1} 이항식과 R_t 삼항식"""
        self._require(params, CaseTag.W_TWO)
        roots = self.method.roots(params, tower)
        q = params.q
        factors: List[LabeledFactor] = []
        for t in divisors(params.mw1):
            factors.extend(self.method.base_binomials(tower, t, roots, params.g1))
        for t in divisors(params.m2):
            for u in enum_R_t(t, params):
                factors.append(self.method.trinomial(tower, t, roots.level2[u], roots.level2[q * u]))
        return self._assemble(params, tower, factors)

    # ------------------------------------------------------------------
    # 진입점
    # ------------------------------------------------------------------

    def factor(self, n: int, q: int, bound: Optional[int] = None) -> Factorization:
        """x^n - 1 의 기약 인수분해 (p | n 이면 x^n - 1 = (x^{n0} - 1)^{p^e})"""
        if n < 1:
            raise ValidationException(f"factor: n must be >= 1, got {n}")
        p, s = prime_power(q)
        e = valuation(p, n)
        n0 = n // p ** e
        case = classify_case(n0, q)
        self.logger.info(f"명시적 인수분해: n={n}, q={q}, case={case.tag.value}, w={case.w}")

        if case.tag == CaseTag.UNSUPPORTED:
            self.logger.warning(
                f"w = {case.w} 는 합성수: 닫힌 꼴이 없어 잉여류 오라클로 대체 (n={n0}, q={q})"
            )
            result = get_oracle_service().oracle_factor(n0, q, case).with_notes(
                f"w = {case.w} is composite: factors come from the cyclotomic coset oracle"
            )
        else:
            params = derive_params(n0, q, case)
            tower = self.field_service.get_tower(p, s, tower_width(case), bound)
            dispatch = {
                CaseTag.BASE_SIMPLE: self.factor_base_simple,
                CaseTag.BASE_TRINOMIAL: self.factor_base_trinomial,
                CaseTag.W_ODD_SIMPLE: self.factor_w_odd_simple,
                CaseTag.W_ODD_8N: self.factor_w_odd_8n,
                CaseTag.W_TWO: self.factor_w_two,
            }
            result = dispatch[case.tag](params, tower)

        if e:
            multiplicity = p ** e
            stripped = tuple(
                replace(f, multiplicity=multiplicity, source=FactorSource.CHAR_POWER)
                for f in result.factors
            )
            result = replace(result, n=n, factors=stripped).with_notes(
                f"x^{n} - 1 = (x^{n0} - 1)^{multiplicity} in characteristic {p}"
            )
        self.logger.info(f"인수분해 완료: 인수 {result.total}개, 차수별 {result.counts_by_degree}")
        return result


# 서비스 인스턴스 (싱글톤 패턴)
_service_instance: Optional[ExplicitService] = None


def get_service() -> ExplicitService:
    """ExplicitService 싱글톤 인스턴스 반환"""
    global _service_instance
    if _service_instance is None:
        logger.info("ExplicitService 인스턴스 생성 중...")
        _service_instance = ExplicitService()
        logger.info("ExplicitService 인스턴스 생성 완료")
    return _service_instance
