"""
명시적 인수분해 기본 연산
경우 분류, 파생 매개변수, 지표 집합(S_t, R_t, R1_t, R2_t) 열거, Frobenius 궤도 곱, 닫힌 꼴 인수 개수.

모든 지표는 [1, G] 범위로 다루며 잉여 0 은 G 로 표현한다 (u = G 는 지수 0, 즉 1 을 뜻한다).
"""
import logging
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import isprime

from app.explicit.explicit_dataset import Case, CaseParams, CaseTag, CountResult, FactorSource, LabeledFactor
from app.field.field_dataset import FieldContext, FieldElement, Tower
from app.field.field_method import elem_add, elem_mul, elem_order, elem_pow
from app.number.number_dataset import RadicalSplit
from app.number.number_method import (
    divisor_weight,
    divisors,
    euler_phi,
    mult_order,
    prime_power,
    radical,
    radical_split,
    valuation,
)
from app.poly.poly_dataset import Polynomial
from app.poly.poly_method import (
    canonical_key,
    frobenius_coeffs,
    poly_binomial,
    poly_mul,
    poly_one,
    poly_trinomial,
    to_fq_poly,
)
from common.exceptions import (
    SubfieldException,
    UnsupportedCaseException,
    ValidationException,
    VerificationException,
)

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# 경우 분류와 매개변수
# ---------------------------------------------------------------------------

def _trinomial_regime(n: int, q: int) -> bool:
    """q = 3 (mod 4) 이고 8 | n"""
    return q % 4 == 3 and n % 8 == 0


def classify_case(n: int, q: int) -> Case:
    """w = ord_{rad(n)}(q) 로 경우를 나눈다 (w = 1 은 Base 경우)"""
    if n < 1:
        raise ValidationException(f"classify_case: n must be >= 1, got {n}")
    if gcd(n, q) != 1:
        raise ValidationException(f"classify_case: gcd({n}, {q}) != 1")
    rad = radical(n)
    w = 1 if rad == 1 else mult_order(q, rad)
    trinomial = _trinomial_regime(n, q)
    if w == 1:
        tag = CaseTag.BASE_TRINOMIAL if trinomial else CaseTag.BASE_SIMPLE
    elif w == 2:
        tag = CaseTag.W_TWO
    elif isprime(w):
        tag = CaseTag.W_ODD_8N if trinomial else CaseTag.W_ODD_SIMPLE
    else:
        tag = CaseTag.UNSUPPORTED
    return Case(tag=tag, w=w)


def tower_width(case: Case) -> int:
    """인수 조립에 쓰는 탑의 w (Base 와 WTwo 는 F_{q^2} 하나면 된다)"""
    if case.tag in (CaseTag.W_ODD_SIMPLE, CaseTag.W_ODD_8N):
        return case.w
    return 1


def _level(n: int, q: int, k: int) -> Tuple[int, int, int]:
    """(g_k, m_k, l_k)"""
    top = q ** k - 1
    g = gcd(n, top)
    return g, n // g, top // g


def two_adic_r(n: int, q: int) -> int:
    """r = min(v_2(n/2), v_2(q+1)), n 이 홀수이거나 q 가 짝수이면 0"""
    if n % 2 or q % 2 == 0:
        return 0
    return max(0, min(valuation(2, n) - 1, valuation(2, q + 1)))


def derive_params(n: int, q: int, case: Optional[Case] = None) -> CaseParams:
    """g_s, m_s, l_s (s = 1, 2, w, 2w), n 의 분해, m_{w,1}, r"""
    if case is None:
        case = classify_case(n, q)
    if case.tag == CaseTag.UNSUPPORTED:
        raise UnsupportedCaseException(
            f"derive_params: ord_rad({n})({q}) = {case.w} is composite"
        )
    w = case.w
    g1, m1, l1 = _level(n, q, 1)
    g2, m2, l2 = _level(n, q, 2)
    gw, mw, lw = _level(n, q, w)
    g2w, m2w, l2w = _level(n, q, 2 * w)

    if w == 1:
        split = RadicalSplit(w_exponent=0, n1=n, n2=1, w=1)
        mw1 = m1
    else:
        split = radical_split(n, q, w)
        if case.tag == CaseTag.W_ODD_8N:
            mw1 = split.n1 // gcd(split.n1, q * q - 1)
        else:
            mw1 = split.n1 // gcd(split.n1, q - 1)

    return CaseParams(
        case=case,
        n=n,
        q=q,
        w=w,
        split=split,
        g1=g1,
        m1=m1,
        l1=l1,
        g2=g2,
        m2=m2,
        l2=l2,
        gw=gw,
        mw=mw,
        lw=lw,
        g2w=g2w,
        m2w=m2w,
        l2w=l2w,
        mw1=mw1,
        r=two_adic_r(n, q),
    )


# ---------------------------------------------------------------------------
# 이항식 기약성
# ---------------------------------------------------------------------------

def serret_binomial_irreducible(t: int, eta: FieldElement, ctx: FieldContext) -> bool:
    """x^t - eta 가 F_q (q = ctx.order) 위에서 기약인지

    t = 1 이거나, rad(t) | o(eta), gcd(t, (q-1)/o(eta)) = 1, 4 | t 이면 4 | q-1.
    """
    if t < 1:
        raise ValidationException(f"serret_binomial_irreducible: t must be >= 1, got {t}")
    if t == 1:
        return True
    q = ctx.order
    order = elem_order(ctx, eta)
    if order % radical(t) != 0:
        return False
    if gcd(t, (q - 1) // order) != 1:
        return False
    return t % 4 != 0 or (q - 1) % 4 == 0


# ---------------------------------------------------------------------------
# 근 표와 궤도
# ---------------------------------------------------------------------------

class RootTable:
    """base 의 거듭제곱 표 (base 의 위수가 order), 지표는 order 로 줄인다"""

    def __init__(self, ctx: FieldContext, base: FieldElement, order: int):
        self.ctx = ctx
        self.order = order
        powers = [ctx.one()]
        for _ in range(1, order):
            powers.append(elem_mul(ctx, powers[-1], base))
        self._powers = powers

    def __getitem__(self, u: int) -> FieldElement:
        return self._powers[u % self.order]

    def __len__(self) -> int:
        return self.order


def _residue(value: int, g: int) -> int:
    """[1, g] 대표원"""
    rest = value % g
    return rest if rest else g


def orbit(u: int, q: int, g: int, length: int) -> Tuple[int, ...]:
    """u, uq, ..., uq^{length-1} (mod g, [1, g] 대표원)"""
    values = []
    current = _residue(u, g)
    for _ in range(length):
        values.append(current)
        current = _residue(current * q, g)
    return tuple(values)


def is_orbit_min(u: int, q: int, g: int, length: int) -> bool:
    return u == min(orbit(u, q, g, length))


def _conjugate_pairs(t: int, g: int, q: int, is_fixed) -> List[int]:
    """1 <= u <= g, gcd(u, t) = 1, 고정되지 않음, u < (qu mod g)"""
    return [
        u
        for u in range(1, g + 1)
        if gcd(u, t) == 1 and not is_fixed(u) and u < (q * u) % g
    ]


# ---------------------------------------------------------------------------
# 지표 집합
# ---------------------------------------------------------------------------

def enum_R_t(t: int, params: CaseParams) -> List[int]:
    """켤레 쌍 {u, qu} 의 대표원 (BaseTrinomial: 2^r 로 나눠지지 않음, WTwo: (q+1) 이 u l2 를 나누지 않음)"""
    q = params.q
    if params.case.tag == CaseTag.W_TWO:
        return _conjugate_pairs(t, params.g2, q, lambda u: (u * params.l2) % (q + 1) == 0)
    if params.case.tag == CaseTag.BASE_TRINOMIAL:
        step = 2 ** params.r
        return _conjugate_pairs(t, params.g2, q, lambda u: u % step == 0)
    raise ValidationException(f"enum_R_t: not defined for case {params.case.tag.value}")


def enum_S_t(t: int, params: CaseParams, variant: str = "exact") -> List[int]:
    """w-궤도 대표원: 1 <= u <= g_w, gcd(u, t) = 1, 고정되지 않음, 궤도 최소

    variant="exact": (q^w-1)/(q-1) 이 u l_w 를 나누지 않음.
    variant="gcd": gcd(n, (q^w-1)/(q-1)) 이 u 를 나누지 않음 (w | q-1 이면 고정점이 섞인다).
    """
    q, w, g = params.q, params.w, params.gw
    cofactor = params.cofactor
    if variant == "exact":
        def excluded(u):
            return (u * params.lw) % cofactor == 0
    elif variant == "gcd":
        bound = gcd(params.n, cofactor)

        def excluded(u):
            return u % bound == 0
    else:
        raise ValidationException(f"enum_S_t: unknown variant {variant!r}")
    return [
        u
        for u in range(1, g + 1)
        if gcd(u, t) == 1 and not excluded(u) and is_orbit_min(u, q, g, w)
    ]


def enum_R1_t(t: int, params: CaseParams) -> List[int]:
    """F_q 위 삼항식 지표: 1 <= u' <= g_2, gcd(u', t) = 1, 2^r 로 나눠지지 않음, u' < (qu' mod g_2)"""
    step = 2 ** params.r
    return _conjugate_pairs(t, params.g2, params.q, lambda u: u % step == 0)


def enum_R2_t(t: int, params: CaseParams) -> List[int]:
    """2w-궤도 대표원: 1 <= u <= g_{2w}, gcd(u, t) = 1, (g_{2w}/g_2) 와 2^r 모두 u 를 나누지 않음"""
    q, g = params.q, params.g2w
    to_level_two = params.g2w // params.g2
    step = 2 ** params.r
    return [
        u
        for u in range(1, g + 1)
        if gcd(u, t) == 1
        and u % to_level_two != 0
        and u % step != 0
        and is_orbit_min(u, q, g, 2 * params.w)
    ]


# ---------------------------------------------------------------------------
# Frobenius 궤도 곱
# ---------------------------------------------------------------------------

def frobenius_orbit_product(f: Polynomial, tower: Tower, orbit_len: int) -> Polynomial:
    """f f^sigma ... f^{sigma^{orbit_len-1}} 을 계산해 F_q 계수 다항식으로 내린다"""
    if orbit_len < 1:
        raise ValidationException(f"frobenius_orbit_product: orbit_len must be >= 1, got {orbit_len}")
    product = poly_one(tower.big)
    conjugate = f
    for k in range(orbit_len):
        product = poly_mul(product, conjugate)
        if k + 1 < orbit_len:
            conjugate = frobenius_coeffs(conjugate, tower.q)
    try:
        return to_fq_poly(product, tower)
    except SubfieldException as e:
        raise SubfieldException(
            f"orbit product of length {orbit_len} does not descend to F_{tower.q}: {e.detail}"
        ) from e


# ---------------------------------------------------------------------------
# 인수 모양
# ---------------------------------------------------------------------------

class CaseRoots(object):
    """경우에 필요한 단계별 1의 거듭제곱근 표

    level1: theta^{l1} (위수 g1), level2: alpha^{l2} (위수 g2),
    w 홀수 소수 탑이면 level_w: delta^{lw} (위수 gw), level_2w: pi^{l2w} (위수 g2w).
    """

    def __init__(self, params: CaseParams, tower: Tower):
        big = tower.big
        self.level1 = RootTable(big, elem_pow(big, tower.theta, params.l1), params.g1)
        self.level2 = RootTable(big, elem_pow(big, tower.alpha, params.l2), params.g2)
        self.level_w: Optional[RootTable] = None
        self.level_2w: Optional[RootTable] = None
        if tower.w == params.w and params.w > 1:
            self.level_w = RootTable(big, elem_pow(big, tower.delta, params.lw), params.gw)
            self.level_2w = RootTable(big, elem_pow(big, tower.pi, params.l2w), params.g2w)


class ExplicitMethod(object):
    """닫힌 꼴 인수 한 개씩을 만드는 단계 (이항식, 삼항식, 궤도 곱)"""

    def __init__(self):
        self.logger = logging.getLogger(__name__)

    def roots(self, params: CaseParams, tower: Tower) -> CaseRoots:
        roots = CaseRoots(params, tower)
        self.logger.debug(f"근 표 생성: n={params.n}, q={params.q}, g1={params.g1}, g2={params.g2}")
        return roots

    def binomial(self, tower: Tower, t: int, a: FieldElement) -> LabeledFactor:
        """x^t - a (a 는 F_q 원소)"""
        poly = to_fq_poly(poly_binomial(tower.big, t, a), tower)
        return LabeledFactor(poly=poly, degree=t, source=FactorSource.BINOMIAL)

    def trinomial(self, tower: Tower, t: int, a: FieldElement, conjugate: FieldElement) -> LabeledFactor:
        """(x^t - a)(x^t - a^q) = x^{2t} - (a + a^q) x^t + a^{q+1}"""
        poly = self.conjugate_trinomial(tower, t, a, conjugate)
        return LabeledFactor(poly=to_fq_poly(poly, tower), degree=2 * t, source=FactorSource.TRINOMIAL)

    def conjugate_trinomial(self, tower: Tower, t: int, a: FieldElement, conjugate: FieldElement) -> Polynomial:
        """큰 체 위 (x^t - a)(x^t - conjugate)"""
        big = tower.big
        return poly_trinomial(big, t, elem_add(big, a, conjugate), elem_mul(big, a, conjugate))

    def orbit_binomial(self, tower: Tower, t: int, a: FieldElement, length: int) -> LabeledFactor:
        poly = frobenius_orbit_product(poly_binomial(tower.big, t, a), tower, length)
        return LabeledFactor(poly=poly, degree=length * t, source=FactorSource.ORBIT_BINOMIAL_PRODUCT)

    def orbit_trinomial(
        self, tower: Tower, t: int, a: FieldElement, conjugate: FieldElement, length: int
    ) -> LabeledFactor:
        """F_{q^w} 위 삼항식 (x^t - a)(x^t - a^{q^w}) 의 w-궤도 곱"""
        poly = frobenius_orbit_product(self.conjugate_trinomial(tower, t, a, conjugate), tower, length)
        return LabeledFactor(poly=poly, degree=2 * length * t, source=FactorSource.ORBIT_TRINOMIAL_PRODUCT)

    def base_binomials(self, tower: Tower, t: int, roots: CaseRoots, g1: int) -> List[LabeledFactor]:
        """x^t - theta^{v l1}, 1 <= v <= g1, gcd(v, t) = 1"""
        return [self.binomial(tower, t, roots.level1[v]) for v in range(1, g1 + 1) if gcd(v, t) == 1]


# ---------------------------------------------------------------------------
# 정렬과 집계
# ---------------------------------------------------------------------------

def sort_factors(factors: Sequence[LabeledFactor]) -> Tuple[LabeledFactor, ...]:
    return tuple(sorted(factors, key=lambda f: canonical_key(f.poly)))


def degree_counts(factors: Sequence[LabeledFactor]) -> Dict[int, int]:
    counts: Dict[int, int] = {}
    for f in factors:
        counts[f.degree] = counts.get(f.degree, 0) + 1
    return dict(sorted(counts.items()))


# ---------------------------------------------------------------------------
# 닫힌 꼴 개수
# ---------------------------------------------------------------------------

def _add(table: Dict[int, Fraction], degree: int, amount: Fraction) -> None:
    if amount:
        table[degree] = table.get(degree, Fraction(0)) + amount


def _per_degree(params: CaseParams) -> Dict[int, Fraction]:
    """차수별 인수 개수"""
    tag = params.case.tag
    w = params.w
    g1, g2, gw = params.g1, params.g2, params.gw
    table: Dict[int, Fraction] = {}

    if tag == CaseTag.BASE_SIMPLE:
        for t in divisors(params.m1):
            _add(table, t, Fraction(euler_phi(t) * g1, t))

    elif tag == CaseTag.BASE_TRINOMIAL:
        for t in divisors(params.m2):
            phi = euler_phi(t)
            odd = t % 2
            if odd:
                _add(table, t, Fraction(phi * g1, t))
            _add(table, 2 * t, Fraction(phi * (2 ** params.r - odd) * g1, 2 * t))

    elif tag == CaseTag.W_ODD_SIMPLE:
        for t in divisors(params.mw):
            phi = euler_phi(t)
            if params.mw1 % t == 0:
                _add(table, t, Fraction(phi * g1, t))
                _add(table, w * t, Fraction(phi * (gw - g1), w * t))
            else:
                _add(table, w * t, Fraction(phi * gw, w * t))

    elif tag == CaseTag.W_ODD_8N:
        for t in divisors(params.m2w):
            phi = euler_phi(t)
            odd = t % 2
            inside = params.mw1 % t == 0
            residual = gw - g1 if inside else gw
            if inside:
                if odd:
                    _add(table, t, Fraction(phi * g1, t))
                _add(table, 2 * t, Fraction(phi * (2 ** params.r - odd) * g1, 2 * t))
            if odd:
                _add(table, w * t, Fraction(phi * residual, w * t))
            _add(table, 2 * w * t, Fraction(phi * (2 ** params.r - odd) * residual, 2 * w * t))

    elif tag == CaseTag.W_TWO:
        for t in divisors(params.m2):
            phi = euler_phi(t)
            if params.mw1 % t == 0:
                _add(table, t, Fraction(phi * g1, t))
                _add(table, 2 * t, Fraction(phi * (g2 - g1), 2 * t))
            else:
                _add(table, 2 * t, Fraction(phi * g2, 2 * t))

    return dict(sorted(table.items()))


def closed_form_total(params: CaseParams) -> Fraction:
    """경우별 총 인수 개수 공식"""
    tag = params.case.tag
    w = params.w
    g1, g2, gw = params.g1, params.g2, params.gw
    two_r = 2 ** params.r
    P = divisor_weight

    if tag == CaseTag.BASE_SIMPLE:
        return g1 * P(params.m1)
    if tag == CaseTag.BASE_TRINOMIAL:
        spread = Fraction(1, 2) + Fraction(two_r, 4) * (2 + valuation(2, params.m2))
        return g1 * spread * P(params.m2, odd_only=True)
    if tag == CaseTag.W_ODD_SIMPLE:
        return P(params.mw) * Fraction(gw, w) + P(params.mw1) * Fraction((w - 1) * g1, w)
    if tag == CaseTag.W_ODD_8N:
        return (
            P(params.m2w) * Fraction(two_r * gw, 2 * w)
            + P(params.m2w, odd_only=True) * Fraction(gw, 2 * w)
            + P(params.mw1) * Fraction(two_r * g1 * (w - 1), 2 * w)
            + P(params.mw1, odd_only=True) * Fraction(g1 * (w - 1), 2 * w)
        )
    if tag == CaseTag.W_TWO:
        return P(params.m2) * Fraction(g2, 2) + P(params.mw1) * Fraction(g1, 2)
    raise UnsupportedCaseException(f"no closed form for case {tag.value}")


def _as_int(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise VerificationException(f"{what} evaluates to the non-integer {value}")
    return int(value)


def count_factors(n: int, q: int) -> CountResult:
    """닫힌 꼴로 x^n - 1 의 서로 다른 기약 인수 개수 (다항식은 만들지 않는다)

    p | n 이면 n = p^e n0 로 나누어 x^{n0} - 1 의 개수를 센다.
    """
    if n < 1:
        raise ValidationException(f"count_factors: n must be >= 1, got {n}")
    p, _ = prime_power(q)
    e = valuation(p, n)
    n0 = n // p ** e
    case = classify_case(n0, q)
    if case.tag == CaseTag.UNSUPPORTED:
        raise UnsupportedCaseException(
            f"count_factors: ord_rad({n0})({q}) = {case.w} is composite, no closed form"
        )
    params = derive_params(n0, q, case)
    by_degree = {
        degree: _as_int(amount, f"degree-{degree} count")
        for degree, amount in _per_degree(params).items()
    }
    total = _as_int(closed_form_total(params), "closed-form total")
    if total != sum(by_degree.values()):
        raise VerificationException(
            f"closed-form total {total} differs from the per-degree sum {sum(by_degree.values())}"
        )
    logger.debug(f"count_factors({n}, {q}): {case.tag.value}, total={total}")
    return CountResult(n=n, q=q, case=case, total=total, by_degree=by_degree, multiplicity=p ** e)
