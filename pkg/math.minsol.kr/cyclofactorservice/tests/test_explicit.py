"""
명시적 인수분해 테스트
경우 분류, 매개변수, 지표 집합, 닫힌 꼴 개수, 인수 조립.
"""
import random
from fractions import Fraction
from math import gcd

import pytest

from app.explicit.explicit_dataset import CaseTag, FactorSource
from app.explicit.explicit_method import (
    ExplicitMethod,
    RootTable,
    classify_case,
    count_factors,
    derive_params,
    enum_R1_t,
    enum_R2_t,
    enum_R_t,
    enum_S_t,
    frobenius_orbit_product,
    is_orbit_min,
    orbit,
    serret_binomial_irreducible,
    two_adic_r,
)
from app.field.field_method import build_tower, elem_pow, find_primitive_polynomial
from app.number.number_dataset import RadicalSplit
from app.number.number_method import divisors, euler_phi, prime_power
from app.oracle.oracle_method import coset_count, is_irreducible
from app.poly.poly_method import canonical_key, poly_binomial, render_poly
from common.exceptions import (
    SubfieldException,
    UnsupportedCaseException,
    ValidationException,
)


@pytest.mark.parametrize(
    "n, q, tag, w",
    [
        (1, 2, CaseTag.BASE_SIMPLE, 1),
        (4, 5, CaseTag.BASE_SIMPLE, 1),
        (8, 3, CaseTag.BASE_TRINOMIAL, 1),
        (24, 7, CaseTag.BASE_TRINOMIAL, 1),
        (7, 2, CaseTag.W_ODD_SIMPLE, 3),
        (52, 3, CaseTag.W_ODD_SIMPLE, 3),
        (104, 3, CaseTag.W_ODD_8N, 3),
        (9, 2, CaseTag.W_TWO, 2),
        (24, 5, CaseTag.W_TWO, 2),
        (5, 2, CaseTag.UNSUPPORTED, 4),
    ],
)
def test_classify_case(n, q, tag, w):
    case = classify_case(n, q)
    assert case.tag == tag
    assert case.w == w


def test_classify_case_rejects_bad_input():
    with pytest.raises(ValidationException):
        classify_case(6, 3)
    with pytest.raises(ValidationException):
        classify_case(0, 3)


def test_derive_params_for_104_over_3():
    params = derive_params(104, 3)
    assert params.m2w == 1
    assert params.mw == 4
    assert params.r == 2
    assert params.mw1 == 1
    assert params.split == RadicalSplit(w_exponent=0, n1=8, n2=13, w=3)
    assert (params.g1, params.g2, params.gw, params.g2w) == (2, 8, 26, 104)


def test_derive_params_rejects_unsupported():
    with pytest.raises(UnsupportedCaseException):
        derive_params(5, 2)


def test_two_adic_r():
    assert two_adic_r(104, 3) == 2
    assert two_adic_r(24, 7) == 2
    assert two_adic_r(7, 2) == 0
    assert two_adic_r(8, 3) == 2


# ---------------------------------------------------------------------------
# 지표 집합
# ---------------------------------------------------------------------------

def test_orbit_helpers():
    assert orbit(1, 2, 7, 3) == (1, 2, 4)
    assert orbit(7, 2, 7, 3) == (7, 7, 7)
    assert is_orbit_min(3, 2, 7, 3)
    assert not is_orbit_min(5, 2, 7, 3)


def test_trinomial_pairs_for_8_over_3():
    params = derive_params(8, 3)
    pairs = enum_R_t(1, params)
    assert pairs == [1, 2, 5]
    assert all((3 * u) % params.g2 not in pairs for u in pairs)


def test_orbit_representatives_for_7_over_2():
    assert enum_S_t(1, derive_params(7, 2)) == [1, 3]


def test_orbit_representatives_gcd_variant():
    params = derive_params(57, 7)
    exact = set(enum_S_t(1, params))
    printed = set(enum_S_t(1, params, variant="gcd"))
    assert printed - exact == {19, 38}
    assert exact <= printed
    with pytest.raises(ValidationException):
        enum_S_t(1, params, variant="other")


@pytest.mark.parametrize("n, q", [(7, 2), (13, 3), (26, 3), (63, 4), (91, 9), (248, 5)])
def test_orbit_representative_counts(n, q):
    params = derive_params(n, q)
    for t in divisors(params.mw):
        inside = params.mw1 % t == 0
        residual = params.gw - params.g1 if inside else params.gw
        assert Fraction(len(enum_S_t(t, params))) == Fraction(euler_phi(t) * residual, params.w * t)


def _orbit_grid():
    for q in (2, 3, 4, 5, 7, 8, 9):
        for n in range(2, 201):
            if gcd(n, q) != 1:
                continue
            case = classify_case(n, q)
            if case.tag in (CaseTag.W_ODD_SIMPLE, CaseTag.W_ODD_8N) and (q - 1) % case.w:
                yield q, n


def test_orbit_representative_variants_agree_when_w_does_not_divide_q_minus_1():
    points = list(_orbit_grid())
    assert len(points) > 50
    for q, n in points:
        params = derive_params(n, q)
        for t in divisors(params.mw):
            assert enum_S_t(t, params) == enum_S_t(t, params, variant="gcd"), (q, n, t)


def test_eight_n_index_sets_for_104_over_3():
    params = derive_params(104, 3)
    r1 = enum_R1_t(1, params)
    r2 = enum_R2_t(1, params)
    # t = 1: 삼항식 3 개, 길이 6 궤도 72 / 6 = 12 개
    assert len(r1) == 3
    assert len(r2) == 12
    assert all(u % 4 for u in r1 + r2)
    assert all(u % 13 for u in r2)


def test_enum_R_t_rejects_other_cases():
    with pytest.raises(ValidationException):
        enum_R_t(1, derive_params(7, 2))


# ---------------------------------------------------------------------------
# 이항식 기약성
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("p, s", [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)])
def test_serret_agrees_with_rabin(p, s):
    ctx = find_primitive_polynomial(p, s)
    for t in range(1, 13):
        for k in range(ctx.group_order):
            eta = elem_pow(ctx, ctx.gen(), k)
            assert serret_binomial_irreducible(t, eta, ctx) == is_irreducible(poly_binomial(ctx, t, eta))


def test_serret_rejects_bad_degree():
    ctx = find_primitive_polynomial(3, 1)
    with pytest.raises(ValidationException):
        serret_binomial_irreducible(0, ctx.one(), ctx)


# ---------------------------------------------------------------------------
# 근 표와 궤도 곱
# ---------------------------------------------------------------------------

def test_root_table():
    ctx = find_primitive_polynomial(2, 3)
    table = RootTable(ctx, ctx.gen(), 7)
    assert len(table) == 7
    assert table[3] == elem_pow(ctx, ctx.gen(), 3)
    assert table[7] == ctx.one()
    assert table[10] == table[3]


def test_frobenius_orbit_product_descends():
    tower = build_tower(2, 1, 3)
    f = poly_binomial(tower.big, 1, tower.delta)
    product = frobenius_orbit_product(f, tower, 3)
    assert product.degree == 3
    assert is_irreducible(product)
    with pytest.raises(SubfieldException):
        frobenius_orbit_product(f, tower, 1)
    with pytest.raises(ValidationException):
        frobenius_orbit_product(f, tower, 0)


ORBIT_CASES = [(7, 2), (49, 2), (13, 3), (63, 4), (91, 9), (104, 3), (152, 7), (208, 3)]


def _orbit_inputs(params, tower, method):
    """(큰 체 위 다항식, 차수) 목록: S_t 이항식과 R2_t 삼항식"""
    roots = method.roots(params, tower)
    inputs = []
    if params.case.tag == CaseTag.W_ODD_SIMPLE:
        binomial_degrees = divisors(params.mw)
    else:
        binomial_degrees = [t for t in divisors(params.m2w) if t % 2]
    for t in binomial_degrees:
        for u in enum_S_t(t, params):
            inputs.append((poly_binomial(tower.big, t, roots.level_w[u]), t))
    if params.case.tag == CaseTag.W_ODD_8N:
        lift = params.q ** params.w
        for t in divisors(params.m2w):
            for u in enum_R2_t(t, params):
                poly = method.conjugate_trinomial(tower, t, roots.level_2w[u], roots.level_2w[lift * u])
                inputs.append((poly, 2 * t))
    return inputs


@pytest.mark.parametrize("n, q", ORBIT_CASES)
def test_orbit_products_descend_and_are_irreducible(n, q, field_service):
    params = derive_params(n, q)
    assert params.case.tag in (CaseTag.W_ODD_SIMPLE, CaseTag.W_ODD_8N)
    p, s = prime_power(q)
    tower = field_service.get_tower(p, s, params.w)
    inputs = _orbit_inputs(params, tower, ExplicitMethod())
    assert inputs
    rng = random.Random(n * 100 + q)
    for f, degree in rng.sample(inputs, min(100, len(inputs))):
        product = frobenius_orbit_product(f, tower, params.w)
        assert product.ctx == tower.fq
        assert product.degree == params.w * degree
        assert is_irreducible(product)


def test_explicit_method_labels_factors(field_service):
    method = ExplicitMethod()
    tower = field_service.get_tower(2, 1, 3)
    orbit_factor = method.orbit_binomial(tower, 1, tower.delta, 3)
    assert orbit_factor.source == FactorSource.ORBIT_BINOMIAL_PRODUCT
    assert orbit_factor.degree == orbit_factor.poly.degree == 3
    assert orbit_factor.poly.ctx == tower.fq
    line = method.binomial(tower, 1, tower.theta)
    assert render_poly(line.poly) == "x + 1"
    assert line.source == FactorSource.BINOMIAL
    roots = method.roots(derive_params(7, 2), tower)
    assert len(roots.level_w) == 7
    assert method.roots(derive_params(4, 5), field_service.get_tower(5, 1, 1)).level_w is None


# ---------------------------------------------------------------------------
# 닫힌 꼴 개수
# ---------------------------------------------------------------------------

COUNTS = [
    (7, 2, 3), (49, 2, 5), (9, 2, 3),
    (8, 3, 5), (13, 3, 5), (26, 3, 10), (52, 3, 15), (104, 3, 25),
    (15, 4, 9), (45, 4, 15), (63, 4, 23), (189, 4, 37),
    (6, 5, 4), (9, 5, 3), (12, 5, 8), (24, 5, 14), (248, 5, 66),
    (24, 7, 15), (38, 7, 14), (57, 7, 21), (76, 7, 21), (171, 7, 59),
    (3, 8, 2), (9, 8, 5), (21, 8, 14), (27, 8, 8), (73, 8, 25), (147, 8, 26), (511, 8, 175),
    (5, 9, 3), (13, 9, 5), (40, 9, 24), (80, 9, 44), (91, 9, 31), (104, 9, 40), (208, 9, 60), (637, 9, 57),
]


@pytest.mark.parametrize("n, q, expected", COUNTS)
def test_count_factors(n, q, expected):
    result = count_factors(n, q)
    assert result.total == expected
    assert result.total == coset_count(n, q)
    assert sum(result.by_degree.values()) == expected
    assert sum(d * c for d, c in result.by_degree.items()) == n


def test_count_factors_degrees():
    assert count_factors(7, 2).by_degree == {1: 1, 3: 2}
    assert count_factors(8, 3).by_degree == {1: 2, 2: 3}


def test_count_factors_char_power():
    result = count_factors(14, 2)
    assert result.total == 3
    assert result.multiplicity == 2


def test_count_factors_unsupported():
    with pytest.raises(UnsupportedCaseException):
        count_factors(5, 2)


# ---------------------------------------------------------------------------
# 인수 조립
# ---------------------------------------------------------------------------

def test_factor_7_over_2(explicit_service, oracle_service):
    fz = explicit_service.factor(7, 2)
    assert fz.case.tag == CaseTag.W_ODD_SIMPLE
    assert [render_poly(f.poly) for f in fz.factors] == ["x + 1", "x^3 + x + 1", "x^3 + x^2 + 1"]
    assert [f.source for f in fz.factors] == [
        FactorSource.BINOMIAL,
        FactorSource.ORBIT_BINOMIAL_PRODUCT,
        FactorSource.ORBIT_BINOMIAL_PRODUCT,
    ]
    assert oracle_service.verify_factorization(fz).accepted


def test_factor_8_over_3(explicit_service, oracle_service):
    fz = explicit_service.factor(8, 3)
    assert fz.case.tag == CaseTag.BASE_TRINOMIAL
    sources = [f.source for f in fz.factors]
    assert sources.count(FactorSource.BINOMIAL) == 2
    assert sources.count(FactorSource.TRINOMIAL) == 3
    assert oracle_service.verify_factorization(fz).accepted


def test_factor_104_over_3(explicit_service, oracle_service):
    fz = explicit_service.factor(104, 3)
    assert fz.case.tag == CaseTag.W_ODD_8N
    assert fz.total == 25
    assert sum(f.degree for f in fz.factors) == 104
    keys = [canonical_key(f.poly) for f in fz.factors]
    assert keys == sorted(keys)
    assert oracle_service.verify_factorization(fz).accepted
    assert oracle_service.compare_factorizations(fz, oracle_service.oracle_factor(104, 3)) == ([], [])


def test_factor_char_power(explicit_service, oracle_service):
    fz = explicit_service.factor(14, 2)
    assert fz.n == 14
    assert fz.total == 3
    assert all(f.multiplicity == 2 and f.source == FactorSource.CHAR_POWER for f in fz.factors)
    assert any("characteristic 2" in note for note in fz.notes)
    assert oracle_service.verify_factorization(fz).accepted


def test_factor_unsupported_falls_back(explicit_service, oracle_service):
    fz = explicit_service.factor(5, 2)
    assert fz.engine == "oracle"
    assert fz.case.tag == CaseTag.UNSUPPORTED
    assert fz.total == 2
    assert any("composite" in note for note in fz.notes)
    assert oracle_service.verify_factorization(fz).accepted


def test_factorizer_requires_matching_case(explicit_service):
    params = derive_params(7, 2)
    tower = build_tower(2, 1, 1)
    with pytest.raises(ValidationException):
        explicit_service.factor_w_two(params, tower)


def test_factor_is_deterministic(explicit_service):
    assert explicit_service.factor(63, 4) == explicit_service.factor(63, 4)
