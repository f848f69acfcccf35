"""
원분 잉여류 오라클 테스트
"""
import random
from dataclasses import replace
from itertools import product
from math import gcd

import pytest

from app.explicit.explicit_dataset import CaseTag
from app.field.field_method import find_primitive_polynomial
from app.number.number_method import mult_order
from app.oracle.oracle_method import OracleMethod, coset_count, cyclotomic_cosets, is_irreducible
from app.poly.poly_method import canonical_key, make_poly, poly_divmod, poly_from_ints, poly_mul, render_poly
from common.exceptions import ValidationException


def test_cyclotomic_cosets():
    partition = cyclotomic_cosets(7, 2)
    assert partition.cosets == ((0,), (1, 2, 4), (3, 5, 6))
    assert len(partition) == 3
    assert len(cyclotomic_cosets(8, 3)) == 5
    with pytest.raises(ValidationException):
        cyclotomic_cosets(6, 2)


@pytest.mark.parametrize(
    "n, q, expected",
    [(7, 2, 3), (49, 2, 5), (8, 3, 5), (104, 3, 25), (63, 4, 23), (24, 5, 14), (3, 8, 2), (91, 9, 31)],
)
def test_coset_count(n, q, expected):
    assert coset_count(n, q) == expected
    assert coset_count(n, q) == len(cyclotomic_cosets(n, q))


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_coset_sizes_are_orders(q):
    for n in range(1, 121):
        if gcd(n, q) != 1:
            continue
        for coset in cyclotomic_cosets(n, q).cosets:
            j = coset[0]
            assert len(coset) == mult_order(q, n // gcd(n, j)), (n, j)


def test_is_irreducible_prime_field():
    gf2 = find_primitive_polynomial(2, 1)
    assert is_irreducible(poly_from_ints(gf2, [1, 1, 0, 1]))
    assert not is_irreducible(poly_from_ints(gf2, [1, 0, 1]))
    assert not is_irreducible(poly_from_ints(gf2, [1]))
    with pytest.raises(ValidationException):
        is_irreducible(poly_from_ints(gf2, [1, 1]), q=4)


def test_is_irreducible_extension_field():
    gf4 = find_primitive_polynomial(2, 2)
    # x^2 + x + c 는 Tr(c) = 1 일 때만 기약
    assert is_irreducible(make_poly(gf4, [gf4.gen(), gf4.one(), gf4.one()]))
    assert not is_irreducible(poly_from_ints(gf4, [1, 1, 1]))


def _elements(ctx):
    return [ctx.element(coords) for coords in product(range(ctx.p), repeat=ctx.degree)]


def _monic(ctx, degree, elements):
    for coeffs in product(elements, repeat=degree):
        yield make_poly(ctx, list(coeffs) + [ctx.one()])


@pytest.mark.parametrize(
    "p, s, max_degree",
    [(2, 1, 6), (3, 1, 4), (2, 2, 4), (5, 1, 3), (7, 1, 3), (2, 3, 3), (3, 2, 3)],
)
def test_is_irreducible_matches_product_sieve(p, s, max_degree):
    # 모든 모닉 다항식에 대해: 기약 iff 낮은 차수 모닉 두 개의 곱으로 나타나지 않음
    ctx = find_primitive_polynomial(p, s)
    elements = _elements(ctx)
    monic = {d: list(_monic(ctx, d, elements)) for d in range(1, max_degree)}
    for degree in range(1, max_degree + 1):
        reducible = {
            canonical_key(poly_mul(a, b))
            for low in range(1, degree // 2 + 1)
            for a in monic[low]
            for b in monic[degree - low]
        }
        for f in _monic(ctx, degree, elements):
            assert is_irreducible(f) == (canonical_key(f) not in reducible), render_poly(f)


@pytest.mark.parametrize("p, s", [(3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)])
def test_is_irreducible_matches_trial_division(p, s):
    ctx = find_primitive_polynomial(p, s)
    elements = _elements(ctx)
    divisors = [f for d in range(1, 4) for f in _monic(ctx, d, elements)]
    rng = random.Random(p * 10 + s)
    for _ in range(8):
        degree = rng.choice([4, 5, 6])
        f = make_poly(ctx, [rng.choice(elements) for _ in range(degree)] + [ctx.one()])
        has_factor = any(
            poly_divmod(f, g)[1].is_zero for g in divisors if 2 * g.degree <= degree
        )
        assert is_irreducible(f) == (not has_factor), render_poly(f)


def test_oracle_factor(oracle_service):
    fz = oracle_service.oracle_factor(7, 2)
    assert fz.engine == "oracle"
    assert fz.case.tag == CaseTag.W_ODD_SIMPLE
    assert fz.total == 3
    assert fz.counts_by_degree == {1: 1, 3: 2}
    assert [render_poly(f.poly) for f in fz.factors] == ["x + 1", "x^3 + x + 1", "x^3 + x^2 + 1"]
    assert oracle_service.verify_factorization(fz).accepted


def test_verify_detects_missing_factor(oracle_service):
    fz = oracle_service.oracle_factor(7, 2)
    broken = replace(fz, factors=fz.factors[1:], total=2)
    report = oracle_service.verify_factorization(broken)
    assert not report.accepted
    assert "product_ok" in report.failed_checks()
    assert "count_match" in report.failed_checks()
    assert report.all_irreducible


def test_compare_factorizations(oracle_service):
    fz = oracle_service.oracle_factor(7, 2)
    assert oracle_service.compare_factorizations(fz, fz) == ([], [])
    only_left, only_right = oracle_service.compare_factorizations(fz, replace(fz, factors=fz.factors[:1]))
    assert [render_poly(f.poly) for f in only_left] == ["x^3 + x + 1", "x^3 + x^2 + 1"]
    assert only_right == []


def test_oracle_method_coset_factors(field_service):
    method = OracleMethod()
    big = find_primitive_polynomial(2, 3)
    embedding = field_service.get_embedding(big, field_service.get_fq_context(2, 1))
    powers = method.root_powers(big, 7)
    assert len(set(powers)) == 7
    assert powers[0] == big.one()
    factors = method.coset_factors(7, 2, embedding)
    assert sorted(render_poly(f.poly) for f in factors) == ["x + 1", "x^3 + x + 1", "x^3 + x^2 + 1"]
    assert all(f.poly.ctx == embedding.fq for f in factors)
    with pytest.raises(ValidationException):
        method.root_powers(big, 5)
