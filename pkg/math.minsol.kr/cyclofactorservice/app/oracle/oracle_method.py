"""
오라클 기본 연산
원분 잉여류, 잉여류 개수 공식, 일반 기약성 판정(Rabin).
"""
import logging
from math import gcd
from typing import List, Optional, Sequence

from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p

from app.explicit.explicit_dataset import FactorSource, LabeledFactor
from app.field.field_dataset import FieldContext, FieldElement, SubfieldEmbedding
from app.field.field_method import elem_mul, elem_neg, elem_pow
from app.number.number_method import divisors, euler_phi, factorize, mult_order
from app.oracle.oracle_dataset import CosetPartition
from app.poly.poly_dataset import Polynomial
from app.poly.poly_method import (
    make_poly,
    poly_gcd,
    poly_monic,
    poly_mul,
    poly_one,
    poly_sub_x,
    poly_x,
    pow_mod,
    to_fq_poly,
)
from common.exceptions import ValidationException


def cyclotomic_cosets(n: int, q: int) -> CosetPartition:
    """{0, ..., n-1} 를 j -> qj mod n 궤도로 분할"""
    if n < 1:
        raise ValidationException(f"cyclotomic_cosets: n must be >= 1, got {n}")
    if gcd(n, q) != 1:
        raise ValidationException(f"cyclotomic_cosets: gcd({n}, {q}) != 1")
    seen = [False] * n
    cosets = []
    for start in range(n):
        if seen[start]:
            continue
        orbit = []
        j = start
        while not seen[j]:
            seen[j] = True
            orbit.append(j)
            j = (j * q) % n
        cosets.append(tuple(sorted(orbit)))
    return CosetPartition(n=n, q=q, cosets=tuple(cosets))


def coset_count(n: int, q: int) -> int:
    """sum_{d | n} phi(d) / ord_d(q)"""
    if gcd(n, q) != 1:
        raise ValidationException(f"coset_count: gcd({n}, {q}) != 1")
    return sum(euler_phi(d) // mult_order(q, d) for d in divisors(n))


def is_irreducible(f: Polynomial, q: Optional[int] = None) -> bool:
    """Rabin 판정: x^{q^d} = x mod f 이고 d 의 모든 소인수 r 에 대해 gcd(x^{q^{d/r}} - x, f) = 1"""
    ctx = f.ctx
    if q is None:
        q = ctx.order
    if q != ctx.order:
        raise ValidationException(f"is_irreducible: q = {q} does not match GF({ctx.p}^{ctx.degree})")
    d = f.degree
    if d < 1:
        return False
    if d == 1:
        return True
    f = poly_monic(f)
    if ctx.degree == 1:
        return bool(gf_irreducible_p([c.coords[0] for c in reversed(f.coeffs)], ctx.p, ZZ))

    frobenius = {0: poly_x(ctx)}
    h = frobenius[0]
    for k in range(1, d + 1):
        h = pow_mod(h, q, f)
        frobenius[k] = h
    if frobenius[d] != poly_x(ctx):
        return False
    for r in factorize(d).primes:
        if poly_gcd(poly_sub_x(frobenius[d // r]), f).degree != 0:
            return False
    return True


class OracleMethod(object):
    """잉여류마다 prod_{i in C} (x - beta^i) 를 만들어 F_q 로 내린다"""

    def __init__(self):
        self.logger = logging.getLogger(__name__)

    def root_powers(self, big: FieldContext, n: int) -> List[FieldElement]:
        """beta^0, ..., beta^{n-1} (beta = gamma^{(|big|-1)/n} 는 1 의 원시 n 제곱근)"""
        if big.group_order % n != 0:
            raise ValidationException(f"root_powers: {n} does not divide {big.group_order}")
        beta = elem_pow(big, big.gen(), big.group_order // n)
        powers = [big.one()]
        for _ in range(1, n):
            powers.append(elem_mul(big, powers[-1], beta))
        return powers

    def coset_factor(
        self, coset: Sequence[int], powers: Sequence[FieldElement], embedding: SubfieldEmbedding
    ) -> LabeledFactor:
        big = embedding.big
        poly = poly_one(big)
        for i in coset:
            poly = poly_mul(poly, make_poly(big, [elem_neg(big, powers[i]), big.one()]))
        fq_poly = to_fq_poly(poly, embedding)
        return LabeledFactor(poly=fq_poly, degree=fq_poly.degree, source=FactorSource.COSET)

    def coset_factors(self, n: int, q: int, embedding: SubfieldEmbedding) -> List[LabeledFactor]:
        powers = self.root_powers(embedding.big, n)
        partition = cyclotomic_cosets(n, q)
        self.logger.debug(f"잉여류 {len(partition)}개로 최소 다항식 계산: n={n}, q={q}")
        return [self.coset_factor(coset, powers, embedding) for coset in partition.cosets]
