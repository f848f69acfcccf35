"""
유한체 연산
원시 다항식 탐색, 원소 연산, 부분체 좌표 변환, 탑(tower) 구성.
큰 체의 곱셈/거듭제곱은 sympy galoistools, 작은 체는 exp/log 표를 쓴다.
"""
import logging
from functools import lru_cache
from math import gcd
from typing import Optional, Sequence, Tuple, Union

from sympy import GF, isprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p, gf_mul, gf_pow_mod, gf_rem
from sympy.polys.matrices import DomainMatrix

from app.config import get_config
from app.field.field_dataset import FieldContext, FieldElement, SubfieldEmbedding, Tower
from app.number.number_method import factorize
from common.exceptions import (
    FieldArithmeticException,
    ResourceBoundException,
    SubfieldException,
    ValidationException,
)

logger = logging.getLogger(__name__)


def field_bound(bound: Optional[int] = None) -> int:
    """체 크기 상한 (기본값은 설정 CYCLOFACTOR_FIELD_BOUND)"""
    return bound if bound is not None else get_config().field_bound


def check_field_size(p: int, d: int, bound: Optional[int] = None) -> None:
    limit = field_bound(bound)
    if p ** d > limit:
        raise ResourceBoundException(f"GF({p}^{d}) exceeds the field size bound {limit}")


# ---------------------------------------------------------------------------
# 원시 다항식
# ---------------------------------------------------------------------------

def find_primitive_polynomial(p: int, d: int, bound: Optional[int] = None) -> FieldContext:
    """정수 부호화(상수항이 최하위 자리) 순서로 첫 번째 모닉 원시 다항식"""
    if not isprime(p):
        raise ValidationException(f"{p} is not prime")
    if d < 1:
        raise ValidationException(f"extension degree must be >= 1, got {d}")
    check_field_size(p, d, bound)
    return _search_primitive(p, d)


@lru_cache(maxsize=None)
def _search_primitive(p: int, d: int) -> FieldContext:
    group_order = p ** d - 1
    primes = factorize(group_order).primes
    x = [1, 0]
    logger.info(f"GF({p}^{d}) 원시 다항식 탐색 시작")
    for code in range(p ** d, 2 * p ** d):
        coeffs = [(code // p ** i) % p for i in range(d + 1)]
        if coeffs[0] == 0:
            continue
        modulus = list(reversed(coeffs))
        if not gf_irreducible_p(modulus, p, ZZ):
            continue
        if all(_strip_ints(gf_pow_mod(x, group_order // r, modulus, p, ZZ)) != [1] for r in primes):
            context = FieldContext(p=p, degree=d, modulus=tuple(coeffs), generator_check=True)
            logger.info(f"원시 다항식 선택: {context.render()}")
            return context
    raise FieldArithmeticException(f"no primitive polynomial of degree {d} over GF({p})")


# ---------------------------------------------------------------------------
# 원소 연산
# ---------------------------------------------------------------------------

def _strip_ints(values: Sequence[int]) -> list:
    return [int(c) for c in values]


def _to_gf(a: FieldElement) -> list:
    values = list(reversed(a.coords))
    while values and values[0] == 0:
        values.pop(0)
    return values


def _from_gf(ctx: FieldContext, values: Sequence[int]) -> FieldElement:
    return ctx.element(reversed(_strip_ints(values)))


def _check(ctx: FieldContext, *elements: FieldElement) -> None:
    for a in elements:
        if len(a.coords) != ctx.degree:
            raise FieldArithmeticException(
                f"context mismatch: element of length {len(a.coords)} in GF({ctx.p}^{ctx.degree})"
            )


def elem_add(ctx: FieldContext, a: FieldElement, b: FieldElement) -> FieldElement:
    _check(ctx, a, b)
    p = ctx.p
    return FieldElement(tuple((x + y) % p for x, y in zip(a.coords, b.coords)))


def elem_sub(ctx: FieldContext, a: FieldElement, b: FieldElement) -> FieldElement:
    _check(ctx, a, b)
    p = ctx.p
    return FieldElement(tuple((x - y) % p for x, y in zip(a.coords, b.coords)))


def elem_neg(ctx: FieldContext, a: FieldElement) -> FieldElement:
    _check(ctx, a)
    p = ctx.p
    return FieldElement(tuple((-x) % p for x in a.coords))


def elem_mul(ctx: FieldContext, a: FieldElement, b: FieldElement) -> FieldElement:
    _check(ctx, a, b)
    if a.is_zero() or b.is_zero():
        return ctx.zero()
    tables = ctx.log_tables
    if tables is not None:
        exp, log = tables
        return exp[(log[a.coords] + log[b.coords]) % ctx.group_order]
    product = gf_rem(gf_mul(_to_gf(a), _to_gf(b), ctx.p, ZZ), ctx.gf_modulus, ctx.p, ZZ)
    return _from_gf(ctx, product)


def elem_pow(ctx: FieldContext, a: FieldElement, e: int) -> FieldElement:
    """a^e (지수는 군 위수로 줄인다, 음수면 역원)"""
    _check(ctx, a)
    if a.is_zero():
        if e < 0:
            raise FieldArithmeticException("division by zero")
        return ctx.one() if e == 0 else ctx.zero()
    e %= ctx.group_order
    if e == 0:
        return ctx.one()
    tables = ctx.log_tables
    if tables is not None:
        exp, log = tables
        return exp[(log[a.coords] * e) % ctx.group_order]
    return _from_gf(ctx, gf_pow_mod(_to_gf(a), e, ctx.gf_modulus, ctx.p, ZZ))


def elem_inv(ctx: FieldContext, a: FieldElement) -> FieldElement:
    _check(ctx, a)
    if a.is_zero():
        raise FieldArithmeticException("division by zero")
    return elem_pow(ctx, a, ctx.group_order - 1)


def elem_div(ctx: FieldContext, a: FieldElement, b: FieldElement) -> FieldElement:
    return elem_mul(ctx, a, elem_inv(ctx, b))


def elem_order(ctx: FieldContext, a: FieldElement) -> int:
    """곱셈 위수 (인수분해된 군 위수에서 지수를 줄인다)"""
    if a.is_zero():
        raise FieldArithmeticException("zero has no multiplicative order")
    order = ctx.group_order
    one = ctx.one()
    for r, e in factorize(order).factors:
        for _ in range(e):
            if elem_pow(ctx, a, order // r) == one:
                order //= r
            else:
                break
    return order


def in_subfield(ctx: FieldContext, a: FieldElement, d: int) -> bool:
    """a^{p^d} = a 이면 차수 d 부분체 원소"""
    return elem_pow(ctx, a, ctx.p ** d) == a if not a.is_zero() else True


# ---------------------------------------------------------------------------
# 부분체 좌표
# ---------------------------------------------------------------------------

def build_embedding(big: FieldContext, fq: FieldContext) -> SubfieldEmbedding:
    """big 안에서 표준 modulus 의 근 rho 를 찾고 좌표 풀이를 준비한다"""
    if big.p != fq.p or big.degree % fq.degree != 0:
        raise FieldArithmeticException(
            f"GF({fq.p}^{fq.degree}) is not a subfield of GF({big.p}^{big.degree})"
        )
    q = fq.order
    s = fq.degree
    theta = elem_pow(big, big.gen(), big.group_order // (q - 1))
    rho = None
    for j in range(1, q):
        if gcd(j, q - 1) != 1:
            continue
        candidate = elem_pow(big, theta, j)
        if _evaluate(big, fq.modulus, candidate).is_zero():
            rho = candidate
            break
    if rho is None:
        raise SubfieldException(f"no root of {fq.render()} among the powers of theta")

    basis = [big.one()]
    for _ in range(1, s):
        basis.append(elem_mul(big, basis[-1], rho))

    domain = GF(big.p, symmetric=False)
    # 열이 기저 원소인 D x s 행렬의 전치를 rref 해서 독립인 행(pivot)을 고른다
    transposed = DomainMatrix(
        [[domain(b.coords[r]) for r in range(big.degree)] for b in basis],
        (s, big.degree),
        domain,
    )
    _, pivots = transposed.rref()
    pivots = tuple(int(r) for r in pivots)
    if len(pivots) != s:
        raise SubfieldException("subfield basis is not linearly independent over F_p")
    square = DomainMatrix(
        [[domain(basis[i].coords[r]) for i in range(s)] for r in pivots],
        (s, s),
        domain,
    )
    inverse = tuple(
        tuple(int(v) % big.p for v in row) for row in square.inv().to_Matrix().tolist()
    )
    return SubfieldEmbedding(
        big=big, fq=fq, rho=rho, basis=tuple(basis), pivots=pivots, inverse=inverse
    )


def _evaluate(ctx: FieldContext, coeffs: Sequence[int], point: FieldElement) -> FieldElement:
    acc = ctx.zero()
    for c in reversed(coeffs):
        acc = elem_add(ctx, elem_mul(ctx, acc, point), ctx.constant(c))
    return acc


def _embedding_of(source: Union[Tower, SubfieldEmbedding]) -> SubfieldEmbedding:
    return source.embedding if isinstance(source, Tower) else source


def to_fq_coords(source: Union[Tower, SubfieldEmbedding], e: FieldElement) -> Tuple[int, ...]:
    """F_q 부분체 원소 e 의 기저 1, rho, ..., rho^{s-1} 좌표"""
    embedding = _embedding_of(source)
    big = embedding.big
    p = big.p
    _check(big, e)
    rhs = [e.coords[r] for r in embedding.pivots]
    coords = tuple(
        sum(m * v for m, v in zip(row, rhs)) % p for row in embedding.inverse
    )
    if from_fq_coords(embedding, coords) != e:
        raise SubfieldException(f"element {e.render()} is not fixed by the q-power map")
    return coords


def from_fq_coords(source: Union[Tower, SubfieldEmbedding], coords: Sequence[int]) -> FieldElement:
    """좌표의 선형결합 sum c_i rho^i"""
    embedding = _embedding_of(source)
    big = embedding.big
    p = big.p
    values = [0] * big.degree
    for c, b in zip(coords, embedding.basis):
        if c:
            for r, v in enumerate(b.coords):
                values[r] = (values[r] + c * v) % p
    return FieldElement(tuple(values))


def to_fq_element(source: Union[Tower, SubfieldEmbedding], e: FieldElement) -> FieldElement:
    """큰 체 원소를 표준 F_q 컨텍스트의 원소로"""
    return FieldElement(to_fq_coords(source, e))


def lift_fq_element(source: Union[Tower, SubfieldEmbedding], a: FieldElement) -> FieldElement:
    return from_fq_coords(source, a.coords)


# ---------------------------------------------------------------------------
# 탑
# ---------------------------------------------------------------------------

def build_tower(p: int, s: int, w: int, bound: Optional[int] = None) -> Tower:
    """F_q < F_{q^w} < F_{q^{2w}} 를 F_{p^{2ws}} 하나에 구성"""
    if w < 1 or s < 1:
        raise ValidationException(f"build_tower: s and w must be >= 1, got s={s}, w={w}")
    check_field_size(p, 2 * w * s, bound)
    fq = find_primitive_polynomial(p, s, bound)
    big = find_primitive_polynomial(p, 2 * w * s, bound)
    q = p ** s
    group_order = big.group_order

    pi = big.gen()
    delta = elem_pow(big, pi, q ** w + 1)
    alpha = elem_pow(big, pi, group_order // (q * q - 1))
    theta = elem_pow(big, pi, group_order // (q - 1))
    embedding = build_embedding(big, fq)
    return Tower(
        big=big,
        fq=fq,
        q=q,
        w=w,
        pi=pi,
        delta=delta,
        alpha=alpha,
        theta=theta,
        embedding=embedding,
    )
