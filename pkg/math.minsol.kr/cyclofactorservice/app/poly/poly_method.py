"""
다항식 연산
소체(degree 1) 컨텍스트는 sympy galoistools 로 위임하고, 확대체는 원소 연산으로 직접 계산한다.
"""
from typing import List, Optional, Sequence, Union

from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_div, gf_gcd, gf_mul, gf_pow_mod, gf_sub

from app.field.field_dataset import FieldContext, FieldElement, SubfieldEmbedding, Tower
from app.field.field_method import (
    elem_add,
    elem_inv,
    elem_mul,
    elem_neg,
    elem_pow,
    elem_sub,
    to_fq_element,
)
from app.poly.poly_dataset import CanonicalKey, Polynomial
from common.exceptions import FieldArithmeticException


# ---------------------------------------------------------------------------
# 생성
# ---------------------------------------------------------------------------

def make_poly(ctx: FieldContext, coeffs: Sequence[FieldElement]) -> Polynomial:
    values = list(coeffs)
    while values and values[-1].is_zero():
        values.pop()
    return Polynomial(ctx, tuple(values))


def poly_from_ints(ctx: FieldContext, values: Sequence[int]) -> Polynomial:
    """F_p 정수 계수 (상수항 먼저)"""
    return make_poly(ctx, [ctx.constant(c) for c in values])


def poly_zero(ctx: FieldContext) -> Polynomial:
    return Polynomial(ctx, ())


def poly_one(ctx: FieldContext) -> Polynomial:
    return Polynomial(ctx, (ctx.one(),))


def poly_x(ctx: FieldContext) -> Polynomial:
    return Polynomial(ctx, (ctx.zero(), ctx.one()))


def poly_monomial(ctx: FieldContext, k: int, c: Optional[FieldElement] = None) -> Polynomial:
    lead = ctx.one() if c is None else c
    return make_poly(ctx, [ctx.zero()] * k + [lead])


def poly_x_pow_minus_one(ctx: FieldContext, n: int) -> Polynomial:
    """x^n - 1"""
    coeffs = [ctx.zero()] * (n + 1)
    coeffs[0] = ctx.constant(-1)
    coeffs[n] = elem_add(ctx, coeffs[n], ctx.one())
    return make_poly(ctx, coeffs)


def poly_binomial(ctx: FieldContext, t: int, a: FieldElement) -> Polynomial:
    """x^t - a"""
    coeffs = [ctx.zero()] * (t + 1)
    coeffs[0] = elem_neg(ctx, a)
    coeffs[t] = ctx.one()
    return make_poly(ctx, coeffs)


def poly_trinomial(ctx: FieldContext, t: int, b: FieldElement, c: FieldElement) -> Polynomial:
    """x^{2t} - b x^t + c"""
    coeffs = [ctx.zero()] * (2 * t + 1)
    coeffs[0] = c
    coeffs[t] = elem_neg(ctx, b)
    coeffs[2 * t] = ctx.one()
    return make_poly(ctx, coeffs)


# ---------------------------------------------------------------------------
# galoistools 변환 (소체 전용)
# ---------------------------------------------------------------------------

def _is_prime_field(ctx: FieldContext) -> bool:
    return ctx.degree == 1


def _to_ints(f: Polynomial) -> List[int]:
    return [c.coords[0] for c in reversed(f.coeffs)]


def _from_ints(ctx: FieldContext, values: Sequence[int]) -> Polynomial:
    return poly_from_ints(ctx, [int(c) for c in reversed(values)])


def _same_ctx(a: Polynomial, b: Polynomial) -> FieldContext:
    if a.ctx != b.ctx:
        raise FieldArithmeticException("context mismatch between polynomials")
    return a.ctx


# ---------------------------------------------------------------------------
# 환 연산
# ---------------------------------------------------------------------------

def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    ctx = _same_ctx(a, b)
    size = max(len(a.coeffs), len(b.coeffs))
    return make_poly(ctx, [elem_add(ctx, a.coeff(k), b.coeff(k)) for k in range(size)])


def poly_sub(a: Polynomial, b: Polynomial) -> Polynomial:
    ctx = _same_ctx(a, b)
    size = max(len(a.coeffs), len(b.coeffs))
    return make_poly(ctx, [elem_sub(ctx, a.coeff(k), b.coeff(k)) for k in range(size)])


def poly_neg(a: Polynomial) -> Polynomial:
    return make_poly(a.ctx, [elem_neg(a.ctx, c) for c in a.coeffs])


def poly_scale(a: Polynomial, c: FieldElement) -> Polynomial:
    return make_poly(a.ctx, [elem_mul(a.ctx, x, c) for x in a.coeffs])


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    """교과서식 곱셈 (0 계수는 건너뜀)"""
    ctx = _same_ctx(a, b)
    if a.is_zero or b.is_zero:
        return poly_zero(ctx)
    if _is_prime_field(ctx):
        return _from_ints(ctx, gf_mul(_to_ints(a), _to_ints(b), ctx.p, ZZ))
    result = [ctx.zero()] * (len(a.coeffs) + len(b.coeffs) - 1)
    right = [(j, y) for j, y in enumerate(b.coeffs) if not y.is_zero()]
    for i, x in enumerate(a.coeffs):
        if x.is_zero():
            continue
        for j, y in right:
            result[i + j] = elem_add(ctx, result[i + j], elem_mul(ctx, x, y))
    return make_poly(ctx, result)


def poly_divmod(a: Polynomial, b: Polynomial):
    """(몫, 나머지)"""
    ctx = _same_ctx(a, b)
    if b.is_zero:
        raise FieldArithmeticException("division by zero polynomial")
    if _is_prime_field(ctx):
        quotient, remainder = gf_div(_to_ints(a), _to_ints(b), ctx.p, ZZ)
        return _from_ints(ctx, quotient), _from_ints(ctx, remainder)
    remainder = list(a.coeffs)
    if len(remainder) < len(b.coeffs):
        return poly_zero(ctx), a
    inverse_lead = elem_inv(ctx, b.leading)
    shift_max = len(remainder) - len(b.coeffs)
    quotient = [ctx.zero()] * (shift_max + 1)
    for shift in range(shift_max, -1, -1):
        top = remainder[shift + b.degree]
        if top.is_zero():
            continue
        factor = elem_mul(ctx, top, inverse_lead)
        quotient[shift] = factor
        for k, c in enumerate(b.coeffs):
            if not c.is_zero():
                remainder[shift + k] = elem_sub(ctx, remainder[shift + k], elem_mul(ctx, factor, c))
    return make_poly(ctx, quotient), make_poly(ctx, remainder[: b.degree])


def poly_rem(a: Polynomial, b: Polynomial) -> Polynomial:
    return poly_divmod(a, b)[1]


def poly_monic(a: Polynomial) -> Polynomial:
    if a.is_zero:
        return a
    return poly_scale(a, elem_inv(a.ctx, a.leading))


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """모닉 최대공약수 (gcd(0, 0) = 0)"""
    ctx = _same_ctx(a, b)
    if _is_prime_field(ctx):
        return _from_ints(ctx, gf_gcd(_to_ints(a), _to_ints(b), ctx.p, ZZ))
    while not b.is_zero:
        a, b = b, poly_rem(a, b)
    return poly_monic(a)


def poly_pow(base: Polynomial, e: int) -> Polynomial:
    result = poly_one(base.ctx)
    square = base
    while e:
        if e & 1:
            result = poly_mul(result, square)
        e >>= 1
        if e:
            square = poly_mul(square, square)
    return result


def pow_mod(base: Polynomial, e: int, m: Polynomial) -> Polynomial:
    """base^e mod m (제곱-곱셈)"""
    ctx = _same_ctx(base, m)
    if m.degree < 1:
        raise FieldArithmeticException("pow_mod: modulus must be nonconstant")
    if _is_prime_field(ctx):
        return _from_ints(ctx, gf_pow_mod(_to_ints(base), e, _to_ints(m), ctx.p, ZZ))
    result = poly_one(ctx)
    square = poly_rem(base, m)
    while e:
        if e & 1:
            result = poly_rem(poly_mul(result, square), m)
        e >>= 1
        if e:
            square = poly_rem(poly_mul(square, square), m)
    return result


def poly_equal_x_pow_minus_one(f: Polynomial, n: int) -> bool:
    """f = x^n - 1 인지"""
    if _is_prime_field(f.ctx):
        expected = [1] + [0] * (n - 1) + [f.ctx.p - 1]
        return _to_ints(f) == expected
    return f == poly_x_pow_minus_one(f.ctx, n)


def poly_sub_x(f: Polynomial) -> Polynomial:
    """f - x"""
    if _is_prime_field(f.ctx):
        return _from_ints(f.ctx, gf_sub(_to_ints(f), [1, 0], f.ctx.p, ZZ))
    return poly_sub(f, poly_x(f.ctx))


# ---------------------------------------------------------------------------
# Frobenius 와 부분체
# ---------------------------------------------------------------------------

def frobenius_coeffs(f: Polynomial, q: int) -> Polynomial:
    """f^sigma: 각 계수를 q 제곱"""
    return make_poly(f.ctx, [elem_pow(f.ctx, c, q) for c in f.coeffs])


def to_fq_poly(f: Polynomial, source: Union[Tower, SubfieldEmbedding]) -> Polynomial:
    """큰 체 위 다항식을 표준 F_q 컨텍스트 다항식으로 (계수가 부분체에 있어야 함)"""
    embedding = source.embedding if isinstance(source, Tower) else source
    return make_poly(embedding.fq, [to_fq_element(embedding, c) for c in f.coeffs])


# ---------------------------------------------------------------------------
# 표준 키와 문자열
# ---------------------------------------------------------------------------

def canonical_key(f: Polynomial, tower: Optional[Union[Tower, SubfieldEmbedding]] = None) -> CanonicalKey:
    """차수와 계수 부호(최고차항 -> 상수항)로 만든 키"""
    if tower is not None:
        f = to_fq_poly(f, tower)
    p = f.ctx.p
    return CanonicalKey(f.degree, tuple(c.code(p) for c in reversed(f.coeffs)))


def _render_coeff(ctx: FieldContext, c: FieldElement) -> str:
    return str(c.coords[0]) if ctx.degree == 1 else c.render()


def render_poly(f: Polynomial) -> str:
    """예: "x^3 + x + 1", "x^2 + (2,1)*x + (0,1)" """
    if f.is_zero:
        return "0"
    ctx = f.ctx
    one = ctx.one()
    terms = []
    for k in range(f.degree, -1, -1):
        c = f.coeffs[k]
        if c.is_zero():
            continue
        if k == 0:
            terms.append(_render_coeff(ctx, c))
            continue
        power = "x" if k == 1 else f"x^{k}"
        terms.append(power if c == one else f"{_render_coeff(ctx, c)}*{power}")
    return " + ".join(terms)
