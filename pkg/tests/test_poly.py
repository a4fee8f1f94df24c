from fractions import Fraction

import pytest
import sympy
from sympy.polys.subresultants_qq_zz import sylvester
from hypothesis import given, strategies as st

from galcremona.arith import QQ, RationalFunctionField, make_cyclotomic
from galcremona.poly import (QuotientAlgebra, ReducibleModulusError, UniPoly, algebra_substitute,
                             certainly_coprime, discriminant, multiplicities, odd_multiplicity_part,
                             poly_gcd,
                             poly_xgcd, resultant, square_root_part, squarefree_part,
                             yun_decomposition)

from helpers import X as SX, from_sympy_ratfunc, parse_x, small_fracs, unipolys

K = RationalFunctionField(make_cyclotomic(1), "t")
KW = RationalFunctionField(make_cyclotomic(3), "t")


def qpoly(*coeffs):
    return UniPoly([Fraction(c) for c in coeffs], QQ)


def test_xgcd_bezout_identity():
    f = qpoly(-1, 0, 0, 0, 1)        # X^4 - 1
    g = qpoly(1, 1, 1, 1)            # X^3 + X^2 + X + 1
    d, u, v = poly_xgcd(f, g)
    assert d == g
    assert u * f + v * g == d


def test_xgcd_coprime_gives_inverse():
    # inverse of X + 1 modulo X^3 - 2 is (X^2 - X + 1)/3  (sympy.invert)
    d, u, _ = poly_xgcd(qpoly(1, 1), qpoly(-2, 0, 0, 1))
    assert d == qpoly(1)
    assert u == qpoly(Fraction(1, 3), Fraction(-1, 3), Fraction(1, 3))


def test_squarefree_and_yun():
    f = qpoly(1, -1) ** 3 * qpoly(2, 1) ** 2 * qpoly(0, 1)
    assert squarefree_part(f) == (qpoly(1, -1) * qpoly(2, 1) * qpoly(0, 1)).monic()
    yun = yun_decomposition(f * 5)
    assert yun == [qpoly(0, 1), qpoly(2, 1), qpoly(-1, 1)]
    assert multiplicities(f) == [1, 2, 3]
    assert odd_multiplicity_part(f) == qpoly(0, 1) * qpoly(-1, 1)


def test_square_root_part():
    f = qpoly(1, 1) ** 2 * qpoly(-3, 0, 1) ** 2 * 7
    assert square_root_part(f) == qpoly(1, 1) * qpoly(-3, 0, 1)
    assert square_root_part(qpoly(5)) == qpoly(1)
    with pytest.raises(ValueError):
        square_root_part(qpoly(0, 1) ** 3)


def test_resultant_examples():
    # values from sympy.resultant
    assert resultant(parse_x("X^3 - t", K), parse_x("3*X^2", K)) == 27 * K.t ** 2
    r = resultant(parse_x("X^2 + t*X + 1", K), parse_x("X^3 - 2*X + t", K))
    assert str(r) == "-t^4 + 4*t^2 + 9"


def test_resultant_of_constants_raises():
    with pytest.raises(ValueError):
        resultant(qpoly(2), qpoly(3))


@pytest.mark.parametrize("text, expected", [
    ("X^3 - 3*t*X - t^2 - t", "-27*t^4 + 54*t^3 - 27*t^2"),
    ("X^3 - X - t", "-27*t^2 + 4"),
    ("X^3 - t", "-27*t^2"),
    ("X^3 + 3/t*X^2 + 3/t^2*X + (1 - t)/t^3", "-27/(t^4)"),
    ("X^4 - 8*X^3 + (-6*t^4 + 18)*X^2 + (-4*t^8 + 12*t^4 - 16)*X - t^12 + 4*t^8 - 6*t^4 + 5",
     "-256*t^36 - 768*t^32 - 768*t^28 - 256*t^24"),
])
def test_discriminant_oracle(text, expected):
    assert str(discriminant(parse_x(text, K))) == expected


def test_discriminant_matches_depressed_cubic_formula():
    t = K.t
    for pp, qq in ((-3 * t, -(t * t + t)), (-K.one, -t), (K.zero, -t)):
        h = UniPoly([qq, pp, K.zero, K.one], K)
        assert discriminant(h) == -4 * pp ** 3 - 27 * qq ** 2


def test_quotient_algebra_inverse_and_reducible_modulus():
    h = parse_x("X^3 - t", K)
    alg = QuotientAlgebra(h)
    x = alg.x
    assert x ** 3 == alg(K.t)
    assert x.inverse() * x == alg.one
    assert x.inverse() == x * x / K.t
    red = QuotientAlgebra(parse_x("X^2 - t^2", K))
    with pytest.raises(ReducibleModulusError):
        (red.x - K.t).inverse()
    with pytest.raises(ZeroDivisionError):
        alg.zero.inverse()


def test_algebra_substitute_root():
    h = parse_x("X^3 - X - t", K)
    alg = QuotientAlgebra(h)
    assert not algebra_substitute(h, alg.x)


# -- sympy cross-check on random integer polynomials -------------------------

int_polys = st.lists(st.integers(-5, 5), min_size=2, max_size=5).filter(lambda c: c[-1] != 0)


def _sym(coeffs):
    return sum(c * SX ** k for k, c in enumerate(coeffs))


@given(int_polys, int_polys)
def test_resultant_agrees_with_sylvester_oracle(a, b):
    # sympy.resultant itself has sign slips (e.g. Res(X + 1, X^3 + X) = 2); the
    # Sylvester determinant is the convention we pin
    ours = resultant(qpoly(*a), qpoly(*b))
    assert ours == Fraction(int(sylvester(_sym(a), _sym(b), SX).det()))


def test_resultant_is_product_over_roots():
    # Res(f, g) = lc(f)^deg g * prod g(roots of f): f = X + 1, g = X^3 + X gives g(-1) = -2
    assert resultant(qpoly(1, 1), qpoly(0, 1, 0, 1)) == -2
    assert resultant(qpoly(1, 1), qpoly(0, 0, 0, 1)) == -1


@given(int_polys, int_polys)
def test_gcd_agrees_with_sympy(a, b):
    g = poly_gcd(qpoly(*a), qpoly(*b))
    sg = sympy.Poly(sympy.gcd(_sym(a), _sym(b)), SX).monic()
    assert g == qpoly(*[Fraction(str(c)) for c in reversed(sg.all_coeffs())])


# -- resultant multiplicativity over k'(t) ------------------------------------

@given(unipolys(K, 2, min_degree=1), unipolys(K, 2, min_degree=1), unipolys(K, 2, min_degree=1))
def test_resultant_multiplicative_over_q_t(f, g, h):
    assert resultant(f * g, h) == resultant(f, h) * resultant(g, h)
    sign = -1 if (f.degree * h.degree) % 2 else 1
    assert resultant(h, f) == resultant(f, h) * sign


@given(unipolys(KW, 2, min_degree=1), unipolys(KW, 2, min_degree=1), unipolys(KW, 1, min_degree=1))
def test_resultant_multiplicative_over_q_omega_t(f, g, h):
    assert resultant(f * g, h) == resultant(f, h) * resultant(g, h)
    assert resultant(h, f * g) == resultant(h, f) * resultant(h, g)


@given(unipolys(K, 2, min_degree=1), unipolys(K, 1, min_degree=0).filter(bool))
def test_discriminant_with_repeated_factor_vanishes(f, g):
    assert not discriminant(f * f * g)


@given(unipolys(KW, 2, min_degree=1), unipolys(KW, 2, min_degree=1),
       unipolys(KW, 1, min_degree=1))
def test_modular_coprimality_certificate_is_sound(f, g, h):
    if certainly_coprime(f, g):
        assert resultant(f, g)
    assert not certainly_coprime(f * h, g * h)


def test_modular_coprimality_on_rationals():
    assert certainly_coprime(qpoly(1, 1), qpoly(-1, 1))
    assert not certainly_coprime(qpoly(-1, 0, 1), qpoly(1, 1))
    assert poly_gcd(qpoly(2, 3), qpoly(0, 5, 1)) == qpoly(1)
