"""Shared strategies and sympy bridges for the test suite."""

from fractions import Fraction

import sympy
from hypothesis import strategies as st

from galcremona.arith import RationalFunctionField, make_cyclotomic
from galcremona.cremona import Moebius
from galcremona.parser import to_ratfunc, to_unipoly
from galcremona.poly import UniPoly

T, Z, X = sympy.symbols("t z X")

small_fracs = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


def nf_elems(nf, nonzero=False):
    s = st.lists(small_fracs, min_size=nf.degree, max_size=nf.degree).map(nf.element)
    return s.filter(bool) if nonzero else s


def const_polys(nf, max_degree=3):
    return st.lists(nf_elems(nf), min_size=0, max_size=max_degree + 1).map(
        lambda cs: UniPoly(cs, nf))


def ratfuncs(K, nonzero=False, max_degree=2):
    num = const_polys(K.nf, max_degree)
    den = const_polys(K.nf, max_degree).filter(bool)
    s = st.builds(lambda n, d: K(n) / K(d), num, den)
    return s.filter(bool) if nonzero else s


def unipolys(K, max_degree=3, coeff_degree=1, min_degree=0):
    """Polynomials over K of degree in [min_degree, max_degree] (or zero if min_degree is 0)."""
    if min_degree == 0:
        return st.lists(ratfuncs(K, max_degree=coeff_degree), min_size=1,
                        max_size=max_degree + 1).map(lambda cs: UniPoly(cs, K))
    low = st.lists(ratfuncs(K, max_degree=coeff_degree), min_size=min_degree,
                   max_size=max_degree)
    return st.builds(lambda cs, lead: UniPoly(cs + [lead], K), low,
                     ratfuncs(K, nonzero=True, max_degree=coeff_degree))


def moebius_matrices(K, max_degree=2):
    """Projective matrices; polynomial entries lose no generality up to scale."""
    entry = st.lists(st.integers(-3, 3), max_size=max_degree + 1).map(
        lambda cs: K(UniPoly([K.nf(a) for a in cs], K.nf)))
    return st.tuples(entry, entry, entry, entry).filter(
        lambda e: bool(e[0] * e[3] - e[1] * e[2])).map(lambda e: Moebius(*e, K))


def field_q(n=1):
    return RationalFunctionField(make_cyclotomic(n), "t")


def to_sympy(text: str):
    """Our canonical text -> sympy expression (z stays a symbol)."""
    return sympy.sympify(text.replace("^", "**"), locals={"t": T, "z": Z, "X": X})


def from_sympy_ratfunc(expr, K):
    return to_ratfunc(str(sympy.together(expr)).replace("**", "^"), K)


def from_sympy_poly_in_x(expr, K):
    """Expand in X and parse the X-coefficients over K."""
    p = sympy.Poly(sympy.expand(expr), X)
    out = UniPoly((), K)
    for (k,), c in p.terms():
        out = out + UniPoly.monomial(from_sympy_ratfunc(c, K), k, K)
    return out


def parse_x(text, K):
    return to_unipoly(text, K)
