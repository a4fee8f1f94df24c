"""Plane curves, projection from a point, and the fiber polynomial.

Conventions: projective coordinates (X : Y : Z), affine chart x = X/Z,
y = Y/Z.  A chart transform T is a 3x3 matrix acting on column vectors;
the transformed curve is Phi'(v) = Phi(T^-1 v).  After normalization the
center sits at (0 : 0 : 1) and the projection is t = y/x.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .arith import NFElem, NumberField, RatFunc, RationalFunctionField
from .mpoly import MPoly, matrix_map, pack
from .poly import (UniPoly, certainly_coprime, discriminant, poly_gcd, resultant, rref,
                   squarefree_part)


class CurveError(ValueError):
    pass


class ChartDegeneracyError(CurveError):
    """The line x = 0 through the center is a component of the curve."""


class ProjectionDegreeError(CurveError):
    """deg(pi_P) = d - m_P < 2: the projection is birational or undefined."""


Matrix = list[list[NFElem]]


def identity_matrix(nf: NumberField, n: int = 3) -> Matrix:
    return [[nf.one if i == j else nf.zero for j in range(n)] for i in range(n)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, m, p = len(a), len(b), len(b[0])
    return [[sum((a[i][k] * b[k][j] for k in range(m)), a[0][0] * 0) for j in range(p)]
            for i in range(n)]


def mat_vec(a: Matrix, v: Sequence) -> list:
    return [sum((a[i][k] * v[k] for k in range(len(v))), a[0][0] * 0) for i in range(len(a))]


def mat_inverse(a: Matrix) -> Matrix:
    n = len(a)
    nf_zero, nf_one = a[0][0] * 0, a[0][0] * 0 + 1
    aug = [list(row) + [nf_one if i == j else nf_zero for j in range(n)]
           for i, row in enumerate(a)]
    m, pivots = rref(aug, nf_zero, nf_one)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in m]


def proportional(u: Sequence, v: Sequence) -> bool:
    """u and v equal as projective points (both assumed nonzero)."""
    n = len(u)
    return all(u[i] * v[j] == u[j] * v[i] for i in range(n) for j in range(i + 1, n))


class PlaneCurve:
    """An affine model f(x, y) = 0 together with its projective closure.

    ``irreducibility`` is "certified" for curves built from certified Kummer
    data, otherwise "trusted".
    """

    def __init__(self, affine: MPoly, irreducibility: str = "trusted",
                 certificate: str = "", check: bool = True):
        if affine.nvars != 2:
            raise CurveError("affine model must be bivariate")
        self.f = affine
        self.nf: NumberField = affine.base
        self.degree = affine.total_degree
        self.irreducibility = irreducibility
        self.certificate = certificate
        if check:
            if self.degree < 3:
                raise CurveError(f"curve degree {self.degree} < 3")
            if not is_squarefree_bivariate(affine):
                raise CurveError("defining polynomial is not squarefree")
        self._form: MPoly | None = None

    @classmethod
    def from_form(cls, form: MPoly, **kw) -> "PlaneCurve":
        if form.nvars != 3 or not form.is_homogeneous():
            raise CurveError("expected a homogeneous ternary form")
        f = form.dehomogenize(2)
        if f.total_degree != form.total_degree:
            raise CurveError("Z divides the form: the line at infinity is a component")
        return cls(f, **kw)

    @property
    def form(self) -> MPoly:
        """Homogeneous form Phi(X, Y, Z) with Phi(X, Y, 1) = f."""
        if self._form is None:
            self._form = self.f.homogenize(self.degree)
        return self._form

    def contains(self, point: Sequence) -> bool:
        return not self.form.evaluate([self.nf(a) for a in point])

    def transformed(self, matrix: Matrix) -> "PlaneCurve":
        """Image of the curve under v -> matrix * v."""
        inv = mat_inverse(matrix)
        form = self.form.compose(matrix_map(inv, self.nf))
        return PlaneCurve.from_form(form, irreducibility=self.irreducibility,
                                    certificate=self.certificate, check=False)

    def same_curve(self, other: "PlaneCurve") -> bool:
        """Equal projective equations up to one nonzero scalar."""
        return forms_proportional(self.form, other.form)

    def __repr__(self):
        return f"PlaneCurve({self.f.to_str(['x', 'y'])} = 0)"


def forms_proportional(a: MPoly, b: MPoly) -> bool:
    if set(a.terms) != set(b.terms):
        return False
    if not a.terms:
        return True
    k0 = next(iter(a.terms))
    ratio = b.terms[k0] / a.terms[k0]
    return all(b.terms[k] == a.terms[k] * ratio for k in a.terms)


def is_squarefree_bivariate(f: MPoly) -> bool:
    """f in k'[x, y] has no repeated factor.

    Res_y(f, df/dy) != 0 rules out repeated factors involving y (fraction-free,
    unlike a Euclidean gcd over k'(x)); the x-content is checked separately.
    """
    nf = f.base
    K = RationalFunctionField(nf, "x")
    if f.degree_in(1) <= 0:
        uni = _univariate(f, 0, nf)
        return uni.degree <= 0 or squarefree_part(uni).degree == uni.degree
    fy = as_poly_in(f, 1, K)
    dfy = fy.derivative()
    if not certainly_coprime(fy, dfy) and not resultant(fy, dfy):
        return False
    content = UniPoly((), nf)
    for c in fy.c:
        content = poly_gcd(content, c.num) if content.c else c.num
    content = content.monic()
    return content.degree <= 0 or squarefree_part(content).degree == content.degree


def _univariate(f: MPoly, i: int, nf: NumberField) -> UniPoly:
    coeffs: dict[int, NFElem] = {}
    for exps, c in f.items():
        coeffs[exps[i]] = c
    top = max(coeffs, default=-1)
    return UniPoly([coeffs.get(k, nf.zero) for k in range(top + 1)], nf)


def as_poly_in(f: MPoly, i: int, K: RationalFunctionField) -> UniPoly:
    """Bivariate f as a polynomial in variable i over K = k'(other variable)."""
    other = 1 - i
    nf = f.base
    buckets: dict[int, dict[int, NFElem]] = {}
    for exps, c in f.items():
        buckets.setdefault(exps[i], {})[exps[other]] = c
    top = max(buckets, default=-1)
    coeffs = []
    for k in range(top + 1):
        b = buckets.get(k, {})
        deg = max(b, default=-1)
        coeffs.append(K(UniPoly([b.get(j, nf.zero) for j in range(deg + 1)], nf)))
    return UniPoly(coeffs, K)


# ---------------------------------------------------------------------------
# multiplicity and charts
# ---------------------------------------------------------------------------

def _affine_chart(form: MPoly, point: Sequence[NFElem]) -> tuple[MPoly, list[NFElem]]:
    j = 2 if point[2] else (0 if point[0] else 1)
    aff = form.dehomogenize(j)
    coords = [point[i] / point[j] for i in range(3) if i != j]
    return aff, coords


def multiplicity_at(curve: PlaneCurve, point: Sequence) -> int:
    """Multiplicity of the curve at a projective point; 0 off the curve."""
    P = [curve.nf(a) for a in point]
    if not any(P):
        raise ValueError("(0 : 0 : 0) is not a projective point")
    aff, coords = _affine_chart(curve.form, P)
    return aff.translate(coords).lowest_degree()


def _perm_matrix(nf: NumberField, i: int, j: int) -> Matrix:
    m = identity_matrix(nf)
    m[i], m[j] = m[j], m[i]
    return m


@dataclass
class PointedCurve:
    curve: PlaneCurve
    point: tuple
    multiplicity: int
    chart_transform: Matrix
    chart_curve: PlaneCurve

    @property
    def projection_degree(self) -> int:
        return self.curve.degree - self.multiplicity

    @property
    def inner(self) -> bool:
        return self.multiplicity > 0


def normalize_chart(curve: PlaneCurve, point: Sequence) -> PointedCurve:
    """Move the point to (0 : 0 : 1).

    Tie-breaking: identity if possible; else a coordinate swap bringing a
    nonzero coordinate into the Z slot (Z, then X, then Y); then a
    translation.  If the line x = 0 through the center is a component of the
    transformed curve, a shear x -> x + k*y (k = 1, 2, ...) is appended.
    """
    nf = curve.nf
    P = [nf(a) for a in point]
    if not any(P):
        raise ValueError("(0 : 0 : 1) cannot be normalized from the zero vector")
    T = identity_matrix(nf)
    if P[2]:
        pass
    elif P[0]:
        T = _perm_matrix(nf, 0, 2)
    else:
        T = _perm_matrix(nf, 1, 2)
    a, b, c = mat_vec(T, P)
    if a or b:
        tr = identity_matrix(nf)
        tr[0][2] = -a / c
        tr[1][2] = -b / c
        T = mat_mul(tr, T)
    chart = curve.transformed(T)
    k = 0
    while _has_x_line(chart):
        k += 1
        shear = identity_matrix(nf)
        shear[0][1] = nf(k)
        T2 = mat_mul(shear, T)
        chart2 = curve.transformed(T2)
        if not _has_x_line(chart2):
            T, chart = T2, chart2
            break
        if k > 64:
            raise ChartDegeneracyError("no shear avoids a line component through the center")
    m = chart.f.lowest_degree()
    return PointedCurve(curve, tuple(P), m, T, chart)


def _has_x_line(curve: PlaneCurve) -> bool:
    return all(exps[0] >= 1 for exps, _ in curve.f.items())


# ---------------------------------------------------------------------------
# fiber polynomial
# ---------------------------------------------------------------------------

@dataclass
class FiberPolynomial:
    """Monic model h(X) over K = k'(t) of k(C) / K_P.

    ``leading`` keeps the leading coefficient removed by the monic
    normalization; ``certified`` records a Kummer irreducibility certificate.
    """

    hpoly: UniPoly
    K: RationalFunctionField
    leading: RatFunc | None = None
    provenance: str = ""
    certified: bool = False
    certificate: str = ""
    diagnostics: list[str] = field(default_factory=list)

    @property
    def degree(self) -> int:
        return self.hpoly.degree

    def __eq__(self, other):
        if isinstance(other, FiberPolynomial):
            return self.hpoly == other.hpoly
        return NotImplemented

    def __str__(self):
        return self.hpoly.to_str("X")


def fiber_polynomial(pc: PointedCurve) -> FiberPolynomial:
    """h(X, t) = f(X, tX) / X^m, made monic in X."""
    f = pc.chart_curve.f
    nf = f.base
    K = RationalFunctionField(nf, "t")
    m = pc.multiplicity
    if _has_x_line(pc.chart_curve):
        raise ChartDegeneracyError("x divides the chart model; choose another chart")
    buckets: dict[int, dict[int, NFElem]] = {}
    for (a, b), c in f.items():
        buckets.setdefault(a + b - m, {})[b] = c
    top = max(buckets)
    coeffs = []
    for k in range(top + 1):
        bk = buckets.get(k, {})
        deg = max(bk, default=-1)
        coeffs.append(K(UniPoly([bk.get(j, nf.zero) for j in range(deg + 1)], nf)))
    raw = UniPoly(coeffs, K)
    if raw.degree != pc.projection_degree:
        raise CurveError("fiber degree disagrees with d - m")
    if raw.degree < 2:
        raise ProjectionDegreeError(
            f"projection degree {raw.degree} < 2 (d = {pc.curve.degree}, m = {m})")
    if not raw.coeff(0):
        raise ChartDegeneracyError("x divides the fiber polynomial")
    h = raw.monic()
    if not discriminant(h):
        raise CurveError("fiber polynomial is not separable")
    return FiberPolynomial(h, K, leading=raw.lc, provenance="chart: t = y/x, P at origin",
                           certified=pc.curve.irreducibility == "certified",
                           certificate=pc.curve.certificate)


def curve_from_fiber(h: FiberPolynomial) -> PlaneCurve:
    """Plane model f(x, y) with f(x, tx) / x^m proportional to h(x).

    Clears denominators by their monic lcm, substitutes t = y/x and
    multiplies by the least power of x making every term polynomial.
    """
    K = h.K
    nf = K.nf
    hp = h.hpoly
    lcm = UniPoly((nf.one,), nf)
    for c in hp.c:
        lcm = (lcm * c.den).exquo(poly_gcd(lcm, c.den))
    polys = [(c * K(lcm)).num if c else UniPoly((), nf) for c in hp.c]
    content = UniPoly((), nf)
    for p in polys:
        content = poly_gcd(content, p) if content.c else p.monic()
    if content.degree > 0:
        polys = [p.exquo(content) if p.c else p for p in polys]
    e = max(p.degree - j for j, p in enumerate(polys) if p.c)
    terms: dict[int, NFElem] = {}
    for j, p in enumerate(polys):
        for b, c in enumerate(p.c):
            if c:
                # x^(e + j) * (y/x)^b
                key = pack((e + j - b, b))
                terms[key] = terms.get(key, nf.zero) + c
    f = MPoly(terms, 2, nf)
    if f.total_degree < 3:
        raise CurveError("reconstructed curve has degree < 3")
    irr = "certified" if h.certified else "trusted"
    return PlaneCurve(f, irreducibility=irr, certificate=h.certificate)
