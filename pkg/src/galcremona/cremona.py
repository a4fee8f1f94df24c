"""Moebius transformations over K = k'(t) and de Jonquieres maps of P^2.

Coordinates (x0 : x1 : x2) with center o = (0 : 0 : 1), pencil parameter
t = x1/x0 and fiber coordinate u = x2/x0.  A Moebius matrix [[a, b], [c, d]]
over K acts by u -> (a u + b)/(c u + d); its lift is

    (x0 : x1 : x2) -> (q x0 : q x1 : f),  f = A x2 + B,  q = C x2 + D,

with binary forms A, B, C, D obtained by homogenizing a, b, c, d in (x0, x1).
"""

from __future__ import annotations

from typing import Sequence

from .arith import NumberField, RatFunc, RationalFunctionField
from .mpoly import MPoly, matrix_map, pack, unpack
from .poly import UniPoly, poly_gcd


class DegenerateMapError(ArithmeticError):
    pass


# ---------------------------------------------------------------------------
# Moebius group PGL(2, K)
# ---------------------------------------------------------------------------

class Moebius:
    """A projective 2x2 matrix over K.

    Stored in canonical form: the first nonzero entry (row-major) is 1.
    """

    __slots__ = ("a", "b", "c", "d", "K")

    def __init__(self, a, b, c, d, K: RationalFunctionField | None = None):
        if K is None:
            K = next(v.field for v in (a, b, c, d) if isinstance(v, RatFunc))
        entries = [K(v) for v in (a, b, c, d)]
        if not entries[0] * entries[3] - entries[1] * entries[2]:
            raise DegenerateMapError("Moebius matrix is singular")
        lead = next(v for v in entries if v)
        if lead != K.one:
            inv = lead.inverse()
            entries = [v * inv for v in entries]
        self.a, self.b, self.c, self.d = entries
        self.K = K

    @classmethod
    def identity(cls, K: RationalFunctionField) -> "Moebius":
        return cls(K.one, K.zero, K.zero, K.one, K)

    @property
    def entries(self) -> tuple[RatFunc, RatFunc, RatFunc, RatFunc]:
        return self.a, self.b, self.c, self.d

    def rows(self):
        return [[self.a, self.b], [self.c, self.d]]

    def det(self) -> RatFunc:
        return self.a * self.d - self.b * self.c

    def __matmul__(self, other: "Moebius") -> "Moebius":
        """Matrix product: (self @ other)(u) = self(other(u))."""
        a, b, c, d = self.entries
        e, f, g, h = other.entries
        return Moebius(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h, self.K)

    def inverse(self) -> "Moebius":
        return Moebius(self.d, -self.b, -self.c, self.a, self.K)

    def __pow__(self, k: int) -> "Moebius":
        if k < 0:
            return self.inverse() ** (-k)
        result, base = Moebius.identity(self.K), self
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    def is_scalar(self) -> bool:
        return not self.b and not self.c and self.a == self.d

    def __call__(self, value):
        """Apply to anything supporting field arithmetic with K (e.g. algebra elements)."""
        return (value * self.a + self.b) / (value * self.c + self.d)

    def polynomial_entries(self) -> tuple[UniPoly, UniPoly, UniPoly, UniPoly]:
        """Representative with coprime polynomial entries in k'[t]."""
        nf = self.K.nf
        lcm = UniPoly((nf.one,), nf)
        for v in self.entries:
            lcm = (lcm * v.den).exquo(poly_gcd(lcm, v.den))
        polys = [(v * self.K(lcm)).num if v else UniPoly((), nf) for v in self.entries]
        g = UniPoly((), nf)
        for p in polys:
            g = poly_gcd(g, p) if g.c else p.monic()
        return tuple(p.exquo(g) if p.c else p for p in polys)

    def __eq__(self, other):
        if not isinstance(other, Moebius):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __str__(self):
        return "[[{}, {}], [{}, {}]]".format(*self.entries)

    def __repr__(self):
        return f"Moebius{self}"


def moebius_compose(m: Moebius, n: Moebius) -> Moebius:
    return m @ n


def moebius_inverse(m: Moebius) -> Moebius:
    return m.inverse()


def moebius_order(m: Moebius, bound: int = 24) -> int | None:
    """Least j <= bound with m^j scalar, else None."""
    p = m
    for j in range(1, bound + 1):
        if p.is_scalar():
            return j
        p = p @ m
    return None


def chart_transfer(m: Moebius) -> Moebius:
    """Conjugate by J = [[0, 1], [1, 0]], i.e. change fiber coordinate x -> 1/x."""
    return Moebius(m.d, m.c, m.b, m.a, m.K)


# ---------------------------------------------------------------------------
# ternary forms and plane maps
# ---------------------------------------------------------------------------

def _binary_from_uni(p: UniPoly, degree: int, nf: NumberField) -> MPoly:
    """x0^degree * p(x1/x0) as a ternary form (no x2)."""
    terms = {}
    for j, c in enumerate(p.c):
        if c:
            terms[pack((degree - j, j, 0))] = c
    return MPoly(terms, 3, nf)


def _uni_from_binary(form: MPoly, K: RationalFunctionField) -> RatFunc:
    """Dehomogenize a binary form at x0 = 1 into k'[t]."""
    nf = K.nf
    coeffs: dict[int, object] = {}
    for (e0, e1, e2), c in form.items():
        if e2:
            raise ValueError("form involves x2")
        coeffs[e1] = c
    top = max(coeffs, default=-1)
    return K(UniPoly([coeffs.get(j, nf.zero) for j in range(top + 1)], nf))


def x2_slices(form: MPoly) -> dict[int, MPoly]:
    """form = sum_k slices[k] * x2^k with x2-free slices."""
    out: dict[int, dict] = {}
    for e, c in form.terms.items():
        k = e & ((1 << 24) - 1)
        out.setdefault(k, {})[e - k] = c
    return {k: MPoly._raw(v, 3, form.base) for k, v in out.items()}


def binary_gcd(forms: Sequence[MPoly]) -> MPoly:
    """Monic-normalized gcd of binary forms in (x0, x1)."""
    nonzero = [f for f in forms if f]
    if not nonzero:
        raise ValueError("gcd of zero forms")
    nf = nonzero[0].base
    v0 = min(min(unpack(e, 3)[0] for e in f.terms) for f in nonzero)
    g = UniPoly((), nf)
    for f in nonzero:
        coeffs: dict[int, object] = {}
        for (e0, e1, _), c in f.items():
            coeffs[e1] = c
        p = UniPoly([coeffs.get(j, nf.zero) for j in range(max(coeffs) + 1)], nf)
        g = poly_gcd(g, p) if g.c else p.monic()
    return _binary_from_uni(g, g.degree + v0, nf)


class PlaneMap:
    """A rational map of P^2 given by three ternary forms of equal degree."""

    def __init__(self, components: Sequence[MPoly]):
        comps = list(components)
        if len(comps) != 3 or any(c.nvars != 3 for c in comps):
            raise ValueError("a plane map needs three ternary forms")
        if not any(comps):
            raise DegenerateMapError("all components vanish")
        degs = {c.total_degree for c in comps if c}
        if len(degs) != 1 or not all(c.is_homogeneous() for c in comps):
            raise ValueError("components must be homogeneous of one degree")
        self.components = comps
        self.nf = next(c for c in comps if c).base
        self.degree = degs.pop()

    @classmethod
    def from_matrix(cls, matrix, nf: NumberField) -> "PlaneMap":
        return cls(matrix_map(matrix, nf))

    @classmethod
    def identity(cls, nf: NumberField) -> "PlaneMap":
        return cls(MPoly.gens(3, nf))

    def pullback(self, form: MPoly) -> MPoly:
        """form(F0, F1, F2) by plain substitution."""
        return form.compose(self.components)

    def is_identity(self) -> bool:
        """Components equal (x0, x1, x2) times one common form."""
        gens = MPoly.gens(3, self.nf)
        c = self.components
        return all(c[i] * gens[j] == c[j] * gens[i] for i in range(3) for j in range(i + 1, 3)) \
            and all(c)

    def same_as(self, other: "PlaneMap") -> bool:
        """Component triples proportional by a common nonzero form."""
        a, b = self.components, other.components
        return all(a[i] * b[j] == a[j] * b[i] for i in range(3) for j in range(3))

    def to_strs(self, names=("x0", "x1", "x2")) -> list[str]:
        return [c.to_str(names) for c in self.components]


# ---------------------------------------------------------------------------
# de Jonquieres maps
# ---------------------------------------------------------------------------

class DeJonquieresMap(PlaneMap):
    """(q x0 : q x1 : f) with f = a x2 + b and q = c x2 + d.

    a, b, c, d are binary forms of degrees D-1, D, D-2, D-1; f and q are
    relatively prime x2-monoids.  Components are scaled so that the leading
    (lex) coefficient of the first one is 1.
    """

    def __init__(self, a: MPoly, b: MPoly, c: MPoly, d: MPoly, degree: int):
        nf = next(v for v in (a, b, c, d) if v).base
        for form, want in ((a, degree - 1), (b, degree), (c, degree - 2), (d, degree - 1)):
            if form and (not form.is_homogeneous() or form.total_degree != want):
                raise ValueError("binary forms have inconsistent degrees")
            if form and form.degree_in(2) > 0:
                raise ValueError("coefficient forms must not involve x2")
        x0, x1, x2 = MPoly.gens(3, nf)
        if not (a * d - b * c):
            raise DegenerateMapError("ad - bc vanishes")
        if not a and not c:
            raise DegenerateMapError("f and q both have x2-degree 0")
        q = c * x2 + d
        f = a * x2 + b
        first = q * x0
        lead = first.terms[max(first.terms)]
        if lead != nf.one:
            s = nf.one / lead
            a, b, c, d = (v.scale(s) for v in (a, b, c, d))
            q, f, first = q.scale(s), f.scale(s), first.scale(s)
        self.a, self.b, self.c, self.d = a, b, c, d
        self.q, self.f = q, f
        super().__init__([first, q * x1, f])
        if self.degree != degree:
            raise ValueError("component degree mismatch")

    def check_invariants(self) -> bool:
        """Coprime monoids (gcd(a, b, c, d) = 1 and ad - bc != 0), equal degrees."""
        g = binary_gcd([self.a, self.b, self.c, self.d])
        return g.total_degree == 0 and bool(self.a * self.d - self.b * self.c) \
            and max(self.f.degree_in(2), self.q.degree_in(2)) == 1 \
            and self.f.degree_in(2) <= 1 and self.q.degree_in(2) <= 1

    @classmethod
    def from_components(cls, components: Sequence[MPoly]) -> "DeJonquieresMap":
        """Recognize (Q x0 : Q x1 : R) and strip the common binary-form factor."""
        c0, c1, c2 = components
        nf = next(c for c in components if c).base
        x0, x1, x2 = MPoly.gens(3, nf)
        if c0 * x1 != c1 * x0:
            raise DegenerateMapError("map does not fix the pencil through o")
        q = c0.divide(x0)
        if q is None or not q:
            raise DegenerateMapError("first component is not divisible by x0")
        if q.degree_in(2) > 1 or c2.degree_in(2) > 1:
            raise DegenerateMapError("components are not x2-monoids")
        qs, fs = x2_slices(q), x2_slices(c2)
        zero = MPoly.constant(0, 3, nf)
        a, b = fs.get(1, zero), fs.get(0, zero)
        c, d = qs.get(1, zero), qs.get(0, zero)
        g = binary_gcd([a, b, c, d])
        if g.total_degree > 0:
            a, b, c, d = (v.exquo(g) if v else v for v in (a, b, c, d))
        degree = c2.total_degree - g.total_degree if c2 else q.total_degree + 1 - g.total_degree
        return cls(a, b, c, d, degree)

    def moebius(self, K: RationalFunctionField | None = None) -> Moebius:
        """Action u -> (a u + b)/(c u + d) on the fiber coordinate u = x2/x0."""
        K = K or RationalFunctionField(self.nf, "t")
        a = _uni_from_binary(self.a, K) if self.a else K.zero
        b = _uni_from_binary(self.b, K) if self.b else K.zero
        c = _uni_from_binary(self.c, K) if self.c else K.zero
        d = _uni_from_binary(self.d, K) if self.d else K.zero
        return Moebius(a, b, c, d, K)

    def pullback(self, form: MPoly) -> MPoly:
        """form(q x0, q x1, f) = sum_k q^(deg - k) * form_k(x0, x1) * f^k.

        Same result as plain substitution, using homogeneity of the x2-slices.
        """
        return monoid_pullback(form, self.q, self.f)


def monoid_pullback(form: MPoly, q: MPoly, f: MPoly) -> MPoly:
    if not form:
        return form
    deg = form.total_degree
    slices = x2_slices(form)
    top = max(slices)
    nf = form.base
    one = MPoly.constant(nf.one, 3, nf)
    qpow = [one]
    for _ in range(deg):
        qpow.append(qpow[-1] * q)
    fpow = [one]
    for _ in range(top):
        fpow.append(fpow[-1] * f)
    acc = MPoly.constant(0, 3, nf)
    for k, sl in slices.items():
        acc = acc + (sl * fpow[k]) * qpow[deg - k]
    return acc


def dejonquieres_lift(m: Moebius) -> DeJonquieresMap:
    """psi: PGL(2, K) -> J_o(P^2), with t = x1/x0 and u = x2/x0."""
    nf = m.K.nf
    al, be, ga, de = m.polynomial_entries()
    degree = max(al.degree + 1, be.degree, ga.degree + 2, de.degree + 1)
    forms = [
        _binary_from_uni(al, degree - 1, nf) if al.c else MPoly.constant(0, 3, nf),
        _binary_from_uni(be, degree, nf) if be.c else MPoly.constant(0, 3, nf),
        _binary_from_uni(ga, degree - 2, nf) if ga.c else MPoly.constant(0, 3, nf),
        _binary_from_uni(de, degree - 1, nf) if de.c else MPoly.constant(0, 3, nf),
    ]
    return DeJonquieresMap(*forms, degree)


def dj_compose(g: DeJonquieresMap, f: DeJonquieresMap) -> DeJonquieresMap:
    """g o f (apply f first): substitute f's components into g's, strip common factors.

    Substituting (q x0, q x1, f) into g's components produces the factor
    q^(deg g - 1) in all three (homogeneity of g's binary slices); it is
    divided out exactly before the remaining binary-form gcd is stripped.
    """
    comps = [monoid_pullback(c, f.q, f.f) for c in g.components]
    if not any(comps):
        raise DegenerateMapError("composition vanishes identically")
    for _ in range(g.degree - 1):
        divided = [c.divide(f.q) if c else c for c in comps]
        if any(d is None for d in divided):
            break
        comps = divided
    return DeJonquieresMap.from_components(comps)


def dj_power(f: DeJonquieresMap, k: int) -> DeJonquieresMap:
    if k < 1:
        raise ValueError("power must be positive")
    g = f
    for _ in range(k - 1):
        g = dj_compose(f, g)
    return g


def dj_order(f: DeJonquieresMap, bound: int = 12) -> int | None:
    g = f
    for k in range(1, bound + 1):
        if g.is_identity():
            return k
        g = dj_compose(f, g)
    return None


def dj_inverse(f: DeJonquieresMap) -> DeJonquieresMap:
    return dejonquieres_lift(f.moebius().inverse())


def dj_verify_birational(f: DeJonquieresMap) -> bool:
    """F^-1 (lifted from the Moebius inverse) composes with F to the identity."""
    inv = dj_inverse(f)
    return dj_compose(inv, f).is_identity() and dj_compose(f, inv).is_identity()


def pullback_divides(fmap: PlaneMap, form: MPoly):
    """Whether form divides form(F0, F1, F2); returns (flag, quotient or None)."""
    if not form:
        raise ValueError("zero form")
    pulled = fmap.pullback(form)
    q = pulled.divide(form)
    return q is not None, q


def rho_restriction_trivial(fmap: PlaneMap) -> bool:
    """Projection from o after F equals projection from o: F0 x1 - F1 x0 = 0."""
    x0, x1, _ = MPoly.gens(3, fmap.nf)
    f0, f1, _ = fmap.components
    return not (f0 * x1 - f1 * x0) and bool(f0 or f1)
