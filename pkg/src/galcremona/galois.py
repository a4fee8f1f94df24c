"""Galois tests, Kummer presentations, and Moebius realizations of sigma.

K = k'(t) is the function field of the pencil through P; A = K[X]/(h) is
the function field of the curve with x the class of X.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from sympy import primefactors

from .arith import (NFElem, NumberField, RatFunc, RationalFunctionField, canonical_order,
                    embed, make_cyclotomic, nf_sqrt, ratfunc_multiplicities,
                    squarefree_decompose, sqrt_order)
from .cremona import Moebius
from .curve import FiberPolynomial
from .poly import (AlgebraElement, PolyRing, QuotientAlgebra, UniPoly, algebra_substitute,
                   discriminant, nullspace, odd_multiplicity_part, resultant, solve,
                   square_root_part, squarefree_part)


class KummerError(ValueError):
    pass


class FieldTooSmallError(ArithmeticError):
    """The constant field lacks a square root (or root of unity) that is needed."""

    def __init__(self, msg: str, required_order: int | None = None):
        super().__init__(msg)
        self.required_order = required_order


class NoMoebiusError(ArithmeticError):
    pass


class ResolventVanishes(ArithmeticError):
    pass


# ---------------------------------------------------------------------------
# Kummer presentations
# ---------------------------------------------------------------------------

def kummer_certificate(q: RatFunc, n: int) -> str:
    """Certificate that Y^n - q is irreducible over K.

    Y^n - q is irreducible iff q is not a p-th power for any prime p | n (and
    not -4 times a fourth power when 4 | n).  We only certify through zero and
    pole multiplicities: some multiplicity prime to p for each p.
    """
    if not q:
        raise KummerError("q must be nonzero")
    mults = ratfunc_multiplicities(q)
    if not mults:
        raise KummerError("q is constant: Y^n - q splits over the algebraic closure")
    primes = primefactors(n)
    for p in primes:
        if all(m % p == 0 for m in mults):
            raise KummerError(f"every zero/pole multiplicity of q is divisible by {p}")
    return f"zero/pole multiplicities {sorted(mults)} are not all divisible by any of {primes}"


@dataclass(frozen=True)
class KummerPresentation:
    """x = c_0 + c_1 y + ... + c_{n-1} y^{n-1} with y^n = q and sigma(y) = zeta y."""

    n: int
    q: RatFunc
    coeffs: tuple
    zeta: NFElem

    def __post_init__(self):
        if self.n < 3:
            raise KummerError("n must be at least 3")
        if len(self.coeffs) != self.n:
            raise KummerError(f"expected {self.n} coefficients c_0 .. c_(n-1)")
        if not any(self.coeffs[1:]):
            raise KummerError("x lies in K: some c_i with i >= 1 must be nonzero")
        z = self.zeta
        if z ** self.n != 1 or any(z ** k == 1 for k in range(1, self.n)):
            raise KummerError(f"zeta is not a primitive {self.n}-th root of unity")

    @property
    def K(self) -> RationalFunctionField:
        return self.q.field

    @property
    def certificate(self) -> str:
        return kummer_certificate(self.q, self.n)


def kummer_minimal_polynomial(kp: KummerPresentation) -> FiberPolynomial:
    """Minimal polynomial of x over K via Res_Y(Y^n - q, X - sum c_i Y^i)."""
    K = kp.K
    R = PolyRing(K, "X")
    X = R.gen()
    f = UniPoly([R(-kp.q)] + [R(K.zero)] * (kp.n - 1) + [R(K.one)], R)
    g = UniPoly([X - kp.coeffs[0]] + [R(-c) for c in kp.coeffs[1:]], R)
    charpoly = resultant(f, g)
    h = squarefree_part(charpoly)
    diags = []
    cert = ""
    certified = False
    try:
        cert = kummer_certificate(kp.q, kp.n)
    except KummerError as exc:
        diags.append(f"Kummer certificate unavailable: {exc}")
    if h.degree < kp.n:
        diags.append(f"x does not generate: minimal polynomial has degree {h.degree} < {kp.n}")
    else:
        certified = bool(cert)
    return FiberPolynomial(h, K, provenance="kummer", certified=certified,
                           certificate=cert, diagnostics=diags)


def geometric_check(cs) -> bool:
    """c_{i+1} c_{i-1} = c_i^2 with c_1 != 0, for c_1 .. c_{n-1}.

    For n = 3 this holds whenever c_1 != 0.
    """
    cs = list(cs)
    if not cs[0]:
        return not any(cs)
    r = cs[1] / cs[0] if len(cs) > 1 else None
    return all(cs[i] == cs[0] * r ** i for i in range(1, len(cs)))


@dataclass
class KummerMoebiusData:
    """Matrices of the construction for a geometric Kummer presentation.

    ``root_matrix`` sends the radical y to x (the geometric tail collapses to
    one fraction), ``factor`` is root_matrix with y replaced by zeta*y, i.e.
    sigma(x) as a function of y, and ``composite`` = factor * adj(root_matrix)
    acts on x.
    """

    presentation: KummerPresentation
    root_matrix: Moebius
    factor: Moebius
    composite: Moebius
    rewritten: bool


def kummer_moebius_data(kp: KummerPresentation, verify: bool = True) -> KummerMoebiusData:
    n = kp.n
    rewritten = False
    if not geometric_check(kp.coeffs[1:]):
        if n == 3 and not kp.coeffs[1]:
            # x = c0 + c2 y' with y' = y^2, y'^3 = q^2, sigma(y') = zeta^2 y'
            c0, _, c2 = kp.coeffs
            kp = KummerPresentation(3, kp.q ** 2, (c0, c2, kp.K.zero), kp.zeta ** 2)
            rewritten = True
        else:
            raise KummerError("coefficients are not geometric: no Moebius realization by this route")
    K = kp.K
    c0, c1, c2 = kp.coeffs[0], kp.coeffs[1], (kp.coeffs[2] if n > 2 else K.zero)
    q = kp.q
    a = c1 ** (n - 1) - c0 * c1 ** (n - 3) * c2
    b = c0 * c1 ** (n - 2) - c2 ** (n - 1) * q
    c = -(c1 ** (n - 3)) * c2
    d = c1 ** (n - 2)
    root = Moebius(a, b, c, d, K)
    z = K(kp.zeta)
    factor = Moebius(a * z, b, c * z, d, K)
    composite = factor @ root.inverse()
    data = KummerMoebiusData(kp, root, factor, composite, rewritten)
    if verify:
        h = kummer_minimal_polynomial(kp)
        alg = QuotientAlgebra(h.hpoly)
        sx = composite(alg.x)
        if algebra_substitute(h.hpoly, sx):
            raise KummerError("construction failed: M(x) is not a root of h")
        if not (composite ** n).is_scalar():
            raise KummerError("construction failed: M^n is not scalar")
    return data


def kummer_sigma(kp: KummerPresentation) -> "AutomorphismRep":
    """sigma(x) as a polynomial in x, for any presentation where x generates.

    Works in K[Y]/(Y^n - q): x = sum c_i Y^i and sigma(x) = sum c_i zeta^i Y^i;
    sigma(x) is solved for in the basis 1, x, ..., x^(n-1).
    """
    K, n = kp.K, kp.n
    ring = QuotientAlgebra(UniPoly([-kp.q] + [K.zero] * (n - 1) + [K.one], K))
    x = ring.from_coords(kp.coeffs)
    sx = ring.from_coords([c * K(kp.zeta) ** i for i, c in enumerate(kp.coeffs)])
    powers = [ring.one]
    for _ in range(n - 1):
        powers.append(powers[-1] * x)
    rows = [[powers[j].coords()[i] for j in range(n)] for i in range(n)]
    try:
        coeffs = solve(rows, sx.coords(), K.zero, K.one)
    except (ArithmeticError, ValueError) as exc:
        raise KummerError(f"x does not generate K(q^(1/n)): {exc}") from exc
    h = kummer_minimal_polynomial(kp)
    alg = QuotientAlgebra(h.hpoly)
    return AutomorphismRep(h, alg.from_coords(coeffs))


def kummer_moebius(kp: KummerPresentation) -> Moebius:
    """Moebius matrix M over K with M(x) = sigma(x)."""
    return kummer_moebius_data(kp).composite


# ---------------------------------------------------------------------------
# Galois test for cubic fibers
# ---------------------------------------------------------------------------

@dataclass
class DiscriminantData:
    disc: RatFunc
    constant: NFElem
    root_part: RatFunc


def discriminant_data(h: FiberPolynomial) -> DiscriminantData:
    """disc(h) = constant * root_part^2 when it is a square up to a constant."""
    disc = discriminant(h.hpoly)
    if not disc:
        raise ValueError("fiber polynomial is inseparable")
    num, den = disc.num, disc.den
    const = num.lc
    g = h.K(square_root_part(num)) / h.K(square_root_part(den))
    return DiscriminantData(disc, const, g)


def galois_test_cubic(h: FiberPolynomial) -> bool:
    """Degree-3 fiber: Galois iff disc(h) is a square in Kbar(t).

    Equivalently every zero and pole of disc has even multiplicity.
    """
    if h.degree != 3:
        raise ValueError("the discriminant test applies to cubic fibers only")
    disc = discriminant(h.hpoly)
    if not disc:
        raise ValueError("fiber polynomial is inseparable")
    return odd_multiplicity_part(disc.num).degree == 0 and \
        odd_multiplicity_part(disc.den).degree == 0


def required_order(h: FiberPolynomial) -> int:
    """Smallest canonical cyclotomic order containing k', omega and sqrt(disc constant)."""
    nf = h.K.nf
    base = nf.order if nf.order is not None else 1
    n = base * 3 // gcd(base, 3)
    dd = discriminant_data(h)
    if dd.constant.is_rational():
        r, _ = squarefree_decompose(dd.constant.to_fraction())
        s = sqrt_order(r)
        n = n * s // gcd(n, s)
    return canonical_order(n)


def embed_fiber(h: FiberPolynomial, target: NumberField) -> FiberPolynomial:
    K2 = RationalFunctionField(target, h.K.var)
    fn = lambda a: embed(a, target)  # noqa: E731
    hp = h.hpoly.map_coeffs(lambda c: c.map_coeffs(fn, K2), K2)
    return FiberPolynomial(hp, K2, provenance=h.provenance, certified=h.certified,
                           certificate=h.certificate, diagnostics=list(h.diagnostics))


# ---------------------------------------------------------------------------
# automorphisms
# ---------------------------------------------------------------------------

@dataclass
class AutomorphismRep:
    """sigma in Aut(A/K) given by the image of x in the power basis."""

    h: FiberPolynomial
    image: AlgebraElement

    @property
    def algebra(self) -> QuotientAlgebra:
        return self.image.alg

    def apply(self, elem: AlgebraElement) -> AlgebraElement:
        return algebra_substitute(elem.rep, self.image)

    def power(self, k: int) -> AlgebraElement:
        x = self.algebra.x
        for _ in range(k):
            x = self.apply(x)
        return x

    def order(self, bound: int = 24) -> int | None:
        x = self.algebra.x
        y = self.image
        for k in range(1, bound + 1):
            if y == x:
                return k
            y = self.apply(y)
        return None

    def is_automorphism(self) -> bool:
        return not algebra_substitute(self.h.hpoly, self.image)


def sigma_from_roots(h: FiberPolynomial, sign: int = 1) -> AutomorphismRep:
    """For a cubic with disc = s^2, s in K:  sigma(x) = ((e1 - x) + sign*s/h'(x)) / 2.

    With roots x, x', x'' one has x' + x'' = e1 - x and x' - x'' = +-s/h'(x).
    """
    if h.degree != 3:
        raise ValueError("sigma_from_roots expects a cubic fiber")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    dd = discriminant_data(h)
    sc = nf_sqrt(dd.constant)
    if sc is None:
        raise FieldTooSmallError(f"sqrt({dd.constant}) is not in {h.K.nf.label}",
                                 required_order(h))
    s = dd.root_part * h.K(sc)
    alg = QuotientAlgebra(h.hpoly)
    x = alg.x
    e1 = -h.hpoly.coeff(2)
    hp = algebra_substitute(h.hpoly.derivative(), x)
    image = ((x * -1 + e1) + hp.inverse() * (s * sign)) * h.K(h.K.nf.from_fraction(Fraction(1, 2)))
    rep = AutomorphismRep(h, image)
    if not rep.is_automorphism():
        raise ArithmeticError("sigma(x) is not a root of h")
    return rep


def resolvent_kummer_generator(h: FiberPolynomial, sigma: AutomorphismRep,
                               omega: NFElem | None = None) -> KummerPresentation:
    """r = x + omega^2 sigma(x) + omega sigma^2(x) satisfies sigma(r) = omega r, r^3 in K.

    omega defaults to the field's zeta^(order/3).
    """
    if sigma.h.hpoly != h.hpoly:
        raise ValueError("sigma is defined over a different modulus")
    K = h.K
    if omega is None:
        nf = K.nf
        if nf.order is None or nf.order % 3:
            raise FieldTooSmallError(f"{nf.label} does not contain a cube root of unity", 3)
        omega = nf.root_of_unity(3)
    alg = sigma.algebra
    x = alg.x
    s1 = sigma.image
    s2 = sigma.apply(s1)
    w = K(omega)
    r = x + s1 * (w * w) + s2 * w
    if not r:
        raise ResolventVanishes("Lagrange resolvent vanishes")
    cube = r ** 3
    if not cube.is_scalar():
        raise ArithmeticError("r^3 is not in K")
    if sigma.apply(r) != r * w:
        raise ArithmeticError("sigma(r) != omega r")
    basis = [alg.one, r, r * r]
    rows = [[basis[j].coords()[i] for j in range(3)] for i in range(3)]
    coeffs = solve(rows, x.coords(), K.zero, K.one)
    return KummerPresentation(3, cube.scalar(), tuple(coeffs), omega)


def moebius_solution_space(sigma: AutomorphismRep) -> list[list[RatFunc]]:
    """Basis of (alpha, beta, gamma, delta) with (gamma x + delta) sigma(x) = alpha x + beta."""
    alg = sigma.algebra
    K = sigma.h.K
    x = alg.x
    sx = sigma.image
    cols = [(-x).coords(), (-alg.one).coords(), (x * sx).coords(), sx.coords()]
    rows = [[cols[j][i] for j in range(4)] for i in range(alg.n)]
    return nullspace(rows, 4, K.zero, K.one)


def moebius_representation(sigma: AutomorphismRep) -> Moebius:
    """Nonsingular M with M(x) = sigma(x); NoMoebiusError if none exists."""
    K = sigma.h.K
    space = moebius_solution_space(sigma)
    candidates = list(space)
    for i in range(len(space)):
        for j in range(i + 1, len(space)):
            candidates.append([a + b for a, b in zip(space[i], space[j])])
    for v in candidates:
        a, b, c, d = v
        if a * d - b * c:
            m = Moebius(a, b, c, d, K)
            if m(sigma.algebra.x) == sigma.image:
                return m
    raise NoMoebiusError(f"no nonsingular Moebius matrix (solution space dimension {len(space)})")


# ---------------------------------------------------------------------------
# full analysis at a point
# ---------------------------------------------------------------------------

@dataclass
class GaloisReport:
    fiber: FiberPolynomial
    is_galois: bool | None
    group_order: int | None = None
    sigma: AutomorphismRep | None = None
    moebius: Moebius | None = None
    kummer: KummerPresentation | None = None
    field_order: int | None = None
    solution_dimension: int | None = None
    diagnostics: list[str] = field(default_factory=list)


def analyze_fiber(h: FiberPolynomial) -> GaloisReport:
    """Galois test and, for Galois cubics, sigma, its Moebius matrix and Kummer data.

    The constant field is enlarged to the least cyclotomic field containing
    omega and the square root of the discriminant constant.
    """
    if h.degree != 3:
        return GaloisReport(h, None, diagnostics=[
            f"fiber degree {h.degree}: only cubic fibers are decided here"])
    if not galois_test_cubic(h):
        return GaloisReport(h, False, diagnostics=["disc(h) is not a square in Kbar(t)"])
    diags = []
    order = required_order(h)
    nf = h.K.nf
    if nf.order is None or canonical_order(nf.order) != order:
        target = make_cyclotomic(order)
        diags.append(f"constant field extended to {target.label}")
        h = embed_fiber(h, target)
    sigma = sigma_from_roots(h, 1)
    m = moebius_representation(sigma)
    dim = len(moebius_solution_space(sigma))
    omega = h.K.nf.root_of_unity(3) if h.K.nf.order % 3 == 0 else None
    kp = None
    if omega is not None:
        try:
            kp = resolvent_kummer_generator(h, sigma, omega)
        except ResolventVanishes:
            # sigma(x) = omega^2 x type: the resolvent for the other cube root is nonzero
            kp = resolvent_kummer_generator(h, sigma, omega * omega)
    if kp is not None:
        alt = kummer_moebius(kp)
        if alt != m:
            diags.append("Kummer-route Moebius matrix differs from the linear solve")
    return GaloisReport(h, True, group_order=sigma.order(), sigma=sigma, moebius=m,
                        kummer=kp, field_order=h.K.nf.order, solution_dimension=dim,
                        diagnostics=diags)

