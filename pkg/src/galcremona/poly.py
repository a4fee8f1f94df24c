"""Dense univariate polynomials over an abstract coefficient domain.

A polynomial a_0 + a_1 X + ... + a_n X^n is stored as the tuple
(a_0, ..., a_n) with a_n nonzero; the zero polynomial is the empty tuple.
Coefficients are any objects supporting +, -, * (and / when the domain is
a field).  The coefficient domain is described by a small "ring" object
exposing ``zero``, ``one`` and a coercing ``__call__``.

Also here: resultants (Bareiss on the Sylvester matrix), discriminants,
squarefree decomposition, dense linear algebra over a field, and the
quotient algebra K[X]/(h).
"""

from __future__ import annotations

from typing import Iterable, Sequence


class ReducibleModulusError(ArithmeticError):
    """An element shares a nontrivial factor with the algebra modulus."""


def exquo(a, b):
    """Exact quotient a / b in an integral domain (field division for fields)."""
    f = getattr(a, "exquo", None)
    if f is not None:
        return f(b)
    return a / b


class PolyRing:
    """The ring base[var]; usable itself as a coefficient domain."""

    def __init__(self, base, var: str = "X"):
        self.base = base
        self.var = var
        self.zero = UniPoly((), base)
        self.one = UniPoly((base.one,), base)

    def __call__(self, value) -> "UniPoly":
        if isinstance(value, UniPoly):
            return value
        return UniPoly((self.base(value),), self.base)

    def gen(self) -> "UniPoly":
        return UniPoly((self.base.zero, self.base.one), self.base)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.base == other.base

    def __hash__(self):
        return hash(("PolyRing", self.base))

    def __repr__(self):
        return f"PolyRing({self.base!r}, {self.var!r})"


def _trim(c: list) -> tuple:
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


class UniPoly:
    __slots__ = ("c", "base")

    def __init__(self, coeffs: Iterable, base, *, trimmed: bool = False):
        self.base = base
        if trimmed:
            self.c = tuple(coeffs)
        else:
            self.c = _trim([base(a) for a in coeffs])

    # -- construction helpers -------------------------------------------------

    @classmethod
    def monomial(cls, coeff, k: int, base) -> "UniPoly":
        coeff = base(coeff)
        if not coeff:
            return cls((), base, trimmed=True)
        return cls((base.zero,) * k + (coeff,), base, trimmed=True)

    def _new(self, coeffs) -> "UniPoly":
        return UniPoly(_trim(list(coeffs)), self.base, trimmed=True)

    def _coerce(self, other) -> "UniPoly":
        if isinstance(other, UniPoly) and other.base == self.base:
            return other
        v = self.base(other)
        return UniPoly((v,) if v else (), self.base, trimmed=True)

    # -- basic queries --------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 stands for the zero polynomial."""
        return len(self.c) - 1

    @property
    def lc(self):
        return self.c[-1] if self.c else self.base.zero

    def coeff(self, k: int):
        return self.c[k] if 0 <= k < len(self.c) else self.base.zero

    def is_zero(self) -> bool:
        return not self.c

    def is_constant(self) -> bool:
        return len(self.c) <= 1

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if isinstance(other, UniPoly) and other.base == self.base:
            return self.c == other.c
        try:
            return self == self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash(self.c)

    # -- ring operations ------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for i, v in enumerate(b):
            res[i] = res[i] + v
        return self._new(res)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(tuple(-v for v in self.c), self.base, trimmed=True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not (isinstance(other, UniPoly) and other.base == self.base):
            try:
                s = self.base(other)
            except (TypeError, ValueError):
                return NotImplemented
            if not s:
                return UniPoly((), self.base, trimmed=True)
            return self._new([v * s for v in self.c])
        a, b = self.c, other.c
        if not a or not b:
            return UniPoly((), self.base, trimmed=True)
        if len(b) == 1:
            return self._new([v * b[0] for v in a])
        if len(a) == 1:
            return self._new([a[0] * v for v in b])
        zero = self.base.zero
        res = [zero] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            if not u:
                continue
            for j, v in enumerate(b):
                res[i + j] = res[i + j] + u * v
        return self._new(res)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result = UniPoly((self.base.one,), self.base, trimmed=True)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, k: int) -> "UniPoly":
        """Multiply by X^k."""
        if not self.c:
            return self
        return UniPoly((self.base.zero,) * k + self.c, self.base, trimmed=True)

    def divmod(self, other: "UniPoly"):
        """Euclidean division; the coefficient domain must be a field."""
        other = self._coerce(other)
        if not other.c:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.c)
        db = other.degree
        if len(r) <= db:
            return UniPoly((), self.base, trimmed=True), self
        inv = self.base.one / other.lc
        q = [self.base.zero] * (len(r) - db)
        bc = other.c
        for k in range(len(r) - 1, db - 1, -1):
            a = r[k]
            if not a:
                continue
            f = a * inv
            q[k - db] = f
            for j in range(db):
                if bc[j]:
                    r[k - db + j] = r[k - db + j] - f * bc[j]
            r[k] = self.base.zero
        return self._new(q), self._new(r[:db])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exquo(self, other) -> "UniPoly":
        """Exact quotient, raising if the division leaves a remainder.

        Works over integral domains whose coefficients themselves support
        exact division (e.g. polynomials over a field).
        """
        other = self._coerce(other)
        if not other.c:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.c)
        db = other.degree
        if len(r) <= db:
            if r:
                raise ArithmeticError("inexact polynomial division")
            return self
        q = [self.base.zero] * (len(r) - db)
        bc = other.c
        lc = other.lc
        for k in range(len(r) - 1, db - 1, -1):
            a = r[k]
            if not a:
                continue
            f = exquo(a, lc)
            q[k - db] = f
            for j in range(db):
                if bc[j]:
                    r[k - db + j] = r[k - db + j] - f * bc[j]
            r[k] = self.base.zero
        if any(r[:db]):
            raise ArithmeticError("inexact polynomial division")
        return self._new(q)

    def __truediv__(self, other):
        if isinstance(other, UniPoly) and other.base == self.base:
            if other.degree == 0:
                other = other.c[0]
            else:
                return self.exquo(other)
        s = self.base(other)
        inv = self.base.one / s
        return self._new([v * inv for v in self.c])

    # -- calculus and evaluation ---------------------------------------------

    def derivative(self) -> "UniPoly":
        return self._new([self.c[i] * i for i in range(1, len(self.c))])

    def __call__(self, value):
        """Horner evaluation at any value that mixes with the coefficients."""
        if not self.c:
            return self.base.zero
        acc = self.c[-1]
        for v in reversed(self.c[:-1]):
            acc = acc * value + v
        return acc

    def compose(self, other: "UniPoly") -> "UniPoly":
        acc = UniPoly((), self.base, trimmed=True)
        for v in reversed(self.c):
            acc = acc * other + v
        return acc

    def monic(self) -> "UniPoly":
        if not self.c or self.c[-1] == self.base.one:
            return self
        inv = self.base.one / self.c[-1]
        return UniPoly(tuple(v * inv for v in self.c[:-1]) + (self.base.one,),
                       self.base, trimmed=True)

    def map_coeffs(self, fn, base) -> "UniPoly":
        return UniPoly([fn(v) for v in self.c], base)

    # -- display --------------------------------------------------------------

    def to_str(self, var: str = "X") -> str:
        if not self.c:
            return "0"
        parts = []
        for k in range(len(self.c) - 1, -1, -1):
            a = self.c[k]
            if not a:
                continue
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            parts.append(_term_str(a, mono))
        return _join_terms(parts)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"UniPoly({self.to_str()})"


def _term_str(a, mono: str) -> str:
    s = str(a)
    if not mono:
        return s
    if s == "1":
        return mono
    if s == "-1":
        return "-" + mono
    if _needs_parens(s):
        s = f"({s})"
    return f"{s}*{mono}"


def _needs_parens(s: str) -> bool:
    return " + " in s or " - " in s


def _join_terms(parts: list[str]) -> str:
    out = parts[0]
    for p in parts[1:]:
        if p.startswith("-") and not p.startswith("-("):
            out += " - " + p[1:]
        else:
            out += " + " + p
    return out


# ---------------------------------------------------------------------------
# gcd machinery (field coefficients)
# ---------------------------------------------------------------------------

def poly_gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic gcd over a field; gcd(0, 0) = 0."""
    if f.degree > 0 and g.degree > 0 and certainly_coprime(f, g):
        return UniPoly((f.base.one,), f.base, trimmed=True)
    while g.c:
        f, g = g, f % g
    return f.monic()


def _gcd_mod_p_degree(a: list[int], b: list[int], p: int) -> int:
    """Degree of gcd(a, b) in F_p[X]; lists are dense, lowest degree first."""
    while b:
        inv = pow(b[-1], -1, p)
        db = len(b) - 1
        a = a[:]
        while len(a) - 1 >= db:
            c = a[-1] * inv % p
            shift = len(a) - 1 - db
            for i, bi in enumerate(b):
                a[shift + i] = (a[shift + i] - c * bi) % p
            while a and not a[-1]:
                a.pop()
        a, b = b, a
    return len(a) - 1


def certainly_coprime(f: UniPoly, g: UniPoly) -> bool:
    """True only if f, g are certainly coprime.

    Reduce modulo a prime where both leading coefficients survive.  If the
    images are coprime then Res(f, g) has nonzero image, so Res(f, g) != 0.
    A False answer proves nothing.
    """
    primes = getattr(f.base, "residue_primes", None)
    if primes is None:
        return False
    residue = f.base.residue
    for p, r in primes():
        fa = [residue(c, p, r) for c in f.c]
        ga = [residue(c, p, r) for c in g.c]
        if None in fa or None in ga or not fa[-1] or not ga[-1]:
            continue
        return _gcd_mod_p_degree(fa, ga, p) == 0
    return False


def poly_xgcd(f: UniPoly, g: UniPoly):
    """Return (d, u, v) with u*f + v*g = d and d monic."""
    if not f.c and not g.c:
        raise ValueError("xgcd of two zero polynomials")
    base = f.base
    one = UniPoly((base.one,), base, trimmed=True)
    zero = UniPoly((), base, trimmed=True)
    r0, r1 = f, g
    s0, s1 = one, zero
    t0, t1 = zero, one
    while r1.c:
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    inv = base.one / r0.lc
    return r0 * inv, s0 * inv, t0 * inv


def squarefree_part(f: UniPoly) -> UniPoly:
    """Monic radical f / gcd(f, f')  (characteristic zero)."""
    if not f.c:
        raise ValueError("squarefree part of the zero polynomial")
    if f.degree == 0:
        return UniPoly((f.base.one,), f.base, trimmed=True)
    g = poly_gcd(f, f.derivative())
    return f.exquo(g).monic()


def yun_decomposition(f: UniPoly) -> list[UniPoly]:
    """Monic a_1, a_2, ... with f = lc(f) * prod a_i^i, a_i squarefree and coprime."""
    if not f.c:
        raise ValueError("decomposition of the zero polynomial")
    f = f.monic()
    if f.degree == 0:
        return []
    fp = f.derivative()
    a0 = poly_gcd(f, fp)
    b = f.exquo(a0)
    c = fp.exquo(a0)
    d = c - b.derivative()
    out = []
    while b.degree > 0:
        a = poly_gcd(b, d)
        out.append(a)
        b = b.exquo(a)
        c = d.exquo(a)
        d = c - b.derivative()
    while out and out[-1].degree == 0:
        out.pop()
    return out


def odd_multiplicity_part(f: UniPoly) -> UniPoly:
    """Monic product of the roots of f occurring with odd multiplicity.

    Constant exactly when f is a constant times a square.
    """
    base = f.base
    acc = UniPoly((base.one,), base, trimmed=True)
    for i, a in enumerate(yun_decomposition(f), start=1):
        if i % 2:
            acc = acc * a
    return acc


def square_root_part(f: UniPoly) -> UniPoly:
    """Monic g with f = lc(f) * g^2; raises when f is not of that shape."""
    base = f.base
    acc = UniPoly((base.one,), base, trimmed=True)
    for i, a in enumerate(yun_decomposition(f), start=1):
        if i % 2 and a.degree > 0:
            raise ValueError("polynomial is not a constant times a square")
        acc = acc * a ** (i // 2)
    return acc


def multiplicities(f: UniPoly) -> list[int]:
    """Multiplicities of the distinct roots of f over an algebraic closure."""
    out = []
    for i, a in enumerate(yun_decomposition(f), start=1):
        out.extend([i] * a.degree)
    return out


# ---------------------------------------------------------------------------
# resultants and discriminants
# ---------------------------------------------------------------------------

def determinant(rows: Sequence[Sequence], zero, one):
    """Fraction-free (Bareiss) determinant over an integral domain."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return one
    sign = 1
    prev = one
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return zero
        p = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = exquo(p * m[i][j] - m[i][k] * m[k][j], prev)
        prev = p
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def sylvester_matrix(f: UniPoly, g: UniPoly) -> list[list]:
    """Sylvester matrix with the deg(g) rows of f first."""
    m, n = f.degree, g.degree
    zero = f.base.zero
    size = m + n
    rows = []
    fc = list(reversed(f.c))
    gc = list(reversed(g.c))
    for i in range(n):
        rows.append([zero] * i + fc + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + gc + [zero] * (size - n - 1 - i))
    return rows


def resultant(f: UniPoly, g: UniPoly):
    """Res(f, g) = det Sylvester(f, g) = lc(f)^deg(g) * prod g(roots of f)."""
    if f.degree <= 0 and g.degree <= 0:
        raise ValueError("resultant of two constants is undefined")
    if not f.c or not g.c:
        return f.base.zero
    if hasattr(f.base, "polys"):
        return _resultant_over_ratfuncs(f, g)
    return determinant(sylvester_matrix(f, g), f.base.zero, f.base.one)


def _resultant_over_ratfuncs(f: UniPoly, g: UniPoly):
    """Clear denominators and run Bareiss in k'[t]; no gcds on the way."""
    K = f.base
    ring = K.polys

    def cleared(p):
        den = ring(1)
        for c in p.c:
            if c:
                den = (den * c.den).exquo(poly_gcd(den, c.den))
        return UniPoly([(c * K(den)).num if c else ring(0) for c in p.c], ring), den

    fp, df = cleared(f)
    gp, dg = cleared(g)
    r = determinant(sylvester_matrix(fp, gp), ring(0), ring(1))
    return K(r) / K(df ** g.degree * dg ** f.degree)


def discriminant(f: UniPoly):
    d = f.degree
    if d < 2:
        raise ValueError("discriminant needs degree >= 2")
    r = exquo(resultant(f, f.derivative()), f.lc)
    return -r if (d * (d - 1) // 2) % 2 else r


# ---------------------------------------------------------------------------
# dense linear algebra over a field
# ---------------------------------------------------------------------------

def rref(rows: Sequence[Sequence], zero, one):
    """Reduced row echelon form; returns (matrix, pivot columns)."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = one / m[r][col]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m, pivots


def nullspace(rows: Sequence[Sequence], ncols: int, zero, one) -> list[list]:
    """Basis of {v : rows * v = 0}, one vector per free column."""
    m, pivots = rref(rows, zero, one) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [zero] * ncols
        v[fc] = one
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][fc]
        basis.append(v)
    return basis


def solve(rows: Sequence[Sequence], rhs: Sequence, zero, one) -> list:
    """Unique solution of a square nonsingular system."""
    n = len(rows)
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    m, pivots = rref(aug, zero, one)
    if pivots != list(range(n)):
        raise ArithmeticError("singular linear system")
    return [m[i][n] for i in range(n)]


# ---------------------------------------------------------------------------
# quotient algebra K[X]/(h)
# ---------------------------------------------------------------------------

class QuotientAlgebra:
    """K[X]/(h) for a monic h over a field K."""

    def __init__(self, modulus: UniPoly):
        if modulus.degree < 1:
            raise ValueError("modulus must have positive degree")
        if modulus.lc != modulus.base.one:
            raise ValueError("modulus must be monic")
        self.modulus = modulus
        self.base = modulus.base
        self.n = modulus.degree
        self.zero = AlgebraElement(UniPoly((), self.base, trimmed=True), self)
        self.one = AlgebraElement(UniPoly((self.base.one,), self.base, trimmed=True), self)
        # over K = k'(t) with h in k'[t][X], products can be reduced numerator-wise
        self._integral = None
        if hasattr(self.base, "polys") and all(c.den.degree == 0 for c in modulus.c):
            self._integral = [c.num for c in modulus.c]

    def __call__(self, value) -> "AlgebraElement":
        if isinstance(value, AlgebraElement):
            return value
        if isinstance(value, UniPoly):
            return AlgebraElement(value % self.modulus, self)
        return AlgebraElement(UniPoly([value], self.base), self)

    @property
    def x(self) -> "AlgebraElement":
        """Class of the variable X."""
        return self(UniPoly((self.base.zero, self.base.one), self.base, trimmed=True))

    def from_coords(self, coords: Sequence) -> "AlgebraElement":
        return self(UniPoly(list(coords), self.base))

    def __eq__(self, other):
        return isinstance(other, QuotientAlgebra) and self.modulus == other.modulus

    def __hash__(self):
        return hash(self.modulus)


class AlgebraElement:
    __slots__ = ("rep", "alg")

    def __init__(self, rep: UniPoly, alg: QuotientAlgebra):
        self.rep = rep
        self.alg = alg

    def _coerce(self, other):
        return other if isinstance(other, AlgebraElement) else self.alg(other)

    def coords(self) -> list:
        """Coefficients in the power basis 1, x, ..., x^(n-1)."""
        return [self.rep.coeff(i) for i in range(self.alg.n)]

    def __add__(self, other):
        return AlgebraElement(self.rep + self._coerce(other).rep, self.alg)

    __radd__ = __add__

    def __sub__(self, other):
        return AlgebraElement(self.rep - self._coerce(other).rep, self.alg)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return AlgebraElement(-self.rep, self.alg)

    def __mul__(self, other):
        other = self._coerce(other)
        if self.alg._integral is not None and self.rep.degree > 0 and other.rep.degree > 0:
            return AlgebraElement(_integral_mulmod(self.rep, other.rep, self.alg), self.alg)
        return AlgebraElement((self.rep * other.rep) % self.alg.modulus, self.alg)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = self.alg.one, self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def inverse(self) -> "AlgebraElement":
        if not self.rep.c:
            raise ZeroDivisionError("inverse of zero in quotient algebra")
        if self.alg._integral is not None and self.rep.degree > 0:
            return AlgebraElement(_integral_inverse(self.rep, self.alg), self.alg)
        d, u, _ = poly_xgcd(self.rep, self.alg.modulus)
        if d.degree > 0:
            raise ReducibleModulusError(
                f"element shares the factor {d} with the modulus")
        return AlgebraElement(u % self.alg.modulus, self.alg)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def is_scalar(self) -> bool:
        return self.rep.degree <= 0

    def scalar(self):
        if not self.is_scalar():
            raise ValueError("element is not a scalar")
        return self.rep.coeff(0)

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.alg == other.alg and self.rep == other.rep
        return self.rep == self.alg(other).rep

    def __hash__(self):
        return hash(self.rep)

    def __bool__(self):
        return bool(self.rep.c)

    def __repr__(self):
        return f"[{self.rep.to_str('x')}]"


def _cleared(p: UniPoly):
    """Polynomials A_i in k'[t] and a monic D in k'[t] with p = sum (A_i / D) X^i."""
    ring = p.base.polys
    den = ring(1)
    for c in p.c:
        if c and c.den.degree > 0:
            den = (den * c.den).exquo(poly_gcd(den, c.den))
    return [c.num * den.exquo(c.den) if c else ring(0) for c in p.c], den


def _integral_mulmod(a: UniPoly, b: UniPoly, alg: QuotientAlgebra) -> UniPoly:
    """(a * b) mod h over k'(t) for h monic in k'[t][X]: no new denominators appear,
    so the product is reduced on numerators and normalized once per coefficient."""
    K = a.base
    A, da = _cleared(a)
    B, db = _cleared(b)
    zero = K.polys(0)
    prod = [zero] * (len(A) + len(B) - 1)
    for i, u in enumerate(A):
        if u.c:
            for j, v in enumerate(B):
                if v.c:
                    prod[i + j] = prod[i + j] + u * v
    H = alg._integral
    n = alg.n
    for k in range(len(prod) - 1, n - 1, -1):
        c = prod[k]
        if c.c:
            for j in range(n):
                if H[j].c:
                    prod[k - n + j] = prod[k - n + j] - c * H[j]
    den = da * db
    make = type(K.one)
    return UniPoly([make(c, den, K) if c.c else K.zero for c in prod[:n]], K)


def _integral_inverse(a: UniPoly, alg: QuotientAlgebra) -> UniPoly:
    """Inverse via Cramer's rule on the multiplication matrix of the numerator.

    With a = A / D and M the matrix of multiplication by A (entries in k'[t]),
    a^-1 = D * M^-1 e_1; the determinants are fraction-free (Bareiss).
    """
    K = a.base
    ring = K.polys
    zero, one = ring(0), ring(1)
    A, D = _cleared(a)
    H = alg._integral
    n = alg.n
    col = list(A) + [zero] * (n - len(A))
    cols = []
    for _ in range(n):
        cols.append(col)
        top = col[n - 1]
        col = [zero] + col[:n - 1]
        if top.c:
            col = [c - top * H[i] if H[i].c else c for i, c in enumerate(col)]
    rows = [[cols[j][i] for j in range(n)] for i in range(n)]
    det = determinant(rows, zero, one)
    if not det.c:
        raise ReducibleModulusError("element is a zero divisor modulo h")
    make = type(K.one)
    out = []
    for i in range(n):
        m = [[(one if r == 0 else zero) if j == i else rows[r][j] for j in range(n)]
             for r in range(n)]
        di = determinant(m, zero, one)
        out.append(make(D * di, det, K) if di.c else K.zero)
    return UniPoly(out, K)


def algebra_substitute(p: UniPoly, a: AlgebraElement) -> AlgebraElement:
    """p(a) reduced modulo the algebra's modulus (Horner)."""
    acc = a.alg.zero
    for v in reversed(p.c):
        acc = acc * a + v
    return acc
