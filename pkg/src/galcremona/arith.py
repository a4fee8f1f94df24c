"""Exact arithmetic tower: Q, number fields Q[z]/(m(z)), and K = k'(t).

Number field elements keep an integer numerator vector over a common
positive denominator, reduced modulo an integral monic modulus.  This keeps
multiplication in pure integer arithmetic, which dominates the cost of the
larger pullback computations.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from typing import Sequence

from .poly import PolyRing, UniPoly, poly_gcd, poly_xgcd


class RationalField:
    """Q as a coefficient domain for UniPoly."""

    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, value) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, NFElem):
            return value.to_fraction()
        return Fraction(value)

    @staticmethod
    def residue_primes() -> list[tuple[int, int]]:
        return [(p, 0) for p in _LARGE_PRIMES]

    @staticmethod
    def residue(value: Fraction, p: int, r: int) -> int | None:
        if value.denominator % p == 0:
            return None
        return value.numerator * pow(value.denominator, -1, p) % p

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()

# primes near 2^61 used for modular shortcuts; not part of any result
_LARGE_PRIMES = (2305843009213693951, 2305843009213693921, 2305843009213693907)


def _as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise TypeError(f"cannot read {v!r} as a rational number")


# ---------------------------------------------------------------------------
# number fields
# ---------------------------------------------------------------------------

class NumberField:
    """k' = Q[z]/(m(z)) for a monic integral m.

    Squarefreeness of m is checked; irreducibility is trusted for
    user-supplied moduli (the cyclotomic constructors only emit irreducible
    ones).
    """

    def __init__(self, modulus: Sequence, label: str | None = None,
                 order: int | None = None):
        m = [_as_fraction(a) for a in modulus]
        while m and m[-1] == 0:
            m.pop()
        if len(m) < 2:
            raise ValueError("modulus must have degree >= 1")
        if m[-1] != 1:
            raise ValueError("modulus must be monic")
        if any(a.denominator != 1 for a in m):
            raise ValueError("modulus must have integer coefficients")
        mq = UniPoly(m, QQ)
        if poly_gcd(mq, mq.derivative()).degree > 0:
            raise ValueError("modulus is not squarefree")
        self.modulus = tuple(int(a) for a in m)
        self.degree = len(m) - 1
        self.order = order
        self.label = label or f"Q[z]/({mq.to_str('z')})"
        d = self.degree
        self.zero = NFElem((0,) * d, 1, self)
        self.one = NFElem((1,) + (0,) * (d - 1), 1, self)
        if d == 1:
            # z = -m_0 in a degree-one field
            self.gen = NFElem((-self.modulus[0],), 1, self)
        else:
            self.gen = NFElem((0, 1) + (0,) * (d - 2), 1, self)
        self._hash = hash(("NF", self.modulus))
        self._residues = None

    @property
    def zeta(self) -> "NFElem":
        """Distinguished primitive root of unity of a cyclotomic field."""
        if self.order is None:
            raise ValueError("not a cyclotomic field")
        return self.gen

    def root_of_unity(self, k: int) -> "NFElem":
        """A primitive k-th root of unity, zeta^(order/k)."""
        if self.order is None or self.order % k:
            raise ValueError(f"field {self.label} has no primitive {k}-th root of unity")
        return self.gen ** (self.order // k)

    def __call__(self, value) -> "NFElem":
        if isinstance(value, NFElem):
            if value.field is self or value.field == self:
                return value
            if value.is_rational():
                return self.from_fraction(value.to_fraction())
            raise TypeError(f"cannot coerce {value} from {value.field.label} into {self.label}")
        if isinstance(value, int):
            return NFElem((value,) + (0,) * (self.degree - 1), 1, self, check=False) \
                if value else self.zero
        return self.from_fraction(_as_fraction(value))

    def from_fraction(self, q: Fraction) -> "NFElem":
        return _make(self, [q.numerator] + [0] * (self.degree - 1), q.denominator)

    def element(self, coeffs: Sequence) -> "NFElem":
        """Element from power-basis coefficients (any length; reduced mod m)."""
        fr = [_as_fraction(a) for a in coeffs]
        den = 1
        for a in fr:
            den = den * a.denominator // gcd(den, a.denominator)
        num = [int(a * den) for a in fr]
        return _make(self, _reduce(num, self.modulus), den)

    def residue_primes(self) -> list[tuple[int, int]]:
        """Pairs (p, r) with m(r) = 0 mod p, i.e. ring maps Z[z]/(m) -> F_p."""
        if self._residues is None:
            self._residues = _find_residue_primes(self.modulus, self.order)
        return self._residues

    @staticmethod
    def residue(value: "NFElem", p: int, r: int) -> int | None:
        if value.den % p == 0:
            return None
        acc = 0
        for a in reversed(value.num):
            acc = (acc * r + a) % p
        return acc * pow(value.den, -1, p) % p

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.modulus == other.modulus

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"NumberField({self.label})"


def _reduce(num: list[int], m: tuple[int, ...]) -> list[int]:
    d = len(m) - 1
    r = list(num)
    for k in range(len(r) - 1, d - 1, -1):
        c = r[k]
        if c:
            base = k - d
            for j in range(d):
                if m[j]:
                    r[base + j] -= c * m[j]
    r = r[:d]
    if len(r) < d:
        r.extend([0] * (d - len(r)))
    return r


def _make(field: NumberField, num: list[int], den: int) -> "NFElem":
    if den == 1:
        return NFElem(tuple(num), 1, field, check=False)
    if den < 0:
        num = [-a for a in num]
        den = -den
    g = gcd(den, *num)
    if g != 1:
        num = [a // g for a in num]
        den //= g
    return NFElem(tuple(num), den, field, check=False)


def _find_residue_primes(modulus: tuple, order: int | None, count: int = 3):
    """Primes p = 1 mod order (about 2^31) with a root r of the modulus mod p."""
    from sympy import isprime

    def value(r, p):
        acc = 0
        for a in reversed(modulus):
            acc = (acc * r + a) % p
        return acc

    if len(modulus) == 2:
        return [(p, -modulus[0] % p) for p in _LARGE_PRIMES]
    if order is None:
        return []
    out = []
    p = (1 << 31) // order * order + 1
    while len(out) < count:
        if isprime(p):
            for g in range(2, 50):
                r = pow(g, (p - 1) // order, p)
                if value(r, p) == 0:
                    out.append((p, r))
                    break
        p += order
    return out


class NFElem:
    __slots__ = ("num", "den", "field")

    def __init__(self, num: tuple, den: int, field: NumberField, check: bool = True):
        if check:
            if den <= 0:
                raise ValueError("denominator must be positive")
            g = gcd(den, *num)
            if g != 1:
                num = tuple(a // g for a in num)
                den //= g
        self.num = num
        self.den = den
        self.field = field

    def _other(self, other) -> "NFElem":
        if isinstance(other, NFElem) and other.field is self.field:
            return other
        return self.field(other)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.num[0], self.den)

    def coeffs(self) -> list[Fraction]:
        return [Fraction(a, self.den) for a in self.num]

    def __bool__(self):
        return any(self.num)

    def __eq__(self, other):
        if isinstance(other, NFElem):
            if other.field is self.field or other.field == self.field:
                return self.num == other.num and self.den == other.den
            return self.is_rational() and other.is_rational() \
                and self.to_fraction() == other.to_fraction()
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.num[0], self.den) == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(self.num[0], self.den))
        return hash((self.num, self.den))

    def __add__(self, other):
        if not isinstance(other, (NFElem, int, Fraction)):
            return NotImplemented
        o = self._other(other)
        if self.den == o.den:
            return _make(self.field, [a + b for a, b in zip(self.num, o.num)], self.den)
        d1, d2 = self.den, o.den
        return _make(self.field, [a * d2 + b * d1 for a, b in zip(self.num, o.num)], d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return NFElem(tuple(-a for a in self.num), self.den, self.field, check=False)

    def __sub__(self, other):
        if not isinstance(other, (NFElem, int, Fraction)):
            return NotImplemented
        return self + (-self._other(other))

    def __rsub__(self, other):
        if not isinstance(other, (NFElem, int, Fraction)):
            return NotImplemented
        return self._other(other) - self

    def __mul__(self, other):
        if not isinstance(other, (NFElem, int, Fraction)):
            return NotImplemented
        if isinstance(other, int):
            if not other:
                return self.field.zero
            return _make(self.field, [a * other for a in self.num], self.den)
        o = self._other(other)
        a, b = self.num, o.num
        d = len(a)
        if d == 1:
            return _make(self.field, [a[0] * b[0]], self.den * o.den)
        if d == 2:
            m0, m1 = self.field.modulus[0], self.field.modulus[1]
            top = a[1] * b[1]
            return _make(self.field, [a[0] * b[0] - top * m0, a[0] * b[1] + a[1] * b[0] - top * m1],
                         self.den * o.den)
        prod = [0] * (2 * d - 1)
        for i, u in enumerate(a):
            if u:
                for j, v in enumerate(b):
                    if v:
                        prod[i + j] += u * v
        return _make(self.field, _reduce(prod, self.field.modulus), self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "NFElem":
        if not self:
            raise ZeroDivisionError("inverse of zero in number field")
        if self.field.degree == 1 or self.is_rational():
            return _make(self.field, [self.den] + [0] * (self.field.degree - 1), self.num[0])
        if self.field.degree == 2:
            # (n0 + n1 z)^-1 = conj / norm with conj(z) = -m1 - z
            n0, n1 = self.num
            m0, m1 = self.field.modulus[0], self.field.modulus[1]
            norm = n0 * n0 - n0 * n1 * m1 + n1 * n1 * m0
            return _make(self.field, [self.den * (n0 - n1 * m1), -self.den * n1], norm)
        a = UniPoly(self.coeffs(), QQ)
        m = UniPoly(self.field.modulus, QQ)
        g, u, _ = poly_xgcd(a, m)
        if g.degree != 0:
            raise ZeroDivisionError("element is a zero divisor (modulus reducible)")
        return self.field.element(list(u.c))

    def __truediv__(self, other):
        if not isinstance(other, (NFElem, int, Fraction)):
            return NotImplemented
        return self * self._other(other).inverse()

    def __rtruediv__(self, other):
        if not isinstance(other, (NFElem, int, Fraction)):
            return NotImplemented
        return self._other(other) * self.inverse()

    exquo = __truediv__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = self.field.one, self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __str__(self):
        if self.is_rational():
            return str(Fraction(self.num[0], self.den))
        p = UniPoly(self.coeffs(), QQ)
        return f"({p.to_str('z')})"

    def __repr__(self):
        return f"NFElem({self}, {self.field.label})"


def nf_inverse(a: NFElem) -> NFElem:
    return a.inverse()


def cyclotomic_polynomial(n: int) -> list[int]:
    """Integer coefficients (ascending) of the n-th cyclotomic polynomial."""
    if n <= 0:
        raise ValueError("cyclotomic order must be positive")
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _int_exquo(num, cyclotomic_polynomial(d))
    return num


def _int_exquo(a: list[int], b: list[int]) -> list[int]:
    # b monic
    a = list(a)
    db = len(b) - 1
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        q[k - db] = c
        for j in range(db + 1):
            a[k - db + j] -= c * b[j]
    assert not any(a), "cyclotomic division not exact"
    return q


@lru_cache(maxsize=None)
def make_cyclotomic(n: int) -> NumberField:
    """Q(zeta_n) with modulus the n-th cyclotomic polynomial; zeta = z."""
    if n <= 0:
        raise ValueError("cyclotomic order must be positive")
    labels = {1: "Q", 2: "Q", 3: "Q(ω)", 4: "Q(i)"}
    return NumberField(cyclotomic_polynomial(n), labels.get(n, f"Q(ζ{n})"), order=n)


def canonical_order(n: int) -> int:
    """Q(zeta_2m) = Q(zeta_m) for odd m; pick the smaller order."""
    return n // 2 if n % 4 == 2 else n


def embed(a: NFElem, target: NumberField) -> NFElem:
    """Image of a cyclotomic-field element in a larger cyclotomic field."""
    src = a.field
    if src == target:
        return target(a)
    if a.is_rational():
        return target.from_fraction(a.to_fraction())
    if src.order is None or target.order is None:
        raise ValueError("embedding is only defined between cyclotomic fields")
    n, big = src.order, target.order
    if big % n:
        raise ValueError(f"Q(zeta_{n}) does not embed in Q(zeta_{big})")
    step = target.gen ** (big // n)
    acc = target.zero
    power = target.one
    for c in a.coeffs():
        if c:
            acc = acc + power * target.from_fraction(c)
        power = power * step
    return acc


# ---------------------------------------------------------------------------
# square roots of constants
# ---------------------------------------------------------------------------

def rational_sqrt(q: Fraction) -> Fraction | None:
    q = Fraction(q)
    if q < 0:
        return None
    a, b = isqrt(q.numerator), isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None


def squarefree_decompose(q: Fraction) -> tuple[int, Fraction]:
    """q = r * s^2 with r a squarefree integer (sign kept in r), s > 0 rational."""
    from sympy import factorint

    q = Fraction(q)
    if q == 0:
        raise ValueError("zero has no squarefree decomposition")
    n = q.numerator * q.denominator
    r = -1 if n < 0 else 1
    s = 1
    for p, e in factorint(abs(n)).items():
        if e % 2:
            r *= p
        s *= p ** (e // 2)
    return r, Fraction(s, q.denominator)


def sqrt_order(r: int) -> int:
    """Least cyclotomic order N with sqrt(r) in Q(zeta_N), for squarefree r."""
    from sympy import factorint

    odd = 1
    sign = -1 if r < 0 else 1
    star = 1
    two = False
    for p in factorint(abs(r)):
        if p == 2:
            two = True
        else:
            odd *= p
            star *= -1 if p % 4 == 3 else 1
    rest = sign * star  # r / prod(p*) up to the factor 2
    if two:
        return _lcm(odd, 8)
    if rest < 0:
        return _lcm(odd, 4)
    return odd


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _gauss_sum(p: int, field: NumberField) -> NFElem:
    zp = field.root_of_unity(p)
    acc = field.zero
    power = field.one
    for a in range(1, p):
        power = power * zp
        acc = acc + power * (1 if pow(a, (p - 1) // 2, p) == 1 else -1)
    return acc


def cyclotomic_sqrt(r: int, field: NumberField) -> NFElem:
    """sqrt(r) for squarefree integer r inside a cyclotomic field (Gauss sums)."""
    from sympy import factorint

    acc = field.one
    star = 1
    two = False
    for p in sorted(factorint(abs(r))):
        if p == 2:
            two = True
            continue
        acc = acc * _gauss_sum(p, field)
        star *= -1 if p % 4 == 3 else 1
    rest = (-1 if r < 0 else 1) * star
    if rest < 0:
        acc = acc * field.root_of_unity(4)
    if two:
        z8 = field.root_of_unity(8)
        acc = acc * (z8 + z8 ** 7)
    if acc * acc != field(r):
        raise ArithmeticError(f"sqrt({r}) construction failed in {field.label}")
    return acc


def nf_sqrt(c: NFElem) -> NFElem | None:
    """A square root of c inside c's own field, or None if none is found.

    Rational c are handled in cyclotomic fields through Gauss sums; other
    elements only in quadratic fields.
    """
    field = c.field
    if not c:
        return field.zero
    if c.is_rational():
        q = c.to_fraction()
        s = rational_sqrt(q)
        if s is not None:
            return field.from_fraction(s)
        r, s = squarefree_decompose(q)
        if field.order is not None and field.order % sqrt_order(r) == 0:
            return cyclotomic_sqrt(r, field) * field.from_fraction(s)
        if field.degree == 2:
            return _quadratic_sqrt(c)
        return None
    if field.degree == 2:
        return _quadratic_sqrt(c)
    return None


def _quadratic_sqrt(c: NFElem) -> NFElem | None:
    field = c.field
    m0, m1 = (Fraction(v) for v in field.modulus[:2])
    # w = z + m1/2 satisfies w^2 = delta
    delta = m1 * m1 / 4 - m0
    c0, c1 = c.coeffs()
    # express c = a0 + a1 w
    a1 = c1
    a0 = c0 - c1 * m1 / 2
    w = field.gen + field.from_fraction(m1 / 2)
    cands = []
    if a1 == 0:
        s = rational_sqrt(a0)
        if s is not None:
            cands.append(field.from_fraction(s))
        s = rational_sqrt(a0 / delta)
        if s is not None:
            cands.append(field.from_fraction(s) * w)
    else:
        disc = a0 * a0 - delta * a1 * a1
        root = rational_sqrt(disc)
        if root is not None:
            for sign in (1, -1):
                b2 = (a0 + sign * root) / (2 * delta)
                b = rational_sqrt(b2) if b2 > 0 else None
                if b:
                    a = a1 / (2 * b)
                    cands.append(field.from_fraction(a) + field.from_fraction(b) * w)
    for s in cands:
        if s * s == c:
            return s
    return None


# ---------------------------------------------------------------------------
# the rational function field K = k'(t)
# ---------------------------------------------------------------------------

class RationalFunctionField:
    def __init__(self, nf: NumberField, var: str = "t"):
        self.nf = nf
        self.var = var
        self.polys = PolyRing(nf, var)
        one = UniPoly((nf.one,), nf, trimmed=True)
        self._one_poly = one
        self.zero = RatFunc(UniPoly((), nf, trimmed=True), one, self, _raw=True)
        self.one = RatFunc(one, one, self, _raw=True)
        self.t = RatFunc(UniPoly((nf.zero, nf.one), nf, trimmed=True), one, self, _raw=True)

    def __call__(self, value) -> "RatFunc":
        if isinstance(value, RatFunc):
            if value.field is self:
                return value
            if value.field == self:
                return RatFunc(value.num, value.den, self, _raw=True)
            raise TypeError("rational function from a different field")
        if isinstance(value, UniPoly):
            if value.base != self.nf:
                raise TypeError("polynomial over a foreign coefficient domain")
            return RatFunc(UniPoly(value.c, self.nf), self._one_poly, self, _raw=True)
        c = self.nf(value)
        return RatFunc(UniPoly((c,) if c else (), self.nf, trimmed=True),
                       self._one_poly, self, _raw=True)

    def poly(self, coeffs) -> UniPoly:
        return UniPoly(coeffs, self.nf)

    # t is specialized to this residue in modular shortcuts
    _T_RESIDUE = 1234577

    def residue_primes(self) -> list[tuple[int, tuple[int, int]]]:
        return [(p, (r, self._T_RESIDUE)) for p, r in self.nf.residue_primes()]

    def residue(self, value: "RatFunc", p: int, rs: tuple[int, int]) -> int | None:
        r, s = rs
        vals = []
        for poly in (value.num, value.den):
            acc = 0
            for c in reversed(poly.c):
                v = self.nf.residue(c, p, r)
                if v is None:
                    return None
                acc = (acc * s + v) % p
            vals.append(acc)
        if not vals[1]:
            return None
        return vals[0] * pow(vals[1], -1, p) % p

    def __eq__(self, other):
        return isinstance(other, RationalFunctionField) and self.nf == other.nf

    def __hash__(self):
        return hash(("K", self.nf))

    def __repr__(self):
        return f"{self.nf.label}({self.var})"


def rf_normalize(num: UniPoly, den: UniPoly, field: RationalFunctionField | None = None) -> "RatFunc":
    """Canonical fraction: coprime numerator/denominator, monic denominator."""
    if not den.c:
        raise ZeroDivisionError("rational function with zero denominator")
    if field is None:
        field = RationalFunctionField(den.base)
    return RatFunc(num, den, field)


class RatFunc:
    __slots__ = ("num", "den", "field")

    def __init__(self, num: UniPoly, den: UniPoly, field: RationalFunctionField,
                 _raw: bool = False):
        if not _raw:
            if not den.c:
                raise ZeroDivisionError("rational function with zero denominator")
            if not num.c:
                num, den = num, field._one_poly
            elif den.degree > 0:
                g = poly_gcd(num, den)
                if g.degree > 0:
                    num, den = num.exquo(g), den.exquo(g)
            lc = den.lc
            if lc != field.nf.one:
                inv = field.nf.one / lc
                num, den = num * inv, den * inv
        self.num = num
        self.den = den
        self.field = field

    def _other(self, other) -> "RatFunc":
        if isinstance(other, RatFunc) and other.field is self.field:
            return other
        return self.field(other)

    def _foreign(self, other) -> bool:
        return (isinstance(other, UniPoly) and other.base != self.field.nf) \
            or hasattr(other, "alg")

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def is_constant(self) -> bool:
        return self.den.degree == 0 and self.num.degree <= 0

    def constant(self) -> NFElem:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num.coeff(0) if self.num.c else self.field.nf.zero

    @property
    def degree(self) -> int:
        """deg num - deg den (the order of the pole at infinity)."""
        return self.num.degree - self.den.degree

    def __bool__(self):
        return bool(self.num.c)

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num.c == other.num.c and self.den.c == other.den.c
        try:
            o = self.field(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.num.c == o.num.c and self.den.c == o.den.c

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant())
        return hash((self.num.c, self.den.c))

    def __add__(self, other):
        if self._foreign(other):
            return NotImplemented
        o = self._other(other)
        if not o.num.c:
            return self
        if not self.num.c:
            return o
        if self.den.degree == 0 and o.den.degree == 0:
            return RatFunc(self.num + o.num, self.den, self.field, _raw=True)
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den, self.field)
        # Henrici: only gcds of denominators and of the sum with g are needed
        g = poly_gcd(self.den, o.den)
        if g.degree <= 0:
            return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den, self.field,
                           _raw=True)
        b, d = self.den.exquo(g), o.den.exquo(g)
        s = self.num * d + o.num * b
        if not s.c:
            return self.field.zero
        g2 = poly_gcd(s, g)
        if g2.degree > 0:
            s, g = s.exquo(g2), g.exquo(g2)
        return RatFunc(s, b * d * g, self.field, _raw=True)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, self.field, _raw=True)

    def __sub__(self, other):
        if self._foreign(other):
            return NotImplemented
        return self + (-self._other(other))

    def __rsub__(self, other):
        if self._foreign(other):
            return NotImplemented
        return self._other(other) - self

    def __mul__(self, other):
        if self._foreign(other):
            return NotImplemented
        if isinstance(other, int):
            if not other:
                return self.field.zero
            return RatFunc(self.num * other, self.den, self.field, _raw=True)
        o = self._other(other)
        if not self.num.c or not o.num.c:
            return self.field.zero
        if self.den.degree == 0 and o.den.degree == 0:
            return RatFunc(self.num * o.num, self.den, self.field, _raw=True)
        n1, d1, n2, d2 = self.num, self.den, o.num, o.den
        if d2.degree > 0:
            g = poly_gcd(n1, d2)
            if g.degree > 0:
                n1, d2 = n1.exquo(g), d2.exquo(g)
        if d1.degree > 0:
            g = poly_gcd(n2, d1)
            if g.degree > 0:
                n2, d1 = n2.exquo(g), d1.exquo(g)
        num, den = n1 * n2, d1 * d2
        return RatFunc(num, den, self.field, _raw=True)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self.num.c:
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc(self.den, self.num, self.field)

    def __truediv__(self, other):
        if self._foreign(other):
            return NotImplemented
        return self * self._other(other).inverse()

    def __rtruediv__(self, other):
        if self._foreign(other):
            return NotImplemented
        return self._other(other) * self.inverse()

    exquo = __truediv__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc(self.num ** k, self.den ** k, self.field, _raw=True)

    def __call__(self, value):
        """Evaluate at a constant (or compose with another rational function)."""
        if isinstance(value, RatFunc):
            return _ratfunc_compose(self, value)
        num, den = self.num(value), self.den(value)
        return num / den

    def map_coeffs(self, fn, field: RationalFunctionField) -> "RatFunc":
        return RatFunc(self.num.map_coeffs(fn, field.nf), self.den.map_coeffs(fn, field.nf), field)

    def __str__(self):
        v = self.field.var
        if self.den.degree == 0:
            return self.num.to_str(v)
        n = self.num.to_str(v)
        if " " in n:
            n = f"({n})"
        return f"{n}/({self.den.to_str(v)})"

    def __repr__(self):
        return f"RatFunc({self})"


def _ratfunc_compose(f: RatFunc, g: RatFunc) -> RatFunc:
    acc_n = f.field.zero
    for c in reversed(f.num.c):
        acc_n = acc_n * g + f.field(c)
    acc_d = f.field.zero
    for c in reversed(f.den.c):
        acc_d = acc_d * g + f.field(c)
    return acc_n / acc_d


def ratfunc_multiplicities(q: RatFunc) -> list[int]:
    """Orders of the zeros and poles of q at finite points (poles negative)."""
    from .poly import multiplicities

    return multiplicities(q.num) + [-m for m in multiplicities(q.den)]
