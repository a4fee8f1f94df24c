"""Sparse multivariate polynomials over a number field.

Exponent vectors are packed into a single int (most significant field =
first variable), so monomial multiplication is integer addition and the
natural int order is the lex order with x_0 > x_1 > ...
"""

from __future__ import annotations

import heapq
from typing import Iterable, Mapping, Sequence

_B = 24
_MASK = (1 << _B) - 1


def pack(exps: Sequence[int]) -> int:
    e = 0
    for a in exps:
        if a < 0 or a > _MASK:
            raise ValueError("exponent out of range")
        e = (e << _B) | a
    return e


def unpack(e: int, n: int) -> tuple[int, ...]:
    out = [0] * n
    for i in range(n - 1, -1, -1):
        out[i] = e & _MASK
        e >>= _B
    return tuple(out)


class MPoly:
    __slots__ = ("terms", "nvars", "base")

    def __init__(self, terms: Mapping[int, object], nvars: int, base):
        self.terms = {e: c for e, c in terms.items() if c}
        self.nvars = nvars
        self.base = base

    # -- construction ---------------------------------------------------------

    @classmethod
    def _raw(cls, terms: dict, nvars: int, base) -> "MPoly":
        p = cls.__new__(cls)
        p.terms = terms
        p.nvars = nvars
        p.base = base
        return p

    @classmethod
    def from_dict(cls, d: Mapping[tuple, object], nvars: int, base) -> "MPoly":
        terms: dict[int, object] = {}
        for exps, c in d.items():
            c = base(c)
            if c:
                k = pack(exps)
                terms[k] = terms.get(k, base.zero) + c
        return cls(terms, nvars, base)

    @classmethod
    def constant(cls, c, nvars: int, base) -> "MPoly":
        c = base(c)
        return cls._raw({0: c} if c else {}, nvars, base)

    @classmethod
    def var(cls, i: int, nvars: int, base) -> "MPoly":
        exps = [0] * nvars
        exps[i] = 1
        return cls._raw({pack(exps): base.one}, nvars, base)

    @classmethod
    def gens(cls, nvars: int, base) -> list["MPoly"]:
        return [cls.var(i, nvars, base) for i in range(nvars)]

    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.nvars != self.nvars:
                raise ValueError("polynomials in different numbers of variables")
            return other
        return MPoly.constant(other, self.nvars, self.base)

    # -- queries --------------------------------------------------------------

    def items(self) -> Iterable[tuple[tuple[int, ...], object]]:
        """(exponent tuple, coefficient) pairs in descending lex order."""
        for e in sorted(self.terms, reverse=True):
            yield unpack(e, self.nvars), self.terms[e]

    def as_dict(self) -> dict[tuple[int, ...], object]:
        return {unpack(e, self.nvars): c for e, c in self.terms.items()}

    def coeff(self, exps: Sequence[int]):
        return self.terms.get(pack(exps), self.base.zero)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or list(self.terms) == [0]

    def constant_value(self):
        return self.terms.get(0, self.base.zero)

    def degrees(self) -> list[int]:
        return [sum(unpack(e, self.nvars)) for e in self.terms]

    @property
    def total_degree(self) -> int:
        return max(self.degrees(), default=-1)

    def lowest_degree(self) -> int:
        """Order of vanishing at the origin (-1 for the zero polynomial)."""
        return min(self.degrees(), default=-1)

    def degree_in(self, i: int) -> int:
        shift = _B * (self.nvars - 1 - i)
        return max(((e >> shift) & _MASK for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len(set(self.degrees())) <= 1

    def homogeneous_part(self, k: int) -> "MPoly":
        n = self.nvars
        return MPoly._raw({e: c for e, c in self.terms.items() if sum(unpack(e, n)) == k},
                          n, self.base)

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        try:
            return self == self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, MPoly):
            try:
                other = self._coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        res = dict(self.terms)
        for e, c in other.terms.items():
            v = res.get(e)
            if v is None:
                res[e] = c
            else:
                v = v + c
                if v:
                    res[e] = v
                else:
                    del res[e]
        return MPoly._raw(res, self.nvars, self.base)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw({e: -c for e, c in self.terms.items()}, self.nvars, self.base)

    def __sub__(self, other):
        if not isinstance(other, MPoly):
            try:
                other = self._coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, s) -> "MPoly":
        s = self.base(s) if not isinstance(s, int) else s
        if not s:
            return MPoly._raw({}, self.nvars, self.base)
        return MPoly._raw({e: c * s for e, c in self.terms.items()}, self.nvars, self.base)

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            try:
                return self.scale(other)
            except (TypeError, ValueError):
                return NotImplemented
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        res: dict[int, object] = {}
        get = res.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                k = ea + eb
                v = get(k)
                res[k] = ca * cb if v is None else v + ca * cb
        return MPoly(res, self.nvars, self.base)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result = MPoly.constant(self.base.one, self.nvars, self.base)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_monomial(self, exps: Sequence[int], c=None) -> "MPoly":
        s = pack(exps)
        if c is None:
            return MPoly._raw({e + s: v for e, v in self.terms.items()}, self.nvars, self.base)
        return MPoly._raw({e + s: v * c for e, v in self.terms.items()}, self.nvars, self.base)

    def exquo(self, other: "MPoly") -> "MPoly":
        q = self.divide(other)
        if q is None:
            raise ArithmeticError("inexact multivariate division")
        return q

    def divide(self, other: "MPoly") -> "MPoly | None":
        """Exact quotient self / other, or None when other does not divide self.

        Lex-order division by a single divisor: the remainder is zero iff
        other divides self.
        """
        other = self._coerce(other)
        if not other.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        n = self.nvars
        lt = max(other.terms)
        lt_exps = unpack(lt, n)
        inv = self.base.one / other.terms[lt]
        dterms = [(e - lt, c) for e, c in other.terms.items() if e != lt]
        r = dict(self.terms)
        heap = [-e for e in r]
        heapq.heapify(heap)
        q: dict[int, object] = {}
        while heap:
            e = -heapq.heappop(heap)
            c = r.get(e)
            if c is None:
                continue
            if any(a < b for a, b in zip(unpack(e, n), lt_exps)):
                return None
            del r[e]
            f = c * inv
            qe = e - lt
            q[qe] = f
            for off, dc in dterms:
                k = e + off
                v = r.get(k)
                if v is None:
                    r[k] = -(f * dc)
                    heapq.heappush(heap, -k)
                else:
                    v = v - f * dc
                    if v:
                        r[k] = v
                    else:
                        del r[k]
        return MPoly._raw(q, n, self.base)

    # -- substitution ---------------------------------------------------------

    def compose(self, values: Sequence["MPoly"]) -> "MPoly":
        """Substitute values[i] for variable i (all values share one ring)."""
        if len(values) != self.nvars:
            raise ValueError("wrong number of substitution values")
        target = values[0]
        one = MPoly.constant(target.base.one, target.nvars, target.base)
        cache: list[dict[int, MPoly]] = [{0: one, 1: v} for v in values]

        def power(i: int, k: int) -> MPoly:
            c = cache[i]
            if k not in c:
                h = k // 2
                c[k] = power(i, h) * power(i, k - h)
            return c[k]

        acc = MPoly._raw({}, target.nvars, target.base)
        for e, coef in self.terms.items():
            exps = unpack(e, self.nvars)
            term = None
            for i, k in enumerate(exps):
                if k:
                    p = power(i, k)
                    term = p if term is None else term * p
            if term is None:
                term = one
            acc = acc + term.scale(coef)
        return acc

    def evaluate(self, point: Sequence):
        acc = self.base.zero
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, unpack(e, self.nvars)):
                if k:
                    v = v * x ** k
            acc = acc + v
        return acc

    def diff(self, i: int) -> "MPoly":
        n = self.nvars
        shift = _B * (n - 1 - i)
        unit = 1 << shift
        res = {}
        for e, c in self.terms.items():
            k = (e >> shift) & _MASK
            if k:
                res[e - unit] = c * k
        return MPoly._raw(res, n, self.base)

    def translate(self, shift: Sequence) -> "MPoly":
        """p(x_0 + a_0, ..., x_{n-1} + a_{n-1})."""
        gens = MPoly.gens(self.nvars, self.base)
        return self.compose([g + a for g, a in zip(gens, shift)])

    def map_coeffs(self, fn, base) -> "MPoly":
        return MPoly({e: fn(c) for e, c in self.terms.items()}, self.nvars, base)

    def homogenize(self, degree: int | None = None) -> "MPoly":
        """Append a new last variable making every term of the given degree."""
        d = self.total_degree if degree is None else degree
        n = self.nvars
        res = {}
        for e, c in self.terms.items():
            exps = unpack(e, n)
            res[pack(exps + (d - sum(exps),))] = c
        return MPoly._raw(res, n + 1, self.base)

    def dehomogenize(self, i: int) -> "MPoly":
        """Set variable i to 1 and drop it."""
        n = self.nvars
        res: dict[int, object] = {}
        for e, c in self.terms.items():
            exps = unpack(e, n)
            k = pack(exps[:i] + exps[i + 1:])
            v = res.get(k)
            res[k] = c if v is None else v + c
        return MPoly(res, n - 1, self.base)

    def permute(self, perm: Sequence[int]) -> "MPoly":
        """Rename variable i to perm[i]."""
        n = self.nvars
        res = {}
        for e, c in self.terms.items():
            exps = unpack(e, n)
            new = [0] * n
            for i, k in enumerate(exps):
                new[perm[i]] = k
            res[pack(new)] = c
        return MPoly._raw(res, n, self.base)

    # -- display --------------------------------------------------------------

    def sorted_items(self):
        """Terms by descending total degree, then descending lex."""
        n = self.nvars
        keys = sorted(self.terms, key=lambda e: (sum(unpack(e, n)), e), reverse=True)
        return [(unpack(e, n), self.terms[e]) for e in keys]

    def to_str(self, names: Sequence[str]) -> str:
        from .poly import _join_terms, _term_str

        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.sorted_items():
            mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(names, exps) if k)
            parts.append(_term_str(c, mono))
        return _join_terms(parts)

    def __repr__(self):
        names = [f"x{i}" for i in range(self.nvars)]
        return f"MPoly({self.to_str(names)})"


def matrix_map(matrix: Sequence[Sequence], base) -> list[MPoly]:
    """Linear forms (sum_j A[i][j] x_j)_i of a square matrix."""
    n = len(matrix)
    gens = MPoly.gens(n, base)
    out = []
    for row in matrix:
        acc = MPoly.constant(0, n, base)
        for a, g in zip(row, gens):
            acc = acc + g.scale(base(a))
        out.append(acc)
    return out
