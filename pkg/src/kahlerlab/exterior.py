"""Exact complexified exterior algebra on C^n.

Scalars are Gaussian rationals (a + b*i with rational a, b) kept in reduced
integer form, so every identity asserted downstream is checked with zero
tolerance.  Forms are sparse maps from basis monomials dz^S ^ dzb^T (S, T
strictly increasing index subsets of {1..n}) to scalars.  The monomials are
declared orthonormal; the inner product is linear in the first slot and
conjugate-linear in the second.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import gcd
from typing import Iterable, Mapping, NamedTuple, Union

Rationalish = Union[int, Fraction]
Scalarish = Union[int, Fraction, "GaussRational"]


class GaussRational:
    """Gaussian rational (x + y*i)/d with d > 0 and gcd(x, y, d) = 1."""

    __slots__ = ("_x", "_y", "_d")

    def __init__(self, re: Rationalish = 0, im: Rationalish = 0):
        if isinstance(re, GaussRational) or isinstance(im, GaussRational):
            raise TypeError("components must be int or Fraction")
        fr = re if isinstance(re, Fraction) else Fraction(re)
        fi = im if isinstance(im, Fraction) else Fraction(im)
        d = fr.denominator * fi.denominator // gcd(fr.denominator, fi.denominator)
        self._x = fr.numerator * (d // fr.denominator)
        self._y = fi.numerator * (d // fi.denominator)
        self._d = d

    @classmethod
    def _raw(cls, x: int, y: int, d: int) -> "GaussRational":
        # trusted constructor: (x, y, d) already normalized
        self = object.__new__(cls)
        self._x, self._y, self._d = x, y, d
        return self

    @classmethod
    def _norm(cls, x: int, y: int, d: int) -> "GaussRational":
        if d < 0:
            x, y, d = -x, -y, -d
        g = gcd(x, y, d)
        if g > 1:
            x //= g
            y //= g
            d //= g
        return cls._raw(x, y, d)

    @classmethod
    def i_power(cls, e: int) -> "GaussRational":
        """i**e for any integer e (negative allowed)."""
        return _I_POWERS[e % 4]

    @property
    def re(self) -> Fraction:
        return Fraction(self._x, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._y, self._d)

    def conjugate(self) -> "GaussRational":
        return GaussRational._raw(self._x, -self._y, self._d)

    def abs_sq(self) -> Fraction:
        return Fraction(self._x * self._x + self._y * self._y, self._d * self._d)

    def is_zero(self) -> bool:
        return self._x == 0 and self._y == 0

    def __bool__(self) -> bool:
        return self._x != 0 or self._y != 0

    @staticmethod
    def _coerce(v: Scalarish) -> "GaussRational":
        if isinstance(v, GaussRational):
            return v
        if isinstance(v, (int, Fraction)):
            return GaussRational(v)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: Scalarish) -> "GaussRational":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        d1, d2 = self._d, o._d
        if d1 == d2:
            if d1 == 1:
                return GaussRational._raw(self._x + o._x, self._y + o._y, 1)
            return GaussRational._norm(self._x + o._x, self._y + o._y, d1)
        return GaussRational._norm(
            self._x * d2 + o._x * d1, self._y * d2 + o._y * d1, d1 * d2
        )

    __radd__ = __add__

    def __neg__(self) -> "GaussRational":
        return GaussRational._raw(-self._x, -self._y, self._d)

    def __sub__(self, other: Scalarish) -> "GaussRational":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.__add__(o.__neg__())

    def __rsub__(self, other: Scalarish) -> "GaussRational":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o.__sub__(self)

    def __mul__(self, other: Scalarish) -> "GaussRational":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        x = self._x * o._x - self._y * o._y
        y = self._x * o._y + self._y * o._x
        d = self._d * o._d
        if d == 1:
            return GaussRational._raw(x, y, 1)
        return GaussRational._norm(x, y, d)

    __rmul__ = __mul__

    def inverse(self) -> "GaussRational":
        if self.is_zero():
            raise ZeroDivisionError("division by zero Gaussian rational")
        n2 = self._x * self._x + self._y * self._y
        return GaussRational._norm(self._d * self._x, -self._d * self._y, n2)

    def __truediv__(self, other: Scalarish) -> "GaussRational":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.__mul__(o.inverse())

    def __rtruediv__(self, other: Scalarish) -> "GaussRational":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o.__mul__(self.inverse())

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GaussRational):
            return (
                self._x == other._x and self._y == other._y and self._d == other._d
            )
        if isinstance(other, (int, Fraction)):
            return self._y == 0 and Fraction(self._x, self._d) == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._y == 0:
            return hash(Fraction(self._x, self._d))
        return hash((self._x, self._y, self._d))

    def __str__(self) -> str:
        re_s = _frac_str(self._x, self._d)
        im_s = _frac_str(self._y, self._d)
        if self._y == 0:
            return re_s
        if self._x == 0:
            return im_s + "i"
        sign = "+" if self._y > 0 else "-"
        return f"{re_s}{sign}{_frac_str(abs(self._y), self._d)}i"

    def __repr__(self) -> str:
        return f"GaussRational({self.re!r}, {self.im!r})"


def _frac_str(num: int, den: int) -> str:
    return str(num) if den == 1 else f"{num}/{den}"


_I_POWERS = (
    GaussRational(1),
    GaussRational(0, 1),
    GaussRational(-1),
    GaussRational(0, -1),
)

ZERO = GaussRational(0)
ONE = GaussRational(1)
I = GaussRational(0, 1)


class Monomial(NamedTuple):
    """Basis monomial dz^s ^ dzb^t; s and t are strictly increasing tuples."""

    s: tuple[int, ...]
    t: tuple[int, ...]

    @property
    def bidegree(self) -> tuple[int, int]:
        return (len(self.s), len(self.t))

    @property
    def degree(self) -> int:
        return len(self.s) + len(self.t)

    def label(self) -> str:
        parts = []
        if self.s:
            parts.append("dz[" + ",".join(map(str, self.s)) + "]")
        if self.t:
            parts.append("dzb[" + ",".join(map(str, self.t)) + "]")
        return "^".join(parts) if parts else "1"


def _check_index_tuple(ix: Iterable[int], n: int) -> tuple[int, ...]:
    out = tuple(ix)
    if any(not (1 <= v <= n) for v in out):
        raise ValueError(f"indices must lie in 1..{n}, got {out}")
    if any(out[i] >= out[i + 1] for i in range(len(out) - 1)):
        raise ValueError(f"indices must be strictly increasing, got {out}")
    return out


@lru_cache(maxsize=None)
def _merge_indices(a: tuple[int, ...], b: tuple[int, ...]):
    """Merge two increasing tuples; returns (merged, sign) or None on overlap."""
    if not a:
        return b, 1
    if not b:
        return a, 1
    out = []
    i = j = 0
    inversions = 0
    la = len(a)
    while i < la and j < len(b):
        if a[i] < b[j]:
            out.append(a[i])
            i += 1
        elif a[i] > b[j]:
            out.append(b[j])
            inversions += la - i
            j += 1
        else:
            return None
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out), (-1 if inversions & 1 else 1)


@lru_cache(maxsize=None)
def _wedge_monomials(m1: Monomial, m2: Monomial):
    """Product monomial and sign of m1 ^ m2, or None if it vanishes."""
    ms = _merge_indices(m1.s, m2.s)
    if ms is None:
        return None
    mt = _merge_indices(m1.t, m2.t)
    if mt is None:
        return None
    # moving dz^{S2} (len p2) across dzb^{T1} (len q1) costs q1*p2 swaps
    sign = ms[1] * mt[1]
    if (len(m1.t) * len(m2.s)) & 1:
        sign = -sign
    return Monomial(ms[0], mt[0]), sign


@lru_cache(maxsize=None)
def _conjugate_monomial(m: Monomial) -> tuple[Monomial, int]:
    p, q = m.bidegree
    sign = -1 if (p * q) & 1 else 1
    return Monomial(m.t, m.s), sign


class Form:
    """Sparse complexified differential form with Gaussian rational coefficients.

    Immutable by convention: operations return new instances.  Mixed-degree
    combinations are allowed; helpers report the degree or bidegree when the
    form is homogeneous.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Monomial, Scalarish] | None = None):
        if n < 0:
            raise ValueError("dimension must be nonnegative")
        self.n = n
        clean: dict[Monomial, GaussRational] = {}
        if terms:
            for mono, coeff in terms.items():
                c = coeff if isinstance(coeff, GaussRational) else GaussRational(coeff)
                if c.is_zero():
                    continue
                if not isinstance(mono, Monomial):
                    mono = Monomial(tuple(mono[0]), tuple(mono[1]))
                _check_index_tuple(mono.s, n)
                _check_index_tuple(mono.t, n)
                clean[mono] = c
        self.terms = clean

    @classmethod
    def _trusted(cls, n: int, terms: dict[Monomial, GaussRational]) -> "Form":
        self = object.__new__(cls)
        self.n = n
        self.terms = terms
        return self

    @classmethod
    def zero(cls, n: int) -> "Form":
        return cls._trusted(n, {})

    @classmethod
    def one(cls, n: int) -> "Form":
        return cls._trusted(n, {Monomial((), ()): ONE})

    @classmethod
    def scalar(cls, n: int, value: Scalarish) -> "Form":
        v = value if isinstance(value, GaussRational) else GaussRational(value)
        if v.is_zero():
            return cls.zero(n)
        return cls._trusted(n, {Monomial((), ()): v})

    @classmethod
    def monomial(
        cls,
        n: int,
        s: Iterable[int] = (),
        t: Iterable[int] = (),
        coeff: Scalarish = 1,
    ) -> "Form":
        mono = Monomial(_check_index_tuple(s, n), _check_index_tuple(t, n))
        return cls(n, {mono: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int | None:
        """Total degree when homogeneous, else None (zero form has none)."""
        degs = {m.degree for m in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def bidegree(self) -> tuple[int, int] | None:
        bds = {m.bidegree for m in self.terms}
        return bds.pop() if len(bds) == 1 else None

    def degrees(self) -> set[int]:
        return {m.degree for m in self.terms}

    def homogeneous_parts(self) -> dict[int, "Form"]:
        parts: dict[int, dict[Monomial, GaussRational]] = {}
        for mono, coeff in self.terms.items():
            parts.setdefault(mono.degree, {})[mono] = coeff
        return {k: Form._trusted(self.n, tv) for k, tv in parts.items()}

    def coefficient(self, mono: Monomial) -> GaussRational:
        return self.terms.get(mono, ZERO)

    def _require_same_space(self, other: "Form") -> None:
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} != {other.n}")

    def __add__(self, other: "Form") -> "Form":
        if not isinstance(other, Form):
            return NotImplemented
        self._require_same_space(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            acc = out.get(mono)
            if acc is None:
                out[mono] = coeff
            else:
                acc = acc + coeff
                if acc.is_zero():
                    del out[mono]
                else:
                    out[mono] = acc
        return Form._trusted(self.n, out)

    def __sub__(self, other: "Form") -> "Form":
        if not isinstance(other, Form):
            return NotImplemented
        return self.__add__(other.__neg__())

    def __neg__(self) -> "Form":
        return Form._trusted(self.n, {m: -c for m, c in self.terms.items()})

    def __mul__(self, scalar: Scalarish) -> "Form":
        c = GaussRational._coerce(scalar)
        if c is NotImplemented:
            return NotImplemented
        if c.is_zero():
            return Form.zero(self.n)
        return Form._trusted(self.n, {m: v * c for m, v in self.terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, scalar: Scalarish) -> "Form":
        c = GaussRational._coerce(scalar)
        if c is NotImplemented:
            return NotImplemented
        return self.__mul__(c.inverse())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Form):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def sorted_terms(self) -> list[tuple[Monomial, GaussRational]]:
        return sorted(self.terms.items(), key=lambda kv: (kv[0].degree, kv[0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{m.label()}" for m, c in self.sorted_terms())

    def __repr__(self) -> str:
        return f"Form(n={self.n}, {str(self)})"

    def wedge(self, other: "Form") -> "Form":
        self._require_same_space(other)
        out: dict[Monomial, GaussRational] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                hit = _wedge_monomials(m1, m2)
                if hit is None:
                    continue
                mono, sign = hit
                c = c1 * c2
                if sign < 0:
                    c = -c
                acc = out.get(mono)
                if acc is None:
                    out[mono] = c
                else:
                    acc = acc + c
                    if acc.is_zero():
                        del out[mono]
                    else:
                        out[mono] = acc
        return Form._trusted(self.n, out)

    def conjugate(self) -> "Form":
        out: dict[Monomial, GaussRational] = {}
        for mono, coeff in self.terms.items():
            cm, sign = _conjugate_monomial(mono)
            c = coeff.conjugate()
            out[cm] = -c if sign < 0 else c
        return Form._trusted(self.n, out)


def wedge(a: Form, b: Form) -> Form:
    """Exterior product a ^ b."""
    return a.wedge(b)


def conjugate(a: Form) -> Form:
    """Complex conjugate; swaps the two index sets with the reorder sign."""
    return a.conjugate()


def bidegree_project(a: Form, p: int, q: int) -> Form:
    """Component of a in bidegree (p, q)."""
    if not (0 <= p <= a.n and 0 <= q <= a.n):
        raise ValueError(f"bidegree ({p},{q}) out of range for n={a.n}")
    picked = {m: c for m, c in a.terms.items() if m.bidegree == (p, q)}
    return Form._trusted(a.n, picked)


def inner(a: Form, b: Form) -> GaussRational:
    """Hermitian inner product; linear in a, conjugate-linear in b."""
    a._require_same_space(b)
    if len(b.terms) < len(a.terms):
        acc = ZERO
        for mono, cb in b.terms.items():
            ca = a.terms.get(mono)
            if ca is not None:
                acc = acc + ca * cb.conjugate()
        return acc
    acc = ZERO
    for mono, ca in a.terms.items():
        cb = b.terms.get(mono)
        if cb is not None:
            acc = acc + ca * cb.conjugate()
    return acc


def norm_sq(a: Form) -> Fraction:
    """Exact squared norm, a nonnegative rational."""
    total = Fraction(0)
    for coeff in a.terms.values():
        total += coeff.abs_sq()
    return total


def monomial_basis(n: int, k: int) -> tuple[Monomial, ...]:
    """All degree-k monomials in canonical order."""
    return _monomial_basis(n, k)


@lru_cache(maxsize=None)
def _monomial_basis(n: int, k: int) -> tuple[Monomial, ...]:
    if k < 0 or k > 2 * n:
        return ()
    out = []
    for p in range(max(0, k - n), min(k, n) + 1):
        q = k - p
        for s in combinations(range(1, n + 1), p):
            for t in combinations(range(1, n + 1), q):
                out.append(Monomial(s, t))
    out.sort()
    return tuple(out)


def bidegree_basis(n: int, p: int, q: int) -> tuple[Monomial, ...]:
    """All (p, q) monomials in canonical order."""
    return _bidegree_basis(n, p, q)


@lru_cache(maxsize=None)
def _bidegree_basis(n: int, p: int, q: int) -> tuple[Monomial, ...]:
    if not (0 <= p <= n and 0 <= q <= n):
        return ()
    return tuple(
        sorted(
            Monomial(s, t)
            for s in combinations(range(1, n + 1), p)
            for t in combinations(range(1, n + 1), q)
        )
    )
