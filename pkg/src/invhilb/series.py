"""Exact univariate arithmetic in the formal variable t.

Three representations are used throughout the package:

* :class:`DensePoly` -- a polynomial with rational coefficients.
* :class:`TruncatedSeries` -- a power series known through a fixed order.
* :class:`FactoredSeries` -- a rational function ``N(t) / prod_i (1 - t^i)^e_i``
  whose denominator is kept in factored form so that identities between
  Hilbert series can be decided exactly.

Coefficients are :class:`fractions.Fraction` everywhere; nothing here ever
touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Scalar = Union[int, Fraction]


def _frac(c: Scalar) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


def _trim(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class DensePoly:
    """Polynomial in t with exact rational coefficients, lowest degree first.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        object.__setattr__(self, "coeffs", _trim([_frac(c) for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("DensePoly is immutable")

    @classmethod
    def monomial(cls, degree: int, coeff: Scalar = 1) -> DensePoly:
        if degree < 0:
            raise ValueError("negative degree")
        return cls([0] * degree + [coeff])

    @classmethod
    def one_minus_t_pow(cls, i: int) -> DensePoly:
        """The binomial ``1 - t^i`` (i >= 1)."""
        if i < 1:
            raise ValueError("1 - t^i needs i >= 1")
        return cls([1] + [0] * (i - 1) + [-1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, d: int) -> Fraction:
        if 0 <= d < len(self.coeffs):
            return self.coeffs[d]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = DensePoly([other])
        if not isinstance(other, DensePoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"DensePoly({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if d == 0 else ("t" if d == 1 else f"t^{d}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{'*' + mono if mono else ''}"
            terms.append(("-" if c < 0 else "+", body))
        sign, body = terms[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __add__(self, other) -> DensePoly:
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return DensePoly(self[d] + other[d] for d in range(n))

    __radd__ = __add__

    def __neg__(self) -> DensePoly:
        return DensePoly(-c for c in self.coeffs)

    def __sub__(self, other) -> DensePoly:
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> DensePoly:
        return (-self) + other

    def __mul__(self, other) -> DensePoly:
        if isinstance(other, (int, Fraction)):
            return DensePoly(c * other for c in self.coeffs)
        if not isinstance(other, DensePoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return DensePoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] += a * b
        return DensePoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> DensePoly:
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = DensePoly([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod(self, divisor: DensePoly) -> tuple[DensePoly, DensePoly]:
        """Long division over Q."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = divisor.degree
        lead = divisor.coeffs[-1]
        if len(rem) - 1 < dd:
            return DensePoly(), self
        quot = [Fraction(0)] * (len(rem) - dd)
        for k in range(len(rem) - 1 - dd, -1, -1):
            c = rem[k + dd] / lead
            quot[k] = c
            if c:
                for j, b in enumerate(divisor.coeffs):
                    rem[k + j] -= c * b
        return DensePoly(quot), DensePoly(rem[:dd])

    def exact_div(self, divisor: DensePoly) -> DensePoly:
        q, r = self.divmod(divisor)
        if not r.is_zero():
            raise ArithmeticError(f"{divisor} does not divide {self}")
        return q

    def __call__(self, x):
        """Horner evaluation; ``x`` may be any ring element supporting + and *."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def integer_coeffs(self) -> list[int]:
        """Coefficients as ints; raises if any coefficient is non-integral."""
        out = []
        for c in self.coeffs:
            if c.denominator != 1:
                raise ValueError(f"non-integral coefficient {c}")
            out.append(c.numerator)
        return out


def _as_poly(x) -> DensePoly | None:
    if isinstance(x, DensePoly):
        return x
    if isinstance(x, (int, Fraction)):
        return DensePoly([x])
    return None


def poly_product(polys: Iterable[DensePoly]) -> DensePoly:
    out = DensePoly([1])
    for p in polys:
        out = out * p
    return out


def phi(n: int) -> DensePoly:
    """``(1 - t)(1 - t^2)...(1 - t^n)``; ``phi(0)`` is the empty product 1."""
    if n < 0:
        raise ValueError("phi(n) needs n >= 0")
    return poly_product(DensePoly.one_minus_t_pow(k) for k in range(1, n + 1))


class TruncatedSeries:
    """Power series in t known through degree ``order`` (inclusive)."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable[Scalar], order: int):
        if order < 0:
            raise ValueError("order must be >= 0")
        cs = [_frac(c) for c in coeffs][: order + 1]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def from_poly(cls, p: DensePoly, order: int) -> TruncatedSeries:
        return cls(p.coeffs, order)

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        return cls([1], order)

    @classmethod
    def geometric(cls, i: int, order: int) -> TruncatedSeries:
        """``1 / (1 - t^i)``."""
        return cls([1 if d % i == 0 else 0 for d in range(order + 1)], order)

    def __getitem__(self, d: int) -> Fraction:
        if d > self.order:
            raise IndexError(f"coefficient t^{d} is beyond the truncation order {self.order}")
        return self.coeffs[d] if d >= 0 else Fraction(0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.coeffs, self.order))

    def __repr__(self) -> str:
        return f"TruncatedSeries({[str(c) for c in self.coeffs]}, order={self.order})"

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coeffs, order)

    def __add__(self, other) -> TruncatedSeries:
        if isinstance(other, (int, Fraction)):
            other = TruncatedSeries([other], self.order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        order = min(self.order, other.order)
        return TruncatedSeries((self.coeffs[d] + other.coeffs[d] for d in range(order + 1)), order)

    __radd__ = __add__

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries((-c for c in self.coeffs), self.order)

    def __sub__(self, other) -> TruncatedSeries:
        return self + (-other)

    def __mul__(self, other) -> TruncatedSeries:
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries((c * other for c in self.coeffs), self.order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        order = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (order + 1)
        for i in range(order + 1):
            if a[i] == 0:
                continue
            ai = a[i]
            for j in range(order + 1 - i):
                if b[j]:
                    out[i + j] += ai * b[j]
        return TruncatedSeries(out, order)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> TruncatedSeries:
        if k < 0:
            return series_inv(self) ** (-k)
        result = TruncatedSeries.one(self.order)
        for _ in range(k):
            result = result * self
        return result


def series_inv(s: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse of a unit power series, to the same order."""
    c0 = s.coeffs[0]
    if c0 == 0:
        raise ZeroDivisionError("non-unit series")
    inv = [Fraction(0)] * (s.order + 1)
    inv[0] = 1 / c0
    for d in range(1, s.order + 1):
        acc = sum((s.coeffs[k] * inv[d - k] for k in range(1, d + 1) if s.coeffs[k]), Fraction(0))
        inv[d] = -acc / c0
    return TruncatedSeries(inv, s.order)


class FactoredSeries:
    """Rational function ``numerator / prod_i (1 - t^i)^{e_i}``.

    Two instances compare equal when they represent the same rational
    function, regardless of whether their denominators agree.
    """

    __slots__ = ("numerator", "denom")

    def __init__(self, numerator: DensePoly | Iterable[Scalar], denom: Mapping[int, int] | None = None):
        if not isinstance(numerator, DensePoly):
            numerator = DensePoly(numerator)
        cleaned = {}
        for i, e in sorted((denom or {}).items()):
            if i < 1:
                raise ValueError(f"denominator factor index must be >= 1, got {i}")
            if e < 0:
                raise ValueError("denominator exponents must be nonnegative")
            if e:
                cleaned[int(i)] = int(e)
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "denom", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("FactoredSeries is immutable")

    @classmethod
    def from_exponents(cls, exponents: Mapping[int, int], numerator: DensePoly | None = None) -> FactoredSeries:
        """``numerator * prod_i (1 - t^i)^{-m_i}`` with possibly negative ``m_i``.

        Negative exponents are moved into the numerator.
        """
        num = numerator if numerator is not None else DensePoly([1])
        den = {}
        for i, m in exponents.items():
            if m > 0:
                den[i] = m
            elif m < 0:
                num = num * DensePoly.one_minus_t_pow(i) ** (-m)
        return cls(num, den)

    def denominator_poly(self) -> DensePoly:
        return poly_product(DensePoly.one_minus_t_pow(i) ** e for i, e in self.denom.items())

    def __repr__(self) -> str:
        return f"FactoredSeries({self.numerator!r}, {self.denom})"

    def __str__(self) -> str:
        den = "".join(
            f"(1 - t{'' if i == 1 else '^' + str(i)})" + ("" if e == 1 else f"^{e}")
            for i, e in self.denom.items()
        )
        return f"({self.numerator})" + (f" / {den}" if den else "")

    def __eq__(self, other) -> bool:
        if not isinstance(other, FactoredSeries):
            return NotImplemented
        return factored_equal(self, other)

    __hash__ = None  # equality is by value of the rational function

    def _lift(self, denom: Mapping[int, int]) -> DensePoly:
        """Numerator over a denominator that is a multiple of ours, factor-wise."""
        num = self.numerator
        for i, e in denom.items():
            extra = e - self.denom.get(i, 0)
            if extra < 0:
                raise ValueError("target denominator does not contain this one factor-wise")
            if extra:
                num = num * DensePoly.one_minus_t_pow(i) ** extra
        return num

    def __add__(self, other) -> FactoredSeries:
        if isinstance(other, (int, Fraction)):
            other = FactoredSeries([other])
        if not isinstance(other, FactoredSeries):
            return NotImplemented
        keys = set(self.denom) | set(other.denom)
        common = {i: max(self.denom.get(i, 0), other.denom.get(i, 0)) for i in keys}
        return FactoredSeries(self._lift(common) + other._lift(common), common)

    __radd__ = __add__

    def __neg__(self) -> FactoredSeries:
        return FactoredSeries(-self.numerator, self.denom)

    def __sub__(self, other) -> FactoredSeries:
        return self + (-other)

    def __mul__(self, other) -> FactoredSeries:
        if isinstance(other, (int, Fraction)):
            return FactoredSeries(self.numerator * other, self.denom)
        if not isinstance(other, FactoredSeries):
            return NotImplemented
        denom = dict(self.denom)
        for i, e in other.denom.items():
            denom[i] = denom.get(i, 0) + e
        return FactoredSeries(self.numerator * other.numerator, denom)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> FactoredSeries:
        if k < 0:
            raise ValueError("negative powers are not supported")
        return FactoredSeries(self.numerator ** k, {i: e * k for i, e in self.denom.items()})

    def rewrite(self, denom: Mapping[int, int]) -> FactoredSeries:
        """Same rational function over the prescribed denominator.

        Raises ArithmeticError if the result would not have a polynomial
        numerator.
        """
        target = FactoredSeries([1], denom)
        num = (self.numerator * target.denominator_poly()).exact_div(self.denominator_poly())
        return FactoredSeries(num, target.denom)

    def expand(self, order: int) -> TruncatedSeries:
        return expand(self, order)


def expand(f: FactoredSeries, order: int) -> TruncatedSeries:
    """Power-series expansion of ``f`` through degree ``order``."""
    if order < 0:
        raise ValueError("order must be >= 0")
    out = TruncatedSeries.from_poly(f.numerator, order)
    for i, e in f.denom.items():
        out = out * series_inv(TruncatedSeries.from_poly(DensePoly.one_minus_t_pow(i) ** e, order))
    return out


def factored_equal(a: FactoredSeries, b: FactoredSeries) -> bool:
    """Exact equality of rational functions by cross-multiplication."""
    return a.numerator * b.denominator_poly() == b.numerator * a.denominator_poly()


def phi_squared_denom(ns: Sequence[int]) -> dict[int, int]:
    """Denominator exponents of ``prod_k phi_{n_k}(t)^2``."""
    denom: dict[int, int] = {}
    for n in ns:
        for i in range(1, n + 1):
            denom[i] = denom.get(i, 0) + 2
    return denom
