"""Schur functions: finite variable sets, the principal specialization, and Cauchy's identity.

Three independent routes to a Schur function are provided so they can be
checked against each other:

* :func:`schur_finite` -- immanant of the Newton-identity matrix of power sums,
* :func:`schur_q_via_characters` -- character-weighted sum of power sums,
  specialized at ``1, t, t^2, ...``,
* :func:`schur_q` -- the closed product form of that specialization.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from functools import reduce
from math import factorial
from operator import mul
from typing import Iterable, Mapping, Sequence

from .partitions import (
    Partition,
    centralizer_order,
    character_table,
    enumerate_partitions,
)
from .series import DensePoly, FactoredSeries, TruncatedSeries, Scalar


class FiniteSymPoly:
    """Polynomial in ``m`` commuting variables with rational coefficients.

    Terms are stored as ``{exponent tuple: coefficient}`` with no zero
    coefficients. Iteration over terms is lexicographic in the exponents.
    """

    __slots__ = ("m", "terms", "names")

    def __init__(self, m: int, terms: Mapping[tuple[int, ...], Scalar] | None = None, names: Sequence[str] | None = None):
        clean = {}
        for e, c in (terms or {}).items():
            if len(e) != m:
                raise ValueError(f"exponent vector {e} does not have length {m}")
            c = Fraction(c)
            if c:
                clean[tuple(e)] = c
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "terms", dict(sorted(clean.items())))
        object.__setattr__(self, "names", tuple(names) if names else tuple(f"a{i + 1}" for i in range(m)))

    def __setattr__(self, name, value):
        raise AttributeError("FiniteSymPoly is immutable")

    @classmethod
    def constant(cls, m: int, c: Scalar) -> FiniteSymPoly:
        return cls(m, {(0,) * m: c})

    @classmethod
    def variable(cls, m: int, i: int) -> FiniteSymPoly:
        e = [0] * m
        e[i] = 1
        return cls(m, {tuple(e): 1})

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = FiniteSymPoly.constant(self.m, other)
        if not isinstance(other, FiniteSymPoly):
            return NotImplemented
        return self.m == other.m and self.terms == other.terms

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self) -> str:
        return f"FiniteSymPoly(m={self.m}, {self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for e, c in self.terms.items():
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(self.names, e) if k
            )
            if not mono:
                out.append(str(c))
            elif c == 1:
                out.append(mono)
            else:
                out.append(f"{c}*{mono}")
        return " + ".join(out)

    def _coerce(self, other) -> FiniteSymPoly | None:
        if isinstance(other, FiniteSymPoly):
            if other.m != self.m:
                raise ValueError("variable count mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return FiniteSymPoly.constant(self.m, other)
        return None

    def __add__(self, other) -> FiniteSymPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return FiniteSymPoly(self.m, terms, self.names)

    __radd__ = __add__

    def __neg__(self) -> FiniteSymPoly:
        return FiniteSymPoly(self.m, {e: -c for e, c in self.terms.items()}, self.names)

    def __sub__(self, other) -> FiniteSymPoly:
        return self + (-other)

    def __rsub__(self, other) -> FiniteSymPoly:
        return (-self) + other

    def __mul__(self, other) -> FiniteSymPoly:
        if isinstance(other, (int, Fraction)):
            return FiniteSymPoly(self.m, {e: c * other for e, c in self.terms.items()}, self.names)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return FiniteSymPoly(self.m, terms, self.names)

    __rmul__ = __mul__

    def __truediv__(self, c: Scalar) -> FiniteSymPoly:
        return self * (1 / Fraction(c))

    def __pow__(self, k: int) -> FiniteSymPoly:
        result = FiniteSymPoly.constant(self.m, 1)
        for _ in range(k):
            result = result * self
        return result

    def permute(self, perm: Sequence[int]) -> FiniteSymPoly:
        """Substitute variable ``i`` by variable ``perm[i]``."""
        terms = {}
        for e, c in self.terms.items():
            new = [0] * self.m
            for i, k in enumerate(e):
                new[perm[i]] = k
            terms[tuple(new)] = c
        return FiniteSymPoly(self.m, terms, self.names)

    def is_symmetric(self, trials: int = 20, rng: random.Random | None = None) -> bool:
        rng = rng or random.Random(0)
        for _ in range(trials):
            perm = list(range(self.m))
            rng.shuffle(perm)
            if self.permute(perm) != self:
                return False
        return True

    def embed(self, m: int, offset: int) -> FiniteSymPoly:
        """View as a polynomial in ``m`` variables, our variable ``i`` becoming ``offset + i``."""
        if offset + self.m > m:
            raise ValueError("embedding does not fit")
        terms = {(0,) * offset + e + (0,) * (m - offset - self.m): c for e, c in self.terms.items()}
        return FiniteSymPoly(m, terms)

    def evaluate(self, values: Sequence):
        """Substitute ``values[i]`` for variable ``i`` (values may be ring elements)."""
        total = 0
        for e, c in self.terms.items():
            term = c
            for v, k in zip(values, e):
                if k:
                    term = term * v**k
            total = total + term
        return total

    def principal_specialization(self) -> DensePoly:
        """Substitute ``t^{i-1}`` for the i-th variable."""
        out: dict[int, Fraction] = {}
        for e, c in self.terms.items():
            d = sum(i * k for i, k in enumerate(e))
            out[d] = out.get(d, 0) + c
        top = max(out, default=-1)
        return DensePoly(out.get(d, 0) for d in range(top + 1))


def power_sum(i: int, m: int) -> FiniteSymPoly:
    if i == 0:
        return FiniteSymPoly.constant(m, m)
    return reduce(lambda a, b: a + b, (FiniteSymPoly.variable(m, j) ** i for j in range(m)))


def elementary(i: int, m: int) -> FiniteSymPoly:
    terms = {}
    for subset in itertools.combinations(range(m), i):
        e = [0] * m
        for j in subset:
            e[j] = 1
        terms[tuple(e)] = 1
    return FiniteSymPoly(m, terms)


def homogeneous(r: int, m: int) -> FiniteSymPoly:
    """Complete homogeneous sum of degree ``r``; exponents are nonnegative."""
    terms = {}
    for combo in itertools.combinations_with_replacement(range(m), r):
        e = [0] * m
        for j in combo:
            e[j] += 1
        terms[tuple(e)] = 1
    return FiniteSymPoly(m, terms)


def power_sum_product(rho: Partition, m: int) -> FiniteSymPoly:
    """``p_rho = p_{rho_1} p_{rho_2} ...``."""
    out = FiniteSymPoly.constant(m, 1)
    for part in rho:
        out = out * power_sum(part, m)
    return out


def _cycle_type(perm: Sequence[int]) -> Partition:
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length, j = 0, start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        lengths.append(length)
    return Partition(tuple(sorted(lengths, reverse=True)))


def immanant(A: Sequence[Sequence], lam: Partition):
    """``sum_sigma chi^lam(sigma) a_{1,sigma(1)} ... a_{n,sigma(n)}``.

    Entries may be any commutative ring elements; exact zeros (``0``) are
    skipped so sparse matrices are cheap.
    """
    n = len(A)
    if any(len(row) != n for row in A):
        raise ValueError("immanant needs a square matrix")
    if lam.n != n:
        raise ValueError(f"partition {lam} does not match matrix size {n}")
    if n == 0:
        return 1
    table = character_table(n)
    total = None
    for sigma in itertools.permutations(range(n)):
        entries = [A[i][sigma[i]] for i in range(n)]
        if any(isinstance(a, (int, Fraction)) and a == 0 for a in entries):
            continue
        chi = table.value(lam, _cycle_type(sigma))
        if chi == 0:
            continue
        term = reduce(mul, entries) * chi
        total = term if total is None else total + term
    return 0 if total is None else total


class _PowerSumPoly:
    # Polynomials in the formal power sums p_1, p_2, ...; keys are partitions.
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Partition, Fraction]):
        self.terms = {k: v for k, v in terms.items() if v}

    @classmethod
    def p(cls, i: int) -> _PowerSumPoly:
        return cls({Partition((i,)): Fraction(1)})

    @classmethod
    def const(cls, c: Scalar) -> _PowerSumPoly:
        return cls({Partition(()): Fraction(c)})

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _PowerSumPoly.const(other)
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, 0) + v
        return _PowerSumPoly(terms)

    __radd__ = __add__

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return _PowerSumPoly({k: v * other for k, v in self.terms.items()})
        terms: dict[Partition, Fraction] = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = k1 + k2
                terms[k] = terms.get(k, 0) + v1 * v2
        return _PowerSumPoly(terms)

    __rmul__ = __mul__


def newton_matrix(n: int, entry) -> list[list]:
    """Newton-identity matrix: ``s_{i-j+1}`` on and below the diagonal, ``1, 2, ..., n-1`` just above it."""
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if j <= i:
                row.append(entry(i - j + 1))
            elif j == i + 1:
                row.append(i + 1)
            else:
                row.append(0)
        rows.append(row)
    return rows


def schur_power_sum_expansion(lam: Partition) -> dict[Partition, Fraction]:
    """Coefficients of ``{lam}`` in the power-sum basis, from the immanant of the Newton matrix."""
    n = lam.n
    if n > 7:
        raise ValueError("immanant route is limited to |lam| <= 7")
    imm = immanant(newton_matrix(n, _PowerSumPoly.p), lam)
    if isinstance(imm, int):
        return {}
    return {k: v / factorial(n) for k, v in imm.terms.items()}


def schur_finite(lam: Partition, m: int) -> FiniteSymPoly:
    """Schur polynomial ``{lam}(a_1, ..., a_m)`` via the immanant of the Newton matrix."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if lam.n == 0:
        return FiniteSymPoly.constant(m, 1)
    out = FiniteSymPoly(m)
    for rho, c in schur_power_sum_expansion(lam).items():
        out = out + power_sum_product(rho, m) * c
    return out


def n_lambda(lam: Partition) -> int:
    return sum(i * part for i, part in enumerate(lam.parts))


def schur_q(lam: Partition) -> FactoredSeries:
    """Closed form of ``{lam}(1, t, t^2, ...)``.

    ``t^{n(lam)} prod_{r<s} (1 - t^{lam_r - lam_s - r + s}) / prod_r phi_{lam_r + l - r}(t)``
    """
    l = lam.length
    num = DensePoly.monomial(n_lambda(lam))
    for r in range(l):
        for s in range(r + 1, l):
            num = num * DensePoly.one_minus_t_pow(lam[r] - lam[s] - r + s)
    denom: dict[int, int] = {}
    for r in range(l):
        for k in range(1, lam[r] + l - r):
            denom[k] = denom.get(k, 0) + 1
    return FactoredSeries(num, denom)


def power_sum_specialized(rho: Partition, order: int) -> TruncatedSeries:
    """``p_rho(1, t, t^2, ...) = prod_i 1/(1 - t^{rho_i})``."""
    out = TruncatedSeries.one(order)
    for part in rho:
        out = out * TruncatedSeries.geometric(part, order)
    return out


def schur_q_via_characters(lam: Partition, order: int) -> TruncatedSeries:
    """``sum_rho chi^lam_rho p_rho(1, t, ...) / z_rho``, truncated at ``order``."""
    if lam.n > 8:
        raise ValueError("character route is limited to |lam| <= 8")
    table = character_table(lam.n)
    out = TruncatedSeries([], order)
    for rho in table.partitions:
        chi = table.value(lam, rho)
        if chi:
            out = out + power_sum_specialized(rho, order) * Fraction(chi, centralizer_order(rho))
    return out


def power_sum_decomposition(lam: Partition, m: int) -> FiniteSymPoly:
    """Rebuild ``p_lam`` as ``sum_mu chi^mu_lam {mu}`` from Schur polynomials."""
    table = character_table(lam.n)
    out = FiniteSymPoly(m)
    for mu in table.partitions:
        chi = table.value(mu, lam)
        if chi:
            out = out + schur_finite(mu, m) * chi
    return out


def cauchy_sides(n: int, k: int, l: int) -> tuple[FiniteSymPoly, FiniteSymPoly]:
    """Both sides of Cauchy's identity in the variables ``a_1..a_k, b_1..b_l``."""
    m = k + l
    names = [f"a{i + 1}" for i in range(k)] + [f"b{j + 1}" for j in range(l)]
    lhs = FiniteSymPoly(m, names=names)
    for lam in enumerate_partitions(n):
        lhs = lhs + schur_finite(lam, k).embed(m, 0) * schur_finite(lam, l).embed(m, k)
    products = [
        FiniteSymPoly.variable(m, i) * FiniteSymPoly.variable(m, k + j)
        for i in range(k)
        for j in range(l)
    ]
    rhs = FiniteSymPoly(m, names=names)
    for combo in itertools.combinations_with_replacement(range(len(products)), n):
        term = FiniteSymPoly.constant(m, 1)
        for idx in combo:
            term = term * products[idx]
        rhs = rhs + term
    return FiniteSymPoly(m, lhs.terms, names), FiniteSymPoly(m, rhs.terms, names)


def cauchy_check(n: int, k: int, l: int) -> bool:
    if n > 4 or k > 3 or l > 3:
        raise ValueError("cauchy_check is limited to n <= 4 and k, l <= 3")
    lhs, rhs = cauchy_sides(n, k, l)
    return lhs == rhs
