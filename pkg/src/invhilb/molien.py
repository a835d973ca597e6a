"""Hilbert--Molien series for symmetric groups acting on one or two copies of
the permutation representation, and for products of such groups.

For ``K[V + V]^{S_n}`` three independent routes are implemented:

(a) :func:`hilbert_double_classsum` -- Molien's average, summed over cycle types;
(b) :func:`hilbert_double_schur` -- the sum of squared specialized Schur functions;
(c) :func:`hilbert_double_maj` -- ``f_n(t) / phi_n(t)^2`` where ``f_n`` counts
    permutations by ``maj(sigma) + maj(sigma^-1)``.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from ._guards import check_limit
from .partitions import (
    Partition,
    centralizer_order,
    character_table,
    class_size,
    enumerate_partitions,
)
from .schur import schur_q
from .series import (
    DensePoly,
    FactoredSeries,
    TruncatedSeries,
    expand,
    factored_equal,
    phi_squared_denom,
)

MAX_SERIES_N = 10
MAX_SINGLE_N = 12


@dataclass(frozen=True)
class Permutation:
    """A permutation of ``{1..n}`` in one-line notation."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, img in enumerate(self.images, start=1):
            inv[img - 1] = i
        return Permutation(tuple(inv))

    def compose(self, other: Permutation) -> Permutation:
        """``self o other``: apply ``other`` first."""
        return Permutation(tuple(self(other(i)) for i in range(1, self.n + 1)))

    def descents(self) -> list[int]:
        return [i for i in range(1, self.n) if self(i) > self(i + 1)]

    def cycle_type(self) -> Partition:
        seen = set()
        lengths = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            length, j = 0, start
            while j not in seen:
                seen.add(j)
                j = self(j)
                length += 1
            lengths.append(length)
        return Partition(tuple(sorted(lengths, reverse=True)))


def major_index(sigma: Permutation) -> int:
    """Sum of the positions ``i`` with ``sigma(i) > sigma(i+1)``."""
    return sum(sigma.descents())


def cycle_type_det(rho: Partition) -> FactoredSeries:
    """``1 / det(1 - t sigma)`` on the permutation representation, for ``sigma`` of cycle type ``rho``."""
    return FactoredSeries([1], rho.multiplicities)


def _class_sum(n: int, power: int) -> FactoredSeries:
    total = FactoredSeries([])
    for rho in enumerate_partitions(n):
        total = total + cycle_type_det(rho) ** power * Fraction(1, centralizer_order(rho))
    return total


def hilbert_single(n: int) -> FactoredSeries:
    """Molien series of ``K[V]^{S_n}``, returned over ``phi_n(t)``."""
    if not 1 <= n <= MAX_SINGLE_N:
        raise ValueError(f"hilbert_single supports 1 <= n <= {MAX_SINGLE_N}")
    return _class_sum(n, 1).rewrite({i: 1 for i in range(1, n + 1)})


def _check_series_n(n: int) -> None:
    if not 1 <= n <= MAX_SERIES_N:
        raise ValueError(f"n must satisfy 1 <= n <= {MAX_SERIES_N}, got {n}")


def hilbert_double_classsum(n: int) -> FactoredSeries:
    """Route (a): ``sum_rho (1/z_rho) / det(1 - t sigma_rho)^2``, over ``phi_n^2``."""
    _check_series_n(n)
    return _class_sum(n, 2).rewrite(phi_squared_denom([n]))


def hilbert_double_schur(n: int) -> FactoredSeries:
    """Route (b): ``sum_{|lam| = n} {lam : t}^2``, over ``phi_n^2``."""
    _check_series_n(n)
    total = FactoredSeries([])
    for lam in enumerate_partitions(n):
        total = total + schur_q(lam) ** 2
    return total.rewrite(phi_squared_denom([n]))


def _maj_pair_counts(n: int, firsts: Sequence[int]) -> list[int]:
    # Coefficients of sum t^{maj(s) + maj(s^-1)} over permutations s (0-based
    # one-line) whose first entry lies in `firsts`, in lexicographic order.
    counts = [0] * (n * (n - 1) + 1)
    pos = [0] * n
    for first in firsts:
        rest = [x for x in range(n) if x != first]
        for tail in itertools.permutations(rest):
            s = (first,) + tail
            maj = 0
            for i in range(n - 1):
                pos[s[i]] = i
                if s[i] > s[i + 1]:
                    maj += i + 1
            pos[s[n - 1]] = n - 1
            # descent of the inverse at i  <=>  i+1 sits left of i in s
            for v in range(n - 1):
                if pos[v] > pos[v + 1]:
                    maj += v + 1
            counts[maj] += 1
    return counts


def f_maj(n: int, jobs: int = 1, allow_large: bool = False) -> DensePoly:
    """``f_n(t) = sum_{sigma in S_n} t^{maj(sigma) + maj(sigma^-1)}``.

    With ``jobs > 1`` the permutations are split by their first entry across
    worker processes; the merged counts are identical to a sequential run.
    """
    if n < 1:
        raise ValueError("f_maj needs n >= 1")
    check_limit(factorial(n), factorial(12 if allow_large else 10), f"f_maj({n}) permutation count")
    jobs = max(1, min(jobs, n))
    if jobs == 1:
        counts = _maj_pair_counts(n, range(n))
    else:
        chunks = [list(range(n))[j::jobs] for j in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_maj_pair_counts, [n] * jobs, chunks))
        counts = [sum(col) for col in zip(*parts)]
    return DensePoly(counts)


def hilbert_double_maj(n: int, jobs: int = 1) -> FactoredSeries:
    """Route (c): ``f_n(t) / phi_n(t)^2``."""
    _check_series_n(n)
    return FactoredSeries(f_maj(n, jobs=jobs), phi_squared_denom([n]))


ROUTES = {
    "a": hilbert_double_classsum,
    "b": hilbert_double_schur,
    "c": hilbert_double_maj,
}


def three_route_equal(n: int) -> bool:
    a, b, c = (ROUTES[r](n) for r in "abc")
    return factored_equal(a, b) and factored_equal(b, c) and a.numerator == b.numerator == c.numerator


def carlitz_coefficient(n: int, order: int) -> TruncatedSeries:
    """Coefficient of ``x^n`` in ``prod_{k >= 0} (1 - t^k x)^{-(k+1)}`` through ``t^order``.

    Only factors with ``k <= order`` matter: taking an ``x`` from factor ``k``
    costs at least ``t^k``.
    """
    if n < 0 or order < 0:
        raise ValueError("n and order must be >= 0")
    # c[j][d]: coefficient of x^j t^d
    c = [[0] * (order + 1) for _ in range(n + 1)]
    c[0][0] = 1
    for k in range(order + 1):
        for _ in range(k + 1):
            # multiply by 1 / (1 - t^k x)
            for j in range(1, n + 1):
                row, prev = c[j], c[j - 1]
                for d in range(k, order + 1):
                    row[d] += prev[d - k]
    return TruncatedSeries(c[n], order)


@dataclass(frozen=True)
class GammaSpec:
    """The composition ``(n_1, ..., n_k)`` of a product of symmetric groups."""

    ns: tuple[int, ...]

    def __post_init__(self):
        ns = tuple(int(x) for x in self.ns)
        if not ns:
            raise ValueError("a GammaSpec needs at least one component")
        if any(x < 1 for x in ns):
            raise ValueError(f"component sizes must be positive: {ns}")
        object.__setattr__(self, "ns", ns)

    @classmethod
    def parse(cls, text: str) -> GammaSpec:
        try:
            ns = tuple(int(p) for p in text.split(",") if p.strip())
        except ValueError:
            raise ValueError(f"malformed composition {text!r}") from None
        return cls(ns)

    @property
    def k(self) -> int:
        return len(self.ns)

    @property
    def num_vars(self) -> int:
        """Number of x variables (equally, of y variables)."""
        return sum(self.ns)

    def group_order(self) -> int:
        out = 1
        for n in self.ns:
            out *= factorial(n)
        return out

    def __str__(self) -> str:
        return ",".join(map(str, self.ns))


def hilbert_gamma(spec: GammaSpec, route: str = "c", jobs: int = 1) -> FactoredSeries:
    """Hilbert series of ``(K[V_Gamma] (x) K[V_Gamma])^{S_Gamma}``: the product over components."""
    if route not in ROUTES:
        raise ValueError(f"unknown route {route!r}")
    out = FactoredSeries([1])
    for n in spec.ns:
        out = out * (hilbert_double_maj(n, jobs=jobs) if route == "c" else ROUTES[route](n))
    return out


@dataclass(frozen=True)
class Hironaka:
    secondary_count: int
    max_secondary_degree: int
    degree_histogram: tuple[int, ...]


def hironaka_stats(n: int, jobs: int = 1) -> Hironaka:
    """Secondary-invariant counts read off the numerator ``f_n``."""
    _check_series_n(n)
    coeffs = f_maj(n, jobs=jobs).integer_coeffs()
    return Hironaka(sum(coeffs), len(coeffs) - 1, tuple(coeffs))


class ClassDataError(ValueError):
    """Class data for a finite group failed validation."""


@dataclass(frozen=True)
class ClassRecord:
    size: int
    # i -> m_i with det(1 - t g) = prod_i (1 - t^i)^{m_i}; m_i may be negative
    det_factors: dict[int, int] = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return sum(i * m for i, m in self.det_factors.items())


@dataclass(frozen=True)
class GroupClassData:
    order: int
    classes: tuple[ClassRecord, ...]
    characters: tuple[tuple[Fraction, ...], ...]

    def validate(self) -> None:
        if sum(c.size for c in self.classes) != self.order:
            raise ClassDataError("class sizes must sum to |G|")
        if any(c.size <= 0 for c in self.classes):
            raise ClassDataError("class sizes must be positive")
        if any(self.order % c.size for c in self.classes):
            raise ClassDataError("class sizes must divide |G|")
        if len(self.characters) != len(self.classes) or any(len(r) != len(self.classes) for r in self.characters):
            raise ClassDataError("character table must be square with one column per class")
        dims = {c.dim for c in self.classes}
        if len(dims) != 1 or dims.pop() < 1:
            raise ClassDataError("det factor degrees must sum to the same positive dim W for every class")
        k = len(self.classes)
        for a in range(k):
            for b in range(a, k):
                s = sum(Fraction(row[a]) * Fraction(row[b]) for row in self.characters)
                want = Fraction(self.order, self.classes[a].size) if a == b else 0
                if s != want:
                    raise ClassDataError(
                        f"column orthogonality fails for classes {a} and {b}: got {s}, expected {want}"
                    )

    @property
    def dim(self) -> int:
        return self.classes[0].dim


def symmetric_group_class_data(n: int) -> GroupClassData:
    """S_n acting on its permutation representation, classes in partition order."""
    table = character_table(n)
    classes = tuple(ClassRecord(class_size(rho), rho.multiplicities) for rho in table.partitions)
    chars = tuple(tuple(Fraction(v) for v in row) for row in table.values)
    return GroupClassData(factorial(n), classes, chars)


def _inverse_det_series(rec: ClassRecord, order: int) -> TruncatedSeries:
    return expand(FactoredSeries.from_exponents(rec.det_factors), order)


def schur_analogue_general(data: GroupClassData, chi_index: int, order: int) -> TruncatedSeries:
    """``(1/|G|) sum_g chi(g) / det(1 - t g)``, summed class by class."""
    data.validate()
    row = data.characters[chi_index]
    out = TruncatedSeries([], order)
    for rec, value in zip(data.classes, row):
        value = Fraction(value)
        if value:
            out = out + _inverse_det_series(rec, order) * (value * rec.size / data.order)
    return out


def hilbert_double_general(data: GroupClassData, order: int) -> TruncatedSeries:
    """``H(K[W + W]^G, t) = sum_chi S_chi(t)^2``."""
    data.validate()
    out = TruncatedSeries([], order)
    for idx in range(len(data.characters)):
        s = schur_analogue_general(data, idx, order)
        out = out + s * s
    return out


def molien_double_general(data: GroupClassData, order: int) -> TruncatedSeries:
    """Direct Molien average ``(1/|G|) sum_g 1 / det(1 - t g)^2`` as an independent check."""
    data.validate()
    out = TruncatedSeries([], order)
    for rec in data.classes:
        s = _inverse_det_series(rec, order)
        out = out + s * s * Fraction(rec.size, data.order)
    return out


def default_order(n: int) -> int:
    return n * (n - 1) + 10
