"""Brute-force model of ``(K[V_Gamma] (x) K[V_Gamma])^{S_Gamma}``.

Variables ``x_{il}`` and ``y_{il}`` stand for ``x_{il} (x) 1`` and
``1 (x) x_{il}``. Internally both are flattened to positions
``0 .. N-1`` with ``N = n_1 + ... + n_k``; component ``i`` (1-based in the
public API) owns a contiguous block.

Orbit sums follow the distinct-orbit convention: each distinct image of a
monomial appears once with coefficient 1.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Iterator, Mapping, Sequence

from ._guards import check_limit
from .linalg import RowEchelon
from .molien import GammaSpec, Permutation

MONOMIAL_GUARD = 10**6
GROUP_GUARD = 10**6
SECONDARY_MAX_N = 5


def _offsets(spec: GammaSpec) -> list[int]:
    out, acc = [], 0
    for n in spec.ns:
        out.append(acc)
        acc += n
    return out


def _blocks(spec: GammaSpec) -> list[range]:
    return [range(o, o + n) for o, n in zip(_offsets(spec), spec.ns)]


def var_index(spec: GammaSpec, i: int, l: int) -> int:
    """Flat position of ``x_{il}`` / ``y_{il}`` (both 1-based)."""
    if not (1 <= i <= spec.k and 1 <= l <= spec.ns[i - 1]):
        raise ValueError(f"no variable ({i},{l}) in spec {spec}")
    return _offsets(spec)[i - 1] + l - 1


@dataclass(frozen=True, order=True)
class Monomial:
    x: tuple[int, ...]
    y: tuple[int, ...]

    @property
    def degree(self) -> int:
        return sum(self.x) + sum(self.y)

    def __mul__(self, other: Monomial) -> Monomial:
        return Monomial(
            tuple(a + b for a, b in zip(self.x, other.x)),
            tuple(a + b for a, b in zip(self.y, other.y)),
        )

    def pairs(self) -> list[tuple[int, int]]:
        return list(zip(self.x, self.y))

    @classmethod
    def from_pairs(cls, pairs: Sequence[tuple[int, int]]) -> Monomial:
        return cls(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))

    def format(self, spec: GammaSpec) -> str:
        out = []
        for i, block in enumerate(_blocks(spec), start=1):
            for l, pos in enumerate(block, start=1):
                for name, e in (("x", self.x[pos]), ("y", self.y[pos])):
                    if e:
                        out.append(f"{name}{i}{l}" + ("" if e == 1 else f"^{e}"))
        return "*".join(out) or "1"


def one(spec: GammaSpec) -> Monomial:
    return Monomial((0,) * spec.num_vars, (0,) * spec.num_vars)


class MultiPoly:
    """Element of ``K[x_{il}, y_{il}]`` for a fixed GammaSpec."""

    __slots__ = ("spec", "terms")

    def __init__(self, spec: GammaSpec, terms: Mapping[Monomial, Fraction | int] | None = None):
        n = spec.num_vars
        clean = {}
        for m, c in (terms or {}).items():
            if len(m.x) != n or len(m.y) != n:
                raise ValueError(f"monomial does not conform to spec {spec}")
            c = Fraction(c)
            if c:
                clean[m] = c
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    @classmethod
    def constant(cls, spec: GammaSpec, c) -> MultiPoly:
        return cls(spec, {one(spec): c})

    @classmethod
    def from_monomial(cls, spec: GammaSpec, m: Monomial, c=1) -> MultiPoly:
        return cls(spec, {m: c})

    @classmethod
    def x(cls, spec: GammaSpec, i: int, l: int, power: int = 1) -> MultiPoly:
        e = [0] * spec.num_vars
        e[var_index(spec, i, l)] = power
        return cls(spec, {Monomial(tuple(e), (0,) * spec.num_vars): 1})

    @classmethod
    def y(cls, spec: GammaSpec, i: int, l: int, power: int = 1) -> MultiPoly:
        e = [0] * spec.num_vars
        e[var_index(spec, i, l)] = power
        return cls(spec, {Monomial((0,) * spec.num_vars, tuple(e)): 1})

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.spec, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.spec == other.spec and self.terms == other.terms

    __hash__ = None

    def __repr__(self) -> str:
        return f"MultiPoly({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, reverse=True):
            c = self.terms[m]
            mono = m.format(self.spec)
            parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts)

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def degrees(self) -> set[int]:
        return {m.degree for m in self.terms}

    @property
    def degree(self) -> int:
        return max(self.degrees(), default=-1)

    def _check(self, other: MultiPoly) -> None:
        if other.spec != self.spec:
            raise ValueError("spec mismatch")

    def __add__(self, other) -> MultiPoly:
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.spec, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return MultiPoly(self.spec, terms)

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        return MultiPoly(self.spec, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> MultiPoly:
        return self + (-other)

    def __mul__(self, other) -> MultiPoly:
        if isinstance(other, (int, Fraction)):
            return MultiPoly(self.spec, {m: c * other for m, c in self.terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        terms: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 * m2
                terms[m] = terms.get(m, 0) + c1 * c2
        return MultiPoly(self.spec, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> MultiPoly:
        out = MultiPoly.constant(self.spec, 1)
        for _ in range(k):
            out = out * self
        return out

    def derivative(self, kind: str, pos: int) -> MultiPoly:
        """Partial derivative by the flat variable ``x[pos]`` or ``y[pos]``."""
        terms: dict[Monomial, Fraction] = {}
        for m, c in self.terms.items():
            exps = list(m.x if kind == "x" else m.y)
            e = exps[pos]
            if not e:
                continue
            exps[pos] = e - 1
            new = Monomial(tuple(exps), m.y) if kind == "x" else Monomial(m.x, tuple(exps))
            terms[new] = terms.get(new, 0) + c * e
        return MultiPoly(self.spec, terms)

    def evaluate(self, xs: Sequence, ys: Sequence) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms.items():
            term = c
            for v, e in zip(xs, m.x):
                if e:
                    term *= Fraction(v) ** e
            for v, e in zip(ys, m.y):
                if e:
                    term *= Fraction(v) ** e
            total += term
        return total


@dataclass(frozen=True)
class GammaPerm:
    """``(sigma_1, ..., sigma_k)`` in ``S_{n_1} x ... x S_{n_k}``."""

    components: tuple[Permutation, ...]

    @classmethod
    def identity(cls, spec: GammaSpec) -> GammaPerm:
        return cls(tuple(Permutation.identity(n) for n in spec.ns))

    @classmethod
    def random(cls, spec: GammaSpec, rng: random.Random) -> GammaPerm:
        comps = []
        for n in spec.ns:
            images = list(range(1, n + 1))
            rng.shuffle(images)
            comps.append(Permutation(tuple(images)))
        return cls(tuple(comps))

    def matches(self, spec: GammaSpec) -> bool:
        return tuple(p.n for p in self.components) == spec.ns

    def compose(self, other: GammaPerm) -> GammaPerm:
        return GammaPerm(tuple(a.compose(b) for a, b in zip(self.components, other.components)))

    def flat(self, spec: GammaSpec) -> list[int]:
        """Flat position map ``pos(i, l) -> pos(i, sigma_i(l))``."""
        out = []
        for o, p in zip(_offsets(spec), self.components):
            out.extend(o + p(l) - 1 for l in range(1, p.n + 1))
        return out


def group_elements(spec: GammaSpec) -> Iterator[GammaPerm]:
    check_limit(spec.group_order(), GROUP_GUARD, f"|S_Gamma| for spec {spec}")
    per = [
        [Permutation(tuple(p)) for p in itertools.permutations(range(1, n + 1))]
        for n in spec.ns
    ]
    for combo in itertools.product(*per):
        yield GammaPerm(tuple(combo))


def generating_set(spec: GammaSpec) -> list[GammaPerm]:
    """Adjacent transpositions in each factor."""
    gens = []
    for i, n in enumerate(spec.ns):
        for j in range(1, n):
            comps = [Permutation.identity(m) for m in spec.ns]
            images = list(range(1, n + 1))
            images[j - 1], images[j] = images[j], images[j - 1]
            comps[i] = Permutation(tuple(images))
            gens.append(GammaPerm(tuple(comps)))
    return gens


def _permute_monomial(m: Monomial, flat: Sequence[int]) -> Monomial:
    x = [0] * len(flat)
    y = [0] * len(flat)
    for pos, target in enumerate(flat):
        x[target] = m.x[pos]
        y[target] = m.y[pos]
    return Monomial(tuple(x), tuple(y))


def apply_perm(sigma: GammaPerm, f: MultiPoly) -> MultiPoly:
    """Substitute ``x_{il} -> x_{i sigma_i(l)}`` and ``y_{il} -> y_{i sigma_i(l)}``."""
    if not sigma.matches(f.spec):
        raise ValueError(f"permutation does not act on spec {f.spec}")
    flat = sigma.flat(f.spec)
    return MultiPoly(f.spec, {_permute_monomial(m, flat): c for m, c in f.terms.items()})


def _multiset_permutations(items: Sequence) -> Iterator[tuple]:
    pool: dict = {}
    for it in items:
        pool[it] = pool.get(it, 0) + 1
    keys = sorted(pool)
    n = len(items)

    def rec(prefix: list) -> Iterator[tuple]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for k in keys:
            if pool[k]:
                pool[k] -= 1
                prefix.append(k)
                yield from rec(prefix)
                prefix.pop()
                pool[k] += 1

    yield from rec([])


def monomial_orbit(spec: GammaSpec, m: Monomial) -> list[Monomial]:
    """Distinct images of ``m``: independent rearrangements of the (x, y) exponent pairs in each block."""
    pairs = m.pairs()
    per_block = [list(_multiset_permutations([pairs[p] for p in block])) for block in _blocks(spec)]
    out = []
    for combo in itertools.product(*per_block):
        out.append(Monomial.from_pairs([p for block in combo for p in block]))
    return out


def canonical(spec: GammaSpec, m: Monomial) -> Monomial:
    """Lexicographically minimal relabeling: sort the exponent pairs inside each block."""
    pairs = m.pairs()
    return Monomial.from_pairs([p for block in _blocks(spec) for p in sorted(pairs[q] for q in block)])


def orbit_sum(f: MultiPoly) -> MultiPoly:
    """Sum of the distinct images of ``f`` under ``S_Gamma``."""
    if f.is_zero():
        return f
    if f.is_monomial():
        (m, c), = f.terms.items()
        return MultiPoly(f.spec, {img: c for img in monomial_orbit(f.spec, m)})
    images: dict[tuple, MultiPoly] = {}
    for g in group_elements(f.spec):
        img = apply_perm(g, f)
        images.setdefault(tuple(sorted(img.terms.items())), img)
    total = MultiPoly(f.spec)
    for img in images.values():
        total = total + img
    return total


def full_orbit_sum(f: MultiPoly) -> MultiPoly:
    """``sum_{g in S_Gamma} g . f`` over every group element (no deduplication)."""
    total = MultiPoly(f.spec)
    for g in group_elements(f.spec):
        total = total + apply_perm(g, f)
    return total


def is_invariant(f: MultiPoly, extra_random: int = 20, seed: int = 0) -> bool:
    rng = random.Random(seed)
    perms = generating_set(f.spec) + [GammaPerm.random(f.spec, rng) for _ in range(extra_random)]
    return all(apply_perm(g, f) == f for g in perms)


def power_invariant(i: int, r: int, s: int, spec: GammaSpec) -> MultiPoly:
    """``P^{(i)}_{r,s} = sum_l x_{il}^r y_{il}^s``, the orbit sum of ``x_{i1}^r y_{i1}^s``."""
    if r < 0 or s < 0 or r + s < 1:
        raise ValueError("need r, s >= 0 and r + s >= 1")
    seed = MultiPoly.x(spec, i, 1, r) * MultiPoly.y(spec, i, 1, s) if r and s else (
        MultiPoly.x(spec, i, 1, r) if r else MultiPoly.y(spec, i, 1, s)
    )
    return orbit_sum(seed)


def left_power_sum(i: int, m: int, spec: GammaSpec) -> MultiPoly:
    """``L_{im}``: power sum of the x variables of block ``i``."""
    return power_invariant(i, m, 0, spec)


def right_power_sum(i: int, m: int, spec: GammaSpec) -> MultiPoly:
    """``R_{im}``: power sum of the y variables of block ``i``."""
    return power_invariant(i, 0, m, spec)


def generator_keys(spec: GammaSpec, max_degree: int | None = None) -> list[tuple[int, int, int]]:
    """``(i, r, s)`` with ``1 <= r + s <= n_i`` (or ``max_degree`` if smaller), by degree then ``r`` descending."""
    keys = []
    for i, n in enumerate(spec.ns, start=1):
        top = n if max_degree is None else min(n, max_degree)
        for d in range(1, top + 1):
            for r in range(d, -1, -1):
                keys.append((i, r, d - r))
    return keys


def fundamental_generators(
    spec: GammaSpec, max_degree: int | None = None, exclude: Iterable[tuple[int, int, int]] = ()
) -> list[MultiPoly]:
    """The orbit sums ``P^{(i)}_{r,s}`` of degree at most ``n_i``."""
    skip = set(exclude)
    return [power_invariant(i, r, s, spec) for (i, r, s) in generator_keys(spec, max_degree) if (i, r, s) not in skip]


def monomial_count(spec: GammaSpec, d: int) -> int:
    """Number of degree-``d`` monomials in the ``2N`` variables."""
    nv = 2 * spec.num_vars
    return comb(d + nv - 1, nv - 1)


def monomials_of_degree(spec: GammaSpec, d: int) -> Iterator[Monomial]:
    check_limit(monomial_count(spec, d), MONOMIAL_GUARD, f"degree-{d} monomials for spec {spec}")
    n = spec.num_vars
    for combo in itertools.combinations_with_replacement(range(2 * n), d):
        e = [0] * (2 * n)
        for v in combo:
            e[v] += 1
        yield Monomial(tuple(e[:n]), tuple(e[n:]))


def monomial_orbits(spec: GammaSpec, d: int) -> dict[Monomial, int]:
    """Canonical representative -> orbit size, over all degree-``d`` monomials."""
    sizes: dict[Monomial, int] = {}
    for m in monomials_of_degree(spec, d):
        key = canonical(spec, m)
        sizes[key] = sizes.get(key, 0) + 1
    return sizes


def invariant_dimension(spec: GammaSpec, d: int) -> int:
    """``dim`` of the degree-``d`` invariants = number of monomial orbits of degree ``d``."""
    return len(monomial_orbits(spec, d))


def _products_by_degree(gens: Sequence[MultiPoly], d_max: int, spec: GammaSpec) -> list[list[MultiPoly]]:
    degs = []
    for g in gens:
        ds = g.degrees()
        if len(ds) != 1:
            raise ValueError("generators must be homogeneous")
        degs.append(ds.pop())
    # layer[d] holds (index of last factor, product) for non-decreasing factor sequences
    layers: list[list[tuple[int, MultiPoly]]] = [[(0, MultiPoly.constant(spec, 1))]] + [[] for _ in range(d_max)]
    for d in range(1, d_max + 1):
        for j, (g, dg) in enumerate(zip(gens, degs)):
            if dg > d:
                continue
            for last, p in layers[d - dg]:
                if d - dg == 0 or last <= j:
                    layers[d].append((j, p * g))
    return [[p for _, p in layer] for layer in layers]


def _column_map(polys: Iterable[MultiPoly]) -> dict[Monomial, int]:
    cols: dict[Monomial, int] = {}
    for p in polys:
        for m in p.terms:
            if m not in cols:
                cols[m] = len(cols)
    return cols


def _rank(polys: Sequence[MultiPoly]) -> int:
    cols = _column_map(polys)
    ech = RowEchelon()
    for p in polys:
        ech.add({cols[m]: c for m, c in p.terms.items()})
    return ech.rank


@dataclass(frozen=True)
class GenerationLevel:
    degree: int
    products: int
    rank: int
    dimension: int

    @property
    def ok(self) -> bool:
        return self.rank == self.dimension


def generation_report(
    spec: GammaSpec, d_max: int, generators: Sequence[MultiPoly] | None = None
) -> list[GenerationLevel]:
    """Per degree: rank of the span of generator products against the invariant dimension."""
    gens = list(fundamental_generators(spec) if generators is None else generators)
    for d in range(d_max + 1):
        check_limit(monomial_count(spec, d), MONOMIAL_GUARD, f"degree-{d} monomials for spec {spec}")
    layers = _products_by_degree(gens, d_max, spec)
    return [
        GenerationLevel(d, len(layers[d]), _rank(layers[d]), invariant_dimension(spec, d))
        for d in range(d_max + 1)
    ]


def verify_generation(spec: GammaSpec, d_max: int, generators: Sequence[MultiPoly] | None = None) -> bool:
    """True iff products of the generators span every graded piece up to ``d_max``."""
    return all(level.ok for level in generation_report(spec, d_max, generators))


def primary_invariants(spec: GammaSpec) -> list[MultiPoly]:
    """``L_{im}`` and ``R_{im}`` for ``1 <= m <= n_i``."""
    out = []
    for i, n in enumerate(spec.ns, start=1):
        out.extend(left_power_sum(i, m, spec) for m in range(1, n + 1))
        out.extend(right_power_sum(i, m, spec) for m in range(1, n + 1))
    return out


def _primes() -> Iterator[int]:
    found: list[int] = []
    c = 2
    while True:
        if all(c % p for p in found if p * p <= c):
            found.append(c)
            yield c
        c += 1


def default_points(spec: GammaSpec, count: int = 4) -> list[tuple[list[int], list[int]]]:
    """Evaluation points with pairwise distinct prime coordinates; later points use later primes."""
    n = spec.num_vars
    gen = _primes()
    pts = []
    for _ in range(count):
        coords = [next(gen) for _ in range(2 * n)]
        pts.append((coords[:n], coords[n:]))
    return pts


def jacobian_rank(polys: Sequence[MultiPoly], point: tuple[Sequence, Sequence]) -> int:
    spec = polys[0].spec
    xs, ys = point
    rows = []
    for f in polys:
        row = [f.derivative("x", p).evaluate(xs, ys) for p in range(spec.num_vars)]
        row += [f.derivative("y", p).evaluate(xs, ys) for p in range(spec.num_vars)]
        rows.append({j: v for j, v in enumerate(row) if v})
    ech = RowEchelon()
    for r in rows:
        ech.add(r)
    return ech.rank


def verify_algebraic_independence(
    spec: GammaSpec, points: Sequence[tuple[Sequence, Sequence]] | None = None
) -> bool:
    """Jacobian criterion for the ``2N`` primary invariants.

    Full rank at one point certifies independence in characteristic zero. On
    a rank drop, up to three further points are tried.
    """
    polys = primary_invariants(spec)
    pts = list(points) if points is not None else default_points(spec)
    for point in pts[:4]:
        if jacobian_rank(polys, point) == len(polys):
            return True
    return False


@dataclass(frozen=True)
class SecondaryLevel:
    degree: int
    ideal_rank: int
    mixed: int
    combined_rank: int

    @property
    def ok(self) -> bool:
        return self.combined_rank - self.ideal_rank == self.mixed


def secondary_report(spec: GammaSpec) -> list[SecondaryLevel]:
    if spec.k != 1:
        raise ValueError("secondary independence check takes a single-component spec")
    n = spec.ns[0]
    if n > SECONDARY_MAX_N:
        raise ValueError(f"secondary independence check is limited to n <= {SECONDARY_MAX_N}")
    ideal_gens = [(m, left_power_sum(1, m, spec)) for m in range(1, n + 1)]
    ideal_gens += [(m, right_power_sum(1, m, spec)) for m in range(1, n + 1)]
    levels = []
    for d in range(2, n + 1):
        slice_polys = []
        for m, g in ideal_gens:
            if m > d:
                continue
            for mono in monomials_of_degree(spec, d - m):
                slice_polys.append(g * MultiPoly.from_monomial(spec, mono))
        mixed = [power_invariant(1, r, d - r, spec) for r in range(1, d)]
        cols = _column_map(slice_polys + mixed)
        ech = RowEchelon()
        for p in slice_polys:
            ech.add({cols[m]: c for m, c in p.terms.items()})
        ideal_rank = ech.rank
        for p in mixed:
            ech.add({cols[m]: c for m, c in p.terms.items()})
        levels.append(SecondaryLevel(d, ideal_rank, len(mixed), ech.rank))
    return levels


def verify_secondary_independence(spec: GammaSpec) -> bool:
    """Mixed ``P_{r,s}`` (``r, s >= 1``, ``r + s <= n``) stay independent modulo the ideal ``(L, R)``."""
    return all(level.ok for level in secondary_report(spec))


def restrict_to_block(spec: GammaSpec, m: Monomial, i: int) -> Monomial:
    """Keep only the exponents of block ``i`` (1-based)."""
    block = set(_blocks(spec)[i - 1])
    return Monomial(
        tuple(e if p in block else 0 for p, e in enumerate(m.x)),
        tuple(e if p in block else 0 for p, e in enumerate(m.y)),
    )
