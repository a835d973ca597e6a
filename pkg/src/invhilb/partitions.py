"""Integer partitions and the irreducible characters of the symmetric group."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial, prod
from typing import Iterator, Sequence

MAX_CHARACTER_N = 12


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive parts."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> Partition:
        return cls(tuple(parts))

    @classmethod
    def from_multiplicities(cls, mult: dict[int, int]) -> Partition:
        parts: list[int] = []
        for i in sorted(mult, reverse=True):
            parts.extend([i] * mult[i])
        return cls(tuple(parts))

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def multiplicities(self) -> dict[int, int]:
        """``i -> r_i``, the number of parts equal to ``i``."""
        mult: dict[int, int] = {}
        for p in self.parts:
            mult[p] = mult.get(p, 0) + 1
        return dict(sorted(mult.items()))

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"

    def __add__(self, other: Partition) -> Partition:
        return partition_union(self, other)


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse lexicographic order: (n), (n-1,1), ..."""
    if n < 0:
        raise ValueError("n must be >= 0")

    def gen(remaining: int, max_part: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, max_part), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return [Partition(p) for p in gen(n, n)]


def conjugate(lam: Partition) -> Partition:
    if not lam.parts:
        return lam
    return Partition(tuple(sum(1 for p in lam.parts if p > j) for j in range(lam.parts[0])))


def centralizer_order(lam: Partition) -> int:
    """``z_lam = prod_i i^{r_i} r_i!``, the order of the centralizer of a permutation of cycle type ``lam``."""
    return prod(i**r * factorial(r) for i, r in lam.multiplicities.items())


def class_size(lam: Partition) -> int:
    return factorial(lam.n) // centralizer_order(lam)


def partition_union(mu: Partition, nu: Partition) -> Partition:
    """Multiset union of parts; power sums multiply as ``p_mu p_nu = p_{mu+nu}``."""
    return Partition(tuple(sorted(mu.parts + nu.parts, reverse=True)))


def sign(rho: Partition) -> int:
    """Sign of any permutation of cycle type ``rho``."""
    return -1 if (rho.n - rho.length) % 2 else 1


def hook_lengths(lam: Partition) -> list[int]:
    conj = conjugate(lam)
    return [
        (lam[i] - j - 1) + (conj[j] - i - 1) + 1
        for i in range(lam.length)
        for j in range(lam[i])
    ]


def hook_dimension(lam: Partition) -> int:
    """Dimension of the irreducible representation via the hook length formula."""
    return factorial(lam.n) // prod(hook_lengths(lam))


def _beta_set(lam: Partition) -> tuple[int, ...]:
    l = lam.length
    return tuple(lam[i] + (l - 1 - i) for i in range(l))


@lru_cache(maxsize=None)
def _mn_value(beta: tuple[int, ...], rho: tuple[int, ...]) -> int:
    # beta: strictly decreasing first-column hook lengths; rho: remaining cycle lengths.
    # Removing a rim hook of size k = moving one bead from b to the free position b-k;
    # its leg length is the number of beads strictly between.
    if not rho:
        return 1
    k, rest = rho[0], rho[1:]
    beads = set(beta)
    total = 0
    for b in beta:
        target = b - k
        if target < 0 or target in beads:
            continue
        leg = sum(1 for c in beta if target < c < b)
        new_beta = tuple(sorted((c if c != b else target for c in beta), reverse=True))
        # drop beads sitting on the left wall to keep the cache key canonical
        new_beta = _normalize_beta(new_beta)
        total += (-1) ** leg * _mn_value(new_beta, rest)
    return total


def _normalize_beta(beta: tuple[int, ...]) -> tuple[int, ...]:
    """Shift off trailing zero-length rows so equal partitions share a key."""
    beta = list(beta)
    while beta and beta[-1] == 0:
        beta.pop()
        beta = [b - 1 for b in beta]
    return tuple(beta)


def character_value(lam: Partition, rho: Partition) -> int:
    """``chi^lam`` evaluated on the class of cycle type ``rho`` (Murnaghan--Nakayama)."""
    if lam.n != rho.n:
        raise ValueError(f"size mismatch: |{lam}| != |{rho}|")
    return _mn_value(_normalize_beta(_beta_set(lam)), rho.parts)


@dataclass(frozen=True)
class CharacterTable:
    """Character table of S_n; ``values[a][b]`` is chi^{partitions[a]} on class partitions[b]."""

    n: int
    partitions: tuple[Partition, ...]
    values: tuple[tuple[int, ...], ...]
    _index: dict = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {p: i for i, p in enumerate(self.partitions)})

    def index(self, lam: Partition) -> int:
        return self._index[lam]

    def value(self, lam: Partition, rho: Partition) -> int:
        return self.values[self._index[lam]][self._index[rho]]

    def with_entry(self, a: int, b: int, value: int) -> CharacterTable:
        rows = [list(r) for r in self.values]
        rows[a][b] = value
        return CharacterTable(self.n, self.partitions, tuple(tuple(r) for r in rows))


@lru_cache(maxsize=None)
def character_table(n: int) -> CharacterTable:
    if not 1 <= n <= MAX_CHARACTER_N:
        raise ValueError(f"character_table supports 1 <= n <= {MAX_CHARACTER_N}, got {n}")
    parts = tuple(enumerate_partitions(n))
    values = tuple(tuple(character_value(lam, rho) for rho in parts) for lam in parts)
    return CharacterTable(n, parts, values)


def orthogonality_check(table: CharacterTable) -> bool:
    """Column orthogonality: sum_lam chi^lam_rho chi^lam_rho' = z_rho [rho = rho']."""
    parts = table.partitions
    k = len(parts)
    for b in range(k):
        for c in range(b, k):
            s = sum(table.values[a][b] * table.values[a][c] for a in range(k))
            if s != (centralizer_order(parts[b]) if b == c else 0):
                return False
    return True


def row_orthogonality_check(table: CharacterTable) -> bool:
    """Row orthogonality: sum_rho chi^lam_rho chi^mu_rho / z_rho = [lam = mu]."""
    from fractions import Fraction

    parts = table.partitions
    k = len(parts)
    zs = [centralizer_order(p) for p in parts]
    for a in range(k):
        for b in range(a, k):
            s = sum(Fraction(table.values[a][c] * table.values[b][c], zs[c]) for c in range(k))
            if s != (1 if a == b else 0):
                return False
    return True


def parse_partition(text: str | Sequence[int], *, sort: bool = True) -> Partition:
    """Parse "2,1,1" (or a sequence). Unsorted input is sorted when ``sort`` is set."""
    if isinstance(text, str):
        pieces = [p.strip() for p in text.split(",") if p.strip()]
        try:
            parts = [int(p) for p in pieces]
        except ValueError:
            raise ValueError(f"malformed partition {text!r}") from None
    else:
        parts = list(text)
    if any(p <= 0 for p in parts):
        raise ValueError(f"partition parts must be positive: {text!r}")
    if sort:
        parts = sorted(parts, reverse=True)
    return Partition(tuple(parts))
