"""Exact rank by fraction-free elimination on sparse integer rows."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Hashable, Iterable, Mapping, Sequence


def _integer_row(row: Mapping[Hashable, Fraction | int]) -> dict:
    items = {k: Fraction(v) for k, v in row.items() if v}
    if not items:
        return {}
    scale = lcm(*(v.denominator for v in items.values()))
    return _primitive({k: int(v * scale) for k, v in items.items()})


def _primitive(row: dict) -> dict:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    return {k: v // g for k, v in row.items()} if g > 1 else row


class RowEchelon:
    """Incrementally maintained echelon basis of a row space over Q.

    Rows are sparse ``{column: value}`` maps; columns need only be
    comparable. Elimination is fraction-free: ``b*row - a*pivot`` followed by
    removal of the content, so all arithmetic stays in Z.
    """

    def __init__(self):
        self._pivots: dict = {}

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def reduce(self, row: Mapping) -> dict:
        row = _integer_row(row)
        while row:
            col = min(row)
            pivot = self._pivots.get(col)
            if pivot is None:
                return row
            a, b = row[col], pivot[col]
            new = {k: b * v for k, v in row.items()}
            for k, v in pivot.items():
                x = new.get(k, 0) - a * v
                if x:
                    new[k] = x
                else:
                    new.pop(k, None)
            row = _primitive(new) if new else {}
        return row

    def add(self, row: Mapping) -> bool:
        """Insert a row; return True iff it was independent of the current span."""
        reduced = self.reduce(row)
        if not reduced:
            return False
        self._pivots[min(reduced)] = reduced
        return True

    def contains(self, row: Mapping) -> bool:
        return not self.reduce(row)


def exact_rank(rows: Iterable[Mapping | Sequence]) -> int:
    """Rank over Q of sparse (mapping) or dense (sequence) rows."""
    ech = RowEchelon()
    for row in rows:
        if not isinstance(row, Mapping):
            row = {j: v for j, v in enumerate(row) if v}
        ech.add(row)
    return ech.rank
