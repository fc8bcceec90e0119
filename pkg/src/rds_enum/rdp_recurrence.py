"""Counting engine for d_r(C_n, i) built on the three-row recurrence.

Row ``n`` is obtained from rows ``n - 1`` and ``n - 3`` by shifting every
cardinality up by one::

    d(n, i) = d(n - 1, i - 1) + d(n - 3, i - 1)        (n >= 4)

seeded with the formal rows ``{1: 1}``, ``{2: 1}`` and ``{1: 3, 3: 1}``.
Evaluation is bottom-up so only three rows are ever alive at once.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .errors import InvalidOrder
from .graph_core import CoefficientRow

SEED_ROWS: dict[int, dict[int, int]] = {1: {1: 1}, 2: {2: 1}, 3: {1: 3, 3: 1}}
SEED_TOTALS = {1: 1, 2: 1, 3: 4}


def gamma_r(n: int) -> int:
    """Restrained domination number of C_n (formal value for n = 1, 2)."""
    if n < 1:
        raise InvalidOrder(f"order must be positive, got {n}")
    return n - 2 * (n // 3)


def is_empty_class(n: int, i: int) -> bool:
    """Closed-form test for C_n^i being empty."""
    return i > n or i < n - 2 * (n // 3) or (n - i) % 2 == 1


class RowWindow:
    """The three most recent rows of the triangle during bottom-up evaluation."""

    def __init__(self) -> None:
        self.rows: deque[CoefficientRow] = deque(maxlen=3)
        self.order = 0

    def advance(self) -> CoefficientRow:
        """Compute the next row, evicting the oldest one."""
        n = self.order + 1
        if n in SEED_ROWS:
            row = CoefficientRow(n, SEED_ROWS[n])
        else:
            prev, third_back = self.rows[-1], self.rows[0]
            counts: dict[int, int] = {}
            for source in (prev, third_back):
                for i, c in source.items():
                    counts[i + 1] = counts.get(i + 1, 0) + c
            row = CoefficientRow(n, counts)
        self.rows.append(row)
        self.order = n
        return row


def iter_rows(n_max: int) -> Iterator[CoefficientRow]:
    """Yield rows ``1..n_max`` of the triangle in order."""
    window = RowWindow()
    for _ in range(n_max):
        yield window.advance()


def rdp_row(n: int) -> CoefficientRow:
    if n < 1:
        raise InvalidOrder(f"order must be positive, got {n}")
    for row in iter_rows(n):
        pass
    return row


@lru_cache(maxsize=8)
def _table(n_max: int) -> tuple[CoefficientRow, ...]:
    return tuple(iter_rows(n_max))


def rdp_table(n_max: int) -> dict[int, CoefficientRow]:
    """Rows ``1..n_max`` keyed by order (cached, read-only)."""
    if n_max < 1:
        raise InvalidOrder(f"order must be positive, got {n_max}")
    return {row.order: row for row in _table(n_max)}


def d_r(table: dict[int, CoefficientRow], n: int, i: int) -> int:
    """Coefficient lookup that reads 0 for any order or cardinality not in ``table``."""
    row = table.get(n)
    return row[i] if row is not None else 0


@dataclass(frozen=True)
class RdPolynomial:
    order: int
    coeffs: tuple[tuple[int, int], ...]

    @classmethod
    def from_row(cls, row: CoefficientRow) -> RdPolynomial:
        return cls(row.order, tuple(row.items()))

    def to_row(self) -> CoefficientRow:
        return CoefficientRow(self.order, self.coeffs)

    def coefficient(self, i: int) -> int:
        return dict(self.coeffs).get(i, 0)

    @property
    def min_degree(self) -> int:
        return self.coeffs[0][0]

    @property
    def degree(self) -> int:
        return self.coeffs[-1][0]

    @property
    def num_terms(self) -> int:
        return len(self.coeffs)

    def __call__(self, x: int | Fraction) -> int | Fraction:
        return sum(c * x**i for i, c in self.coeffs)

    def __str__(self) -> str:
        parts = []
        for i, c in self.coeffs:
            lead = "" if c == 1 else str(c)
            power = "x" if i == 1 else f"x^{i}"
            parts.append(f"{lead}{power}")
        return " + ".join(parts) if parts else "0"

    def to_latex(self) -> str:
        parts = []
        for i, c in self.coeffs:
            lead = "" if c == 1 else str(c)
            power = "x" if i == 1 else f"x^{{{i}}}"
            parts.append(f"{lead}{power}")
        return " + ".join(parts) if parts else "0"


def rdp_polynomial(n: int) -> RdPolynomial:
    return RdPolynomial.from_row(rdp_row(n))


def total_rds_count(n: int) -> int:
    """Total number of restrained dominating sets, via S_n = S_{n-1} + S_{n-3}."""
    if n < 1:
        raise InvalidOrder(f"order must be positive, got {n}")
    if n in SEED_TOTALS:
        return SEED_TOTALS[n]
    a, b, c = SEED_TOTALS[1], SEED_TOTALS[2], SEED_TOTALS[3]
    for _ in range(4, n + 1):
        a, b, c = b, c, c + a
    return c


def term_count(n: int) -> int:
    """Number of nonzero terms of D_r(C_n, x)."""
    if n < 3:
        raise InvalidOrder(f"term count is defined for n >= 3, got {n}")
    return 1 + n // 3
