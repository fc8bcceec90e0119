"""Coefficients of the bivariate rational generating function

    f(x, y) = x^4 y^2 (4 + y^2 + x y + 3 x^2 + x^2 y^2) / (1 - x y - x^3 y)

whose ``x^n y^i`` coefficient is d_r(C_n, i) for n >= 4.

Writing ``f = N / (1 - x y - x^3 y)`` gives ``f = N + (x y + x^3 y) f``, so
coefficients satisfy ``c(n, i) = c(n-1, i-1) + c(n-3, i-1) + N(n, i)`` with
``c(m, .) = 0`` for ``m < 4``.  That recurrence is the whole expansion.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidRange, NotExpanded
from .graph_core import CoefficientRow

Monomial = tuple[int, int]  # (power of x, power of y)

#: x^4 y^2 (4 + y^2 + x y + 3 x^2 + x^2 y^2), expanded.
NUMERATOR_SUPPORT: dict[Monomial, int] = {(4, 2): 4, (4, 4): 1, (5, 3): 1, (6, 2): 3, (6, 4): 1}

#: monomials of the denominator's negated tail: x y + x^3 y
DENOMINATOR_SHIFTS: tuple[Monomial, ...] = ((1, 1), (3, 1))

FIRST_ORDER = 4


def multiply(p: dict[Monomial, int], q: dict[Monomial, int]) -> dict[Monomial, int]:
    """Product of two bivariate polynomials stored as ``{(a, b): coeff}``."""
    out: dict[Monomial, int] = {}
    for (a1, b1), c1 in p.items():
        for (a2, b2), c2 in q.items():
            key = (a1 + a2, b1 + b2)
            out[key] = out.get(key, 0) + c1 * c2
    return {k: v for k, v in out.items() if v}


def numerator_from_factors() -> dict[Monomial, int]:
    """Expand the factored numerator; must reproduce :data:`NUMERATOR_SUPPORT`."""
    prefactor = {(4, 2): 1}
    bracket = {(0, 0): 4, (0, 2): 1, (1, 1): 1, (2, 0): 3, (2, 2): 1}
    return multiply(prefactor, bracket)


@dataclass(frozen=True)
class SeriesTable:
    n_max: int
    coeffs: dict[int, dict[int, int]]

    def row(self, n: int) -> CoefficientRow:
        if not FIRST_ORDER <= n <= self.n_max:
            raise NotExpanded(f"order {n} outside expanded range {FIRST_ORDER}..{self.n_max}")
        return CoefficientRow(n, self.coeffs[n])


def expand(n_max: int) -> SeriesTable:
    if n_max < FIRST_ORDER:
        raise InvalidRange(f"expansion needs n_max >= {FIRST_ORDER}, got {n_max}")
    rows: dict[int, dict[int, int]] = {}
    for n in range(FIRST_ORDER, n_max + 1):
        row: dict[int, int] = {}
        for (dx, dy) in DENOMINATOR_SHIFTS:
            for i, c in rows.get(n - dx, {}).items():
                row[i + dy] = row.get(i + dy, 0) + c
        for (a, b), c in NUMERATOR_SUPPORT.items():
            if a == n:
                row[b] = row.get(b, 0) + c
        rows[n] = dict(sorted((i, c) for i, c in row.items() if c))
    return SeriesTable(n_max, rows)


def coefficient(t: SeriesTable, n: int, i: int) -> int:
    """Coefficient of ``x^n y^i``; 0 off the support."""
    if not FIRST_ORDER <= n <= t.n_max:
        raise NotExpanded(f"order {n} outside expanded range {FIRST_ORDER}..{t.n_max}")
    return t.coeffs[n].get(i, 0)
