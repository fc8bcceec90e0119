"""Recursive construction of the families C_n^i themselves.

A family is grown from C_{n-3}^{i-1} (three new vertices n-2, n-1, n are
spliced in between n-3 and 1) and from C_{n-1}^{i-1} (one new vertex n is
spliced in between n-1 and 1), then one vertex is added according to which
neighbours of vertex 1 the source set contains.  The closed-form families
for i = n, i = n - 2 and (n, i) = (3k, k) ground the recursion.

The memo cache in :class:`FamilyBuilder` is not locked; use one builder per
thread.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .errors import BudgetExceeded, ConstructionError, InvalidOrder
from .graph_core import VertexSet, mask_to_set
from .rdp_recurrence import is_empty_class, rdp_row

DEFAULT_BUDGET = 10**6


@dataclass(frozen=True)
class ExtensionRule:
    """Add vertex ``n + add`` to a source set X of C_{n - source_offset}.

    ``present``/``absent`` list vertices that must (not) lie in X.  A
    positive entry is a literal label; ``0`` or a negative entry ``k`` means
    ``m + k`` where ``m`` is the source order (so ``0`` is the last vertex).
    """

    name: str
    source_offset: int
    present: tuple[int, ...]
    absent: tuple[int, ...]
    add: int

    @staticmethod
    def _bit(ref: int, m: int) -> int:
        v = ref if ref > 0 else m + ref
        return 1 << (v - 1)

    def applies(self, mask: int, m: int) -> bool:
        return all(mask & self._bit(v, m) for v in self.present) and not any(
            mask & self._bit(v, m) for v in self.absent
        )

    def added_vertex(self, n: int) -> int:
        return n + self.add


DEFAULT_RULES: tuple[ExtensionRule, ...] = (
    ExtensionRule("from-n-3: 1 in X", 3, (1,), (), -2),
    ExtensionRule("from-n-3: 1,2 not in X", 3, (), (1, 2), 0),
    ExtensionRule("from-n-3: 1,last not in X", 3, (), (1, 0), -1),
    ExtensionRule("from-n-1: 1 in X", 1, (1,), (), 0),
    ExtensionRule("from-n-1: 1,2 not in X", 1, (), (1, 2), 0),
    ExtensionRule("from-n-1: 1,last not in X", 1, (), (1, 0), -1),
)


@dataclass(frozen=True)
class RdsFamily:
    order: int
    cardinality: int
    sets: tuple[VertexSet, ...] = field(default=())

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self) -> Iterator[VertexSet]:
        return iter(self.sets)

    def __contains__(self, s: object) -> bool:
        return tuple(s) in set(self.sets)  # type: ignore[arg-type]


def _family(n: int, i: int, masks) -> RdsFamily:
    return RdsFamily(n, i, tuple(sorted(mask_to_set(m) for m in masks)))


def _base_masks(n: int, i: int) -> frozenset[int] | None:
    full = (1 << n) - 1
    if i == n:
        return frozenset({full})
    if i == n - 2:
        edges = [(v, v + 1) for v in range(1, n)] + [(n, 1)]
        return frozenset(full & ~(1 << (x - 1)) & ~(1 << (y - 1)) for x, y in edges)
    if n % 3 == 0 and i == n // 3:
        return frozenset(sum(1 << (v - 1) for v in range(r, n + 1, 3)) for r in (1, 2, 3))
    return None


def base_family(n: int, i: int) -> RdsFamily | None:
    """Closed-form family for ``i = n``, ``i = n - 2`` or ``(n, i) = (3k, k)``; else None."""
    if n < 3:
        raise InvalidOrder(f"cycles need at least 3 vertices, got {n}")
    masks = _base_masks(n, i)
    return None if masks is None else _family(n, i, masks)


class FamilyBuilder:
    """Memoised family construction under a given rule set.

    With ``check=True`` every source set must fire exactly one rule and the
    two branches must never produce the same set.
    """

    def __init__(self, rules: tuple[ExtensionRule, ...] = DEFAULT_RULES, *, check: bool = False):
        self.rules = tuple(rules)
        self.check = check
        self._cache: dict[tuple[int, int], frozenset[int]] = {}

    def masks(self, n: int, i: int) -> frozenset[int]:
        if n < 3:
            raise InvalidOrder(f"cycles need at least 3 vertices, got {n}")
        key = (n, i)
        if key not in self._cache:
            if is_empty_class(n, i):
                result = frozenset()
            else:
                base = _base_masks(n, i)
                result = base if base is not None else frozenset(self.extend(n, i))
            self._cache[key] = result
        return self._cache[key]

    def extend(self, n: int, i: int) -> list[int]:
        """One recursive step, bypassing the base cases; duplicates are kept."""
        if n < 6:
            raise InvalidOrder(f"recursive extension reads C_(n-3) and needs n >= 6, got {n}")
        out: list[int] = []
        for offset in (3, 1):
            m = n - offset
            rules = [r for r in self.rules if r.source_offset == offset]
            for x in sorted(self.masks(m, i - 1)):
                fired = [r for r in rules if r.applies(x, m)]
                if self.check and len(fired) != 1:
                    raise ConstructionError(
                        f"source {mask_to_set(x)} of C_{m} fired {len(fired)} rules building C_{n}^{i}"
                    )
                out.extend(x | (1 << (r.added_vertex(n) - 1)) for r in fired)
        if self.check and len(set(out)) != len(out):
            raise ConstructionError(f"duplicate sets while building C_{n}^{i}")
        return out

    def family(self, n: int, i: int) -> RdsFamily:
        return _family(n, i, self.masks(n, i))


_BUILDERS = {False: FamilyBuilder(), True: FamilyBuilder(check=True)}


def construct_family(
    n: int,
    i: int,
    *,
    budget: int = DEFAULT_BUDGET,
    check: bool = False,
    builder: FamilyBuilder | None = None,
) -> RdsFamily:
    """Materialise C_n^i; empty for any (n, i) that is not a class."""
    if n < 3:
        raise InvalidOrder(f"cycles need at least 3 vertices, got {n}")
    predicted = rdp_row(n)[i]
    if predicted > budget:
        raise BudgetExceeded(f"C_{n}^{i} has {predicted} sets, over the budget of {budget}")
    if builder is None:
        builder = _BUILDERS[check]
    return builder.family(n, i)
