"""Small graphs, the restrained-domination predicate and the brute-force oracle.

Vertices are labelled ``1..n``.  Internally a vertex set is also handled as a
bit mask with vertex ``v`` on bit ``v - 1``; the oracle evaluates the
predicate on numpy arrays of such masks, one vectorised pass per vertex.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

import numpy as np

from .errors import InvalidOrder, InvalidVertex, OrderTooLarge

VertexSet = tuple[int, ...]
Edge = tuple[int, int]

DEFAULT_BRUTE_FORCE_LIMIT = 26
BRUTE_LIMIT_ENV = "RDS_BRUTE_LIMIT"
# masks are uint64
_HARD_LIMIT = 63
_CHUNK = 1 << 20


def brute_force_limit(override: int | None = None) -> int:
    """Resolve the oracle's order cutoff: explicit value, then env var, then default."""
    if override is not None:
        return override
    env = os.environ.get(BRUTE_LIMIT_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"{BRUTE_LIMIT_ENV} must be an integer, got {env!r}") from None
    return DEFAULT_BRUTE_FORCE_LIMIT


@dataclass(frozen=True)
class GraphSpec:
    """Undirected simple graph on vertices ``1..order``."""

    order: int
    edges: frozenset[Edge]
    name: str = ""

    def __post_init__(self) -> None:
        if self.order < 1:
            raise InvalidOrder(f"graph order must be positive, got {self.order}")
        normalised = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            for w in (u, v):
                if not 1 <= w <= self.order:
                    raise InvalidVertex(f"edge endpoint {w} outside 1..{self.order}")
            normalised.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(normalised))

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[Edge], name: str = "") -> GraphSpec:
        edges = list(edges)
        keys = [(min(u, v), max(u, v)) for u, v in edges]
        if len(set(keys)) != len(keys):
            raise ValueError("duplicate edge")
        return cls(order, frozenset(keys), name)

    @property
    def vertices(self) -> range:
        return range(1, self.order + 1)

    @cached_property
    def neighbors(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(ns) for v, ns in adj.items()}

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        """``neighbor_masks[v - 1]`` is the bit mask of N(v)."""
        return tuple(sum(1 << (u - 1) for u in self.neighbors[v]) for v in self.vertices)

    def __str__(self) -> str:
        return self.name or f"G(order={self.order}, edges={len(self.edges)})"


def make_cycle(n: int) -> GraphSpec:
    if n < 3:
        raise InvalidOrder(f"cycles need at least 3 vertices, got {n}")
    edges = [(v, v + 1) for v in range(1, n)] + [(n, 1)]
    return GraphSpec.from_edges(n, edges, name=f"C_{n}")


def make_path(n: int) -> GraphSpec:
    if n < 1:
        raise InvalidOrder(f"paths need at least 1 vertex, got {n}")
    return GraphSpec.from_edges(n, [(v, v + 1) for v in range(1, n)], name=f"P_{n}")


class CoefficientRow:
    """Sparse map ``i -> count`` for one graph order; absent keys read as 0."""

    __slots__ = ("order", "_counts")

    def __init__(self, order: int, counts: dict[int, int] | Iterable[tuple[int, int]] = ()):
        items = counts.items() if isinstance(counts, dict) else counts
        stored: dict[int, int] = {}
        for i, c in items:
            c = int(c)
            if c < 0:
                raise ValueError(f"negative count {c} at i={i}")
            if c:
                stored[int(i)] = c
        self.order = order
        self._counts = dict(sorted(stored.items()))

    def __getitem__(self, i: int) -> int:
        return self._counts.get(i, 0)

    def __contains__(self, i: object) -> bool:
        return i in self._counts

    def __iter__(self) -> Iterator[int]:
        return iter(self._counts)

    def __len__(self) -> int:
        return len(self._counts)

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(self._counts.items())

    def support(self) -> list[int]:
        return list(self._counts)

    def total(self) -> int:
        return sum(self._counts.values())

    def as_dict(self) -> dict[int, int]:
        return dict(self._counts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CoefficientRow):
            return NotImplemented
        return self.order == other.order and self._counts == other._counts

    def __hash__(self) -> int:
        return hash((self.order, tuple(self._counts.items())))

    def __repr__(self) -> str:
        return f"CoefficientRow({self.order}, {self._counts})"


def _check_members(g: GraphSpec, s: Iterable[int]) -> list[int]:
    members = list(s)
    for v in members:
        if not 1 <= v <= g.order:
            raise InvalidVertex(f"vertex {v} outside 1..{g.order}")
    return members


def is_restrained_dominating(g: GraphSpec, s: Iterable[int]) -> bool:
    """True iff every vertex outside ``s`` has a neighbour in ``s`` and one outside it."""
    inside = set(_check_members(g, s))
    for v in g.vertices:
        if v in inside:
            continue
        nbrs = g.neighbors[v]
        if not any(u in inside for u in nbrs) or all(u in inside for u in nbrs):
            return False
    return True


def complement_component_sizes(g: GraphSpec, s: Iterable[int]) -> tuple[int, ...]:
    """Sorted sizes of the connected components of ``G[V - s]``."""
    inside = set(_check_members(g, s))
    seen: set[int] = set()
    sizes = []
    for start in g.vertices:
        if start in inside or start in seen:
            continue
        seen.add(start)
        stack, size = [start], 0
        while stack:
            v = stack.pop()
            size += 1
            for u in g.neighbors[v]:
                if u not in inside and u not in seen:
                    seen.add(u)
                    stack.append(u)
        sizes.append(size)
    return tuple(sorted(sizes))


def _guard(g: GraphSpec, limit: int | None, force: bool) -> None:
    if g.order > _HARD_LIMIT:
        raise OrderTooLarge(f"order {g.order} exceeds the {_HARD_LIMIT}-bit mask width")
    cutoff = brute_force_limit(limit)
    if g.order > cutoff and not force:
        raise OrderTooLarge(
            f"brute force on order {g.order} exceeds the limit {cutoff}; pass force=True to override"
        )


def _rds_mask(g: GraphSpec, masks: np.ndarray) -> np.ndarray:
    """Vectorised predicate over an array of uint64 vertex-set masks."""
    full = np.uint64((1 << g.order) - 1)
    outside = masks ^ full
    ok = np.ones(masks.shape, dtype=bool)
    for bit, nb in enumerate(g.neighbor_masks):
        nb = np.uint64(nb)
        out_v = ((outside >> np.uint64(bit)) & np.uint64(1)).astype(bool)
        served = ((masks & nb) != 0) & ((outside & nb) != 0)
        ok &= ~out_v | served
    return ok


def _masks_of_weight(n: int, k: int) -> np.ndarray:
    """All n-bit masks with exactly k bits set."""
    # level[j]: masks over the bits seen so far with popcount j
    level = [np.zeros(1, dtype=np.uint64)] + [np.empty(0, dtype=np.uint64) for _ in range(k)]
    for m in range(n):
        bit = np.uint64(1 << m)
        remaining = n - m - 1
        for j in range(min(k, m + 1), 0, -1):
            level[j] = np.concatenate((level[j], level[j - 1] | bit))
        for j in range(0, max(0, k - remaining)):
            level[j] = np.empty(0, dtype=np.uint64)
    return level[k]


def mask_to_set(mask: int) -> VertexSet:
    members = []
    v = 1
    while mask:
        if mask & 1:
            members.append(v)
        mask >>= 1
        v += 1
    return tuple(members)


def set_to_mask(s: Iterable[int]) -> int:
    mask = 0
    for v in s:
        mask |= 1 << (v - 1)
    return mask


def enumerate_rds(
    g: GraphSpec, i: int, *, limit: int | None = None, force: bool = False
) -> list[VertexSet]:
    """All restrained dominating sets of size ``i``, lexicographically sorted."""
    _guard(g, limit, force)
    if not 0 <= i <= g.order:
        raise ValueError(f"cardinality {i} outside 0..{g.order}")
    masks = _masks_of_weight(g.order, i)
    hits = masks[_rds_mask(g, masks)]
    return sorted(mask_to_set(int(m)) for m in hits)


def count_rds_by_cardinality(
    g: GraphSpec, *, limit: int | None = None, force: bool = False
) -> CoefficientRow:
    """Brute-force row ``i -> |{S : |S| = i, S is an RDS}|``."""
    _guard(g, limit, force)
    n = g.order
    totals = np.zeros(n + 1, dtype=np.int64)
    for lo in range(0, 1 << n, _CHUNK):
        masks = np.arange(lo, min(lo + _CHUNK, 1 << n), dtype=np.uint64)
        hits = masks[_rds_mask(g, masks)]
        totals += np.bincount(np.bitwise_count(hits), minlength=n + 1)[: n + 1]
    return CoefficientRow(n, {i: int(c) for i, c in enumerate(totals)})
