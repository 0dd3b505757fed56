"""Neighborhood degree lists and the permissibility check.

A neighbor ``x`` of ``v`` is described, independently of vertex names, by
``(deg(x), sorted degrees of x's neighbors)``. A connected graph is
permissible when no vertex has two neighbors with the same description.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graph import Graph, is_connected

NeighborKey = tuple[int, tuple[int, ...]]


def neighbor_key(g: Graph, x: int) -> NeighborKey:
    return g.degree(x), tuple(sorted(g.degree(y) for y in g.adjacency[x]))


def all_keys(g: Graph) -> list[NeighborKey]:
    degrees = g.degrees()
    return [
        (degrees[x], tuple(sorted(degrees[y] for y in g.adjacency[x])))
        for x in range(g.n)
    ]


@dataclass(frozen=True)
class NeighborProfile:
    vertex: int
    entries: tuple[tuple[int, int], ...]  # (neighbor, degree of neighbor)
    keys: tuple[NeighborKey, ...]

    @property
    def neighbors(self) -> tuple[int, ...]:
        return tuple(x for x, _ in self.entries)


def compute_dsv(g: Graph, v: int, keys: list[NeighborKey] | None = None) -> NeighborProfile:
    """Neighbors of ``v`` in canonical order.

    Sorted by key; equal keys (only possible in non-permissible graphs) fall
    back to vertex id. ``keys`` may be passed in from :func:`all_keys` to
    avoid recomputation.
    """
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range")
    if keys is None:
        order = sorted(g.adjacency[v], key=lambda x: (neighbor_key(g, x), x))
        ks = tuple(neighbor_key(g, x) for x in order)
    else:
        order = sorted(g.adjacency[v], key=lambda x: (keys[x], x))
        ks = tuple(keys[x] for x in order)
    return NeighborProfile(v, tuple((x, g.degree(x)) for x in order), ks)


def all_profiles(g: Graph) -> list[NeighborProfile]:
    keys = all_keys(g)
    return [compute_dsv(g, v, keys) for v in range(g.n)]


class Reason(enum.Enum):
    NOT_CONNECTED = "not-connected"
    DUPLICATE_NEIGHBOR_KEY = "duplicate-neighbor-key"
    PERMISSIBLE = "permissible"


@dataclass(frozen=True)
class PermissibilityVerdict:
    permissible: bool
    reason: Reason
    witness: tuple[int, int, int] | None = None  # (v, x, y): x, y neighbors of v, same key


def check_permissible(g: Graph) -> PermissibilityVerdict:
    if not is_connected(g):
        return PermissibilityVerdict(False, Reason.NOT_CONNECTED)
    keys = all_keys(g)
    for v in range(g.n):
        prof = compute_dsv(g, v, keys)
        for (x, _), (y, _), kx, ky in zip(
            prof.entries, prof.entries[1:], prof.keys, prof.keys[1:]
        ):
            if kx == ky:
                return PermissibilityVerdict(False, Reason.DUPLICATE_NEIGHBOR_KEY, (v, x, y))
    return PermissibilityVerdict(True, Reason.PERMISSIBLE)
