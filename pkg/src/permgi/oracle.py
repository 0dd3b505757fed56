"""Brute-force isomorphism search, used as ground truth for small graphs."""

from __future__ import annotations

from typing import Iterator

from .graph import Graph
from .iso import IsoMapping

ORACLE_MAX_N = 10
ORACLE_ALL_MAX_N = 8


def _search(g1: Graph, g2: Graph) -> Iterator[tuple[int, ...]]:
    # Assigns vertices of g1 in id order, trying targets in id order, so
    # mappings come out in lexicographic order.
    n = g1.n
    if (
        n != g2.n
        or g1.edge_count != g2.edge_count
        or sorted(g1.degrees()) != sorted(g2.degrees())
    ):
        return
    deg1, deg2 = g1.degrees(), g2.degrees()
    fwd = [-1] * n
    used = [False] * n

    def extend(v: int) -> Iterator[tuple[int, ...]]:
        if v == n:
            yield tuple(fwd)
            return
        for w in range(n):
            if used[w] or deg2[w] != deg1[v]:
                continue
            if any(g1.has_edge(u, v) != g2.has_edge(fwd[u], w) for u in range(v)):
                continue
            fwd[v] = w
            used[w] = True
            yield from extend(v + 1)
            used[w] = False
        fwd[v] = -1

    yield from extend(0)


def oracle_isomorphism(g1: Graph, g2: Graph) -> IsoMapping | None:
    """Lexicographically smallest isomorphism ``g1 -> g2``, or None."""
    if max(g1.n, g2.n) > ORACLE_MAX_N:
        raise ValueError(f"oracle limited to n <= {ORACLE_MAX_N}")
    for fwd in _search(g1, g2):
        return IsoMapping.from_forward(fwd)
    return None


def oracle_all_isomorphisms(g1: Graph, g2: Graph) -> list[IsoMapping]:
    if max(g1.n, g2.n) > ORACLE_ALL_MAX_N:
        raise ValueError(f"exhaustive listing limited to n <= {ORACLE_ALL_MAX_N}")
    return [IsoMapping.from_forward(f) for f in _search(g1, g2)]
