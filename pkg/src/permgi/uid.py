"""Breadth-layered vertex encodings (UIDs).

Starting from a root, every frontier vertex that has not been expanded yet
emits its canonical neighbor list and pushes those neighbors onto the next
frontier; a frontier vertex that was already expanded emits ``(x, -1)``.
Each round ends with a ``(-2, -2)`` separator. Generation stops after the
round that expands the last vertex.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .graph import Graph
from .profile import NeighborProfile, all_profiles

SEPARATOR = -2
EXPANDED = -1
SEP_PAIR = (SEPARATOR, SEPARATOR)


class DisconnectedGraphError(ValueError):
    pass


@dataclass(frozen=True)
class Uid:
    root: int
    tokens: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.tokens)

    @property
    def vertex_row(self) -> list[int]:
        return [t[0] for t in self.tokens]

    @property
    def degree_row(self) -> list[int]:
        return [t[1] for t in self.tokens]


def generate_uid(
    g: Graph, root: int, profiles: list[NeighborProfile] | None = None
) -> Uid:
    if not 0 <= root < g.n:
        raise IndexError(f"root {root} out of range")
    if profiles is None:
        profiles = all_profiles(g)
    tokens: list[tuple[int, int]] = [(root, g.degree(root)), SEP_PAIR]
    expanded = [False] * g.n
    remaining = g.n
    frontier = [root]
    while remaining:
        if not frontier:
            raise DisconnectedGraphError("graph is disconnected; UID cannot reach every vertex")
        nxt: list[int] = []
        for x in frontier:
            if expanded[x]:
                tokens.append((x, EXPANDED))
                continue
            expanded[x] = True
            remaining -= 1
            entries = profiles[x].entries
            tokens.extend(entries)
            nxt.extend(y for y, _ in entries)
        tokens.append(SEP_PAIR)
        frontier = nxt
    return Uid(root, tuple(tokens))


def generate_all_uids(g: Graph, workers: int | None = None) -> list[Uid]:
    """UIDs of every vertex, in vertex order; ``workers > 1`` uses a thread pool."""
    profiles = all_profiles(g)
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda r: generate_uid(g, r, profiles), range(g.n)))
    return [generate_uid(g, r, profiles) for r in range(g.n)]


def uid_degree_signature(u: Uid) -> list[int]:
    return u.degree_row
