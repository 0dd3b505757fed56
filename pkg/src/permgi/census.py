"""Isomorphism-class enumeration for small n and the permissible-graph census."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

import numpy as np

from .graph import Graph, is_connected, is_tree
from .profile import check_permissible

CODE_MAX_N = 8
ENUM_MAX_N = 7

# Published counts (total, connected, trees, permissible). Rows 8 and 9 are
# kept for reference only; enumerate_classes does not reach them.
REFERENCE_COUNTS: dict[int, tuple[int, int, int, int]] = {
    1: (1, 1, 1, 1),
    2: (2, 1, 1, 1),
    3: (4, 2, 1, 0),
    4: (11, 6, 2, 1),
    5: (34, 21, 3, 0),
    6: (156, 112, 6, 6),
    7: (1044, 853, 11, 62),
    8: (12346, 11117, 23, 1024),
    9: (274668, 261080, 47, 29285),
}


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, n) for i in range(j)]


@lru_cache(maxsize=None)
def _image_weights(n: int) -> np.ndarray:
    """``W[p, k]``: value of the bit that pair ``k`` lands on under permutation ``p``.

    Bit strings are read in graph6 pair order with the first pair as the most
    significant bit, so lexicographic order on strings is integer order.
    """
    pairs = _pairs(n)
    m = len(pairs)
    index = {pr: k for k, pr in enumerate(pairs)}
    perms = list(permutations(range(n)))
    w = np.empty((len(perms), m), dtype=np.int64)
    for p, perm in enumerate(perms):
        for k, (i, j) in enumerate(pairs):
            a, b = perm[i], perm[j]
            w[p, k] = 1 << (m - 1 - index[(min(a, b), max(a, b))])
    return w


def _mask_of(g: Graph) -> int:
    pairs = _pairs(g.n)
    m = len(pairs)
    return sum(1 << (m - 1 - k) for k, (i, j) in enumerate(pairs) if g.has_edge(i, j))


def _graph_of(mask: int, n: int) -> Graph:
    pairs = _pairs(n)
    m = len(pairs)
    return Graph.from_edges(n, [pr for k, pr in enumerate(pairs) if (mask >> (m - 1 - k)) & 1])


def _orbit(mask: int, n: int) -> np.ndarray:
    w = _image_weights(n)
    m = w.shape[1]
    bits = np.array([(mask >> (m - 1 - k)) & 1 for k in range(m)], dtype=bool)
    return w[:, bits].sum(axis=1)


def canonical_code(g: Graph) -> str:
    """Lexicographically smallest upper-triangle bit string over all relabelings."""
    if g.n > CODE_MAX_N:
        raise ValueError(f"canonical_code limited to n <= {CODE_MAX_N}")
    m = g.n * (g.n - 1) // 2
    if m == 0:
        return ""
    return format(int(_orbit(_mask_of(g), g.n).min()), f"0{m}b")


@lru_cache(maxsize=2)
def _popcounts(m: int) -> np.ndarray:
    masks = np.arange(1 << m, dtype=np.int64)
    popcount = np.zeros(1 << m, dtype=np.int8)
    for k in range(m):
        popcount += ((masks >> k) & 1).astype(np.int8)
    return popcount


def _class_codes(n: int, edge_count: int) -> list[int]:
    """Minimal codes of all classes with the given edge count.

    Walks every labeled mask with that many edges; a mask already seen as the
    image of an earlier one is skipped, otherwise its whole orbit is marked.
    """
    m = n * (n - 1) // 2
    if m == 0:
        return [0]
    popcount = _popcounts(m)
    seen = np.zeros(1 << m, dtype=bool)
    codes = []
    for mask in np.flatnonzero(popcount == edge_count):
        if seen[mask]:
            continue
        orbit = _orbit(int(mask), n)
        seen[orbit] = True
        codes.append(int(orbit.min()))
    return codes


def enumerate_classes(n: int, workers: int | None = None) -> list[Graph]:
    """One representative per isomorphism class, sorted by canonical code.

    The labeled masks are split by edge count (relabeling preserves it), so
    the partitions are independent; ``workers > 1`` runs them in processes.
    """
    if not 1 <= n <= ENUM_MAX_N:
        raise ValueError(f"enumerate_classes supports 1 <= n <= {ENUM_MAX_N}")
    m = n * (n - 1) // 2
    ks = range(m + 1)
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_class_codes, [n] * len(ks), ks))
    else:
        parts = [_class_codes(n, k) for k in ks]
    codes = sorted(c for part in parts for c in part)
    return [_graph_of(c, n) for c in codes]


@dataclass(frozen=True)
class CensusRow:
    n: int
    total: int
    connected: int
    trees: int
    permissible: int

    @property
    def fraction(self) -> float:
        return round(self.permissible / self.total, 4)

    def counts(self) -> tuple[int, int, int, int]:
        return self.total, self.connected, self.trees, self.permissible

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "total": self.total,
            "connected": self.connected,
            "trees": self.trees,
            "permissible": self.permissible,
            "fraction": self.fraction,
        }

    def format(self, sep: str = "\t") -> str:
        cols = [self.n, self.total, self.connected, self.trees, self.permissible]
        return sep.join([*map(str, cols), f"{self.fraction:.4f}"])


def census_row(n: int, workers: int | None = None) -> CensusRow:
    graphs = enumerate_classes(n, workers)
    return CensusRow(
        n=n,
        total=len(graphs),
        connected=sum(is_connected(g) for g in graphs),
        trees=sum(is_tree(g) for g in graphs),
        permissible=sum(check_permissible(g).permissible for g in graphs),
    )
