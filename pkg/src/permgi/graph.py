"""Simple undirected graphs and their graph6 / edge-list serializations."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

GRAPH6_MAX_N = 62


class GraphFormatError(ValueError):
    """Malformed graph input. ``where`` names the offending line or byte."""

    def __init__(self, message: str, where: str | None = None):
        self.where = where
        super().__init__(f"{where}: {message}" if where else message)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``labels`` holds the external name of each vertex and is only used for
    reporting.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.adjacency) != self.n:
            raise ValueError("adjacency must have one entry per vertex")
        for v, nbrs in enumerate(self.adjacency):
            if list(nbrs) != sorted(set(nbrs)):
                raise ValueError(f"adjacency of {v} is not sorted and duplicate-free")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise ValueError(f"neighbor {u} of {v} out of range")
                if u == v:
                    raise ValueError(f"self-loop at {v}")
                if v not in self.adjacency[u]:
                    raise ValueError(f"asymmetric edge {v}-{u}")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(v) for v in range(self.n)))
        elif len(self.labels) != self.n:
            raise ValueError("labels must have one entry per vertex")

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[str] | None = None,
    ) -> Graph:
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        adjacency = tuple(tuple(sorted(s)) for s in nbrs)
        return cls(n, adjacency, tuple(labels) if labels else ())

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    @property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed ``perm[v]``.

        Labels travel with their vertices.
        """
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of 0..n-1")
        labels = [""] * self.n
        for v, pv in enumerate(perm):
            labels[pv] = self.labels[v]
        return Graph.from_edges(
            self.n, ((perm[u], perm[v]) for u, v in self.edges()), labels
        )

    def label_of(self, v: int) -> str:
        return self.labels[v]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    reached = 1
    while queue:
        v = queue.popleft()
        for u in g.adjacency[v]:
            if not seen[u]:
                seen[u] = True
                reached += 1
                queue.append(u)
    return reached == g.n


def is_tree(g: Graph) -> bool:
    return g.edge_count == g.n - 1 and is_connected(g)


# graph6


def _graph6_pairs(n: int) -> list[tuple[int, int]]:
    # column order: for j in 1..n-1, for i in 0..j-1
    return [(i, j) for j in range(1, n) for i in range(j)]


def parse_graph6(data: bytes | str) -> Graph:
    """Decode a single short-form graph6 record (n <= 62)."""
    if isinstance(data, str):
        data = data.encode("ascii", errors="replace")
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<") :]
    if not data:
        raise GraphFormatError("empty graph6 record")
    for pos, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise GraphFormatError(f"invalid graph6 byte value {byte}", f"byte {pos}")
    n = data[0] - 63
    if n > GRAPH6_MAX_N:
        raise GraphFormatError("long-form graph6 (n > 62) is not supported", "byte 0")
    pairs = _graph6_pairs(n)
    expected = 1 + (len(pairs) + 5) // 6
    if len(data) != expected:
        raise GraphFormatError(
            f"record length {len(data)} inconsistent with n={n} (expected {expected})",
            f"byte {min(len(data), expected)}",
        )
    edges = []
    for k, pair in enumerate(pairs):
        chunk = data[1 + k // 6] - 63
        if (chunk >> (5 - k % 6)) & 1:
            edges.append(pair)
    return Graph.from_edges(n, edges)


def encode_graph6(g: Graph) -> bytes:
    if g.n > GRAPH6_MAX_N:
        raise ValueError(f"graph6 short form supports n <= {GRAPH6_MAX_N}, got {g.n}")
    bits = [1 if g.has_edge(i, j) else 0 for i, j in _graph6_pairs(g.n)]
    bits += [0] * (-len(bits) % 6)
    out = bytearray([g.n + 63])
    for k in range(0, len(bits), 6):
        chunk = 0
        for b in bits[k : k + 6]:
            chunk = (chunk << 1) | b
        out.append(chunk + 63)
    return bytes(out)


# edge lists


def parse_edge_list(text: str) -> Graph:
    """Parse the plain edge-list format.

    The first non-comment line holds ``n``, optionally followed by ``n``
    vertex names; without names the vertices are called ``1..n``. Every
    further line is one edge ``u v`` written with those names. ``#`` starts a
    comment and blank lines are skipped.
    """
    n: int | None = None
    index: dict[str, int] = {}
    labels: list[str] = []
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        where = f"line {lineno}"
        parts = line.split()
        if n is None:
            try:
                n = int(parts[0])
            except ValueError:
                raise GraphFormatError(f"expected vertex count, got {parts[0]!r}", where)
            if n < 0:
                raise GraphFormatError("vertex count must be non-negative", where)
            labels = parts[1:] or [str(v) for v in range(1, n + 1)]
            if len(labels) != n:
                raise GraphFormatError(f"expected {n} vertex names, got {len(labels)}", where)
            if len(set(labels)) != n:
                raise GraphFormatError("duplicate vertex name", where)
            index = {name: v for v, name in enumerate(labels)}
            continue
        if len(parts) != 2:
            raise GraphFormatError(f"expected 'u v', got {line!r}", where)
        a, b = parts
        for name in (a, b):
            if name not in index:
                raise GraphFormatError(f"vertex {name!r} out of range", where)
        u, v = index[a], index[b]
        if u == v:
            raise GraphFormatError(f"self-loop at {a}", where)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {a}-{b}", where)
        seen.add(key)
        edges.append(key)
    if n is None:
        raise GraphFormatError("missing vertex count")
    return Graph.from_edges(n, edges, labels)


def format_edge_list(g: Graph) -> str:
    header = str(g.n)
    if list(g.labels) != [str(v) for v in range(1, g.n + 1)]:
        header += " " + " ".join(g.labels)
    lines = [header] + [f"{g.labels[u]} {g.labels[v]}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"
