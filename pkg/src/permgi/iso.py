"""Isomorphism of permissible graphs by UID comparison."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Mapping, Sequence

from .graph import Graph
from .profile import PermissibilityVerdict, all_profiles, check_permissible
from .uid import SEPARATOR, Uid, generate_uid


@dataclass(frozen=True)
class IsoMapping:
    forward: tuple[int, ...]
    backward: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.forward)
        if len(self.backward) != n or sorted(self.forward) != list(range(n)):
            raise ValueError("mapping is not a bijection")
        if any(self.backward[self.forward[v]] != v for v in range(n)):
            raise ValueError("backward is not the inverse of forward")

    @classmethod
    def from_forward(cls, forward: Sequence[int] | Mapping[int, int]) -> IsoMapping:
        if isinstance(forward, Mapping):
            forward = [forward[v] for v in range(len(forward))]
        backward = [0] * len(forward)
        for v, w in enumerate(forward):
            backward[w] = v
        return cls(tuple(forward), tuple(backward))

    def __getitem__(self, v: int) -> int:
        return self.forward[v]

    def __len__(self) -> int:
        return len(self.forward)

    def labelled(self, g1: Graph, g2: Graph) -> dict[str, str]:
        return {g1.labels[v]: g2.labels[w] for v, w in enumerate(self.forward)}


class Verdict(enum.Enum):
    ISOMORPHIC = "isomorphic"
    NOT_ISOMORPHIC = "non-isomorphic"
    INAPPLICABLE = "inapplicable"


@dataclass(frozen=True)
class IsoResult:
    verdict: Verdict
    mapping: IsoMapping | None = None
    failed_graph: int | None = None  # 1 or 2 when inapplicable
    permissibility: PermissibilityVerdict | None = None

    @property
    def isomorphic(self) -> bool:
        return self.verdict is Verdict.ISOMORPHIC


def compare_uid(a: Uid, b: Uid) -> dict[int, int] | None:
    """Positional match of two UIDs.

    Degree tokens must agree everywhere and vertex tokens must induce a
    consistent one-to-one association. Returns that association or None.
    """
    if len(a.tokens) != len(b.tokens):
        return None
    fwd: dict[int, int] = {}
    bwd: dict[int, int] = {}
    for (x, dx), (y, dy) in zip(a.tokens, b.tokens):
        if dx != dy:
            return None
        if dx == SEPARATOR:
            if x != SEPARATOR or y != SEPARATOR:
                return None
            continue
        if fwd.setdefault(x, y) != y or bwd.setdefault(y, x) != x:
            return None
    return fwd


def verify_mapping(g1: Graph, g2: Graph, m: IsoMapping | Sequence[int]) -> bool:
    fwd = m.forward if isinstance(m, IsoMapping) else tuple(m)
    if g1.n != g2.n or len(fwd) != g1.n or sorted(fwd) != list(range(g1.n)):
        return False
    if g1.edge_count != g2.edge_count:
        return False
    return all(g2.has_edge(fwd[u], fwd[v]) for u, v in g1.edges())


def find_isomorphism(g1: Graph, g2: Graph, root: int = 0) -> IsoResult:
    """Decide isomorphism of two graphs from the permissible class.

    ``root`` is the vertex of ``g1`` whose UID is matched against the
    equal-degree vertices of ``g2``. Any mapping returned has been checked
    edge by edge.
    """
    for side, g in ((1, g1), (2, g2)):
        pv = check_permissible(g)
        if not pv.permissible:
            return IsoResult(Verdict.INAPPLICABLE, failed_graph=side, permissibility=pv)

    if (
        g1.n != g2.n
        or g1.edge_count != g2.edge_count
        or sorted(g1.degrees()) != sorted(g2.degrees())
    ):
        return IsoResult(Verdict.NOT_ISOMORPHIC)
    if g1.n == 0:
        return IsoResult(Verdict.ISOMORPHIC, IsoMapping((), ()))

    ref = generate_uid(g1, root)
    profiles2 = all_profiles(g2)
    for w in range(g2.n):
        if g2.degree(w) != g1.degree(root):
            continue
        assoc = compare_uid(ref, generate_uid(g2, w, profiles2))
        if assoc is None or len(assoc) != g1.n:
            continue
        mapping = IsoMapping.from_forward(assoc)
        if verify_mapping(g1, g2, mapping):
            return IsoResult(Verdict.ISOMORPHIC, mapping)
    return IsoResult(Verdict.NOT_ISOMORPHIC)
