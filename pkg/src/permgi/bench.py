"""Random permissible graphs and per-phase timing of the UID pipeline."""

from __future__ import annotations

import random
import statistics
import time
from dataclasses import dataclass

from .graph import Graph, is_connected
from .iso import compare_uid, verify_mapping, IsoMapping
from .profile import all_profiles, check_permissible
from .uid import generate_uid


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(i, j) for j in range(1, n) for i in range(j) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_connected_graph(n: int, rng: random.Random, p: float | None = None) -> Graph:
    while True:
        g = random_graph(n, rng.uniform(0.2, 0.8) if p is None else p, rng)
        if is_connected(g):
            return g


def random_permissible_graph(n: int, rng: random.Random, max_tries: int = 100_000) -> Graph:
    """Rejection sampling over random connected graphs.

    Raises RuntimeError when no sample passes; there are no permissible
    graphs at all for n = 3 and n = 5.
    """
    for _ in range(max_tries):
        g = random_connected_graph(n, rng)
        if check_permissible(g).permissible:
            return g
    raise RuntimeError(f"no permissible graph found for n={n} in {max_tries} tries")


def random_permutation(n: int, rng: random.Random) -> list[int]:
    perm = list(range(n))
    rng.shuffle(perm)
    return perm


@dataclass
class PhaseTimes:
    n: int
    samples: int
    preprocess_ms: float
    check_ms: float
    uid_ms: float
    match_ms: float

    def as_dict(self) -> dict:
        return dict(vars(self))


def _ms(t0: float) -> float:
    return (time.perf_counter() - t0) * 1000.0


def time_pipeline(g1: Graph, g2: Graph) -> tuple[float, float, float, float]:
    """Run the all-roots pipeline on one pair and return per-phase milliseconds.

    Every UID of ``g1`` is matched against every UID of ``g2``, which is the
    cost model the complexity bounds are stated for.
    """
    t0 = time.perf_counter()
    p1, p2 = all_profiles(g1), all_profiles(g2)
    pre = _ms(t0)

    t0 = time.perf_counter()
    check_permissible(g1)
    check_permissible(g2)
    chk = _ms(t0)

    t0 = time.perf_counter()
    u1 = [generate_uid(g1, r, p1) for r in range(g1.n)]
    u2 = [generate_uid(g2, r, p2) for r in range(g2.n)]
    uid = _ms(t0)

    t0 = time.perf_counter()
    for a in u1:
        for b in u2:
            assoc = compare_uid(a, b)
            if assoc is not None and len(assoc) == g1.n:
                verify_mapping(g1, g2, IsoMapping.from_forward(assoc))
                break
    match = _ms(t0)
    return pre, chk, uid, match


def bench(min_n: int, max_n: int, samples: int, seed: int = 0) -> list[PhaseTimes]:
    rng = random.Random(seed)
    rows = []
    for n in range(min_n, max_n + 1):
        if n in (3, 5):
            continue
        runs = []
        for _ in range(samples):
            g = random_permissible_graph(n, rng)
            h = g.relabel(random_permutation(n, rng))
            runs.append(time_pipeline(g, h))
        med = [statistics.median(col) for col in zip(*runs)]
        rows.append(PhaseTimes(n, samples, *med))
    return rows
