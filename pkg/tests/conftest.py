from __future__ import annotations

from pathlib import Path

import pytest

from permgi import Graph, parse_edge_list

GRAPHS_DIR = Path(__file__).resolve().parent.parent / "graphs"

# G1 as its adjacency list (vertex -> neighbors)
G1_ADJ = {1: [2], 2: [1, 3, 4], 3: [2, 4], 4: [2, 3, 5, 6], 5: [4], 6: [4, 7], 7: [6]}

G1_TEXT = """\
# G1
7
1 2
2 3
2 4
3 4
4 5
4 6
6 7
"""

G2_TEXT = """\
7 A B C D E F G
A B
B D
C D
D E
D F
F G
F E
"""

G3_TEXT = (GRAPHS_DIR / "g3.el").read_text()

# G1 -> G2
G1_TO_G2 = {"1": "G", "2": "F", "3": "E", "4": "D", "5": "C", "6": "B", "7": "A"}


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for j in range(n) for i in range(j)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def all_labeled_graphs(n: int):
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [p for k, p in enumerate(pairs) if mask >> k & 1])


@pytest.fixture(scope="session")
def g1() -> Graph:
    return parse_edge_list(G1_TEXT)


@pytest.fixture(scope="session")
def g2() -> Graph:
    return parse_edge_list(G2_TEXT)


@pytest.fixture(scope="session")
def g3() -> Graph:
    return parse_edge_list(G3_TEXT)


@pytest.fixture(scope="session")
def p4() -> Graph:
    return path_graph(4)


# acceptance reporting: one line per criterion at the end of the run

_ACCEPTANCE: dict[int, list[tuple[bool, str]]] = {}


@pytest.fixture
def criterion():
    def record(number: int, passed: bool, detail: str = "") -> bool:
        _ACCEPTANCE.setdefault(number, []).append((bool(passed), detail))
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        results = _ACCEPTANCE[number]
        ok = all(p for p, _ in results)
        details = "; ".join(d for p, d in results if d and (not ok and not p or ok))
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {details}")
