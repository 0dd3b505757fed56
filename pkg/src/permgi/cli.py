"""Command-line entry point.

Exit codes: 0 isomorphic / permissible / success, 1 non-isomorphic /
not permissible / inapplicable, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Sequence

from .bench import bench
from .census import ENUM_MAX_N, census_row
from .graph import Graph, GraphFormatError, parse_edge_list, parse_graph6
from .iso import IsoResult, Verdict, find_isomorphism
from .oracle import ORACLE_MAX_N, oracle_isomorphism
from .profile import PermissibilityVerdict, check_permissible
from .uid import SEPARATOR, DisconnectedGraphError, Uid, generate_all_uids, generate_uid

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class InputError(Exception):
    pass


@dataclass
class RunReport:
    command: str
    inputs_digest: str
    payload: Any
    wall_ms: float
    exit_code: int = 0
    text: list[str] = field(default_factory=list)
    as_json: bool = False

    def as_dict(self) -> dict:
        return {
            "command": self.command,
            "inputsDigest": self.inputs_digest,
            "payload": self.payload,
            "wallMs": self.wall_ms,
        }


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # type: ignore[override]
        raise InputError(f"usage error: {message}")


def _build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument(
        "--format",
        choices=("g6", "edgelist"),
        help="input format (default: by extension, .g6 is graph6)",
    )
    p = _Parser(prog="permgi", description="Isomorphism testing for permissible graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("check", parents=[common], help="permissibility verdict for one graph")
    c.add_argument("graph")

    u = sub.add_parser("uid", parents=[common], help="print vertex and degree rows of a UID")
    u.add_argument("graph")
    u.add_argument("--vertex", help="external label of the root (default: all vertices)")
    u.add_argument("--parallel", type=int, default=0, metavar="WORKERS")

    for name in ("iso", "oracle-iso"):
        s = sub.add_parser(name, parents=[common], help="decide isomorphism of two graphs")
        s.add_argument("graph1")
        s.add_argument("graph2")

    ce = sub.add_parser("census", parents=[common], help="class counts per vertex count")
    ce.add_argument("--max-n", type=int, required=True)
    ce.add_argument("--parallel", type=int, default=0, metavar="WORKERS")

    b = sub.add_parser("bench", parents=[common], help="per-phase timings on random permissible graphs")
    b.add_argument("--min-n", type=int, default=4)
    b.add_argument("--max-n", type=int, default=12)
    b.add_argument("--samples", type=int, default=5)
    b.add_argument("--seed", type=int, default=0)
    return p


def _read_graph(path: str, fmt: str | None, digest: "hashlib._Hash") -> Graph:
    try:
        data = Path(path).read_bytes()
    except OSError as e:
        raise InputError(f"{path}: cannot read: {e.strerror}")
    digest.update(data)
    if fmt is None:
        fmt = "g6" if path.endswith(".g6") else "edgelist"
    try:
        if fmt == "g6":
            return parse_graph6(data)
        return parse_edge_list(data.decode("utf-8"))
    except (GraphFormatError, UnicodeDecodeError) as e:
        raise InputError(f"{path}: {e}")


def _permissibility_payload(g: Graph, pv: PermissibilityVerdict) -> dict:
    out: dict[str, Any] = {"permissible": pv.permissible, "reason": pv.reason.value}
    if pv.witness is not None:
        out["witness"] = [g.labels[v] for v in pv.witness]
    return out


def _iso_payload(g1: Graph, g2: Graph, res: IsoResult) -> dict:
    out: dict[str, Any] = {"verdict": res.verdict.value}
    if res.mapping is not None:
        out["mapping"] = res.mapping.labelled(g1, g2)
    if res.verdict is Verdict.INAPPLICABLE:
        g = g1 if res.failed_graph == 1 else g2
        out["reason"] = {"graph": res.failed_graph, **_permissibility_payload(g, res.permissibility)}
    return out


def _iso_text(payload: dict) -> list[str]:
    lines = [payload["verdict"]]
    if "mapping" in payload:
        lines.append(" ".join(f"{a}→{b}" for a, b in payload["mapping"].items()))
    if "reason" in payload:
        r = payload["reason"]
        detail = f"graph {r['graph']} is not permissible ({r['reason']})"
        if "witness" in r:
            detail += " witness " + " ".join(r["witness"])
        lines.append(detail)
    return lines


def _uid_rows(g: Graph, u: Uid) -> dict:
    return {
        "vertexRow": [g.labels[x] if x != SEPARATOR else str(SEPARATOR) for x in u.vertex_row],
        "degreeRow": u.degree_row,
    }


def _execute(args: argparse.Namespace, digest: "hashlib._Hash") -> tuple[int, Any, list[str]]:
    cmd = args.command
    if cmd == "check":
        g = _read_graph(args.graph, args.format, digest)
        pv = check_permissible(g)
        payload = _permissibility_payload(g, pv)
        text = ["permissible" if pv.permissible else f"not permissible ({pv.reason.value})"]
        if "witness" in payload:
            v, x, y = payload["witness"]
            text.append(f"witness: vertex {v} has neighbors {x} and {y} with equal profiles")
        return (EXIT_OK if pv.permissible else EXIT_NEGATIVE), payload, text

    if cmd == "uid":
        g = _read_graph(args.graph, args.format, digest)
        try:
            if args.vertex is not None:
                if args.vertex not in g.labels:
                    raise InputError(f"unknown vertex {args.vertex!r}")
                uids = [generate_uid(g, g.labels.index(args.vertex))]
            else:
                uids = generate_all_uids(g, args.parallel)
        except DisconnectedGraphError as e:
            raise InputError(str(e))
        rows = [_uid_rows(g, u) for u in uids]
        text = []
        for r in rows:
            text.append("vertex\t" + "\t".join(r["vertexRow"]))
            text.append("degree\t" + "\t".join(map(str, r["degreeRow"])))
        payload = rows[0] if args.vertex is not None else rows
        return EXIT_OK, payload, text

    if cmd in ("iso", "oracle-iso"):
        g1 = _read_graph(args.graph1, args.format, digest)
        g2 = _read_graph(args.graph2, args.format, digest)
        if cmd == "iso":
            res = find_isomorphism(g1, g2)
        else:
            if max(g1.n, g2.n) > ORACLE_MAX_N:
                raise InputError(f"oracle-iso supports n <= {ORACLE_MAX_N}")
            m = oracle_isomorphism(g1, g2)
            res = IsoResult(Verdict.ISOMORPHIC, m) if m is not None else IsoResult(Verdict.NOT_ISOMORPHIC)
        payload = _iso_payload(g1, g2, res)
        return (EXIT_OK if res.isomorphic else EXIT_NEGATIVE), payload, _iso_text(payload)

    if cmd == "census":
        if not 1 <= args.max_n <= ENUM_MAX_N:
            raise InputError(f"--max-n must be in 1..{ENUM_MAX_N}")
        rows = [census_row(n, args.parallel) for n in range(1, args.max_n + 1)]
        return EXIT_OK, [r.as_dict() for r in rows], [r.format() for r in rows]

    if cmd == "bench":
        if not 1 <= args.min_n <= args.max_n or args.samples < 1:
            raise InputError("need 1 <= --min-n <= --max-n and --samples >= 1")
        rows = bench(args.min_n, args.max_n, args.samples, args.seed)
        text = ["n\tsamples\tpreprocess_ms\tcheck_ms\tuid_ms\tmatch_ms"]
        for r in rows:
            text.append(
                f"{r.n}\t{r.samples}\t{r.preprocess_ms:.3f}\t{r.check_ms:.3f}"
                f"\t{r.uid_ms:.3f}\t{r.match_ms:.3f}"
            )
        return EXIT_OK, [r.as_dict() for r in rows], text

    raise InputError(f"unknown command {cmd!r}")


def run_cli(argv: Sequence[str] | None = None) -> tuple[int, RunReport]:
    """Run one command without touching stdout; returns (exit code, report)."""
    argv = list(sys.argv[1:] if argv is None else argv)
    digest = hashlib.sha256()
    t0 = time.perf_counter()
    command = argv[0] if argv else "?"
    try:
        args = _build_parser().parse_args(argv)
        code, payload, text = _execute(args, digest)
    except InputError as e:
        code, payload, text = EXIT_USAGE, {"error": str(e)}, [f"error: {e}"]
    wall = (time.perf_counter() - t0) * 1000.0
    report = RunReport(command, digest.hexdigest(), payload, wall, code, text, "--json" in argv)
    return code, report


def main(argv: Sequence[str] | None = None) -> int:
    code, report = run_cli(argv)
    stream = sys.stderr if code == EXIT_USAGE else sys.stdout
    if report.as_json:
        print(json.dumps(report.payload, ensure_ascii=False), file=stream)
    else:
        for line in report.text:
            print(line, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
