#!/usr/bin/env python3
"""Record the full human-decision tree for the browser client's replay test.

Drives the real HTTP service (in-process) on the spiked-triangle instance with
its adversarial weighting (human plays first, engine defends with the paper
policy) and records, for every reachable position: the API state, the API
analysis response, and the what-if values recomputed through the CLI `solve`
subcommand on the residual position. The frontend test replays every click
sequence against a mock serving exactly these payloads.

Run from the repository root:  python tools/record_ui_fixtures.py
"""

from __future__ import annotations

import contextlib
import io
import json
import sys
from pathlib import Path

from fastapi.testclient import TestClient

from graphgrab.cli import main as cli_main
from graphgrab.codec import WeightedGraphDoc, emit_weighted_doc
from graphgrab.graph import make_graph
from graphgrab.server import create_app

NEW_SESSION = {
    "n": 6,
    "edges": [[0, 1], [1, 2], [2, 0], [0, 3], [1, 4], [2, 5]],
    "weights": [1, 1, 1, 0, 0, 0],
    "human_side": "alice",
    "engine_policy": "paper",
}


def solve_value_via_cli(tmpdir: Path, state: dict, vertex: int) -> int:
    """What the CLI reports for the position after the human grabs ``vertex``:
    grabbed weight minus the residual game value."""
    remaining = [v for v in state["remaining"] if v != vertex]
    index = {v: i for i, v in enumerate(remaining)}
    edges = [
        (index[u], index[v])
        for u, v in (tuple(e) for e in state["edges"])
        if u in index and v in index
    ]
    weights = tuple(state["weights"][v] for v in remaining)
    doc = WeightedGraphDoc(graph=make_graph(len(remaining), edges), weights=weights)
    path = tmpdir / "pos.doc"
    path.write_text(emit_weighted_doc(doc))
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = cli_main(["solve", str(path)])
    assert code == 0
    d_line = next(line for line in buf.getvalue().splitlines() if line.startswith("game value d:"))
    residual = int(d_line.split(":")[1])
    return state["weights"][vertex] - residual


def main() -> int:
    import tempfile

    out_path = Path(__file__).resolve().parent.parent / "frontend" / "tests" / "fixtures" / "c3star_adversarial_tree.json"
    client = TestClient(create_app())
    nodes: dict[str, dict] = {}

    with tempfile.TemporaryDirectory() as td:
        tmpdir = Path(td)

        def record(key: str, clicks: list[int]) -> None:
            r = client.post("/api/session", json=NEW_SESSION)
            sid = r.json()["session_id"]
            state = r.json()["state"]
            for v in clicks:
                state = client.post(f"/api/session/{sid}/move", json={"vertex": v}).json()["state"]
            node: dict = {"state": state, "children": {}}
            if not state["game_over"]:
                analysis = client.get(f"/api/session/{sid}/analysis").json()
                node["analysis"] = analysis
                node["solve"] = {
                    str(v): solve_value_via_cli(tmpdir, state, v) for v in state["legal_moves"]
                }
                for v in state["legal_moves"]:
                    child_key = key + ("-" if key else "") + str(v)
                    node["children"][str(v)] = child_key
                    record(child_key, clicks + [v])
            client.delete(f"/api/session/{sid}")
            nodes[key] = node

        record("", [])

    fixture = {
        "description": "spiked triangle, adversarial weights, human first, engine paper-defends",
        "newSessionRequest": NEW_SESSION,
        "root": "",
        "nodes": nodes,
    }
    out_path.parent.mkdir(parents=True, exist_ok=True)
    out_path.write_text(json.dumps(fixture, indent=1))
    leaves = sum(1 for n in nodes.values() if n["state"]["game_over"])
    print(f"wrote {len(nodes)} nodes ({leaves} full games) to {out_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
