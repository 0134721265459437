"""Command-line surface: solve, classify, scan, verify, gen, play, serve."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import IO

from . import codec
from . import verify as verification
from .classify import enumerate_connected_graphs, in_a2, in_h2, scan_conjecture
from .engine import (
    ALICE,
    BOB,
    SubsetSolver,
    _apply_unchecked,
    game_value,
    legal_moves,
    new_game,
    optimal_line,
)
from .families import cycle, fully_spiked_cycle, path, prop8_weights
from .graph import Graph, bits
from .policy import POLICIES, EnginePolicy


def _load_doc(source: str, weight_bits: str | None) -> codec.WeightedGraphDoc:
    """Resolve an input argument: a weighted-doc path, a graph6 file path, or a
    graph6 literal. graph6 inputs take their weights from --weights."""
    p = Path(source)
    if p.is_file():
        text = p.read_text()
        first_words = {
            line.split("#", 1)[0].split()[0]
            for line in text.splitlines()
            if line.split("#", 1)[0].strip()
        }
        if first_words & {"n", "e", "w", "name", "integer"}:
            doc = codec.parse_weighted_doc(text)
            if weight_bits is not None:
                raise ValueError("--weights conflicts with a weighted doc")
            return doc
        g = codec.parse_graph6(text.strip().splitlines()[0])
    else:
        g = codec.parse_graph6(source)
    if weight_bits is None:
        raise ValueError("graph6 input needs --weights (e.g. --weights 010)")
    if len(weight_bits) != g.n or any(c not in "01" for c in weight_bits):
        raise ValueError(f"--weights must be {g.n} characters of 0/1")
    return codec.WeightedGraphDoc(graph=g, weights=tuple(int(c) for c in weight_bits))


def _fmt_line(transcript) -> str:
    return " ".join(f"{'A' if side == ALICE else 'B'}:{v}" for side, v in transcript)


def cmd_solve(args, out: IO[str]) -> int:
    doc = _load_doc(args.input, args.weights)
    g, w = doc.graph, doc.weights
    d = game_value(g, w)
    winner = ALICE if d >= 0 else BOB
    line = optimal_line(g, w)
    alice_total = sum(w[v] for side, v in line if side == ALICE)
    bob_total = sum(w[v] for side, v in line if side == BOB)
    print(f"n: {g.n}", file=out)
    print(f"total weight: {sum(w)}", file=out)
    print(f"game value d: {d}", file=out)
    print(f"winner: {winner}", file=out)
    print(f"optimal line: {_fmt_line(line)}  (alice {alice_total} - bob {bob_total})", file=out)
    return 0


def cmd_classify(args, out: IO[str]) -> int:
    # classification quantifies over weightings itself; accept bare graph6 or any doc
    p = Path(args.input)
    if p.is_file():
        text = p.read_text()
        try:
            g = codec.parse_weighted_doc(text).graph
        except ValueError:
            g = codec.parse_graph6(text.strip().splitlines()[0])
    else:
        g = codec.parse_graph6(args.input)
    only_a2 = args.a2 and not args.h2
    only_h2 = args.h2 and not args.a2
    print(f"graph6: {codec.emit_graph6(g)}", file=out)
    print(f"n: {g.n}", file=out)
    if not only_h2:
        a2_ok, counter = in_a2(g)
        print(f"in_a2: {str(a2_ok).lower()}", file=out)
        if counter is not None:
            print(f"a2_counterexample_weights: {''.join(map(str, counter))}", file=out)
    if not only_a2:
        h2_ok, counter2 = in_h2(g)
        print(f"in_h2: {str(h2_ok).lower()}", file=out)
        if counter2 is not None:
            subset, wbits = counter2
            print(f"h2_counterexample_subset: {';'.join(map(str, subset))}", file=out)
            print(f"h2_counterexample_weights: {wbits}", file=out)
    if not (only_a2 or only_h2):
        from .families import find_induced_fully_spiked_cycle

        witness = find_induced_fully_spiked_cycle(g.view(), parity="odd")
        odd_free = witness is None
        print(f"odd_cstar_free: {str(odd_free).lower()}", file=out)
        if witness is not None:
            print(f"odd_cstar_witness_cycle: {';'.join(map(str, witness.cycle))}", file=out)
            print(f"odd_cstar_witness_pendants: {';'.join(map(str, witness.pendants))}", file=out)
        print(f"consistent: {str(h2_ok == odd_free).lower()}", file=out)
    return 0


def cmd_scan(args, out: IO[str]) -> int:
    graphs: list[Graph] = []
    if args.internal_n is not None:
        if args.graph6_file:
            print("give either --internal-n or --graph6-file, not both", file=sys.stderr)
            return 2
        for n in range(1, args.internal_n + 1):
            graphs.extend(enumerate_connected_graphs(n))
    elif args.graph6_file:
        with open(args.graph6_file) as fh:
            for lineno, g, err in codec.iter_graph6_lines(fh):
                if err is not None:
                    print(f"{args.graph6_file}:{lineno}: {err}", file=sys.stderr)
                else:
                    graphs.append(g)
    else:
        print("give --internal-n or --graph6-file", file=sys.stderr)
        return 2
    records = scan_conjecture(graphs, jobs=args.jobs)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            codec.write_records_csv(records, fh)
    else:
        codec.write_records_csv(records, out)
    bad = [r for r in records if not r.conjecture_consistent]
    print(f"scanned {len(records)} graphs, {len(bad)} inconsistent", file=sys.stderr)
    for r in bad:
        print(f"counterexample candidate: {codec.record_row(r)}", file=sys.stderr)
    return 1 if bad else 0


def cmd_verify(args, out: IO[str]) -> int:
    names = list(verification.THEOREM_CHECKS) if args.theorem == "all" else [args.theorem]
    ok = True
    for name in names:
        result = verification.THEOREM_CHECKS[name]()
        status = "PASS" if result.passed else "FAIL"
        print(f"{name}: {status} ({result.detail}; {result.elapsed:.2f}s)", file=out)
        for f in result.failures:
            print(f"  failure: {f}", file=out)
        ok = ok and result.passed
    return 0 if ok else 1


def cmd_gen(args, out: IO[str]) -> int:
    if args.family == "path":
        g = path(args.n)
    elif args.family == "cycle":
        g = cycle(args.n)
    else:
        g = fully_spiked_cycle(args.n)
    if args.prop8_weights:
        if args.family != "spiked":
            print("--prop8-weights applies to spiked cycles only", file=sys.stderr)
            return 2
        doc = codec.WeightedGraphDoc(graph=g, weights=prop8_weights(g))
        out.write(codec.emit_weighted_doc(doc))
    else:
        print(codec.emit_graph6(g), file=out)
    return 0


def cmd_play(args, out: IO[str], in_stream: IO[str] | None = None) -> int:
    doc = _load_doc(args.input, args.weights)
    return play_game(doc, args.side, args.engine, in_stream or sys.stdin, out)


def play_game(doc: codec.WeightedGraphDoc, human_side: str, engine_kind: str, inp: IO[str], out: IO[str]) -> int:
    g, w = doc.graph, doc.weights
    state = new_game(g, w)
    solver = SubsetSolver(g)
    engine_side = BOB if human_side == ALICE else ALICE
    policy = EnginePolicy(engine_kind, engine_side, solver)

    def show(legal: int) -> None:
        rem = ", ".join(
            f"{v}(w={w[v]}{'*' if legal >> v & 1 else ''})" for v in bits(state.remaining)
        )
        print(f"alice {state.alice_score} - bob {state.bob_score} | remaining: {rem}", file=out)

    print(f"edges: {g.edges()}", file=out)
    print("legal vertices are starred; enter a vertex id to take it", file=out)
    while not state.game_over:
        if state.to_move == engine_side:
            v = policy.move(state)
            state = _apply_unchecked(state, v)
            print(f"engine ({engine_side}) takes {v} (w={w[v]})", file=out)
            continue
        legal = legal_moves(state)
        show(legal)
        print("take> ", file=out, end="", flush=True)
        line = inp.readline()
        if not line:
            print("input closed, resigning the session", file=out)
            return 1
        token = line.strip()
        if token in ("q", "quit"):
            return 1
        try:
            v = int(token)
        except ValueError:
            print(f"not a vertex id: {token!r}", file=out)
            continue
        if not 0 <= v < g.n or not state.remaining >> v & 1:
            print(f"vertex {v} is not on the board", file=out)
            continue
        if not legal >> v & 1:
            print(f"vertex {v} is a cut vertex of the current graph", file=out)
            continue
        state = _apply_unchecked(state, v)
    winner = ALICE if state.alice_score >= state.bob_score else BOB
    who = "you win" if winner == human_side else "engine wins"
    print(f"game over: {who} ({ALICE} {state.alice_score} - {BOB} {state.bob_score})", file=out)
    return 0


def cmd_serve(args, out: IO[str]) -> int:
    import uvicorn

    from .server import create_app

    static = args.ui if args.ui else None
    if static is None:
        default_ui = Path("frontend")
        if (default_ui / "index.html").is_file():
            static = str(default_ui)
    app = create_app(static_dir=static)
    print(f"serving on http://{args.host}:{args.port}/ (api under /api)", file=out)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphgrab",
        description="Exact-search toolkit for the vertex-grabbing game on {0,1}-weighted graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="print the game value, winner, and an optimal line")
    p.add_argument("input", help="weighted doc path, graph6 file path, or graph6 literal")
    p.add_argument("--weights", help="weight bits for graph6 inputs, e.g. 010")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("classify", help="A2/H2 membership and the odd spiked-cycle test")
    p.add_argument("input", help="doc path, graph6 file path, or graph6 literal")
    p.add_argument("--a2", action="store_true", help="restrict to the A2 check")
    p.add_argument("--h2", action="store_true", help="restrict to the H2 check")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("scan", help="conjecture scan over an inventory of graphs")
    p.add_argument("--internal-n", type=int, help="scan all connected graphs with <= K vertices (K <= 6)")
    p.add_argument("--graph6-file", help="scan graphs from a graph6 file")
    p.add_argument("--out", help="write the CSV report here instead of stdout")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers (default 1)")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify", help="run an exhaustive verification suite")
    p.add_argument(
        "theorem",
        choices=sorted(verification.THEOREM_CHECKS) + ["all"],
        help="which property suite to run",
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="emit a named family as graph6 or a weighted doc")
    p.add_argument("family", choices=["path", "cycle", "spiked"])
    p.add_argument("n", type=int, help="path length / cycle length (spiked: cycle length, 2n vertices)")
    p.add_argument(
        "--prop8-weights",
        action="store_true",
        help="emit a doc carrying the adversarial weighting (odd spiked cycles)",
    )
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("play", help="play against the engine in the terminal")
    p.add_argument("input", help="weighted doc path, graph6 file path, or graph6 literal")
    p.add_argument("--weights", help="weight bits for graph6 inputs")
    p.add_argument("--side", choices=[ALICE, BOB], default=ALICE, help="your side")
    p.add_argument(
        "--engine",
        choices=list(POLICIES),
        default="optimal",
        help="optimal: exact solver; paper: constructive strategies "
        "(pairing defence on odd spiked cycles with their adversarial weights when "
        "the engine defends, opening rule on whole even spiked cycles, cycle-aware "
        "grabbing on even spiked-cycle-free boards), solver fallback otherwise",
    )
    p.set_defaults(func=cmd_play)

    p = sub.add_parser("serve", help="run the HTTP session API (and UI, if built)")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8128)
    p.add_argument("--ui", help="directory of static UI assets to serve at /")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
