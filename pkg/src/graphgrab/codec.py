"""graph6 codec (short form, n <= 62), the weighted-graph text format, and CSV reports."""

from __future__ import annotations

import csv
from dataclasses import dataclass
from typing import IO, Iterable, Iterator, Sequence

from .graph import Graph, MAX_VERTICES, make_graph

GRAPH6_HEADER = ">>graph6<<"


def _pair_stream(n: int) -> Iterator[tuple[int, int]]:
    """Upper-triangle pairs in graph6 column order: (0,1), (0,2), (1,2), (0,3), ..."""
    for j in range(1, n):
        for i in range(j):
            yield i, j


def parse_graph6(line: str) -> Graph:
    """Decode one short-form graph6 line; tolerates the standard header."""
    s = line.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise ValueError("empty graph6 line")
    data = s.encode("ascii", errors="replace")
    if any(b < 63 or b > 126 for b in data):
        raise ValueError("graph6 byte outside [63, 126]")
    if data[0] == 126:
        raise ValueError(f"long-form graph6 (n > {MAX_VERTICES}) is not supported")
    n = data[0] - 63
    if not 1 <= n <= MAX_VERTICES:
        raise ValueError(f"vertex count must be in [1, {MAX_VERTICES}], got {n}")
    npairs = n * (n - 1) // 2
    want = (npairs + 5) // 6
    body = data[1:]
    if len(body) != want:
        raise ValueError(f"expected {want} data bytes for n={n}, got {len(body)}")
    edges = []
    idx = 0
    for u, v in _pair_stream(n):
        byte = body[idx // 6] - 63
        if byte >> (5 - idx % 6) & 1:
            edges.append((u, v))
        idx += 1
    return make_graph(n, edges)


def emit_graph6(g: Graph) -> str:
    """Encode a graph as one short-form graph6 line (inverse of parse_graph6)."""
    if g.n > MAX_VERTICES:
        raise ValueError(f"graph6 short form caps at {MAX_VERTICES} vertices")
    out = [chr(g.n + 63)]
    acc = 0
    nbits = 0
    for u, v in _pair_stream(g.n):
        acc = (acc << 1) | (g.adj[u] >> v & 1)
        nbits += 1
        if nbits == 6:
            out.append(chr(acc + 63))
            acc = 0
            nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def iter_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, Graph | None, str | None]]:
    """Parse a graph6 stream leniently: yields (line_number, graph, error) triples.

    Blank lines are skipped; a bad line yields (lineno, None, message) so
    callers can report and continue.
    """
    for lineno, raw in enumerate(lines, start=1):
        stripped = raw.strip()
        if not stripped:
            continue
        try:
            yield lineno, parse_graph6(stripped), None
        except ValueError as e:
            yield lineno, None, str(e)


@dataclass(frozen=True)
class WeightedGraphDoc:
    """A graph together with its per-vertex weights and an optional name."""

    graph: Graph
    weights: tuple[int, ...]
    name: str | None = None
    integer_weights: bool = False


def parse_weighted_doc(text: str) -> WeightedGraphDoc:
    """Parse the line-oriented weighted-graph format.

    Lines: ``n <N>``, zero or more ``e <u> <v>``, one ``w <b0> ... <b_{N-1}>``,
    optional ``name <text>`` and ``integer`` flag; ``#`` starts a comment.
    """
    n: int | None = None
    edges: list[tuple[int, int]] = []
    weights: list[int] | None = None
    name: str | None = None
    integer_flag = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind = parts[0]
        try:
            if kind == "n":
                if n is not None:
                    raise ValueError("duplicate n line")
                n = int(parts[1])
            elif kind == "e":
                edges.append((int(parts[1]), int(parts[2])))
            elif kind == "w":
                if weights is not None:
                    raise ValueError("duplicate w line")
                weights = [int(x) for x in parts[1:]]
            elif kind == "name":
                name = line[len("name"):].strip()
            elif kind == "integer":
                integer_flag = True
            else:
                raise ValueError(f"unknown directive {kind!r}")
        except (IndexError, ValueError) as e:
            raise ValueError(f"line {lineno}: {e}") from None
    if n is None:
        raise ValueError("missing n line")
    if weights is None:
        raise ValueError("missing w line")
    g = make_graph(n, edges)
    if len(weights) != n:
        raise ValueError(f"expected {n} weights, got {len(weights)}")
    if not integer_flag and any(x not in (0, 1) for x in weights):
        raise ValueError("weights outside {0,1} require an 'integer' flag line")
    return WeightedGraphDoc(graph=g, weights=tuple(weights), name=name, integer_weights=integer_flag)


def emit_weighted_doc(doc: WeightedGraphDoc) -> str:
    lines = []
    if doc.name:
        lines.append(f"name {doc.name}")
    lines.append(f"n {doc.graph.n}")
    if doc.integer_weights:
        lines.append("integer")
    for u, v in doc.graph.edges():
        lines.append(f"e {u} {v}")
    lines.append("w " + " ".join(str(x) for x in doc.weights))
    return "\n".join(lines) + "\n"


CSV_HEADER = [
    "graph6",
    "n",
    "in_a2",
    "in_h2",
    "odd_cstar_free",
    "consistent",
    "counterexample_subset",
    "counterexample_weights",
]


def record_row(record) -> list[str]:
    """Flatten a ClassificationRecord into the fixed CSV column set."""
    if record.h2_counterexample is not None:
        subset, wbits = record.h2_counterexample
        subset_s = ";".join(str(v) for v in subset)
    else:
        subset_s, wbits = "", ""
    return [
        record.graph6,
        str(record.n),
        _b(record.in_a2),
        _b(record.in_h2),
        _b(record.odd_cstar_free),
        _b(record.conjecture_consistent),
        subset_s,
        wbits,
    ]


def _b(x: bool) -> str:
    return "true" if x else "false"


def write_records_csv(records: Sequence, out: IO[str]) -> None:
    writer = csv.writer(out)
    writer.writerow(CSV_HEADER)
    for r in records:
        writer.writerow(record_row(r))
