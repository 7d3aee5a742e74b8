"""Text formats for trees, graphs and codes.

Tree/graph file: first significant line is ``n``, then one ``u v`` edge per
line.  Lines starting with ``#`` and blank lines are ignored.
"""

from __future__ import annotations

from .errors import FormatError
from .tree import LabeledTree, SimpleGraph, validate_graph, validate_tree


def _significant_lines(text: str) -> list[str]:
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]


def _parse_int(token: str, what: str) -> int:
    if not token.isascii() or not token.lstrip("-").isdigit():
        raise FormatError(f"{what}: expected a decimal integer, got {token!r}")
    return int(token)


def _parse_edge_file(text: str) -> tuple[int, list[tuple[int, int]]]:
    lines = _significant_lines(text)
    if not lines:
        raise FormatError("empty input: expected the vertex count on the first line")
    n = _parse_int(lines[0], "vertex count")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError(f"edge line {ln!r}: expected 'u v'")
        edges.append((_parse_int(parts[0], "edge"), _parse_int(parts[1], "edge")))
    return n, edges


def parse_tree(text: str) -> LabeledTree:
    return validate_tree(*_parse_edge_file(text))


def parse_graph(text: str) -> SimpleGraph:
    return validate_graph(*_parse_edge_file(text))


def format_tree(t: LabeledTree | SimpleGraph) -> str:
    return "".join([f"{t.n}\n"] + [f"{u} {v}\n" for u, v in t.edges])


def parse_values(text: str) -> list[int]:
    """Comma-separated decimal values; the empty string is the empty sequence."""
    text = text.strip()
    if not text:
        return []
    return [_parse_int(tok.strip(), "sequence value") for tok in text.split(",")]


def format_values(values) -> str:
    return ",".join(str(v) for v in values)


def format_enumeration_line(rank: int, values, t: LabeledTree) -> str:
    return f"{rank}\t{format_values(values)}\t{t}"
