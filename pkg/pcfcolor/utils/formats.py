"""Plain-text codecs.

Edge list:  first data line ``n m``, then ``m`` lines ``u v``.
Lists:      one line per vertex, ``v: c1 c2 c3``.
Coloring:   one line per colored vertex, ``v c``.

Vertices are 0-indexed. ``#`` starts a comment; blank lines are ignored.
"""
from __future__ import annotations

from typing import Iterator, Union

from ..exceptions import InputError, ParseError
from ..models import Coloring, Graph, ListAssignment

Text = Union[str, bytes]


def _data_lines(text: Text) -> Iterator[tuple[int, list[str]]]:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not utf-8: {exc}") from exc
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield lineno, body.split()


def _int(token: str, lineno: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"{what} {token!r} is not an integer", lineno) from None


def parse_edge_list(text: Text) -> Graph:
    lines = _data_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError("missing 'n m' header") from None
    if len(header) != 2:
        raise ParseError("header must be 'n m'", lineno)
    n, m = _int(header[0], lineno, "vertex count"), _int(header[1], lineno, "edge count")
    if n < 0 or m < 0:
        raise ParseError("counts must be non-negative", lineno)

    rows: list[set[int]] = [set() for _ in range(n)]
    seen = 0
    for lineno, fields in lines:
        if len(fields) != 2:
            raise ParseError("edge line must be 'u v'", lineno)
        u, v = _int(fields[0], lineno, "vertex"), _int(fields[1], lineno, "vertex")
        for w in (u, v):
            if not 0 <= w < n:
                raise ParseError(f"vertex {w} out of range for n={n}", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        seen += 1
        if seen > m:
            raise ParseError(f"more than the declared {m} edges", lineno)
        rows[u].add(v)
        rows[v].add(u)
    if seen != m:
        raise ParseError(f"declared {m} edges, found {seen}")
    return Graph(n=n, adjacency=tuple(tuple(sorted(row)) for row in rows))


def serialize_edge_list(graph: Graph) -> str:
    lines = [f"{graph.n} {graph.m}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges())
    return "\n".join(lines) + "\n"


def parse_list_assignment(text: Text, n: int) -> ListAssignment:
    lists: dict[int, frozenset[int]] = {}
    for lineno, fields in _data_lines(text):
        head = fields[0]
        rest = fields[1:]
        if head.endswith(":"):
            head = head[:-1]
        elif rest and rest[0] == ":":
            rest = rest[1:]
        elif ":" in head:
            head, first = head.split(":", 1)
            rest = [first, *rest]
        else:
            raise ParseError("list line must be 'v: c1 c2 ...'", lineno)
        v = _int(head, lineno, "vertex")
        if not 0 <= v < n:
            raise ParseError(f"vertex {v} out of range for n={n}", lineno)
        if v in lists:
            raise ParseError(f"vertex {v} listed twice", lineno)
        colors = frozenset(_int(tok, lineno, "color") for tok in rest)
        if not colors:
            raise ParseError(f"list of vertex {v} is empty", lineno)
        if any(c < 1 for c in colors):
            raise ParseError("colors must be positive integers", lineno)
        lists[v] = colors
    missing = [v for v in range(n) if v not in lists]
    if missing:
        raise ParseError(f"no list for vertex {missing[0]}")
    return ListAssignment(lists=tuple(lists[v] for v in range(n)))


def serialize_list_assignment(lists: ListAssignment) -> str:
    return "".join(
        f"{v}: {' '.join(map(str, sorted(colors)))}\n" for v, colors in enumerate(lists)
    )


def parse_coloring(text: Text, n: int) -> Coloring:
    colors: dict[int, int] = {}
    for lineno, fields in _data_lines(text):
        if len(fields) != 2:
            raise ParseError("coloring line must be 'v c'", lineno)
        v, c = _int(fields[0], lineno, "vertex"), _int(fields[1], lineno, "color")
        if not 0 <= v < n:
            raise ParseError(f"vertex {v} out of range for n={n}", lineno)
        if v in colors:
            raise ParseError(f"vertex {v} colored twice", lineno)
        if c < 1:
            raise ParseError("colors must be positive integers", lineno)
        colors[v] = c
    try:
        return Coloring.from_mapping(n, colors)
    except InputError as exc:
        raise ParseError(str(exc)) from exc


def serialize_coloring(coloring: Coloring) -> str:
    return "".join(f"{v} {coloring[v]}\n" for v in coloring)
