"""graph6 encoding (short form, up to 62 vertices)."""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .errors import MalformedGraph6, OrderTooLarge
from .graph import Graph

MAX_ORDER = 62


def _bit_positions(n: int) -> Iterator[tuple[int, int]]:
    # upper triangle, column-major: (0,1), (0,2), (1,2), (0,3), ...
    for j in range(1, n):
        for i in range(j):
            yield i, j


def to_graph6(g: Graph) -> str:
    n = g.order
    if n > MAX_ORDER:
        raise OrderTooLarge(f"graph6 short form supports n <= {MAX_ORDER}, got {n}")
    edges = set(g.edges)
    bits = [1 if pair in edges else 0 for pair in _bit_positions(n)]
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        chunk = 0
        for b in bits[k:k + 6]:
            chunk = (chunk << 1) | b
        out.append(chr(chunk + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise MalformedGraph6("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise MalformedGraph6(f"character {ch!r} outside 63..126")
    n = ord(s[0]) - 63
    if n > MAX_ORDER:
        raise OrderTooLarge("long-form graph6 (n > 62) is not supported")
    nbits = n * (n - 1) // 2
    expected = 1 + (nbits + 5) // 6
    if len(s) != expected:
        raise MalformedGraph6(f"order {n} needs {expected} characters, got {len(s)}")
    bits = []
    for ch in s[1:]:
        val = ord(ch) - 63
        bits.extend((val >> (5 - k)) & 1 for k in range(6))
    if any(bits[nbits:]):
        raise MalformedGraph6("nonzero padding bits")
    edges = tuple(sorted(pair for pair, b in zip(_bit_positions(n), bits) if b))
    return Graph(n, edges)


def read_graph6_lines(lines: Iterable[str]) -> list[Graph]:
    """Parse one graph per line, skipping blanks and '#' comments."""
    graphs = []
    for lineno, line in enumerate(lines, 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        try:
            graphs.append(parse_graph6(s))
        except MalformedGraph6 as exc:
            raise MalformedGraph6(f"line {lineno}: {exc}") from None
    return graphs


def read_graph6_file(path) -> list[Graph]:
    with open(path, encoding="ascii") as fh:
        return read_graph6_lines(fh)


def write_graph6(graphs: Iterable[Graph], fh: TextIO) -> None:
    for g in graphs:
        fh.write(to_graph6(g) + "\n")
