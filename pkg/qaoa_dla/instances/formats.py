"""Instance file formats.

mqlib:    first non-comment line ``<n> <m>``, then exactly m lines ``<u> <v> <w>``
          with 1-based vertices and a decimal weight. Lines starting with '#'
          are comments.
edgelist: optional first line holding the vertex count, then ``<u> <v>`` per
          line with 0-based vertices; unweighted.
"""

from collections.abc import Iterator
from fractions import Fraction

from qaoa_dla.errors import ParseError
from qaoa_dla.graphs.base import Edge, Graph, Weight, canonical_edge


def _lines(text: str | bytes) -> Iterator[tuple[int, list[str]]]:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError("input is not valid UTF-8", line=1) from exc
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, stripped.split()


def _int(token: str, lineno: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {token!r}", line=lineno) from None


def _weight(token: str, lineno: int, exact: bool) -> Weight:
    try:
        return Fraction(token) if exact else float(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"weight must be a decimal number, got {token!r}", line=lineno) from None


def _add_edge(seen: set[Edge], n: int, u: int, v: int, lineno: int) -> Edge:
    for w in (u, v):
        if not 0 <= w < n:
            raise ParseError(f"vertex {w} out of range for n={n}", line=lineno)
    if u == v:
        raise ParseError(f"self-loop at vertex {u}", line=lineno)
    key = canonical_edge(u, v)
    if key in seen:
        raise ParseError(f"duplicate edge {key}", line=lineno)
    seen.add(key)
    return key


def parse_mqlib(text: str | bytes, *, ignore_weights: bool = False, exact: bool = False) -> Graph:
    lines = _lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError("missing '<n> <m>' header", line=1) from None
    if len(header) != 2:
        raise ParseError("header must be '<n> <m>'", line=lineno)
    n, m = _int(header[0], lineno, "n"), _int(header[1], lineno, "m")
    if n < 0 or m < 0:
        raise ParseError("header counts must be non-negative", line=lineno)

    seen: set[Edge] = set()
    edges: list[Edge] = []
    weights: list[Weight] = []
    last = lineno
    for lineno, tokens in lines:
        last = lineno
        if len(edges) == m:
            raise ParseError(f"more edge lines than the {m} declared", line=lineno)
        if len(tokens) != 3:
            raise ParseError("edge lines must be '<u> <v> <w>'", line=lineno)
        u = _int(tokens[0], lineno, "vertex") - 1
        v = _int(tokens[1], lineno, "vertex") - 1
        w = _weight(tokens[2], lineno, exact)
        edges.append(_add_edge(seen, n, u, v, lineno))
        weights.append(w)
    if len(edges) != m:
        raise ParseError(f"expected {m} edge lines, found {len(edges)}", line=last + 1)
    if ignore_weights:
        return Graph(n, edges)
    return Graph(n, edges, weights)


def parse_edgelist(text: str | bytes) -> Graph:
    declared: int | None = None
    pairs: list[tuple[int, int, int]] = []
    for lineno, tokens in _lines(text):
        if len(tokens) == 1 and declared is None and not pairs:
            declared = _int(tokens[0], lineno, "vertex count")
            continue
        if len(tokens) != 2:
            raise ParseError("edge lines must be '<u> <v>'", line=lineno)
        pairs.append((_int(tokens[0], lineno, "vertex"), _int(tokens[1], lineno, "vertex"), lineno))
    n = declared if declared is not None else max((max(u, v) + 1 for u, v, _ in pairs), default=0)
    seen: set[Edge] = set()
    edges = [_add_edge(seen, n, u, v, lineno) for u, v, lineno in pairs]
    return Graph(n, edges)


def _format_weight(w: Weight) -> str:
    if isinstance(w, Fraction):
        return str(w.numerator) if w.denominator == 1 else str(w)
    if isinstance(w, float):
        return repr(w)
    return str(w)


def emit_mqlib(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u + 1} {v + 1} {_format_weight(w)}" for (u, v), w in g.weight_map.items()]
    return "\n".join(lines) + "\n"


def emit_edgelist(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"
