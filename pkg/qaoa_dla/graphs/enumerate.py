import itertools
import logging

from networkx.algorithms.isomorphism import GraphMatcher

from qaoa_dla.errors import ParameterError, UnsupportedSizeError
from qaoa_dla.graphs.base import Graph

logger = logging.getLogger(__name__)

MAX_ENUMERATION_N = 7
MAX_AUTOMORPHISM_N = 10


def refine_colors(g: Graph) -> list[int]:
    """Stable colour refinement seeded by degree; colour names are canonical."""
    colors = g.degrees()
    classes = len(set(colors))
    while True:
        signatures = [
            (colors[v], tuple(sorted(colors[w] for w in g.adjacency[v])))
            for v in range(g.n)
        ]
        palette = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        refined = [palette[sig] for sig in signatures]
        if len(palette) == classes:
            return refined
        colors, classes = refined, len(palette)


def canonical_order(g: Graph) -> tuple[int, list[int]]:
    """Minimum upper-triangle adjacency code over orders that respect colour cells."""
    colors = refine_colors(g)
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    ordered_cells = [cells[c] for c in sorted(cells)]
    adj = g.adjacency
    best_code: int | None = None
    best_order: list[int] = list(range(g.n))
    for parts in itertools.product(*(itertools.permutations(cell) for cell in ordered_cells)):
        order = [v for part in parts for v in part]
        code = 0
        for i in range(g.n):
            row = adj[order[i]]
            for j in range(i + 1, g.n):
                code = (code << 1) | (order[j] in row)
        if best_code is None or code < best_code:
            best_code, best_order = code, order
    return best_code or 0, best_order


def canonical_form(g: Graph) -> tuple[int, int]:
    code, _ = canonical_order(g)
    return g.n, code


def canonical_graph(g: Graph) -> Graph:
    _, order = canonical_order(g)
    position = {v: i for i, v in enumerate(order)}
    return Graph(g.n, [(position[u], position[v]) for u, v in g.edges])


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    return canonical_form(g) == canonical_form(h)


def enumerate_connected(n: int) -> list[Graph]:
    """One canonical representative per isomorphism class of connected graphs on n vertices."""
    if n < 1:
        raise ParameterError(f"enumeration requires n >= 1, got {n}")
    if n > MAX_ENUMERATION_N:
        raise UnsupportedSizeError(
            f"enumeration is limited to n <= {MAX_ENUMERATION_N}",
            context={"n": n, "limit": MAX_ENUMERATION_N},
        )
    level: dict[tuple[int, int], Graph] = {canonical_form(Graph(1)): Graph(1)}
    for k in range(2, n + 1):
        grown: dict[tuple[int, int], Graph] = {}
        new_vertex = k - 1
        for base in level.values():
            for mask in range(1, 1 << (k - 1)):
                extra = [(u, new_vertex) for u in range(k - 1) if mask >> u & 1]
                candidate = Graph(k, list(base.edges) + extra)
                key = canonical_form(candidate)
                if key not in grown:
                    grown[key] = canonical_graph(candidate)
        level = grown
        logger.info("enumerated connected graphs", extra={"stage": "enumerate", "n": k, "count": len(level)})
    return sorted(level.values(), key=lambda g: (g.m, canonical_form(g)[1]))


def automorphism_group(g: Graph) -> list[tuple[int, ...]]:
    if g.n > MAX_AUTOMORPHISM_N:
        raise UnsupportedSizeError(
            f"automorphism search is limited to n <= {MAX_AUTOMORPHISM_N}",
            context={"n": g.n, "limit": MAX_AUTOMORPHISM_N},
        )
    nxg = g.to_networkx()
    edge_match = (lambda a, b: a["weight"] == b["weight"]) if g.weighted else None
    matcher = GraphMatcher(nxg, nxg, edge_match=edge_match)
    perms = {tuple(mapping[v] for v in range(g.n)) for mapping in matcher.isomorphisms_iter()}
    return sorted(perms)
