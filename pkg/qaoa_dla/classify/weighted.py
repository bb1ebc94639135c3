import itertools
from fractions import Fraction

from qaoa_dla.config import get_settings
from qaoa_dla.errors import UnsupportedSizeError
from qaoa_dla.graphs.base import Graph, Weight

MAX_WEIGHTED_DEGREE = 20


def signed_sums(weights: list[Weight]) -> set[Weight]:
    """All values of sum(s_w * r_w) over sign choices; {0} for an empty neighbourhood."""
    values: set[Weight] = set()
    for signs in itertools.product((1, -1), repeat=len(weights)):
        values.add(sum((s * r for s, r in zip(signs, weights)), 0))
    return values


def _close(a: Weight, b: Weight, tol: float) -> bool:
    if isinstance(a, (int, Fraction)) and isinstance(b, (int, Fraction)):
        return a == b
    return abs(a - b) <= tol


def weighted_freeness_check(g: Graph, tol: float | None = None) -> bool:
    """All weights nonzero and no two vertices share a signed neighbourhood sum."""
    tol = get_settings().weight_tolerance if tol is None else tol
    weight_map = g.weight_map
    if any(w == 0 for w in weight_map.values()):
        return False
    worst = max(g.degrees(), default=0)
    if worst > MAX_WEIGHTED_DEGREE:
        raise UnsupportedSizeError(
            f"signed sums are enumerated up to degree {MAX_WEIGHTED_DEGREE}",
            context={"max_degree": worst},
        )
    tagged: list[tuple[Weight, int]] = []
    for u in range(g.n):
        weights = [g.weight(u, v) for v in sorted(g.adjacency[u])]
        tagged.extend((value, u) for value in signed_sums(weights))
    tagged.sort(key=lambda item: (float(item[0]), item[1]))
    for (a, u), (b, v) in zip(tagged, tagged[1:]):
        if u != v and _close(a, b, tol):
            return False
    return True
