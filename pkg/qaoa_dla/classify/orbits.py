from collections.abc import Iterable
from dataclasses import dataclass

from qaoa_dla.errors import UnsupportedSizeError
from qaoa_dla.graphs.base import Graph
from qaoa_dla.graphs.enumerate import automorphism_group
from qaoa_dla.pauli.closure import lie_closure, multiangle_generators, qaoa_generators

MAX_ORBIT_N = 7


def _permute_mask(mask: int, perm: tuple[int, ...]) -> int:
    out = 0
    for u, image in enumerate(perm):
        if mask >> u & 1:
            out |= 1 << image
    return out


def orbit_fixed_dimension(g: Graph) -> int:
    """Number of Aut(G)-orbits of the multi-angle basis strings."""
    if g.n > MAX_ORBIT_N:
        raise UnsupportedSizeError(
            f"orbit counting is limited to n <= {MAX_ORBIT_N}",
            context={"n": g.n, "limit": MAX_ORBIT_N},
        )
    shape = g.unweighted()
    basis = lie_closure(multiangle_generators(shape), max_qubits=MAX_ORBIT_N)
    perms = automorphism_group(shape)
    representatives: set[tuple[int, int]] = set()
    for term in basis.pivots:
        images = [(_permute_mask(term.xmask, p), _permute_mask(term.zmask, p)) for p in perms]
        representatives.add(min(images))
    return len(representatives)


@dataclass(frozen=True)
class OrbitRow:
    n: int
    m: int
    dimension: int
    orbits: int

    @property
    def ratio(self) -> float:
        return self.orbits / self.dimension


@dataclass(frozen=True)
class OrbitStudy:
    rows: list[OrbitRow]

    @property
    def max_ratio(self) -> float:
        return max((row.ratio for row in self.rows), default=0.0)

    def lower_inequality_holds(self) -> bool:
        return all(row.dimension <= row.orbits for row in self.rows)


def orbit_ratio_report(graphs: Iterable[Graph]) -> OrbitStudy:
    """QAOA closure dimension against the orbit count for each graph."""
    rows = []
    for g in graphs:
        dimension = lie_closure(qaoa_generators(g.unweighted()), max_qubits=MAX_ORBIT_N).dimension
        rows.append(OrbitRow(g.n, g.m, dimension, orbit_fixed_dimension(g)))
    return OrbitStudy(rows)
