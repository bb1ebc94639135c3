import logging
import time
from collections import deque
from collections.abc import Iterable, Sequence
from fractions import Fraction

from qaoa_dla.config import get_settings
from qaoa_dla.errors import ClosureOverflow, DimensionMismatchError, ParameterError, UnsupportedSizeError
from qaoa_dla.graphs.base import Graph
from qaoa_dla.pauli.terms import Coeff, PauliSum, PauliTerm, bracket, hamiltonians_for_graph, is_zero, x_on, zz_on

logger = logging.getLogger(__name__)


def divide(c: Coeff, s: Coeff) -> Coeff:
    if isinstance(c, float) or isinstance(s, float):
        return c / s
    q = Fraction(c) / Fraction(s)
    return q.numerator if q.denominator == 1 else q


class LieBasis:
    """Fully reduced echelon basis of a real span of Pauli sums.

    Each row has coefficient 1 on its pivot term and no other row has support
    on that term; a column index maps every term to the rows containing it.
    """

    def __init__(self, n: int) -> None:
        self.n = n
        self._rows: list[dict[PauliTerm, Coeff]] = []
        self._pivots: list[PauliTerm] = []
        self._pivot_row: dict[PauliTerm, int] = {}
        self._columns: dict[PauliTerm, set[int]] = {}

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def dimension(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> list[PauliTerm]:
        return list(self._pivots)

    @property
    def rows(self) -> list[PauliSum]:
        out = []
        for row in self._rows:
            p = PauliSum(self.n)
            p.terms = dict(row)
            out.append(p)
        return out

    def _check(self, v: PauliSum) -> None:
        if v.n != self.n:
            raise DimensionMismatchError(self.n, v.n)

    def reduce(self, v: PauliSum) -> dict[PauliTerm, Coeff]:
        self._check(v)
        out = dict(v.terms)
        for t in [t for t in out if t in self._pivot_row]:
            c = out.get(t)
            if c is None:
                continue
            for s, d in self._rows[self._pivot_row[t]].items():
                value = out.get(s, 0) - c * d
                if is_zero(value):
                    out.pop(s, None)
                else:
                    out[s] = value
        return out

    def _axpy(self, i: int, factor: Coeff, src: dict[PauliTerm, Coeff]) -> None:
        row = self._rows[i]
        for t, c in src.items():
            value = row.get(t, 0) + factor * c
            if is_zero(value):
                if t in row:
                    del row[t]
                    self._columns[t].discard(i)
            else:
                if t not in row:
                    self._columns.setdefault(t, set()).add(i)
                row[t] = value

    def insert(self, v: PauliSum) -> PauliSum | None:
        """Add v to the span; returns the reduced, normalised new row or None if dependent."""
        r = self.reduce(v)
        if not r:
            return None
        pivot = min(r)
        scale = r[pivot]
        r = {t: divide(c, scale) for t, c in r.items()}
        r[pivot] = 1
        for i in list(self._columns.get(pivot, ())):
            self._axpy(i, -self._rows[i][pivot], r)
        index = len(self._rows)
        self._rows.append(dict(r))
        self._pivots.append(pivot)
        self._pivot_row[pivot] = index
        for t in r:
            self._columns.setdefault(t, set()).add(index)
        out = PauliSum(self.n)
        out.terms = r
        return out

    def contains(self, v: PauliSum) -> bool:
        return not self.reduce(v)

    def to_text(self) -> str:
        return "\n".join(row.to_text() for row in self.rows)


def span_membership(basis: LieBasis, v: PauliSum) -> bool:
    return basis.contains(v)


def lie_closure(
    generators: Sequence[PauliSum],
    maxdim: int | None = None,
    *,
    max_qubits: int | None = None,
) -> LieBasis:
    """Smallest bracket-closed span containing the generators.

    Every inserted row is bracketed with each generator only; the right-nested
    commutators of generators already span the algebra.
    """
    if not generators:
        raise ParameterError("lie_closure needs at least one generator")
    settings = get_settings()
    maxdim = settings.closure_max_dim if maxdim is None else maxdim
    max_qubits = settings.max_closure_qubits if max_qubits is None else max_qubits
    n = generators[0].n
    for g in generators:
        if g.n != n:
            raise DimensionMismatchError(n, g.n)
    if n > max_qubits:
        raise UnsupportedSizeError(
            f"closure is limited to {max_qubits} qubits",
            context={"n": n, "limit": max_qubits},
        )

    started = time.perf_counter()
    basis = LieBasis(n)
    gens = [g for g in generators if not g.is_zero()]
    queue: deque[PauliSum] = deque()
    for g in gens:
        row = basis.insert(g)
        if row is not None:
            queue.append(row)
    if len(basis) > maxdim:
        raise ClosureOverflow(len(basis), maxdim)
    while queue:
        a = queue.popleft()
        for g in gens:
            row = basis.insert(bracket(g, a))
            if row is None:
                continue
            if len(basis) > maxdim:
                raise ClosureOverflow(len(basis), maxdim)
            queue.append(row)
    logger.info(
        "lie closure complete",
        extra={
            "stage": "closure",
            "n": n,
            "dimension": len(basis),
            "elapsed_ms": round((time.perf_counter() - started) * 1000, 3),
        },
    )
    return basis


def qaoa_generators(g: Graph) -> list[PauliSum]:
    h_m, h_p = hamiltonians_for_graph(g)
    return [h_m, h_p]


def multiangle_generators(g: Graph) -> list[PauliSum]:
    """One X_u per vertex and one Z_uZ_v per edge."""
    return [x_on(g.n, [u]) for u in range(g.n)] + [zz_on(g.n, [e]) for e in g.edges]
