"""Pauli strings in binary symplectic form and real linear combinations of them.

A term (x, z) stands for the Hermitian string i^{|x & z|} X^x Z^z; bit u of a
mask is qubit u. A PauliSum with real coefficients represents i times an
element of the Lie algebra, and `bracket` is the induced real bracket
⟦A, B⟧ = i[A, B], so that i⟦A, B⟧ = [iA, iB]. With this sign ⟦X_0, Z_0⟧ = 2 Y_0.
"""

from collections.abc import Iterable, Iterator, Mapping
from fractions import Fraction
from typing import NamedTuple, Union

from qaoa_dla.config import get_settings
from qaoa_dla.errors import DimensionMismatchError, ParameterError
from qaoa_dla.graphs.base import Edge, Graph, Weight

Coeff = Union[int, Fraction, float]

FLOAT_TOLERANCE = get_settings().float_tolerance
_LETTERS = {(0, 0): "I", (1, 0): "X", (1, 1): "Y", (0, 1): "Z"}


class PauliTerm(NamedTuple):
    xmask: int
    zmask: int
    n: int

    @classmethod
    def from_label(cls, label: str) -> "PauliTerm":
        x = z = 0
        for u, ch in enumerate(label.strip().upper()):
            if ch in "XY":
                x |= 1 << u
            if ch in "ZY":
                z |= 1 << u
            if ch not in "IXYZ":
                raise ParameterError(f"invalid Pauli letter {ch!r} in {label!r}")
        return cls(x, z, len(label.strip()))

    @property
    def label(self) -> str:
        return "".join(_LETTERS[(self.xmask >> u & 1, self.zmask >> u & 1)] for u in range(self.n))

    @property
    def weight(self) -> int:
        return (self.xmask | self.zmask).bit_count()

    def commutes_with(self, other: "PauliTerm") -> bool:
        return ((self.xmask & other.zmask).bit_count() + (self.zmask & other.xmask).bit_count()) % 2 == 0


def is_zero(c: Coeff) -> bool:
    if isinstance(c, float):
        return abs(c) <= FLOAT_TOLERANCE
    return c == 0


class PauliSum:
    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[PauliTerm, Coeff] | None = None) -> None:
        self.n = n
        self.terms: dict[PauliTerm, Coeff] = {}
        for term, coeff in (terms or {}).items():
            if term.n != n:
                raise DimensionMismatchError(n, term.n)
            if not is_zero(coeff):
                self.terms[term] = coeff

    @classmethod
    def zero(cls, n: int) -> "PauliSum":
        return cls(n)

    @classmethod
    def single(cls, term: PauliTerm, coeff: Coeff = 1) -> "PauliSum":
        return cls(term.n, {term: coeff})

    @classmethod
    def from_labels(cls, pairs: Iterable[tuple[Coeff, str]]) -> "PauliSum":
        items = [(PauliTerm.from_label(label), c) for c, label in pairs]
        if not items:
            raise ParameterError("from_labels needs at least one term")
        out = cls(items[0][0].n)
        for term, c in items:
            out._accumulate(term, c)
        return out

    def _accumulate(self, term: PauliTerm, coeff: Coeff) -> None:
        value = self.terms.get(term, 0) + coeff
        if is_zero(value):
            self.terms.pop(term, None)
        else:
            self.terms[term] = value

    def _check(self, other: "PauliSum") -> None:
        if self.n != other.n:
            raise DimensionMismatchError(self.n, other.n)

    def copy(self) -> "PauliSum":
        out = PauliSum(self.n)
        out.terms = dict(self.terms)
        return out

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[PauliTerm, Coeff]]:
        return iter(sorted(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "PauliSum") -> "PauliSum":
        self._check(other)
        out = self.copy()
        for term, c in other.terms.items():
            out._accumulate(term, c)
        return out

    def __sub__(self, other: "PauliSum") -> "PauliSum":
        return self + (-other)

    def __neg__(self) -> "PauliSum":
        out = PauliSum(self.n)
        out.terms = {t: -c for t, c in self.terms.items()}
        return out

    def scaled(self, factor: Coeff) -> "PauliSum":
        if is_zero(factor):
            return PauliSum(self.n)
        return PauliSum(self.n, {t: c * factor for t, c in self.terms.items()})

    def __mul__(self, factor: Coeff) -> "PauliSum":
        return self.scaled(factor)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PauliSum):
            return NotImplemented
        return self.n == other.n and (self - other).is_zero()

    __hash__ = None  # type: ignore[assignment]

    def approx_equal(self, other: "PauliSum", tol: float = 1e-9) -> bool:
        self._check(other)
        diff = self - other
        return all(abs(float(c)) <= tol for c in diff.terms.values())

    def is_exact(self) -> bool:
        return not any(isinstance(c, float) for c in self.terms.values())

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{t.label}" for t, c in self)

    def __repr__(self) -> str:
        return f"PauliSum(n={self.n}, {self.to_text()})"


def bracket(a: PauliSum, b: PauliSum) -> PauliSum:
    """⟦a, b⟧ = i[a, b], computed termwise with the symplectic commutation rule."""
    if a.n != b.n:
        raise DimensionMismatchError(a.n, b.n)
    n = a.n
    out: dict[PauliTerm, Coeff] = {}
    for (x1, z1, _), c1 in a.terms.items():
        a1 = (x1 & z1).bit_count()
        for (x2, z2, _), c2 in b.terms.items():
            if ((x1 & z2).bit_count() + (z1 & x2).bit_count()) & 1 == 0:
                continue
            x, z = x1 ^ x2, z1 ^ z2
            k = (a1 + (x2 & z2).bit_count() + 2 * (z1 & x2).bit_count() - (x & z).bit_count()) & 3
            key = PauliTerm(x, z, n)
            out[key] = out.get(key, 0) + (-2 if k == 1 else 2) * c1 * c2
    return PauliSum(n, out)


def x_on(n: int, vertices: Iterable[int]) -> PauliSum:
    """X_S = sum of X_u over u in S."""
    return PauliSum(n, {PauliTerm(1 << u, 0, n): 1 for u in set(vertices)})


def zz_on(n: int, edges: Iterable[Edge], weights: Mapping[Edge, Weight] | None = None) -> PauliSum:
    """ZZ_E' = sum of r_uv Z_u Z_v over the given edges."""
    out = PauliSum(n)
    for u, v in edges:
        key = (min(u, v), max(u, v))
        out._accumulate(PauliTerm(0, (1 << u) | (1 << v), n), 1 if weights is None else weights[key])
    return out


def hamiltonians_for_graph(g: Graph) -> tuple[PauliSum, PauliSum]:
    """(H_m, H_p) on g.n qubits; unweighted graphs get unit coefficients."""
    h_m = x_on(g.n, range(g.n))
    h_p = zz_on(g.n, g.edges, g.weight_map if g.weighted else None)
    return h_m, h_p


def x_support(p: PauliSum) -> set[int] | None:
    """Vertex set S when p == X_S exactly, else None."""
    support: set[int] = set()
    for term, c in p.terms.items():
        if term.zmask or term.xmask.bit_count() != 1 or c != 1:
            return None
        support.add(term.xmask.bit_length() - 1)
    return support
