"""The operator f(a) = -1/4 ⟦h, ⟦h, a⟧⟧ and its spectrum on XZ even stars.

For a vertex u with neighbours v_1..v_d the even star space is spanned by
X_u Z_{v_S} over even-sized S; f with h = H_p preserves it.
"""

import itertools
from collections.abc import Iterable, Sequence
from fractions import Fraction

import numpy as np

from qaoa_dla.errors import DimensionMismatchError, ParameterError, PreconditionError, UnsupportedSizeError
from qaoa_dla.graphs.base import Graph, Weight
from qaoa_dla.pauli.closure import divide
from qaoa_dla.pauli.terms import Coeff, PauliSum, PauliTerm, bracket

MAX_STAR_DEGREE = 20
_QUARTER = Fraction(-1, 4)


def f_apply(hp: PauliSum, a: PauliSum) -> PauliSum:
    if hp.n != a.n:
        raise DimensionMismatchError(hp.n, a.n)
    return bracket(hp, bracket(hp, a)).scaled(_QUARTER)


def _star_weights(g: Graph, u: int) -> list[Weight]:
    neighbors = sorted(g.adjacency[u])
    if not neighbors:
        raise PreconditionError(f"vertex {u} is isolated", context={"vertex": u})
    if len(neighbors) > MAX_STAR_DEGREE:
        raise UnsupportedSizeError(
            f"star spectrum is limited to degree {MAX_STAR_DEGREE}",
            context={"vertex": u, "degree": len(neighbors)},
        )
    return [g.weight(u, v) for v in neighbors]


def xz_star_spectrum(g: Graph, u: int) -> list[Weight]:
    """Eigenvalues of f on the even star space of u, with multiplicity, ascending."""
    weights = _star_weights(g, u)
    *signed, last = weights
    values = []
    for signs in itertools.product((1, -1), repeat=len(signed)):
        total = last + sum(s * r for s, r in zip(signs, signed))
        values.append(total * total)
    return sorted(values)


def star_space_matrix(g: Graph, u: int) -> np.ndarray:
    """Matrix of f restricted to the even star space of u, built by expanding f termwise."""
    weights = _star_weights(g, u)
    d = len(weights)
    n = d + 1
    hp = PauliSum(n, {PauliTerm(0, 1 | (1 << (i + 1)), n): r for i, r in enumerate(weights)})
    masks = [m for m in range(1 << d) if m.bit_count() % 2 == 0]
    index = {PauliTerm(1, m << 1, n): i for i, m in enumerate(masks)}
    matrix = np.zeros((len(masks), len(masks)), dtype=float)
    for term, col in index.items():
        image = f_apply(hp, PauliSum.single(term))
        for out, c in image.terms.items():
            matrix[index[out], col] = float(c)
    return matrix


def numerical_star_spectrum(g: Graph, u: int) -> list[float]:
    return sorted(float(x) for x in np.linalg.eigvals(star_space_matrix(g, u)).real)


def vertex_spectrum(degree: int) -> set[int]:
    """Distinct unweighted eigenvalues carried by X_u for a vertex of this degree."""
    return {(degree - 2 * k) ** 2 for k in range(degree + 1)}


def lagrange_polynomial(keep: Iterable[Coeff], spectrum: Sequence[Coeff]) -> list[Coeff]:
    """Coefficients (lowest degree first) of the polynomial that is 1 on `keep` and 0 elsewhere."""
    values = sorted(set(spectrum))
    kept = set(keep)
    if not kept <= set(values):
        raise ParameterError("kept eigenvalues must belong to the spectrum", context={"keep": sorted(kept)})
    total: list[Coeff] = [0] * len(values)
    for mu in kept:
        poly: list[Coeff] = [1]
        for lam in values:
            if lam == mu:
                continue
            denom = mu - lam
            shifted = [0] + poly
            for k, c in enumerate(poly):
                shifted[k] -= lam * c
            poly = [divide(c, denom) for c in shifted]
        for k, c in enumerate(poly):
            total[k] += c
    return total


def lagrange_project(h: PauliSum, a: PauliSum, keep: Iterable[Coeff], spectrum: Sequence[Coeff]) -> PauliSum:
    """Apply p(f_h) to a where p interpolates 1 on `keep` and 0 on the rest of `spectrum`."""
    coeffs = lagrange_polynomial(keep, spectrum)
    out = PauliSum(a.n)
    power = a
    for k, c in enumerate(coeffs):
        if k:
            power = f_apply(h, power)
        out = out + power.scaled(c)
    return out
