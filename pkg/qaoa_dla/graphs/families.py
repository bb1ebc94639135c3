"""Deterministic graph families.

Vertex labelling:
  Path(n)             0-1-...-(n-1)
  Cycle(n)            Path(n) plus (0, n-1)
  Complete(n)         all pairs
  Star(k)             centre 0, leaves 1..k
  Spider(n1..nk)      centre 0; arm i occupies the next n_i labels, its first
                      vertex adjacent to the centre
  ExtendedLadder(n,k) u_i -> i+k for -k <= i <= n-1, v_i -> n+k+i
  GridPlus1(w,h)      u_{-1,0} -> 0, u_{i,j} -> 1 + i*(h+1) + j
"""

import re
from dataclasses import dataclass, field
from typing import Literal

from qaoa_dla.errors import ParameterError
from qaoa_dla.graphs.base import Edge, Graph

FamilyName = Literal["Path", "Cycle", "Complete", "Star", "Spider", "ExtendedLadder", "GridPlus1"]

_SPEC_RE = re.compile(r"^\s*([A-Za-z0-9_]+)\s*\(\s*([^)]*)\)\s*$")


@dataclass(frozen=True)
class FamilySpec:
    name: FamilyName
    params: tuple[int, ...] = field(default=())

    def __str__(self) -> str:
        return f"{self.name}({','.join(str(p) for p in self.params)})"


def parse_family_spec(text: str) -> FamilySpec:
    match = _SPEC_RE.match(text or "")
    if not match:
        raise ParameterError(f"unrecognised family spec {text!r}; expected e.g. Path(4) or Spider(1,2,3)")
    name = match.group(1)
    if name not in _BUILDERS:
        raise ParameterError(f"unknown family {name!r}", context={"known": sorted(_BUILDERS)})
    raw = [p.strip() for p in match.group(2).replace("[", "").replace("]", "").split(",") if p.strip()]
    try:
        params = tuple(int(p) for p in raw)
    except ValueError as exc:
        raise ParameterError(f"family parameters must be integers: {text!r}") from exc
    return FamilySpec(name, params)  # type: ignore[arg-type]


def generate_family(spec: FamilySpec | str) -> Graph:
    if isinstance(spec, str):
        spec = parse_family_spec(spec)
    builder = _BUILDERS.get(spec.name)
    if builder is None:
        raise ParameterError(f"unknown family {spec.name!r}")
    return builder(*spec.params)


def _arity(name: str, params: tuple[int, ...], count: int) -> None:
    if len(params) != count:
        raise ParameterError(f"{name} takes {count} parameter(s), got {len(params)}")


def path(*params: int) -> Graph:
    _arity("Path", params, 1)
    (n,) = params
    if n < 1:
        raise ParameterError("Path requires n >= 1", context={"n": n})
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(*params: int) -> Graph:
    _arity("Cycle", params, 1)
    (n,) = params
    if n < 3:
        raise ParameterError("Cycle requires n >= 3", context={"n": n})
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(*params: int) -> Graph:
    _arity("Complete", params, 1)
    (n,) = params
    if n < 1:
        raise ParameterError("Complete requires n >= 1", context={"n": n})
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star(*params: int) -> Graph:
    _arity("Star", params, 1)
    (k,) = params
    if k < 1:
        raise ParameterError("Star requires k >= 1", context={"k": k})
    return Graph(k + 1, [(0, i) for i in range(1, k + 1)])


def spider(*arms: int) -> Graph:
    if not arms:
        raise ParameterError("Spider requires at least one arm")
    if any(a < 1 for a in arms):
        raise ParameterError("Spider arm lengths must be >= 1", context={"arms": list(arms)})
    edges: list[Edge] = []
    nxt = 1
    for length in arms:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(nxt, edges)


def extended_ladder(*params: int) -> Graph:
    _arity("ExtendedLadder", params, 2)
    n, k = params
    if n < 1 or k < 0:
        raise ParameterError("ExtendedLadder requires n >= 1 and k >= 0", context={"n": n, "k": k})

    def u(i: int) -> int:
        return i + k

    def v(i: int) -> int:
        return n + k + i

    edges: list[Edge] = [(u(i), v(i)) for i in range(n)]
    edges += [(u(i), u(i + 1)) for i in range(-k, n - 1)]
    edges += [(v(i), v(i + 1)) for i in range(n - 1)]
    return Graph(2 * n + k, edges)


def grid_plus_one(*params: int) -> Graph:
    _arity("GridPlus1", params, 2)
    w, h = params
    if w < 1 or h < 1:
        raise ParameterError("GridPlus1 requires w >= 1 and h >= 1", context={"w": w, "h": h})

    def u(i: int, j: int) -> int:
        return 1 + i * (h + 1) + j

    edges: list[Edge] = [(0, u(0, 0))]
    edges += [(u(i, j), u(i + 1, j)) for i in range(w) for j in range(h + 1)]
    edges += [(u(i, j), u(i, j + 1)) for i in range(w + 1) for j in range(h)]
    return Graph(1 + (w + 1) * (h + 1), edges)


_BUILDERS = {
    "Path": path,
    "Cycle": cycle,
    "Complete": complete,
    "Star": star,
    "Spider": spider,
    "ExtendedLadder": extended_ladder,
    "GridPlus1": grid_plus_one,
}
