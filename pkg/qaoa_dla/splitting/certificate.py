"""Constructive freeness certificates for asymmetric subdivisions of odd graphs.

Each entry states X_S or ZZ_F lies in i·g and names the rule and earlier
entries it follows from:

  Axiom           X_V (entry 0) and ZZ_E (entry 1)
  EdgeSplit       [X_S, X_T, ZZ_F] -> ZZ of F ∩ E(S, T), S and T disjoint
  InternalSplit   [X_S, ZZ_F, ZZ_K?] -> odd or even part of S by degree in F - K,
                  where F - K has no edge leaving S
  ExternalSplit   [X_S, ZZ_F] -> odd or even part of S by degree in F,
                  where every edge of F has exactly one end in S
  PathPeel        [X_A, X_B, ...] -> X of the disjoint union, or X_A minus the rest
  CommutatorWalk  [ZZ_ab, X_a, X_V] -> X_b, or [X_b, ZZ_ab, ZZ_E] -> ZZ_bc
                  for b of degree 2 with neighbours a and c

The text form holds one entry per line:
``<index> <rule> <premises...> X <vertices>`` or ``... ZZ <u-v edges>``.
"""

import logging
from collections.abc import Iterable
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

from qaoa_dla.errors import CertificateError, NotASubdivisionError, ParseError
from qaoa_dla.graphs.base import Edge, Graph, canonical_edge
from qaoa_dla.pauli.spectrum import f_apply, lagrange_project, vertex_spectrum
from qaoa_dla.pauli.terms import PauliSum, bracket, x_on, zz_on

logger = logging.getLogger(__name__)

Rule = Literal["Axiom", "InternalSplit", "ExternalSplit", "EdgeSplit", "PathPeel", "CommutatorWalk"]
Kind = Literal["X", "ZZ"]
RULES: tuple[Rule, ...] = ("Axiom", "InternalSplit", "ExternalSplit", "EdgeSplit", "PathPeel", "CommutatorWalk")
_SIXTEENTH = Fraction(1, 16)


@dataclass(frozen=True)
class CertificateEntry:
    index: int
    rule: Rule
    premises: tuple[int, ...]
    kind: Kind
    vertices: frozenset[int] = frozenset()
    edges: frozenset[Edge] = frozenset()

    @property
    def key(self) -> tuple[Kind, frozenset]:
        return (self.kind, self.vertices if self.kind == "X" else self.edges)

    def to_line(self) -> str:
        parts = [str(self.index), self.rule, *(str(p) for p in self.premises), self.kind]
        if self.kind == "X":
            parts += [str(u) for u in sorted(self.vertices)]
        else:
            parts += [f"{u}-{v}" for u, v in sorted(self.edges)]
        return " ".join(parts)


@dataclass
class Certificate:
    n: int
    entries: list[CertificateEntry] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.entries)

    def x_singletons(self) -> set[int]:
        return {next(iter(e.vertices)) for e in self.entries if e.kind == "X" and len(e.vertices) == 1}

    def zz_singletons(self) -> set[Edge]:
        return {next(iter(e.edges)) for e in self.entries if e.kind == "ZZ" and len(e.edges) == 1}

    def covers(self, g: Graph) -> bool:
        return self.x_singletons() == set(range(g.n)) and self.zz_singletons() == set(g.edges)

    def to_text(self) -> str:
        return "\n".join(e.to_line() for e in self.entries) + "\n"

    @classmethod
    def from_text(cls, text: str, n: int) -> "Certificate":
        entries: list[CertificateEntry] = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            tokens = line.split()
            try:
                index, rule = int(tokens[0]), tokens[1]
                marker = next(i for i, t in enumerate(tokens) if t in ("X", "ZZ"))
            except (ValueError, IndexError, StopIteration):
                raise ParseError("malformed certificate entry", line=lineno) from None
            if rule not in RULES:
                raise ParseError(f"unknown rule {rule!r}", line=lineno)
            try:
                premises = tuple(int(t) for t in tokens[2:marker])
                kind = tokens[marker]
                members = tokens[marker + 1 :]
                if kind == "X":
                    entry = CertificateEntry(index, rule, premises, "X", vertices=frozenset(int(t) for t in members))
                else:
                    edges = frozenset(canonical_edge(*(int(x) for x in t.split("-"))) for t in members)
                    entry = CertificateEntry(index, rule, premises, "ZZ", edges=edges)
            except (ValueError, TypeError):
                raise ParseError("malformed premises or members", line=lineno) from None
            entries.append(entry)
        return cls(n, entries)


# Structural detection


@dataclass(frozen=True)
class _Subdivision:
    base: list[int]
    base_edges: list[Edge]
    paths: dict[Edge, tuple[int, ...]]


def _detect(g: Graph) -> _Subdivision:
    if g.weighted:
        raise NotASubdivisionError("unweighted", "certificates are defined for unweighted graphs")
    if not g.is_connected():
        raise NotASubdivisionError("connected", "graph is not connected")
    v_o = [u for u in range(g.n) if g.degree(u) % 2 == 1]
    odd = set(v_o)
    for u in range(g.n):
        if u not in odd and g.degree(u) != 2:
            raise NotASubdivisionError("even_degree_two", f"even-degree vertex {u} has degree {g.degree(u)}")
    if len(v_o) < 3:
        raise NotASubdivisionError("base_size", f"base graph has {len(v_o)} vertices; at least 3 required")

    paths: dict[Edge, tuple[int, ...]] = {}
    seen: set[int] = set()
    for u in range(g.n):
        if u in odd or u in seen:
            continue
        # walk to one end of the component, then collect it in order
        prev, cur = None, u
        while True:
            nxt = [v for v in g.adjacency[cur] if v not in odd and v != prev]
            if not nxt or nxt[0] == u:
                break
            prev, cur = cur, nxt[0]
        if nxt and nxt[0] == u:
            raise NotASubdivisionError("paths", f"inserted vertices around {u} form a cycle")
        order = [cur]
        prev = None
        while True:
            nxt = [v for v in g.adjacency[order[-1]] if v not in odd and v != prev]
            if not nxt:
                break
            prev = order[-1]
            order.append(nxt[0])
        seen.update(order)
        first = [v for v in g.adjacency[order[0]] if v in odd]
        last = [v for v in g.adjacency[order[-1]] if v in odd]
        if len(order) == 1:
            ends = sorted(first)
            if len(ends) != 2:
                raise NotASubdivisionError("paths", f"inserted vertex {u} is not between two base vertices")
            x, y = ends
        else:
            x, y = first[0], last[0]
        if x == y:
            raise NotASubdivisionError("base_simple", f"inserted path {order} returns to base vertex {x}")
        edge = canonical_edge(x, y)
        if edge in paths:
            raise NotASubdivisionError("base_simple", f"two inserted paths join {edge}")
        paths[edge] = tuple(order) if x < y else tuple(reversed(order))

    direct = [e for e in g.edges if e[0] in odd and e[1] in odd]
    for e in direct:
        if e in paths:
            raise NotASubdivisionError("base_simple", f"base edge {e} appears twice")
        paths[e] = ()
    if len(direct) > 1:
        raise NotASubdivisionError("asymmetric", f"{len(direct)} base edges are not subdivided; at most one allowed")
    sizes: dict[int, Edge] = {}
    for edge, path in sorted(paths.items()):
        if not path:
            continue
        if len(path) in sizes:
            raise NotASubdivisionError(
                "asymmetric",
                f"inserted paths on {sizes[len(path)]} and {edge} both have {len(path)} vertices",
            )
        sizes[len(path)] = edge
    return _Subdivision(v_o, sorted(paths), paths)


# Construction


class _Builder:
    def __init__(self, g: Graph) -> None:
        self.g = g
        self.all = frozenset(range(g.n))
        self.entries: list[CertificateEntry] = []
        self.index: dict[tuple[Kind, frozenset], int] = {}
        self.add("Axiom", (), "X", self.all)
        self.add("Axiom", (), "ZZ", frozenset(g.edges))

    def add(self, rule: Rule, premises: Iterable[int], kind: Kind, members: Iterable) -> int | None:
        members = frozenset(members)
        if not members:
            return None
        key = (kind, members)
        if key in self.index:
            return self.index[key]
        i = len(self.entries)
        if kind == "X":
            entry = CertificateEntry(i, rule, tuple(premises), "X", vertices=members)
        else:
            entry = CertificateEntry(i, rule, tuple(premises), "ZZ", edges=members)
        self.entries.append(entry)
        self.index[key] = i
        return i

    def x(self, vertices: Iterable[int]) -> int:
        return self.index[("X", frozenset(vertices))]

    def has_x(self, vertices: Iterable[int]) -> bool:
        return ("X", frozenset(vertices)) in self.index

    def difference(self, whole: frozenset[int], parts: list[frozenset[int]]) -> int | None:
        target = whole.difference(*parts)
        if self.has_x(target):
            return self.x(target)
        return self.add("PathPeel", [self.x(whole)] + [self.x(p) for p in parts], "X", target)

    def union(self, parts: list[frozenset[int]]) -> int:
        target = frozenset().union(*parts)
        if self.has_x(target):
            return self.x(target)
        return self.add("PathPeel", [self.x(p) for p in parts], "X", target)

    def edge_split(self, s: frozenset[int], t: frozenset[int]) -> int | None:
        edges = [e for e in self.g.edges if (e[0] in s and e[1] in t) or (e[1] in s and e[0] in t)]
        return self.add("EdgeSplit", [self.x(s), self.x(t), 1], "ZZ", edges)

    def internal(self, s: frozenset[int]) -> tuple[frozenset[int], frozenset[int]]:
        premises = [self.x(s), 1]
        if s != self.all:
            rest = self.all - s
            self.difference(self.all, [s])
            crossing = self.edge_split(s, rest)
            if crossing is not None:
                premises.append(crossing)
        odd = frozenset(u for u in s if len(self.g.adjacency[u] & s) % 2)
        even = s - odd
        self.add("InternalSplit", premises, "X", odd)
        self.add("InternalSplit", premises, "X", even)
        return odd, even

    def external(self, s: frozenset[int], t: frozenset[int]) -> tuple[frozenset[int], frozenset[int]]:
        crossing = self.edge_split(s, t)
        odd = frozenset(u for u in s if len(self.g.adjacency[u] & t) % 2)
        even = s - odd
        if crossing is not None:
            self.add("ExternalSplit", [self.x(s), crossing], "X", odd)
            self.add("ExternalSplit", [self.x(s), crossing], "X", even)
        return odd, even


def _peel(b: _Builder, segments: dict[Edge, tuple[int, ...]], middles: frozenset[int]) -> dict[Edge, frozenset[int]]:
    """Given X of the union of path segments, derive X of each segment minus the odd-path middles.

    Segments longer than one vertex have pairwise distinct sizes; one-vertex
    segments are grouped with the middles and yield an empty set here.
    """
    union = frozenset().union(*(frozenset(s) for s in segments.values()))
    result: dict[Edge, frozenset[int]] = {key: frozenset(s) - middles for key, s in segments.items()}
    nontrivial = {key: s for key, s in segments.items() if len(s) >= 2}
    if not nontrivial:
        return result
    ends, _ = b.internal(union)
    inner = {key: s[1:-1] if len(s) >= 2 else s for key, s in segments.items()}
    inner = {key: s for key, s in inner.items() if s}
    deeper = _peel(b, inner, middles) if inner else {}

    ends_of = {key: frozenset({s[0], s[-1]}) for key, s in nontrivial.items()}
    for key, s in nontrivial.items():
        if len(s) >= 4:
            odd, _ = b.external(ends, deeper[key])
            if odd != ends_of[key]:
                raise CertificateError(f"could not isolate the ends of the path on {key}")
    long_ends = [ends_of[key] for key, s in nontrivial.items() if len(s) >= 4]
    short = sorted((len(s), key) for key, s in nontrivial.items() if len(s) < 4)
    if short:
        b.difference(ends, long_ends)
        if len(short) == 2:
            b.external(ends.difference(*long_ends), middles)

    for key, s in nontrivial.items():
        inner_part = deeper.get(key, frozenset())
        if inner_part:
            b.union([ends_of[key], inner_part])
    return result


def certify_asym_subdivision(g: Graph) -> Certificate:
    """Derive X_u for every vertex and Z_uZ_v for every edge of an asymmetric subdivision."""
    shape = _detect(g)
    b = _Builder(g)
    v_o = frozenset(shape.base)
    b.internal(b.all)

    segments = {edge: path for edge, path in shape.paths.items() if path}
    middles = frozenset(path[len(path) // 2] for path in segments.values() if len(path) % 2)
    peeled = _peel(b, segments, middles)
    part_of = {edge: (middles if len(path) == 1 else peeled[edge]) for edge, path in segments.items()}

    pairs: dict[Edge, frozenset[int]] = {}
    for edge in shape.base_edges:
        pair = frozenset(edge)
        if shape.paths[edge]:
            odd, _ = b.external(v_o, part_of[edge])
        else:
            odd, _ = b.internal(v_o)
        if odd != pair:
            raise CertificateError(f"could not isolate base edge {edge}")
        pairs[edge] = pair

    incident: dict[int, list[Edge]] = {u: [] for u in shape.base}
    for edge in shape.base_edges:
        incident[edge[0]].append(edge)
        incident[edge[1]].append(edge)
    for u in shape.base:
        if len(incident[u]) < 2:
            continue
        for edge in incident[u]:
            other = next(e for e in incident[u] if e != edge and shape.paths[e])
            b.external(pairs[edge], part_of[other])

    for edge in shape.base_edges:
        u, v = edge
        path = shape.paths[edge]
        if not path:
            b.edge_split(frozenset({u}), frozenset({v}))
            continue
        b.edge_split(frozenset({u}), part_of[edge])
        b.edge_split(frozenset({v}), part_of[edge])
        chain = [u, *path, v]
        for i in range(1, len(chain) - 1):
            a, c, d = chain[i - 1], chain[i], chain[i + 1]
            zz_prev = b.index[("ZZ", frozenset({canonical_edge(a, c)}))]
            b.add("CommutatorWalk", [zz_prev, b.x({a}), 0], "X", {c})
            b.add("CommutatorWalk", [b.x({c}), zz_prev, 1], "ZZ", {canonical_edge(c, d)})

    cert = Certificate(g.n, b.entries)
    if not cert.covers(g):
        raise CertificateError("construction did not reach every vertex and edge")
    logger.info(
        "certificate built",
        extra={"stage": "certify", "n": g.n, "m": g.m, "entries": len(cert)},
    )
    return cert


# Verification


def _edges_between(edges: Iterable[Edge], s: frozenset[int], t: frozenset[int]) -> frozenset[Edge]:
    return frozenset(e for e in edges if (e[0] in s and e[1] in t) or (e[1] in s and e[0] in t))


def _degree_in(edges: Iterable[Edge], u: int) -> int:
    return sum(1 for e in edges if u in e)


def _fail(entry: CertificateEntry, reason: str) -> CertificateError:
    return CertificateError(f"entry {entry.index} ({entry.rule}): {reason}", index=entry.index)


def _check_entry(g: Graph, cert: Certificate, entry: CertificateEntry) -> None:
    entries = cert.entries
    for p in entry.premises:
        if not 0 <= p < entry.index:
            raise _fail(entry, f"premise {p} does not precede the entry")
    prem = [entries[p] for p in entry.premises]
    kinds = tuple(p.kind for p in prem)
    rule = entry.rule
    if rule == "Axiom":
        if entry.key not in {("X", frozenset(range(g.n))), ("ZZ", frozenset(g.edges))}:
            raise _fail(entry, "axioms are X_V and ZZ_E only")
    elif rule == "EdgeSplit":
        if kinds != ("X", "X", "ZZ") or entry.kind != "ZZ":
            raise _fail(entry, "expects premises X_S, X_T, ZZ_F")
        s, t, f = prem[0].vertices, prem[1].vertices, prem[2].edges
        if s & t:
            raise _fail(entry, "split sets overlap")
        if entry.edges != _edges_between(f, s, t):
            raise _fail(entry, "edge set is not F ∩ E(S, T)")
    elif rule in ("InternalSplit", "ExternalSplit"):
        if entry.kind != "X" or len(kinds) < 2 or kinds[0] != "X" or any(k != "ZZ" for k in kinds[1:]):
            raise _fail(entry, "expects premises X_S followed by ZZ sets")
        s = prem[0].vertices
        h = _split_hamiltonian_edges(entry, prem)
        if rule == "InternalSplit" and any((e[0] in s) != (e[1] in s) for e in h):
            raise _fail(entry, "Hamiltonian has an edge leaving the split set")
        if rule == "ExternalSplit" and any((e[0] in s) == (e[1] in s) for e in h):
            raise _fail(entry, "Hamiltonian has an edge not leaving the split set")
        odd = frozenset(u for u in s if _degree_in(h, u) % 2)
        if entry.vertices not in (odd, s - odd):
            raise _fail(entry, "result is neither parity class of the split set")
    elif rule == "PathPeel":
        if entry.kind != "X" or any(k != "X" for k in kinds) or len(prem) < 2:
            raise _fail(entry, "expects at least two X premises")
        _peel_mode(entry, prem)
    elif rule == "CommutatorWalk":
        if entry.kind == "X":
            if kinds != ("ZZ", "X", "X") or prem[2].index != 0 or len(prem[0].edges) != 1 or len(prem[1].vertices) != 1:
                raise _fail(entry, "expects premises Z_aZ_b, X_a, X_V")
            (a,) = prem[1].vertices
            (e,) = prem[0].edges
            if a not in e or entry.vertices != frozenset(e) - {a}:
                raise _fail(entry, "walk step does not follow the edge")
        else:
            if kinds != ("X", "ZZ", "ZZ") or prem[2].edges != frozenset(g.edges):
                raise _fail(entry, "expects premises X_b, Z_aZ_b, ZZ_E")
            if len(prem[0].vertices) != 1 or len(prem[1].edges) != 1 or len(entry.edges) != 1:
                raise _fail(entry, "walk steps act on single vertices and edges")
            (b,) = prem[0].vertices
            (e,) = prem[1].edges
            (out,) = entry.edges
            if b not in e or b not in out or g.degree(b) != 2 or out == e or not g.has_edge(*out):
                raise _fail(entry, "walk step needs a degree-2 vertex between the two edges")
    else:
        raise _fail(entry, f"unknown rule {rule!r}")


def _split_hamiltonian_edges(entry: CertificateEntry, prem: list[CertificateEntry]) -> frozenset[Edge]:
    f = prem[1].edges
    removed = frozenset().union(*(p.edges for p in prem[2:]))
    if not removed <= f:
        raise _fail(entry, "subtracted edges are not part of the Hamiltonian")
    return f - removed


def _peel_mode(entry: CertificateEntry, prem: list[CertificateEntry]) -> Literal["sum", "difference"]:
    sets = [p.vertices for p in prem]
    total = sum(len(s) for s in sets)
    if entry.vertices == frozenset().union(*sets) and total == len(entry.vertices):
        return "sum"
    head, rest = sets[0], sets[1:]
    rest_union = frozenset().union(*rest)
    if rest_union <= head and sum(len(s) for s in rest) == len(rest_union) and entry.vertices == head - rest_union:
        return "difference"
    raise _fail(entry, "result is neither the disjoint union nor the difference of its premises")


def _replay_entry(g: Graph, cert: Certificate, entry: CertificateEntry, values: list[PauliSum]) -> PauliSum:
    n = g.n
    prem = [values[p] for p in entry.premises]
    rule = entry.rule
    if rule == "Axiom":
        return x_on(n, range(n)) if entry.kind == "X" else zz_on(n, g.edges)
    if rule == "EdgeSplit":
        s, t, f = prem
        return bracket(s, bracket(s, bracket(t, bracket(t, f)))).scaled(_SIXTEENTH)
    if rule in ("InternalSplit", "ExternalSplit"):
        h = prem[1]
        for extra in prem[2:]:
            h = h - extra
        edges = [tuple(sorted(u for u in range(n) if t.zmask >> u & 1)) for t in h.terms]
        source = prem[0]
        members = [t.xmask.bit_length() - 1 for t in source.terms]
        degrees = {u: sum(1 for e in edges if u in e) for u in members}
        spectrum = sorted(set().union(*(vertex_spectrum(d) for d in degrees.values())))
        parity = 1 if any(degrees[u] % 2 for u in entry.vertices) else 0
        keep = [lam for lam in spectrum if lam % 2 == parity]
        return lagrange_project(h, source, keep, spectrum)
    if rule == "PathPeel":
        head, *rest = prem
        mode = _peel_mode(entry, [cert.entries[p] for p in entry.premises])
        sign = 1 if mode == "sum" else -1
        for p in rest:
            head = head + p.scaled(sign)
        return head
    if entry.kind == "X":
        zz, x_prev, mixer = prem
        return f_apply(zz, mixer) - x_prev
    x_mid, zz_prev, hp = prem
    return f_apply(x_mid, hp) - zz_prev


def verify_certificate(g: Graph, cert: Certificate, *, replay: bool = True) -> bool:
    """Check every entry's rule hypotheses and, with replay, recompute it through the Pauli engine."""
    if cert.n != g.n:
        raise CertificateError(f"certificate is for {cert.n} vertices, graph has {g.n}")
    if not cert.entries or cert.entries[0].key != ("X", frozenset(range(g.n))) or cert.entries[0].rule != "Axiom":
        raise CertificateError("entry 0 must be the axiom X_V", index=0)
    if not any(e.rule == "Axiom" and e.key == ("ZZ", frozenset(g.edges)) for e in cert.entries):
        raise CertificateError("missing axiom ZZ_E")
    for i, entry in enumerate(cert.entries):
        if entry.index != i:
            raise CertificateError(f"entry {i} is numbered {entry.index}", index=i)
        _check_entry(g, cert, entry)
    if not replay:
        return True
    values: list[PauliSum] = []
    for entry in cert.entries:
        value = _replay_entry(g, cert, entry, values)
        expected = x_on(g.n, entry.vertices) if entry.kind == "X" else zz_on(g.n, entry.edges)
        if value != expected:
            raise _fail(entry, "replayed commutator identity does not produce the stated element")
        values.append(value)
    return True
