"""Positive roots of the simply-laced Dynkin diagrams and Dynkin recognition.

Roots are expressed in simple-root coordinates with the vertex labels of the
modified ADE quivers: A(n) is the chain 1-2-...-n, D(n) is the chain
1-...-(n-2) with n-1 and n both attached to n-2, and E(n) is the chain
1-3-4-...-n with 2 attached to 4 (Bourbaki labelling).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import networkx as nx

from .linalg import RationalMatrix, solve

__all__ = [
    "Diagram",
    "positive_roots",
    "diagram_edges",
    "DynkinComponent",
    "classify_dynkin",
    "NotDynkinError",
]


@dataclass(frozen=True)
class Diagram:
    kind: str  # "A", "D" or "E"
    n: int

    def __post_init__(self):
        if self.kind not in ("A", "D", "E"):
            raise ValueError(f"unknown diagram type {self.kind!r}")
        if self.kind == "A" and self.n < 1:
            raise ValueError("A(n) needs n >= 1")
        if self.kind == "D" and self.n < 4:
            raise ValueError("D(n) needs n >= 4")
        if self.kind == "E" and self.n not in (6, 7, 8):
            raise ValueError("E(n) needs n in {6, 7, 8}")

    def __str__(self) -> str:
        return f"{self.kind}{self.n}"

    @classmethod
    def parse(cls, text: str) -> "Diagram":
        text = text.strip().replace("(", "").replace(")", "")
        return cls(text[0].upper(), int(text[1:]))


def diagram_edges(d: Diagram) -> list[tuple[int, int]]:
    n = d.n
    if d.kind == "A":
        return [(i, i + 1) for i in range(1, n)]
    if d.kind == "D":
        return [(i, i + 1) for i in range(1, n - 2)] + [(n - 2, n - 1), (n - 2, n)]
    return [(1, 3)] + [(i, i + 1) for i in range(3, n)] + [(2, 4)]


def _vec(n: int, support) -> tuple[int, ...]:
    v = [0] * n
    for i in support:
        v[i - 1] += 1
    return tuple(v)


def _roots_a(n: int) -> list[tuple[int, ...]]:
    return [_vec(n, range(i, j + 1)) for i in range(1, n + 1) for j in range(i, n + 1)]


def _roots_d(n: int) -> list[tuple[int, ...]]:
    # eps_i - eps_j, eps_i + eps_n, eps_i + eps_{n-1}, eps_i + eps_j written in
    # the base E_1..E_{n-1} = eps_l - eps_{l+1}, E_n = eps_{n-1} + eps_n.
    out = [_vec(n, range(i, j)) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    out += [_vec(n, [*range(i, n - 1), n]) for i in range(1, n - 1)]
    out += [_vec(n, range(i, n + 1)) for i in range(1, n - 1)]
    out += [
        _vec(n, [*range(i, n - 1), *range(j, n + 1)])
        for i in range(1, n - 1)
        for j in range(i + 1, n - 1)
    ]
    out.append(_vec(n, [n]))
    return out


def _e8_simple_roots() -> list[tuple[Fraction, ...]]:
    h = Fraction(1, 2)
    a1 = (h, -h, -h, -h, -h, -h, -h, h)
    e = lambda i: tuple(Fraction(int(k == i)) for k in range(8))
    add = lambda u, v, s=1: tuple(x + s * y for x, y in zip(u, v))
    simple = [a1, add(e(0), e(1))]
    simple += [add(e(k), e(k - 1), -1) for k in range(1, 7)]
    return simple


@lru_cache(maxsize=None)
def _e8_roots_in_simple_coords() -> tuple[tuple[int, ...], ...]:
    """All 240 E8 roots in the standard lattice model, rewritten in the simple base."""
    vectors = []
    for i, j in itertools.combinations(range(8), 2):
        for si, sj in itertools.product((1, -1), repeat=2):
            v = [Fraction(0)] * 8
            v[i], v[j] = Fraction(si), Fraction(sj)
            vectors.append(tuple(v))
    for signs in itertools.product((1, -1), repeat=8):
        if signs.count(-1) % 2 == 0:
            vectors.append(tuple(Fraction(s, 2) for s in signs))
    basis = RationalMatrix.from_columns(_e8_simple_roots(), 8)
    rhs = RationalMatrix.from_columns(vectors, 8)
    coeffs = solve(basis, rhs)
    out = []
    for j in range(coeffs.cols):
        col = coeffs.column(j)
        assert all(x.denominator == 1 for x in col)
        out.append(tuple(int(x) for x in col))
    return tuple(out)


def _roots_e(n: int) -> list[tuple[int, ...]]:
    return [
        r[:n]
        for r in _e8_roots_in_simple_coords()
        if all(x >= 0 for x in r) and not any(r[n:])
    ]


def positive_roots(diagram: Diagram | str) -> list[tuple[int, ...]]:
    """Positive roots, sorted by height then lexicographically."""
    if isinstance(diagram, str):
        diagram = Diagram.parse(diagram)
    if diagram.kind == "A":
        roots = _roots_a(diagram.n)
    elif diagram.kind == "D":
        roots = _roots_d(diagram.n)
    else:
        roots = _roots_e(diagram.n)
    return sorted(set(roots), key=lambda r: (sum(r), tuple(-x for x in r)))


# ---------------------------------------------------------------------------
# recognising the underlying graph of a loop-free quiver


class NotDynkinError(ValueError):
    pass


@dataclass(frozen=True)
class DynkinComponent:
    diagram: Diagram
    # diagram label -> quiver vertex, for every isomorphism of the component
    embeddings: tuple[tuple[tuple[int, int], ...], ...]

    @property
    def embedding(self) -> dict[int, int]:
        return dict(self.embeddings[0])


def _diagram_for(g: nx.Graph) -> Diagram:
    n = g.number_of_nodes()
    if not nx.is_tree(g):
        raise NotDynkinError("underlying graph is not a tree")
    degrees = sorted((d for _, d in g.degree()), reverse=True)
    if n == 1 or degrees[0] <= 2:
        return Diagram("A", n)
    if degrees[0] > 3 or degrees[1] == 3:
        raise NotDynkinError("underlying graph has a vertex of degree > 3 or two branch points")
    centre = next(v for v, d in g.degree() if d == 3)
    h = g.copy()
    h.remove_node(centre)
    arms = sorted(len(c) for c in nx.connected_components(h))
    if arms[0] == 1 and arms[1] == 1:
        return Diagram("D", n)
    if arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
        return Diagram("E", n)
    raise NotDynkinError(f"branch arms {arms} are not of type D or E")


def classify_dynkin(vertex_count: int, edges) -> list[DynkinComponent]:
    """Split the underlying graph into Dynkin components.

    ``edges`` are (source, target) pairs of a loop-free quiver. Multiple edges
    between the same two vertices (in either direction) are not Dynkin.
    """
    g = nx.Graph()
    g.add_nodes_from(range(1, vertex_count + 1))
    seen = set()
    for s, t in edges:
        if s == t:
            raise NotDynkinError("loops must be stripped first")
        key = frozenset((s, t))
        if key in seen:
            raise NotDynkinError(f"multiple edges between {s} and {t}")
        seen.add(key)
        g.add_edge(s, t)
    out = []
    for nodes in sorted(nx.connected_components(g), key=min):
        sub = g.subgraph(nodes)
        diagram = _diagram_for(sub)
        std = nx.Graph()
        std.add_nodes_from(range(1, diagram.n + 1))
        std.add_edges_from(diagram_edges(diagram))
        matcher = nx.algorithms.isomorphism.GraphMatcher(std, sub)
        embeddings = tuple(tuple(sorted(iso.items())) for iso in matcher.isomorphisms_iter())
        out.append(DynkinComponent(diagram, embeddings))
    return out
