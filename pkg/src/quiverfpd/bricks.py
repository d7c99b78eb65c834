"""Brick enumeration, brick-set compatibility and maximal brick sets.

Bricks of kQ/(>=2) are found on the loop-free base quiver and lifted back
with every loop acting as zero. Two enumeration modes exist:

* ``thin``: positive roots of the underlying Dynkin graph with all entries
  <= 1, realised with identity maps and filtered by the rad^2 relation and
  the End = k test;
* ``oracle``: brute force over a small prime field, bounded in dimension,
  with isomorphism classes separated by searching the hom space.
"""
from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum

import networkx as nx

from .homology import (
    Representation,
    annihilated_by_relations,
    hom_dim,
    is_brick,
    make_rep,
)
from .linalg import kernel_mod, rank_mod
from .quiver import BoundAlgebraSpec, strip_loops
from .roots import DynkinComponent, NotDynkinError, classify_dynkin, positive_roots

__all__ = [
    "Brick",
    "Completeness",
    "BrickList",
    "thin_rep",
    "brick_name",
    "enumerate_bricks_thin",
    "enumerate_bricks_oracle",
    "CompatibilityGraph",
    "compatibility_graph",
    "hom_matrix",
    "maximal_brick_sets",
    "is_two_cycle",
    "is_standard_orientation",
]

SUPPORTED_FIELDS = (2, 3)


class Completeness(str, Enum):
    COMPLETE = "complete"
    LOWER_BOUND = "lower_bound"


@dataclass(frozen=True)
class Brick:
    rep: Representation
    dim_vector: tuple[int, ...]
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class BrickList:
    bricks: tuple[Brick, ...]
    completeness: Completeness
    mode: str

    def __iter__(self):
        return iter(self.bricks)

    def __len__(self) -> int:
        return len(self.bricks)

    def __getitem__(self, i):
        return self.bricks[i]

    def names(self) -> list[str]:
        return [b.name for b in self.bricks]


# ---------------------------------------------------------------------------
# naming and thin representations


def brick_name(spec: BoundAlgebraSpec, rep: Representation) -> str:
    """Support-based name: ``(2)``, ``(2/3)``, ``(4/2 5)``, ``(1 3/2)``.

    Vertices hit by a nonzero arrow map from another vertex form the bottom
    layer; the rest form the top. Only meaningful for thin modules.
    """
    support = [v for v in spec.quiver.vertices if rep.dims[v - 1]]
    hit = {
        a.target
        for a, m in zip(spec.arrows, rep.maps)
        if not a.is_loop and not m.is_zero()
    }
    top = [v for v in support if v not in hit]
    bottom = [v for v in support if v in hit]
    if not bottom:
        return "(" + " ".join(map(str, top)) + ")"
    return "(" + " ".join(map(str, top)) + "/" + " ".join(map(str, bottom)) + ")"


def thin_rep(spec: BoundAlgebraSpec, dim_vector, name: str | None = None) -> Representation:
    """k on the support, identity on non-loop arrows inside it, zero elsewhere."""
    dims = tuple(int(d) for d in dim_vector)
    if any(d not in (0, 1) for d in dims):
        raise ValueError(f"{dims} is not thin")
    maps = {
        a.id: [[1]]
        for a in spec.arrows
        if not a.is_loop and dims[a.source - 1] and dims[a.target - 1]
    }
    rep = make_rep(spec, dims, maps)
    return rep.renamed(name or brick_name(spec, rep))


def _sort_key(b: Brick):
    support = tuple(v for v, d in enumerate(b.dim_vector, 1) if d)
    return (sum(b.dim_vector), support, b.name)


def is_two_cycle(base: BoundAlgebraSpec) -> bool:
    """The loop-free base of Q(n,m): vertices 1, 2 with one arrow each way."""
    if base.vertex_count != 2 or len(base.arrows) != 2:
        return False
    return {(a.source, a.target) for a in base.arrows} == {(1, 2), (2, 1)}


def _components(base: BoundAlgebraSpec) -> list[DynkinComponent]:
    return classify_dynkin(base.vertex_count, [(a.source, a.target) for a in base.arrows])


def is_standard_orientation(base: BoundAlgebraSpec) -> bool:
    """Whether the thin brick list is known to be complete for this base.

    True for the two-vertex cycle, for any orientation of A1..A3, and for a
    Dynkin tree whose arrows all point away from (or all towards) the vertex
    labelled 1 in the diagram's standard labelling, i.e. the orientations of
    the modified ADE quivers and their opposites.
    """
    if is_two_cycle(base):
        return True
    try:
        comps = _components(base)
    except NotDynkinError:
        return False
    g = nx.Graph()
    g.add_nodes_from(base.quiver.vertices)
    g.add_edges_from((a.source, a.target) for a in base.arrows)
    for comp in comps:
        if comp.diagram.kind == "A" and comp.diagram.n <= 3:
            continue
        vertices = {v for _, v in comp.embeddings[0]}
        arrows = [a for a in base.arrows if a.source in vertices]
        ok = False
        for emb in comp.embeddings:
            root = dict(emb)[1]
            dist = nx.single_source_shortest_path_length(g, root)
            away = all(dist[a.source] < dist[a.target] for a in arrows)
            towards = all(dist[a.source] > dist[a.target] for a in arrows)
            if away or towards:
                ok = True
                break
        if not ok:
            return False
    return True


def _two_cycle_bricks(spec: BoundAlgebraSpec, base: BoundAlgebraSpec) -> list[Representation]:
    # S1, S2 and the two indecomposable projectives of k(1 <-> 2)/(>=2).
    reps = [thin_rep(spec, (1, 0)), thin_rep(spec, (0, 1))]
    for a in base.arrows:
        rep = make_rep(spec, (1, 1), {a.id: [[1]]})
        reps.append(rep.renamed(brick_name(spec, rep)))
    return reps


def enumerate_bricks_thin(spec: BoundAlgebraSpec) -> BrickList:
    """Thin bricks of kQ/(>=2) via the positive roots of the loop-free base.

    Raises NotDynkinError if the base is neither a union of simply-laced
    Dynkin graphs nor the two-vertex cycle.
    """
    base, _ = strip_loops(spec)
    if is_two_cycle(base):
        candidates = _two_cycle_bricks(spec, base)
    else:
        candidates = []
        for comp in _components(base):
            emb = comp.embedding
            for root in positive_roots(comp.diagram):
                if max(root) > 1:
                    continue
                dims = [0] * spec.vertex_count
                for label, coeff in enumerate(root, start=1):
                    dims[emb[label] - 1] = coeff
                candidates.append(thin_rep(spec, dims))
    seen = set()
    bricks = []
    for rep in candidates:
        key = (rep.dims, rep.maps)
        if key in seen:
            continue
        seen.add(key)
        if annihilated_by_relations(spec, rep) and is_brick(spec, rep):
            bricks.append(Brick(rep, rep.dims, rep.name))
    bricks.sort(key=_sort_key)
    completeness = Completeness.COMPLETE if is_standard_orientation(base) else Completeness.LOWER_BOUND
    return BrickList(tuple(bricks), completeness, "thin")


# ---------------------------------------------------------------------------
# finite-field oracle


def _mat_mul_mod(a, b, p):
    return [[sum(x * y for x, y in zip(row, col)) % p for col in zip(*b)] for row in a]


def _intertwiner_rows_mod(arrows, dm, mm, dn, mn, p):
    """Same system as homology.intertwiner_system, over plain nested lists."""
    off = [0]
    for v in range(len(dm)):
        off.append(off[-1] + dn[v] * dm[v])
    rows = []
    for (s, t), ma, na in zip(arrows, mm, mn):
        ms, mt, ns, nt = dm[s], dm[t], dn[s], dn[t]
        for r in range(nt):
            for c in range(ms):
                row = [0] * off[-1]
                for k in range(mt):
                    if ma[k][c]:
                        row[off[t] + r * mt + k] += ma[k][c]
                for k in range(ns):
                    if na[r][k]:
                        row[off[s] + k * ms + c] -= na[r][k]
                if any(x % p for x in row):
                    rows.append(row)
    return rows, off


def _hom_basis_mod(arrows, dm, mm, dn, mn, p):
    rows, off = _intertwiner_rows_mod(arrows, dm, mm, dn, mn, p)
    return kernel_mod(rows, off[-1], p), off


def _end_dim_mod(arrows, dims, maps, p) -> int:
    rows, off = _intertwiner_rows_mod(arrows, dims, maps, dims, maps, p)
    return off[-1] - rank_mod(rows, off[-1], p)


def _isomorphic_mod(arrows, dims, m1, m2, p) -> bool:
    """Search Hom(m1, m2) over F_p for an element invertible at every vertex."""
    basis, off = _hom_basis_mod(arrows, dims, m1, dims, m2, p)
    if not basis:
        return False
    for coeffs in itertools.product(range(p), repeat=len(basis)):
        if not any(coeffs):
            continue
        vec = [sum(c * b[i] for c, b in zip(coeffs, basis)) % p for i in range(off[-1])]
        ok = True
        for v, d in enumerate(dims):
            if d == 0:
                continue
            block = vec[off[v]:off[v + 1]]
            mat = [block[r * d:(r + 1) * d] for r in range(d)]
            if rank_mod(mat, d, p) < d:
                ok = False
                break
        if ok:
            return True
    return False


def _relations_ok(arrows, maps, p) -> bool:
    for i, (s1, t1) in enumerate(arrows):
        for j, (s2, t2) in enumerate(arrows):
            if t1 == s2:
                prod = _mat_mul_mod(maps[j], maps[i], p) if maps[i] and maps[j] and maps[i][0] else []
                if any(x for row in prod for x in row):
                    return False
    return True


def _oracle_dimvector(task):
    """Brick iso-class representatives over F_p for one dimension vector."""
    arrows, dims, p = task
    shapes = [(dims[t], dims[s]) for s, t in arrows]
    sizes = [r * c for r, c in shapes]
    reps: list[list] = []
    for flat in itertools.product(range(p), repeat=sum(sizes)):
        maps, pos = [], 0
        for (r, c), size in zip(shapes, sizes):
            chunk = flat[pos:pos + size]
            maps.append([list(chunk[i * c:(i + 1) * c]) for i in range(r)])
            pos += size
        if not _relations_ok(arrows, maps, p):
            continue
        if _end_dim_mod(arrows, dims, maps, p) != 1:
            continue
        if any(_isomorphic_mod(arrows, dims, maps, other, p) for other in reps):
            continue
        reps.append(maps)
    return dims, reps


def _lift(spec, base, dims, maps, p) -> Representation:
    """Exact-rational lift of an F_p brick, with a 0/1 normal form where possible."""
    arrows = [(a.source - 1, a.target - 1) for a in base.arrows]
    if max(dims) <= 1:
        normal = [[[1 if x else 0 for x in row] for row in m] for m in maps]
        if _isomorphic_mod(arrows, dims, maps, normal, p):
            maps = normal
    centred = [[[x if x <= p // 2 else x - p for x in row] for row in m] for m in maps]
    rep = make_rep(spec, dims, {a.id: m for a, m in zip(base.arrows, centred)})
    return rep.renamed(brick_name(spec, rep) if max(dims) <= 1 else f"B{list(dims)}")


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("FPD_THREADS", "1")))
    except ValueError:
        return 1


def enumerate_bricks_oracle(spec: BoundAlgebraSpec, max_total_dim: int, field_order: int = 2) -> BrickList:
    """Exhaustive brick search over F_q on the loop-free base.

    Dimension vectors have entries <= 2 and total <= ``max_total_dim``; every
    matrix with entries in F_q is tried. Survivors are lifted to ``spec``
    with all loops acting as zero.
    """
    if field_order not in SUPPORTED_FIELDS:
        raise ValueError(f"unsupported field order {field_order}; use one of {SUPPORTED_FIELDS}")
    if max_total_dim < 1:
        raise ValueError("max_total_dim must be >= 1")
    base, _ = strip_loops(spec)
    arrows = tuple((a.source - 1, a.target - 1) for a in base.arrows)
    tasks = [
        (arrows, dims, field_order)
        for dims in itertools.product(range(3), repeat=spec.vertex_count)
        if 1 <= sum(dims) <= max_total_dim
    ]
    workers = _workers()
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_oracle_dimvector, tasks))
    else:
        results = [_oracle_dimvector(t) for t in tasks]
    bricks = []
    for dims, reps in results:
        for maps in reps:
            rep = _lift(spec, base, dims, maps, field_order)
            bricks.append(Brick(rep, rep.dims, rep.name))
    bricks.sort(key=_sort_key)
    return BrickList(tuple(bricks), _oracle_completeness(base, max_total_dim), f"oracle(F{field_order}, dim<={max_total_dim})")


def _oracle_completeness(base: BoundAlgebraSpec, max_total_dim: int) -> Completeness:
    # Indecomposables of a Dynkin quiver have dimension vectors bounded by the
    # highest root, so the search is exhaustive once that root fits the caps.
    if is_two_cycle(base):
        return Completeness.COMPLETE if max_total_dim >= 2 else Completeness.LOWER_BOUND
    try:
        comps = _components(base)
    except NotDynkinError:
        return Completeness.LOWER_BOUND
    for comp in comps:
        highest = positive_roots(comp.diagram)[-1]
        if max(highest) > 2 or sum(highest) > max_total_dim:
            return Completeness.LOWER_BOUND
    return Completeness.COMPLETE


# ---------------------------------------------------------------------------
# compatibility graph and maximal brick sets


@dataclass(frozen=True)
class CompatibilityGraph:
    nodes: tuple[Brick, ...]
    edges: frozenset[frozenset[int]]
    hom_matrix: tuple[tuple[int, ...], ...]

    def adjacent(self, i: int, j: int) -> bool:
        return frozenset((i, j)) in self.edges

    def neighbours(self, i: int) -> set[int]:
        return {j for j in range(len(self.nodes)) if j != i and self.adjacent(i, j)}


def hom_matrix(spec: BoundAlgebraSpec, bricks) -> tuple[tuple[int, ...], ...]:
    reps = [b.rep for b in bricks]
    return tuple(tuple(hom_dim(spec, x, y) for y in reps) for x in reps)


def compatibility_graph(spec: BoundAlgebraSpec, bricks, hom=None) -> CompatibilityGraph:
    """Edge between distinct bricks with no morphisms in either direction."""
    bricks = tuple(bricks)
    hom = hom if hom is not None else hom_matrix(spec, bricks)
    edges = frozenset(
        frozenset((i, j))
        for i in range(len(bricks))
        for j in range(i + 1, len(bricks))
        if hom[i][j] == 0 and hom[j][i] == 0
    )
    return CompatibilityGraph(bricks, edges, tuple(tuple(r) for r in hom))


def maximal_brick_sets(g: CompatibilityGraph) -> list[list[int]]:
    """All maximal cliques (Bron-Kerbosch with Tomita pivoting), sorted."""
    adj = {i: g.neighbours(i) for i in range(len(g.nodes))}
    out: list[list[int]] = []

    def expand(r: set, p: set, x: set):
        if not p and not x:
            out.append(sorted(r))
            return
        pivot = max(p | x, key=lambda u: len(adj[u] & p))
        for v in list(p - adj[pivot]):
            expand(r | {v}, p & adj[v], x & adj[v])
            p.remove(v)
            x.add(v)

    if adj:
        expand(set(), set(adj), set())
    return sorted(out)
