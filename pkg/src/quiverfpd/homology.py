"""Representations of kQ/(>=2) and their Hom / Ext^1 dimensions.

A representation stores one matrix per arrow of the ambient spec, in the
spec's arrow order; the matrix for ``a: s -> t`` has shape
``dims[t] x dims[s]``. Hom spaces are computed by solving the intertwiner
system directly, Ext^1 from the first syzygy.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .linalg import RationalMatrix, kernel_basis, rank, solve
from .quiver import BoundAlgebraSpec

__all__ = [
    "Representation",
    "make_rep",
    "simple_rep",
    "projective_rep",
    "injective_rep",
    "zero_rep",
    "direct_sum",
    "transpose_dual",
    "hom_dim",
    "is_brick",
    "syzygy",
    "ext1_dim",
    "annihilated_by_relations",
]


@dataclass(frozen=True)
class Representation:
    dims: tuple[int, ...]
    maps: tuple[RationalMatrix, ...]
    name: str = ""

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def map_for(self, spec: BoundAlgebraSpec, arrow_id: str) -> RationalMatrix:
        for a, m in zip(spec.arrows, self.maps):
            if a.id == arrow_id:
                return m
        raise KeyError(arrow_id)

    def renamed(self, name: str) -> "Representation":
        return Representation(self.dims, self.maps, name)

    def __str__(self) -> str:
        return self.name or f"rep{self.dims}"


def _check(spec: BoundAlgebraSpec, rep: Representation) -> None:
    if len(rep.dims) != spec.vertex_count or len(rep.maps) != len(spec.arrows):
        raise ValueError(f"representation {rep} does not belong to this spec")
    for a, m in zip(spec.arrows, rep.maps):
        want = (rep.dims[a.target - 1], rep.dims[a.source - 1])
        if m.shape != want:
            raise ValueError(f"map for arrow {a.id} has shape {m.shape}, expected {want}")


def make_rep(spec: BoundAlgebraSpec, dims: Sequence[int], maps: dict | None = None, name: str = "") -> Representation:
    """Build a representation from a dimension vector and ``{arrow_id: rows}``.

    Arrows missing from ``maps`` get the zero map.
    """
    maps = dict(maps or {})
    dims = tuple(int(d) for d in dims)
    out = []
    for a in spec.arrows:
        shape = (dims[a.target - 1], dims[a.source - 1])
        if a.id in maps:
            m = maps.pop(a.id)
            if not isinstance(m, RationalMatrix):
                m = RationalMatrix.from_rows(m, shape[1])
        else:
            m = RationalMatrix.zeros(*shape)
        out.append(m)
    if maps:
        raise ValueError(f"unknown arrows {sorted(maps)}")
    rep = Representation(dims, tuple(out), name)
    _check(spec, rep)
    return rep


def _vertex(spec: BoundAlgebraSpec, i: int) -> None:
    if not 1 <= i <= spec.vertex_count:
        raise ValueError(f"vertex {i} outside 1..{spec.vertex_count}")


def zero_rep(spec: BoundAlgebraSpec) -> Representation:
    return make_rep(spec, [0] * spec.vertex_count, name="0")


def simple_rep(spec: BoundAlgebraSpec, i: int) -> Representation:
    _vertex(spec, i)
    return make_rep(spec, [int(v == i) for v in spec.quiver.vertices], name=f"({i})")


def _projective_layout(spec: BoundAlgebraSpec, i: int) -> dict[int, list]:
    """Basis of P_i = Ae_i: paths of length <= 1 starting at i, grouped by vertex.

    Vertex i carries ``e_i`` first, then one coordinate per loop; every other
    vertex carries one coordinate per arrow from i into it.
    """
    layout: dict[int, list] = {v: [] for v in spec.quiver.vertices}
    layout[i].append(None)
    for a in spec.arrows:
        if a.source == i:
            layout[a.target].append(a.id)
    return layout


def projective_rep(spec: BoundAlgebraSpec, i: int) -> Representation:
    _vertex(spec, i)
    layout = _projective_layout(spec, i)
    dims = [len(layout[v]) for v in spec.quiver.vertices]
    maps = {}
    for a in spec.arrows:
        if a.source != i:
            continue
        rows = [[0] * dims[i - 1] for _ in range(dims[a.target - 1])]
        rows[layout[a.target].index(a.id)][0] = 1
        maps[a.id] = rows
    return make_rep(spec, dims, maps, name=f"P{i}")


def injective_rep(spec: BoundAlgebraSpec, i: int) -> Representation:
    """I_i = D(e_i A): one coordinate per arrow ending at i, plus the socle."""
    _vertex(spec, i)
    layout: dict[int, list] = {v: [] for v in spec.quiver.vertices}
    layout[i].append(None)
    for a in spec.arrows:
        if a.target == i:
            layout[a.source].append(a.id)
    dims = [len(layout[v]) for v in spec.quiver.vertices]
    maps = {}
    for a in spec.arrows:
        if a.target != i:
            continue
        rows = [[0] * dims[a.source - 1] for _ in range(dims[i - 1])]
        rows[0][layout[a.source].index(a.id)] = 1
        maps[a.id] = rows
    return make_rep(spec, dims, maps, name=f"I{i}")


def direct_sum(spec: BoundAlgebraSpec, *reps: Representation, name: str = "") -> Representation:
    dims = [sum(r.dims[v - 1] for r in reps) for v in spec.quiver.vertices]
    maps = {}
    for k, a in enumerate(spec.arrows):
        rows = [[Fraction(0)] * dims[a.source - 1] for _ in range(dims[a.target - 1])]
        ro = co = 0
        for r in reps:
            m = r.maps[k]
            for x in range(m.rows):
                for y in range(m.cols):
                    rows[ro + x][co + y] = m[x, y]
            ro += m.rows
            co += m.cols
        maps[a.id] = rows
    return make_rep(spec, dims, maps, name=name or " + ".join(str(r) for r in reps))


def transpose_dual(rep: Representation) -> Representation:
    """k-dual as a representation of the opposite quiver (maps transposed)."""
    return Representation(rep.dims, tuple(m.T for m in rep.maps), f"D{rep.name}" if rep.name else "")


def annihilated_by_relations(spec: BoundAlgebraSpec, rep: Representation) -> bool:
    """True iff every length-two path acts as zero."""
    _check(spec, rep)
    index = {a.id: k for k, a in enumerate(spec.arrows)}
    for first, second in spec.quiver.composable_pairs():
        if not (rep.maps[index[second.id]] @ rep.maps[index[first.id]]).is_zero():
            return False
    return True


def intertwiner_system(spec: BoundAlgebraSpec, m: Representation, n: Representation):
    """Linear system whose solutions are the morphisms ``m -> n``.

    Unknowns are the entries of ``phi_v: M_v -> N_v`` (row-major, vertices in
    order); each arrow ``a: s -> t`` contributes ``phi_t M_a - N_a phi_s = 0``.
    Returns ``(rows, unknown_count)``; entries are whatever the maps hold.
    """
    off = [0]
    for v in range(spec.vertex_count):
        off.append(off[-1] + n.dims[v] * m.dims[v])
    rows = []
    for a, ma, na in zip(spec.arrows, m.maps, n.maps):
        s, t = a.source - 1, a.target - 1
        ms, mt, ns, nt = m.dims[s], m.dims[t], n.dims[s], n.dims[t]
        for r in range(nt):
            for c in range(ms):
                row = [0] * off[-1]
                for k in range(mt):
                    x = ma[k, c]
                    if x:
                        row[off[t] + r * mt + k] += x
                for k in range(ns):
                    y = na[r, k]
                    if y:
                        row[off[s] + k * ms + c] -= y
                if any(row):
                    rows.append(row)
    return rows, off[-1]


def hom_dim(spec: BoundAlgebraSpec, m: Representation, n: Representation) -> int:
    """dim Hom(m, n) over the rationals."""
    _check(spec, m)
    _check(spec, n)
    rows, unknowns = intertwiner_system(spec, m, n)
    if not rows:
        return unknowns
    return unknowns - rank(RationalMatrix.from_rows(rows, unknowns))


def is_brick(spec: BoundAlgebraSpec, m: Representation) -> bool:
    return hom_dim(spec, m, m) == 1


def _columns(mat: RationalMatrix) -> list[tuple]:
    return [mat.column(j) for j in range(mat.cols)]


def top_complement(spec: BoundAlgebraSpec, m: Representation) -> dict[int, list[int]]:
    """Standard basis indices at each vertex spanning a complement of rad M.

    rad M at v is the sum of the images of all arrows ending at v (valid
    because the algebra is radical square zero).
    """
    out = {}
    for v in spec.quiver.vertices:
        d = m.dims[v - 1]
        gens = []
        for a, mat in zip(spec.arrows, m.maps):
            if a.target == v:
                gens.extend(_columns(mat))
        chosen: list[int] = []
        current = rank(RationalMatrix.from_columns(gens, d)) if gens else 0
        for k in range(d):
            if current == d:
                break
            e = tuple(Fraction(int(j == k)) for j in range(d))
            trial = rank(RationalMatrix.from_columns(gens + [e], d))
            if trial > current:
                gens.append(e)
                chosen.append(k)
                current = trial
        out[v] = chosen
    return out


def syzygy(spec: BoundAlgebraSpec, m: Representation):
    """Projective cover data and first syzygy of ``m``.

    Returns ``(cover, omega)`` where ``cover`` lists ``(vertex, multiplicity)``
    for P_0 = sum of P_v^{m_v} and ``omega`` is the kernel of P_0 -> M with
    an explicit kernel basis at each vertex.
    """
    if not annihilated_by_relations(spec, m):
        raise ValueError(f"{m} is not annihilated by paths of length two")
    tops = top_complement(spec, m)
    copies = [(v, k) for v in spec.quiver.vertices for k in tops[v]]
    cover = [(v, len(tops[v])) for v in spec.quiver.vertices if tops[v]]
    index = {a.id: j for j, a in enumerate(spec.arrows)}
    projs = {v: projective_rep(spec, v) for v, _ in cover}
    layouts = {v: _projective_layout(spec, v) for v, _ in cover}

    # pi_w : (P_0)_w -> M_w, columns ordered by copy then by layout slot.
    kernels: dict[int, RationalMatrix] = {}
    p0_dims = []
    for w in spec.quiver.vertices:
        cols = []
        for v, k in copies:
            gen = tuple(Fraction(int(j == k)) for j in range(m.dims[v - 1]))
            for slot in layouts[v][w]:
                if slot is None:
                    cols.append(gen)
                else:
                    img = m.maps[index[slot]] @ RationalMatrix.from_columns([gen], m.dims[v - 1])
                    cols.append(img.column(0))
        p0_dims.append(len(cols))
        pi = RationalMatrix.from_columns(cols, m.dims[w - 1]) if cols else RationalMatrix.zeros(m.dims[w - 1], 0)
        kernels[w] = kernel_basis(pi) if cols else RationalMatrix.zeros(0, 0)

    p0 = direct_sum(spec, *[projs[v] for v, _ in copies]) if copies else None
    omega_dims = [kernels[w].cols for w in spec.quiver.vertices]
    maps = {}
    for j, a in enumerate(spec.arrows):
        s, t = a.source, a.target
        ks, kt = kernels[s], kernels[t]
        if ks.cols == 0 or kt.cols == 0:
            continue
        image = p0.maps[j] @ ks
        maps[a.id] = solve(kt, image)
    omega = make_rep(spec, omega_dims, maps, name=f"Omega{m.name}")
    return cover, omega


def ext1_dim(spec: BoundAlgebraSpec, m: Representation, n: Representation) -> int:
    """dim Ext^1(m, n) from 0 -> Hom(M,N) -> Hom(P0,N) -> Hom(Omega,N) -> Ext^1 -> 0."""
    if not annihilated_by_relations(spec, n):
        raise ValueError(f"{n} is not annihilated by paths of length two")
    cover, omega = syzygy(spec, m)
    hom_p0 = sum(k * hom_dim(spec, projective_rep(spec, v), n) for v, k in cover)
    value = hom_dim(spec, omega, n) - hom_p0 + hom_dim(spec, m, n)
    assert value >= 0, "negative Ext dimension: inconsistent resolution"
    return value
