"""Adjacency matrices of brick sets, spectral radii and the fpd itself."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .bricks import (
    Brick,
    BrickList,
    Completeness,
    compatibility_graph,
    enumerate_bricks_oracle,
    enumerate_bricks_thin,
    hom_matrix,
    maximal_brick_sets,
)
from .homology import ext1_dim, hom_dim
from .quiver import BoundAlgebraSpec, FamilyKind, FamilySpec, generate_family
from .spectral import DEFAULT_TOL, SpectralRadius, Surd, spectral_radius

__all__ = [
    "FpdConfig",
    "BrickSetError",
    "BrickSetReport",
    "ClosedFormCheck",
    "FpdReport",
    "NEG_INF",
    "adjacency_matrix",
    "fpd",
    "fpd_family",
    "closed_form_fpd",
    "MATCH_TOL",
]

MATCH_TOL = 1e-9


class _NegInf:
    """fpd^n of a size with no brick set at all."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "NEG_INF"

    def __str__(self) -> str:
        return "-inf"

    def __reduce__(self):
        return (_NegInf, ())


NEG_INF = _NegInf()


class BrickSetError(ValueError):
    pass


@dataclass(frozen=True)
class FpdConfig:
    mode: str = "thin"  # "thin" or "oracle"
    max_total_dim: int | None = None  # oracle only; default vertex_count + 2
    field_order: int = 2  # oracle only
    tol: float = DEFAULT_TOL
    with_fpd_n: bool = True

    def __post_init__(self):
        if self.mode not in ("thin", "oracle"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.tol <= 0:
            raise ValueError("tol must be positive")
        if self.mode == "thin" and self.max_total_dim is not None:
            raise ValueError("max_total_dim only applies to oracle mode")


@dataclass(frozen=True)
class BrickSetReport:
    brick_indices: tuple[int, ...]
    adjacency: tuple[tuple[int, ...], ...]
    rho: SpectralRadius

    def __post_init__(self):
        # Perron-Frobenius sandwich: max diagonal <= rho <= max row sum.
        diag = max((self.adjacency[i][i] for i in range(len(self.adjacency))), default=0)
        rows = max((sum(r) for r in self.adjacency), default=0)
        slack = self.rho.bound + 1e-12
        if not (diag - slack <= self.rho.value <= rows + slack):
            raise AssertionError(f"rho {self.rho.value} outside [{diag}, {rows}]")

    @property
    def rho_exact(self) -> Surd | None:
        return self.rho.exact


@dataclass(frozen=True)
class ClosedFormCheck:
    expected: Surd
    delta: float
    match: bool


@dataclass(frozen=True)
class FpdReport:
    spec: BoundAlgebraSpec
    bricks: BrickList
    hom_matrix: tuple[tuple[int, ...], ...]
    ext_matrix: tuple[tuple[int, ...], ...]
    brick_sets: tuple[BrickSetReport, ...]
    fpd_value: float
    fpd_bound: float
    fpd_exact: Surd | None
    fpd_n: dict = field(default_factory=dict)  # size -> float | NEG_INF
    completeness: Completeness = Completeness.COMPLETE
    family: FamilySpec | None = None
    closed_form: ClosedFormCheck | None = None
    tol: float = DEFAULT_TOL

    @property
    def names(self) -> list[str]:
        return self.bricks.names()


def _check_brick_set(spec: BoundAlgebraSpec, bricks) -> None:
    reps = [b.rep for b in bricks]
    for i, x in enumerate(reps):
        for j, y in enumerate(reps):
            h = hom_dim(spec, x, y)
            if h != int(i == j):
                raise BrickSetError(
                    f"not a brick set: dim Hom({bricks[i].name}, {bricks[j].name}) = {h}"
                )


def adjacency_matrix(spec: BoundAlgebraSpec, phi) -> tuple[tuple[int, ...], ...]:
    """Ext^1 dimensions a_ij = dim Ext^1(X_i, X_j) over a verified brick set."""
    phi = list(phi)
    _check_brick_set(spec, phi)
    return tuple(tuple(ext1_dim(spec, x.rep, y.rep) for y in phi) for x in phi)


def _submatrix(m, idx) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(m[i][j] for j in idx) for i in idx)


def _best(reports) -> tuple[float, float, Surd | None]:
    if not reports:
        return 0.0, 0.0, Surd(0)
    top = max(reports, key=lambda r: (r.value, r.exact is not None))
    exact = top.exact
    if exact is not None and any(r.exact is None and r.upper > top.value for r in reports):
        exact = None
    return top.value, top.bound, exact


def _fpd_n(ext, cliques, n_bricks: int, tol: float) -> dict:
    # Every brick set lies in some maximal clique, so k-subsets of the
    # maximal cliques cover all k-brick sets.
    best: dict[int, float] = {}
    seen: set[frozenset[int]] = set()
    for clique in cliques:
        for k in range(1, len(clique) + 1):
            for sub in itertools.combinations(clique, k):
                key = frozenset(sub)
                if key in seen:
                    continue
                seen.add(key)
                rho = spectral_radius(_submatrix(ext, sub), tol).value
                best[k] = max(best.get(k, rho), rho)
    return {k: best.get(k, NEG_INF) for k in range(1, n_bricks + 1)}


def _enumerate(spec: BoundAlgebraSpec, config: FpdConfig) -> BrickList:
    if config.mode == "thin":
        return enumerate_bricks_thin(spec)
    bound = config.max_total_dim if config.max_total_dim is not None else spec.vertex_count + 2
    return enumerate_bricks_oracle(spec, bound, config.field_order)


def fpd(spec: BoundAlgebraSpec, config: FpdConfig | None = None, family: FamilySpec | None = None) -> FpdReport:
    """Frobenius-Perron dimension of the module category of ``spec``.

    The maximum is taken over maximal brick sets only, which suffices by
    monotonicity of the Perron root under principal submatrices.
    """
    config = config or FpdConfig()
    bricks = _enumerate(spec, config)
    reps = [b.rep for b in bricks]
    hom = hom_matrix(spec, bricks)
    ext = tuple(tuple(ext1_dim(spec, x, y) for y in reps) for x in reps)
    graph = compatibility_graph(spec, bricks, hom)
    cliques = maximal_brick_sets(graph)
    sets = []
    for clique in cliques:
        adj = _submatrix(ext, clique)
        sets.append(BrickSetReport(tuple(clique), adj, spectral_radius(adj, config.tol)))
    value, bound, exact = _best([s.rho for s in sets])
    fpd_n = _fpd_n(ext, cliques, len(bricks), config.tol) if config.with_fpd_n else {}
    check = None
    if family is not None:
        expected = closed_form_fpd(family)
        delta = abs(value - float(expected))
        match = exact == expected if exact is not None else delta <= MATCH_TOL
        check = ClosedFormCheck(expected, delta, match)
    return FpdReport(
        spec=spec,
        bricks=bricks,
        hom_matrix=hom,
        ext_matrix=ext,
        brick_sets=tuple(sets),
        fpd_value=value,
        fpd_bound=bound,
        fpd_exact=exact,
        fpd_n=fpd_n,
        completeness=bricks.completeness,
        family=family,
        closed_form=check,
        tol=config.tol,
    )


def fpd_family(family: FamilySpec, config: FpdConfig | None = None) -> FpdReport:
    return fpd(generate_family(family), config, family)


def closed_form_fpd(f: FamilySpec) -> Surd:
    """Known answer for a named family: max loops, or the Q(n,m) surd."""
    if f.kind is FamilyKind.QNM:
        n, m = f.loops
        return Surd(Fraction(n + m, 2), Fraction(1, 2), (m - n) ** 2 + 4)
    return Surd(max(f.loops))
