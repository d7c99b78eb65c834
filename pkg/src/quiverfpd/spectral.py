"""Spectral radius of nonnegative integer matrices.

The radius of a nonnegative matrix is the maximum over the diagonal blocks
of its strongly connected components. Blocks of size one and two are
evaluated in closed form; larger blocks fall back to a shifted power
iteration with Collatz-Wielandt bounds.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import networkx as nx
import numpy as np

__all__ = ["Surd", "SpectralRadius", "spectral_radius", "DEFAULT_TOL"]

DEFAULT_TOL = 1e-10


def _squarefree(d: int) -> tuple[int, int]:
    """Write d = k^2 * r with r squarefree; return (k, r)."""
    k, r, f = 1, d, 2
    while f * f <= r:
        while r % (f * f) == 0:
            r //= f * f
            k *= f
        f += 1
    return k, r


@dataclass(frozen=True, order=False)
class Surd:
    """Exact value ``rational + coeff * sqrt(radicand)``, radicand squarefree."""

    rational: Fraction
    coeff: Fraction = Fraction(0)
    radicand: int = 0

    def __post_init__(self):
        object.__setattr__(self, "rational", Fraction(self.rational))
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        if self.radicand < 0:
            raise ValueError("negative radicand")
        k, r = _squarefree(self.radicand) if self.radicand else (0, 0)
        coeff = self.coeff * k
        if r == 1:
            object.__setattr__(self, "rational", self.rational + coeff)
            coeff, r = Fraction(0), 0
        if coeff == 0:
            r = 0
        object.__setattr__(self, "coeff", coeff)
        object.__setattr__(self, "radicand", r)

    @classmethod
    def of(cls, x) -> "Surd":
        return x if isinstance(x, Surd) else cls(Fraction(x))

    @property
    def is_rational(self) -> bool:
        return self.radicand == 0

    def __float__(self) -> float:
        return float(self.rational) + float(self.coeff) * math.sqrt(self.radicand)

    def __add__(self, other) -> "Surd":
        other = Surd.of(other)
        if self.radicand and other.radicand and self.radicand != other.radicand:
            raise ValueError("cannot add surds with different radicands exactly")
        return Surd(self.rational + other.rational, self.coeff + other.coeff, self.radicand or other.radicand)

    __radd__ = __add__

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Surd(Fraction(other))
        if not isinstance(other, Surd):
            return NotImplemented
        return (self.rational, self.coeff, self.radicand) == (other.rational, other.coeff, other.radicand)

    def __hash__(self) -> int:
        return hash((self.rational, self.coeff, self.radicand))

    def __str__(self) -> str:
        if self.is_rational:
            return str(self.rational)
        c = self.coeff
        root = f"sqrt({self.radicand})" if c == 1 else f"{c}*sqrt({self.radicand})"
        if self.rational == 0:
            return root
        return f"{self.rational} + {root}" if c > 0 else f"{self.rational} - {str(-c) + '*' if c != -1 else ''}sqrt({self.radicand})"


@dataclass(frozen=True)
class SpectralRadius:
    value: float
    bound: float  # |true radius - value| <= bound
    exact: Surd | None = None

    @property
    def lower(self) -> float:
        return self.value - self.bound

    @property
    def upper(self) -> float:
        return self.value + self.bound


def _radius_2x2(a: int, b: int, c: int, d: int) -> Surd:
    # larger root of t^2 - (a+d) t + (ad - bc)
    return Surd(Fraction(a + d, 2), Fraction(1, 2), (a - d) ** 2 + 4 * b * c)


def _power_iteration(block: np.ndarray, tol: float, max_iter: int = 1_000_000) -> tuple[float, float]:
    """Collatz-Wielandt bracketing on block + I (irreducible, hence primitive)."""
    shifted = block + np.eye(block.shape[0])
    x = np.ones(block.shape[0])
    lo, hi = 0.0, float(shifted.sum(axis=1).max())
    for _ in range(max_iter):
        y = shifted @ x
        ratios = y / x
        lo, hi = max(lo, float(ratios.min())), min(hi, float(ratios.max()))
        if hi - lo <= tol:
            break
        x = y / y.max()
    else:
        raise RuntimeError("power iteration did not converge")
    return lo - 1.0, hi - 1.0


def spectral_radius(m, tol: float = DEFAULT_TOL) -> SpectralRadius:
    """Spectral radius of a square nonnegative integer matrix (list of rows)."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    rows = [list(r) for r in m]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    if any(x < 0 for r in rows for x in r):
        raise ValueError("matrix has a negative entry")
    if n == 0:
        return SpectralRadius(0.0, 0.0, Surd(0))
    g = nx.DiGraph()
    g.add_nodes_from(range(n))
    g.add_edges_from((i, j) for i in range(n) for j in range(n) if i != j and rows[i][j])
    parts = []
    for comp in nx.strongly_connected_components(g):
        idx = sorted(comp)
        if len(idx) == 1:
            cand = Surd(rows[idx[0]][idx[0]])
            parts.append((float(cand), 0.0, cand))
        elif len(idx) == 2:
            i, j = idx
            cand = _radius_2x2(rows[i][i], rows[i][j], rows[j][i], rows[j][j])
            parts.append((float(cand), 0.0, cand))
        else:
            block = np.array([[rows[i][j] for j in idx] for i in idx], dtype=float)
            lo, hi = _power_iteration(block, tol)
            parts.append(((lo + hi) / 2, (hi - lo) / 2, None))
    value, bound, exact = max(parts, key=lambda p: (p[0], p[2] is not None))
    # An exact winner is only trusted if no iterated block could exceed it.
    if exact is not None and any(c is None and v + b > value for v, b, c in parts):
        exact = None
    return SpectralRadius(value, bound, exact)
