"""Exact dense linear algebra over the rationals (and prime fields).

Every Hom/Ext dimension in the package is a rank or nullity computed here.
No floating point is used anywhere in this module.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "RationalMatrix",
    "rank",
    "kernel_basis",
    "rank_mod",
    "kernel_mod",
    "solve",
]


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class RationalMatrix:
    """Immutable dense matrix with exact rational entries, row-major."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix shape must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "RationalMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(_frac(x) for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, k: int) -> "RationalMatrix":
        return cls(k, k, tuple(Fraction(int(i == j)) for i in range(k) for j in range(k)))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "RationalMatrix":
        return cls.from_rows([[c[i] for c in columns] for i in range(rows)], len(columns))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(
            self.cols,
            self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    T = property(transpose)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = []
        cols = [other.column(j) for j in range(other.cols)]
        for i in range(self.rows):
            r = self.row(i)
            for c in cols:
                out.append(sum((a * b for a, b in zip(r, c) if a and b), Fraction(0)))
        return RationalMatrix(self.rows, other.cols, tuple(out))

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return RationalMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return RationalMatrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, c) -> "RationalMatrix":
        c = _frac(c)
        return RationalMatrix(self.rows, self.cols, tuple(c * a for a in self.entries))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"RationalMatrix({self.rows}x{self.cols}: [{body}])"


def _echelon(rows: list[list], ncols: int, inv, reduce=None) -> list[int]:
    """Reduced row echelon form in place; returns pivot columns.

    ``inv`` inverts a nonzero field element, ``reduce`` normalizes an entry
    (``None`` for the rationals, ``x % p`` for a prime field).
    """
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pr = rows[r]
        width = len(pr)
        f = inv(pr[c])
        if reduce is None:
            pr[c:] = [x * f for x in pr[c:]]
        else:
            pr[c:] = [reduce(x * f) for x in pr[c:]]
        for i in range(nrows):
            if i == r:
                continue
            ri = rows[i]
            g = ri[c]
            if not g:
                continue
            if reduce is None:
                for k in range(c, width):
                    if pr[k]:
                        ri[k] -= g * pr[k]
            else:
                for k in range(c, width):
                    if pr[k]:
                        ri[k] = reduce(ri[k] - g * pr[k])
        pivots.append(c)
        r += 1
    return pivots


def _kernel_from_rref(rows: list[list], pivots: list[int], ncols: int, neg, one, zero) -> list[list]:
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for r, pc in enumerate(pivots):
            v[pc] = neg(rows[r][f])
        basis.append(v)
    return basis


def rank(m: RationalMatrix) -> int:
    """Rank over the rationals by exact Gaussian elimination."""
    if m.rows == 0 or m.cols == 0:
        return 0
    rows = m.to_rows()
    return len(_echelon(rows, m.cols, lambda x: 1 / x))


def kernel_basis(m: RationalMatrix) -> RationalMatrix:
    """Columns of the result form a basis of the null space of ``m``."""
    if m.cols == 0:
        return RationalMatrix.zeros(0, 0)
    rows = m.to_rows()
    pivots = _echelon(rows, m.cols, lambda x: 1 / x) if rows else []
    vecs = _kernel_from_rref(rows, pivots, m.cols, lambda x: -x, Fraction(1), Fraction(0))
    return RationalMatrix.from_columns(vecs, m.cols)


def solve(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    """Return one exact ``x`` with ``a @ x == b``; raise ValueError if inconsistent."""
    if a.rows != b.rows:
        raise ValueError("row count mismatch")
    n = a.cols
    aug = [list(a.row(i)) + list(b.row(i)) for i in range(a.rows)]
    pivots = _echelon(aug, n, lambda x: 1 / x)
    # Pivots are restricted to the first n columns, so any nonzero tail in a
    # zero row of the coefficient block means inconsistency.
    for r in range(len(pivots), a.rows):
        if any(aug[r][n:]):
            raise ValueError("inconsistent system")
    out = [[Fraction(0)] * b.cols for _ in range(n)]
    for r, pc in enumerate(pivots):
        out[pc] = list(aug[r][n:])
    return RationalMatrix.from_rows(out, b.cols)


def _mod_rows(rows: Iterable[Sequence[int]], p: int) -> list[list[int]]:
    return [[int(x) % p for x in r] for r in rows]


def rank_mod(rows: Sequence[Sequence[int]], ncols: int, p: int) -> int:
    """Rank over the prime field F_p of an integer matrix given by rows."""
    work = _mod_rows(rows, p)
    if not work or ncols == 0:
        return 0
    return len(_echelon(work, ncols, lambda x: pow(x, -1, p), lambda x: x % p))


def kernel_mod(rows: Sequence[Sequence[int]], ncols: int, p: int) -> list[list[int]]:
    """Basis (list of vectors) of the null space over F_p."""
    work = _mod_rows(rows, p)
    pivots = _echelon(work, ncols, lambda x: pow(x, -1, p), lambda x: x % p) if work else []
    return _kernel_from_rref(work, pivots, ncols, lambda x: (-x) % p, 1, 0)
