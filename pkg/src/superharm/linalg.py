"""Exact rational linear algebra: elimination, nullspaces, solves, inverses.

Matrices are lists of lists of Fraction.  Everything here is plain
Gauss-Jordan over Q; inputs at desk scale (a few hundred columns) keep this
fast enough, and exactness is what matters.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .core import Rational, frac

Matrix = list[list[Fraction]]
Vector = list[Fraction]


def mat(rows: Sequence[Sequence[Rational]]) -> Matrix:
    return [[frac(x) for x in row] for row in rows]


def identity(k: int) -> Matrix:
    return [[Fraction(1) if i == j else Fraction(0) for j in range(k)] for i in range(k)]


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    if not A or not B:
        return [[] for _ in A]
    cols = len(B[0])
    return [
        [sum((a[t] * B[t][j] for t in range(len(B))), Fraction(0)) for j in range(cols)]
        for a in A
    ]


def transpose(A: Matrix) -> Matrix:
    return [list(col) for col in zip(*A)]


def rref(A: Sequence[Sequence[Rational]]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form; returns (R, pivot column indices)."""
    R = mat(A)
    if not R:
        return [], []
    ncols = len(R[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(R)) if R[i][c] != 0), None)
        if pr is None:
            continue
        R[r], R[pr] = R[pr], R[r]
        inv = 1 / R[r][c]
        R[r] = [x * inv for x in R[r]]
        for i in range(len(R)):
            if i != r and R[i][c] != 0:
                f = R[i][c]
                R[i] = [x - f * y for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == len(R):
            break
    return R, pivots


def nullspace(A: Sequence[Sequence[Rational]], ncols: int | None = None) -> list[Vector]:
    """Basis of {v : A v = 0}.  A may be empty; then ncols is required."""
    rows = mat(A)
    if not rows:
        if ncols is None:
            raise ValueError("ncols required for an empty matrix")
        return [unit_vector(ncols, j) for j in range(ncols)]
    ncols = len(rows[0])
    R, pivots = rref(rows)
    pivot_set = set(pivots)
    basis: list[Vector] = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -R[r][free]
        basis.append(v)
    return basis


def unit_vector(k: int, j: int) -> Vector:
    v = [Fraction(0)] * k
    v[j] = Fraction(1)
    return v


def solve(A: Sequence[Sequence[Rational]], b: Sequence[Rational]) -> Vector | None:
    """One exact solution of A v = b (free variables set to 0), or None."""
    rows = mat(A)
    if not rows:
        return None if any(frac(x) != 0 for x in b) else []
    aug = [row + [frac(bi)] for row, bi in zip(rows, b)]
    R, pivots = rref(aug)
    ncols = len(rows[0])
    if ncols in pivots:
        return None  # inconsistent: pivot in the augmented column
    v = [Fraction(0)] * ncols
    for r, c in enumerate(pivots):
        v[c] = R[r][ncols]
    return v


def mat_inv(A: Sequence[Sequence[Rational]]) -> Matrix:
    k = len(A)
    aug = [list(map(frac, row)) + identity(k)[i] for i, row in enumerate(A)]
    R, pivots = rref(aug)
    if pivots != list(range(k)):
        raise ValueError("matrix is singular")
    return [row[k:] for row in R[:k]]


class EchelonAccumulator:
    """Incremental row echelon over Q with sparse rows (dict col -> value).

    Feeding vectors one by one keeps only independent rows; useful when
    spanning sets are much larger than their rank.
    """

    def __init__(self) -> None:
        self.rows: dict[int, dict[int, Fraction]] = {}  # pivot col -> row

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: dict[int, Fraction]) -> dict[int, Fraction]:
        vec = {c: v for c, v in vec.items() if v != 0}
        while vec:
            lead = min(vec)
            row = self.rows.get(lead)
            if row is None:
                return vec
            f = vec[lead]
            for c, v in row.items():
                s = vec.get(c, Fraction(0)) - f * v
                if s == 0:
                    vec.pop(c, None)
                else:
                    vec[c] = s
        return vec

    def add(self, vec: dict[int, Fraction]) -> bool:
        """Insert a vector; returns True if it enlarged the row space."""
        vec = self.reduce(dict(vec))
        if not vec:
            return False
        lead = min(vec)
        inv = 1 / vec[lead]
        self.rows[lead] = {c: v * inv for c, v in vec.items()}
        return True

    def nullspace(self, ncols: int) -> list[Vector]:
        """Basis of the annihilated column space after full back-substitution."""
        # eliminate above pivots so each pivot column appears in one row only
        for lead in sorted(self.rows, reverse=True):
            row = self.rows[lead]
            for other_lead, other in self.rows.items():
                if other_lead >= lead:
                    continue
                f = other.get(lead)
                if not f:
                    continue
                for c, v in row.items():
                    s = other.get(c, Fraction(0)) - f * v
                    if s == 0:
                        other.pop(c, None)
                    else:
                        other[c] = s
        basis: list[Vector] = []
        for free in range(ncols):
            if free in self.rows:
                continue
            v = [Fraction(0)] * ncols
            v[free] = Fraction(1)
            for lead, row in self.rows.items():
                coeff = row.get(free)
                if coeff:
                    v[lead] = -coeff
            basis.append(v)
        return basis
