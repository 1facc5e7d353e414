"""Rational elements and infinitesimal generators of SO(m) x Sp(2n).

Exact arithmetic needs group elements with rational entries, so finite
rotations and symplectic maps are produced by Cayley transforms
(I - S)(I + S)^-1 of random Lie-algebra elements.  The Lie algebra itself
is used directly for invariance constraints: so(m) is spanned by the
vector fields x_i d/dx_j - x_j d/dx_i, and sp(2n) by the derivations
attached to matrices K with K^T J + J K = 0 for the standard block
antisymmetric J.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .core import SuperPolynomial, diff_e, diff_x, frac


def j_matrix(n: int) -> linalg.Matrix:
    """Block-diagonal [[0,1],[-1,0]] matrix defining the symplectic form.

    Any overall scale of J drops out of the conditions D^T J D = J and
    K^T J + J K = 0, so the 1/2 normalization of the quadratic form is
    irrelevant here.
    """
    J = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
    for j in range(n):
        J[2 * j][2 * j + 1] = Fraction(1)
        J[2 * j + 1][2 * j] = Fraction(-1)
    return J


def so_generator_pairs(m: int) -> list[tuple[int, int]]:
    """Index pairs (i, j), 1-based, i < j, one per rotation generator."""
    return [(i, j) for i in range(1, m + 1) for j in range(i + 1, m + 1)]


@lru_cache(maxsize=None)
def sp_generator_basis(n: int) -> tuple[tuple[tuple[Fraction, ...], ...], ...]:
    """Basis of {K : K^T J + J K = 0} as 2n x 2n rational matrices.

    Computed as the nullspace of the defining linear condition on the
    entries; the dimension is 2n^2 + n.
    """
    if n == 0:
        return ()
    d = 2 * n
    J = j_matrix(n)
    rows = []
    for a in range(d):
        for b in range(d):
            row = [Fraction(0)] * (d * d)
            # (K^T J + J K)[a][b] = sum_t K[t][a] J[t][b] + J[a][t] K[t][b]
            for t in range(d):
                row[t * d + a] += J[t][b]
                row[t * d + b] += J[a][t]
            rows.append(row)
    basis = linalg.nullspace(rows)
    mats = tuple(
        tuple(tuple(v[r * d + c] for c in range(d)) for r in range(d)) for v in basis
    )
    assert len(mats) == 2 * n * n + n
    return mats


def rotation_derivation(p: SuperPolynomial, i: int, j: int) -> SuperPolynomial:
    """Action of the so(m) generator x_i d/dx_j - x_j d/dx_i."""
    params = p.params
    xi = SuperPolynomial.x_var(params, i)
    xj = SuperPolynomial.x_var(params, j)
    return xi * diff_x(p, j) - xj * diff_x(p, i)


def symplectic_derivation(p: SuperPolynomial, K) -> SuperPolynomial:
    """Action of the sp(2n) element K: sum_j (K e)_j * d/de_j, left products."""
    params = p.params
    d = 2 * params.n
    out = SuperPolynomial.zero(params)
    for j in range(d):
        dj = diff_e(p, j + 1)
        if dj.is_zero():
            continue
        img = sum(
            (
                SuperPolynomial.e_var(params, l + 1) * frac(K[j][l])
                for l in range(d)
                if K[j][l]
            ),
            SuperPolynomial.zero(params),
        )
        out = out + img * dj
    return out


def cayley(S: linalg.Matrix) -> linalg.Matrix:
    """(I - S)(I + S)^-1; raises ValueError when I + S is singular."""
    if not S:
        return []
    k = len(S)
    I = linalg.identity(k)
    plus = [[I[i][j] + S[i][j] for j in range(k)] for i in range(k)]
    minus = [[I[i][j] - S[i][j] for j in range(k)] for i in range(k)]
    return linalg.mat_mul(minus, linalg.mat_inv(plus))


def _small_fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-3, 3), rng.randint(1, 3))


def random_special_orthogonal(rng: random.Random, m: int) -> linalg.Matrix:
    """Rational element of SO(m) via the Cayley transform of a random
    antisymmetric matrix (always invertible for real antisymmetric S)."""
    S = [[Fraction(0)] * m for _ in range(m)]
    for i, j in itertools.combinations(range(m), 2):
        v = _small_fraction(rng)
        S[i][j] = v
        S[j][i] = -v
    return cayley(S)


def random_symplectic(rng: random.Random, n: int) -> linalg.Matrix:
    """Rational element of Sp(2n); retries until I + K is invertible."""
    if n == 0:
        return []
    basis = sp_generator_basis(n)
    while True:
        K = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
        for B in basis:
            c = Fraction(rng.randint(-2, 2), rng.randint(1, 3))
            if c == 0:
                continue
            for r in range(2 * n):
                for s in range(2 * n):
                    K[r][s] += c * B[r][s]
        try:
            return cayley(K)
        except ValueError:
            continue


def is_orthogonal(A: linalg.Matrix) -> bool:
    return linalg.mat_mul(linalg.transpose(A), A) == linalg.identity(len(A))


def is_symplectic(D: linalg.Matrix, n: int) -> bool:
    J = j_matrix(n)
    return linalg.mat_mul(linalg.mat_mul(linalg.transpose(D), J), D) == J
