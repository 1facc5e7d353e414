"""Dimension formulas, harmonic bases, and the Fischer decomposition.

A spherical harmonic of degree k is a homogeneous polynomial killed by the
super Laplacian.  When the super-dimension M = m - 2n avoids {0, -2, ...}
(or m == 0), homogeneous polynomials split as

    P_k = (+)_i  x^(2i) H_(k-2i),      i = 0 .. floor(k/2),

and two families of projectors realize the splitting: an explicit
polynomial in x^2 and laplace per ladder index, and a product of shifted
Laplace-Beltrami factors that returns whole summands x^(2i) H_(k-2i).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .core import (
    CollisionError,
    DegreeError,
    PoleError,
    SpaceParams,
    SuperPolynomial,
    monomial_basis,
)
from .operators import laplace, laplace_beltrami, mul_r2


def poly_space_dim(params: SpaceParams, k: int) -> int:
    """dim P_k = sum_i C(2n, i) C(k - i + m - 1, m - 1); zero for k < 0."""
    if k < 0:
        return 0
    m, n = params.m, params.n
    if m == 0:
        return math.comb(2 * n, k) if k <= 2 * n else 0
    return sum(
        math.comb(2 * n, i) * math.comb(k - i + m - 1, m - 1)
        for i in range(min(k, 2 * n) + 1)
    )


def harmonic_space_dim(params: SpaceParams, k: int) -> int:
    """dim H_k = dim P_k - dim P_(k-2) for m >= 1; fermionic formula for m == 0."""
    if k < 0:
        return 0
    if params.m == 0:
        return fermionic_harmonic_dim(params.n, k)
    return poly_space_dim(params, k) - poly_space_dim(params, k - 2)


def bosonic_harmonic_dim(m: int, k: int) -> int:
    if k < 0:
        return 0
    if m == 0:
        return 1 if k == 0 else 0
    return math.comb(k + m - 1, m - 1) - (
        math.comb(k + m - 3, m - 1) if k >= 2 else 0
    )


def fermionic_harmonic_dim(n: int, k: int) -> int:
    """dim of the kernel of laplace_f on fermionic degree k; zero beyond k = n."""
    if k < 0 or k > n:
        return 0
    return math.comb(2 * n, k) - (math.comb(2 * n, k - 2) if k >= 2 else 0)


def is_harmonic(p: SuperPolynomial) -> bool:
    return laplace(p).is_zero()


def harmonic_basis(params: SpaceParams, k: int) -> list[SuperPolynomial]:
    """Exact rational basis of the degree-k harmonics, via the nullspace of
    the Laplacian's matrix from degree k to degree k - 2 monomials."""
    basis_k = monomial_basis(params, k)
    if not basis_k:
        return []
    if k < 2:
        return [
            SuperPolynomial(params, {mono: Fraction(1)}) for mono in basis_k
        ]
    basis_lo = monomial_basis(params, k - 2)
    index_lo = {mono: r for r, mono in enumerate(basis_lo)}
    rows = [[Fraction(0)] * len(basis_k) for _ in basis_lo]
    for c, mono in enumerate(basis_k):
        image = laplace(SuperPolynomial(params, {mono: Fraction(1)}))
        for mono_lo, val in image.terms.items():
            rows[index_lo[mono_lo]][c] = val
    kernel = linalg.nullspace(rows, ncols=len(basis_k))
    return [
        SuperPolynomial(params, {basis_k[c]: v for c, v in enumerate(vec) if v != 0})
        for vec in kernel
    ]


def _homogeneous_degree(R: SuperPolynomial) -> int:
    k = R.homogeneous_degree()
    if k is None:
        raise DegreeError("input must be homogeneous and nonzero")
    return k


def _projector_coefficient(params: SpaceParams, k: int, i: int, l: int) -> Fraction:
    """Coefficient of x^(2l) laplace^(i+l) in the ladder projector.

    The textbook form (k - 2i + M/2 - 1) Gamma(k-2i-l-1+M/2) / Gamma(k-i+M/2)
    is evaluated with the vanishing numerator factor cancelled against the
    matching pole, i.e. as 1 / prod_{t != l} (a + t) with
    a = M/2 + k - 2i - l - 1; this equals the analytic continuation wherever
    the direct expression is 0 * inf.  A genuinely vanishing denominator
    factor is a real pole (M in -2N) and raises.
    """
    a = Fraction(params.M, 2) + (k - 2 * i - l - 1)
    denom = Fraction(4**(l + i)) * math.factorial(l) * math.factorial(i)
    for t in range(i + l + 1):
        if t == l:
            continue
        factor = a + t
        if factor == 0:
            raise PoleError(
                f"ladder projector undefined: M = {params.M} lies in -2N"
            )
        denom *= factor
    sign = -1 if l % 2 else 1
    return Fraction(sign) / denom


def fischer_project(R: SuperPolynomial, i: int) -> SuperPolynomial:
    """Harmonic component of ladder index i: the unique H with
    R = ... + x^(2i) H + ..., extracted by sum_l c_l x^(2l) laplace^(i+l).

    Coefficients are evaluated lazily, so terms whose operator part already
    annihilates R never touch a Gamma pole; a required pole raises PoleError.
    """
    if R.is_zero():
        return R
    k = _homogeneous_degree(R)
    if not 0 <= 2 * i <= k:
        raise ValueError(f"ladder index {i} out of range for degree {k}")
    params = R.params
    cur = R
    for _ in range(i):
        cur = laplace(cur)
    out = SuperPolynomial.zero(params)
    r2l = SuperPolynomial.one(params)
    for l in range(k // 2 - i + 1):
        if cur.is_zero():
            break
        c = _projector_coefficient(params, k, i, l)
        out = out + (r2l * cur) * c
        cur = laplace(cur)
        r2l = mul_r2(r2l)
    return out


def fischer_project_lb(R: SuperPolynomial, i: int) -> SuperPolynomial:
    """Whole ladder summand x^(2i) H_(k-2i), via the product of normalized
    Laplace-Beltrami factors over the other eigenvalues."""
    if R.is_zero():
        return R
    k = _homogeneous_degree(R)
    if not 0 <= 2 * i <= k:
        raise ValueError(f"ladder index {i} out of range for degree {k}")
    M = R.params.M
    out = R
    for l in range(k // 2 + 1):
        if l == i:
            continue
        denom = 2 * (i - l) * (2 * k - 2 * i - 2 * l + M - 2)
        if denom == 0:
            raise CollisionError(
                f"Laplace-Beltrami eigenvalues collide for degrees {k - 2 * i} "
                f"and {k - 2 * l} at M = {M}"
            )
        shift = (k - 2 * l) * (M - 2 + k - 2 * l)
        out = (laplace_beltrami(out) + out * shift) * Fraction(1, denom)
    return out


@dataclass(frozen=True)
class FischerComponent:
    """One ladder summand: the harmonic sitting under x^(2i)."""

    i: int
    harmonic: SuperPolynomial


@dataclass(frozen=True)
class DecompositionReport:
    """Ladder components of one homogeneous polynomial.

    `ladder` names the multiplication that reassembles the input: "r2" for
    the full squared norm, "rf2" when a purely fermionic input over m > 0
    was split along the fermionic norm (for m == 0 the two coincide).
    """

    k: int
    components: list[FischerComponent]
    ladder: str = "r2"

    def reconstruct(self, params: SpaceParams) -> SuperPolynomial:
        from .operators import mul_rf2

        step = mul_rf2 if self.ladder == "rf2" else mul_r2
        total = SuperPolynomial.zero(params)
        for comp in self.components:
            piece = comp.harmonic
            for _ in range(comp.i):
                piece = step(piece)
            total = total + piece
        return total

    def to_json(self) -> dict:
        from .parsing import poly_to_json

        obj = {
            "k": self.k,
            "components": [
                {"i": c.i, "harmonic": poly_to_json(c.harmonic)}
                for c in self.components
            ],
        }
        if self.ladder != "r2":
            obj["ladder"] = self.ladder
        return obj


def fischer_decompose(R: SuperPolynomial) -> DecompositionReport:
    """Split a homogeneous polynomial into its ladder of harmonics.

    Components with zero harmonic part are omitted.  For m == 0 the
    fermionic ladder (powers of the fermionic squared norm) is used.
    """
    if R.is_zero():
        return DecompositionReport(0, [])
    if R.params.m == 0:
        from .irreps import fermionic_fischer_decompose

        return fermionic_fischer_decompose(R)
    k = _homogeneous_degree(R)
    components = []
    for i in range(k // 2 + 1):
        h = fischer_project(R, i)
        if not h.is_zero():
            components.append(FischerComponent(i, h))
    report = DecompositionReport(k, components)
    if report.reconstruct(R.params) != R:
        raise RuntimeError(
            "internal invariant violation: Fischer reconstruction mismatch"
        )
    return report
