"""Decomposition of spherical harmonics under SO(m) x Sp(2n).

A degree-k harmonic splits into tensor pieces

    H_k = (+)_i H^b_(k-i) (x) H^f_i
          (+)  (+)_(j,l)  fhat_(l, k-2l-j, j) * H^b_(k-2l-j) (x) H^f_j,

where fhat_(l,p,q) is the unique polynomial in the bosonic and fermionic
squared norms, normalized here to leading coefficient 1, that makes
products fhat * (bosonic harmonic of degree p) * (fermionic harmonic of
degree q) harmonic again.  Each piece is picked out by a product of
normalized shifted Laplace-Beltrami factors, one per competing bosonic or
fermionic eigenvalue.

The purely fermionic algebra has its own ladder decomposition by powers of
the fermionic squared norm, valid at degree k <= n directly and at the
mirrored degrees 2n - k via the shifted ladder; bases of the fermionic
harmonics are built recursively by splitting off one pair of generators.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .core import (
    CollisionError,
    DegreeError,
    NotHarmonicError,
    SpaceParams,
    SuperPolynomial,
    gamma_ratio,
    monomial_basis,
)
from .fischer import (
    DecompositionReport,
    FischerComponent,
    bosonic_harmonic_dim,
    fermionic_harmonic_dim,
    harmonic_space_dim,
)
from .operators import (
    laplace,
    laplace_beltrami_b,
    laplace_beltrami_f,
    mul_rf2,
    rb2_poly,
    rf2_poly,
)


@dataclass(frozen=True)
class IrrepLabel:
    """(l, p, q): ladder degree of the radial factor, bosonic harmonic
    degree, fermionic harmonic degree.  The piece lives in H_(2l+p+q)."""

    l: int
    p: int
    q: int

    @property
    def degree(self) -> int:
        return 2 * self.l + self.p + self.q


@dataclass(frozen=True)
class IrrepComponent:
    label: IrrepLabel
    part: SuperPolynomial

    def to_json(self) -> dict:
        from .parsing import poly_to_json

        return {
            "l": self.label.l,
            "p": self.label.p,
            "q": self.label.q,
            "part": poly_to_json(self.part),
        }


def radial_factor(l: int, p: int, q: int, params: SpaceParams) -> SuperPolynomial:
    """The degree-2l polynomial fhat in (xb^2, xf^2), leading coefficient 1,
    whose products with degree-p bosonic and degree-q fermionic harmonics
    are harmonic.

    fhat = sum_i  C(l,i) * rising(m/2+p+l-i, i) / falling(n-q, i)
                  * xb^(2(l-i)) xf^(2i)

    Requires q < n and l <= n - q when l > 0 (higher fermionic powers act
    trivially); l == 0 gives the constant 1.
    """
    if l < 0 or p < 0 or q < 0:
        raise ValueError("negative label")
    if l == 0:
        return SuperPolynomial.one(params)
    if params.m == 0:
        # without bosonic variables no power of the fermionic norm can be
        # completed to a harmonic, so the factor vanishes identically
        raise ValueError("no radial factor with l > 0 when m == 0")
    if q >= params.n:
        raise ValueError(
            f"no radial factor with q = {q} >= n = {params.n} and l > 0"
        )
    if l > params.n - q:
        raise ValueError(f"l = {l} exceeds n - q = {params.n - q}")
    rb, rf = rb2_poly(params), rf2_poly(params)
    total = SuperPolynomial.zero(params)
    for i in range(l + 1):
        falling = Fraction(1)
        for t in range(i):
            falling *= params.n - q - t
        coeff = (
            Fraction(math.comb(l, i))
            * gamma_ratio(params.m + 2 * (p + l - i), i)
            / falling
        )
        total = total + (rb ** (l - i)) * (rf**i) * coeff
    return total


def irrep_labels(params: SpaceParams, k: int) -> list[IrrepLabel]:
    """Admissible labels for H_k, skipping pieces that vanish: tensor
    factors of dimension zero, and the whole radial family when m == 0."""
    labels = []
    n = params.n
    for i in range(min(n, k) + 1):
        if (
            bosonic_harmonic_dim(params.m, k - i) > 0
            and fermionic_harmonic_dim(n, i) > 0
        ):
            labels.append(IrrepLabel(0, k - i, i))
    if params.m == 0:
        return labels
    for j in range(min(n, k - 1)):
        for l in range(1, min(n - j, (k - j) // 2) + 1):
            p = k - 2 * l - j
            if (
                bosonic_harmonic_dim(params.m, p) > 0
                and fermionic_harmonic_dim(n, j) > 0
            ):
                labels.append(IrrepLabel(l, p, j))
    return labels


def _require_harmonic_homogeneous(h: SuperPolynomial) -> int:
    k = h.homogeneous_degree()
    if k is None:
        raise DegreeError("input must be homogeneous and nonzero")
    if not laplace(h).is_zero():
        raise NotHarmonicError("input is not harmonic")
    return k


def irrep_project(h: SuperPolynomial, l: int, q: int) -> SuperPolynomial:
    """Project a degree-k harmonic onto the piece labeled (l, k-2l-q, q).

    The product of bosonic factors runs only over bosonic harmonic degrees
    that actually occur in H_k alongside fermionic degree q, i.e. degrees
    of the same parity as the target with nonzero dimension; eigenvalues
    from the opposite parity class can coincide with the target's when
    m = 1 and must not contribute factors.
    """
    k = _require_harmonic_homogeneous(h)
    params = h.params
    m, n = params.m, params.n
    p0 = k - 2 * l - q
    if l < 0 or q < 0 or p0 < 0 or q > min(n, k):
        raise ValueError(f"label (l={l}, q={q}) not admissible for degree {k}")
    out = h
    for i in range(k + 1):
        if i == p0 or i % 2 != p0 % 2 or bosonic_harmonic_dim(m, i) == 0:
            continue
        denom = (i - p0) * (i + p0 + m - 2)
        if denom == 0:
            raise CollisionError(
                f"bosonic Laplace-Beltrami eigenvalues collide: degrees {i}, {p0}"
            )
        shift = i * (m - 2 + i)
        out = (laplace_beltrami_b(out) + out * shift) * Fraction(1, denom)
        if out.is_zero():
            return out
    for j in range(min(n, k) + 1):
        if j == q:
            continue
        denom = (j - q) * (j + q - 2 * n - 2)
        shift = j * (-2 * n - 2 + j)
        out = (laplace_beltrami_f(out) + out * shift) * Fraction(1, denom)
        if out.is_zero():
            return out
    return out


def irrep_decompose(h: SuperPolynomial) -> list[IrrepComponent]:
    """Split a harmonic into its irreducible pieces; zero pieces omitted.

    The pieces are returned whole (radial factor times tensor product),
    never factored, and sum exactly to the input.
    """
    k = _require_harmonic_homogeneous(h)
    components = []
    total = SuperPolynomial.zero(h.params)
    for label in irrep_labels(h.params, k):
        part = irrep_project(h, label.l, label.q)
        if part.is_zero():
            continue
        components.append(IrrepComponent(label, part))
        total = total + part
    if total != h:
        raise RuntimeError(
            "internal invariant violation: irreducible pieces do not sum back"
        )
    return components


def irrep_dimension_identity(params: SpaceParams, k: int) -> tuple[int, int]:
    """(dim H_k, sum over pieces of dim H^b * dim H^f): equal when the
    decomposition is complete.  At m == 0 the radial family vanishes
    identically and contributes nothing to the right-hand side."""
    lhs = harmonic_space_dim(params, k)
    m, n = params.m, params.n
    rhs = sum(
        bosonic_harmonic_dim(m, k - i) * fermionic_harmonic_dim(n, i)
        for i in range(min(n, k) + 1)
    )
    if m > 0:
        for j in range(min(n, k - 1)):
            for l in range(1, min(n - j, (k - j) // 2) + 1):
                rhs += bosonic_harmonic_dim(
                    m, k - 2 * l - j
                ) * fermionic_harmonic_dim(n, j)
    return lhs, rhs


def fermionic_harmonic_basis(n: int, k: int) -> list[SuperPolynomial]:
    """Basis of the degree-k fermionic harmonics in 2n anticommuting
    variables, built recursively by splitting off the first pair:

        H_k(e1..e2n) = H_k(e3..e2n)
                       + e1 H_(k-1)(e3..) + e2 H_(k-1)(e3..)
                       + [e1 e2 + (e3 e4 + ... ) / (k - n - 1)] H_(k-2)(e3..)

    anchored at H_0 = constants and H_1 = all generators.
    """
    if k < 0:
        raise ValueError("negative degree")
    if k > n:
        raise ValueError(f"fermionic harmonics vanish for degree {k} > n = {n}")
    params = SpaceParams(0, n)
    return _ferm_basis(params, 0, k)


def _ferm_basis(params: SpaceParams, start: int, k: int) -> list[SuperPolynomial]:
    n = params.n
    pairs_left = n - start
    if k > pairs_left:
        return []
    if k == 0:
        return [SuperPolynomial.one(params)]
    if k == 1:
        return [
            SuperPolynomial.e_var(params, j)
            for j in range(2 * start + 1, 2 * n + 1)
        ]
    a = SuperPolynomial.e_var(params, 2 * start + 1)
    b = SuperPolynomial.e_var(params, 2 * start + 2)
    out = list(_ferm_basis(params, start + 1, k))
    for h in _ferm_basis(params, start + 1, k - 1):
        out.append(a * h)
        out.append(b * h)
    tail = sum(
        (
            SuperPolynomial.e_var(params, 2 * t + 1)
            * SuperPolynomial.e_var(params, 2 * t + 2)
            for t in range(start + 1, n)
        ),
        SuperPolynomial.zero(params),
    )
    bracket = a * b + tail * Fraction(1, k - pairs_left - 1)
    for h in _ferm_basis(params, start + 1, k - 2):
        out.append(bracket * h)
    return out


def fermionic_fischer_decompose(R: SuperPolynomial) -> DecompositionReport:
    """Ladder decomposition of a homogeneous element of the Grassmann
    algebra by powers of the fermionic squared norm.

    Degrees d <= n use the plain ladder x_f^(2i) H_(d-2i); degrees d > n
    use the mirrored ladder x_f^(2(n-k)+2i) H_(k-2i) with k = 2n - d.  The
    components are found by one exact linear solve against recursive bases.
    """
    params = R.params
    if params.m > 0:
        if any(any(mono.bos) for mono in R.terms):
            raise ValueError("input must not involve bosonic variables")
        stripped = SuperPolynomial(
            SpaceParams(0, params.n),
            {type(mono)((), mono.ferm): c for mono, c in R.terms.items()},
        )
        inner = fermionic_fischer_decompose(stripped)
        return DecompositionReport(
            inner.k,
            [
                FischerComponent(c.i, c.harmonic.embed(params))
                for c in inner.components
            ],
            ladder="rf2",
        )
    if R.is_zero():
        return DecompositionReport(0, [])
    d = R.homogeneous_degree()
    if d is None:
        raise DegreeError("input must be homogeneous")
    n = params.n
    if d <= n:
        ladder = [(i, d - 2 * i) for i in range(d // 2 + 1)]
    else:
        k = 2 * n - d
        ladder = [(n - k + i, k - 2 * i) for i in range(k // 2 + 1)]
    basis_d = monomial_basis(params, d)
    index = {mono: r for r, mono in enumerate(basis_d)}
    columns: list[list[Fraction]] = []
    blocks: list[tuple[int, list[SuperPolynomial]]] = []
    for power, hdeg in ladder:
        hbasis = fermionic_harmonic_basis(n, hdeg)
        blocks.append((power, hbasis))
        for h in hbasis:
            vec = h
            for _ in range(power):
                vec = mul_rf2(vec)
            col = [Fraction(0)] * len(basis_d)
            for mono, c in vec.terms.items():
                col[index[mono]] = c
            columns.append(col)
    rows = [[col[r] for col in columns] for r in range(len(basis_d))]
    target = [Fraction(0)] * len(basis_d)
    for mono, c in R.terms.items():
        target[index[mono]] = c
    solution = linalg.solve(rows, target)
    if solution is None:
        raise RuntimeError(
            "internal invariant violation: fermionic ladder does not span"
        )
    components = []
    at = 0
    for power, hbasis in blocks:
        harm = SuperPolynomial.zero(params)
        for h in hbasis:
            harm = harm + h * solution[at]
            at += 1
        if not harm.is_zero():
            components.append(FischerComponent(power, harm))
    report = DecompositionReport(d, components, ladder="rf2")
    if report.reconstruct(params) != R:
        raise RuntimeError(
            "internal invariant violation: fermionic reconstruction mismatch"
        )
    return report
