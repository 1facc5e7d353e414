"""Integration over the supersphere and the full superspace.

The supersphere is the formal locus x^2 = -1.  A supersphere integral is a
linear functional T with T(x^2 f) = -T(f) that is invariant under
SO(m) x Sp(2n); these form an (n+1)-dimensional space (for m >= 2) spanned
by the component integrals int_i, calibrated here against the normalized
radial factors:  int_i fhat_(j,0,0) = delta_ij.

Distinguished members:

  * pizzetti: the weight-(a_0) choice scaled to the bosonic sphere area,
        int_SS R = sum_k (-1)^k 2 pi^(M/2) / (4^k k! Gamma(k + M/2))
                   (laplace^k R)(0),
    the unique supersphere integral orthogonalizing harmonics of
    different degrees.

  * integral_one: the weight-(a_1) choice in closed form, normalized so
    that int_1 fhat_(1,0,0) = 1.

  * superspace_pizzetti / berezin: the two equivalent forms of the
    superspace integral of R exp(x^2),
        pi^(M/2) (exp(-laplace/4) R)(0)
      = pi^(-n) * (Lebesgue integral over R^m) of the top fermionic
        coefficient of R exp(x^2),
    with bosonic Gaussian moments taken exactly via half-integer Gamma
    values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .core import (
    DegreeError,
    NotHarmonicError,
    PiScaledValue,
    PoleError,
    SpaceParams,
    SuperPolynomial,
    frac,
    gamma_half,
    gamma_ratio,
    monomial_basis,
)
from .fischer import fischer_project, is_harmonic
from .groups import (
    rotation_derivation,
    so_generator_pairs,
    sp_generator_basis,
    symplectic_derivation,
)
from .irreps import IrrepComponent
from .operators import (
    apply_power,
    exp_neg_quarter_laplace,
    laplace,
    laplace_b,
    mul_r2,
    mul_rf2,
)


def _require_sphere_params(params: SpaceParams) -> None:
    if params.m < 1:
        raise PoleError("supersphere integrals need at least one bosonic variable")


def pizzetti(R: SuperPolynomial) -> PiScaledValue:
    """The supersphere integral with T(1) = 2 pi^(M/2) / Gamma(M/2).

    The sum terminates once repeated Laplacians kill R.  Gamma factors are
    taken lazily, only for terms with a nonzero evaluation, so inputs that
    avoid the poles integrate even when M lies in -2N; a required pole
    (for example the constant term when M = 0) raises PoleError.
    """
    params = R.params
    _require_sphere_params(params)
    M = params.M
    total = PiScaledValue.zero()
    cur = R
    k = 0
    while not cur.is_zero():
        val = cur.constant_term()
        if val != 0:
            g = gamma_half(2 * k + M)
            coeff = (
                (-1) ** k * Fraction(2, 4**k * math.factorial(k)) * val / g.coeff
            )
            total = total + PiScaledValue(coeff, M - g.half_pi_exp)
        cur = laplace(cur)
        k += 1
    return total


def pizzetti_scale(params: SpaceParams) -> PiScaledValue:
    """2 pi^(M/2) / Gamma(M/2), the value of the Pizzetti integral at 1."""
    _require_sphere_params(params)
    params.require_fischer_regular()
    g = gamma_half(params.M)
    return PiScaledValue(Fraction(2) / g.coeff, params.M - g.half_pi_exp)


def _component_scale(params: SpaceParams, i: int) -> Fraction:
    # 1 / (rising(m/2, i) * i! * 4^i): calibrates int_i fhat_(i,0,0) = 1
    return Fraction(1) / (gamma_ratio(params.m, i) * math.factorial(i) * 4**i)


def component_integral(R: SuperPolynomial, i: int) -> Fraction:
    """int_i R: the coordinate of R along the i-th one-dimensional piece.

    Each even-degree part R_(2k) contributes (-1)^(k-i) times the constant
    (laplace_b^i applied to the degree-2i harmonic ladder component)(0),
    scaled so that int_i fhat_(j,0,0) = delta_ij.  Projector coefficients
    are evaluated lazily, so inputs whose ladder avoids the Gamma poles
    work even when M lies in -2N.
    """
    params = R.params
    _require_sphere_params(params)
    if i < 0 or i > params.n:
        raise ValueError(f"component index {i} out of range 0..{params.n}")
    scale = _component_scale(params, i)
    total = Fraction(0)
    for degree, bucket in R.degree_buckets().items():
        if degree % 2:
            continue
        k = degree // 2
        if k < i:
            continue
        h = fischer_project(bucket, k - i)
        if h.is_zero():
            continue
        val = apply_power(laplace_b, h, i).constant_term()
        total += (-1) ** (k - i) * scale * val
    return total


@dataclass(frozen=True)
class SphereFunctional:
    """A supersphere integral in the component basis: T = sum_i a_i int_i.

    Weights are exact rationals, one per component 0..n.  Evaluation is
    linear, satisfies T(x^2 f) = -T(f), kills every irreducible piece of
    dimension larger than one, and is invariant under SO(m) x Sp(2n).
    """

    params: SpaceParams
    weights: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        _require_sphere_params(self.params)
        if len(self.weights) != self.params.n + 1:
            raise ValueError(
                f"need {self.params.n + 1} weights, got {len(self.weights)}"
            )
        object.__setattr__(self, "weights", tuple(frac(w) for w in self.weights))

    @classmethod
    def unit(cls, params: SpaceParams, i: int) -> "SphereFunctional":
        w = [Fraction(0)] * (params.n + 1)
        w[i] = Fraction(1)
        return cls(params, tuple(w))

    def integrate(self, R: SuperPolynomial) -> Fraction:
        self.params.check_matches(R.params)
        return sum(
            (
                a * component_integral(R, i)
                for i, a in enumerate(self.weights)
                if a != 0
            ),
            Fraction(0),
        )

    def to_json(self) -> dict:
        from .parsing import weights_to_json

        return weights_to_json(self.weights)


def integral_one(R: SuperPolynomial) -> Fraction:
    """Closed form of the component integral int_1, normalized so that
    int_1 fhat_(1,0,0) = 1:

        int_1 R = sum_(k>=1) (-1)^(k-1) /
                  (m M 4^k (k-1)! rising(M/2+2, k-1))
                  * (laplace_b (2M laplace^(k-1) - x^2 laplace^k) R)(0).

    Needs m >= 1, n >= 1, and M outside -2N.
    """
    params = R.params
    _require_sphere_params(params)
    if params.n < 1:
        raise ValueError("int_1 needs at least one fermionic pair")
    params.require_fischer_regular()
    M = params.M
    total = Fraction(0)
    prev = R  # laplace^(k-1) R
    k = 1
    while not prev.is_zero():
        bracket = laplace_b(prev * (2 * M) - mul_r2(laplace(prev)))
        val = bracket.constant_term()
        if val != 0:
            denom = (
                Fraction(params.m * M)
                * 4**k
                * math.factorial(k - 1)
                * gamma_ratio(M + 4, k - 1)
            )
            total += (-1) ** (k - 1) * val / denom
        prev = laplace(prev)
        k += 1
    return total


def berezin(R: SuperPolynomial) -> PiScaledValue:
    """Berezin form of the superspace integral of R exp(x^2):

        pi^(-n) * int_(R^m) dV  d/de_2n ... d/de_1 (R exp(x^2)).

    The fermionic factor exp(xf^2) is a finite sum; the top derivative
    chain extracts the coefficient of e_1 e_2 ... e_2n, and each bosonic
    coordinate integrates exactly by Gamma((a+1)/2) for even powers x^(2a)
    against exp(-x^2), odd powers vanishing.
    """
    params = R.params
    exp_rf2 = SuperPolynomial.zero(params)
    power = SuperPolynomial.one(params)
    for i in range(params.n + 1):
        exp_rf2 = exp_rf2 + power * Fraction(1, math.factorial(i))
        power = mul_rf2(power)
    expanded = R * exp_rf2
    top = tuple(range(1, 2 * params.n + 1))
    total = PiScaledValue.zero()
    for mono, c in expanded.terms.items():
        if mono.ferm != top:
            continue
        if any(e % 2 for e in mono.bos):
            continue
        moment = PiScaledValue(c, 0)
        for e in mono.bos:
            moment = moment * gamma_half(e + 1)
        total = total + moment
    return total * PiScaledValue(Fraction(1), -2 * params.n)


def superspace_pizzetti(R: SuperPolynomial) -> PiScaledValue:
    """Pizzetti form of the superspace integral of R exp(x^2):
    pi^(M/2) times the constant term of exp(-laplace/4) R."""
    c = exp_neg_quarter_laplace(R).constant_term()
    return PiScaledValue(c, R.params.M)


def orthogonality_check(
    hk: SuperPolynomial, hl: SuperPolynomial, T: SphereFunctional
) -> bool:
    """True iff T vanishes on both products of the two harmonics."""
    for h in (hk, hl):
        if h.homogeneous_degree() is None:
            raise DegreeError("inputs must be homogeneous and nonzero")
        if not is_harmonic(h):
            raise NotHarmonicError("inputs must be harmonic")
    return T.integrate(hk * hl) == 0 and T.integrate(hl * hk) == 0


def irrep_orthogonality_check(a: IrrepComponent, b: IrrepComponent) -> bool:
    """Pizzetti-orthogonality of two irreducible pieces with distinct labels."""
    if a.label == b.label:
        raise ValueError("labels must be distinct")
    return pizzetti(a.part * b.part).is_zero()


def invariant_functional_space_dim(
    params: SpaceParams, degree_cap: int | None = None
) -> int:
    """Brute-force dimension of the space of linear functionals on
    polynomials of degree <= degree_cap satisfying T(x^2 f) = -T(f) and
    infinitesimal SO(m) x Sp(2n) invariance.

    Per degree, the invariant functionals are the annihilator of the span
    of all generator images; the squared-norm relation then couples
    consecutive even degrees.  The cap must be at least 2n + 2 so every
    one-dimensional piece and its first ladder relation are visible; the
    default 2n + 4 adds one spare rung.
    """
    if params.m < 1:
        raise ValueError("oracle needs at least one bosonic variable")
    if degree_cap is None:
        degree_cap = 2 * params.n + 4
    if degree_cap < 2 * params.n + 2:
        raise ValueError(f"degree cap {degree_cap} too small, need >= {2 * params.n + 2}")
    bases = {d: monomial_basis(params, d) for d in range(degree_cap + 1)}
    indexes = {
        d: {mono: i for i, mono in enumerate(basis)} for d, basis in bases.items()
    }
    sp_basis = sp_generator_basis(params.n)
    annihilators: dict[int, list[linalg.Vector]] = {}
    for d, basis in bases.items():
        acc = linalg.EchelonAccumulator()
        idx = indexes[d]
        for mono in basis:
            p = SuperPolynomial(params, {mono: Fraction(1)})
            images = [
                rotation_derivation(p, i, j) for i, j in so_generator_pairs(params.m)
            ]
            images.extend(symplectic_derivation(p, K) for K in sp_basis)
            for img in images:
                if not img.is_zero():
                    acc.add({idx[mo]: c for mo, c in img.terms.items()})
        annihilators[d] = acc.nullspace(len(basis))
    offsets: dict[int, int] = {}
    total_unknowns = 0
    for d in range(degree_cap + 1):
        offsets[d] = total_unknowns
        total_unknowns += len(annihilators[d])
    constraints = linalg.EchelonAccumulator()
    for d in range(degree_cap - 1):
        if not annihilators[d] and not annihilators[d + 2]:
            continue
        idx_hi = indexes[d + 2]
        for mono in bases[d]:
            row: dict[int, Fraction] = {}
            f = SuperPolynomial(params, {mono: Fraction(1)})
            shifted = mul_r2(f)
            for alpha, vec in enumerate(annihilators[d + 2]):
                coeff = sum(
                    (vec[idx_hi[mo]] * c for mo, c in shifted.terms.items()),
                    Fraction(0),
                )
                if coeff != 0:
                    row[offsets[d + 2] + alpha] = coeff
            col = indexes[d][mono]
            for beta, vec in enumerate(annihilators[d]):
                if vec[col] != 0:
                    row[offsets[d] + beta] = row.get(
                        offsets[d] + beta, Fraction(0)
                    ) + vec[col]
            if row:
                constraints.add(row)
    return total_unknowns - constraints.rank
