import math
import random
from fractions import Fraction

import pytest

from superharm.core import (
    PiScaledValue,
    PoleError,
    SpaceParams,
    SuperPolynomial,
    gamma_half,
    substitute_linear,
)
from superharm.fischer import harmonic_basis
from superharm.groups import random_special_orthogonal, random_symplectic
from superharm.irreps import (
    fermionic_harmonic_basis,
    irrep_decompose,
    irrep_labels,
    radial_factor,
)
from superharm.operators import apply_power, laplace, laplace_b, mul_r2, r2_poly
from superharm.parsing import poly_from_text
from superharm.rand import random_harmonic, random_polynomial
from superharm.sphere import (
    SphereFunctional,
    berezin,
    component_integral,
    integral_one,
    invariant_functional_space_dim,
    irrep_orthogonality_check,
    orthogonality_check,
    pizzetti,
    pizzetti_scale,
    superspace_pizzetti,
)

SPHERE_GRID = [(1, 1), (3, 1), (3, 2), (1, 2), (2, 0)]


def test_pizzetti_normalization():
    for m, n in SPHERE_GRID:
        P = SpaceParams(m, n)
        assert pizzetti(SuperPolynomial.one(P)) == pizzetti_scale(P)
    # classical sphere areas: circle 2 pi, sphere 4 pi
    assert pizzetti(SuperPolynomial.one(SpaceParams(2, 0))) == PiScaledValue(2, 2)
    assert pizzetti(SuperPolynomial.one(SpaceParams(3, 0))) == PiScaledValue(4, 2)
    # normalization identity as PiScaledValue arithmetic
    for m, n in SPHERE_GRID:
        P = SpaceParams(m, n)
        g = gamma_half(P.M)
        ratio = pizzetti(SuperPolynomial.one(P)) * g / PiScaledValue(2, P.M)
        assert ratio == PiScaledValue(1, 0)


def test_pizzetti_pole():
    with pytest.raises(PoleError):
        pizzetti(SuperPolynomial.one(SpaceParams(2, 1)))
    with pytest.raises(PoleError):
        pizzetti(SuperPolynomial.one(SpaceParams(0, 1)))


def test_pizzetti_modulo_sphere():
    rng = random.Random(41)
    for m, n in SPHERE_GRID:
        P = SpaceParams(m, n)
        for _ in range(10):
            f = random_polynomial(rng, P, 4)
            assert pizzetti(mul_r2(f)) == -pizzetti(f)


def test_pizzetti_kills_positive_degree_harmonics():
    for m, n in SPHERE_GRID:
        P = SpaceParams(m, n)
        for k in range(1, 4):
            for h in harmonic_basis(P, k)[:3]:
                assert pizzetti(h).is_zero()


def test_pizzetti_group_invariance():
    rng = random.Random(42)
    for m, n in [(1, 1), (3, 1), (3, 2)]:
        P = SpaceParams(m, n)
        for _ in range(5):
            A = random_special_orthogonal(rng, m)
            D = random_symplectic(rng, n)
            f = random_polynomial(rng, P, 4)
            assert pizzetti(substitute_linear(f, A, D)) == pizzetti(f)


def test_component_calibration():
    # int_i fhat_j = delta_ij, including the degenerate M = -2 space (2,2)
    for m, n in [(2, 2), (3, 2), (3, 1), (4, 3)]:
        P = SpaceParams(m, n)
        for i in range(n + 1):
            for j in range(n + 1):
                f = (
                    SuperPolynomial.one(P)
                    if j == 0
                    else radial_factor(j, 0, 0, P)
                )
                assert component_integral(f, i) == (1 if i == j else 0)


def test_pizzetti_is_scaled_component_zero():
    rng = random.Random(43)
    for m, n in [(1, 1), (3, 1), (3, 2)]:
        P = SpaceParams(m, n)
        scale = pizzetti_scale(P)
        for _ in range(12):
            f = random_polynomial(rng, P, 5)
            assert pizzetti(f) == scale * component_integral(f, 0)


def test_functional_requires_full_weight_vector():
    with pytest.raises(ValueError):
        SphereFunctional(SpaceParams(3, 1), (Fraction(1),))
    with pytest.raises(PoleError):
        SphereFunctional(SpaceParams(0, 1), (Fraction(1), Fraction(0)))


def test_functional_modulo_sphere_and_linearity():
    rng = random.Random(44)
    for m, n in [(1, 1), (3, 2)]:
        P = SpaceParams(m, n)
        T = SphereFunctional(
            P, tuple(Fraction(rng.randint(-3, 3), 2) for _ in range(n + 1))
        )
        for _ in range(8):
            f = random_polynomial(rng, P, 4)
            g = random_polynomial(rng, P, 4)
            assert T.integrate(mul_r2(f)) == -T.integrate(f)
            assert T.integrate(f + g) == T.integrate(f) + T.integrate(g)


def test_functional_group_invariance():
    rng = random.Random(45)
    P = SpaceParams(3, 1)
    T = SphereFunctional(P, (Fraction(2), Fraction(-1, 3)))
    for _ in range(5):
        A = random_special_orthogonal(rng, P.m)
        D = random_symplectic(rng, P.n)
        f = random_polynomial(rng, P, 4)
        assert T.integrate(substitute_linear(f, A, D)) == T.integrate(f)


def test_functional_kills_higher_dimensional_pieces():
    for P in (SpaceParams(3, 1), SpaceParams(3, 2)):
        T = SphereFunctional(
            P, tuple(Fraction(j + 1) for j in range(P.n + 1))
        )
        for k in range(1, 4):
            for label in irrep_labels(P, k):
                f = radial_factor(label.l, label.p, label.q, P)
                hb = harmonic_basis(SpaceParams(P.m, 0), label.p)[0].embed(P)
                hf = fermionic_harmonic_basis(P.n, label.q)[0].embed(P)
                piece = f * hb * hf
                # pieces of dimension > 1 integrate to zero under every T
                if (label.p, label.q) != (0, 0):
                    assert T.integrate(piece) == 0


def test_integral_one_calibration_and_laws():
    rng = random.Random(46)
    for m, n in [(1, 1), (3, 1), (4, 1), (3, 2)]:
        P = SpaceParams(m, n)
        fhat = radial_factor(1, 0, 0, P)
        assert integral_one(fhat) == 1
        assert integral_one(SuperPolynomial.one(P)) == 0
        for _ in range(6):
            f = random_polynomial(rng, P, 4)
            assert integral_one(mul_r2(f)) == -integral_one(f)
            assert integral_one(f) == component_integral(f, 1)


def test_integral_one_closed_form_matches_simplified_display():
    # the bracket laplace_b(2M laplace^(k-1) - x^2 laplace^k) evaluated at 0
    # equals (2M laplace_b laplace^(k-1) - 2m laplace^k)(0)
    rng = random.Random(47)
    P = SpaceParams(3, 1)
    M = P.M
    for _ in range(12):
        R = random_polynomial(rng, P, 5)
        for k in range(1, 4):
            prev = apply_power(laplace, R, k - 1)
            lhs = laplace_b(prev * (2 * M) - mul_r2(laplace(prev))).constant_term()
            rhs = (
                2 * M * laplace_b(prev).constant_term()
                - 2 * P.m * laplace(prev).constant_term()
            )
            assert lhs == rhs


def test_integral_one_paper_scale_regression():
    # with the leading coefficient n!/Gamma(m/2+1) restored (even m keeps it
    # rational), the degree-2 calibration value of the closed formula carries
    # the constant Gamma(2+M/2) Gamma(1+m/2) / (m M n!) times 4; the printed
    # form without the extra 4 would give 1/4 here
    P = SpaceParams(4, 1)
    m, M, n = P.m, P.M, P.n
    fhat = radial_factor(1, 0, 0, P)
    lead = Fraction(math.factorial(n)) / math.factorial(m // 2)  # n!/Gamma(m/2+1)
    f_paper = fhat * lead
    c_paper = (
        Fraction(math.factorial(1 + M // 2))
        * math.factorial(m // 2)
        / (m * M * math.factorial(n))
    )
    # k = 1 term of the displayed sum, with its 4^(k+1) (k-1)! Gamma(k+M/2+1)
    bracket = laplace_b(f_paper * (2 * M) - mul_r2(laplace(f_paper))).constant_term()
    displayed = c_paper * bracket / (4**2 * 1 * math.factorial(M // 2 + 1))
    assert displayed == Fraction(1, 4)
    assert 4 * displayed == 1 == integral_one(fhat)


def test_berezin_examples():
    P01 = SpaceParams(0, 1)
    assert berezin(poly_from_text("e1*e2", P01)) == PiScaledValue(1, -2)
    assert berezin(SuperPolynomial.one(SpaceParams(1, 0))) == PiScaledValue(1, 1)
    assert berezin(SuperPolynomial.zero(P01)) == PiScaledValue.zero()
    assert superspace_pizzetti(poly_from_text("e1*e2", P01)) == PiScaledValue(1, -2)
    assert superspace_pizzetti(
        SuperPolynomial.one(SpaceParams(2, 1))
    ) == PiScaledValue(1, 0)
    # pure Gaussian in two variables: pi
    assert berezin(SuperPolynomial.one(SpaceParams(2, 0))) == PiScaledValue(1, 2)


def test_berezin_equals_superspace_pizzetti():
    rng = random.Random(48)
    for m in range(3):
        for n in range(3):
            P = SpaceParams(m, n)
            for _ in range(12):
                R = random_polynomial(rng, P, 6)
                assert superspace_pizzetti(R) == berezin(R)


def test_orthogonality_checks():
    for m, n in [(3, 1), (1, 1)]:
        P = SpaceParams(m, n)
        T0 = SphereFunctional.unit(P, 0)
        T1 = SphereFunctional.unit(P, 1)
        one = SuperPolynomial.one(P)
        fhat = radial_factor(1, 0, 0, P)
        assert orthogonality_check(one, fhat, T0)
        assert not orthogonality_check(one, fhat, T1)
        rng = random.Random(49)
        for k in range(3):
            for l in range(3):
                if k == l:
                    continue
                hk = random_harmonic(rng, P, k)
                hl = random_harmonic(rng, P, l)
                if hk.is_zero() or hl.is_zero():
                    continue
                assert orthogonality_check(hk, hl, T0)


def test_orthogonality_check_validates_inputs():
    P = SpaceParams(3, 1)
    T = SphereFunctional.unit(P, 0)
    from superharm.core import NotHarmonicError

    with pytest.raises(NotHarmonicError):
        orthogonality_check(r2_poly(P), SuperPolynomial.one(P), T)


def test_irrep_orthogonality():
    P = SpaceParams(2, 1)
    comps_a = irrep_decompose(poly_from_text("x1*x2", P))
    comps_b = irrep_decompose(radial_factor(1, 0, 0, P))
    assert irrep_orthogonality_check(comps_a[0], comps_b[0])
    with pytest.raises(ValueError):
        irrep_orthogonality_check(comps_a[0], comps_a[0])
    # distinct purely bosonic degrees
    P31 = SpaceParams(3, 1)
    a = irrep_decompose(poly_from_text("x1*x2", P31))[0]
    b = irrep_decompose(poly_from_text("x1", P31))[0]
    assert irrep_orthogonality_check(a, b)


def test_invariant_functional_space_dimension():
    assert invariant_functional_space_dim(SpaceParams(2, 1), 6) == 2
    assert invariant_functional_space_dim(SpaceParams(3, 1), 6) == 2
    assert invariant_functional_space_dim(SpaceParams(2, 0), 4) == 1
    with pytest.raises(ValueError):
        invariant_functional_space_dim(SpaceParams(3, 1), 2)


def test_invariant_dim_exceeds_prediction_with_one_bosonic_variable():
    # at m = 1 the odd-degree bosonic harmonics are one-dimensional too, so
    # the functional space is larger than n + 1; kept as a regression value
    assert invariant_functional_space_dim(SpaceParams(1, 1), 6) == 4
