"""Exact harmonic analysis with commuting and anticommuting variables:
polynomial algebra, super Laplacians, Fischer and orthosymplectic
decompositions, and the supersphere / superspace integrals."""

from .core import (
    CollisionError,
    DegreeError,
    NotHarmonicError,
    ParseError,
    PiScaledValue,
    PoleError,
    SpaceParams,
    SuperMonomial,
    SuperPolynomial,
    diff_e,
    diff_x,
    gamma_half,
    gamma_ratio,
    mono_mul,
    monomial_basis,
    substitute_linear,
)
from .fischer import (
    DecompositionReport,
    FischerComponent,
    bosonic_harmonic_dim,
    fermionic_harmonic_dim,
    fischer_decompose,
    fischer_project,
    fischer_project_lb,
    harmonic_basis,
    harmonic_space_dim,
    is_harmonic,
    poly_space_dim,
)
from .irreps import (
    IrrepComponent,
    IrrepLabel,
    fermionic_fischer_decompose,
    fermionic_harmonic_basis,
    irrep_decompose,
    irrep_dimension_identity,
    irrep_labels,
    irrep_project,
    radial_factor,
)
from .operators import (
    euler,
    euler_b,
    euler_f,
    exp_neg_quarter_laplace,
    laplace,
    laplace_b,
    laplace_beltrami,
    laplace_beltrami_b,
    laplace_beltrami_f,
    laplace_f,
    mul_r2,
    mul_rb2,
    mul_rf2,
    r2_poly,
    rb2_poly,
    rf2_poly,
)
from .sphere import (
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

__all__ = [name for name in dir() if not name.startswith("_")]
