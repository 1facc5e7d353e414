"""Seeded random generators for property suites: polynomials, harmonics,
and rational group elements."""

from __future__ import annotations

import random
from fractions import Fraction

from .core import SpaceParams, SuperPolynomial, monomial_basis
from .fischer import harmonic_basis


def random_fraction(rng: random.Random, span: int = 5, denom: int = 4) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, denom))


def random_homogeneous(
    rng: random.Random, params: SpaceParams, degree: int, terms: int = 4
) -> SuperPolynomial:
    basis = monomial_basis(params, degree)
    if not basis:
        return SuperPolynomial.zero(params)
    out: dict = {}
    for _ in range(min(terms, len(basis))):
        out[rng.choice(basis)] = random_fraction(rng)
    return SuperPolynomial(params, out)


def random_polynomial(
    rng: random.Random, params: SpaceParams, max_degree: int, terms: int = 6
) -> SuperPolynomial:
    total = SuperPolynomial.zero(params)
    for _ in range(terms):
        total = total + random_homogeneous(
            rng, params, rng.randint(0, max_degree), terms=1
        )
    return total


def random_harmonic(
    rng: random.Random, params: SpaceParams, degree: int
) -> SuperPolynomial:
    """Random rational combination of a harmonic basis; zero if none exists."""
    basis = harmonic_basis(params, degree)
    total = SuperPolynomial.zero(params)
    for h in basis:
        c = random_fraction(rng, span=3, denom=2)
        if c != 0:
            total = total + h * c
    if total.is_zero() and basis:
        total = basis[0]
    return total
