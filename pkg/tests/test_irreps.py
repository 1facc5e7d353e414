import random
from fractions import Fraction

import pytest

from superharm.core import (
    NotHarmonicError,
    SpaceParams,
    SuperPolynomial,
    monomial_basis,
)
from superharm.fischer import (
    fermionic_harmonic_dim,
    harmonic_basis,
    harmonic_space_dim,
)
from superharm.irreps import (
    IrrepLabel,
    fermionic_fischer_decompose,
    fermionic_harmonic_basis,
    irrep_decompose,
    irrep_dimension_identity,
    irrep_labels,
    irrep_project,
    radial_factor,
)
from superharm.linalg import EchelonAccumulator
from superharm.operators import laplace, laplace_f, mul_rf2, rb2_poly, rf2_poly
from superharm.parsing import poly_from_text

P21 = SpaceParams(2, 1)
P32 = SpaceParams(3, 2)
P43 = SpaceParams(4, 3)


def test_radial_factor_displayed_formulas():
    # degree-2: xb^2 + m/(2n) xf^2
    for P in (P21, P32, P43):
        got = radial_factor(1, 0, 0, P)
        expect = rb2_poly(P) + rf2_poly(P) * Fraction(P.m, 2 * P.n)
        assert got == expect
    # degree-4: xb^4 + (m+2)/n xb^2 xf^2 + m(m+2)/(4n(n-1)) xf^4
    for P in (P32, P43):
        rb, rf = rb2_poly(P), rf2_poly(P)
        got = radial_factor(2, 0, 0, P)
        expect = (
            rb**2
            + rb * rf * Fraction(P.m + 2, P.n)
            + rf**2 * Fraction(P.m * (P.m + 2), 4 * P.n * (P.n - 1))
        )
        assert got == expect
    # degree-6 at (4,3): xb^6 + 4 xb^4 xf^2 + 6 xb^2 xf^4 + 4 xf^6
    rb, rf = rb2_poly(P43), rf2_poly(P43)
    assert radial_factor(3, 0, 0, P43) == rb**3 + rb**2 * rf * 4 + rb * rf**2 * 6 + rf**3 * 4


def test_radial_factor_products_are_harmonic():
    assert laplace(radial_factor(1, 0, 0, P21)).is_zero()
    for q in range(0, 2):
        for p in range(0, 3):
            for l in range(1, P32.n - q + 1):
                f = radial_factor(l, p, q, P32)
                hb = harmonic_basis(SpaceParams(3, 0), p)[0].embed(P32)
                hf = fermionic_harmonic_basis(2, q)[0].embed(P32)
                piece = f * hb * hf
                assert not piece.is_zero()
                assert laplace(piece).is_zero()


def test_radial_factor_restrictions():
    assert radial_factor(0, 5, 1, P21) == SuperPolynomial.one(P21)
    with pytest.raises(ValueError):
        radial_factor(1, 0, 1, P21)  # q = n
    with pytest.raises(ValueError):
        radial_factor(2, 0, 0, P21)  # l > n - q
    with pytest.raises(ValueError):
        radial_factor(1, 0, 0, SpaceParams(0, 2))  # no bosonic variables


def test_irrep_project_delta_behaviour():
    f1 = radial_factor(1, 0, 0, P21)
    assert irrep_project(f1, 1, 0) == f1
    assert irrep_project(f1, 0, 0).is_zero()
    assert irrep_project(f1, 0, 1).is_zero()
    x1x2 = poly_from_text("x1*x2", P21)
    assert irrep_project(x1x2, 0, 0) == x1x2
    one = SuperPolynomial.one(P21)
    assert irrep_project(one, 0, 0) == one  # k = 0: empty products


def test_irrep_project_rejects_bad_input():
    with pytest.raises(NotHarmonicError):
        irrep_project(poly_from_text("x1^2", SpaceParams(3, 1)), 0, 0)
    with pytest.raises(ValueError):
        irrep_project(poly_from_text("x1*x2", P21), 0, 5)


def test_irrep_decompose_examples():
    comps = irrep_decompose(poly_from_text("x1*x2", P21))
    assert [c.label for c in comps] == [IrrepLabel(0, 2, 0)]
    comps = irrep_decompose(radial_factor(1, 0, 0, P21))
    assert [c.label for c in comps] == [IrrepLabel(1, 0, 0)]


def test_irrep_decompose_generated_pieces_delta():
    # every generated piece is fixed by its own projector, killed by others
    for P in (P21, P32):
        k = 2
        labels = irrep_labels(P, k)
        for label in labels:
            f = radial_factor(label.l, label.p, label.q, P)
            hb = harmonic_basis(SpaceParams(P.m, 0), label.p)[0].embed(P)
            hf = fermionic_harmonic_basis(P.n, label.q)[0].embed(P)
            piece = f * hb * hf
            for other in labels:
                got = irrep_project(piece, other.l, other.q)
                if other == label:
                    assert got == piece
                else:
                    assert got.is_zero()


def test_irrep_completeness_on_harmonic_bases():
    for m, n in [(2, 1), (1, 1), (3, 2), (0, 2)]:
        P = SpaceParams(m, n)
        for k in range(4):
            for h in harmonic_basis(P, k):
                comps = irrep_decompose(h)  # internally asserts exact sum
                for c in comps:
                    assert laplace(c.part).is_zero()
                    assert c.label.degree == k


def test_dimension_identity():
    assert irrep_dimension_identity(P21, 2) == (7, 7)
    assert irrep_dimension_identity(P21, 0) == (1, 1)
    lhs, rhs = irrep_dimension_identity(P21, 1)
    assert lhs == rhs == 4
    for m, n in [(2, 1), (1, 1), (3, 2), (0, 2), (2, 2), (4, 1), (1, 2)]:
        P = SpaceParams(m, n)
        for k in range(7):
            lhs, rhs = irrep_dimension_identity(P, k)
            assert lhs == rhs


def test_label_degree_bookkeeping():
    for P in (P21, P32):
        for k in range(5):
            total = sum(
                _piece_dim(P, label) for label in irrep_labels(P, k)
            )
            assert total == harmonic_space_dim(P, k)


def _piece_dim(P, label):
    from superharm.fischer import bosonic_harmonic_dim

    return bosonic_harmonic_dim(P.m, label.p) * fermionic_harmonic_dim(P.n, label.q)


def test_fermionic_harmonic_basis():
    assert [str(b) for b in fermionic_harmonic_basis(1, 1)] == ["e1", "e2"]
    basis = fermionic_harmonic_basis(2, 1)
    assert len(basis) == 4
    basis = fermionic_harmonic_basis(2, 2)
    assert len(basis) == 5
    assert all(laplace_f(h).is_zero() for h in basis)
    with pytest.raises(ValueError):
        fermionic_harmonic_basis(2, 3)


def test_fermionic_harmonic_basis_independent():
    for n in (2, 3):
        for k in range(n + 1):
            basis = fermionic_harmonic_basis(n, k)
            assert len(basis) == fermionic_harmonic_dim(n, k)
            order = monomial_basis(SpaceParams(0, n), k)
            index = {mono: i for i, mono in enumerate(order)}
            acc = EchelonAccumulator()
            for h in basis:
                assert laplace_f(h).is_zero()
                assert acc.add({index[mo]: c for mo, c in h.terms.items()})


def test_fermionic_fischer_decompose():
    P02 = SpaceParams(0, 2)
    R = poly_from_text("e1*e2", P02)
    rep = fermionic_fischer_decompose(R)
    assert sorted(c.i for c in rep.components) == [0, 1]
    assert rep.reconstruct(P02) == R

    P01 = SpaceParams(0, 1)
    rep = fermionic_fischer_decompose(poly_from_text("e1*e2", P01))
    assert [(c.i, str(c.harmonic)) for c in rep.components] == [(1, "1")]


def test_fermionic_fischer_mirrored_degrees():
    P03 = SpaceParams(0, 3)
    rng = random.Random(31)
    for d in range(0, 7):
        basis = monomial_basis(P03, d)
        if not basis:
            continue
        terms = {rng.choice(basis): Fraction(rng.randint(1, 5)) for _ in range(3)}
        R = SuperPolynomial(P03, terms)
        rep = fermionic_fischer_decompose(R)
        assert rep.reconstruct(P03) == R
        for c in rep.components:
            assert laplace_f(c.harmonic).is_zero()


def test_fermionic_fischer_rejects_bosonic_terms():
    with pytest.raises(ValueError):
        fermionic_fischer_decompose(poly_from_text("x1", P21))


def test_fermionic_fischer_embedded_over_bosonic_space():
    R = poly_from_text("e1*e2", P32)
    rep = fermionic_fischer_decompose(R)
    assert rep.ladder == "rf2"
    assert rep.reconstruct(P32) == R


def test_ladder_annihilation_law():
    # xf^2i kills degree-k fermionic harmonics exactly when i > n - k
    for n in (1, 2, 3):
        for k in range(n + 1):
            for h in fermionic_harmonic_basis(n, k):
                ladder = h
                for _ in range(n - k):
                    ladder = mul_rf2(ladder)
                    assert not ladder.is_zero()
                assert mul_rf2(ladder).is_zero()


def test_component_json_shape():
    comps = irrep_decompose(poly_from_text("x1*x2", P21))
    obj = comps[0].to_json()
    assert set(obj) == {"l", "p", "q", "part"}
    assert (obj["l"], obj["p"], obj["q"]) == (0, 2, 0)
