"""Runnable invariant suites behind the CLI `verify` command.

Each check exercises one algebraic law at a given space, on seeded random
inputs, and reports a counterexample on failure.  Checks whose
preconditions exclude the space report as skipped.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .core import (
    PoleError,
    SpaceParams,
    SuperPolynomial,
    gamma_ratio,
    substitute_linear,
)
from .fischer import (
    fischer_decompose,
    fischer_project,
    fischer_project_lb,
    harmonic_basis,
    harmonic_space_dim,
    poly_space_dim,
)
from .groups import random_special_orthogonal, random_symplectic
from .irreps import irrep_decompose, irrep_dimension_identity
from .operators import (
    apply_power,
    euler,
    laplace,
    laplace_beltrami,
    mul_r2,
    r2_poly,
)
from .rand import random_harmonic, random_homogeneous, random_polynomial
from .sphere import berezin, pizzetti, superspace_pizzetti


@dataclass
class CheckResult:
    name: str
    status: str  # "pass" | "fail" | "skip"
    detail: str = ""


def _result(name, ok, detail=""):
    return CheckResult(name, "pass" if ok else "fail", detail if not ok else "")


def check_sl2(params: SpaceParams, rng: random.Random, count: int) -> CheckResult:
    M = params.M
    for _ in range(count):
        p = random_polynomial(rng, params, 5)
        X = lambda q: mul_r2(q) * Fraction(1, 2)
        Y = lambda q: laplace(q) * Fraction(-1, 2)
        H = lambda q: euler(q) + q * Fraction(M, 2)
        if (
            H(X(p)) - X(H(p)) != X(p) * 2
            or H(Y(p)) - Y(H(p)) != Y(p) * (-2)
            or X(Y(p)) - Y(X(p)) != H(p)
        ):
            return _result("sl2 relations", False, f"counterexample: {p}")
    return _result("sl2 relations", True)


def check_iterated_laplace(
    params: SpaceParams, rng: random.Random, count: int
) -> CheckResult:
    # laplace(x^(2t) R_k) = 2t(2k + M + 2t - 2) x^(2t-2) R_k + x^(2t) laplace R_k
    M = params.M
    for _ in range(count):
        k = rng.randint(0, 4)
        R = random_homogeneous(rng, params, k)
        if R.is_zero():
            continue
        for t in range(1, 4):
            lhs = laplace(apply_power(mul_r2, R, t))
            rhs = apply_power(mul_r2, R, t - 1) * Fraction(
                2 * t * (2 * k + M + 2 * t - 2)
            ) + apply_power(mul_r2, laplace(R), t)
            if lhs != rhs:
                return _result(
                    "iterated Laplacian on ladders", False, f"k={k} t={t}: {R}"
                )
    return _result("iterated Laplacian on ladders", True)


def check_laplace_power_identity(
    params: SpaceParams, rng: random.Random, count: int
) -> CheckResult:
    # laplace^(t+1)(x^2 R_2t) = 4(t+1)(M/2 + t) laplace^t R_2t
    M = params.M
    for _ in range(count):
        t = rng.randint(0, 2)
        R = random_homogeneous(rng, params, 2 * t)
        lhs = apply_power(laplace, mul_r2(R), t + 1)
        rhs = apply_power(laplace, R, t) * (4 * (t + 1) * Fraction(M + 2 * t, 2))
        if lhs != rhs:
            return _result("Laplacian power identity", False, f"t={t}: {R}")
    return _result("Laplacian power identity", True)


def check_ladder_constants(
    params: SpaceParams, rng: random.Random, count: int
) -> CheckResult:
    # laplace^i (x^(2j) H_k) = c_(i,j,k) x^(2(j-i)) H_k, and 0 for i > j
    if not params.fischer_regular or params.m == 0:
        return CheckResult("ladder eigenconstants", "skip", "needs regular M, m >= 1")
    M = params.M
    import math

    for k in range(0, 3):
        H = random_harmonic(rng, params, k)
        if H.is_zero():
            continue
        for j in range(0, 4):
            xjH = apply_power(mul_r2, H, j)
            for i in range(0, 4):
                got = apply_power(laplace, xjH, i)
                if i > j:
                    ok = got.is_zero()
                else:
                    c = (
                        Fraction(4**i)
                        * math.comb(j, i)
                        * math.factorial(i)
                        * gamma_ratio(2 * k + M + 2 * (j - i), i)
                    )
                    ok = got == apply_power(mul_r2, H, j - i) * c
                if not ok:
                    return _result(
                        "ladder eigenconstants", False, f"i={i} j={j} k={k}"
                    )
    return _result("ladder eigenconstants", True)


def check_lb_commutes(params: SpaceParams, rng: random.Random, count: int) -> CheckResult:
    for _ in range(count):
        p = random_polynomial(rng, params, 4)
        if laplace_beltrami(mul_r2(p)) != mul_r2(laplace_beltrami(p)):
            return _result("Laplace-Beltrami commutes with x^2", False, str(p))
    return _result("Laplace-Beltrami commutes with x^2", True)


def check_group_invariance(
    params: SpaceParams, rng: random.Random, count: int
) -> CheckResult:
    x2 = r2_poly(params)
    for _ in range(max(2, count // 4)):
        A = random_special_orthogonal(rng, params.m)
        D = random_symplectic(rng, params.n)
        if substitute_linear(x2, A, D) != x2:
            return _result("group preserves x^2", False, "x^2 moved")
        p = random_polynomial(rng, params, 4)
        if substitute_linear(laplace(p), A, D) != laplace(substitute_linear(p, A, D)):
            return _result("group preserves x^2", False, f"Laplacian moved on {p}")
    return _result("group preserves x^2", True)


def check_fischer(params: SpaceParams, rng: random.Random, count: int) -> CheckResult:
    name = "Fischer reconstruction"
    if params.m == 0:
        pass  # fermionic route below
    elif not params.fischer_regular:
        # x1^2 is not harmonic, so the l = 1 coefficient is required and poles
        try:
            fischer_project(SuperPolynomial.x_var(params, 1) ** 2, 0)
            return _result(name, False, "expected PoleError at M in -2N")
        except PoleError:
            return CheckResult(name, "pass", "")
    for _ in range(count):
        k = rng.randint(0, 5)
        R = random_homogeneous(rng, params, k)
        if R.is_zero():
            continue
        try:
            report = fischer_decompose(R)
        except PoleError:
            return _result(name, False, f"unexpected pole on {R}")
        if report.reconstruct(params) != R:
            return _result(name, False, str(R))
        if params.m > 0:
            for i in range(k // 2 + 1):
                if fischer_project_lb(R, i) != apply_power(
                    mul_r2, fischer_project(R, i), i
                ):
                    return _result(name, False, f"LB projector mismatch on {R}")
    return _result(name, True)


def check_harmonic_dims(params: SpaceParams, rng: random.Random, count: int) -> CheckResult:
    for k in range(0, 6):
        expected = poly_space_dim(params, k) - poly_space_dim(params, k - 2)
        if params.m == 0:
            expected = harmonic_space_dim(params, k)
        if len(harmonic_basis(params, k)) != expected:
            return _result("harmonic dimension formula", False, f"k={k}")
    return _result("harmonic dimension formula", True)


def check_irreps(params: SpaceParams, rng: random.Random, count: int) -> CheckResult:
    for k in range(0, 4):
        lhs, rhs = irrep_dimension_identity(params, k)
        if lhs != rhs:
            return _result("irreducible decomposition", False, f"dim identity k={k}")
        for h in harmonic_basis(params, k)[: max(2, count // 8)]:
            comps = irrep_decompose(h)  # raises on reconstruction mismatch
            for c in comps:
                if not laplace(c.part).is_zero():
                    return _result(
                        "irreducible decomposition", False, f"non-harmonic piece k={k}"
                    )
    return _result("irreducible decomposition", True)


def check_sphere(params: SpaceParams, rng: random.Random, count: int) -> CheckResult:
    name = "supersphere integral laws"
    if params.m < 1 or not params.fischer_regular:
        return CheckResult(name, "skip", "needs m >= 1 and regular M")
    for _ in range(count):
        f = random_polynomial(rng, params, 4)
        if pizzetti(mul_r2(f)) != -pizzetti(f):
            return _result(name, False, f"T(x^2 f) != -T(f) on {f}")
        A = random_special_orthogonal(rng, params.m)
        D = random_symplectic(rng, params.n)
        if pizzetti(substitute_linear(f, A, D)) != pizzetti(f):
            return _result(name, False, f"not group invariant on {f}")
    return _result(name, True)


def check_berezin(params: SpaceParams, rng: random.Random, count: int) -> CheckResult:
    for _ in range(count):
        R = random_polynomial(rng, params, 6)
        if superspace_pizzetti(R) != berezin(R):
            return _result("Berezin equivalence", False, str(R))
    return _result("Berezin equivalence", True)


ALL_CHECKS = [
    check_sl2,
    check_iterated_laplace,
    check_laplace_power_identity,
    check_ladder_constants,
    check_lb_commutes,
    check_group_invariance,
    check_fischer,
    check_harmonic_dims,
    check_irreps,
    check_sphere,
    check_berezin,
]


def run_all(params: SpaceParams, seed: int = 0, count: int = 20) -> list[CheckResult]:
    results = []
    for check in ALL_CHECKS:
        rng = random.Random(seed)
        try:
            results.append(check(params, rng, count))
        except Exception as exc:  # surfaced as a failure with the exception text
            results.append(CheckResult(check.__name__, "fail", repr(exc)))
    return results
