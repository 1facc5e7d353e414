"""Exact polynomial algebra over m commuting and 2n anticommuting variables.

A superpolynomial is a finite rational linear combination of monomials

    x_1^a1 * ... * x_m^am * e_{j1} * ... * e_{jr},   j1 < j2 < ... < jr,

where the x_i commute with everything and the e_j (2n of them, indexed
1..2n) anticommute among themselves and square to zero.  Every monomial is
stored in the canonical form above: bosonic exponent tuple plus a strictly
increasing tuple of fermionic indices, with all permutation signs absorbed
into the coefficient at construction time.

Coefficients are `fractions.Fraction` throughout; no floating point is used
anywhere in this package.  Values of the form (rational) * pi^(s/2), which
arise from half-integer Gamma values, are carried exactly by
`PiScaledValue`.

Fermionic differentiation uses the left derivative: on a canonical monomial
d/de_j removes e_j and contributes the sign (-1)^(position of j), and obeys
the graded Leibniz rule d(ab) = (da)b + (-1)^|a| a(db) with |a| the
Grassmann parity of a.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Sequence

Rational = int | Fraction


class PoleError(ArithmeticError):
    """A Gamma-function pole (super-dimension in -2N) makes the value undefined."""


class DegreeError(ValueError):
    """An operation required a homogeneous input and did not get one."""


class NotHarmonicError(ValueError):
    """An operation required a harmonic input and did not get one."""


class CollisionError(ArithmeticError):
    """Two eigenvalues that must be distinct coincide (vanishing denominator)."""


class ParseError(ValueError):
    """Malformed polynomial text or JSON; carries the offending position."""

    def __init__(self, message: str, pos: int | None = None):
        self.pos = pos
        if pos is not None:
            message = f"{message} (at position {pos})"
        super().__init__(message)


def frac(x: Rational) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class SpaceParams:
    """Numbers of commuting variables (m) and anticommuting pairs (n).

    There are 2n fermionic variables.  The derived super-dimension
    M = m - 2n governs every coefficient formula of the theory.
    """

    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 0 or self.n < 0:
            raise ValueError("m and n must be nonnegative")

    @property
    def M(self) -> int:
        return self.m - 2 * self.n

    @property
    def fischer_regular(self) -> bool:
        """True iff the Fischer decomposition exists: m == 0 or M not in {0,-2,-4,...}."""
        return self.m == 0 or self.M > 0 or self.M % 2 != 0

    def require_fischer_regular(self) -> None:
        if not self.fischer_regular:
            raise PoleError(
                f"super-dimension M = {self.M} lies in -2N with m > 0; "
                "the requested operation is undefined there"
            )

    def check_matches(self, other: "SpaceParams") -> None:
        if self != other:
            raise ValueError(f"space mismatch: {self} vs {other}")


@dataclass(frozen=True)
class SuperMonomial:
    """Canonical monomial: bosonic exponents plus sorted fermionic index tuple."""

    bos: tuple[int, ...]
    ferm: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(e < 0 for e in self.bos):
            raise ValueError("negative bosonic exponent")
        if any(a >= b for a, b in zip(self.ferm, self.ferm[1:])) or any(
            j < 1 for j in self.ferm
        ):
            raise ValueError("fermionic indices must be strictly increasing and >= 1")

    @property
    def degree(self) -> int:
        return sum(self.bos) + len(self.ferm)

    @property
    def bosonic_degree(self) -> int:
        return sum(self.bos)

    @property
    def fermionic_degree(self) -> int:
        return len(self.ferm)

    def sort_key(self) -> tuple:
        return (self.degree, self.bos, self.ferm)


def mono_mul(a: SuperMonomial, b: SuperMonomial) -> tuple[int, SuperMonomial] | None:
    """Multiply canonical monomials.

    Returns None when a fermionic index repeats (the product is zero),
    otherwise (sign, product) where the sign is the parity of the
    permutation sorting a.ferm followed by b.ferm.
    """
    bos = tuple(x + y for x, y in zip(a.bos, b.bos))
    fa, fb = a.ferm, b.ferm
    if not fa:
        return 1, SuperMonomial(bos, fb)
    if not fb:
        return 1, SuperMonomial(bos, fa)
    merged: list[int] = []
    sign = 1
    i = j = 0
    while i < len(fa) and j < len(fb):
        if fa[i] == fb[j]:
            return None
        if fa[i] < fb[j]:
            merged.append(fa[i])
            i += 1
        else:
            # fb[j] jumps over the remaining entries of fa
            if (len(fa) - i) % 2:
                sign = -sign
            merged.append(fb[j])
            j += 1
    merged.extend(fa[i:])
    merged.extend(fb[j:])
    return sign, SuperMonomial(bos, tuple(merged))


class SuperPolynomial:
    """Immutable sparse superpolynomial over a fixed SpaceParams.

    `terms` maps canonical SuperMonomial keys to nonzero Fraction
    coefficients.  All operations return new objects; instances are safe to
    share between threads.
    """

    __slots__ = ("params", "terms")

    def __init__(
        self,
        params: SpaceParams,
        terms: Mapping[SuperMonomial, Rational] | None = None,
    ):
        clean: dict[SuperMonomial, Fraction] = {}
        if terms:
            for mono, c in terms.items():
                c = frac(c)
                if c == 0:
                    continue
                if len(mono.bos) != params.m:
                    raise ValueError("bosonic exponent tuple has wrong length")
                if mono.ferm and mono.ferm[-1] > 2 * params.n:
                    raise ValueError("fermionic index out of range")
                clean[mono] = c
        self.params = params
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, params: SpaceParams) -> "SuperPolynomial":
        return cls(params)

    @classmethod
    def constant(cls, params: SpaceParams, c: Rational) -> "SuperPolynomial":
        return cls(params, {SuperMonomial((0,) * params.m, ()): frac(c)})

    @classmethod
    def one(cls, params: SpaceParams) -> "SuperPolynomial":
        return cls.constant(params, 1)

    @classmethod
    def x_var(cls, params: SpaceParams, i: int) -> "SuperPolynomial":
        """The generator x_i, 1-based."""
        if not 1 <= i <= params.m:
            raise ValueError(f"x index {i} out of range 1..{params.m}")
        bos = [0] * params.m
        bos[i - 1] = 1
        return cls(params, {SuperMonomial(tuple(bos), ()): Fraction(1)})

    @classmethod
    def e_var(cls, params: SpaceParams, j: int) -> "SuperPolynomial":
        """The generator e_j, 1-based, j <= 2n."""
        if not 1 <= j <= 2 * params.n:
            raise ValueError(f"e index {j} out of range 1..{2 * params.n}")
        return cls(params, {SuperMonomial((0,) * params.m, (j,)): Fraction(1)})

    # -- inspection --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mono: SuperMonomial) -> Fraction:
        return self.terms.get(mono, Fraction(0))

    def constant_term(self) -> Fraction:
        return self.terms.get(SuperMonomial((0,) * self.params.m, ()), Fraction(0))

    def degree(self) -> int | None:
        """Total degree, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(mono.degree for mono in self.terms)

    def homogeneous_degree(self) -> int | None:
        """The common degree of all terms, or None if mixed or zero."""
        degrees = {mono.degree for mono in self.terms}
        if len(degrees) != 1:
            return None
        return degrees.pop()

    def parity(self) -> int | None:
        """Grassmann parity (fermionic degree mod 2), or None if mixed."""
        parities = {len(mono.ferm) % 2 for mono in self.terms}
        if len(parities) != 1:
            return None
        return parities.pop()

    def degree_buckets(self) -> dict[int, "SuperPolynomial"]:
        """Split into homogeneous components, keyed by degree."""
        buckets: dict[int, dict[SuperMonomial, Fraction]] = {}
        for mono, c in self.terms.items():
            buckets.setdefault(mono.degree, {})[mono] = c
        return {
            k: SuperPolynomial(self.params, t) for k, t in sorted(buckets.items())
        }

    def sorted_terms(self) -> list[tuple[SuperMonomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())

    def embed(self, target: SpaceParams) -> "SuperPolynomial":
        """Reinterpret over a larger space (same x's, same e's, more allowed)."""
        if target.m < self.params.m or target.n < self.params.n:
            raise ValueError("target space must contain the source space")
        pad = (0,) * (target.m - self.params.m)
        return SuperPolynomial(
            target,
            {SuperMonomial(m.bos + pad, m.ferm): c for m, c in self.terms.items()},
        )

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "SuperPolynomial | Rational") -> "SuperPolynomial":
        other = self._coerce(other)
        self.params.check_matches(other.params)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = out.get(mono, Fraction(0)) + c
            if s == 0:
                out.pop(mono, None)
            else:
                out[mono] = s
        return self._raw(self.params, out)

    __radd__ = __add__

    def __neg__(self) -> "SuperPolynomial":
        return self._raw(self.params, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "SuperPolynomial | Rational") -> "SuperPolynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Rational) -> "SuperPolynomial":
        return self._coerce(other) - self

    def __mul__(self, other: "SuperPolynomial | Rational") -> "SuperPolynomial":
        if isinstance(other, (int, Fraction)):
            c = frac(other)
            if c == 0:
                return SuperPolynomial.zero(self.params)
            return self._raw(self.params, {m: c * v for m, v in self.terms.items()})
        self.params.check_matches(other.params)
        out: dict[SuperMonomial, Fraction] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                hit = mono_mul(ma, mb)
                if hit is None:
                    continue
                sign, mono = hit
                s = out.get(mono, Fraction(0)) + sign * ca * cb
                if s == 0:
                    out.pop(mono, None)
                else:
                    out[mono] = s
        return self._raw(self.params, out)

    def __rmul__(self, other: Rational) -> "SuperPolynomial":
        return self * other

    def __pow__(self, k: int) -> "SuperPolynomial":
        if k < 0:
            raise ValueError("negative power")
        out = SuperPolynomial.one(self.params)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SuperPolynomial):
            return NotImplemented
        return self.params == other.params and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def __str__(self) -> str:
        from .parsing import poly_to_text

        return poly_to_text(self)

    def __repr__(self) -> str:
        return f"SuperPolynomial({self.params.m},{self.params.n}: {self})"

    def _coerce(self, other: "SuperPolynomial | Rational") -> "SuperPolynomial":
        if isinstance(other, SuperPolynomial):
            return other
        return SuperPolynomial.constant(self.params, other)

    @classmethod
    def _raw(
        cls, params: SpaceParams, terms: dict[SuperMonomial, Fraction]
    ) -> "SuperPolynomial":
        # internal fast path: terms already canonical and zero-free
        p = object.__new__(cls)
        p.params = params
        p.terms = terms
        return p


def diff_x(p: SuperPolynomial, i: int) -> SuperPolynomial:
    """Partial derivative with respect to x_i (1-based)."""
    if not 1 <= i <= p.params.m:
        raise ValueError(f"x index {i} out of range 1..{p.params.m}")
    out: dict[SuperMonomial, Fraction] = {}
    for mono, c in p.terms.items():
        e = mono.bos[i - 1]
        if e == 0:
            continue
        bos = list(mono.bos)
        bos[i - 1] = e - 1
        key = SuperMonomial(tuple(bos), mono.ferm)
        s = out.get(key, Fraction(0)) + c * e
        if s == 0:
            out.pop(key, None)
        else:
            out[key] = s
    return SuperPolynomial._raw(p.params, out)


def diff_e(p: SuperPolynomial, j: int) -> SuperPolynomial:
    """Left derivative with respect to e_j (1-based, j <= 2n).

    On a canonical monomial the derivative removes e_j and picks up the
    sign (-1)^(zero-based position of j in the index tuple).
    """
    if not 1 <= j <= 2 * p.params.n:
        raise ValueError(f"e index {j} out of range 1..{2 * p.params.n}")
    out: dict[SuperMonomial, Fraction] = {}
    for mono, c in p.terms.items():
        if j not in mono.ferm:
            continue
        pos = mono.ferm.index(j)
        key = SuperMonomial(mono.bos, mono.ferm[:pos] + mono.ferm[pos + 1 :])
        val = -c if pos % 2 else c
        s = out.get(key, Fraction(0)) + val
        if s == 0:
            out.pop(key, None)
        else:
            out[key] = s
    return SuperPolynomial._raw(p.params, out)


def substitute_linear(
    p: SuperPolynomial,
    A: Sequence[Sequence[Rational]],
    D: Sequence[Sequence[Rational]],
) -> SuperPolynomial:
    """Apply the linear change of variables x_i -> sum_k A[i][k] x_k,
    e_j -> sum_l D[j][l] e_l, and re-expand in canonical form.

    A must be m x m and D must be 2n x 2n.
    """
    params = p.params
    m, n2 = params.m, 2 * params.n
    if len(A) != m or any(len(row) != m for row in A):
        raise ValueError(f"A must be {m}x{m}")
    if len(D) != n2 or any(len(row) != n2 for row in D):
        raise ValueError(f"D must be {n2}x{n2}")
    x_img = [
        sum(
            (SuperPolynomial.x_var(params, k + 1) * frac(A[i][k]) for k in range(m)),
            SuperPolynomial.zero(params),
        )
        for i in range(m)
    ]
    e_img = [
        sum(
            (SuperPolynomial.e_var(params, l + 1) * frac(D[j][l]) for l in range(n2)),
            SuperPolynomial.zero(params),
        )
        for j in range(n2)
    ]
    total = SuperPolynomial.zero(params)
    for mono, c in p.terms.items():
        term = SuperPolynomial.constant(params, c)
        for i, e in enumerate(mono.bos):
            for _ in range(e):
                term = term * x_img[i]
        for j in mono.ferm:
            term = term * e_img[j - 1]
        total = total + term
    return total


def gamma_ratio(two_a: int, k: int) -> Fraction:
    """Gamma(a + k) / Gamma(a) for a = two_a/2, as the rising product
    a (a+1) ... (a+k-1).  Always a well-defined rational; callers guard poles.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    a = Fraction(two_a, 2)
    out = Fraction(1)
    for t in range(k):
        out *= a + t
    return out


@dataclass(frozen=True)
class PiScaledValue:
    """An exact value coeff * pi^(half_pi_exp / 2).

    The canonical zero has exponent 0.  Sums are only defined between equal
    exponents (or with zero); for any fixed space every supersphere or
    superspace integral lands on a single pi power, so mixed sums indicate
    a bug and raise.
    """

    coeff: Fraction
    half_pi_exp: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeff", frac(self.coeff))
        if self.coeff == 0 and self.half_pi_exp != 0:
            object.__setattr__(self, "half_pi_exp", 0)

    @classmethod
    def zero(cls) -> "PiScaledValue":
        return cls(Fraction(0), 0)

    def is_zero(self) -> bool:
        return self.coeff == 0

    def __add__(self, other: "PiScaledValue") -> "PiScaledValue":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.half_pi_exp != other.half_pi_exp:
            raise ValueError(
                f"cannot add pi^({self.half_pi_exp}/2) and pi^({other.half_pi_exp}/2)"
            )
        return PiScaledValue(self.coeff + other.coeff, self.half_pi_exp)

    def __neg__(self) -> "PiScaledValue":
        return PiScaledValue(-self.coeff, self.half_pi_exp)

    def __sub__(self, other: "PiScaledValue") -> "PiScaledValue":
        return self + (-other)

    def __mul__(self, other: "PiScaledValue | Rational") -> "PiScaledValue":
        if isinstance(other, PiScaledValue):
            return PiScaledValue(
                self.coeff * other.coeff, self.half_pi_exp + other.half_pi_exp
            )
        return PiScaledValue(self.coeff * frac(other), self.half_pi_exp)

    __rmul__ = __mul__

    def __truediv__(self, other: "PiScaledValue | Rational") -> "PiScaledValue":
        if isinstance(other, PiScaledValue):
            if other.is_zero():
                raise ZeroDivisionError("division by zero PiScaledValue")
            return PiScaledValue(
                self.coeff / other.coeff, self.half_pi_exp - other.half_pi_exp
            )
        return PiScaledValue(self.coeff / frac(other), self.half_pi_exp)

    def __str__(self) -> str:
        if self.half_pi_exp == 0:
            return str(self.coeff)
        e = Fraction(self.half_pi_exp, 2)
        suffix = f"pi^({e})" if e.denominator != 1 or e < 0 else f"pi^{e}"
        return f"{self.coeff}*{suffix}"


def gamma_half(j: int) -> PiScaledValue:
    """Gamma(j/2) exactly, for integer j.

    Even j gives a rational (factorial); odd j gives rational * pi^(1/2).
    Anchored at Gamma(1) = 1 and Gamma(1/2) = sqrt(pi), extended by
    Gamma(z+1) = z Gamma(z) in both directions.  Raises PoleError at the
    true poles j in {0, -2, -4, ...}.
    """
    if j % 2 == 0:
        if j <= 0:
            raise PoleError(f"Gamma({j}/2) is a pole")
        return PiScaledValue(Fraction(math.factorial(j // 2 - 1)), 0)
    coeff = Fraction(1)
    z = j
    while z > 1:
        z -= 2
        coeff *= Fraction(z, 2)
    while z < 1:
        coeff /= Fraction(z, 2)
        z += 2
    return PiScaledValue(coeff, 1)


def monomial_basis(params: SpaceParams, k: int) -> list[SuperMonomial]:
    """All canonical monomials of total degree k, in a fixed deterministic order."""
    if k < 0:
        return []
    out: list[SuperMonomial] = []
    import itertools

    for r in range(min(k, 2 * params.n) + 1):
        rem = k - r
        if params.m == 0 and rem > 0:
            continue
        for ferm in itertools.combinations(range(1, 2 * params.n + 1), r):
            for bos in _compositions(rem, params.m):
                out.append(SuperMonomial(bos, ferm))
    return out


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest
