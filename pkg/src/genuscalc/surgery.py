"""Surgery obstructions for normal invariants of bundles over S^4 x HP^n.

A normal invariant is encoded by rational parameters (A, B, C, lambda): the
candidate bundle xi over S^4 x HP^n has Pontryagin character
ph(xi) = lambda * u * (A + B z + C z^2) when n = 2, and the pair (A, C)
drives the two surviving classes p_1 and p_{n+1} for general n.  Everything
downstream -- the signature of the surgered manifold, the surgery obstruction
sigma, the A-hat genus of the total space -- is evaluated exactly inside the
product cohomology ring, with no precomputed constants.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from math import factorial, gcd, lcm

from .manifolds import ManifoldModel, hp_model, product_model, signature, sphere_model
from .multseq import (
    ahat_genus_table,
    evaluate_genus,
    l_genus_table,
    pont_classes_from_character,
)
from .ring import RingElement

__all__ = [
    "BundleSolution",
    "NormalInvariantParams",
    "a_hat_total_space",
    "ambient_model",
    "general_a_hat_coefficient",
    "general_obstruction_coefficients",
    "p1_cubed_total_space",
    "solve_bundle",
    "surgery_obstruction",
    "xi_total_class",
    "xi_total_class_via_character",
]


@dataclass(frozen=True)
class NormalInvariantParams:
    """Rational bundle parameters over S^4 x HP^n.

    B only matters when n = 2; for other n it must be zero.  The scale
    lambda must be nonzero.
    """

    n: int
    A: Fraction = Fraction(0)
    B: Fraction = Fraction(0)
    C: Fraction = Fraction(0)
    lam: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "A", Fraction(self.A))
        object.__setattr__(self, "B", Fraction(self.B))
        object.__setattr__(self, "C", Fraction(self.C))
        object.__setattr__(self, "lam", Fraction(self.lam))
        if self.n < 2:
            raise ValueError(f"fibre projective dimension must be >= 2, got {self.n}")
        if not self.lam:
            raise ValueError("scale lambda must be nonzero")
        if self.n != 2 and self.B:
            raise ValueError(f"parameter B is only meaningful when n = 2, got n = {self.n}")


@dataclass(frozen=True)
class BundleSolution:
    """Output of solve_bundle: a representative plus the full sigma = 0 kernel."""

    params: NormalInvariantParams
    sigma: Fraction
    a_hat: Fraction
    p1_cubed: Fraction | None
    kernel_basis: tuple[tuple[Fraction, ...], ...]


@lru_cache(maxsize=None)
def ambient_model(n: int) -> ManifoldModel:
    """The base manifold S^4 x HP^n with cohomology Q[u, z]/(u^2, z^{n+1})."""
    if n < 1:
        raise ValueError(f"projective dimension must be >= 1, got {n}")
    return product_model(sphere_model(4), hp_model(n))


def xi_total_class(params: NormalInvariantParams) -> RingElement:
    """Total Pontryagin class of the candidate bundle.

    For n = 2 the three classes are p_1 = lambda A u, p_2 = -6 lambda B uz,
    p_3 = 120 lambda C uz^2.  For general n only p_1 = lambda A u and
    p_{n+1} = lambda (2n+1)! (-1)^n C u z^n survive; the classes in between
    vanish.
    """
    n = params.n
    pres = ambient_model(n).presentation
    u = pres.gen("u")
    z = pres.gen("z")
    total = pres.one() + u * (params.lam * params.A)
    if n == 2:
        total = total + u * z * (params.lam * params.B * -6)
        total = total + u * z**2 * (params.lam * params.C * 120)
    else:
        coeff = params.lam * params.C * Fraction((-1) ** n * factorial(2 * n + 1))
        total = total + u * z**n * coeff
    return total


def xi_total_class_via_character(params: NormalInvariantParams) -> RingElement:
    """Recover the n = 2 total class from ph(xi) = lambda u (A + B z + C z^2)."""
    if params.n != 2:
        raise ValueError(f"character form of the bundle is specific to n = 2, got n = {params.n}")
    pres = ambient_model(2).presentation
    u = pres.gen("u")
    z = pres.gen("z")
    character = [
        u * (params.lam * params.A),
        u * z * (params.lam * params.B),
        u * z**2 * (params.lam * params.C),
    ]
    return pont_classes_from_character(character)


def surgery_obstruction(params: NormalInvariantParams) -> Fraction:
    """The obstruction sigma = (signature of the surgered manifold minus the
    signature of S^4 x HP^n) / 8, computed by integrating
    L(T(S^4 x HP^n)) * L(xi)^{-1} over the fundamental class."""
    model = ambient_model(params.n)
    table = l_genus_table(model.presentation.top_degree // 4)
    l_ambient = evaluate_genus(table, model.tangent_pontryagin)
    l_xi_inverse = evaluate_genus(table, xi_total_class(params)).inverse()
    surgered_signature = model.integrate(l_ambient * l_xi_inverse)
    return (surgered_signature - signature(model)) / 8


def a_hat_total_space(params: NormalInvariantParams) -> Fraction:
    """A-hat genus of the surgered total space: the integral of
    Ahat(T(S^4 x HP^n)) * Ahat(xi)^{-1}."""
    model = ambient_model(params.n)
    table = ahat_genus_table(model.presentation.top_degree // 4)
    ahat_ambient = evaluate_genus(table, model.tangent_pontryagin)
    ahat_xi_inverse = evaluate_genus(table, xi_total_class(params)).inverse()
    return model.integrate(ahat_ambient * ahat_xi_inverse)


def p1_cubed_total_space(params: NormalInvariantParams) -> Fraction:
    """The characteristic number p_1^3 of the surgered manifold for n = 2.

    Its tangent bundle has p_1 = p_1(S^4 x HP^2) - p_1(xi) = 2z - lambda A u.
    """
    if params.n != 2:
        raise ValueError(f"p_1^3 is an invariant of the 12-dimensional case n = 2, got n = {params.n}")
    model = ambient_model(2)
    p1 = model.tangent_pontryagin.homogeneous_part(4) - xi_total_class(params).homogeneous_part(4)
    return model.integrate(p1**3)


def general_obstruction_coefficients(n: int) -> tuple[Fraction, Fraction]:
    """Coefficients (per A, per C) of 8 sigma at lambda = 1 in pair mode.

    8 sigma = lambda (coeff_A * A + coeff_C * C) with coeff_A = -h_1 and
    coeff_C = h_{n+1} (2n+1)! (-1)^{n+1}, where h_i is the leading
    coefficient of the i-th signature-genus polynomial.
    """
    if n < 2:
        raise ValueError(f"fibre projective dimension must be >= 2, got {n}")
    table = l_genus_table(n + 1)
    coeff_a = -table.leading_coefficient(1)
    coeff_c = table.leading_coefficient(n + 1) * Fraction(
        (-1) ** (n + 1) * factorial(2 * n + 1)
    )
    return coeff_a, coeff_c


def general_a_hat_coefficient(n: int) -> Fraction:
    """Coefficient of C in the total-space A-hat genus at lambda = 1, even n.

    Equals a_{n+1} (2n+1)! (-1)^{n+1} with a_i the leading coefficient of
    the i-th A-hat genus polynomial.
    """
    if n < 2 or n % 2:
        raise ValueError(f"pair mode needs an even fibre dimension >= 2, got {n}")
    table = ahat_genus_table(n + 1)
    return table.leading_coefficient(n + 1) * Fraction((-1) ** (n + 1) * factorial(2 * n + 1))


def _primitive_vector(vec: list[Fraction]) -> tuple[Fraction, ...]:
    """Scale to a primitive integer vector whose first nonzero entry is positive."""
    if not any(vec):
        raise ValueError("cannot normalize the zero vector")
    denom = reduce(lcm, (c.denominator for c in vec), 1)
    scaled = [c * denom for c in vec]
    common = reduce(gcd, (abs(c.numerator) for c in scaled), 0)
    scaled = [c / common for c in scaled]
    leading = next(c for c in scaled if c)
    if leading < 0:
        scaled = [-c for c in scaled]
    return tuple(scaled)


def solve_bundle(n: int, require_section: bool = False) -> BundleSolution:
    """Find bundle parameters with sigma = 0 and nonzero total-space A-hat genus.

    For n = 2 the parameter space is (A, B, C) and the sigma = 0 kernel is a
    plane; its basis is returned in primitive integer form and the
    representative is the first basis vector with nonzero A-hat genus.  With
    require_section set (n = 2 only), A is pinned to 0 and the representative
    is scaled so that B and C are the coefficients of 8 sigma read crosswise,
    i.e. (0, -8 sigma_C, 8 sigma_B).  For even n > 2 the space is (A, C) and
    the kernel is a line.  All sigma coefficients come from honest ring
    evaluations, not stored constants.
    """
    if require_section and n != 2:
        raise ValueError(f"a section can only be required when n = 2, got n = {n}")
    if n == 2:
        unit = [
            NormalInvariantParams(2, A=1),
            NormalInvariantParams(2, B=1),
            NormalInvariantParams(2, C=1),
        ]
        coeffs = [surgery_obstruction(p) for p in unit]
        pivot = next((i for i, c in enumerate(coeffs) if c), None)
        if pivot is None:
            raise RuntimeError("obstruction functional vanished identically")
        basis = []
        for j in range(3):
            if j == pivot:
                continue
            vec = [Fraction(0)] * 3
            vec[j] = Fraction(1)
            vec[pivot] = -coeffs[j] / coeffs[pivot]
            basis.append(_primitive_vector(vec))
        if require_section:
            rep = (Fraction(0), -8 * coeffs[2], 8 * coeffs[1])
        else:
            rep = next(
                (
                    v
                    for v in basis
                    if a_hat_total_space(NormalInvariantParams(2, A=v[0], B=v[1], C=v[2]))
                ),
                None,
            )
            if rep is None:
                raise RuntimeError("no kernel basis vector has nonzero A-hat genus")
        params = NormalInvariantParams(2, A=rep[0], B=rep[1], C=rep[2])
        kernel = tuple(basis)
    else:
        if n < 2 or n % 2:
            raise ValueError(f"pair mode needs an even fibre dimension >= 2, got {n}")
        unit = [
            NormalInvariantParams(n, A=1),
            NormalInvariantParams(n, C=1),
        ]
        coeffs = [surgery_obstruction(p) for p in unit]
        if not coeffs[0]:
            raise RuntimeError("obstruction functional is degenerate in A")
        vec = [-coeffs[1] / coeffs[0], Fraction(1)]
        rep = _primitive_vector(vec)
        params = NormalInvariantParams(n, A=rep[0], C=rep[1])
        kernel = (rep,)
    sigma = surgery_obstruction(params)
    a_hat = a_hat_total_space(params)
    if sigma:
        raise RuntimeError(f"representative fails sigma = 0: {sigma}")
    if not a_hat:
        raise RuntimeError("representative has vanishing A-hat genus")
    p1_cubed = p1_cubed_total_space(params) if n == 2 else None
    return BundleSolution(params, sigma, a_hat, p1_cubed, kernel)
