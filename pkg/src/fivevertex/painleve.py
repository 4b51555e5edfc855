"""sigma-form of Painleve VI for the homogeneous partition function.

With Z(x) the homogeneous partition function, x = u^2,

    sigma(x) = x(x-1) d/dx log Z - A_P x + B_P

and the residual of

    sigma' (x(x-1) sigma'')^2 + (sigma' [2 sigma + (1-2x) sigma'] + nu1 nu2 nu3 nu4)^2
        - prod_j (sigma' + nu_j^2)

is computed as an exact rational function of x.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Sequence

from .exact import RationalFunction, as_rational
from .exact.halfpower import HalfPowerScalar
from .lattice import LatticeSpec


@dataclass(frozen=True)
class PainleveParams:
    """Parameter families attached to a box (L, M, N)."""

    nu: tuple
    A_P: Fraction
    B_P: Fraction
    b: tuple
    b_tilde: tuple

    def relations(self) -> dict[str, bool]:
        """The cross-relations between b and b-tilde.

        ``b_tilde_2 = -b_2`` is the relation that holds; the variant with
        -b_1 is reported alongside it.
        """
        b, bt = self.b, self.b_tilde
        return {
            "b_tilde_1 = -b_1": bt[0] == -b[0],
            "b_tilde_2 = -b_2": bt[1] == -b[1],
            "b_tilde_2 = -b_1": bt[1] == -b[0],
            "b_tilde_3 = -b_4": bt[2] == -b[3],
            "b_tilde_4 = -b_3": bt[3] == -b[2],
        }


def nu_parameters(spec: LatticeSpec) -> tuple:
    L, M, N = spec.L, spec.M, spec.N
    h = Fraction(1, 2)
    return (M - (N - 1) * h, -L + (N + 1) * h, (N + 1) * h, (N - 1) * h)


def affine_constants(spec: LatticeSpec) -> tuple[Fraction, Fraction]:
    L, M, N = spec.L, spec.M, spec.N
    A = Fraction(L * M, 2) + Fraction((N - 1) ** 2, 4)
    B = Fraction((N + 1) * (L + M - 2 * N), 4) + Fraction(N * N - M, 2)
    return A, B


def b_parameter_report(spec: LatticeSpec) -> PainleveParams:
    L, M, N = spec.L, spec.M, spec.N
    h = Fraction(1, 2)
    b = ((L + M) * h - N, (L - M) * h - 1, (L - M) * h, -(L + M) * h)
    bt = (-(L + M) * h + N, -(L - M) * h + 1, (L + M) * h, -(L - M) * h)
    A, B = affine_constants(spec)
    return PainleveParams(nu_parameters(spec), A, B, b, bt)


def log_derivative_term(Z: HalfPowerScalar) -> RationalFunction:
    """x(x-1) d/dx log Z for Z = R(x) x^(exp2/2)."""
    R = Z.coefficient
    if not isinstance(R, RationalFunction):
        R = RationalFunction.constant(R)
    if R.is_zero():
        raise ValueError("Z vanishes identically")
    x = RationalFunction.x()
    xx1 = x * (x - 1)
    return xx1 * R.derivative() / R + (x - 1) * Fraction(Z.exp2, 2)


def homogeneous_Z(spec: LatticeSpec, alpha=1, Delta=1) -> HalfPowerScalar:
    """Z(x) from the L x L derivative matrix, as R(x) x^(eps/2)."""
    from .detform import Z_hom_function

    f = Z_hom_function(spec, alpha, Delta)
    return HalfPowerScalar(f.h, f.eps)


def sigma_from_Z(spec: LatticeSpec, alpha=1, Delta=1, *, A_P=None, B_P=None,
                 Z: HalfPowerScalar | None = None) -> RationalFunction:
    """sigma(x) = x(x-1) d/dx log Z - A_P x + B_P as an exact rational function.

    ``A_P`` and ``B_P`` default to the constants attached to (L, M, N).
    """
    if spec.N > min(spec.L, spec.M):
        raise ValueError("N <= min(L, M) is required")
    A0, B0 = affine_constants(spec)
    A_P = A0 if A_P is None else as_rational(A_P)
    B_P = B0 if B_P is None else as_rational(B_P)
    if Z is None:
        Z = homogeneous_Z(spec, alpha, Delta)
    x = RationalFunction.x()
    return log_derivative_term(Z) - x * A_P + B_P


def sigma_form_residual(sigma: RationalFunction, nu: Sequence) -> RationalFunction:
    """Left side minus right side of the sigma-form equation with parameters nu."""
    nu = [as_rational(v) for v in nu]
    if len(nu) != 4:
        raise ValueError("need four parameters")
    x = RationalFunction.x()
    s1 = sigma.derivative()
    s2 = s1.derivative()
    xx1 = x * (x - 1)
    inner = s1 * (sigma * 2 + (1 - x * 2) * s1) + prod(nu, start=Fraction(1))
    lhs = s1 * (xx1 * s2) ** 2 + inner ** 2
    rhs = RationalFunction.constant(1)
    for v in nu:
        rhs = rhs * (s1 + v * v)
    return lhs - rhs


def is_degenerate(spec: LatticeSpec) -> bool:
    """Boxes where Z is a single monomial in x (N = 0 or N = L)."""
    return spec.N == 0 or spec.N == spec.L


def painleve_residual(spec: LatticeSpec, alpha=1, Delta=1) -> RationalFunction:
    return sigma_form_residual(sigma_from_Z(spec, alpha, Delta), nu_parameters(spec))


def search_affine_correction(spec: LatticeSpec, span: int = 8, denominator: int = 4,
                             alpha=1, Delta=1) -> list[tuple[Fraction, Fraction]]:
    """Small shifts (dA, dB) in k/denominator, |k| <= span, that zero the residual.

    Used only to report how far printed constants are from working ones.
    """
    Z = homogeneous_Z(spec, alpha, Delta)
    A0, B0 = affine_constants(spec)
    nu = nu_parameters(spec)
    hits = []
    for ka in range(-span, span + 1):
        for kb in range(-span, span + 1):
            dA, dB = Fraction(ka, denominator), Fraction(kb, denominator)
            sig = sigma_from_Z(spec, A_P=A0 + dA, B_P=B0 + dB, Z=Z)
            if sigma_form_residual(sig, nu).is_zero():
                hits.append((dA, dB))
    return hits
