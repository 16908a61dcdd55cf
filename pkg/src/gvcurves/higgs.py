"""GV invariants of Tot_C(L) from the twisted Higgs moduli space."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .gvbasis import GVSpectrum, decompose_cosh
from .poly import LaurentPoly, RationalFunction, eval_rational


@dataclass(frozen=True)
class HiggsSideResult:
    spectrum: GVSpectrum
    base_genus: int

    def to_dict(self) -> dict:
        return {"base_genus": self.base_genus, "spectrum": self.spectrum.to_dict()}


def perverse_polynomial_genus2() -> LaurentPoly:
    """``-(q^-4 - 2q^-2 + 4 - 2q^2 + q^4)(q^-1/2 + q^1/2)^4``."""
    q = LaurentPoly.q
    inner = q(-4) - q(-2).scale(2) + 4 - q(2).scale(2) + q(4)
    return -(inner * LaurentPoly.cosh_var() ** 4)


def poincare_over_jacobian(base_genus: int) -> RationalFunction:
    """``P_{-t}(M) / (1-t)^(2g)`` for the rank-two twisted Higgs moduli space."""
    g = base_genus
    t = RationalFunction.t()
    one = RationalFunction(1)
    a = (one - t) ** (2 * g - 2) * (one + t + t * t) ** (2 * g) / ((one + t) ** 2 * (one + t * t))
    b = (one + t) ** (2 * g) / (4 * (one + t * t))
    c = t ** (4 * g - 2) * (one - t) ** (2 * g - 2) / (2 * (one + t)) * (2 * g - one / (one + t))
    d = t ** (4 * g - 2) * (one - t) ** (2 * g - 1) / (2 * (one + t)) * (Fraction(-2 * g + 1) - Fraction(1, 2))
    poincare = (one - t) ** (2 * g) * (a + b + c + d)
    return poincare / ((one - t) ** (2 * g))


def euler_mhat(base_genus: int) -> int:
    """Euler characteristic of the PGL_2 twisted Higgs moduli space (t = 1 evaluation)."""
    if base_genus < 2:
        raise ValueError("base genus must be at least 2")
    value = eval_rational(poincare_over_jacobian(base_genus), 1)
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral Euler characteristic {value}")
    return int(value)


def higgs_spectrum(base_genus: int) -> HiggsSideResult:
    g = base_genus
    if g < 2:
        raise ValueError("base genus must be at least 2")
    if g == 2:
        return HiggsSideResult(decompose_cosh(perverse_polynomial_genus2()), g)
    top = 4 * g - 2
    values = {top: -1, g: -euler_mhat(g)}
    return HiggsSideResult(GVSpectrum(values, (g + 1, top - 1)), g)

