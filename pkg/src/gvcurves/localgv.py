"""Local GV contributions of a reduced spectral curve with singularity type lambda."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PoleLeak
from .gvbasis import GVSpectrum, decompose_signed_sinh
from .homfly import specialize_a0
from .partitions import Partition, as_partition
from .poly import LaurentPoly, sinh_expand


@dataclass(frozen=True)
class SpectralType:
    """Singularity type of a spectral double cover of a genus ``base_genus`` curve."""

    partition: Partition
    base_genus: int

    def __post_init__(self):
        lam = as_partition(self.partition)
        object.__setattr__(self, "partition", lam)
        if self.base_genus < 2:
            raise ValueError("base genus must be at least 2")
        if sum(lam) != 4 * self.base_genus - 2:
            raise ValueError(f"{lam} is not a partition of 4g-2 = {4 * self.base_genus - 2}")

    @property
    def arithmetic_genus(self) -> int:
        return 4 * self.base_genus - 2

    @property
    def base_euler(self) -> int:
        return 2 - 2 * self.base_genus


def spectral_euler(t: SpectralType) -> int:
    """``chi(C_a) = 2 chi(C) - r(lambda)``."""
    return 2 * t.base_euler - len(t.partition)


def hilb_series(t: SpectralType) -> LaurentPoly:
    """Euler characteristics of Hilbert schemes of points of the spectral curve.

    ``q^(-chi) (q^-1 - q)^(-chi) prod_i [(q/a)^(lambda_i - 1) P(T_{2, lambda_i})]_{a=0}``
    with ``chi = chi(C_a)``; each even part contributes one simple pole which
    the prefactor must absorb.
    """
    chi = spectral_euler(t)
    numerator = LaurentPoly.q(-chi) * LaurentPoly.sinh_var() ** (-chi)
    poles = 0
    for part in t.partition:
        spec = specialize_a0(part)
        numerator = numerator * spec.numerator
        poles += spec.pole_order
    x = LaurentPoly.sinh_var()
    for _ in range(poles):
        quo = numerator.exact_div(x)
        if quo is None:
            raise PoleLeak(f"a (q^-1 - q) pole survives for {t.partition}")
        numerator = quo
    return numerator


def hilb_sinh_coeffs(t: SpectralType) -> dict[int, int]:
    """``hilb_series / q^(2 gbar - 2)`` expanded in powers of ``q^-1 - q``."""
    gbar = t.arithmetic_genus
    return sinh_expand(hilb_series(t).shift(-(4 * gbar - 4)))


def local_gv(t: SpectralType) -> GVSpectrum:
    return decompose_signed_sinh(hilb_series(t), t.arithmetic_genus)


def lowest_sinh_term(t: SpectralType) -> tuple[int, int]:
    """Lowest ``(q^-1 - q)``-degree of the Hilbert series and its coefficient."""
    coeffs = hilb_sinh_coeffs(t)
    k = min(coeffs)
    return k, coeffs[k]


def predicted_lowest_degree(t: SpectralType) -> int:
    """``-2 chi(C) + #{odd parts}``."""
    return -2 * t.base_euler + sum(1 for v in t.partition if v % 2)
