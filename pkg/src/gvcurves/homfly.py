"""HOMFLY polynomials of the (2, n) torus knots and their a=0 specializations."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NegativeAPower
from .poly import BiLaurentFrac, BiLaurentPoly, LaurentPoly, sinh_expand, sinh_text


def _q_minus_qinv() -> LaurentPoly:
    return LaurentPoly({2: 1, -2: -1})


def homfly_t2(n: int) -> BiLaurentFrac:
    """HOMFLY polynomial ``P(T_{2,n})`` in the variables ``a`` and ``q``.

    Unrolls ``P(n) = -a (q - q^-1) P(n-1) + a^2 P(n-2)`` from
    ``P(0) = (a - a^-1) / (q - q^-1)`` and ``P(1) = 1``. Computed per call,
    there is no shared cache.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    p0 = BiLaurentFrac(BiLaurentPoly.a(1) - BiLaurentPoly.a(-1), 1)
    p1 = BiLaurentFrac(BiLaurentPoly.from_s(LaurentPoly.const(1)))
    if n == 0:
        return p0
    step = BiLaurentPoly.a(1) * _q_minus_qinv() * -1
    a2 = BiLaurentPoly.a(2)
    prev, cur = p0, p1
    for _ in range(n - 1):
        prev, cur = cur, cur * step + prev * a2
    return cur


@dataclass(frozen=True)
class SinhFrac:
    """``numerator / (q^-1 - q)**pole_order`` in one variable."""

    numerator: LaurentPoly
    pole_order: int

    def braces(self, q_power: int) -> dict[int, int]:
        """Coefficients ``{k: c}`` with ``self = q^q_power * sum_k c (q^-1 - q)^k``."""
        body = sinh_expand(self.numerator.shift(-2 * q_power))
        return {k - self.pole_order: c for k, c in body.items()}

    def to_text(self, q_power: int) -> str:
        prefix = "" if q_power == 0 else ("q" if q_power == 1 else f"q^{q_power}")
        return f"{prefix}{{{sinh_text(self.braces(q_power))}}}"


def specialize_a0(n: int) -> SinhFrac:
    """``[(q/a)^(n-1) P(T_{2,n})]_{a=0}`` with at most a simple (q^-1 - q) pole."""
    if n < 1:
        raise ValueError("specialization needs n >= 1")
    frac = homfly_t2(n)
    num = frac.numerator.shift_a(-(n - 1))
    if num.a_exponents() and num.a_exponents()[0] < 0:
        raise NegativeAPower(f"a-expansion of (q/a)^{n - 1} P(T_2,{n}) has negative a-powers")
    top = num.coeff(0).shift(2 * (n - 1))
    # (q - q^-1)^k = (-1)^k (q^-1 - q)^k
    if frac.pole_order % 2:
        top = -top
    out = SinhFrac(top, frac.pole_order)
    x = LaurentPoly.sinh_var()
    while out.pole_order > 0:
        quo = out.numerator.exact_div(x)
        if quo is None:
            break
        out = SinhFrac(quo, out.pole_order - 1)
    return out
