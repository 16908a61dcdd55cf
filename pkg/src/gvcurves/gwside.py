"""GW-side extraction of degree one and two invariants from the BP closed form.

Everything is written in ``w = Q^1/2 - Q^-1/2``, stored as a
:class:`~gvcurves.poly.LaurentPoly` whose variable is ``w``. With
``S = 2 sin(lambda/2)`` one has ``S^2 = -w^2``.
"""

from __future__ import annotations

from math import comb

from .errors import NotDecomposable
from .gvbasis import GVSpectrum
from .poly import LaurentPoly

WPoly = LaurentPoly


def _w(k: int = 1, c: int = 1) -> WPoly:
    return LaurentPoly.monomial(k, c)


def bp_t2_coefficient(base_genus: int) -> WPoly:
    """``t^2`` coefficient of ``exp(Z_GW)``: ``S^(4g-4) {(4 - 2S)^(g-1) + (4 + 2S)^(g-1)}``.

    Odd powers of ``S`` cancel in the sum; even ones become ``(-w^2)^(j/2)``.
    """
    g = base_genus
    if g < 2:
        raise ValueError("base genus must be at least 2")
    braces = LaurentPoly()
    for j in range(0, g, 2):
        c = 2 * comb(g - 1, j) * 4 ** (g - 1 - j) * 2**j * (-1) ** (j // 2)
        braces = braces + _w(j, c)
    return braces * _w(4 * g - 4)


def multiple_cover_square() -> WPoly:
    """``(Q - Q^-1)^2 = w^2 (w^2 + 4)``."""
    return _w(2) * (_w(2) + 4)


def exp_cross_terms(base_genus: int) -> WPoly:
    """Twice the degree-one contributions to the ``t^2`` coefficient.

    ``2 * [1/2 (2 sin lambda)^(2g-2) + 1/2 S^(4g-4)]`` where the first term is
    the double cover of the degree-one class, ``(2 sin lambda)^2 = -(Q - Q^-1)^2``.
    """
    g = base_genus
    double_cover = multiple_cover_square() ** (g - 1)
    if (g - 1) % 2:
        double_cover = -double_cover
    return double_cover + _w(4 * g - 4)


def extract_gw_gv(base_genus: int) -> tuple[GVSpectrum, GVSpectrum]:
    """Degree one and degree two GV-type invariants on the GW side."""
    g_c = base_genus
    degree1 = GVSpectrum({g_c: 1})
    twice = bp_t2_coefficient(g_c).scale(2) - exp_cross_terms(g_c)
    if any(v % 2 for _, v in twice.items()):
        raise NotDecomposable("degree-two remainder is not integral")
    rem = LaurentPoly({e: v // 2 for e, v in twice.items()})
    # rem = sum_g (-1)^(g-1) n_g w^(2g-2)
    out: dict[int, int] = {}
    while rem:
        d = rem.degree()
        if d < 0 or d % 2:
            raise NotDecomposable(f"remainder {rem.to_text()} has no w^(2g-2) expansion")
        g = d // 2 + 1
        c = rem[d]
        n = c if (g - 1) % 2 == 0 else -c
        out[g] = n
        rem = rem - _w(d, c)
    return degree1, GVSpectrum(out)
