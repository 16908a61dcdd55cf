import pytest
import sympy

from gvcurves.gvbasis import GVSpectrum
from gvcurves.gwside import bp_t2_coefficient, exp_cross_terms, extract_gw_gv


def _sympy_bp(g):
    w = sympy.symbols("w")
    s = sympy.I * w  # S^2 = -w^2
    expr = sympy.expand(s ** (4 * g - 4) * ((4 - 2 * s) ** (g - 1) + (4 + 2 * s) ** (g - 1)))
    return sympy.Poly(expr, w)


@pytest.mark.parametrize("g", range(2, 7))
def test_bp_expansion_matches_sympy(g):
    poly = _sympy_bp(g)
    ours = bp_t2_coefficient(g)
    expected = {m[0]: int(c) for m, c in zip(poly.monoms(), poly.coeffs())}
    assert dict(ours.items()) == expected


def test_bp_numeric_check():
    # w = Q^1/2 - Q^-1/2 at Q = 4 gives w = 3/2; S^2 = -w^2
    from fractions import Fraction

    w = Fraction(3, 2)
    g = 3
    s2 = -w * w
    # (4 - 2S)^2 + (4 + 2S)^2 = 32 + 8 S^2
    expected = s2**4 * (32 + 8 * s2)
    assert bp_t2_coefficient(g).evaluate(w) == expected


def test_genus_two():
    d1, d2 = extract_gw_gv(2)
    assert d1 == GVSpectrum({2: 1})
    assert d2 == GVSpectrum({3: 8, 2: -2})
    assert dict(bp_t2_coefficient(2).items()) == {4: 8}


@pytest.mark.parametrize("g", [3, 4, 5, 6])
def test_extremal_values(g):
    _, d2 = extract_gw_gv(g)
    assert d2[g] == -(2 ** (2 * g - 3))
    assert all(d2[k] == 0 for k in range(0, g))
    assert all(d2[k] == 0 for k in range(4 * g - 2, 4 * g + 2))


def test_cross_terms_sign_alternates():
    # the double-cover term carries (-1)^(g-1) in w-variables
    assert exp_cross_terms(2)[2] == -4
    assert exp_cross_terms(3)[4] == 16
