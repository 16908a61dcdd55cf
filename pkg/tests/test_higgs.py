import pytest
import sympy

from gvcurves.gvbasis import GVSpectrum, compose_cosh
from gvcurves.higgs import euler_mhat, higgs_spectrum, perverse_polynomial_genus2, poincare_over_jacobian


def _sympy_euler(g):
    t = sympy.symbols("t")
    a = (1 - t) ** (2 * g - 2) * (1 + t + t**2) ** (2 * g) / ((1 + t) ** 2 * (1 + t**2))
    b = (1 + t) ** (2 * g) / (4 * (1 + t**2))
    c = t ** (4 * g - 2) * (1 - t) ** (2 * g - 2) / (2 * (1 + t)) * (2 * g - 1 / (1 + t))
    d = t ** (4 * g - 2) * (1 - t) ** (2 * g - 1) / (2 * (1 + t)) * (-2 * g + 1 - sympy.Rational(1, 2))
    return sympy.limit(sympy.cancel(a + b + c + d), t, 1)


@pytest.mark.parametrize("g", range(2, 9))
def test_euler_mhat_closed_form(g):
    assert euler_mhat(g) == 2 ** (2 * g - 3)


@pytest.mark.parametrize("g", [2, 3, 5])
def test_euler_mhat_sympy_oracle(g):
    assert euler_mhat(g) == _sympy_euler(g)


def test_poincare_is_regular_at_one():
    f = poincare_over_jacobian(3)
    assert f.den(1) != 0


def test_genus_two_spectrum():
    res = higgs_spectrum(2)
    assert res.spectrum == GVSpectrum({6: -1, 5: 8, 4: -18, 3: 8, 2: -2})
    assert compose_cosh(res.spectrum) == perverse_polynomial_genus2()


@pytest.mark.parametrize("g", [3, 4, 5])
def test_higher_genus_extremes(g):
    spec = higgs_spectrum(g).spectrum
    assert spec[4 * g - 2] == -1
    assert spec[g] == -(2 ** (2 * g - 3))
    assert spec[g - 1] == 0 and spec[4 * g - 1] == 0
    assert all(spec.get(k) is None for k in range(g + 1, 4 * g - 2))
