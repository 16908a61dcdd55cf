import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gvcurves.errors import NotDecomposable, UnknownValues
from gvcurves.gvbasis import (
    GVSpectrum,
    compose_cosh,
    decompose_cosh,
    decompose_signed_sinh,
    signed_sinh_element,
)
from gvcurves.poly import LaurentPoly

spectra = st.dictionaries(st.integers(0, 10), st.integers(-100, 100), max_size=8).map(GVSpectrum)


@given(spectra)
def test_cosh_round_trip(spec):
    assert decompose_cosh(compose_cosh(spec)) == spec


@given(spectra)
def test_json_round_trip(spec):
    assert GVSpectrum.from_json(spec.to_json()) == spec


def test_json_schema():
    spec = GVSpectrum({3: 8, 2: -2})
    assert json.loads(spec.to_json()) == {"n": {"2": -2, "3": 8}, "unknown": None}
    assert GVSpectrum({3: 1}, (4, 6)).to_dict()["unknown"] == [4, 6]


def test_decompose_rejects_asymmetric():
    with pytest.raises(NotDecomposable):
        decompose_cosh(LaurentPoly.q(1))


def test_unknown_values():
    spec = GVSpectrum({3: -8, 10: -1}, (4, 9))
    assert spec.get(5) is None
    assert spec[3] == -8 and spec[11] == 0
    with pytest.raises(UnknownValues):
        spec[7]
    with pytest.raises(UnknownValues):
        compose_cosh(spec)


def test_sum_takes_union_of_unknown():
    a = GVSpectrum({10: 1, 6: 3}, (5, 9))
    b = GVSpectrum({10: -1, 3: -8}, (4, 9))
    total = a + b
    assert total.unknown == (4, 9)
    assert total.values == {3: -8}
    assert total.get(10) == 0


@pytest.mark.parametrize("gbar", [2, 6, 10])
def test_signed_sinh_round_trip(gbar):
    spec = {1: 0, 2: 5, 3: -7, gbar: 1}
    p = LaurentPoly()
    for g, n in spec.items():
        p = p + signed_sinh_element(g, gbar).scale(n)
    assert decompose_signed_sinh(p, gbar) == GVSpectrum(spec)
