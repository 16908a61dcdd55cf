import pytest

from gvcurves.strata import all_even, case_inputs, stratum_table

EXPECTED = {
    (6,): 0, (5, 1): 50, (4, 2): 128, (4, 1, 1): -216, (3, 3): 81,
    (3, 2, 1): -668, (3, 1, 1, 1): 542, (2, 2, 2): -128, (2, 2, 1, 1): 968,
    (2, 1, 1, 1, 1): -1012, (1, 1, 1, 1, 1, 1): 256,
}


def test_stratum_table():
    table = stratum_table(2)
    assert table.entries == EXPECTED
    assert table.total() == 1


@pytest.mark.parametrize(
    "lam,z,d",
    [
        ((5, 1), 50, 0),
        ((4, 2), 128, 0),
        ((3, 3), 162, 0),
        ((4, 1, 1), -2, 36),
        ((3, 2, 1), -196, 132),
        ((3, 1, 1, 1), -4, -2),
        ((2, 2, 2), 32, 32),
        ((2, 2, 1, 1), 36, -176),
        ((2, 1, 1, 1, 1), -6, -4),
    ],
)
def test_case_inputs(lam, z, d):
    ci = case_inputs(lam)
    assert (ci.euler_Z, ci.euler_D) == (z, d)
    assert ci.provenance


def test_other_genus_rejected():
    with pytest.raises(ValueError):
        stratum_table(3)


def test_json_keys():
    assert stratum_table(2).to_dict()["2,2,1,1"] == 968


def test_all_even():
    assert all_even((4, 2)) and not all_even((3, 3))
