import pytest
from sympy.functions.combinatorial.numbers import partition as npartitions

from gvcurves.partitions import (
    LiftScheme,
    aut_factor,
    coarsenings,
    lift_count,
    lift_count_bruteforce,
    lift_table_bruteforce,
    lift_count_orbits_bruteforce,
    partitions_of,
)


@pytest.mark.parametrize("n", range(1, 13))
def test_partition_counts(n):
    parts = partitions_of(n)
    assert len(parts) == npartitions(n)
    assert len(set(parts)) == len(parts)
    assert parts[0] == (n,) and parts[-1] == (1,) * n
    assert all(list(p) == sorted(p, reverse=True) and sum(p) == n for p in parts)


def test_coarsenings_small():
    assert sorted(coarsenings((2, 1, 1))) == [(2, 2), (3, 1), (4,)]
    assert coarsenings((6,)) == []


@pytest.mark.parametrize("lam", partitions_of(7))
def test_coarsenings_transitive(lam):
    above = set(coarsenings(lam))
    for mu in above:
        assert set(coarsenings(mu)) <= above


# coefficients of the deeper strata removed in the genus-two case analysis
WORKED = {
    (3, 2, 1): {(5, 1): 1, (4, 2): 1, (3, 3): 2, (6,): 1},
    (3, 1, 1, 1): {(3, 2, 1): 1, (4, 1, 1): 1, (3, 3): 2, (4, 2): 1, (5, 1): 1},
    (2, 2, 1, 1): {(4, 2): 3, (3, 3): 2, (3, 2, 1): 2, (2, 2, 2): 6, (5, 1): 1, (4, 1, 1): 1},
    (2, 1, 1, 1, 1): {
        (2, 2, 1, 1): 2, (3, 1, 1, 1): 1, (2, 2, 2): 3, (3, 2, 1): 2,
        (4, 1, 1): 1, (3, 3): 2, (4, 2): 2, (5, 1): 1,
    },
}


@pytest.mark.parametrize("lam", sorted(WORKED))
def test_lift_counts_from_worked_cases(lam):
    scheme = LiftScheme.standard(lam)
    for mu, want in WORKED[lam].items():
        assert lift_count(scheme, mu) == want, mu


@pytest.mark.parametrize("n", [6, 10])
def test_ordered_lifts_match_set_partitions(n):
    for lam in partitions_of(n):
        scheme = LiftScheme.ordered(lam)
        brute = lift_table_bruteforce(lam)
        for mu in coarsenings(lam):
            assert lift_count(scheme, mu) == brute.get(mu, 0)
    assert lift_count_bruteforce((2, 1, 1), (3, 1)) == 2


@pytest.mark.parametrize("lam", partitions_of(6))
def test_symmetrized_lifts_match_orbit_count(lam):
    schemes = [LiftScheme.standard(lam)]
    if len(set(lam)) == 1:
        schemes.append(LiftScheme.symmetric(lam))
    for scheme in schemes:
        for mu in coarsenings(lam):
            assert lift_count(scheme, mu) == lift_count_orbits_bruteforce(scheme, mu)


def test_aut_factor():
    assert aut_factor((2, 2, 1, 1)) == 4
    assert aut_factor((2, 2, 1, 1), 1) == 2
    assert aut_factor((3, 3), 1) == 2
    assert aut_factor((1,) * 6, 1) == 1


def test_scheme_validation():
    with pytest.raises(ValueError):
        LiftScheme((2, 1), frozenset({0, 1}))
    with pytest.raises(ValueError):
        lift_count(LiftScheme.standard((2, 1)), (4,))
