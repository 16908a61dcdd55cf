from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gvcurves.errors import DimensionError, RingMismatch
from gvcurves.intersect import (
    BlowupSurfaceClass,
    CohClass,
    KunnethRing,
    blowup_divisor_euler,
    chern_from_ch,
    degeneracy_euler,
    diagonal,
    grr_push,
    integrate_products,
    mul,
    surface_class_coords,
    theta_count,
)


def _random_class(ring, data):
    letters = list(range(2 * ring.genus + 2))
    words = data.draw(st.lists(st.tuples(*[st.sampled_from(letters)] * ring.arity), max_size=5))
    coeffs = data.draw(st.lists(st.integers(-5, 5), min_size=len(words), max_size=len(words)))
    return CohClass(ring, dict(zip(words, coeffs)))


@given(st.data())
def test_ring_axioms(data):
    ring = KunnethRing(2, 2)
    x, y, z = (_random_class(ring, data) for _ in range(3))
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * ring.unit() == x


def test_odd_classes_anticommute():
    ring = KunnethRing(1, 1)
    a = CohClass(ring, {(1,): 1})
    b = CohClass(ring, {(2,): 1})
    assert a * b == ring.point()
    assert b * a == -ring.point()
    assert a * a == ring.zero()


@pytest.mark.parametrize("g", range(0, 6))
def test_diagonal_self_intersection(g):
    ring = KunnethRing(g, 2)
    d = diagonal(0, 1, ring)
    assert mul(d, d) == ring.point().scale(2 - 2 * g)


@pytest.mark.parametrize("g", range(0, 4))
def test_diagonal_restricts_classes(g):
    # Delta . (pt x 1) = pt and Delta . f1 = Delta . f2 = 1
    ring = KunnethRing(g, 2)
    d = ring.diagonal(0, 1)
    assert (d * ring.point_on(0)).integrate() == 1
    assert (d * ring.point_on(1)).integrate() == 1


def test_small_diagonal_triple():
    ring = KunnethRing(2, 3)
    sd = ring.small_diagonal((0, 1, 2))
    assert sd == ring.diagonal(0, 1) * ring.diagonal(1, 2)


def test_ring_mismatch():
    with pytest.raises(RingMismatch):
        KunnethRing(1, 2).unit() * KunnethRing(2, 2).unit()


def test_grr_321_intermediates():
    data = grr_push((3, 2, 1), 6, 2)
    ring = data.ring
    assert data.rank == 6
    ch1, ch2, ch3 = data.ch[1], data.ch[2], data.ch[3]
    assert integrate_products([ch1, ch1, ch1]) == -396
    assert integrate_products([ch1, ch2]) == -66
    assert ch3.integrate() == 66
    c1, c2, c3 = chern_from_ch(data, 3)
    assert (c2 * ring.tangent_c1()).integrate() == -196
    assert c3.integrate() == 132
    assert degeneracy_euler(data) == -196
    # ch_1 = 24 C23 + 14 C13 + 6 C12 - 6 D12 - 3 D13 - 2 D23
    expected = (
        ring.point_on(0).scale(24) + ring.point_on(1).scale(14) + ring.point_on(2).scale(6)
        - ring.diagonal(0, 1).scale(6) - ring.diagonal(0, 2).scale(3) - ring.diagonal(1, 2).scale(2)
    )
    assert ch1 == expected
    expected2 = (
        ring.point_on(0, 1).scale(-60) - ring.point_on(0, 2).scale(27) - ring.point_on(1, 2).scale(16)
        + ring.small_diagonal((0, 1, 2)).scale(6)
    )
    assert ch2 == expected2


def test_ch_components_are_homogeneous():
    data = grr_push((3, 2, 1), 6, 2)
    for k, ch in enumerate(data.ch):
        for word in ch.terms:
            assert ch.ring.word_degree(word) == 2 * k


def test_twisted_pushforward_22():
    data = grr_push((2, 2), 6, 2, twist=True)
    assert data.rank == 1
    assert surface_class_coords(data.ch[1]) == (-14, -14, 4)


def test_porteous_matches_theta_count():
    data = grr_push((2, 2), 6, 2)
    c1, c2 = chern_from_ch(data, 2)
    assert (c1 * c1 - c2).integrate() == theta_count((2, 2), 2) == 32


@pytest.mark.parametrize(
    "parts,g,expected", [((5, 1), 2, 50), ((3, 3), 2, 162), ((2, 2), 2, 32), ((4, 2), 2, 128), ((1, 1, 1), 3, 6)]
)
def test_theta_count(parts, g, expected):
    assert theta_count(parts, g) == expected


def test_theta_count_dimension():
    with pytest.raises(DimensionError):
        theta_count((4, 1, 1), 2)


@pytest.mark.parametrize(
    "cls,expected",
    [
        (BlowupSurfaceClass(14, 14, -4, -1, 32, 2), -176),
        (BlowupSurfaceClass(0, 0, 0, 0, 0, 2), 0),
        (BlowupSurfaceClass(2, 2, 0, 0, 0, 2), -16),
    ],
)
def test_blowup_divisor_euler(cls, expected):
    assert blowup_divisor_euler(cls) == expected


def test_blowup_intersection_form():
    f1 = BlowupSurfaceClass(1, 0, 0, 0, 5, 2)
    f2 = BlowupSurfaceClass(0, 1, 0, 0, 5, 2)
    d = BlowupSurfaceClass(0, 0, 1, 0, 5, 2)
    e = BlowupSurfaceClass(0, 0, 0, 1, 5, 2)
    assert f1.dot(f1) == 0 and f1.dot(f2) == 1 and d.dot(f1) == 1
    assert d.dot(d) == -2 and e.dot(e) == -5 and e.dot(f1) == 0


def test_integrate_is_rational():
    ring = KunnethRing(1, 1)
    assert ring.point().scale(Fraction(1, 2)).integrate() == Fraction(1, 2)


def test_top_ch_component_indexed_by_true_degree():
    # on C^3 the pushforward has components in degrees 0..3 only; the top one is ch_3
    data = grr_push((3, 2, 1), 6, 2)
    assert len(data.ch) == 4
    assert data.ch[3] == data.ring.point().scale(66)
