import pytest

from gvcurves.homfly import homfly_t2, specialize_a0
from gvcurves.poly import BiLaurentFrac, BiLaurentPoly, LaurentPoly

GOLDEN = {
    2: "q{(q^-1-q) + (q^-1-q)^-1}",
    3: "q^2{(q^-1-q)^2 + 2}",
    4: "q^3{(q^-1-q)^3 + 3(q^-1-q) + (q^-1-q)^-1}",
    5: "q^4{(q^-1-q)^4 + 4(q^-1-q)^2 + 3}",
}


@pytest.mark.parametrize("n", sorted(GOLDEN))
def test_specialization_golden(n):
    assert specialize_a0(n).to_text(n - 1) == GOLDEN[n]


def test_unknot_and_unlink():
    assert homfly_t2(1) == BiLaurentFrac(BiLaurentPoly.from_s(LaurentPoly.const(1)))
    # T(2,0) is the two-component unlink
    p0 = homfly_t2(0)
    assert p0.pole_order == 1


def test_trefoil():
    # P(3_1) = 2a^2 - a^4 + a^2 (q - q^-1)^2 in this normalization
    x = LaurentPoly({2: 1, -2: -1})
    expected = BiLaurentPoly.from_s(LaurentPoly.const(2) + x * x, 2) - BiLaurentPoly.a(4)
    assert homfly_t2(3) == BiLaurentFrac(expected)


@pytest.mark.parametrize("n", range(1, 9))
def test_pole_order_parity(n):
    assert specialize_a0(n).pole_order == (1 if n % 2 == 0 else 0)


@pytest.mark.parametrize("n", range(0, 8))
def test_skein_relation(n):
    # P(n+2) - a^2 P(n) = -a (q - q^-1) P(n+1)
    x = LaurentPoly({2: 1, -2: -1})
    lhs = homfly_t2(n + 2) + BiLaurentFrac(-BiLaurentPoly.a(2)) * homfly_t2(n)
    rhs = BiLaurentFrac(BiLaurentPoly.from_s(-x, 1)) * homfly_t2(n + 1)
    assert lhs == rhs


def test_computed_per_call():
    assert homfly_t2(6) is not homfly_t2(6)
