import random
from math import comb

import pytest

from weylsep import qpoly
from weylsep.errors import DomainError, NotDivisibleError
from weylsep.qpoly import QPolynomial


def test_q_int_values():
    assert qpoly.q_int(1) == QPolynomial((1,))
    assert qpoly.q_int(2) == QPolynomial((1, 1))
    assert qpoly.q_int(4) == QPolynomial((1, 1, 1, 1))


def test_q_int_rejects_zero():
    with pytest.raises(DomainError):
        qpoly.q_int(0)


def test_q_multinomial_small():
    assert qpoly.q_multinomial((1, 1)) == QPolynomial((1, 1))
    # [3]! expanded directly: (1+q)(1+q+q^2)
    assert qpoly.q_multinomial((1, 1, 1)) == QPolynomial((1, 2, 2, 1))
    assert qpoly.q_multinomial((0, 5)) == QPolynomial((1,))


def test_q_multinomial_at_one_is_multinomial():
    for a in range(5):
        for b in range(5):
            if a + b <= 10:
                assert qpoly.q_multinomial((a, b))(1) == comb(a + b, a)


def test_q_multinomial_symmetric_in_parts():
    assert qpoly.q_multinomial((2, 3, 1)) == qpoly.q_multinomial((1, 2, 3))


def test_mul_and_div_exact():
    a = QPolynomial((1, 1))
    b = QPolynomial((1, 1, 1))
    assert a * b == QPolynomial((1, 2, 2, 1))
    assert QPolynomial((1, 2, 2, 1)).div_exact(a) == b


def test_div_exact_rejects_nondivisor():
    with pytest.raises(NotDivisibleError):
        QPolynomial((1, 0, 1)).div_exact(QPolynomial((1, 1)))


def test_div_exact_roundtrip_random():
    rng = random.Random(2024)
    for _ in range(50):
        a = QPolynomial([rng.randint(-5, 5) for _ in range(rng.randint(1, 21))])
        b = QPolynomial([rng.randint(-5, 5) for _ in range(rng.randint(1, 21))])
        if a.is_zero() or b.is_zero():
            continue
        assert (a * b).div_exact(b) == a


def test_palindromicity():
    assert qpoly.is_palindromic(QPolynomial((1, 1, 1)))
    assert qpoly.symmetry_break_index(QPolynomial((1, 1, 1))) is None
    f = QPolynomial((1, 2, 0, 1))
    assert not qpoly.is_palindromic(f)
    assert qpoly.symmetry_break_index(f) == 1


def test_palindromicity_rejects_zero():
    with pytest.raises(DomainError):
        qpoly.is_palindromic(QPolynomial())
    with pytest.raises(DomainError):
        qpoly.symmetry_break_index(QPolynomial())


def test_multinomial_congruence_examples():
    assert qpoly.check_multinomial_congruence(1, 1, 1)
    both = qpoly.q_multinomial((1, 1, 1)).truncated(2)
    assert both == QPolynomial((1, 2))
    for k in range(5):
        assert qpoly.check_multinomial_congruence(0, 0, k)


def test_rendering():
    assert QPolynomial((1, 2, 0, 1)).text() == "1 + 2*q + q^3"
    assert QPolynomial().text() == "0"
    assert QPolynomial((0, -1, 3)).text() == "- q + 3*q^2"
    assert QPolynomial((1, 2, 0, 1)).to_json() == [1, 2, 0, 1]


def test_eval_and_reciprocal():
    f = QPolynomial((1, 2, 3))
    assert f(2) == 1 + 4 + 12
    assert f.reciprocal() == QPolynomial((3, 2, 1))


def test_zero_is_canonical():
    assert QPolynomial((0, 0, 0)).coeffs == ()
    assert QPolynomial((1, 0)).coeffs == (1,)
