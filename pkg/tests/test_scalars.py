import pickle
import random
from fractions import Fraction

import pytest

from src.common.errors import ScalarError
from src.scalars import EXACT, FLOAT, FloatBackend, QSqrt2, backend_of, get_backend, parse_scalar

S2 = QSqrt2.sqrt2()


@pytest.mark.parametrize(
    "text, a, b",
    [
        ("1/2", Fraction(1, 2), 0),
        ("-1/4*s2", 0, Fraction(-1, 4)),
        ("3/4 - 1/2*s2", Fraction(3, 4), Fraction(-1, 2)),
        ("7 + 2*s2", 7, 2),
    ],
)
def test_parse_literal(text, a, b):
    value = parse_scalar(text)
    assert value.a == a
    assert value.b == b
    assert parse_scalar(value.to_literal()) == value


@pytest.mark.parametrize("text", ["abc", "1/0", "s2", "1.5", "1/2*s2 + 1"])
def test_malformed_literal(text):
    with pytest.raises(ScalarError):
        parse_scalar(text)


def test_literal_format():
    assert QSqrt2(Fraction(3, 4), Fraction(-1, 2)).to_literal() == "3/4 - 1/2*s2"
    assert QSqrt2(0, Fraction(1, 4)).to_literal() == "1/4*s2"
    assert QSqrt2(5).to_literal() == "5"
    assert str(QSqrt2()) == "0"


def test_field_arithmetic():
    one_plus = 1 + S2
    one_minus = 1 - S2
    assert one_plus * one_minus == -1
    assert one_plus.inverse() == S2 - 1
    assert (S2 / 2) * S2 == 1
    assert 1 / S2 == QSqrt2(0, Fraction(1, 2))
    assert one_plus.conj() == one_minus
    assert one_plus.norm() == -1


def test_division_by_zero():
    with pytest.raises(ScalarError):
        QSqrt2().inverse()
    with pytest.raises(ZeroDivisionError):
        S2 / QSqrt2(0)
    with pytest.raises(ScalarError):
        S2 / 0


def test_exact_ordering():
    assert S2 > Fraction(7, 5)
    assert S2 < Fraction(3, 2)
    assert (3 - 2 * S2).sign() == 1
    assert (1 - S2).sign() == -1
    assert abs(1 - S2) == S2 - 1
    assert sorted([S2, QSqrt2(1), QSqrt2(Fraction(3, 2))]) == [QSqrt2(1), S2, QSqrt2(Fraction(3, 2))]


def test_sqrt_inside_field():
    assert (3 + 2 * S2).sqrt() == 1 + S2
    assert QSqrt2(Fraction(1, 2)).sqrt() == S2 / 2
    assert QSqrt2(8).sqrt() == 2 * S2
    assert QSqrt2(Fraction(9, 16)).sqrt() == Fraction(3, 4)
    assert QSqrt2(0).sqrt() == 0


@pytest.mark.parametrize("value", [QSqrt2(3), QSqrt2(6), QSqrt2(-1), S2])
def test_sqrt_outside_field(value):
    with pytest.raises(ScalarError):
        value.sqrt()


def test_pow():
    assert S2 ** 4 == 4
    assert S2 ** -2 == Fraction(1, 2)
    assert QSqrt2(Fraction(1, 4)) ** 3 == Fraction(1, 64)


def test_pickle_keeps_value():
    value = QSqrt2(Fraction(3, 4), Fraction(-1, 2))
    assert pickle.loads(pickle.dumps(value)) == value


def test_hash_matches_equality():
    assert {QSqrt2(1), QSqrt2(Fraction(2, 2))} == {QSqrt2(1)}
    assert hash(QSqrt2(2)) == hash(QSqrt2(Fraction(4, 2)))


def test_exact_backend_rejects_floats():
    with pytest.raises(ScalarError):
        EXACT.coerce(0.5)
    assert EXACT.coerce("1/2*s2") == S2 / 2


def test_float_backend_tolerance():
    loose = FloatBackend(1e-6)
    assert loose.is_zero(1e-7)
    assert not FLOAT.is_zero(1e-7)
    assert FLOAT.coerce("1/2*s2") == pytest.approx(2 ** 0.5 / 2)
    assert FLOAT.sqrt(2.0) == pytest.approx(2 ** 0.5)
    with pytest.raises(ScalarError):
        FLOAT.sqrt(-1.0)


def test_backend_lookup():
    assert get_backend("exact") is EXACT
    assert get_backend("float") is FLOAT
    assert get_backend("float", 1e-3).tolerance == 1e-3
    assert backend_of(QSqrt2(1), 0.5) is FLOAT
    assert backend_of(QSqrt2(1)) is EXACT
    with pytest.raises(ValueError):
        get_backend("symbolic")


def random_element(rng):
    def part():
        return Fraction(rng.randint(-9, 9), rng.randint(1, 9))

    return QSqrt2(part(), part())


@pytest.mark.parametrize("seed", range(10))
def test_field_axioms_on_random_elements(seed):
    rng = random.Random(seed)
    for _ in range(20):
        x, y, z = (random_element(rng) for _ in range(3))
        assert x + y == y + x
        assert x * y == y * x
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x - x == 0
        assert x + QSqrt2() == x
        assert x * QSqrt2(1) == x
        if x != 0:
            assert x * x.inverse() == 1
            assert (y / x) * x == y


@pytest.mark.parametrize("seed", range(5))
def test_to_float_is_multiplicative(seed):
    rng = random.Random(100 + seed)
    for _ in range(50):
        x, y = random_element(rng), random_element(rng)
        assert (x * y).to_float() == pytest.approx(x.to_float() * y.to_float(), abs=1e-12)
        assert (x + y).to_float() == pytest.approx(x.to_float() + y.to_float(), abs=1e-12)
