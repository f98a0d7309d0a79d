from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dgalab.errors import NotAUnit
from dgalab.rings import (Integers, IntegersMod, Rationals, is_prime,
                          ring_from_string)

RINGS = [Integers(), Rationals(), IntegersMod(2), IntegersMod(5), IntegersMod(6)]


def test_integer_arithmetic():
    zz = Integers()
    assert zz.add(2, 3) == 5
    assert zz.mul(-1, -1) == 1
    assert zz.is_unit(-1) and zz.inverse(-1) == -1
    assert not zz.is_unit(2)
    with pytest.raises(NotAUnit):
        zz.inverse(2)


def test_rational_arithmetic():
    qq = Rationals()
    assert qq.add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    assert qq.mul(Fraction(2, 3), Fraction(3, 4)) == Fraction(1, 2)
    assert qq.is_unit(Fraction(2, 3))
    assert qq.inverse(Fraction(2, 3)) == Fraction(3, 2)
    assert not qq.is_unit(0)


def test_modular_arithmetic():
    z6 = IntegersMod(6)
    assert z6.add(4, 5) == 3
    assert z6.mul(2, 3) == 0  # zero divisor
    assert z6.is_unit(5) and z6.inverse(5) == 5
    assert not z6.is_unit(2)
    assert z6.normalize(-1) == 5
    assert z6.normalize(Fraction(1, 5)) == 5
    with pytest.raises(NotAUnit):
        z6.normalize(Fraction(1, 2))


def test_modulus_must_be_at_least_two():
    with pytest.raises(ValueError):
        IntegersMod(1)
    with pytest.raises(ValueError):
        IntegersMod(0)


def test_ring_string_round_trip():
    for spec in ("int", "rat", "zmod:2", "zmod:360"):
        assert ring_from_string(spec).spec == spec
    with pytest.raises(ValueError):
        ring_from_string("zmod:x")
    with pytest.raises(ValueError):
        ring_from_string("real")


def test_is_prime():
    primes = {2, 3, 5, 7, 11, 13, 97}
    for n in range(100):
        assert is_prime(n) == (n in primes or (n > 13 and is_prime(n)))
    assert not is_prime(91)  # 7 * 13
    assert is_prime(101)


def _values(ring):
    if isinstance(ring, Rationals):
        return st.fractions(min_value=-4, max_value=4, max_denominator=6)
    return st.integers(min_value=-20, max_value=20)


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.spec)
def test_ring_axioms(ring):
    values = _values(ring)

    @given(values, values, values)
    def axioms(a, b, c):
        a, b, c = ring.normalize(a), ring.normalize(b), ring.normalize(c)
        assert ring.add(a, b) == ring.add(b, a)
        assert ring.add(ring.add(a, b), c) == ring.add(a, ring.add(b, c))
        assert ring.mul(ring.mul(a, b), c) == ring.mul(a, ring.mul(b, c))
        assert ring.mul(a, ring.add(b, c)) == ring.add(ring.mul(a, b), ring.mul(a, c))
        assert ring.add(a, ring.zero) == a
        assert ring.mul(a, ring.one) == a
        assert ring.add(a, ring.neg(a)) == ring.zero
        # canonical form is idempotent
        assert ring.normalize(a) == a
        if ring.is_unit(a):
            assert ring.mul(ring.inverse(a), a) == ring.one

    axioms()
