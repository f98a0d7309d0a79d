import pytest
from hypothesis import given, strategies as st

from dgalab.algebra import (ANY_DEGREE, Generator, NcPoly, Signature,
                            cast_prefix, homogeneous_degree, is_homogeneous,
                            reindex, substitute, word_key)
from dgalab.errors import (MissingImage, MixedRings, SignatureMismatch)
from dgalab.rings import Integers, IntegersMod, Rationals


def sig_xy(ring=None, degrees=(0, 0)):
    ring = ring or Integers()
    return Signature(ring, [Generator(n, d) for n, d in zip("xy", degrees)])


def test_signature_rejects_duplicate_names():
    with pytest.raises(ValueError):
        Signature(Integers(), [Generator("x", 0), Generator("x", 1)])


def test_add_cancellation():
    sig = sig_xy()
    x = NcPoly.generator(sig, "x")
    assert not (x + (-x))
    xy = NcPoly.from_word(sig, (0, 1))
    one = NcPoly.one(sig)
    assert str((xy + one) + one) == "2 + x*y"


def test_char_two_cancellation():
    sig = sig_xy(IntegersMod(2))
    x = NcPoly.generator(sig, "x")
    assert not (x + x)


def test_noncommutative_product():
    sig = sig_xy()
    x, y = NcPoly.generator(sig, "x"), NcPoly.generator(sig, "y")
    assert x * y != y * x
    assert str(x * y) == "x*y"
    assert str(y * x) == "y*x"


def test_single_variable_product():
    sig = Signature(Integers(), [Generator("x", 0)])
    x, one = NcPoly.generator(sig, 0), NcPoly.one(sig)
    assert str((x + one) * (x - one)) == "-1 + x^2"


def test_char_two_square_expands_without_commuting():
    sig = sig_xy(IntegersMod(2))
    x, y = NcPoly.generator(sig, "x"), NcPoly.generator(sig, "y")
    square = (x + y) * (x + y)
    expected = NcPoly(sig, {(0, 0): 1, (0, 1): 1, (1, 0): 1, (1, 1): 1})
    assert square == expected


def test_mixed_rings_rejected():
    a = NcPoly.one(sig_xy(Integers()))
    b = NcPoly.one(sig_xy(Rationals()))
    with pytest.raises(MixedRings):
        a + b


def test_signature_mismatch_rejected():
    a = NcPoly.one(sig_xy())
    other = Signature(Integers(), [Generator("u", 0), Generator("v", 0)])
    with pytest.raises(SignatureMismatch):
        a + NcPoly.one(other)


def test_homogeneous_degree():
    sig = Signature(Integers(), [Generator("x", 0), Generator("y", 0), Generator("z", 1)])
    xy = NcPoly.from_word(sig, (0, 1))
    assert homogeneous_degree(xy) == 0
    mixed = NcPoly.generator(sig, "z") + xy
    assert homogeneous_degree(mixed) is None
    assert homogeneous_degree(NcPoly.zero(sig)) is ANY_DEGREE
    assert is_homogeneous(NcPoly.zero(sig), 17)


def test_substitute_evaluation_at_identity():
    sig = Signature(Integers(), [Generator("x", 0)])
    p = NcPoly.generator(sig, 0) - NcPoly.one(sig)
    images = {0: NcPoly.one(sig)}
    assert not substitute(p, images, sig)


def test_substitute_identity_map():
    sig = sig_xy()
    p = NcPoly.generator(sig, "x") * NcPoly.generator(sig, "y") - NcPoly.one(sig)
    images = {i: NcPoly.generator(sig, i) for i in range(len(sig))}
    assert substitute(p, images, sig) == p


def test_substitute_relation_slot():
    # p = p1 * F * q1 with F |-> y1 lands as p1 * y1 * q1
    src = Signature(Integers(), [Generator("p1", 0), Generator("F", 0), Generator("q1", 0)])
    tgt = Signature(Integers(), [Generator("p1", 0), Generator("y1", 1), Generator("q1", 0)])
    p = NcPoly.from_word(src, (0, 1, 2))
    images = {0: NcPoly.generator(tgt, 0), 1: NcPoly.generator(tgt, 1), 2: NcPoly.generator(tgt, 2)}
    assert substitute(p, images, tgt) == NcPoly.from_word(tgt, (0, 1, 2))


def test_substitute_missing_image():
    sig = sig_xy()
    p = NcPoly.generator(sig, "x")
    with pytest.raises(MissingImage):
        substitute(p, {}, sig)


def test_printing_canonical_and_sorted():
    sig = sig_xy()
    p = NcPoly(sig, {(1, 0): -1, (): 2, (0,): 1, (0, 0, 0): 3})
    assert str(p) == "2 + x - y*x + 3*x^3"
    assert str(NcPoly.zero(sig)) == "0"


def test_printing_fractions():
    sig = sig_xy(Rationals())
    from fractions import Fraction
    p = NcPoly(sig, {(0,): Fraction(1, 2), (): Fraction(-3, 4)})
    assert str(p) == "-3/4 + 1/2*x"


def test_cast_prefix_and_reindex():
    small = sig_xy()
    big = Signature(Integers(), [Generator("x", 0), Generator("y", 0), Generator("r1", 1)])
    p = NcPoly.from_word(small, (0, 1), 2)
    lifted = cast_prefix(p, big)
    assert lifted.terms == {(0, 1): 2}
    back = reindex(lifted, small, {0: 0, 1: 1})
    assert back == p
    with pytest.raises(SignatureMismatch):
        reindex(NcPoly.generator(big, 2), small, {0: 0, 1: 1})


# --- randomized algebra laws -------------------------------------------------

RINGS = [Integers(), Rationals(), IntegersMod(2), IntegersMod(6)]


def poly_strategy(sig, max_len=4):
    if isinstance(sig.ring, Rationals):
        coeffs = st.fractions(min_value=-3, max_value=3, max_denominator=4)
    else:
        coeffs = st.integers(min_value=-4, max_value=4)
    words = st.lists(st.integers(min_value=0, max_value=len(sig) - 1),
                     min_size=0, max_size=max_len).map(tuple)
    return st.dictionaries(words, coeffs, max_size=4).map(lambda t: NcPoly(sig, t))


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.spec)
def test_mul_associative_unital_distributive(ring):
    sig = sig_xy(ring)
    polys = poly_strategy(sig)

    @given(polys, polys, polys)
    def laws(a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * NcPoly.one(sig) == a
        assert NcPoly.one(sig) * a == a
        assert a * (b + c) == a * b + a * c
        assert (a + b) * c == a * c + b * c

    laws()


def test_degree_additive_on_homogeneous_products():
    sig = Signature(Integers(), [Generator("x", 0), Generator("z", 1), Generator("w", -2)])
    words = st.lists(st.integers(min_value=0, max_value=2), min_size=0, max_size=3).map(tuple)

    @given(words, words, st.integers(min_value=-3, max_value=3), st.integers(min_value=-3, max_value=3))
    def law(w1, w2, c1, c2):
        a = NcPoly(sig, {w1: c1})
        b = NcPoly(sig, {w2: c2})
        da, db = homogeneous_degree(a), homogeneous_degree(b)
        ab = a * b
        if ab and da is not ANY_DEGREE and db is not ANY_DEGREE:
            assert homogeneous_degree(ab) == da + db

    law()


def test_substitute_is_algebra_map():
    sig = sig_xy(IntegersMod(5))
    tgt = Signature(IntegersMod(5), [Generator("u", 0), Generator("v", 0)])
    polys = poly_strategy(sig, max_len=3)
    u = NcPoly.generator(tgt, 0)
    v = NcPoly.generator(tgt, 1)
    images = {0: u * v - NcPoly.one(tgt), 1: v + u.scale(2)}

    @given(polys, polys)
    def law(p, q):
        assert (substitute(p * q, images, tgt)
                == substitute(p, images, tgt) * substitute(q, images, tgt))
        assert (substitute(p + q, images, tgt)
                == substitute(p, images, tgt) + substitute(q, images, tgt))

    law()


def test_parse_print_round_trip_random():
    from dgalab.parsing import poly_from_str
    for ring in RINGS:
        sig = sig_xy(ring)
        polys = poly_strategy(sig)

        @given(polys)
        def round_trip(p):
            assert poly_from_str(str(p), sig) == p

        round_trip()


def test_word_key_orders_by_length_then_lex():
    words = [(), (1,), (0,), (0, 1), (1, 0), (0, 0)]
    assert sorted(words, key=word_key) == [(), (0,), (1,), (0, 0), (0, 1), (1, 0)]
