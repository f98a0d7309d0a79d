import pytest

from dgalab.algebra import Generator, NcPoly, Signature
from dgalab.errors import (DuplicateGenerator, ParseError, UnknownGenerator)
from dgalab.parsing import parse_presentation, poly_from_str
from dgalab.presentations import AlgebraPresentation, GroupPresentation
from dgalab.rings import Integers, IntegersMod, Rationals


def test_group_presentation_basic():
    pres = parse_presentation("group T = < g | g >")
    assert isinstance(pres, GroupPresentation)
    assert pres.name == "T"
    assert pres.generators == ("g",)
    assert pres.relators == (((0, 1),),)


def test_algebra_presentation_basic():
    pres = parse_presentation("algebra A = < x1, x2 | x1*x2 - 1 >", Integers())
    assert isinstance(pres, AlgebraPresentation)
    assert pres.generators == ("x1", "x2")
    assert [str(f) for f in pres.relations] == ["-1 + x1*x2"]


def test_empty_relator_list():
    pres = parse_presentation("group Z = < a | >")
    assert pres.generators == ("a",)
    assert pres.relators == ()


def test_empty_generator_list():
    pres = parse_presentation("group E = < | >")
    assert pres.generators == ()
    assert pres.relators == ()


def test_whitespace_insensitive():
    text = "group\nT=<g,h|g*h^-1 ,\n h^3>"
    pres = parse_presentation(text)
    assert pres.generators == ("g", "h")
    assert pres.relator_text(pres.relators[0]) == "g*h^-1"
    assert pres.relator_text(pres.relators[1]) == "h^3"


def test_relators_freely_reduced_on_ingest():
    pres = parse_presentation("group T = < a, b | a*b*b^-1*a^-1*a >")
    assert pres.relator_text(pres.relators[0]) == "a"


def test_relator_fully_cancels_to_identity():
    pres = parse_presentation("group T = < a | a*a^-1 >")
    assert pres.relators == ((),)
    assert pres.relator_text(pres.relators[0]) == "1"


def test_exponent_zero_letters_dropped():
    pres = parse_presentation("group T = < a, b | a^0*b >")
    assert pres.relator_text(pres.relators[0]) == "b"


def test_negative_exponent_expansion():
    pres = parse_presentation("group T = < a | a^-3 >")
    assert pres.relators[0] == ((0, -1), (0, -1), (0, -1))


def test_duplicate_generator_rejected():
    with pytest.raises(DuplicateGenerator):
        parse_presentation("group T = < a, a | >")


def test_unknown_generator_rejected():
    with pytest.raises(UnknownGenerator):
        parse_presentation("group T = < a | b >")
    with pytest.raises(UnknownGenerator):
        parse_presentation("algebra A = < x | y - 1 >", Integers())


def test_syntax_error_carries_position_and_expected():
    with pytest.raises(ParseError) as err:
        parse_presentation("group T = < a | a >>")
    assert err.value.line == 1
    assert err.value.column == 20
    with pytest.raises(ParseError) as err:
        parse_presentation("group T = ( a | a )")
    assert err.value.expected == ("<",)


def test_algebra_needs_ring():
    with pytest.raises(ValueError):
        parse_presentation("algebra A = < x | x >")


def test_poly_parse_examples():
    sig = Signature(Integers(), [Generator("x", 0), Generator("y", 0)])
    assert poly_from_str("2*x*y - 1", sig) == NcPoly(sig, {(0, 1): 2, (): -1})
    assert poly_from_str("x^2", sig) == NcPoly(sig, {(0, 0): 1})
    assert poly_from_str("-x + x", sig) == NcPoly.zero(sig)
    assert poly_from_str("0", sig) == NcPoly.zero(sig)
    assert poly_from_str("3", sig) == NcPoly.constant(sig, 3)


def test_poly_parse_fractions():
    sig = Signature(Rationals(), [Generator("x", 0)])
    from fractions import Fraction
    assert poly_from_str("1/2*x - 3/4", sig) == NcPoly(sig, {(0,): Fraction(1, 2), (): Fraction(-3, 4)})
    sig_int = Signature(Integers(), [Generator("x", 0)])
    assert poly_from_str("4/2*x", sig_int) == NcPoly(sig_int, {(0,): 2})
    with pytest.raises(ParseError):
        poly_from_str("1/2*x", sig_int)


def test_poly_parse_modular_fraction():
    sig = Signature(IntegersMod(5), [Generator("x", 0)])
    assert poly_from_str("1/2*x", sig) == NcPoly(sig, {(0,): 3})  # 2^{-1} = 3 mod 5


def test_poly_rejects_nonpositive_exponent():
    sig = Signature(Integers(), [Generator("x", 0)])
    with pytest.raises(ParseError):
        poly_from_str("x^0", sig)
    with pytest.raises(ParseError):
        poly_from_str("x^-2", sig)


def test_poly_accepts_stabilization_names():
    sig = Signature(Integers(), [Generator("e#1", 1), Generator("f#1", 0)])
    assert poly_from_str("f#1", sig) == NcPoly.generator(sig, "f#1")


def test_presentation_text_round_trip():
    for text in ("group T = < g | g >",
                 "group K = < a, b | a*b*a^-1*b^-1*a^-1, a^3*b^-2 >",
                 "group Z = < a | >"):
        pres = parse_presentation(text)
        assert parse_presentation(pres.to_text()) == pres
    ring = Integers()
    for text in ("algebra A = < x1, x2 | 2*x1*x2 - 1, x1^2 >",):
        pres = parse_presentation(text, ring)
        assert parse_presentation(pres.to_text(), ring) == pres
