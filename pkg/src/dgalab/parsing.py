"""Tokenizer and parsers for polynomial strings and presentation files.

Presentation grammar, one presentation per file:

    group  <name> = < g1, g2 | w1, w2 >      relator words like g1*g2^-1*g1^3
    algebra <name> = < x1, x2 | 2*x1*x2 - 1, x1^2 >

Whitespace-insensitive; identifiers match [A-Za-z][A-Za-z0-9_]*.  An empty
relator/relation list (`| >`) is allowed.  Polynomial strings additionally
accept identifiers with a `#<digits>` suffix so stabilized DGA files
(whose fresh generators are named e#1, f#1, ...) round-trip.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .algebra import NcPoly, Signature
from .errors import (DuplicateGenerator, NotAUnit, ParseError,
                     UnknownGenerator)
from .presentations import AlgebraPresentation, GroupPresentation

_TOKEN_RE = re.compile(
    r"""(?P<ws>\s+)
      | (?P<ident>[A-Za-z][A-Za-z0-9_]*(?:\#[0-9]+)?)
      | (?P<number>[0-9]+)
      | (?P<sym>[<>|,=*^+\-/])
    """,
    re.VERBOSE,
)


@dataclass
class Token:
    kind: str   # "ident", "number", one of the symbol characters, or "end"
    text: str
    line: int
    column: int


def tokenize(text: str):
    tokens = []
    pos, line, col = 0, 1, 1
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        lexeme = m.group(0)
        if m.lastgroup == "ident":
            tokens.append(Token("ident", lexeme, line, col))
        elif m.lastgroup == "number":
            tokens.append(Token("number", lexeme, line, col))
        elif m.lastgroup == "sym":
            tokens.append(Token(lexeme, lexeme, line, col))
        newlines = lexeme.count("\n")
        if newlines:
            line += newlines
            col = len(lexeme) - lexeme.rfind("\n")
        else:
            col += len(lexeme)
        pos = m.end()
    tokens.append(Token("end", "", line, col))
    return tokens


class _Stream:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != "end":
            self.pos += 1
        return tok

    def expect(self, *kinds) -> Token:
        tok = self.peek()
        if tok.kind not in kinds:
            raise ParseError(f"unexpected {tok.kind!r}", tok.line, tok.column, expected=kinds)
        return self.advance()


def _parse_number(stream) -> int:
    return int(stream.expect("number").text)


def _parse_poly(stream, sig: Signature, stop_kinds) -> NcPoly:
    """poly := [+-] term { (+|-) term };  term := factor { * factor };
    factor := number [/ number] | ident [^ number]."""
    ring = sig.ring
    result = NcPoly.zero(sig)
    first = True
    while True:
        sign = 1
        tok = stream.peek()
        if tok.kind in ("+", "-"):
            stream.advance()
            sign = -1 if tok.kind == "-" else 1
        elif not first:
            break
        coeff = Fraction(sign)
        word = []
        while True:
            tok = stream.peek()
            if tok.kind == "number":
                stream.advance()
                value = Fraction(int(tok.text))
                if stream.peek().kind == "/":
                    stream.advance()
                    denom_tok = stream.expect("number")
                    denom = int(denom_tok.text)
                    if denom == 0:
                        raise ParseError("zero denominator", denom_tok.line, denom_tok.column)
                    value /= denom
                coeff *= value
            elif tok.kind == "ident":
                stream.advance()
                try:
                    idx = sig._index[tok.text]
                except KeyError:
                    raise UnknownGenerator(
                        f"line {tok.line}, col {tok.column}: unknown generator {tok.text!r}") from None
                power = 1
                if stream.peek().kind == "^":
                    stream.advance()
                    exp_tok = stream.expect("number")
                    power = int(exp_tok.text)
                    if power < 1:
                        raise ParseError("polynomial exponents must be positive",
                                         exp_tok.line, exp_tok.column)
                word.extend([idx] * power)
            else:
                raise ParseError(f"unexpected {tok.kind!r} in polynomial",
                                 tok.line, tok.column, expected=("number", "ident"))
            if stream.peek().kind == "*":
                stream.advance()
                continue
            break
        try:
            c = ring.normalize(coeff)
        except (ValueError, NotAUnit) as exc:
            raise ParseError(f"coefficient {coeff} is not valid over {ring.spec}: {exc}",
                             tok.line, tok.column) from None
        result = result + NcPoly(sig, {tuple(word): c})
        first = False
        if stream.peek().kind in stop_kinds:
            break
    tok = stream.peek()
    if tok.kind not in stop_kinds and tok.kind not in ("+", "-"):
        raise ParseError(f"unexpected {tok.kind!r} after polynomial term",
                         tok.line, tok.column, expected=stop_kinds + ("+", "-"))
    return result


def poly_from_str(text: str, sig: Signature) -> NcPoly:
    stream = _Stream(tokenize(text))
    poly = _parse_poly(stream, sig, stop_kinds=("end",))
    stream.expect("end")
    return poly


def _parse_word(stream, generator_index: dict, stop_kinds):
    """word := 1 | factor { * factor };  factor := ident [^ [-] number].

    Returns a flat list of (generator index, sign) letters; exponent 0
    letters are dropped, negative exponents emit inverse letters.
    """
    letters = []
    if stream.peek().kind == "number":
        tok = stream.advance()
        if tok.text != "1":
            raise ParseError("only the identity word 1 may appear as a bare number",
                             tok.line, tok.column)
        return letters
    while True:
        tok = stream.expect("ident")
        try:
            idx = generator_index[tok.text]
        except KeyError:
            raise UnknownGenerator(
                f"line {tok.line}, col {tok.column}: unknown generator {tok.text!r}") from None
        exp = 1
        if stream.peek().kind == "^":
            stream.advance()
            sign = 1
            if stream.peek().kind == "-":
                stream.advance()
                sign = -1
            exp = sign * _parse_number(stream)
        letters.extend([(idx, 1 if exp > 0 else -1)] * abs(exp))
        if stream.peek().kind == "*":
            stream.advance()
            continue
        tok = stream.peek()
        if tok.kind in stop_kinds:
            return letters
        raise ParseError(f"unexpected {tok.kind!r} in word", tok.line, tok.column,
                         expected=stop_kinds + ("*",))


def parse_presentation(text: str, ring=None):
    """Parse a presentation file; returns a Group- or AlgebraPresentation.

    Algebra relations need a coefficient ring (chosen by the caller, e.g.
    a CLI flag); group presentations ignore it.
    """
    stream = _Stream(tokenize(text))
    kw = stream.expect("ident")
    if kw.text not in ("group", "algebra"):
        raise ParseError(f"unknown presentation kind {kw.text!r}", kw.line, kw.column,
                         expected=("group", "algebra"))
    name = stream.expect("ident").text
    stream.expect("=")
    stream.expect("<")
    gen_names = []
    if stream.peek().kind == "ident":
        gen_names.append(stream.advance().text)
        while stream.peek().kind == ",":
            stream.advance()
            gen_names.append(stream.expect("ident").text)
    if len(set(gen_names)) != len(gen_names):
        raise DuplicateGenerator(f"repeated generator name in presentation {name!r}")
    stream.expect("|")

    if kw.text == "group":
        index = {g: i for i, g in enumerate(gen_names)}
        relators = []
        if stream.peek().kind != ">":
            relators.append(_parse_word(stream, index, stop_kinds=(",", ">")))
            while stream.peek().kind == ",":
                stream.advance()
                relators.append(_parse_word(stream, index, stop_kinds=(",", ">")))
        stream.expect(">")
        stream.expect("end")
        return GroupPresentation(name, gen_names, relators)

    if ring is None:
        raise ValueError("algebra presentations need a coefficient ring")
    from .algebra import Generator
    sig = Signature(ring, [Generator(g, 0) for g in gen_names])
    relations = []
    if stream.peek().kind != ">":
        relations.append(_parse_poly(stream, sig, stop_kinds=(",", ">")))
        while stream.peek().kind == ",":
            stream.advance()
            relations.append(_parse_poly(stream, sig, stop_kinds=(",", ">")))
    stream.expect(">")
    stream.expect("end")
    return AlgebraPresentation(name, sig, relations)
