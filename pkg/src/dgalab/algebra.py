"""The free noncommutative graded algebra on finitely many generators.

Monomials are words: tuples of generator indices (the empty word is the
unit).  Polynomials are sparse maps word -> nonzero coefficient.  The
canonical monomial order is by word length, then lexicographically on
generator indices; printing, certificate files and the membership engine
all use this one order, which is what makes outputs byte-reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MissingImage, MixedRings, SignatureMismatch
from .rings import Ring


def word_key(word):
    """Sort key realizing the length-then-lex monomial order."""
    return (len(word), word)


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int


class Signature:
    """A coefficient ring together with an ordered list of graded generators."""

    def __init__(self, ring: Ring, generators):
        gens = tuple(generators)
        names = [g.name for g in gens]
        if len(set(names)) != len(names):
            raise ValueError("generator names must be pairwise distinct")
        if any(not g.name for g in gens):
            raise ValueError("generator names must be nonempty")
        self.ring = ring
        self.generators = gens
        self._index = {g.name: i for i, g in enumerate(gens)}

    def __len__(self):
        return len(self.generators)

    def names(self):
        return [g.name for g in self.generators]

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise SignatureMismatch(f"no generator named {name!r}") from None

    def degree(self, i: int) -> int:
        return self.generators[i].degree

    def word_degree(self, word) -> int:
        return sum(self.generators[i].degree for i in word)

    def degree_multiset(self):
        return sorted(g.degree for g in self.generators)

    def to_data(self):
        return {
            "ring": self.ring.spec,
            "generators": [{"name": g.name, "degree": g.degree} for g in self.generators],
        }

    @classmethod
    def from_data(cls, data, ring=None):
        from .rings import ring_from_string
        if ring is None:
            ring = ring_from_string(data["ring"])
        gens = [Generator(g["name"], int(g["degree"])) for g in data["generators"]]
        return cls(ring, gens)

    def __eq__(self, other):
        return (isinstance(other, Signature)
                and self.ring == other.ring
                and self.generators == other.generators)

    def __hash__(self):
        return hash((self.ring, self.generators))

    def __repr__(self):
        gens = ", ".join(f"{g.name}:{g.degree}" for g in self.generators)
        return f"Signature({self.ring.spec}; {gens})"


def require_same_signature(a: Signature, b: Signature):
    if a is b or a == b:
        return
    if a.ring != b.ring:
        raise MixedRings(f"cannot combine values over {a.ring.spec} and {b.ring.spec}")
    raise SignatureMismatch(f"signatures differ: {a!r} vs {b!r}")


class _AnyDegree:
    """Degree of the zero polynomial: homogeneous of every degree."""

    def __repr__(self):
        return "any"


ANY_DEGREE = _AnyDegree()


class NcPoly:
    """Sparse noncommutative polynomial over a fixed signature."""

    __slots__ = ("sig", "terms")

    def __init__(self, sig: Signature, terms=None):
        ring = sig.ring
        clean = {}
        if terms:
            for word, coeff in terms.items():
                c = ring.normalize(coeff)
                if not ring.is_zero(c):
                    clean[tuple(word)] = c
        self.sig = sig
        self.terms = clean

    @classmethod
    def _raw(cls, sig, terms):
        # Internal fast path: terms already canonical (normalized, nonzero).
        p = object.__new__(cls)
        p.sig = sig
        p.terms = terms
        return p

    @classmethod
    def zero(cls, sig):
        return cls._raw(sig, {})

    @classmethod
    def one(cls, sig):
        return cls._raw(sig, {(): sig.ring.one})

    @classmethod
    def constant(cls, sig, coeff):
        return cls(sig, {(): coeff})

    @classmethod
    def generator(cls, sig, which):
        i = sig.index(which) if isinstance(which, str) else which
        if not 0 <= i < len(sig):
            raise SignatureMismatch(f"generator index {i} out of range")
        return cls._raw(sig, {(i,): sig.ring.one})

    @classmethod
    def from_word(cls, sig, word, coeff=1):
        return cls(sig, {tuple(word): coeff})

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: word_key(t[0]))

    def support(self):
        """Set of generator indices occurring in any term."""
        letters = set()
        for word in self.terms:
            letters.update(word)
        return letters

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, NcPoly)
                and self.sig == other.sig
                and self.terms == other.terms)

    def __add__(self, other):
        require_same_signature(self.sig, other.sig)
        ring = self.sig.ring
        out = dict(self.terms)
        for word, c in other.terms.items():
            nc = ring.add(out.get(word, ring.zero), c)
            if ring.is_zero(nc):
                out.pop(word, None)
            else:
                out[word] = nc
        return NcPoly._raw(self.sig, out)

    def __neg__(self):
        ring = self.sig.ring
        return NcPoly._raw(self.sig, {w: ring.neg(c) for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        require_same_signature(self.sig, other.sig)
        ring = self.sig.ring
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                word = w1 + w2
                nc = ring.add(out.get(word, ring.zero), ring.mul(c1, c2))
                if ring.is_zero(nc):
                    out.pop(word, None)
                else:
                    out[word] = nc
        return NcPoly._raw(self.sig, out)

    def scale(self, coeff):
        ring = self.sig.ring
        c0 = ring.normalize(coeff)
        if ring.is_zero(c0):
            return NcPoly.zero(self.sig)
        out = {}
        for w, c in self.terms.items():
            nc = ring.mul(c0, c)
            if not ring.is_zero(nc):
                out[w] = nc
        return NcPoly._raw(self.sig, out)

    def canonical_key(self):
        """Hashable canonical form (used for dedup and determinism checks)."""
        return tuple(sorted(self.terms.items(), key=lambda t: word_key(t[0])))

    def _word_str(self, word):
        if not word:
            return "1"
        parts = []
        i = 0
        while i < len(word):
            j = i
            while j < len(word) and word[j] == word[i]:
                j += 1
            name = self.sig.generators[word[i]].name
            parts.append(name if j - i == 1 else f"{name}^{j - i}")
            i = j
        return "*".join(parts)

    def _term_str(self, coeff, word):
        ring = self.sig.ring
        if not word:
            return ring.format(coeff)
        if coeff == ring.one:
            return self._word_str(word)
        return f"{ring.format(coeff)}*{self._word_str(word)}"

    def __str__(self):
        if not self.terms:
            return "0"
        ring = self.sig.ring
        parts = []
        for word, coeff in self.sorted_terms():
            neg = ring.is_negative(coeff)
            mag = ring.neg(coeff) if neg else coeff
            text = self._term_str(mag, word)
            if not parts:
                parts.append("-" + text if neg else text)
            else:
                parts.append(("- " if neg else "+ ") + text)
        return " ".join(parts)

    def __repr__(self):
        return f"NcPoly({self})"


def homogeneous_degree(p: NcPoly):
    """Common degree of all terms; ANY_DEGREE for 0; None when mixed."""
    if not p.terms:
        return ANY_DEGREE
    degree = None
    for word in p.terms:
        d = p.sig.word_degree(word)
        if degree is None:
            degree = d
        elif degree != d:
            return None
    return degree


def is_homogeneous(p: NcPoly, degree: int) -> bool:
    d = homogeneous_degree(p)
    return d is ANY_DEGREE or d == degree


def substitute(p: NcPoly, images: dict, target: Signature) -> NcPoly:
    """Apply the algebra homomorphism sending generator i to images[i].

    Every generator occurring in p must have an image; images live in the
    common target signature.  Words map to ordered products of images and
    the unit maps to the unit, which pins the map uniquely.
    """
    if p.sig.ring != target.ring:
        raise MixedRings(f"cannot substitute from {p.sig.ring.spec} into {target.ring.spec}")
    for img in images.values():
        require_same_signature(img.sig, target)
    result = NcPoly.zero(target)
    for word, c in p.terms.items():
        acc = NcPoly.constant(target, c)
        for letter in word:
            img = images.get(letter)
            if img is None:
                name = p.sig.generators[letter].name
                raise MissingImage(f"no image for generator {name!r}")
            acc = acc * img
        result = result + acc
    return result


def reindex(p: NcPoly, target: Signature, mapping: dict) -> NcPoly:
    """Reinterpret p in another signature by translating letter indices.

    mapping sends each occurring source index to a target index; the
    coefficients are untouched (both signatures share the ring).
    """
    if p.sig.ring != target.ring:
        raise MixedRings(f"cannot move a {p.sig.ring.spec} polynomial into {target.ring.spec}")
    out = {}
    for word, c in p.terms.items():
        try:
            nw = tuple(mapping[i] for i in word)
        except KeyError as exc:
            name = p.sig.generators[exc.args[0]].name
            raise SignatureMismatch(f"generator {name!r} has no image in the target signature") from None
        out[nw] = c
    return NcPoly._raw(target, out)


def cast_prefix(p: NcPoly, target: Signature) -> NcPoly:
    """Reinterpret p in a larger signature whose prefix equals p's signature."""
    src = p.sig
    if target.generators[:len(src)] != src.generators:
        raise SignatureMismatch("target signature does not extend the source")
    return reindex(p, target, {i: i for i in range(len(src))})
