"""Semifree DGAs: a free graded algebra with a differential given on generators.

The differential is extended to arbitrary polynomials by the graded
Leibniz rule with the sign on the right factor,

    d(a*b) = d(a)*b + (-1)^deg(a) * a*d(b),

so on a word g_1...g_k the i-th summand carries the parity of the degree
of the prefix g_1...g_{i-1}.  This convention is stamped into certificate
files; a verifier using the opposite convention would see sign-flipped
certificates.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (ANY_DEGREE, Generator, NcPoly, Signature,
                      homogeneous_degree, is_homogeneous,
                      require_same_signature)
from .diagnostics import Report
from .errors import MissingValue, NegativeDegreeGenerator, SignatureMismatch
from .presentations import AlgebraPresentation

LEIBNIZ_CONVENTION = "d(a*b) = d(a)*b + (-1)^deg(a)*a*d(b)"


class SemifreeDGA:
    def __init__(self, sig: Signature, differentials):
        diffs = tuple(differentials)
        if len(diffs) != len(sig):
            raise SignatureMismatch("need exactly one differential value per generator")
        for p in diffs:
            require_same_signature(p.sig, sig)
        self.sig = sig
        self.differentials = diffs

    def d_of(self, which) -> NcPoly:
        i = self.sig.index(which) if isinstance(which, str) else which
        return self.differentials[i]

    def d(self, p: NcPoly) -> NcPoly:
        """Leibniz extension of the generator differentials to p."""
        require_same_signature(p.sig, self.sig)
        ring = self.sig.ring
        degrees = [g.degree for g in self.sig.generators]
        out = {}
        for word, coeff in p.terms.items():
            prefix_degree = 0
            for i, letter in enumerate(word):
                dval = self.differentials[letter]
                if dval.terms:
                    c = coeff if prefix_degree % 2 == 0 else ring.neg(coeff)
                    prefix, suffix = word[:i], word[i + 1:]
                    for w2, c2 in dval.terms.items():
                        nw = prefix + w2 + suffix
                        nc = ring.add(out.get(nw, ring.zero), ring.mul(c, c2))
                        if ring.is_zero(nc):
                            out.pop(nw, None)
                        else:
                            out[nw] = nc
                prefix_degree += degrees[letter]
        return NcPoly._raw(self.sig, out)

    def validate(self) -> Report:
        """Check, per generator, that d drops degree by one and squares to zero."""
        report = Report()
        for i, gen in enumerate(self.sig.generators):
            dval = self.differentials[i]
            ok_deg = is_homogeneous(dval, gen.degree - 1)
            detail = "" if ok_deg else f"d({gen.name}) = {dval} is not homogeneous of degree {gen.degree - 1}"
            report.add(f"d({gen.name}) homogeneous of degree {gen.degree - 1}", ok_deg, detail)
            dd = self.d(dval)
            ok_sq = not dd
            report.add(f"d(d({gen.name})) = 0", ok_sq, "" if ok_sq else f"residual {dd}")
        return report

    def stabilize(self, k: int) -> "SemifreeDGA":
        """Adjoin fresh generators e#i (degree k+1) and f#i (degree k) with d(e)=f, d(f)=0."""
        used = set(self.sig.names())
        i = 1
        while f"e#{i}" in used or f"f#{i}" in used:
            i += 1
        e_name, f_name = f"e#{i}", f"f#{i}"
        new_sig = Signature(self.sig.ring,
                            self.sig.generators + (Generator(e_name, k + 1), Generator(f_name, k)))
        lifted = [NcPoly._raw(new_sig, dict(p.terms)) for p in self.differentials]
        f_index = len(new_sig) - 1
        lifted.append(NcPoly.generator(new_sig, f_index))  # d(e) = f
        lifted.append(NcPoly.zero(new_sig))                # d(f) = 0
        return SemifreeDGA(new_sig, lifted)

    def h0_presentation(self, name: str = "H0") -> AlgebraPresentation:
        """Presentation of degree-0 cycles modulo boundaries.

        With no generators in negative degrees, every degree-0 element is a
        cycle and the boundary ideal is generated by the differentials of
        the degree-1 generators.
        """
        for g in self.sig.generators:
            if g.degree < 0:
                raise NegativeDegreeGenerator(
                    f"generator {g.name} has degree {g.degree}; degree-0 elements would not all be cycles")
        zero_idx = [i for i, g in enumerate(self.sig.generators) if g.degree == 0]
        sub_sig = Signature(self.sig.ring, [self.sig.generators[i] for i in zero_idx])
        down = {full: sub for sub, full in enumerate(zero_idx)}
        relations = []
        for i, g in enumerate(self.sig.generators):
            if g.degree == 1:
                from .algebra import reindex
                relations.append(reindex(self.differentials[i], sub_sig, down))
        return AlgebraPresentation(name, sub_sig, relations)

    def check_augmentation(self, eps: "Augmentation") -> bool:
        """True iff eps kills every nonzero-degree generator and every boundary."""
        ring = self.sig.ring
        for g in self.sig.generators:
            value = eps.value_of(g.name)
            if g.degree != 0 and not ring.is_zero(value):
                return False
        for dval in self.differentials:
            if not ring.is_zero(eps.evaluate(dval)):
                return False
        return True

    def to_data(self):
        data = self.sig.to_data()
        data["kind"] = "dga"
        data["differential"] = [str(p) for p in self.differentials]
        return data

    @classmethod
    def from_data(cls, data, ring=None):
        from .parsing import poly_from_str
        sig = Signature.from_data(data, ring=ring)
        diffs = [poly_from_str(text, sig) for text in data["differential"]]
        return cls(sig, diffs)

    def __eq__(self, other):
        return (isinstance(other, SemifreeDGA)
                and self.sig == other.sig
                and self.differentials == other.differentials)

    def __repr__(self):
        gens = ", ".join(f"{g.name}:{g.degree}" for g in self.sig.generators)
        return f"SemifreeDGA({self.sig.ring.spec}; {gens})"


@dataclass
class Augmentation:
    """Assignment of a base-ring value to every generator, extended multiplicatively."""

    values: dict

    def value_of(self, name: str):
        try:
            return self.values[name]
        except KeyError:
            raise MissingValue(f"augmentation assigns no value to generator {name!r}") from None

    def evaluate(self, p: NcPoly):
        ring = p.sig.ring
        total = ring.zero
        for word, coeff in p.terms.items():
            value = coeff
            for letter in word:
                value = ring.mul(value, self.value_of(p.sig.generators[letter].name))
                if ring.is_zero(value):
                    break
            total = ring.add(total, value)
        return ring.normalize(total)
