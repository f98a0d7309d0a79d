"""Elementary automorphisms, tame isomorphisms, and chain-map verification.

An elementary automorphism rescales one generator by a unit and shifts it
by a homogeneous polynomial in the remaining generators; a tame
isomorphism is a finite composition of elementary automorphisms followed
by a degree-preserving relabeling onto the target generators.  A tame
isomorphism of DGAs additionally intertwines the differentials, which
verify_dga_map checks generator by generator.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (NcPoly, Signature, homogeneous_degree, is_homogeneous,
                      reindex, require_same_signature, substitute)
from .dga import SemifreeDGA
from .diagnostics import Report
from .errors import IllFormedAuto, NoRelabelPossible, SignatureMismatch


class ElementaryAuto:
    """One generator maps to scalar * itself + shift; the rest stay fixed."""

    def __init__(self, sig: Signature, index: int, scalar, shift: NcPoly):
        ring = sig.ring
        if not 0 <= index < len(sig):
            raise IllFormedAuto(f"generator index {index} out of range")
        scalar = ring.normalize(scalar)
        if not ring.is_unit(scalar):
            raise IllFormedAuto(f"scalar {ring.format(scalar)} is not a unit in {ring.spec}")
        require_same_signature(shift.sig, sig)
        if index in shift.support():
            raise IllFormedAuto(
                f"shift of {sig.generators[index].name} mentions the generator itself")
        if not is_homogeneous(shift, sig.degree(index)):
            raise IllFormedAuto(
                f"shift {shift} is not homogeneous of degree {sig.degree(index)}")
        self.sig = sig
        self.index = index
        self.scalar = scalar
        self.shift = shift

    def image_of_target(self) -> NcPoly:
        return NcPoly.generator(self.sig, self.index).scale(self.scalar) + self.shift

    def apply(self, p: NcPoly) -> NcPoly:
        require_same_signature(p.sig, self.sig)
        if self.index not in p.support():
            return p
        images = {i: NcPoly.generator(self.sig, i) for i in range(len(self.sig))}
        images[self.index] = self.image_of_target()
        return substitute(p, images, self.sig)

    def inverse(self) -> "ElementaryAuto":
        inv = self.sig.ring.inverse(self.scalar)
        return ElementaryAuto(self.sig, self.index, inv,
                              self.shift.scale(self.sig.ring.neg(inv)))

    def to_data(self):
        return {
            "generator": self.sig.generators[self.index].name,
            "scalar": self.sig.ring.format(self.scalar),
            "shift": str(self.shift),
        }

    def __repr__(self):
        name = self.sig.generators[self.index].name
        return f"ElementaryAuto({name} -> {self.sig.ring.format(self.scalar)}*{name} + {self.shift})"


class TameIso:
    """Elementary steps on the source signature, then a relabeling bijection."""

    def __init__(self, source: Signature, target: Signature, steps, relabel):
        if source.ring != target.ring:
            raise SignatureMismatch("source and target signatures use different rings")
        steps = tuple(steps)
        for step in steps:
            require_same_signature(step.sig, source)
        pairs = tuple((str(a), str(b)) for a, b in relabel)
        src_names = [a for a, _ in pairs]
        tgt_names = [b for _, b in pairs]
        if sorted(src_names) != sorted(source.names()):
            raise NoRelabelPossible("relabel does not cover the source generators exactly once")
        if sorted(tgt_names) != sorted(target.names()):
            raise NoRelabelPossible("relabel does not cover the target generators exactly once")
        mapping = {}
        for a, b in pairs:
            i, j = source.index(a), target.index(b)
            if source.degree(i) != target.degree(j):
                raise NoRelabelPossible(
                    f"relabel {a} -> {b} changes degree "
                    f"{source.degree(i)} to {target.degree(j)}")
            mapping[i] = j
        self.source = source
        self.target = target
        self.steps = steps
        self.relabel = pairs
        self._mapping = mapping

    @classmethod
    def identity(cls, sig: Signature):
        return cls(sig, sig, (), [(n, n) for n in sig.names()])

    def apply(self, p: NcPoly) -> NcPoly:
        require_same_signature(p.sig, self.source)
        for step in self.steps:
            p = step.apply(p)
        return reindex(p, self.target, self._mapping)

    def inverse(self) -> "TameIso":
        """Reverse the steps, invert each, and conjugate through the relabel."""
        back_pairs = [(b, a) for a, b in self.relabel]
        inv_steps = []
        for step in reversed(self.steps):
            inv = step.inverse()
            shift = reindex(inv.shift, self.target, self._mapping)
            inv_steps.append(ElementaryAuto(self.target, self._mapping[inv.index],
                                            inv.scalar, shift))
        return TameIso(self.target, self.source, inv_steps, back_pairs)

    def to_data(self):
        return {
            "source": self.source.to_data(),
            "target": self.target.to_data(),
            "steps": [s.to_data() for s in self.steps],
            "relabel": [list(pair) for pair in self.relabel],
        }

    @classmethod
    def from_data(cls, data, ring=None):
        from .parsing import poly_from_str
        source = Signature.from_data(data["source"], ring=ring)
        target = Signature.from_data(data["target"], ring=ring)
        steps = []
        for item in data["steps"]:
            index = source.index(item["generator"])
            scalar = _parse_scalar(item["scalar"], source.ring)
            shift = poly_from_str(item["shift"], source)
            steps.append(ElementaryAuto(source, index, scalar, shift))
        return cls(source, target, steps, data["relabel"])

    def __repr__(self):
        return f"TameIso({len(self.steps)} steps, {len(self.source)} generators)"


def _parse_scalar(text, ring):
    from fractions import Fraction
    return ring.normalize(Fraction(text))


@dataclass(frozen=True)
class StableTameCertificate:
    """Stabilization degrees for each side plus a tame isomorphism between the results."""

    stabilizations_source: tuple
    stabilizations_target: tuple
    iso: TameIso

    def to_data(self):
        data = self.iso.to_data()
        data["stabilizations_source"] = list(self.stabilizations_source)
        data["stabilizations_target"] = list(self.stabilizations_target)
        return data

    @classmethod
    def from_data(cls, data, ring=None):
        iso = TameIso.from_data(data, ring=ring)
        return cls(tuple(data.get("stabilizations_source", ())),
                   tuple(data.get("stabilizations_target", ())),
                   iso)


def verify_dga_map(iso: TameIso, source_dga: SemifreeDGA, target_dga: SemifreeDGA) -> Report:
    """Per generator g: iso(d_source(g)) must equal d_target(iso(g))."""
    report = Report()
    if iso.source != source_dga.sig:
        report.add("iso source signature matches the source DGA", False,
                   "signatures differ")
        return report
    if iso.target != target_dga.sig:
        report.add("iso target signature matches the target DGA", False,
                   "signatures differ")
        return report
    for i, gen in enumerate(source_dga.sig.generators):
        lhs = iso.apply(source_dga.d_of(i))
        rhs = target_dga.d(iso.apply(NcPoly.generator(source_dga.sig, i)))
        residual = lhs - rhs
        report.add(f"chain map on {gen.name}", not residual,
                   "" if not residual else f"residual {residual}")
    return report


def verify_stable_tame(cert: StableTameCertificate,
                       source_dga: SemifreeDGA,
                       target_dga: SemifreeDGA) -> Report:
    """Stabilize both sides as the certificate says, then verify the chain map."""
    report = Report()
    src = source_dga
    for k in cert.stabilizations_source:
        src = src.stabilize(k)
    tgt = target_dga
    for k in cert.stabilizations_target:
        tgt = tgt.stabilize(k)
    if src.sig.degree_multiset() != tgt.sig.degree_multiset():
        report.add("stabilized degree multisets match", False,
                   "NoRelabelPossible: generator degree multisets differ")
        return report
    report.add("stabilized degree multisets match", True)
    report.extend(verify_dga_map(cert.iso, src, tgt))
    return report


def transport_dga(dga: SemifreeDGA, iso: TameIso) -> SemifreeDGA:
    """Push the differential forward: d' = iso o d o iso^{-1} on the target."""
    if iso.source != dga.sig:
        raise SignatureMismatch("iso source does not match the DGA signature")
    inv = iso.inverse()
    diffs = []
    for i in range(len(iso.target)):
        pulled = inv.apply(NcPoly.generator(iso.target, i))
        diffs.append(iso.apply(dga.d(pulled)))
    out = SemifreeDGA(iso.target, diffs)
    assert out.validate().ok, "transported differential failed validation"
    return out
