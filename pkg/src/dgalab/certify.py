"""Triviality certificates: search, synthesis, and independent re-verification.

For a group presentation the pipeline is constructive: find cofactor
representations of x - 1 against the relation polynomials for every
doubled generator x, lift each representation to a degree-1 element by
substituting the degree-1 generator y_j for the relation f_j it bounds,
and shift each z-generator by its lift.  The resulting map fixes the
degree-0 and y-generators pointwise, is tame (one elementary shift per
z-generator), intertwines the differentials, and is compatible with the
all-ones augmentations.  Every certificate is re-verified before being
returned; synthesis that fails its own verification aborts.

For an algebra presentation, certification stops at acyclicity
witnesses on both sides: a cofactor representation of 1 lifts to a
degree-1 element u with d(u) = 1.  The stable tame equivalence of
acyclic DGAs with matching generator counts follows from general theory
and is not constructed here.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .algebra import NcPoly, is_homogeneous, reindex
from .constructions import (algebra_to_dgas, canonical_augmentations,
                            group_dga_signature, group_relation_polys,
                            group_to_dgas)
from .dga import LEIBNIZ_CONVENTION, SemifreeDGA
from .diagnostics import Report
from .errors import (IndexOutOfRange, InternalVerificationFailure,
                     InvalidShift, MalformedCertificate)
from .ideal import (CofactorRep, acyclicity_witness, member_with_cofactors,
                    verify_cofactors)
from .presentations import AlgebraPresentation, GroupPresentation
from .rings import Ring, ring_from_string
from .tame import ElementaryAuto, StableTameCertificate, TameIso, verify_dga_map


def find_triviality_reps(pres: GroupPresentation, ring: Ring, bound: int, jobs: int = 1):
    """Cofactor representations of x - 1 for every doubled generator x.

    Returns the complete name -> CofactorRep mapping, or None as soon as
    any single target has no representation within the bound.  The
    searches are independent; with jobs > 1 they run on a thread pool and
    are merged in generator order, so the result does not depend on the
    thread count.
    """
    sig_x, relations = group_relation_polys(pres, ring)
    one = NcPoly.one(sig_x)
    targets = [NcPoly.generator(sig_x, i) - one for i in range(len(sig_x))]

    def search(target):
        return member_with_cofactors(target, relations, bound)

    if jobs > 1 and len(targets) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            found = list(pool.map(search, targets))
    else:
        found = [search(t) for t in targets]
    if any(rep is None for rep in found):
        return None
    return dict(zip(sig_x.names(), found))


def lift_rep_to_degree_one(rep: CofactorRep, dga: SemifreeDGA, y_names) -> NcPoly:
    """Replace the relation slot of each triple by the matching degree-1 generator.

    The result is a degree-1 polynomial in the degree-0 and y-generators
    only, whose differential is exactly the represented target.
    """
    sig = dga.sig
    up = {i: i for i in range(len(sig))}  # cofactors live in the degree-0 prefix
    lifted = NcPoly.zero(sig)
    for t in rep.triples:
        if not 0 <= t.relation < len(y_names):
            raise IndexOutOfRange(f"relation index {t.relation} has no degree-1 generator")
        y = NcPoly.generator(sig, sig.index(y_names[t.relation]))
        lifted = lifted + reindex(t.left, sig, up) * y * reindex(t.right, sig, up)
    return lifted


def triviality_iso(pres: GroupPresentation, ring: Ring, reps) -> TameIso:
    """The tame isomorphism shifting each z-generator by its degree-1 lift."""
    full_sig, x_names, y_names, z_names = group_dga_signature(pres, ring)
    dga_a, _ = group_to_dgas(pres, ring)
    steps = []
    for x, z in zip(x_names, z_names):
        lift = lift_rep_to_degree_one(reps[x], dga_a, y_names)
        if not is_homogeneous(lift, 1):
            raise InvalidShift(f"lift for {x} is not homogeneous of degree 1")
        steps.append(ElementaryAuto(full_sig, full_sig.index(z), ring.one, lift))
    relabel = [(n, n) for n in full_sig.names()]
    return TameIso(full_sig, full_sig, steps, relabel)


@dataclass
class TrivialityCertificate:
    """Everything a third party needs to re-verify group triviality."""

    presentation: GroupPresentation
    ring: Ring
    bound: int
    reps: dict           # doubled generator name -> CofactorRep (over the degree-0 signature)
    iso: TameIso         # source: the z-differentials-x-minus-1 side; target: the zero side
    convention: str = LEIBNIZ_CONVENTION

    def to_data(self):
        return {
            "kind": "group_triviality_certificate",
            "ring": self.ring.spec,
            "convention": {"leibniz": self.convention},
            "bound": self.bound,
            "presentation": self.presentation.to_data(),
            "cofactors": {name: rep.to_data() for name, rep in self.reps.items()},
            "iso": self.iso.to_data(),
        }

    @classmethod
    def from_data(cls, data):
        try:
            if data["kind"] != "group_triviality_certificate":
                raise MalformedCertificate(f"unexpected kind {data['kind']!r}")
            ring = ring_from_string(data["ring"])
            pres = _group_presentation_from_data(data["presentation"])
            sig_x, _ = group_relation_polys(pres, ring)
            reps = {name: CofactorRep.from_data(items, sig_x)
                    for name, items in data["cofactors"].items()}
            iso = TameIso.from_data(data["iso"], ring=ring)
            convention = data["convention"]["leibniz"]
            return cls(pres, ring, int(data["bound"]), reps, iso, convention)
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedCertificate(f"bad certificate structure: {exc}") from exc


def _group_presentation_from_data(data):
    from .parsing import _parse_word, _Stream, tokenize
    if data.get("kind") != "group":
        raise MalformedCertificate("presentation kind must be 'group'")
    generators = list(data["generators"])
    index = {g: i for i, g in enumerate(generators)}
    relators = []
    for text in data["relators"]:
        stream = _Stream(tokenize(text))
        relators.append(_parse_word(stream, index, stop_kinds=("end",)))
    return GroupPresentation(data["name"], generators, relators)


def certify_trivial_group(pres: GroupPresentation, ring: Ring, bound: int,
                          jobs: int = 1):
    """Run the full constructive pipeline at one bound; None if inconclusive."""
    reps = find_triviality_reps(pres, ring, bound, jobs=jobs)
    if reps is None:
        return None
    iso = triviality_iso(pres, ring, reps)
    dga_a, dga_b = group_to_dgas(pres, ring)
    chain = verify_dga_map(iso, dga_b, dga_a)
    if not chain.ok:
        raise InternalVerificationFailure(
            "synthesized isomorphism is not a chain map:\n" + chain.format())
    eps_a, eps_b = canonical_augmentations(dga_a, dga_b)
    for i, gen in enumerate(dga_b.sig.generators):
        image = iso.apply(NcPoly.generator(dga_b.sig, i))
        if eps_a.evaluate(image) != eps_b.value_of(gen.name):
            raise InternalVerificationFailure(
                f"synthesized isomorphism breaks the augmentation on {gen.name}")
    return TrivialityCertificate(pres, ring, bound, reps, iso)


@dataclass
class AlgebraTrivialityCertificate:
    """Cofactor representation of 1 plus acyclicity witnesses for both DGAs."""

    presentation: AlgebraPresentation
    ring: Ring
    bound: int
    rep: CofactorRep          # representation of 1 over the presentation signature
    witness_a: NcPoly         # degree-1 element with d(u) = 1 in the relations side
    witness_b: NcPoly         # same for the unit-differential side
    convention: str = LEIBNIZ_CONVENTION

    def to_data(self):
        return {
            "kind": "algebra_triviality_certificate",
            "ring": self.ring.spec,
            "convention": {"leibniz": self.convention},
            "bound": self.bound,
            "presentation": self.presentation.to_data(),
            "unit_cofactors": self.rep.to_data(),
            "witness_a": str(self.witness_a),
            "witness_b": str(self.witness_b),
        }

    @classmethod
    def from_data(cls, data):
        try:
            if data["kind"] != "algebra_triviality_certificate":
                raise MalformedCertificate(f"unexpected kind {data['kind']!r}")
            ring = ring_from_string(data["ring"])
            pres = _algebra_presentation_from_data(data["presentation"], ring)
            rep = CofactorRep.from_data(data["unit_cofactors"], pres.sig)
            dga_a, _ = algebra_to_dgas(pres)
            from .parsing import poly_from_str
            witness_a = poly_from_str(data["witness_a"], dga_a.sig)
            witness_b = poly_from_str(data["witness_b"], dga_a.sig)
            convention = data["convention"]["leibniz"]
            return cls(pres, ring, int(data["bound"]), rep, witness_a, witness_b, convention)
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedCertificate(f"bad certificate structure: {exc}") from exc


def _algebra_presentation_from_data(data, ring):
    from .algebra import Generator, Signature
    from .parsing import poly_from_str
    if data.get("kind") != "algebra":
        raise MalformedCertificate("presentation kind must be 'algebra'")
    sig = Signature(ring, [Generator(g, 0) for g in data["generators"]])
    relations = [poly_from_str(text, sig) for text in data["relations"]]
    return AlgebraPresentation(data["name"], sig, relations)


def certify_trivial_algebra(pres: AlgebraPresentation, bound: int):
    """Bounded search for 1 in the relation ideal; witnesses on success."""
    rep = member_with_cofactors(NcPoly.one(pres.sig), pres.relations, bound)
    if rep is None:
        return None
    dga_a, dga_b = algebra_to_dgas(pres)
    n = len(pres.generators)
    r_names = [g.name for g in dga_a.sig.generators[n:]]
    witness_a = lift_rep_to_degree_one(rep, dga_a, r_names)
    if dga_a.d(witness_a) != NcPoly.one(dga_a.sig):
        raise InternalVerificationFailure("algebra witness does not bound the unit")
    witness_b = acyclicity_witness(dga_b, 0)
    if witness_b is None:
        raise InternalVerificationFailure("unit-differential DGA must have an acyclicity witness")
    return AlgebraTrivialityCertificate(pres, pres.ring, bound, rep, witness_a, witness_b)


def verify_group_certificate(cert: TrivialityCertificate,
                             dga_a: SemifreeDGA, dga_b: SemifreeDGA) -> Report:
    """Full independent re-verification of a group triviality certificate."""
    report = Report()
    report.add("convention stamp", cert.convention == LEIBNIZ_CONVENTION,
               "" if cert.convention == LEIBNIZ_CONVENTION
               else f"certificate uses {cert.convention!r}")
    rings_match = cert.ring == dga_a.sig.ring == dga_b.sig.ring
    report.add("ring stamp", rings_match,
               "" if rings_match
               else f"RingMismatch: certificate {cert.ring.spec}, "
                    f"files {dga_a.sig.ring.spec}/{dga_b.sig.ring.spec}")
    if not report.ok:
        return report

    built_a, built_b = group_to_dgas(cert.presentation, cert.ring)
    report.add("first DGA file matches the presentation", built_a == dga_a)
    report.add("second DGA file matches the presentation", built_b == dga_b)
    if not report.ok:
        return report

    sig_x, relations = group_relation_polys(cert.presentation, cert.ring)
    one = NcPoly.one(sig_x)
    for i, name in enumerate(sig_x.names()):
        rep = cert.reps.get(name)
        if rep is None:
            report.add(f"cofactors for {name}", False, "missing")
            continue
        target = NcPoly.generator(sig_x, i) - one
        try:
            ok = verify_cofactors(rep, target, relations)
        except IndexOutOfRange as exc:
            ok, detail = False, str(exc)
        else:
            detail = "" if ok else f"sum does not equal {target}"
        report.add(f"cofactors for {name}", ok, detail)

    z_names = {g.name for g in dga_a.sig.generators if g.name.startswith("z_")}
    identity_relabel = all(a == b for a, b in cert.iso.relabel)
    report.add("relabel is the identity", identity_relabel)
    touches_only_z = all(
        cert.iso.source.generators[s.index].name in z_names for s in cert.iso.steps)
    report.add("steps shift only the z-generators", touches_only_z)

    report.extend(verify_dga_map(cert.iso, dga_b, dga_a))

    try:
        eps_a, eps_b = canonical_augmentations(dga_a, dga_b)
    except Exception as exc:  # noqa: BLE001 - diagnostics, not control flow
        report.add("canonical augmentations exist", False, str(exc))
        return report
    compatible = True
    if cert.iso.source == dga_b.sig:
        for i, gen in enumerate(dga_b.sig.generators):
            image = cert.iso.apply(NcPoly.generator(dga_b.sig, i))
            if eps_a.evaluate(image) != eps_b.value_of(gen.name):
                compatible = False
                break
    report.add("augmentation compatibility", compatible)
    return report


def verify_algebra_certificate(cert: AlgebraTrivialityCertificate,
                               dga_a: SemifreeDGA, dga_b: SemifreeDGA) -> Report:
    """Independent re-verification of an algebra triviality certificate."""
    report = Report()
    report.add("convention stamp", cert.convention == LEIBNIZ_CONVENTION,
               "" if cert.convention == LEIBNIZ_CONVENTION
               else f"certificate uses {cert.convention!r}")
    rings_match = cert.ring == dga_a.sig.ring == dga_b.sig.ring
    report.add("ring stamp", rings_match,
               "" if rings_match else "RingMismatch")
    if not report.ok:
        return report
    built_a, built_b = algebra_to_dgas(cert.presentation)
    report.add("first DGA file matches the presentation", built_a == dga_a)
    report.add("second DGA file matches the presentation", built_b == dga_b)
    if not report.ok:
        return report
    one = NcPoly.one(cert.presentation.sig)
    try:
        ok = verify_cofactors(cert.rep, one, cert.presentation.relations)
    except IndexOutOfRange as exc:
        ok, detail = False, str(exc)
    else:
        detail = "" if ok else "sum does not equal 1"
    report.add("cofactors for 1", ok, detail)
    unit_a = dga_a.d(cert.witness_a) == NcPoly.one(dga_a.sig)
    report.add("witness bounds 1 in the relations-side DGA", unit_a)
    unit_b = dga_b.d(cert.witness_b) == NcPoly.one(dga_b.sig)
    report.add("witness bounds 1 in the unit-side DGA", unit_b)
    report.add("stable tame equivalence of the acyclic pair "
               "(matching generator degrees) follows from general theory; "
               "no isomorphism is constructed", True)
    return report


def stable_certificate(cert: TrivialityCertificate) -> StableTameCertificate:
    """The tame isomorphism as a stable certificate with no stabilizations."""
    return StableTameCertificate((), (), cert.iso)
