"""Bounded two-sided ideal membership with cofactor certificates.

The engine is truncated linear algebra: for a bound D on the cofactor
word length, assemble the finite spanning set {u * f_j * v : |u|, |v| <= D},
express everything in the word basis, and solve the resulting exact
linear system for the target.  Over the rationals and Z/p the system is
solved by field elimination; over Z and composite Z/n by integer lattice
reduction, so integer coefficients are honest and never silently
rationalized.  Complete up to the bound: if any representation exists
whose cofactors are supported on words of length <= D, one is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .algebra import (NcPoly, Signature, reindex, require_same_signature,
                      word_key)
from .dga import SemifreeDGA
from .errors import (IndexOutOfRange, InternalVerificationFailure,
                     NegativeDegreeGenerator)
from .linsolve import solve_mod_n, solve_over_field, solve_over_int
from .rings import Integers, IntegersMod, Rationals, is_prime


@dataclass(frozen=True)
class CofactorTriple:
    left: NcPoly
    relation: int
    right: NcPoly


@dataclass(frozen=True)
class CofactorRep:
    """A two-sided ideal membership witness: target = sum left*f_j*right."""

    triples: tuple

    def to_data(self):
        return [{"left": str(t.left), "relation": t.relation, "right": str(t.right)}
                for t in self.triples]

    @classmethod
    def from_data(cls, data, sig: Signature):
        from .parsing import poly_from_str
        triples = tuple(
            CofactorTriple(poly_from_str(item["left"], sig),
                           int(item["relation"]),
                           poly_from_str(item["right"], sig))
            for item in data)
        return cls(triples)


def words_up_to(num_generators: int, max_length: int):
    """All words of length <= max_length, in length-then-lex order."""
    out = [()]
    for length in range(1, max_length + 1):
        out.extend(product(range(num_generators), repeat=length))
    return out


def verify_cofactors(rep: CofactorRep, target: NcPoly, relations) -> bool:
    """Exact check of the identity sum(left * f_j * right) == target."""
    total = NcPoly.zero(target.sig)
    for t in rep.triples:
        if not 0 <= t.relation < len(relations):
            raise IndexOutOfRange(f"relation index {t.relation} out of range")
        total = total + t.left * relations[t.relation] * t.right
    return total == target


def _spanning_columns(relations, sig, bound):
    """Deduplicated column vectors u*f_j*v with their (j, u, v) labels."""
    cofactor_words = words_up_to(len(sig), bound)
    labels, vectors = [], []
    seen = set()
    for j, f in enumerate(relations):
        if not f.terms:
            continue
        items = list(f.terms.items())
        for u in cofactor_words:
            for v in cofactor_words:
                vec = {u + w + v: c for w, c in items}
                fingerprint = tuple(sorted(vec.items(), key=lambda t: word_key(t[0])))
                if fingerprint in seen:
                    continue
                seen.add(fingerprint)
                labels.append((j, u, v))
                vectors.append(vec)
    return labels, vectors


def member_with_cofactors(target: NcPoly, relations, bound: int):
    """Search for target = sum u*f_j*v with cofactor words of length <= bound.

    Returns a verified CofactorRep, or None when no representation exists
    within the bound.  Deterministic: fixed column order and pivoting make
    repeated runs byte-identical.
    """
    sig = target.sig
    for f in relations:
        require_same_signature(f.sig, sig)
    if bound < 0:
        raise ValueError("cofactor word-length bound must be >= 0")
    if not target.terms:
        return CofactorRep(())

    labels, vectors = _spanning_columns(relations, sig, bound)
    b = dict(target.terms)
    ring = sig.ring
    if isinstance(ring, Rationals) or (isinstance(ring, IntegersMod) and is_prime(ring.n)):
        solution = solve_over_field(vectors, b, ring, word_key)
    elif isinstance(ring, Integers):
        solution = solve_over_int(vectors, b, word_key)
    elif isinstance(ring, IntegersMod):
        solution = solve_mod_n(vectors, b, ring.n, word_key)
    else:
        raise TypeError(f"unsupported coefficient ring {ring!r}")
    if solution is None:
        return None

    triples = []
    for col in sorted(solution):
        j, u, v = labels[col]
        left = NcPoly.from_word(sig, u, solution[col])
        right = NcPoly.from_word(sig, v)
        triples.append(CofactorTriple(left, j, right))
    rep = CofactorRep(tuple(triples))
    if not verify_cofactors(rep, target, relations):
        raise InternalVerificationFailure("membership solver produced a non-verifying representation")
    return rep


def acyclicity_witness(dga: SemifreeDGA, bound: int):
    """Search for a degree-1 element u with d(u) = 1; returns it or None.

    Only defined for DGAs with generators in degrees >= 0, where degree-1
    elements are exactly sums p*y*q with y a degree-1 generator and p, q
    in the degree-0 subalgebra; the search is ideal membership of 1
    against the boundaries of the degree-1 generators.
    """
    sig = dga.sig
    for g in sig.generators:
        if g.degree < 0:
            raise NegativeDegreeGenerator(
                f"generator {g.name} has degree {g.degree}")
    zero_idx = [i for i, g in enumerate(sig.generators) if g.degree == 0]
    one_idx = [i for i, g in enumerate(sig.generators) if g.degree == 1]
    sub_sig = Signature(sig.ring, [sig.generators[i] for i in zero_idx])
    down = {full: sub for sub, full in enumerate(zero_idx)}
    relations = [reindex(dga.d_of(i), sub_sig, down) for i in one_idx]
    rep = member_with_cofactors(NcPoly.one(sub_sig), relations, bound)
    if rep is None:
        return None
    up = {sub: full for sub, full in enumerate(zero_idx)}
    witness = NcPoly.zero(sig)
    for t in rep.triples:
        y = NcPoly.generator(sig, one_idx[t.relation])
        witness = witness + reindex(t.left, sig, up) * y * reindex(t.right, sig, up)
    if dga.d(witness) != NcPoly.one(sig):
        raise InternalVerificationFailure("acyclicity witness does not bound the unit")
    return witness
