"""Compile presentations into pairs of semifree DGAs.

Both compilers emit two DGAs on one shared signature that differ only in
the differential: for an algebra presentation, degree-1 generators r_j
bound either the relation polynomials or the unit; for a group
presentation, the signature carries the doubled degree-0 generators
(each group generator with a formal inverse), one degree-1 generator per
relation polynomial, and one extra degree-1 generator per degree-0
generator whose differential is zero on one side and x - 1 on the other.
"""

from __future__ import annotations

from .algebra import Generator, NcPoly, Signature, cast_prefix
from .dga import Augmentation, SemifreeDGA
from .errors import EmptyPresentation, NotGroupReduction
from .presentations import AlgebraPresentation, GroupPresentation
from .rings import Ring


def _fresh(base: str, used: set) -> str:
    name = base
    while name in used:
        name += "_"
    used.add(name)
    return name


def inverse_names(pres: GroupPresentation):
    """Deterministic names for the formal inverses (g -> g_inv, decollided)."""
    used = set(pres.generators)
    return [_fresh(g + "_inv", used) for g in pres.generators]


def group_generator_signature(pres: GroupPresentation, ring: Ring) -> Signature:
    names = list(pres.generators) + inverse_names(pres)
    return Signature(ring, [Generator(n, 0) for n in names])


def group_relation_polys(pres: GroupPresentation, ring: Ring):
    """Relation polynomials of the group ring presentation.

    Over the doubled generators: first one polynomial w - 1 per relator
    (inverse letters replaced by the primed generators), then for each
    generator g the invertibility pair g*g' - 1 and g'*g - 1.
    """
    sig = group_generator_signature(pres, ring)
    n = len(pres.generators)
    one = NcPoly.one(sig)
    polys = []
    for relator in pres.relators:
        word = tuple(idx if sign > 0 else n + idx for idx, sign in relator)
        polys.append(NcPoly.from_word(sig, word) - one)
    for i in range(n):
        g = NcPoly.generator(sig, i)
        g_inv = NcPoly.generator(sig, n + i)
        polys.append(g * g_inv - one)
        polys.append(g_inv * g - one)
    return sig, polys


def group_dga_signature(pres: GroupPresentation, ring: Ring):
    """Full signature X (degree 0) + Y (degree 1) + Z (degree 1)."""
    sig_x = group_generator_signature(pres, ring)
    x_names = sig_x.names()
    used = set(x_names)
    n_relations = len(pres.relators) + 2 * len(pres.generators)
    y_names = [_fresh(f"y{j + 1}", used) for j in range(n_relations)]
    z_names = [_fresh("z_" + x, used) for x in x_names]
    gens = ([Generator(x, 0) for x in x_names]
            + [Generator(y, 1) for y in y_names]
            + [Generator(z, 1) for z in z_names])
    return Signature(ring, gens), x_names, y_names, z_names


def group_to_dgas(pres: GroupPresentation, ring: Ring):
    """The DGA pair for a group presentation; tame isomorphic iff the group is trivial."""
    sig_x, relation_polys = group_relation_polys(pres, ring)
    full_sig, x_names, y_names, z_names = group_dga_signature(pres, ring)
    zero = NcPoly.zero(full_sig)
    one = NcPoly.one(full_sig)

    lifted = [cast_prefix(f, full_sig) for f in relation_polys]
    diffs_a = [zero] * len(x_names) + lifted + [zero] * len(z_names)
    diffs_b = list(diffs_a)
    z_offset = len(x_names) + len(y_names)
    for i in range(len(z_names)):
        x = NcPoly.generator(full_sig, i)
        diffs_b[z_offset + i] = x - one
    return SemifreeDGA(full_sig, diffs_a), SemifreeDGA(full_sig, diffs_b)


def algebra_to_dgas(pres: AlgebraPresentation):
    """The DGA pair for an algebra presentation: d(r_j) = f_j versus d(r_j) = 1."""
    n, m = len(pres.generators), len(pres.relations)
    if n == 0 or m == 0:
        raise EmptyPresentation("need at least one generator and one relation")
    used = set(pres.generators)
    r_names = [_fresh(f"r{j + 1}", used) for j in range(m)]
    full_sig = Signature(pres.ring,
                         list(pres.sig.generators) + [Generator(r, 1) for r in r_names])
    zero = NcPoly.zero(full_sig)
    one = NcPoly.one(full_sig)
    diffs_a = [zero] * n + [cast_prefix(f, full_sig) for f in pres.relations]
    diffs_b = [zero] * n + [one] * m
    return SemifreeDGA(full_sig, diffs_a), SemifreeDGA(full_sig, diffs_b)


def canonical_augmentations(dga_a: SemifreeDGA, dga_b: SemifreeDGA):
    """Augmentations sending every degree-0 generator to 1, the rest to 0.

    Only meaningful for the group construction (relators evaluate to 1 at
    the identity, so the relation polynomials vanish at all-ones).
    """
    if dga_a.sig != dga_b.sig:
        raise NotGroupReduction("the two DGAs do not share a signature")
    ring = dga_a.sig.ring
    values = {}
    for g in dga_a.sig.generators:
        if g.degree == 0:
            values[g.name] = ring.one
        elif g.degree == 1:
            values[g.name] = ring.zero
        else:
            raise NotGroupReduction(f"generator {g.name} has degree {g.degree}; "
                                    "not a group-reduction signature")
    eps_a = Augmentation(dict(values))
    eps_b = Augmentation(dict(values))
    if not dga_a.check_augmentation(eps_a) or not dga_b.check_augmentation(eps_b):
        raise NotGroupReduction("differentials are incompatible with the all-ones augmentation")
    return eps_a, eps_b
