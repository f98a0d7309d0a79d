"""Independent brute-force oracles used to freeze expected test values.

These deliberately avoid the library's linear-algebra path: membership is
decided by enumerating explicit sums of spanning triples, and tiny integer
systems by searching a coordinate box.  Exponential, so callers keep the
instances small.
"""

from itertools import combinations, product

from dgalab import NcPoly, words_up_to


def spanning_triples(relations, bound):
    """All (u, j, v) labels with the product polynomial u*f_j*v."""
    sig = relations[0].sig
    words = words_up_to(len(sig), bound)
    out = []
    for j, f in enumerate(relations):
        if not f:
            continue
        for u in words:
            for v in words:
                value = NcPoly.from_word(sig, u) * f * NcPoly.from_word(sig, v)
                out.append((u, j, v, value))
    return out


def brute_force_member_gf2(target, relations, bound, max_triples=3):
    """Is target a sum of <= max_triples distinct spanning triples over Z/2?

    Polynomials over Z/2 are sets of words; sums are symmetric differences.
    Triples are deduplicated by value first (duplicates are redundant over
    Z/2), which keeps the enumeration honest but smaller.
    """
    target_set = frozenset(target.terms)
    values = []
    seen = set()
    for _, _, _, value in spanning_triples(relations, bound):
        key = frozenset(value.terms)
        if key not in seen:
            seen.add(key)
            values.append(key)
    if not target_set:
        return True
    for size in range(1, max_triples + 1):
        for combo in combinations(values, size):
            acc = frozenset()
            for v in combo:
                acc = acc.symmetric_difference(v)
            if acc == target_set:
                return True
    return False


def brute_force_member_int(target, relations, bound, max_triples=2, coeff_range=(-2, 2)):
    """Integer membership by enumerating small coefficient combinations."""
    triples = spanning_triples(relations, bound)
    coeffs = [c for c in range(coeff_range[0], coeff_range[1] + 1) if c]
    zero = NcPoly.zero(target.sig)
    if target == zero:
        return True
    for size in range(1, max_triples + 1):
        for combo in combinations(triples, size):
            for cs in product(coeffs, repeat=size):
                acc = zero
                for c, (_, _, _, value) in zip(cs, combo):
                    acc = acc + value.scale(c)
                if acc == target:
                    return True
    return False


def brute_force_int_solve(columns, target, box=3):
    """Solve sum x_i * columns_i == target with |x_i| <= box, by enumeration."""
    n = len(columns)
    for xs in product(range(-box, box + 1), repeat=n):
        acc = {}
        for x, col in zip(xs, columns):
            if not x:
                continue
            for k, v in col.items():
                nv = acc.get(k, 0) + x * v
                if nv:
                    acc[k] = nv
                else:
                    acc.pop(k, None)
        if acc == target:
            return dict((i, x) for i, x in enumerate(xs) if x)
    return None
