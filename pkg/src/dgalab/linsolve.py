"""Exact linear solving behind the ideal-membership engine.

Vectors are dicts mapping a hashable row key to a nonzero coefficient;
the caller supplies a total order on row keys.  Everything here is
deterministic for a fixed column order: same pivots, same solution,
independent of thread count or dict iteration quirks.

Over a field the solver is Gaussian elimination on columns with
max-lead pivoting, run twice: a plain pass that decides solvability and
a tracked pass (only on success) that extracts the combination.  Over
the integers the solver is a column-style Hermite reduction: sweep rows
from the largest key down, combine active columns with extended gcds so
exactly one pivot column survives per row, then forward-substitute with
divisibility checks.  Solving mod composite n reduces to the integer
solver by adjoining one slack column n*e_row per occurring row.
"""

from __future__ import annotations


def xgcd(a, b):
    # Returns (g, s, t) with g = gcd(a, b) >= 0 and s*a + t*b == g.
    s, next_s = 1, 0
    t, next_t = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        s, next_s = next_s, s - q * next_s
        t, next_t = next_t, t - q * next_t
        g, next_g = next_g, g - q * next_g
    if g < 0:
        g, s, t = -g, -s, -t
    return g, s, t


def _reduce(vec, basis, ring, key, used):
    # In place: repeatedly cancel vec's leading entry against the basis.
    # Maintains: original = vec + sum(used[j] * basis_combo_j-expansion).
    while vec:
        lead = max(vec, key=key)
        hit = basis.get(lead)
        if hit is None:
            return
        bvec, bcombo = hit
        c = vec.pop(lead)  # bvec is monic at lead
        for k, v in bvec.items():
            if k == lead:
                continue
            nv = ring.sub(vec.get(k, ring.zero), ring.mul(c, v))
            if ring.is_zero(nv):
                vec.pop(k, None)
            else:
                vec[k] = nv
        if used is not None:
            for j, v in bcombo.items():
                nv = ring.add(used.get(j, ring.zero), ring.mul(c, v))
                if ring.is_zero(nv):
                    used.pop(j, None)
                else:
                    used[j] = nv


def _echelon(columns, ring, key, track):
    basis = {}  # lead row key -> (monic vector, combination over original columns)
    for i, col in enumerate(columns):
        vec = dict(col)
        used = {} if track else None
        _reduce(vec, basis, ring, key, used)
        if not vec:
            continue
        lead = max(vec, key=key)
        inv = ring.inverse(vec[lead])
        vec = {k: ring.mul(inv, v) for k, v in vec.items()}
        combo = None
        if track:
            # vec_before_scaling = col_i - sum(used[j] * basis_j)
            combo = {i: ring.one}
            for j, v in used.items():
                nv = ring.sub(combo.get(j, ring.zero), v)
                if ring.is_zero(nv):
                    combo.pop(j, None)
                else:
                    combo[j] = nv
            combo = {j: ring.mul(inv, v) for j, v in combo.items()}
        basis[lead] = (vec, combo)
    return basis


def solve_over_field(columns, target, ring, key):
    """Find x with sum_i x[i]*columns[i] == target, or None."""
    if not target:
        return {}
    basis = _echelon(columns, ring, key, track=False)
    probe = dict(target)
    _reduce(probe, basis, ring, key, None)
    if probe:
        return None
    basis = _echelon(columns, ring, key, track=True)
    vec, used = dict(target), {}
    _reduce(vec, basis, ring, key, used)
    assert not vec
    return used


def _addmul_int(dst, src, q):
    if q == 0:
        return
    for k, v in src.items():
        nv = dst.get(k, 0) + q * v
        if nv:
            dst[k] = nv
        else:
            dst.pop(k, None)


def _lincomb_int(s, u, t, v):
    out = {}
    _addmul_int(out, u, s)
    _addmul_int(out, v, t)
    return out


def solve_over_int(columns, target, key):
    """Find integer x with sum_i x[i]*columns[i] == target, or None.

    Exact over the integers: no rationalization, so e.g. the target 1 is
    not reachable from the single column (2).
    """
    if not target:
        return {}
    rows = set(target)
    for col in columns:
        rows.update(col)
    work = [[dict(col), {i: 1}] for i, col in enumerate(columns) if col]
    pivots = []
    for rk in sorted(rows, key=key, reverse=True):
        first = None
        for entry in work:
            if not entry[0].get(rk):
                continue
            if first is None:
                first = entry
                continue
            avec, acombo = first
            bvec, bcombo = entry
            a, b = avec[rk], bvec[rk]
            if b % a == 0:
                q = -(b // a)
                _addmul_int(bvec, avec, q)
                _addmul_int(bcombo, acombo, q)
            else:
                g, s, t = xgcd(a, b)
                na_vec = _lincomb_int(s, avec, t, bvec)
                na_combo = _lincomb_int(s, acombo, t, bcombo)
                nb_vec = _lincomb_int(-(b // g), avec, a // g, bvec)
                nb_combo = _lincomb_int(-(b // g), acombo, a // g, bcombo)
                first[0], first[1] = na_vec, na_combo
                entry[0], entry[1] = nb_vec, nb_combo
        if first is None:
            continue
        work = [entry for entry in work if entry is not first]
        vec, combo = first
        if vec[rk] < 0:
            vec = {k: -v for k, v in vec.items()}
            combo = {k: -v for k, v in combo.items()}
        pivots.append((rk, vec, combo))
    residual = dict(target)
    x = {}
    for rk, vec, combo in pivots:
        c = residual.get(rk, 0)
        if c == 0:
            continue
        p = vec[rk]
        if c % p:
            return None
        q = c // p
        _addmul_int(residual, vec, -q)
        _addmul_int(x, combo, q)
    if residual:
        return None
    return x


def solve_mod_n(columns, target, n, key):
    """Find x mod n with sum_i x[i]*columns[i] == target (mod n), or None.

    Routed through the integer solver with slack columns n*e_row, so
    composite moduli are handled honestly (no field shortcuts).
    """
    if not target:
        return {}
    rows = set(target)
    for col in columns:
        rows.update(col)
    slack = [{rk: n} for rk in sorted(rows, key=key)]
    x = solve_over_int(list(columns) + slack, target, key)
    if x is None:
        return None
    out = {}
    for i, c in x.items():
        if i < len(columns):
            c %= n
            if c:
                out[i] = c
    return out
