"""Shared oracles and random generators for the test suite."""

import random
from fractions import Fraction
from itertools import product

from stalkrec.rings import ModuleElement, PolyRing, mono_mul


def monomials_up_to(nvars, deg):
    out = [e for e in product(range(deg + 1), repeat=nvars) if sum(e) <= deg]
    return sorted(out)


def solve_linear(rows, rhs):
    """Gaussian elimination over Fraction; returns True iff solvable."""
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    nrows, ncols = len(m), (len(m[0]) if m else 1)
    rank = 0
    for col in range(ncols - 1):
        piv = next((r for r in range(rank, nrows) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = Fraction(1) / m[rank][col]
        m[rank] = [v * inv for v in m[rank]]
        for r in range(nrows):
            if r != rank and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    for r in range(rank, nrows):
        if m[r][-1] != 0:
            return False
    return not any(m[r][-1] != 0 and all(v == 0 for v in m[r][:-1])
                   for r in range(nrows))


def brute_force_member(w, gens, deg_bound):
    """Membership oracle: is w an A-combination of gens with multiplier
    degree at most deg_bound?  Exact linear algebra, no Groebner bases."""
    ring = w.ring
    rank = w.rank
    mults = monomials_up_to(ring.nvars, deg_bound)
    columns = []
    keys = set()
    for g in gens:
        for m in mults:
            col = {}
            for (comp, e), c in g.iter_terms():
                key = (comp, mono_mul(e, m))
                col[key] = col.get(key, Fraction(0)) + c
                keys.add(key)
            columns.append(col)
    target = {}
    for (comp, e), c in w.iter_terms():
        target[(comp, e)] = target.get((comp, e), Fraction(0)) + c
        keys.add((comp, e))
    keys = sorted(keys)
    rows = [[col.get(k, Fraction(0)) for col in columns] for k in keys]
    rhs = [target.get(k, Fraction(0)) for k in keys]
    if not columns:
        return all(b == 0 for b in rhs)
    return solve_linear(rows, rhs)


def random_poly(rng, ring, nterms=3, deg=3):
    p = ring.zero
    for _ in range(rng.randrange(1, nterms + 1)):
        e = [0] * ring.nvars
        for _ in range(rng.randrange(deg + 1)):
            e[rng.randrange(ring.nvars)] += 1
        c = Fraction(rng.randrange(-3, 4))
        p = p + ring.monomial(tuple(e), c)
    return p


def random_vector(rng, ring, rank, nterms=3, deg=3):
    return ModuleElement(ring, [random_poly(rng, ring, nterms, deg)
                                for _ in range(rank)])


def random_monomial_vector(rng, ring, rank, deg=4):
    polys = [ring.zero] * rank
    comp = rng.randrange(rank)
    e = [0] * ring.nvars
    for _ in range(rng.randrange(1, deg + 1)):
        e[rng.randrange(ring.nvars)] += 1
    polys[comp] = ring.monomial(tuple(e))
    return ModuleElement(ring, polys)
