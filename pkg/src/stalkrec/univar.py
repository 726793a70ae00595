"""Univariate helpers over k[t]: Smith-style diagonalization, irreducibility
and factorization (factorization delegated to sympy)."""

from __future__ import annotations

from fractions import Fraction

import sympy

from .rings import LEX, Polynomial


def to_sympy(f):
    """Convert a univariate Polynomial to a sympy Poly."""
    ring = f.ring
    assert ring.nvars == 1
    x = sympy.Symbol(ring.variables[0])
    if ring.field.char:
        dom = sympy.GF(ring.field.char)
        expr = sum(int(c) * x ** m[0] for m, c in f.terms.items())
    else:
        dom = sympy.QQ
        expr = sum(sympy.Rational(c.numerator, c.denominator) * x ** m[0]
                   for m, c in f.terms.items())
    return sympy.Poly(expr, x, domain=dom)


def from_sympy(ring, spoly):
    terms = {}
    for (e,), c in spoly.terms():
        if ring.field.char:
            terms[(e,)] = int(c) % ring.field.char
        else:
            c = sympy.Rational(c)
            terms[(e,)] = Fraction(int(c.p), int(c.q))
    return ring.poly(terms)


def irreducible_factors(f):
    """Monic irreducible factors of a nonzero univariate polynomial."""
    assert f and not f.is_zero()
    if f.is_constant():
        return []
    _, factors = sympy.factor_list(to_sympy(f))
    out = []
    for fac, _mult in factors:
        if fac.degree() >= 1:
            out.append(from_sympy(f.ring, fac.monic()))
    return sorted(out, key=lambda p: (p.degree(), str(p)))


def is_irreducible(f):
    """True for monic irreducible univariate polynomials of degree >= 1."""
    if f.is_zero() or f.is_constant():
        return False
    if f.leading(LEX)[1] != f.ring.field.one:
        return False
    facs = sympy.factor_list(to_sympy(f))[1]
    return len(facs) == 1 and facs[0][1] == 1


def diagonalize(rows):
    """Diagonal entries of a matrix over k[t] under unimodular row/column
    operations.  The entries present the cokernel as a direct sum of cyclic
    modules (divisibility chain not enforced; associated primes only need
    the factor sets)."""
    mat = [list(r) for r in rows]
    if not mat or not mat[0]:
        return []
    m, n = len(mat), len(mat[0])
    diag = []
    t = 0
    while t < m and t < n:
        # pick a min-degree nonzero pivot in the remaining block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if mat[i][j] and (best is None or mat[i][j].degree() < mat[best[0]][best[1]].degree()):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        mat[t], mat[i] = mat[i], mat[t]
        for r in mat:
            r[t], r[j] = r[j], r[t]
        while True:
            pivot = mat[t][t]
            dirty = False
            for i in range(t + 1, m):
                if mat[i][t]:
                    q, _ = mat[i][t].divmod_univariate(pivot)
                    mat[i] = [a - q * b for a, b in zip(mat[i], mat[t])]
                    dirty = dirty or bool(mat[i][t])
            for j in range(t + 1, n):
                if mat[t][j]:
                    q, _ = mat[t][j].divmod_univariate(pivot)
                    for i in range(m):
                        mat[i][j] = mat[i][j] - q * mat[i][t]
                    dirty = dirty or bool(mat[t][j])
            if not dirty:
                break
            # a smaller-degree remainder appeared; re-pick the pivot
            best = (t, t)
            for i in range(t, m):
                for j in range(t, n):
                    if mat[i][j] and mat[i][j].degree() < mat[best[0]][best[1]].degree():
                        best = (i, j)
            i, j = best
            mat[t], mat[i] = mat[i], mat[t]
            for r in mat:
                r[t], r[j] = r[j], r[t]
        diag.append(mat[t][t])
        t += 1
    return [d for d in diag if d]


def cokernel_data(ring, ngens, relation_vectors):
    """(free_rank, invariant-style diagonal entries) of A^ngens / relations."""
    rows = []
    for i in range(ngens):
        rows.append([rel.polys[i] for rel in relation_vectors])
    if not relation_vectors:
        return ngens, []
    diag = diagonalize(rows)
    nonunit = [d.monic(LEX) for d in diag if not d.is_constant()]
    free_rank = ngens - len(diag)
    return free_rank, nonunit
