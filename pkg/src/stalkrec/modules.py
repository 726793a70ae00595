"""Buchberger's algorithm for submodules of free modules, and the calculus
built on it: membership, intersection, quotient, saturation, syzygies and
Hom-module presentations.

Ideals are the rank-1 case throughout.  Monomial submodules get exact
combinatorial fast paths; everything else goes through Groebner bases.
"""

from __future__ import annotations

import itertools

from .rings import (
    GREVLEX, BlockOrder, Grevlex, ModuleOrder, ModuleElement, PolyRing,
    mono_div, mono_divides, mono_gcd, mono_lcm, mono_mul, unit_vector,
)

DEFAULT_ORDER = ModuleOrder(GREVLEX, "pot")


# ---------------------------------------------------------------------------
# division and Buchberger
# ---------------------------------------------------------------------------

def normal_form(w, basis, order=DEFAULT_ORDER):
    """Fully reduce w by basis: no term of the result is divisible by any
    basis leading term, and w minus the result lies in the span of basis."""
    basis = [b for b in basis if not b.is_zero()]
    if w.is_zero() or not basis:
        return w
    leads = [(b.leading(order), b) for b in basis]
    remainder = w
    ring = w.ring
    F = ring.field
    while True:
        reducible = None
        for (i, m), c in remainder.iter_terms():
            for ((bi, bm), bc), b in leads:
                if bi == i and mono_divides(bm, m):
                    reducible = (i, m, c, bm, bc, b)
                    break
            if reducible:
                break
        if not reducible:
            return remainder
        i, m, c, bm, bc, b = reducible
        remainder = remainder - b.mul_term(mono_div(m, bm), F.div(c, bc))


def _spair(f, g, order):
    (fi, fm), fc = f.leading(order)
    (gi, gm), gc = g.leading(order)
    assert fi == gi
    F = f.ring.field
    lcm = mono_lcm(fm, gm)
    s1 = f.mul_term(mono_div(lcm, fm), F.inv(fc))
    s2 = g.mul_term(mono_div(lcm, gm), F.inv(gc))
    return s1 - s2


def buchberger(gens, order=DEFAULT_ORDER, rank=None):
    """Reduced Groebner basis of the submodule generated by gens."""
    G = [g.monic(order) for g in gens if not g.is_zero()]
    if not G:
        return []
    rank = G[0].rank if rank is None else rank
    pairs = {(i, j) for i in range(len(G)) for j in range(i + 1, len(G))
             if G[i].leading(order)[0][0] == G[j].leading(order)[0][0]}
    while pairs:
        i, j = min(pairs, key=lambda p: order.key(
            G[p[0]].leading(order)[0][0],
            mono_lcm(G[p[0]].leading(order)[0][1], G[p[1]].leading(order)[0][1])))
        pairs.discard((i, j))
        (ci, mi), _ = G[i].leading(order)
        (cj, mj), _ = G[j].leading(order)
        # product criterion is only valid in the ideal case
        if rank == 1 and mono_gcd(mi, mj) == tuple(0 for _ in mi):
            continue
        s = normal_form(_spair(G[i], G[j], order), G, order)
        if not s.is_zero():
            s = s.monic(order)
            k = len(G)
            G.append(s)
            sc = s.leading(order)[0][0]
            pairs |= {(t, k) for t in range(k) if G[t].leading(order)[0][0] == sc}
    return interreduce(G, order)


def interreduce(G, order=DEFAULT_ORDER):
    """Minimalize and fully reduce a Groebner basis; output is canonical."""
    G = [g for g in G if not g.is_zero()]
    Gmin = []
    for g in sorted(G, key=lambda h: order.key(*h.leading(order)[0])):
        (gi, gm), _ = g.leading(order)
        if not any(lead[0] == gi and mono_divides(lead[1], gm)
                   for lead in (h.leading(order)[0] for h in Gmin)):
            Gmin.append(g)
    out = []
    for i, g in enumerate(Gmin):
        r = normal_form(g, Gmin[:i] + Gmin[i + 1:], order)
        if not r.is_zero():
            out.append(r.monic(order))
    out.sort(key=lambda h: order.key(*h.leading(order)[0]), reverse=True)
    return out


# ---------------------------------------------------------------------------
# monomial fast paths (exponent-tuple combinatorics, exact)
# ---------------------------------------------------------------------------

def _monomial_gens(generators):
    """Per-component exponent tuples if every generator is a single term."""
    if not generators:
        return []
    rank = generators[0].rank
    by_comp = [[] for _ in range(rank)]
    for g in generators:
        if g.is_zero():
            continue
        if not g.is_term():
            return None
        ((i, m), _), = list(g.iter_terms())
        by_comp[i].append(m)
    return [_min_monos(c) for c in by_comp]


def _min_monos(monos):
    out = []
    for m in sorted(set(monos), key=lambda t: (sum(t), t)):
        if not any(mono_divides(o, m) for o in out):
            out.append(m)
    return sorted(out)


def _mono_ideal_intersect(a, b):
    return _min_monos([mono_lcm(x, y) for x in a for y in b])


def _mono_ideal_quotient(gens, m):
    """(I : x^m) for a monomial ideal I."""
    return _min_monos([mono_div(g, mono_gcd(g, m)) for g in gens])


def _from_monomial(ring, rank, by_comp):
    gens = []
    for i, monos in enumerate(by_comp):
        for m in monos:
            gens.append(unit_vector(ring, rank, i, ring.monomial(m)))
    return gens


# ---------------------------------------------------------------------------
# Submodule
# ---------------------------------------------------------------------------

class Submodule:
    """Submodule of A^r given by generators, with a lazily cached reduced
    Groebner basis per order."""

    def __init__(self, ring, rank, generators):
        self.ring = ring
        self.rank = rank
        self.generators = tuple(g for g in generators if not g.is_zero())
        assert all(g.rank == rank and g.ring == ring for g in self.generators)
        self._gb = {}
        self._mono = _monomial_gens(self.generators) if self.generators else []
        while self._mono is not None and len(self._mono) < rank:
            self._mono.append([])

    @classmethod
    def ideal(cls, ring, polys):
        return cls(ring, 1, [ModuleElement(ring, [p]) for p in polys])

    @classmethod
    def full(cls, ring, rank):
        return cls(ring, rank, [unit_vector(ring, rank, i) for i in range(rank)])

    @classmethod
    def zero(cls, ring, rank):
        return cls(ring, rank, [])

    def is_monomial(self):
        return self._mono is not None

    def monomial_components(self):
        assert self._mono is not None, "not a monomial submodule"
        return self._mono

    def groebner(self, order=DEFAULT_ORDER):
        key = (order.position, type(order.mono).__name__, getattr(order.mono, "split", None))
        if key not in self._gb:
            if self._mono is not None:
                # minimal monomial generators are already a reduced GB
                self._gb[key] = _from_monomial(self.ring, self.rank, self._mono)
            else:
                self._gb[key] = buchberger(list(self.generators), order, self.rank)
        return self._gb[key]

    def contains(self, w, order=DEFAULT_ORDER):
        assert w.rank == self.rank, "rank mismatch"
        if self._mono is not None:
            return all(any(mono_divides(g, m) for g in self._mono[i])
                       for (i, m), _ in w.iter_terms())
        return normal_form(w, self.groebner(order), order).is_zero()

    def contains_submodule(self, other):
        return all(self.contains(g) for g in other.generators)

    def eq(self, other):
        assert self.rank == other.rank
        return self.contains_submodule(other) and other.contains_submodule(self)

    def is_zero_module(self):
        return all(g.is_zero() for g in self.generators)

    def is_full(self):
        return all(self.contains(unit_vector(self.ring, self.rank, i))
                   for i in range(self.rank))

    def sorted_groebner_strs(self):
        return [str(g) for g in self.groebner()]

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators) or "0"
        return f"Submodule<{gens}>"


def member(w, S, order=DEFAULT_ORDER):
    """Membership w in S, decided by normal form against the Groebner basis."""
    return S.contains(w, order)


def intersect(S, T):
    """S cap T, by the t*S + (1-t)*T elimination trick (monomial fast path)."""
    assert S.rank == T.rank and S.ring == T.ring
    ring, rank = S.ring, S.rank
    if S.is_monomial() and T.is_monomial():
        comps = [_mono_ideal_intersect(a, b)
                 for a, b in zip(S.monomial_components(), T.monomial_components())]
        return Submodule(ring, rank, _from_monomial(ring, rank, comps))
    ext = PolyRing(("@t",) + ring.variables, ring.field)

    def up(w, shift):
        polys = []
        for p in w.polys:
            terms = {}
            for m, c in p.terms.items():
                terms[(shift,) + m] = c
            polys.append(ext.poly(terms))
        return ModuleElement(ext, polys)

    t = ext.var("@t")
    one_minus_t = ext.one - t
    gens = [up(g, 1) for g in S.generators]
    gens += [up(g, 0).scale_poly(one_minus_t) for g in T.generators]
    order = ModuleOrder(BlockOrder(1), "pot")
    gb = buchberger(gens, order, rank)
    out = []
    for g in gb:
        if all(m[0] == 0 for (_, m), _ in g.iter_terms()):
            polys = [ring.poly({m[1:]: c for m, c in p.terms.items()}) for p in g.polys]
            out.append(ModuleElement(ring, polys))
    return Submodule(ring, rank, out)


def _exact_divide(w, f):
    """w / f for a module element known to be divisible componentwise."""
    ring = w.ring
    out = []
    for p in w.polys:
        q = ring.zero
        r = p
        while r.terms:
            m, c = r.leading(GREVLEX)
            fm, fc = f.leading(GREVLEX)
            assert mono_divides(fm, m), "exact division failed"
            t = ring.monomial(mono_div(m, fm), ring.field.div(c, fc))
            q = q + t
            r = r - t * f
        out.append(q)
    return ModuleElement(ring, out)


def quotient(S, f):
    """(S : f) = {w : f*w in S}."""
    assert f and not f.is_zero(), "quotient by zero"
    ring, rank = S.ring, S.rank
    if f.is_constant():
        return S
    if S.is_monomial() and f.is_term():
        m = next(iter(f.terms))
        comps = [_mono_ideal_quotient(c, m) if c else [] for c in S.monomial_components()]
        return Submodule(ring, rank, _from_monomial(ring, rank, comps))
    fE = Submodule(ring, rank, [unit_vector(ring, rank, i, f) for i in range(rank)])
    inter = intersect(S, fE)
    return Submodule(ring, rank, [_exact_divide(g, f) for g in inter.generators])


def saturate(S, f):
    """(S : f^inf) with the stabilization exponent N such that
    (S : f^N) = (S : f^(N+1))."""
    assert f and not f.is_zero(), "saturation by zero"
    current = S
    n = 0
    while True:
        nxt = quotient(current, f)
        if nxt.eq(current):
            return current, n
        current = nxt
        n += 1


# ---------------------------------------------------------------------------
# graph-module solver: lifts and syzygies
# ---------------------------------------------------------------------------

class GraphSolver:
    """GB of the graph module {(g_i, e_i)} in A^(r+k), with position-over-term
    prioritizing the first r components.  Gives membership with explicit
    coefficients, and a syzygy basis, in one computation."""

    def __init__(self, ring, rank, gens):
        self.ring = ring
        self.rank = rank
        self.gens = list(gens)
        k = len(self.gens)
        self.k = k
        graph = []
        for i, g in enumerate(self.gens):
            polys = list(g.polys) + [ring.one if j == i else ring.zero for j in range(k)]
            graph.append(ModuleElement(ring, polys))
        self.order = DEFAULT_ORDER
        self.gb = buchberger(graph, self.order, rank + k) if graph else []

    def solve(self, w):
        """Coefficients a with w = sum a_i g_i, or None if w is not in the span."""
        assert w.rank == self.rank
        padded = ModuleElement(self.ring, list(w.polys) + [self.ring.zero] * self.k)
        r = normal_form(padded, self.gb, self.order)
        if any(not p.is_zero() for p in r.polys[: self.rank]):
            return None
        return [-p for p in r.polys[self.rank:]]

    def syzygies(self):
        """Generators of {a in A^k : sum a_i g_i = 0}."""
        out = []
        for h in self.gb:
            if all(p.is_zero() for p in h.polys[: self.rank]):
                out.append(ModuleElement(self.ring, h.polys[self.rank:]))
        return out


def syzygies(S):
    """Relation module of the generator list of S, as a ModulePresentation."""
    k = len(S.generators)
    solver = GraphSolver(S.ring, S.rank, S.generators)
    return ModulePresentation(S.ring, k, solver.syzygies())


def solve_combination(ring, rank, gens, target):
    """Express target as an A-linear combination of gens, if possible."""
    return GraphSolver(ring, rank, gens).solve(target)


def preimage(ring, vectors, T):
    """{a in A^k : sum a_i v_i in T} for vectors v_i in the ambient of T."""
    k = len(vectors)
    solver = GraphSolver(ring, T.rank, list(vectors) + list(T.generators))
    out = []
    for s in solver.syzygies():
        head = ModuleElement(ring, s.polys[:k])
        if not head.is_zero():
            out.append(head)
    return Submodule(ring, k, out)


# ---------------------------------------------------------------------------
# finitely presented modules
# ---------------------------------------------------------------------------

class ModulePresentation:
    """A^g / (column span of relations); relations are vectors in A^g."""

    def __init__(self, ring, ngens, relations):
        self.ring = ring
        self.ngens = ngens
        self.relations = Submodule(ring, ngens, relations)
        assert all(r.rank == ngens for r in relations)

    @classmethod
    def free(cls, ring, rank):
        return cls(ring, rank, [])

    @classmethod
    def cyclic(cls, ring, ideal_polys):
        """A / (ideal)."""
        return cls(ring, 1, [ModuleElement(ring, [p]) for p in ideal_polys])

    @classmethod
    def cokernel(cls, S):
        """A^r / S for a submodule S of A^r."""
        return cls(S.ring, S.rank, list(S.generators))

    @classmethod
    def of_submodule(cls, S):
        """S itself as an abstract module: generators of S with their syzygies."""
        return syzygies(S)

    def reduce(self, w):
        """Canonical representative of w modulo the relations."""
        return normal_form(w, self.relations.groebner(), DEFAULT_ORDER)

    def is_zero_element(self, w):
        return self.relations.contains(w)

    def elements_equal(self, v, w):
        return self.relations.contains(v - w)

    def is_zero_module(self):
        return all(self.relations.contains(unit_vector(self.ring, self.ngens, i))
                   for i in range(self.ngens))

    def __repr__(self):
        return f"Presentation<gens={self.ngens}, rels={len(self.relations.generators)}>"


# ---------------------------------------------------------------------------
# Hom modules
# ---------------------------------------------------------------------------

def _flatten_matrix(ring, cols):
    """Stack matrix columns (vectors in A^h) into one vector in A^(h*g)."""
    polys = []
    for c in cols:
        polys.extend(c.polys)
    return ModuleElement(ring, polys)


def _unflatten_matrix(ring, w, h, g):
    cols = []
    for j in range(g):
        cols.append(ModuleElement(ring, w.polys[j * h:(j + 1) * h]))
    return cols


class HomModule:
    """Presentation of Hom_A(E, F) for finitely presented E, F, together with
    the evaluation of each Hom generator as a matrix (list of columns in the
    free cover of F, one column per generator of E)."""

    def __init__(self, E, F):
        assert E.ring == F.ring
        ring = self.ring = E.ring
        self.E, self.F = E, F
        g, h = E.ngens, F.ngens
        self.shape = (h, g)
        rels = list(E.relations.generators)
        s = len(rels)
        hg = h * g

        if s == 0:
            # no conditions: every matrix is a homomorphism
            H_gens = [unit_vector(ring, hg, t) for t in range(hg)]
        else:
            # condition: M applied to each relation of E lands in relations(F);
            # stacked over all relations of E in a free module of rank h*s
            T_gens = []
            for block in range(s):
                for fr in F.relations.generators:
                    T_gens.append(_stack_block(ring, block, s, h, fr))
            big = Submodule(ring, h * s, T_gens)

            def apply_conditions(unit_idx):
                # unit matrix with 1 in (row, col): col-major flattening
                row, col = unit_idx % h, unit_idx // h
                polys = []
                for rel in rels:
                    coeff = rel.polys[col]
                    polys.extend(coeff if t == row else ring.zero for t in range(h))
                return ModuleElement(ring, polys)

            vecs = [apply_conditions(t) for t in range(hg)]
            H_gens = list(preimage(ring, vecs, big).generators)

        # maps that are zero on the nose: columns lie in relations(F)
        H0_gens = []
        for j in range(g):
            for fr in F.relations.generators:
                cols = [fr if jj == j else ModuleElement(ring, [ring.zero] * h)
                        for jj in range(g)]
                H0_gens.append(_flatten_matrix(ring, cols))
        self.H = Submodule(ring, hg, H_gens)
        self.H0 = Submodule(ring, hg, H0_gens)
        rels_hom = preimage(ring, list(self.H.generators), self.H0) \
            if self.H.generators else Submodule(ring, 0, [])
        self.presentation = ModulePresentation(
            ring, len(self.H.generators), list(rels_hom.generators))

    def generator_matrix(self, i):
        h, g = self.shape
        return _unflatten_matrix(self.ring, self.H.generators[i], h, g)

    def matrix_of(self, coeffs):
        """Matrix (columns) of the Hom element with the given coordinates."""
        h, g = self.shape
        hg = h * g
        acc = ModuleElement(self.ring, [self.ring.zero] * hg)
        for c, gen in zip(coeffs, self.H.generators):
            acc = acc + gen.scale_poly(c)
        return _unflatten_matrix(self.ring, acc, h, g)

    def coords_of_matrix(self, cols):
        """Coordinates of a matrix in the Hom generators, if it lies in H."""
        flat = _flatten_matrix(self.ring, cols)
        return solve_combination(self.ring, len(flat.polys),
                                 list(self.H.generators), flat)


def _stack_block(ring, block, nblocks, h, vec):
    polys = []
    for b in range(nblocks):
        polys.extend(vec.polys if b == block else [ring.zero] * h)
    return ModuleElement(ring, polys)


def hom_module(E, F):
    """Presentation of Hom_A(E, F) with evaluation data."""
    return HomModule(E, F)


# ---------------------------------------------------------------------------
# matrix helpers (lists of columns)
# ---------------------------------------------------------------------------

def mat_identity(ring, n):
    return [unit_vector(ring, n, i) for i in range(n)]


def mat_apply(cols, vec):
    """Apply the matrix given by columns to a vector of polynomials."""
    ring = cols[0].ring if cols else vec.ring
    rank = cols[0].rank if cols else 0
    acc = ModuleElement(ring, [ring.zero] * rank)
    for f, col in zip(vec.polys, cols):
        acc = acc + col.scale_poly(f)
    return acc


def mat_mul(A_cols, B_cols):
    """Matrix product A*B, both given as lists of columns."""
    return [mat_apply(A_cols, b) for b in B_cols]


def mat_scale(cols, f):
    return [c.scale_poly(f) for c in cols]


def mat_sub(A_cols, B_cols):
    return [a - b for a, b in zip(A_cols, B_cols)]
