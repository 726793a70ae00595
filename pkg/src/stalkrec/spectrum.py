"""Primes of the supported rings, specialization order, localization of
submodules at primes, and contraction back to the ambient module.

Two polynomial flavors are decidable here: "monomial" (primes generated by
subsets of the variables, plus the zero ideal) and "univariate" (k[t]: the
zero ideal and (f) for monic irreducible f).  Finite rings live in
`finitering` and carry their own exhaustive prime machinery.
"""

from __future__ import annotations

import functools

from . import univar
from .rings import ModuleElement, PolyRing, unit_vector
from .modules import Submodule, saturate

FLAVORS = ("monomial", "univariate")


class RingContext:
    """A polynomial ring together with the decidable prime flavor in use."""

    def __init__(self, ring, flavor):
        assert flavor in FLAVORS, f"unsupported flavor {flavor!r}"
        if flavor == "univariate":
            assert ring.nvars == 1, "univariate flavor needs exactly one variable"
        self.ring = ring
        self.flavor = flavor

    def __eq__(self, other):
        return (isinstance(other, RingContext) and self.ring == other.ring
                and self.flavor == other.flavor)

    def __hash__(self):
        return hash((self.ring, self.flavor))

    def __repr__(self):
        return f"RingContext({self.ring}, {self.flavor})"

    def zero_prime(self):
        return PrimeIdeal(self, "zero", None)

    def monomial_prime(self, names):
        assert self.flavor == "monomial", "monomial primes need the monomial flavor"
        idx = frozenset(self.ring.variables.index(n) for n in names)
        if not idx:
            return self.zero_prime()
        return PrimeIdeal(self, "monomial", idx)

    def univariate_prime(self, f):
        assert self.flavor == "univariate"
        f = f.monic()
        assert univar.is_irreducible(f), f"not monic irreducible: {f}"
        return PrimeIdeal(self, "univariate", f)

    def maximal_monomial_prime(self):
        return self.monomial_prime(self.ring.variables)

    def all_monomial_primes(self):
        """All monomial primes (including the zero ideal), canonically sorted."""
        assert self.flavor == "monomial"
        n = self.ring.nvars
        out = []
        for mask in range(1 << n):
            names = [self.ring.variables[i] for i in range(n) if mask >> i & 1]
            out.append(self.monomial_prime(names))
        return sorted(out, key=lambda p: p.sort_key())


@functools.total_ordering
class PrimeIdeal:
    """A prime of the context ring: zero, monomial (variable subset), or
    univariate principal (monic irreducible)."""

    def __init__(self, ctx, kind, data):
        self.ctx = ctx
        self.kind = kind
        self.data = data

    @property
    def ring(self):
        return self.ctx.ring

    def generators(self):
        if self.kind == "zero":
            return []
        if self.kind == "monomial":
            return [self.ring.var(self.ring.variables[i]) for i in sorted(self.data)]
        return [self.data]

    def variable_names(self):
        assert self.kind == "monomial"
        return tuple(self.ring.variables[i] for i in sorted(self.data))

    def is_maximal(self):
        if self.kind == "zero":
            return self.ring.nvars == 0
        if self.kind == "monomial":
            return len(self.data) == self.ring.nvars
        return True  # irreducibles are maximal in k[t]

    def sort_key(self):
        if self.kind == "zero":
            return (0, ())
        if self.kind == "monomial":
            return (1, (len(self.data), tuple(sorted(self.data))))
        return (1, (self.data.degree(), str(self.data)))

    def __eq__(self, other):
        return (isinstance(other, PrimeIdeal) and self.ctx == other.ctx
                and self.kind == other.kind and self.data == other.data)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __hash__(self):
        if self.kind == "univariate":
            return hash((self.kind, str(self.data)))
        return hash((self.kind, self.data))

    def __str__(self):
        if self.kind == "zero":
            return "(0)"
        if self.kind == "monomial":
            return "(" + ",".join(self.variable_names()) + ")"
        return f"({self.data})"

    def __repr__(self):
        return f"Prime{self}"

    def contains_poly(self, f):
        """Membership f in p (exact for the supported prime shapes)."""
        if f.is_zero():
            return True
        if self.kind == "zero":
            return False
        if self.kind == "monomial":
            # every term must involve a variable of the prime
            return all(any(m[i] > 0 for i in self.data) for m in f.terms)
        _, r = f.divmod_univariate(self.data)
        return r.is_zero()


def specializes(p, q):
    """True iff p is contained in q (q lies in the closure of p)."""
    assert p.ctx == q.ctx, "context mismatch"
    if p.kind == "zero":
        return True
    if q.kind == "zero":
        return p.kind == "zero"
    if p.kind == "monomial" and q.kind == "monomial":
        return p.data <= q.data
    if p.kind == "univariate" and q.kind == "univariate":
        return p.data == q.data
    raise AssertionError("mixed prime kinds")


# ---------------------------------------------------------------------------
# localization and contraction
# ---------------------------------------------------------------------------

def multiplicative_separator(S, p):
    """An element outside p whose saturation realizes the contraction of S_p.

    Monomial flavor: the product of the variables outside p (they generate
    every monomial prime not contained in p).  Univariate flavor: the product
    of the torsion irreducibles of A^r/S that are not associate to p.
    """
    ring = p.ring
    if p.ctx.flavor == "monomial":
        outside = [i for i in range(ring.nvars)
                   if p.kind == "zero" or i not in p.data]
        if not outside:
            return ring.one
        exps = tuple(1 if i in outside else 0 for i in range(ring.nvars))
        return ring.monomial(exps)
    # univariate
    _, divisors = univar.cokernel_data(ring, S.rank, list(S.generators))
    factors = []
    for d in divisors:
        for f in univar.irreducible_factors(d):
            if not (p.kind == "univariate" and f == p.data):
                if f not in factors:
                    factors.append(f)
    sep = ring.one
    for f in factors:
        sep = sep * f
    return sep


def contract_submodule(S, p):
    """i_p^{-1}(S_p) as a submodule of the ambient free module."""
    assert S.ring == p.ring
    sep = multiplicative_separator(S, p)
    if sep.is_constant():
        return S
    sat, _ = saturate(S, sep)
    return sat


class LocalizedSubmodule:
    """A submodule of E_p, presented denominator-free by elements of E.

    Equality is stalk equality (decided through contraction), not equality
    of generator lists.
    """

    def __init__(self, prime, rank, generators):
        self.prime = prime
        self.rank = rank
        self.generators = tuple(generators)
        assert all(g.rank == rank for g in self.generators)
        self._contracted = None

    @property
    def ctx(self):
        return self.prime.ctx

    @property
    def ring(self):
        return self.prime.ring

    def submodule(self):
        return Submodule(self.ring, self.rank, list(self.generators))

    def contracted(self):
        if self._contracted is None:
            self._contracted = contract_submodule(self.submodule(), self.prime)
        return self._contracted

    def is_full(self):
        return self.contracted().is_full()

    @classmethod
    def full(cls, prime, rank):
        ring = prime.ring
        return cls(prime, rank, [unit_vector(ring, rank, i) for i in range(rank)])

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators) or "0"
        return f"Stalk@{self.prime}<{gens}>"


def localize(S, p):
    """The stalk S_p, presented denominator-free."""
    contracted = contract_submodule(S, p)
    return LocalizedSubmodule(p, S.rank, list(contracted.generators))


def contract(Jp):
    """i_p^{-1}(J(p)) for a prescribed stalk."""
    return Jp.contracted()


def stalk_equal(Jp, Kp):
    """Equality of two prescribed stalks as submodules of E_p."""
    assert Jp.prime == Kp.prime, "prime mismatch"
    assert Jp.rank == Kp.rank, "rank mismatch"
    return Jp.contracted().eq(Kp.contracted())


def kernel_of_localization(M, p):
    """ker(i_p : M -> M_p), pulled back to the free cover of the presentation.

    The result contains the relations; an element v of A^g maps into the
    kernel iff s*v lies in the relations for some s outside p.
    """
    return contract_submodule(M.relations, p)


def localize_presentation(M, p):
    """Denominator-cleared presentation of M_p on the same generators."""
    from .modules import ModulePresentation
    sat = kernel_of_localization(M, p)
    return ModulePresentation(M.ring, M.ngens, list(sat.generators))
