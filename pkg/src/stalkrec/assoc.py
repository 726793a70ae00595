"""Associated primes of finitely presented modules, per engine flavor.

Monomial submodules go through the classical splitting into irreducible
monomial ideals; univariate presentations go through Smith-style
diagonalization; finite rings enumerate.
"""

from __future__ import annotations

from . import univar
from .rings import mono_divides
from .modules import ModulePresentation, Submodule
from .spectrum import contract_submodule, specializes
from .modules import _min_monos, _mono_ideal_intersect


class AssSet:
    """A deduplicated, canonically sorted finite set of primes."""

    def __init__(self, primes):
        uniq = []
        for p in primes:
            if p not in uniq:
                uniq.append(p)
        self.primes = tuple(sorted(uniq, key=lambda p: p.sort_key()))
        assert all(p.ctx == self.primes[0].ctx for p in self.primes)

    def __iter__(self):
        return iter(self.primes)

    def __len__(self):
        return len(self.primes)

    def __contains__(self, p):
        return p in self.primes

    def __eq__(self, other):
        return isinstance(other, AssSet) and self.primes == other.primes

    def __str__(self):
        return "{" + ", ".join(str(p) for p in self.primes) + "}"

    def __repr__(self):
        return f"Ass{self}"


# ---------------------------------------------------------------------------
# monomial ideals
# ---------------------------------------------------------------------------

def _split_irreducible(gens, cache):
    """Irreducible components of a monomial ideal given by minimal generators
    (exponent tuples).  Each component is a tuple of pure-power tuples."""
    key = tuple(sorted(gens))
    if key in cache:
        return cache[key]
    split = None
    for g in gens:
        support = [i for i, e in enumerate(g) if e > 0]
        if len(support) >= 2:
            i = support[0]
            a = tuple(e if j == i else 0 for j, e in enumerate(g))
            b = tuple(0 if j == i else e for j, e in enumerate(g))
            split = (g, a, b)
            break
    if split is None:
        # all pure powers: one irreducible component (minimal powers per var)
        n = len(gens[0]) if gens else 0
        comp = {}
        for g in gens:
            i = next(j for j, e in enumerate(g) if e > 0)
            comp[i] = min(comp.get(i, g[i]), g[i])
        out = (tuple(sorted(tuple(e if j == i else 0 for j in range(n))
                            for i, e in comp.items())),)
    else:
        g, a, b = split
        rest = [h for h in gens if h != g]
        left = _split_irreducible(_min_monos(rest + [a]), cache)
        right = _split_irreducible(_min_monos(rest + [b]), cache)
        out = tuple(dict.fromkeys(left + right))
    cache[key] = out
    return out


def _support(component):
    vars_ = set()
    for g in component:
        vars_.update(i for i, e in enumerate(g) if e > 0)
    return frozenset(vars_)


def _mono_contains(gens_a, gens_b):
    """Monomial ideal containment: every generator of b divisible in a."""
    return all(any(mono_divides(g, h) for g in gens_a) for h in gens_b)


def ass_monomial_ideal(ctx, gens):
    """Associated primes of A/J for a monomial ideal J (exponent tuples).

    Splits into irreducible components, groups them into primary components
    by radical, and drops redundant primary components; the radicals of the
    survivors are exactly the associated primes.
    """
    gens = _min_monos(gens)
    if not gens:
        return [ctx.zero_prime()]
    n = ctx.ring.nvars
    if any(sum(g) == 0 for g in gens):
        return []  # unit ideal
    components = _split_irreducible(gens, {})
    primary = {}
    for comp in components:
        sup = _support(comp)
        cur = primary.get(sup)
        primary[sup] = list(comp) if cur is None else _mono_ideal_intersect(cur, list(comp))
    primary = {sup: _min_monos(g) for sup, g in primary.items()}
    # drop components that are redundant in the intersection
    keep = dict(primary)
    changed = True
    while changed and len(keep) > 1:
        changed = False
        for sup in sorted(keep, key=lambda s: (len(s), sorted(s))):
            others = [g for s, g in keep.items() if s != sup]
            inter = others[0]
            for o in others[1:]:
                inter = _min_monos(_mono_ideal_intersect(inter, o))
            if _mono_contains(keep[sup], inter):
                del keep[sup]
                changed = True
                break
    names = ctx.ring.variables
    return [ctx.monomial_prime([names[i] for i in sorted(sup)]) for sup in keep]


def ass_monomial(ctx, J, rank=None):
    """Ass(E/J) for a monomial submodule J of E = A^rank, componentwise."""
    assert J.is_monomial(), "non-monomial input"
    comps = J.monomial_components()
    primes = []
    for gens in comps:
        primes.extend(ass_monomial_ideal(ctx, gens))
    return AssSet(primes)


# ---------------------------------------------------------------------------
# univariate presentations
# ---------------------------------------------------------------------------

def ass_univariate(ctx, M):
    """Ass(M) for a finitely presented module over k[t], via elementary
    divisors."""
    assert ctx.flavor == "univariate"
    free_rank, divisors = univar.cokernel_data(
        ctx.ring, M.ngens, list(M.relations.generators))
    primes = []
    if free_rank > 0:
        primes.append(ctx.zero_prime())
    for d in divisors:
        for f in univar.irreducible_factors(d):
            primes.append(ctx.univariate_prime(f))
    return AssSet(primes)


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------

def ass_of_quotient(ctx, J, rank):
    """Ass(E/J) for a submodule J of E = A^rank, per flavor."""
    if ctx.flavor == "monomial":
        return ass_monomial(ctx, J, rank)
    return ass_univariate(ctx, ModulePresentation.cokernel(J))


def ass_membership(p, J, rank):
    """True iff p is an associated prime of E/J.

    Membership is localization-invariant, so it is tested globally.
    """
    ctx = p.ctx
    return p in ass_of_quotient(ctx, J, rank)


def ass_membership_local(p, Jp):
    """True iff the maximal ideal of A_p is associated to E_p/J(p).

    By localization invariance this equals membership of p in the Ass of the
    contracted quotient.
    """
    C = Jp.contracted()
    return ass_membership(p, C, Jp.rank)


def ass_presentation(ctx, M):
    """Ass(M) for a finitely presented module, where decidable."""
    if ctx.flavor == "univariate":
        return ass_univariate(ctx, M)
    if not M.relations.is_monomial():
        raise ValueError("monomial engine needs monomial relations for Ass")
    return ass_monomial(ctx, M.relations, M.ngens)
