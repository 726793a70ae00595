"""Families of prescribed stalks with finite presentation: explicit entries
at finitely many primes plus a generic rule, with the consistency and
finiteness validators (including the infinite-support pattern detector)."""

from __future__ import annotations

from dataclasses import dataclass, field

from .modules import Submodule
from .assoc import AssSet, ass_membership, ass_of_quotient
from .spectrum import (
    LocalizedSubmodule, contract_submodule, localize, specializes, stalk_equal,
)


class FromSubmodule:
    """Generic rule: unlisted primes get the localization of a fixed
    submodule."""

    name = "from-submodule"

    def __init__(self, G):
        self.G = G

    def stalk(self, p, rank):
        return localize(self.G, p)


class FullStalk:
    """Generic rule: unlisted primes get the full stalk E_p."""

    name = "full-stalk"

    def stalk(self, p, rank):
        return LocalizedSubmodule.full(p, rank)


class PatternRule:
    """Symbolic rule over an infinite prime family.

    The one supported shape is "maximal-torsion": every maximal prime m gets
    the stalk m*E_m, every other prime the full stalk.  Shapes outside this
    produce verdict `undecided` downstream rather than a silent guess.
    """

    name = "pattern"

    def __init__(self, shape="maximal-torsion"):
        self.shape = shape

    def stalk(self, p, rank):
        if self.shape != "maximal-torsion":
            raise ValueError(f"pattern rule {self.shape!r} does not determine J({p})")
        ring = p.ring
        if p.is_maximal():
            gens = []
            from .rings import unit_vector
            for g in p.generators():
                for i in range(rank):
                    gens.append(unit_vector(ring, rank, i, g))
            return LocalizedSubmodule(p, rank, gens)
        return LocalizedSubmodule.full(p, rank)


class GermFamily:
    """Finitely presented family (p_i, J(p_i)) with a generic rule."""

    def __init__(self, ctx, rank, entries, generic):
        self.ctx = ctx
        self.rank = rank
        self.entries = list(entries)
        primes = [p for p, _ in self.entries]
        assert len(set(primes)) == len(primes), "duplicate explicit primes"
        assert all(j.rank == rank for _, j in self.entries)
        self.generic = generic

    def explicit_primes(self):
        return sorted((p for p, _ in self.entries), key=lambda p: p.sort_key())

    def stalk_at(self, p):
        """Explicit entry if listed, otherwise the generic rule at p."""
        for q, j in self.entries:
            if q == p:
                return j
        return self.generic.stalk(p, self.rank)


def stalk_at(fam, p):
    return fam.stalk_at(p)


@dataclass
class ConsistencyReport:
    verdict: bool
    violations: list = field(default_factory=list)  # (p, q, stalk_p, stalk_q_down)

    def __str__(self):
        if self.verdict:
            return "Consistency: pass"
        lines = ["Consistency: FAIL"]
        for p, q, jp, down in self.violations:
            lines.append(f"  pair {p} < {q}: prescribed {p}-stalk "
                         f"{[str(g) for g in jp.contracted().groebner()]} != localized "
                         f"{[str(g) for g in down.contracted().groebner()]}")
        return "\n".join(lines)


@dataclass
class FinitenessReport:
    verdict: str  # "finite" | "infinite" | "undecided"
    ass_set: AssSet | None = None
    witness: str = ""

    def __str__(self):
        if self.verdict == "finite":
            return f"Finiteness: finite, Ass = {self.ass_set}"
        if self.verdict == "infinite":
            return f"Finiteness: infinite ({self.witness})"
        return f"Finiteness: undecided ({self.witness})"


def check_consistency(fam):
    """Verify J(p) = J(q) localized at p on every specialization pair among
    the explicit primes and the zero prime."""
    primes = fam.explicit_primes()
    zero = fam.ctx.zero_prime()
    if zero not in primes:
        primes = [zero] + primes
    violations = []
    for p in primes:
        for q in primes:
            if p == q or not specializes(p, q):
                continue
            down = localize(fam.stalk_at(q).contracted(), p)
            if not stalk_equal(down, fam.stalk_at(p)):
                violations.append((p, q, fam.stalk_at(p), down))
    return ConsistencyReport(not violations, violations)


def check_finiteness(fam, consistency=None):
    """Compute the set of primes whose local quotient has depth-zero torsion,
    or detect that it is infinite.

    Requires consistency to have passed.
    """
    if consistency is None:
        consistency = check_consistency(fam)
    assert consistency.verdict, "finiteness requires a consistent family"

    generic = fam.generic
    if isinstance(generic, PatternRule):
        if generic.shape != "maximal-torsion":
            return FinitenessReport("undecided",
                                    witness=f"unsupported pattern shape {generic.shape!r}")
        if fam.ctx.flavor == "univariate":
            # k[t] has infinitely many maximal primes, each contributing
            return FinitenessReport(
                "infinite",
                witness="pattern rule marks every maximal prime: each maximal m "
                        "has m in Ass(E_m/J(m)), and Max(A) is infinite")
        return FinitenessReport(
            "undecided",
            witness="maximal-prime pattern outside the univariate flavor")

    primes = []
    for p, jp in fam.entries:
        if ass_membership(p, jp.contracted(), fam.rank):
            primes.append(p)
    if isinstance(generic, FromSubmodule):
        for p in ass_of_quotient(fam.ctx, generic.G, fam.rank):
            if p not in [q for q, _ in fam.entries]:
                primes.append(p)
    return FinitenessReport("finite", ass_set=AssSet(primes))
