"""Reconstruction of a submodule from a consistent, finitely supported germ
family: the intersection of contractions, the partition of the support at a
prime, separating elements, and full stalk-by-stalk verification."""

from __future__ import annotations

from dataclasses import dataclass, field

from .assoc import AssSet, ass_of_quotient
from .family import check_consistency, check_finiteness
from .modules import Submodule, intersect, saturate
from .spectrum import localize, specializes, stalk_equal


@dataclass
class VerificationRow:
    prime: object
    prescribed: object       # LocalizedSubmodule
    computed: object         # LocalizedSubmodule
    equal: bool


@dataclass
class ReconstructionResult:
    F: Submodule
    ass_set: AssSet
    table: list = field(default_factory=list)
    ass_matches: bool = True

    @property
    def ok(self):
        return self.ass_matches and all(row.equal for row in self.table)

    def report(self):
        lines = [f"F = ({', '.join(str(g) for g in self.F.groebner()) or '0'})",
                 f"Ass = {self.ass_set}"]
        for row in self.table:
            mark = "ok" if row.equal else "MISMATCH"
            lines.append(f"  stalk at {row.prime}: {mark}")
        if not self.ass_matches:
            lines.append("  INTERNAL SOUNDNESS ALARM: Ass(E/F) differs from the "
                         "family support; this contradicts uniqueness of the reconstruction "
                         "and indicates an engine bug")
        return "\n".join(lines)


def partition(q, ass_set):
    """Split the support into the primes contained in q and the rest."""
    L = [p for p in ass_set if specializes(p, q)]
    R = [p for p in ass_set if not specializes(p, q)]
    return AssSet(L), AssSet(R)


def separating_element(q, R_set):
    """Product of one generator per prime of R_set chosen outside q;
    repeated factors are deduplicated.  Empty R_set gives 1."""
    ring = q.ring
    factors = []
    for c in R_set:
        assert not specializes(c, q), f"{c} is contained in {q}"
        pick = None
        for g in c.generators():
            if not q.contains_poly(g):
                pick = g
                break
        assert pick is not None, f"no generator of {c} outside {q}"
        if not any(pick == f for f in factors):
            factors.append(pick)
    a = ring.one
    for f in factors:
        a = a * f
    return a


def stalk_of_F_via_separator(F, q, a):
    """i_q^{-1}(F_q) computed as a single saturation by the separating
    element; returns (submodule, stabilization exponent)."""
    if a.is_constant():
        return F, 0
    return saturate(F, a)


def reconstruct(fam, verify_primes=()):
    """Intersection-of-contractions reconstruction with verification.

    Preconditions: the family is consistent and its support is finite.  The
    per-prime verification cannot fail on valid inputs; a failing row is an
    internal soundness alarm, not a user error.
    """
    cons = check_consistency(fam)
    assert cons.verdict, "reconstruct requires a consistent family"
    fin = check_finiteness(fam, cons)
    assert fin.verdict == "finite", "reconstruct requires a finite support"
    ass = fin.ass_set

    ring, rank = fam.ctx.ring, fam.rank
    if len(ass) == 0:
        F = Submodule.full(ring, rank)
    else:
        parts = [fam.stalk_at(p).contracted() for p in ass]
        F = parts[0]
        for part in parts[1:]:
            F = intersect(F, part)

    table = []
    check_at = list(ass)
    for p in fam.explicit_primes():
        if p not in check_at:
            check_at.append(p)
    zero = fam.ctx.zero_prime()
    if zero not in check_at:
        check_at.append(zero)
    for p in verify_primes:
        if p not in check_at:
            check_at.append(p)
    check_at.sort(key=lambda p: p.sort_key())
    for p in check_at:
        computed = localize(F, p)
        prescribed = fam.stalk_at(p)
        table.append(VerificationRow(p, prescribed, computed,
                                     stalk_equal(computed, prescribed)))

    ass_F = ass_of_quotient(fam.ctx, F, rank)
    return ReconstructionResult(F, ass, table, ass_F == ass)


def reconstruct_local(fam):
    """Local case: the reconstruction is the prescribed stalk at the unique
    maximal ideal, read off directly."""
    ctx = fam.ctx
    if ctx.flavor == "monomial":
        m = ctx.maximal_monomial_prime()
    else:
        raise AssertionError("non-local context: k[t] has many maximal ideals")
    return fam.stalk_at(m).contracted()
