"""Exhaustive finite-ring oracle for the reconstruction identities.

Over a finite commutative ring every prime is maximal and every set is
enumerable, so localization, contraction, associated primes, and the
intersection-of-contractions reconstruction can all be checked by brute
force against their definitions.  The oracle scans every submodule and
every germ family and reports violation counts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product


class FiniteRing:
    """Finite commutative ring with unit, given by explicit elements and
    operation functions.  Elements must be hashable and canonically
    sortable."""

    def __init__(self, name, elements, add, mul, neg, zero, one):
        self.name = name
        self.elements = sorted(elements)
        self.add = add
        self.mul = mul
        self.neg = neg
        self.zero = zero
        self.one = one
        assert zero in self.elements and one in self.elements
        self._ideals = None
        self._primes = None

    def principal(self, a):
        return frozenset(self.mul(r, a) for r in self.elements)

    def _subgroup_sum(self, A, B):
        return frozenset(self.add(a, b) for a in A for b in B)

    def ideals(self):
        """All ideals, as sums of principal ideals (BFS closure)."""
        if self._ideals is not None:
            return self._ideals
        principals = {self.principal(a) for a in self.elements}
        seen = set(principals)
        seen.add(frozenset({self.zero}))
        frontier = list(seen)
        while frontier:
            nxt = []
            for I in frontier:
                for P in principals:
                    J = self._subgroup_sum(I, P)
                    if J not in seen:
                        seen.add(J)
                        nxt.append(J)
            frontier = nxt
        self._ideals = sorted(seen, key=lambda I: (len(I), sorted(I)))
        return self._ideals

    def primes(self):
        """Prime ideals: proper, with multiplicatively closed complement."""
        if self._primes is not None:
            return self._primes
        out = []
        for I in self.ideals():
            if self.one in I:
                continue
            comp = [a for a in self.elements if a not in I]
            if all(self.mul(a, b) not in I for a in comp for b in comp):
                out.append(I)
        self._primes = out
        return out

    def __repr__(self):
        return f"FiniteRing({self.name}, |R|={len(self.elements)})"


def zmod(n):
    """The ring of integers modulo n."""
    return FiniteRing(f"Z/{n}", list(range(n)),
                      lambda a, b: (a + b) % n,
                      lambda a, b: (a * b) % n,
                      lambda a: (-a) % n, 0, 1)


def truncated_algebra(p, monomials, name):
    """GF(p)[x1..xk] truncated to the given monomial basis: products falling
    outside the basis are zero.  Elements are coefficient tuples."""
    basis = sorted(monomials)
    index = {m: i for i, m in enumerate(basis)}
    nvars = len(basis[0])
    assert tuple([0] * nvars) in index, "basis must contain 1"
    k = len(basis)

    def add(a, b):
        return tuple((x + y) % p for x, y in zip(a, b))

    def neg(a):
        return tuple((-x) % p for x in a)

    def mul(a, b):
        out = [0] * k
        for i, m1 in enumerate(basis):
            if a[i] == 0:
                continue
            for j, m2 in enumerate(basis):
                if b[j] == 0:
                    continue
                m = tuple(e1 + e2 for e1, e2 in zip(m1, m2))
                pos = index.get(m)
                if pos is not None:
                    out[pos] = (out[pos] + a[i] * b[j]) % p
        return tuple(out)

    elements = [tuple(c) for c in product(range(p), repeat=k)]
    zero = tuple([0] * k)
    one = tuple(1 if m == tuple([0] * nvars) else 0 for m in basis)
    return FiniteRing(name, elements, add, mul, neg, zero, one)


def standard_suite():
    """The fixed list of small rings the oracle runs over."""
    return [
        zmod(2), zmod(3), zmod(4), zmod(6), zmod(8),
        truncated_algebra(2, [(0,), (1,)], "F2[x]/(x^2)"),
        truncated_algebra(2, [(0,), (1,), (2,)], "F2[x]/(x^3)"),
        truncated_algebra(2, [(0, 0), (1, 0), (0, 1)], "F2[x,y]/(x,y)^2"),
    ]


# ---------------------------------------------------------------------------
# modules over a finite ring
# ---------------------------------------------------------------------------

def free_module(R, rank):
    """All elements of R^rank."""
    return [tuple(v) for v in product(R.elements, repeat=rank)]

def vadd(R, v, w):
    return tuple(R.add(a, b) for a, b in zip(v, w))

def vscale(R, s, v):
    return tuple(R.mul(s, a) for a in v)


def span(R, rank, gens):
    """Submodule generated by gens: closure under addition and scaling."""
    zero = tuple([R.zero] * rank)
    acc = {zero}
    frontier = [zero]
    scaled = [vscale(R, s, g) for g in gens for s in R.elements]
    while frontier:
        nxt = []
        for v in frontier:
            for w in scaled:
                u = vadd(R, v, w)
                if u not in acc:
                    acc.add(u)
                    nxt.append(u)
        frontier = nxt
    return frozenset(acc)


def all_submodules(R, rank):
    """Every submodule of R^rank, by closure over added generators."""
    E = free_module(R, rank)
    zero_mod = span(R, rank, [])
    seen = {zero_mod}
    frontier = [zero_mod]
    while frontier:
        nxt = []
        for S in frontier:
            for m in E:
                if m in S:
                    continue
                T = span(R, rank, list(S) + [m])
                if T not in seen:
                    seen.add(T)
                    nxt.append(T)
        frontier = nxt
    return sorted(seen, key=lambda S: (len(S), sorted(S)))


def contraction(R, rank, S, p):
    """{m in R^rank : s*m in S for some s outside p}: the preimage of the
    localized submodule at the prime p."""
    comp = [s for s in R.elements if s not in p]
    E = free_module(R, rank)
    return frozenset(m for m in E
                     if any(vscale(R, s, m) in S for s in comp))


def annihilator(R, rank, m, S):
    """{a in R : a*m in S}."""
    return frozenset(a for a in R.elements if vscale(R, a, m) in S)


def ass_primes(R, rank, S):
    """Associated primes of R^rank / S: primes occurring as annihilators of
    nonzero residues, straight from the definition."""
    primes = set(R.primes())
    out = set()
    for m in free_module(R, rank):
        if m in S:
            continue
        ann = annihilator(R, rank, m, S)
        if ann in primes:
            out.add(ann)
    return out


def saturated_submodules(R, rank, p, submodules=None):
    """Submodules equal to their own contraction at p; these are exactly the
    valid germ prescriptions at p."""
    if submodules is None:
        submodules = all_submodules(R, rank)
    return [S for S in submodules if contraction(R, rank, S, p) == S]


# ---------------------------------------------------------------------------
# the oracle
# ---------------------------------------------------------------------------

@dataclass
class OracleReport:
    ring: str
    rank: int
    n_submodules: int = 0
    n_primes: int = 0
    n_families: int = 0
    checks: int = 0
    violations: list = field(default_factory=list)

    def machine_lines(self):
        return [
            f"ring={self.ring} rank={self.rank} submodules={self.n_submodules} "
            f"primes={self.n_primes} families={self.n_families} "
            f"checks={self.checks} violations={len(self.violations)}"
        ] + [f"violation: {v}" for v in self.violations]

    def __str__(self):
        head = (f"{self.ring}, rank {self.rank}: {self.n_submodules} submodules, "
                f"{self.n_primes} primes, {self.n_families} families, "
                f"{self.checks} checks, {len(self.violations)} violations")
        return "\n".join([head] + [f"  VIOLATION: {v}" for v in self.violations])


def oracle_reconstruction(R, rank):
    """Check, for every submodule F of R^rank:
    * contraction is inflationary and idempotent at every prime;
    * F equals the intersection of its contractions over Ass(R^rank/F)
      (the empty intersection being the whole module);
    * F equals the intersection of its contractions over all primes.
    """
    rep = OracleReport(R.name, rank)
    primes = R.primes()
    subs = all_submodules(R, rank)
    rep.n_submodules = len(subs)
    rep.n_primes = len(primes)
    E = frozenset(free_module(R, rank))
    for S in subs:
        contr = {id(p): contraction(R, rank, S, p) for p in primes}
        for p in primes:
            C = contr[id(p)]
            rep.checks += 1
            if not S <= C:
                rep.violations.append(f"contraction not inflationary on |S|={len(S)}")
            rep.checks += 1
            if contraction(R, rank, C, p) != C:
                rep.violations.append(f"contraction not idempotent on |S|={len(S)}")
        ass = ass_primes(R, rank, S)
        inter = E
        for p in primes:
            if p in ass:
                inter = inter & contr[id(p)]
        rep.checks += 1
        if inter != S:
            rep.violations.append(
                f"Ass-intersection identity fails on |S|={len(S)} (|Ass|={len(ass)})")
        inter_all = E
        for p in primes:
            inter_all = inter_all & contr[id(p)]
        rep.checks += 1
        if inter_all != S:
            rep.violations.append(f"all-primes intersection fails on |S|={len(S)}")
    return rep


def oracle_families(R, rank, max_families=200000):
    """Check existence and uniqueness for every germ family: each choice of a
    saturated submodule at each prime is realized by exactly one global
    submodule, namely the intersection of the choices."""
    rep = OracleReport(R.name, rank)
    primes = R.primes()
    subs = all_submodules(R, rank)
    rep.n_submodules = len(subs)
    rep.n_primes = len(primes)
    per_prime = [saturated_submodules(R, rank, p, subs) for p in primes]
    count = 1
    for c in per_prime:
        count *= len(c)
    assert count <= max_families, f"family scan too large ({count})"
    for choice in product(*per_prime):
        rep.n_families += 1
        F = frozenset(free_module(R, rank))
        for J in choice:
            F = F & J
        rep.checks += 1
        if any(contraction(R, rank, F, p) != J
               for p, J in zip(primes, choice)):
            rep.violations.append(
                f"existence fails for family of sizes {[len(J) for J in choice]}")
            continue
        matches = [S for S in subs
                   if all(contraction(R, rank, S, p) == J
                          for p, J in zip(primes, choice))]
        rep.checks += 1
        if matches != [F]:
            rep.violations.append(
                f"uniqueness fails: {len(matches)} matches for family of sizes "
                f"{[len(J) for J in choice]}")
    return rep


def run_oracle(rings=None, ranks=None):
    """Full oracle sweep; returns the list of reports (deterministic order)."""
    if rings is None:
        rings = standard_suite()
    reports = []
    for R in rings:
        rank_list = ranks if ranks is not None else ([1, 2] if len(R.elements) <= 4 else [1])
        for rank in rank_list:
            reports.append(oracle_reconstruction(R, rank))
            reports.append(oracle_families(R, rank))
    return reports


def oracle_summary(reports):
    """Machine-readable summary block, one line per report plus a footer."""
    lines = []
    total_checks = 0
    total_viol = 0
    for rep in reports:
        lines.extend(rep.machine_lines())
        total_checks += rep.checks
        total_viol += len(rep.violations)
    lines.append(f"total checks={total_checks} violations={total_viol}")
    return "\n".join(lines)
