"""Finite-ring machinery and its agreement with the symbolic engines."""

from stalkrec.finitering import (
    all_submodules, ass_primes, contraction, free_module, oracle_families,
    oracle_reconstruction, run_oracle, saturated_submodules, span,
    standard_suite, truncated_algebra, zmod,
)
from stalkrec.modules import ModulePresentation
from stalkrec.rings import Field, PolyRing
from stalkrec.spectrum import RingContext
from stalkrec.assoc import ass_univariate


def test_zmod_primes():
    R = zmod(6)
    ps = R.primes()
    assert sorted(sorted(p) for p in ps) == [[0, 2, 4], [0, 3]]
    R8 = zmod(8)
    assert [sorted(p) for p in R8.primes()] == [[0, 2, 4, 6]]
    F3 = zmod(3)
    assert [sorted(p) for p in F3.primes()] == [[0]]


def test_truncated_algebra_structure():
    R = truncated_algebra(2, [(0,), (1,)], "F2[x]/(x^2)")
    assert len(R.elements) == 4
    x = (0, 1)
    assert R.mul(x, x) == R.zero
    assert len(R.primes()) == 1
    assert len(R.ideals()) == 3  # 0, (x), R


def test_span_and_submodule_enumeration():
    R = zmod(4)
    subs = all_submodules(R, 1)
    assert [sorted(s) for s in subs] == [[(0,)], [(0,), (2,)],
                                         [(0,), (1,), (2,), (3,)]]
    two = span(R, 1, [(2,)])
    assert sorted(two) == [(0,), (2,)]
    subs2 = all_submodules(zmod(2), 2)
    assert len(subs2) == 5  # 0, three lines, the plane


def test_contraction_and_ass_zmod6():
    R = zmod(6)
    p2 = next(p for p in R.primes() if 2 in p)
    zero = span(R, 1, [])
    C = contraction(R, 1, zero, p2)
    # 3 is invertible away from (2) and kills {0,2,4}
    assert sorted(C) == [(0,), (2,), (4,)]
    ass = ass_primes(R, 1, zero)
    assert len(ass) == 2  # Z/6 = Z/2 x Z/3


def test_ass_agrees_with_univariate_engine():
    # F2[x]/(x^2) as a module over itself versus k[t]/(t^2) over k[t]
    R = truncated_algebra(2, [(0,), (1,)], "F2[x]/(x^2)")
    zero = span(R, 1, [])
    finite_ass = ass_primes(R, 1, zero)
    assert len(finite_ass) == 1  # just the maximal ideal (x)
    ctx = RingContext(PolyRing(("t",), Field(2)), "univariate")
    t = ctx.ring.var("t")
    M = ModulePresentation.cyclic(ctx.ring, [t * t])
    sym_ass = ass_univariate(ctx, M)
    assert [str(p) for p in sym_ass] == ["(t)"]


def test_saturated_submodules_are_the_germ_choices():
    R = zmod(6)
    subs = all_submodules(R, 1)
    for p in R.primes():
        sats = saturated_submodules(R, 1, p, subs)
        for S in sats:
            assert contraction(R, 1, S, p) == S
        # the whole module is always saturated
        assert frozenset(free_module(R, 1)) in sats


def test_full_oracle_zero_violations():
    reports = run_oracle()
    assert all(not r.violations for r in reports)
    total = sum(r.checks for r in reports)
    assert total > 300


def test_oracle_counts_deterministic():
    a = [r.machine_lines() for r in run_oracle(rings=[zmod(6)])]
    b = [r.machine_lines() for r in run_oracle(rings=[zmod(6)])]
    assert a == b
