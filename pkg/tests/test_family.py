"""Germ families: consistency and finiteness verdicts."""

import random

from stalkrec.family import (
    FromSubmodule, FullStalk, GermFamily, PatternRule, check_consistency,
    check_finiteness,
)
from stalkrec.modules import Submodule
from stalkrec.rings import ModuleElement, PolyRing, unit_vector
from stalkrec.spectrum import LocalizedSubmodule, RingContext, localize


def mono_ctx():
    return RingContext(PolyRing(("x", "y")), "monomial")


def test_from_submodule_family_is_consistent():
    ctx = mono_ctx()
    ring = ctx.ring
    G = Submodule.ideal(ring, [ring.parse("x^2"), ring.parse("x*y")])
    fam = GermFamily(ctx, 1, [], FromSubmodule(G))
    rep = check_consistency(fam)
    assert rep.verdict
    fin = check_finiteness(fam, rep)
    assert fin.verdict == "finite"
    assert [str(p) for p in fin.ass_set] == ["(x)", "(x,y)"]


def test_inconsistent_family_detected_with_witness():
    ctx = mono_ctx()
    ring = ctx.ring
    p = ctx.monomial_prime(["x"])
    q = ctx.monomial_prime(["x", "y"])
    # at (x,y) prescribe (x), but at the smaller (x) prescribe (x^2)
    entries = [
        (p, LocalizedSubmodule(p, 1, [unit_vector(ring, 1, 0, ring.parse("x^2"))])),
        (q, LocalizedSubmodule(q, 1, [unit_vector(ring, 1, 0, ring.parse("x"))])),
    ]
    fam = GermFamily(ctx, 1, entries, FullStalk())
    rep = check_consistency(fam)
    assert not rep.verdict
    pairs = [(str(a), str(b)) for a, b, _, _ in rep.violations]
    assert ("(x)", "(x,y)") in pairs


def test_explicit_entries_override_generic():
    ctx = mono_ctx()
    ring = ctx.ring
    p = ctx.monomial_prime(["x"])
    J = LocalizedSubmodule(p, 1, [unit_vector(ring, 1, 0, ring.parse("x"))])
    fam = GermFamily(ctx, 1, [(p, J)], FullStalk())
    assert fam.stalk_at(p) is J
    q = ctx.monomial_prime(["y"])
    assert fam.stalk_at(q).contracted().is_full()


def test_pattern_rule_infinite_verdict_univariate():
    ctx = RingContext(PolyRing(("t",)), "univariate")
    fam = GermFamily(ctx, 1, [], PatternRule("maximal-torsion"))
    cons = check_consistency(fam)
    assert cons.verdict
    fin = check_finiteness(fam, cons)
    assert fin.verdict == "infinite"
    assert "maximal" in fin.witness


def test_pattern_rule_unknown_shape_undecided():
    ctx = RingContext(PolyRing(("t",)), "univariate")
    fam = GermFamily(ctx, 1, [], PatternRule("every-other-prime"))
    fin = check_finiteness(fam)
    assert fin.verdict == "undecided"


def test_full_stalk_entries_only_support():
    ctx = mono_ctx()
    ring = ctx.ring
    q = ctx.monomial_prime(["x", "y"])
    J = LocalizedSubmodule(q, 1, [unit_vector(ring, 1, 0, ring.parse("x")),
                                  unit_vector(ring, 1, 0, ring.parse("y"))])
    fam = GermFamily(ctx, 1, [(q, J)], FullStalk())
    fin = check_finiteness(fam)
    assert fin.verdict == "finite"
    assert [str(p) for p in fin.ass_set] == ["(x,y)"]
