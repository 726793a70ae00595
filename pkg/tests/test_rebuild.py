"""Reconstruction from stalks: round-trips, separators, verification."""

import random

from helpers import random_monomial_vector
from stalkrec.assoc import AssSet, ass_of_quotient
from stalkrec.family import FromSubmodule, FullStalk, GermFamily
from stalkrec.modules import Submodule
from stalkrec.rebuild import (
    partition, reconstruct, reconstruct_local, separating_element,
    stalk_of_F_via_separator,
)
from stalkrec.rings import ModuleElement, PolyRing, unit_vector
from stalkrec.spectrum import LocalizedSubmodule, RingContext


def mono_ctx(names=("x", "y")):
    return RingContext(PolyRing(tuple(names)), "monomial")


def test_worked_instance_x2_xy():
    ctx = mono_ctx()
    ring = ctx.ring
    F0 = Submodule.ideal(ring, [ring.parse("x^2"), ring.parse("x*y")])
    fam = GermFamily(ctx, 1, [], FromSubmodule(F0))
    res = reconstruct(fam)
    assert res.ok
    assert res.F.eq(F0)
    assert [str(p) for p in res.ass_set] == ["(x)", "(x,y)"]
    # contractions at the two associated primes
    px = ctx.monomial_prime(["x"])
    pxy = ctx.monomial_prime(["x", "y"])
    assert sorted(map(str, fam.stalk_at(px).contracted().groebner())) == ["(x)"]
    assert sorted(map(str, fam.stalk_at(pxy).contracted().groebner())) == ["(x*y)", "(x^2)"]


def test_separating_elements_for_worked_instance():
    ctx = mono_ctx()
    ring = ctx.ring
    F0 = Submodule.ideal(ring, [ring.parse("x^2"), ring.parse("x*y")])
    ass = ass_of_quotient(ctx, F0, 1)
    px = ctx.monomial_prime(["x"])
    py = ctx.monomial_prime(["y"])
    # at q = (x): the wrong side is {(x,y)}, separator y
    L, R = partition(px, ass)
    assert [str(p) for p in L] == ["(x)"]
    assert [str(p) for p in R] == ["(x,y)"]
    a = separating_element(px, R)
    assert str(a) == "y"
    stalk, n = stalk_of_F_via_separator(F0, px, a)
    assert sorted(map(str, stalk.groebner())) == ["(x)"]
    assert n <= 2
    # at q = (y): everything is on the wrong side, separator x, full stalk
    L2, R2 = partition(py, ass)
    assert len(L2) == 0
    a2 = separating_element(py, R2)
    assert str(a2) == "x"
    stalk2, n2 = stalk_of_F_via_separator(F0, py, a2)
    assert stalk2.is_full()
    assert n2 <= 2


def test_reconstruction_roundtrip_random_monomial():
    ctx = mono_ctx(("x", "y", "z"))
    ring = ctx.ring
    rng = random.Random(71)
    for _ in range(25):
        rank = rng.choice([1, 2])
        gens = [random_monomial_vector(rng, ring, rank)
                for _ in range(rng.randrange(1, 5))]
        F0 = Submodule(ring, rank, gens)
        fam = GermFamily(ctx, rank, [], FromSubmodule(F0))
        res = reconstruct(fam)
        assert res.ok
        assert res.F.eq(F0)
        assert res.ass_set == ass_of_quotient(ctx, F0, rank)


def test_empty_support_reconstructs_full_module():
    ctx = mono_ctx()
    ring = ctx.ring
    fam = GermFamily(ctx, 2, [], FullStalk())
    res = reconstruct(fam)
    assert res.ok
    assert res.F.is_full()
    assert len(res.ass_set) == 0


def test_reconstruct_univariate_product_ideal():
    ctx = RingContext(PolyRing(("t",)), "univariate")
    ring = ctx.ring
    t = ring.var("t")
    one = ring.constant(1)
    primes = [ctx.univariate_prime(t), ctx.univariate_prime(t - one)]
    entries = [(p, LocalizedSubmodule(p, 1, [unit_vector(ring, 1, 0, p.data)]))
               for p in primes]
    fam = GermFamily(ctx, 1, entries, FullStalk())
    res = reconstruct(fam)
    assert res.ok
    assert res.F.eq(Submodule.ideal(ring, [t * (t - one)]))


def test_reconstruct_local_reads_off_stalk():
    ctx = mono_ctx()
    ring = ctx.ring
    F0 = Submodule.ideal(ring, [ring.parse("x*y")])
    fam = GermFamily(ctx, 1, [], FromSubmodule(F0))
    local = reconstruct_local(fam)
    assert local.eq(F0)
