"""Stalk families as first-class objects: the cocycle check, the support
set, recovering a map from its stalks, and a family that no global module
realizes.

Run: python3 demos/stalk_family_demo.py
"""

from stalkrec.category import (
    TransitionMap, b_set, cocycle_check, generator_count_obstruction,
    fully_faithful_check, pi_star,
)
from stalkrec.modules import ModulePresentation
from stalkrec.rings import ModuleElement, PolyRing
from stalkrec.spectrum import RingContext


def main():
    ring = PolyRing(("x", "y"))
    ctx = RingContext(ring, "monomial")
    M = ModulePresentation.cyclic(ring, [ring.parse("x^2"), ring.parse("x*y")])
    primes = ctx.all_monomial_primes()

    S = pi_star(M, ctx, primes)
    ok, _ = cocycle_check(S)
    print(f"stalk family of A/(x^2, x*y) on all monomial primes")
    print(f"cocycle condition: {'pass' if ok else 'fail'}")
    print(b_set(S))
    print()

    E = ModulePresentation.cyclic(ring, [ring.var("x")])
    f = ring.parse("y^2 + 1")
    phi = {p: TransitionMap([ModuleElement(ring, [f])], ring.one)
           for p in primes}
    cols = fully_faithful_check(E, E, ctx, primes, phi)
    print(f"recovered the global map from its stalks: multiplication by "
          f"{cols[0].polys[0]}")
    print()

    print("A family of stalks with no global module behind it:")
    print(generator_count_obstruction(2))


if __name__ == "__main__":
    main()
