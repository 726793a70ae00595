"""Glue a global element of a module from germs at its associated primes.

Run: python3 demos/gluing_demo.py
"""

from stalkrec.assoc import ass_presentation
from stalkrec.modules import ModulePresentation
from stalkrec.rings import ModuleElement, PolyRing
from stalkrec.sections import GermSectionFamily, GluingError, glue_section
from stalkrec.spectrum import RingContext


def main():
    ring = PolyRing(("t",))
    ctx = RingContext(ring, "univariate")
    t = ring.var("t")
    one = ring.constant(1)
    M = ModulePresentation.cyclic(ring, [t * t * (t - one)])
    print("M = k[t]/(t^2 (t-1)); Ass(M) =", ass_presentation(ctx, M))

    p = ctx.univariate_prime(t)
    q = ctx.univariate_prime(t - one)
    entries = [
        (p, ModuleElement(ring, [one + t]), ring.one),
        (q, ModuleElement(ring, [t]), ring.one),
    ]
    fam = GermSectionFamily(M, ctx, entries)
    v, log = glue_section(fam)
    print("germs: 1 + t at (t), t at (t - 1)")
    print(f"glued element: v = {v.polys[0]}")
    for entry in log:
        print(" ", entry.describe())

    print("\nAn inconsistent prescription is rejected with a witness pair:")
    ring2 = PolyRing(("x", "y"))
    ctx2 = RingContext(ring2, "monomial")
    free = ModulePresentation.free(ring2, 1)
    bad = GermSectionFamily(free, ctx2, [
        (ctx2.zero_prime(), ModuleElement(ring2, [ring2.var("x")]), ring2.one),
        (ctx2.monomial_prime(["x"]), ModuleElement(ring2, [ring2.var("y")]), ring2.one),
    ])
    try:
        glue_section(bad)
    except GluingError as e:
        print(f"  {e}")


if __name__ == "__main__":
    main()
