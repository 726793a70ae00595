"""Batch front-end: parse ring/module/family/object files, dispatch to the
engines, and emit deterministic reports.

Exit codes: 0 = pass/success, 1 = mathematical verdict fail/infinite/
inconsistent, 2 = malformed input.
"""

from __future__ import annotations

import argparse
import sys

from .assoc import ass_presentation
from .category import (
    NaturalityError, b_set, cocycle_check, generator_count_obstruction, pi_star,
)
from .family import (
    FullStalk, GermFamily, PatternRule, check_consistency, check_finiteness,
)
from .fileio import (
    FileFormatError, parse_family, parse_germ_maps, parse_germs,
    parse_germscoh, parse_module,
)
from .finitering import (
    oracle_families, oracle_reconstruction, oracle_summary, standard_suite,
)
from .modules import Submodule
from .parallel import parallel_map
from .rebuild import reconstruct
from .rings import PolyRing, unit_vector
from .sections import GluingError, glue_homomorphism, glue_section
from .spectrum import LocalizedSubmodule, RingContext


def _emit(args, text_lines, machine_lines):
    lines = machine_lines if args.format == "machine" else text_lines
    for line in lines:
        print(line)


def _parse_verify_prime(ctx, text):
    text = text.strip()
    if text in ("0", "(0)"):
        return ctx.zero_prime()
    text = text.strip("()")
    if ctx.flavor == "monomial":
        names = [n.strip() for n in text.split(",") if n.strip()]
        try:
            return ctx.monomial_prime(names)
        except (AssertionError, ValueError) as e:
            raise FileFormatError(f"bad prime {text!r}: {e}")
    try:
        return ctx.univariate_prime(ctx.ring.parse(text))
    except (AssertionError, ValueError) as e:
        raise FileFormatError(f"bad prime {text!r}: {e}")


def _family_verdicts(fam):
    cons = check_consistency(fam)
    fin = check_finiteness(fam, cons) if cons.verdict else None
    return cons, fin


def cmd_check(args):
    fam = parse_family(args.family)
    cons, fin = _family_verdicts(fam)
    if not cons.verdict:
        _emit(args, [str(cons)], ["consistency=fail"])
        return 1
    text = [str(cons), str(fin)]
    machine = ["consistency=pass", f"finiteness={fin.verdict}"]
    if fin.verdict == "finite":
        machine.append(f"ass={fin.ass_set}")
    else:
        machine.append(f"witness={fin.witness}")
    _emit(args, text, machine)
    return 0 if fin.verdict == "finite" else 1


def cmd_ass(args):
    ctx, M = parse_module(args.module)
    try:
        ass = ass_presentation(ctx, M)
    except ValueError as e:
        print(f"error: {e}; use monomial relations or a univariate ring",
              file=sys.stderr)
        return 2
    _emit(args, [f"Ass = {ass}"], [f"ass={ass}"])
    return 0


def cmd_reconstruct(args):
    fam = parse_family(args.family)
    cons, fin = _family_verdicts(fam)
    if not cons.verdict:
        _emit(args, [str(cons)], ["consistency=fail"])
        return 1
    if fin.verdict != "finite":
        _emit(args, [str(fin)], [f"finiteness={fin.verdict}", f"witness={fin.witness}"])
        return 1
    verify = [_parse_verify_prime(fam.ctx, t) for t in (args.verify_at or [])]
    res = reconstruct(fam, verify)
    gens = ", ".join(str(g) for g in res.F.groebner()) or "0"
    machine = [f"F=({gens})", f"ass={res.ass_set}",
               f"ok={'true' if res.ok else 'false'}"]
    machine += [f"stalk@{row.prime}={'ok' if row.equal else 'mismatch'}"
                for row in res.table]
    _emit(args, [res.report()], machine)
    return 0 if res.ok else 1


def cmd_glue_section(args):
    ctx, M = parse_module(args.module)
    fam = parse_germs(args.germs, ctx, M)
    try:
        v, log = glue_section(fam)
    except GluingError as e:
        _emit(args, [f"gluing failed: {e}"], [f"glue=fail", f"reason={e}"])
        return 1
    text = [f"v = ({', '.join(str(p) for p in v.polys)})"]
    text += [entry.describe() for entry in log]
    machine = [f"v=({', '.join(str(p) for p in v.polys)})"]
    _emit(args, text, machine)
    return 0


def cmd_glue_hom(args):
    ctx, E = parse_module(args.source)
    ctx2, F = parse_module(args.target)
    if ctx != ctx2:
        print("error: source and target modules use different rings",
              file=sys.stderr)
        return 2
    germ_maps = parse_germ_maps(args.germs, ctx, E, F)
    try:
        cols, _log = glue_homomorphism(E, F, ctx, germ_maps)
    except GluingError as e:
        _emit(args, [f"gluing failed: {e}"], ["glue=fail", f"reason={e}"])
        return 1
    text = ["matrix columns:"]
    text += [f"  ({', '.join(str(p) for p in c.polys)})" for c in cols]
    machine = [f"col{i}=({', '.join(str(p) for p in c.polys)})"
               for i, c in enumerate(cols)]
    _emit(args, text, machine)
    return 0


def cmd_germscoh_check(args):
    _ctx, S = parse_germscoh(args.object)
    ok, tri = cocycle_check(S)
    B = b_set(S)
    if not ok:
        _emit(args, [f"cocycle FAIL on chain {tri[0]} < {tri[1]} < {tri[2]}"],
              ["cocycle=fail"])
        return 1
    _emit(args, ["cocycle: pass", str(B)],
          ["cocycle=pass", f"bset={{{', '.join(str(p) for p in B.primes)}}}"])
    return 0


def cmd_germscoh_pistar(args):
    ctx, M = parse_module(args.module)
    if ctx.flavor == "monomial":
        primes = ctx.all_monomial_primes()
    else:
        primes = [ctx.zero_prime()] + list(ass_presentation(ctx, M))
        primes = sorted(set(primes), key=lambda p: p.sort_key())
    S = pi_star(M, ctx, primes)
    ok, _ = cocycle_check(S)
    assert ok, "INTERNAL ALARM: stalk family of a module failed the cocycle check"
    text, machine = [], []
    for p in S.primes:
        rels = ", ".join(str(r) for r in S.stalks[p].relations.groebner()) or "0"
        text.append(f"stalk at {p}: A^{S.stalks[p].ngens} / ({rels})")
        machine.append(f"stalk@{p}=({rels})")
    B = b_set(S)
    text.append(str(B))
    machine.append(f"bset={{{', '.join(str(p) for p in B.primes)}}}")
    _emit(args, text, machine)
    return 0


def cmd_germscoh_demo12(args):
    rep = generator_count_obstruction(args.n)
    machine = [f"n={rep.n}", f"mu={rep.mu_at_closed_point}",
               f"generic_rank={rep.generic_rank}",
               f"obstructed={'true' if rep.obstructed else 'inconclusive' if rep.n == 1 else 'false'}"]
    _emit(args, [str(rep)], machine)
    return 0


_RING_NAMES = ["z2", "z3", "z4", "z6", "z8", "f2x2", "f2x3", "f2xy2"]


def _oracle_rings(name):
    suite = standard_suite()
    if name == "all":
        return suite
    return [suite[_RING_NAMES.index(name)]]


def cmd_oracle(args):
    rings = _oracle_rings(args.ring)
    tasks = []
    for R in rings:
        ranks = [args.rank] if args.rank else ([1, 2] if len(R.elements) <= 4 else [1])
        for rank in ranks:
            tasks.append((R, rank, oracle_reconstruction))
            tasks.append((R, rank, oracle_families))
    reports = parallel_map(lambda t: t[2](t[0], t[1]), tasks, args.jobs)
    summary = oracle_summary(reports)
    if args.format == "machine":
        print(summary)
    else:
        for rep in reports:
            print(rep)
        print(summary.splitlines()[-1])
    return 0 if all(not r.violations for r in reports) else 1


def cmd_demo(args):
    assert args.name == "example5"
    ring = PolyRing(("t",))
    ctx = RingContext(ring, "univariate")
    fam = GermFamily(ctx, 1, [], PatternRule("maximal-torsion"))
    cons, fin = _family_verdicts(fam)
    print("Prescription: at every maximal prime m the stalk m*E_m, the full")
    print("stalk at the generic point.")
    print(str(cons))
    print(str(fin))
    print()
    print("Truncating to three explicit maximal primes (t), (t-1), (t-2):")
    t = ring.var("t")
    one = ring.constant(1)
    primes = [ctx.univariate_prime(t), ctx.univariate_prime(t - one),
              ctx.univariate_prime(t - one - one)]
    entries = [(p, LocalizedSubmodule(p, 1, [unit_vector(ring, 1, 0, p.data)]))
               for p in primes]
    fam2 = GermFamily(ctx, 1, entries, FullStalk())
    res = reconstruct(fam2)
    print(res.report())
    prod = Submodule.ideal(ring, [primes[0].data * primes[1].data * primes[2].data])
    print(f"matches the product ideal: {res.F.eq(prod)}")
    return 0


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "machine"], default="text")
    common.add_argument("-j", "--jobs", type=int, default=1,
                        help="worker count; never changes the output")
    parser = argparse.ArgumentParser(
        prog="stalkrec",
        description="reconstruct modules and sections from prescribed "
                    "localizations at primes")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common],
                       help="consistency and finiteness of a family")
    p.add_argument("--family", required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("ass", parents=[common], help="associated primes of a module file")
    p.add_argument("--module", required=True)
    p.set_defaults(func=cmd_ass)

    p = sub.add_parser("reconstruct", parents=[common], help="rebuild the submodule from a family")
    p.add_argument("--family", required=True)
    p.add_argument("--verify-at", action="append", metavar="PRIME",
                   help="extra primes for the verification table")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("glue-section", parents=[common], help="glue a global element from germs")
    p.add_argument("--module", required=True)
    p.add_argument("--germs", required=True)
    p.set_defaults(func=cmd_glue_section)

    p = sub.add_parser("glue-hom", parents=[common], help="glue a homomorphism from germ matrices")
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--germs", required=True)
    p.set_defaults(func=cmd_glue_hom)

    p = sub.add_parser("germscoh", help="stalk-family objects")
    gsub = p.add_subparsers(dest="germscoh_command", required=True)
    q = gsub.add_parser("check", parents=[common], help="cocycle condition and support set")
    q.add_argument("--object", required=True)
    q.set_defaults(func=cmd_germscoh_check)
    q = gsub.add_parser("pistar", parents=[common], help="stalk family of a module file")
    q.add_argument("--module", required=True)
    q.set_defaults(func=cmd_germscoh_pistar)
    q = gsub.add_parser("demo-example12", parents=[common], help="generator-count obstruction demo")
    q.add_argument("--n", type=int, default=2)
    q.set_defaults(func=cmd_germscoh_demo12)

    p = sub.add_parser("oracle", parents=[common], help="exhaustive finite-ring verification")
    p.add_argument("--ring", choices=_RING_NAMES + ["all"], default="all")
    p.add_argument("--rank", type=int, choices=[1, 2])
    p.add_argument("--module", choices=["self"], default="self",
                   help="ambient module; only the ring itself is supported")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("demo", parents=[common], help="narrative demonstrations")
    p.add_argument("name", choices=["example5"])
    p.set_defaults(func=cmd_demo)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FileFormatError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except NaturalityError as e:
        print(f"naturality failed: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
