"""One structured text format (TOML) for rings, modules, families, germ
sections, and stalk-family objects, with parse errors that carry position
information from the underlying TOML reader."""

from __future__ import annotations

try:
    import tomllib
except ModuleNotFoundError:
    import tomli as tomllib

from .category import GermsCohObject, TransitionMap
from .family import FromSubmodule, FullStalk, GermFamily, PatternRule
from .modules import ModulePresentation, Submodule
from .rings import Field, ModuleElement, PolyRing
from .sections import GermSectionFamily
from .spectrum import LocalizedSubmodule, RingContext


class FileFormatError(ValueError):
    """Malformed input file (distinct from a mathematical verdict)."""


def _load(path):
    try:
        with open(path, "rb") as fh:
            return tomllib.load(fh)
    except FileNotFoundError:
        raise FileFormatError(f"{path}: file not found")
    except tomllib.TOMLDecodeError as e:
        raise FileFormatError(f"{path}: {e}")


def _need(table, key, path, where):
    if key not in table:
        raise FileFormatError(f"{path}: missing key {key!r} in {where}")
    return table[key]


def parse_ring(doc, path):
    """[ring] block: variables, optional field ("QQ" or "GF(p)"), flavor."""
    block = _need(doc, "ring", path, "document")
    variables = _need(block, "variables", path, "[ring]")
    fieldname = block.get("field", "QQ")
    if fieldname == "QQ":
        fld = Field(0)
    elif fieldname.startswith("GF(") and fieldname.endswith(")"):
        fld = Field(int(fieldname[3:-1]))
    else:
        raise FileFormatError(f"{path}: unknown field {fieldname!r}")
    flavor = _need(block, "flavor", path, "[ring]")
    if flavor not in ("monomial", "univariate"):
        raise FileFormatError(
            f"{path}: unsupported flavor {flavor!r}; use a monomial or "
            "univariate ring (general multivariate primes are out of scope)")
    if flavor == "univariate" and len(variables) != 1:
        raise FileFormatError(f"{path}: univariate flavor needs one variable")
    ring = PolyRing(tuple(variables), fld)
    return RingContext(ring, flavor)


def parse_prime(ctx, spec, path):
    """Prime spec: { vars = [...] } | { poly = "..." } | { zero = true }."""
    if not isinstance(spec, dict):
        raise FileFormatError(f"{path}: prime must be a table, got {spec!r}")
    if spec.get("zero"):
        return ctx.zero_prime()
    if "vars" in spec:
        if ctx.flavor != "monomial":
            raise FileFormatError(f"{path}: monomial prime in {ctx.flavor} ring")
        try:
            return ctx.monomial_prime(spec["vars"])
        except (AssertionError, ValueError) as e:
            raise FileFormatError(f"{path}: bad monomial prime {spec['vars']}: {e}")
    if "poly" in spec:
        if ctx.flavor != "univariate":
            raise FileFormatError(f"{path}: univariate prime in {ctx.flavor} ring")
        try:
            f = ctx.ring.parse(spec["poly"])
            return ctx.univariate_prime(f)
        except (AssertionError, ValueError) as e:
            raise FileFormatError(f"{path}: bad prime {spec['poly']!r}: {e}")
    raise FileFormatError(f"{path}: prime needs one of vars/poly/zero")


def _parse_vector(ring, entry, rank, path):
    if isinstance(entry, str):
        entry = [entry]
    if len(entry) != rank:
        raise FileFormatError(f"{path}: vector {entry} has length {len(entry)}, "
                              f"expected {rank}")
    try:
        return ModuleElement(ring, [ring.parse(s) for s in entry])
    except (AssertionError, ValueError, KeyError) as e:
        raise FileFormatError(f"{path}: bad polynomial in {entry}: {e}")


def _parse_submodule(ring, gens, rank, path):
    return Submodule(ring, rank, [_parse_vector(ring, g, rank, path) for g in gens])


def parse_family(path):
    """Family file: ring header, rank, [[entry]] blocks, [generic] block."""
    doc = _load(path)
    ctx = parse_ring(doc, path)
    rank = doc.get("rank", 1)
    entries = []
    for block in doc.get("entry", []):
        p = parse_prime(ctx, _need(block, "prime", path, "[[entry]]"), path)
        gens = _need(block, "generators", path, "[[entry]]")
        if gens == "full":
            stalk = LocalizedSubmodule.full(p, rank)
        else:
            stalk = LocalizedSubmodule(
                p, rank,
                [_parse_vector(ctx.ring, g, rank, path) for g in gens])
        entries.append((p, stalk))
    gblock = doc.get("generic")
    if gblock is None:
        raise FileFormatError(f"{path}: missing [generic] block")
    rule = _need(gblock, "rule", path, "[generic]")
    if rule == "from-submodule":
        gens = _need(gblock, "generators", path, "[generic]")
        generic = FromSubmodule(_parse_submodule(ctx.ring, gens, rank, path))
    elif rule == "full-stalk":
        generic = FullStalk()
    elif rule == "pattern":
        generic = PatternRule(gblock.get("shape", "maximal-torsion"))
    else:
        raise FileFormatError(f"{path}: unknown generic rule {rule!r}")
    try:
        return GermFamily(ctx, rank, entries, generic)
    except AssertionError as e:
        raise FileFormatError(f"{path}: {e}")


def parse_module(path):
    """Module file: ring header plus [module] with generators count and
    relation vectors; returns (ctx, ModulePresentation)."""
    doc = _load(path)
    ctx = parse_ring(doc, path)
    block = _need(doc, "module", path, "document")
    ngens = _need(block, "generators", path, "[module]")
    rels = [_parse_vector(ctx.ring, r, ngens, path)
            for r in block.get("relations", [])]
    return ctx, ModulePresentation(ctx.ring, ngens, list(rels))


def parse_germs(path, ctx, M):
    """Germ-section file: [[germ]] blocks (prime, numerator, denominator)."""
    doc = _load(path)
    entries = []
    for block in doc.get("germ", []):
        p = parse_prime(ctx, _need(block, "prime", path, "[[germ]]"), path)
        num = _parse_vector(ctx.ring, _need(block, "numerator", path, "[[germ]]"),
                            M.ngens, path)
        den = ctx.ring.parse(block.get("denominator", "1"))
        entries.append((p, num, den))
    if not entries:
        raise FileFormatError(f"{path}: no [[germ]] blocks")
    try:
        return GermSectionFamily(M, ctx, entries)
    except AssertionError as e:
        raise FileFormatError(f"{path}: {e}")


def parse_germ_maps(path, ctx, E, F):
    """Germ-homomorphism file: [[germ]] blocks with matrix columns."""
    doc = _load(path)
    out = []
    for block in doc.get("germ", []):
        p = parse_prime(ctx, _need(block, "prime", path, "[[germ]]"), path)
        cols = _need(block, "columns", path, "[[germ]]")
        if len(cols) != E.ngens:
            raise FileFormatError(f"{path}: expected {E.ngens} columns, got {len(cols)}")
        colv = [_parse_vector(ctx.ring, c, F.ngens, path) for c in cols]
        den = ctx.ring.parse(block.get("denominator", "1"))
        out.append((p, colv, den))
    if not out:
        raise FileFormatError(f"{path}: no [[germ]] blocks")
    return out


def parse_germscoh(path):
    """Stalk-family object file: ring header, [[stalk]] blocks, [[sigma]]
    transition blocks; returns (ctx, GermsCohObject)."""
    doc = _load(path)
    ctx = parse_ring(doc, path)
    primes, stalks = [], {}
    for block in doc.get("stalk", []):
        p = parse_prime(ctx, _need(block, "prime", path, "[[stalk]]"), path)
        ngens = _need(block, "generators", path, "[[stalk]]")
        rels = [_parse_vector(ctx.ring, r, ngens, path)
                for r in block.get("relations", [])]
        primes.append(p)
        stalks[p] = ModulePresentation(ctx.ring, ngens, rels)
    sigma = {}
    for block in doc.get("sigma", []):
        x = parse_prime(ctx, _need(block, "from", path, "[[sigma]]"), path)
        y = parse_prime(ctx, _need(block, "to", path, "[[sigma]]"), path)
        if x not in stalks or y not in stalks:
            raise FileFormatError(f"{path}: sigma references a prime with no stalk")
        cols = [_parse_vector(ctx.ring, c, stalks[x].ngens, path)
                for c in _need(block, "columns", path, "[[sigma]]")]
        den = ctx.ring.parse(block.get("denominator", "1"))
        sigma[(x, y)] = TransitionMap(cols, den)
    try:
        return ctx, GermsCohObject(ctx, primes, stalks, sigma)
    except AssertionError as e:
        raise FileFormatError(f"{path}: {e}")


# ---------------------------------------------------------------------------
# writers (round-trip support for generated files)
# ---------------------------------------------------------------------------

def _fmt_prime(p):
    if p.kind == "zero":
        return "{ zero = true }"
    if p.kind == "monomial":
        names = [p.ring.variables[i] for i in sorted(p.data)]
        inner = ", ".join(f'"{v}"' for v in names)
        return f"{{ vars = [{inner}] }}"
    return f'{{ poly = "{p.data}" }}'


def _fmt_ring(ctx):
    names = ", ".join(f'"{v}"' for v in ctx.ring.variables)
    fld = "QQ" if not ctx.ring.field.char else f"GF({ctx.ring.field.char})"
    return (f"[ring]\nvariables = [{names}]\n"
            f'field = "{fld}"\nflavor = "{ctx.flavor}"\n')


def _fmt_vecs(vecs):
    rows = []
    for v in vecs:
        inner = ", ".join(f'"{p}"' for p in v.polys)
        rows.append(f"  [{inner}],")
    return "[\n" + "\n".join(rows) + "\n]"


def write_family(path, fam):
    """Emit a family file equivalent to the given GermFamily."""
    parts = [_fmt_ring(fam.ctx), f"rank = {fam.rank}\n"]
    for p, stalk in sorted(fam.entries, key=lambda e: e[0].sort_key()):
        parts.append("[[entry]]")
        parts.append(f"prime = {_fmt_prime(p)}")
        parts.append(f"generators = {_fmt_vecs(stalk.generators)}\n")
    parts.append("[generic]")
    g = fam.generic
    parts.append(f'rule = "{g.name}"')
    if isinstance(g, FromSubmodule):
        parts.append(f"generators = {_fmt_vecs(g.G.generators)}")
    if isinstance(g, PatternRule):
        parts.append(f'shape = "{g.shape}"')
    with open(path, "w") as fh:
        fh.write("\n".join(parts) + "\n")


def write_module(path, ctx, M):
    parts = [_fmt_ring(ctx), "[module]", f"generators = {M.ngens}"]
    parts.append(f"relations = {_fmt_vecs(M.relations.generators)}")
    with open(path, "w") as fh:
        fh.write("\n".join(parts) + "\n")
