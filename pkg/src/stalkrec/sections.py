"""Gluing a global section (or homomorphism) from prescribed consistent
germs: one stacked linear solve over the polynomial ring, plus the open-set
log mirroring the covering construction, and the injectivity check for the
map from a stalk into the product of its associated stalks."""

from __future__ import annotations

from dataclasses import dataclass, field

from .assoc import ass_presentation
from .modules import (
    GraphSolver, ModulePresentation, Submodule, hom_module, intersect,
    mat_scale, mat_sub,
)
from .rings import ModuleElement, unit_vector
from .rebuild import partition
from .spectrum import kernel_of_localization, specializes


class GluingError(ValueError):
    """Raised when the prescribed germs cannot come from a global element."""


@dataclass
class OpenSetDescription:
    """Human-readable trace of the open set used in the covering proof:
    the complement of the zero set of the denominator and of the zero sets
    of the wrong-side support primes."""

    base_prime: object
    inverted: object           # denominator t
    excluded_primes: list = field(default_factory=list)

    def describe(self):
        parts = [f"U = X - Z({self.inverted})"]
        parts += [f"- Z({p})" for p in self.excluded_primes]
        return " ".join(parts) + f"   (neighbourhood of {self.base_prime})"


class GermSectionFamily:
    """Prescribed germs of a section of a finitely presented module M:
    entries (prime, numerator in the free cover, denominator outside the
    prime)."""

    def __init__(self, M, ctx, entries):
        self.M = M
        self.ctx = ctx
        self.entries = list(entries)
        for p, w, t in self.entries:
            assert w.rank == M.ngens
            assert t and not t.is_zero()
            assert not p.contains_poly(t), f"denominator {t} lies in {p}"

    def primes(self):
        return sorted((p for p, _, _ in self.entries), key=lambda p: p.sort_key())


def _try_ass(ctx, M):
    try:
        return ass_presentation(ctx, M)
    except ValueError:
        return None


def glue_section(fam):
    """The unique element v of M with germ w/t at every entry prime.

    Solves the stacked system t_i*v = w_i modulo ker(i_{p_i}) in one syzygy
    computation.  Raises GluingError with a witnessing prime pair when the
    germs are inconsistent; an unsolvable consistent system covering Ass(M)
    would contradict uniqueness and is reported as an internal alarm.
    """
    M, ctx = fam.M, fam.ctx
    ring = M.ring
    g = M.ngens
    entries = sorted(fam.entries, key=lambda e: e[0].sort_key())
    if not entries:
        raise GluingError("no germs prescribed")

    ass_M = _try_ass(ctx, M)
    covered = None
    if ass_M is not None:
        missing = [p for p in ass_M if p not in [e[0] for e in entries]]
        if missing:
            raise GluingError(
                f"entries must cover Ass(M); missing {', '.join(map(str, missing))}")
        covered = ass_M

    kernels = [kernel_of_localization(M, p) for p, _, _ in entries]

    s = len(entries)
    columns = []
    for j in range(g):
        polys = []
        for (p, w, t), _K in zip(entries, kernels):
            polys.extend((t if i == j else ring.zero) for i in range(g))
        columns.append(ModuleElement(ring, polys))
    for idx, K in enumerate(kernels):
        for kgen in K.generators:
            polys = []
            for b in range(s):
                polys.extend(kgen.polys if b == idx else [ring.zero] * g)
            columns.append(ModuleElement(ring, polys))
    target = ModuleElement(ring, [p for (_, w, _t) in entries for p in w.polys])

    solver = GraphSolver(ring, s * g, columns)
    sol = solver.solve(target)
    if sol is None:
        pair = _witness_inconsistency(fam, kernels)
        if pair is not None:
            raise GluingError(f"inconsistent germs at pair {pair[0]} < {pair[1]}")
        raise GluingError("INTERNAL SOUNDNESS ALARM: consistent germ family "
                          "covering Ass(M) admitted no solution")
    v = ModuleElement(ring, sol[:g])
    v = M.reduce(v)
    # postcondition: each entry is reproduced
    for (p, w, t), K in zip(entries, kernels):
        assert K.contains(v.scale_poly(t) - w), "solution fails a germ condition"
    log = [_open_set(fam, p, t, covered) for p, _, t in entries]
    return v, log


def _witness_inconsistency(fam, kernels):
    """A specialization pair of entry primes whose germs disagree, if any."""
    entries = sorted(fam.entries, key=lambda e: e[0].sort_key())
    for p, wp, tp in entries:
        for q, wq, tq in entries:
            if p == q or not specializes(p, q):
                continue
            K_p = kernel_of_localization(fam.M, p)
            if not K_p.contains(wp.scale_poly(tq) - wq.scale_poly(tp)):
                return (p, q)
    return None


def _open_set(fam, p, t, ass_M):
    if ass_M is None:
        return OpenSetDescription(p, t, [])
    _, R = partition(p, ass_M)
    return OpenSetDescription(p, t, list(R))


def phi_injectivity(M, c, ctx):
    """Check that the stalk of M at c injects into the product of its stalks
    at the associated primes below c; returns (ok, witness or None).

    Failure would contradict the intersection identities and is an internal
    alarm, not an expected outcome.
    """
    ass_M = ass_presentation(ctx, M)
    L, _ = partition(c, ass_M)
    K_c = kernel_of_localization(M, c)
    if len(L) == 0:
        # the stalk at c is itself zero: M_c = 0 exactly when no associated
        # prime lies below c
        full = Submodule.full(M.ring, M.ngens)
        ok = K_c.eq(full)
        return ok, None if ok else full.generators[0]
    inter = None
    for p in L:
        K_p = kernel_of_localization(M, p)
        inter = K_p if inter is None else intersect(inter, K_p)
    for gen in inter.generators:
        if not K_c.contains(gen):
            return False, gen
    return True, None


# ---------------------------------------------------------------------------
# homomorphism gluing
# ---------------------------------------------------------------------------

def _clear_into(ring, flat, H, u, max_power=12):
    """Smallest power of u that multiplies flat into the submodule H."""
    if H.contains(flat):
        return flat, ring.one
    scale = ring.one
    for _ in range(max_power):
        scale = scale * u
        cand = flat.scale_poly(scale)
        if H.contains(cand):
            return cand, scale
    raise GluingError("germ matrix does not lie in the Hom module at its prime")


def glue_homomorphism(E, F, ctx, germ_maps):
    """Glue matrices phi(p): E_p -> F_p (given with denominators) into the
    unique global homomorphism E -> F.

    germ_maps: list of (prime, columns, denominator) where columns is a list
    of vectors in the free cover of F, one per generator of E.  Returns the
    matrix of the glued map as a list of columns, plus the section-gluing
    log.
    """
    from .spectrum import multiplicative_separator

    H = hom_module(E, F)
    ring = E.ring
    entries = []
    for p, cols, t in germ_maps:
        from .modules import _flatten_matrix
        flat = _flatten_matrix(ring, cols)
        u = multiplicative_separator(H.H, p)
        flat2, extra = _clear_into(ring, flat, H.H, u)
        coords = H.coords_of_matrix(
            _unflatten(ring, flat2, *H.shape))
        if coords is None:
            raise GluingError(f"germ matrix at {p} is incompatible with the "
                              "module relations")
        entries.append((p, ModuleElement(ring, coords), t * extra))

    fam = GermSectionFamily(H.presentation, ctx, entries)
    coeffs, log = glue_section(fam)
    cols = H.matrix_of(coeffs.polys)
    # postcondition: localizing the matrix reproduces each germ map
    for p, gcols, t in germ_maps:
        diff = mat_sub(mat_scale(cols, t), gcols)
        K_F = kernel_of_localization(F, p)
        for col in diff:
            assert K_F.contains(col), "glued map fails to reproduce a germ"
    return cols, log


def _unflatten(ring, flat, h, g):
    return [ModuleElement(ring, flat.polys[j * h:(j + 1) * h]) for j in range(g)]
