"""Exact multivariate polynomial arithmetic over QQ and GF(p), plus free-module elements.

Monomials are plain exponent tuples.  Coefficients are `fractions.Fraction`
in characteristic 0 and ints in [0, p) in characteristic p.  Everything is
immutable after construction, so values can be shared freely.
"""

from __future__ import annotations

import re
from fractions import Fraction


class Field:
    """The coefficient field: QQ (char == 0) or GF(p) for a prime p."""

    def __init__(self, char=0):
        if char:
            assert char >= 2 and all(char % q for q in range(2, char)), char
        self.char = char

    def __eq__(self, other):
        return isinstance(other, Field) and self.char == other.char

    def __hash__(self):
        return hash(("Field", self.char))

    def __repr__(self):
        return "QQ" if self.char == 0 else f"GF({self.char})"

    @property
    def zero(self):
        return 0 if self.char else Fraction(0)

    @property
    def one(self):
        return 1 if self.char else Fraction(1)

    def of(self, x):
        """Coerce an int / Fraction / string into a field element."""
        if self.char:
            if isinstance(x, Fraction):
                assert x.denominator % self.char, "denominator not invertible"
                return (x.numerator * pow(x.denominator, -1, self.char)) % self.char
            return int(x) % self.char
        return Fraction(x)

    def add(self, a, b):
        return (a + b) % self.char if self.char else a + b

    def sub(self, a, b):
        return (a - b) % self.char if self.char else a - b

    def mul(self, a, b):
        return (a * b) % self.char if self.char else a * b

    def neg(self, a):
        return (-a) % self.char if self.char else -a

    def inv(self, a):
        assert a != 0, "division by zero"
        return pow(a, -1, self.char) if self.char else 1 / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))


QQ = Field(0)


# ---------------------------------------------------------------------------
# monomial helpers (exponent tuples)
# ---------------------------------------------------------------------------

def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    """True iff x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a, b):
    """Exponent tuple of x^a / x^b; requires divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_gcd(a, b):
    return tuple(min(x, y) for x, y in zip(a, b))


def mono_degree(a):
    return sum(a)


# ---------------------------------------------------------------------------
# monomial orders
# ---------------------------------------------------------------------------

class MonomialOrder:
    """Total, multiplicative, well-founded order on exponent tuples.

    `key` returns a sort key; larger key means larger monomial.
    """

    def key(self, exps):
        raise NotImplementedError

    def gt(self, a, b):
        return self.key(a) > self.key(b)


class Grevlex(MonomialOrder):
    name = "grevlex"

    def key(self, exps):
        return (sum(exps), tuple(-e for e in reversed(exps)))


class Lex(MonomialOrder):
    name = "lex"

    def key(self, exps):
        return tuple(exps)


class BlockOrder(MonomialOrder):
    """Product order eliminating the first `split` variables."""

    name = "block"

    def __init__(self, split, first=None, rest=None):
        self.split = split
        self.first = first or Grevlex()
        self.rest = rest or Grevlex()

    def key(self, exps):
        return (self.first.key(exps[: self.split]), self.rest.key(exps[self.split:]))


GREVLEX = Grevlex()
LEX = Lex()


class ModuleOrder:
    """Order on module terms (component, monomial).

    Position-over-term ("pot", component 0 largest) is the default; "top"
    compares the monomial first.
    """

    def __init__(self, mono_order=GREVLEX, position="pot"):
        assert position in ("pot", "top")
        self.mono = mono_order
        self.position = position

    def key(self, comp, exps):
        if self.position == "pot":
            return (-comp, self.mono.key(exps))
        return (self.mono.key(exps), -comp)


# ---------------------------------------------------------------------------
# polynomial ring and polynomials
# ---------------------------------------------------------------------------

class PolyRing:
    """Ring descriptor: variable names and coefficient field."""

    def __init__(self, variables, field=QQ):
        self.variables = tuple(variables)
        assert len(set(self.variables)) == len(self.variables)
        self.field = field
        self.nvars = len(self.variables)

    def __eq__(self, other):
        return (isinstance(other, PolyRing)
                and self.variables == other.variables
                and self.field == other.field)

    def __hash__(self):
        return hash((self.variables, self.field))

    def __repr__(self):
        return f"{self.field}[{','.join(self.variables)}]"

    def poly(self, terms):
        """Build a polynomial from {exps: coeff}; zero coefficients dropped."""
        clean = {}
        for exps, c in terms.items():
            c = self.field.of(c)
            if c != 0:
                exps = tuple(exps)
                assert len(exps) == self.nvars and all(e >= 0 for e in exps)
                clean[exps] = c
        return Polynomial(self, clean)

    @property
    def zero(self):
        return Polynomial(self, {})

    @property
    def one(self):
        return self.constant(1)

    def constant(self, c):
        c = self.field.of(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c != 0 else {})

    def var(self, name):
        i = self.variables.index(name)
        exps = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Polynomial(self, {exps: self.field.one})

    def monomial(self, exps, coeff=None):
        coeff = self.field.one if coeff is None else self.field.of(coeff)
        return self.poly({tuple(exps): coeff})

    def parse(self, text):
        """Parse syntax like `3/2*x^2*y - y + 1`."""
        return _parse_poly(self, text)


_TOKEN = re.compile(r"\s*(?:(\d+/\d+|\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\^)|(\*)|(\+)|(-)|(\()|(\)))")


def _parse_poly(ring, text):
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip() == "":
                break
            raise ValueError(f"bad character in polynomial at {pos}: {text!r}")
        pos = m.end()
        tokens.append(m)

    def tok_kind(m):
        for i, kind in enumerate(("num", "var", "pow", "mul", "plus", "minus", "lp", "rp"), 1):
            if m.group(i) is not None:
                return kind, m.group(i)
        raise AssertionError

    toks = [tok_kind(m) for m in tokens]
    idx = 0

    def peek():
        return toks[idx] if idx < len(toks) else (None, None)

    def take(kind):
        nonlocal idx
        k, v = peek()
        if k != kind:
            raise ValueError(f"expected {kind} in {text!r}")
        idx += 1
        return v

    def parse_factor():
        k, v = peek()
        if k == "num":
            take("num")
            if "/" in v:
                num, den = v.split("/")
                c = Fraction(int(num), int(den))
            else:
                c = Fraction(int(v))
            return ring.constant(c)
        if k == "var":
            take("var")
            if v not in ring.variables:
                raise ValueError(f"unknown variable {v!r}")
            p = ring.var(v)
            if peek()[0] == "pow":
                take("pow")
                e = int(take("num"))
                exps = next(iter(p.terms))
                p = ring.monomial(tuple(x * e for x in exps))
            return p
        if k == "lp":
            take("lp")
            p = parse_sum()
            take("rp")
            if peek()[0] == "pow":
                take("pow")
                e = int(take("num"))
                out = ring.constant(1)
                for _ in range(e):
                    out = out * p
                p = out
            return p
        raise ValueError(f"unexpected token in {text!r}")

    def parse_term():
        p = parse_factor()
        while peek()[0] == "mul":
            take("mul")
            p = p * parse_factor()
        return p

    def parse_sum():
        nonlocal idx
        sign = 1
        if peek()[0] == "minus":
            take("minus")
            sign = -1
        elif peek()[0] == "plus":
            take("plus")
        p = parse_term()
        if sign < 0:
            p = -p
        while peek()[0] in ("plus", "minus"):
            k, _ = peek()
            take(k)
            q = parse_term()
            p = p + q if k == "plus" else p - q
        return p

    result = parse_sum()
    if idx != len(toks):
        raise ValueError(f"trailing tokens in {text!r}")
    return result


class Polynomial:
    """Exact polynomial: {exponent tuple: nonzero coefficient}."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, Polynomial) and self.ring == other.ring
                and self.terms == other.terms)

    def __neg__(self):
        F = self.ring.field
        return Polynomial(self.ring, {m: F.neg(c) for m, c in self.terms.items()})

    def __add__(self, other):
        assert self.ring == other.ring, "ring mismatch"
        F = self.ring.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = F.add(out.get(m, F.zero), c)
            if s == 0:
                out.pop(m, None)
            else:
                out[m] = s
        return Polynomial(self.ring, out)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        assert self.ring == other.ring, "ring mismatch"
        F = self.ring.field
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = F.add(out.get(m, F.zero), F.mul(c1, c2))
                if s == 0:
                    out.pop(m, None)
                else:
                    out[m] = s
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def scale(self, c):
        F = self.ring.field
        c = F.of(c)
        if c == 0:
            return self.ring.zero
        return Polynomial(self.ring, {m: F.mul(co, c) for m, co in self.terms.items()})

    def mul_term(self, exps, coeff):
        F = self.ring.field
        if coeff == 0:
            return self.ring.zero
        return Polynomial(self.ring, {mono_mul(m, exps): F.mul(c, coeff)
                                      for m, c in self.terms.items()})

    def leading(self, order=GREVLEX):
        """(exps, coeff) of the leading term."""
        assert self.terms, "zero polynomial has no leading term"
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def degree(self):
        return max((mono_degree(m) for m in self.terms), default=-1)

    def is_term(self):
        return len(self.terms) == 1

    def is_constant(self):
        return all(mono_degree(m) == 0 for m in self.terms)

    def constant_value(self):
        return self.terms.get((0,) * self.ring.nvars, self.ring.field.zero)

    def monic(self, order=GREVLEX):
        if not self.terms:
            return self
        _, c = self.leading(order)
        return self.scale(self.ring.field.inv(c))

    def divmod_univariate(self, g):
        """Euclidean division in one variable; returns (quotient, remainder)."""
        ring = self.ring
        assert ring.nvars == 1 and g.terms
        F = ring.field
        gm, gc = g.leading(LEX)
        q = ring.zero
        r = self
        while r.terms:
            rm, rc = r.leading(LEX)
            if rm[0] < gm[0]:
                break
            t = ring.monomial((rm[0] - gm[0],), F.div(rc, gc))
            q = q + t
            r = r - t * g
        return q, r

    def __str__(self):
        if not self.terms:
            return "0"
        order = GREVLEX
        parts = []
        for m in sorted(self.terms, key=order.key, reverse=True):
            c = self.terms[m]
            factors = []
            for name, e in zip(self.ring.variables, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mono = "*".join(factors)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1 and not self.ring.field.char:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self):
        return f"<{self}>"


# ---------------------------------------------------------------------------
# free-module elements
# ---------------------------------------------------------------------------

class ModuleElement:
    """Vector of polynomials: an element of the free module A^r."""

    __slots__ = ("ring", "polys")

    def __init__(self, ring, polys):
        self.ring = ring
        self.polys = tuple(polys)
        assert all(p.ring == ring for p in self.polys), "ring mismatch"

    @property
    def rank(self):
        return len(self.polys)

    def is_zero(self):
        return all(p.is_zero() for p in self.polys)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        return (isinstance(other, ModuleElement) and self.ring == other.ring
                and self.polys == other.polys)

    def __add__(self, other):
        assert self.rank == other.rank, "rank mismatch"
        return ModuleElement(self.ring, [a + b for a, b in zip(self.polys, other.polys)])

    def __sub__(self, other):
        assert self.rank == other.rank, "rank mismatch"
        return ModuleElement(self.ring, [a - b for a, b in zip(self.polys, other.polys)])

    def __neg__(self):
        return ModuleElement(self.ring, [-p for p in self.polys])

    def scale_poly(self, f):
        return ModuleElement(self.ring, [f * p for p in self.polys])

    def mul_term(self, exps, coeff):
        return ModuleElement(self.ring, [p.mul_term(exps, coeff) for p in self.polys])

    def iter_terms(self):
        for i, p in enumerate(self.polys):
            for m, c in p.terms.items():
                yield (i, m), c

    def leading(self, order):
        """((component, exps), coeff) of the leading module term."""
        assert not self.is_zero()
        best = max(self.iter_terms(), key=lambda t: order.key(t[0][0], t[0][1]))
        return best

    def monic(self, order):
        if self.is_zero():
            return self
        _, c = self.leading(order)
        inv = self.ring.field.inv(c)
        return ModuleElement(self.ring, [p.scale(inv) for p in self.polys])

    def is_term(self):
        return sum(len(p.terms) for p in self.polys) == 1

    def __str__(self):
        return "(" + ", ".join(str(p) for p in self.polys) + ")"

    def __repr__(self):
        return f"<{self}>"


def unit_vector(ring, rank, i, poly=None):
    """The i-th standard basis vector, optionally scaled by a polynomial."""
    poly = ring.one if poly is None else poly
    return ModuleElement(ring, [poly if j == i else ring.zero for j in range(rank)])


def vector(ring, polys):
    return ModuleElement(ring, polys)


def poly_arith(f, g, op):
    """Exact arithmetic dispatch used by the CLI layer."""
    assert f.ring == g.ring, "ring mismatch"
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown op {op!r}")
