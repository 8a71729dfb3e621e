"""Generators, canonical monomials, and elements of the trigraded algebra.

The algebra over F_p is exterior on the h(i,j), polynomial on the b(i,j) and
the a(i).  Commutation: two h's anticommute, everything else commutes.  A
monomial is stored in canonical order (a's, then h's, then b's, each block
sorted by index) together with its tridegree; an element is a finite F_p
combination of canonical monomials.

Sign bookkeeping uses the parity of the number of exterior factors, which for
a homogeneous word equals (s + t) mod 2.  That is the grading under which the
commutation rules above are exactly the Koszul rules, so all signs here are
forced by it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import ParameterError, ParseError
from .grading import PrimeContext, Tridegree, ZERO_DEGREE, generator_tridegree

_KIND_RANK = {"a": 0, "h": 1, "b": 2}


@dataclass(frozen=True)
class Generator:
    """One multiplicative generator: kind "a" (j is None), "h", or "b"."""

    kind: str
    i: int
    j: int | None

    def sort_key(self) -> tuple[int, int, int]:
        return (_KIND_RANK[self.kind], self.i, -1 if self.j is None else self.j)

    @property
    def is_exterior(self) -> bool:
        return self.kind == "h"

    @property
    def filtration(self) -> int:
        return 2 if self.kind == "b" else 1

    def tridegree(self, ctx: PrimeContext) -> Tridegree:
        return generator_tridegree(self.kind, self.i, self.j, ctx)

    def render(self) -> str:
        if self.kind == "a":
            return "a(%d)" % self.i
        return "%s(%d,%d)" % (self.kind, self.i, self.j)

    def __repr__(self) -> str:
        return self.render()


def a(i: int) -> Generator:
    if i < 0:
        raise ParameterError("a requires i >= 0, got %d" % i)
    return Generator("a", i, None)


def h(i: int, j: int) -> Generator:
    if i < 1 or j < 0:
        raise ParameterError("h requires i >= 1 and j >= 0, got (%d, %d)" % (i, j))
    return Generator("h", i, j)


def b(i: int, j: int) -> Generator:
    if i < 1 or j < 0:
        raise ParameterError("b requires i >= 1 and j >= 0, got (%d, %d)" % (i, j))
    return Generator("b", i, j)


@dataclass(frozen=True)
class Monomial:
    """Product of generators in canonical order; exterior exponents are 1."""

    factors: tuple[tuple[Generator, int], ...]
    tridegree: Tridegree

    def units(self) -> Iterator[Generator]:
        """The factors expanded with multiplicity, in canonical order."""
        for g, e in self.factors:
            for _ in range(e):
                yield g

    @property
    def factor_count(self) -> int:
        """Number of factors counted with multiplicity (a b-factor counts once)."""
        return sum(e for _, e in self.factors)

    @property
    def exterior_count(self) -> int:
        return sum(e for g, e in self.factors if g.is_exterior)

    def exponent_of(self, g: Generator) -> int:
        for g2, e in self.factors:
            if g2 == g:
                return e
        return 0

    def render(self) -> str:
        if not self.factors:
            return ""
        parts = []
        for g, e in self.factors:
            parts.append(g.render() if e == 1 else "%s^%d" % (g.render(), e))
        return " ".join(parts)

    def __repr__(self) -> str:
        return self.render() or "1"


UNIT = Monomial(factors=(), tridegree=ZERO_DEGREE)


def canonicalize(gens: Sequence[Generator], ctx: PrimeContext) -> tuple[int, Monomial] | None:
    """Sort a raw generator word into a canonical monomial.

    Returns (sign, monomial) where sign in {+1, -1} is the parity of the
    permutation restricted to the exterior generators, or None when the word
    contains a repeated exterior generator (exterior square, so the product
    is zero).  Non-exterior generators move freely.
    """
    items = list(gens)
    ext = [g.sort_key() for g in items if g.is_exterior]
    inv = 0
    for x in range(len(ext)):
        kx = ext[x]
        for y in range(x + 1, len(ext)):
            if kx > ext[y]:
                inv += 1
            elif kx == ext[y]:
                return None
    counts: dict[Generator, int] = {}
    for g in items:
        counts[g] = counts.get(g, 0) + 1
    factors = tuple(sorted(counts.items(), key=lambda it: it[0].sort_key()))
    deg = ZERO_DEGREE
    for g, e in factors:
        deg = deg + g.tridegree(ctx).scaled(e)
    return (-1 if inv % 2 else 1, Monomial(factors=factors, tridegree=deg))


def monomial_from_factors(factors: Iterable[tuple[Generator, int]], ctx: PrimeContext) -> Monomial:
    """Build a canonical monomial from (generator, exponent) pairs.

    Raises on nonpositive exponents or an exterior exponent above 1; use
    canonicalize for raw words that may square to zero.
    """
    counts: dict[Generator, int] = {}
    for g, e in factors:
        if e <= 0:
            raise ParameterError("exponent must be positive, got %d for %s" % (e, g.render()))
        counts[g] = counts.get(g, 0) + e
    for g, e in counts.items():
        if g.is_exterior and e > 1:
            raise ParameterError("exterior generator %s repeated" % g.render())
    canon = tuple(sorted(counts.items(), key=lambda it: it[0].sort_key()))
    deg = ZERO_DEGREE
    for g, e in canon:
        deg = deg + g.tridegree(ctx).scaled(e)
    return Monomial(factors=canon, tridegree=deg)


def monomial_mul(x: Monomial, y: Monomial, ctx: PrimeContext) -> tuple[int, Monomial] | None:
    """Product of two canonical monomials: (sign, monomial) or None if zero."""
    hx = [g for g, _ in x.factors if g.is_exterior]
    hy = [g for g, _ in y.factors if g.is_exterior]
    inv = 0
    for gx in hx:
        kx = gx.sort_key()
        for gy in hy:
            ky = gy.sort_key()
            if kx > ky:
                inv += 1
            elif kx == ky:
                return None
    counts: dict[Generator, int] = {g: e for g, e in x.factors}
    for g, e in y.factors:
        counts[g] = counts.get(g, 0) + e
    factors = tuple(sorted(counts.items(), key=lambda it: it[0].sort_key()))
    return (-1 if inv % 2 else 1,
            Monomial(factors=factors, tridegree=x.tridegree + y.tridegree))


class Element:
    """A finite F_p combination of canonical monomials.

    Coefficients are stored as residues in [1, p-1]; the zero element has no
    terms.  Arithmetic lives in the module-level functions add / scale /
    multiply, which take the prime context explicitly.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[Monomial, int] | None = None):
        self._terms = dict(terms) if terms else {}

    @staticmethod
    def zero() -> "Element":
        return Element()

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def coefficient(self, mon: Monomial) -> int:
        return self._terms.get(mon, 0)

    def support(self) -> set[Monomial]:
        return set(self._terms)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Element) and self._terms == other._terms

    def __hash__(self):
        raise TypeError("Element is not hashable")

    def __repr__(self) -> str:
        if not self._terms:
            return "Element(0)"
        body = " + ".join("%d*%s" % (c, m.render() or "1") for m, c in sorted(
            self._terms.items(), key=lambda it: it[0].render()))
        return "Element(%s)" % body


def _from_accumulator(accum: dict[Monomial, int], ctx: PrimeContext) -> Element:
    cleaned = {}
    for mon, c in accum.items():
        c %= ctx.p
        if c:
            cleaned[mon] = c
    return Element(cleaned)


def element_from_monomial(mon: Monomial, ctx: PrimeContext, coeff: int = 1) -> Element:
    return _from_accumulator({mon: coeff}, ctx)


def add(x: Element, y: Element, ctx: PrimeContext) -> Element:
    accum = x.terms
    for mon, c in y.terms.items():
        accum[mon] = accum.get(mon, 0) + c
    return _from_accumulator(accum, ctx)


def scale(c: int, x: Element, ctx: PrimeContext) -> Element:
    if c % ctx.p == 0:
        return Element.zero()
    return _from_accumulator({mon: c * cc for mon, cc in x.terms.items()}, ctx)


def multiply(x: Element, y: Element, ctx: PrimeContext) -> Element:
    accum: dict[Monomial, int] = {}
    for mx, cx in x.terms.items():
        for my, cy in y.terms.items():
            res = monomial_mul(mx, my, ctx)
            if res is None:
                continue
            sign, mon = res
            accum[mon] = accum.get(mon, 0) + sign * cx * cy
    return _from_accumulator(accum, ctx)


def element_tridegree(x: Element) -> Tridegree | None:
    """Shared tridegree of all terms, or None when zero or inhomogeneous."""
    deg = None
    for mon in x.terms:
        if deg is None:
            deg = mon.tridegree
        elif deg != mon.tridegree:
            return None
    return deg


def element_parity(x: Element) -> int | None:
    """Koszul parity (s + t) mod 2 of a homogeneous nonzero element."""
    deg = element_tridegree(x)
    if deg is None:
        return None
    return (deg.s + deg.t) % 2


# --- text form -------------------------------------------------------------
#
# element := "0" | ["-"] term { " + " term | " - " term }
# term    := [coeff "*"] factor { " " factor } | coeff
# factor  := gen ["^" exponent]
# gen     := "a(" int ")" | "h(" int "," int ")" | "b(" int "," int ")"
#
# coeff is a residue in [1, p-1]; a bare coeff denotes a multiple of the unit
# monomial.  Rendering emits the balanced representative (|v| <= (p-1)/2),
# putting the sign into the separator and keeping "1*" for negative unit
# coefficients, e.g. "-1*h(1,0) h(1,1)".


def _balanced(c: int, p: int) -> int:
    c %= p
    return c if c <= (p - 1) // 2 else c - p


def render_element(x: Element, ctx: PrimeContext) -> str:
    if x.is_zero:
        return "0"
    items = sorted(x.terms.items(), key=lambda it: it[0].render())
    pieces = []
    for idx, (mon, c) in enumerate(items):
        v = _balanced(c, ctx.p)
        body = mon.render()
        if not body:
            text = str(abs(v))
        elif v < 0 or abs(v) != 1:
            text = "%d*%s" % (abs(v), body)
        else:
            text = body
        if idx == 0:
            pieces.append(("-" if v < 0 else "") + text)
        else:
            pieces.append((" - " if v < 0 else " + ") + text)
    return "".join(pieces)


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take_int(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected an integer", start)
        return int(self.text[start:self.pos])

    def expect(self, ch: str):
        if self.peek() != ch:
            raise ParseError("expected %r" % ch, self.pos)
        self.pos += 1


def _parse_generator(tk: _Tokens) -> Generator:
    start = tk.pos
    kind = tk.peek()
    if kind not in ("a", "h", "b"):
        raise ParseError("expected a generator (a, h, or b)", tk.pos)
    tk.pos += 1
    tk.expect("(")
    i = tk.take_int()
    j = None
    if tk.peek() == ",":
        tk.pos += 1
        j = tk.take_int()
    tk.expect(")")
    try:
        if kind == "a":
            if j is not None:
                raise ParameterError("a takes one index")
            return a(i)
        if j is None:
            raise ParameterError("%s takes two indices" % kind)
        return h(i, j) if kind == "h" else b(i, j)
    except ParameterError as exc:
        raise ParseError(str(exc), start) from exc


def _parse_factor(tk: _Tokens) -> tuple[Generator, int]:
    g = _parse_generator(tk)
    e = 1
    if tk.peek() == "^":
        tk.pos += 1
        epos = tk.pos
        e = tk.take_int()
        if e < 1:
            raise ParseError("exponent must be >= 1", epos)
    return g, e


def _parse_term(tk: _Tokens, ctx: PrimeContext) -> tuple[int, list[Generator]]:
    """One term as (coefficient, raw generator word)."""
    coeff = 1
    tk.skip_ws()
    if tk.peek().isdigit():
        cpos = tk.pos
        coeff = tk.take_int()
        if not 1 <= coeff <= ctx.p - 1:
            raise ParseError("coefficient %d out of range [1, %d]" % (coeff, ctx.p - 1), cpos)
        if tk.peek() == "*":
            tk.pos += 1
        else:
            return coeff, []  # bare coefficient: a multiple of the unit monomial
    word: list[Generator] = []
    g, e = _parse_factor(tk)
    word.extend([g] * e)
    while True:
        save = tk.pos
        tk.skip_ws()
        if tk.peek() in ("a", "h", "b") and tk.pos > save:
            g, e = _parse_factor(tk)
            word.extend([g] * e)
        else:
            tk.pos = save
            return coeff, word


def parse_element(text: str, ctx: PrimeContext) -> Element:
    """Parse the text form back into an element (inverse of render_element)."""
    stripped = text.strip()
    if stripped == "0":
        return Element.zero()
    tk = _Tokens(text)
    tk.skip_ws()
    accum: dict[Monomial, int] = {}
    sign = 1
    if tk.peek() == "-":
        tk.pos += 1
        sign = -1
    while True:
        coeff, word = _parse_term(tk, ctx)
        res = canonicalize(word, ctx)
        if res is not None:
            csign, mon = res
            accum[mon] = accum.get(mon, 0) + sign * csign * coeff
        tk.skip_ws()
        nxt = tk.peek()
        if nxt == "":
            break
        if nxt == "+":
            sign = 1
        elif nxt == "-":
            sign = -1
        else:
            raise ParseError("expected '+', '-', or end of input", tk.pos)
        tk.pos += 1
        tk.skip_ws()
    return _from_accumulator(accum, ctx)
