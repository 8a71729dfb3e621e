"""The first differential d1 and its matrices between monomial bases.

On generators:

    d1 h(i,j) = sum over 0 < k < i of  h(i-k, k+j) h(k, j)
    d1 a(i)   = sum over 0 <= k < i of h(i-k, k) a(k)
    d1 b(i,j) = 0

extended to products by the Leibniz rule with Koszul sign (-1)^parity(prefix),
where parity counts exterior factors (see algebra module).  Differentiating
each expanded unit of a polynomial power separately realizes
d1(g^e) = e g^(e-1) d1(g); in particular e = p kills the contribution.

d1 shifts tridegrees by (+1, 0, -1): it raises filtration, preserves internal
degree, and drops the weight by one, so it restricts to weight blocks.
"""

from __future__ import annotations

from typing import Sequence

from .algebra import Element, Generator, Monomial, a, canonicalize, h
from .errors import CompletenessError
from .grading import PrimeContext
from .linalg import MatrixFp, matrix_from_rows


def _summand_pairs(g: Generator) -> list[tuple[Generator, Generator]]:
    """The two-generator words of d1(g), in written order, with +1 coefficients."""
    if g.kind == "h":
        return [(h(g.i - k, k + g.j), h(k, g.j)) for k in range(1, g.i)]
    if g.kind == "a":
        return [(h(g.i - k, k), a(k)) for k in range(0, g.i)]
    return []


def d1_generator(g: Generator, ctx: PrimeContext) -> Element:
    """d1 of a single generator as a canonical element."""
    accum: dict[Monomial, int] = {}
    for pair in _summand_pairs(g):
        res = canonicalize(pair, ctx)
        if res is None:
            continue
        sign, mon = res
        accum[mon] = accum.get(mon, 0) + sign
    return _reduced(accum, ctx)


def _reduced(accum: dict[Monomial, int], ctx: PrimeContext) -> Element:
    out = {}
    for mon, c in accum.items():
        c %= ctx.p
        if c:
            out[mon] = c
    return Element(out)


def _d1_monomial(mon: Monomial, ctx: PrimeContext) -> dict[Monomial, int]:
    """Raw accumulator for d1 of one canonical monomial."""
    units = list(mon.units())
    accum: dict[Monomial, int] = {}
    h_before = 0
    for pos, g in enumerate(units):
        pairs = _summand_pairs(g)
        if pairs:
            prefix_sign = -1 if h_before % 2 else 1
            for pair in pairs:
                raw = units[:pos] + list(pair) + units[pos + 1:]
                res = canonicalize(raw, ctx)
                if res is None:
                    continue
                sign, out = res
                accum[out] = accum.get(out, 0) + prefix_sign * sign
        if g.is_exterior:
            h_before += 1
    return accum


def d1(x: Element, ctx: PrimeContext) -> Element:
    """Extend d1 linearly to an element."""
    accum: dict[Monomial, int] = {}
    for mon, c in x.terms.items():
        for out, c2 in _d1_monomial(mon, ctx).items():
            accum[out] = accum.get(out, 0) + c * c2
    return _reduced(accum, ctx)


def d1_matrix(domain: Sequence[Monomial], codomain: Sequence[Monomial],
              ctx: PrimeContext) -> MatrixFp:
    """Matrix of d1 in the given bases; column k is the image of domain[k].

    The codomain must contain every monomial appearing in any image; a miss
    raises CompletenessError since it means the codomain basis is incomplete.
    """
    index = {mon: r for r, mon in enumerate(codomain)}
    rows = [[0] * len(domain) for _ in range(len(codomain))]
    for col, mon in enumerate(domain):
        for out, c in _d1_monomial(mon, ctx).items():
            c %= ctx.p
            if not c:
                continue
            r = index.get(out)
            if r is None:
                raise CompletenessError(
                    "image monomial %s of %s missing from codomain basis"
                    % (out.render(), mon.render()))
            rows[r][col] = (rows[r][col] + c) % ctx.p
    return matrix_from_rows(rows, ctx.p, cols=len(domain))
