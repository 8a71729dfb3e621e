"""Shared test utilities: random algebra objects and small independent oracles.

The oracles here deliberately re-derive results through the dumbest route
available (selection sort for signs, raw multiset search for bases, span
counting for ranks) so that engine bugs cannot hide in shared code paths.
"""

import itertools

from mayss import (Element, a, add, b, canonicalize, element_from_monomial,
                   generator_universe, h, scale)


def random_generator(rng, max_i=4, max_j=3):
    kind = rng.choice("ahb")
    if kind == "a":
        return a(rng.randint(0, max_i))
    i = rng.randint(1, max_i)
    j = rng.randint(0, max_j)
    return h(i, j) if kind == "h" else b(i, j)


def random_word(rng, max_factors=4, max_i=4, max_j=3):
    return [random_generator(rng, max_i, max_j)
            for _ in range(rng.randint(1, max_factors))]


def random_monomial(rng, ctx, max_factors=4, max_i=4, max_j=3):
    """A random canonical monomial (resampling past exterior squares)."""
    while True:
        res = canonicalize(random_word(rng, max_factors, max_i, max_j), ctx)
        if res is not None:
            return res[1]


def random_element(rng, ctx, max_terms=3, **kw):
    out = Element.zero()
    for _ in range(rng.randint(1, max_terms)):
        mon = random_monomial(rng, ctx, **kw)
        out = add(out, element_from_monomial(mon, ctx, rng.randint(1, ctx.p - 1)), ctx)
    return out


def brute_sign(word, ctx):
    """Koszul sign by selection-sorting the exterior subsequence, or None on
    a repeated exterior factor."""
    keys = [g.sort_key() for g in word if g.is_exterior]
    if len(set(keys)) != len(keys):
        return None
    sign = 1
    arr = list(keys)
    for i in range(len(arr)):
        j = min(range(i, len(arr)), key=lambda k: arr[k])
        if j != i:
            arr.insert(i, arr.pop(j))
            sign *= (-1) ** (j - i)
    return sign


def reference_basis(ctx, s, t):
    """Raw multiset search over the generator universe; no feasibility
    reasoning beyond nonnegative remainders.  Returns sorted renders."""
    if s < 0 or t < 0:
        return []
    if s == 0:
        return [""] if t == 0 else []
    universe = generator_universe(ctx, t, s)
    found = []

    def rec(idx, s_rem, t_rem, word):
        if s_rem == 0:
            if t_rem == 0:
                res = canonicalize(word, ctx)
                assert res is not None, "universe order should never square"
                found.append(res[1].render())
            return
        for k in range(idx, len(universe)):
            g = universe[k]
            d = g.tridegree(ctx)
            if d.s > s_rem or d.t > t_rem:
                continue
            rec(k + 1 if g.is_exterior else k, s_rem - d.s, t_rem - d.t, word + [g])

    rec(0, s, t, [])
    assert len(set(found)) == len(found)
    return sorted(found)


def span_vectors(rows, p):
    """Every vector in the row span, by brute force (tiny matrices only)."""
    cols = len(rows[0]) if rows else 0
    out = set()
    for coeffs in itertools.product(range(p), repeat=len(rows)):
        out.add(tuple(sum(c * row[i] for c, row in zip(coeffs, rows)) % p
                      for i in range(cols)))
    return out


def span_rank(rows, p):
    size = len(span_vectors(rows, p))
    k = 0
    while p ** k < size:
        k += 1
    assert p ** k == size
    return k
