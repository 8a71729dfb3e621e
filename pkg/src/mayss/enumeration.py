"""Complete monomial bases of a tridegree, with provably safe pruning.

A monomial of filtration s and internal degree t draws its factors from the
finite universe of generators with deg <= t and filt <= s.  The search is a
depth-first multiset selection over that universe in decreasing degree order.
Every pruning rule here is a necessary condition on any completion of the
partial selection, so pruned and unpruned runs agree (and a property test
holds them to that).

The strong rule is the digit-column system.  Each generator contributes one
unit to a contiguous range of base-p digit columns of t/q (the a(i) also
contribute one unit to the extra "remainder" column holding t mod q):

    a(i): remainder column and columns 0 .. i-1
    h(i,j): columns j .. i+j-1
    b(i,j): columns j+1 .. i+j

Writing cbar_j for the column sums of a candidate monomial, compatibility
with the target profile requires nonnegative carries lambda with

    cbar_{-1} = c_{-1} + lambda_{-1} q
    cbar_j + lambda_{j-1} = c_j + lambda_j p      (no carry out of the top)

and every cbar_j is at most the number of factors, hence at most the
remaining filtration.  Feasibility of that system for the residual degree is
checked by a tiny carry DP at each search node.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .algebra import Generator, Monomial, a, b, h, monomial_from_factors
from .errors import ParameterError
from .grading import PAdicProfile, PrimeContext, padic_profile

PRUNE_DEGREE = "degree"
PRUNE_CARRY = "carry"
PRUNE_DIGIT = "digit"
PRUNE_REMAINDER = "remainder"
ALL_PRUNING = frozenset({PRUNE_DEGREE, PRUNE_CARRY, PRUNE_DIGIT, PRUNE_REMAINDER})
NO_PRUNING: frozenset[str] = frozenset()

_memo: dict[tuple, "BidegreeBasis"] = {}


@dataclass(frozen=True)
class BidegreeBasis:
    """Every canonical monomial of one (s, t) bidegree, optionally one weight."""

    p: int
    s: int
    t: int
    u: int | None
    monomials: tuple[Monomial, ...]
    universe_bound: str

    @property
    def dimension(self) -> int:
        return len(self.monomials)

    def weights(self) -> list[int]:
        return [m.tridegree.u for m in self.monomials]


@dataclass(frozen=True)
class CarrySolution:
    """One solution of the digit-column system for a target profile.

    cbar[0] is the remainder-column sum, cbar[1 + j] the sum for column j.
    lambdas[0] is the remainder carry, lambdas[1 + j] the carry out of
    column j; the top column has no carry out.
    """

    cbar: tuple[int, ...]
    lambdas: tuple[int, ...]


def generator_universe(ctx: PrimeContext, t_max: int, s_max: int) -> list[Generator]:
    """All generators with deg <= t_max and filt <= s_max, canonically sorted."""
    out: list[Generator] = []
    if t_max < 1 or s_max < 1:
        return out
    p = ctx.p
    i = 0
    while 2 * p**i - 1 <= t_max:
        out.append(a(i))
        i += 1
    i = 1
    while 2 * (p**i - 1) <= t_max:
        j = 0
        while 2 * (p**i - 1) * p**j <= t_max:
            out.append(h(i, j))
            j += 1
        i += 1
    if s_max >= 2:
        i = 1
        while 2 * (p**i - 1) * p <= t_max:
            j = 0
            while 2 * (p**i - 1) * p ** (j + 1) <= t_max:
                out.append(b(i, j))
                j += 1
            i += 1
    out.sort(key=Generator.sort_key)
    return out


def digit_span(g: Generator) -> tuple[int, int]:
    """Inclusive column range [lo, hi] a generator contributes to; -1 is the
    remainder column.  a(0) contributes to the remainder column only."""
    if g.kind == "a":
        return (-1, g.i - 1)
    if g.kind == "h":
        return (g.j, g.i + g.j - 1)
    return (g.j + 1, g.i + g.j)


def column_sums(mon: Monomial) -> tuple[int, ...]:
    """Digit-column sums of a monomial, remainder column first."""
    top = -1
    for g, _ in mon.factors:
        top = max(top, digit_span(g)[1])
    sums = [0] * (top + 2)
    for g, e in mon.factors:
        lo, hi = digit_span(g)
        for col in range(lo, hi + 1):
            sums[col + 1] += e
    return tuple(sums)


# --- fast vanishing predicates --------------------------------------------


def vanishes_by_digit_bound(s1: int, t: int, ctx: PrimeContext) -> bool:
    """True when some base-p digit of t/q exceeds s1, forcing an empty
    bidegree.  Requires 0 < s1 < p; column sums are capped by the factor
    count, which is capped by the filtration, and for s1 < p no carry chain
    can make up the difference."""
    if not 0 < s1 < ctx.p:
        raise ParameterError("digit bound needs 0 < s1 < p, got s1=%d" % s1)
    return any(c > s1 for c in padic_profile(t, ctx).digits)


def vanishes_by_remainder_bound(s1: int, t: int, ctx: PrimeContext) -> bool:
    """True when t mod q exceeds s1, forcing an empty bidegree.  Requires
    0 < s1 < q; only a-type factors feed the remainder column and carries
    only increase it."""
    if not 0 < s1 < ctx.q:
        raise ParameterError("remainder bound needs 0 < s1 < q, got s1=%d" % s1)
    return padic_profile(t, ctx).c_minus1 > s1


def column_sums_impossible(cbar: Sequence[int], mprime: int) -> bool:
    """True when some triple i1 < i2 < i3 has cbar[i1] + cbar[i3] - mprime >
    cbar[i2].  Factor supports are contiguous, so at least
    cbar[i1] + cbar[i3] - mprime factors cover both outer columns and hence
    the middle one; the inequality is therefore unsatisfiable by any
    monomial with mprime factors.  cbar[0] is the remainder column."""
    if mprime < 0:
        raise ParameterError("factor count must be nonnegative, got %d" % mprime)
    ncols = len(cbar)
    for x in range(ncols):
        for z in range(x + 2, ncols):
            need = cbar[x] + cbar[z] - mprime
            if need <= 0:
                continue
            if any(cbar[y] < need for y in range(x + 1, z)):
                return True
    return False


@dataclass(frozen=True)
class ForcedFactors:
    """Conclusion of the spanning-factor argument for a column-sum vector."""

    generator: Generator | None
    count: int
    vanishes: bool

    def describe(self) -> str:
        if self.count == 0:
            return "no forced factors"
        base = "%d cop%s of %s" % (self.count, "y" if self.count == 1 else "ies",
                                   self.generator.render())
        if self.vanishes:
            base += ", hence the monomial is zero"
        return base


def forced_spanning_factors(cbar: Sequence[int], mprime: int,
                            i1: int, i2: int, i3: int) -> ForcedFactors:
    """Forced factors of any b-free monomial with column sums cbar.

    Preconditions (violations raise ParameterError): -1 <= i1 < i2 < i3 <=
    top column, cbar[i1] + cbar[i3] - mprime <= cbar[i2], and cbar vanishes
    outside [i1, i3].  With k = cbar[i1] + cbar[i3] - mprime > 0, at least k
    factors cover both ends; their contiguous support pinned inside
    [i1, i3] forces h(i3-i1+1, i1) when i1 > -1 (k > 1 then kills the
    monomial, exterior square) and a(i3+1) when i1 = -1.
    """
    top = len(cbar) - 2
    if not (-1 <= i1 < i2 < i3 <= top):
        raise ParameterError("need -1 <= i1 < i2 < i3 <= %d, got (%d, %d, %d)"
                             % (top, i1, i2, i3))

    def at(col: int) -> int:
        return cbar[col + 1]

    k = at(i1) + at(i3) - mprime
    if k > at(i2):
        raise ParameterError("column sums already impossible for (%d, %d, %d)" % (i1, i2, i3))
    for col in range(-1, top + 1):
        if (col < i1 or col > i3) and at(col) != 0:
            raise ParameterError("column %d is nonzero outside [i1, i3]" % col)
    if k <= 0:
        return ForcedFactors(generator=None, count=0, vanishes=False)
    if i1 == -1:
        return ForcedFactors(generator=a(i3 + 1), count=k, vanishes=False)
    return ForcedFactors(generator=h(i3 - i1 + 1, i1), count=k, vanishes=k > 1)


# --- the digit-column carry system ----------------------------------------


def carry_solutions(target: PAdicProfile, mprime_max: int,
                    ctx: PrimeContext) -> list[CarrySolution]:
    """All solutions of the column system with every cbar and lambda <= mprime_max."""
    if mprime_max < 0:
        raise ParameterError("mprime_max must be nonnegative, got %d" % mprime_max)
    digits = target.digits
    p, q = ctx.p, ctx.q
    sols: list[CarrySolution] = []
    if not digits:
        if target.c_minus1 <= mprime_max:
            sols.append(CarrySolution(cbar=(target.c_minus1,), lambdas=()))
        return sols

    first_states = []
    lam = 0
    while True:
        cm = target.c_minus1 + lam * q
        if cm > mprime_max or lam > mprime_max:
            break
        first_states.append((cm, lam))
        lam += 1

    def extend(col: int, carry_in: int, cbar: list[int], lams: list[int]):
        if col == len(digits) - 1:
            top = digits[col] - carry_in
            if 0 <= top <= mprime_max:
                sols.append(CarrySolution(cbar=tuple(cbar + [top]), lambdas=tuple(lams)))
            return
        lam_out = 0
        while lam_out <= mprime_max:
            c = digits[col] + lam_out * p - carry_in
            if c > mprime_max:
                break
            if c >= 0:
                extend(col + 1, lam_out, cbar + [c], lams + [lam_out])
            lam_out += 1

    for cm, lam in first_states:
        extend(0, lam, [cm], [lam])
    sols.sort(key=lambda s: s.cbar)
    return sols


def _carry_feasible(t_rem: int, cap: int, support: int, ctx: PrimeContext) -> bool:
    """Whether the residual degree admits any column solution with sums
    bounded by cap and restricted to the supported columns.

    support is a bitmask: bit 0 is the remainder column, bit j+1 is column
    j.  Pure DP over the carry value; necessary for any completion.
    """
    if t_rem == 0:
        return True
    p, q = ctx.p, ctx.q
    body, cm = divmod(t_rem, q)
    cap_m1 = cap if support & 1 else 0
    if cm > cap_m1:
        return False
    carries = set()
    lam = 0
    while cm + lam * q <= cap_m1 and lam <= cap:
        carries.add(lam)
        lam += 1
    col = 0
    while body or (support >> (col + 1)):
        if not carries:
            return False
        body, d = divmod(body, p)
        cap_j = cap if (support >> (col + 1)) & 1 else 0
        nxt = set()
        for carry_in in carries:
            lam_out = 0
            while True:
                c = d + lam_out * p - carry_in
                if c > cap_j:
                    break
                if c >= 0:
                    nxt.add(lam_out)
                lam_out += 1
        carries = nxt
        col += 1
    # Any leftover carry must vanish through zero-capacity columns.
    while carries and 0 not in carries:
        carries = {lam // p for lam in carries if lam % p == 0}
    return 0 in carries


# --- the search ------------------------------------------------------------


def _validate_prune(prune: Iterable[str]) -> frozenset[str]:
    flags = frozenset(prune)
    unknown = flags - ALL_PRUNING
    if unknown:
        raise ParameterError("unknown pruning flags: %s" % ", ".join(sorted(unknown)))
    return flags


def _search(ctx: PrimeContext, s: int, t: int, prune: frozenset[str]) -> list[Monomial]:
    universe = generator_universe(ctx, t, s)
    order = sorted(universe, key=lambda g: (-g.tridegree(ctx).t, g.sort_key()))
    n = len(order)
    degs = [g.tridegree(ctx).t for g in order]
    filts = [g.filtration for g in order]

    # Per suffix: supported columns, and the extreme degree-per-filtration
    # fractions for the reachability bounds.
    supp = [0] * (n + 1)
    max_frac = [(0, 1)] * (n + 1)   # (deg, filt) with max deg/filt in the suffix
    min_frac = [(1, 0)] * (n + 1)   # min deg/filt; (1, 0) acts as +infinity
    for k in range(n - 1, -1, -1):
        lo, hi = digit_span(order[k])
        mask = 0
        for col in range(lo, hi + 1):
            mask |= 1 << (col + 1)
        supp[k] = supp[k + 1] | mask
        d, f = degs[k], filts[k]
        md, mf = max_frac[k + 1]
        max_frac[k] = (d, f) if d * mf > md * f else (md, mf)
        md, mf = min_frac[k + 1]
        min_frac[k] = (d, f) if d * mf < md * f else (md, mf)

    use_degree = PRUNE_DEGREE in prune
    use_carry = PRUNE_CARRY in prune

    if PRUNE_DIGIT in prune and 0 < s < ctx.p and vanishes_by_digit_bound(s, t, ctx):
        return []
    if PRUNE_REMAINDER in prune and 0 < s < ctx.q and vanishes_by_remainder_bound(s, t, ctx):
        return []

    results: list[Monomial] = []
    chosen: list[Generator] = []

    def feasible(idx: int, s_rem: int, t_rem: int) -> bool:
        if use_degree:
            md, mf = max_frac[idx]
            if t_rem * mf > s_rem * md:
                return False
            md, mf = min_frac[idx]
            if t_rem * mf < s_rem * md:
                return False
        if use_carry and not _carry_feasible(t_rem, s_rem, supp[idx], ctx):
            return False
        return True

    def rec(idx: int, s_rem: int, t_rem: int):
        if s_rem == 0:
            if t_rem == 0:
                counts: dict[Generator, int] = {}
                for g in chosen:
                    counts[g] = counts.get(g, 0) + 1
                results.append(monomial_from_factors(counts.items(), ctx))
            return
        if t_rem <= 0:
            return
        for k in range(idx, n):
            if filts[k] > s_rem or degs[k] > t_rem:
                continue
            ns, nt = s_rem - filts[k], t_rem - degs[k]
            nidx = k + 1 if order[k].is_exterior else k
            if (ns or nt) and not feasible(nidx, ns, nt):
                continue
            chosen.append(order[k])
            rec(nidx, ns, nt)
            chosen.pop()

    if s == 0:
        return [monomial_from_factors((), ctx)] if t == 0 else []
    if feasible(0, s, t):
        rec(0, s, t)
    return results


def enumerate_basis(ctx: PrimeContext, s: int, t: int, u: int | None = None,
                    prune: Iterable[str] = ALL_PRUNING,
                    cache=None) -> BidegreeBasis:
    """The complete basis of tridegree (s, t, u), or of the whole (s, t)
    bidegree when u is None.  Sorted by rendered monomial."""
    if s < 0 or t < 0:
        raise ParameterError("filtration and degree must be nonnegative, got (%d, %d)" % (s, t))
    flags = _validate_prune(prune)
    key = (ctx.p, s, t, None, flags)
    basis = _memo.get(key)
    if basis is None and cache is not None:
        basis = cache.load_basis(ctx, s, t, flags)
        if basis is not None:
            _memo[key] = basis
    if basis is None:
        found = _search(ctx, s, t, flags)
        found.sort(key=Monomial.render)
        basis = BidegreeBasis(
            p=ctx.p, s=s, t=t, u=None, monomials=tuple(found),
            universe_bound="deg <= %d, filt <= %d" % (t, s))
        _memo[key] = basis
        if cache is not None:
            cache.store_basis(basis, flags)
    if u is None:
        return basis
    picked = tuple(m for m in basis.monomials if m.tridegree.u == u)
    return BidegreeBasis(p=ctx.p, s=s, t=t, u=u, monomials=picked,
                         universe_bound=basis.universe_bound)


def clear_memo() -> None:
    """Drop the in-process basis memo (tests use this around cache checks)."""
    _memo.clear()
