"""Second-page dimensions, survival verdicts, and incoming-differential audits.

The first differential restricts to May-weight blocks (it preserves t and
drops u by one), so every computation here splits the bidegree basis by
weight, builds the two matrices around each block, and adds up

    e2 = (kernel of the outgoing map) - (rank of the incoming map).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import Element, element_tridegree
from .differential import d1, d1_matrix
from .enumeration import ALL_PRUNING, BidegreeBasis, enumerate_basis
from .errors import CompletenessError, ParameterError
from .grading import PrimeContext, Tridegree
from .linalg import MatrixFp, in_span, rank


@dataclass(frozen=True)
class WeightBlock:
    u: int
    e1_dim: int
    cycle_dim: int
    boundary_dim: int

    @property
    def e2_dim(self) -> int:
        return self.cycle_dim - self.boundary_dim


@dataclass(frozen=True)
class PageQueryResult:
    p: int
    s: int
    t: int
    u: int | None
    e1_dim: int
    cycle_dim: int
    boundary_dim: int
    e2_dim: int
    blocks: tuple[WeightBlock, ...]


def _blocks_by_weight(basis: BidegreeBasis) -> dict[int, list]:
    out: dict[int, list] = {}
    for mon in basis.monomials:
        out.setdefault(mon.tridegree.u, []).append(mon)
    return dict(sorted(out.items()))


def e1_dimension(ctx: PrimeContext, s: int, t: int, u: int | None = None,
                 prune=ALL_PRUNING, cache=None) -> int:
    return enumerate_basis(ctx, s, t, u, prune, cache).dimension


def e2_dimension(ctx: PrimeContext, s: int, t: int, u: int | None = None,
                 prune=ALL_PRUNING, cache=None) -> PageQueryResult:
    """Cycle, boundary, and second-page dimensions at (s, t, u), summed over
    all weights present when u is None."""
    target = enumerate_basis(ctx, s, t, None, prune, cache)
    below = enumerate_basis(ctx, s + 1, t, None, prune, cache)
    above = enumerate_basis(ctx, s - 1, t, None, prune, cache) if s >= 1 else None

    tgt_blocks = _blocks_by_weight(target)
    below_blocks = _blocks_by_weight(below)
    above_blocks = _blocks_by_weight(above) if above is not None else {}

    weights = sorted(tgt_blocks) if u is None else ([u] if u in tgt_blocks else [])
    blocks = []
    for w in weights:
        domain = tgt_blocks[w]
        outgoing = _block_matrix(ctx, s, t, w, domain, below_blocks.get(w - 1, []),
                                 prune, cache)
        cycles = len(domain) - rank(outgoing)
        source = above_blocks.get(w + 1, [])
        if source:
            incoming = _block_matrix(ctx, s - 1, t, w + 1, source, domain, prune, cache)
            boundaries = rank(incoming)
        else:
            boundaries = 0
        blocks.append(WeightBlock(u=w, e1_dim=len(domain), cycle_dim=cycles,
                                  boundary_dim=boundaries))
    return PageQueryResult(
        p=ctx.p, s=s, t=t, u=u,
        e1_dim=sum(bl.e1_dim for bl in blocks),
        cycle_dim=sum(bl.cycle_dim for bl in blocks),
        boundary_dim=sum(bl.boundary_dim for bl in blocks),
        e2_dim=sum(bl.e2_dim for bl in blocks),
        blocks=tuple(blocks))


def _block_matrix(ctx, s, t, w, domain, codomain, prune, cache) -> MatrixFp:
    if cache is not None:
        m = cache.load_matrix(ctx, s, t, w, len(codomain), len(domain), prune)
        if m is not None:
            return m
    m = d1_matrix(domain, codomain, ctx)
    if cache is not None:
        cache.store_matrix(ctx, s, t, w, m, prune)
    return m


@dataclass(frozen=True)
class SurvivalVerdict:
    position: Tridegree
    is_cycle: bool
    is_boundary: bool
    boundary_witness: tuple[int, ...] | None

    @property
    def e2_nonzero(self) -> bool:
        return self.is_cycle and not self.is_boundary


def survives_to_e2(x: Element, ctx: PrimeContext, prune=ALL_PRUNING,
                   cache=None) -> SurvivalVerdict:
    """Whether a homogeneous element is a d1-cycle, a d1-boundary, and hence
    whether its class on the second page is nonzero."""
    pos = element_tridegree(x)
    if pos is None:
        raise ParameterError("survival needs a homogeneous nonzero element")
    is_cycle = d1(x, ctx).is_zero
    basis = enumerate_basis(ctx, pos.s, pos.t, pos.u, prune, cache)
    index = {mon: k for k, mon in enumerate(basis.monomials)}
    vec = [0] * basis.dimension
    for mon, c in x.terms.items():
        k = index.get(mon)
        if k is None:
            raise CompletenessError("element term %s missing from its own basis" % mon.render())
        vec[k] = c % ctx.p
    witness = None
    is_boundary = False
    if pos.s >= 1:
        source = enumerate_basis(ctx, pos.s - 1, pos.t, pos.u + 1, prune, cache)
        if source.dimension:
            m = d1_matrix(source.monomials, basis.monomials, ctx)
            witness = in_span(m, vec)
            is_boundary = witness is not None
    return SurvivalVerdict(position=pos, is_cycle=is_cycle,
                           is_boundary=is_boundary, boundary_witness=witness)


_CAVEAT = ("second-page vanishing of every source weight rules out incoming "
           "differentials on all later pages; convergence of the ambient "
           "filtration is an assumption outside this computation")


@dataclass(frozen=True)
class SourcePageReport:
    """Audit of every position that could map onto a target class."""

    position: Tridegree
    source_filtration: int
    source_weights: tuple[int, ...]          # weight multiset of the source bidegree
    first_page_source_dim: int               # E1 dimension at weight u+1 (the d1 source)
    higher_source_e2: dict[int, int] = field(default_factory=dict)  # page r -> e2 dim
    caveat: str = _CAVEAT

    @property
    def not_hit_beyond_first_page(self) -> bool:
        return all(v == 0 for v in self.higher_source_e2.values())


def higher_page_hit_analysis(x: Element, ctx: PrimeContext, prune=ALL_PRUNING,
                             cache=None) -> SourcePageReport:
    """For a homogeneous target, inspect the bidegree one filtration below:
    the page-r differential would come from weight u + r there.  Zero
    second-page dimension at every such weight certifies the target cannot
    be hit on any page r >= 2."""
    pos = element_tridegree(x)
    if pos is None:
        raise ParameterError("hit analysis needs a homogeneous nonzero element")
    src_s = pos.s - 1
    if src_s < 0:
        return SourcePageReport(position=pos, source_filtration=src_s,
                                source_weights=(), first_page_source_dim=0)
    src = enumerate_basis(ctx, src_s, pos.t, None, prune, cache)
    weights = tuple(sorted(src.weights()))
    first_dim = sum(1 for w in weights if w == pos.u + 1)
    higher: dict[int, int] = {}
    for w in sorted(set(weights)):
        r = w - pos.u
        if r >= 2:
            higher[r] = e2_dimension(ctx, src_s, pos.t, u=w, prune=prune, cache=cache).e2_dim
    return SourcePageReport(position=pos, source_filtration=src_s,
                            source_weights=weights, first_page_source_dim=first_dim,
                            higher_source_e2=higher)
