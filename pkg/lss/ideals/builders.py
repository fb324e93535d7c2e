"""
Generator families. For vertices i, j:

    f_ij = x_i x_j + y_i y_j     g_ij = x_i y_j - x_j y_i     h_i = x_i^2 + y_i^2     b_ij = x_i y_j + x_j y_i

All builders place generators on the global vertex indices of the ring, so ideals built for different vertex
subsets live in the same ring.
"""
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence, Tuple, Union, Dict

from lss.graph import Graph
from lss.graph.analysis import components
from lss.groebner import Ideal
from lss.ideals import PrimeComponent
from lss.poly import RingContext, Polynomial
from lss.poly.arith import substitute


def _require_plane(ctx: RingContext):
    if ctx.d != 2:
        raise ValueError(f"Expected a ring with x and y variables (d=2), got d={ctx.d}")


def _require_graph_ring(G: Graph, ctx: RingContext):
    if G.n != ctx.n:
        raise ValueError(f"Graph on {G.n} vertices does not match a ring for {ctx.n} vertices")


def f_gen(ctx: RingContext, i: int, j: int) -> Polynomial:
    return ctx.x(i) * ctx.x(j) + ctx.y(i) * ctx.y(j)


def g_gen(ctx: RingContext, i: int, j: int) -> Polynomial:
    i, j = min(i, j), max(i, j)
    return ctx.x(i) * ctx.y(j) - ctx.x(j) * ctx.y(i)


def h_gen(ctx: RingContext, i: int) -> Polynomial:
    return ctx.x(i) ** 2 + ctx.y(i) ** 2


def b_gen(ctx: RingContext, i: int, j: int) -> Polynomial:
    return ctx.x(i) * ctx.y(j) + ctx.x(j) * ctx.y(i)


def build_LG(G: Graph, ctx: RingContext, d: Optional[int] = None) -> Ideal:
    """One generator sum_k x_ik x_jk per edge."""
    _require_graph_ring(G, ctx)
    if d is not None and d != ctx.d:
        raise ValueError(f"Requested d={d} on a ring built for d={ctx.d}")
    gens = [sum((ctx.var(i, k) * ctx.var(j, k) for k in range(1, ctx.d + 1)), ctx.zero)
            for i, j in G.sorted_edges()]
    return Ideal(ctx, tuple(gens))


def build_PiG(G: Graph, ctx: RingContext) -> Ideal:
    _require_graph_ring(G, ctx)
    _require_plane(ctx)
    return Ideal(ctx, tuple(b_gen(ctx, i, j) for i, j in G.sorted_edges()))


def build_JG(G: Graph, ctx: RingContext) -> Ideal:
    """Binomial edge ideal (g_ij : ij an edge)."""
    _require_graph_ring(G, ctx)
    _require_plane(ctx)
    return Ideal(ctx, tuple(g_gen(ctx, i, j) for i, j in G.sorted_edges()))


def complete_block_gens(ctx: RingContext, vertices: Sequence[int]):
    vertices = sorted(vertices)
    if len(vertices) < 2:
        return []
    if len(vertices) == 2:
        return [f_gen(ctx, *vertices)]
    pairs = list(combinations(vertices, 2))
    return [f_gen(ctx, i, j) for i, j in pairs] + [g_gen(ctx, i, j) for i, j in pairs] + \
        [h_gen(ctx, i) for i in vertices]


def bipartite_block_gens(ctx: RingContext, block1: Sequence[int], block2: Sequence[int]):
    cross = sorted((min(i, j), max(i, j)) for i in block1 for j in block2)
    within = sorted(list(combinations(sorted(block1), 2)) + list(combinations(sorted(block2), 2)))
    return [f_gen(ctx, i, j) for i, j in cross] + [g_gen(ctx, i, j) for i, j in within]


def build_IKn(vertices: Union[int, Sequence[int]], ctx: RingContext) -> Ideal:
    """I_{K_n} on 1..n, or on the given vertices."""
    _require_plane(ctx)
    if isinstance(vertices, int):
        vertices = range(1, vertices + 1)
    return Ideal(ctx, tuple(complete_block_gens(ctx, vertices)))


def build_IKmn(block1: Union[int, Sequence[int]], block2: Union[int, Sequence[int]], ctx: RingContext) -> Ideal:
    """I_{K_{m,n-m}} for (m, n) with 1 <= m < n, or for two explicit vertex blocks."""
    _require_plane(ctx)
    if isinstance(block1, int) and isinstance(block2, int):
        m, n = block1, block2
        if not 1 <= m < n:
            raise ValueError(f"I_{{K_{{m,n-m}}}} needs 1 <= m < n, got m={m}, n={n}")
        block1, block2 = range(1, m + 1), range(m + 1, n + 1)
    if set(block1) & set(block2):
        raise ValueError(f"Blocks {sorted(block1)} and {sorted(block2)} overlap")
    return Ideal(ctx, tuple(bipartite_block_gens(ctx, block1, block2)))


def build_QS(G: Graph, S: Iterable[int], ctx: RingContext) -> Tuple[Ideal, PrimeComponent]:
    _require_graph_ring(G, ctx)
    _require_plane(ctx)
    S = tuple(sorted(set(S)))
    comps = tuple(components(G, S))
    gens = []
    for i in S:
        gens += [ctx.x(i), ctx.y(i)]
    for comp in comps:
        if comp.is_bipartite:
            gens += bipartite_block_gens(ctx, *comp.blocks)
        else:
            gens += complete_block_gens(ctx, comp.vertices)
    return Ideal(ctx, tuple(gens)), PrimeComponent(G.n, S, comps)


def _sqrt_minus_one(ctx: RingContext, c):
    if c is None:
        c = ctx.field.sqrt_minus_one()
    else:
        c = ctx.field.element(c) if isinstance(c, (int, Fraction, str)) else c
    if c * c != ctx.domain.convert(-1):
        raise ValueError(f"{c} is not a square root of -1 in {ctx.field}")
    return c


def phi_transform(I: Ideal, c=None) -> Ideal:
    """x_i -> x_i - y_i, y_i -> c (x_i + y_i) with c^2 = -1."""
    ctx = I.ctx
    _require_plane(ctx)
    if ctx.field.characteristic == 2:
        raise ValueError("The phi transform needs characteristic other than 2")
    if not ctx.field.has_sqrt_minus_one():
        raise ValueError(f"sqrt(-1) does not exist in {ctx.field}")
    c = _sqrt_minus_one(ctx, c)
    assignment: Dict[int, Polynomial] = {}
    for i in range(1, ctx.n + 1):
        assignment[ctx.var_index(i, 1)] = ctx.x(i) - ctx.y(i)
        assignment[ctx.var_index(i, 2)] = (ctx.x(i) + ctx.y(i)).mul_ground(c)
    return Ideal(ctx, tuple(substitute(g, assignment) for g in I.gens))


def binomial_edge_transform(G: Graph, ctx: RingContext, c=None) -> Ideal:
    """
    For bipartite G the image of L_G under x_i -> x_i, y_i -> c y_i on the first block of every component and
    x_i -> y_i, y_i -> c x_i on the second block. The image is the binomial edge ideal J_G.
    """
    _require_graph_ring(G, ctx)
    _require_plane(ctx)
    if not G.is_bipartite():
        raise ValueError(f"{G} is not bipartite")
    if not ctx.field.has_sqrt_minus_one():
        raise ValueError(f"sqrt(-1) does not exist in {ctx.field}")
    c = _sqrt_minus_one(ctx, c)
    assignment: Dict[int, Polynomial] = {}
    for comp in components(G):
        for i in comp.blocks[0]:
            assignment[ctx.var_index(i, 2)] = ctx.y(i).mul_ground(c)
        for i in comp.blocks[1]:
            assignment[ctx.var_index(i, 1)] = ctx.y(i)
            assignment[ctx.var_index(i, 2)] = ctx.x(i).mul_ground(c)
    return Ideal(ctx, tuple(substitute(g, assignment) for g in build_LG(G, ctx).gens))
