import logging
from typing import List, Dict

from lss.gbasis import GBElement, GBKind, AdmissiblePath
from lss.gbasis.paths import all_admissible_paths, pendant_paths
from lss.graph import Graph
from lss.ideals.builders import b_gen, g_gen
from lss.poly import RingContext, Polynomial
from lss.poly.arith import lcm, divides, quotient

logger = logging.getLogger("lss.gbasis")


def _type_iv(G: Graph, ctx: RingContext, pi: AdmissiblePath, sigma: AdmissiblePath):
    U = pi.vertices | sigma.vertices
    for a in sorted(U):
        for tau in pendant_paths(G, a, U):
            b = tau[-1]
            W = sorted((U | frozenset(tau)) - {b})
            if b < W[0]:
                m = ctx.y(b)
                for h in W:
                    m *= ctx.x(h)
            elif b > W[-1]:
                m = ctx.x(b)
                for h in W:
                    m *= ctx.y(h)
            else:
                continue
            yield m, tau


def _is_strict_multiple(p: Polynomial, q: Polynomial) -> bool:
    if p == q or not divides(q.LM, p.LM):
        return False
    return p == q.mul_monom(quotient(p.LM, q.LM))


def prune_multiples(elements: List[GBElement]) -> List[GBElement]:
    """Drop every element that is a monomial multiple of another one."""
    return [e for e in elements if not any(_is_strict_multiple(e.poly, o.poly) for o in elements)]


def combinatorial_gb(G: Graph, ctx: RingContext, prune: bool = True) -> List[GBElement]:
    """
    Types I and II from odd and even admissible paths, type III from every odd/even pair with the same
    endpoints and type IV from every such pair extended by a pendant path. Elements are deduplicated by
    value, keeping the first witnesses found.
    """
    if G.n != ctx.n:
        raise ValueError(f"Graph on {G.n} vertices does not match a ring for {ctx.n} vertices")
    emitted: Dict[Polynomial, GBElement] = {}

    def emit(poly, kind, *witnesses):
        if poly not in emitted:
            emitted[poly] = GBElement(poly, kind, tuple(witnesses))

    paths = all_admissible_paths(G)
    for (i, j), found in paths.items():
        for p in found:
            if p.is_odd:
                emit(p.u(ctx) * b_gen(ctx, i, j), GBKind.TYPE_I, p.seq)
            else:
                emit(p.u(ctx) * g_gen(ctx, i, j), GBKind.TYPE_II, p.seq)
    for (i, j), found in paths.items():
        odd = [p for p in found if p.is_odd]
        even = [p for p in found if not p.is_odd]
        for pi in odd:
            for sigma in even:
                m = ctx.ring.term_new(lcm(pi.u(ctx).LM, sigma.u(ctx).LM), ctx.domain.one) * ctx.y(i) * ctx.x(j)
                emit(m, GBKind.TYPE_III, pi.seq, sigma.seq)
    for (i, j), found in paths.items():
        odd = [p for p in found if p.is_odd]
        even = [p for p in found if not p.is_odd]
        for pi in odd:
            for sigma in even:
                for m, tau in _type_iv(G, ctx, pi, sigma):
                    emit(m, GBKind.TYPE_IV, pi.seq, sigma.seq, tau)
    elements = list(emitted.values())
    if prune:
        pruned = prune_multiples(elements)
        logger.debug(f"Pruned {len(elements) - len(pruned)} of {len(elements)} elements for {G}")
        elements = pruned
    return elements


def element_counts(elements: List[GBElement]) -> Dict[str, int]:
    counts = {kind.value: 0 for kind in GBKind}
    for e in elements:
        counts[e.kind.value] += 1
    return counts
