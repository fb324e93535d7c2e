import logging
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Optional, Iterator, Dict, Any

from lss.graph import Graph
from lss.groebner.oracle import Oracle
from lss.ideals.builders import build_LG
from lss.poly import RingContext, FieldSpec, Polynomial
from lss.poly.text import render

logger = logging.getLogger("lss.gbasis")


@dataclass(frozen=True)
class Char2Witness:
    """m * (x_i + y_i)^2 lies in L_G while m * (x_i + y_i) does not."""
    multiplier: Polynomial
    vertex: int

    def to_json(self) -> Dict[str, Any]:
        return {"multiplier": render(self.multiplier), "vertex": self.vertex}


def y_monomials(ctx: RingContext, degree: int) -> Iterator[Polynomial]:
    """Monomials of the given degree in y_1..y_n, lexicographically from y_1^degree down."""
    for choice in combinations_with_replacement(range(1, ctx.n + 1), degree):
        m = ctx.one
        for v in choice:
            m *= ctx.y(v)
        yield m


def char2_nonradical_witness(G: Graph, ctx: Optional[RingContext] = None, bound: Optional[int] = None,
                             oracle: Optional[Oracle] = None) -> Optional[Char2Witness]:
    """
    Search y-monomials by degree, then vertex, then lex for a witness that L_G is not radical over F_2.
    Returns None when nothing turns up below the bound, which says nothing about radicality.
    """
    if ctx is None:
        ctx = RingContext(G.n, FieldSpec.prime(2))
    if ctx.field.characteristic != 2:
        raise ValueError(f"The non-radical witness search needs F_2, got {ctx.field}")
    if G.is_bipartite():
        raise ValueError(f"{G} is bipartite, L_G is radical over F_2")
    if bound is None:
        bound = 2 * (G.n - 1)
    oracle = oracle if oracle is not None else Oracle()
    gb = oracle.buchberger(build_LG(G, ctx))
    for degree in range(bound + 1):
        for i in G.vertices:
            w = ctx.x(i) + ctx.y(i)
            w2 = w ** 2
            for m in y_monomials(ctx, degree):
                if gb.contains(m * w2) and not gb.contains(m * w):
                    logger.info(f"Witness {render(m)} at vertex {i} for {G}")
                    return Char2Witness(m, i)
    logger.info(f"No witness up to degree {bound} for {G}")
    return None
