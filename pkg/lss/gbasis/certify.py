from itertools import combinations
from typing import Optional, List

from lss.gbasis import Certification, GBElement
from lss.gbasis.construct import combinatorial_gb
from lss.graph import Graph
from lss.groebner.oracle import Oracle
from lss.ideals.builders import build_PiG
from lss.poly import RingContext
from lss.poly.arith import is_squarefree

CHAR2_NOTE = "char 2: GB theorem not applicable"


def elements_in_ideal(G: Graph, ctx: RingContext, elements: List[GBElement],
                      oracle: Optional[Oracle] = None) -> bool:
    """Every element reduces to zero modulo the oracle basis of the permanental edge ideal."""
    oracle = oracle if oracle is not None else Oracle()
    gb = oracle.buchberger(build_PiG(G, ctx))
    return all(gb.contains(e.poly) for e in elements)


def gb_certify(G: Graph, ctx: RingContext, oracle: Optional[Oracle] = None, prune: bool = True,
               elements: Optional[List[GBElement]] = None) -> Certification:
    if ctx.field.characteristic == 2:
        return Certification(None, None, None, CHAR2_NOTE)
    oracle = oracle if oracle is not None else Oracle()
    if elements is None:
        elements = combinatorial_gb(G, ctx, prune)
    polys = [e.poly for e in elements]
    is_gb = all(not oracle.normal_form(oracle.s_polynomial(f, g), polys) for f, g in combinations(polys, 2))
    expected = oracle.buchberger(build_PiG(G, ctx))
    reduced_match = tuple(oracle.interreduce(polys, expected.order)) == expected.basis
    return Certification(
        is_gb=is_gb,
        reduced_match=reduced_match,
        initial_squarefree=all(is_squarefree(p.LM) for p in polys)
    )
