import logging
from dataclasses import replace
from functools import reduce
from typing import Optional

from lss.decomp import DecompositionReport, SQRT_HYPOTHESIS, HYPOTHESIS_VIOLATED
from lss.decomp.primes import minimal_primes
from lss.graph import Graph
from lss.graph.analysis import bipartite_count, connectivity_class
from lss.groebner.ideals import intersect, equals
from lss.groebner.oracle import Oracle
from lss.ideals.builders import build_QS, build_LG
from lss.poly import FieldSpec, RingContext

logger = logging.getLogger("lss.decomp")


def classify(G: Graph, field: FieldSpec) -> DecompositionReport:
    """Every verdict is read off the graph; no ideal is built."""
    primes = tuple(minimal_primes(G))
    b = bipartite_count(G)
    if field.characteristic != 2:
        radical, reason = True, "char(K) != 2"
    elif G.is_bipartite():
        radical, reason = True, "char(K) = 2 and G bipartite"
    else:
        radical, reason = False, "char(K) = 2 and G not bipartite"

    if field.has_sqrt_minus_one():
        return DecompositionReport(G, field, b, primes, None, None, None, radical, reason, HYPOTHESIS_VIOLATED)

    dim = max(G.n - len(p.S) + p.b for p in primes)
    unmixed = all(p.b == len(p.S) + b for p in primes if p.S)
    prime = connectivity_class(G).is_matching_union
    return DecompositionReport(G, field, b, primes, dim, unmixed, prime, radical, reason, SQRT_HYPOTHESIS)


def verify_decomposition(G: Graph, ctx: RingContext, oracle: Optional[Oracle] = None) -> bool:
    """Intersect Q_S over M(G), smallest S first, and compare with L_G as reduced bases."""
    if ctx.field.has_sqrt_minus_one():
        raise ValueError(f"The decomposition needs sqrt(-1) outside the field, {ctx.field} contains it")
    oracle = oracle if oracle is not None else Oracle()
    ideals = [build_QS(G, p.S, ctx)[0] for p in minimal_primes(G)]
    meet = reduce(lambda I, J: intersect(I, J, oracle), ideals)
    verdict = equals(meet, build_LG(G, ctx), oracle)
    logger.info(f"Decomposition of {G} over {ctx.field} over {len(ideals)} primes: {verdict}")
    return verdict


def classify_and_verify(G: Graph, ctx: RingContext, oracle: Optional[Oracle] = None) -> DecompositionReport:
    report = classify(G, ctx.field)
    return replace(report, verified=verify_decomposition(G, ctx, oracle))
