from itertools import combinations
from typing import Iterable, List, Optional, Dict, Tuple

from lss.graph import Graph
from lss.graph.analysis import components, enumerate_M
from lss.groebner import Ideal
from lss.groebner.ideals import contains_ideal
from lss.groebner.oracle import Oracle
from lss.ideals import PrimeComponent
from lss.ideals.builders import build_QS
from lss.poly import RingContext


def prime_component(G: Graph, S: Iterable[int]) -> PrimeComponent:
    S = tuple(sorted(set(S)))
    return PrimeComponent(G.n, S, tuple(components(G, S)))


def qs_contains(G: Graph, S: Iterable[int], W: Iterable[int]) -> bool:
    """
    Q_S(G) is contained in Q_W(G) iff S is a subset of W and every component H of G minus S with at least two
    vertices either vanishes inside W or has V(H) minus W inside a single component of G minus W of the same
    bipartite class.
    """
    S, W = frozenset(S), frozenset(W)
    if not S <= W:
        return False
    targets = components(G, W)
    for H in components(G, S):
        if H.size <= 1:
            continue
        rest = H.vertices - W
        if not rest:
            continue
        if not any(rest <= G_j.vertices and G_j.is_bipartite == H.is_bipartite for G_j in targets):
            return False
    return True


def minimal_primes(G: Graph) -> List[PrimeComponent]:
    """Q_S for every S in M(G), in the order of enumerate_M."""
    return [prime_component(G, S) for S in enumerate_M(G)]


def all_subsets(n: int) -> List[Tuple[int, ...]]:
    return [S for size in range(n + 1) for S in combinations(range(1, n + 1), size)]


def oracle_qs_contains(G: Graph, S: Iterable[int], W: Iterable[int], ctx: RingContext,
                       oracle: Optional[Oracle] = None) -> bool:
    """The same containment decided on the constructed ideals."""
    Q_S, _ = build_QS(G, S, ctx)
    Q_W, _ = build_QS(G, W, ctx)
    return contains_ideal(Q_W, Q_S, oracle)


def oracle_minimal_sets(G: Graph, ctx: RingContext, oracle: Optional[Oracle] = None) -> List[Tuple[int, ...]]:
    """Every S whose Q_S contains no other Q_W, decided by ideal containment over all subsets."""
    oracle = oracle if oracle is not None else Oracle()
    subsets = all_subsets(G.n)
    ideals: Dict[Tuple[int, ...], Ideal] = {S: build_QS(G, S, ctx)[0] for S in subsets}
    out = []
    for S in subsets:
        if not any(W != S and contains_ideal(ideals[S], ideals[W], oracle) for W in subsets):
            out.append(S)
    return out
