from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, List, Tuple

import networkx as nx

from lss.graph import Graph, ComponentData

VertexSet = Tuple[int, ...]


@dataclass(frozen=True)
class SpecialPoints:
    is_cut_point: bool
    is_bipartition_point: bool

    @property
    def either(self) -> bool:
        return self.is_cut_point or self.is_bipartition_point


@dataclass(frozen=True)
class ConnectivityClass:
    is_matching_union: bool
    complement_is_n_minus_2_connected: bool


def _check_subset(G: Graph, S: Iterable[int]) -> frozenset:
    S = frozenset(S)
    outside = [v for v in S if not 1 <= v <= G.n]
    if outside:
        raise ValueError(f"Vertices {sorted(outside)} are not in 1..{G.n}")
    return S


def components(G: Graph, deleted: Iterable[int] = ()) -> List[ComponentData]:
    """Components of G restricted to [n] minus deleted, ordered by smallest vertex."""
    return list(_components(G, _check_subset(G, deleted)))


# enumerate_M asks for the same deletions over and over
@lru_cache(maxsize=8192)
def _components(G: Graph, deleted: frozenset) -> Tuple[ComponentData, ...]:
    remaining = [v for v in G.vertices if v not in deleted]
    H = G.to_networkx().subgraph(remaining)
    out = []
    for vertices in nx.connected_components(H):
        sub = H.subgraph(vertices)
        if nx.is_bipartite(sub):
            color = nx.bipartite.color(sub)
            first = color[min(vertices)]
            block1 = tuple(sorted(v for v in vertices if color[v] == first))
            block2 = tuple(sorted(v for v in vertices if color[v] != first))
            out.append(ComponentData(frozenset(vertices), True, (block1, block2)))
        else:
            out.append(ComponentData(frozenset(vertices), False))
    out.sort(key=lambda c: c.smallest)
    return tuple(out)


def bipartite_count(G: Graph, deleted: Iterable[int] = ()) -> int:
    """b(S)"""
    return sum(1 for c in components(G, deleted) if c.is_bipartite)


def special_points(G: Graph, S: Iterable[int], i: int) -> SpecialPoints:
    """Whether i is a cut point and/or a bipartition point of G restricted to ([n] minus S) plus i."""
    S = _check_subset(G, S)
    if i not in S:
        raise ValueError(f"Vertex {i} is not in {sorted(S)}")
    with_i = components(G, S - {i})
    without_i = components(G, S)
    return SpecialPoints(
        is_cut_point=len(without_i) > len(with_i),
        is_bipartition_point=sum(c.is_bipartite for c in without_i) > sum(c.is_bipartite for c in with_i)
    )


def in_M(G: Graph, S: Iterable[int]) -> bool:
    S = _check_subset(G, S)
    return all(special_points(G, S, i).either for i in S)


def enumerate_M(G: Graph) -> List[VertexSet]:
    """Every S such that each i in S is a cut or bipartition point once the rest of S is deleted.
    Listed by size, then lexicographically; the empty set comes first."""
    out = []
    for size in range(G.n + 1):
        for S in combinations(G.vertices, size):
            if in_M(G, S):
                out.append(S)
    return out


def connectivity_class(G: Graph) -> ConnectivityClass:
    """The complement flag is measured with networkx vertex connectivity, not read off the degrees of G."""
    # every graph on at most two vertices is (n-2)-connected
    connected = G.n <= 2 or nx.node_connectivity(G.complement().to_networkx()) >= G.n - 2
    return ConnectivityClass(
        is_matching_union=all(G.degree(v) <= 1 for v in G.vertices),
        complement_is_n_minus_2_connected=connected
    )
