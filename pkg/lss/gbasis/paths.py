from typing import List, Dict, Tuple, Iterable, Iterator

import networkx as nx

from lss.gbasis import AdmissiblePath
from lss.graph import Graph


def admissible_paths(G: Graph, i: int, j: int) -> List[AdmissiblePath]:
    """All simple i-j paths whose interior avoids the vertices strictly between i and j."""
    if not i < j:
        raise ValueError(f"Expected endpoints i < j, got {i}, {j}")
    if not (1 <= i and j <= G.n):
        raise ValueError(f"Endpoints {i}, {j} are not vertices of {G}")
    allowed = [v for v in G.vertices if v <= i or v >= j]
    H = G.to_networkx().subgraph(allowed)
    return sorted((AdmissiblePath(tuple(p)) for p in nx.all_simple_paths(H, i, j)),
                  key=lambda p: (p.length, p.seq))


def all_admissible_paths(G: Graph) -> Dict[Tuple[int, int], List[AdmissiblePath]]:
    out = {}
    for i in G.vertices:
        for j in range(i + 1, G.n + 1):
            paths = admissible_paths(G, i, j)
            if paths:
                out[(i, j)] = paths
    return out


def pendant_paths(G: Graph, a: int, avoid: Iterable[int]) -> Iterator[Tuple[int, ...]]:
    """Simple paths a, v_1, ..., v_k with k >= 1 and no v_t in avoid."""
    avoid = frozenset(avoid)
    adjacency = {v: G.neighbors(v) for v in G.vertices}
    stack = [(a,)]
    while stack:
        path = stack.pop()
        if len(path) > 1:
            yield path
        for w in reversed(adjacency[path[-1]]):
            if w not in avoid and w not in path:
                stack.append(path + (w,))
