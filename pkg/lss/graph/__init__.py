"""
Simple undirected graphs on the vertices 1..n and the component data derived from them.
"""
from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, Tuple, Iterable, List, Dict, Any

import networkx as nx

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: FrozenSet[Edge] = frozenset()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"A graph needs at least one vertex, got n={self.n}")
        normalized = set()
        for edge in self.edges:
            if len(edge) != 2:
                raise ValueError(f"Edge {edge} does not have two endpoints")
            i, j = int(edge[0]), int(edge[1])
            if i == j:
                raise ValueError(f"Loop at vertex {i}")
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"Edge {edge} has an endpoint outside 1..{self.n}")
            normalized.add((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def of(cls, n: int, edges: Iterable[Iterable[int]] = ()) -> "Graph":
        return cls(n, frozenset(tuple(e) for e in edges))

    def __str__(self):
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def neighbors(self, v: int) -> List[int]:
        return sorted(j if i == v else i for i, j in self.edges if v in (i, j))

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def complement(self) -> "Graph":
        return Graph(self.n, frozenset(combinations(self.vertices, 2)) - self.edges)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return g

    def is_bipartite(self) -> bool:
        return nx.is_bipartite(self.to_networkx())

    def to_json(self) -> Dict[str, Any]:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}


@dataclass(frozen=True)
class ComponentData:
    """
    A connected component of an induced subgraph. For bipartite components the blocks are sorted vertex
    tuples with the block holding the smallest vertex first; a single vertex has an empty second block.
    Non-bipartite components carry no blocks.
    """
    vertices: FrozenSet[int]
    is_bipartite: bool
    blocks: Tuple[Tuple[int, ...], Tuple[int, ...]] = ((), ())

    @property
    def size(self) -> int:
        return len(self.vertices)

    @property
    def smallest(self) -> int:
        return min(self.vertices)

    def to_json(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"vertices": sorted(self.vertices), "bipartite": self.is_bipartite}
        if self.is_bipartite:
            out["blocks"] = [list(self.blocks[0]), list(self.blocks[1])]
        return out
