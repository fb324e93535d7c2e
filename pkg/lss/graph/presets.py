"""
Named graphs and graph JSON.

    cycle:<n>, complete:<n>, complete_bipartite:<m>,<k>, path:<n>, star:<k>, empty:<n>,
    butterfly, fig3, paw, complement:<any of the above>
"""
import json
import os
from itertools import combinations
from typing import Dict, Any, Iterator, List, Callable

from lss.graph import Graph
from lss.util import json_load


def _ints(args: str, count: int, name: str) -> List[int]:
    parts = args.split(",") if args else []
    if len(parts) != count or not all(p.strip().isdigit() for p in parts):
        raise ValueError(f"Preset {name} expects {count} integer argument(s), got {args!r}")
    return [int(p) for p in parts]


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"A cycle needs at least 3 vertices, got {n}")
    return Graph.of(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def complete(n: int) -> Graph:
    return Graph.of(n, combinations(range(1, n + 1), 2))


def complete_bipartite(m: int, k: int) -> Graph:
    if m < 1 or k < 1:
        raise ValueError(f"Both blocks of K_{{m,k}} must be nonempty, got {m},{k}")
    return Graph.of(m + k, [(i, j) for i in range(1, m + 1) for j in range(m + 1, m + k + 1)])


def path(n: int) -> Graph:
    return Graph.of(n, [(i, i + 1) for i in range(1, n)])


def star(k: int) -> Graph:
    return complete_bipartite(1, k)


def empty(n: int) -> Graph:
    return Graph.of(n)


def butterfly() -> Graph:
    """Two triangles sharing vertex 3."""
    return Graph.of(5, [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)])


def fig3() -> Graph:
    """Triangle 1,2,3 bridged through 3-4 to the diamond 4,5,6,7 (edges 45, 46, 56, 57, 67)."""
    return Graph.of(7, [(1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (4, 6), (5, 6), (5, 7), (6, 7)])


def paw() -> Graph:
    """Triangle 1,2,3 with the pendant vertex 4 on 3."""
    return Graph.of(4, [(1, 2), (1, 3), (2, 3), (3, 4)])


_PARAMETRIZED: Dict[str, Callable[[str], Graph]] = {
    "cycle": lambda a: cycle(*_ints(a, 1, "cycle")),
    "complete": lambda a: complete(*_ints(a, 1, "complete")),
    "complete_bipartite": lambda a: complete_bipartite(*_ints(a, 2, "complete_bipartite")),
    "path": lambda a: path(*_ints(a, 1, "path")),
    "star": lambda a: star(*_ints(a, 1, "star")),
    "empty": lambda a: empty(*_ints(a, 1, "empty")),
}

_FIXED: Dict[str, Callable[[], Graph]] = {
    "butterfly": butterfly,
    "fig3": fig3,
    "paw": paw,
}


def preset(name: str) -> Graph:
    name = name.strip()
    if name.startswith("complement:"):
        return preset(name[len("complement:"):]).complement()
    if name in _FIXED:
        return _FIXED[name]()
    kind, _, args = name.partition(":")
    if kind in _PARAMETRIZED and args:
        return _PARAMETRIZED[kind](args)
    known = sorted(list(_FIXED) + [f"{k}:..." for k in _PARAMETRIZED])
    raise ValueError(f"Unknown graph preset {name!r}. Known presets: {', '.join(known)}")


def graph_from_json(obj: Dict[str, Any]) -> Graph:
    if not isinstance(obj, dict) or "n" not in obj:
        raise ValueError("Graph JSON needs an 'n' field")
    edges = obj.get("edges", [])
    if not isinstance(edges, list):
        raise ValueError("Graph JSON 'edges' must be a list of [i, j] pairs")
    for edge in edges:
        if not isinstance(edge, list) or len(edge) != 2 or not all(isinstance(v, int) for v in edge):
            raise ValueError(f"Malformed edge {edge!r}")
    return Graph.of(int(obj["n"]), edges)


def parse_graph(source: str) -> Graph:
    """A preset name, an inline JSON object or the path of a JSON file."""
    text = source.strip()
    if text.startswith("{"):
        try:
            return graph_from_json(json.loads(text))
        except json.JSONDecodeError as e:
            raise ValueError(f"Malformed graph JSON: {e}")
    if os.path.isfile(text):
        try:
            return graph_from_json(json_load(text))
        except json.JSONDecodeError as e:
            raise ValueError(f"Malformed graph JSON in {text}: {e}")
    return preset(text)


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on n vertices, by edge bitmask over the sorted vertex pairs."""
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.of(n, [pair for k, pair in enumerate(pairs) if mask >> k & 1])
