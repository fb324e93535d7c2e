import random
import unittest
from itertools import combinations

from lss.graph import Graph, ComponentData
from lss.graph.analysis import components, bipartite_count, special_points, in_M, enumerate_M, connectivity_class
from lss.graph.presets import preset, parse_graph, all_graphs, cycle, complete_bipartite, fig3


class GraphTest(unittest.TestCase):
    def test_normalize(self):
        G = Graph.of(3, [(2, 1), (1, 2), (3, 2)])
        assert G.sorted_edges() == [(1, 2), (2, 3)]
        assert G.has_edge(2, 1)
        assert G.neighbors(2) == [1, 3]
        assert G.degree(2) == 2

    def test_invalid(self):
        for n, edges in ((3, [(1, 1)]), (3, [(1, 4)]), (0, []), (3, [(1, 2, 3)])):
            with self.assertRaises(ValueError):
                Graph.of(n, edges)

    def test_complement(self):
        assert preset("path:3").complement().sorted_edges() == [(1, 3)]
        assert preset("complement:complete:3").edges == frozenset()

    def test_json(self):
        G = parse_graph('{"n": 3, "edges": [[1, 2]]}')
        assert G == Graph.of(3, [(1, 2)])
        assert G.to_json() == {"n": 3, "edges": [[1, 2]]}
        for bad in ('{"n": 2, "edges": [[1, 1]]}', '{"edges": []}', '{"n": 2, "edges": [[1, "2"]]}', '{"n": 2'):
            with self.assertRaises(ValueError):
                parse_graph(bad)


class PresetTest(unittest.TestCase):
    def test_presets(self):
        assert len(preset("cycle:5").edges) == 5
        assert len(complete_bipartite(2, 3).edges) == 6
        assert preset("star:3") == complete_bipartite(1, 3)
        assert len(preset("complete:4").edges) == 6
        assert preset("empty:2").edges == frozenset()
        assert preset("butterfly").n == 5
        assert len(fig3().edges) == 9
        assert preset("paw").degree(3) == 3

    def test_unknown(self):
        for bad in ("bogus", "cycle:2", "cycle:", "complete_bipartite:2", "cycle:x"):
            with self.assertRaises(ValueError):
                preset(bad)
        with self.assertRaises(ValueError):
            cycle(2)

    def test_all_graphs(self):
        assert len(list(all_graphs(3))) == 8
        assert len(set(all_graphs(4))) == 64


class ComponentTest(unittest.TestCase):
    def test_blocks(self):
        (comp,) = components(preset("path:4"))
        assert comp == ComponentData(frozenset({1, 2, 3, 4}), True, ((1, 3), (2, 4)))
        assert comp.size == 4

    def test_deleted(self):
        comps = components(preset("path:3"), (2,))
        assert [c.vertices for c in comps] == [frozenset({1}), frozenset({3})]
        assert comps[0].blocks == ((1,), ())
        assert components(preset("complete:2"), (1, 2)) == []

    def test_non_bipartite(self):
        (comp,) = components(preset("cycle:3"))
        assert not comp.is_bipartite
        assert comp.to_json() == {"vertices": [1, 2, 3], "bipartite": False}

    def test_bipartite_count(self):
        assert bipartite_count(preset("empty:3")) == 3
        assert bipartite_count(preset("cycle:3")) == 0
        assert bipartite_count(preset("butterfly"), (3,)) == 2


class SpecialPointTest(unittest.TestCase):
    def test_cut_point(self):
        # two triangles joined through 4
        G = Graph.of(7, [(1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6), (5, 7), (6, 7)])
        points = special_points(G, (4,), 4)
        assert points.is_cut_point
        assert not points.is_bipartition_point
        # splitting a bipartite component makes both
        points = special_points(preset("path:3"), (2,), 2)
        assert points.is_cut_point and points.is_bipartition_point

    def test_bipartition_point(self):
        points = special_points(preset("cycle:3"), (1,), 1)
        assert not points.is_cut_point
        assert points.is_bipartition_point
        assert points.either

    def test_fig3(self):
        G = fig3()
        # deleting 4 next to 5 both disconnects the triangle and frees the edge 6-7
        points = special_points(G, (4, 5), 4)
        assert points.is_cut_point
        assert points.is_bipartition_point
        M = enumerate_M(G)
        for S in ((4,), (4, 5), (2, 6)):
            assert S in M
        assert (3, 7) not in M
        assert in_M(G, (2, 6))

    def test_enumerate(self):
        assert enumerate_M(preset("cycle:3")) == [(), (1,), (2,), (3,)]
        assert enumerate_M(preset("path:3")) == [(), (2,)]
        assert enumerate_M(preset("empty:3")) == [()]

    def test_invalid(self):
        with self.assertRaises(ValueError):
            special_points(preset("path:3"), (2,), 1)
        with self.assertRaises(ValueError):
            in_M(preset("path:3"), (4,))

    def test_connectivity_class(self):
        cls = connectivity_class(preset("empty:2"))
        assert cls.is_matching_union and cls.complement_is_n_minus_2_connected
        cls = connectivity_class(Graph.of(4, [(1, 2), (3, 4)]))
        assert cls.is_matching_union and cls.complement_is_n_minus_2_connected
        cls = connectivity_class(preset("path:3"))
        assert not cls.is_matching_union and not cls.complement_is_n_minus_2_connected


def walk_components(G, deleted):
    """(vertex set, bipartite) pairs found by depth-first 2-colouring."""
    colour = {}
    out = []
    for start in G.vertices:
        if start in deleted or start in colour:
            continue
        colour[start] = 0
        stack, seen, bipartite = [start], {start}, True
        while stack:
            v = stack.pop()
            for w in G.neighbors(v):
                if w in deleted:
                    continue
                if w not in colour:
                    colour[w] = 1 - colour[v]
                    seen.add(w)
                    stack.append(w)
                elif colour[w] == colour[v]:
                    bipartite = False
        out.append((frozenset(seen), bipartite))
    return out


def component_counts(G, deleted):
    comps = walk_components(G, deleted)
    return len(comps), sum(bipartite for _, bipartite in comps)


class RandomGraphTest(unittest.TestCase):
    def test_components_partition(self):
        rng = random.Random(21)
        for _ in range(80):
            n = rng.randint(1, 7)
            G = Graph.of(n, [e for e in combinations(range(1, n + 1), 2) if rng.random() < 0.4])
            S = frozenset(v for v in G.vertices if rng.random() < 0.3)
            comps = components(G, S)
            assert sorted(v for c in comps for v in c.vertices) == sorted(set(G.vertices) - S)
            assert {(c.vertices, c.is_bipartite) for c in comps} == set(walk_components(G, S))
            for c in comps:
                inside = [(i, j) for i, j in G.edges if i in c.vertices and j in c.vertices]
                if c.is_bipartite:
                    first, second = set(c.blocks[0]), set(c.blocks[1])
                    assert first | second == c.vertices and not first & second
                    assert all((i in first) != (j in first) for i, j in inside)

    def test_enumerate_M_against_definition(self):
        for n in range(1, 6):
            for G in all_graphs(n):
                expected = []
                for size in range(n + 1):
                    for S in combinations(G.vertices, size):
                        after = component_counts(G, set(S))
                        ok = True
                        for i in S:
                            before = component_counts(G, set(S) - {i})
                            if not (after[0] > before[0] or after[1] > before[1]):
                                ok = False
                        if ok:
                            expected.append(S)
                assert enumerate_M(G) == expected, G

    def test_complement_flag_matches_degrees(self):
        for n in range(1, 6):
            for G in all_graphs(n):
                cls = connectivity_class(G)
                assert cls.complement_is_n_minus_2_connected == cls.is_matching_union, G
        assert not connectivity_class(preset("star:3")).complement_is_n_minus_2_connected
