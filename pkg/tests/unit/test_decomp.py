import unittest

from lss.decomp import HYPOTHESIS_VIOLATED, SQRT_HYPOTHESIS
from lss.decomp.classify import classify, verify_decomposition, classify_and_verify
from lss.decomp.primes import qs_contains, minimal_primes, prime_component, oracle_qs_contains, \
    oracle_minimal_sets, all_subsets
from lss.graph import Graph
from lss.graph.analysis import enumerate_M
from lss.graph.presets import preset, all_graphs
from lss.groebner.ideals import ideal_height
from lss.groebner.oracle import Oracle
from lss.ideals.builders import build_QS
from lss.poly import RingContext, FieldSpec

Q = FieldSpec.rationals()


class ContainmentTest(unittest.TestCase):
    def test_combinatorial(self):
        path = preset("path:3")
        assert not qs_contains(path, (), (2,))
        assert qs_contains(path, (2,), (1, 2))
        assert not qs_contains(path, (1,), (2,))
        triangle = preset("cycle:3")
        # the edge left after deleting 1 is bipartite, the triangle is not
        assert not qs_contains(triangle, (), (1,))
        # h_3 is not in (x1, y1, x2, y2)
        assert not qs_contains(triangle, (), (1, 2))
        assert qs_contains(triangle, (), (1, 2, 3))

    def test_against_oracle(self):
        oracle = Oracle()
        for G in (preset("path:3"), preset("cycle:3")):
            ctx = RingContext(G.n)
            for S in all_subsets(G.n):
                for W in all_subsets(G.n):
                    assert qs_contains(G, S, W) == oracle_qs_contains(G, S, W, ctx, oracle), (G, S, W)

    def test_minimal_sets(self):
        oracle = Oracle()
        for G in all_graphs(3):
            assert oracle_minimal_sets(G, RingContext(3), oracle) == enumerate_M(G), G


class MinimalPrimesTest(unittest.TestCase):
    def test_triangle(self):
        primes = minimal_primes(preset("cycle:3"))
        assert [p.S for p in primes] == [(), (1,), (2,), (3,)]
        assert [p.height() for p in primes] == [3, 3, 3, 3]

    def test_component(self):
        comp = prime_component(preset("butterfly"), (3,))
        assert comp.b == 2
        assert comp.height() == 4
        assert comp.label == "Q_{3}"


class ClassifyTest(unittest.TestCase):
    def test_butterfly(self):
        report = classify(preset("butterfly"), Q)
        assert (report.dim, report.n, report.b) == (6, 5, 0)
        assert report.hypothesis == SQRT_HYPOTHESIS

    def test_path(self):
        report = classify(preset("path:3"), Q)
        assert report.dim == 4
        assert report.unmixed
        assert not report.prime
        assert report.radical
        assert report.radical_reason == "char(K) != 2"

    def test_complete_bipartite(self):
        report = classify(preset("complete_bipartite:2,2"), Q)
        assert report.dim == 5
        assert report.unmixed is False

    def test_prime(self):
        assert classify(Graph.of(4, [(1, 2), (3, 4)]), Q).prime
        assert classify(preset("empty:3"), FieldSpec.prime(3)).prime
        assert not classify(preset("cycle:3"), Q).prime

    def test_families(self):
        for n in range(3, 8):
            assert classify(preset(f"cycle:{n}"), Q).unmixed == (n % 2 == 1), n
        for n in range(2, 7):
            assert classify(preset(f"complete:{n}"), Q).unmixed == (n in (2, 3)), n

    def test_dimension_bound(self):
        for n in range(1, 4):
            for G in all_graphs(n):
                report = classify(G, Q)
                assert report.dim >= n + report.b

    def test_sqrt_minus_one(self):
        report = classify(preset("cycle:3"), FieldSpec.prime(5))
        assert report.hypothesis_violated
        assert report.hypothesis == HYPOTHESIS_VIOLATED
        assert report.dim is None and report.unmixed is None and report.prime is None
        assert report.radical

    def test_characteristic_two(self):
        report = classify(preset("cycle:3"), FieldSpec.prime(2))
        assert not report.radical
        assert report.radical_reason == "char(K) = 2 and G not bipartite"
        assert classify(preset("path:3"), FieldSpec.prime(2)).radical

    def test_json(self):
        obj = classify(preset("path:3"), Q).to_json()
        assert [p["S"] for p in obj["minimal_primes"]] == [[], [2]]
        assert obj["radical"] == {"value": True, "reason": "char(K) != 2"}
        assert "verified" not in obj


class VerifyDecompositionTest(unittest.TestCase):
    def test_small_graphs(self):
        oracle = Oracle()
        for name in ("complete:2", "path:3", "cycle:3"):
            G = preset(name)
            assert verify_decomposition(G, RingContext(G.n), oracle), name
        G = preset("cycle:3")
        assert verify_decomposition(G, RingContext(3, FieldSpec.prime(3)), oracle)

    def test_report(self):
        report = classify_and_verify(preset("path:3"), RingContext(3))
        assert report.verified
        assert report.to_json()["verified"]

    def test_rejects_sqrt_minus_one(self):
        with self.assertRaises(ValueError):
            verify_decomposition(preset("path:3"), RingContext(3, FieldSpec.prime(5)))


class MinimalPrimePropertyTest(unittest.TestCase):
    def test_pairwise_incomparable(self):
        for n in range(1, 5):
            for G in all_graphs(n):
                M = enumerate_M(G)
                for S in M:
                    for W in M:
                        if S != W:
                            assert not qs_contains(G, S, W), (G, S, W)

    def test_dimension_against_oracle_heights(self):
        oracle = Oracle()
        graphs = [G for n in range(1, 4) for G in all_graphs(n)] + [preset("paw"), preset("cycle:4")]
        for G in graphs:
            ctx = RingContext(G.n)
            report = classify(G, Q)
            heights = [ideal_height(build_QS(G, p.S, ctx)[0], oracle) for p in report.minimal_primes]
            assert 2 * G.n - report.dim == min(heights), G
