import unittest

from lss.gbasis import AdmissiblePath, GBElement, GBKind, Certification
from lss.gbasis.certify import gb_certify, elements_in_ideal, CHAR2_NOTE
from lss.gbasis.char2 import char2_nonradical_witness, y_monomials
from lss.gbasis.construct import combinatorial_gb, element_counts, prune_multiples
from lss.gbasis.paths import admissible_paths, all_admissible_paths, pendant_paths
from lss.graph.presets import preset, all_graphs
from lss.groebner.oracle import Oracle
from lss.ideals.builders import b_gen, g_gen, build_LG
from lss.poly import RingContext, FieldSpec
from tests.utils import monomial


class AdmissiblePathTest(unittest.TestCase):
    def test_monomial(self):
        ctx = RingContext(4)
        p = AdmissiblePath((2, 4, 1, 3))
        assert (p.i, p.j, p.length) == (2, 3, 3)
        assert p.is_odd and p.parity == "odd"
        assert p.u_x() == (4,)
        assert p.u_y() == (1,)
        assert p.u(ctx) == ctx.x(4) * ctx.y(1)
        assert AdmissiblePath((1, 2)).u(ctx) == ctx.one

    def test_invalid(self):
        for seq in ((1, 2, 3), (3, 1), (1,), (1, 4, 1, 2)):
            with self.assertRaises(ValueError):
                AdmissiblePath(seq)

    def test_enumeration(self):
        G = preset("cycle:3")
        assert [p.seq for p in admissible_paths(G, 1, 2)] == [(1, 2), (1, 3, 2)]
        assert [p.seq for p in admissible_paths(G, 1, 3)] == [(1, 3)]
        assert sorted(all_admissible_paths(preset("path:3"))) == [(1, 2), (2, 3)]
        with self.assertRaises(ValueError):
            admissible_paths(G, 2, 1)

    def test_pendant_paths(self):
        G = preset("path:3")
        assert list(pendant_paths(G, 1, ())) == [(1, 2), (1, 2, 3)]
        assert list(pendant_paths(G, 1, (2,))) == []


class CombinatorialGBTest(unittest.TestCase):
    def test_triangle(self):
        ctx = RingContext(3)
        elements = combinatorial_gb(preset("cycle:3"), ctx)
        assert element_counts(elements) == {"I": 3, "II": 2, "III": 2, "IV": 0}
        polys = {e.poly: e for e in elements}
        assert polys[b_gen(ctx, 1, 2)].witnesses == ((1, 2),)
        assert polys[ctx.x(3) * g_gen(ctx, 1, 2)].kind == GBKind.TYPE_II
        assert polys[ctx.y(1) * g_gen(ctx, 2, 3)].witnesses == ((2, 1, 3),)
        third = polys[monomial(ctx, xs=(2, 3), ys=(1,))]
        assert third.kind == GBKind.TYPE_III
        assert third.witnesses == ((1, 2), (1, 3, 2))
        assert monomial(ctx, xs=(3,), ys=(1, 2)) in polys

    def test_pendant_element(self):
        ctx = RingContext(4)
        elements = combinatorial_gb(preset("paw"), ctx)
        assert element_counts(elements) == {"I": 4, "II": 2, "III": 2, "IV": 1}
        (fourth,) = [e for e in elements if e.kind == GBKind.TYPE_IV]
        assert fourth.poly == monomial(ctx, xs=(4,), ys=(1, 2, 3))
        assert fourth.witnesses[-1] == (3, 4)

    def test_forest(self):
        ctx = RingContext(3)
        elements = combinatorial_gb(preset("path:3"), ctx)
        assert [e.poly for e in elements] == [b_gen(ctx, 1, 2), b_gen(ctx, 2, 3)]
        assert elements[0].to_json() == {"kind": "I", "poly": "x1*y2 + x2*y1", "witnesses": [[1, 2]]}

    def test_prune(self):
        ctx = RingContext(2)
        small = GBElement(ctx.x(1), GBKind.TYPE_IV, ())
        large = GBElement(ctx.x(1) * ctx.y(2), GBKind.TYPE_IV, ())
        other = GBElement(b_gen(ctx, 1, 2), GBKind.TYPE_I, ((1, 2),))
        assert prune_multiples([small, large, other]) == [small, other]

    def test_bipartite_graphs_have_no_types_three_or_four(self):
        for n in range(1, 6):
            ctx = RingContext(n)
            for G in all_graphs(n):
                if G.is_bipartite():
                    counts = element_counts(combinatorial_gb(G, ctx))
                    assert counts["III"] == 0 and counts["IV"] == 0, G

    def test_path_parity_in_bipartite_graphs(self):
        for n in range(2, 6):
            for G in all_graphs(n):
                if not G.is_bipartite():
                    continue
                for (i, j), paths in all_admissible_paths(G).items():
                    assert len({p.is_odd for p in paths}) == 1, (G, i, j)

    def test_ring_mismatch(self):
        with self.assertRaises(ValueError):
            combinatorial_gb(preset("cycle:3"), RingContext(4))


class CertifyTest(unittest.TestCase):
    def test_certify(self):
        oracle = Oracle()
        for name in ("cycle:3", "path:4", "paw", "complete_bipartite:2,2"):
            G = preset(name)
            for field in (FieldSpec.rationals(), FieldSpec.prime(3)):
                ctx = RingContext(G.n, field)
                cert = gb_certify(G, ctx, oracle)
                assert cert.ok, f"{name} over {field}: {cert}"
                assert elements_in_ideal(G, ctx, combinatorial_gb(G, ctx), oracle)

    def test_char2_skipped(self):
        cert = gb_certify(preset("cycle:3"), RingContext(3, FieldSpec.prime(2)))
        assert cert.skipped
        assert not cert.ok
        assert cert.to_json() == {"is_gb": None, "reduced_match": None, "initial_squarefree": None,
                                  "note": CHAR2_NOTE}

    def test_certification_flags(self):
        assert Certification(True, True, True).ok
        assert not Certification(True, False, True).ok
        assert "note" not in Certification(True, True, True).to_json()


class Char2Test(unittest.TestCase):
    def test_triangle_witness(self):
        ctx = RingContext(3, FieldSpec.prime(2))
        oracle = Oracle()
        witness = char2_nonradical_witness(preset("cycle:3"), ctx, bound=4, oracle=oracle)
        assert witness is not None
        gb = oracle.buchberger(build_LG(preset("cycle:3"), ctx))
        w = ctx.x(witness.vertex) + ctx.y(witness.vertex)
        assert gb.contains(witness.multiplier * w ** 2)
        assert not gb.contains(witness.multiplier * w)
        assert witness.to_json()["vertex"] == witness.vertex

    def test_pentagon_witness(self):
        ctx = RingContext(5, FieldSpec.prime(2))
        oracle = Oracle()
        G = preset("cycle:5")
        witness = char2_nonradical_witness(G, ctx, oracle=oracle)
        assert witness is not None
        gb = oracle.buchberger(build_LG(G, ctx))
        w = ctx.x(witness.vertex) + ctx.y(witness.vertex)
        assert gb.contains(witness.multiplier * w ** 2)
        assert not gb.contains(witness.multiplier * w)

    def test_rejects(self):
        with self.assertRaises(ValueError):
            char2_nonradical_witness(preset("path:3"))
        with self.assertRaises(ValueError):
            char2_nonradical_witness(preset("cycle:3"), RingContext(3))

    def test_y_monomials(self):
        ctx = RingContext(2)
        assert list(y_monomials(ctx, 0)) == [ctx.one]
        assert list(y_monomials(ctx, 2)) == [ctx.y(1) ** 2, ctx.y(1) * ctx.y(2), ctx.y(2) ** 2]
