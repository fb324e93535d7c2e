import unittest

from lss.graph import Graph
from lss.graph.presets import preset
from lss.groebner import Ideal
from lss.groebner.ideals import equals, contains_ideal, ideal_height
from lss.groebner.oracle import Oracle
from lss.ideals.builders import build_LG, build_PiG, build_JG, build_IKn, build_IKmn, build_QS, f_gen, g_gen, \
    h_gen, b_gen, phi_transform, binomial_edge_transform
from lss.poly import RingContext, FieldSpec
from lss.poly.text import render


class BuilderTest(unittest.TestCase):
    def test_LG(self):
        ctx = RingContext(3)
        ideal = build_LG(preset("path:3"), ctx)
        assert ideal.gens == (f_gen(ctx, 1, 2), f_gen(ctx, 2, 3))
        with self.assertRaises(ValueError):
            build_LG(preset("path:3"), RingContext(4))

    def test_LG_higher_dimension(self):
        ctx = RingContext(2, d=3)
        (gen,) = build_LG(preset("complete:2"), ctx, d=3).gens
        assert render(gen) == "x1_1*x2_1 + x1_2*x2_2 + x1_3*x2_3"
        with self.assertRaises(ValueError):
            build_PiG(preset("complete:2"), ctx)

    def test_PiG_and_JG(self):
        ctx = RingContext(3)
        G = preset("cycle:3")
        assert build_PiG(G, ctx).gens == tuple(b_gen(ctx, i, j) for i, j in G.sorted_edges())
        assert build_JG(G, ctx).gens == tuple(g_gen(ctx, i, j) for i, j in G.sorted_edges())

    def test_complete(self):
        ctx = RingContext(3)
        assert len(build_IKn(3, ctx).gens) == 9
        assert build_IKn(2, ctx).gens == (f_gen(ctx, 1, 2),)
        assert build_IKn([3], ctx).is_zero
        assert h_gen(ctx, 2) in build_IKn([1, 2, 3], ctx).gens

    def test_complete_bipartite(self):
        ctx = RingContext(3)
        assert build_IKmn(1, 3, ctx).gens == (f_gen(ctx, 1, 2), f_gen(ctx, 1, 3), g_gen(ctx, 2, 3))
        assert build_IKmn([2], [1, 3], ctx).gens == (f_gen(ctx, 1, 2), f_gen(ctx, 2, 3), g_gen(ctx, 1, 3))
        with self.assertRaises(ValueError):
            build_IKmn(3, 3, ctx)
        with self.assertRaises(ValueError):
            build_IKmn([1, 2], [2, 3], ctx)

    def test_QS(self):
        ctx = RingContext(3)
        ideal, comp = build_QS(preset("path:3"), (2,), ctx)
        assert ideal.gens == (ctx.x(2), ctx.y(2))
        assert comp.height() == 2
        assert comp.b == 2 and comp.c == 2
        assert comp.label == "Q_{2}"

        ideal, comp = build_QS(preset("cycle:3"), (), ctx)
        assert equals(ideal, build_IKn(3, ctx))
        assert comp.height() == 3
        assert comp.to_json()["S"] == []


class HeightTest(unittest.TestCase):
    def test_heights(self):
        oracle = Oracle()
        ctx = RingContext(3)
        assert ideal_height(build_IKn(3, ctx), oracle) == 3
        assert ideal_height(build_IKmn(1, 3, ctx), oracle) == 2
        ideal, comp = build_QS(preset("paw"), (3,), RingContext(4))
        assert ideal_height(ideal, oracle) == comp.height() == 3

    def test_LG_inside_QS(self):
        G = preset("paw")
        ctx = RingContext(4)
        L = build_LG(G, ctx)
        for S in ((), (3,), (1,), (1, 3)):
            assert contains_ideal(build_QS(G, S, ctx)[0], L)


class TransformTest(unittest.TestCase):
    def test_phi(self):
        ctx = RingContext(2, FieldSpec.prime(5))
        (image,) = phi_transform(build_LG(preset("complete:2"), ctx)).gens
        # c = 2 turns f_12 into 3 b_12
        assert image == b_gen(ctx, 1, 2) * 3

    def test_phi_other_root(self):
        ctx = RingContext(2, FieldSpec.prime(5))
        (image,) = phi_transform(build_LG(preset("complete:2"), ctx), 3).gens
        # the x_i y_j coefficient is c^2 - 1 for either root
        assert image == b_gen(ctx, 1, 2) * 3
        with self.assertRaises(ValueError):
            phi_transform(build_LG(preset("complete:2"), ctx), 1)

    def test_phi_needs_sqrt_minus_one(self):
        for field in (FieldSpec.rationals(), FieldSpec.prime(3), FieldSpec.prime(2)):
            ctx = RingContext(2, field)
            with self.assertRaises(ValueError):
                phi_transform(build_LG(preset("complete:2"), ctx))

    def test_phi_ideal(self):
        ctx = RingContext(3, FieldSpec.prime(13))
        G = preset("cycle:3")
        assert equals(phi_transform(build_LG(G, ctx)), build_PiG(G, ctx))

    def test_binomial_edge(self):
        ctx = RingContext(2, FieldSpec.prime(5))
        (image,) = binomial_edge_transform(preset("complete:2"), ctx).gens
        assert image == g_gen(ctx, 1, 2)
        ctx = RingContext(4, FieldSpec.prime(5))
        G = Graph.of(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
        assert equals(binomial_edge_transform(G, ctx), build_JG(G, ctx))
        with self.assertRaises(ValueError):
            binomial_edge_transform(preset("cycle:3"), RingContext(3, FieldSpec.prime(5)))

    def test_ideal_ring_check(self):
        with self.assertRaises(ValueError):
            Ideal(RingContext(2), (RingContext(3).x(1),))
