from typing import Dict, Any

from lss.groebner import Ideal, ReducedGB
from lss.poly import RingContext, FieldSpec, PriorityOrder
from lss.poly.text import render, parse_polynomial


def ring_to_json(ctx: RingContext) -> Dict[str, Any]:
    out: Dict[str, Any] = {"n": ctx.n, "field": str(ctx.field)}
    if ctx.aux:
        out["aux"] = list(ctx.aux)
    if ctx.d != 2:
        out["d"] = ctx.d
    return out


def ring_from_json(obj: Dict[str, Any]) -> RingContext:
    try:
        return RingContext(int(obj["n"]), FieldSpec.parse(str(obj["field"])), tuple(obj.get("aux", ())),
                           int(obj.get("d", 2)))
    except (KeyError, TypeError) as e:
        raise ValueError(f"Malformed ring {obj!r}: {e}")


def ideal_to_json(ideal: Ideal) -> Dict[str, Any]:
    return {"ring": ring_to_json(ideal.ctx), "gens": [render(g) for g in ideal.gens]}


def ideal_from_json(obj: Dict[str, Any]) -> Ideal:
    if "ring" not in obj or "gens" not in obj:
        raise ValueError("Ideal JSON needs 'ring' and 'gens'")
    ctx = ring_from_json(obj["ring"])
    return Ideal(ctx, tuple(parse_polynomial(g, ctx) for g in obj["gens"]))


def reduced_gb_to_json(gb: ReducedGB) -> Dict[str, Any]:
    return {
        "ring": ring_to_json(gb.ctx),
        "gens": [render(g) for g in gb.basis],
        "order": list(gb.order.priority),
        "elim": gb.order.elim_block_size
    }


def reduced_gb_from_json(obj: Dict[str, Any]) -> ReducedGB:
    ideal = ideal_from_json(obj)
    ctx = ideal.ctx
    order = PriorityOrder(obj.get("order", range(ctx.nvars)), int(obj.get("elim", ctx.offset)))
    ring = ctx.ordered_ring(order)
    return ReducedGB(ctx, order, tuple(g.set_ring(ring) for g in ideal.gens))
