"""
Derived ideal operations on top of the oracle. Intersection, quotient and radical membership all go through a
single auxiliary variable t placed ahead of every graph variable, so the default lex order of the extended ring
eliminates it.
"""
from enum import Enum
from typing import Optional, Union

from lss.groebner import Ideal, ReducedGB
from lss.groebner.monomial import monomial_ideal_stats
from lss.groebner.oracle import Oracle
from lss.poly import Polynomial, PriorityOrder, RingContext, RingMismatchError


class IdealOp(Enum):
    CONTAINS_POLY = "contains_poly"
    CONTAINS_IDEAL = "contains_ideal"
    EQUALS = "equals"
    INTERSECT = "intersect"
    QUOTIENT_BY = "quotient_by"
    RADICAL_MEMBER = "radical_member"


def _oracle(oracle: Optional[Oracle]) -> Oracle:
    return oracle if oracle is not None else Oracle()


def _same_ctx(I: Ideal, J: Ideal):
    if I.ctx != J.ctx:
        raise RingMismatchError(f"Ideals live in {I.ctx} and {J.ctx}")


def _with_t(ctx: RingContext) -> RingContext:
    name = "t"
    k = 0
    while name in ctx.var_names:
        k += 1
        name = f"t{k}"
    return ctx.with_aux(name)


def _eliminate_t(gb: ReducedGB, ctx: RingContext) -> Ideal:
    ext = gb.ctx
    kept = [g.set_ring(ext.ring) for g in gb.basis if not g.degree(0)]
    return Ideal(ctx, tuple(ext.project(g, ctx) for g in kept))


def contains_poly(I: Ideal, p: Polynomial, oracle: Optional[Oracle] = None) -> bool:
    I.ctx.check(p)
    return _oracle(oracle).buchberger(I).contains(p)


def contains_ideal(I: Ideal, J: Ideal, oracle: Optional[Oracle] = None) -> bool:
    """True iff J is contained in I."""
    _same_ctx(I, J)
    gb = _oracle(oracle).buchberger(I)
    return all(gb.contains(g) for g in J.nonzero_gens)


def equals(I: Ideal, J: Ideal, oracle: Optional[Oracle] = None, order: Optional[PriorityOrder] = None) -> bool:
    _same_ctx(I, J)
    oracle = _oracle(oracle)
    return oracle.buchberger(I, order).basis == oracle.buchberger(J, order).basis


def intersect(I: Ideal, J: Ideal, oracle: Optional[Oracle] = None) -> Ideal:
    """I ∩ J as the t-free part of a Groebner basis of t*I + (1 - t)*J."""
    _same_ctx(I, J)
    ctx = I.ctx
    if I.is_zero or J.is_zero:
        return Ideal.zero(ctx)
    ext = _with_t(ctx)
    t = ext.aux_var(0)
    gens = [t * ctx.lift(f, ext) for f in I.nonzero_gens] + [(1 - t) * ctx.lift(g, ext) for g in J.nonzero_gens]
    gb = _oracle(oracle).buchberger(Ideal(ext, tuple(gens)))
    return _eliminate_t(gb, ctx)


def quotient_by(I: Ideal, f: Polynomial, oracle: Optional[Oracle] = None) -> Ideal:
    """I : (f), from the generators of I ∩ (f) divided exactly by f."""
    I.ctx.check(f)
    if not f:
        raise ValueError("Quotient by the zero polynomial")
    meet = intersect(I, Ideal(I.ctx, (f,)), oracle)
    return Ideal(I.ctx, tuple(g.exquo(f) for g in meet.gens))


def radical_member(I: Ideal, f: Polynomial, oracle: Optional[Oracle] = None) -> bool:
    """f is in the radical of I iff 1 is in I + (1 - t*f)."""
    I.ctx.check(f)
    ctx = I.ctx
    ext = _with_t(ctx)
    t = ext.aux_var(0)
    gens = [ctx.lift(g, ext) for g in I.nonzero_gens] + [1 - t * ctx.lift(f, ext)]
    return _oracle(oracle).buchberger(Ideal(ext, tuple(gens))).is_unit


def ideal_ops(I: Ideal, J: Optional[Ideal], op: Union[IdealOp, str], f: Optional[Polynomial] = None,
              oracle: Optional[Oracle] = None):
    op = IdealOp(op)
    if op == IdealOp.CONTAINS_POLY:
        return contains_poly(I, f, oracle)
    elif op == IdealOp.CONTAINS_IDEAL:
        return contains_ideal(I, J, oracle)
    elif op == IdealOp.EQUALS:
        return equals(I, J, oracle)
    elif op == IdealOp.INTERSECT:
        return intersect(I, J, oracle)
    elif op == IdealOp.QUOTIENT_BY:
        return quotient_by(I, f, oracle)
    else:
        return radical_member(I, f, oracle)


def ideal_height(I: Ideal, oracle: Optional[Oracle] = None) -> int:
    """Height of I, read off the initial ideal of its reduced basis."""
    if I.is_zero:
        return 0
    gb = _oracle(oracle).buchberger(I)
    if gb.is_unit:
        raise ValueError("The unit ideal has no height")
    return monomial_ideal_stats(gb.leading_monomials()).height
