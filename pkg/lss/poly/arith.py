from enum import Enum
from fractions import Fraction
from typing import Mapping, Sequence, Optional, Union

from sympy.polys.monomials import monomial_mul, monomial_lcm, monomial_gcd, monomial_div, monomial_deg

from lss.poly import Polynomial, Monomial, Ordering, PriorityOrder, RingMismatchError


class PolyOp(Enum):
    ADD = "add"
    SUB = "sub"
    MUL = "mul"


def same_ring(*polys: Polynomial):
    rings = {p.ring for p in polys}
    if len(rings) > 1:
        raise RingMismatchError(f"Operands live in {len(rings)} different rings: {sorted(str(r) for r in rings)}")


def poly_arith(a: Polynomial, b: Polynomial, op: Union[PolyOp, str]) -> Polynomial:
    same_ring(a, b)
    op = PolyOp(op)
    if op == PolyOp.ADD:
        return a + b
    elif op == PolyOp.SUB:
        return a - b
    else:
        return a * b


def compare(u: Monomial, v: Monomial, order: Optional[PriorityOrder] = None) -> Ordering:
    if len(u) != len(v):
        raise ValueError(f"Cannot compare monomials of length {len(u)} and {len(v)}")
    if order is None:
        order = PriorityOrder.lex(len(u))
    ku, kv = order(tuple(u)), order(tuple(v))
    if ku > kv:
        return Ordering.GT
    elif ku < kv:
        return Ordering.LT
    else:
        return Ordering.EQ


def leading_monomial(p: Polynomial) -> Monomial:
    if not p:
        raise ValueError("The zero polynomial has no leading term")
    return p.LM


def substitute(p: Polynomial, assignment: Mapping[int, Polynomial]) -> Polynomial:
    """
    Simultaneous substitution. Keys are positional variable indices, images must live in the ring of p.
    Variables missing from the assignment are left alone.
    """
    if not assignment:
        return p.copy()
    same_ring(p, *assignment.values())
    gens = p.ring.gens
    for index in assignment:
        if not 0 <= index < len(gens):
            raise ValueError(f"Variable index {index} is outside the ring")
    return p.compose([(gens[index], image) for index, image in sorted(assignment.items())])


def to_domain(domain, value):
    if isinstance(value, Fraction):
        if value.denominator == 0:
            raise ZeroDivisionError("division by zero")
        return domain.convert(value.numerator) / domain.convert(value.denominator)
    return domain.convert(value)


def evaluate(p: Polynomial, point: Sequence):
    """Exact value of p at a point given as one int, Fraction or domain element per variable."""
    ring = p.ring
    if len(point) != ring.ngens:
        raise ValueError(f"Expected {ring.ngens} coordinates, got {len(point)}")
    domain = ring.domain
    values = [to_domain(domain, v) for v in point]
    total = domain.zero
    for monom, coeff in p.items():
        term = coeff
        for value, e in zip(values, monom):
            if e:
                term *= value ** e
        total += term
    return total


def degree(u: Monomial) -> int:
    return monomial_deg(u)


def is_squarefree(u: Monomial) -> bool:
    return all(e <= 1 for e in u)


def divides(u: Monomial, v: Monomial) -> bool:
    """True iff u divides v."""
    return all(a <= b for a, b in zip(u, v))


def lcm(u: Monomial, v: Monomial) -> Monomial:
    return monomial_lcm(u, v)


def gcd(u: Monomial, v: Monomial) -> Monomial:
    return monomial_gcd(u, v)


def mul(u: Monomial, v: Monomial) -> Monomial:
    return monomial_mul(u, v)


def quotient(v: Monomial, u: Monomial) -> Optional[Monomial]:
    """v / u, or None when u does not divide v."""
    return monomial_div(v, u)


def support(u: Monomial):
    return frozenset(i for i, e in enumerate(u) if e)
