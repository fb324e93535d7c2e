from fractions import Fraction
from tokenize import TokenError
from typing import Optional

from sympy import Symbol
from sympy.parsing.sympy_parser import parse_expr, standard_transformations, implicit_multiplication, \
    convert_xor

from lss.poly import Polynomial, PriorityOrder, RingContext, FieldSpec

_TRANSFORMATIONS = standard_transformations + (convert_xor, implicit_multiplication)


def _coefficient_text(coeff, domain):
    """Returns (negative, magnitude) where magnitude is None for a unit coefficient."""
    if domain.is_FiniteField:
        value = int(coeff) % domain.characteristic()
        return False, None if value == 1 else str(value)
    num, den = int(coeff.numerator), int(coeff.denominator)
    negative = num < 0
    num = abs(num)
    if num == 1 and den == 1:
        return negative, None
    return negative, str(num) if den == 1 else f"{num}/{den}"


def _monomial_text(monom, names):
    factors = []
    for name, e in zip(names, monom):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return "*".join(factors)


def render(p: Polynomial, order: Optional[PriorityOrder] = None) -> str:
    """Terms in descending order, e.g. "x1*y2 + x2*y1"."""
    if not p:
        return "0"
    names = [str(s) for s in p.ring.symbols]
    domain = p.ring.domain
    out = []
    for monom, coeff in p.terms(order):
        negative, magnitude = _coefficient_text(coeff, domain)
        body = _monomial_text(monom, names)
        if not body:
            term = magnitude or "1"
        elif magnitude is None:
            term = body
        else:
            term = f"{magnitude}*{body}"
        if not out:
            out.append(f"-{term}" if negative else term)
        else:
            out.append(f" - {term}" if negative else f" + {term}")
    return "".join(out)


def parse_polynomial(text: str, ctx: RingContext) -> Polynomial:
    """
    Parse integer or a/b rational coefficients, optional '*' and '^' exponents. Over F_p the rational
    coefficients are mapped through num * den^-1.
    """
    symbols = {name: Symbol(name) for name in ctx.var_names}
    try:
        expr = parse_expr(text, local_dict=dict(symbols), transformations=_TRANSFORMATIONS)
    except (SyntaxError, TokenError, TypeError, AttributeError) as e:
        raise ValueError(f"Cannot parse polynomial {text!r}: {e}")
    unknown = expr.free_symbols - set(symbols.values())
    if unknown:
        raise ValueError(f"Unknown variables {sorted(str(s) for s in unknown)} in {text!r}")
    rational = ctx.with_field(FieldSpec.rationals()).ring
    try:
        qq_poly = rational.from_expr(expr)
    except Exception as e:
        raise ValueError(f"{text!r} is not a polynomial in {', '.join(ctx.var_names)}: {e}")
    terms = {}
    for monom, coeff in qq_poly.items():
        try:
            c = ctx.field.element(Fraction(int(coeff.numerator), int(coeff.denominator)))
        except ZeroDivisionError:
            raise ValueError(f"Coefficient {coeff} of {text!r} is undefined in {ctx.field}")
        if c:
            terms[monom] = c
    return ctx.ring.from_dict(terms)
