import io
import json
import random
from typing import List, Tuple, Any

from lss.main import run
from lss.poly import RingContext, Polynomial


def run_cli(argv: List[str]) -> Tuple[int, str]:
    """Run the lss command in-process, returning the exit status and whatever went to stdout."""
    out = io.StringIO()
    code = run(argv, out)
    return code, out.getvalue()


def run_cli_json(argv: List[str]) -> Tuple[int, Any]:
    code, text = run_cli(argv)
    return code, json.loads(text) if text.strip() else None


def monomial(ctx: RingContext, xs=(), ys=()) -> Polynomial:
    """Product of x_v for v in xs and y_v for v in ys."""
    out = ctx.one
    for v in xs:
        out *= ctx.x(v)
    for v in ys:
        out *= ctx.y(v)
    return out


def random_poly(rng: random.Random, ctx: RingContext, terms: int = 3, degree: int = 2) -> Polynomial:
    """Up to `terms` terms of degree at most `degree` with coefficients in [-3, 3]. May be zero."""
    p = ctx.zero
    for _ in range(rng.randint(1, terms)):
        exponents = [0] * ctx.nvars
        for _ in range(rng.randint(0, degree)):
            exponents[rng.randrange(ctx.nvars)] += 1
        p += ctx.monomial(exponents) * rng.randint(-3, 3)
    return p
