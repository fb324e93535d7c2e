from fractions import Fraction
from typing import Iterable, Dict, Any, Optional

from lss.graph import Graph
from lss.graph.analysis import components
from lss.groebner import Ideal
from lss.ideals.builders import build_LG
from lss.poly import RingContext
from lss.poly.arith import evaluate
from lss.variety import RepresentationSample, Vector, ZERO
from lss.variety.lcg import Lcg64

DIRECTION_MAX = 5


def _direction(rng: Lcg64) -> Vector:
    while True:
        a = rng.randint(-DIRECTION_MAX, DIRECTION_MAX)
        b = rng.randint(-DIRECTION_MAX, DIRECTION_MAX)
        if a or b:
            return Fraction(a), Fraction(b)


def _scale(rng: Lcg64, scale_max: int) -> Fraction:
    return Fraction(rng.randint(-scale_max, scale_max), rng.randint(1, max(1, scale_max)))


def sample_VS(Gbar: Graph, S: Iterable[int], seed: int, scale_max: int = 5) -> RepresentationSample:
    """
    Every bipartite component of Gbar minus S gets a direction (a, b). Its first block is sent to rational
    multiples of (a, b), its second block to multiples of (-b, a). S and the non-bipartite components go to
    the origin. scale_max = 0 gives the zero representation.
    """
    S = tuple(sorted(set(S)))
    comps = tuple(components(Gbar, S))
    rng = Lcg64(seed)
    assignment: Dict[int, Vector] = {v: ZERO for v in Gbar.vertices}
    for comp in comps:
        if not comp.is_bipartite:
            continue
        a, b = _direction(rng)
        for v in comp.blocks[0]:
            s = _scale(rng, scale_max)
            assignment[v] = (s * a, s * b)
        for v in comp.blocks[1]:
            s = _scale(rng, scale_max)
            assignment[v] = (-s * b, s * a)
    return RepresentationSample(S, assignment, comps, seed)


def check_vanishing(sample: RepresentationSample, Gbar: Graph, ideal: Optional[Ideal] = None) -> bool:
    """Exact evaluation of every generator of L_Gbar at the sample. Sweeps pass L_Gbar in once per graph."""
    if ideal is None:
        ideal = build_LG(Gbar, RingContext(Gbar.n))
    point = sample.point(Gbar.n)
    return all(not evaluate(g, point) for g in ideal.gens)


def _det(u: Vector, v: Vector) -> Fraction:
    return u[0] * v[1] - u[1] * v[0]


def _dot(u: Vector, v: Vector) -> Fraction:
    return u[0] * v[0] + u[1] * v[1]


def block_geometry_holds(sample: RepresentationSample) -> bool:
    """
    The origin for S and non-bipartite components; for each bipartite component one line through the origin
    carrying the first block and its perpendicular carrying the second.
    """
    for v in sample.S:
        if sample.vector(v) != ZERO:
            return False
    for comp in sample.comps:
        if not comp.is_bipartite:
            if any(sample.vector(v) != ZERO for v in comp.vertices):
                return False
            continue
        first = [sample.vector(v) for v in comp.blocks[0]]
        second = [sample.vector(v) for v in comp.blocks[1]]
        for block in (first, second):
            if any(_det(u, w) for u in block for w in block):
                return False
        if any(_dot(u, w) for u in first for w in second):
            return False
    return True


def perturb(sample: RepresentationSample, vertex: int) -> RepresentationSample:
    """Shift the x coordinate of one vertex by 1."""
    x, y = sample.vector(vertex)
    assignment = dict(sample.assignment)
    assignment[vertex] = (x + 1, y)
    return RepresentationSample(sample.S, assignment, sample.comps, sample.seed)


def sample_from_json(obj: Dict[str, Any], Gbar: Graph) -> RepresentationSample:
    try:
        S = tuple(sorted(int(v) for v in obj["S"]))
        assignment = {int(v): (Fraction(a), Fraction(b)) for v, (a, b) in obj["assignment"].items()}
    except (KeyError, TypeError, ValueError) as e:
        raise ValueError(f"Malformed sample JSON: {e}")
    return RepresentationSample(S, assignment, tuple(components(Gbar, S)))
