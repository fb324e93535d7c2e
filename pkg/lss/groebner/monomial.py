from dataclasses import dataclass
from itertools import combinations
from typing import List, Sequence, FrozenSet

from lss.poly import Monomial
from lss.poly.arith import is_squarefree, support


@dataclass(frozen=True)
class MonomialIdealStats:
    height: int
    is_squarefree: bool
    # minimal primes as sets of variable indices
    minimal_primes: List[FrozenSet[int]]


def minimal_supports(monomials: Sequence[Monomial]) -> List[FrozenSet[int]]:
    supports = sorted({support(m) for m in monomials}, key=lambda s: (len(s), sorted(s)))
    minimal: List[FrozenSet[int]] = []
    for s in supports:
        if not any(t <= s for t in minimal):
            minimal.append(s)
    return minimal


def monomial_ideal_stats(monomials: Sequence[Monomial]) -> MonomialIdealStats:
    """
    Height and minimal primes of a monomial ideal. The minimal primes are generated by the minimal variable
    sets meeting the support of every generator; they are found by exhaustive search in increasing size.
    """
    if not monomials:
        raise ValueError("Expected at least one monomial")
    supports = minimal_supports(monomials)
    if any(not s for s in supports):
        raise ValueError("The unit ideal has no minimal primes")
    variables = sorted(set().union(*supports))
    transversals: List[FrozenSet[int]] = []
    for size in range(1, len(variables) + 1):
        for chosen in combinations(variables, size):
            candidate = frozenset(chosen)
            if any(t <= candidate for t in transversals):
                continue
            if all(candidate & s for s in supports):
                transversals.append(candidate)
    return MonomialIdealStats(
        height=min(len(t) for t in transversals),
        is_squarefree=all(is_squarefree(m) for m in monomials),
        minimal_primes=transversals
    )
