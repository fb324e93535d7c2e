"""
Ideals, reduced Groebner bases and the resource budget of the Buchberger oracle.
"""
from dataclasses import dataclass
from typing import Tuple, Optional, List

from lss.poly import RingContext, Polynomial, PriorityOrder, Monomial
from lss.settings import EngineConfig


class BudgetExhausted(RuntimeError):
    """The oracle hit its basis or pair cap. Raised instead of answering."""

    def __init__(self, what: str, limit: int):
        super().__init__(f"oracle budget exhausted: {what} exceeded {limit}")
        self.what = what
        self.limit = limit

    def __reduce__(self):
        return self.__class__, (self.what, self.limit)


@dataclass(frozen=True)
class Budget:
    max_basis: int = 20000
    max_pairs: Optional[int] = 2000000

    @classmethod
    def from_config(cls, config: EngineConfig) -> "Budget":
        return cls(config.max_basis(), config.max_pairs())

    @classmethod
    def unlimited(cls) -> "Budget":
        return cls(2 ** 62, None)


@dataclass(frozen=True)
class Ideal:
    ctx: RingContext
    gens: Tuple[Polynomial, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "gens", tuple(self.gens))
        self.ctx.check(*self.gens)

    @classmethod
    def zero(cls, ctx: RingContext) -> "Ideal":
        return cls(ctx, ())

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    @property
    def nonzero_gens(self) -> List[Polynomial]:
        return [g for g in self.gens if g]

    @property
    def is_zero(self) -> bool:
        return not self.nonzero_gens

    def lift(self, target: RingContext) -> "Ideal":
        return Ideal(target, tuple(self.ctx.lift(g, target) for g in self.gens))


@dataclass(frozen=True)
class ReducedGB:
    """Monic, fully inter-reduced basis sorted by leading monomial, highest first."""
    ctx: RingContext
    order: PriorityOrder
    basis: Tuple[Polynomial, ...]

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    @property
    def is_unit(self) -> bool:
        return len(self.basis) == 1 and self.basis[0] == 1

    @property
    def is_zero(self) -> bool:
        return not self.basis

    def leading_monomials(self) -> List[Monomial]:
        return [g.LM for g in self.basis]

    def reduce(self, p: Polynomial) -> Polynomial:
        ring = self.ctx.ordered_ring(self.order)
        q = p.set_ring(ring)
        if not self.basis:
            return q
        return q.rem(list(self.basis))

    def contains(self, p: Polynomial) -> bool:
        return not self.reduce(p)
