"""
Exact coefficient fields, monomial orders and ring contexts.

Polynomials are sympy sparse ``PolyElement`` values (a dict from exponent tuple to coefficient) living in a
``PolyRing`` built by :class:`RingContext`. Variables are positional: auxiliary variables first, then
x_1..x_n, then y_1..y_n. Names are only for presentation.
"""
import re
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Tuple, Sequence, Union, Optional

from sympy import isprime
from sympy.ntheory import sqrt_mod
from sympy.polys.domains import QQ, GF
from sympy.polys.orderings import MonomialOrder
from sympy.polys.rings import PolyRing, PolyElement

Monomial = Tuple[int, ...]
Polynomial = PolyElement

_FIELD_RE = re.compile(r"Fp:(\d+)|F(\d+)|GF\((\d+)\)")


class RingMismatchError(ValueError):
    """Operands live in different ring contexts."""


class Ordering(IntEnum):
    LT = -1
    EQ = 0
    GT = 1

    def __repr__(self):
        return self.name

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class FieldSpec:
    """Either the rationals (p == 0) or the prime field F_p."""
    p: int = 0

    def __post_init__(self):
        if self.p != 0 and (self.p < 2 or not isprime(self.p)):
            raise ValueError(f"F_{self.p} is not a prime field, {self.p} is not prime")

    def __str__(self):
        return "Q" if self.p == 0 else f"Fp:{self.p}"

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(p)

    @classmethod
    def parse(cls, s: str) -> "FieldSpec":
        """Accepts "Q", "QQ", "Fp:<p>", "F<p>" and "GF(<p>)"."""
        text = s.strip()
        if text in ("Q", "QQ"):
            return cls.rationals()
        match = _FIELD_RE.fullmatch(text)
        if match:
            return cls.prime(int(next(g for g in match.groups() if g is not None)))
        raise ValueError(f"Cannot parse field {s!r}. Expected Q or Fp:<p> (e.g., Fp:5)")

    @property
    def is_rational(self) -> bool:
        return self.p == 0

    @property
    def characteristic(self) -> int:
        return self.p

    @cached_property
    def domain(self):
        return QQ if self.p == 0 else GF(self.p)

    def has_sqrt_minus_one(self) -> bool:
        if self.p == 0:
            return False
        return self.p == 2 or self.p % 4 == 1

    def sqrt_minus_one(self):
        """The smallest c in [0, p) with c^2 = -1."""
        if not self.has_sqrt_minus_one():
            raise ValueError(f"sqrt(-1) does not exist in {self}")
        return self.domain.convert(sqrt_mod(self.p - 1, self.p))

    def element(self, value: Union[int, Fraction, str]):
        """Convert an int, Fraction or "a/b" string into a field element."""
        if isinstance(value, str):
            value = Fraction(value.strip())
        if isinstance(value, Fraction):
            if value.denominator == 1:
                return self.domain.convert(value.numerator)
            return self.divide(self.domain.convert(value.numerator), self.domain.convert(value.denominator))
        return self.domain.convert(value)

    def divide(self, a, b):
        if not b:
            raise ZeroDivisionError(f"division by zero in {self}")
        return a / b


class PriorityOrder(MonomialOrder):
    """
    Lexicographic order along an explicit variable priority list, highest priority first. The first
    elim_block_size entries of the priority list form an elimination block.
    """
    alias = "lex"
    is_global = True

    def __init__(self, priority: Sequence[int], elim_block_size: int = 0):
        self.priority = tuple(priority)
        if sorted(self.priority) != list(range(len(self.priority))):
            raise ValueError(f"Priority {self.priority} is not a permutation of the variable indices")
        if not 0 <= elim_block_size <= len(self.priority):
            raise ValueError(f"Elimination block of size {elim_block_size} does not fit {len(self.priority)} variables")
        self.elim_block_size = elim_block_size
        self._identity = self.priority == tuple(range(len(self.priority)))

    @classmethod
    def lex(cls, nvars: int, elim_block_size: int = 0) -> "PriorityOrder":
        return cls(range(nvars), elim_block_size)

    def __call__(self, monomial):
        if self._identity:
            return monomial
        return tuple(monomial[i] for i in self.priority)

    def __repr__(self):
        return f"PriorityOrder({list(self.priority)}, elim_block_size={self.elim_block_size})"

    def __eq__(self, other):
        return isinstance(other, PriorityOrder) and self.priority == other.priority \
            and self.elim_block_size == other.elim_block_size

    def __hash__(self):
        return hash((self.__class__.__name__, self.priority, self.elim_block_size))

    @property
    def nvars(self) -> int:
        return len(self.priority)


@lru_cache(maxsize=None)
def _poly_ring(names: Tuple[str, ...], field: FieldSpec, order: PriorityOrder) -> PolyRing:
    return PolyRing(names, field.domain, order)


@dataclass(frozen=True)
class RingContext:
    """
    T = K[aux.., x_1..x_n, y_1..y_n] for d = 2. For other d the graph variables are x{i}_{k} in blocks
    k = 1..d, each block ordered by vertex.
    """
    n: int
    field: FieldSpec = FieldSpec()
    aux: Tuple[str, ...] = ()
    d: int = 2

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"Vertex count must be non-negative, got {self.n}")
        if self.d < 1:
            raise ValueError(f"Representation dimension must be positive, got {self.d}")
        if len(self.aux) + self.d * self.n == 0:
            raise ValueError("A ring context needs at least one variable")

    @cached_property
    def var_names(self) -> Tuple[str, ...]:
        if self.d == 2:
            graph_names = [f"x{i}" for i in range(1, self.n + 1)] + [f"y{i}" for i in range(1, self.n + 1)]
        else:
            graph_names = [f"x{i}_{k}" for k in range(1, self.d + 1) for i in range(1, self.n + 1)]
        return tuple(self.aux) + tuple(graph_names)

    @property
    def nvars(self) -> int:
        return len(self.aux) + self.d * self.n

    @property
    def offset(self) -> int:
        return len(self.aux)

    @cached_property
    def default_order(self) -> PriorityOrder:
        return PriorityOrder.lex(self.nvars, len(self.aux))

    @cached_property
    def ring(self) -> PolyRing:
        return _poly_ring(self.var_names, self.field, self.default_order)

    def ordered_ring(self, order: Optional[PriorityOrder] = None) -> PolyRing:
        if order is None or order == self.default_order:
            return self.ring
        if order.nvars != self.nvars:
            raise ValueError(f"{order} does not match the {self.nvars} variables of this ring")
        return _poly_ring(self.var_names, self.field, order)

    @property
    def domain(self):
        return self.field.domain

    @property
    def zero(self) -> Polynomial:
        return self.ring.zero

    @property
    def one(self) -> Polynomial:
        return self.ring.one

    def var_index(self, vertex: int, k: int = 1) -> int:
        """Positional index of the k-th coordinate variable of a vertex (k = 1 is x, k = 2 is y)."""
        if not 1 <= vertex <= self.n:
            raise ValueError(f"Vertex {vertex} is outside 1..{self.n}")
        if not 1 <= k <= self.d:
            raise ValueError(f"Coordinate {k} is outside 1..{self.d}")
        return self.offset + (k - 1) * self.n + (vertex - 1)

    def var(self, vertex: int, k: int = 1) -> Polynomial:
        return self.ring.gens[self.var_index(vertex, k)]

    def x(self, vertex: int) -> Polynomial:
        return self.var(vertex, 1)

    def y(self, vertex: int) -> Polynomial:
        return self.var(vertex, 2)

    def aux_var(self, index: int = 0) -> Polynomial:
        return self.ring.gens[index]

    def constant(self, value) -> Polynomial:
        return self.ring.ground_new(self.field.element(value))

    def monomial(self, exponents: Sequence[int]) -> Polynomial:
        if len(exponents) != self.nvars:
            raise ValueError(f"Expected {self.nvars} exponents, got {len(exponents)}")
        return self.ring.term_new(tuple(exponents), self.domain.one)

    def check(self, *polys: Polynomial):
        for p in polys:
            if not isinstance(p, PolyElement) or p.ring.symbols != self.ring.symbols \
                    or p.ring.domain != self.ring.domain:
                raise RingMismatchError(f"{p!r} does not belong to {self}")

    def with_aux(self, *names: str) -> "RingContext":
        """Same graph variables, extended by auxiliary variables ahead of everything else."""
        clash = set(names) & set(self.var_names)
        if clash:
            raise ValueError(f"Auxiliary names {sorted(clash)} clash with existing variables")
        return RingContext(self.n, self.field, tuple(names) + tuple(self.aux), self.d)

    def with_field(self, field: FieldSpec) -> "RingContext":
        return RingContext(self.n, field, self.aux, self.d)

    def lift(self, p: Polynomial, target: "RingContext") -> Polynomial:
        """Embed p into a context with more leading auxiliary variables."""
        self.check(p)
        extra = target.offset - self.offset
        if extra < 0 or target.var_names[extra:] != self.var_names:
            raise RingMismatchError(f"Cannot embed {self} into {target}")
        pad = (0,) * extra
        return target.ring.from_dict({pad + m: c for m, c in p.items()})

    def project(self, p: Polynomial, target: "RingContext") -> Polynomial:
        """Drop leading auxiliary variables; p must not involve them."""
        self.check(p)
        extra = self.offset - target.offset
        if extra < 0 or self.var_names[extra:] != target.var_names:
            raise RingMismatchError(f"Cannot project {self} onto {target}")
        terms = {}
        for m, c in p.items():
            if any(m[:extra]):
                raise ValueError(f"Term {m} still involves eliminated variables")
            terms[m[extra:]] = c
        return target.ring.from_dict(terms)
