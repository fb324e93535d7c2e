"""
Admissible paths and the elements of the combinatorial Groebner basis of a permanental edge ideal.

A path i = i_0, ..., i_r = j with i < j is admissible when every interior vertex is below i or above j. It
carries the monomial u = prod x_v (interior v > j) * prod y_v (interior v < i).
"""
from dataclasses import dataclass
from enum import Enum
from typing import Tuple, Optional, Dict, Any, FrozenSet

from lss.poly import RingContext, Polynomial
from lss.poly.text import render


class GBKind(Enum):
    TYPE_I = "I"
    TYPE_II = "II"
    TYPE_III = "III"
    TYPE_IV = "IV"


@dataclass(frozen=True)
class AdmissiblePath:
    seq: Tuple[int, ...]

    def __post_init__(self):
        if len(self.seq) < 2 or self.seq[0] >= self.seq[-1]:
            raise ValueError(f"Path {self.seq} must run from a smaller to a larger vertex")
        if len(set(self.seq)) != len(self.seq):
            raise ValueError(f"Path {self.seq} repeats a vertex")
        i, j = self.seq[0], self.seq[-1]
        bad = [v for v in self.interior if i < v < j]
        if bad:
            raise ValueError(f"Path {self.seq} is not admissible, interior vertices {bad} lie between {i} and {j}")

    @property
    def i(self) -> int:
        return self.seq[0]

    @property
    def j(self) -> int:
        return self.seq[-1]

    @property
    def length(self) -> int:
        return len(self.seq) - 1

    @property
    def is_odd(self) -> bool:
        return self.length % 2 == 1

    @property
    def parity(self) -> str:
        return "odd" if self.is_odd else "even"

    @property
    def interior(self) -> Tuple[int, ...]:
        return self.seq[1:-1]

    @property
    def vertices(self) -> FrozenSet[int]:
        return frozenset(self.seq)

    def u_x(self) -> Tuple[int, ...]:
        return tuple(sorted(v for v in self.interior if v > self.j))

    def u_y(self) -> Tuple[int, ...]:
        return tuple(sorted(v for v in self.interior if v < self.i))

    def u(self, ctx: RingContext) -> Polynomial:
        out = ctx.one
        for v in self.u_x():
            out *= ctx.x(v)
        for v in self.u_y():
            out *= ctx.y(v)
        return out


@dataclass(frozen=True)
class GBElement:
    poly: Polynomial
    kind: GBKind
    # admissible paths, followed by the pendant path for TYPE_IV
    witnesses: Tuple[Tuple[int, ...], ...]

    def to_json(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "poly": render(self.poly),
            "witnesses": [list(w) for w in self.witnesses]
        }


@dataclass(frozen=True)
class Certification:
    is_gb: Optional[bool]
    reduced_match: Optional[bool]
    initial_squarefree: Optional[bool]
    note: Optional[str] = None

    @property
    def skipped(self) -> bool:
        return self.is_gb is None

    @property
    def ok(self) -> bool:
        return bool(self.is_gb and self.reduced_match and self.initial_squarefree)

    def to_json(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "is_gb": self.is_gb,
            "reduced_match": self.reduced_match,
            "initial_squarefree": self.initial_squarefree
        }
        if self.note is not None:
            out["note"] = self.note
        return out
