from dataclasses import dataclass
from typing import Tuple, Optional, Dict, Any

from lss.graph import Graph
from lss.ideals import PrimeComponent
from lss.poly import FieldSpec

SQRT_HYPOTHESIS = "sqrt(-1) not in K"
HYPOTHESIS_VIOLATED = "hypothesis violated: sqrt(-1) in K"


@dataclass(frozen=True)
class DecompositionReport:
    """
    dim, unmixed and prime are theorems only when sqrt(-1) is not in K. Over other fields they are None and
    hypothesis carries the violation marker. radical holds in every field, with the reason naming the case.
    """
    graph: Graph
    field: FieldSpec
    b: int
    minimal_primes: Tuple[PrimeComponent, ...]
    dim: Optional[int]
    unmixed: Optional[bool]
    prime: Optional[bool]
    radical: bool
    radical_reason: str
    hypothesis: str
    verified: Optional[bool] = None

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def hypothesis_violated(self) -> bool:
        return self.hypothesis == HYPOTHESIS_VIOLATED

    def to_json(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "graph": self.graph.to_json(),
            "field": str(self.field),
            "n": self.n,
            "b": self.b,
            "minimal_primes": [p.to_json() for p in self.minimal_primes],
            "dim": self.dim,
            "unmixed": self.unmixed,
            "prime": self.prime,
            "radical": {"value": self.radical, "reason": self.radical_reason},
            "hypothesis": self.hypothesis
        }
        if self.verified is not None:
            out["verified"] = self.verified
        return out
