from dataclasses import dataclass
from typing import Tuple, Dict, Any

from lss.graph import ComponentData


@dataclass(frozen=True)
class PrimeComponent:
    """The combinatorial data of Q_S(G): the deleted set S and the components of G minus S."""
    n: int
    S: Tuple[int, ...]
    comps: Tuple[ComponentData, ...]

    @property
    def b(self) -> int:
        return sum(1 for c in self.comps if c.is_bipartite)

    @property
    def c(self) -> int:
        return len(self.comps)

    def height(self) -> int:
        return len(self.S) + self.n - self.b

    @property
    def label(self) -> str:
        return "Q_{" + ",".join(str(v) for v in self.S) + "}"

    def to_json(self) -> Dict[str, Any]:
        return {
            "S": list(self.S),
            "height": self.height(),
            "b": self.b,
            "components": [c.to_json() for c in self.comps]
        }
