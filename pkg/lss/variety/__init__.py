"""
Exact samples of the components V_S of the variety of orthogonal representations of a graph in the plane.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Dict, Any

from lss.graph import ComponentData

Vector = Tuple[Fraction, Fraction]
ZERO: Vector = (Fraction(0), Fraction(0))


@dataclass(frozen=True)
class RepresentationSample:
    S: Tuple[int, ...]
    # vertex -> (x_i, y_i)
    assignment: Dict[int, Vector]
    comps: Tuple[ComponentData, ...] = ()
    seed: int = 0

    def vector(self, v: int) -> Vector:
        return self.assignment.get(v, ZERO)

    def point(self, n: int):
        """Coordinates ordered x_1..x_n, y_1..y_n."""
        return [self.vector(v)[0] for v in range(1, n + 1)] + [self.vector(v)[1] for v in range(1, n + 1)]

    def is_zero(self) -> bool:
        return all(vec == ZERO for vec in self.assignment.values())

    def to_json(self) -> Dict[str, Any]:
        return {
            "S": list(self.S),
            "assignment": {str(v): [str(a), str(b)] for v, (a, b) in sorted(self.assignment.items())}
        }
