import heapq
import logging
from typing import List, Optional, Sequence, Dict, Tuple

from lss.groebner import Budget, BudgetExhausted, Ideal, ReducedGB
from lss.log import LoggingMixin
from lss.metrics import MetricsMixin
from lss.poly import Polynomial, PriorityOrder, RingContext
from lss.poly.arith import lcm, gcd, degree, divides, quotient


def _in_order(polys: Sequence[Polynomial], order: Optional[PriorityOrder]) -> List[Polynomial]:
    if order is None:
        return list(polys)
    return [p.set_ring(p.ring.clone(order=order)) for p in polys]


class Oracle(LoggingMixin, MetricsMixin):
    """
    Division, S-polynomials and Buchberger's algorithm under the normal selection strategy: the pending pair
    with the smallest lcm degree goes first, ties broken by pair indices. Coprime leading monomials are
    skipped, and with chain_criterion the Gebauer-Moeller chain test is applied as well.

    Reduced bases are cached per (ideal, order) for the lifetime of the oracle.
    """
    def __init__(self, budget: Optional[Budget] = None, chain_criterion: bool = False):
        LoggingMixin.__init__(self, logging.getLogger("lss.oracle"))
        self.budget = budget if budget is not None else Budget()
        self.chain_criterion = chain_criterion
        self._cache: Dict[Tuple[Ideal, PriorityOrder], ReducedGB] = dict()

    def normal_form(self, p: Polynomial, basis: Sequence[Polynomial],
                    order: Optional[PriorityOrder] = None) -> Polynomial:
        (q,) = _in_order([p], order)
        divisors = [g for g in _in_order(basis, order) if g]
        if not divisors:
            return q
        return q.rem(divisors)

    def s_polynomial(self, f: Polynomial, g: Polynomial, order: Optional[PriorityOrder] = None) -> Polynomial:
        if not f or not g:
            raise ValueError("S-polynomial of the zero polynomial")
        f, g = _in_order([f, g], order)
        f, g = f.monic(), g.monic()
        m = lcm(f.LM, g.LM)
        return f.mul_monom(quotient(m, f.LM)) - g.mul_monom(quotient(m, g.LM))

    def interreduce(self, polys: Sequence[Polynomial], order: Optional[PriorityOrder] = None) -> List[Polynomial]:
        """
        Monic, minimal and fully reduced version of polys, sorted by leading monomial from highest. Only a
        reduced Groebner basis when polys already is a Groebner basis.
        """
        work = [p.monic() for p in _in_order(polys, order) if p]
        if not work:
            return []
        key = work[0].ring.order
        if any(p.is_ground for p in work):
            return [work[0].ring.one]
        work.sort(key=lambda p: key(p.LM))
        minimal: List[Polynomial] = []
        for p in work:
            if not any(divides(q.LM, p.LM) for q in minimal):
                minimal.append(p)
        reduced = []
        for i, p in enumerate(minimal):
            others = minimal[:i] + minimal[i + 1:]
            r = p.rem(others) if others else p
            reduced.append(r.monic())
        reduced.sort(key=lambda p: key(p.LM), reverse=True)
        return reduced

    def buchberger(self, ideal: Ideal, order: Optional[PriorityOrder] = None) -> ReducedGB:
        if order is None:
            order = ideal.ctx.default_order
        cached = self._cache.get((ideal, order))
        if cached is not None:
            return cached
        with self.timer("buchberger").time():
            basis = self._buchberger(ideal.ctx, ideal.nonzero_gens, order)
        result = ReducedGB(ideal.ctx, order, tuple(basis))
        self._cache[(ideal, order)] = result
        return result

    def _buchberger(self, ctx: RingContext, gens: List[Polynomial], order: PriorityOrder) -> List[Polynomial]:
        ring = ctx.ordered_ring(order)
        G: List[Polynomial] = []
        for g in gens:
            g = g.set_ring(ring).monic()
            if g not in G:
                G.append(g)
        if not G:
            return []
        if any(g.is_ground for g in G):
            return [ring.one]

        pending: List[Tuple[int, int, int]] = []
        live = set()

        def add_pair(i, j):
            heapq.heappush(pending, (degree(lcm(G[i].LM, G[j].LM)), i, j))
            live.add((i, j))

        for j in range(len(G)):
            for i in range(j):
                add_pair(i, j)

        processed = 0
        while pending:
            _, i, j = heapq.heappop(pending)
            live.discard((i, j))
            processed += 1
            if self.budget.max_pairs is not None and processed > self.budget.max_pairs:
                self.warning(f"Giving up after {processed - 1} pairs with a basis of {len(G)}")
                raise BudgetExhausted("pair count", self.budget.max_pairs)
            f, g = G[i], G[j]
            if not any(gcd(f.LM, g.LM)):
                self.counter("pairs", "skipped").inc()
                continue
            if self.chain_criterion and self._chain(G, i, j, live):
                self.counter("pairs", "skipped").inc()
                continue
            h = self.s_polynomial(f, g).rem(G)
            if not h:
                self.counter("pairs", "zero").inc()
                continue
            self.counter("pairs", "reduced").inc()
            h = h.monic()
            if h.is_ground:
                self.debug(f"Unit ideal after {processed} pairs")
                return [ring.one]
            G.append(h)
            if len(G) > self.budget.max_basis:
                self.warning(f"Giving up with {len(G)} basis elements after {processed} pairs")
                raise BudgetExhausted("basis size", self.budget.max_basis)
            k = len(G) - 1
            for m in range(k):
                add_pair(m, k)
        self.debug(f"Processed {processed} pairs, {len(G)} elements before interreduction")
        return self.interreduce(G)

    @staticmethod
    def _chain(G: List[Polynomial], i: int, j: int, live) -> bool:
        m = lcm(G[i].LM, G[j].LM)
        for k in range(len(G)):
            if k == i or k == j:
                continue
            if divides(G[k].LM, m) and (min(i, k), max(i, k)) not in live and (min(j, k), max(j, k)) not in live:
                return True
        return False
