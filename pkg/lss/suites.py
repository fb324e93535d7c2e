"""
Verification suites. Every job is a module-level function over picklable arguments returning a list of
CheckResult, so the scheduler can ship it to a worker process.

    ikn      quadratic Groebner bases, heights, non-zero-divisors and the field trichotomy of I_{K_n}
    gb       combinatorial Groebner basis certification, the phi transform and the binomial edge transform
    char2    non-radical witnesses over F_2
    decomp   decomposition, minimal primes, containment, dimension, unmixedness and primeness
    variety  exact vanishing of sampled orthogonal representations
"""
import logging
from dataclasses import dataclass
from itertools import combinations, islice
from typing import List, Optional, Callable, Tuple, Sequence

from lss.decomp.classify import classify, verify_decomposition
from lss.decomp.primes import qs_contains, oracle_qs_contains, oracle_minimal_sets, all_subsets
from lss.gbasis.certify import gb_certify, elements_in_ideal
from lss.gbasis.char2 import char2_nonradical_witness
from lss.gbasis.construct import combinatorial_gb
from lss.graph import Graph
from lss.graph.analysis import enumerate_M, connectivity_class
from lss.graph.presets import all_graphs, preset
from lss.groebner import Budget, Ideal
from lss.groebner.ideals import quotient_by, equals, intersect, contains_ideal, radical_member, ideal_height
from lss.groebner.monomial import monomial_ideal_stats
from lss.groebner.oracle import Oracle
from lss.ideals.builders import build_IKn, build_IKmn, build_PiG, build_LG, phi_transform, \
    binomial_edge_transform, build_JG
from lss.log import LoggingMixin
from lss.metrics import MetricsMixin
from lss.poly import RingContext, FieldSpec
from lss.scheduler import Scheduler
from lss.variety.sampler import sample_VS, check_vanishing, block_geometry_holds

SUITES = ("ikn", "gb", "char2", "decomp", "variety")

GB_PRESETS = ("cycle:5", "path:5", "complete:4", "complement:butterfly")
DECOMP_GRAPHS = ("complete:2", "path:3", "cycle:3", "cycle:4", "paw", "star:3")
CHAR2_GRAPHS = ("cycle:3", "cycle:5", "cycle:4")
# graphs per job in the dimension sweep
DIM_CHUNK = 4096


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    # None when the check does not apply
    passed: Optional[bool]
    detail: str = ""

    @property
    def status(self) -> str:
        if self.passed is None:
            return "SKIP"
        return "PASS" if self.passed else "FAIL"

    def to_json(self):
        out = {"suite": self.suite, "name": self.name, "status": self.status}
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass(frozen=True)
class SuiteOptions:
    n_max: int = 4
    decompose_n_max: int = 4
    dim_n_max: int = 6
    prime_n_max: int = 5
    variety_n_max: int = 5
    seeds: int = 20
    seed: int = 0
    scale_max: int = 5
    budget: Budget = Budget()
    prune: bool = True
    # (preset, degree bound) for the char2 graphs; a missing preset searches up to 2(n-1)
    char2_bounds: Tuple[Tuple[str, int], ...] = ()
    chain_criterion: bool = False

    def oracle(self) -> Oracle:
        return Oracle(self.budget, self.chain_criterion)


def _graph_label(G: Graph) -> str:
    return f"n={G.n} edges={G.sorted_edges()}"


# ikn

def ikn_quadratic(n: int, m: int, opts: SuiteOptions) -> List[CheckResult]:
    """m = 0 stands for I_{K_n}, otherwise I_{K_{m,n-m}}."""
    oracle = opts.oracle()
    ctx = RingContext(n)
    ideal = build_IKn(n, ctx) if m == 0 else build_IKmn(m, n, ctx)
    label = f"I_{{K_{n}}}" if m == 0 else f"I_{{K_{{{m},{n - m}}}}}"
    gens = ideal.nonzero_gens
    closed = all(not oracle.normal_form(oracle.s_polynomial(f, g), gens) for f, g in combinations(gens, 2))
    reduced = tuple(oracle.interreduce(gens)) == oracle.buchberger(ideal).basis
    return [CheckResult("ikn", f"quadratic GB {label}", closed and reduced,
                        "" if closed and reduced else f"S-pairs closed={closed}, reduced match={reduced}")]


def ikn_heights(n: int, opts: SuiteOptions) -> List[CheckResult]:
    oracle = opts.oracle()
    ctx = RingContext(n)
    out = []
    complete = build_IKn(n, ctx)
    h = monomial_ideal_stats([g.LM for g in complete.nonzero_gens]).height
    out.append(CheckResult("ikn", f"height ini I_{{K_{n}}} = {n}",
                           h == n and ideal_height(complete, oracle) == n, f"got {h}"))
    for m in range(1, n):
        bip = build_IKmn(m, n, ctx)
        h = monomial_ideal_stats([g.LM for g in bip.nonzero_gens]).height
        out.append(CheckResult("ikn", f"height ini I_{{K_{{{m},{n - m}}}}} = {n - 1}",
                               h == n - 1 and ideal_height(bip, oracle) == n - 1, f"got {h}"))
    return out


def ikn_nonzerodivisors(label: str, opts: SuiteOptions) -> List[CheckResult]:
    oracle = opts.oracle()
    kind, _, args = label.partition(":")
    sizes = [int(a) for a in args.split(",")]
    n = sum(sizes)
    ctx = RingContext(n)
    ideal = build_IKn(n, ctx) if kind == "complete" else build_IKmn(sizes[0], n, ctx)
    bad = [str(v) for v in ctx.ring.gens if not equals(quotient_by(ideal, v, oracle), ideal, oracle)]
    return [CheckResult("ikn", f"(I : v) = I for every variable v, I = {label}", not bad,
                        f"fails for {', '.join(bad)}" if bad else "")]


def ikn_trichotomy(opts: SuiteOptions) -> List[CheckResult]:
    out = []
    ctx5 = RingContext(3, FieldSpec.prime(5))
    c = ctx5.field.sqrt_minus_one()
    P1 = Ideal(ctx5, tuple(ctx5.x(i) + ctx5.y(i).mul_ground(c) for i in range(1, 4)))
    P2 = Ideal(ctx5, tuple(ctx5.x(i) - ctx5.y(i).mul_ground(c) for i in range(1, 4)))
    oracle = opts.oracle()
    out.append(CheckResult("ikn", "F_5: I_{K_3} = P_1 ∩ P_2",
                           equals(intersect(P1, P2, oracle), build_IKn(3, ctx5), oracle)))

    ctx2 = RingContext(3, FieldSpec.prime(2))
    linear = Ideal(ctx2, tuple(ctx2.x(i) + ctx2.y(i) for i in range(1, 4)))
    ideal = build_IKn(3, ctx2)
    out.append(CheckResult("ikn", "F_2: I_{K_3} ⊆ (x_i + y_i)", contains_ideal(linear, ideal, oracle)))
    out.append(CheckResult("ikn", "F_2: x_i + y_i in the radical of I_{K_3}",
                           all(radical_member(ideal, g, oracle) for g in linear.gens)))

    for field in (FieldSpec.rationals(), FieldSpec.prime(3)):
        ctx = RingContext(3, field)
        ideal = build_IKn(3, ctx)
        w = ctx.x(1) + ctx.y(1)
        out.append(CheckResult("ikn", f"{field}: (I_{{K_3}} : x_1 + y_1) = I_{{K_3}}",
                               equals(quotient_by(ideal, w, oracle), ideal, oracle)))
    return out


def ikn_jobs(opts: SuiteOptions):
    top = max(opts.n_max, 2)
    jobs = [(ikn_quadratic, (n, 0, opts)) for n in range(2, top + 1)]
    jobs += [(ikn_quadratic, (n, m, opts)) for n in range(2, top + 1) for m in range(1, n)]
    jobs += [(ikn_heights, (n, opts)) for n in range(3, max(top, 3) + 1)]
    jobs += [(ikn_nonzerodivisors, (label, opts)) for label in ("complete:3", "complete:4", "bipartite:1,2",
                                                                 "bipartite:2,2")]
    jobs.append((ikn_trichotomy, (opts,)))
    return jobs


# gb

def gb_certify_graph(G: Graph, field: str, label: str, opts: SuiteOptions) -> List[CheckResult]:
    oracle = opts.oracle()
    ctx = RingContext(G.n, FieldSpec.parse(field))
    elements = combinatorial_gb(G, ctx, opts.prune)
    cert = gb_certify(G, ctx, oracle, opts.prune, elements)
    sound = elements_in_ideal(G, ctx, elements, oracle)
    detail = "" if cert.ok and sound else f"{cert.to_json()} members={sound}"
    return [CheckResult("gb", f"certify {label} over {field}", cert.ok and sound, detail)]


def gb_phi(G: Graph, opts: SuiteOptions) -> List[CheckResult]:
    oracle = opts.oracle()
    ctx = RingContext(G.n, FieldSpec.prime(5))
    same = equals(phi_transform(build_LG(G, ctx)), build_PiG(G, ctx), oracle)
    return [CheckResult("gb", f"phi(L_G) = Pi_G over Fp:5, {_graph_label(G)}", same)]


def gb_binomial(G: Graph, opts: SuiteOptions) -> List[CheckResult]:
    oracle = opts.oracle()
    ctx = RingContext(G.n, FieldSpec.prime(5))
    same = equals(binomial_edge_transform(G, ctx), build_JG(G, ctx), oracle)
    return [CheckResult("gb", f"L_G maps onto J_G over Fp:5, {_graph_label(G)}", same)]


def gb_jobs(opts: SuiteOptions):
    graphs = [(G, _graph_label(G)) for n in range(1, min(opts.n_max, 4) + 1) for G in all_graphs(n)]
    graphs += [(preset(name), name) for name in GB_PRESETS]
    jobs = [(gb_certify_graph, (G, field, label, opts)) for G, label in graphs for field in ("Q", "Fp:3")]
    small = [G for n in range(1, min(opts.n_max, 4) + 1) for G in all_graphs(n)]
    jobs += [(gb_phi, (G, opts)) for G in small]
    jobs += [(gb_binomial, (G, opts)) for G in small if G.is_bipartite()]
    return jobs


# char2

def char2_graph(label: str, opts: SuiteOptions) -> List[CheckResult]:
    G = preset(label)
    bound = dict(opts.char2_bounds).get(label)
    if G.is_bipartite():
        try:
            char2_nonradical_witness(G, oracle=opts.oracle())
        except ValueError:
            return [CheckResult("char2", f"{label} rejected as bipartite", True)]
        return [CheckResult("char2", f"{label} rejected as bipartite", False, "search was not rejected")]
    witness = char2_nonradical_witness(G, bound=bound, oracle=opts.oracle())
    if witness is None:
        return [CheckResult("char2", f"witness for {label}", False, "none within the degree bound")]
    return [CheckResult("char2", f"witness for {label}", True, str(witness.to_json()))]


def char2_jobs(opts: SuiteOptions):
    return [(char2_graph, (label, opts)) for label in CHAR2_GRAPHS]


# decomp

def decomp_verify(label: str, opts: SuiteOptions) -> List[CheckResult]:
    G = preset(label)
    return [CheckResult("decomp", f"L_G = ∩ Q_S over M(G) for {label}",
                        verify_decomposition(G, RingContext(G.n), opts.oracle()))]


def decomp_fig3(opts: SuiteOptions) -> List[CheckResult]:
    M = set(enumerate_M(preset("fig3")))
    expected_in = [(4,), (4, 5), (2, 6)]
    ok = all(S in M for S in expected_in) and (3, 7) not in M
    return [CheckResult("decomp", "fig3: {4}, {4,5}, {2,6} in M(G), {3,7} not", ok, f"M(G) = {sorted(M)}")]


def decomp_oracle_graph(G: Graph, opts: SuiteOptions) -> List[CheckResult]:
    oracle = opts.oracle()
    ctx = RingContext(G.n)
    subsets = all_subsets(G.n)
    disagreements = [(S, W) for S in subsets for W in subsets
                     if qs_contains(G, S, W) != oracle_qs_contains(G, S, W, ctx, oracle)]
    minimal = oracle_minimal_sets(G, ctx, oracle)
    M = enumerate_M(G)
    return [
        CheckResult("decomp", f"containment criterion, {_graph_label(G)}", not disagreements,
                    f"disagrees on {disagreements[:3]}" if disagreements else ""),
        CheckResult("decomp", f"M(G) = containment-minimal Q_S, {_graph_label(G)}", minimal == M,
                    "" if minimal == M else f"M(G)={M}, oracle={minimal}")
    ]


def decomp_dimensions(opts: SuiteOptions) -> List[CheckResult]:
    out = []
    r = classify(preset("butterfly"), FieldSpec.rationals())
    out.append(CheckResult("decomp", "butterfly: dim 6, n 5, b 0", (r.dim, r.n, r.b) == (6, 5, 0),
                           f"dim={r.dim} n={r.n} b={r.b}"))
    r = classify(preset("complete_bipartite:2,2"), FieldSpec.rationals())
    out.append(CheckResult("decomp", "K_{2,2}: dim 5, not unmixed", r.dim == 5 and r.unmixed is False,
                           f"dim={r.dim} unmixed={r.unmixed}"))
    return out


def decomp_dim_sweep(n: int, start: int, stop: int, opts: SuiteOptions) -> List[CheckResult]:
    """dim >= n + b over the graphs on n vertices with edge masks in [start, stop)."""
    low = []
    for G in islice(all_graphs(n), start, stop):
        report = classify(G, FieldSpec.rationals())
        if report.dim < n + report.b:
            low.append(G)
    return [CheckResult("decomp", f"dim >= n + b for graphs on {n} vertices, masks {start}..{stop - 1}", not low,
                        f"fails for {_graph_label(low[0])}" if low else "")]


def _dim_sweep_jobs(opts: SuiteOptions):
    jobs = []
    for n in range(1, opts.dim_n_max + 1):
        total = 1 << (n * (n - 1) // 2)
        for start in range(0, total, DIM_CHUNK):
            jobs.append((decomp_dim_sweep, (n, start, min(start + DIM_CHUNK, total), opts)))
    return jobs


def decomp_tables(opts: SuiteOptions) -> List[CheckResult]:
    out = []
    for n in range(3, 8):
        unmixed = classify(preset(f"cycle:{n}"), FieldSpec.rationals()).unmixed
        out.append(CheckResult("decomp", f"C_{n} unmixed iff n odd", unmixed == (n % 2 == 1), f"unmixed={unmixed}"))
    for n in range(2, 7):
        unmixed = classify(preset(f"complete:{n}"), FieldSpec.rationals()).unmixed
        out.append(CheckResult("decomp", f"K_{n} unmixed iff n in {{2, 3}}", unmixed == (n in (2, 3)),
                               f"unmixed={unmixed}"))
    return out


def decomp_prime(n: int, opts: SuiteOptions) -> List[CheckResult]:
    bad = []
    for G in all_graphs(n):
        cls = connectivity_class(G)
        single = enumerate_M(G) == [()]
        if not single == cls.is_matching_union == cls.complement_is_n_minus_2_connected:
            bad.append(G)
    return [CheckResult("decomp", f"prime iff matching union iff complement (n-2)-connected, n={n}", not bad,
                        f"fails for {_graph_label(bad[0])}" if bad else "")]


def decomp_jobs(opts: SuiteOptions):
    jobs = [(decomp_verify, (label, opts)) for label in DECOMP_GRAPHS]
    jobs.append((decomp_fig3, (opts,)))
    jobs += [(decomp_oracle_graph, (G, opts)) for n in range(1, opts.decompose_n_max + 1) for G in all_graphs(n)]
    jobs.append((decomp_dimensions, (opts,)))
    jobs += _dim_sweep_jobs(opts)
    jobs.append((decomp_tables, (opts,)))
    jobs += [(decomp_prime, (n, opts)) for n in range(1, opts.prime_n_max + 1)]
    return jobs


# variety

def variety_graph(G: Graph, opts: SuiteOptions) -> List[CheckResult]:
    failures = []
    ideal = build_LG(G, RingContext(G.n))
    for S in all_subsets(G.n):
        for seed in range(opts.seed, opts.seed + opts.seeds):
            sample = sample_VS(G, S, seed, opts.scale_max)
            if not check_vanishing(sample, G, ideal) or not block_geometry_holds(sample):
                failures.append((S, seed))
    return [CheckResult("variety", f"samples vanish on L_G, {_graph_label(G)}", not failures,
                        f"fails for (S, seed) {failures[:3]}" if failures else "")]


def variety_jobs(opts: SuiteOptions):
    return [(variety_graph, (G, opts)) for n in range(1, opts.variety_n_max + 1) for G in all_graphs(n)]


_JOBS = {
    "ikn": ikn_jobs,
    "gb": gb_jobs,
    "char2": char2_jobs,
    "decomp": decomp_jobs,
    "variety": variety_jobs,
}


class SuiteRunner(LoggingMixin, MetricsMixin):
    def __init__(self, opts: SuiteOptions, jobs: int = 1):
        LoggingMixin.__init__(self, logging.getLogger("lss.verify"))
        self.opts = opts
        self.jobs = jobs

    def run(self, suites: Sequence[str]) -> List[CheckResult]:
        unknown = [s for s in suites if s not in _JOBS]
        if unknown:
            raise ValueError(f"Unknown suites {unknown}, expected some of {', '.join(SUITES)}")
        work: List[Tuple[Callable, tuple]] = []
        for suite in suites:
            work += _JOBS[suite](self.opts)
        self.info(f"Running {len(work)} jobs from {', '.join(suites)} on {self.jobs} worker(s)")
        with Scheduler(self.jobs) as scheduler:
            for fn, args in work:
                scheduler.run(fn, *args)
            batches = scheduler.join()
        results = [r for batch in batches for r in batch]
        for r in results:
            self.info(f"{r.status} {r.suite} {r.name}")
            if r.passed is True:
                self.counter("checks", "passed").inc()
            elif r.passed is False:
                self.counter("checks", "failed").inc()
        return results
