import argparse
import logging
import logging.config
import sys
from dataclasses import dataclass, replace
from typing import Optional, List, Tuple, Dict, Any, TextIO

from lss.decomp import DecompositionReport
from lss.decomp.classify import classify, verify_decomposition
from lss.gbasis import GBElement, GBKind, AdmissiblePath
from lss.gbasis.certify import gb_certify
from lss.gbasis.construct import combinatorial_gb, element_counts
from lss.graph import Graph
from lss.graph.presets import parse_graph, preset
from lss.groebner import Budget, BudgetExhausted
from lss.groebner.codec import reduced_gb_to_json
from lss.groebner.oracle import Oracle
from lss.ideals.builders import build_PiG
from lss.metrics import report_metrics
from lss.poly import FieldSpec, RingContext, PriorityOrder
from lss.poly.text import render
from lss.settings import Settings, Char2Config, parse_budget
from lss.suites import SuiteRunner, SuiteOptions, SUITES, CHAR2_GRAPHS
from lss.util import json_dumps, subscript

logger = logging.getLogger("lss.cli")

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_BUDGET = 3


@dataclass(frozen=True)
class RunConfig:
    command: str
    graph_source: Optional[str]
    graph: Optional[Graph]
    field: FieldSpec
    order: Optional[str]
    budget: Budget
    seed: int
    fmt: str
    verify: bool = False
    suites: Tuple[str, ...] = ()
    n_max: int = 4
    decompose_n_max: int = 4
    dim_n_max: int = 6
    prime_n_max: int = 5
    variety_n_max: int = 5
    seeds: int = 20
    scale_max: int = 5
    jobs: int = 1
    prune: bool = True
    char2: Optional[Char2Config] = None
    chain_criterion: bool = False

    @classmethod
    def from_args(cls, args: argparse.Namespace, settings: Settings) -> "RunConfig":
        """Everything the user typed is parsed here, so bad input fails before any computation."""
        engine = settings.engine_config()
        verify_config = settings.verify_config()
        variety = settings.variety_config()
        budget = Budget.from_config(engine)
        if args.budget is not None:
            basis, pairs = parse_budget(args.budget)
            budget = Budget(basis, pairs if pairs is not None else budget.max_pairs)
        graph_source = getattr(args, "graph", None)
        graph = parse_graph(graph_source) if graph_source is not None else None
        suites: Tuple[str, ...] = ()
        if args.command == "verify":
            suites = SUITES if args.suite == "all" else (args.suite,)
        field = FieldSpec.parse(getattr(args, "field", "Q"))
        order = getattr(args, "order", None)
        if order is not None:
            parse_order(order, RingContext(graph.n, field))
        n_max = getattr(args, "n_max", None)
        if args.command == "verify":
            decompose_n_max = getattr(args, "decompose_n_max", None)
        else:
            # decompose and invariants only bound --verify
            decompose_n_max, n_max = n_max, None
        seeds = getattr(args, "seeds", None)
        return cls(
            command=args.command,
            graph_source=graph_source,
            graph=graph,
            field=field,
            order=order,
            budget=budget,
            seed=args.seed,
            fmt=args.format,
            verify=getattr(args, "verify", False),
            suites=suites,
            n_max=n_max if n_max is not None else verify_config.n_max(),
            decompose_n_max=decompose_n_max if decompose_n_max is not None else verify_config.decompose_n_max(),
            dim_n_max=verify_config.dim_n_max(),
            prime_n_max=verify_config.prime_n_max(),
            variety_n_max=variety.n_max(),
            seeds=seeds if seeds is not None else variety.seeds(),
            scale_max=variety.scale_max(),
            jobs=args.jobs if args.jobs is not None else verify_config.jobs(),
            prune=settings.gbasis_config().prune(),
            char2=settings.char2_config(),
            chain_criterion=engine.chain_criterion()
        )

    def ring(self) -> RingContext:
        return RingContext(self.graph.n, self.field)

    def oracle(self) -> Oracle:
        return Oracle(self.budget, self.chain_criterion)


def parse_order(spec: Optional[str], ctx: RingContext) -> PriorityOrder:
    """"lex" or a comma separated list of every variable name, highest first."""
    if spec is None or spec.strip() == "lex":
        return ctx.default_order
    names = [s.strip() for s in spec.split(",")]
    if sorted(names) != sorted(ctx.var_names):
        raise ValueError(f"Order {spec!r} must list each of {', '.join(ctx.var_names)} exactly once")
    return PriorityOrder([ctx.var_names.index(name) for name in names])


def _element_label(e: GBElement, ctx: RingContext) -> str:
    if e.kind in (GBKind.TYPE_I, GBKind.TYPE_II):
        path = AdmissiblePath(e.witnesses[0])
        name = "b" if e.kind == GBKind.TYPE_I else "g"
        u = path.u(ctx)
        base = f"{name}_{subscript((path.i, path.j))}"
        return base if u == 1 else f"{render(u)}*{base}"
    return render(e.poly)


def cmd_gb(config: RunConfig) -> Tuple[Dict[str, Any], int]:
    G = config.graph
    ctx = config.ring()
    oracle = config.oracle()
    order = parse_order(config.order, ctx)
    elements = combinatorial_gb(G, ctx, config.prune)
    report: Dict[str, Any] = {
        "graph": G.to_json(),
        "field": str(config.field),
        "elements": [e.to_json() for e in elements],
        "counts": element_counts(elements)
    }
    if order != ctx.default_order:
        report["oracle_basis"] = reduced_gb_to_json(oracle.buchberger(build_PiG(G, ctx), order))
    cert = gb_certify(G, ctx, oracle, config.prune, elements)
    report["certification"] = cert.to_json()
    code = EXIT_OK if cert.skipped or cert.ok else EXIT_VERIFICATION_FAILED
    return report, code


def _decompose(config: RunConfig) -> Tuple[DecompositionReport, int]:
    G = config.graph
    report = classify(G, config.field)
    if not config.verify:
        return report, EXIT_OK
    if G.n > config.decompose_n_max:
        raise ValueError(f"Refusing to verify a decomposition on {G.n} vertices, raise --n-max to force it")
    verified = verify_decomposition(G, config.ring(), config.oracle())
    return replace(report, verified=verified), EXIT_OK if verified else EXIT_VERIFICATION_FAILED


def cmd_decompose(config: RunConfig) -> Tuple[Dict[str, Any], int]:
    report, code = _decompose(config)
    return report.to_json(), code


def cmd_invariants(config: RunConfig) -> Tuple[Dict[str, Any], int]:
    report, code = _decompose(config)
    out = report.to_json()
    out["minimal_primes"] = len(report.minimal_primes)
    return out, code


def cmd_verify(config: RunConfig) -> Tuple[Dict[str, Any], int]:
    char2 = config.char2 if config.char2 is not None else Char2Config.from_dict({})
    opts = SuiteOptions(
        n_max=config.n_max,
        decompose_n_max=config.decompose_n_max,
        dim_n_max=config.dim_n_max,
        prime_n_max=config.prime_n_max,
        variety_n_max=config.variety_n_max,
        seeds=config.seeds,
        seed=config.seed,
        scale_max=config.scale_max,
        budget=config.budget,
        prune=config.prune,
        char2_bounds=tuple((label, char2.degree_bound(preset(label).n)) for label in CHAR2_GRAPHS),
        chain_criterion=config.chain_criterion
    )
    results = SuiteRunner(opts, config.jobs).run(config.suites)
    failed = sum(1 for r in results if r.passed is False)
    report = {
        "suites": list(config.suites),
        "checks": [r.to_json() for r in results],
        "passed": sum(1 for r in results if r.passed is True),
        "failed": failed,
        "skipped": sum(1 for r in results if r.passed is None)
    }
    return report, EXIT_VERIFICATION_FAILED if failed else EXIT_OK


def text_gb(report: Dict[str, Any], config: RunConfig) -> str:
    ctx = config.ring()
    lines = [f"Combinatorial Groebner basis of Pi_G over {report['field']}, {config.graph}"]
    elements = combinatorial_gb(config.graph, ctx, config.prune)
    for e in elements:
        witnesses = "; ".join("-".join(str(v) for v in w) for w in e.witnesses)
        lines.append(f"  {e.kind.value:<4} {_element_label(e, ctx):<24} {render(e.poly):<40} via {witnesses}")
    cert = report["certification"]
    if "note" in cert:
        lines.append(f"Certification skipped: {cert['note']}")
    else:
        lines.append(f"is_gb={cert['is_gb']} reduced_match={cert['reduced_match']} "
                     f"initial_squarefree={cert['initial_squarefree']}")
    if "oracle_basis" in report:
        lines.append(f"Oracle basis under {config.order}:")
        lines += [f"  {g}" for g in report["oracle_basis"]["gens"]]
    return "\n".join(lines)


def _yes_no(value) -> str:
    if value is None:
        return "n/a"
    return "yes" if value else "no"


def text_decompose(report: Dict[str, Any], config: RunConfig) -> str:
    lines = [f"L_G over {report['field']}, n={report['n']}, b={report['b']} ({report['hypothesis']})"]
    lines.append("Minimal primes:")
    for p in report["minimal_primes"]:
        label = "Q_{" + ",".join(str(v) for v in p["S"]) + "}"
        comps = []
        for c in p["components"]:
            vertices = ",".join(str(v) for v in c["vertices"])
            if c["bipartite"]:
                blocks = " | ".join(",".join(str(v) for v in block) for block in c["blocks"])
                comps.append(f"{{{vertices}}} bipartite [{blocks}]")
            else:
                comps.append(f"{{{vertices}}} non-bipartite")
        lines.append(f"  {label:<12} height {p['height']:<3} {'; '.join(comps)}")
    return "\n".join(lines + _invariant_lines(report))


def text_invariants(report: Dict[str, Any], config: RunConfig) -> str:
    lines = [f"L_G over {report['field']}, n={report['n']}, b={report['b']} ({report['hypothesis']})",
             f"minimal primes {report['minimal_primes']}"]
    return "\n".join(lines + _invariant_lines(report))


def _invariant_lines(report: Dict[str, Any]) -> List[str]:
    lines = [f"dim      {report['dim'] if report['dim'] is not None else 'n/a'}"]
    lines.append(f"unmixed  {_yes_no(report['unmixed'])}")
    lines.append(f"prime    {_yes_no(report['prime'])}")
    lines.append(f"radical  {_yes_no(report['radical']['value'])} ({report['radical']['reason']})")
    if "verified" in report:
        lines.append(f"verified {_yes_no(report['verified'])}")
    return lines


def text_verify(report: Dict[str, Any], config: RunConfig) -> str:
    lines = []
    for check in report["checks"]:
        line = f"{check['status']} {check['suite']:<8} {check['name']}"
        if check["status"] != "PASS" and "detail" in check:
            line += f" ({check['detail']})"
        lines.append(line)
    lines.append(f"{report['passed']} passed, {report['failed']} failed, {report['skipped']} skipped")
    return "\n".join(lines)


_COMMANDS = {
    "gb": (cmd_gb, text_gb),
    "decompose": (cmd_decompose, text_decompose),
    "invariants": (cmd_invariants, text_invariants),
    "verify": (cmd_verify, text_verify),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="Config file (INI)")
    common.add_argument("--log-config", help="Logging config file for logging.config.fileConfig")
    common.add_argument("--verbose", action="store_true", help="Enable debug logging")
    common.add_argument("--metrics", action="store_true", help="Print a metrics snapshot to stderr at exit")
    common.add_argument("--format", choices=("json", "text"), default="json", help="Report format")
    common.add_argument("--budget", help="Oracle caps as <basis> or <basis>:<pairs>")
    common.add_argument("--seed", type=int, default=0, help="Base seed for sampling")
    common.add_argument("--jobs", type=int, help="Worker processes for verification")

    graph = argparse.ArgumentParser(add_help=False)
    graph.add_argument("--graph", required=True, help="Preset name, inline graph JSON or a graph JSON file")
    graph.add_argument("--field", default="Q", help="Q or Fp:<p>")

    parser = argparse.ArgumentParser(prog="lss", description="Lovasz-Saks-Schrijver ideals of graphs")
    sub = parser.add_subparsers(dest="command", required=True)
    gb = sub.add_parser("gb", parents=[common, graph], help="Combinatorial Groebner basis of Pi_G")
    gb.add_argument("--order", help="lex, or every variable name comma separated, highest first")
    for name, text in (("decompose", "Minimal primes and invariants of L_G"),
                       ("invariants", "Dimension, unmixedness, primeness and radicality of L_G")):
        p = sub.add_parser(name, parents=[common, graph], help=text)
        p.add_argument("--verify", action="store_true", help="Check the decomposition with the oracle")
        p.add_argument("--n-max", type=int, help="Largest n accepted by --verify")
    verify = sub.add_parser("verify", parents=[common], help="Run verification suites")
    verify.add_argument("--suite", choices=SUITES + ("all",), default="all")
    verify.add_argument("--n-max", type=int, help="Largest vertex count in the ikn and gb sweeps")
    verify.add_argument("--decompose-n-max", type=int,
                        help="Largest vertex count for the oracle cross-checks of the decomposition")
    verify.add_argument("--seeds", type=int, help="Seeds per (graph, S) in the variety suite")
    return parser


def _setup_logging(args: argparse.Namespace):
    if args.log_config:
        logging.config.fileConfig(args.log_config, disable_existing_loggers=False)
    else:
        logging.basicConfig(stream=sys.stderr, level=logging.DEBUG if args.verbose else logging.WARNING,
                            format="%(asctime)s %(levelname)s %(name)s - %(message)s")


def run(argv: Optional[List[str]] = None, out: Optional[TextIO] = None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_INPUT_ERROR
    try:
        _setup_logging(args)
        settings = Settings(".", args.config) if args.config else Settings(path=None)
        config = RunConfig.from_args(args, settings)
    except (ValueError, KeyError) as e:
        logger.error(f"Invalid input: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR

    command, to_text = _COMMANDS[config.command]
    try:
        report, code = command(config)
    except BudgetExhausted as e:
        logger.warning(str(e))
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, KeyError) as e:
        logger.error(f"Invalid input: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    finally:
        if args.metrics:
            report_metrics(sys.stderr)

    if config.fmt == "json":
        out.write(json_dumps(report))
    else:
        out.write(to_text(report, config))
    out.write("\n")
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
