"""
@description: Command runner shared by the CLI and the MCP tools. Every command reads graph or clutter text,
             runs the engines and returns a RunReport; the CLI maps errors onto exit codes
             (0 success, 1 input/precondition, 2 enumeration cap).
"""
from __future__ import annotations

import argparse
import time
from contextlib import contextmanager
from pathlib import Path
from typing import Callable, Iterator, Optional

from pydantic import Field

from cli.graph_io import parse_clutter, parse_graph
from clutter.clutter_engine import (
    associated_graph,
    close_clutter,
    clutter_components,
    clutter_status,
    construct_clutter,
    direct_closed_clutter,
    is_closed_clutter,
    sub_clutter,
)
from closure.closure_engine import (
    close,
    construct,
    find_pi_ordering,
    is_closed_labeled,
    satisfies_shared_endpoint_rules,
)
from closure.labeling_strategies import choose_labeling
from core.builders.cmd_args_parser_builder import Argument, Command, build_cmd_args_parser
from core.config.settings import DEFAULT_ENUMERATION_CAP, Settings
from core.foundation.errors import EnumerationCapError, InputError, PreconditionError
from core.foundation.models.clutter_model import Clutter
from core.foundation.models.graph_model import Graph, Labeling
from core.foundation.models.report_model import InputSummary, LabelingSummary, PrimeRow, RunReport
from core.foundation.models.strict_mode import StrictModel
from core.foundation.models.trace_model import ConstructionTrace, LabelingStrategyEnum, OrderingStatusEnum
from core.utils.encoders.transport_encoder import transportify
from core.utils.log import get_logger
from oracle.ideal_oracle import DEFAULT_PI_BUDGET, audit_subgraphs, component_verdicts, minimal_primes, satisfies_condition_iv

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CAP = 2


class RunOptions(StrictModel):
    labeling: LabelingStrategyEnum = Field(default=LabelingStrategyEnum.IDENTITY)
    cap: int = Field(description="Enumeration cap in effect", default=DEFAULT_ENUMERATION_CAP, ge=0)
    workers: int = Field(default=1, ge=1)
    budget: int = Field(description="Node budget of the ordering search", default=DEFAULT_PI_BUDGET, ge=1)
    exhaustive_limit: int = Field(default=8, ge=1)
    timing: bool = Field(description="Record wall-clock timings; False zeroes them", default=True)

    @classmethod
    def from_settings(cls, settings: Settings) -> RunOptions:
        return cls(cap=settings.enumeration_cap, workers=settings.workers, budget=settings.pi_budget,
                   exhaustive_limit=settings.exhaustive_min_limit)


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _run_args() -> list[Argument]:
    return [
        Argument(name="file", type=str, help="graph or clutter file", positional=True),
        Argument(name="json", type=bool, help="emit the JSON report instead of text"),
        Argument(name="labeling", type=str, help="labeling strategy applied before the command",
                 default=LabelingStrategyEnum.IDENTITY.value, choices=[e.value for e in LabelingStrategyEnum]),
        Argument(name="cap", type=int, help="override the subset enumeration cap"),
        Argument(name="i-know-cap", type=bool, help="acknowledge raising --cap above the configured cap"),
        Argument(name="workers", type=int, help="worker processes for the subset enumeration"),
        Argument(name="budget", type=int, help="node budget of the proper interval ordering search"),
        Argument(name="no-timing", type=bool, help="zero the timing section so reports are byte-identical"),
    ]


def build_parser() -> argparse.ArgumentParser:
    args = _run_args
    commands = [
        Command(name="close", help="least closed supergraph under the chosen labeling", args=args()),
        Command(name="construct", help="closed Cohen-Macaulay supergraph [G] with its trace and verdicts", args=args()),
        Command(name="oracle", help="cut-point sets, minimal primes, unmixedness and CM status", args=args()),
        Command(name="audit", help="verdicts for every single-vertex deletion", args=args()),
        Command(name="pi-order", help="search a labeling under which the graph is closed", args=args()),
        Command(name="clutter", help="the same verbs on a clutter file", subcommands=[
            Command(name="close", help="closure of a clutter", args=args()),
            Command(name="construct", help="closed Cohen-Macaulay superclutter [C]", args=args()),
            Command(name="oracle", help="per-component clutter verdicts", args=args()),
        ]),
    ]
    return build_cmd_args_parser("Closure, Cohen-Macaulay construction and ideal oracle for graphs and clutters.",
                                 [], commands)


def options_from_args(args: argparse.Namespace, settings: Settings) -> RunOptions:
    options = RunOptions.from_settings(settings)
    update: dict = {"labeling": LabelingStrategyEnum(args.labeling), "timing": not args.no_timing}
    if args.cap is not None:
        if args.cap > settings.enumeration_cap and not args.i_know_cap:
            raise PreconditionError(f"--cap {args.cap} exceeds the configured cap {settings.enumeration_cap}; "
                                    f"pass --i-know-cap to confirm")
        update["cap"] = args.cap
    if args.workers is not None:
        update["workers"] = args.workers
    if args.budget is not None:
        update["budget"] = args.budget
    return options.model_copy(update=update)


# ---------------------------------------------------------------------------
# report pieces
# ---------------------------------------------------------------------------

class _Clock:
    def __init__(self, enabled: bool):
        self.enabled = enabled
        self.phases: dict[str, float] = {}

    @contextmanager
    def phase(self, name: str) -> Iterator[None]:
        start = time.perf_counter()
        try:
            yield
        finally:
            self.phases[name] = round(time.perf_counter() - start, 6) if self.enabled else 0.0


def _labeling_summary(labeling: Optional[Labeling], strategy: Optional[LabelingStrategyEnum]) -> LabelingSummary:
    pairs = [tuple(p) for p in labeling.pairs] if labeling is not None else []
    return LabelingSummary(strategy=strategy.value if strategy else None, pairs=pairs)


def _graph_output(graph: Graph) -> dict:
    return {"n": graph.n, "edges": [list(e) for e in graph.edges]}


def _clutter_output(clutter: Clutter) -> dict:
    return {"n": clutter.n, "edges": [list(e) for e in clutter.edges],
            "associated_graph": _graph_output(associated_graph(clutter))}


def _prime_rows(graph: Graph, options: RunOptions) -> list[PrimeRow]:
    return [PrimeRow(T=list(p.record.T), c=p.record.c, height=p.record.height, generators=p.generators_description)
            for p in minimal_primes(graph, options.cap, options.workers)]


def _graph_verdicts(graph: Graph, options: RunOptions) -> dict:
    """Labeled checks plus per-component oracle verdicts; global ones only for connected graphs."""
    comps = component_verdicts(graph, options.cap, options.budget, options.workers)
    connected = len(comps) == 1
    return {
        "closed": is_closed_labeled(graph) if connected else None,
        "components_closed": all(c.closed for c in comps),
        "shared_endpoint_rules": satisfies_shared_endpoint_rules(graph),
        "condition_iv": satisfies_condition_iv(graph),
        "connected": connected,
        "unmixed": comps[0].unmixed if connected else None,
        "cm_status": comps[0].cm_status.value if connected else None,
        "condition_iii": comps[0].condition_iii if connected else None,
        "components": transportify(comps),
    }


def _components_closed(clutter: Clutter) -> bool:
    return all(is_closed_clutter(sub_clutter(clutter, comp)[0]) for comp in clutter_components(clutter))


def _clutter_verdicts(clutter: Clutter, options: RunOptions) -> dict:
    comps = clutter_status(clutter, options.cap, options.budget)
    return {
        "closed": is_closed_clutter(clutter),
        "direct_closed": direct_closed_clutter(clutter),
        "components_closed": all(v.closed for v in comps),
        "connected": len(comps) == 1,
        "components": transportify(comps),
    }


def _graph_summary(graph: Graph) -> InputSummary:
    return InputSummary(kind="graph", n=graph.n, edge_count=graph.number_of_edges())


def _clutter_summary(clutter: Clutter) -> InputSummary:
    return InputSummary(kind="clutter", n=clutter.n, edge_count=len(clutter.edges))


def _trace(trace: ConstructionTrace) -> list:
    return list(trace.steps)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def _read_graph(text: str, options: RunOptions, clock: _Clock) -> tuple[Graph, Graph, Labeling]:
    with clock.phase("parse"):
        graph, _ = parse_graph(text)
    with clock.phase("labeling"):
        labeling = choose_labeling(graph, options.labeling, options.exhaustive_limit)
    return graph, labeling.apply(graph), labeling


def _read_clutter(text: str, options: RunOptions, clock: _Clock) -> tuple[Clutter, Clutter, Labeling]:
    with clock.phase("parse"):
        clutter = parse_clutter(text)
    with clock.phase("labeling"):
        labeling = choose_labeling(associated_graph(clutter), options.labeling, options.exhaustive_limit)
    return clutter, clutter.relabel(labeling), labeling


def run_close(text: str, options: RunOptions) -> RunReport:
    clock = _Clock(options.timing)
    graph, working, labeling = _read_graph(text, options, clock)
    with clock.phase("close"):
        closed, trace = close(working)
    return RunReport(command="close", input=_graph_summary(graph),
                     labeling=_labeling_summary(labeling, options.labeling), trace=_trace(trace),
                     verdicts={"closed": is_closed_labeled(closed), "input_closed": is_closed_labeled(working),
                               "added": len(trace)},
                     timing=clock.phases, output={"graph": _graph_output(closed)})


def run_construct(text: str, options: RunOptions) -> RunReport:
    clock = _Clock(options.timing)
    with clock.phase("parse"):
        graph, _ = parse_graph(text)
    with clock.phase("construct"):
        result, trace, labeling = construct(graph, options.labeling, options.exhaustive_limit)
    with clock.phase("oracle"):
        verdicts = _graph_verdicts(result, options)
        primes = _prime_rows(result, options)
    return RunReport(command="construct", input=_graph_summary(graph),
                     labeling=_labeling_summary(labeling, options.labeling), trace=_trace(trace),
                     verdicts=verdicts, primes=primes, timing=clock.phases,
                     output={"graph": _graph_output(result)})


def run_oracle(text: str, options: RunOptions) -> RunReport:
    clock = _Clock(options.timing)
    graph, working, labeling = _read_graph(text, options, clock)
    with clock.phase("oracle"):
        verdicts = _graph_verdicts(working, options)
        primes = _prime_rows(working, options)
    return RunReport(command="oracle", input=_graph_summary(graph),
                     labeling=_labeling_summary(labeling, options.labeling), verdicts=verdicts, primes=primes,
                     timing=clock.phases, output={"graph": _graph_output(working)})


def run_audit(text: str, options: RunOptions) -> RunReport:
    clock = _Clock(options.timing)
    graph, working, labeling = _read_graph(text, options, clock)
    with clock.phase("audit"):
        report = audit_subgraphs(working, options.cap, options.budget)
    with clock.phase("oracle"):
        verdicts = _graph_verdicts(working, options)
    verdicts["all_deletions_closed"] = all(e.deleted_graph_closed for e in report.entries)
    verdicts["all_deletions_cm"] = all(e.deleted_cm.value == "CM" for e in report.entries)
    return RunReport(command="audit", input=_graph_summary(graph),
                     labeling=_labeling_summary(labeling, options.labeling), verdicts=verdicts,
                     timing=clock.phases, output={"entries": transportify(report.entries)})


def run_pi_order(text: str, options: RunOptions) -> RunReport:
    clock = _Clock(options.timing)
    with clock.phase("parse"):
        graph, _ = parse_graph(text)
    with clock.phase("search"):
        result = find_pi_ordering(graph, options.budget)
    output = {}
    if result.status is OrderingStatusEnum.FOUND:
        output["graph"] = _graph_output(result.labeling.apply(graph))
    return RunReport(command="pi-order", input=_graph_summary(graph),
                     labeling=_labeling_summary(result.labeling, None),
                     verdicts={"ordering_status": result.status.value, "explored": result.explored,
                               "closed_as_given": is_closed_labeled(graph)},
                     timing=clock.phases, output=output)


def run_clutter_close(text: str, options: RunOptions) -> RunReport:
    clock = _Clock(options.timing)
    clutter, working, labeling = _read_clutter(text, options, clock)
    with clock.phase("close"):
        closed, trace = close_clutter(working)
    return RunReport(command="clutter close", input=_clutter_summary(clutter),
                     labeling=_labeling_summary(labeling, options.labeling), trace=_trace(trace),
                     verdicts={"components_closed": _components_closed(closed), "added": len(trace)},
                     timing=clock.phases, output={"clutter": _clutter_output(closed)})


def run_clutter_construct(text: str, options: RunOptions) -> RunReport:
    clock = _Clock(options.timing)
    clutter, working, labeling = _read_clutter(text, options, clock)
    with clock.phase("construct"):
        result, trace = construct_clutter(working)
    with clock.phase("oracle"):
        verdicts = _clutter_verdicts(result, options)
        primes = _prime_rows(associated_graph(result), options)
    return RunReport(command="clutter construct", input=_clutter_summary(clutter),
                     labeling=_labeling_summary(labeling, options.labeling), trace=_trace(trace),
                     verdicts=verdicts, primes=primes, timing=clock.phases,
                     output={"clutter": _clutter_output(result)})


def run_clutter_oracle(text: str, options: RunOptions) -> RunReport:
    clock = _Clock(options.timing)
    clutter, working, labeling = _read_clutter(text, options, clock)
    with clock.phase("oracle"):
        verdicts = _clutter_verdicts(working, options)
        primes = _prime_rows(associated_graph(working), options)
    return RunReport(command="clutter oracle", input=_clutter_summary(clutter),
                     labeling=_labeling_summary(labeling, options.labeling), verdicts=verdicts, primes=primes,
                     timing=clock.phases, output={"clutter": _clutter_output(working)})


HANDLERS: dict[str, Callable[[str, RunOptions], RunReport]] = {
    "close": run_close,
    "construct": run_construct,
    "oracle": run_oracle,
    "audit": run_audit,
    "pi-order": run_pi_order,
    "clutter close": run_clutter_close,
    "clutter construct": run_clutter_construct,
    "clutter oracle": run_clutter_oracle,
}


def execute(command: str, text: str, options: Optional[RunOptions] = None) -> RunReport:
    """Run one command on file contents; errors propagate."""
    handler = HANDLERS.get(command)
    if handler is None:
        raise PreconditionError(f"unknown command '{command}'")
    return handler(text, options or RunOptions())


def run_command(argv: list[str], settings: Optional[Settings] = None) -> tuple[Optional[RunReport], int, bool]:
    """
    Parse ``argv``, run the command and map errors to exit codes.
    :return: (report or None, exit code, whether JSON output was requested)
    """
    settings = settings or Settings()
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        # --help exits 0; argparse has already printed usage for anything else
        if not e.code:
            raise
        return None, EXIT_INPUT, False
    command = f"clutter {args.verb}" if args.command == "clutter" else args.command
    try:
        options = options_from_args(args, settings)
        try:
            text = Path(args.file).read_text(encoding="utf-8")
        except OSError as e:
            raise InputError(f"cannot read {args.file}: {e.strerror}") from e
        return execute(command, text, options), EXIT_OK, args.json
    except EnumerationCapError as e:
        logger.error("%s", e)
        return None, EXIT_CAP, args.json
    except (InputError, PreconditionError) as e:
        logger.error("%s", e)
        return None, EXIT_INPUT, args.json
