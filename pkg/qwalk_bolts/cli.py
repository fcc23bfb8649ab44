"""Command line front end.

Example::

    qwalk build complete:2 --satellites complete:1
    qwalk spectrum cycle:4 --satellites complete:1 --closed-form
    qwalk fidelity path:4 1 2 --scan 0 10 1001 --out curve.csv
    qwalk certify pst cycle:4 0 2
    qwalk certify pgst complete:2 0 1 --eps 0.01

Every command prints exactly one JSON document on stdout. Diagnostics and evidence tables go to stderr. The exit code
tells apart precondition failures (2), inconclusive verdicts (3) and exhausted searches (4); usage, parse and parameter
errors exit with 64. Numerical failures, a non converging eigensolver or an unresolved cofactor, also exit with 3.
"""
import json
import sys
from argparse import SUPPRESS, ArgumentParser, Namespace
from dataclasses import dataclass, field
from enum import Enum
from functools import partial
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import torch
from pytorch_lightning.utilities import rank_zero_info, rank_zero_warn
from torch import Tensor

from qwalk_bolts.closed_form import (
    BaseSpectralData,
    corona_eigenprojectors,
    corona_eigenvalues,
    corona_transfer_entries,
    spectral_inputs,
)
from qwalk_bolts.config import NumericConfig
from qwalk_bolts.corona import CoronaGraph, CoronaLabel, CoronaSpec, build_corona, check_base, corona_adjacency_blocks
from qwalk_bolts.graphs import Graph, parse_graph_spec, parse_satellite_specs, serialize_edge_list
from qwalk_bolts.spectral import eigendecompose, scan_amplitudes, transition_entries
from qwalk_bolts.transfer import (
    Verdict,
    certify_pst,
    corona_base_periodicity,
    gap_non_periodicity,
    is_periodic_vertex,
    necessary_bound_check,
    pgst_witness_time,
    return_probe,
)
from qwalk_bolts.utils.arguments import add_config_args, config_from_args
from qwalk_bolts.utils.exceptions import FactorizationLimitError, NumericError, PreconditionError
from qwalk_bolts.utils.printing import dicts_to_table, evidence_to_table


class Status(str, Enum):
    OK = "ok"
    PRECONDITION_FAILED = "precondition_failed"
    INCONCLUSIVE = "inconclusive"
    NOT_FOUND = "not_found"
    USAGE = "usage"


EXIT_CODES = {
    Status.OK: 0,
    Status.PRECONDITION_FAILED: 2,
    Status.INCONCLUSIVE: 3,
    Status.NOT_FOUND: 4,
    Status.USAGE: 64,
}


class UsageError(ValueError):
    """Malformed command line."""


@dataclass(frozen=True)
class CommandResult:
    status: Status
    payload: Dict[str, Any] = field(default_factory=dict)

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]

    def to_json(self) -> str:
        return json.dumps({"status": self.status.value, **self.payload}, default=_jsonable)


def _jsonable(value: Any) -> Any:
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, Tensor):
        return value.tolist()
    return str(value)


class _Parser(ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _load_target(args: Namespace) -> Tuple[Graph, Optional[CoronaGraph]]:
    """The graph a command runs on: the base graph itself, or the corona when satellites are given."""
    base = parse_graph_spec(args.graph)
    if not args.satellites:
        return base, None
    corona = build_corona(CoronaSpec(base, tuple(parse_satellite_specs(args.satellites, base.n))))
    return corona.graph, corona


def _resolve(vertex: str, n: int, corona: Optional[CoronaGraph] = None) -> int:
    """Flat index of a vertex given as an index or a ``v:i[/w:j]`` label."""
    if corona is not None:
        return corona.resolve(vertex)
    text = vertex.strip()
    if not text.isdigit():
        label = CoronaLabel.parse(text)
        if not label.is_base:
            raise UsageError(f"satellite label '{vertex}' given for a graph without satellites")
        text = str(label.base_vertex)
    index = int(text)
    if not 0 <= index < n:
        raise UsageError(f"vertex {vertex} out of range for {n} vertices")
    return index


def _label(index: int, corona: Optional[CoronaGraph] = None) -> str:
    return str(corona.label_of(index) if corona is not None else CoronaLabel(index))


def _require_v(args: Namespace) -> str:
    if args.v is None:
        raise UsageError(f"certify {args.mode} needs two vertices")
    return args.v


def cmd_build(args: Namespace, config: NumericConfig) -> CommandResult:
    base = parse_graph_spec(args.graph)
    corona = build_corona(CoronaSpec(base, tuple(parse_satellite_specs(args.satellites, base.n))))
    labels = {str(i): str(label) for i, label in enumerate(corona.labels())}
    payload: Dict[str, Any] = {"vertices": corona.n, "edges": corona.graph.num_edges, "labels": labels}
    if args.out:
        edges_path, labels_path = f"{args.out}.edges", f"{args.out}.labels.json"
        with open(edges_path, "w", encoding="utf-8") as fp:
            fp.write(serialize_edge_list(corona.graph))
        with open(labels_path, "w", encoding="utf-8") as fp:
            json.dump({"labels": labels, "spec": corona.spec.to_dict()}, fp, indent=2)
        payload["files"] = [edges_path, labels_path]
    else:
        payload["edge_list"] = corona.graph.sorted_edges()
    rank_zero_info(f"corona with {corona.n} vertices and {corona.graph.num_edges} edges")
    return CommandResult(Status.OK, payload)


def cmd_spectrum(args: Namespace, config: NumericConfig) -> CommandResult:
    payload: Dict[str, Any] = {}
    if args.closed_form:
        if not args.satellites:
            raise UsageError("--closed-form needs --satellites")
        base = parse_graph_spec(args.graph)
        satellites = parse_satellite_specs(args.satellites, base.n)
        base_spectrum, sat_spectra, k, m = spectral_inputs(base, satellites)
        if (args.k is not None and args.k != k) or (args.m is not None and args.m != m):
            raise PreconditionError(f"satellites are {k}-regular on {m} vertices, expected k={args.k}, m={args.m}")
        payload["branches"] = corona_eigenvalues(base_spectrum, sat_spectra, k, m).to_dict()
        spectrum = corona_eigenprojectors(base_spectrum, sat_spectra, k, m, config.group_tol, config)
        matrix = corona_adjacency_blocks(base, satellites)
    else:
        graph, _ = _load_target(args)
        matrix = graph.adjacency()
        spectrum = eigendecompose(matrix, config.group_tol)

    deviation = spectrum.invariant_deviation(matrix)
    payload.update(
        mode="closed-form" if args.closed_form else "numeric",
        eigenvalues=spectrum.values(),
        multiplicities=list(spectrum.multiplicities),
        invariant_deviation=deviation,
    )
    if args.projectors:
        payload["projectors"] = spectrum.projectors.tolist()
    rank_zero_info(evidence_to_table(deviation))
    return CommandResult(Status.OK, payload)


def cmd_fidelity(args: Namespace, config: NumericConfig) -> CommandResult:
    if args.data:
        data = BaseSpectralData.load(args.data, config.recognition_tol)
        u, v = _resolve(args.u, data.n), _resolve(args.v, data.n)
        k = 0 if args.k is None else args.k
        m = 1 if args.m is None else args.m
        labels = (_label(u), _label(v))
        evaluate: Callable[[Tensor], Tensor] = partial(corona_transfer_entries, data, k, m, u=u, v=v)
    else:
        graph, corona = _load_target(args)
        spectrum = eigendecompose(graph.adjacency(), config.group_tol)
        u, v = _resolve(args.u, graph.n, corona), _resolve(args.v, graph.n, corona)
        labels = (_label(u, corona), _label(v, corona))
        evaluate = partial(transition_entries, spectrum, u=u, v=v)

    payload: Dict[str, Any] = {"u": labels[0], "v": labels[1]}
    if args.scan is not None:
        t_min, t_max, steps = args.scan
        curve = scan_amplitudes(evaluate, t_min, t_max, int(steps))
        if args.out:
            curve.to_csv(args.out)
            payload["csv"] = args.out
        payload.update(curve.summary())
        rank_zero_info(f"max fidelity {curve.max_fidelity:.6f} at t = {curve.argmax_time:.6f}")
    else:
        z = complex(evaluate(torch.tensor([args.t], dtype=torch.float64))[0].item())
        payload.update(t=args.t, re=z.real, im=z.imag, fidelity=abs(z))
    return CommandResult(Status.OK, payload)


def _near_returns(evaluate: Callable[[Tensor], Tensor], u: int, config: NumericConfig) -> Dict[str, Any]:
    """Scan ``|H(t)_uu|`` after a not periodic verdict; a near return only flags the verdict for a closer look."""
    scan = return_probe(evaluate, u, config.probe_horizon, config.probe_step, config.probe_threshold)
    if scan.returned:
        rank_zero_warn(
            f"vertex {u} is not periodic but |H(t)_uu| > {1 - scan.threshold} at {scan.near_returns} grid points,"
            f" first at t = {scan.first_return}"
        )
    return scan.to_dict()


def _certify_periodic(args: Namespace, config: NumericConfig) -> CommandResult:
    if args.data:
        data = BaseSpectralData.load(args.data, config.recognition_tol)
        u = _resolve(args.u, data.n)
        k = 0 if args.k is None else args.k
        m = 1 if args.m is None else args.m
        support = [data.eigenvalues[j] for j in data.support(u, config.support_tol)]
        report = corona_base_periodicity(support, data.r, k, m, data.n, config, vertex=_label(u))
        payload = report.to_dict()
        payload["gap"] = gap_non_periodicity(support, data.r, k, data.n, config=config).to_dict()
        payload["bound"] = necessary_bound_check(support, data.r, k, m, data.n, config=config).to_dict()
        evaluate: Callable[[Tensor], Tensor] = partial(corona_transfer_entries, data, k, m, u=u, v=u)
    else:
        graph, corona = _load_target(args)
        spectrum = eigendecompose(graph.adjacency(), config.group_tol)
        u = _resolve(args.u, graph.n, corona)
        report = is_periodic_vertex(spectrum, u, config, vertex=_label(u, corona))
        payload = report.to_dict()
        evaluate = partial(transition_entries, spectrum, u=u, v=u)
    if report.verdict is Verdict.NOT_PERIODIC:
        payload["return_probe"] = _near_returns(evaluate, u, config)
    rank_zero_info(evidence_to_table(report.evidence))
    status = Status.INCONCLUSIVE if report.verdict is Verdict.INCONCLUSIVE else Status.OK
    return CommandResult(status, payload)


def _certify_pst(args: Namespace, config: NumericConfig) -> CommandResult:
    graph, corona = _load_target(args)
    spectrum = eigendecompose(graph.adjacency(), config.group_tol)
    u, v = _resolve(args.u, graph.n, corona), _resolve(_require_v(args), graph.n, corona)
    certificate = certify_pst(spectrum, u, v, config)
    payload = certificate.to_dict()
    payload.update(u=_label(u, corona), v=_label(v, corona))
    rank_zero_info(evidence_to_table({k: payload[k] for k in ("holds", "delta", "g", "t0", "failed_condition")}))
    inconclusive = certificate.failed_condition == "unclassifiable spectrum"
    return CommandResult(Status.INCONCLUSIVE if inconclusive else Status.OK, payload)


def _certify_pgst(args: Namespace, config: NumericConfig) -> CommandResult:
    v_text = _require_v(args)
    if args.data:
        if args.g is None:
            raise UsageError("certify pgst with --data needs --g")
        data = BaseSpectralData.load(args.data, config.recognition_tol)
        u, v, g = _resolve(args.u, data.n), _resolve(v_text, data.n), args.g
    else:
        if args.satellites and any(h.n != 1 for h in parse_satellite_specs(args.satellites, 1)):
            raise PreconditionError("the PGST constructions need K_1 satellites", ["satellites"])
        base = parse_graph_spec(args.graph)
        check_base(base)
        spectrum = eigendecompose(base.adjacency(), config.group_tol)
        u, v = _resolve(args.u, base.n), _resolve(v_text, base.n)
        certificate = certify_pst(spectrum, u, v, config)
        if not certificate:
            raise PreconditionError(f"base graph has no PST from {u} to {v}", [str(certificate.failed_condition)])
        g = certificate.g if args.g is None else args.g
        assert g is not None
        data = BaseSpectralData.from_spectrum(spectrum, [(u, u), (u, v), (v, v)], config.recognition_tol)

    zero_in_supp = None if args.zero_in_supp is None else args.zero_in_supp == "yes"
    witness = pgst_witness_time(data, u, v, g, args.eps, config=config, zero_in_supp=zero_in_supp)
    payload = witness.to_dict()
    payload.update(u=_label(u), v=_label(v))
    rank_zero_info(dicts_to_table([c.to_dict() for c in witness.preconditions.checks], keys=["check", "passed"]))
    return CommandResult(Status.OK if witness.found else Status.NOT_FOUND, payload)


def cmd_certify(args: Namespace, config: NumericConfig) -> CommandResult:
    if args.graph is None and not args.data:
        raise UsageError(f"certify {args.mode} needs a graph spec or --data")
    if args.mode == "periodic":
        return _certify_periodic(args, config)
    if args.data and args.mode == "pst":
        raise UsageError("certify pst needs a graph, spectral data only covers the corona over it")
    if args.mode == "pst":
        return _certify_pst(args, config)
    return _certify_pgst(args, config)


def _add_common(parser: ArgumentParser, data: bool = False) -> None:
    parser.add_argument("--satellites", default=None, help="comma separated satellite specs, one spec is shared")
    if data:
        parser.add_argument("--data", default=None, help="base spectral data JSON, replaces the graph")
        parser.add_argument("--k", type=int, default=None, help="satellite degree")
        parser.add_argument("--m", type=int, default=None, help="satellite order")
    add_config_args(parser, NumericConfig, NumericConfig.from_env())


def build_parser() -> ArgumentParser:
    parser = _Parser(prog="qwalk", description="Quantum walks on vertex complemented coronas")
    commands = parser.add_subparsers(dest="name", parser_class=_Parser)
    commands.required = True

    build = commands.add_parser("build", help="build a corona and its label map")
    build.add_argument("graph", help="base graph spec, eg cycle:4 or @graph.json")
    build.add_argument("--out", default=None, help="prefix of the .edges and .labels.json files")
    _add_common(build)
    build.set_defaults(command=cmd_build)

    spectrum = commands.add_parser("spectrum", help="spectrum with invariant deviations")
    spectrum.add_argument("graph", help="graph spec, the base when --satellites is given")
    spectrum.add_argument("--closed-form", action="store_true", help="assemble from the spectra of the factors")
    spectrum.add_argument("--projectors", action="store_true", help="include the eigenprojectors")
    spectrum.add_argument("--k", type=int, default=None, help="expected satellite degree")
    spectrum.add_argument("--m", type=int, default=None, help="expected satellite order")
    _add_common(spectrum)
    spectrum.set_defaults(command=cmd_spectrum)

    fidelity = commands.add_parser("fidelity", help="transition amplitude at one time or along a scan")
    fidelity.add_argument("graph", nargs="?", default=None, help="graph spec, omitted with --data")
    fidelity.add_argument("u")
    fidelity.add_argument("v")
    when = fidelity.add_mutually_exclusive_group(required=True)
    when.add_argument("--t", type=float, default=None)
    when.add_argument("--scan", type=float, nargs=3, metavar=("T0", "T1", "STEPS"), default=None)
    fidelity.add_argument("--out", default=None, help="CSV file of the scan")
    _add_common(fidelity, data=True)
    fidelity.set_defaults(command=cmd_fidelity)

    certify = commands.add_parser("certify", help="periodicity, PST or PGST verdicts")
    certify.add_argument("mode", choices=["periodic", "pst", "pgst"])
    certify.add_argument("graph", nargs="?", default=None, help="graph spec, omitted with --data")
    certify.add_argument("u")
    certify.add_argument("v", nargs="?", default=None)
    certify.add_argument("--eps", type=float, default=0.01, help="PGST fidelity gap")
    certify.add_argument("--lmax", dest="l_max", type=int, default=SUPPRESS, help="initial Kronecker scan length")
    certify.add_argument("--g", type=int, default=None, help="base PST at pi/g, needed with --data")
    certify.add_argument("--zero-in-supp", choices=["yes", "no"], default=None)
    _add_common(certify, data=True)
    certify.set_defaults(command=cmd_certify)
    return parser


def _normalize_positionals(args: Namespace) -> Namespace:
    """With ``--data`` the graph spec is omitted, so the vertices shift one positional to the left."""
    if getattr(args, "data", None) and args.name in ("fidelity", "certify") and args.graph is not None:
        shifted: List[Optional[str]] = [args.graph, args.u, args.v]
        args.u, args.v = shifted[0], shifted[1]
        args.graph = None
        if shifted[2] is not None:
            raise UsageError("with --data the graph spec is omitted")
    elif args.name == "fidelity" and args.graph is None:
        raise UsageError("fidelity needs a graph spec or --data")
    return args


def cli_main(args: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        namespace = _normalize_positionals(parser.parse_args(args))
        config = config_from_args(namespace, NumericConfig)
        result = namespace.command(namespace, config)
    except PreconditionError as err:
        result = CommandResult(Status.PRECONDITION_FAILED, {"error": str(err), "offending": err.offending})
    except (NumericError, FactorizationLimitError) as err:
        # the computation could not reach a verdict
        result = CommandResult(Status.INCONCLUSIVE, {"error": str(err), "kind": type(err).__name__})
    except (ValueError, OSError) as err:
        # parse, parameter, spec and usage errors all derive from ValueError
        result = CommandResult(Status.USAGE, {"error": str(err)})
    if result.status is not Status.OK:
        rank_zero_info(f"{result.status.value}: {result.payload.get('error', '')}")
    print(result.to_json())
    return result.exit_code


if __name__ == "__main__":
    sys.exit(cli_main())
