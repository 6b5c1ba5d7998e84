"""Command-line front end.

    npls analyze DATA.json
    npls realize DATA.json --form pick|model|coupling
    npls eval DATA.json --func W|V --grid re0,re1,im0,im1,N
    npls verify [DATA.json] [--seed N] [--system SYSTEM.json]
    npls regimes DATA.json
    npls synth DATA.json [--bode [PATH]]

Exit codes: 0 success, 1 failed verification or other domain error,
2 invalid data, 3 Pick matrix not strictly positive, 4 unpaired node.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from . import analytic, invariants, serialize, synthesis
from .errors import (
    InvalidData,
    ModelRequiresValuesI,
    NPLSError,
    PickNotPositive,
    UnpairedNode,
)
from .pick import TOL_POS, InterpolationData, build_pick_matrices, check_positivity
from .realizations import (
    build_model_delta,
    build_pick_form,
    coupling_of_nodes,
    sample_problem,
)
from .system import LSystem
from .verify import verify_data

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2
EXIT_NOT_POSITIVE = 3
EXIT_UNPAIRED = 4

COMMANDS = ("analyze", "realize", "eval", "verify", "regimes", "synth")
FORM_CHOICES = ("pick", "model", "coupling")


@dataclass(frozen=True)
class GridSpec:
    re_min: float
    re_max: float
    im_min: float
    im_max: float
    steps: int

    def points(self) -> np.ndarray:
        return analytic.rect_grid(self.re_min, self.re_max, self.im_min, self.im_max, self.steps)


@dataclass(frozen=True)
class RunConfig:
    command: str
    input_path: Optional[Path] = None
    form: Optional[str] = None
    func: Optional[str] = None
    grid_spec: Optional[GridSpec] = None
    output_path: Optional[Path] = None
    tol_pos: float = TOL_POS
    tol_node: float = invariants.TOL_NODE
    bode: Optional[str] = None
    seed: Optional[int] = None
    size: int = 4
    system_path: Optional[Path] = None


def parse_grid(text: str) -> GridSpec:
    parts = text.split(",")
    if len(parts) != 5:
        raise argparse.ArgumentTypeError("grid must be re0,re1,im0,im1,N")
    try:
        re0, re1, im0, im1 = (float(p) for p in parts[:4])
        steps = int(parts[4])
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad grid spec {text!r}") from exc
    if steps < 1:
        raise argparse.ArgumentTypeError("grid needs N >= 1")
    return GridSpec(re0, re1, im0, im1, steps)


# -- output helpers -----------------------------------------------------------


def _use_color(stream) -> bool:
    return "NPLS_NO_COLOR" not in os.environ and hasattr(stream, "isatty") and stream.isatty()


def _status(ok: bool, stream) -> str:
    word = "PASS" if ok else "FAIL"
    if not _use_color(stream):
        return word
    return f"\033[{32 if ok else 31}m{word}\033[0m"


def _emit(text: str, cfg: RunConfig, stdout) -> None:
    if cfg.output_path is None:
        stdout.write(text)
    else:
        cfg.output_path.write_text(text, encoding="utf-8", newline="\n")


def _load_data(cfg: RunConfig) -> InterpolationData:
    if cfg.input_path is None:
        raise InvalidData("an input data file is required")
    try:
        text = cfg.input_path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InvalidData(f"cannot read {cfg.input_path}: {exc.strerror}") from exc
    return serialize.data_from_json(text)


def _realize(data: InterpolationData, form: str, tol_pos: float) -> LSystem:
    if form == "pick":
        return build_pick_form(data, tol_pos)
    if not data.all_values_i:
        raise ModelRequiresValuesI(f"form '{form}' requires every value to equal i")
    return build_model_delta(data) if form == "model" else coupling_of_nodes(data.nodes)


# -- subcommands --------------------------------------------------------------


def run_analyze(cfg: RunConfig, stdout=sys.stdout, stderr=sys.stderr) -> int:
    data = _load_data(cfg)
    report_pos = check_positivity(build_pick_matrices(data).P, cfg.tol_pos)
    if not report_pos.strictly_positive:
        raise PickNotPositive(
            f"Pick matrix is not strictly positive (min eigenvalue {report_pos.min_eigenvalue:.3e})"
        )
    pick = build_pick_form(data, cfg.tol_pos)
    s_sys = invariants.entropy_from_system(pick, cfg.tol_node)
    entropy_routes = {"system": s_sys.value if s_sys.finite else float("inf")}
    dissipation_routes = {
        "entropy": invariants.dissipation_from_entropy(s_sys),
        "operator": invariants.dissipation_operator(pick),
    }
    regime, offending = None, []
    if data.all_values_i:
        s_nodes = invariants.entropy_from_nodes(data.nodes, cfg.tol_node)
        entropy_routes["nodes"] = s_nodes.value if s_nodes.finite else float("inf")
        dissipation_routes["nodes"] = invariants.dissipation_from_nodes(data.nodes, cfg.tol_node)
        cls = invariants.classify_regime(data.nodes, cfg.tol_node)
        regime, offending = cls.kind.value, cls.offending_nodes
    try:
        kappa = invariants.compute_kappa(pick, cfg.tol_node)
    except NPLSError:
        kappa = None
    report = {
        "m": data.m,
        "pick": {
            "min_eigenvalue": report_pos.min_eigenvalue,
            "matrix_norm": report_pos.matrix_norm,
            "strictly_positive": report_pos.strictly_positive,
            "condition_estimate": report_pos.condition_estimate,
        },
        "entropy": {"finite": s_sys.finite, "value": s_sys.value},
        "entropy_routes": entropy_routes,
        "dissipation": 1.0 if not s_sys.finite else dissipation_routes["entropy"],
        "dissipation_routes": dissipation_routes,
        "regime": regime,
        "offending_nodes": offending,
        "kappa": kappa,
    }
    _emit(serialize.report_to_json(report), cfg, stdout)
    return EXIT_OK


def run_realize(cfg: RunConfig, stdout=sys.stdout, stderr=sys.stderr) -> int:
    data = _load_data(cfg)
    sys_ = _realize(data, cfg.form or "pick", cfg.tol_pos)
    _emit(serialize.system_to_json(sys_), cfg, stdout)
    return EXIT_OK


def run_eval(cfg: RunConfig, stdout=sys.stdout, stderr=sys.stderr) -> int:
    data = _load_data(cfg)
    sys_ = _realize(data, cfg.form or "pick", cfg.tol_pos)
    if cfg.grid_spec is None:
        raise InvalidData("eval needs --grid re0,re1,im0,im1,N")
    points = cfg.grid_spec.points()
    fn = analytic.transfer if (cfg.func or "W") == "W" else analytic.impedance
    values = []
    for z in points:
        try:
            values.append(fn(sys_, z))
        except NPLSError:
            stderr.write(f"warning: {z} is not a regular point; written as nan\n")
            values.append(None)
    _emit(serialize.grid_csv(points, values), cfg, stdout)
    return EXIT_OK


def run_verify(cfg: RunConfig, stdout=sys.stdout, stderr=sys.stderr) -> int:
    extra = {}
    if cfg.input_path is None:
        if cfg.seed is None:
            raise InvalidData("verify needs a data file or --seed")
        data, generator = sample_problem(cfg.seed, cfg.size)
        extra["generator"] = generator
    else:
        data = _load_data(cfg)
    if cfg.system_path is not None:
        try:
            text = cfg.system_path.read_text(encoding="utf-8")
        except OSError as exc:
            raise InvalidData(f"cannot read {cfg.system_path}: {exc.strerror}") from exc
        extra["supplied"] = serialize.system_from_json(text)
    report = verify_data(data, extra, cfg.tol_pos, cfg.tol_node)
    for c in report.checks:
        stderr.write(f"{_status(c.passed, stderr)} {c.name}: {c.deviation:.3e} (tol {c.tol:g})\n")
    _emit(serialize.report_to_json(report.to_dict()), cfg, stdout)
    return EXIT_OK if report.passed else EXIT_FAILED


def run_regimes(cfg: RunConfig, stdout=sys.stdout, stderr=sys.stderr) -> int:
    data = _load_data(cfg)
    cls = invariants.classify_regime(data.nodes, cfg.tol_node)
    report = {"regime": cls.kind.value, "offending_nodes": cls.offending_nodes}
    _emit(serialize.report_to_json(report), cfg, stdout)
    return EXIT_OK


def run_synth(cfg: RunConfig, stdout=sys.stdout, stderr=sys.stderr) -> int:
    data = _load_data(cfg)
    config = synthesis.detect_symmetric(data.nodes)
    mi = synthesis.model_impedance(config)
    net = synthesis.synthesize_lc(mi)
    netlist = synthesis.emit_netlist(net)
    if len(config.pairs) >= 2:
        # the model impedance is a superposition and need not interpolate
        v_model = synthesis.eval_model_impedance(mi, 1j)
        v_canon = analytic.impedance_closed_form(data.nodes, 1j)
        stderr.write(
            f"note: model V(i) = {v_model:.12g}, canonical V(i) = {v_canon:.12g}; "
            "these differ in general for two or more pairs\n"
        )
    if cfg.bode is None:
        _emit(netlist, cfg, stdout)
        return EXIT_OK
    csv = synthesis.bode_csv(net)
    if cfg.bode != "-":
        _emit(netlist, cfg, stdout)
        Path(cfg.bode).write_text(csv, encoding="utf-8", newline="\n")
    elif cfg.output_path is not None:
        _emit(netlist, cfg, stdout)
        bode_path = cfg.output_path.with_name(cfg.output_path.stem + ".bode.csv")
        bode_path.write_text(csv, encoding="utf-8", newline="\n")
    else:
        stdout.write(netlist + "\n" + csv)
    return EXIT_OK


RUNNERS = {
    "analyze": run_analyze,
    "realize": run_realize,
    "eval": run_eval,
    "verify": run_verify,
    "regimes": run_regimes,
    "synth": run_synth,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="npls", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("input", nargs="?" if name == "verify" else None, type=Path)
        p.add_argument("--out", type=Path, default=None)
        p.add_argument("--tol-pos", type=float, default=TOL_POS)
        p.add_argument("--tol-node", type=float, default=invariants.TOL_NODE)
        if name in ("realize", "eval"):
            p.add_argument("--form", choices=FORM_CHOICES, default="pick")
        if name == "eval":
            p.add_argument("--func", choices=("W", "V"), default="W")
            p.add_argument("--grid", type=parse_grid, required=True)
        if name == "verify":
            p.add_argument("--seed", type=int, default=None)
            p.add_argument("--size", type=int, default=4, help="number of nodes drawn with --seed")
            p.add_argument("--system", type=Path, default=None, help="extra system JSON to cross-check")
        if name == "synth":
            p.add_argument(
                "--bode", nargs="?", const="-", default=None, metavar="PATH",
                help="also write frequency-response CSV (to PATH, next to --out, or stdout)",
            )
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        input_path=args.input,
        form=getattr(args, "form", None),
        func=getattr(args, "func", None),
        grid_spec=getattr(args, "grid", None),
        output_path=args.out,
        tol_pos=args.tol_pos,
        tol_node=args.tol_node,
        bode=getattr(args, "bode", None),
        seed=getattr(args, "seed", None),
        size=getattr(args, "size", 4),
        system_path=getattr(args, "system", None),
    )


def main(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    cfg = config_from_args(build_parser().parse_args(argv))
    try:
        return RUNNERS[cfg.command](cfg, stdout, stderr)
    except (InvalidData, ModelRequiresValuesI) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_INVALID
    except PickNotPositive as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_NOT_POSITIVE
    except UnpairedNode as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_UNPAIRED
    except NPLSError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
