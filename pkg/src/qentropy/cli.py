"""Command-line front end.

Three subcommands:

* ``compute``  -- entropies and divergences of distributions read from files
* ``bounds``   -- two-sided bound chains with their computed constants
* ``verify``   -- the randomized verification harness, as JSON lines

Distribution files are either a JSON document ``{"weights": [...]}`` or a
single-column CSV (one weight per line, optional ``weight`` header). Joint
distributions use ``{"dims": [...], "cells": [...]}`` with cells flattened in
row-major (C) order; scalar functionals treat the cells as one distribution.

Exit status: 0 clean, 1 usage or input error, 2 verification violations.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass, field

import numpy as np

from .bounds import (
    cartwright_field,
    f_divergence_sandwich,
    pairwise_spread,
    quasilinear_vs_tsallis_bounds,
    refined_maxent_bounds,
    tightest_constants,
    tsallis_cross_entropy_sandwich,
)
from .dist import ProbDist
from .divergence import (
    f_by_label,
    f_divergence,
    kl_divergence,
    neglog_generator,
    renyi_relative,
    tsallis_relative,
)
from .entropy import renyi_entropy, shannon_entropy, tsallis_entropy
from .errors import QEntropyError
from .quasilinear import psi_by_label, tsallis_quasilinear_entropy, tsallis_quasilinear_relative
from .serialize import SCHEMA, dumps, format_float
from .verify import DEFAULT_Q_GRID, REGISTRY, VerifyReport, get_case, has_failures, run_case

__all__ = ["CliConfig", "cmd_compute", "cmd_bounds", "cmd_verify", "main", "entrypoint"]

_ENTROPIES = ("tsallis", "shannon", "renyi", "quasilinear")
_DIVERGENCES = ("tsallis", "kl", "renyi", "f", "quasilinear")
_BOUND_CASES = ("thm3.1", "cor3.1", "thm3.2", "cor_dra", "thm4.2", "cor4", "cf")
# files each bounds case reads; cf takes a point file then a weight file
_BOUND_FILE_COUNT = {
    "thm3.1": 1,
    "cor3.1": 1,
    "thm3.2": 2,
    "cor_dra": 2,
    "thm4.2": 2,
    "cor4": 2,
    "cf": 2,
}
_BOUND_NEEDS_Q = {"thm3.1", "cor3.1", "thm4.2"}
_BOUND_REJECTS_Q = {"cor_dra", "cor4", "cf"}


class _CliError(Exception):
    """Usage or input problem; rendered to stderr, exit status 1."""


@dataclass(frozen=True)
class CliConfig:
    command: str
    inputs: tuple[str, ...] = ()
    q: float | None = None
    psi_label: str | None = None
    f_label: str | None = None
    output: str = "json"
    entropy: str | None = None
    divergence: str | None = None
    echo: bool = False
    case: str | None = None
    run_all: bool = False
    seed: int = 42
    trials: int = 1000
    override_hypothesis: bool = False
    q_grid: tuple[float, ...] = field(default=DEFAULT_Q_GRID)

    def __post_init__(self):
        if self.q is not None and (not math.isfinite(self.q) or self.q < 0.0):
            raise _CliError(f"error: --q must be a finite number >= 0, got {self.q}")
        if self.trials < 1:
            raise _CliError(f"error: --trials must be >= 1, got {self.trials}")
        if self.seed < 0:
            raise _CliError(f"error: --seed must be >= 0, got {self.seed}")


# ---------------------------------------------------------------------------
# input files
# ---------------------------------------------------------------------------


def _read_text(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _CliError(f"{path}: cannot read: {exc}") from None


def _parse_number_list(doc_value, path: str, key: str) -> list[float]:
    if (
        not isinstance(doc_value, list)
        or not doc_value
        or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in doc_value)
    ):
        raise _CliError(f"{path}:1: {key!r} must be a non-empty array of numbers")
    return [float(x) for x in doc_value]


def _parse_vector_file(path: str, keys: tuple[str, ...]) -> np.ndarray:
    """Read a JSON or single-column CSV file into a raw float vector."""
    text = _read_text(path)
    if text.lstrip().startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise _CliError(f"{path}:{exc.lineno}: invalid JSON: {exc.msg}") from None
        if not isinstance(doc, dict):
            raise _CliError(f"{path}:1: expected a JSON object")
        if "dims" in doc or "cells" in doc:
            for key in ("dims", "cells"):
                if key not in doc:
                    raise _CliError(f"{path}:1: joint document needs both 'dims' and 'cells'")
            dims = doc["dims"]
            if (
                not isinstance(dims, list)
                or not dims
                or not all(isinstance(d, int) and not isinstance(d, bool) and d >= 1 for d in dims)
            ):
                raise _CliError(f"{path}:1: 'dims' must be a non-empty array of integers >= 1")
            cells = _parse_number_list(doc["cells"], path, "cells")
            if len(cells) != int(np.prod(dims)):
                raise _CliError(
                    f"{path}:1: 'cells' has {len(cells)} entries, dims {dims} need "
                    f"{int(np.prod(dims))}"
                )
            return np.asarray(cells)
        for key in keys:
            if key in doc:
                return np.asarray(_parse_number_list(doc[key], path, key))
        raise _CliError(f"{path}:1: expected a JSON object with one of {list(keys)}")
    values: list[float] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if not s:
            continue
        try:
            values.append(float(s))
        except ValueError:
            if lineno == 1 and s.lower() in ("weight", "value"):
                continue
            raise _CliError(f"{path}:{lineno}: not a number: {s!r}") from None
    if not values:
        raise _CliError(f"{path}: no values found")
    return np.asarray(values)


def _load_dist(path: str) -> ProbDist:
    raw = _parse_vector_file(path, ("weights",))
    try:
        return ProbDist(raw)
    except QEntropyError as exc:
        raise _CliError(f"{path}: {exc}") from None


def _load_points(path: str) -> np.ndarray:
    return _parse_vector_file(path, ("values", "weights"))


# ---------------------------------------------------------------------------
# compute
# ---------------------------------------------------------------------------


def cmd_compute(config: CliConfig) -> dict:
    if config.echo:
        p = _load_dist(config.inputs[0])
        return {"schema": SCHEMA, "weights": [float(w) for w in p.weights]}

    doc: dict = {"schema": SCHEMA, "command": "compute"}
    if config.entropy is not None:
        kind = config.entropy
        p = _load_dist(config.inputs[0])
        if kind == "tsallis":
            value = tsallis_entropy(p, config.q)
            name = "tsallis_entropy"
        elif kind == "shannon":
            value = shannon_entropy(p)
            name = "shannon_entropy"
        elif kind == "renyi":
            value = renyi_entropy(p, config.q)
            name = "renyi_entropy"
        else:
            psi = psi_by_label(config.psi_label, config.q)
            value = tsallis_quasilinear_entropy(psi, p, config.q)
            name = "quasilinear_entropy"
            doc["psi"] = config.psi_label
    else:
        kind = config.divergence
        p = _load_dist(config.inputs[0])
        r = _load_dist(config.inputs[1])
        if kind == "tsallis":
            value = tsallis_relative(p, r, config.q)
            name = "tsallis_divergence"
        elif kind == "kl":
            value = kl_divergence(p, r)
            name = "kl_divergence"
        elif kind == "renyi":
            value = renyi_relative(p, r, config.q)
            name = "renyi_divergence"
        elif kind == "f":
            f = f_by_label(config.f_label, config.q)
            value = f_divergence(f, p, r)
            name = "f_divergence"
            doc["f"] = config.f_label
        else:
            psi = psi_by_label(config.psi_label, config.q)
            value = tsallis_quasilinear_relative(psi, p, r, config.q)
            name = "quasilinear_divergence"
            doc["psi"] = config.psi_label
    doc["functional"] = name
    if config.q is not None:
        doc["q"] = float(config.q)
    doc["inputs"] = list(config.inputs)
    doc["value"] = float(value)
    return doc


# ---------------------------------------------------------------------------
# bounds
# ---------------------------------------------------------------------------


def cmd_bounds(config: CliConfig) -> dict:
    case = config.case
    q = config.q
    if case == "thm3.1":
        r = _load_dist(config.inputs[0])
        psi = psi_by_label(config.psi_label, q)
        rep = quasilinear_vs_tsallis_bounds(psi, r, q)
        constants = {
            "n_min_r": r.n * float(r.weights.min()),
            "n_max_r": r.n * float(r.weights.max()),
        }
    elif case == "cor3.1":
        r = _load_dist(config.inputs[0])
        rep = refined_maxent_bounds(r, q)
        constants = {
            "n_min_r": r.n * float(r.weights.min()),
            "n_max_r": r.n * float(r.weights.max()),
        }
    elif case in ("thm3.2", "cor_dra"):
        p = _load_dist(config.inputs[0])
        r = _load_dist(config.inputs[1])
        f = f_by_label(config.f_label, q) if case == "thm3.2" else neglog_generator()
        rep = f_divergence_sandwich(f, p, r)
        ratios = r.weights / p.weights
        constants = {
            "min_ratio": float(ratios.min()),
            "max_ratio": float(ratios.max()),
            "sum_t": float((p.weights**2 / r.weights).sum()),
        }
        if case == "thm3.2":
            constants["f"] = config.f_label
    elif case in ("thm4.2", "cor4"):
        p = _load_dist(config.inputs[0])
        r = _load_dist(config.inputs[1])
        q_eff = 1.0 if case == "cor4" else q
        dr = tightest_constants(p, r, q_eff)
        rep = tsallis_cross_entropy_sandwich(p, r, q_eff, dr.m, dr.M)
        q = q_eff
        constants = {
            "m_q": dr.m,
            "M_q": dr.M,
            "interval_lo": dr.interval[0],
            "interval_hi": dr.interval[1],
        }
    else:  # cf
        xs = _load_points(config.inputs[0])
        p = _load_dist(config.inputs[1])
        rep = cartwright_field(xs, p)
        constants = {
            "min_x": float(xs.min()),
            "max_x": float(xs.max()),
            "spread": pairwise_spread(xs, p),
        }
    doc: dict = {"schema": SCHEMA, "command": "bounds", "case": case}
    if q is not None:
        doc["q"] = float(q)
    doc["inputs"] = list(config.inputs)
    doc["report"] = rep.as_dict()
    doc["constants"] = constants
    return doc


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def _env_tol() -> float | None:
    raw = os.environ.get("QENTROPY_CHECK_TOL")
    if raw is None:
        return None
    try:
        tol = float(raw)
    except ValueError:
        raise _CliError(f"error: QENTROPY_CHECK_TOL is not a number: {raw!r}") from None
    if not math.isfinite(tol) or tol < 0.0:
        raise _CliError(f"error: QENTROPY_CHECK_TOL must be finite and >= 0, got {raw!r}")
    return tol


def cmd_verify(config: CliConfig) -> tuple[list[VerifyReport], int]:
    tol = _env_tol()
    cases = list(REGISTRY.values()) if config.run_all else [get_case(config.case)]
    reports = [
        run_case(
            c,
            trials=config.trials,
            seed=config.seed,
            q_grid=config.q_grid,
            override_hypothesis=config.override_hypothesis,
            tol=tol,
        )
        for c in cases
    ]
    return reports, (2 if has_failures(reports) else 0)


# ---------------------------------------------------------------------------
# argument plumbing
# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _CliError(f"{self.format_usage().rstrip()}\nerror: {message}")


_FILE_HELP = (
    "distribution files are JSON {\"weights\": [...]} or single-column CSV "
    "(optional 'weight' header); joint distributions are JSON "
    "{\"dims\": [...], \"cells\": [...]} with cells in row-major (C) order"
)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qentropy", description="Generalized-entropy calculations and checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser(
        "compute",
        help="entropies and divergences from distribution files",
        epilog=_FILE_HELP,
    )
    pc.add_argument("--entropy", choices=_ENTROPIES)
    pc.add_argument("--divergence", choices=_DIVERGENCES)
    pc.add_argument("--q", type=float, default=None, help="entropic index, q >= 0")
    pc.add_argument("--psi", default=None, help="mean generator label (identity, log, lnq, power)")
    pc.add_argument("--f", default=None, help="convex generator label (tsallis, xlogx, neglog)")
    pc.add_argument("--echo", action="store_true", help="re-emit the parsed distribution")
    pc.add_argument("--output", choices=("json", "table"), default="json")
    pc.add_argument("inputs", nargs="+", metavar="FILE")

    pb = sub.add_parser("bounds", help="two-sided bound chains with constants", epilog=_FILE_HELP)
    pb.add_argument("--case", required=True, choices=_BOUND_CASES)
    pb.add_argument("--q", type=float, default=None)
    pb.add_argument("--psi", default=None)
    pb.add_argument("--f", default=None)
    pb.add_argument("--output", choices=("json", "table"), default="json")
    pb.add_argument("inputs", nargs="+", metavar="FILE")

    pv = sub.add_parser("verify", help="run the randomized verification harness")
    pv.add_argument("--all", action="store_true", dest="run_all", help="run every registered case")
    pv.add_argument("--case", default=None, help="one case id (see --list)")
    pv.add_argument("--list", action="store_true", help="list case ids and exit")
    pv.add_argument("--seed", type=int, default=42)
    pv.add_argument("--trials", type=int, default=1000)
    pv.add_argument("--q", type=float, default=None, help="restrict the q grid to one value")
    pv.add_argument(
        "--override-hypothesis",
        action="store_true",
        help="probe q outside a case's hypothesis; violations become informational",
    )
    pv.add_argument("--output", choices=("json", "table"), default="json")
    return parser


def _config_from_args(args) -> CliConfig:
    if args.command == "compute":
        if args.echo:
            if args.entropy or args.divergence or args.psi or args.f or args.q is not None:
                raise _CliError("error: --echo takes no functional flags")
            if len(args.inputs) != 1:
                raise _CliError("error: --echo reads exactly one file")
        else:
            if (args.entropy is None) == (args.divergence is None):
                raise _CliError("error: pass exactly one of --entropy or --divergence (or --echo)")
            kind = args.entropy or args.divergence
            want = 1 if args.entropy else 2
            if len(args.inputs) != want:
                raise _CliError(
                    f"error: --{'entropy' if args.entropy else 'divergence'} {kind} reads "
                    f"exactly {want} file{'s' if want > 1 else ''}, got {len(args.inputs)}"
                )
            no_q = ("shannon",) if args.entropy else ("kl",)
            needs_q = ("tsallis", "renyi", "quasilinear")
            if kind in no_q and args.q is not None:
                raise _CliError(f"error: --q is not accepted for {kind}")
            if kind in needs_q and args.q is None:
                raise _CliError(f"error: {kind} needs --q")
            if kind == "quasilinear" and args.psi is None:
                raise _CliError("error: quasilinear needs --psi")
            if kind != "quasilinear" and args.psi is not None:
                raise _CliError("error: --psi only applies to quasilinear")
            if args.divergence == "f" and args.f is None:
                raise _CliError("error: --divergence f needs --f")
            if args.f is not None and args.divergence != "f":
                raise _CliError("error: --f only applies to --divergence f")
        return CliConfig(
            command="compute",
            inputs=tuple(args.inputs),
            q=args.q,
            psi_label=args.psi,
            f_label=args.f,
            output=args.output,
            entropy=args.entropy,
            divergence=args.divergence,
            echo=args.echo,
        )
    if args.command == "bounds":
        want = _BOUND_FILE_COUNT[args.case]
        if len(args.inputs) != want:
            raise _CliError(
                f"error: bounds --case {args.case} reads exactly {want} "
                f"file{'s' if want > 1 else ''}, got {len(args.inputs)}"
            )
        if args.case in _BOUND_NEEDS_Q and args.q is None:
            raise _CliError(f"error: bounds --case {args.case} needs --q")
        if args.case in _BOUND_REJECTS_Q and args.q is not None:
            raise _CliError(f"error: bounds --case {args.case} does not take --q")
        if args.case == "thm3.1" and args.psi is None:
            raise _CliError("error: bounds --case thm3.1 needs --psi")
        if args.psi is not None and args.case != "thm3.1":
            raise _CliError("error: --psi only applies to thm3.1")
        if args.case == "thm3.2" and args.f is None:
            raise _CliError("error: bounds --case thm3.2 needs --f")
        if args.f is not None and args.case != "thm3.2":
            raise _CliError("error: --f only applies to thm3.2")
        return CliConfig(
            command="bounds",
            inputs=tuple(args.inputs),
            q=args.q,
            psi_label=args.psi,
            f_label=args.f,
            output=args.output,
            case=args.case,
        )
    # verify
    if getattr(args, "list", False):
        return CliConfig(command="verify", case="--list", output=args.output)
    if args.run_all == (args.case is not None):
        raise _CliError("error: pass exactly one of --all or --case")
    return CliConfig(
        command="verify",
        q=args.q,
        output=args.output,
        case=args.case,
        run_all=args.run_all,
        seed=args.seed,
        trials=args.trials,
        override_hypothesis=args.override_hypothesis,
        q_grid=DEFAULT_Q_GRID if args.q is None else (args.q,),
    )


def _fmt_value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return format_float(v)
    return str(v)


def _print_doc(doc: dict, output: str) -> None:
    if output == "json":
        print(dumps(doc))
        return
    for key, value in doc.items():
        if key in ("schema", "command"):
            continue
        if isinstance(value, dict):
            print(f"{key}:")
            for k2, v2 in value.items():
                print(f"  {k2}: {_fmt_value(v2)}")
        elif isinstance(value, (list, tuple)):
            print(f"{key}: {dumps(list(value))}")
        else:
            print(f"{key}: {_fmt_value(value)}")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        config = _config_from_args(args)
        if config.command == "compute":
            doc = cmd_compute(config)
            if config.echo and config.output == "table":
                print("weight")
                for w in doc["weights"]:
                    print(format_float(w))
            else:
                _print_doc(doc, config.output)
            return 0
        if config.command == "bounds":
            _print_doc(cmd_bounds(config), config.output)
            return 0
        if config.case == "--list":
            for cid, case in REGISTRY.items():
                print(f"{cid}: {case.description}")
            return 0
        reports, status = cmd_verify(config)
        for rep in reports:
            if config.output == "json":
                print(rep.to_json_line())
            else:
                flag = "" if rep.in_hypothesis else " (outside hypothesis)"
                print(
                    f"{rep.case}: trials={rep.trials} violations={rep.violations} "
                    f"worst={format_float(rep.worst_violation)}{flag}"
                )
        return status
    except _CliError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    except QEntropyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
