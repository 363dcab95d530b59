"""Command-line entry point: ``ccrlab quantify | verify | sweep``.

Exit codes: 0 success, 1 a verification or residual check failed,
2 bad input.
"""

import argparse
import csv
import json
import os
import sys

from . import props, stateio, sweeps
from .complementarity import ccr_report
from .exceptions import DimensionError, ValidationError
from .states import BipartitePureState

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2
DEFAULT_SEED = 42


class InputError(Exception):
    pass


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _dims(text):
    try:
        dims = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"--dims must be comma-separated integers, got {text!r}") from None
    if not dims or any(d < 2 for d in dims):
        raise argparse.ArgumentTypeError(f"every dimension must be >= 2, got {text!r}")
    return dims


def _resolve_seed(seed):
    if seed is not None:
        return seed
    env = os.environ.get("CCR_LAB_SEED")
    if env is None:
        return DEFAULT_SEED
    try:
        value = int(env)
    except ValueError:
        raise InputError(f"CCR_LAB_SEED must be a non-negative integer, got {env!r}") from None
    if value < 0:
        raise InputError(f"CCR_LAB_SEED must be a non-negative integer, got {env!r}")
    return value


def cmd_quantify(args, out):
    try:
        state = stateio.load(args.file)
    except OSError as exc:
        raise InputError(f"cannot read {args.file}: {exc.strerror}") from None
    if isinstance(state, BipartitePureState):
        report = ccr_report(state.reduced("A"), state)
    else:
        report = ccr_report(state)
    json.dump(report.to_dict(), out, indent=2)
    out.write("\n")
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_verify(args, out):
    seed = _resolve_seed(args.seed)
    verdicts = props.run_all(args.dims, args.trials, seed)
    if args.json:
        json.dump([v.to_dict() for v in verdicts], out, indent=2)
        out.write("\n")
    else:
        width = max(len(v.name) for v in verdicts)
        for v in verdicts:
            status = "PASS" if v.passed else "FAIL"
            out.write(f"{status}  {v.name:<{width}}  worst={v.worst_violation:.3e}  slack={v.slack:.0e}  trials={v.trials}\n")
        failed = sum(not v.passed for v in verdicts)
        out.write(f"{len(verdicts) - failed}/{len(verdicts)} checks passed (seed {seed})\n")
    return EXIT_OK if all(v.passed for v in verdicts) else EXIT_FAIL


def write_csv(header, rows, fh):
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([sweeps.format_value(v) for v in row])


def cmd_sweep(args, out):
    try:
        spec = sweeps.SweepSpec(args.experiment, args.resolution, args.out, _resolve_seed(args.seed))
    except ValueError as exc:
        raise InputError(str(exc)) from None
    header, rows = sweeps.run(spec)
    path = spec.out or f"{spec.experiment}.csv"
    if path == "-":
        write_csv(header, rows, out)
        return EXIT_OK
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            write_csv(header, rows, fh)
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc.strerror}") from None
    out.write(f"wrote {len(rows)} rows to {path}\n")
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="ccrlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    q = sub.add_parser("quantify", help="report every quantifier of a JSON state file")
    q.add_argument("file")
    q.set_defaults(func=cmd_quantify)

    v = sub.add_parser("verify", help="run identity sweeps and axiom checks")
    v.add_argument("--dims", type=_dims, default=(2, 3, 4, 8))
    v.add_argument("--trials", type=_positive_int, default=1000)
    v.add_argument("--seed", type=int, default=None)
    v.add_argument("--json", action="store_true", help="emit verdicts as a JSON array")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("sweep", help="write figure data as CSV")
    s.add_argument("--experiment", required=True, choices=sorted(sweeps.COLUMNS))
    s.add_argument("--out", default=None, help="output path, '-' for stdout")
    s.add_argument("--resolution", type=_positive_int, default=None)
    s.add_argument("--seed", type=int, default=None)
    s.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "seed", None) is not None and args.seed < 0:
        parser.error("--seed must be non-negative")
    try:
        return args.func(args, out)
    except (InputError, ValidationError, DimensionError) as exc:
        print(f"ccrlab: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
