"""Command-line interface: ``quasisim {model,canonical,classify,verify,lr,enumerate}``.

Exit codes: 0 success / equivalent, 1 verification failure, 2 usage or
input error, 3 inequivalent or not admissible, 4 falsification.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .canonical import (
    NotAdmissible,
    Triple,
    admissibility_failures,
    admissible_triples,
    canonical_subspace,
    is_hyper_normal,
    weyl_data,
)
from .divisor import as_partition
from .instance import dump_instance, load_instance, parse_pair
from .jordan import DeterminantIdentityViolation, invariant_data, multiplicity
from .lr import lr_coefficient, multiplicity_witnesses, two_row_unique
from .model import all_pairs
from .oracle import classify
from .scalars import ParseError
from .subspace import (
    NotInvariant,
    hyperinvariant_descriptors,
    projection_exponents,
    restriction,
)
from .suites import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_ERROR, EXIT_INEQUIVALENT, EXIT_FALSIFIED = 0, 1, 2, 3, 4
U64 = 2**64


class CliError(Exception):
    pass


def _seed(text: str) -> int:
    value = int(text)
    if not 0 <= value < U64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def _ints(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=_seed, default=0)
    common.add_argument("--trials", type=int, default=64)
    common.add_argument("--budget", type=int, default=200)
    common.add_argument("--exact-certificate", action="store_true")
    common.add_argument("--output", default=None)
    common.add_argument("--format", choices=("json", "text"), default="json")

    parser = argparse.ArgumentParser(prog="quasisim", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"quasisim {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("model", parents=[common], help="Jordan data of an invariant subspace instance")
    p.add_argument("instance")

    p = sub.add_parser("canonical", parents=[common], help="canonical subspace of a (theta, alpha, beta) triple")
    p.add_argument("--theta", type=_ints, required=True)
    p.add_argument("--alpha", type=_ints, required=True)
    p.add_argument("--beta", type=_ints, required=True)

    p = sub.add_parser("classify", parents=[common], help="decide quasisimilarity of two instances")
    p.add_argument("--instance-a", required=True)
    p.add_argument("--instance-b", required=True)

    p = sub.add_parser("verify", parents=[common], help="run a property suite")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--theta", type=_ints, default=None, help="single pair n0,n1 (default: sweep)")
    p.add_argument("--max-dim", type=int, default=6, help="sweep all pairs with n0+n1 <= this")

    p = sub.add_parser("lr", parents=[common], help="Littlewood-Richardson coefficients")
    p.add_argument("--lambda", dest="lam", type=_ints, default=None)
    p.add_argument("--mu", type=_ints, default=None)
    p.add_argument("--nu", type=_ints, default=None)
    p.add_argument("--scan", type=int, default=None, help="two-row uniqueness scan up to |lambda| <= SCAN")

    p = sub.add_parser("enumerate", parents=[common], help="admissible triples and hyperinvariant subspaces")
    p.add_argument("--theta", type=_ints, required=True)
    return parser


def _config(args) -> dict:
    cfg = {k: v for k, v in sorted(vars(args).items())}
    for k, v in cfg.items():
        if isinstance(v, tuple):
            cfg[k] = list(v)
    return cfg


# commands -------------------------------------------------------------------

def _load(path: str):
    try:
        return load_instance(path)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from None
    except NotInvariant:
        doc = json.loads(Path(path).read_text())
        raise CliError(f"NotInvariant: generators {json.dumps(doc.get('generators'))} do not span an invariant subspace") from None


def _subspace_report(M) -> dict:
    data = invariant_data(M)
    m0, m1 = projection_exponents(M)
    p = M.pair
    report = {
        "theta": p.to_list(),
        "dimension": M.dim,
        "basis": dump_instance(M)["generators"],
        **data.to_json(),
        "exponents": [m0, m1],
        "multiplicity": multiplicity(restriction(M)),
        "determinant_identity": sum(data.alpha) + sum(data.beta) == p.dim,
    }
    if is_hyper_normal(p, m0, m1):
        report["weyl"] = weyl_data(M).to_json()
    return report


def cmd_model(args) -> tuple:
    return _subspace_report(_load(args.instance)), EXIT_OK


def cmd_canonical(args) -> tuple:
    try:
        t = Triple(as_partition(args.theta, 2), as_partition(args.alpha, 2), as_partition(args.beta, 2))
    except ValueError as exc:
        raise CliError(str(exc)) from None
    failed = admissibility_failures(t)
    if failed:
        return {"triple": t.to_json(), "admissible": False, "error": "NotAdmissible", "failed": failed}, EXIT_INEQUIVALENT
    try:
        N = canonical_subspace(t)
    except (NotAdmissible, AssertionError) as exc:
        return {"triple": t.to_json(), "admissible": True, "error": str(exc)}, EXIT_FALSIFIED
    report = _subspace_report(N)
    verification = {
        "projection_exponents": report["exponents"],
        "expected_exponents": [t.theta[0] - t.alpha[0], t.beta[1]],
        "restriction_model_ok": list(t.alpha) == report["alpha"],
        "compression_model_ok": list(t.beta) == report["beta"],
    }
    verification["ok"] = (
        verification["projection_exponents"] == verification["expected_exponents"]
        and verification["restriction_model_ok"]
        and verification["compression_model_ok"]
    )
    return {"triple": t.to_json(), "admissible": True, "subspace": report, "verification": verification}, EXIT_OK


def cmd_classify(args) -> tuple:
    M, Mp = _load(args.instance_a), _load(args.instance_b)
    if M.pair != Mp.pair:
        raise CliError(f"ThetaMismatch: {M.pair.to_list()} vs {Mp.pair.to_list()}")
    verdict = classify(M, Mp, args.seed, args.trials, exact_certificate=args.exact_certificate)
    result = {
        "verdict": verdict.to_json(),
        "a": invariant_data(M).to_json(),
        "b": invariant_data(Mp).to_json(),
    }
    code = {"equivalent": EXIT_OK, "inequivalent": EXIT_INEQUIVALENT}.get(verdict.kind, EXIT_FALSIFIED)
    return result, code


def cmd_verify(args) -> tuple:
    if args.theta is not None:
        pairs = [parse_pair(args.theta)]
    else:
        pairs = all_pairs(args.max_dim)
    report = run_suite(args.suite, pairs, args.seed, args.budget, args.trials, exact=True)
    return report, EXIT_OK if report["ok"] else EXIT_FAIL


def cmd_lr(args) -> tuple:
    if args.scan is not None:
        found = two_row_unique(args.scan)
        return {
            "scan": args.scan,
            "counterexamples": [[list(x) for x in t] for t in found],
            "three_row_witnesses": [[list(a), list(b), list(c), k] for a, b, c, k in multiplicity_witnesses(6)],
        }, EXIT_OK if not found else EXIT_FAIL
    if args.lam is None or args.mu is None or args.nu is None:
        raise CliError("lr needs --lambda, --mu and --nu, or --scan")
    try:
        lam, mu, nu = (as_partition(x) for x in (args.lam, args.mu, args.nu))
    except ValueError as exc:
        raise CliError(str(exc)) from None
    return {"lambda": list(lam), "mu": list(mu), "nu": list(nu), "coefficient": lr_coefficient(lam, mu, nu)}, EXIT_OK


def cmd_enumerate(args) -> tuple:
    p = parse_pair(args.theta)
    triples = []
    for t in admissible_triples(p):
        N = canonical_subspace(t)
        triples.append({**t.to_json(), "basis": dump_instance(N)["generators"], "lr": lr_coefficient(t.theta, t.alpha, t.beta)})
    hyper = [{"p0": a, "p1": b} for a, b in hyperinvariant_descriptors(p)]
    return {"theta": p.to_list(), "admissible_triples": triples, "hyperinvariant": hyper}, EXIT_OK


COMMANDS = {
    "model": cmd_model,
    "canonical": cmd_canonical,
    "classify": cmd_classify,
    "verify": cmd_verify,
    "lr": cmd_lr,
    "enumerate": cmd_enumerate,
}


# rendering ------------------------------------------------------------------

def render_text(obj, prefix: str = "") -> list:
    """One ``path = json`` line per leaf; lists and dicts recurse, so the JSON is recoverable."""
    lines = []
    if isinstance(obj, dict) and obj:
        for k, v in obj.items():
            lines.extend(render_text(v, f"{prefix}.{k}" if prefix else str(k)))
    elif isinstance(obj, list) and obj and any(isinstance(x, (dict, list)) for x in obj):
        for i, v in enumerate(obj):
            lines.extend(render_text(v, f"{prefix}[{i}]"))
    else:
        lines.append(f"{prefix} = {json.dumps(obj, sort_keys=True)}")
    return lines


def render(report: dict, fmt: str) -> str:
    if fmt == "text":
        # round-trip through sorted JSON so both formats share one key order
        return "\n".join(render_text(json.loads(json.dumps(report, sort_keys=True)))) + "\n"
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    envelope = {"version": __version__, "config": _config(args)}
    try:
        result, code = COMMANDS[args.command](args)
    except (CliError, ParseError, NotInvariant, DeterminantIdentityViolation, ValueError) as exc:
        envelope["error"] = f"{type(exc).__name__}: {exc}" if not isinstance(exc, CliError) else str(exc)
        sys.stderr.write(envelope["error"] + "\n")
        code = EXIT_ERROR
        result = None
    envelope["result"] = result
    text = render(envelope, args.format)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
