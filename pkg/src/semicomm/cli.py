"""Command-line entry point.

Every subcommand builds one payload dict.  ``--format json`` prints it as a
single sorted-key document; ``--format human`` prints the same values as
``key: value`` lines.  Exit codes: 0 success, 1 assertion false or
counterexample, 2 usage or input error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass

from . import core
from .commutator import DEFAULT_CUBE_CAP, DEFAULT_MAX_DIMENSION, centralizes, commutator
from .congruence import DEFAULT_LATTICE_CAP, Congruence, all_congruences, is_congruence, parse_partition
from .corpus import FILTERS, enumerate_semigroups, load_manifest
from .errors import BudgetExceeded, InputError, NotACongruence, SemicommError
from .formats import load_algebra
from .series import DEFAULT_MAX_ARITY, DEFAULT_MAX_TERMS, degrees
from .structure import inverse_supernilpotent_decomposition, orthodox_cs_decomposition, warne_decomposition
from .theorems import SuiteBudget, verify_theorem_suite

SCHEMA_VERSION = 1
EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


@dataclass(frozen=True)
class CommandConfig:
    command: str
    source: str | None
    fmt: str = "human"
    cube_cap: int = DEFAULT_CUBE_CAP
    lattice_cap: int = DEFAULT_LATTICE_CAP
    max_arity: int = DEFAULT_MAX_ARITY
    max_terms: int = DEFAULT_MAX_TERMS
    assert_: bool = False
    workers: int = 1

    @property
    def budget(self):
        return {"cap": self.cube_cap, "max_dimension": DEFAULT_MAX_DIMENSION}


class _Usage(InputError):
    pass


# -- subcommands ----------------------------------------------------------
# each returns (payload, verdict); verdict is None when --assert does not apply


def _congruence_arg(S, text):
    if text == "1":
        return Congruence.one(S.order)
    if text == "0":
        return Congruence.zero(S.order)
    theta = parse_partition(text, S.order)
    if not is_congruence(S, theta):
        raise NotACongruence(f"{text} is not a congruence")
    return theta


def cmd_props(cfg, args, S):
    props = core.classify(S)
    payload = {"properties": props}
    pair = core.non_closed_idempotent_pair(S) if props["regular"] else None
    if pair is not None:
        e, f = pair
        ef = S.mul(e, f)
        payload["orthodox_witness"] = {
            "pair": [S.name(e), S.name(f)],
            "product": S.name(ef),
            "product_squared": S.name(S.mul(ef, ef)),
        }
    verdict = None
    if cfg.assert_ and not args.property:
        raise _Usage("--assert needs --property for props")
    if args.property:
        if args.property not in props or not isinstance(props[args.property], bool):
            raise _Usage(f"unknown boolean property {args.property!r}")
        verdict = props[args.property]
    return payload, verdict


def cmd_congruences(cfg, args, S):
    lat = all_congruences(S, cap=cfg.lattice_cap)
    payload = {
        "count": len(lat),
        "congruences": [str(m) for m in lat],
        "covers": [list(c) for c in lat.covers()],
    }
    return payload, None


def cmd_commutator(cfg, args, S):
    if args.alphas:
        alphas = [_congruence_arg(S, a) for a in args.alphas]
        if args.arity is not None and args.arity != len(alphas):
            raise _Usage(f"--arity {args.arity} but {len(alphas)} congruences given")
    else:
        alphas = [Congruence.one(S.order)] * (args.arity or 2)
    c = commutator(S, alphas, workers=cfg.workers, **cfg.budget)
    return {
        "arity": len(alphas),
        "alphas": [str(a) for a in alphas],
        "commutator": str(c),
        "is_zero": c.is_zero(),
    }, c.is_zero()


def cmd_centralize(cfg, args, S):
    alphas = [_congruence_arg(S, a) for a in args.alphas]
    delta = _congruence_arg(S, args.delta)
    res = centralizes(S, alphas, delta, **cfg.budget)
    return {
        "alphas": [str(a) for a in alphas],
        "delta": str(delta),
        "holds": res.holds,
        "witness": list(res.witness) if res.witness is not None else None,
    }, res.holds


def cmd_degrees(cfg, args, S):
    reps = degrees(S, max_terms=cfg.max_terms, max_arity=cfg.max_arity, **cfg.budget)
    return {k: v.to_dict() for k, v in sorted(reps.items())}, None


def cmd_decompose(cfg, args, S):
    if args.kind == "warne":
        d = warne_decomposition(S, **cfg.budget)
    elif args.kind == "orthodox":
        d = orthodox_cs_decomposition(S)
    else:
        d = inverse_supernilpotent_decomposition(S, max_arity=cfg.max_arity, **cfg.budget)
    return {"kind": args.kind, "exists": d is not None, "decomposition": d.to_dict() if d else None}, d is not None


def cmd_enumerate(cfg, args, S):
    filters = sorted(set(args.filter or ()))
    tables = [[list(r) for r in T.rows] for T in enumerate_semigroups(args.order, filters)]
    return {"order": args.order, "filters": filters, "count": len(tables), "tables": tables}, None


def cmd_verify_theorems(cfg, args, S):
    manifest = load_manifest(args.corpus)
    budget = SuiteBudget(
        max_arity=cfg.max_arity,
        max_terms=cfg.max_terms,
        cube_cap=cfg.cube_cap,
        lattice_cap=cfg.lattice_cap,
    )
    report = verify_theorem_suite(manifest.algebras(), budget, workers=cfg.workers, theorems=args.theorem)
    report.pop("schema_version")
    if args.out:
        from pathlib import Path

        Path(args.out).write_text(json.dumps(report, indent=2, sort_keys=True) + "\n")
    if cfg.fmt == "human":
        # per-algebra rows only in the structured document
        report = {k: v for k, v in report.items() if k != "results"}
    return report, not report["counterexamples"]


COMMANDS = {
    "props": cmd_props,
    "congruences": cmd_congruences,
    "commutator": cmd_commutator,
    "centralize": cmd_centralize,
    "degrees": cmd_degrees,
    "decompose": cmd_decompose,
    "enumerate": cmd_enumerate,
    "verify-theorems": cmd_verify_theorems,
}
NEEDS_SOURCE = {"props", "congruences", "commutator", "centralize", "degrees", "decompose"}
ASSERTABLE = {"props", "commutator", "centralize", "decompose"}


# -- output ---------------------------------------------------------------


def _scalar(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "none"
    return str(v)


def _inline(v):
    if isinstance(v, list):
        if not v:
            return "[]"
        sep = "; " if any(isinstance(x, list) for x in v) else " "
        return sep.join(_inline(x) for x in v)
    return _scalar(v)


def render_human(payload, prefix=""):
    lines = []
    for key, v in payload.items():
        name = f"{prefix}{key}"
        if isinstance(v, dict):
            lines.extend(render_human(v, name + "."))
        elif isinstance(v, list) and all(not isinstance(x, (list, dict)) for x in v):
            lines.append(f"{name}: {_inline(v)}")
        elif isinstance(v, list):
            for i, x in enumerate(v):
                if isinstance(x, dict):
                    lines.extend(render_human(x, f"{name}[{i}]."))
                else:
                    lines.append(f"{name}[{i}]: {_inline(x)}")
        else:
            lines.append(f"{name}: {_scalar(v)}")
    return lines


def _emit(cfg, payload, out):
    if cfg.fmt == "json":
        doc = {"schema_version": SCHEMA_VERSION, "command": cfg.command, **payload}
        out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        out.write("\n".join(render_human(payload)) + "\n")


def _emit_error(cfg, exc, code, out, err):
    kind = "budget_exceeded" if code == EXIT_BUDGET else "input_error"
    info = {"kind": kind, "type": type(exc).__name__, "message": str(exc)}
    for attr in ("witness", "pair", "index"):
        if getattr(exc, attr, None) is not None:
            info[attr] = list(getattr(exc, attr)) if isinstance(getattr(exc, attr), tuple) else getattr(exc, attr)
    if cfg is not None and cfg.fmt == "json":
        out.write(json.dumps({"schema_version": SCHEMA_VERSION, "error": info}, indent=2, sort_keys=True) + "\n")
    else:
        err.write(f"error ({info['type']}): {info['message']}\n")


# -- argument parsing -----------------------------------------------------


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["human", "json", "dot"], default="human")
    common.add_argument("--cube-cap", type=_positive, default=DEFAULT_CUBE_CAP)
    common.add_argument("--lattice-cap", type=_positive, default=DEFAULT_LATTICE_CAP)
    common.add_argument("--max-arity", type=_positive, default=DEFAULT_MAX_ARITY)
    common.add_argument("--max-terms", type=_positive, default=DEFAULT_MAX_TERMS)
    common.add_argument("--workers", type=_positive, default=1)
    common.add_argument("--assert", dest="assert_", action="store_true",
                        help="exit 1 when the command's verdict is false")
    common.add_argument("--meta", action="store_true", help="add run metadata (timing) to json output")

    parser = argparse.ArgumentParser(prog="semicomm", description="Finite semigroup commutator toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)
    src_help = "builtin:NAME, rees:PATH, or a Cayley table file (.json files are Rees specs)"

    p = sub.add_parser("props", parents=[common], help="structural classification")
    p.add_argument("source", help=src_help)
    p.add_argument("--property", help="boolean property checked by --assert")

    p = sub.add_parser("congruences", parents=[common], help="congruence lattice")
    p.add_argument("source", help=src_help)

    p = sub.add_parser("commutator", parents=[common], help="k-ary commutator")
    p.add_argument("source", help=src_help)
    p.add_argument("--arity", type=int)
    p.add_argument("--alphas", nargs="+", metavar="PARTITION",
                   help="congruences as {0,1|2,...}, or 0 / 1")

    p = sub.add_parser("centralize", parents=[common], help="decide C(alphas; delta)")
    p.add_argument("source", help=src_help)
    p.add_argument("--alphas", nargs="+", required=True, metavar="PARTITION")
    p.add_argument("--delta", required=True, metavar="PARTITION")

    p = sub.add_parser("degrees", parents=[common], help="nilpotent, solvable, supernilpotent degrees")
    p.add_argument("source", help=src_help)

    p = sub.add_parser("decompose", parents=[common], help="group x left zero x right zero decomposition")
    p.add_argument("source", help=src_help)
    p.add_argument("--kind", choices=["warne", "orthodox", "inverse"], required=True)

    p = sub.add_parser("enumerate", parents=[common], help="semigroups of order n up to isomorphism")
    p.add_argument("--order", type=_positive, required=True)
    p.add_argument("--filter", action="append", choices=sorted(FILTERS))

    p = sub.add_parser("verify-theorems", parents=[common], help="run the implication checks on a corpus")
    p.add_argument("--corpus", required=True, help="manifest file")
    p.add_argument("--theorem", action="append", help="restrict to these checks")
    p.add_argument("--out", help="also write the full json report here")
    return parser


def run(argv, out=None, err=None):
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    cfg = CommandConfig(
        command=args.command,
        source=getattr(args, "source", None),
        fmt=args.format,
        cube_cap=args.cube_cap,
        lattice_cap=args.lattice_cap,
        max_arity=args.max_arity,
        max_terms=args.max_terms,
        assert_=args.assert_,
        workers=args.workers,
    )
    start = time.perf_counter()
    try:
        if cfg.fmt == "dot" and cfg.command != "congruences":
            raise _Usage("--format dot is only available for congruences")
        if cfg.assert_ and cfg.command not in ASSERTABLE:
            raise _Usage(f"--assert is not supported by {cfg.command}")
        S = load_algebra(cfg.source) if cfg.command in NEEDS_SOURCE else None
        if cfg.fmt == "dot":
            out.write(all_congruences(S, cap=cfg.lattice_cap).to_dot())
            return EXIT_OK
        payload, verdict = COMMANDS[cfg.command](cfg, args, S)
    except BudgetExceeded as exc:
        _emit_error(cfg, exc, EXIT_BUDGET, out, err)
        return EXIT_BUDGET
    except SemicommError as exc:
        _emit_error(cfg, exc, EXIT_INPUT, out, err)
        return EXIT_INPUT
    if args.meta and cfg.fmt == "json":
        payload = {**payload, "meta": {"elapsed_seconds": round(time.perf_counter() - start, 3)}}
    _emit(cfg, payload, out)
    if cfg.command == "verify-theorems":
        return EXIT_OK if verdict else EXIT_FALSE
    if cfg.assert_:
        return EXIT_OK if verdict else EXIT_FALSE
    return EXIT_OK


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
