"""Command line front end; every command prints one JSON document.

Exit codes: 0 pass, 1 a checked claim failed, 2 invalid input, 3 parse or
I/O error.
"""

import argparse
import json
import os
import sys

from . import diagrams, filtration, invariants, seifert
from .serialize import (
    dumps, matrix_combination_to_json, matrix_from_json, matrix_to_json, poly_to_json,
)

EXIT_OK, EXIT_FAIL, EXIT_INVALID, EXIT_PARSE = 0, 1, 2, 3

#: Conservative defaults so the whole acceptance run stays short.
CAP_SIZE, CAP_TRIALS = 12, 1000
#: Commands whose cost explodes with the degree. ``dims`` only counts
#: partitions and ``ftest`` is bounded by --max-size instead.
DEGREE_CAPPED = ("rank", "adim", "wheels")


class InvalidInput(Exception):
    pass


def _degree_cap():
    return int(os.environ.get("SEIFERT_FORGE_MAX_DEGREE", diagrams.DEFAULT_MAX_DEGREE))


def _read_json(source):
    if source is None:
        raise InvalidInput("--input is required")
    text = source.strip()
    if text.startswith(("{", "[")):
        return json.loads(text)
    if source == "-":
        return json.load(sys.stdin)
    with open(source) as fh:
        return json.load(fh)


def _read_matrix(args):
    return matrix_from_json(_read_json(args.input))


def _need_seed(args):
    if args.seed is None:
        raise InvalidInput(f"command {args.command!r} is randomized and needs --seed")
    return args.seed


def _check_caps(args):
    for name, cap in (("trials", CAP_TRIALS), ("max_size", CAP_SIZE)):
        v = getattr(args, name, None)
        if v is not None and not 0 < v <= cap:
            raise InvalidInput(f"--{name.replace('_', '-')} must be in 1..{cap}")
    if args.command in DEGREE_CAPPED and args.degree is not None and args.degree > _degree_cap():
        raise InvalidInput(f"--degree {args.degree} exceeds cap {_degree_cap()}")


def _indices(text):
    if not text:
        return []
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise InvalidInput(f"bad --indices {text!r}") from exc


def cmd_validate(args):
    try:
        m = _read_matrix(args)
    except seifert.SeifertError as exc:
        doc = {"valid": False, "error": type(exc).__name__, "reason": str(exc)}
        if isinstance(exc, seifert.SkewPartNotUnimodular):
            doc["det"] = exc.det
        return doc, EXIT_INVALID
    return {"valid": True, "size": m.size}, EXIT_OK


def cmd_conway(args):
    return poly_to_json(invariants.conway(_read_matrix(args))), EXIT_OK


def cmd_alexander(args):
    return poly_to_json(invariants.alexander(_read_matrix(args))), EXIT_OK


def cmd_altsum(args):
    m = _read_matrix(args)
    idx = _indices(args.indices)
    doc = matrix_combination_to_json(filtration.alternating_sum(m, idx))
    doc["indices"] = idx
    doc["conway"] = poly_to_json(filtration.conway_of_combination(m, idx))
    return doc, EXIT_OK


def cmd_ftest(args):
    seed = _need_seed(args)
    if args.k is None or args.degree is None:
        raise InvalidInput("ftest needs --k and --degree")
    rep = filtration.ft_degree_test(args.k, args.degree, args.trials or 500,
                                    args.max_size or CAP_SIZE, seed)
    return rep, EXIT_OK if rep["pass"] else EXIT_FAIL


def cmd_rank(args):
    seed = _need_seed(args)
    if args.degree is None:
        raise InvalidInput("rank needs --degree")
    rep = filtration.rank_experiment(args.degree, seed, max_degree=_degree_cap())
    return rep, EXIT_OK if rep["pass"] else EXIT_FAIL


def cmd_dims(args):
    d_max = 10 if args.degree is None else args.degree
    if d_max < 0:
        raise InvalidInput("--degree must be non-negative")
    return {"dims": {str(d): filtration.p_even(d) for d in range(d_max + 1)}}, EXIT_OK


def cmd_adim(args):
    d_max = 5 if args.degree is None else args.degree
    dims, counts = {}, {}
    for d in range(d_max + 1):
        dims[str(d)] = diagrams.quotient_dim(d, cap=_degree_cap())
        counts[str(d)] = len(diagrams.enumerate_chords(d))
    return {"quotient_dims": dims, "chord_diagrams": counts}, EXIT_OK


def cmd_wheels(args):
    d_max = 6 if args.degree is None else args.degree
    cap = _degree_cap()
    ranks = {}
    ok = True
    for d in range(2, d_max + 1, 2):
        combs = [diagrams.wheel_monomial(p) for p in filtration.monomials(d)]
        r = diagrams.rank_mod_relations(combs, d, cap=cap)
        ranks[str(d)] = {"rank": r, "expected": filtration.p_even(d)}
        ok &= r == filtration.p_even(d)
    odd = {}
    for m in range(3, d_max + 1, 2):
        inside = diagrams.relation_span(m, cap=cap).contains(diagrams.stu_reduce(diagrams.wheel(m)))
        odd[str(m)] = inside
        ok &= inside
    doc = {"leg_order": "consecutive", "wheel_monomial_ranks": ranks,
           "odd_wheels_in_span": odd, "pass": ok}
    return doc, EXIT_OK if ok else EXIT_FAIL


def cmd_fuzz_smoves(args):
    seed = _need_seed(args)
    rep = invariants.s_invariance_fuzz(args.trials or 1000, seed, args.max_size or CAP_SIZE)
    return rep, EXIT_OK if rep["pass"] else EXIT_FAIL


def cmd_unknot(args):
    m = _read_matrix(args)
    path = filtration.unknotting_search(m, args.depth)
    doc = {"input": matrix_to_json(m), "depth": args.depth, "found": path is not None,
           "moves": path}
    return doc, EXIT_OK


COMMANDS = {
    "validate": cmd_validate,
    "conway": cmd_conway,
    "alexander": cmd_alexander,
    "altsum": cmd_altsum,
    "ftest": cmd_ftest,
    "rank": cmd_rank,
    "dims": cmd_dims,
    "adim": cmd_adim,
    "wheels": cmd_wheels,
    "fuzz-smoves": cmd_fuzz_smoves,
    "unknot": cmd_unknot,
}


def build_parser():
    parser = argparse.ArgumentParser(prog="seifert-forge", description=__doc__.splitlines()[0])
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--input", help="matrix JSON file, '-' for stdin, or inline JSON")
    parser.add_argument("--seed", type=int)
    parser.add_argument("--trials", type=int)
    parser.add_argument("--degree", type=int)
    parser.add_argument("--k", type=int)
    parser.add_argument("--indices", help='comma separated, 1-based, e.g. "1,2,3"')
    parser.add_argument("--max-size", dest="max_size", type=int)
    parser.add_argument("--depth", type=int, default=4)
    parser.add_argument("--out", help="write the JSON report here instead of stdout")
    return parser


def run(argv=None):
    """Run one command; returns (stdout text, exit code)."""
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return "", EXIT_INVALID if exc.code else EXIT_OK
    try:
        _check_caps(args)
        doc, code = COMMANDS[args.command](args)
    except (json.JSONDecodeError, OSError) as exc:
        doc, code = {"error": type(exc).__name__, "reason": str(exc)}, EXIT_PARSE
    except (InvalidInput, ValueError, KeyError, TypeError) as exc:
        doc, code = {"error": type(exc).__name__, "reason": str(exc)}, EXIT_INVALID
    doc["command"] = args.command
    if args.seed is not None:
        doc["seed"] = args.seed
    text = dumps(doc)
    if args.out:
        try:
            with open(args.out, "w") as fh:
                fh.write(text)
        except OSError as exc:
            return dumps({"error": "OSError", "reason": str(exc)}), EXIT_PARSE
        return "", code
    return text, code


def main(argv=None):
    text, code = run(argv)
    if text:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
