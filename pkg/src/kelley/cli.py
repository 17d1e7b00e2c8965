"""Command-line front end: ``kelley COMMAND [INSTANCE] [flags]``.

Reads one JSON instance (from a path, or standard input when the path is
omitted or ``-``) and prints one JSON result.  Exit status is 0 on success,
1 for malformed input and 2 when the input is well formed but rejected on
mathematical grounds (improper ideal, not an ideal, impossible
normalization, invalid decomposition).
"""

from __future__ import annotations

import argparse
import sys

from . import domination, intersection, rankings, synthesis
from .core import SimpleFunction, format_rational, to_rational
from .errors import (
    DegenerateFunctional,
    ImproperIdeal,
    InvalidDecomposition,
    KelleyError,
    NormalizationImpossible,
    NotAnIdeal,
)
from .io import Instance, dumps, measure_json, parse_instance, set_json
from .lp import solve_matrix_game
from .oracle import verify_minimax

EXIT_OK, EXIT_INPUT, EXIT_REJECTED = 0, 1, 2
SEMANTIC_ERRORS = (
    ImproperIdeal,
    NotAnIdeal,
    NormalizationImpossible,
    InvalidDecomposition,
    DegenerateFunctional,
)


def _input_indices(inst: Instance, system) -> list[int]:
    """Position in the instance's ``sets`` of each deduplicated family member."""
    first = {}
    for i, mask in enumerate(inst.sets):
        first.setdefault(mask, i)
    return [first[b] for b in system.family]


def _report_json(inst: Instance, report) -> dict:
    system = report.system
    idx = _input_indices(inst, system)
    weights = ["0"] * len(inst.sets)
    for j, w in enumerate(report.optimal_weights):
        weights[idx[j]] = format_rational(w)
    return {
        "value": report.value,
        "measure": measure_json(report.optimal_measure),
        "weights": weights,
        "witness_sequence": {str(idx[j]): k for j, k in report.witness_sequence.items()},
        "witness_length": report.witness_length,
    }


def cmd_intersection(inst, args):
    return _report_json(inst, intersection.intersection_number(inst.system()))


def cmd_intersection_pi(inst, args):
    return _report_json(inst, intersection.intersection_number_pi(inst.functional(), inst.system()))


def cmd_intersection_ideal(inst, args):
    return _report_json(inst, intersection.intersection_number_ideal(inst.ideal(), inst.system()))


def cmd_intersection_order(inst, args):
    return _report_json(inst, intersection.intersection_number_order(inst.ideal(), inst.system()))


def cmd_game(inst, args):
    sol = solve_matrix_game(inst.matrix())
    return {
        "value": sol.value,
        "row_strategy": list(sol.row_strategy),
        "col_strategy": list(sol.col_strategy),
    }


def _epsilon(args):
    if args.epsilon is None:
        raise ValueError("threshold needs --epsilon")
    return args.epsilon


def cmd_threshold(inst, args):
    m = inst.measure()
    fam = synthesis.threshold_family(m, _epsilon(args))
    return {
        "epsilon": _epsilon(args),
        "sets": [set_json(m.ground, a) for a in fam.family],
        "count": len(fam.family),
        "empty": not fam.family,
    }


def _decomposition(inst, args):
    families = inst.families()
    ideal = inst.ideal() if args.mode == synthesis.IDEAL else None
    functional = inst.functional() if args.mode == synthesis.PI else None
    D = synthesis.Decomposition(inst.ground, families, ideal)
    return D, functional


def cmd_decompose_verify(inst, args):
    D, functional = _decomposition(inst, args)
    v = synthesis.verify_decomposition(D, args.mode, functional)
    return {
        "verdict": v.verdict,
        "mode": v.mode,
        "values": list(v.values),
        "uncovered": [set_json(inst.ground, a) for a in v.uncovered],
    }


def cmd_synthesize(inst, args):
    D, functional = _decomposition(inst, args)
    m = synthesis.synthesize_strictly_positive(D, args.mode, functional)
    covered = {a for fam in D.families for a in fam.family}
    return {
        "verdict": all(m(a) > 0 for a in covered),
        "mode": args.mode,
        "measure": measure_json(m),
        "total": m.total,
    }


def cmd_normalize(inst, args):
    pi = inst.functional()
    hat = synthesis.normalize_functional(pi)
    g = pi.ground
    return {
        "vertices": [measure_json(m) for m in hat.vertices],
        "pi_hat_one": hat(SimpleFunction.constant(g, 1)),
        "minus_pi_hat_minus_one": -hat(SimpleFunction.constant(g, -1)),
    }


def cmd_modulus(inst, args):
    pi = inst.functional()
    b = synthesis.nonlinearity_modulus_bounds(pi, args.max_len or 3)
    return {
        "lower": b.lower,
        "upper": b.upper,
        "lower_is_search_bound": True,
        "witness": [set_json(pi.ground, a) for a in b.witness],
        "searched": b.searched,
    }


def _representation_json(inst, rep):
    g = inst.ground
    return {
        "verdict": rep.null_ideal_matches and rep.decomposition_holds,
        "generator": set_json(g, rep.ideal.generator),
        "measure": measure_json(rep.measure),
        "null_ideal_matches": rep.null_ideal_matches,
        "decomposition_holds": rep.decomposition_holds,
        "thresholds": list(rep.thresholds),
        "values": list(rep.values),
        "families": [[set_json(g, a) for a in fam.family] for fam in rep.families],
    }


def cmd_ideal_repr(inst, args):
    return _representation_json(inst, rankings.representability(inst.ideal()))


def _family(inst):
    return domination.MeasureFamily(inst.ground, inst.measures())


def cmd_dominate(inst, args):
    cert = domination.weakly_dominating_measure(_family(inst))
    return {
        "verdict": cert.weakly_dominates,
        "measure": measure_json(cert.measure),
        "null_generator": set_json(inst.ground, cert.null_generator),
        "mstar_coefficients": {str(k): v for k, v in sorted(cert.mstar_coefficients.items())},
    }


def cmd_mstar(inst, args):
    vertices = domination.mstar_vertices(_family(inst))
    return {"vertices": [measure_json(m) for m in vertices], "count": len(vertices)}


def cmd_hs_subset(inst, args):
    family = _family(inst)
    chosen = domination.halmos_savage_subset(family)
    sub = domination.MeasureFamily(inst.ground, [family.members[i] for i in chosen])
    full_null = domination.common_null_ideal(family)
    return {
        "indices": chosen,
        "null_generator": set_json(inst.ground, full_null.generator),
        "verdict": domination.common_null_ideal(sub) == full_null,
    }


def cmd_norming(inst, args):
    check = domination.check_norming(inst.ideal(), inst.function())
    return {"verdict": check.verdict, "lhs": check.lhs, "rhs": check.rhs}


def _order(inst):
    if "measure" in inst.raw:
        return "measure", rankings.MeasureOrder(inst.measure())
    if "ideal" in inst.raw:
        return "ideal", rankings.IdealOrder(inst.ideal())
    raise ValueError("ranking commands need a 'measure' or an 'ideal' section")


def cmd_ranking_compare(inst, args):
    backing, order = _order(inst)
    f, g = inst.order_pair()
    return {"verdict": rankings.order_compare(order, f, g), "backing": backing}


def _grid(inst, args):
    limit = args.grid or rankings.DEFAULT_GRID_LIMIT
    return rankings.function_grid(inst.ground, limit=limit)


def cmd_ranking_axioms(inst, args):
    backing, order = _order(inst)
    report = rankings.axioms_check(order, _grid(inst, args))
    axioms = {}
    for key, v in report.verdicts.items():
        axioms[key] = {
            "passed": v.passed,
            "checks": v.checks,
            "exhaustive": v.exhaustive,
            "counterexample": None
            if v.counterexample is None
            else [
                list(x.values) if isinstance(x, SimpleFunction) else x
                for x in v.counterexample
            ],
        }
    return {"verdict": report.all_passed, "backing": backing, "axioms": axioms}


def cmd_ranking_represent(inst, args):
    rep = rankings.representability(inst.ideal())
    out = _representation_json(inst, rep)
    grid = _grid(inst, args)
    mismatch = rankings.orders_agree(
        rankings.IdealOrder(rep.ideal), rankings.MeasureOrder(rep.measure), grid
    )
    out["orders_agree"] = mismatch is None
    out["verdict"] = out["verdict"] and mismatch is None
    return out


def cmd_verify(inst, args):
    result = verify_minimax(inst.system(), max_len=args.max_len)
    return {
        "verdict": result["verdict"],
        "value": result["value"],
        "witness_sup": result["witness_sup"],
        "measure_min": result["measure_min"],
        "bruteforce_value": result["bruteforce_value"],
        "bruteforce_exactness": result["bruteforce"].exactness,
        "witness_length": result["witness_length"],
        "searched_max_length": result["bruteforce"].searched_max_length,
    }


COMMANDS = {
    "intersection": cmd_intersection,
    "intersection-pi": cmd_intersection_pi,
    "intersection-ideal": cmd_intersection_ideal,
    "intersection-order": cmd_intersection_order,
    "game": cmd_game,
    "threshold": cmd_threshold,
    "decompose-verify": cmd_decompose_verify,
    "synthesize": cmd_synthesize,
    "normalize": cmd_normalize,
    "modulus": cmd_modulus,
    "ideal-repr": cmd_ideal_repr,
    "dominate": cmd_dominate,
    "mstar": cmd_mstar,
    "hs-subset": cmd_hs_subset,
    "norming": cmd_norming,
    "ranking-compare": cmd_ranking_compare,
    "ranking-axioms": cmd_ranking_axioms,
    "ranking-represent": cmd_ranking_represent,
    "verify": cmd_verify,
}


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _rational_arg(text):
    try:
        return to_rational(text)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kelley", description=__doc__.splitlines()[0])
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("instance", nargs="?", default="-", help="JSON file, or - for stdin")
    parser.add_argument("--max-len", type=_positive_int, help="oracle / modulus search length")
    parser.add_argument("--epsilon", type=_rational_arg, help="threshold, e.g. 1/2")
    parser.add_argument("--grid", type=_positive_int, help="cap on the axiom grid size")
    parser.add_argument(
        "--mode", choices=synthesis.MODES, default=synthesis.PLAIN,
        help="decomposition mode for decompose-verify and synthesize",
    )
    return parser


def _error_doc(exc) -> dict:
    doc = {"error": type(exc).__name__, "message": str(exc)}
    witness = getattr(exc, "witness", None)
    if witness:
        doc["witness"] = list(witness)
    return doc


def main(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK

    inst = None
    try:
        if args.instance == "-":
            text = stdin.read()
        else:
            with open(args.instance, encoding="utf-8") as fh:
                text = fh.read()
        inst = parse_instance(text)
        result = COMMANDS[args.command](inst, args)
    except SEMANTIC_ERRORS as exc:
        doc = _error_doc(exc)
        if "witness" in doc and inst is not None and inst.ground is not None:
            doc["witness"] = [set_json(inst.ground, w) for w in doc["witness"]]
        print(f"kelley: rejected: {type(exc).__name__}: {exc}", file=stderr)
        print(dumps({"command": args.command, **doc}), file=stdout)
        return EXIT_REJECTED
    except (KelleyError, ValueError, TypeError, KeyError, OSError, UnicodeDecodeError) as exc:
        print(f"kelley: error: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_INPUT

    result = {"command": args.command, **result}
    print(dumps(result), file=stdout)
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())


def main_entry():
    sys.exit(main())
