"""Command line front end.

Every engine is reachable from here on textual inputs: index sets, interval
sets and value laws in their documented grammars, sequences as `set ; law`
lines, window generators as small JSON documents. All numeric output is
exact (`p/q`, or an interval grammar string); nothing is ever rendered
through floating point.

Exit codes: 0 success, 1 a reported check failed, 2 parse error,
3 precondition violation, 4 golden mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .density import (
    ArmPair,
    DensityOutcome,
    WindowGenerator,
    classify_density,
    density_along,
    density_one_points,
    generator_from_dict,
    generator_to_dict,
    is_dispersion_point,
    ratio_sequence,
    shrinking_indices,
)
from .errors import (
    GoldenMismatch,
    GrammarOverflow,
    IdensityError,
    InvalidGenerator,
    InvariantBreach,
    MalformedInterval,
    NormalizationOverflow,
    ParseError,
    PartitionViolation,
    PreconditionViolation,
    UnsupportedSparseIntersection,
)
from .ideals import Ideal
from .indexsets import (
    Difference,
    NATURALS,
    SQUARES,
    normalize,
    parse_index_set,
    render_index_set,
)
from .intervals import interval_set_to_dict, parse_interval_set, render_interval_set
from .rationals import fmt_extended, fmt_rational, parse_rational
from .sequences import (
    Linear,
    Piece,
    PiecewiseSequence,
    Reciprocal,
    evaluate,
    ideal_convergent_limit,
    ideal_liminf,
    ideal_limsup,
    parse_law,
    render_law,
)
from .topology import (
    check_finite_closure,
    check_operator_laws,
    decompose_measurable,
    is_density_open,
)

SCHEMA_VERSION = 1


def _read_set_argument(value: str):
    if os.path.isfile(value):
        with open(value, encoding="utf-8") as fh:
            value = fh.read().strip()
    return parse_interval_set(value)


def _load_sequence(path: str) -> PiecewiseSequence:
    pieces = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if ";" not in line:
                raise ParseError(f"{path}:{lineno}: expected '<set> ; <law>'")
            set_text, law_text = line.split(";", 1)
            members = parse_index_set(set_text.strip())
            law, variable = parse_law(law_text.strip())
            try:
                pieces.append(Piece(members, law, variable))
            except ValueError as exc:
                raise ParseError(f"{path}:{lineno}: {exc}") from exc
    return PiecewiseSequence(tuple(pieces))


def _load_generator(path: str) -> WindowGenerator:
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: {exc}") from exc
    return generator_from_dict(doc)


def _sequence_rows(seq: PiecewiseSequence) -> list:
    return [{"set": render_index_set(p.members),
             "law": render_law(p.law, p.variable)}
            for p in seq.pieces]


class _Emitter:
    def __init__(self, command: str, as_json: bool, seed):
        self.payload = {"schema_version": SCHEMA_VERSION, "command": command}
        if seed is not None:
            self.payload["seed"] = seed
        self.as_json = as_json
        self.lines: list[str] = []

    def add(self, key: str, value, text=None):
        self.payload[key] = value
        self.lines.append(f"{key}: {value if text is None else text}")

    def flush(self) -> None:
        if self.as_json:
            print(json.dumps(self.payload, sort_keys=True, indent=2))
        else:
            for line in self.lines:
                print(line)


def _run_worked_example(args) -> int:
    """The built-in golden worked example: windows shrinking like 1/(2n+1)
    off the squares and blowing up like n on them, probed against (-1,1)
    at the origin. Every produced value is compared against its frozen
    expectation; any deviation aborts with a diff.
    """
    squares = SQUARES
    off_squares = Difference(NATURALS, squares)
    shrink = Reciprocal(1, 2, 1)
    grow = Linear(1, 0)
    gen = WindowGenerator(Fraction(0), (
        ArmPair(off_squares, shrink, shrink),
        ArmPair(squares, grow, grow),
    ))
    target = parse_interval_set("(-1,1)")

    shrink_set = shrinking_indices(gen)
    ratio = ratio_sequence(gen, target)
    classification = classify_density(Fraction(0), target, Ideal.DENSITY_ZERO)

    results = {
        "shrinking_indices": render_index_set(shrink_set),
        "shrinking_set_matches_non_squares":
            normalize(shrink_set) == normalize(off_squares),
        "in_filter_density": Ideal.DENSITY_ZERO.in_filter(shrink_set),
        "in_filter_fin": Ideal.FIN.in_filter(shrink_set),
        "classical_limsup": fmt_extended(ideal_limsup(ratio, Ideal.FIN)),
        "classical_liminf": fmt_extended(ideal_liminf(ratio, Ideal.FIN)),
        "ideal_limsup": fmt_extended(ideal_limsup(ratio, Ideal.DENSITY_ZERO)),
        "ideal_liminf": fmt_extended(ideal_liminf(ratio, Ideal.DENSITY_ZERO)),
        "classification": classification.outcome.value,
    }
    expected = {
        "shrinking_set_matches_non_squares": True,
        "in_filter_density": True,
        "in_filter_fin": False,
        "classical_limsup": "1/1",
        "classical_liminf": "0/1",
        "ideal_limsup": "1/1",
        "ideal_liminf": "1/1",
        "classification": "one",
    }
    diffs = [f"{key}: got {results[key]!r}, expected {want!r}"
             for key, want in expected.items() if results[key] != want]
    if diffs:
        raise GoldenMismatch("worked example deviated:\n" + "\n".join(diffs))

    out = _Emitter("paper-example", args.json, args.seed)
    for key, value in results.items():
        out.add(key, value)
    out.payload["ratio_sequence"] = _sequence_rows(ratio)
    out.lines.append("ratio_sequence:")
    for row in _sequence_rows(ratio):
        out.lines.append(f"  {row['set']} ; {row['law']}")
    out.add("all_checks", "pass")
    out.flush()
    return 0


def _run_sequence(args) -> int:
    seq = _load_sequence(args.file)
    out = _Emitter(f"sequence {args.action}", args.json, args.seed)
    if args.action == "eval":
        out.add("n", args.n)
        out.add("value", fmt_rational(evaluate(seq, args.n)))
    else:
        ideal = Ideal.from_flag(args.ideal)
        out.add("ideal", ideal.value)
        if args.action == "limsup":
            out.add("limsup", fmt_extended(ideal_limsup(seq, ideal)))
        elif args.action == "liminf":
            out.add("liminf", fmt_extended(ideal_liminf(seq, ideal)))
        else:
            limit = ideal_convergent_limit(seq, ideal)
            out.add("convergent", limit is not None)
            if limit is not None:
                out.add("limit", fmt_rational(limit))
    out.flush()
    return 0


def _run_density(args) -> int:
    ideal = Ideal.from_flag(args.ideal)
    target = _read_set_argument(args.set)
    out = _Emitter(f"density {args.action}", args.json, args.seed)
    out.add("set", render_interval_set(target))
    out.add("ideal", ideal.value)
    if args.action == "classify":
        point = parse_rational(args.point)
        cls = classify_density(point, target, ideal)
        out.add("point", fmt_rational(point))
        out.add("outcome", cls.outcome.value)
        out.add("lower", fmt_rational(cls.lower))
        out.add("upper", fmt_rational(cls.upper))
        if cls.outcome is DensityOutcome.NOT_EXIST:
            out.payload["witness_low"] = generator_to_dict(cls.witness_low)
            out.payload["witness_high"] = generator_to_dict(cls.witness_high)
            out.lines.append(f"witness_low: {generator_to_dict(cls.witness_low)}")
            out.lines.append(f"witness_high: {generator_to_dict(cls.witness_high)}")
    elif args.action == "along":
        gen = _load_generator(args.generator)
        lo, hi = density_along(gen, target, ideal)
        out.add("liminf", fmt_extended(lo))
        out.add("limsup", fmt_extended(hi))
    elif args.action == "theta":
        image = density_one_points(target, ideal)
        out.add("density_one_points", render_interval_set(image))
        out.payload["structured"] = interval_set_to_dict(image)
    else:  # dispersion
        point = parse_rational(args.point)
        out.add("point", fmt_rational(point))
        out.add("dispersion_point", is_dispersion_point(point, target, ideal))
    out.flush()
    return 0


def _run_topology(args) -> int:
    ideal = Ideal.from_flag(args.ideal)
    out = _Emitter(f"topology {args.action}", args.json, args.seed)
    out.add("ideal", ideal.value)
    failed = False
    if args.action == "open":
        target = _read_set_argument(args.set)
        out.add("set", render_interval_set(target))
        out.add("density_open", is_density_open(target, ideal))
    elif args.action == "check":
        with open(args.sets, encoding="utf-8") as fh:
            family = [parse_interval_set(line.strip())
                      for line in fh if line.strip()]
        out.add("family_size", len(family))
        reports = []
        for i, a in enumerate(family):
            for j, b in enumerate(family):
                for rep in check_operator_laws(a, b, ideal):
                    reports.append({
                        "left": render_interval_set(a),
                        "right": render_interval_set(b),
                        "law": rep.name,
                        "applicable": rep.applicable,
                        "passed": rep.passed,
                    })
                    if rep.applicable and not rep.passed:
                        failed = True
                        out.lines.append(
                            f"FAIL {rep.name} on ({i},{j})")
        closure = check_finite_closure(family, ideal)
        reports.append({"law": closure.name, "applicable": True,
                        "passed": closure.passed})
        failed = failed or not closure.passed
        out.payload["reports"] = reports
        out.add("laws_checked", len(reports))
        out.add("all_passed", not failed)
    else:  # borel
        target = _read_set_argument(args.set)
        out.add("set", render_interval_set(target))
        decomposition = decompose_measurable(target, ideal)
        out.add("open_part", render_interval_set(decomposition.open_part))
        out.add("null_part", render_interval_set(decomposition.null_part))
    out.flush()
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="idensity",
        description="Exact ideal-density computations on symbolic inputs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true",
                       help="emit a structured document instead of text")
        p.add_argument("--seed", type=int, default=None,
                       help="run seed, echoed into structured output")

    p = sub.add_parser("paper-example",
                       help="run the built-in golden worked example")
    common(p)
    p.set_defaults(func=_run_worked_example)

    p = sub.add_parser("sequence", help="piecewise sequence computations")
    p.add_argument("action", choices=["eval", "limsup", "liminf", "convergent"])
    p.add_argument("--file", required=True, help="sequence file: '<set> ; <law>' lines")
    p.add_argument("--n", type=int, help="index for eval")
    p.add_argument("--ideal", choices=["fin", "d"], default="d")
    common(p)
    p.set_defaults(func=_run_sequence)

    p = sub.add_parser("density", help="density classification and images")
    p.add_argument("action", choices=["classify", "along", "theta", "dispersion"])
    p.add_argument("--set", required=True,
                   help="interval set (grammar string or file)")
    p.add_argument("--point", help="rational anchor p/q")
    p.add_argument("--generator", help="window generator JSON file (along)")
    p.add_argument("--ideal", choices=["fin", "d"], default="d")
    common(p)
    p.set_defaults(func=_run_density)

    p = sub.add_parser("theta", help="alias for: density theta")
    p.add_argument("--set", required=True)
    p.add_argument("--ideal", choices=["fin", "d"], default="d")
    common(p)
    p.set_defaults(func=_run_density, action="theta")

    p = sub.add_parser("topology", help="density-topology checks")
    p.add_argument("action", choices=["open", "check", "borel"])
    p.add_argument("--set", help="interval set (grammar string or file)")
    p.add_argument("--sets", help="file listing one interval set per line (check)")
    p.add_argument("--ideal", choices=["fin", "d"], default="d")
    common(p)
    p.set_defaults(func=_run_topology)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (PartitionViolation, PreconditionViolation, InvalidGenerator,
            UnsupportedSparseIntersection, MalformedInterval, GrammarOverflow,
            NormalizationOverflow, InvariantBreach) as exc:
        print(f"precondition violation: {exc}", file=sys.stderr)
        return 3
    except GoldenMismatch as exc:
        print(f"golden mismatch: {exc}", file=sys.stderr)
        return 4
    except IdensityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
