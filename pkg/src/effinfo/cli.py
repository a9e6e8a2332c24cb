"""Command-line interface: file ingestion, dispatch, and reporting.

Commands read the JSON document schemas from `documents` (filename "-" means
stdin) and print either a human-readable table or a machine-readable JSON
document. Exit codes: 0 success, 1 verification failure, 2 input/validation
error, 3 undefined quantity (zero-probability output), 4 enumeration cap.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import documents
from .channels import Distribution
from .errors import EnumerationCapError, UndefinedOutputError, ValidationError
from .info import (
    actual_repertoire,
    effective_information,
    expected_effective_information,
    mutual_information,
    output_distribution,
    shannon_entropy,
)
from .instances import check_proposition1, check_proposition2, verify_instances
from .learning import (
    DEFAULT_POINT_CAP,
    ei_of_learner,
    expected_risk,
    falsification_report,
    rademacher,
    vc_entropy,
)

EXIT_OK = 0
EXIT_VERIFY_FAILURE = 1
EXIT_INPUT_ERROR = 2
EXIT_UNDEFINED = 3
EXIT_CAP = 4


def _bits(value: float) -> str:
    return f"{value:.6f} bits"


def _rational(value: Fraction) -> str:
    return f"{value} ({float(value):.6f})"


def _emit(doc: dict) -> None:
    print(json.dumps(doc, indent=2))


def _load_channel_and_prior(args):
    channel = documents.parse_system(documents.load_json(args.channel_file))
    if args.prior:
        prior = documents.parse_prior(documents.load_json(args.prior), channel.input)
    else:
        prior = Distribution.uniform(channel.input)
    return channel, prior


def cmd_ei(args) -> int:
    channel, prior = _load_channel_and_prior(args)
    repertoire = actual_repertoire(channel, prior, args.output_symbol)
    out_dist = output_distribution(channel, prior)
    ei = effective_information(channel, prior, args.output_symbol)
    if args.format == "machine":
        _emit({
            "command": "ei",
            "channel": documents.channel_doc(channel),
            "prior": documents.prior_doc(prior),
            "output_symbol": args.output_symbol,
            "output_probability": out_dist.prob(args.output_symbol),
            "ei_bits": ei,
            "actual_repertoire": documents.prior_doc(repertoire),
            "output_distribution": documents.prior_doc(out_dist),
        })
        return EXIT_OK
    print(f"channel: {channel.input.size} inputs -> {channel.output.size} outputs")
    print(f"output symbol: {args.output_symbol}")
    print(f"p({args.output_symbol}) = {out_dist.prob(args.output_symbol):.6f}")
    print(f"ei = {_bits(ei)}")
    print("actual repertoire:")
    for symbol, p in zip(repertoire.alphabet.labels, repertoire.probs):
        print(f"  {symbol}  {p:.6f}")
    print("output distribution:")
    for symbol, p in zip(out_dist.alphabet.labels, out_dist.probs):
        print(f"  {symbol}  {p:.6f}")
    return EXIT_OK


def cmd_entropy(args) -> int:
    channel, prior = _load_channel_and_prior(args)
    out_dist = output_distribution(channel, prior)
    h_prior = shannon_entropy(prior)
    h_out = shannon_entropy(out_dist)
    expected_ei = expected_effective_information(channel, prior)
    if args.format == "machine":
        _emit({
            "command": "entropy",
            "channel": documents.channel_doc(channel),
            "prior": documents.prior_doc(prior),
            "prior_entropy_bits": h_prior,
            "output_entropy_bits": h_out,
            "expected_ei_bits": expected_ei,
        })
        return EXIT_OK
    print(f"H(prior) = {_bits(h_prior)}")
    print(f"H(output) = {_bits(h_out)}")
    print(f"E[ei] = {_bits(expected_ei)}")
    return EXIT_OK


def cmd_mi(args) -> int:
    channel, prior = _load_channel_and_prior(args)
    expected_ei = expected_effective_information(channel, prior)
    mi = mutual_information(channel, prior)
    diff = abs(expected_ei - mi)
    ok = diff < args.tolerance
    if args.format == "machine":
        _emit({
            "command": "mi",
            "channel": documents.channel_doc(channel),
            "prior": documents.prior_doc(prior),
            "expected_ei_bits": expected_ei,
            "mutual_information_bits": mi,
            "abs_difference": diff,
            "within_tolerance": ok,
        })
    else:
        print(f"E[ei] = {_bits(expected_ei)}")
        print(f"MI = {_bits(mi)}")
        verdict = "PASS" if ok else "FAIL"
        print(f"|E[ei] - MI| = {diff:.6e} (< {args.tolerance:g}: {verdict})")
    return EXIT_OK if ok else EXIT_VERIFY_FAILURE


def cmd_learn(args) -> int:
    fc, dataset = documents.parse_learning_instance(documents.load_json(args.instance_file))
    cap = args.cap
    v = vc_entropy(fc, dataset)
    r = rademacher(fc, dataset, cap)
    e_risk = expected_risk(fc, dataset, cap)
    ei = ei_of_learner(fc, dataset, cap)
    report = falsification_report(fc, dataset, cap)
    prop1_ok = not check_proposition1(fc, dataset, cap)
    prop2_ok = not check_proposition2(fc, dataset, cap)
    if args.format == "machine":
        _emit({
            "command": "learn",
            "instance": documents.learning_instance_doc(fc, dataset),
            "n_points": fc.pointset.size,
            "length": dataset.length,
            "class_size": fc.size,
            "vc_entropy_bits": v,
            "rademacher": str(r),
            "expected_risk": str(e_risk),
            "ei_bits": ei,
            "falsification": {
                "total_bits": report.total_hypotheses_bits,
                "fitted_bits": report.fitted_bits,
                "falsified_bits": report.falsified_bits,
                "table": [{"risk": str(eps), "fraction": str(frac)}
                          for eps, frac in report.table],
            },
            "prop1_pass": prop1_ok,
            "prop2_pass": prop2_ok,
        })
    else:
        print(f"points |X| = {fc.pointset.size}")
        print(f"dataset length l = {dataset.length}")
        print(f"class size |F| = {fc.size}")
        print(f"VC-entropy V = {_bits(v)}")
        print(f"Rademacher R = {_rational(r)}")
        print(f"expected risk E[eps] = {_rational(e_risk)}")
        print(f"ei(L, 0) = {_bits(ei)}")
        print("falsification report:")
        print(f"  total hypotheses = {_bits(report.total_hypotheses_bits)}")
        print(f"  fitted = {_bits(report.fitted_bits)}")
        print(f"  falsified = {_bits(report.falsified_bits)}")
        print("  best-fit risk / fraction of hypotheses:")
        for eps, frac in report.table:
            print(f"    {str(eps):<8} {_rational(frac)}")
        print(f"Prop1 (ei = l - V): {'PASS' if prop1_ok else 'FAIL'}")
        print(f"Prop2 (E[eps] = (1 - R)/2): {'PASS' if prop2_ok else 'FAIL'}")
    return EXIT_OK if prop1_ok and prop2_ok else EXIT_VERIFY_FAILURE


def cmd_verify(args) -> int:
    if args.max_points > args.cap:
        raise EnumerationCapError(
            f"--max-points {args.max_points} exceeds the enumeration cap {args.cap}")
    if args.min_points < 1 or args.min_points > args.max_points:
        raise ValidationError(
            f"point bounds must satisfy 1 <= min <= max, "
            f"got {args.min_points}..{args.max_points}")
    result = verify_instances(args.seed, args.count, args.min_points,
                              args.max_points, args.cap)
    if args.format == "machine":
        _emit({
            "command": "verify",
            "seed": args.seed,
            "count": result.total,
            "passed": result.passed,
            "failures": [{"instance": i, "messages": list(msgs)}
                         for i, msgs in result.failures],
        })
    else:
        for i, msgs in result.failures:
            print(f"instance {i} FAIL:")
            for msg in msgs:
                print(f"  - {msg}")
        print(f"{result.passed}/{result.total} instances PASS")
    return EXIT_OK if result.ok else EXIT_VERIFY_FAILURE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="effinfo",
        description="Effective information and ERM capacities for finite discrete systems.")
    parser.add_argument("--tolerance", type=float, default=1e-9,
                        help="absolute tolerance for float identity checks (default 1e-9)")
    parser.add_argument("--cap", type=int, default=DEFAULT_POINT_CAP,
                        help="largest |X| allowed in 2^|X| enumerations (default 20)")
    parser.add_argument("--format", choices=("table", "machine"), default="table",
                        help="human-readable table or machine-readable JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    p_ei = sub.add_parser("ei", help="effective information of one output symbol")
    p_ei.add_argument("channel_file", help="channel document ('-' for stdin)")
    p_ei.add_argument("output_symbol", help="observed output symbol")
    p_ei.add_argument("--prior", help="prior document (default: uniform)")
    p_ei.set_defaults(func=cmd_ei)

    p_entropy = sub.add_parser("entropy", help="entropies and expected ei of a channel")
    p_entropy.add_argument("channel_file", help="channel document ('-' for stdin)")
    p_entropy.add_argument("--prior", help="prior document (default: uniform)")
    p_entropy.set_defaults(func=cmd_entropy)

    p_mi = sub.add_parser("mi", help="mutual information two ways, with their difference")
    p_mi.add_argument("channel_file", help="channel document ('-' for stdin)")
    p_mi.add_argument("--prior", help="prior document (default: uniform)")
    p_mi.set_defaults(func=cmd_mi)

    p_learn = sub.add_parser("learn", help="capacities and falsification for an ERM instance")
    p_learn.add_argument("instance_file", help="learning-instance document ('-' for stdin)")
    p_learn.set_defaults(func=cmd_learn)

    p_verify = sub.add_parser("verify", help="seeded randomized identity checks")
    p_verify.add_argument("--seed", type=int, default=1)
    p_verify.add_argument("--count", type=int, default=500)
    p_verify.add_argument("--min-points", type=int, default=3)
    p_verify.add_argument("--max-points", type=int, default=12)
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except EnumerationCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except UndefinedOutputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNDEFINED
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
