"""Command line interface.

Exit codes: 0 success, 1 failure (with ``error: <category>: <message>`` on
stderr), 2 usage, 4 scan found a certified non-level gap between two
certified level values.
"""

import argparse
import sys
from random import Random

from levellab.bounds import (
    min_prev_entry,
    prev_entry_range,
)
from levellab.classify import Budget, Status, classify
from levellab.constructions import (
    augment_with_powers,
    compressed_generic_module,
    maximal_profile,
    realize_socle2,
    realize_socle3_partition,
    sum_of_powers,
)
from levellab.errors import LevelLabError
from levellab.forms import DEFAULT_PRIME, validate_prime
from levellab.macaulay import (
    HVector,
    binomial_expansion,
    is_si_sequence,
    macaulay_upper_bound,
    o_sequence_violation,
)
from levellab.modules import (
    InverseModule,
    generic_subquotient,
    h_vector,
    module_from_text,
    module_to_text,
    truncate_level,
)
from levellab.scans import scan_gic, scan_ic
from levellab.seeds import derive_seed
from levellab.store import (
    default_store_path,
    record_from_classification,
    store_append,
    store_load,
    verify_store_file,
)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_COUNTEREXAMPLE = 4


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


def _parts(text: str) -> tuple[int, ...]:
    return tuple(int(piece) for piece in text.split(","))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prime", type=int, default=DEFAULT_PRIME,
                        help="prime modulus for all rank computations")
    common.add_argument("--seed", type=int, default=0,
                        help="master seed; every random draw derives from it")
    common.add_argument("--trials", type=_positive_int, default=5,
                        help="random trials per construction")
    common.add_argument("--store", default=None,
                        help="certificate store path (default: $LEVELLAB_STORE)")
    common.add_argument("--exact-rational", action="store_true",
                        help="re-verify certificates with exact rational ranks")

    parser = argparse.ArgumentParser(
        prog="levellab",
        description="Hilbert functions of level algebras: bounds, constructions, "
                    "classification and interval scans.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hvec", parents=[common],
                       help="Hilbert function of a generator file")
    p.add_argument("file")

    p = sub.add_parser("expand", parents=[common], help="i-binomial expansion")
    p.add_argument("n", type=_positive_int)
    p.add_argument("i", type=_positive_int)

    p = sub.add_parser("bound", parents=[common],
                       help="growth and adjacency bounds")
    p.add_argument("rule", choices=["upper", "bg", "ci"])
    p.add_argument("n", type=_positive_int)
    p.add_argument("d", type=_positive_int)
    p.add_argument("r", type=_positive_int, nargs="?",
                   help="number of variables (ci rule only)")

    p = sub.add_parser("osequence", parents=[common],
                       help="check the growth condition")
    p.add_argument("h", type=HVector.parse)

    p = sub.add_parser("si", parents=[common],
                       help="check the symmetric differentiable condition")
    p.add_argument("h", type=HVector.parse)

    p = sub.add_parser("construct", parents=[common],
                       help="build a module and print it as a generator file")
    p.add_argument("family", choices=["powers", "compressed", "socle2", "socle3"])
    p.add_argument("args", type=_positive_int, nargs="*",
                   help="powers r e m | compressed r e t | socle2 r t | socle3 r")
    p.add_argument("--parts", type=_parts, default=None,
                   help="socle3 partition, e.g. 3,3,2")

    p = sub.add_parser("augment", parents=[common],
                       help="adjoin a sum of general powers to a module file")
    p.add_argument("file")
    p.add_argument("--count", type=_positive_int, required=True)

    p = sub.add_parser("quotient", parents=[common],
                       help="generic level quotient of a module file")
    p.add_argument("file")
    p.add_argument("--type", dest="quotient_type", type=_positive_int, required=True)

    p = sub.add_parser("truncate", parents=[common],
                       help="truncate a module file to a smaller socle degree")
    p.add_argument("file")
    p.add_argument("--to", dest="to_degree", type=_positive_int, required=True)

    p = sub.add_parser("classify", parents=[common],
                       help="level / non-level / unknown with certificate")
    p.add_argument("h", type=HVector.parse)

    for name, help_text in (("scan-ic", "sweep one entry over a value range"),
                            ("scan-gic", "sweep a symmetric pair of a type 1 vector")):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("h", type=HVector.parse)
        p.add_argument("--at", type=_positive_int, required=True,
                       help="degree of the scanned entry")
        p.add_argument("--from", dest="start", type=_positive_int, required=True)
        p.add_argument("--to", dest="stop", type=_positive_int, required=True)

    p = sub.add_parser("verify", parents=[common],
                       help="replay every certificate in a store file")
    p.add_argument("file", nargs="?", default=None)

    p = sub.add_parser("report", parents=[common],
                       help="summarize a store file")
    p.add_argument("file", nargs="?", default=None)

    return parser


def _print_module(module: InverseModule, out) -> None:
    profile = h_vector(module)
    print(f"# h: {profile.h}", file=out)
    if module.seed is not None:
        print(f"# seed: {module.seed}", file=out)
    print(module_to_text(module), end="", file=out)


def _print_classification(result, out) -> None:
    print(f"h: {result.h}", file=out)
    print(f"status: {result.status.value}", file=out)
    if result.status is Status.NONLEVEL:
        print(f"condition: {result.condition}", file=out)
        print(f"detail: {result.detail}", file=out)
    elif result.status is Status.LEVEL:
        cert = result.certificate
        if cert.kind == "criterion":
            print(f"certificate: criterion {cert.criterion}", file=out)
            print(f"detail: {cert.detail}", file=out)
        else:
            print(f"certificate: construction {cert.recipe['kind']}", file=out)
            print(f"seed: {cert.seed}", file=out)
            print(f"prime: {cert.prime}", file=out)
            print(f"ranks: {','.join(map(str, cert.ranks))}", file=out)
            print(f"characteristic: {cert.characteristic}", file=out)
    else:
        for note in result.diagnostics:
            print(f"note: {note}", file=out)


def _store_path(args) -> str | None:
    return args.store or default_store_path()


def _maybe_store(args, result) -> None:
    path = _store_path(args)
    if path:
        store_append(record_from_classification(result), path)


def _load_module(path: str, prime: int) -> InverseModule:
    with open(path, encoding="utf-8") as fh:
        return module_from_text(fh.read(), prime)


def _cmd_hvec(args, out) -> int:
    module = _load_module(args.file, args.prime)
    profile = h_vector(module)
    print(f"h: {profile.h}", file=out)
    print(f"codimension: {profile.h.codimension}", file=out)
    print(f"socle degree: {profile.h.socle_degree}", file=out)
    print(f"type: {profile.h.type}", file=out)
    return EXIT_OK


def _cmd_expand(args, out) -> int:
    print(f"{args.n} = {binomial_expansion(args.n, args.i)}", file=out)
    return EXIT_OK


def _cmd_bound(args, out) -> int:
    if args.rule == "upper":
        print(macaulay_upper_bound(args.n, args.d), file=out)
    elif args.rule == "bg":
        print(min_prev_entry(args.n, args.d), file=out)
    else:
        if args.r is None:
            raise ValueError("the ci rule needs the number of variables")
        lo, hi = prev_entry_range(args.n, args.d, args.r)
        if lo > hi:
            print(f"infeasible: minimum {lo} exceeds cap {hi}", file=out)
        else:
            print(f"{lo}..{hi}", file=out)
    return EXIT_OK


def _cmd_osequence(args, out) -> int:
    violation = o_sequence_violation(args.h)
    if violation is None:
        print("ok", file=out)
    else:
        print(f"violation: {violation}", file=out)
    return EXIT_OK


def _cmd_si(args, out) -> int:
    if is_si_sequence(args.h):
        print("ok", file=out)
    elif not args.h.is_symmetric():
        print("violation: not symmetric", file=out)
    else:
        print("violation: first half is not differentiable", file=out)
    return EXIT_OK


def _cmd_construct(args, out) -> int:
    family, extra = args.family, list(args.args)

    def need(count: int) -> list[int]:
        if len(extra) != count:
            raise ValueError(
                f"{family} takes {count} positional integers, got {len(extra)}"
            )
        return extra

    if family == "powers":
        r, e, m = need(3)
        builder = lambda rng: InverseModule(
            r, e, args.prime, (sum_of_powers(r, e, m, rng, args.prime),))
    elif family == "compressed":
        r, e, t = need(3)
        builder = lambda rng: compressed_generic_module(r, e, t, rng, args.prime)
    elif family == "socle2":
        r, t = need(2)
        builder = lambda rng: realize_socle2(r, t, rng, args.prime)
    else:
        (r,) = need(1)
        if args.parts is None:
            raise ValueError("socle3 needs --parts, e.g. --parts 3,3,2")
        builder = lambda rng: realize_socle3_partition(r, args.parts, rng, args.prime)

    module, _ = maximal_profile(builder, derive_seed(args.seed, "construct", family),
                                args.trials)
    _print_module(module, out)
    return EXIT_OK


def _cmd_augment(args, out) -> int:
    module = _load_module(args.file, args.prime)
    rng = Random(derive_seed(args.seed, "augment", args.count))
    _print_module(augment_with_powers(module, args.count, rng), out)
    return EXIT_OK


def _cmd_quotient(args, out) -> int:
    module = _load_module(args.file, args.prime)
    rng = Random(derive_seed(args.seed, "quotient", args.quotient_type))
    _print_module(generic_subquotient(module, args.quotient_type, rng), out)
    return EXIT_OK


def _cmd_truncate(args, out) -> int:
    module = _load_module(args.file, args.prime)
    _print_module(truncate_level(module, args.to_degree), out)
    return EXIT_OK


def _cmd_classify(args, out) -> int:
    result = classify(args.h, Budget(trials=args.trials),
                      master_seed=args.seed, prime=args.prime,
                      exact_rational=args.exact_rational)
    _print_classification(result, out)
    _maybe_store(args, result)
    return EXIT_OK


def _cmd_scan(args, out, kind: str) -> int:
    if args.stop < args.start:
        raise ValueError(f"empty scan range {args.start}..{args.stop}")
    scan = scan_ic if kind == "ic" else scan_gic
    report = scan(args.h, args.at, range(args.start, args.stop + 1),
                  Budget(trials=args.trials), master_seed=args.seed,
                  prime=args.prime, exact_rational=args.exact_rational)
    degrees = ",".join(map(str, report.degrees))
    print(f"base: {report.base}  degrees: {degrees}", file=out)
    for value, result in zip(report.values, report.classifications):
        label = result.status.value
        if result.status is Status.LEVEL:
            cert = result.certificate
            label += (f" ({cert.criterion})" if cert.kind == "criterion"
                      else f" ({cert.recipe['kind']})")
        elif result.status is Status.NONLEVEL:
            label += f" ({result.condition})"
        print(f"value {value}: {label}", file=out)
        _maybe_store(args, result)
    if not report.gaps:
        print("gaps: none", file=out)
        return EXIT_OK
    exit_code = EXIT_OK
    for gap in report.gaps:
        span = f"{gap.values[0]}..{gap.values[-1]}"
        print(f"gap: {span} kind={gap.kind}", file=out)
        if gap.kind == "nonlevel":
            exit_code = EXIT_COUNTEREXAMPLE
    return exit_code


def _cmd_verify(args, out) -> int:
    path = args.file or _store_path(args)
    count = verify_store_file(path)
    print(f"verified {count} records", file=out)
    return EXIT_OK


def _cmd_report(args, out) -> int:
    path = args.file or _store_path(args)
    records = store_load(path)
    counts = {"level": 0, "nonlevel": 0, "unknown": 0}
    constructions = criteria = 0
    families: dict[tuple[int, int], int] = {}
    for record in records:
        counts[record["status"]] = counts.get(record["status"], 0) + 1
        if record.get("recipe"):
            constructions += 1
        elif record.get("criterion"):
            criteria += 1
        key = (record["r"], record["e"])
        families[key] = families.get(key, 0) + 1
    print(f"records: {len(records)}", file=out)
    print(f"level: {counts['level']}  nonlevel: {counts['nonlevel']}  "
          f"unknown: {counts['unknown']}", file=out)
    print(f"constructions: {constructions}  criteria: {criteria}", file=out)
    for (r, e), n in sorted(families.items()):
        print(f"family r={r} e={e}: {n}", file=out)
    return EXIT_OK


_COMMANDS = {
    "hvec": _cmd_hvec,
    "expand": _cmd_expand,
    "bound": _cmd_bound,
    "osequence": _cmd_osequence,
    "si": _cmd_si,
    "construct": _cmd_construct,
    "augment": _cmd_augment,
    "quotient": _cmd_quotient,
    "truncate": _cmd_truncate,
    "classify": _cmd_classify,
    "verify": _cmd_verify,
    "report": _cmd_report,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        validate_prime(args.prime)
        if args.command == "scan-ic":
            return _cmd_scan(args, out, "ic")
        if args.command == "scan-gic":
            return _cmd_scan(args, out, "gic")
        return _COMMANDS[args.command](args, out)
    except LevelLabError as exc:
        print(f"error: {exc.category}: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except OSError as exc:
        print(f"error: io: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except ValueError as exc:
        print(f"error: value: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
