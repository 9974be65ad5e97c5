"""Command-line surface.

Every subcommand prints either stable text or JSON (``--format json``).
Multiplicities, dimensions and bound values are decimal strings in JSON
output because they outgrow native integer widths quickly.  Exit codes:
0 success, 2 parse/usage error, 3 domain error, 4 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import bounds
from .admissible import (
    admissible_set,
    restriction_check,
    restriction_threshold,
)
from .errors import DomainError, EnumerationCapExceeded, ParseError
from .induction import split_module, split_multiplicity, young_module
from .orbits import (
    OrbitSpec,
    example_variety,
    h0_decomposition,
    mv_check,
    orbit_intersection,
    orbit_union,
    top_cohomology,
    verify_power_identity,
)
from .partitions import (
    enumerate_partitions,
    parse_partition,
    parse_partition_tuple,
)
from .tableaux import kostka, lr_coefficient, specht_dim

ISET_ENUMERATION_MAX_K = 25

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_CAP = 4


def _int_tuple(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    return values


def _emit(args, json_obj, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(json_obj))
    else:
        for line in text_lines:
            print(line)


def _scalar(args, value: int) -> None:
    _emit(args, {"value": str(value)}, [str(value)])


def _decomposition(args, dec) -> None:
    _emit(args, dec.to_json_dict(), [str(dec)])


def _cmd_partitions(args) -> int:
    parts = enumerate_partitions(args.k, args.max_len)
    _emit(args, [str(p) for p in parts], [str(p) for p in parts])
    return EXIT_OK


def _cmd_dim(args) -> int:
    _scalar(args, specht_dim(parse_partition(args.partition)))
    return EXIT_OK


def _cmd_kostka(args) -> int:
    _scalar(args, kostka(parse_partition(args.mu), parse_partition(args.lam)))
    return EXIT_OK


def _cmd_lr(args) -> int:
    _scalar(
        args,
        lr_coefficient(
            parse_partition(args.nu), parse_partition(args.lam), parse_partition(args.mu)
        ),
    )
    return EXIT_OK


def _cmd_young(args) -> int:
    _decomposition(args, young_module(parse_partition(args.partition)))
    return EXIT_OK


def _cmd_split_mult(args) -> int:
    _scalar(
        args,
        split_multiplicity(
            parse_partition(args.mu),
            parse_partition(args.triv),
            parse_partition(args.sign),
        ),
    )
    return EXIT_OK


def _cmd_split_module(args) -> int:
    _decomposition(
        args, split_module(parse_partition(args.triv), parse_partition(args.sign))
    )
    return EXIT_OK


def _refuse_iset_enumeration(k: int, d: int, m: int) -> None:
    t = restriction_threshold(d, m)
    raise EnumerationCapExceeded(
        f"exact enumeration is capped at k <= {ISET_ENUMERATION_MAX_K} (got k={k}); "
        f"outer bound from the restriction test: every member fits inside the union "
        f"of {t} rows and {t} columns (threshold (2d)^m = {t})"
    )


def _cmd_iset(args) -> int:
    k, d, m = args.k, args.d, args.m
    if d < 1 or m < 1:
        raise DomainError("d and m must be positive")
    if args.member is not None:
        mu = parse_partition(args.member)
        if mu.weight != k:
            raise DomainError(f"{mu} does not partition {k}")
        if not restriction_check(mu, d, m):
            verdict = False
        else:
            if k > ISET_ENUMERATION_MAX_K:
                _refuse_iset_enumeration(k, d, m)
            verdict = mu in admissible_set(k, d, m)
        _emit(
            args,
            {"mu": str(mu), "member": verdict},
            ["member" if verdict else "not a member"],
        )
        return EXIT_OK
    if k > ISET_ENUMERATION_MAX_K:
        _refuse_iset_enumeration(k, d, m)
    iset = admissible_set(k, d, m)
    if args.enumerate:
        members = [str(mu) for mu in iset.sorted_members()]
        _emit(args, members, members)
    else:
        _emit(
            args,
            {
                "k": k,
                "d": d,
                "m": m,
                "threshold": restriction_threshold(d, m),
                "cardinality": str(len(iset)),
            },
            [str(len(iset))],
        )
    return EXIT_OK


def _require(args, option: str, condition: bool) -> None:
    if not condition:
        args._parser.error(f"bound {args.rule} requires {option}")


def _cmd_bound(args) -> int:
    rule = args.rule
    kw = {"cap": args.cap, "workers": args.workers}
    if rule in ("affine", "sa", "complex"):
        _require(args, "--k", args.k is not None)
        _require(args, "--d", args.d is not None)
        _require(args, "--mu", args.mu is not None)
        widths = args.m if args.m is not None else (1,) * len(args.k)
        mu = parse_partition_tuple(args.mu)
        if rule == "affine":
            params = bounds.BoundParams(args.k, widths, args.d)
            report = bounds.affine_multiplicity_bound(mu, params, **kw)
        elif rule == "sa":
            _require(args, "--s", args.s is not None)
            params = bounds.BoundParams(args.k, widths, args.d, args.s)
            report = bounds.sa_multiplicity_bound(mu, params, **kw)
        else:
            params = bounds.BoundParams(args.k, widths, args.d)
            report = bounds.complex_multiplicity_bound(mu, params, **kw)
    elif rule == "projective":
        _require(args, "--k", args.k is not None)
        _require(args, "--d", args.d is not None)
        _require(args, "a single --k value", args.k is None or len(args.k) == 1)
        mu = parse_partition(args.mu) if args.mu is not None else None
        report = bounds.projective_multiplicity_bound(
            args.k[0], args.d, mu, args.letters, **kw
        )
    elif rule == "equivariant":
        _require(args, "--k", args.k is not None)
        _require(args, "--d", args.d is not None)
        widths = args.m if args.m is not None else (1,) * len(args.k)
        report = bounds.equivariant_bound(args.k, widths, args.d, **kw)
    else:  # projection
        _require(args, "--k", args.k is not None)
        _require(args, "--d", args.d is not None)
        _require(args, "a single --k value", args.k is None or len(args.k) == 1)
        widths = args.m if args.m is not None else (1,)
        _require(args, "a single --m value", len(widths) == 1)
        report = bounds.projection_image_bound(args.k[0], widths[0], args.d, **kw)
    suffix = " (excluded)" if report.excluded else ""
    _emit(args, report.to_json_dict(), [f"{report.value}{suffix}"])
    return EXIT_OK


def _cmd_example(args) -> int:
    spec = example_variety(args.k)
    h0 = h0_decomposition(spec)
    dec = top_cohomology(h0) if args.top else h0
    lines = [str(dec)]
    obj: dict = {"k": args.k, ("top" if args.top else "h0"): dec.to_json_dict()}
    if args.verify_identity:
        check = verify_power_identity(args.k)
        relation = "==" if check.holds else "!="
        lines.append(f"identity: {check.lhs} {relation} {check.rhs}")
        obj["identity"] = {
            "lhs": str(check.lhs),
            "rhs": str(check.rhs),
            "holds": check.holds,
        }
    _emit(args, obj, lines)
    return EXIT_OK


def _load_orbit_spec(path: str) -> OrbitSpec:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as exc:
        raise DomainError(f"cannot read orbit spec file {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path}: {exc.msg}", exc.pos)
    try:
        return OrbitSpec.from_json_dict(data)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, DomainError):
            raise
        raise DomainError(f"malformed orbit spec in {path}: {exc}")


def _cmd_mv_check(args) -> int:
    s1 = _load_orbit_spec(args.spec1)
    s2 = _load_orbit_spec(args.spec2)
    holds = mv_check(
        h0_decomposition(s1),
        h0_decomposition(s2),
        h0_decomposition(orbit_union(s1, s2)),
        h0_decomposition(orbit_intersection(s1, s2)),
    )
    _emit(
        args,
        {"holds": holds},
        ["mv-inequality holds" if holds else "mv-inequality violated"],
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isotypic",
        description="Exact symmetric-group representation combinatorics and multiplicity bounds.",
    )
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument(
        "--cap",
        type=int,
        default=bounds.DEFAULT_TERM_CAP,
        help="refuse bound sums with more terms than this",
    )
    parser.add_argument("--workers", type=int, default=1)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("partitions", help="enumerate partitions of k")
    p.add_argument("k", type=int)
    p.add_argument("--max-len", type=int, default=None)
    p.set_defaults(handler=_cmd_partitions)

    p = sub.add_parser("dim", help="irreducible dimension by the hook formula")
    p.add_argument("partition")
    p.set_defaults(handler=_cmd_dim)

    p = sub.add_parser("kostka", help="Kostka number K(mu, lambda)")
    p.add_argument("mu")
    p.add_argument("lam")
    p.set_defaults(handler=_cmd_kostka)

    p = sub.add_parser("lr", help="Littlewood-Richardson coefficient c^nu_{lambda,mu}")
    p.add_argument("nu")
    p.add_argument("lam")
    p.add_argument("mu")
    p.set_defaults(handler=_cmd_lr)

    p = sub.add_parser("young", help="decomposition of the Young module")
    p.add_argument("partition")
    p.set_defaults(handler=_cmd_young)

    p = sub.add_parser("split-mult", help="multiplicity of mu in the split module")
    p.add_argument("mu")
    p.add_argument("triv")
    p.add_argument("sign")
    p.set_defaults(handler=_cmd_split_mult)

    p = sub.add_parser("split-module", help="decomposition of the split module")
    p.add_argument("triv")
    p.add_argument("sign")
    p.set_defaults(handler=_cmd_split_module)

    p = sub.add_parser("iset", help="admissible set I(k, d, m)")
    p.add_argument("k", type=int)
    p.add_argument("d", type=int)
    p.add_argument("m", type=int)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--enumerate", action="store_true")
    group.add_argument("--member", metavar="MU", default=None)
    p.set_defaults(handler=_cmd_iset)

    p = sub.add_parser("bound", help="exact evaluation of a multiplicity bound")
    p.add_argument(
        "rule",
        choices=("affine", "sa", "complex", "projective", "equivariant", "projection"),
    )
    p.add_argument("--k", type=_int_tuple, default=None, help="block weights, comma-separated")
    p.add_argument("--m", type=_int_tuple, default=None, help="block widths, comma-separated")
    p.add_argument("--d", type=int, default=None, help="degree bound")
    p.add_argument("--s", type=int, default=None, help="number of polynomials (sa only)")
    p.add_argument("--mu", default=None, help="target irreducible, e.g. '[3,1]' or '[3];[2]'")
    p.add_argument("--letters", type=int, default=None, help="letter count (projective only)")
    p.set_defaults(handler=_cmd_bound)

    p = sub.add_parser("example", help="H^0 of the hypercube-vertex model")
    p.add_argument("k", type=int)
    p.add_argument("--top", action="store_true", help="print the top cohomology instead")
    p.add_argument("--verify-identity", action="store_true")
    p.set_defaults(handler=_cmd_example)

    p = sub.add_parser("mv-check", help="Mayer-Vietoris inequality on two orbit specs")
    p.add_argument("spec1")
    p.add_argument("spec2")
    p.set_defaults(handler=_cmd_mv_check)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args._parser = parser
    if args.cap < 1:
        parser.error("--cap must be at least 1")
    if args.workers < 1:
        parser.error("--workers must be at least 1")
    try:
        return args.handler(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except EnumerationCapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    raise SystemExit(main())
