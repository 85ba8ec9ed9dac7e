"""Command-line front end.

Exit codes are a stable contract for CI:

  0  success / theorem confirmed
  1  inadmissible labeling (verify, or a certificate failing its own check)
  2  usage, parse, or precondition errors
  3  inconclusive brute force (node budget exhausted)
  4  theorem contradiction or solver disagreement
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Dict, List, Optional

from .bounds import (
    DegreeProfile,
    PUBLISHED_PER_COLUMN,
    general_bounds,
    rational_repr,
    theorem_bounds,
)
from .certificates import certificate_for, is_covered, upper_bound_hint
from .errors import CertificateError, DomainError
from .families import FamilyKind, generate, parse_edgelist, to_dot, to_edgelist
from .labeling import Variant, format_labeling, parse_labeling, validate
from .solver import DEFAULT_NODE_BUDGET, solve_bruteforce, solve_profile_dp

EXIT_OK = 0
EXIT_INADMISSIBLE = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3
EXIT_CONTRADICTION = 4


def _write(text: str, out: Optional[str]) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def cmd_gen(args) -> int:
    g = generate(FamilyKind.from_tag(args.family), args.n)
    text = to_edgelist(g) if args.format == "edgelist" else to_dot(g)
    _write(text, args.out)
    return EXIT_OK


def cmd_cert(args) -> int:
    family = FamilyKind.from_tag(args.family)
    variant = Variant.from_tag(args.variant)
    try:
        cert = certificate_for(family, variant, args.n)
    except CertificateError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INADMISSIBLE
    text = format_labeling(cert.labeling, variant, source=cert.source)
    summary = (f"cert {family.value} n={args.n} {variant.value}: "
               f"weight={cert.claimed_weight} admissible source={cert.source}")
    if args.out:
        _write(text, args.out)
        print(summary)
    else:
        sys.stdout.write(text)
        print(summary, file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = parse_edgelist(_read(args.graph))
    f, file_variant, _source = parse_labeling(_read(args.labels))
    if args.variant is None:
        variant = file_variant
    else:
        variant = Variant.from_tag(args.variant)
        if variant is not file_variant:
            raise DomainError(
                f"variant mismatch: flag says {variant.value}, "
                f"labeling header says {file_variant.value}")
    violations = validate(g, f, variant)
    if not violations:
        print(f"admissible ({variant.value}), weight={f.weight()}")
        return EXIT_OK
    for v in violations:
        print(v.render())
    print(f"inadmissible ({variant.value}): {len(violations)} violations")
    return EXIT_INADMISSIBLE


def cmd_solve(args) -> int:
    family = FamilyKind.from_tag(args.family)
    variant = Variant.from_tag(args.variant)
    g = generate(family, args.n)

    results = {}
    if args.method in ("dp", "both"):
        results["dp"] = solve_profile_dp(g, variant)
    if args.method in ("bruteforce", "both"):
        results["bruteforce"] = solve_bruteforce(g, variant, budget=args.budget)

    for name, res in results.items():
        if res.status == "inconclusive":
            print(f"{name}: inconclusive after {res.stats['nodes']} nodes "
                  f"(budget {args.budget})")
            return EXIT_INCONCLUSIVE
        stats = " ".join(f"{k}={v}" for k, v in sorted(res.stats.items()))
        print(f"{name}: gamma={res.gamma} {stats} elapsed={res.elapsed:.3f}s")

    primary = results.get("dp") or results["bruteforce"]
    if args.out:
        _write(format_labeling(primary.witness, variant,
                               source=f"witness/{primary.method}"), args.out)
        print(f"witness: {args.out}")
    else:
        sys.stdout.write(format_labeling(primary.witness, variant,
                                         source=f"witness/{primary.method}"))

    if args.method == "both":
        dp, bf = results["dp"], results["bruteforce"]
        if dp.gamma != bf.gamma:
            print(f"DISAGREEMENT: dp={dp.gamma} bruteforce={bf.gamma}")
            return EXIT_CONTRADICTION
        print(f"agreement: both methods give gamma={dp.gamma}")
    return EXIT_OK


def _general_bounds_json(family: FamilyKind, variant: Variant, n: int) -> List[Dict]:
    profile = DegreeProfile.of_graph(generate(family, n))
    out = []
    for bv in general_bounds(profile, variant):
        out.append({
            "kind": bv.kind.value,
            "value": rational_repr(bv.value),
            "applicable": bv.applicable,
            "reason": bv.reason,
        })
    return out


def cmd_bounds(args) -> int:
    family = FamilyKind.from_tag(args.family)
    variant = Variant.from_tag(args.variant)
    tb = theorem_bounds(family, variant, args.n)
    published = PUBLISHED_PER_COLUMN.get((family, variant))
    doc = {
        "family": family.value,
        "n": args.n,
        "variant": variant.value,
        "general_bounds": _general_bounds_json(family, variant, args.n),
        "theorem": None if tb is None else {
            "lower": rational_repr(tb.lower),
            "lower_int": tb.lower_int,
            "upper": rational_repr(tb.upper),
            "exact": tb.exact,
            "source": tb.source,
        },
        "published_per_column": None if published is None else {
            "kind": published[0], "coefficient": rational_repr(published[1]),
        },
    }
    _write(json.dumps(doc, indent=2) + "\n", args.out)
    return EXIT_OK


def _parse_range(text: str) -> range:
    try:
        lo_s, hi_s = text.split(":")
        lo, hi = int(lo_s), int(hi_s)
    except ValueError:
        raise DomainError(f"bad n-range {text!r}; expected lo:hi") from None
    return range(lo, hi + 1)


def build_report_record(family: FamilyKind, variant: Variant, n: int) -> Dict:
    """One table row: exact value, certificate weight, bounds, verdict."""
    g = generate(family, n)
    res = solve_profile_dp(g, variant)
    gamma = res.gamma

    cert_weight = upper_bound_hint(family, variant, n) if is_covered(family, variant, n) else None
    tb = theorem_bounds(family, variant, n)
    if tb is None:
        status = "TightensInterval"   # no theorem: the value is a new data point
        lower = upper = None
    else:
        lower, upper = tb.lower, tb.upper
        if not (lower <= gamma <= upper):
            status = "CONTRADICTION"
        elif tb.exact:
            status = "ConfirmsTheorem"
        else:
            status = "TightensInterval"

    return {
        "family": family.value,
        "n": n,
        "variant": variant.value,
        "gamma": gamma,
        "certificate_weight": cert_weight,
        "theorem_lower": rational_repr(lower),
        "theorem_upper": rational_repr(upper),
        "general_bounds": _general_bounds_json(family, variant, n),
        "status": status,
    }


def cmd_table(args) -> int:
    family = FamilyKind.from_tag(args.family)
    variant = Variant.from_tag(args.variant)
    records = [build_report_record(family, variant, n)
               for n in _parse_range(args.n_range)]
    _write(json.dumps(records, indent=2) + "\n", args.out)
    if any(r["status"] == "CONTRADICTION" for r in records):
        print("CONTRADICTION: an exact value falls outside its theorem interval",
              file=sys.stderr)
        return EXIT_CONTRADICTION
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polydom",
        description="Signed (total) Roman domination on convex polytope graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    families = [f.value for f in FamilyKind]
    variants = [v.value for v in Variant]

    p = sub.add_parser("gen", help="emit a family graph")
    p.add_argument("--family", required=True, choices=families)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--format", default="edgelist", choices=["edgelist", "dot"])
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("cert", help="emit a theorem certificate labeling")
    p.add_argument("--family", required=True, choices=families)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--variant", required=True, choices=variants)
    p.add_argument("--out")
    p.set_defaults(func=cmd_cert)

    p = sub.add_parser("verify", help="check a labeling file against a graph file")
    p.add_argument("--graph", required=True)
    p.add_argument("--labels", required=True)
    p.add_argument("--variant", choices=variants)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("solve", help="compute the exact domination number")
    p.add_argument("--family", required=True, choices=families)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--variant", required=True, choices=variants)
    p.add_argument("--method", default="dp", choices=["dp", "bruteforce", "both"])
    p.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    p.add_argument("--out")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("bounds", help="print bound evaluations as JSON")
    p.add_argument("--family", required=True, choices=families)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--variant", required=True, choices=variants)
    p.add_argument("--out")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("table", help="solve a range of n and emit a JSON report")
    p.add_argument("--family", required=True, choices=families)
    p.add_argument("--variant", required=True, choices=variants)
    p.add_argument("--n-range", required=True, dest="n_range")
    p.add_argument("--out")
    p.set_defaults(func=cmd_table)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
