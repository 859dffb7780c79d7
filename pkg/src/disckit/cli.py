"""Command line for the toolkit.

Every subcommand produces a CommandResult; --format picks between a
plain key/value rendering and a JSON envelope validated by the shipped
schema (disckit/cli_result_v1).  Both renderings are pure functions of
the payload, so output is byte-identical across runs and worker
counts.

Exit codes: 0 success, 2 input syntax, 3 ring or parameter problems,
4 enumeration budget exceeded, 5 internal errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from .dims import DimReport, complex_table, h_ext_jet
from .errors import DisckitError, InputSyntaxError, ParameterError
from .jets import ChartId, discriminant_ideal, homogeneous_classical_discriminant
from .oracle import DEFAULT_BUDGET, dimension_growth_check, verify_discriminant_locus
from .parser import parse_poly, parse_ring
from .resultants import SylvesterSpec, classify_discriminant, resultant
from .strata import etale_verdict, main1_strata
from .unipoly import UniPoly

SCHEMA_ID = "disckit/cli_result_v1"


@dataclass
class CommandResult:
    status: str
    payload: dict | None
    diagnostics: list[str] = field(default_factory=list)


def _render_plain(value, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines: list[str] = []
    if isinstance(value, dict):
        for key in sorted(value):
            item = value[key]
            if isinstance(item, dict):
                lines.append(f"{pad}{key}:")
                lines.extend(_render_plain(item, indent + 1))
            elif isinstance(item, list) and any(isinstance(x, (dict, list)) for x in item):
                lines.append(f"{pad}{key}:")
                for x in item:
                    sub = _render_plain(x, indent + 2)
                    if sub:
                        first = sub[0].lstrip()
                        lines.append(f"{pad}  - {first}")
                        lines.extend(sub[1:])
            elif isinstance(item, list):
                body = ", ".join(_plain_scalar(x) for x in item)
                lines.append(f"{pad}{key}: [{body}]")
            else:
                lines.append(f"{pad}{key}: {_plain_scalar(item)}")
    else:
        lines.append(f"{pad}{_plain_scalar(value)}")
    return lines


def _plain_scalar(x) -> str:
    if x is None:
        return "null"
    if isinstance(x, bool):
        return "true" if x else "false"
    return str(x)


def render(result: CommandResult, command: str, fmt: str) -> str:
    if fmt == "json":
        envelope = {
            "schema": SCHEMA_ID,
            "command": command,
            "status": result.status,
            "payload": result.payload,
            "diagnostics": result.diagnostics,
        }
        return json.dumps(envelope, sort_keys=True, indent=2) + "\n"
    lines: list[str] = []
    if result.payload is not None:
        lines.extend(_render_plain(result.payload))
    for diag in result.diagnostics:
        lines.append(diag)
    return "\n".join(lines) + "\n" if lines else ""


# ----- subcommand handlers ---------------------------------------------------

def _declared(poly: UniPoly, flag: int | None, which: str) -> int:
    if flag is not None:
        return flag
    if poly.is_zero():
        raise ParameterError(f"{which} is the zero polynomial; pass its declared degree")
    return poly.degree


def cmd_resultant(args) -> CommandResult:
    ring = parse_ring(args.ring)
    f = parse_poly(args.f, ring, args.var)
    g = parse_poly(args.g, ring, args.var)
    if args.deg_f is None and args.deg_g is None:
        spec = None
        m, n = _declared(f, None, "f"), _declared(g, None, "g")
    else:
        m = _declared(f, args.deg_f, "f")
        n = _declared(g, args.deg_g, "g")
        spec = SylvesterSpec(m, n)
    value = resultant(f, g, spec)
    payload = {
        "ring": str(ring),
        "var": args.var,
        "f": str(f),
        "g": str(g),
        "deg_f": m,
        "deg_g": n,
        "resultant": str(value),
    }
    return CommandResult("ok", payload)


def cmd_discriminant(args) -> CommandResult:
    ring = parse_ring(args.ring)
    p = parse_poly(args.poly, ring, args.var)
    degree = _declared(p, args.degree, "the polynomial")
    verdict, value = classify_discriminant(p, degree)
    payload = {
        "ring": str(ring),
        "var": args.var,
        "poly": str(p),
        "degree": degree,
        "discriminant": str(value),
        "classification": verdict,
    }
    return CommandResult("ok", payload)


def cmd_disc_ideal(args) -> CommandResult:
    if args.homogeneous:
        if args.l != 1:
            raise ParameterError("--homogeneous is only defined at level l = 1")
        gen = homogeneous_classical_discriminant(args.d)
        payload = {
            "d": args.d,
            "l": 1,
            "homogeneous": True,
            "ring": str(gen.ring),
            "gens": [str(gen)],
        }
        return CommandResult("ok", payload)
    i = args.i if args.i is not None else args.d
    chart = ChartId(i, args.chart)
    ideal = discriminant_ideal(args.d, args.l, chart)
    payload = {
        "d": args.d,
        "l": args.l,
        "homogeneous": False,
        "chart": {"dehom_section": chart.dehom_section, "affine_chart": chart.affine_chart},
        "ring": str(ideal.ring),
        "gens": [str(g) for g in ideal.gens],
    }
    return CommandResult("ok", payload)


def cmd_etale(args) -> CommandResult:
    ring = parse_ring(args.ring)
    p = parse_poly(args.poly, ring, args.var)
    degree = _declared(p, args.degree, "the polynomial")
    verdict, b = etale_verdict(p, degree)
    payload = {
        "ring": str(ring),
        "var": args.var,
        "poly": str(p),
        "degree": degree,
        "discriminant": str(b),
        "verdict": verdict,
    }
    if args.strata:
        payload["strata"] = [
            {
                "inverted": list(s.inverted),
                "quotiented": list(s.quotiented),
                "residual_poly": s.residual_poly,
                "residual_degree": s.residual_degree,
                "discriminant": s.discriminant,
                "verdict": s.verdict,
            }
            for s in main1_strata(p, degree)
        ]
    return CommandResult("ok", payload)


def cmd_dims(args) -> CommandResult:
    if args.table:
        if args.j is not None or args.i is not None:
            raise ParameterError("--table does not combine with --j/--i")
        table = complex_table(args.N, args.d, args.k)
        payload = {
            "N": args.N,
            "d": args.d,
            "k": args.k,
            "object": "complex_table",
            "twists": [term.twist for term in table],
            "module_dims": [term.module_dim for term in table],
        }
        return CommandResult("ok", payload)
    if args.j is None:
        raise ParameterError("pass --j (and optionally --i), or --table")
    i = args.i if args.i is not None else 0
    value = h_ext_jet(args.N, args.d, args.k, args.j, i)
    report = DimReport(args.N, args.d, args.k, args.j, i, value, "ext_jet")
    payload = {
        "N": report.N,
        "d": report.d,
        "k": report.k,
        "j": report.j,
        "i": report.i,
        "value": report.value,
        "object": report.object,
    }
    return CommandResult("ok", payload)


def cmd_verify(args) -> CommandResult:
    if args.q2 is not None:
        report = dimension_growth_check(
            args.d, args.l, args.q, args.q2, budget=args.budget
        )
        payload = {
            "d": report.d,
            "l": report.l,
            "q1": report.q1,
            "q2": report.q2,
            "count_q1": report.count_q1,
            "count_q2": report.count_q2,
            "ratio": None if report.ratio is None else str(report.ratio),
            "expected": str(report.expected),
            "tolerance": report.tolerance,
            "within_tolerance": report.within_tolerance,
        }
        return CommandResult("ok", payload)
    report = verify_discriminant_locus(args.d, args.l, args.q, budget=args.budget)
    payload = {
        "d": report.d,
        "l": report.l,
        "q": report.q,
        "chart": {
            "dehom_section": report.chart.dehom_section,
            "affine_chart": report.chart.affine_chart,
        },
        "ideal_zero_count": report.ideal_zero_count,
        "mult_root_count": report.mult_root_count,
        "mismatches": [list(p) for p in report.mismatches],
        "soundness_mismatches": [list(p) for p in report.soundness_mismatches],
        "completeness_mismatches": [list(p) for p in report.completeness_mismatches],
    }
    return CommandResult("ok", payload)


# ----- argument wiring --------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("plain", "json"), default="plain",
        help="output rendering (default: plain)",
    )

    top = argparse.ArgumentParser(
        prog="disckit",
        description="Exact resultants, discriminants, strata, and jet dimension tables.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("resultant", parents=[common],
                       help="Sylvester resultant of two polynomials")
    p.add_argument("f")
    p.add_argument("g")
    p.add_argument("--ring", required=True, help="coefficient ring, e.g. ZZ, QQ, Fp(7), ZZ[b,c]")
    p.add_argument("--var", default="t", help="main variable (default: t)")
    p.add_argument("--deg-f", type=int, default=None, help="declared degree of f")
    p.add_argument("--deg-g", type=int, default=None, help="declared degree of g")
    p.set_defaults(handler=cmd_resultant)

    p = sub.add_parser("discriminant", parents=[common],
                       help="discriminant and separability classification")
    p.add_argument("poly")
    p.add_argument("--ring", required=True)
    p.add_argument("--var", default="t")
    p.add_argument("--degree", type=int, default=None, help="declared degree")
    p.set_defaults(handler=cmd_discriminant)

    p = sub.add_parser("disc-ideal", parents=[common],
                       help="resultant generators of the level-l discriminant ideal")
    p.add_argument("--d", type=int, required=True, help="degree of the form")
    p.add_argument("--l", type=int, required=True, help="level (number of generators)")
    p.add_argument("--i", type=int, default=None,
                   help="pinned coefficient index (default: d, the monic chart)")
    p.add_argument("--chart", type=int, choices=(0, 1), default=0,
                   help="affine patch (default: 0)")
    p.add_argument("--homogeneous", action="store_true",
                   help="classical discriminant of the generic form (needs l = 1)")
    p.set_defaults(handler=cmd_disc_ideal)

    p = sub.add_parser("etale", parents=[common],
                       help="etale/ramified verdict, optionally the full stratification")
    p.add_argument("poly")
    p.add_argument("--ring", required=True)
    p.add_argument("--var", default="t")
    p.add_argument("--degree", type=int, default=None)
    p.add_argument("--strata", action="store_true", help="compute the full stratification")
    p.set_defaults(handler=cmd_etale)

    p = sub.add_parser("dims", parents=[common],
                       help="jet-bundle dimension values and complex rank tables")
    p.add_argument("--N", type=int, required=True, help="ambient projective dimension")
    p.add_argument("--d", type=int, required=True, help="twist degree")
    p.add_argument("--k", type=int, required=True, help="jet order")
    p.add_argument("--j", type=int, default=None, help="exterior power")
    p.add_argument("--i", type=int, default=None, help="cohomological degree (default: 0)")
    p.add_argument("--table", action="store_true", help="rank table of the dual complex")
    p.set_defaults(handler=cmd_dims)

    p = sub.add_parser("verify", parents=[common],
                       help="brute-force check of the discriminant locus over F_q")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--q", type=int, required=True, help="prime field size")
    p.add_argument("--q2", type=int, default=None,
                   help="second prime: run the dimension growth check instead")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help=f"enumeration budget (default: {DEFAULT_BUDGET})")
    p.set_defaults(handler=cmd_verify)

    return top


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    command = args.command
    fmt = args.format
    try:
        result = args.handler(args)
    except InputSyntaxError as exc:
        result = CommandResult("error", None, exc.caret_diagnostic().splitlines())
        out = render(result, command, fmt)
        sys.stderr.write(out)
        return exc.exit_code
    except DisckitError as exc:
        result = CommandResult("error", None, [f"error: {exc}"])
        out = render(result, command, fmt)
        sys.stderr.write(out)
        return exc.exit_code
    except Exception as exc:  # pragma: no cover - guards against internal bugs
        result = CommandResult("error", None, [f"internal error: {exc!r}"])
        sys.stderr.write(render(result, command, fmt))
        return 5
    sys.stdout.write(render(result, command, fmt))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
