"""Command line entry point.

Exit codes: 0 computed (whatever the verdict), 2 input error, 3 internal
assertion failure.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import logging
import sys
from importlib import resources

from . import __version__
from .algebra import IntPoly, ModPoly
from .criteria import Mode, decide_very_simple
from .curve import CurveSpec, curve_report, differential_basis, eigen_multiplicities, genus, reduction_trace
from .engine import endomorphism_verdict
from .galois import certify
from .meataxe import EXHAUSTIVE_LIMIT, enumerate_submodules_tiny, is_absolutely_simple
from .parsing import parse_polynomial
from .permutations import Family, build_v00

SCHEMA_VERSION = "1.0"
EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 2, 3

log = logging.getLogger("superjac")


class InputError(ValueError):
    pass


def load_schema() -> dict:
    text = resources.files("superjac").joinpath("schema/report.schema.json").read_text(encoding="utf-8")
    return json.loads(text)


def _modes(value: str) -> Mode:
    return {"verified": Mode.VERIFIED, "paper": Mode.TRUSTED}[value]


def _poly(text: str | None) -> IntPoly | ModPoly:
    if text is None:
        raise InputError("--f is required")
    return parse_polynomial(text)


def _need(args, name: str):
    value = getattr(args, name)
    if value is None:
        raise InputError(f"--{name.replace('_', '-')} is required")
    return value


def _envelope(command: str, args) -> dict:
    inp = {k: v for k, v in sorted(vars(args).items()) if k not in ("json", "command", "schema", "verbose") and v is not None}
    return {"schema_version": SCHEMA_VERSION, "command": command, "input": inp, "warnings": []}


def _curve_block(rep) -> dict:
    d = rep.to_dict()
    return {
        "basis": d["basis"],
        "multiplicities": d["multiplicities"],
        "ribet_coprime": d["ribet_coprime"],
        "reduction": d["reduction"],
    }


def cmd_analyze(args) -> dict:
    p = _need(args, "p")
    f = _poly(args.f)
    out = _envelope("analyze", args)
    if args.assert_galois:
        galois = args.assert_galois
    elif isinstance(f, IntPoly):
        galois = certify(f, args.prime_budget, args.seed)
    else:
        galois = None
        out["warnings"].append("no Galois certification over a finite field; pass --assert-galois to supply one")
    v = endomorphism_verdict(p, f, galois, _modes(args.mode), seed=args.seed)
    out.update(
        p=p,
        n=v.n,
        genus=v.curve.genus,
        galois=v.galois.to_dict(),
        module=v.module.to_dict(v.very_simple) if v.module else None,
        curve=_curve_block(v.curve),
        hypotheses={k: v.hypotheses[k] for k in ("n_ge_5", "p_odd_prime", "base_char_zero")},
        conclusions=v.conclusions,
        record=v.hypothesis_record(),
    )
    out["warnings"].extend(v.curve.warnings)
    out["warnings"].extend(v.notes)
    return out


def cmd_module(args) -> dict:
    n, p = _need(args, "n"), _need(args, "p")
    family = Family(args.group)
    m = build_v00(n, p, family)
    out = _envelope("module", args)
    sv = is_absolutely_simple(m, args.seed)
    very = decide_very_simple(n, p, _modes(args.mode), family) if n >= 5 else None
    if very is None:
        out["warnings"].append("very simplicity criteria need n >= 5")
    block = {
        "label": m.label,
        "dim": m.dim,
        "group": family.value,
        "simple": sv.simple,
        "absolutely_simple": sv.absolutely_simple,
        "commutant_dim": sv.commutant_dim,
        "very_simple": very.to_dict() if very else None,
    }
    if p**m.dim <= EXHAUSTIVE_LIMIT:
        block["submodules"] = enumerate_submodules_tiny(m).to_dict()
    out.update(p=p, n=n, module=block)
    return out


def cmd_galois(args) -> dict:
    f = _poly(args.f)
    if not isinstance(f, IntPoly):
        raise InputError("Galois certification is over Q; drop the 'mod q' suffix")
    cert = certify(f, args.prime_budget, args.seed)
    out = _envelope("galois", args)
    out.update(n=f.degree, galois=cert.to_dict())
    return out


def cmd_basis(args) -> dict:
    n, p = _need(args, "n"), _need(args, "p")
    if p == 2:
        raise InputError("p must be odd")
    out = _envelope("basis", args)
    m = n - 1 if n % p == 0 else n
    if m != n:
        out["warnings"].append(f"{p} divides {n}: basis of the degree {m} model")
    mult = eigen_multiplicities(n, p)
    out.update(
        p=p,
        n=n,
        genus=genus(n, p),
        curve={
            "basis": differential_basis(m, p).to_list(),
            "multiplicities": mult.to_dict(),
            "ribet_coprime": mult.ribet_coprime,
            "reduction": None,
        },
    )
    return out


def cmd_reduce(args) -> dict:
    p = _need(args, "p")
    c = CurveSpec(p, _poly(args.f))
    if c.n % p:
        raise InputError(f"reduction only applies when p divides n; {p} does not divide {c.n}")
    out = _envelope("reduce", args)
    if args.alpha is not None:
        trace = reduction_trace(c, args.alpha)
    else:
        trace = curve_report(c).reduction
        if trace is None:
            raise InputError(f"f has no root over {c.base}; pass --alpha")
    red = trace.curve
    out.update(
        p=p,
        n=c.n,
        genus=genus(c.n, p),
        reduction=trace.to_dict() | {"degree": c.n - 1, "genus_after": genus(c.n - 1, p), "squarefree": True},
    )
    if red is not None:
        out["reduction"]["h1_text"] = str(red.f)
    return out


COMMANDS = {
    "analyze": cmd_analyze,
    "module": cmd_module,
    "galois": cmd_galois,
    "basis": cmd_basis,
    "reduce": cmd_reduce,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, help="prime exponent of the curve / field of the module")
    common.add_argument("--f", help='polynomial, e.g. "x^5 - x - 1" or "x^6 + x + 1 mod 7"')
    common.add_argument("--n", type=int, help="degree / size of the permuted set")
    common.add_argument("--group", choices=["sym", "alt"], default="alt")
    common.add_argument("--mode", choices=["verified", "paper"], default="verified")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--prime-budget", type=int, default=200)
    common.add_argument("--assert-galois", choices=["sn", "an"])
    common.add_argument("--alpha", type=int, help="root of f used by 'reduce'")
    common.add_argument("--json", action="store_true", help="emit the JSON report")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="superjac", description="Verification toolkit for superelliptic jacobians y^p = f(x).")
    parser.add_argument("--schema", action="store_true", help="print the report JSON schema and exit")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command")
    helps = {
        "analyze": "full endomorphism verdict for (p, f)",
        "module": "V00(n, p) with simplicity and very simplicity",
        "galois": "Galois certificate for f over Q",
        "basis": "holomorphic differentials and multiplicities",
        "reduce": "degree reduction when p divides deg f",
    }
    for name, text in helps.items():
        sub.add_parser(name, parents=[common], help=text)
    return parser


def render_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def render_text(report: dict) -> str:
    rows = []

    def walk(prefix: str, value):
        if isinstance(value, dict):
            for k, v in value.items():
                walk(f"{prefix}.{k}" if prefix else k, v)
        elif isinstance(value, list) and value and all(isinstance(x, dict) for x in value):
            for i, v in enumerate(value):
                walk(f"{prefix}[{i}]", v)
        else:
            rows.append((prefix, json.dumps(value, ensure_ascii=False) if not isinstance(value, str) else value))

    walk("", {k: v for k, v in report.items() if k not in ("record",)})
    width = max((len(k) for k, _ in rows), default=0)
    return "".join(f"{k.ljust(width)}  {v}\n" for k, v in rows)


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if args.schema:
        stdout.write(render_json(load_schema()))
        return EXIT_OK
    if args.command is None:
        parser.print_usage(stderr)
        return EXIT_INPUT
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=stderr)
    try:
        report = COMMANDS[args.command](args)
    except AssertionError as exc:
        stderr.write(f"internal assertion failed: {exc}\n")
        return EXIT_INTERNAL
    except RuntimeError as exc:
        stderr.write(f"undecided: {exc}\n")
        return EXIT_INTERNAL
    except (ValueError, ZeroDivisionError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    stdout.write(render_json(report) if args.json else render_text(report))
    return EXIT_OK


def main() -> None:
    sys.exit(run())
