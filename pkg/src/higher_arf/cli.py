"""Command-line front end: JSON reports on stdout, diagnostics on stderr.

Exit codes: 0 success / true, 1 false / empty, 2 error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import fuchsian, mcg, moduli
from .arf import arf_invariant, new_arf
from .errors import ArfError
from .signature import Signature, admissible_types, count_arf_functions, liftability_failure


def _orders(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text or text in ("-", "—"):
        return ()
    return tuple(int(x) for x in text.split(","))


def _ints(text: str) -> list[int]:
    return [int(x) for x in text.split(",")] if text.strip() else []


def _signature(args) -> Signature:
    return Signature(args.genus, args.orders)


# --- commands ------------------------------------------------------------

def cmd_liftable(args):
    sig = _signature(args)
    reason = liftability_failure(sig, args.m)
    out = {"signature": sig.to_json(), "m": args.m, "liftable": reason is None}
    if reason is not None:
        out["reason"] = reason
    return out, 0 if reason is None else 1


def cmd_arf_count(args):
    sig = _signature(args)
    count = count_arf_functions(sig, args.m)
    out = {
        "signature": sig.to_json(),
        "m": args.m,
        "count": count,
        "types": [t.delta for t in admissible_types(sig, args.m)],
    }
    return out, 0 if count else 1


def cmd_components(args):
    report = moduli.components(_signature(args), args.m, args.brute_force, args.budget)
    out = report.to_json()
    if args.brute_force:
        out["sizes"] = [c.orbit_size for c in report.components]
    return out, 0 if report.components else 1


def cmd_orbits(args):
    sig = _signature(args)
    rows = []
    for o in mcg.classify_orbits(sig, args.m, args.budget):
        nf = mcg.normal_state(sig.genus, args.m, o.delta)
        rows.append({
            "delta": o.delta,
            "size": o.size,
            "representative": list(o.representative),
            "normal_form": list(nf),
        })
    return {"signature": sig.to_json(), "m": args.m, "orbits": rows}, 0 if rows else 1


def cmd_normalize(args):
    sig = _signature(args)
    f = new_arf(sig, args.m, _ints(args.alpha), _ints(args.beta))
    image, word = mcg.normal_form(f, args.budget)
    out = {
        "signature": sig.to_json(),
        "m": args.m,
        "input": {"alpha": list(f.alpha), "beta": list(f.beta)},
        "normal_form": {"alpha": list(image.alpha), "beta": list(image.beta)},
        "twist_word": [str(t) for t in word],
        "delta": arf_invariant(f),
    }
    return out, 0


def cmd_verify_numeric(args):
    sig = _signature(args)
    V = fuchsian.make_signature(sig)
    ok, why = fuchsian.is_sequential(V)
    levA = _ints(args.alpha) if args.alpha else [0] * sig.genus
    levB = _ints(args.beta) if args.beta else [0] * sig.genus
    L = fuchsian.lift_with_levels(V, args.m, levA, levB)
    report = fuchsian.verify_arf_axioms(L, args.samples, args.seed)
    out = {"signature": sig.to_json(), "m": args.m, "seed": args.seed,
           "sequential": ok, "sequentialDiagnostic": why, **report.to_json()}
    if sig.genus == 0:
        out["canonicalProductLevel"] = fuchsian.canonical_lift_product_check(V)
    return out, 0 if ok and report.all_passed else 1


COMMANDS = {
    "liftable": cmd_liftable,
    "components": cmd_components,
    "orbits": cmd_orbits,
    "normalize": cmd_normalize,
    "verify-numeric": cmd_verify_numeric,
    "arf-count": cmd_arf_count,
}


# --- output --------------------------------------------------------------

def _table(obj, indent=0) -> str:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and any(isinstance(x, (dict, list)) for x in
                                                         (v.values() if isinstance(v, dict) else v)):
                lines.append(f"{pad}{k}:")
                lines.append(_table(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v, ensure_ascii=False)}")
    elif isinstance(obj, list):
        for x in obj:
            lines.append(f"{pad}-")
            lines.append(_table(x, indent + 1))
    else:
        lines.append(f"{pad}{obj}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="higher-arf", description="m-Arf functions on hyperbolic orbifolds")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("-g", "--genus", type=int, required=True)
        p.add_argument("-p", "--orders", type=_orders, default=(), help="comma separated cone orders")
        p.add_argument("-m", type=int, required=True, help="level")
        p.add_argument("--budget", type=int, default=mcg.DEFAULT_BUDGET, help="maximum number of states")
        p.add_argument("--seed", type=int, default=0)
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument("--json", dest="table", action="store_false", default=False)
        fmt.add_argument("--table", dest="table", action="store_true")
        if name == "components":
            p.add_argument("--brute-force", action="store_true")
        if name in ("normalize", "verify-numeric"):
            p.add_argument("--alpha", default="", help="comma separated alpha values")
            p.add_argument("--beta", default="", help="comma separated beta values")
        if name == "verify-numeric":
            p.add_argument("--samples", type=int, default=100)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out, code = COMMANDS[args.command](args)
    except (ArfError, ValueError) as exc:
        err = {"error": type(exc).__name__, "message": str(exc)}
        print(json.dumps(err, ensure_ascii=False), file=sys.stderr)
        return 2
    if args.table:
        print(_table(out))
    else:
        print(json.dumps(out, ensure_ascii=False, sort_keys=False))
    return code


if __name__ == "__main__":
    sys.exit(main())
