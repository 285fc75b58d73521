"""Command-line front end.

Subcommands: verify-catalog, identify, invariants, conjugate,
classify-element, export-catalog.  Batch-only; inputs are JSON files using
the library's wire formats (matrices as 4x4 grids of rational strings,
subalgebras as {"ambient": ..., "basis": [...]}), outputs go to stdout as
text or JSON.  Exit codes: 0 success, 1 verification failure, 2 parse error,
3 irrational spectrum / unrecognized family.

The parameter sample set is printed in every report header; the environment
variable SP4_PARAM_SAMPLES (comma-separated rationals) overrides the default.
"""

from __future__ import annotations

import argparse
import json
import sys

from .catalog import catalog_to_json, load_catalog
from .errors import (IrrationalSpectrum, OutOfCatalog, Sp4Error,
                     UnrecognizedFamily, UnsupportedDimension)
from .identify import degraaf_to_sw, identify_degraaf
from .invariants import signature
from .jordan import classify_element
from .linalg import Mat4
from .rational import format_rational, parse_rational
from .sp4 import default_param_samples, in_sp4, parse_conjugator
from .structure import Subalgebra, structure_constants
from .verify import match_catalog, verify_catalog


def _samples_header():
    return [format_rational(a) for a in default_param_samples()]


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise _ParseFailure(f"cannot read {path}: {exc}") from exc


class _ParseFailure(Exception):
    pass


def _load_matrix(path: str) -> Mat4:
    data = _load_json(path)
    if isinstance(data, dict) and "matrix" in data:
        data = data["matrix"]
    try:
        return Mat4.from_json(data)
    except (ValueError, TypeError, IndexError) as exc:
        raise _ParseFailure(f"{path}: expected a 4x4 grid of rational strings: {exc}")


def _load_subalgebra(path: str) -> Subalgebra:
    data = _load_json(path)
    try:
        return Subalgebra.from_json(data)
    except (Sp4Error, ValueError, TypeError, KeyError) as exc:
        raise _ParseFailure(f"{path}: not a closed sp(4) subalgebra: {exc}")


def _emit(payload: dict, mode: str) -> None:
    if mode == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for k, v in payload.items():
            if isinstance(v, str) and "\n" in v:
                print(v)
            else:
                print(f"{k}: {v}")


def cmd_verify_catalog(args) -> int:
    params = None
    if args.params:
        params = tuple(parse_rational(p) for p in args.params.split(","))
    seed = args.seed if args.seed is not None else 0
    rep = verify_catalog(params=params, with_separations=True,
                         with_probe_seed=seed, probe_count=args.probe_count)
    if args.output == "json":
        print(json.dumps(rep.to_json(), indent=2, sort_keys=True))
    else:
        print(rep.to_text())
    return 0 if rep.overall_pass else 1


def cmd_identify(args) -> int:
    sub = _load_subalgebra(args.input)
    payload: dict = {"samples": _samples_header(), "dim": sub.dim}
    sc = structure_constants(sub)
    if sub.dim <= 4:
        dg = identify_degraaf(sc)
        payload["degraaf"] = str(dg)
        try:
            payload["sw"] = str(degraaf_to_sw(dg))
        except OutOfCatalog as exc:
            payload["sw"] = f"out of catalog ({exc})"
    matches = match_catalog(sub)
    payload["catalog_rows"] = [
        {"row": rid, "param": None if a is None else format_rational(a)}
        for rid, a in matches]
    if sub.dim > 4 and matches:
        entries = {e.row_id: e for e in load_catalog()}
        rid, a = matches[0]
        payload["sw"] = str(entries[rid].sw_at(a))
    _emit(payload, args.output)
    return 0


def cmd_invariants(args) -> int:
    sub = _load_subalgebra(args.input)
    payload = signature(sub).to_json()
    payload["samples"] = _samples_header()
    _emit(payload, args.output)
    return 0


def cmd_conjugate(args) -> int:
    sub = _load_subalgebra(args.input)
    env = {}
    if args.param:
        env["a"] = parse_rational(args.param)
    g = parse_conjugator(args.conjugator, env)
    from .sp4 import conjugate_subalgebra
    image = Subalgebra(conjugate_subalgebra(g, sub.space), sub.ambient)
    _emit({"samples": _samples_header(), **image.to_json()}, args.output)
    return 0


def cmd_classify_element(args) -> int:
    m = _load_matrix(args.input)
    if not in_sp4(m):
        raise Sp4Error("matrix is not in sp(4)")
    label = classify_element(m)
    payload = label.to_json()
    payload["samples"] = _samples_header()
    _emit(payload, args.output)
    return 0


def cmd_export_catalog(args) -> int:
    print(json.dumps(catalog_to_json(), indent=2, sort_keys=True))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="sp4solvable",
        description="Exact certification of the solvable subalgebra "
                    "classification of sp(4).")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify-catalog", help="certify all table rows")
    v.add_argument("--params", help="comma-separated rational sample overrides")
    v.add_argument("--seed", type=int, default=0, help="probe RNG seed")
    v.add_argument("--probe-count", type=int, default=0,
                   help="number of random subalgebra probes to run")
    v.add_argument("--output", choices=("text", "json"), default="text")
    v.set_defaults(func=cmd_verify_catalog)

    i = sub.add_parser("identify", help="identify a subalgebra from JSON")
    i.add_argument("--input", required=True)
    i.add_argument("--output", choices=("text", "json"), default="text")
    i.set_defaults(func=cmd_identify)

    inv = sub.add_parser("invariants", help="dump the invariant signature")
    inv.add_argument("--input", required=True)
    inv.add_argument("--output", choices=("text", "json"), default="text")
    inv.set_defaults(func=cmd_invariants)

    c = sub.add_parser("conjugate", help="apply a conjugator recipe")
    c.add_argument("--input", required=True)
    c.add_argument("--conjugator", required=True,
                   help='e.g. "W", "A W A", "shear:alpha:1/2", "diag:2,1,1/2,1"')
    c.add_argument("--param", help="value for the recipe parameter a")
    c.add_argument("--output", choices=("text", "json"), default="text")
    c.set_defaults(func=cmd_conjugate)

    ce = sub.add_parser("classify-element", help="conjugacy class of one element")
    ce.add_argument("--input", required=True)
    ce.add_argument("--output", choices=("text", "json"), default="text")
    ce.set_defaults(func=cmd_classify_element)

    ex = sub.add_parser("export-catalog", help="emit the catalog as JSON")
    ex.set_defaults(func=cmd_export_catalog)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:
        return 0
    except _ParseFailure as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (IrrationalSpectrum, UnrecognizedFamily, UnsupportedDimension) as exc:
        print(f"{type(exc).__name__}: {exc}; compare characteristic "
              f"polynomials instead of eigenvalue data", file=sys.stderr)
        return 3
    except Sp4Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
