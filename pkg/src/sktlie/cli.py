"""Command line interface.

Exit codes: 0 success, 1 an assertion or catalog expectation failed,
2 the input could not be read, parsed or validated.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .catalog import UnknownEntry, catalog_check, catalog_check_all, catalog_entry, catalog_list
from .constructions import skt_extension
from .dsl import parse_document, parse_index_list, serialize
from .errors import SKTLieError
from .hermitian_io import HermitianFile, dump_hermitian, load_extension_spec, load_hermitian
from .report import build_report, emit_report, nilradical_summary
from .search import metric_search

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load_structure(path: str):
    doc = parse_document(_read(path))
    L = doc.algebra(validate=True)
    return doc, L


def _load_json(path: str):
    try:
        return json.loads(_read(path))
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from None


def _parse_bool(s: str) -> bool:
    v = s.strip().lower()
    if v in ("true", "1", "yes"):
        return True
    if v in ("false", "0", "no"):
        return False
    raise InputError(f"expected true/false, got {s!r}")


def _parse_params(items) -> dict[str, str]:
    out = {}
    for item in items or []:
        if "=" not in item:
            raise InputError(f"--param expects k=v, got {item!r}")
        k, v = item.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def _print(obj) -> None:
    print(emit_report(obj) if isinstance(obj, dict) else obj)


def _check_assertions(report: dict, assertions) -> list[str]:
    """FLAG=BOOL for an algebra-level flag or every structure; LABEL.FLAG=BOOL for one."""
    failures = []
    for item in assertions or []:
        if "=" not in item:
            raise InputError(f"--assert expects FLAG=BOOL, got {item!r}")
        key, val = item.split("=", 1)
        want = _parse_bool(val)
        label, _, flag = key.rpartition(".")
        if not label and flag in ("jacobi", "unimodular"):
            if report[flag] != want:
                failures.append(f"{flag}: expected {want}, got {report[flag]}")
            continue
        targets = [s for s in report["structures"] if not label or s["label"] == label]
        if not targets:
            raise InputError(f"--assert {item!r}: no matching structure")
        for s in targets:
            if flag not in s:
                raise InputError(f"--assert {item!r}: unknown flag {flag!r}")
            if s[flag] != want:
                failures.append(f"{s['label']}.{flag}: expected {want}, got {s[flag]}")
    return failures


# -- subcommands -------------------------------------------------------------


def cmd_check(args) -> int:
    doc, L = _load_structure(args.file)
    herm = load_hermitian(_load_json(args.hermitian), L.n) if args.hermitian else None
    cand = parse_index_list(args.candidate) if args.candidate else doc.nilradical_candidate()
    report = build_report(L, herm, cand, name=doc.metadata.get("name", ""))
    failures = _check_assertions(report, args.assertions)
    if failures:
        report["assertion_failures"] = failures
    _print(report)
    return EXIT_FAILED if failures else EXIT_OK


def cmd_catalog(args) -> int:
    if args.action == "list":
        for name in catalog_list():
            print(name)
        return EXIT_OK
    if args.all:
        results = catalog_check_all(workers=args.workers)
        _print({"results": [r.to_json() for r in results]})
        return EXIT_OK if all(r.ok for r in results) else EXIT_FAILED
    if not args.name:
        raise InputError("catalog check needs NAME or --all")
    res = catalog_check(args.name, _parse_params(args.param))
    _print(res.to_json())
    return EXIT_OK if res.ok else EXIT_FAILED


def cmd_nilradical(args) -> int:
    doc, L = _load_structure(args.file)
    cand = parse_index_list(args.candidate) if args.candidate else doc.nilradical_candidate()
    summary = nilradical_summary(L, cand)
    _print(summary)
    return EXIT_OK if summary["verdict"] == "IS_NILRADICAL" else EXIT_FAILED


def cmd_search(args) -> int:
    _, L = _load_structure(args.file)
    herm = load_hermitian(_load_json(args.J), L.n)
    if not herm.structures:
        raise InputError("the --J file has no complex structure")
    J = herm.structures[0][1]
    out = metric_search(L, J, args.kind, budget=args.budget, seed=args.seed)
    _print(out.to_json())
    return EXIT_OK


def cmd_extend(args) -> int:
    spec = load_extension_spec(_load_json(args.base))
    H = skt_extension(spec, name=args.name)
    herm = HermitianFile(structures=[("J", H.J, H.g)])
    report = build_report(H.algebra, herm, None, name=args.name)
    report["structure"] = serialize(H.algebra).strip()
    report["hermitian"] = dump_hermitian(herm)
    _print(report)
    return EXIT_OK


def cmd_export(args) -> int:
    entry = catalog_entry(args.name, _parse_params(args.param))
    dsl = entry.to_dsl()
    herm = json.dumps(entry.hermitian_json(), indent=2)
    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / f"{entry.name}.dsl").write_text(dsl, encoding="utf-8")
        (out / f"{entry.name}.json").write_text(herm + "\n", encoding="utf-8")
        print(f"wrote {out / (entry.name + '.dsl')} and {out / (entry.name + '.json')}")
    elif args.hermitian:
        print(herm)
    else:
        print(dsl, end="")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="sktlie",
        description="Exact checks of SKT, balanced, Kahler and generalized Kahler structures "
        "on Lie algebras given by structure equations.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="report properties of an algebra and Hermitian data")
    c.add_argument("file", help="structure equations (DSL)")
    c.add_argument("--hermitian", help="Hermitian JSON (J, g, GK pairs)")
    c.add_argument("--candidate", help="nilradical candidate, 1-based indices i,j,...")
    c.add_argument(
        "--assert", dest="assertions", action="append", metavar="FLAG=BOOL",
        help="fail (exit 1) unless the flag has this value; LABEL.FLAG targets one structure",
    )
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("catalog", help="list or check catalog entries")
    c.add_argument("action", choices=["list", "check"])
    c.add_argument("name", nargs="?")
    c.add_argument("--param", action="append", metavar="K=V")
    c.add_argument("--all", action="store_true", help="check every entry (in parallel)")
    c.add_argument("--workers", type=int, default=None)
    c.set_defaults(func=cmd_catalog)

    c = sub.add_parser("nilradical", help="verify a nilradical candidate (codimension <= 2)")
    c.add_argument("file")
    c.add_argument("--candidate", help="1-based indices i,j,... (default: file metadata)")
    c.set_defaults(func=cmd_nilradical)

    c = sub.add_parser("search", help="search for an SKT or Kahler metric for a fixed J")
    c.add_argument("kind", choices=["skt", "kahler"])
    c.add_argument("file")
    c.add_argument("--J", required=True, help="Hermitian JSON; its first J is used")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--budget", type=int, default=512)
    c.set_defaults(func=cmd_search)

    c = sub.add_parser("extend", help="build the SKT extension described by a JSON spec")
    c.add_argument("base", help="extension spec JSON")
    c.add_argument("--name", default="extension")
    c.set_defaults(func=cmd_extend)

    c = sub.add_parser("export", help="write a catalog entry as DSL + Hermitian JSON")
    c.add_argument("name")
    c.add_argument("--param", action="append", metavar="K=V")
    c.add_argument("--out-dir")
    c.add_argument("--hermitian", action="store_true", help="print the Hermitian JSON instead")
    c.set_defaults(func=cmd_export)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, SKTLieError, UnknownEntry, ValueError, KeyError) as exc:
        code = getattr(exc, "code", "INPUT_ERROR")
        msg = exc.args[0] if exc.args else str(exc)
        pos = getattr(exc, "position", None)
        err = {"error": code, "message": str(msg)}
        if pos is not None:
            err["position"] = pos
        print(json.dumps(err), file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
