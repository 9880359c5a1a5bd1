"""Command-line entry point: run manifests, property suites and the table of varieties."""
from __future__ import annotations

import argparse
import json
import sys

from ..suites import SUITES, check_suites
from .manifest import ManifestError, parse_manifest_file
from .runner import SCHEMA, run, run_table1

EXIT_OK, EXIT_VERDICT, EXIT_USAGE = 0, 1, 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nilprod", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="execute the commands of a manifest")
    p_run.add_argument("manifest")
    p_run.add_argument("--seed", type=int, default=0)
    p_run.add_argument("--json", dest="json_out", metavar="PATH", help="also write the result document here")

    p_check = sub.add_parser("check", help="run randomised property suites")
    p_check.add_argument("suites", nargs="*", help=f"any of {', '.join(SUITES)}")
    p_check.add_argument("--cases", type=int, default=20)
    p_check.add_argument("--seed", type=int, default=0)

    p_tab = sub.add_parser("table1", help="bilinear products across the standard varieties")
    p_tab.add_argument("--ring", default="Q", help="Z, Q, Fp (with --p) or F<p>")
    p_tab.add_argument("--p", type=int, default=5)
    p_tab.add_argument("--dims", type=int, nargs=2, default=[1, 1], metavar=("A", "B"))
    p_tab.add_argument("--left", type=int, nargs="+", help="cyclic orders of ab(X) over Z (0 = infinite)")
    p_tab.add_argument("--right", type=int, nargs="+", help="cyclic orders of ab(Y) over Z")
    return parser


def _emit(doc: dict, path: str | None = None) -> None:
    text = json.dumps(doc, indent=2)
    print(text)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK

    if args.command == "run":
        try:
            manifest = parse_manifest_file(args.manifest)
        except (ManifestError, OSError) as exc:
            print(f"nilprod: {exc}", file=sys.stderr)
            return EXIT_USAGE
        doc = run(manifest, args.seed)
        _emit(doc, args.json_out)
        return EXIT_OK if doc["ok"] else EXIT_VERDICT

    if args.command == "check":
        unknown = [s for s in args.suites if s not in SUITES]
        if unknown:
            print(f"nilprod: unknown suite(s) {unknown}; choose from {list(SUITES)}", file=sys.stderr)
            return EXIT_USAGE
        results = check_suites(args.suites, seed=args.seed, case_count=args.cases)
        ok = all(r.ok for r in results)
        _emit({"schema": SCHEMA, "seed": args.seed, "ok": ok, "suites": [r.to_json() for r in results]})
        return EXIT_OK if ok else EXIT_VERDICT

    flags = {"ring": [args.ring], "p": [str(args.p)], "dims": [str(d) for d in args.dims]}
    if args.left:
        flags["left"] = [str(x) for x in args.left]
    if args.right:
        flags["right"] = [str(x) for x in args.right]
    try:
        out, ok = run_table1(flags)
    except (ValueError, KeyError) as exc:
        print(f"nilprod: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit({"schema": SCHEMA, "ok": ok, **out})
    return EXIT_OK if ok else EXIT_VERDICT


if __name__ == "__main__":
    sys.exit(main())
