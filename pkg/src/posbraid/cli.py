"""Command-line interface.  Exit codes: 0 success, 1 verification failure,
2 usage error."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .braid import BraidParseError, BraidWord, is_knot, parse_braid, reduce_index_lemma5_detailed
from .census import CensusBoundError, enumerate_census, render, verify_paper
from .classify import NotAKnotError, classify_knot
from .minors import (SearchBoundExceeded, defect_certificate, search_alexander_trivial,
                     verify_certificate)
from .pattern import DecomposableWordError, ReducibleWordError
from .seifert import invariants_any, seifert_matrix
from .trees import TreeParseError, UnsupportedLinkError, classify_tree_knot, parse_tree, tree_invariants

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(obj: dict, as_json: bool, out=None) -> None:
    out = out or sys.stdout
    if as_json:
        json.dump(obj, out, indent=2, sort_keys=True, default=str)
        out.write("\n")
        return
    for k, v in obj.items():
        if isinstance(v, dict) and "min_degree" in v:
            v = " ".join(map(str, v["coeffs"]))
        elif isinstance(v, (dict, list)):
            v = json.dumps(v, sort_keys=True, default=str)
        out.write(f"{k}: {v}\n")


def _word(text: str) -> BraidWord:
    try:
        return parse_braid(text)
    except BraidParseError as e:
        raise UsageError(str(e)) from e


def cmd_invariants(args) -> int:
    w = _word(args.braid)
    rec = invariants_any(w)
    _emit(rec.to_dict(), args.json)
    return OK


def cmd_classify(args) -> int:
    w = _word(args.braid)
    res = classify_knot(w)
    d = res.to_dict()
    d["word"] = str(w)
    if res.certificate is not None:
        d["certificate_verified"] = verify_certificate(_summand_for(w, res), res.certificate)
    _emit(d, args.json)
    return OK if d.get("certificate_verified", True) else FAILED


def _summand_for(w: BraidWord, res) -> BraidWord:
    if not res.summands:
        return w
    for s in res.summands:
        f = parse_braid(s)
        cert = res.certificate
        if verify_certificate(f, cert):
            return f
    return w


def cmd_minors(args) -> int:
    w = _word(args.braid)
    cert = defect_certificate(w)
    if cert is None:
        _emit({"word": str(w), "certificate": None}, args.json)
        return OK
    ok = verify_certificate(w, cert)
    _emit({"word": str(w), "certificate": cert.to_dict(), "verified": ok}, args.json)
    return OK if ok else FAILED


def cmd_tree(args) -> int:
    try:
        tree = parse_tree(args.expr)
    except TreeParseError as e:
        raise UsageError(str(e)) from e
    d = tree_invariants(tree).to_dict()
    try:
        cls = classify_tree_knot(tree).to_dict()
        d["g4_top"] = cls["g4"]
        d["classification"] = cls
    except UnsupportedLinkError:
        d["classification"] = None
    _emit(d, args.json)
    return OK


def cmd_reduce(args) -> int:
    w = _word(args.braid)
    res = reduce_index_lemma5_detailed(w)
    d = {"word": str(w), "reduced": str(res.word) if res.word is not None else None,
         "column": res.column, "flagged": res.flagged}
    if res.word is None:
        d["note"] = "not reducible by the two-column merge"
    _emit(d, args.json)
    return FAILED if res.flagged and res.word is None else OK


def cmd_search_trivial(args) -> int:
    w = _word(args.braid)
    A = seifert_matrix(w).matrix
    try:
        B = search_alexander_trivial(A, 2, args.bound)
    except SearchBoundExceeded as e:
        raise UsageError(str(e)) from e
    _emit({"word": str(w), "bound": args.bound, "basis": B}, args.json)
    return OK


def cmd_census(args) -> int:
    try:
        records = list(enumerate_census(args.strands, args.crossings, knots=args.knots,
                                        prime=args.prime))
    except CensusBoundError as e:
        raise UsageError(str(e)) from e
    text = render(records, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fp:
            fp.write(text)
        sys.stderr.write(f"{len(records)} records written to {args.out}\n")
    else:
        sys.stdout.write(text)
    return OK


def cmd_verify_paper(args) -> int:
    report = verify_paper(args.strands, args.crossings)
    if args.json:
        _emit(report.to_dict(), True)
    else:
        for r in report.table:
            print(f"{'PASS' if r['ok'] else 'FAIL'} table {r['knot']}: "
                  f"(g, |sigma|, g4) = {tuple(r['computed'])}, expected {tuple(r['expected'])}")
        for r in report.example:
            print(f"{'PASS' if r['ok'] else 'FAIL'} example {r['surface']}: "
                  f"g = {r['genus']}, g4 = {r['g4']}, Alexander-trivial = {r['alexander_trivial']}")
        t = report.t56
        print(f"{'PASS' if t['ok'] else 'FAIL'} T(5,6): g = {t['g']}, |sigma| = {t['abs_sigma']}, "
              f"g4 <= {t['g4_hi']}")
        m = report.maximal
        print(f"{'PASS' if m['ok'] else 'FAIL'} maximal classes: {m['classes']} classes, "
              f"{', '.join(m['torus_found'])}; unmatched {m['unmatched']}")
    return OK if report.ok else FAILED


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="posbraid", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def single(name, func, helptext, arg="braid"):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument(arg)
        sp.add_argument("--json", action="store_true", help="JSON output")
        sp.set_defaults(func=func)
        return sp

    single("invariants", cmd_invariants, "genus, signature, Alexander polynomial")
    single("classify", cmd_classify, "topological 4-genus of a knot")
    single("minors", cmd_minors, "defect certificate")
    single("tree", cmd_tree, "plumbing along a plane tree", arg="expr")
    single("reduce", cmd_reduce, "merge two columns to lower the strand count")
    sp = single("search-trivial", cmd_search_trivial, "rank-2 Alexander-trivial subspace")
    sp.add_argument("--bound", type=int, default=2, help="coefficient bound m")

    sp = sub.add_parser("census", help="enumerate positive braid words")
    sp.add_argument("--strands", type=int, required=True)
    sp.add_argument("--crossings", type=int, required=True)
    sp.add_argument("--knots", action="store_true")
    sp.add_argument("--prime", action="store_true")
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_census)

    sp = sub.add_parser("verify-paper", help="regression checks against published values")
    sp.add_argument("--strands", type=int, default=5)
    sp.add_argument("--crossings", type=int, default=12)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_verify_paper)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return USAGE if e.code not in (0, None) else OK
    try:
        return args.func(args)
    except (UsageError, NotAKnotError, ReducibleWordError, DecomposableWordError) as e:
        sys.stderr.write(f"error: {e}\n")
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
