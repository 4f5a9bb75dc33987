"""Command-line front end.

Exit codes: 0 success, 1 an expectation in a report did not hold,
2 usage error, malformed input or a size guard.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

import numpy as np

from .augment import (DEFAULT_MAX_SUBSETS, EnumerationGuardError, enumerate_augmentations,
                      evaluate_matrix_gf2, lu_test)
from .braid import BraidWord, diagram_stats, parse_braid_word, random_word
from .catalog import CatalogError, CatalogRecord, load_catalog
from .crossings import CrossingSet
from .dga import SizeGuardError, differential
from .grobner import (FIELDS, TermOrder, buchberger, format_basis, leading_term_check,
                      minor_generators, verify_grobner_theorem, verify_ideal_theorem)
from .identities import identity_suite
from .pathmatrix import inverse_path_matrix, path_matrix, row_reduction_factors
from .ruling import (RulingGuardError, RulingPolynomial, count_via_rulings,
                     enumerate_rulings, is_ruling, ruling_polynomial)
from .simruling import construct_simultaneous, forest_ok, verify_simultaneous

USAGE_ERRORS = (ValueError, SizeGuardError, EnumerationGuardError, RulingGuardError,
                CatalogError)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _emit(args, payload: dict, text: str) -> None:
    print(_dump(payload) if args.format == "json" else text)


def _word(args) -> BraidWord:
    return parse_braid_word(args.word, args.strands)


def _crossing_set(word: BraidWord, text: str) -> CrossingSet:
    members = [int(t.lstrip("b")) for t in text.replace(",", " ").split() if t]
    return CrossingSet.from_members(word.w, members)


# --- single-word commands --------------------------------------------------------

def cmd_info(args) -> int:
    word = _word(args)
    stats = diagram_stats(word).as_dict()
    stats["permutation"] = list(word.permutation().images)
    text = "\n".join(f"{k}: {v}" for k, v in stats.items())
    _emit(args, stats, text)
    return 0


def _matrix_out(args, m) -> int:
    _emit(args, {"ring": m.ring, "matrix": m.to_json()}, str(m))
    return 0


def cmd_matrix(args) -> int:
    return _matrix_out(args, path_matrix(_word(args), args.ring))


def cmd_inverse(args) -> int:
    return _matrix_out(args, inverse_path_matrix(_word(args), args.ring))


def cmd_factor(args) -> int:
    factors, perm = row_reduction_factors(_word(args), args.ring)
    payload = {"ring": args.ring, "factors": [f.to_json() for f in factors],
               "permutation_matrix": perm.to_json()}
    blocks = [f"A_{k}:\n{f}" for k, f in enumerate(factors, start=1)]
    blocks.append(f"P:\n{perm}")
    _emit(args, payload, "\n\n".join(blocks))
    return 0


def cmd_differential(args) -> int:
    polys = differential(_word(args))
    payload = {f"a{n}": str(p) for n, p in enumerate(polys, start=1)}
    _emit(args, payload, "\n".join(f"d a{n} = {p}" for n, p in enumerate(polys, start=1)))
    return 0


def cmd_aug(args) -> int:
    word = _word(args)
    if args.action == "test":
        ys = _crossing_set(word, args.set or "")
        ok, mult = lu_test(word, ys)
        payload = {"set": list(ys.members), "augmentation": ok,
                   "matrix": evaluate_matrix_gf2(word, ys).to_lists(),
                   "multipliers": None if mult is None else
                   {f"{i},{j}": c for (i, j), c in sorted(mult.items())}}
        _emit(args, payload, f"{ys}: {'augmentation' if ok else 'not an augmentation'}")
        return 0
    mode = "list" if args.action == "list" else "count"
    res = enumerate_augmentations(word, mode, args.jobs, args.max_subsets)
    payload = {"count": res.count, "odd": res.odd,
               "cross_check": res.count == count_via_rulings(word)}
    if mode == "list":
        payload["augmentations"] = [list(a.members) for a in res.augmentations]
        text = "\n".join(str(a) for a in res.augmentations) + f"\ncount: {res.count}"
    else:
        text = str(res.count)
    _emit(args, payload, text)
    return 0


def cmd_ruling(args) -> int:
    word = _word(args)
    if args.action == "test":
        ys = _crossing_set(word, args.set or "")
        ok, theta = is_ruling(word, ys)
        _emit(args, {"set": list(ys.members), "ruling": ok, "theta": theta},
              f"{ys}: " + (f"ruling, theta = {theta}" if ok else "not a ruling"))
        return 0
    if args.action == "poly":
        poly = ruling_polynomial(word)
        _emit(args, {"ruling_polynomial": str(poly), **poly.to_json()}, str(poly))
        return 0
    rulings = enumerate_rulings(word)
    payload = {"rulings": [{"switches": list(s.members), "theta": th} for s, th in rulings]}
    _emit(args, payload, "\n".join(f"{s} theta={th}" for s, th in rulings))
    return 0


def cmd_simul(args) -> int:
    word = _word(args)
    res = construct_simultaneous(word)
    ok = verify_simultaneous(word, res) and forest_ok(word.q, res.mu, res.forest)
    payload = {**res.to_json(), "ok": ok}
    lines = [f"X = {res.X}", f"theta = {res.mu}"]
    for i, path in res.paths.items():
        lines.append(f"s{i}: " + ", ".join(f"{role} b{k}" for k, role in path))
    lines.append("forest: " + (", ".join(f"{a}->{c}" for a, c in res.forest) or "none"))
    lines.append(f"verified: {ok}")
    _emit(args, payload, "\n".join(lines))
    return 0


# --- verification commands -------------------------------------------------------

def cmd_identities(args) -> int:
    rng = np.random.default_rng(args.seed)
    words = [random_word(rng, args.q, int(w))
             for w in rng.integers(0, args.max_length + 1, size=args.samples)]
    results = identity_suite(args.q, words)
    _emit(args, {"q": args.q, "results": results},
          "\n".join(f"{k}: {'ok' if v else 'FAILED'}" for k, v in results.items()))
    return 0 if all(results.values()) else 1


def cmd_grobner(args) -> int:
    q = args.q
    rng = random.Random(args.seed)
    orders = [TermOrder.default(q)] + [TermOrder.random_diagonal_dominant(q, rng)
                                       for _ in range(args.random_orders)]
    results = {}
    for field in FIELDS:
        results[field] = {
            "ideal": all(verify_ideal_theorem(q, field, o, args.allow_q4) for o in orders),
            "grobner": all(verify_grobner_theorem(q, field, o, args.allow_q4) for o in orders),
        }
    lead = leading_term_check(q)
    basis = format_basis(buchberger(minor_generators(q), orders[0]), orders[0])
    payload = {"q": q, "orders": len(orders), "results": results,
               "leading_terms": lead, "basis": basis}
    lines = [f"{fld}: ideal {r['ideal']}, basis {r['grobner']}" for fld, r in results.items()]
    lines.append(f"leading terms: {lead}")
    lines += basis
    _emit(args, payload, "\n".join(lines))
    ok = lead and all(all(r.values()) for r in results.values())
    return 0 if ok else 1


# --- report ----------------------------------------------------------------------

def report_record(rec: CatalogRecord, max_subsets: int = DEFAULT_MAX_SUBSETS) -> dict:
    start = time.perf_counter()
    word = rec.word
    stats = diagram_stats(word)
    count = enumerate_augmentations(word, "count", 1, max_subsets).count
    poly = ruling_polynomial(word)
    out = {"name": rec.name, "w": word.w, "q": word.q, "mu": stats.mu, "tb": stats.tb,
           "augmentations": count, "ruling_polynomial": str(poly),
           "simultaneous_ok": verify_simultaneous(word),
           "cross_check_ok": count == count_via_rulings(word) and count % 2 == 1}
    failures = []
    exp = rec.expect
    if "augmentations" in exp and exp["augmentations"] != count:
        failures.append("augmentations")
    if "ruling_polynomial" in exp and RulingPolynomial.parse(exp["ruling_polynomial"]) != poly:
        failures.append("ruling_polynomial")
    if not out["simultaneous_ok"]:
        failures.append("simultaneous")
    if not out["cross_check_ok"]:
        failures.append("cross_check")
    out["failures"] = failures
    out["pass"] = not failures
    out["ms"] = round((time.perf_counter() - start) * 1000, 3)
    return out


def run_report(records: Sequence[CatalogRecord], jobs: int = 1,
               max_subsets: int = DEFAULT_MAX_SUBSETS, timing: bool = False) -> dict:
    """Evaluate every record; results keep catalog order for any ``jobs``."""
    if jobs > 1 and len(records) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            rows = list(ex.map(report_record, records, [max_subsets] * len(records)))
    else:
        rows = [report_record(r, max_subsets) for r in records]
    if not timing:
        for r in rows:
            del r["ms"]
    passed = sum(r["pass"] for r in rows)
    return {"records": rows,
            "summary": {"records": len(rows), "passed": passed, "failed": len(rows) - passed}}


def cmd_report(args) -> int:
    records = load_catalog(args.catalog)
    report = run_report(records, args.jobs, args.max_subsets, args.timing)
    if args.format == "json":
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        for r in report["records"]:
            status = "pass" if r["pass"] else "FAIL " + ",".join(r["failures"])
            ms = f"  {r['ms']:.1f} ms" if "ms" in r else ""
            print(f"{r['name']:<14} w={r['w']:<3} q={r['q']} aug={r['augmentations']:<6} "
                  f"R={r['ruling_polynomial']}  {status}{ms}")
        s = report["summary"]
        print(f"{s['passed']}/{s['records']} records passed")
    return 0 if report["summary"]["failed"] == 0 else 1


# --- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--strands", type=int, default=None,
                        help="number of strands (default: largest letter + 1)")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--max-subsets", type=int, default=DEFAULT_MAX_SUBSETS)

    parser = argparse.ArgumentParser(prog="posbraid",
                                     description="Invariants of Legendrian positive braid closures.")
    sub = parser.add_subparsers(dest="command", required=True)

    def word_cmd(name, fn, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=fn)
        return p

    for name, fn, help_ in [("info", cmd_info, "diagram statistics"),
                            ("matrix", cmd_matrix, "path matrix"),
                            ("inverse", cmd_inverse, "inverse path matrix"),
                            ("factor", cmd_factor, "row reduction factors"),
                            ("differential", cmd_differential, "differential of a_1..a_q")]:
        p = word_cmd(name, fn, help_)
        p.add_argument("word")
        if name in ("matrix", "inverse", "factor"):
            p.add_argument("--ring", choices=("Z2", "Z"), default="Z2")

    for name, fn, actions in [("aug", cmd_aug, ("test", "count", "list")),
                              ("ruling", cmd_ruling, ("test", "poly", "list"))]:
        p = word_cmd(name, fn, f"{name} commands")
        p.add_argument("action", choices=actions)
        p.add_argument("word")
        p.add_argument("--set", default=None, help="crossings for 'test', e.g. '1,3'")

    p = word_cmd("simul", cmd_simul, "simultaneous ruling and augmentation")
    p.add_argument("word")

    p = word_cmd("identities", cmd_identities, "symbolic matrix identities")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--max-length", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)

    p = word_cmd("grobner", cmd_grobner, "ideal and Groebner basis of the minors")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--random-orders", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--allow-q4", action="store_true")

    p = word_cmd("report", cmd_report, "evaluate a catalog against its expectations")
    p.add_argument("--catalog", default=None, help="JSONL file (default: bundled catalog)")
    p.add_argument("--timing", action="store_true", help="include per-record ms")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.jobs < 1:
        print("error: --jobs must be positive", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
