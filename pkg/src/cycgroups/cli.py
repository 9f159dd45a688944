"""Command-line front end.

Exit codes: 0 success, 1 verification failed, 2 usage or parse error,
3 resource limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .census import census
from .dsl import SpecError, build_from_text
from .group import OrderCapExceeded
from .numtheory import totient
from .presentations import DEFAULT_MAX_COSETS, CosetLimitExceeded, PresentationSyntaxError, parse_presentation, todd_coxeter
from .smallgroups import NodeBudgetExceeded, catalog, enumerate_oracle
from .smallgroups.oracle import DEFAULT_NODE_BUDGET
from .structure import isomorphic
from . import theorems

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


def _dump(obj):
    print(json.dumps(obj, indent=2))


def _print_report(rep, as_json):
    if as_json:
        _dump(rep.to_json())
        return
    print(f"claim:   {rep.claim_id}")
    print(f"scope:   {rep.scope}")
    print(f"verdict: {rep.verdict.upper()}")
    for title, rows in (("witnesses", rep.witnesses), ("failures", rep.failures)):
        if not rows:
            continue
        print(f"{title} ({len(rows)}):")
        width = max(len(str(r.get("group", ""))) for r in rows)
        for r in rows:
            rest = "  ".join(f"{k}={v}" for k, v in r.items() if k != "group")
            print(f"  {str(r.get('group', '')):<{width}}  {rest}")


def cmd_census(args):
    g = build_from_text(args.spec, max_cosets=args.max_cosets)
    rep = census(g)
    if args.json:
        _dump(rep.to_json())
        return EXIT_OK
    print(f"group: {rep.group_label}   order: {rep.n}")
    print(f"{'d':>4} {'phi(d)':>7} {'count':>6}")
    for d, c in rep.rows:
        print(f"{d:>4} {totient(d):>7} {c:>6}")
    print(f"|C(G)| = {rep.total_cyclic}   deficiency = {rep.deficiency}")
    return EXIT_OK


def cmd_verify(args):
    if args.what == "deficiency":
        rep = theorems.verify_deficiency_classification(
            args.k, args.max_order, node_budget=args.node_budget, workers=args.workers
        )
    elif args.what == "identities":
        rep = theorems.verify_identities(args.max_order, node_budget=args.node_budget, workers=args.workers)
    elif args.what == "case1":
        rep = theorems.verify_case1_families(args.m)
    elif args.what == "case2":
        rep = theorems.verify_case2_family(args.max_m)
    else:
        rep = theorems.verify_sylow_and_core_claims()
    _print_report(rep, args.json)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_enumerate(args):
    if args.method == "oracle":
        res = enumerate_oracle(args.order, node_budget=args.node_budget, workers=args.workers)
    else:
        res = catalog(args.order)
    rows = []
    for g in res.groups:
        c = census(g)
        rows.append(
            {
                "label": g.label,
                "abelian": g.is_abelian,
                "element_orders": {str(k): v for k, v in g.order_counts.items()},
                "cyclic_total": c.total_cyclic,
                "deficiency": c.deficiency,
                "table": [list(r) for r in g.rows],
            }
        )
    if args.json:
        _dump({"order": res.order, "method": res.method, "exhaustive": res.exhaustive, "groups": rows})
        return EXIT_OK
    note = "" if res.exhaustive else " (partial list)"
    print(f"order {res.order}: {len(res)} classes via {res.method}{note}")
    width = max(len(r["label"]) for r in rows)
    for r in rows:
        orders = " ".join(f"{k}:{v}" for k, v in r["element_orders"].items())
        kind = "abelian" if r["abelian"] else "nonabelian"
        print(f"  {r['label']:<{width}}  {kind:<10}  |C|={r['cyclic_total']:<3} deficiency={r['deficiency']:<3} orders {orders}")
    return EXIT_OK


def cmd_iso(args):
    g = build_from_text(args.spec1, max_cosets=args.max_cosets)
    h = build_from_text(args.spec2, max_cosets=args.max_cosets)
    res = isomorphic(g, h)
    if args.json:
        _dump({"isomorphic": res.isomorphic, "witness": list(res.witness) if res.witness else None})
    else:
        print("isomorphic" if res.isomorphic else "not isomorphic")
        if res.witness:
            print("map: " + " ".join(f"{x}->{y}" for x, y in enumerate(res.witness)))
    return EXIT_OK if res.isomorphic else EXIT_FAIL


def cmd_coset_enum(args):
    p = parse_presentation(args.presentation)
    ct = todd_coxeter(p, args.max_cosets)
    rows = ct.compressed()
    if args.json:
        _dump({"order": ct.order, "cosets_defined": ct.defined, "generators": list(p.generators), "table": rows})
        return EXIT_OK
    print(f"order {ct.order} ({ct.defined} cosets defined)")
    cols = []
    for gname in p.generators:
        cols += [gname, gname + "^-1"]
    w = max(4, max(len(c) for c in cols) + 1)
    print("coset" + "".join(f"{c:>{w}}" for c in cols))
    for i, r in enumerate(rows):
        print(f"{i:>5}" + "".join(f"{v:>{w}}" for v in r))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cycgroups", description=__doc__.splitlines()[0])
    ap.add_argument("--workers", type=int, default=1, help="processes for the exhaustive search")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("census", help="cyclic subgroups per divisor of |G|")
    p.add_argument("spec")
    p.add_argument("--json", action="store_true")
    p.add_argument("--max-cosets", type=int, default=DEFAULT_MAX_COSETS)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", help="run a verification suite")
    vs = p.add_subparsers(dest="what", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true")
    v = vs.add_parser("deficiency", parents=[common])
    v.add_argument("--k", type=int, choices=[0, 1, 2], required=True)
    v.add_argument("--max-order", type=int, default=16)
    v.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET)
    v = vs.add_parser("identities", parents=[common])
    v.add_argument("--max-order", type=int, default=12)
    v.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET)
    v = vs.add_parser("case1", parents=[common])
    v.add_argument("--m", type=int, choices=[4, 5], required=True)
    v = vs.add_parser("case2", parents=[common])
    v.add_argument("--max-m", type=int, required=True)
    vs.add_parser("sylow-core", parents=[common])
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="all groups of one order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--method", choices=["oracle", "catalog"], default="oracle")
    p.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("iso", help="test two groups for isomorphism")
    p.add_argument("spec1")
    p.add_argument("spec2")
    p.add_argument("--json", action="store_true")
    p.add_argument("--max-cosets", type=int, default=DEFAULT_MAX_COSETS)
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("coset-enum", help="Todd-Coxeter enumeration of a presentation")
    p.add_argument("presentation")
    p.add_argument("--max-cosets", type=int, default=DEFAULT_MAX_COSETS)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_coset_enum)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (NodeBudgetExceeded, CosetLimitExceeded, OrderCapExceeded) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_LIMIT
    except (SpecError, PresentationSyntaxError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
