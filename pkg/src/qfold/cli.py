"""Command-line front end.

Subcommands: algebra, char, fold, interp, crystal, bae, verify-corpus.
Default output is canonical text (characters in the ring grammar with a
counts trailer); --json switches every subcommand to a structured
mirror carrying a format-version field.  Exit codes: 0 success, 1
verdict failure, 2 usage or parse error.
"""

import argparse
import json
import sys

import sympy

from . import bae, charalg, corpus, crystal, fold, interp, liealg, ring

FORMAT_VERSION = 1

FLAVORS = {
    "standard-q": charalg.StandardQ,
    "folded-t": charalg.FoldedT,
    "twisted-t": charalg.TwistedT,
    "interp-qt": charalg.InterpQT,
}


class CliError(Exception):
    """Bad input detected after argparse; reported as a usage error."""


def _algebra(name):
    try:
        return liealg.build_algebra(name)
    except (ValueError, KeyError) as exc:
        raise CliError("unknown algebra %r: %s" % (name, exc))


def _monomial(text):
    try:
        coeff, m = ring.parse_monomial(text)
    except ring.ParseError as exc:
        raise CliError("bad monomial %r: %s" % (text, exc))
    return coeff, m


def _counts(text):
    try:
        vals = [int(x) for x in text.split(",")]
    except ValueError:
        raise CliError("bad counts %r (expected e.g. '2,1')" % text)
    return {i + 1: v for i, v in enumerate(vals)}


def _emit_char(char, as_json, label=None):
    if as_json:
        payload = {
            "format_version": FORMAT_VERSION,
            "terms": [{"coeff": str(c), "monomial": repr(m)[10:-2]}
                      for m, c in sorted(char.terms.items(),
                                         key=lambda kv: repr(kv[0]))],
            "distinct": char.num_monomials(),
            "total": char.total_multiplicity(),
        }
        if label:
            payload["label"] = label
        print(json.dumps(payload, indent=2))
    else:
        if label:
            print("# %s" % label)
        text = char.format()
        if text:
            print(text)
        print("# distinct=%d total=%d"
              % (char.num_monomials(), char.total_multiplicity()))


def _emit_json(payload):
    payload["format_version"] = FORMAT_VERSION
    print(json.dumps(payload, indent=2, default=str))


# ---------------------------------------------------------------------------
# subcommands

def cmd_algebra(args):
    g = _algebra(args.name)
    if args.json:
        _emit_json({
            "name": g.name, "rank": g.rank, "cartan": g.cartan,
            "di": list(g.di), "d": g.d, "simply_laced": g.simply_laced,
            "dual": liealg.langlands_dual(g).name,
            "positive_roots": len(liealg.positive_roots(g)),
        })
    else:
        print("algebra %s  rank=%d  d=%d  simply_laced=%s"
              % (g.name, g.rank, g.d, g.simply_laced))
        print("cartan:")
        for row in g.cartan:
            print("  " + " ".join("%3d" % v for v in row))
        print("di: %s" % (list(g.di),))
        print("dual: %s  positive roots: %d"
              % (liealg.langlands_dual(g).name,
                 len(liealg.positive_roots(g))))
    return 0


def cmd_char(args):
    g = _algebra(args.algebra)
    try:
        flavor = FLAVORS[args.flavor](g)
    except ValueError as exc:
        raise CliError(str(exc))
    coeff, m = _monomial(args.monomial)
    top = ring.ALPHA if args.alpha else charalg.ONE
    try:
        ch = charalg.fm_closure(flavor, m, args.cap, top_coeff=top)
    except charalg.CapExceeded as exc:
        print("cap exceeded: %s" % exc, file=sys.stderr)
        return 1
    except charalg.NotInRing as exc:
        raise CliError(str(exc))
    _emit_char(ch, args.json)
    return 0


def cmd_fold(args):
    g = _algebra(args.algebra)
    if args.action == "lemma":
        ok = fold.check_fold_lemma(g)
        if args.json:
            _emit_json({"algebra": g.name, "fold_lemma": ok})
        else:
            print("fold lemma %s: %s" % (g.name, "PASS" if ok else "FAIL"))
        return 0 if ok else 1
    fd = liealg.folding_data(g)
    _, m = _monomial(args.monomial)
    ch = charalg.fm_closure(charalg.StandardQ(fd.gprime), m, args.cap)
    if args.action == "invariants":
        out = fold.invariant_part(fd, ch)
    else:
        out = fold.folded_tchar(fd, ch)
    _emit_char(out, args.json,
               label="%s of cover %s closure" % (args.action, fd.gprime.name))
    return 0


def cmd_interp(args):
    g = _algebra(args.algebra)
    flavor = charalg.InterpQT(g)
    if args.node is not None:
        if args.node not in g.nodes:
            raise CliError("node %d not in %s" % (args.node, g.name))
        m = flavor.w_block(args.node, g.d - g.di_of(args.node), 0)
        top = charalg.ONE
    elif args.monomial:
        _, m = _monomial(args.monomial)
        top = ring.ALPHA if args.alpha else charalg.ONE
    else:
        raise CliError("interp needs --node or --monomial")
    ch = interp.interp_F(g, m, args.cap, top_coeff=top)
    if args.specialize == "none":
        _emit_char(ch, args.json)
        return 0
    rec = interp.five_specializations(g, ch)
    which = (list(charalg.SPECIALIZATIONS) if args.specialize == "all"
             else [args.specialize])
    if args.json:
        payload = {"source_distinct": ch.num_monomials(), "images": {}}
        for w in which:
            c = rec.images[w]
            payload["images"][w] = {
                "terms": c.format().splitlines(),
                "distinct": c.num_monomials(),
                "total": c.total_multiplicity(),
            }
        _emit_json(payload)
    else:
        _emit_char(ch, False, label="interpolating closure")
        for w in which:
            _emit_char(rec.images[w], False, label=w)
    return 0


def cmd_crystal(args):
    g = _algebra(args.algebra)
    if args.action == "conjcrys":
        if args.node is None:
            raise CliError("conjcrys needs --node")
        res = crystal.conjcrys_test(g, args.node, cap=args.cap)
        ok = res["subcrystal"] and res["matches_crystal"]
        if args.json:
            _emit_json({"algebra": g.name, "node": args.node,
                        "subcrystal": res["subcrystal"],
                        "matches_crystal": res["matches_crystal"],
                        "witness": res["witness"]})
        else:
            print("conjcrys %s node %d: %s"
                  % (g.name, args.node, "PASS" if ok else "FAIL"))
            if res["witness"]:
                print("witness: %r" % (res["witness"],))
        return 0 if ok else 1
    _, m = _monomial(args.monomial)
    try:
        m0 = crystal.anchor(g, m)
        cl = crystal.crystal_closure(g, m0, cap=args.cap)
    except (crystal.NotCrystalMonomial, charalg.CapExceeded) as exc:
        raise CliError(str(exc))
    out = ring.Character({x: 1 for x in cl})
    _emit_char(out, args.json, label="crystal closure (%d elements)" % len(cl))
    return 0


def _gaudin_data(args):
    if not args.gaudin:
        raise CliError("gaudin kind needs --gaudin JSON data")
    try:
        data = json.loads(args.gaudin)
        return {
            "points": [sympy.nsimplify(z) for z in data["points"]],
            "pairings": {int(i): [sympy.nsimplify(p) for p in v]
                         for i, v in data["pairings"].items()},
            "twist": {int(i): sympy.nsimplify(v)
                      for i, v in data["twist"].items()},
        }
    except (ValueError, KeyError, TypeError) as exc:
        raise CliError("bad --gaudin payload: %s" % exc)


def cmd_bae(args):
    g = _algebra(args.algebra)
    counts = _counts(args.counts)
    gaudin = _gaudin_data(args) if args.kind == "gaudin" else None

    if args.action == "build":
        sys_ = bae.build_bae(args.kind, g, counts, gaudin=gaudin)
        eqs = [((i, r), sympy.sstr(expr)) for (i, r), expr
               in sys_.equations()]
        if args.json:
            _emit_json({"kind": args.kind, "algebra": g.name,
                        "equations": [{"node": i, "root": r, "expr": e}
                                      for (i, r), e in eqs]})
        else:
            for (i, r), e in eqs:
                print("(%d,%d): %s = 0" % (i, r, e))
        return 0

    if args.action == "fold":
        fd = liealg.folding_data(g)
        cover = bae.build_bae(args.kind, fd.gprime, counts, gaudin=gaudin)
        target, certified = bae.fold_bae(cover, fd)
        if args.json:
            _emit_json({"cover": fd.gprime.name, "target": fd.g.name,
                        "kind": target.kind, "certified": certified})
        else:
            print("fold %s -> %s (%s): %s"
                  % (fd.gprime.name, fd.g.name, target.kind,
                     "CERTIFIED" if certified else "NOT CERTIFIED"))
        return 0 if certified else 1

    if args.action == "solve":
        if args.kind != "gaudin":
            raise CliError("solve supports the gaudin kind only")
        sys_ = bae.build_bae(args.kind, g, counts, gaudin=gaudin)
        sols = bae.solve_gaudin(sys_, seeds=args.seeds)
        if args.json:
            _emit_json({"solutions": [
                {"%d,%d" % k: [v.real, v.imag] for k, v in s.items()}
                for s in sols]})
        else:
            for n, s in enumerate(sols):
                parts = ["w[%d,%d]=%s" % (i, r, format(v, ".6g"))
                         for (i, r), v in sorted(s.items())]
                print("solution %d: %s" % (n, "  ".join(parts)))
            print("# %d solutions" % len(sols))
        return 0

    raise CliError("unknown bae action %r" % args.action)


def cmd_verify_corpus(args):
    results, ok = corpus.verify_corpus(args.filter)
    if args.json:
        _emit_json({"selected": len(results), "ok": ok,
                    "results": [{"id": i, "ok": o, "detail": d}
                                for i, o, d in results]})
        return 0 if ok else 1
    if not results:
        print("0 selected")
        return 0
    for ident, good, detail in results:
        print("%-28s %s  %s" % (ident, "PASS" if good else "FAIL", detail))
    print("# %d/%d passed" % (sum(1 for _, o, _ in results if o),
                              len(results)))
    return 0 if ok else 1


# ---------------------------------------------------------------------------

def _build_parser():
    p = argparse.ArgumentParser(
        prog="qfold",
        description="exact character computations for folded integrable "
                    "systems")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--json", action="store_true")
        sp.add_argument("--cap", type=int, default=None,
                        help="closure expansion cap (or QFOLD_CLOSURE_CAP)")

    sp = sub.add_parser("algebra", help="print Cartan data")
    sp.add_argument("name")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_algebra)

    sp = sub.add_parser("char", help="closure of a dominant monomial")
    sp.add_argument("op", choices=["F"])
    sp.add_argument("--flavor", choices=sorted(FLAVORS), required=True)
    sp.add_argument("--algebra", required=True)
    sp.add_argument("--monomial", required=True)
    sp.add_argument("--alpha", action="store_true",
                    help="alpha top coefficient (interp-qt)")
    common(sp)
    sp.set_defaults(func=cmd_char)

    sp = sub.add_parser("fold", help="cover closures and folding")
    sp.add_argument("action", choices=["invariants", "tchar", "lemma"])
    sp.add_argument("--algebra", required=True)
    sp.add_argument("--monomial", help="cover dominant monomial")
    common(sp)
    sp.set_defaults(func=cmd_fold)

    sp = sub.add_parser("interp",
                        help="interpolating closures and specializations")
    sp.add_argument("op", choices=["F"])
    sp.add_argument("--algebra", required=True)
    sp.add_argument("--node", type=int)
    sp.add_argument("--monomial")
    sp.add_argument("--alpha", action="store_true")
    sp.add_argument("--specialize", default="none",
                    choices=["none", "all"] + list(charalg.SPECIALIZATIONS))
    common(sp)
    sp.set_defaults(func=cmd_interp)

    sp = sub.add_parser("crystal", help="monomial crystal closures")
    sp.add_argument("action", choices=["closure", "conjcrys"])
    sp.add_argument("--algebra", required=True)
    sp.add_argument("--monomial")
    sp.add_argument("--node", type=int)
    common(sp)
    sp.set_defaults(func=cmd_crystal)

    sp = sub.add_parser("bae", help="Bethe-Ansatz systems")
    sp.add_argument("action", choices=["build", "fold", "solve"])
    sp.add_argument("--kind", choices=list(bae.KINDS), default="standard")
    sp.add_argument("--algebra", required=True,
                    help="algebra the system lives on")
    sp.add_argument("--counts", required=True,
                    help="roots per node, '2,1' (cover nodes for fold)")
    sp.add_argument("--gaudin", help="JSON points/pairings/twist")
    sp.add_argument("--seeds", type=int, default=40)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_bae)

    sp = sub.add_parser("verify-corpus", help="run the regression corpus")
    sp.add_argument("--filter", default="")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_verify_corpus)

    return p


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 2
    try:
        return args.func(args)
    except CliError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except ring.ParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
