"""Command line: polynomials, verification suites, quivers and trace elements."""
from __future__ import annotations

import argparse
import json
import sys

from . import export

NAMED_WORDS = {
    "g": "gamma", "gamma": "gamma", "s": "sigma", "sigma": "sigma",
    "tcyl": "tau_cyl", "tplus_inv": "tau_plus_inv", "tminus": "tau_minus", "tmarkov": "tau_markov",
    "tB12": "tau_B12", "tB13": "tau_B13", "tB23": "tau_B23", "tA1": "tau_A1", "tA2": "tau_A2", "tA3": "tau_A3",
}


def _parse_triple(text):
    try:
        parts = [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected three integers a,b,c, got {text!r}") from None
    if len(parts) != 3 or min(parts) < 0:
        raise argparse.ArgumentTypeError(f"expected three nonnegative integers a,b,c, got {text!r}")
    return tuple(parts)


def _nonneg(text):
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError("expected a nonnegative integer")
    return n


def _emit(doc):
    sys.stdout.write(export.dumps(doc) + "\n")


# ---- g1 ----

def cmd_g1(args) -> int:
    from .macdonald_g1 import macdonald_P_explicit, macdonald_P_pieri, reconstruct_P

    methods = {"pieri": macdonald_P_pieri, "explicit": macdonald_P_explicit, "reconstruct": reconstruct_P}
    P = methods[args.method](args.l)
    _emit(export.poly_to_json(P, ["x"]))
    if args.check:
        others = [m for m in methods if m != args.method]
        bad = [m for m in others if methods[m](args.l) != P]
        if bad:
            print(f"mismatch: {args.method} differs from {', '.join(bad)}", file=sys.stderr)
            return 1
    return 0


# ---- g2 ----

def g2_polynomial(l, method: str, norm: str):
    """Phi_l (norm AS) or phi_l (norm X7) by the chosen route; None if l is not admissible."""
    from .macdonald_g2 import admissible, build_Phi, normalization_ratio, phi_closed, phi_mutation
    from .algebra import VTX3

    if not admissible(l):
        return None
    if method == "pieri":
        P = build_Phi(l)
        return P if norm == "AS" else P / normalization_ratio(l).in_context(VTX3)
    p = phi_closed(l) if method == "polytope" else phi_mutation(l)
    return p if norm == "X7" else normalization_ratio(l).in_context(VTX3) * p


def cmd_g2(args) -> int:
    l = args.l
    P = g2_polynomial(l, args.method, args.norm)
    names = ["x12", "x13", "x23"]
    if P is None:
        print(f"warning: {l} is not admissible; the polynomial is zero", file=sys.stderr)
        _emit({"vars": names, "terms": []})
        return 0
    _emit(export.poly_to_json(P, names))
    if args.check:
        bad = [m for m in ("pieri", "polytope", "mutation") if m != args.method and g2_polynomial(l, m, args.norm) != P]
        if bad:
            print(f"mismatch: {args.method} differs from {', '.join(bad)}", file=sys.stderr)
            return 1
    return 0


# ---- verify ----

def cmd_verify(args) -> int:
    from .verify import SUITES, run_suite

    names = SUITES if args.suite == "all" else (args.suite,)
    summary = []
    ok = True
    for name in names:
        rep, secs = run_suite(name, args.bound)
        for entry, passed, detail in rep.entries:
            line = f"{'PASS' if passed else 'FAIL'} [{name}] {entry}"
            print(line + (f"  {detail}" if detail and not passed else ""))
        summary.append({"suite": name, "ok": rep.ok, "seconds": round(secs, 3),
                        "passed": sum(1 for e in rep.entries if e[1]), "failed": len(rep.failures())})
        ok = ok and rep.ok
    print(json.dumps({"ok": ok, "suites": summary}, separators=(",", ":")))
    return 0 if ok else 1


# ---- quiver ----

def _trace_key(name):
    n = name[2:] if name.startswith("L_") else name
    aliases = {"cyl": "L_cyl", "10": "L_(1,0)", "(1,0)": "L_(1,0)", "01": "L_(0,1)", "(0,1)": "L_(0,1)"}
    return aliases.get(n, f"L_{n}")


def parse_cli_word(text, parser):
    from .cluster import MCGWord, dehn_twists, parse_word

    named = None
    word = MCGWord()
    for tok in text.split():
        base, inv = (tok[:-3], True) if tok.endswith("^-1") else (tok, False)
        if base in NAMED_WORDS:
            if named is None:
                named = dehn_twists()
            w = named[NAMED_WORDS[base]]
            word = word.then(w.inverse() if inv else w)
            continue
        try:
            word = word.then(parse_word(tok))
        except ValueError as exc:
            parser.error(f"bad word: {exc}")
    return word


def cmd_quiver(args, parser) -> int:
    from .cluster import apply_word, build_charts, to_dot, trace_elements, word_quiver
    from .cluster.mutation import NotLaurentInChart

    Q = build_charts()[args.chart]
    word = parse_cli_word(args.word or "", parser)
    for m in word.moves:
        idx = [m.k] if m.kind == "m" else [i for pair in m.perm for i in pair]
        if any(not 1 <= i <= Q.n for i in idx):
            parser.error(f"word uses a vertex outside 1..{Q.n}")
    Q2 = word_quiver(Q, word)
    if args.trace:
        traces = trace_elements()
        key = _trace_key(args.trace)
        if key not in traces:
            parser.error(f"unknown trace element {args.trace!r}; choose from {', '.join(sorted(traces))}")
        a = traces[key]
        if a.quiver != Q:
            parser.error(f"{key} does not live on the {args.chart} chart")
        try:
            img = apply_word(a, word)
        except NotLaurentInChart as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        _emit(export.torus_to_json(img))
        return 0
    if args.dot:
        sys.stdout.write(to_dot(Q2, args.chart))
    else:
        _emit({"chart": args.chart, "word": str(word), "eps": [list(r) for r in Q2.eps]})
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="clusterdaha", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    g1 = sub.add_parser("g1", help="genus 1 Macdonald polynomial P_l")
    g1.add_argument("--l", type=_nonneg, required=True)
    g1.add_argument("--method", choices=("pieri", "explicit", "reconstruct"), default="pieri")
    g1.add_argument("--check", action="store_true", help="cross-check against the other methods")

    g2 = sub.add_parser("g2", help="genus 2 Macdonald polynomial")
    g2.add_argument("--l", type=_parse_triple, required=True, help="triple a,b,c")
    g2.add_argument("--method", choices=("pieri", "polytope", "mutation"), default="polytope")
    g2.add_argument("--norm", choices=("AS", "X7"), default="X7")
    g2.add_argument("--check", action="store_true", help="cross-check against the other methods")

    ver = sub.add_parser("verify", help="run verification suites")
    ver.add_argument("--suite", choices=("qspecial", "g1", "g2", "cluster", "embed", "all"), default="all")
    ver.add_argument("--bound", type=_nonneg, default=None)

    qv = sub.add_parser("quiver", help="charts, mutated quivers and trace elements")
    qv.add_argument("--chart", choices=("kronecker", "markov", "x6", "x7"), required=True)
    qv.add_argument("--word", default="", help='moves in application order, e.g. "m1 m2 (1 2)" or "g"')
    qv.add_argument("--dot", action="store_true")
    qv.add_argument("--trace", default=None, help="trace element, e.g. A1, B12, cyl, 10, 01")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "g1":
        return cmd_g1(args)
    if args.command == "g2":
        return cmd_g2(args)
    if args.command == "verify":
        return cmd_verify(args)
    return cmd_quiver(args, parser)


if __name__ == "__main__":
    sys.exit(main())
