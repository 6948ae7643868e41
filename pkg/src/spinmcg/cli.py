"""Command-line front end.

Exit codes: 0 for success or a true verdict, 1 for a false verdict or a
mismatch, 2 for bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Optional, Sequence

from . import certify, genus2, rokhlin, spin, torelli
from .homology import f2_parse, f2_str
from .quadform import CapExceededError, DEFAULT_CAP, named_form, q1
from .words import SymbolRangeError, WordSyntaxError, evaluate, evaluate_f2, gg_generators, mcg_generator_names


class UsageError(Exception):
    pass


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _genus(args, minimum: int = 1) -> int:
    if args.g is None:
        raise UsageError("this command needs -g <genus>")
    if args.g < minimum:
        raise UsageError(f"genus must be >= {minimum}")
    return args.g


# ------------------------------------------------------------ commands

def cmd_eval(args) -> int:
    g = _genus(args)
    M = evaluate(args.word, g)
    _emit(args, {"genus": g, "word": args.word, "matrix": M.to_list(), "mod2": M.mod2().to_list()}, str(M))
    return 0


def cmd_member(args) -> int:
    g = _genus(args)
    q = named_form(args.form, g)
    rep = spin.is_spin_member(args.word, q, g)
    text = "member" if rep.member else f"non-member (failing class {f2_str(rep.failing_class)})"
    _emit(args, rep.to_json(), text)
    return 0 if rep.member else 1


def cmd_extendable(args) -> int:
    g = _genus(args, 2)
    ok = spin.is_extendable_k3_sum(args.word, g)
    text = ("extendable" if ok else "not extendable") + f" [{spin.EXTENDABILITY_BASIS}]"
    _emit(args, {"extendable": ok, "basis": spin.EXTENDABILITY_BASIS}, text)
    return 0 if ok else 1


def cmd_witness(args) -> int:
    g = _genus(args)
    w = spin.non_preserving_witness(named_form(args.form, g))
    if w is None:
        _emit(args, {"witness": None}, "no witness: the form is 1 on every nonzero class")
        return 1
    _emit(args, {"z": f2_str(w.z), "matrix": w.matrix.to_list()},
          f"z = {f2_str(w.z)}\n{w.matrix}")
    return 0


def cmd_certify(args) -> int:
    g = _genus(args, 2)
    cert = certify.certify_o_q1_generation(g, cap=args.cap)
    lines = [
        f"genus {g}: {'ok' if cert.ok else 'FAILED'}",
        f"phi2 dictionary: {len(cert.phi2.entries)} entries, {'ok' if cert.phi2.ok else 'mismatch'}",
        f"lambda: {len(cert.closure_trace)} classes, traces replay: {cert.traces_replay}, "
        f"max trace length {cert.max_trace_length()}",
        f"conjugation identity: {cert.conjugation_pairs_checked} pairs, {cert.conjugation_ok}",
    ]
    if cert.orders:
        lines.append("orders: " + ", ".join(f"{k}={v}" for k, v in sorted(cert.orders.items())))
    _emit(args, cert.to_json(), "\n".join(lines))
    return 0 if cert.ok else 1


def cmd_orders(args) -> int:
    g = _genus(args, 2)
    if g > 3:
        raise UsageError("BFS orders are limited to g <= 3 (|Sp(8,2)| is about 4.7e10)")
    cap = None
    sp = certify.group_order_bfs([evaluate_f2(n, g) for n in mcg_generator_names(g)], cap)
    gen = certify.group_order_bfs([evaluate_f2(w, g) for w in gg_generators(g)], cap)
    odd = len(certify.orbit_bfs(q1(g), [evaluate_f2(n, g) for n in mcg_generator_names(g)],
                                lambda q, M: q.act(M)))
    out = {"sp": sp, "generated": gen, "odd_forms": odd, "sp_over_odd_forms": sp // odd}
    _emit(args, out, "\n".join(f"{k}: {v}" for k, v in out.items()))
    return 0 if gen * odd == sp else 1


def cmd_lambda(args) -> int:
    g = _genus(args, 2)
    z = f2_parse(args.cls, g)
    tr = certify.lambda_reduce(z, g, stop_at_base=not args.full)
    steps = [f"[] {f2_str(b)} -> {f2_str(after)}" for b, after in tr.steps]
    _emit(args, {"start": f2_str(z), "steps": tr.to_json(), "end": f2_str(tr.end)},
          "\n".join([f2_str(z)] + steps))
    return 0


def cmd_rewrite(args) -> int:
    g = _genus(args, 3)
    s = torelli.as_tacks(args.tacks, g)
    cert = torelli.factorize(s)
    rep = torelli.verify_certificate(cert)
    if args.json:
        print(json.dumps(cert.to_json(), indent=1, sort_keys=True))
    else:
        print(f"{s} = {s.bracket()}: {cert.root.size()} nodes, flattened length "
              f"{rep.flattened_length}, {'verified' if rep.ok else 'FAILED'}")
    return 0 if rep.ok else 1


def cmd_verify_cert(args) -> int:
    with open(args.file, encoding="utf-8") as fh:
        data = json.load(fh)
    try:
        cert = torelli.FactorizationCertificate.from_json(data)
    except (KeyError, ValueError) as err:
        raise UsageError(f"malformed certificate: {err}") from err
    rep = torelli.verify_certificate(cert)
    text = "verified" if rep.ok else "\n".join(f"FAIL at {p or '/'}: {r}" for p, r in rep.failures)
    _emit(args, rep.to_json(), text)
    return 0 if rep.ok else 1


def cmd_table1(args) -> int:
    table = genus2.table1_corrected() if args.corrected else None
    t = genus2.schreier_table(table)
    _emit(args, t.to_json(), t.to_text())
    return 0 if t.ok else 1


def cmd_coset_graph(args) -> int:
    cg = genus2.coset_graph()
    po = cg.path_order()
    text = [f"base {cg.base}"]
    if po:
        verts, labels = po
        parts = [str(verts[0])]
        for lab, v in zip(labels, verts[1:]):
            parts += [f"-{lab}-", str(v)]
        text.append(" ".join(parts))
    else:
        text += [f"{u} -{lab}- {v}" for u, lab, v in cg.edges]
    _emit(args, cg.to_json(), "\n".join(text))
    return 0


def cmd_arf(args) -> int:
    try:
        a = rokhlin.arf_from_signature(args.sigma, args.self_intersection)
    except rokhlin.NotCharacteristicError as err:
        raise UsageError(str(err)) from err
    _emit(args, {"arf": a}, str(a))
    return 0


def cmd_catalog(args) -> int:
    try:
        d = rokhlin.surface_catalog(args.name)
    except KeyError as err:
        raise UsageError(err.args[0]) from err
    js = d.to_json()
    text = f"{d.name}: sigma={d.sigma} F.F={d.self_intersection} genus={d.genus} " + (
        f"arf={js['arf']}" if "arf" in js else "(not characteristic, no Arf invariant)")
    _emit(args, js, text)
    return 0


# ------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-g", type=int, help="genus")
    common.add_argument("--form", default="q1", help="q0, q1 or a bit list such as [1,1,0,0]")
    common.add_argument("--json", action="store_true", help="JSON output")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="enumeration cap")

    p = argparse.ArgumentParser(prog="spinmcg", description="spin mapping class group toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name: str, fn: Callable, help_: str):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(fn=fn)
        return sp

    add("eval", cmd_eval, "evaluate a word in Sp(2g, Z)").add_argument("word")
    add("member", cmd_member, "membership in Spin(g, q)").add_argument("word")
    add("extendable", cmd_extendable, "extendability over (CP2, K3 # surface)").add_argument("word")
    add("witness", cmd_witness, "a transvection that moves the form")
    add("certify", cmd_certify, "certify O_q1 generation")
    add("orders", cmd_orders, "group orders by BFS")
    add("lambda", cmd_lambda, "reduce a class by the box operation").add_argument("cls")
    sp = sub.choices["lambda"]
    sp.add_argument("--full", action="store_true", help="run the rules down to x1 or y1")
    add("rewrite", cmd_rewrite, "factorize an odd subchain map").add_argument("tacks")
    add("verify-cert", cmd_verify_cert, "verify a factorization certificate").add_argument("file")
    add("table1", cmd_table1, "genus-2 Schreier generators").add_argument(
        "--corrected", action="store_true", help="compare against the corrected table")
    add("coset-graph", cmd_coset_graph, "action graph on odd genus-2 forms")
    sp = add("arf", cmd_arf, "Arf invariant from signature data")
    sp.add_argument("sigma", type=int)
    sp.add_argument("self_intersection", type=int)
    add("catalog", cmd_catalog, "knotted surface catalog").add_argument("name")
    return p


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return args.fn(args)
    except (UsageError, WordSyntaxError, SymbolRangeError, CapExceededError,
            certify.GroupOrderCapExceeded, ValueError, FileNotFoundError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
