"""Command-line interface.

Every command prints one JSON document on stdout and a one-line summary on
stderr. Exit codes: 0 all checks passed, 1 a mathematical check failed,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import os
import random
import sys
from dataclasses import dataclass, field

from . import bernstein, group_algebra, hecke, iso, weyl
from . import padic
from .exprs import parse_expression
from .hecke import HeckeElement
from .group_algebra import GroupAlgebraElement
from .sampling import random_hecke_element
from .scalars import R, RationalFunction, as_rational, specialize

SCHEMA_VERSION = 1

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class CommandResult:
    status: str  # pass | fail | error
    payload: dict = field(default_factory=dict)
    human_summary: str = ""

    @property
    def exit_code(self) -> int:
        return {"pass": EXIT_PASS, "fail": EXIT_FAIL}.get(self.status, EXIT_USAGE)

    def to_json(self, command: str) -> str:
        doc = {
            "schema_version": SCHEMA_VERSION,
            "command": command,
            "status": self.status,
            "payload": self.payload,
            "summary": self.human_summary,
        }
        return json.dumps(doc, indent=2)


def _verdict(ok: bool) -> str:
    return "pass" if ok else "fail"


def _r_value(args):
    return None if getattr(args, "r", None) is None else as_rational(args.r)


def _param(value) -> RationalFunction:
    return R if value is None else RationalFunction.constant(value)


def _load_json(arg: str):
    if os.path.exists(arg):
        with open(arg, encoding="utf-8") as fh:
            return json.load(fh)
    return json.loads(arg)


# ---------------------------------------------------------------------------
# algebra commands


def cmd_relations(args) -> CommandResult:
    rep = hecke.verify_defining_relations(args.m, _r_value(args))
    checked = [r["relation"] for r in rep["relations"] if r["status"] == "checked"]
    summary = f"H({args.m}, {rep['r']}): relations {checked or 'none'} checked, passed={rep['passed']}"
    return CommandResult(_verdict(rep["passed"]), rep, summary)


def _parse_hecke(text, m, value) -> HeckeElement:
    # parse generically, then substitute r, so "r" may appear in coefficients
    x = parse_expression(text, m)
    if isinstance(x, RationalFunction):
        x = hecke.unit(m) * x
    if not isinstance(x, HeckeElement):
        raise UsageError(f"expected a T[...] expression, got {text!r}")
    return x if value is None else hecke.specialize_element(x, value)


def cmd_mult(args) -> CommandResult:
    value = _r_value(args)
    a = _parse_hecke(args.left, args.m, value)
    b = _parse_hecke(args.right, args.m, value)
    prod = a * b
    payload = {"m": args.m, "r": "generic" if value is None else str(value),
               "left": str(a), "right": str(b), "product": str(prod), "terms": prod.to_json()}
    return CommandResult("pass", payload, str(prod))


def _basis_elements(m: int, maxlen: int, pi_range: int):
    core = [w for w, d in weyl.bfs_ball(m, maxlen).items()] if m >= 2 else [weyl.identity(m)]
    out = []
    for k in range(-pi_range, pi_range + 1):
        pk = weyl.power(weyl.pi_element(m), k)
        out += [weyl.multiply(pk, w) for w in core]
    return sorted(set(out), key=lambda w: (weyl.length(w), weyl.reduced_word(w)))


def cmd_table(args) -> CommandResult:
    value = _r_value(args)
    q = _param(value)
    basis = _basis_elements(args.m, args.maxlen, args.pi_range)
    rows = []
    for v, w in itertools.product(basis, repeat=2):
        prod = hecke.from_basis(v, q) * hecke.from_basis(w, q)
        rows.append({"left": prod.basis_label(v), "right": prod.basis_label(w), "product": str(prod)})
    payload = {"m": args.m, "maxlen": args.maxlen, "pi_range": args.pi_range,
               "r": "generic" if value is None else str(value), "size": len(rows)}
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=["left", "right", "product"], lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        payload["csv"] = buf.getvalue()
    else:
        payload["products"] = rows
    return CommandResult("pass", payload, f"{len(rows)} products of basis elements with length <= {args.maxlen}")


def iso_check_report(value=None, samples: int = 20, max_length: int = 5, pi_range: int = 2, seed: int = 0) -> dict:
    ctx = iso.IsoContext(value)
    q = ctx.param
    rng = random.Random(seed)
    homo_ok = 0
    for _ in range(samples):
        a = random_hecke_element(rng, 2, 3, param=q)
        b = random_hecke_element(rng, 2, 3, param=q)
        if iso.phi(ctx, a * b) == iso.phi(ctx, a) * iso.phi(ctx, b):
            homo_ok += 1
    basis = _basis_elements(2, max_length, pi_range)
    rt_hecke = sum(iso.phi_inverse(ctx, iso.phi(ctx, hecke.from_basis(w, q))) == hecke.from_basis(w, q) for w in basis)
    rt_group = sum(iso.phi(ctx, iso.phi_inverse(ctx, group_algebra.basis(w))) == group_algebra.basis(w) for w in basis)
    S = iso.phi(ctx, hecke.generator_S(2, 1, q))
    T = iso.phi(ctx, hecke.generator_T(2, q))
    rel1 = ((S + 1) * (S - q)).is_zero()
    rel2 = T * T * S == S * T * T
    try:
        iso.IsoContext(-1)
        rejects = False
    except ValueError:
        rejects = True
    checks = [
        {"check": "phi(ab) = phi(a) phi(b)", "passed": homo_ok == samples, "count": samples},
        {"check": "phi_inverse(phi(T_w)) = T_w", "passed": rt_hecke == len(basis), "count": len(basis)},
        {"check": "phi(phi_inverse(w)) = w", "passed": rt_group == len(basis), "count": len(basis)},
        {"check": "image of S_1 satisfies the quadratic relation", "passed": rel1},
        {"check": "images satisfy T^2 S_1 = S_1 T^2", "passed": rel2},
        {"check": "context at r = -1 is rejected", "passed": rejects},
    ]
    return {"r": "generic" if value is None else str(value), "checks": checks,
            "passed": all(c["passed"] for c in checks)}


def cmd_iso_check(args) -> CommandResult:
    value = _r_value(args)
    if value == -1:
        raise UsageError("r = -1 is excluded: H(2, -1) is not isomorphic to C[W_2] by this map")
    rep = iso_check_report(value, args.samples, args.max_length, seed=args.seed)
    return CommandResult(_verdict(rep["passed"]), rep, f"isomorphism checks at r={rep['r']}: passed={rep['passed']}")


def cmd_iso_apply(args) -> CommandResult:
    value = _r_value(args)
    if value == -1:
        raise UsageError("r = -1 is excluded")
    ctx = iso.IsoContext(value)
    x = parse_expression(args.expr, 2)
    if isinstance(x, HeckeElement):
        x = ctx.coerce_hecke(x)
        out, direction = iso.phi(ctx, x), "phi"
    elif isinstance(x, GroupAlgebraElement):
        x = ctx.coerce_group(x)
        out, direction = iso.phi_inverse(ctx, x), "phi_inverse"
    else:
        raise UsageError("expression must contain T[...] or G[...] basis elements")
    payload = {"r": "generic" if value is None else str(value), "direction": direction,
               "input": str(x), "output": str(out), "terms": out.to_json()}
    return CommandResult("pass", payload, str(out))


def cmd_braid(args) -> CommandResult:
    value = None if args.generic else as_rational(args.r)
    obs = iso.braid_obstruction(value)
    payload = {"r": "generic" if value is None else str(value), "obstruction": str(obs),
               "terms": obs.to_json(), "zero": obs.is_zero()}
    if value is None:
        payload["vanishes_at_r_1"] = all(specialize(c, 1) == 0 for _, c in obs.items())
    summary = "zero obstruction" if obs.is_zero() else f"nonzero obstruction: {obs}"
    return CommandResult("pass", payload, summary)


# ---------------------------------------------------------------------------
# bernstein


def cmd_bernstein_classify(args) -> CommandResult:
    obj = _load_json(args.json)
    items = obj if isinstance(obj, list) else [obj]
    results = []
    for item in items:
        cls = bernstein.inertial_class_from_json(item)
        results.append({"input": item, "descriptor": bernstein.classify(cls).to_json()})
    payload = {"results": results}
    blocks = ", ".join(r["descriptor"]["block"] for r in results)
    return CommandResult("pass", payload, blocks)


def cmd_bernstein_decompose(args) -> CommandResult:
    try:
        torsion = [int(x) for x in args.torsion.split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError(f"bad torsion list {args.torsion!r}") from exc
    if not torsion:
        raise UsageError("torsion list is empty")
    comps = [c for c in bernstein.compositions(args.n) if len(c) == len(torsion)]
    entries = [{"partition": list(c),
                "descriptor": bernstein.intertwining_descriptor(c, torsion, args.q).to_json()}
               for c in comps]
    payload = {"n": args.n, "q": args.q, "torsion": torsion, "intertwining": entries}
    if args.n == 2:
        payload["morita_decomposition"] = bernstein.morita_decomposition_gl2()
    return CommandResult("pass", payload, f"{len(entries)} composition(s) of {args.n} into {len(torsion)} part(s)")


# ---------------------------------------------------------------------------
# padic


def _load_function(arg, p):
    f = padic.BiInvariantFunction.from_json(_load_json(arg))
    if f.ctx.p != p:
        raise UsageError(f"function is over p={f.ctx.p}, command asked for p={p}")
    return f


def _function_payload(f) -> dict:
    doc = f.to_json()
    doc["labels"] = f.labels()
    doc["haar"] = padic.HAAR_NOTE
    return doc


def cmd_padic_conv(args) -> CommandResult:
    f1 = _load_function(args.left, args.p)
    f2 = _load_function(args.right, args.p)
    if f1.level != f2.level:
        raise UsageError("functions are at different levels")
    out = padic.convolve(f1, f2)
    payload = {"result": _function_payload(out), "l1_norm": str(padic.l1_norm(out))}
    return CommandResult("pass", payload, " + ".join(f"{v}*1[{lab}]" for (_, v), lab in zip(out.terms, out.labels())) or "0")


def cmd_padic_iwahori(args) -> CommandResult:
    rep = padic.iwahori_relation_check(args.p)
    return CommandResult(_verdict(rep["passed"]), rep,
                         f"Iwahori level p={args.p}: structure constants {rep['structure_constants']}, passed={rep['passed']}")


def cmd_padic_norm(args) -> CommandResult:
    f = _load_function(args.json, args.p)
    n = padic.l1_norm(f)
    return CommandResult("pass", {"function": _function_payload(f), "l1_norm": str(n)}, f"||f||_1 = {n}")


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="heckegl", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("relations", help="verify the defining relations of H(m, r)")
    sp.add_argument("--m", type=int, required=True)
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--r")
    g.add_argument("--generic", action="store_true")
    sp.set_defaults(func=cmd_relations)

    sp = sub.add_parser("mult", help="multiply two Hecke algebra expressions")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--r")
    sp.add_argument("left")
    sp.add_argument("right")
    sp.set_defaults(func=cmd_mult)

    sp = sub.add_parser("table", help="structure constants T_v T_w for short v, w")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--maxlen", type=int, required=True)
    sp.add_argument("--pi-range", type=int, default=0, help="include Pi^k factors with |k| <= this")
    sp.add_argument("--r")
    sp.add_argument("--format", choices=["json", "csv"], default="json")
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("iso-check", help="check the isomorphism H(2, r) -> C[W_2]")
    sp.add_argument("--r")
    sp.add_argument("--samples", type=int, default=20)
    sp.add_argument("--max-length", type=int, default=5)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_iso_check)

    sp = sub.add_parser("iso-apply", help="apply phi (T[...] input) or its inverse (G[...] input)")
    sp.add_argument("expr")
    sp.add_argument("--r")
    sp.set_defaults(func=cmd_iso_apply)

    sp = sub.add_parser("braid", help="braid obstruction in C[W_3]")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--r")
    g.add_argument("--generic", action="store_true")
    sp.set_defaults(func=cmd_braid)

    bp = sub.add_parser("bernstein", help="inertial classes and block descriptors")
    bsub = bp.add_subparsers(dest="subcommand", required=True)
    sp = bsub.add_parser("classify")
    sp.add_argument("json", help="inertial class (or list) as JSON text or a file path")
    sp.set_defaults(func=cmd_bernstein_classify)
    sp = bsub.add_parser("decompose")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--torsion", required=True)
    sp.set_defaults(func=cmd_bernstein_decompose)

    pp = sub.add_parser("padic", help="bi-invariant functions on GL_2(Q_p)")
    psub = pp.add_subparsers(dest="subcommand", required=True)
    sp = psub.add_parser("conv")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("left")
    sp.add_argument("right")
    sp.set_defaults(func=cmd_padic_conv)
    sp = psub.add_parser("iwahori-check")
    sp.add_argument("--p", type=int, required=True)
    sp.set_defaults(func=cmd_padic_iwahori)
    sp = psub.add_parser("norm")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("json")
    sp.set_defaults(func=cmd_padic_norm)
    return ap


def run(argv=None) -> tuple[CommandResult, str]:
    parser = build_parser()
    args = parser.parse_args(argv)
    name = args.command + (f" {args.subcommand}" if getattr(args, "subcommand", None) else "")
    try:
        result = args.func(args)
    except (UsageError, ValueError, KeyError, TypeError, ArithmeticError) as exc:
        result = CommandResult("error", {"error": f"{type(exc).__name__}: {exc}"}, str(exc))
    return result, name


def main(argv=None) -> int:
    try:
        result, name = run(argv)
    except SystemExit as exc:  # argparse usage errors
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE
    print(result.to_json(name))
    print(result.human_summary, file=sys.stderr)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
