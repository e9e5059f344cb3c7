"""Command-line front end: ``tecc <subcommand> [flags]``.

Exit codes: 0 success, 1 validation error, 2 budget exceeded, 3 golden mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import tempfile
from typing import Sequence

from . import repro as rp
from .curve import (CurveSpec, curve_from_json, curve_new, enumerate_points, format_point, group_structure,
                    hasse_ok, make_evalset, parse_point, select_eval_set, split_x_values)
from .errors import BudgetError, DegenerateRecursion, TeccError, ValidationError
from .gf import FieldCtx, all_elements, field_from_json, field_new, format_elem, is_prime
from .lincode import classify, format_matrix, nullspace, row_space_equal
from .rrspace import ell_extreme, format_func
from .teccbuild import (CodeHandle, ecc_parity_check, eta_of_points, eta_witnesses, handle_from_json,
                        make_handle, min_distance_class, schur_audit, search_codes, self_dual_check,
                        tecc_parity_check_closed, tecc_parity_check_nullspace,
                        tecc_parity_check_recursive)

EXIT_OK, EXIT_VALIDATION, EXIT_BUDGET, EXIT_MISMATCH = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_VALIDATION, f"{self.prog}: error: {message}\n")


# -- flag parsing ---------------------------------------------------------------------

def _json_arg(text: str):
    """Inline JSON or a path to a JSON file."""
    s = text.strip()
    if s.startswith("{") or s.startswith("["):
        src = s
    else:
        try:
            with open(text, encoding="utf-8") as fh:
                src = fh.read()
        except OSError as exc:
            raise ValidationError(f"cannot read {text!r}: {exc.strerror}") from exc
    try:
        return json.loads(src)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"bad JSON: {exc}") from exc


_FIELD_RE = re.compile(r"^(?:GF\()?(\d+)(?:\^(\d+))?\)?(?::([\d,]+))?$")


def parse_field(text: str) -> FieldCtx:
    """``5``, ``2^4``, ``GF(2^4)``, ``2^4:1,1,0,0,1`` or JSON."""
    s = text.strip().replace(" ", "")
    if s.startswith("{"):
        return field_from_json(_json_arg(s))
    m = _FIELD_RE.match(s)
    if not m:
        raise ValidationError(f"bad field {text!r}")
    p, e, poly = int(m.group(1)), int(m.group(2) or 1), m.group(3)
    if m.group(2) is None and not is_prime(p):
        p, e = _split_prime_power(p)
    return field_new(p, e, None if poly is None else [int(c) for c in poly.split(",")])


def _split_prime_power(q: int) -> tuple[int, int]:
    p = next((d for d in range(2, q + 1) if q % d == 0), q)
    e = 0
    while q % p == 0:
        q //= p
        e += 1
    if q != 1:
        raise ValidationError(f"{p ** e * q} is not a prime power")
    return p, e


def parse_curve(ctx: FieldCtx, text: str) -> CurveSpec:
    """``type1:f0,f1,f2,f3``, ``type2:...``, ``type3:a,b`` or JSON."""
    s = text.strip()
    if s.startswith("{"):
        return curve_from_json(_json_arg(s), ctx)
    kind, _, rest = s.partition(":")
    coeffs = [t for t in _split_elems(rest) if t]
    if kind == "type3":
        if len(coeffs) != 2:
            raise ValidationError("type3 needs a,b")
        return curve_new(kind, ctx, (), ctx.coerce(coeffs[0]), ctx.coerce(coeffs[1]))
    return curve_new(kind, ctx, [ctx.coerce(c) for c in coeffs])


def _split_elems(text: str) -> list[str]:
    """Split on commas outside ``[...]``."""
    out, depth, cur = [], 0, []
    for ch in text:
        depth += ch == "["
        depth -= ch == "]"
        if ch == "," and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    return [t.strip() for t in out]


def _elems(ctx: FieldCtx, text: str) -> list[int]:
    return [ctx.coerce(t) for t in _split_elems(text) if t]


def _points(ctx: FieldCtx, text: str):
    return [parse_point(ctx, t) for t in text.split(";") if t.strip()]


def _curve_from_args(args) -> CurveSpec:
    if args.descriptor:
        obj = _json_arg(args.descriptor)
        ctx = field_from_json(obj["field"]) if "field" in obj else field_from_json(obj["curve"]["field"])
        return curve_from_json(obj["curve"], ctx)
    if not args.field or not args.curve:
        raise ValidationError("need --field and --curve (or --descriptor)")
    return parse_curve(parse_field(args.field), args.curve)


def _evalset(args, c: CurveSpec):
    if args.points:
        return make_evalset(c, _points(c.ctx, args.points))
    n = args.n if args.n is not None else 2 * len(split_x_values(c))
    return select_eval_set(c, n, args.policy)


def _handle_from_args(args) -> CodeHandle:
    if args.descriptor:
        obj = _json_arg(args.descriptor)
        if args.k is not None:
            obj["k"] = args.k
        if args.ell is not None or args.eta is not None:
            tw = dict(obj.get("twist") or {})
            if args.ell is not None:
                tw["ell"] = args.ell
            if args.eta is not None:
                tw["eta"] = args.eta
            obj["twist"] = tw
        if args.v is not None:
            obj["v"] = _split_elems(args.v)
        return handle_from_json(obj)
    c = _curve_from_args(args)
    D = _evalset(args, c)
    if args.k is None:
        raise ValidationError("need --k")
    ctx = c.ctx
    v = _elems(ctx, args.v) if args.v else None
    if args.ell is None:
        if args.eta is not None:
            raise ValidationError("--eta needs --ell")
        return make_handle(c, D, args.k, v=v)
    if args.eta is None:
        raise ValidationError("--ell needs --eta")
    return make_handle(c, D, args.k, ell=args.ell, eta=ctx.coerce(args.eta), v=v)


# -- rendering ------------------------------------------------------------------------

def _fmt(ctx: FieldCtx, a: int) -> str:
    return format_elem(ctx, a, "poly")


def _handle_line(h: CodeHandle) -> str:
    ctx = h.ctx
    tw = ""
    if h.is_single:
        tw = f" ell={h.twist.ell} eta={_fmt(ctx, h.twist.eta)}"
    elif h.twist is not None:
        tw = f" t={list(h.twist.t)} h={list(h.twist.h)}"
    return f"{h.curve} over {ctx!r}: n={h.n} k={h.k}{tw}"


class Output:
    """Collects text lines or a JSON object and writes them once."""

    def __init__(self, fmt: str):
        self.fmt = fmt
        self.lines: list[str] = []
        self.obj: dict | list | None = None

    def text(self, *lines: str) -> None:
        self.lines.extend(lines)

    def render(self) -> str:
        if self.fmt == "json":
            return json.dumps(self.obj, indent=2, sort_keys=False) + "\n"
        return "\n".join(self.lines) + ("\n" if self.lines else "")


def _write(path: str | None, data: str) -> None:
    if path is None:
        sys.stdout.write(data)
        sys.stdout.flush()
        return
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tecc-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


# -- subcommands ----------------------------------------------------------------------

def cmd_field(args, out: Output) -> int:
    if not args.field:
        raise ValidationError("need --field")
    ctx = parse_field(args.field)
    els = all_elements(ctx)
    out.obj = {**ctx.to_json(), "q": ctx.q,
               "elements": [{"vec": format_elem(ctx, a.v), "poly": _fmt(ctx, a.v),
                             "pow": format_elem(ctx, a.v, "pow")} for a in els]}
    out.text(f"{ctx!r}  q={ctx.q}")
    for a in els:
        out.text(f"  {format_elem(ctx, a.v):<12} {_fmt(ctx, a.v):<16} {format_elem(ctx, a.v, 'pow')}")
    return EXIT_OK


def cmd_curve(args, out: Output) -> int:
    c = _curve_from_args(args)
    ctx = c.ctx
    pts = enumerate_points(c)
    gs = group_structure(c)
    split = split_x_values(c)
    out.obj = {"curve": c.to_json(), "order": len(pts), "hasse": hasse_ok(c),
               "group": [gs.n1, gs.n2],
               "generators": [format_point(gs.g1), format_point(gs.g2)],
               "points": [format_point(P) for P in pts],
               "split_x": [_fmt(ctx, x.v) for x in split]}
    out.text(f"{c} over {ctx!r}", f"#E = {len(pts)}  Hasse: {'ok' if hasse_ok(c) else 'VIOLATED'}",
             f"group: Z/{gs.n1} x Z/{gs.n2}  g1={format_point(gs.g1)} g2={format_point(gs.g2)}",
             "points: " + " ".join(format_point(P) for P in pts),
             f"split x ({len(split)}): " + " ".join(_fmt(ctx, x.v) for x in split))
    return EXIT_OK


def cmd_code(args, out: Output) -> int:
    h = _handle_from_args(args)
    G = h.G
    out.obj = {"handle": h.to_json(), "G": G.to_json("poly")}
    out.text(_handle_line(h), "points: " + " ".join(format_point(P) for P in h.D), "generator:",
             format_matrix(G, "poly"))
    return EXIT_OK


def cmd_dual(args, out: Output) -> int:
    h = _handle_from_args(args)
    G = h.G
    Hn = tecc_parity_check_nullspace(h) if h.twist is not None else None
    routes: dict[str, dict] = {}
    if h.twist is None:
        Hn = nullspace(G)
        routes["residue"] = {"H": ecc_parity_check(h.curve, h.D, h.k, h.v, h.gamma)}
    elif h.is_single:
        try:
            H, trace = tecc_parity_check_recursive(h)
            routes["recursive"] = {"H": H, "function": format_func(trace.func)}
        except DegenerateRecursion as exc:
            routes["recursive"] = {"degenerate": str(exc)}
        if h.twist.ell == ell_extreme(h.k) and h.n % 2 == 0:
            routes["closed"] = {"H": tecc_parity_check_closed(h)}
    routes["nullspace"] = {"H": Hn}
    agree = True
    for r in routes.values():
        if "H" in r:
            r["orthogonal"] = (G @ r["H"].T).is_zero()
            r["agrees"] = row_space_equal(r["H"], Hn)
            agree = agree and r["orthogonal"] and r["agrees"]
    out.obj = {"handle": h.to_json(), "agree": agree,
               "routes": {k: {kk: (vv.to_json("poly") if kk == "H" else vv) for kk, vv in r.items()}
                          for k, r in routes.items()}}
    out.text(_handle_line(h))
    for name, r in routes.items():
        if "H" in r:
            extra = f"  f = {r['function']}" if "function" in r else ""
            out.text(f"{name}: orthogonal={r['orthogonal']} agrees={r['agrees']}{extra}",
                     format_matrix(r["H"], "poly"))
        else:
            out.text(f"{name}: degenerate ({r['degenerate']})")
    out.text(f"agreement: {'yes' if agree else 'NO'}")
    return EXIT_OK


def cmd_analyze(args, out: Output) -> int:
    h = _handle_from_args(args)
    summ = classify(h.G, args.budget)
    obj = {"handle": h.to_json(), **summ.to_json()}
    out.text(_handle_line(h),
             f"[{summ.n},{summ.k},{summ.d}] defect={summ.defect} class={summ.cls} "
             f"dual_d={summ.dual_d} self_dual={summ.self_dual}")
    if h.is_single:
        dc = min_distance_class(h, args.budget, witness_cap=args.witness_cap)
        obj.update({"case": dc.case, "distance": dc.to_json()})
        wit = " ".join(format_point(P) for P in dc.witness)
        out.text(f"case {dc.case} (N(k,O,D)={dc.N_k}, N_k-based prediction {dc.predicted_case})",
                 f"witness: {wit or '-'}" + (f"  f = {format_func(dc.func)}" if dc.func is not None else ""))
        if h.n == 2 * h.k and h.twist.ell == ell_extreme(h.k):
            cert = self_dual_check(h)
            obj["self_dual_certificate"] = cert.to_json(h.ctx)
            out.text(f"self-dual condition: {cert.verdict} (span equality {cert.span_equal})")
    out.obj = obj
    return EXIT_OK


def cmd_eta(args, out: Output) -> int:
    if args.ell is None:
        raise ValidationError("need --ell")
    if args.k is None and not args.descriptor:
        raise ValidationError("need --k")
    c = _curve_from_args(args)
    k = args.k if args.k is not None else _json_arg(args.descriptor)["k"]
    if args.subset:
        wits = [eta_of_points(c, k, args.ell, _points(c.ctx, args.subset))]
    else:
        wits = eta_witnesses(c, _evalset(args, c), k, args.ell, args.witness_cap)
    out.obj = [w.to_json() for w in wits]
    for w in wits:
        eta = f" {_fmt(c.ctx, w.eta)}" if w.eta is not None else ""
        fn = format_func(w.func) if w.func is not None else "-"
        out.text(" ".join(format_point(P) for P in w.points) + f"  f = {fn}  {w.status}{eta}")
    return EXIT_OK


def cmd_search(args, out: Output) -> int:
    c = _curve_from_args(args)
    D = _evalset(args, c)
    if args.k is None:
        raise ValidationError("need --k")
    ells = [args.ell] if args.ell is not None else None
    hits = search_codes(c, D, args.k, args.want, args.self_dual, args.budget, ells)
    out.obj = []
    for hit in hits:
        h, s = hit.handle, hit.summary
        out.obj.append({"handle": h.to_json(), "summary": s.to_json()})
        v = "" if h.v is None else " v=(" + ",".join(_fmt(h.ctx, a) for a in h.v) + ")"
        out.text(f"ell={h.twist.ell} eta={_fmt(h.ctx, h.twist.eta)}{v}  "
                 f"[{s.n},{s.k},{s.d}] {s.cls}{' self-dual' if s.self_dual else ''}")
    out.text(f"{len(hits)} match(es)")
    return EXIT_OK


def cmd_schur(args, out: Output) -> int:
    h = _handle_from_args(args)
    r = schur_audit(h)
    out.obj = {"handle": h.to_json(), **r.to_json()}
    out.text(_handle_line(h),
             f"dim C^*2 = {r.dim} (bound {r.lower_bound}, T_ell prediction {r.predicted}, "
             f"equality-iff-extreme {r.exact})",
             f"dim (C^perp)^*2 = {r.dual_dim} (bound {r.dual_bound}, equality-iff-extreme {r.dual_exact})",
             f"bounds hold: {r.holds}  verdict: {r.rs_verdict}")
    return EXIT_OK


def cmd_repro(args, out: Output) -> int:
    names = rp.TARGETS if args.name == "all" else (args.name,)
    if args.name != "all" and args.name not in rp.TARGETS:
        raise ValidationError(f"unknown target {args.name!r}; choose from {', '.join(rp.TARGETS)} or all")
    reports = [rp.repro(n) for n in names]
    out.obj = [r.to_json() for r in reports] if len(reports) > 1 else reports[0].to_json()
    for r in reports:
        out.text(r.text().rstrip("\n"))
    return EXIT_OK if all(r.ok for r in reports) else EXIT_MISMATCH


COMMANDS = {"field": cmd_field, "curve": cmd_curve, "code": cmd_code, "dual": cmd_dual,
            "analyze": cmd_analyze, "eta": cmd_eta, "search": cmd_search, "schur": cmd_schur,
            "repro": cmd_repro}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="5, 2^4, GF(2^4), 2^4:1,1,0,0,1 or JSON")
    common.add_argument("--curve", help="type1:f0,f1,f2,f3 | type2:... | type3:a,b or JSON")
    common.add_argument("--descriptor", help="code handle JSON (inline or path)")
    common.add_argument("--k", type=int)
    common.add_argument("--ell", type=int)
    common.add_argument("--eta")
    common.add_argument("--v", help="comma-separated column multipliers")
    common.add_argument("--n", type=int, help="length; picks complete split fibres")
    common.add_argument("--policy", default="field", choices=["field", "units-first"])
    common.add_argument("--points", help="evaluation points '(x,y);(x,y);...'")
    common.add_argument("--format", default="text", choices=["text", "json"])
    common.add_argument("--budget", type=int, help="enumeration budget (default $TECC_BUDGET or 10^6)")
    common.add_argument("--witness-cap", type=int, default=10 ** 6)
    common.add_argument("--out", help="write the report here (atomically) instead of stdout")

    ap = _Parser(prog="tecc", description="Twisted elliptic curve codes over small fields.")
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    sub.add_parser("field", parents=[common], help="field elements")
    sub.add_parser("curve", parents=[common], help="points and group structure")
    sub.add_parser("code", parents=[common], help="generator matrix")
    sub.add_parser("dual", parents=[common], help="parity-check routes and agreement")
    sub.add_parser("analyze", parents=[common], help="parameters, class and distance witness")
    p = sub.add_parser("eta", parents=[common], help="eta values of point subsets")
    p.add_argument("--subset", help="k+1 points '(x,y);...'; default lists all subsets of D")
    p = sub.add_parser("search", parents=[common], help="scan eta (and v) for matching codes")
    p.add_argument("--want", choices=["MDS", "NMDS", "AMDS", "other"])
    p.add_argument("--self-dual", action="store_true")
    p = sub.add_parser("schur", parents=[common], help="Schur-square audit")
    p = sub.add_parser("repro", parents=[common], help="re-derive a worked example and diff it")
    p.add_argument("name", help=", ".join(rp.TARGETS) + " or all")
    return ap


def run(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = Output(args.format)
    try:
        code = COMMANDS[args.cmd](args, out)
    except BudgetError as exc:
        print(f"tecc: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValidationError, TeccError, ValueError) as exc:
        print(f"tecc: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    _write(args.out, out.render())
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
