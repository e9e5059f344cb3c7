"""Reference data for the worked examples, transcribed as printed.

Entries are strings in the field's element syntax (``a`` for the generator of
GF(4), ``w`` for GF(16)). Symbolic entries may use ``eta``, ``lam`` and
``v1..vn``; :func:`eval_expr` evaluates them. Where a printed value is known to
be misprinted the corrected value sits in an ``errata`` entry next to it, and
``repro`` compares against the corrected value.
"""

from __future__ import annotations

import ast
import operator

from .gf import FieldCtx, Fq

EXAMPLE1 = {
    "field": [5, 1],
    "curve": {"kind": "type1", "f": ["1", "1", "0", "1"]},
    "points": ["(0,1)", "(0,4)", "(2,1)", "(2,4)", "(3,1)", "(3,4)", "(4,2)", "(4,3)"],
    "k": 4,
    "G": [
        "1 1 1 1 1 1 1 1",
        "0 0 2 2 3 3 4 4",
        "0 0 4 4 4 4 1 1",
        "1 4 1 4 1 4 2 3",
    ],
    "gamma": ["1", "1", "4", "4", "3", "3", "2", "2"],
    "gamma_symbolic": ["-1/24", "-1/24", "1/4", "1/4", "-1/3", "-1/3", "1/8", "1/8"],
    "H": [
        "1 4 1 4 3 2 1 4",
        "0 0 2 3 4 1 4 1",
        "0 0 4 1 2 3 1 4",
        "1 1 4 4 3 3 2 2",
    ],
    "errata": {
        # columns 3-4 of the first three rows carry a sign slip
        "H": [
            "1 4 4 1 3 2 1 4",
            "0 0 3 2 4 1 4 1",
            "0 0 1 4 2 3 1 4",
            "1 1 4 4 3 3 2 2",
        ],
    },
    "d": 4,
}

EXAMPLE2 = {
    "field": [2, 4],
    "curve": {"kind": "type2", "f": ["1", "0", "0", "1"]},
    "points": ["(0,w^2+w)", "(0,w^2+w+1)", "(w^2+w,0)", "(w^2+w,1)", "(w^2+w+1,0)",
               "(w^2+w+1,1)", "(1,0)", "(1,1)"],
    "k": 4,
    "G": [
        "1 1 1 1 1 1 1 1",
        "0 0 w^2+w w^2+w w^2+w+1 w^2+w+1 1 1",
        "0 0 w^2+w+1 w^2+w+1 w^2+w w^2+w 1 1",
        "w^2+w w^2+w+1 0 1 0 1 0 1",
    ],
    "gamma": ["1"] * 8,
    "H": [
        "1 1 1 1 1 1 1 1",
        "0 0 w^2+w w^2+w w^2+w+1 w^2+w+1 1 1",
        "0 0 w^2+w+1 w^2+w+1 w^2+w w^2+w 1 1",
        "w^2+w w^2+w+1 0 1 0 1 0 1",
    ],
    "self_dual": True,
}

EXAMPLE3 = {
    "field": [2, 2],
    "curve": {"kind": "type3", "a": "1", "b": "1"},
    "points": ["(a,0)", "(a,1)", "(a+1,0)", "(a+1,1)", "(0,a)", "(0,a+1)"],
    "k": 4,
    "G": [
        "1 1 1 1 1 1",
        "a a a+1 a+1 0 0",
        "a+1 a+1 a a 0 0",
        "0 a+1 0 a a a+1",
    ],
    "gamma": ["a", "a", "a+1", "a+1", "1", "1"],
    "H": [
        "1 1 1 1 1 1",
        "a a a+1 a+1 0 0",
    ],
    "errata": {
        # the product formula gives the Frobenius conjugates of the printed values
        "gamma": ["a+1", "a+1", "a", "a", "1", "1"],
    },
}

# E: y^2 + y = x^3 over GF(4)
GF4_CURVE = {"kind": "type2", "f": ["0", "0", "0", "1"]}
GF4_POINTS = {
    "P1": "(1,a)", "P2": "(1,a+1)", "P3": "(a,a)", "P4": "(a,a+1)",
    "P5": "(a+1,a)", "P6": "(a+1,a+1)", "P7": "(0,1)", "P8": "(0,0)",
}

TABLE1 = {
    "field": [2, 2],
    "curve": GF4_CURVE,
    "points": GF4_POINTS,
    "generators": ["P1", "P3"],
    "dlog": {
        "(0,0)": "O", "(1,0)": "P1", "(0,1)": "P3", "(1,1)": "P6", "(1,2)": "P7",
        "(2,0)": "P2", "(2,1)": "P8", "(2,2)": "P5", "(0,2)": "P4",
    },
}

TABLE2 = {
    "field": [2, 2],
    "curve": GF4_CURVE,
    "points": GF4_POINTS,
    "D": ["P1", "P2", "P3", "P4", "P5", "P6"],
    "k": 4,
    "count": 3,
    "rows": [
        {"labels": ["P1", "P2", "P3", "P4"], "coords": ["(1,a)", "(1,a+1)", "(a,a)", "(a,a+1)"],
         "u": ["a", "a+1", "1"], "v": []},
        {"labels": ["P3", "P4", "P5", "P6"], "coords": ["(1,a)", "(1,a+1)", "(a+1,a)", "(a+1,a+1)"],
         "u": ["a+1", "a", "1"], "v": []},
        {"labels": ["P1", "P2", "P5", "P6"], "coords": ["(a,a)", "(a,a+1)", "(a+1,a)", "(a+1,a+1)"],
         "u": ["1", "1", "1"], "v": []},
    ],
    "errata": {
        # rows 2 and 3 carry swapped point labels; coordinates and functions agree
        "labels": [["P1", "P2", "P3", "P4"], ["P1", "P2", "P5", "P6"], ["P3", "P4", "P5", "P6"]],
    },
}

TABLE3 = {
    "field": [2, 2],
    "curve": GF4_CURVE,
    "points": GF4_POINTS,
    "D": ["P1", "P2", "P3", "P4", "P5", "P6"],
    "k": 3,
    "count": 2,
    "rows": [
        {"labels": ["P1", "P3", "P5"], "u": ["a"], "v": ["1"]},
        {"labels": ["P2", "P4", "P6"], "u": ["a+1"], "v": ["1"]},
    ],
}

GF5_CURVE = {"kind": "type1", "f": ["1", "1", "0", "1"]}
GF5_POINTS = {
    "P1": "(0,1)", "P2": "(0,4)", "P3": "(2,1)", "P4": "(2,4)",
    "P5": "(3,1)", "P6": "(3,4)", "P7": "(4,2)", "P8": "(4,3)",
}

TABLE4 = {
    "field": [5, 1],
    "curve": GF5_CURVE,
    "points": GF5_POINTS,
    "generator": "P1",
    "multiples": {"P1": 1, "P7": 2, "P3": 3, "P6": 4, "P5": 5, "P4": 6, "P8": 7, "P2": 8},
    "k": 3,
    "ell": 0,
    "count": 8,
    "rows": [
        {"mult": [1, 2, 7, 8], "u": ["0", "1", "1"], "v": []},
        {"mult": [1, 3, 6, 8], "u": ["0", "3", "1"], "v": []},
        {"mult": [1, 4, 5, 8], "u": ["0", "2", "1"], "v": []},
        {"mult": [1, 4, 6, 7], "u": ["4", "0", "3"], "v": ["1"], "eta": "3"},
        {"mult": [2, 3, 5, 8], "u": ["1", "0", "2"], "v": ["1"], "eta": "2"},
        {"mult": [2, 3, 6, 7], "u": ["3", "4", "1"], "v": []},
        {"mult": [2, 4, 5, 7], "u": ["2", "3", "1"], "v": []},
        {"mult": [3, 4, 5, 6], "u": ["1", "0", "1"], "v": []},
    ],
}

GF4_TECC = {
    "field": [2, 2],
    "curve": GF4_CURVE,
    "points": GF4_POINTS,
    "D": ["P1", "P2", "P3", "P4", "P5", "P6"],
    "k": 3,
    "ell": 0,
    "v": ["lam", "lam", "lam/a", "lam/a", "lam/(a+1)", "lam/(a+1)"],
    "G": [
        ["v1", "v2", "v3", "v4", "v5", "v6"],
        ["v1", "v2", "v3*a", "v4*a", "v5*(a+1)", "v6*(a+1)"],
        ["v1*(a+eta)", "v2*(a+1+eta)", "v3*(a+eta*(a+1))", "v4*(a+1+eta*(a+1))",
         "v5*(a+eta*a)", "v6*(a+1+eta*a)"],
    ],
    "H": [
        ["1/v1", "1/v2", "a/v3", "a/v4", "(a+1)/v5", "(a+1)/v6"],
        ["1/v1", "1/v2", "(a+1)/v3", "(a+1)/v4", "a/v5", "a/v6"],
        ["(a+eta)/v1", "(a+1+eta)/v2", "(a+1+eta)/v3", "(1+eta)/v4", "(1+eta)/v5", "(a+eta)/v6"],
    ],
    "transform_left": [
        ["lam", "lam", "lam*(a+1)", "lam*(a+1)", "lam*a", "lam*a"],
        ["lam"] * 6,
        ["lam*(a+eta)", "lam*(a+1+eta)", "lam*(1+eta*a)", "lam*(a+eta*a)",
         "lam*(a+1+eta*(a+1))", "lam*(1+eta*(a+1))"],
    ],
    "transform_scale": "lam*lam",
    "transform_right": [
        ["1/lam", "1/lam", "(a+1)/lam", "(a+1)/lam", "a/lam", "a/lam"],
        ["1/lam"] * 6,
        ["(a+eta)/lam", "(a+1+eta)/lam", "(1+eta*a)/lam", "(a+eta*a)/lam",
         "(a+1+eta*(a+1))/lam", "(1+eta*(a+1))/lam"],
    ],
    "d": 4,
    "class": "MDS",
    "errata": {
        # the stated parameters contradict the distance trichotomy: y + a and
        # y + a + 1 each vanish on three points of D summing to O, so d = n - k
        "d": 3,
        "class": "NMDS",
    },
}

GF5_TECC = {
    "field": [5, 1],
    "curve": GF5_CURVE,
    "points": GF5_POINTS,
    "D": ["P1", "P2", "P3", "P4", "P5", "P6", "P7", "P8"],
    "k": 3,
    "ell": 0,
    "G": [
        ["1"] * 8,
        ["0", "0", "2", "2", "3", "3", "4", "4"],
        ["1", "4", "1+4*eta", "4+4*eta", "1+4*eta", "4+4*eta", "2+eta", "3+eta"],
    ],
    "H": [
        ["1", "4", "1", "4", "3", "2", "1", "4"],
        ["0", "0", "2", "3", "4", "1", "4", "1"],
        ["0", "0", "4", "1", "2", "3", "1", "4"],
        ["1", "1", "4", "4", "3", "3", "2", "2"],
        ["0", "0", "3+3*eta", "3+2*eta", "4+4*eta", "4+eta", "3+eta", "3+4*eta"],
    ],
    "errata": {
        "H": [
            ["1", "4", "4", "1", "3", "2", "1", "4"],
            ["0", "0", "3", "2", "4", "1", "4", "1"],
            ["0", "0", "1", "4", "2", "3", "1", "4"],
            ["1", "1", "4", "4", "3", "3", "2", "2"],
            ["0", "0", "3+3*eta", "3+2*eta", "4+4*eta", "4+eta", "3+eta", "3+4*eta"],
        ],
    },
    "d_by_eta": {"1": 5, "2": 4, "3": 4, "4": 5},
}

ALL = {
    "example1": EXAMPLE1, "example2": EXAMPLE2, "example3": EXAMPLE3, "table1": TABLE1,
    "table2": TABLE2, "table3": TABLE3, "table4": TABLE4, "gf4-tecc": GF4_TECC, "gf5-tecc": GF5_TECC,
}

# -- symbolic entries -------------------------------------------------------------

_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul,
           ast.Div: operator.truediv}


def eval_expr(ctx: FieldCtx, expr: str, env: dict[str, Fq] | None = None) -> Fq:
    """Evaluate ``+ - * /`` over field elements, integers and named symbols."""
    env = dict(env or {})
    env.setdefault("a", ctx.gen)
    env.setdefault("w", ctx.gen)

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            return _BINOPS[type(node.op)](ev(node.left), ev(node.right))
        if isinstance(node, ast.BinOp) and isinstance(node.op, ast.Pow):
            e = node.right
            if not (isinstance(e, ast.Constant) and isinstance(e.value, int)):
                raise ValueError(f"exponent must be an integer in {expr!r}")
            return ev(node.left) ** e.value
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return -ev(node.operand)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return ctx(node.value)
        if isinstance(node, ast.Name) and node.id in env:
            return env[node.id]
        raise ValueError(f"unsupported expression {expr!r}")

    return ev(ast.parse(expr.replace("^", "**"), mode="eval"))


def matrix_rows(ctx: FieldCtx, rows, env: dict[str, Fq] | None = None) -> list[list[int]]:
    """Rows given as space-separated strings or lists of expressions, as codes."""
    out = []
    for r in rows:
        cells = r.split() if isinstance(r, str) else r
        out.append([_cell(ctx, s, env) for s in cells])
    return out


def _cell(ctx: FieldCtx, s: str, env) -> int:
    return eval_expr(ctx, s, env).v


__all__ = ["ALL", "eval_expr", "matrix_rows", "EXAMPLE1", "EXAMPLE2", "EXAMPLE3", "TABLE1", "TABLE2",
           "TABLE3", "TABLE4", "GF4_TECC", "GF5_TECC"]
