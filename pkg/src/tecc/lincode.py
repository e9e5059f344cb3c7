"""Exact linear algebra and code parameters over GF(q)."""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

from .errors import BadShape, BudgetExceeded, ValidationError
from .gf import FieldCtx, Fq, format_elem, parse_elem

DEFAULT_BUDGET = 10 ** 6


def default_budget() -> int:
    env = os.environ.get("TECC_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


class MatrixFq:
    """Dense row-major matrix of encoded field elements."""

    __slots__ = ("ctx", "rows", "ncols")

    def __init__(self, ctx: FieldCtx, rows: Iterable[Sequence], ncols: int | None = None):
        self.ctx = ctx
        self.rows = tuple(tuple(ctx.coerce(a) if not isinstance(a, int) else a for a in r) for r in rows)
        if ncols is None:
            ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != ncols for r in self.rows):
            raise ValidationError("ragged matrix")
        self.ncols = ncols

    @classmethod
    def from_elems(cls, ctx: FieldCtx, rows) -> "MatrixFq":
        """Rows of Fq, Python ints (taken mod p) or element strings."""
        return cls(ctx, [[ctx.coerce(a) for a in r] for r in rows])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return Fq(self.ctx, self.rows[i][j])

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def transpose(self) -> "MatrixFq":
        return MatrixFq(self.ctx, list(zip(*self.rows)) if self.rows else [], self.nrows)

    T = property(transpose)

    def __matmul__(self, o: "MatrixFq") -> "MatrixFq":
        if self.ncols != o.nrows:
            raise BadShape("dimension mismatch")
        add, mul = self.ctx.add_t, self.ctx.mul_t
        cols = list(zip(*o.rows))
        out = []
        for r in self.rows:
            row = []
            for col in cols:
                s = 0
                for a, b in zip(r, col):
                    if a and b:
                        s = add[s][mul[a][b]]
                row.append(s)
            out.append(row)
        return MatrixFq(self.ctx, out, o.ncols)

    def scale_columns(self, v: Sequence[int]) -> "MatrixFq":
        mul = self.ctx.mul_t
        return MatrixFq(self.ctx, [[mul[a][s] for a, s in zip(r, v)] for r in self.rows], self.ncols)

    def scale_rows(self, v: Sequence[int]) -> "MatrixFq":
        mul = self.ctx.mul_t
        return MatrixFq(self.ctx, [[mul[s][a] for a in r] for r, s in zip(self.rows, v)], self.ncols)

    def select_columns(self, cols: Sequence[int]) -> "MatrixFq":
        return MatrixFq(self.ctx, [[r[j] for j in cols] for r in self.rows], len(cols))

    def stack(self, o: "MatrixFq") -> "MatrixFq":
        return MatrixFq(self.ctx, self.rows + o.rows, self.ncols)

    def is_zero(self) -> bool:
        return all(a == 0 for r in self.rows for a in r)

    def __eq__(self, o) -> bool:
        return isinstance(o, MatrixFq) and self.ctx == o.ctx and self.rows == o.rows and self.ncols == o.ncols

    def __hash__(self):
        return hash(self.rows)

    def to_text(self, style: str = "vec") -> str:
        return format_matrix(self, style)

    def to_json(self, style: str = "vec") -> list[list[str]]:
        return [[format_elem(self.ctx, a, style) for a in r] for r in self.rows]

    def __repr__(self) -> str:
        return f"MatrixFq({self.nrows}x{self.ncols} over GF({self.ctx.q}))\n{format_matrix(self, 'poly')}"


def format_matrix(M: MatrixFq, style: str = "vec") -> str:
    return "\n".join(" ".join(format_elem(M.ctx, a, style) for a in r) for r in M.rows)


def parse_matrix(ctx: FieldCtx, text: str) -> MatrixFq:
    rows = [ln.split() for ln in text.strip().splitlines() if ln.strip()]
    return MatrixFq(ctx, [[parse_elem(ctx, t).v for t in r] for r in rows])


# -- elimination -------------------------------------------------------------------

def rref(M: MatrixFq) -> tuple[MatrixFq, list[int]]:
    """Reduced row echelon form (zero rows dropped) and pivot columns."""
    ctx = M.ctx
    add, mul, neg, inv = ctx.add_t, ctx.mul_t, ctx.neg_t, ctx.inv_t
    A = [list(r) for r in M.rows]
    pivots: list[int] = []
    r = 0
    for c in range(M.ncols):
        p = next((i for i in range(r, len(A)) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        s = inv[A[r][c]]
        A[r] = [mul[s][a] for a in A[r]]
        pr = A[r]
        for i in range(len(A)):
            if i != r and A[i][c]:
                f = neg[A[i][c]]
                mf = mul[f]
                A[i] = [add[a][mf[b]] for a, b in zip(A[i], pr)]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return MatrixFq(ctx, A[:r], M.ncols), pivots


def rank(M: MatrixFq) -> int:
    return len(rref(M)[1])


def nullspace(M: MatrixFq) -> MatrixFq:
    """Basis (in RREF) of {v : M v^T = 0}."""
    ctx = M.ctx
    R, piv = rref(M)
    n = M.ncols
    free = [j for j in range(n) if j not in piv]
    basis = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for i, p in enumerate(piv):
            v[p] = ctx.neg(R.rows[i][f])
        basis.append(v)
    if not basis:
        return MatrixFq(ctx, [], n)
    return rref(MatrixFq(ctx, basis, n))[0]


def row_space_equal(A: MatrixFq, B: MatrixFq) -> bool:
    return rref(A)[0].rows == rref(B)[0].rows


def row_space_contains(A: MatrixFq, B: MatrixFq) -> bool:
    """True if every row of B lies in the row space of A."""
    return rank(A.stack(B)) == rank(A)


def dual(g: MatrixFq) -> MatrixFq:
    """Generator of the Euclidean dual code."""
    return nullspace(g)


# -- minimum distance ----------------------------------------------------------------

def _weight(v: Sequence[int]) -> int:
    return sum(1 for a in v if a)


def _enum_cost(q: int, k: int) -> int:
    return (q ** k - 1) // (q - 1)


def _min_distance_enum(G: MatrixFq) -> tuple[int, list[int]]:
    import numpy as np

    ctx = G.ctx
    q = ctx.q
    k, n = G.shape
    add_t, _, mul_t = ctx.np_tables()
    Gm = np.array(G.rows, dtype=np.int32)
    best, best_word = n + 1, None
    for lead in range(k):
        L = k - 1 - lead
        total = q ** L
        step = max(1, 1 << 16)
        for start in range(0, total, step):
            idx = np.arange(start, min(total, start + step), dtype=np.int64)
            words = np.broadcast_to(Gm[lead], (len(idx), n)).copy()
            rem = idx
            for i in range(k - 1, lead, -1):
                coef = (rem % q).astype(np.int32)
                rem = rem // q
                words = add_t[words, mul_t[coef[:, None], Gm[i][None, :]]]
            w = np.count_nonzero(words, axis=1)
            j = int(np.argmin(w))
            if w[j] < best:
                best, best_word = int(w[j]), [int(a) for a in words[j]]
    return best, best_word


def _min_distance_zero_sets(G: MatrixFq, budget: int) -> tuple[int, list[int]]:
    """d = n - max{|Z| : some column set Z has rank < k}; grows Z upward from k."""
    ctx = G.ctx
    k, n = G.shape
    best_z, witness = k - 1, None
    spent = 0
    for z in range(k, n):
        found = None
        for Z in itertools.combinations(range(n), z):
            spent += 1
            if spent > budget:
                raise BudgetExceeded(f"zero-set search exceeded budget {budget}")
            sub = G.select_columns(Z)
            ns = nullspace(sub.T)  # message m with m G_Z = 0
            if ns.nrows:
                found = ns.rows[0]
                break
        if found is None:
            break
        best_z = z
        word = [0] * n
        for i, m in enumerate(found):
            if m:
                for j in range(n):
                    word[j] = ctx.add(word[j], ctx.mul(m, G.rows[i][j]))
        witness = word
    if witness is None:
        # MDS: any k-1 zero positions give a codeword
        Z = tuple(range(k - 1))
        ns = nullspace(G.select_columns(Z).T)
        m = ns.rows[0]
        witness = [0] * n
        for i, mi in enumerate(m):
            for j in range(n):
                witness[j] = ctx.add(witness[j], ctx.mul(mi, G.rows[i][j]))
    return n - best_z, witness


def min_distance(g: MatrixFq, budget: int | None = None, with_word: bool = False):
    """Exact minimum Hamming distance of the row space of ``g``.

    Uses codeword enumeration (one word per scalar class) or a zero-set search
    over column subsets, whichever is cheaper; raises BudgetExceeded when
    neither fits the budget.
    """
    budget = default_budget() if budget is None else budget
    G = rref(g)[0]
    k, n = G.shape
    if k == 0:
        raise ValidationError("zero code has no minimum distance")
    enum = _enum_cost(G.ctx.q, k)
    zs = sum(comb(n, z) for z in range(k, n))
    if enum <= budget and enum <= 20 * zs:
        d, w = _min_distance_enum(G)
    else:
        try:
            d, w = _min_distance_zero_sets(G, budget)
        except BudgetExceeded:
            if enum > budget:
                raise
            d, w = _min_distance_enum(G)
    return (d, w) if with_word else d


# -- Schur products ----------------------------------------------------------------

def schur_square(g: MatrixFq) -> MatrixFq:
    mul = g.ctx.mul_t
    R = rref(g)[0].rows
    prods = [[mul[a][b] for a, b in zip(R[i], R[j])] for i in range(len(R)) for j in range(i, len(R))]
    return MatrixFq(g.ctx, prods, g.ncols)


def schur_square_dim(g: MatrixFq) -> int:
    """dim of the span of the k(k+1)/2 pairwise row products."""
    return rank(schur_square(g)) if g.nrows else 0


def rs_nonequiv_check(g: MatrixFq) -> str:
    k, n = rank(g), g.ncols
    if 2 * k > n:
        raise BadShape(f"criterion needs k <= n/2 (k={k}, n={n})")
    return "NON_RS" if schur_square_dim(g) >= 2 * k else "INCONCLUSIVE"


# -- classification ------------------------------------------------------------------

@dataclass
class CodeSummary:
    n: int
    k: int
    d: int
    defect: int
    cls: str
    self_dual: bool
    self_orthogonal: bool
    dual_d: int | None = None
    dual_defect: int | None = None

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "d": self.d, "defect": self.defect, "class": self.cls,
                "self_dual": self.self_dual, "self_orthogonal": self.self_orthogonal,
                "dual_d": self.dual_d, "dual_defect": self.dual_defect}


def is_self_orthogonal(g: MatrixFq) -> bool:
    return (g @ g.T).is_zero()


def is_self_dual(g: MatrixFq) -> bool:
    """n = 2k and the row space equals its dual."""
    k = rank(g)
    return g.ncols == 2 * k and row_space_equal(g, dual(g))


def classify(g: MatrixFq, budget: int | None = None) -> CodeSummary:
    G = rref(g)[0]
    k, n = G.shape
    d = min_distance(G, budget)
    s = n - k + 1 - d
    dd = ds = None
    if 0 < k < n:
        H = dual(G)
        dd = min_distance(H, budget)
        ds = n - (n - k) + 1 - dd
    if s == 0:
        cls = "MDS"
    elif s == 1:
        cls = "NMDS" if ds == 1 else "AMDS"
    else:
        cls = "other"
    return CodeSummary(n, k, d, s, cls, is_self_dual(G), is_self_orthogonal(G), dd, ds)
