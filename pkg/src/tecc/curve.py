"""Elliptic curves in the three normal forms used for the codes.

* ``type1``: ``y^2 = f(x)`` over odd characteristic, ``f`` a square-free cubic.
* ``type2``: ``y^2 + y = f(x)`` over characteristic 2, ``f`` a cubic.
* ``type3``: ``y^2 + y = x + 1/(a*x + b)`` over characteristic 2, ``a != 0``.

Internally every curve is carried in the generalized Weierstrass shape
``Y^2 + (a1*x + a3)*Y = c(x)`` and the group law runs there. Types 1 and 2 use
``Y = y``. Type 3 uses ``Y = (a*x + b)*y``, which turns the equation into
``Y^2 + (a*x + b)*Y = a^2*x^3 + (b^2 + a)*x + b``. The place above ``a*x + b = 0``
is rational but has ``y = oo``; it is represented by an :class:`AffinePoint`
with ``y=None`` and maps to ``(b/a, 0)`` on the Weierstrass side.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

from .errors import BadCurve, CapExceeded, Insufficient, OffCurve, ValidationError
from .gf import FieldCtx, Fq, PolyFq, all_elements, field_from_json, format_elem, parse_elem

KINDS = ("type1", "type2", "type3")
DEFAULT_GROUP_CAP = 2 ** 16
DEFAULT_WITNESS_CAP = 10 ** 4


@dataclass(frozen=True)
class AffinePoint:
    """A rational point. ``x is None`` marks O; ``y is None`` marks the type3 pole point."""

    x: Fq | None
    y: Fq | None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    @property
    def is_pole(self) -> bool:
        return self.x is not None and self.y is None

    def key(self) -> tuple[int, int]:
        if self.x is None:
            return (-1, -1)
        return (self.x.v, -1 if self.y is None else self.y.v)

    def __str__(self) -> str:
        return format_point(self)


def format_point(P: AffinePoint, style: str = "poly") -> str:
    if P.is_infinity:
        return "O"
    ctx = P.x.ctx
    ys = "oo" if P.y is None else format_elem(ctx, P.y.v, style)
    return f"({format_elem(ctx, P.x.v, style)},{ys})"


def parse_point(ctx: FieldCtx, text) -> AffinePoint:
    if isinstance(text, AffinePoint):
        return text
    if isinstance(text, (list, tuple)):
        xs, ys = text
        return AffinePoint(ctx(xs), None if ys in (None, "oo") else ctx(ys))
    s = str(text).strip()
    if s == "O":
        return O
    if not (s.startswith("(") and s.endswith(")")):
        raise ValidationError(f"bad point {text!r}")
    inner = s[1:-1]
    depth, cut = 0, None
    for i, ch in enumerate(inner):
        depth += ch == "["
        depth -= ch == "]"
        if ch == "," and depth == 0:
            cut = i
            break
    if cut is None:
        raise ValidationError(f"bad point {text!r}")
    xs, ys = inner[:cut], inner[cut + 1:]
    return AffinePoint(parse_elem(ctx, xs), None if ys.strip() == "oo" else parse_elem(ctx, ys))


O = AffinePoint(None, None)


@dataclass(frozen=True, eq=False)
class CurveSpec:
    kind: str
    ctx: FieldCtx
    f: tuple[int, ...] = ()
    a: int = 0
    b: int = 0
    # Weierstrass data, derived
    a1: int = field(default=0, init=False)
    a3: int = field(default=0, init=False)
    cubic: PolyFq = field(default=None, init=False)

    def __post_init__(self):
        ctx = self.ctx
        if self.kind not in KINDS:
            raise BadCurve(f"unknown curve kind {self.kind!r}")
        if self.kind == "type1":
            if ctx.p == 2:
                raise BadCurve("type1 needs odd characteristic")
            f = PolyFq(ctx, self.f)
            if f.deg != 3:
                raise BadCurve("type1 needs a cubic f")
            if f.gcd(f.derivative()).deg != 0:
                raise BadCurve("type1 needs square-free f")
            a1, a3, cubic = 0, 0, f
        elif self.kind == "type2":
            if ctx.p != 2:
                raise BadCurve("type2 needs characteristic 2")
            f = PolyFq(ctx, self.f)
            if f.deg != 3:
                raise BadCurve("type2 needs a cubic f")
            a1, a3, cubic = 0, 1, f
        else:
            if ctx.p != 2:
                raise BadCurve("type3 needs characteristic 2")
            if self.a == 0:
                raise BadCurve("type3 needs a != 0")
            a, b = self.a, self.b
            # (ax+b)^2 (y^2+y) = (ax+b)^2 x + (ax+b)
            cubic = PolyFq(ctx, [b, ctx.add(ctx.mul(b, b), a), 0, ctx.mul(a, a)])
            a1, a3 = a, b
        object.__setattr__(self, "a1", a1)
        object.__setattr__(self, "a3", a3)
        object.__setattr__(self, "cubic", cubic)

    # -- conveniences --------------------------------------------------------

    @property
    def fpoly(self) -> PolyFq:
        """``f`` for types 1/2; for type3 the linear form ``a*x + b``."""
        if self.kind == "type3":
            return PolyFq(self.ctx, [self.b, self.a])
        return PolyFq(self.ctx, self.f)

    def lin(self, x: int) -> int:
        """``a*x + b`` (type3 only)."""
        return self.ctx.add(self.ctx.mul(self.a, x), self.b)

    def ramified_x(self, x: int) -> bool:
        """True when the place x = const is ramified (so never splits)."""
        if self.kind == "type1":
            return self.cubic(x) == 0
        if self.kind == "type3":
            return self.lin(x) == 0
        return False

    def to_json(self) -> dict:
        d = {"kind": self.kind, "field": self.ctx.to_json()}
        if self.kind == "type3":
            d["a"] = format_elem(self.ctx, self.a)
            d["b"] = format_elem(self.ctx, self.b)
        else:
            d["f"] = [format_elem(self.ctx, c) for c in self.f]
        return d

    def __eq__(self, o) -> bool:
        return (isinstance(o, CurveSpec) and self.kind == o.kind and self.ctx == o.ctx
                and tuple(PolyFq(self.ctx, self.f).c) == tuple(PolyFq(o.ctx, o.f).c)
                and (self.a, self.b) == (o.a, o.b))

    def __hash__(self) -> int:
        return hash((self.kind, self.ctx, PolyFq(self.ctx, self.f).c, self.a, self.b))

    def __str__(self) -> str:
        ctx = self.ctx
        if self.kind == "type3":
            a, b = format_elem(ctx, self.a, "poly"), format_elem(ctx, self.b, "poly")
            return f"y^2 + y = x + 1/(({a})*x + {b})"
        lhs = "y^2" if self.kind == "type1" else "y^2 + y"
        return f"{lhs} = {PolyFq(ctx, self.f)}"


def curve_new(kind: str, ctx: FieldCtx, f: Sequence = (), a=0, b=0) -> CurveSpec:
    """Build a curve; coefficients may be Fq, ints (mod p) or element strings."""
    fc = tuple(ctx.coerce(c) for c in f)
    return CurveSpec(kind, ctx, fc, ctx.coerce(a), ctx.coerce(b))


def curve_from_json(obj: dict, ctx: FieldCtx | None = None) -> CurveSpec:
    if ctx is None:
        ctx = field_from_json(obj["field"])
    kind = obj["kind"]
    if kind == "type3":
        return curve_new(kind, ctx, (), obj["a"], obj.get("b", 0))
    return curve_new(kind, ctx, obj["f"])


# -- Weierstrass side ---------------------------------------------------------

def _to_w(c: CurveSpec, P: AffinePoint):
    if P.is_infinity:
        return None
    x = P.x.v
    if c.kind == "type3":
        if P.y is None:
            return (x, 0)
        return (x, c.ctx.mul(c.lin(x), P.y.v))
    if P.y is None:
        raise OffCurve(f"{P} is not a point of a {c.kind} curve")
    return (x, P.y.v)


def _from_w(c: CurveSpec, W) -> AffinePoint:
    if W is None:
        return O
    ctx = c.ctx
    x, Y = W
    if c.kind == "type3":
        l = c.lin(x)
        if l == 0:
            return AffinePoint(Fq(ctx, x), None)
        return AffinePoint(Fq(ctx, x), Fq(ctx, ctx.div(Y, l)))
    return AffinePoint(Fq(ctx, x), Fq(ctx, Y))


def _w_on_curve(c: CurveSpec, x: int, Y: int) -> bool:
    ctx = c.ctx
    lhs = ctx.add(ctx.mul(Y, Y), ctx.mul(ctx.add(ctx.mul(c.a1, x), c.a3), Y))
    return lhs == c.cubic(x)


def _w_neg(c: CurveSpec, W):
    if W is None:
        return None
    ctx = c.ctx
    x, Y = W
    return (x, ctx.sub(ctx.neg(Y), ctx.add(ctx.mul(c.a1, x), c.a3)))


def _w_add(c: CurveSpec, P, Q):
    if P is None:
        return Q
    if Q is None:
        return P
    ctx = c.ctx
    add, sub, mul = ctx.add, ctx.sub, ctx.mul
    x1, Y1 = P
    x2, Y2 = Q
    if x1 == x2:
        if Q == _w_neg(c, P):
            return None
        den = add(add(Y1, Y1), add(mul(c.a1, x1), c.a3))
        num = sub(c.cubic.derivative()(x1), mul(c.a1, Y1))
        lam = ctx.div(num, den)
    else:
        lam = ctx.div(sub(Y2, Y1), sub(x2, x1))
    nu = sub(Y1, mul(lam, x1))
    c3, c2 = c.cubic.coef(3), c.cubic.coef(2)
    s = ctx.div(sub(add(mul(lam, lam), mul(c.a1, lam)), c2), c3)
    x3 = sub(sub(s, x1), x2)
    return _w_neg(c, (x3, add(mul(lam, x3), nu)))


# -- public point operations ---------------------------------------------------

def is_on_curve(c: CurveSpec, P: AffinePoint) -> bool:
    if P.is_infinity:
        return True
    if P.x.ctx != c.ctx or (P.y is not None and P.y.ctx != c.ctx):
        return False
    ctx = c.ctx
    x = P.x.v
    if c.kind == "type3":
        l = c.lin(x)
        if P.y is None:
            return l == 0
        if l == 0:
            return False
        y = P.y.v
        # (ax+b)(y^2+y) = x(ax+b) + 1
        return ctx.mul(l, ctx.add(ctx.mul(y, y), y)) == ctx.add(ctx.mul(x, l), 1)
    if P.y is None:
        return False
    return _w_on_curve(c, x, P.y.v)


def _check(c: CurveSpec, P: AffinePoint) -> None:
    if not is_on_curve(c, P):
        raise OffCurve(f"{P} is not on {c}")


def add(c: CurveSpec, P: AffinePoint, Q: AffinePoint) -> AffinePoint:
    _check(c, P)
    _check(c, Q)
    return _from_w(c, _w_add(c, _to_w(c, P), _to_w(c, Q)))


def neg(c: CurveSpec, P: AffinePoint) -> AffinePoint:
    _check(c, P)
    return _from_w(c, _w_neg(c, _to_w(c, P)))


def mul(c: CurveSpec, n: int, P: AffinePoint) -> AffinePoint:
    _check(c, P)
    if n < 0:
        n, P = -n, neg(c, P)
    acc, base = None, _to_w(c, P)
    while n:
        if n & 1:
            acc = _w_add(c, acc, base)
        base = _w_add(c, base, base)
        n >>= 1
    return _from_w(c, acc)


def enumerate_points(c: CurveSpec) -> list[AffinePoint]:
    """O followed by the affine points, x ascending then y ascending."""
    ctx = c.ctx
    els = all_elements(ctx)
    pts = [O]
    for x in els:
        if c.kind == "type3" and c.lin(x.v) == 0:
            pts.append(AffinePoint(x, None))
            continue
        for y in els:
            P = AffinePoint(x, y)
            if is_on_curve(c, P):
                pts.append(P)
    return pts


def point_count(c: CurveSpec) -> int:
    return len(enumerate_points(c))


# -- group structure -----------------------------------------------------------

@dataclass
class GroupStructure:
    n1: int
    n2: int
    g1: AffinePoint
    g2: AffinePoint
    dlog: dict[AffinePoint, tuple[int, int]]

    @property
    def order(self) -> int:
        return self.n1 * self.n2

    def point(self, i: int, j: int) -> AffinePoint:
        inv = {v: k for k, v in self.dlog.items()}
        return inv[(i % self.n1, j % self.n2)]


def point_order(c: CurveSpec, P: AffinePoint) -> int:
    W0 = _to_w(c, P)
    W, n = W0, 1
    while W is not None:
        W = _w_add(c, W, W0)
        n += 1
    return n


def group_structure(c: CurveSpec, generators: Sequence[AffinePoint] | None = None,
                    cap: int = DEFAULT_GROUP_CAP) -> GroupStructure:
    """Invariant factors (n1 | n2), generators and the full discrete-log table.

    ``generators=(g1, g2)`` pins the basis (validated); otherwise g2 is the first
    point of maximal order and g1 the first point spanning a complement.
    """
    pts = enumerate_points(c)
    N = len(pts)
    if N > cap:
        raise CapExceeded(f"{N} points exceed the group cap {cap}")
    orders = {P: point_order(c, P) for P in pts}
    n2 = max(orders.values())
    n1 = N // n2

    def span(g1, g2):
        table = {}
        for i in range(n1):
            base = mul(c, i, g1)
            for j in range(n2):
                table[add(c, base, mul(c, j, g2))] = (i, j)
        return table

    if generators is not None:
        g1, g2 = generators
        if n1 == 1 and len(generators) == 2 and g1 != O:
            raise ValidationError("cyclic group: g1 must be O")
        if orders.get(g2) != n2 or (n1 > 1 and orders.get(g1) != n1):
            raise ValidationError("generator orders do not match the invariant factors")
        table = span(g1, g2)
        if len(table) != N:
            raise ValidationError("generators do not span the group")
        return GroupStructure(n1, n2, g1, g2, table)

    g2 = next(P for P in pts if orders[P] == n2)
    if n1 == 1:
        return GroupStructure(1, n2, O, g2, span(O, g2))
    cyc = {mul(c, j, g2) for j in range(n2)}
    for P in pts:
        if orders[P] != n1:
            continue
        if all(mul(c, i, P) not in cyc for i in range(1, n1)):
            return GroupStructure(n1, n2, P, g2, span(P, g2))
    raise AssertionError("no complement found")  # pragma: no cover


# -- evaluation sets -------------------------------------------------------------

@dataclass(frozen=True)
class EvalSet:
    points: tuple[AffinePoint, ...]
    T: tuple[Fq, ...]
    even_support: bool
    split_complete: bool

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]


def make_evalset(c: CurveSpec, points: Iterable[AffinePoint]) -> EvalSet:
    """Wrap an explicit ordered point list, checking it and computing flags."""
    pts = tuple(points)
    if len(set(pts)) != len(pts):
        raise ValidationError("evaluation points must be distinct")
    for P in pts:
        if P.is_infinity or P.is_pole:
            raise ValidationError(f"{P} cannot be an evaluation point")
        _check(c, P)
    T: list[Fq] = []
    for P in pts:
        if P.x not in T:
            T.append(P.x)
    cnt = {x: sum(1 for P in pts if P.x == x) for x in T}
    split = all(cnt[x] == 2 and not c.ramified_x(x.v) for x in T)
    return EvalSet(pts, tuple(T), len(pts) % 2 == 0, split)


def split_x_values(c: CurveSpec) -> list[Fq]:
    ctx = c.ctx
    out = []
    pts = enumerate_points(c)
    for x in all_elements(ctx):
        above = [P for P in pts if not P.is_infinity and P.x == x and not P.is_pole]
        if len(above) == 2 and not c.ramified_x(x.v):
            out.append(x)
    return out


def select_eval_set(c: CurveSpec, want_n: int, policy: str = "field") -> EvalSet:
    """Pick ``want_n`` points made of complete split fibres.

    ``policy="field"`` takes x-values in field order; ``"units-first"`` moves
    x = 0 to the end. Within a fibre the smaller y comes first.
    """
    if want_n % 2 or want_n <= 0:
        raise Insufficient(f"want_n must be a positive even number, got {want_n}")
    xs = split_x_values(c)
    if policy == "units-first":
        xs = [x for x in xs if x.v != 0] + [x for x in xs if x.v == 0]
    elif policy != "field":
        raise ValidationError(f"unknown policy {policy!r}")
    if 2 * len(xs) < want_n:
        raise Insufficient(f"only {2 * len(xs)} split points available, wanted {want_n}")
    pts = []
    allp = enumerate_points(c)
    for x in xs[: want_n // 2]:
        pts.extend(sorted((P for P in allp if not P.is_infinity and P.x == x), key=AffinePoint.key))
    return make_evalset(c, pts)


# -- subset sums -----------------------------------------------------------------

@dataclass
class SubsetSumResult:
    count: int
    witnesses: list[tuple[AffinePoint, ...]] | None


def subset_sum_count(c: CurveSpec, k: int, b: AffinePoint, D: Sequence[AffinePoint] | EvalSet,
                     witness_cap: int = DEFAULT_WITNESS_CAP, cap: int = 10 ** 8) -> SubsetSumResult:
    """N(k, b, D): number of k-subsets of D whose group sum is b.

    Counting is a dynamic program over group elements (cost n*k*#E); witnesses
    are listed by a pruned depth-first search when the count is at most
    ``witness_cap``. Witnesses keep D's order inside each subset and are sorted
    lexicographically by position.
    """
    pts = list(D)
    n = len(pts)
    if not 0 <= k <= n:
        raise ValidationError(f"k={k} out of range for |D|={n}")
    _check(c, b)
    allp = enumerate_points(c)
    N = len(allp)
    if n * (k + 1) * N > cap:
        raise CapExceeded("subset-sum table exceeds cap")
    idx = {P: i for i, P in enumerate(allp)}
    Ws = [_to_w(c, P) for P in allp]
    addrow = {}

    def add_idx(s: int, t: int) -> int:
        key = (s, t)
        r = addrow.get(key)
        if r is None:
            r = idx[_from_w(c, _w_add(c, Ws[s], Ws[t]))]
            addrow[key] = r
        return r

    for P in pts:
        _check(c, P)
    d_idx = [idx[P] for P in pts]
    target = idx[b]
    # suffix[i][j][s]: number of j-subsets of pts[i:] summing to s
    suffix = [[[0] * N for _ in range(k + 1)] for _ in range(n + 1)]
    suffix[n][0][idx[O]] = 1
    for i in range(n - 1, -1, -1):
        cur, nxt = suffix[i], suffix[i + 1]
        for j in range(k + 1):
            cur[j] = list(nxt[j])
        for j in range(1, k + 1):
            row = nxt[j - 1]
            for s in range(N):
                if row[s]:
                    t = add_idx(s, d_idx[i])
                    cur[j][t] += row[s]
    count = suffix[0][k][target]
    if count > witness_cap:
        return SubsetSumResult(count, None)
    wit: list[tuple[AffinePoint, ...]] = []
    neg_idx = [idx[_from_w(c, _w_neg(c, W))] for W in Ws]

    def dfs(i: int, need: int, rem: int, chosen: list[int]):
        # rem: remaining sum still required
        if need == 0:
            if rem == idx[O]:
                wit.append(tuple(pts[j] for j in chosen))
            return
        for j in range(i, n - need + 1):
            nrem = add_idx(rem, neg_idx[d_idx[j]])
            if suffix[j + 1][need - 1][nrem]:
                chosen.append(j)
                dfs(j + 1, need - 1, nrem, chosen)
                chosen.pop()

    dfs(0, k, target, [])
    return SubsetSumResult(count, wit)


def subset_sum_bruteforce(c: CurveSpec, k: int, b: AffinePoint, D: Sequence[AffinePoint]) -> int:
    """Plain enumeration with the group law; a reference for small inputs."""
    cnt = 0
    for S in itertools.combinations(list(D), k):
        acc = O
        for P in S:
            acc = add(c, acc, P)
        cnt += acc == b
    return cnt


def hasse_ok(c: CurveSpec) -> bool:
    N = point_count(c)
    q = c.ctx.q
    return (N - (q + 1)) ** 2 <= 4 * q


def n_subsets(n: int, k: int) -> int:
    return comb(n, k)
