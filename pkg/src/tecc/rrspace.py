"""Functions on the curve and the Riemann-Roch bases built from them.

A :class:`CurveFunc` is ``(u(x) + v(x)*Y) / d(x)`` where ``Y`` is the Weierstrass
variable of :mod:`tecc.curve` (``Y = y`` for types 1 and 2, ``Y = (a*x+b)*y`` for
type 3). Products are reduced with ``Y^2 = c(x) - (a1*x + a3)*Y`` so the
numerator always stays linear in ``Y``. The denominator is a polynomial in x;
it carries ``1/y = Y/f(x)`` for type 1 and ``1/(a*x+b)`` for type 3.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Sequence

from .curve import CurveSpec, EvalSet, _to_w
from .errors import BadK, BadRange, BadTwist, PoleAtPoint
from .gf import Fq, PolyFq, format_elem, format_poly

NEG_INF = float("-inf")


class CurveFunc:
    __slots__ = ("curve", "u", "v", "den")

    def __init__(self, curve: CurveSpec, u: PolyFq | None = None, v: PolyFq | None = None,
                 den: PolyFq | None = None):
        ctx = curve.ctx
        self.curve = curve
        self.u = u if u is not None else PolyFq(ctx)
        self.v = v if v is not None else PolyFq(ctx)
        self.den = den if den is not None else PolyFq(ctx, [1])

    # -- constructors ------------------------------------------------------

    @classmethod
    def xpow(cls, c: CurveSpec, i: int, coef: int = 1) -> "CurveFunc":
        return cls(c, PolyFq.monomial(c.ctx, i, coef))

    @classmethod
    def xpow_Y(cls, c: CurveSpec, j: int, coef: int = 1) -> "CurveFunc":
        """``x^j * Y``; for type 3 this is ``x^j (a x + b) y``."""
        return cls(c, None, PolyFq.monomial(c.ctx, j, coef))

    @classmethod
    def const(cls, c: CurveSpec, a: int) -> "CurveFunc":
        return cls(c, PolyFq(c.ctx, [a]))

    # -- arithmetic ----------------------------------------------------------

    def _align(self, o: "CurveFunc"):
        if self.den == o.den:
            return self.u, self.v, o.u, o.v, self.den
        return (self.u * o.den, self.v * o.den, o.u * self.den, o.v * self.den, self.den * o.den)

    def __add__(self, o: "CurveFunc") -> "CurveFunc":
        u1, v1, u2, v2, d = self._align(o)
        return CurveFunc(self.curve, u1 + u2, v1 + v2, d)

    def __sub__(self, o: "CurveFunc") -> "CurveFunc":
        u1, v1, u2, v2, d = self._align(o)
        return CurveFunc(self.curve, u1 - u2, v1 - v2, d)

    def __mul__(self, o) -> "CurveFunc":
        c = self.curve
        if isinstance(o, (int, Fq)):
            s = c.ctx.coerce(o) if isinstance(o, Fq) else o
            return CurveFunc(c, self.u.scale(s), self.v.scale(s), self.den)
        ctx = c.ctx
        lin = PolyFq(ctx, [c.a3, c.a1])
        vv = self.v * o.v
        u = self.u * o.u + vv * c.cubic
        v = self.u * o.v + self.v * o.u - vv * lin
        return CurveFunc(c, u, v, self.den * o.den)

    def scale(self, s: int) -> "CurveFunc":
        return self * s

    def is_zero(self) -> bool:
        return self.u.is_zero() and self.v.is_zero()

    def pole_order(self) -> float:
        """Order of the pole at O (negative for a zero); -inf for the zero function."""
        if self.is_zero():
            return NEG_INF
        nu = 2 * self.u.deg if not self.u.is_zero() else NEG_INF
        nv = 2 * self.v.deg + 3 if not self.v.is_zero() else NEG_INF
        return max(nu, nv) - 2 * self.den.deg

    def __call__(self, P) -> int:
        """Value at an affine point, as an encoded field element."""
        c = self.curve
        x, Y = _to_w(c, P)
        d = self.den(x)
        if d == 0:
            raise PoleAtPoint(f"denominator vanishes at {P}")
        ctx = c.ctx
        num = ctx.add(self.u(x), ctx.mul(self.v(x), Y))
        return ctx.div(num, d)

    def __eq__(self, o) -> bool:
        if not isinstance(o, CurveFunc):
            return NotImplemented
        return (self - o).is_zero()

    def __hash__(self):
        return hash((self.u.c, self.v.c, self.den.c))

    def __repr__(self) -> str:
        return format_func(self)


def _ycofactor_text(c: CurveSpec) -> str:
    if c.kind != "type3":
        return "y"
    a = format_elem(c.ctx, c.a, "poly")
    b = format_elem(c.ctx, c.b, "poly")
    ax = "x" if a == "1" else f"{a}*x" if "+" not in a else f"({a})*x"
    return f"({ax}+{b})*y" if b != "0" else f"({ax})*y"


def _ypart(v: PolyFq, ytext: str) -> str:
    if v.is_zero():
        return ""
    pv = format_poly(v)
    if pv == "1":
        return ytext
    if " + " in pv:
        return f"({pv})*{ytext}"
    return f"{pv}*{ytext}"


def format_func(fn: CurveFunc) -> str:
    c = fn.curve
    ytext = _ycofactor_text(c)
    if fn.den.deg == 0:
        inv = c.ctx.inv(fn.den.c[0])
        u, v = fn.u.scale(inv), fn.v.scale(inv)
        parts = [p for p in (format_poly(u) if not u.is_zero() else "", _ypart(v, ytext)) if p]
        return " + ".join(parts) if parts else "0"
    if c.kind == "type1" and fn.den == c.cubic and fn.u.is_zero():
        pv = format_poly(fn.v)
        return f"{pv}/y" if " + " not in pv else f"({pv})/y"
    if c.kind == "type3" and fn.den == PolyFq(c.ctx, [c.b, c.a]):
        parts = []
        lin = ytext[1:ytext.rindex(")")]
        if not fn.u.is_zero():
            pu = format_poly(fn.u)
            parts.append(f"({pu})/({lin})" if " + " in pu else f"{pu}/({lin})")
        if not fn.v.is_zero():
            parts.append(_ypart(fn.v, "y"))
        return " + ".join(parts) if parts else "0"
    num = CurveFunc(c, fn.u, fn.v)
    return f"({format_func(num)})/({format_poly(fn.den)})"


@dataclass(frozen=True)
class FuncBasis:
    funcs: tuple[CurveFunc, ...]
    tag: str

    def __len__(self) -> int:
        return len(self.funcs)

    def __iter__(self):
        return iter(self.funcs)

    def __getitem__(self, i):
        return self.funcs[i]

    def pole_orders(self) -> list[float]:
        return [f.pole_order() for f in self.funcs]

    def distinct_poles(self) -> bool:
        po = self.pole_orders()
        return len(set(po)) == len(po)


def basis_LkO(c: CurveSpec, k: int) -> FuncBasis:
    """Basis of L(kO): x-powers ascending, then x^j*Y ascending."""
    if k < 1:
        raise BadK(f"k must be >= 1, got {k}")
    fs = [CurveFunc.xpow(c, i) for i in range(k // 2 + 1)]
    fs += [CurveFunc.xpow_Y(c, j) for j in range((k - 3) // 2 + 1)] if k >= 3 else []
    return FuncBasis(tuple(fs), f"{k}O")


def dual_divisor_tag(c: CurveSpec, n: int, k: int) -> str:
    if c.kind == "type1":
        return f"(y)+{n - k}O"
    if c.kind == "type2":
        return f"{n - k}O"
    return f"(ax+b)+{n - k}O"


def basis_dual_space(c: CurveSpec, n: int, k: int) -> FuncBasis:
    """Basis of L(D - kO + (dx/t)) in parity-check row order."""
    if not 1 <= k < n:
        raise BadRange(f"need 1 <= k < n, got k={k}, n={n}")
    r = n - k
    ia, jb = range(r // 2 + 1), range((r - 3) // 2 + 1) if r >= 3 else range(0)
    ctx = c.ctx
    if c.kind == "type1":
        f = c.cubic
        fs = [CurveFunc(c, None, PolyFq.monomial(ctx, i), f) for i in ia]
        fs += [CurveFunc.xpow(c, j) for j in jb]
    elif c.kind == "type2":
        fs = [CurveFunc.xpow(c, i) for i in ia] + [CurveFunc.xpow_Y(c, j) for j in jb]
    else:
        lin = PolyFq(ctx, [c.b, c.a])
        fs = [CurveFunc(c, PolyFq.monomial(ctx, i), None, lin) for i in ia]
        fs += [CurveFunc(c, None, PolyFq.monomial(ctx, j), lin) for j in jb]
    return FuncBasis(tuple(fs), dual_divisor_tag(c, n, k))


@dataclass(frozen=True)
class TwistSpec:
    """Single twist ``(ell, eta)`` or general twist ``(t, h, eta)`` vectors."""

    ell: int | None = None
    eta: int | tuple[int, ...] = 0
    t: tuple[int, ...] = ()
    h: tuple[int, ...] = ()

    @property
    def is_single(self) -> bool:
        return self.ell is not None

    def to_json(self, ctx) -> dict:
        if self.is_single:
            return {"ell": self.ell, "eta": format_elem(ctx, self.eta)}
        return {"t": list(self.t), "h": list(self.h), "eta": [format_elem(ctx, e) for e in self.eta]}


def single_twist(ell: int, eta) -> TwistSpec:
    return TwistSpec(ell=ell, eta=eta)


def ell_range(k: int) -> range:
    """Legal hook indices for a single twist."""
    return range((k - 3) // 2 + 1) if k % 2 else range(k // 2 + 1)


def ell_extreme(k: int) -> int:
    return (k - 3) // 2 if k % 2 else k // 2


def defining_set_single(c: CurveSpec, k: int, ell: int, eta: int) -> FuncBasis:
    """S_ell for a single twist with hook pole order k+1."""
    if k < 3:
        raise BadTwist("twisted codes need k >= 3")
    if eta == 0:
        raise BadTwist("eta must be nonzero")
    if ell not in ell_range(k):
        raise BadTwist(f"ell={ell} out of range for k={k}")
    X, XY = CurveFunc.xpow, CurveFunc.xpow_Y
    if k % 2:
        xs = [X(c, i) for i in range((k - 1) // 2 + 1)]
        ys = [XY(c, j) for j in range((k - 3) // 2 + 1)]
        ys[ell] = ys[ell] + X(c, (k + 1) // 2, eta)
    else:
        xs = [X(c, i) for i in range(k // 2 + 1)]
        ys = [XY(c, j) for j in range((k - 4) // 2 + 1)]
        xs[ell] = xs[ell] + XY(c, (k - 2) // 2, eta)
    return FuncBasis(tuple(xs + ys), f"S_{ell}({k}O)")


def defining_set_general(c: CurveSpec, k: int, n: int, t: Sequence[int], h: Sequence[int],
                         eta: Sequence[int]) -> FuncBasis:
    """Multi-twist defining set S(h, t, eta).

    For ``k + t_s`` odd the row ``x^{h_s}`` becomes ``x^{h_s} + eta_s x^{(k-3+t_s)/2} Y``;
    for ``k + t_s`` even the row ``x^{h_s} Y`` becomes ``x^{h_s} Y + eta_s x^{(k+t_s)/2}``.
    """
    t, h, eta = list(t), list(h), list(eta)
    if not (len(t) == len(h) == len(eta)):
        raise BadTwist("t, h, eta must have equal length")
    base = basis_LkO(c, k)
    if not t:
        return base
    if k < 3:
        raise BadTwist("twisted codes need k >= 3")
    if len(t) > min(k, n - k):
        raise BadTwist("too many twists")
    tmax = min(k - 1, n - k - 1)
    if len(set(t)) != len(t) or any(not 1 <= ts <= tmax for ts in t):
        raise BadTwist(f"t must be distinct in [1, {tmax}]")
    if any(e == 0 for e in eta):
        raise BadTwist("eta entries must be nonzero")
    odd_h = [hs for ts, hs in zip(t, h) if (k + ts) % 2]
    even_h = [hs for ts, hs in zip(t, h) if (k + ts) % 2 == 0]
    if len(set(odd_h)) != len(odd_h) or len(set(even_h)) != len(even_h):
        raise BadTwist("h must be distinct within each parity class")
    if set(odd_h) & set(even_h):
        warnings.warn("h values repeat across parity classes", stacklevel=2)
    X, XY = CurveFunc.xpow, CurveFunc.xpow_Y
    xs = [X(c, i) for i in range(k // 2 + 1)]
    ys = [XY(c, j) for j in range((k - 3) // 2 + 1)]
    for ts, hs, es in zip(t, h, eta):
        if (k + ts) % 2:
            if not 0 <= hs <= k // 2:
                raise BadTwist(f"h={hs} out of range")
            xs[hs] = xs[hs] + XY(c, (k - 3 + ts) // 2, es)
        else:
            if not 0 <= hs <= (k - 3) // 2:
                raise BadTwist(f"h={hs} out of range")
            ys[hs] = ys[hs] + X(c, (k + ts) // 2, es)
    return FuncBasis(tuple(xs + ys), f"S(h,t,eta)({k}O)")


def evaluate(fb: FuncBasis | Sequence[CurveFunc], D: EvalSet | Sequence) -> list[list[int]]:
    """Evaluation matrix: one row per function, one column per point (encoded entries)."""
    pts = list(D)
    return [[f(P) for P in pts] for f in fb]
