"""Twisted elliptic curve codes: generators, parity checks, duality, distance.

A :class:`CodeHandle` bundles a curve, an evaluation set, the dimension, an
optional twist and an optional column scaling ``v``. Parity checks come from
three independent routes (nullspace, the coefficient recursion, and the closed
forms at the extreme hook index); the nullspace route is the arbiter.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .curve import (O, CurveSpec, EvalSet, add, curve_from_json, make_evalset, parse_point,
                    select_eval_set, subset_sum_count)
from .differential import ResidueVector, residues
from .errors import (BadShape, BadTwist, CapExceeded, DegenerateRecursion, RamifiedPoint,
                     ValidationError)
from .gf import field_from_json, format_elem
from .lincode import (CodeSummary, MatrixFq, classify, is_self_dual, min_distance, nullspace, rank,
                      row_space_equal, rs_nonequiv_check, schur_square_dim)
from .rrspace import (CurveFunc, FuncBasis, TwistSpec, basis_dual_space, basis_LkO,
                      defining_set_general, defining_set_single, ell_extreme, ell_range, evaluate,
                      format_func)


# -- handles -------------------------------------------------------------------------

@dataclass(eq=False)
class CodeHandle:
    curve: CurveSpec
    D: EvalSet
    k: int
    twist: TwistSpec | None = None
    v: tuple[int, ...] | None = None
    _G: MatrixFq | None = field(default=None, repr=False)
    _gamma: ResidueVector | None = field(default=None, repr=False)

    def __post_init__(self):
        n = len(self.D)
        if not 1 <= self.k < n:
            raise BadShape(f"need 1 <= k < n, got k={self.k}, n={n}")
        if self.twist is not None and self.k < 3:
            raise BadTwist("twisted codes need k >= 3")
        if self.v is not None:
            self.v = tuple(_code(self.ctx, a) for a in self.v)
            if len(self.v) != n or any(a == 0 for a in self.v):
                raise ValidationError("v must have n nonzero entries")
        if self.twist is not None and self.twist.is_single:
            eta = _code(self.ctx, self.twist.eta)
            self.twist = TwistSpec(ell=self.twist.ell, eta=eta)

    @property
    def n(self) -> int:
        return len(self.D)

    @property
    def ctx(self):
        return self.curve.ctx

    @property
    def is_single(self) -> bool:
        return self.twist is not None and self.twist.is_single

    def defining_set(self) -> FuncBasis:
        if self.twist is None:
            return basis_LkO(self.curve, self.k)
        if self.twist.is_single:
            return defining_set_single(self.curve, self.k, self.twist.ell, self.twist.eta)
        return defining_set_general(self.curve, self.k, self.n, self.twist.t, self.twist.h,
                                    self.twist.eta)

    @property
    def G(self) -> MatrixFq:
        if self._G is None:
            self._G = _scaled(self.ctx, evaluate(self.defining_set(), self.D), self.v)
        return self._G

    @property
    def gamma(self) -> ResidueVector:
        if self._gamma is None:
            self._gamma = residues(self.D)
        return self._gamma

    def with_eta(self, eta) -> "CodeHandle":
        return CodeHandle(self.curve, self.D, self.k, TwistSpec(ell=self.twist.ell, eta=eta), self.v)

    def to_json(self) -> dict:
        ctx = self.ctx
        out = {"field": ctx.to_json(), "curve": self.curve.to_json(),
               "D": [_pt_json(P) for P in self.D], "k": self.k}
        if self.twist is not None:
            out["twist"] = self.twist.to_json(ctx)
        if self.v is not None:
            out["v"] = [format_elem(ctx, a) for a in self.v]
        return out


def _pt_json(P) -> list[str]:
    ctx = P.x.ctx
    return [format_elem(ctx, P.x.v), format_elem(ctx, P.y.v)]


def make_handle(curve: CurveSpec, D: EvalSet, k: int, ell: int | None = None, eta=None,
                v: Sequence | None = None, t=None, h=None) -> CodeHandle:
    twist = None
    if ell is not None:
        twist = TwistSpec(ell=ell, eta=eta)
    elif t is not None:
        ctx = curve.ctx
        twist = TwistSpec(t=tuple(t), h=tuple(h), eta=tuple(_code(ctx, e) for e in eta))
    return CodeHandle(curve, D, k, twist, None if v is None else tuple(v))


def handle_from_json(obj: dict) -> CodeHandle:
    """Inverse of :meth:`CodeHandle.to_json`.

    ``D`` may be a point list or ``{"n": n, "policy": ...}`` to select complete
    split fibres; ``field`` may be omitted when the curve carries it.
    """
    try:
        ctx = field_from_json(obj["field"]) if "field" in obj else field_from_json(obj["curve"]["field"])
        curve = curve_from_json(obj["curve"], ctx)
        spec = obj["D"]
        if isinstance(spec, dict):
            D = select_eval_set(curve, int(spec["n"]), spec.get("policy", "field"))
        else:
            D = make_evalset(curve, [parse_point(ctx, P) for P in spec])
        k = int(obj["k"])
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"bad handle descriptor: {exc}") from exc
    tw = obj.get("twist")
    v = obj.get("v")
    v = None if v is None else [ctx.coerce(a) for a in v]
    if tw is None:
        return make_handle(curve, D, k, v=v)
    if "ell" in tw:
        return make_handle(curve, D, k, ell=int(tw["ell"]), eta=ctx.coerce(tw["eta"]), v=v)
    return make_handle(curve, D, k, t=tw["t"], h=tw["h"], eta=[ctx.coerce(e) for e in tw["eta"]], v=v)


def _code(ctx, a) -> int:
    """Ints are taken as encodings here; Fq and strings go through coerce."""
    if isinstance(a, int) and not isinstance(a, bool):
        return ctx.elem(a).v
    return ctx.coerce(a)


def _scaled(ctx, rows, v) -> MatrixFq:
    M = MatrixFq(ctx, rows, None if rows else 0)
    return M.scale_columns(v) if v is not None else M


def _inv_v(ctx, v):
    return None if v is None else tuple(ctx.inv(a) for a in v)


# -- weights -------------------------------------------------------------------------

def dual_weights(curve: CurveSpec, D: EvalSet, gamma: ResidueVector | None = None) -> list[int]:
    """Per-point weight of the leading dual block: gamma/beta, gamma, or gamma/(a*alpha+b)."""
    ctx = curve.ctx
    gamma = gamma or residues(D)
    out = []
    for P, g in zip(D, gamma.gamma):
        if curve.kind == "type1":
            if P.y.v == 0:
                raise RamifiedPoint(f"{P} has y = 0")
            out.append(ctx.div(g, P.y.v))
        elif curve.kind == "type2":
            out.append(g)
        else:
            out.append(ctx.div(g, curve.lin(P.x.v)))
    return out


def _wsum(curve: CurveSpec, D: EvalSet, gamma: ResidueVector, e: int, ypow: int = 0,
          lin: int = 0) -> int:
    """sum_m gamma_m * alpha_m^e * beta_m^ypow * (a alpha_m + b)^lin (negative powers allowed)."""
    ctx = curve.ctx
    s = 0
    for P, g in zip(D, gamma.gamma):
        term = ctx.mul(g, _ipow(ctx, P.x.v, e))
        term = ctx.mul(term, _ipow(ctx, P.y.v, ypow))
        if lin:
            term = ctx.mul(term, _ipow(ctx, curve.lin(P.x.v), lin))
        s = ctx.add(s, term)
    return s


def _ipow(ctx, a: int, e: int) -> int:
    if e >= 0:
        return ctx.pow(a, e)
    return ctx.pow(ctx.inv(a), -e)


# -- generators and ECC parity checks --------------------------------------------------

def ecc_generator(curve: CurveSpec, D: EvalSet, k: int, v: Sequence[int] | None = None) -> MatrixFq:
    return _scaled(curve.ctx, evaluate(basis_LkO(curve, k), D), v)


def ecc_parity_check(curve: CurveSpec, D: EvalSet, k: int, v: Sequence[int] | None = None,
                     gamma: ResidueVector | None = None) -> MatrixFq:
    """gamma-scaled evaluation of the dual basis (columns divided by v when given)."""
    ctx = curve.ctx
    gamma = gamma or residues(D)
    if curve.kind == "type1":
        for P in D:
            if P.y.v == 0:
                raise RamifiedPoint(f"{P} has y = 0")
    rows = evaluate(basis_dual_space(curve, len(D), k), D)
    M = MatrixFq(ctx, rows, len(D)).scale_columns(gamma.gamma)
    return M.scale_columns(_inv_v(ctx, v)) if v is not None else M


def tecc_generator(h: CodeHandle) -> MatrixFq:
    return h.G


def tecc_parity_check_nullspace(h: CodeHandle) -> MatrixFq:
    return nullspace(h.G)


# -- parity checks through the coefficient recursion -----------------------------------

@dataclass
class RecursionStep:
    name: str
    value: int
    pivot: int | None


@dataclass
class RecursionTrace:
    steps: list[RecursionStep]
    func: CurveFunc | None = None
    degenerate: str | None = None

    def values(self) -> dict[str, int]:
        return {s.name: s.value for s in self.steps}

    @property
    def deleted(self) -> list[str]:
        """Parameters set to zero because no condition isolated them."""
        return [s.name for s in self.steps if s.pivot == 0]


def _require_single(h: CodeHandle) -> None:
    if not h.is_single:
        raise BadTwist("operation needs a single-twist handle")


def _ansatz(h: CodeHandle):
    """Unknown names, their monomials, the seed name and the solve order."""
    c, k, ell = h.curve, h.k, h.twist.ell
    n = h.n
    if n % 2:
        raise BadShape("the recursion needs even n")
    s = n // 2
    X, XY = CurveFunc.xpow, CurveFunc.xpow_Y
    terms: dict[str, CurveFunc] = {}
    if k % 2:
        R = (k - 3) // 2 - ell
        if s - ell - 3 - R < 0:
            raise BadShape("the recursion needs n >= k + 3")
        for i in range(R + 1):
            terms[f"a{i}"] = X(c, s - ell - 1 - i)
        for j in range(R + 1):
            terms[f"b{j}"] = XY(c, s - ell - 3 - j)
        order = [nm for r in range(1, R + 1) for nm in (f"b{r - 1}", f"a{r}")] + [f"b{R}"]
        return terms, "a0", order
    R = k // 2 - ell
    if s - ell - 1 - R < 0:
        raise BadShape("the recursion needs n >= k + 2")
    for j in range(R + 1):
        terms[f"h{j}"] = XY(c, s - ell - 1 - j)
    for i in range(R + 1):
        terms[f"e{i}"] = X(c, s - ell - i)
    order = [nm for r in range(1, R + 1) for nm in (f"e{r - 1}", f"h{r}")] + [f"e{R}"]
    return terms, "h0", order


def tecc_parity_check_recursive(h: CodeHandle) -> tuple[MatrixFq, RecursionTrace]:
    """Parity check whose first row is the weighted evaluation of the recursion's f.

    Unknown coefficients are fixed one at a time in a fixed order, each
    from an orthogonality condition in which it is the only undetermined
    coefficient. A vanishing pivot, an inconsistent seed or a rank drop raises
    DegenerateRecursion carrying the partial trace.
    """
    _require_single(h)
    ctx, c, D = h.ctx, h.curve, h.D
    gamma = h.gamma
    w = dual_weights(c, D, gamma)
    terms, seed, order = _ansatz(h)
    names = list(terms)
    cols = {nm: [ctx.mul(wi, terms[nm](P)) for wi, P in zip(w, D)] for nm in names}
    gens = [[g(P) for P in D] for g in h.defining_set()]
    coef = [{nm: _dot(ctx, cols[nm], g) for nm in names} for g in gens]

    known = {seed: 1}
    steps = [RecursionStep(seed, 1, None)]
    used: set[int] = set()
    pending = list(order)
    while pending:
        step = _isolate(coef, used, pending)
        if step is None:
            # no usable denominator: delete the next parameter; the final
            # consistency and rank checks decide whether that was harmless
            u = pending.pop(0)
            known[u] = 0
            steps.append(RecursionStep(u, 0, 0))
            continue
        nm, pick = step
        row = coef[pick]
        acc = 0
        for u, val in known.items():
            acc = ctx.add(acc, ctx.mul(row[u], val))
        val = ctx.neg(ctx.div(acc, row[nm]))
        known[nm] = val
        used.add(pick)
        pending.remove(nm)
        steps.append(RecursionStep(nm, val, row[nm]))
    for row in coef:
        acc = 0
        for u, val in known.items():
            acc = ctx.add(acc, ctx.mul(row[u], val))
        if acc:
            raise DegenerateRecursion("seeded solution violates an orthogonality condition", trace=steps)
    f = None
    for nm in names:
        t = terms[nm].scale(known[nm])
        f = t if f is None else f + t
    first = [ctx.mul(wi, f(P)) for wi, P in zip(w, D)]
    H = MatrixFq(ctx, [first], h.n).stack(ecc_parity_check(c, D, h.k + 1, gamma=gamma))
    if rank(H) != h.n - h.k:
        raise DegenerateRecursion("leading row lies in the lower dual block", trace=steps)
    if h.v is not None:
        H = H.scale_columns(_inv_v(ctx, h.v))
    return H, RecursionTrace(steps, f)


def _isolate(coef, used, pending):
    """First pending unknown that is the only undetermined one in some unused condition."""
    for nm in pending:
        for ei, row in enumerate(coef):
            if ei in used or row[nm] == 0:
                continue
            if all(row[u] == 0 for u in pending if u != nm):
                return nm, ei
    return None


def _dot(ctx, a, b) -> int:
    s = 0
    for x, y in zip(a, b):
        s = ctx.add(s, ctx.mul(x, y))
    return s


# -- closed forms at the extreme hook index -------------------------------------------

def closed_form_function(h: CodeHandle) -> CurveFunc:
    """The explicit leading dual function when ell is extreme (n = 2s even)."""
    _require_single(h)
    c, k, ell, eta = h.curve, h.k, h.twist.ell, h.twist.eta
    ctx = c.ctx
    if ell != ell_extreme(k):
        raise BadShape(f"closed form needs ell = {ell_extreme(k)}")
    if h.n % 2:
        raise BadShape("closed form needs even n")
    s = h.n // 2
    D, gm = h.D, h.gamma
    X, XY = CurveFunc.xpow, CurveFunc.xpow_Y
    S = lambda e, yp=0, ln=0: _wsum(c, D, gm, e, yp, ln)  # noqa: E731
    if c.kind == "type1":
        A = S(s - 1)
        if k % 2:
            B = S(s + 1, -1)
            return X(c, s - (k - 1) // 2, ctx.mul(eta, A)) + XY(c, s - (k + 3) // 2,
                                                                  ctx.neg(ctx.add(A, ctx.mul(eta, B))))
        C = S(s - 2, 1)
        return XY(c, s - k // 2 - 1, ctx.mul(eta, A)) + X(c, s - k // 2,
                                                           ctx.neg(ctx.add(A, ctx.mul(eta, C))))
    A = S(s - 1, 1)
    if k % 2:
        B = S(s + 1) if c.kind == "type2" else S(s + 1, 0, -1)
        return X(c, s - (k - 1) // 2, ctx.mul(eta, A)) + XY(c, s - (k + 3) // 2, ctx.add(A, ctx.mul(eta, B)))
    C = S(s - 2, 2) if c.kind == "type2" else S(s - 2, 1, 1)
    return XY(c, s - k // 2 - 1, ctx.mul(eta, A)) + X(c, s - k // 2, ctx.add(A, ctx.mul(eta, C)))


def tecc_parity_check_closed(h: CodeHandle) -> MatrixFq:
    ctx, c, D = h.ctx, h.curve, h.D
    f = closed_form_function(h)
    w = dual_weights(c, D, h.gamma)
    first = [ctx.mul(wi, f(P)) for wi, P in zip(w, D)]
    H = MatrixFq(ctx, [first], h.n).stack(ecc_parity_check(c, D, h.k + 1, gamma=h.gamma))
    if h.v is not None:
        H = H.scale_columns(_inv_v(ctx, h.v))
    return H


# -- eta extraction -------------------------------------------------------------------

NO_FUNCTION, NO_ETA, ALL_ETA, VALUE = "NoFunction", "NoEta", "AllEta", "value"


@dataclass
class EtaWitness:
    points: tuple
    func: CurveFunc | None
    status: str
    eta: int | None = None

    def to_json(self) -> dict:
        ctx = self.points[0].x.ctx
        return {"points": [_pt_json(P) for P in self.points],
                "function": format_func(self.func) if self.func is not None else None,
                "status": self.status,
                "eta": None if self.eta is None else format_elem(ctx, self.eta)}


def _normalize(fn: CurveFunc) -> CurveFunc:
    """Scale to monic in the top Y term if any, else in the top x power."""
    lead = fn.v.lead() if fn.v.deg >= 0 else fn.u.lead()
    return fn.scale(fn.curve.ctx.inv(lead))


def vanishing_function(curve: CurveSpec, m: int, pts: Sequence) -> CurveFunc | None:
    """The function in L(mO) vanishing on the given points, unique up to scalar."""
    ctx = curve.ctx
    basis = list(basis_LkO(curve, m))
    M = MatrixFq(ctx, [[f(P) for f in basis] for P in pts], len(basis))
    ns = nullspace(M)
    if ns.nrows != 1:
        return None
    fn = None
    for f, a in zip(basis, ns.rows[0]):
        if a:
            t = f.scale(a)
            fn = t if fn is None else fn + t
    return _normalize(fn)


def eta_of_points(curve: CurveSpec, k: int, ell: int, pts: Sequence) -> EtaWitness:
    pts = tuple(pts)
    if len(set(pts)) != len(pts) or any(P.is_infinity for P in pts):
        raise ValidationError("points must be distinct and affine")
    if len(pts) != k + 1:
        raise ValidationError(f"need k+1 = {k + 1} points")
    if ell not in ell_range(k):
        raise BadTwist(f"ell={ell} out of range for k={k}")
    acc = O
    for P in pts:
        acc = add(curve, acc, P)
    if acc != O:
        return EtaWitness(pts, None, NO_FUNCTION)
    fn = vanishing_function(curve, k + 1, pts)
    if fn is None:  # pragma: no cover - sum O forces a one-dimensional space
        return EtaWitness(pts, None, NO_FUNCTION)
    ctx = curve.ctx
    if k % 2:
        num, den = fn.u.coef((k + 1) // 2), fn.v.coef(ell)
    else:
        num, den = fn.v.coef((k - 2) // 2), fn.u.coef(ell)
    if num == 0 and den == 0:
        return EtaWitness(pts, fn, ALL_ETA)
    if den == 0 or num == 0:
        return EtaWitness(pts, fn, NO_ETA)
    return EtaWitness(pts, fn, VALUE, ctx.div(num, den))


# -- minimum distance -----------------------------------------------------------------

@dataclass
class DistanceClass:
    """Trichotomy verdict; ``predicted_case`` is the N(k, O, D) based prediction."""

    d: int
    case: str  # "n-k-1", "n-k" or "n-k+1"
    predicted_case: str
    exhaustive: int | None
    N_k: int
    witness: tuple = ()
    func: CurveFunc | None = None

    @property
    def agrees(self) -> bool:
        return self.exhaustive is None or self.exhaustive == self.d

    @property
    def predicted_agrees(self) -> bool:
        return self.predicted_case == self.case

    def to_json(self) -> dict:
        out = {"d": self.d, "case": self.case, "predicted_case": self.predicted_case,
               "exhaustive": self.exhaustive, "agrees": self.agrees,
               "predicted_agrees": self.predicted_agrees, "N_k": self.N_k,
               "witness": [_pt_json(P) for P in self.witness]}
        if self.func is not None:
            out["function"] = format_func(self.func)
        return out


def eta_witnesses(curve: CurveSpec, D: EvalSet, k: int, ell: int,
                  witness_cap: int = 10 ** 6) -> list[EtaWitness]:
    """eta(ell, .) for every (k+1)-subset of D summing to O."""
    res = subset_sum_count(curve, k + 1, O, D, witness_cap=witness_cap)
    if res.witnesses is None:
        raise CapExceeded(f"{res.count} subsets exceed the witness cap {witness_cap}")
    return [eta_of_points(curve, k, ell, S) for S in res.witnesses]


def min_distance_class(h: CodeHandle, budget: int | None = None, cross_check: bool = True,
                       witnesses: list[EtaWitness] | None = None,
                       witness_cap: int = 10 ** 6) -> DistanceClass:
    """Distance n-k-1, n-k or n-k+1 with a witnessing point set and function.

    The n-k-1 case comes from eta witnesses over (k+1)-subsets summing to O.
    The n-k case is decided by a rank test over k-subsets, since N(k, O, D) > 0
    neither implies nor is implied by it once the hook term is present;
    ``predicted_case`` keeps the N(k, O, D) prediction for comparison.
    """
    _require_single(h)
    c, D, k, n = h.curve, h.D, h.k, h.n
    eta = h.twist.eta
    wits = witnesses if witnesses is not None else eta_witnesses(c, D, k, h.twist.ell, witness_cap)
    hit = next((w for w in wits if w.status == ALL_ETA or (w.status == VALUE and w.eta == eta)), None)
    nk = subset_sum_count(c, k, O, D, witness_cap=1).count
    wp, wf = (), None
    if hit is not None:
        case, predicted, wp, wf = "n-k-1", "n-k-1", hit.points, hit.func
    else:
        predicted = "n-k" if nk > 0 else "n-k+1"
        Z = _twisted_zero_set(h, k)
        if Z is not None:
            case, (wp, wf) = "n-k", Z
        else:
            case = "n-k+1"
    d = {"n-k-1": n - k - 1, "n-k": n - k, "n-k+1": n - k + 1}[case]
    ex = min_distance(h.G, budget) if cross_check else None
    return DistanceClass(d, case, predicted, ex, nk, tuple(wp), wf)


def _twisted_zero_set(h: CodeHandle, z: int):
    """A z-subset of D on which some function of the defining set vanishes."""
    ctx = h.ctx
    fs = list(h.defining_set())
    E = [[f(P) for f in fs] for P in h.D]
    for Z in itertools.combinations(range(h.n), z):
        ns = nullspace(MatrixFq(ctx, [E[i] for i in Z], len(fs)))
        if ns.nrows:
            fn = None
            for f, a in zip(fs, ns.rows[0]):
                if a:
                    fn = f.scale(a) if fn is None else fn + f.scale(a)
            return tuple(h.D[i] for i in Z), _normalize(fn)
    return None


# -- self-duality ---------------------------------------------------------------------

@dataclass
class SelfDualCertificate:
    kind: str
    parity: str
    scalar: int | None  # effective lambda (or mu) with v_i^2 = scalar * weight_i
    lhs: int
    verdict: bool
    span_equal: bool

    def to_json(self, ctx) -> dict:
        return {"kind": self.kind, "parity": self.parity,
                "scalar": None if self.scalar is None else format_elem(ctx, self.scalar),
                "lhs": format_elem(ctx, self.lhs), "verdict": self.verdict,
                "span_equal": self.span_equal}


def self_dual_condition(h: CodeHandle) -> int:
    """Left-hand side of the eta condition; zero means the condition holds."""
    c, D, gm, k = h.curve, h.D, h.gamma, h.k
    ctx = c.ctx
    eta = h.twist.eta
    S = lambda e, yp=0, ln=0: _wsum(c, D, gm, e, yp, ln)  # noqa: E731
    if c.kind == "type1":
        two = ctx.from_int(2)
        first = ctx.mul(S(k + 1, -1), eta) if k % 2 else ctx.mul(S(k - 2, 1), eta)
        return ctx.add(first, ctx.mul(two, S(k - 1)))
    if c.kind == "type2":
        return S(k + 1) if k % 2 else S(k - 2, 2)
    return S(k + 1, 0, -1) if k % 2 else S(k - 2, 1, 1)


def self_dual_check(h: CodeHandle) -> SelfDualCertificate:
    _require_single(h)
    k, n = h.k, h.n
    if n != 2 * k:
        raise BadShape("self-duality needs n = 2k")
    if h.twist.ell != ell_extreme(k):
        raise BadShape(f"self-duality test needs ell = {ell_extreme(k)}")
    ctx, c = h.ctx, h.curve
    w = dual_weights(c, h.D, h.gamma)
    v = h.v or (1,) * n
    ratios = {ctx.div(ctx.mul(a, a), wi) for a, wi in zip(v, w)}
    scalar = ratios.pop() if len(ratios) == 1 else None
    lhs = self_dual_condition(h)
    verdict = scalar is not None and lhs == 0
    return SelfDualCertificate(c.kind, "odd" if k % 2 else "even", scalar, lhs, verdict,
                               is_self_dual(h.G))


def self_dual_scaling(h: CodeHandle, lam: int = 1) -> tuple[int, ...] | None:
    """A v with v_i^2 = lam * weight_i, or None when some ratio is a non-square."""
    ctx = h.ctx
    out = []
    for wi in dual_weights(h.curve, h.D, h.gamma):
        r = ctx.sqrt_code(ctx.mul(lam, wi))
        if r is None:
            return None
        out.append(r)
    return tuple(out)


# -- searches and Schur audit -----------------------------------------------------------

@dataclass
class SearchHit:
    handle: CodeHandle
    summary: CodeSummary


def search_codes(curve: CurveSpec, D: EvalSet, k: int, want: str | None = None,
                 self_dual: bool = False, budget: int | None = None,
                 ells: Sequence[int] | None = None) -> list[SearchHit]:
    """All single-twist handles over eta in F_q^* (and the self-dual scaling) matching the filter."""
    n = len(D)
    if not 3 <= k < n:
        raise BadShape(f"need 3 <= k < n, got k={k}, n={n}")
    ctx = curve.ctx
    hits = []
    for ell in (ells if ells is not None else ell_range(k)):
        for eta in range(1, ctx.q):
            h = CodeHandle(curve, D, k, TwistSpec(ell=ell, eta=eta))
            if self_dual:
                if n != 2 * k:
                    raise BadShape("self-dual search needs n = 2k")
                v = _find_self_dual_scaling(h)
                if v is None:
                    continue
                h = CodeHandle(curve, D, k, h.twist, v)
            summ = classify(h.G, budget)
            if want is not None and summ.cls != want:
                continue
            if self_dual and not summ.self_dual:
                continue
            hits.append(SearchHit(h, summ))
    return hits


def _find_self_dual_scaling(h: CodeHandle):
    ctx = h.ctx
    for lam in range(1, ctx.q):
        v = self_dual_scaling(h, lam)
        if v is not None:
            return v
    return None


def t_ell_set(k: int, ell: int) -> set[int]:
    """Pole orders reached by the defining set of an odd-k single twist."""
    return (set(range(k + 2)) - {1, 2 * ell + 3})


def sumset_size(T: set[int]) -> int:
    return len({a + b for a in T for b in T})


@dataclass
class SchurReport:
    """Schur-square dimensions of a handle and of its dual.

    Bounds are ``None`` when the corresponding side is outside the range where
    the lower bound is known to hold.
    """

    n: int
    k: int
    ell: int | None
    dim: int
    lower_bound: int | None
    predicted: int | None
    exact: bool | None
    dual_dim: int
    dual_bound: int | None
    dual_exact: bool | None
    rs_verdict: str

    @property
    def holds(self) -> bool:
        return ((self.lower_bound is None or self.dim >= self.lower_bound)
                and (self.dual_bound is None or self.dual_dim >= self.dual_bound))

    def to_json(self) -> dict:
        out = dict(self.__dict__)
        out["holds"] = self.holds
        return out


def schur_audit(h: CodeHandle) -> SchurReport:
    n, k = h.n, h.k
    dim = schur_square_dim(h.G)
    H = nullspace(h.G)
    ddim = schur_square_dim(H)
    primal = 4 <= k <= (n - 4) // 2
    dual_side = 4 <= n - k <= (n - 4) // 2
    # a code is GRS iff its dual is, so test whichever side has rate <= 1/2
    rs = rs_nonequiv_check(h.G if 2 * k <= n else H)
    if h.twist is None:
        return SchurReport(n, k, None, dim, 2 * k if primal else None, 2 * k,
                           dim == 2 * k if primal else None, ddim,
                           2 * (n - k) if dual_side else None,
                           ddim == 2 * (n - k) if dual_side else None, rs)
    _require_single(h)
    if not (primal or dual_side):
        raise BadShape(f"Schur audit needs 4 <= k <= (n-4)/2 or 4 <= n-k <= (n-4)/2 (k={k}, n={n})")
    ell = h.twist.ell
    extreme = ell == ell_extreme(k)
    pred = sumset_size(t_ell_set(k, ell)) if k % 2 else None
    return SchurReport(n, k, ell, dim, 2 * k + 1 if primal else None, pred,
                       (dim == 2 * k + 1) == extreme if primal else None, ddim,
                       2 * n - 2 * k + 1 if dual_side else None,
                       (ddim == 2 * n - 2 * k + 1) == extreme if dual_side else None, rs)


__all__ = [
    "CodeHandle", "make_handle", "handle_from_json", "dual_weights", "ecc_generator", "ecc_parity_check", "tecc_generator",
    "tecc_parity_check_nullspace", "tecc_parity_check_recursive", "RecursionTrace", "RecursionStep",
    "closed_form_function", "tecc_parity_check_closed", "EtaWitness", "eta_of_points", "eta_witnesses",
    "vanishing_function", "DistanceClass", "min_distance_class", "SelfDualCertificate", "self_dual_check",
    "self_dual_condition", "self_dual_scaling", "search_codes", "SearchHit", "schur_audit", "SchurReport",
    "t_ell_set", "sumset_size", "row_space_equal", "NO_FUNCTION", "NO_ETA", "ALL_ETA", "VALUE",
]
