"""The differential dx/t and its residues at the evaluation points.

With ``t = prod_{alpha in T} (x - alpha)`` over the distinct x-values of D, the
residue of ``dx/t`` at a split point above ``alpha_i`` is
``prod_{j != i} (alpha_i - alpha_j)^{-1}``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curve import CurveSpec, EvalSet, _to_w
from .errors import DuplicateX, ValidationError
from .gf import Fq, format_elem
from .rrspace import basis_dual_space, basis_LkO, dual_divisor_tag


@dataclass(frozen=True)
class ResidueVector:
    gamma: tuple[int, ...]
    T: tuple[Fq, ...]
    t_gamma: tuple[int, ...]  # residue per distinct x, aligned with T

    def __len__(self) -> int:
        return len(self.gamma)

    def __iter__(self):
        return iter(self.gamma)

    def __getitem__(self, i):
        return self.gamma[i]

    def to_json(self) -> list[str]:
        ctx = self.T[0].ctx
        return [format_elem(ctx, g) for g in self.gamma]


def residues(D: EvalSet) -> ResidueVector:
    """Residues of dx/t aligned with D's point order."""
    if not D.split_complete:
        raise ValidationError("residues need a split-complete evaluation set")
    T = D.T
    if len(set(T)) != len(T):
        raise DuplicateX("repeated x-value in T")
    ctx = T[0].ctx
    tg = []
    for i, ai in enumerate(T):
        prod = 1
        for j, aj in enumerate(T):
            if i != j:
                prod = ctx.mul(prod, ctx.sub(ai.v, aj.v))
        tg.append(ctx.inv(prod))
    by_x = {a.v: g for a, g in zip(T, tg)}
    return ResidueVector(tuple(by_x[P.x.v] for P in D), T, tuple(tg))


@dataclass(frozen=True)
class CanonicalDivisorInfo:
    kind: str
    dx: str
    n: int | None = None
    k: int | None = None

    @property
    def dual_tag(self) -> str | None:
        if self.n is None:
            return None
        return {"type1": f"(y)+{self.n - self.k}O", "type2": f"{self.n - self.k}O",
                "type3": f"(ax+b)+{self.n - self.k}O"}[self.kind]


def canonical_info(c: CurveSpec, n: int | None = None, k: int | None = None) -> CanonicalDivisorInfo:
    """Divisor of dx per curve type (degree 0 in every case)."""
    dx = {"type1": "(y)", "type2": "0", "type3": "(ax+b)"}[c.kind]
    return CanonicalDivisorInfo(c.kind, dx, n, k)


# -- identities ------------------------------------------------------------------

def partial_fraction_sums(rv: ResidueVector) -> list[int]:
    """sum over T of gamma(alpha) * alpha^e for e = 0..|T|-2 (all zero)."""
    ctx = rv.T[0].ctx
    out = []
    for e in range(len(rv.T) - 1):
        s = 0
        for a, g in zip(rv.T, rv.t_gamma):
            s = ctx.add(s, ctx.mul(g, ctx.pow(a.v, e)))
        out.append(s)
    return out


def residue_pairings(c: CurveSpec, D: EvalSet, k: int, rv: ResidueVector | None = None) -> list[list[int]]:
    """Matrix of sum_i gamma_i g(P_i) h(P_i) over g in L(kO), h in the dual basis."""
    rv = rv or residues(D)
    ctx = c.ctx
    gs = basis_LkO(c, k)
    hs = basis_dual_space(c, len(D), k)
    out = []
    for g in gs:
        row = []
        for h in hs:
            s = 0
            for P, gam in zip(D, rv.gamma):
                s = ctx.add(s, ctx.mul(gam, ctx.mul(g(P), h(P))))
            row.append(s)
        out.append(row)
    return out


def orthogonality_families(c: CurveSpec, D: EvalSet, k: int,
                           rv: ResidueVector | None = None) -> dict[str, list[int]]:
    """The three orthogonality families for the curve type, as lists of sums.

    Keys name the summand; every listed sum vanishes. ``beta`` is the
    y-coordinate and ``lin`` is ``a*alpha + b``. For type 3 the third family
    uses ``lin`` at the summation index.
    """
    rv = rv or residues(D)
    ctx = c.ctx
    n = len(D)
    fl = lambda v: v // 2  # noqa: E731
    top_a = fl(k) + fl(n - k)
    top_b = n // 2 - 2
    top_c = (k - 3) // 2 + (n - k - 3) // 2

    def fam(weight, top):
        sums = []
        for i in range(top + 1):
            s = 0
            for P, g in zip(D, rv.gamma):
                s = ctx.add(s, ctx.mul(ctx.mul(g, ctx.pow(P.x.v, i)), weight(P)))
            sums.append(s)
        return sums

    beta = lambda P: P.y.v  # noqa: E731
    if c.kind == "type1":
        return {
            "gamma*alpha^i/beta": fam(lambda P: ctx.inv(beta(P)), top_a),
            "gamma*alpha^i": fam(lambda P: 1, top_b),
            "gamma*alpha^i*beta": fam(beta, top_c),
        }
    if c.kind == "type2":
        return {
            "gamma*alpha^i": fam(lambda P: 1, top_a),
            "gamma*alpha^i*beta": fam(beta, top_b),
            "gamma*alpha^i*beta^2": fam(lambda P: ctx.mul(beta(P), beta(P)), top_c),
        }
    lin = lambda P: c.lin(P.x.v)  # noqa: E731
    return {
        "gamma*alpha^i/lin": fam(lambda P: ctx.inv(lin(P)), top_a),
        "gamma*alpha^i*beta": fam(beta, top_b),
        "gamma*alpha^i*lin*beta^2": fam(lambda P: ctx.mul(lin(P), ctx.mul(beta(P), beta(P))), top_c),
    }


def weierstrass_Y(c: CurveSpec, P) -> int:
    return _to_w(c, P)[1]


__all__ = [
    "ResidueVector", "residues", "CanonicalDivisorInfo", "canonical_info", "partial_fraction_sums",
    "residue_pairings", "orthogonality_families", "dual_divisor_tag",
]
