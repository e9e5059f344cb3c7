"""Finite fields GF(p^m) in polynomial basis.

Elements are stored as canonical integers: the coefficient vector
``(c0, c1, ..., c_{m-1})`` of ``c0 + c1*w + ... + c_{m-1}*w^{m-1}`` is encoded as
``sum(c_i * p**i)``. Enumeration order is the order of these integers, so GF(4)
enumerates as ``0, 1, w, w+1``.

All arithmetic runs on precomputed addition and multiplication tables. A
:class:`FieldCtx` is immutable once built and :func:`field_new` caches contexts,
so equal fields share tables.
"""

from __future__ import annotations

import functools
import re
from typing import Iterable, Sequence

from .errors import DegreeMismatch, DivideByZero, FieldMismatch, NotPrime, Reducible, ValidationError

MAX_Q = 1024

# Smallest monic primitive polynomial per (p, m), coefficients low degree first.
DEFAULT_POLYS: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 0, 0, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (3, 2): (2, 1, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 1, 0, 0, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (5, 2): (2, 1, 1),
    (5, 3): (2, 3, 0, 1),
    (7, 2): (3, 1, 1),
    (11, 2): (7, 1, 1),
    (13, 2): (2, 1, 1),
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


# -- plain polynomials over GF(p), used only while building a context ---------

def _pmod_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _pmod_rem(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = _pmod_trim([x % p for x in a])
    b = _pmod_trim([x % p for x in b])
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        f = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, bc in enumerate(b):
            a[i + shift] = (a[i + shift] - f * bc) % p
        _pmod_trim(a)
    return a


def _monic_polys(p: int, d: int):
    for code in range(p ** d):
        yield [(code // p ** i) % p for i in range(d)] + [1]


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    m = len(poly) - 1
    for d in range(1, m // 2 + 1):
        for g in _monic_polys(p, d):
            if not _pmod_rem(poly, g, p):
                return False
    return True


class FieldCtx:
    """GF(p^m) defined by a monic irreducible polynomial."""

    __slots__ = ("p", "m", "poly", "q", "add_t", "sub_t", "mul_t", "neg_t", "inv_t", "_np", "_frozen")

    def __init__(self, p: int, m: int = 1, poly: Sequence[int] | None = None):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if m < 1:
            raise DegreeMismatch(f"extension degree must be >= 1, got {m}")
        if p ** m > MAX_Q:
            raise ValidationError(f"field size {p}^{m} exceeds {MAX_Q}")
        if poly is None:
            poly = DEFAULT_POLYS.get((p, m)) if m > 1 else (0, 1)
            if poly is None:
                poly = next(g for g in _monic_polys(p, m) if is_irreducible(g, p))
        poly = tuple(int(c) % p for c in poly)
        if len(poly) != m + 1:
            raise DegreeMismatch(f"defining polynomial must have degree {m}")
        if poly[-1] != 1:
            raise DegreeMismatch("defining polynomial must be monic")
        if m > 1 and not is_irreducible(poly, p):
            raise Reducible(f"{list(poly)} is reducible over GF({p})")
        object.__setattr__(self, "_frozen", False)
        self.p, self.m, self.poly, self.q = p, m, poly, p ** m
        self._build_tables()
        self._np = None
        self._frozen = True

    def __setattr__(self, name, value):
        if getattr(self, "_frozen", False) and name != "_np":
            raise AttributeError("FieldCtx is immutable")
        object.__setattr__(self, name, value)

    # -- construction --------------------------------------------------------

    def _digits(self, a: int) -> list[int]:
        return [(a // self.p ** i) % self.p for i in range(self.m)]

    def _undigits(self, c: Iterable[int]) -> int:
        return sum((x % self.p) * self.p ** i for i, x in enumerate(c))

    def _slow_mul(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        return self._undigits(_pmod_rem(prod, self.poly, p) if m > 1 else [prod[0] % p])

    def _build_tables(self) -> None:
        q, p = self.q, self.p
        digits = [self._digits(a) for a in range(q)]
        self.add_t = [[self._undigits([x + y for x, y in zip(digits[a], digits[b])]) for b in range(q)]
                      for a in range(q)]
        self.neg_t = [self._undigits([-x for x in digits[a]]) for a in range(q)]
        self.sub_t = [[self.add_t[a][self.neg_t[b]] for b in range(q)] for a in range(q)]
        if self.m == 1:
            self.mul_t = [[a * b % p for b in range(q)] for a in range(q)]
        else:
            # log/antilog through a primitive element found by search
            gen = exp = None
            for g in range(2, q):
                exp = [1]
                while len(exp) < q:
                    nxt = self._slow_mul(exp[-1], g)
                    if nxt == 1:
                        break
                    exp.append(nxt)
                if len(exp) == q - 1:
                    gen = g
                    break
            if gen is None:  # only GF(2)-like degenerate cases
                exp = [1]
            log = {e: i for i, e in enumerate(exp)}
            n = q - 1
            self.mul_t = [[0 if a == 0 or b == 0 else exp[(log[a] + log[b]) % n] for b in range(q)]
                          for a in range(q)]
        self.inv_t = [0] * q
        for a in range(1, q):
            row = self.mul_t[a]
            self.inv_t[a] = row.index(1)

    # -- integer-level arithmetic -------------------------------------------

    def add(self, a: int, b: int) -> int:
        return self.add_t[a][b]

    def sub(self, a: int, b: int) -> int:
        return self.sub_t[a][b]

    def mul(self, a: int, b: int) -> int:
        return self.mul_t[a][b]

    def neg(self, a: int) -> int:
        return self.neg_t[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivideByZero("inverse of zero")
        return self.inv_t[a]

    def div(self, a: int, b: int) -> int:
        return self.mul_t[a][self.inv(b)]

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        r = 1
        while e:
            if e & 1:
                r = self.mul_t[r][a]
            a = self.mul_t[a][a]
            e >>= 1
        return r

    def from_int(self, n: int) -> int:
        """Image of the integer ``n`` under Z -> GF(q) (so 2 -> 0 in char 2)."""
        return n % self.p

    def sqrt_code(self, a: int) -> int | None:
        q = self.q
        if a == 0:
            return 0
        if self.p == 2:
            return self.pow(a, q // 2)
        if self.pow(a, (q - 1) // 2) != 1:
            return None
        s, Q = 0, q - 1
        while Q % 2 == 0:
            Q //= 2
            s += 1
        z = next(c for c in range(2, q) if self.pow(c, (q - 1) // 2) == self.neg(1))
        M, c, t, r = s, self.pow(z, Q), self.pow(a, Q), self.pow(a, (Q + 1) // 2)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = self.mul(t2, t2)
                i += 1
            b = self.pow(c, 1 << (M - i - 1))
            M, c = i, self.mul(b, b)
            t, r = self.mul(t, c), self.mul(r, b)
        return min(r, self.neg(r))

    # -- elements ------------------------------------------------------------

    def __call__(self, value) -> "Fq":
        return Fq(self, self.coerce(value))

    def coerce(self, value) -> int:
        if isinstance(value, Fq):
            _check_same(self, value.ctx)
            return value.v
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            return self.from_int(value)
        if isinstance(value, str):
            return parse_elem(self, value).v
        if isinstance(value, (list, tuple)):
            if len(value) != self.m:
                raise DegreeMismatch(f"coefficient vector must have length {self.m}")
            return self._undigits(int(c) for c in value)
        raise TypeError(f"cannot convert {value!r} to GF({self.q})")

    def elem(self, code: int) -> "Fq":
        """Element from its canonical integer encoding."""
        if not 0 <= code < self.q:
            raise ValidationError(f"encoding {code} out of range for GF({self.q})")
        return Fq(self, code)

    @property
    def zero(self) -> "Fq":
        return Fq(self, 0)

    @property
    def one(self) -> "Fq":
        return Fq(self, 1)

    @property
    def gen(self) -> "Fq":
        """The class of ``w`` (a root of the defining polynomial)."""
        return Fq(self, self.p if self.m > 1 else 0)

    def coeffs(self, a: int) -> list[int]:
        return self._digits(a)

    def np_tables(self):
        """(add, sub, mul) as numpy arrays, built on first use."""
        if self._np is None:
            import numpy as np

            self._np = tuple(np.array(t, dtype=np.int32) for t in (self.add_t, self.sub_t, self.mul_t))
        return self._np

    def to_json(self) -> dict:
        return {"p": self.p, "m": self.m, "poly": list(self.poly)}

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldCtx) and (self.p, self.m, self.poly) == (other.p, other.m, other.poly)

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.poly))

    def __repr__(self) -> str:
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m}, poly={list(self.poly)})"


@functools.lru_cache(maxsize=None)
def _cached_field(p: int, m: int, poly: tuple[int, ...] | None) -> FieldCtx:
    return FieldCtx(p, m, poly)


def field_new(p: int, m: int = 1, poly: Sequence[int] | None = None) -> FieldCtx:
    """Build (or fetch the cached) field GF(p^m)."""
    return _cached_field(int(p), int(m), None if poly is None else tuple(int(c) for c in poly))


def field_from_json(obj: dict) -> FieldCtx:
    return field_new(obj["p"], obj.get("m", 1), obj.get("poly"))


def _check_same(a: FieldCtx, b: FieldCtx) -> None:
    if a is not b and a != b:
        raise FieldMismatch(f"mixed-field operation: {a!r} vs {b!r}")


class Fq:
    """A field element; a thin value wrapper over the integer encoding."""

    __slots__ = ("ctx", "v")

    def __init__(self, ctx: FieldCtx, v: int):
        self.ctx = ctx
        self.v = v

    def _other(self, o) -> int:
        if isinstance(o, Fq):
            _check_same(self.ctx, o.ctx)
            return o.v
        if isinstance(o, int):
            return self.ctx.from_int(o)
        return NotImplemented

    def __add__(self, o):
        b = self._other(o)
        return NotImplemented if b is NotImplemented else Fq(self.ctx, self.ctx.add_t[self.v][b])

    __radd__ = __add__

    def __sub__(self, o):
        b = self._other(o)
        return NotImplemented if b is NotImplemented else Fq(self.ctx, self.ctx.sub_t[self.v][b])

    def __rsub__(self, o):
        b = self._other(o)
        return NotImplemented if b is NotImplemented else Fq(self.ctx, self.ctx.sub_t[b][self.v])

    def __mul__(self, o):
        b = self._other(o)
        return NotImplemented if b is NotImplemented else Fq(self.ctx, self.ctx.mul_t[self.v][b])

    __rmul__ = __mul__

    def __truediv__(self, o):
        b = self._other(o)
        return NotImplemented if b is NotImplemented else Fq(self.ctx, self.ctx.div(self.v, b))

    def __rtruediv__(self, o):
        b = self._other(o)
        return NotImplemented if b is NotImplemented else Fq(self.ctx, self.ctx.div(b, self.v))

    def __neg__(self):
        return Fq(self.ctx, self.ctx.neg_t[self.v])

    def __pow__(self, e: int):
        return Fq(self.ctx, self.ctx.pow(self.v, e))

    def __eq__(self, o) -> bool:
        if isinstance(o, Fq):
            return self.v == o.v and (self.ctx is o.ctx or self.ctx == o.ctx)
        if isinstance(o, int):
            return self.v == self.ctx.from_int(o)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.v, self.ctx.q))

    def __lt__(self, o: "Fq") -> bool:
        return self.v < o.v

    def __bool__(self) -> bool:
        return self.v != 0

    def __int__(self) -> int:
        return self.v

    def inv(self) -> "Fq":
        return inv(self)

    def sqrt(self) -> "Fq | None":
        return sqrt(self)

    def __repr__(self) -> str:
        return format_elem(self.ctx, self.v, "poly")

    __str__ = __repr__


def inv(a: Fq) -> Fq:
    """Multiplicative inverse; raises DivideByZero on 0."""
    return Fq(a.ctx, a.ctx.inv(a.v))


def sqrt(a: Fq) -> Fq | None:
    """A square root of ``a`` or None.

    Odd characteristic uses Tonelli-Shanks with the smallest non-residue and
    returns the root with the smaller encoding. In characteristic 2 the root is
    ``a^(q/2)``.
    """
    r = a.ctx.sqrt_code(a.v)
    return None if r is None else Fq(a.ctx, r)


def all_elements(ctx: FieldCtx) -> list[Fq]:
    return [Fq(ctx, i) for i in range(ctx.q)]


def nonzero_elements(ctx: FieldCtx) -> list[Fq]:
    return [Fq(ctx, i) for i in range(1, ctx.q)]


# -- text encoding -----------------------------------------------------------

_TERM = re.compile(r"^(?:(\d+)\*?)?(?:(w|a|α|alpha)(?:\^(\d+))?)?$")


def parse_elem(ctx: FieldCtx, text: str) -> Fq:
    """Parse an element.

    Accepted forms: an integer (taken mod p), a coefficient vector ``[c0,c1,...]``,
    or a sum of terms like ``w^5``, ``3*w^2``, ``w``, ``1`` (``a``/``α`` are
    accepted as synonyms of ``w``). Power notation is reduced with the defining
    polynomial, so ``w^5`` is valid in GF(16).
    """
    s = text.strip().replace(" ", "")
    if not s:
        raise ValidationError("empty element")
    if s.startswith("["):
        try:
            vals = [int(t) for t in s.strip("[]").split(",") if t != ""]
        except ValueError as exc:
            raise ValidationError(f"bad coefficient vector {text!r}") from exc
        return ctx(vals)
    sign = 1
    if s.startswith("-"):
        sign, s = -1, s[1:]
    acc = 0
    w = ctx.gen.v
    for term in s.split("+"):
        mt = _TERM.match(term)
        if not term or not mt or (mt.group(1) is None and mt.group(2) is None):
            raise ValidationError(f"cannot parse element {text!r}")
        coef = ctx.from_int(int(mt.group(1))) if mt.group(1) is not None else 1
        if mt.group(2) is not None:
            if ctx.m == 1:
                raise ValidationError(f"power notation needs an extension field: {text!r}")
            e = int(mt.group(3)) if mt.group(3) is not None else 1
            coef = ctx.mul(coef, ctx.pow(w, e))
        acc = ctx.add(acc, coef)
    return Fq(ctx, acc if sign > 0 else ctx.neg(acc))


def format_elem(ctx: FieldCtx, v: int, style: str = "vec", var: str = "w") -> str:
    """Render an element.

    ``vec`` gives ``[c0,c1,...]``; ``poly`` gives ``w^2+w+1``; ``pow`` gives
    ``w^k`` using the discrete log base ``w`` (``0`` for zero). Prime fields are
    always rendered as integers.
    """
    if ctx.m == 1:
        return str(v)
    if style == "vec":
        return "[" + ",".join(str(c) for c in ctx.coeffs(v)) + "]"
    if style == "pow":
        if v == 0:
            return "0"
        w, cur, k = ctx.gen.v, 1, 0
        while cur != v:
            cur = ctx.mul(cur, w)
            k += 1
            if k >= ctx.q:
                return format_elem(ctx, v, "poly", var)
        return f"{var}^{k}"
    terms = []
    for i, c in reversed(list(enumerate(ctx.coeffs(v)))):
        if c == 0:
            continue
        mono = "1" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if c != 1:
            mono = str(c) if i == 0 else f"{c}*{mono}"
        terms.append(mono)
    return "+".join(terms) if terms else "0"


# -- polynomials over GF(q) --------------------------------------------------


class PolyFq:
    """Univariate polynomial over a FieldCtx, coefficients low degree first.

    Coefficients are integer encodings. The zero polynomial has degree -1.
    """

    __slots__ = ("ctx", "c")

    ZERO_DEGREE = -1

    def __init__(self, ctx: FieldCtx, coeffs: Iterable = ()):
        c = [ctx.coerce(x) if not isinstance(x, int) else x for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.ctx = ctx
        self.c = tuple(c)

    @classmethod
    def monomial(cls, ctx: FieldCtx, e: int, coef: int = 1) -> "PolyFq":
        return cls(ctx, [0] * e + [coef])

    @property
    def deg(self) -> int:
        return len(self.c) - 1

    def is_zero(self) -> bool:
        return not self.c

    def coef(self, i: int) -> int:
        return self.c[i] if 0 <= i < len(self.c) else 0

    def lead(self) -> int:
        return self.c[-1] if self.c else 0

    def __add__(self, o: "PolyFq") -> "PolyFq":
        add = self.ctx.add_t
        n = max(len(self.c), len(o.c))
        return PolyFq(self.ctx, [add[self.coef(i)][o.coef(i)] for i in range(n)])

    def __sub__(self, o: "PolyFq") -> "PolyFq":
        sub = self.ctx.sub_t
        n = max(len(self.c), len(o.c))
        return PolyFq(self.ctx, [sub[self.coef(i)][o.coef(i)] for i in range(n)])

    def __neg__(self) -> "PolyFq":
        return PolyFq(self.ctx, [self.ctx.neg_t[a] for a in self.c])

    def __mul__(self, o: "PolyFq") -> "PolyFq":
        if not self.c or not o.c:
            return PolyFq(self.ctx)
        add, mul = self.ctx.add_t, self.ctx.mul_t
        out = [0] * (len(self.c) + len(o.c) - 1)
        for i, a in enumerate(self.c):
            if a:
                ma = mul[a]
                for j, b in enumerate(o.c):
                    out[i + j] = add[out[i + j]][ma[b]]
        return PolyFq(self.ctx, out)

    def scale(self, s: int) -> "PolyFq":
        m = self.ctx.mul_t[s]
        return PolyFq(self.ctx, [m[a] for a in self.c])

    def shift(self, e: int) -> "PolyFq":
        return PolyFq(self.ctx, [0] * e + list(self.c)) if self.c else self

    def divmod(self, o: "PolyFq") -> tuple["PolyFq", "PolyFq"]:
        if o.is_zero():
            raise DivideByZero("polynomial division by zero")
        ctx = self.ctx
        r = list(self.c)
        qc = [0] * max(len(r) - len(o.c) + 1, 0)
        il = ctx.inv(o.lead())
        while len(r) >= len(o.c) and r:
            f = ctx.mul(r[-1], il)
            s = len(r) - len(o.c)
            qc[s] = f
            for i, b in enumerate(o.c):
                r[s + i] = ctx.sub(r[s + i], ctx.mul(f, b))
            while r and r[-1] == 0:
                r.pop()
        return PolyFq(ctx, qc), PolyFq(ctx, r)

    def __mod__(self, o: "PolyFq") -> "PolyFq":
        return self.divmod(o)[1]

    def __floordiv__(self, o: "PolyFq") -> "PolyFq":
        return self.divmod(o)[0]

    def monic(self) -> "PolyFq":
        return self.scale(self.ctx.inv(self.lead())) if self.c else self

    def derivative(self) -> "PolyFq":
        ctx = self.ctx
        return PolyFq(ctx, [ctx.mul(ctx.from_int(i), a) for i, a in enumerate(self.c)][1:])

    def gcd(self, o: "PolyFq") -> "PolyFq":
        a, b = self, o
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def __call__(self, x: int) -> int:
        """Horner evaluation at an encoded element."""
        add, mul = self.ctx.add_t, self.ctx.mul_t
        acc = 0
        for a in reversed(self.c):
            acc = add[mul[acc][x]][a]
        return acc

    def __eq__(self, o) -> bool:
        return isinstance(o, PolyFq) and self.c == o.c and self.ctx == o.ctx

    def __hash__(self) -> int:
        return hash(self.c)

    def __repr__(self) -> str:
        return format_poly(self)


def format_poly(p: PolyFq, var: str = "x", style: str = "poly") -> str:
    terms = []
    for i, a in enumerate(p.c):
        if a == 0:
            continue
        coef = format_elem(p.ctx, a, style)
        if "+" in coef:
            coef = f"({coef})"
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if not mono:
            terms.append(coef)
        elif coef == "1":
            terms.append(mono)
        else:
            terms.append(f"{coef}*{mono}")
    return " + ".join(terms) if terms else "0"
