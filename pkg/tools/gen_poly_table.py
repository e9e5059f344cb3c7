"""Oracle: smallest monic primitive polynomial for each p^m <= 256 (m >= 2).

Search order is by coefficient vector read as a base-p integer, low degree first.
Uses sympy, independent of the package arithmetic.
"""
from sympy import Poly, symbols, GF, isprime
from sympy.polys.galoistools import gf_irreducible_p
from sympy.polys.domains import ZZ

x = symbols("x")


def order_of_x(coeffs, p, m):
    # multiplicative order of x modulo the polynomial, by repeated multiplication
    mod = Poly(list(reversed(coeffs)), x, modulus=p)
    cur = Poly(x, x, modulus=p)
    one = Poly(1, x, modulus=p)
    for k in range(1, p**m):
        if cur == one:
            return k
        cur = (cur * Poly(x, x, modulus=p)).rem(mod)
    return p**m - 1 if cur == one else None


out = {}
for p in [q for q in range(2, 257) if isprime(q)]:
    m = 2
    while p**m <= 256:
        for code in range(p**m):
            low = [(code // p**i) % p for i in range(m)]
            coeffs = low + [1]
            if low[0] == 0:
                continue
            if not gf_irreducible_p(list(reversed(coeffs)), p, ZZ):
                continue
            if order_of_x(coeffs, p, m) == p**m - 1:
                out[(p, m)] = tuple(coeffs)
                break
        m += 1
for k, v in sorted(out.items()):
    print(f"    {k}: {v},")
