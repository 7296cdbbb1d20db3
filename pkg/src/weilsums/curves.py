"""Point counts and nondegeneracy certificates for the curve family

    F(X, Y) = (X^{sm} + Y^{sm} - A)^n - (X^{sn} + Y^{sn} - B)^m

over F_p, with n > m >= 1 coprime and d = s*m*n.  delta_eval evaluates the
product of degeneracy conditions whose nonvanishing certifies that the s = 1
member is irreducible of full degree, so the point count obeys the generic
bound.  Univariate polynomials are dense ascending coefficient lists over F_p.
"""

from dataclasses import dataclass
from math import gcd

import numpy as np

from .field import GuardExceeded, prime_modulus, roots_of_unity

POINT_COUNT_LIMIT = 2000


def _trim(f):
    f = [c for c in f]
    while f and f[-1] == 0:
        f.pop()
    return f


def poly_mul(f, g, p: int):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, x in enumerate(f):
        if x:
            for j, y in enumerate(g):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def poly_pow(f, e: int, p: int):
    out = [1]
    base = list(f)
    while e:
        if e & 1:
            out = poly_mul(out, base, p)
        base = poly_mul(base, base, p)
        e >>= 1
    return out


def poly_sub(f, g, p: int):
    out = [0] * max(len(f), len(g))
    for i, c in enumerate(f):
        out[i] = c
    for i, c in enumerate(g):
        out[i] = (out[i] - c) % p
    return _trim(out)


def poly_deriv(f, p: int):
    return _trim([i * c % p for i, c in enumerate(f)][1:])


def poly_mod(f, g, p: int):
    """Remainder of f divided by g over F_p; g must be nonzero."""
    f = _trim(f)
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    inv = pow(g[-1], p - 2, p)
    while len(f) >= len(g):
        c = f[-1] * inv % p
        off = len(f) - len(g)
        for k in range(len(g)):
            f[off + k] = (f[off + k] - c * g[k]) % p
        f.pop()
        while f and f[-1] == 0:
            f.pop()
    return f


def resultant(f, g, p: int) -> int:
    """Res(f, g) = lc(f)^deg(g) * prod of g over the roots of f, computed mod p.

    Uses the Euclidean recurrence; returns 0 when f and g share a root.
    """
    f = _trim(f)
    g = _trim(g)
    if not f and not g:
        raise ValueError("resultant of two zero polynomials")
    if not f or not g:
        return 0
    res = 1
    while True:
        df, dg = len(f) - 1, len(g) - 1
        if df == 0:
            return res * pow(f[0], dg, p) % p
        if dg == 0:
            return res * pow(g[0], df, p) % p
        if df < dg:
            f, g = g, f
            if (df * dg) % 2:
                res = -res % p
            continue
        r = poly_mod(f, g, p)
        if not r:
            return 0
        # Res(f, g) = (-1)^(df*dg) lc(g)^(df - deg r) Res(g, r)
        if (df * dg) % 2:
            res = -res % p
        res = res * pow(g[-1], df - (len(r) - 1), p) % p
        f, g = g, r


def discriminant(f, p: int) -> int:
    """disc(f) = (-1)^(D(D-1)/2) Res(f, f') / lc(f) mod p, D = deg f.

    Degree 0 and 1 have empty root-difference product, so the result is 1.
    """
    f = _trim(f)
    if not f:
        raise ValueError("discriminant of the zero polynomial")
    D = len(f) - 1
    if D <= 1:
        return 1
    fp = poly_deriv(f, p)
    if not fp:
        return 0
    r = resultant(f, fp, p)
    sign = -1 if (D * (D - 1) // 2) % 2 else 1
    return sign * r * pow(f[-1], p - 2, p) % p


def _f0y(m: int, n: int, A: int, B: int, p: int):
    """F(0, Y) at s = 1, i.e. (Y^m - A)^n - (Y^n - B)^m over F_p."""
    left = [0] * (m + 1)
    left[0] = -A % p
    left[m] = 1
    right = [0] * (n + 1)
    right[0] = -B % p
    right[n] = 1
    return poly_sub(poly_pow(left, n, p), poly_pow(right, m, p), p)


def _validate_family(m: int, n: int, p: int):
    if not (1 <= m < n):
        raise ValueError(f"need 1 <= m < n, got m={m}, n={n}")
    if gcd(m, n) != 1:
        raise ValueError(f"m={m} and n={n} must be coprime")
    if (m * n * (n - m)) % p == 0:
        raise ValueError(f"characteristic {p} divides m*n*(n-m)")


def discriminant_f0y(m: int, n: int, A: int, B: int, p) -> int:
    """Discriminant of the Y-fiber F(0, Y) of the s = 1 curve."""
    mod = prime_modulus(p)
    _validate_family(m, n, mod.p)
    f0 = _f0y(m, n, A % mod.p, B % mod.p, mod.p)
    if not f0:
        raise ValueError("F(0, Y) is identically zero")
    return discriminant(f0, mod.p)


def _cond_products(m: int, n: int, A: int, B: int, field, roots):
    """Products of the root-of-unity degeneracy factors, as field elements.

    First: prod over (n-m)-th roots z != 1 of (z^n - 1)^m A^n - (z^m - 1)^n B^m.
    Second: prod over pairs (z1, z2) of (1 + z1^n - z2^n)^m A^n - (1 + z1^m - z2^m)^n B^m,
    skipping pairs where both inner constants vanish (the factor is not a
    genuine condition there).
    """
    p = field.base.p
    an = field.embed(pow(A, n, p))
    bm = field.embed(pow(B, m, p))
    one = field.one()
    first = one
    for z in roots[1:]:  # roots[0] is the identity
        zn = field.pow(z, n)
        zm = field.pow(z, m)
        term = field.sub(
            field.mul(field.pow(field.sub(zn, one), m), an),
            field.mul(field.pow(field.sub(zm, one), n), bm),
        )
        first = field.mul(first, term)
    second = one
    for z1 in roots:
        z1n = field.pow(z1, n)
        z1m = field.pow(z1, m)
        for z2 in roots:
            c1 = field.sub(field.add(one, z1n), field.pow(z2, n))
            c2 = field.sub(field.add(one, z1m), field.pow(z2, m))
            if c1 == field.zero() and c2 == field.zero():
                continue
            term = field.sub(
                field.mul(field.pow(c1, m), an),
                field.mul(field.pow(c2, n), bm),
            )
            second = field.mul(second, term)
    return first, second


def delta_eval(m: int, n: int, A: int, B: int, p) -> int:
    """Pointwise product of the degeneracy conditions for the (m, n, A, B) curve.

    Nonzero exactly when every condition holds: the factors are m*n,
    (-A)^n - (-B)^m, A^n - B^m, the two root-of-unity products over the
    (n-m)-th roots of unity (taken in their splitting field; the products lie
    in F_p), and the discriminant of F(0, Y).
    """
    mod = prime_modulus(p)
    P = mod.p
    _validate_family(m, n, P)
    A %= P
    B %= P
    out = m * n % P
    out = out * ((pow(-A % P, n, P) - pow(-B % P, m, P)) % P) % P
    out = out * ((pow(A, n, P) - pow(B, m, P)) % P) % P
    field, roots = roots_of_unity(mod, n - m)
    first, second = _cond_products(m, n, A, B, field, roots)
    out = out * field.to_base(first) % P
    out = out * field.to_base(second) % P
    if A == 0 and B == 0:
        # F(0, Y) degenerates to the zero polynomial; the A^n - B^m factor
        # above is already zero, so the product is zero without it
        return 0
    return out * discriminant_f0y(m, n, A, B, mod) % P


@dataclass(frozen=True)
class CurveSpec:
    """Parameters (p, m, n, s, A, B) of one curve in the family."""

    p: int
    m: int
    n: int
    s: int
    A: int
    B: int

    def __post_init__(self):
        mod = prime_modulus(self.p)
        if not (1 <= self.m < self.n):
            raise ValueError(f"need 1 <= m < n, got m={self.m}, n={self.n}")
        if self.s < 1:
            raise ValueError("s must be >= 1")
        if self.s % mod.p == 0:
            raise ValueError("s must not be divisible by p")
        # coprimality and characteristic restrictions belong to delta_eval;
        # point counting is meaningful for any member of the family
        object.__setattr__(self, "A", self.A % mod.p)
        object.__setattr__(self, "B", self.B % mod.p)

    @property
    def degree(self) -> int:
        return self.s * self.m * self.n


def count_points(spec: CurveSpec) -> int:
    """Number of affine F_p-points of F(X, Y) = 0, by direct grid evaluation."""
    p = spec.p
    if p > POINT_COUNT_LIMIT:
        raise GuardExceeded("p", p, POINT_COUNT_LIMIT)
    sm = spec.s * spec.m
    sn = spec.s * spec.n
    psm = np.array([pow(x, sm, p) for x in range(p)], dtype=np.int64)
    psn = np.array([pow(x, sn, p) for x in range(p)], dtype=np.int64)
    pw_n = np.array([pow(x, spec.n, p) for x in range(p)], dtype=np.int64)
    pw_m = np.array([pow(x, spec.m, p) for x in range(p)], dtype=np.int64)
    u = (psm[:, None] + psm[None, :] - spec.A) % p
    v = (psn[:, None] + psn[None, :] - spec.B) % p
    return int(np.count_nonzero(pw_n[u] == pw_m[v]))


@dataclass(frozen=True)
class CurveBoundReport:
    """Point count versus the generic degree-d bound for one curve."""

    spec: CurveSpec
    count: int
    bound: float
    ratio: float
    delta: int
    in_hypothesis: bool
    holds: object  # True/False, or None when the bound is not asserted


def check_curve_bound(spec: CurveSpec) -> CurveBoundReport:
    """Count points and compare against the generic bound 4d^(4/3)p^(2/3) + 3p.

    The bound is only asserted when d < p and the degeneracy product is
    nonzero; otherwise holds is None and the count is reported as is.
    """
    from .exponents import curve_bound

    count = count_points(spec)
    d = spec.degree
    bound = curve_bound(d, spec.p)
    delta = delta_eval(spec.m, spec.n, spec.A, spec.B, spec.p)
    in_hypothesis = d < spec.p
    holds = (count <= bound) if (in_hypothesis and delta != 0) else None
    return CurveBoundReport(spec, count, bound, count / bound, delta, in_hypothesis, holds)
