"""Prime fields, multiplicative subgroups, extension fields, and additive characters."""

import cmath
import math

MAX_PRIME = 1 << 62
CHAR_TABLE_LIMIT = 1 << 20


class GuardExceeded(ValueError):
    """A documented size guard was exceeded; carries the guard name."""

    def __init__(self, guard: str, actual, limit):
        self.guard = guard
        self.actual = actual
        self.limit = limit
        super().__init__(f"guard {guard}: {actual} exceeds limit {limit}")

# Deterministic Miller-Rabin witness set, valid for all n < 3.3 * 10**24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test for n < 2**64."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int) -> int:
    """Find a nontrivial factor of composite odd n (Brent's cycle variant)."""
    if n % 2 == 0:
        return 2
    # Deterministic parameter sweep; every composite below 2**62 falls to some (y0, c).
    for c in range(1, 64):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"factorization failed for {n}")


def factorize(n: int) -> dict:
    """Prime factorization of n >= 1 as {prime: multiplicity}."""
    if n < 1:
        raise ValueError("factorize expects n >= 1")
    out: dict = {}
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
        while n % q == 0:
            out[q] = out.get(q, 0) + 1
            n //= q
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_brent(m)
        stack.append(d)
        stack.append(m // d)
    return out


def divisors(n: int) -> list:
    """All positive divisors of n >= 1, sorted ascending."""
    out = [1]
    for q, mult in factorize(n).items():
        out = [d * q**i for d in out for i in range(mult + 1)]
    return sorted(out)


def multiplicative_order(a: int, p: int) -> int:
    """Order of a in F_p*; raises on a divisible by p."""
    a %= p
    if a == 0:
        raise ValueError("zero has no multiplicative order")
    order = p - 1
    for q in factorize(p - 1):
        while order % q == 0 and pow(a, order // q, p) == 1:
            order //= q
    return order


def least_primitive_root(p: int) -> int:
    """Smallest positive primitive root modulo p."""
    if p == 2:
        return 1
    fac = factorize(p - 1)
    exps = [(p - 1) // q for q in fac]
    for g in range(2, p):
        if all(pow(g, e, p) != 1 for e in exps):
            return g
    raise ArithmeticError(f"no primitive root found modulo {p}")


_unit_tables: dict = {}


def _unit_table(den: int):
    """Table of den-th roots of unity exp(2*pi*i*k/den), cached per denominator."""
    tab = _unit_tables.get(den)
    if tab is None:
        step = math.tau / den
        half = den // 2
        # fold k into (-den/2, den/2] so the angle argument stays small
        tab = [cmath.exp(complex(0.0, step * (k if k <= half else k - den))) for k in range(den)]
        _unit_tables[den] = tab
    return tab


def unit_root(num: int, den: int) -> complex:
    """exp(2*pi*i*num/den) for integer num and den >= 1."""
    if den < 1:
        raise ValueError("denominator must be positive")
    k = num % den
    if den <= CHAR_TABLE_LIMIT:
        return _unit_table(den)[k]
    if 2 * k > den:
        k -= den
    return cmath.exp(complex(0.0, math.tau * k / den))


class PrimeModulus:
    """A prime p < 2**62 together with its additive character z -> exp(2*pi*i*z/p)."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not isinstance(p, int) or isinstance(p, bool):
            raise TypeError("modulus must be an int")
        if p < 2 or p >= MAX_PRIME:
            raise ValueError(f"modulus out of range: {p}")
        if not is_prime(p):
            raise ValueError(f"modulus must be prime: {p}")
        self.p = p

    def __repr__(self):
        return f"PrimeModulus({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeModulus) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeModulus", self.p))

    def reduce(self, a: int) -> int:
        return a % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def pow(self, a: int, e: int) -> int:
        return pow(a, e, self.p)

    def char_table(self):
        """Root-of-unity lookup table, or None when p is too large to tabulate."""
        if self.p <= CHAR_TABLE_LIMIT:
            return _unit_table(self.p)
        return None

    def character(self, z: int) -> complex:
        """Additive character exp(2*pi*i*z/p)."""
        return unit_root(z, self.p)


_modulus_cache: dict = {}


def prime_modulus(p) -> PrimeModulus:
    """Coerce an int (or PrimeModulus) to a cached PrimeModulus."""
    if isinstance(p, PrimeModulus):
        return p
    m = _modulus_cache.get(p)
    if m is None:
        m = PrimeModulus(p)
        _modulus_cache[p] = m
    return m


class SubgroupSpec:
    """Multiplicative subgroup of F_p* of order tau, generated by theta."""

    def __init__(self, modulus, tau: int, theta: int):
        self.modulus = prime_modulus(modulus)
        p = self.modulus.p
        if tau < 1 or (p - 1) % tau != 0:
            raise ValueError(f"tau={tau} does not divide p-1={p - 1}")
        theta %= p
        if theta == 0:
            raise ValueError("generator must be a unit")
        # theta must have order exactly tau, not a proper divisor
        if pow(theta, tau, p) != 1:
            raise ValueError(f"theta={theta} does not have order {tau} mod {p}")
        for q in factorize(tau):
            if pow(theta, tau // q, p) == 1:
                raise ValueError(f"theta={theta} has order dividing {tau // q}, not {tau}")
        self.tau = tau
        self.theta = theta
        self._elements = None

    @property
    def p(self) -> int:
        return self.modulus.p

    @property
    def cofactor(self) -> int:
        """Index s = (p-1)/tau of the subgroup in F_p*."""
        return (self.modulus.p - 1) // self.tau

    def enumerate(self):
        """Yield theta^1, theta^2, ..., theta^tau (= 1) in generator order."""
        p = self.modulus.p
        g = 1
        for _ in range(self.tau):
            g = g * self.theta % p
            yield g

    @property
    def elements(self) -> tuple:
        if self._elements is None:
            self._elements = tuple(self.enumerate())
        return self._elements

    def __contains__(self, x: int) -> bool:
        x %= self.modulus.p
        return x != 0 and pow(x, self.tau, self.modulus.p) == 1

    def __repr__(self):
        return f"SubgroupSpec(p={self.modulus.p}, tau={self.tau}, theta={self.theta})"


def subgroup(p, tau: int) -> SubgroupSpec:
    """Canonical order-tau subgroup of F_p*, generated by g**((p-1)/tau) for the least primitive root g."""
    mod = prime_modulus(p)
    if tau < 1 or (mod.p - 1) % tau != 0:
        raise ValueError(f"tau={tau} does not divide p-1={mod.p - 1}")
    g = least_primitive_root(mod.p)
    theta = pow(g, (mod.p - 1) // tau, mod.p)
    return SubgroupSpec(mod, tau, theta)


def additive_character(p, z: int) -> complex:
    """exp(2*pi*i*z/p) on F_p."""
    return prime_modulus(p).character(z)


# ---------------------------------------------------------------------------
# extension fields F_{p^j}, elements represented as coefficient tuples
# (c_0, ..., c_{j-1}) meaning c_0 + c_1*X + ... modulo the defining polynomial


class ExtensionField:
    """F_{p^j} = F_p[X]/(f) for the lexicographically least monic irreducible f of degree j."""

    def __init__(self, modulus, degree: int, defining=None):
        self.base = prime_modulus(modulus)
        if degree < 1:
            raise ValueError("degree must be >= 1")
        self.degree = degree
        p = self.base.p
        if defining is None:
            defining = _least_irreducible(p, degree)
        else:
            defining = tuple(c % p for c in defining)
            if len(defining) != degree + 1 or defining[-1] != 1:
                raise ValueError("defining polynomial must be monic of the stated degree")
            if not _is_irreducible(defining, p):
                raise ValueError("defining polynomial is reducible")
        self.defining = defining
        self.order = p**degree
        # X^(degree+i) reduced mod f, for schoolbook reduction of products
        self._red = _reduction_rows(defining, p)

    def __repr__(self):
        return f"ExtensionField(p={self.base.p}, degree={self.degree})"

    def zero(self) -> tuple:
        return (0,) * self.degree

    def one(self) -> tuple:
        return (1,) + (0,) * (self.degree - 1)

    def embed(self, c: int) -> tuple:
        """Image of the base-field element c."""
        return (c % self.base.p,) + (0,) * (self.degree - 1)

    def is_base(self, a) -> bool:
        return all(c == 0 for c in a[1:])

    def to_base(self, a) -> int:
        if not self.is_base(a):
            raise ValueError(f"element {a} does not lie in the base field")
        return a[0]

    def add(self, a, b) -> tuple:
        p = self.base.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b) -> tuple:
        p = self.base.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a) -> tuple:
        p = self.base.p
        return tuple(-x % p for x in a)

    def mul(self, a, b) -> tuple:
        p = self.base.p
        j = self.degree
        if j == 1:
            return (a[0] * b[0] % p,)
        prod = [0] * (2 * j - 1)
        for i, x in enumerate(a):
            if x:
                for k, y in enumerate(b):
                    prod[i + k] += x * y
        out = [c % p for c in prod[:j]]
        for i in range(j, 2 * j - 1):
            c = prod[i] % p
            if c:
                row = self._red[i - j]
                for k in range(j):
                    out[k] += c * row[k]
        return tuple(c % p for c in out)

    def pow(self, a, e: int) -> tuple:
        if e < 0:
            return self.pow(self.inv(a), -e)
        out = self.one()
        base = a
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def inv(self, a) -> tuple:
        if a == self.zero():
            raise ZeroDivisionError("inverse of zero")
        return self.pow(a, self.order - 2)

    def frobenius(self, a) -> tuple:
        """a -> a**p, the base-field Frobenius."""
        return self.pow(a, self.base.p)

    def element_order(self, a) -> int:
        """Order of a in the multiplicative group of the field."""
        if a == self.zero():
            raise ValueError("zero has no multiplicative order")
        order = self.order - 1
        for q in factorize(order):
            while order % q == 0 and self.pow(a, order // q) == self.one():
                order //= q
        return order


def _reduction_rows(defining, p: int):
    """Rows expressing X^(deg+i) mod f in the monomial basis, i = 0..deg-2."""
    j = len(defining) - 1
    rows = []
    cur = [(-c) % p for c in defining[:j]]  # X^j mod f
    rows.append(tuple(cur))
    for _ in range(j - 2):
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for k in range(j):
                cur[k] = (cur[k] + top * rows[0][k]) % p
        rows.append(tuple(cur))
    return rows


def _poly_mulmod(a, b, f, p):
    """(a * b) mod f over F_p, dense ascending coefficient lists."""
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for k, y in enumerate(b):
                prod[i + k] = (prod[i + k] + x * y) % p
    j = len(f) - 1
    for i in range(len(prod) - 1, j - 1, -1):
        c = prod[i]
        if c:
            prod[i] = 0
            for k in range(j):
                prod[i - j + k] = (prod[i - j + k] - c * f[k]) % p
    prod = prod[:j]
    while prod and prod[-1] == 0:
        prod.pop()
    return prod


def _poly_powmod(a, e, f, p):
    out = [1]
    base = list(a)
    while e:
        if e & 1:
            out = _poly_mulmod(out, base, f, p)
        base = _poly_mulmod(base, base, f, p)
        e >>= 1
    return out


def _poly_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        # reduce a mod b in place
        inv = pow(b[-1], p - 2, p)
        while len(a) >= len(b) and a:
            c = a[-1] * inv % p
            if c:
                off = len(a) - len(b)
                for k in range(len(b)):
                    a[off + k] = (a[off + k] - c * b[k]) % p
            a.pop()
            while a and a[-1] == 0:
                a.pop()
        a, b = b, a
    return a


def _is_irreducible(f, p: int) -> bool:
    """Rabin irreducibility test for monic f of degree >= 1 over F_p."""
    j = len(f) - 1
    if j == 1:
        return True
    if f[0] == 0:  # divisible by X
        return False
    x = [0, 1]
    for q in factorize(j):
        h = _poly_powmod(x, p ** (j // q), f, p)
        # gcd(X^(p^(j/q)) - X, f) must be trivial
        diff = list(h) + [0] * (2 - len(h))
        diff[1] = (diff[1] - 1) % p
        while diff and diff[-1] == 0:
            diff.pop()
        g = _poly_gcd(f, diff, p)
        if len(g) != 1:
            return False
    h = _poly_powmod(x, p**j, f, p)
    diff = list(h) + [0] * (2 - len(h))
    diff[1] = (diff[1] - 1) % p
    while diff and diff[-1] == 0:
        diff.pop()
    return not diff


_irreducible_cache: dict = {}


def _least_irreducible(p: int, j: int) -> tuple:
    """Lexicographically least monic irreducible of degree j over F_p.

    Candidates X^j + c_{j-1} X^{j-1} + ... + c_0 are ordered by the tuple
    (c_{j-1}, ..., c_1, c_0).
    """
    key = (p, j)
    cached = _irreducible_cache.get(key)
    if cached is not None:
        return cached
    if j == 1:
        out = (0, 1)  # f = X
        _irreducible_cache[key] = out
        return out
    for idx in range(p**j):
        rev = []
        t = idx
        for _ in range(j):
            rev.append(t % p)
            t //= p
        # rev is (c_0, ..., c_{j-1}) read off little-endian from idx so that
        # idx orders candidates by (c_{j-1}, ..., c_0)
        f = tuple(rev) + (1,)
        if _is_irreducible(f, p):
            _irreducible_cache[key] = f
            return f
    raise ArithmeticError(f"no irreducible polynomial of degree {j} found over F_{p}")


def roots_of_unity(p, e: int):
    """All e-th roots of unity over F_p, as elements of the splitting field F_{p^j}.

    Returns (field, roots) where roots = [w^0, w^1, ..., w^(e-1)] for a
    deterministic primitive e-th root w (roots[0] is the identity).
    """
    mod = prime_modulus(p)
    if e < 1:
        raise ValueError("e must be >= 1")
    if e % mod.p == 0:
        raise ValueError(f"e={e} is divisible by the characteristic {mod.p}")
    j = 1
    acc = mod.p % e
    while acc != 1 % e:
        acc = acc * mod.p % e
        j += 1
        if j > 64:
            raise ArithmeticError("splitting degree exceeds supported range")
    field = ExtensionField(mod, j)
    if e == 1:
        return field, [field.one()]
    cofactor = (field.order - 1) // e
    prime_parts = [e // q for q in factorize(e)]
    # scan field elements in index order until one powers to a primitive root
    for idx in range(1, field.order):
        rev = []
        t = idx
        for _ in range(j):
            rev.append(t % mod.p)
            t //= mod.p
        w = field.pow(tuple(rev), cofactor)
        if w == field.one():
            continue
        if all(field.pow(w, m) != field.one() for m in prime_parts):
            roots = [field.one()]
            for _ in range(e - 1):
                roots.append(field.mul(roots[-1], w))
            return field, roots
    raise ArithmeticError(f"no primitive {e}-th root of unity found over F_{mod.p}")
