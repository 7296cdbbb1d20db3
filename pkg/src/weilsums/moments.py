"""Exact moment counts for power-sum equation systems over multiplicative subgroups.

Q_k counts 2k-tuples (u_1..u_k, v_1..v_k) in G^2k solving the diagonal system
sum_i u_i^{n_j} = sum_i v_i^{n_j} for j = 1..r.  Two independent routes are
provided: direct enumeration of k-tuples and iterated cyclic convolution.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd

from . import convolution
from .field import GuardExceeded, prime_modulus
from .sums import SparsePolynomial, subgroup_sum

BRUTE_FORCE_LIMIT = 10**8
DENSE_SIZE_LIMIT = 10**8


def _validate_exponents(nvec) -> tuple:
    nvec = tuple(nvec)
    if not nvec:
        raise ValueError("need at least one exponent")
    last = 0
    for n in nvec:
        if not isinstance(n, int) or n <= last:
            raise ValueError(f"exponents must be strictly increasing positive ints: {nvec}")
        last = n
    return nvec


def _power_vectors(G, nvec, coeffs=None):
    """(a_1 g^{n_1}, ..., a_r g^{n_r}) mod p for each g in G, in generator order."""
    p = G.modulus.p
    if coeffs is None:
        coeffs = (1,) * len(nvec)
    return [tuple(a * pow(g, n, p) % p for n, a in zip(nvec, coeffs)) for g in G.elements]


def q_bruteforce(G, nvec, k: int) -> int:
    """Q_k by direct enumeration of all tau^k power-sum tuples."""
    nvec = _validate_exponents(nvec)
    if k < 1:
        raise ValueError("k must be >= 1")
    if G.tau**k > BRUTE_FORCE_LIMIT:
        raise GuardExceeded("tau^k", G.tau**k, BRUTE_FORCE_LIMIT)
    p = G.modulus.p
    counts: dict = {}
    if len(nvec) == 1:
        n0 = nvec[0]
        powers = [pow(g, n0, p) for g in G.elements]
        for t in product(powers, repeat=k):
            key = sum(t) % p
            counts[key] = counts.get(key, 0) + 1
    else:
        vecs = _power_vectors(G, nvec)
        for t in product(vecs, repeat=k):
            key = tuple(sum(col) % p for col in zip(*t))
            counts[key] = counts.get(key, 0) + 1
    return sum(c * c for c in counts.values())


def _hist_from_vectors(vecs, r: int) -> dict:
    hist: dict = {}
    if r == 1:
        for v in vecs:
            hist[v[0]] = hist.get(v[0], 0) + 1
    else:
        for v in vecs:
            hist[v] = hist.get(v, 0) + 1
    return hist


def q_convolution(G, nvec, k: int) -> int:
    """Q_k via k-fold cyclic self-convolution of the power-vector histogram."""
    nvec = _validate_exponents(nvec)
    if k < 1:
        raise ValueError("k must be >= 1")
    r = len(nvec)
    if r > 2:
        raise GuardExceeded("r", r, 2)
    p = G.modulus.p
    if p**r > DENSE_SIZE_LIMIT:
        raise GuardExceeded("p^r", p**r, DENSE_SIZE_LIMIT)
    hist = _hist_from_vectors(_power_vectors(G, nvec), r)
    result = convolution.self_convolution_power(hist, k, p, r, value_bound=G.tau**k)
    return convolution.sum_of_squares(result)


@dataclass(frozen=True)
class PowerVectorHistogram:
    """Counts J(lam) of k-tuples from G whose weighted power sums equal lam."""

    p: int
    k: int
    counts: dict

    def mass(self) -> int:
        return sum(self.counts.values())

    def sum_of_squares(self) -> int:
        return sum(c * c for c in self.counts.values())

    def __getitem__(self, key) -> int:
        return self.counts.get(key, 0)


def j_histogram(G, nvec, coeffs, k: int) -> PowerVectorHistogram:
    """Histogram of (sum_i a_1 g_i^{n_1}, ..., sum_i a_r g_i^{n_r}) over k-tuples."""
    nvec = _validate_exponents(nvec)
    r = len(nvec)
    coeffs = tuple(c % G.modulus.p for c in coeffs)
    if len(coeffs) != r:
        raise ValueError("need one coefficient per exponent")
    if any(c == 0 for c in coeffs):
        raise ValueError("coefficients must be nonzero mod p")
    if k < 1:
        raise ValueError("k must be >= 1")
    if r > 2:
        raise GuardExceeded("r", r, 2)
    p = G.modulus.p
    if p**r > DENSE_SIZE_LIMIT:
        raise GuardExceeded("p^r", p**r, DENSE_SIZE_LIMIT)
    hist = _hist_from_vectors(_power_vectors(G, nvec, coeffs), r)
    result = convolution.self_convolution_power(hist, k, p, r, value_bound=G.tau**k)
    if not isinstance(result, dict):
        it = ((idx, int(c)) for idx, c in zip(product(range(p), repeat=r), result.ravel().tolist()))
        result = {k_: c for k_, c in it if c}
    if r == 1:
        counts = {k_ if isinstance(k_, int) else k_[0]: c for k_, c in result.items()}
    else:
        counts = dict(result)
    return PowerVectorHistogram(p, k, counts)


def t3_count(p, s: int, m: int, n: int) -> int:
    """Number of 6-tuples in (F_p*)^6 with matching sm-th and sn-th power sums.

    Counts x_1..x_6 with x_1^{sm}+x_2^{sm}+x_3^{sm} = x_4^{sm}+x_5^{sm}+x_6^{sm}
    and the same for exponent sn.
    """
    mod = prime_modulus(p)
    if s < 1:
        raise ValueError("s must be >= 1")
    if not (1 <= m < n):
        raise ValueError("need 1 <= m < n")
    P = mod.p
    if P**2 > DENSE_SIZE_LIMIT:
        raise GuardExceeded("p^2", P**2, DENSE_SIZE_LIMIT)
    hist: dict = {}
    for x in range(1, P):
        key = (pow(x, s * m, P), pow(x, s * n, P))
        hist[key] = hist.get(key, 0) + 1
    result = convolution.self_convolution_power(hist, 3, P, 2, value_bound=(P - 1) ** 3)
    return convolution.sum_of_squares(result)


def t3_gcd_reduction(m: int, n: int, p) -> tuple:
    """Reduce (m, n) by d = gcd(m, n); returns (m/d, n/d, e) with e = gcd(d, p-1).

    The count for (m, n) is at most e**6 times the count for (m/d, n/d),
    because x -> x^d is e-to-1 onto its image.
    """
    P = prime_modulus(p).p
    if not (1 <= m < n):
        raise ValueError("need 1 <= m < n")
    d = gcd(m, n)
    return m // d, n // d, gcd(d, P - 1)


@dataclass(frozen=True)
class MomentInequalityReport:
    """One checked instance of the moment bound |S|^(2kl) <= p^r tau^(2kl-2k-2l) Q_k Q_l."""

    p: int
    tau: int
    k: int
    l: int
    magnitude: float
    lhs: float
    rhs: Fraction
    q_k: int
    q_l: int
    holds: bool


def verify_moment_inequality(G, f: SparsePolynomial, k: int, l: int) -> MomentInequalityReport:
    """Check |S(G;f)|^(2kl) <= p^r tau^(2kl-2k-2l) Q_k Q_l for one instance."""
    if k < 1 or l < 1:
        raise ValueError("k and l must be >= 1")
    if not f.terms:
        raise ValueError("polynomial must have at least one nonconstant term")
    p = G.modulus.p
    if any(c % p == 0 for c in f.coefficients()):
        raise ValueError("coefficients must be nonzero mod p")
    nvec = f.exponents()
    r = len(nvec)
    q_k = _q_best_route(G, nvec, k)
    q_l = q_k if l == k else _q_best_route(G, nvec, l)
    mag = subgroup_sum(G, f).magnitude
    e = 2 * k * l
    lhs = mag**e
    rhs = Fraction(p) ** r * Fraction(G.tau) ** (e - 2 * k - 2 * l) * q_k * q_l
    holds = lhs <= float(rhs) * (1 + 1e-6)
    return MomentInequalityReport(p, G.tau, k, l, mag, lhs, rhs, q_k, q_l, holds)


def _q_best_route(G, nvec, k: int) -> int:
    """Prefer the convolution route, fall back to enumeration when guards block it."""
    try:
        return q_convolution(G, nvec, k)
    except GuardExceeded:
        return q_bruteforce(G, nvec, k)


def xi_exponent(r: int, k: int, eta, eps) -> Fraction:
    """Saving exponent min(r, eta*(2k-6) + 1 + 7*eps/3) for one induction step."""
    from .exponents import as_fraction

    if r < 2:
        raise ValueError("r must be >= 2")
    if k < 3:
        raise ValueError("k must be >= 3")
    eta = as_fraction(eta)
    eps = as_fraction(eps)
    if eta <= 0:
        raise ValueError("eta must be positive")
    if eps < 0:
        raise ValueError("eps must be nonnegative")
    return min(Fraction(r), eta * (2 * k - 6) + 1 + Fraction(7, 3) * eps)
