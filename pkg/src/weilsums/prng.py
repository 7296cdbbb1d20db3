"""Pseudorandom sequences from subgroup orbits: f(theta^x) and (a*theta^x + b)^-1.

Excluded inversive terms (where a*theta^x + b = 0) are carried as None, an
out-of-band sentinel, so downstream statistics skip them instead of folding a
fake residue into the distribution.
"""

import struct
from dataclasses import dataclass
from math import fsum

from .sums import SparsePolynomial, _orbit_residues


@dataclass(frozen=True)
class GeneratorSequence:
    """Emitted residues in [0, p), with None marking excluded terms."""

    p: int
    period: int
    source: str
    residues: tuple

    def __len__(self):
        return len(self.residues)

    @property
    def excluded_count(self) -> int:
        return sum(1 for v in self.residues if v is None)

    def included(self) -> list:
        return [v for v in self.residues if v is not None]


def power_generator(G, f: SparsePolynomial, count: int) -> GeneratorSequence:
    """The sequence f(theta^x) mod p for x = 1..count."""
    if count < 1:
        raise ValueError("count must be >= 1")
    residues = _orbit_residues(G.modulus.p, G.theta, f, count)
    return GeneratorSequence(G.modulus.p, G.tau, f"power f={f.format()}", tuple(residues))


def inversive_generator(G, a: int, b: int, count: int) -> GeneratorSequence:
    """The sequence (a*theta^x + b)^-1 mod p for x = 1..count; a must be nonzero."""
    if count < 1:
        raise ValueError("count must be >= 1")
    p = G.modulus.p
    a %= p
    b %= p
    if a == 0:
        raise ValueError("a must be nonzero mod p")
    theta = G.theta
    out = []
    g = 1
    for _ in range(count):
        g = g * theta % p
        t = (a * g + b) % p
        out.append(None if t == 0 else pow(t, p - 2, p))
    return GeneratorSequence(p, G.tau, f"inversive a={a} b={b}", tuple(out))


@dataclass(frozen=True)
class EquidistributionReport:
    """Normalized character-sum statistics of a residue sequence."""

    harmonics: int
    per_harmonic: tuple  # |sum_x e_p(h*s_x)| / N for h = 1..H
    max_harmonic: float
    serial_correlation: float
    included_count: int
    excluded_count: int


def equidistribution_report(seq: GeneratorSequence, harmonics: int = 10) -> EquidistributionReport:
    """Max normalized character sum over h = 1..harmonics, plus a lag-1 statistic.

    Purely descriptive; excluded terms are skipped.
    """
    if harmonics < 1:
        raise ValueError("harmonics must be >= 1")
    from .field import prime_modulus

    mod = prime_modulus(seq.p)
    vals = seq.included()
    n = len(vals)
    if n == 0:
        raise ValueError("sequence has no included terms")
    tab = mod.char_table()
    char = mod.character
    per = []
    p = seq.p
    for h in range(1, harmonics + 1):
        if tab is not None:
            parts = [tab[h * v % p] for v in vals]
        else:
            parts = [char(h * v) for v in vals]
        s = complex(fsum(z.real for z in parts), fsum(z.imag for z in parts))
        per.append(abs(s) / n)
    if n >= 2:
        if tab is not None:
            parts = [tab[(b - a) % p] for a, b in zip(vals, vals[1:])]
        else:
            parts = [char(b - a) for a, b in zip(vals, vals[1:])]
        s = complex(fsum(z.real for z in parts), fsum(z.imag for z in parts))
        serial = abs(s) / (n - 1)
    else:
        serial = 0.0
    return EquidistributionReport(
        harmonics, tuple(per), max(per), serial, n, seq.excluded_count
    )


def write_csv(seq: GeneratorSequence, stream):
    """index,value rows with LF endings; excluded terms get an empty value cell."""
    stream.write("index,value\n")
    for i, v in enumerate(seq.residues, start=1):
        stream.write(f"{i},{'' if v is None else v}\n")


def write_u64le(seq: GeneratorSequence, stream):
    """Included residues as packed little-endian u64 words (excluded terms skipped)."""
    for v in seq.included():
        stream.write(struct.pack("<Q", v))
