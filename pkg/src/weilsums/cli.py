"""Command-line front end: sum evaluation, moment counting, curve analysis,
exponent tables, sequence export, and the bound-verification sweep harness.

Every subcommand is deterministic: identical arguments (including --seed)
produce byte-identical output.  Exit codes: 0 success, 1 assertion failure,
2 usage or guard error.
"""

import argparse
import json
import math
import random
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import curves, exponents, moments, prng, sums
from .field import GuardExceeded, divisors, is_prime, subgroup
from .sums import SparsePolynomial


def _primes_in(lo: int, hi: int) -> list:
    return [p for p in range(max(2, lo), hi + 1) if is_prime(p)]


def _random_sparse(rng, p: int, r: int, max_exp: int) -> SparsePolynomial:
    exps = sorted(rng.sample(range(1, max(max_exp, r) + 1), r))
    return SparsePolynomial(tuple((n, rng.randint(1, p - 1)) for n in exps))


@dataclass(frozen=True)
class SweepConfig:
    suite: str
    pmin: int
    pmax: int
    eps: Fraction
    ceiling: float
    seed: int


@dataclass(frozen=True)
class ReportRow:
    suite: str
    p: int
    tau: object  # int, or None when the row has no subgroup
    params: str
    measured: object  # int or float
    bound: object
    ratio: float
    in_admissible_range: object  # bool or None
    passed: bool


_CSV_HEADER = "suite,p,tau,params,measured,bound,ratio,in_admissible_range,passed"


def _num(x) -> str:
    if isinstance(x, int):
        return str(x)
    return format(x, ".12g")


def _flag(x) -> str:
    if x is None:
        return ""
    return "true" if x else "false"


def _row_csv(row: ReportRow) -> str:
    return ",".join(
        (
            row.suite,
            str(row.p),
            "" if row.tau is None else str(row.tau),
            row.params,
            _num(row.measured),
            _num(row.bound),
            format(row.ratio, ".6g"),
            _flag(row.in_admissible_range),
            _flag(row.passed),
        )
    )


def _row_json(row: ReportRow) -> str:
    return json.dumps(
        {
            "suite": row.suite,
            "p": row.p,
            "tau": row.tau,
            "params": row.params,
            "measured": row.measured,
            "bound": row.bound,
            "ratio": float(format(row.ratio, ".6g")),
            "in_admissible_range": row.in_admissible_range,
            "passed": row.passed,
        },
        sort_keys=True,
    )


# ---------------------------------------------------------------------------
# verify suites; each yields ReportRow in canonical (p, tau, params) order


def _window(p: int, tau: int, eps) -> bool:
    return exponents.admissible_range(p, tau, eps).inside


def _suite_gauss(cfg: SweepConfig, rng):
    f = SparsePolynomial(((2, 1),))
    for p in _primes_in(max(3, cfg.pmin), cfg.pmax):
        s = sums.complete_sum(p, f)
        bound = math.sqrt(p)
        passed = abs(s.magnitude - bound) <= 1e-9 * bound
        yield ReportRow("gauss", p, None, "f=1*x^2", s.magnitude, bound, s.magnitude / bound, None, passed)


def _suite_identity(cfg: SweepConfig, rng):
    for p in _primes_in(cfg.pmin, cfg.pmax):
        full = subgroup(p, p - 1)
        for tau in divisors(p - 1):
            G = subgroup(p, tau)
            cof = (p - 1) // tau
            win = _window(p, tau, cfg.eps)
            for i in range(20):
                f = _random_sparse(rng, p, rng.randint(1, 3), 3 * tau + 3)
                lhs = sums.subgroup_sum(G, f).value
                composed = SparsePolynomial(tuple((n * cof, c) for n, c in f.terms), f.constant)
                rhs = sums.subgroup_sum(full, composed).value * tau / (p - 1)
                diff = abs(lhs - rhs)
                bound = 1e-8 * p
                yield ReportRow(
                    "identity", p, tau, f"i={i};f={f.format()}", diff, bound, diff / bound, win, diff <= bound
                )


_MOMENT_EXPS = ((1,), (1, 2), (2, 3), (1, 3))


def _suite_moments(cfg: SweepConfig, rng):
    for p in _primes_in(cfg.pmin, cfg.pmax):
        for tau in divisors(p - 1):
            G = subgroup(p, tau)
            win = _window(p, tau, cfg.eps)
            for k in (2, 3):
                for nvec in _MOMENT_EXPS:
                    qb = moments.q_bruteforce(G, nvec, k)
                    qc = moments.q_convolution(G, nvec, k)
                    nstr = "-".join(str(n) for n in nvec)
                    yield ReportRow(
                        "moments", p, tau, f"k={k};n={nstr}", qc, qb, qc / qb, win, qc == qb
                    )


def _suite_lemma31(cfg: SweepConfig, rng):
    pr = _primes_in(cfg.pmin, cfg.pmax)
    if not pr:
        return
    for i in range(100):
        p = rng.choice(pr)
        tau = rng.choice(divisors(p - 1))
        G = subgroup(p, tau)
        k = rng.choice((2, 3))
        l = rng.choice((2, 3))
        f = _random_sparse(rng, p, rng.choice((1, 2)), 10)
        rep = moments.verify_moment_inequality(G, f, k, l)
        rhs = float(rep.rhs)
        yield ReportRow(
            "lemma31",
            p,
            tau,
            f"i={i};k={k};l={l};f={f.format()}",
            rep.lhs,
            rhs,
            rep.lhs / rhs,
            _window(p, tau, cfg.eps),
            rep.holds,
        )


def _suite_q3(cfg: SweepConfig, rng):
    for p in _primes_in(cfg.pmin, cfg.pmax):
        for tau in divisors(p - 1):
            G = subgroup(p, tau)
            s = (p - 1) // tau
            win = _window(p, tau, cfg.eps)
            for m, n in ((1, 2), (2, 3)):
                t3v = moments.t3_count(p, s, m, n)
                expected = s**6 * moments.q_convolution(G, (m, n), 3)
                yield ReportRow(
                    "q3", p, tau, f"m={m};n={n};s={s}", t3v, expected, t3v / expected, win, t3v == expected
                )


def _suite_binomial(cfg: SweepConfig, rng):
    for p in _primes_in(cfg.pmin, cfg.pmax):
        for tau in divisors(p - 1):
            if not _window(p, tau, cfg.eps):
                continue
            G = subgroup(p, tau)
            bound = exponents.binomial_bound(p, tau)
            for i in range(10):
                m = rng.randint(1, 3 * tau)
                n = rng.randint(m + 1, 3 * tau + 1)
                f = SparsePolynomial(((m, rng.randint(1, p - 1)), (n, rng.randint(1, p - 1))))
                mag = sums.subgroup_sum(G, f).magnitude
                ratio = mag / bound
                yield ReportRow(
                    "binomial", p, tau, f"i={i};f={f.format()}", mag, bound, ratio, True, ratio <= cfg.ceiling
                )


def _suite_monomial(cfg: SweepConfig, rng):
    for p in _primes_in(cfg.pmin, cfg.pmax):
        for tau in divisors(p - 1):
            if not _window(p, tau, cfg.eps):
                continue
            G = subgroup(p, tau)
            bound = exponents.monomial_bound(p, tau)
            for i in range(10):
                f = SparsePolynomial(((rng.randint(1, 3 * tau), rng.randint(1, p - 1)),))
                mag = sums.subgroup_sum(G, f).magnitude
                ratio = mag / bound
                yield ReportRow(
                    "monomial", p, tau, f"i={i};f={f.format()}", mag, bound, ratio, True, ratio <= cfg.ceiling
                )


def _suite_theorem(cfg: SweepConfig, rng):
    for p in _primes_in(cfg.pmin, cfg.pmax):
        for tau in divisors(p - 1):
            rngw = exponents.admissible_range(p, tau, cfg.eps)
            if not rngw.above_lower:
                continue
            G = subgroup(p, tau)
            for i in range(10):
                f = _random_sparse(rng, p, rng.randint(1, 3), 12)
                bound = exponents.theorem_bound(p, tau, f.degree, cfg.eps)
                mag = sums.subgroup_sum(G, f).magnitude
                ratio = mag / bound
                yield ReportRow(
                    "theorem", p, tau, f"i={i};f={f.format()}", mag, bound, ratio, rngw.inside, ratio <= cfg.ceiling
                )


_CURVE_CELLS = ((1, 2, 1), (1, 2, 2), (2, 3, 1), (2, 3, 2), (1, 3, 1), (1, 3, 2))


def _suite_curve(cfg: SweepConfig, rng):
    for p in _primes_in(cfg.pmin, min(cfg.pmax, curves.POINT_COUNT_LIMIT)):
        for m, n, s in _CURVE_CELLS:
            if (m * n * (n - m)) % p == 0:
                continue
            if s * m * n >= p:
                continue
            found = 0
            tries = 0
            while found < 5 and tries < 400:
                tries += 1
                A = rng.randint(0, p - 1)
                B = rng.randint(0, p - 1)
                if curves.delta_eval(m, n, A, B, p) == 0:
                    continue
                found += 1
                rep = curves.check_curve_bound(curves.CurveSpec(p, m, n, s, A, B))
                yield ReportRow(
                    "curve",
                    p,
                    None,
                    f"m={m};n={n};s={s};A={A};B={B}",
                    rep.count,
                    rep.bound,
                    rep.ratio,
                    None,
                    rep.holds is True,
                )


_SUITES = {
    "gauss": _suite_gauss,
    "identity": _suite_identity,
    "moments": _suite_moments,
    "lemma31": _suite_lemma31,
    "q3": _suite_q3,
    "binomial": _suite_binomial,
    "monomial": _suite_monomial,
    "theorem": _suite_theorem,
    "curve": _suite_curve,
}


# ---------------------------------------------------------------------------
# subcommand handlers


def _print_sum(s: sums.SumValue, show_excluded: bool = False):
    v = s.value
    print(f"value = {v.real:+.12e} {v.imag:+.12e}i")
    print(f"magnitude = {s.magnitude:.12e}")
    print(f"terms = {s.term_count}")
    if show_excluded:
        print(f"excluded = {s.excluded}")


def cmd_sum(args) -> int:
    G = subgroup(args.p, args.tau)
    f = SparsePolynomial.parse(args.poly)
    if args.twist is not None:
        s = sums.twisted_sum(G, f, args.twist)
    elif args.incomplete is not None:
        s = sums.incomplete_subgroup_sum(G, f, args.incomplete)
    else:
        s = sums.subgroup_sum(G, f)
    _print_sum(s)
    return 0


def cmd_kloosterman(args) -> int:
    G = subgroup(args.p, args.tau)
    _print_sum(sums.kloosterman_subgroup_sum(G, args.a, args.b))
    return 0


def cmd_inversive(args) -> int:
    G = subgroup(args.p, args.tau)
    _print_sum(sums.inversive_subgroup_sum(G, args.a, args.b), show_excluded=True)
    return 0


def cmd_moment(args) -> int:
    G = subgroup(args.p, args.tau)
    nvec = tuple(int(t) for t in args.exps.split(","))
    if args.method == "brute":
        print(f"Q = {moments.q_bruteforce(G, nvec, args.k)}")
        return 0
    if args.method == "conv":
        print(f"Q = {moments.q_convolution(G, nvec, args.k)}")
        return 0
    qb = moments.q_bruteforce(G, nvec, args.k)
    qc = moments.q_convolution(G, nvec, args.k)
    print(f"bruteforce = {qb}")
    print(f"convolution = {qc}")
    print(f"agree = {_flag(qb == qc)}")
    return 0 if qb == qc else 1


def cmd_t3(args) -> int:
    print(f"T3 = {moments.t3_count(args.p, args.s, args.m, args.n)}")
    return 0


def cmd_curve(args) -> int:
    delta = curves.delta_eval(args.m, args.n, args.A, args.B, args.p)
    print(f"delta = {delta}")
    print(f"delta_nonzero = {_flag(delta != 0)}")
    if args.delta_only:
        return 0
    rep = curves.check_curve_bound(curves.CurveSpec(args.p, args.m, args.n, args.s, args.A, args.B))
    print(f"d = {rep.spec.degree}")
    print(f"count = {rep.count}")
    print(f"bound = {rep.bound:.12g}")
    print(f"ratio = {rep.ratio:.6g}")
    print(f"in_hypothesis = {_flag(rep.in_hypothesis)}")
    print(f"holds = {_flag(rep.holds) if rep.holds is not None else 'not-asserted'}")
    return 0


def cmd_eta(args) -> int:
    eps = exponents.as_fraction(args.eps)
    table = exponents.eta_table(args.nmax, eps)
    if args.json:
        for n, kap, et in table.rows:
            print(
                json.dumps(
                    {"n": n, "kappa": kap, "eta": str(et), "decimal": float(et)},
                    sort_keys=True,
                )
            )
        return 0
    print("n kappa eta decimal")
    for n, kap, et in table.rows:
        print(f"{n} {'-' if kap is None else kap} {et} {float(et):.10g}")
    return 0


def cmd_prng(args) -> int:
    G = subgroup(args.p, args.tau)
    if args.poly is not None:
        seq = prng.power_generator(G, SparsePolynomial.parse(args.poly), args.count)
    else:
        try:
            a_text, b_text = args.inversive.split(",")
            a, b = int(a_text), int(b_text)
        except ValueError:
            raise ValueError(f"--inversive expects 'A,B', got {args.inversive!r}") from None
        seq = prng.inversive_generator(G, a, b, args.count)
    if args.format == "csv":
        if args.out:
            with open(args.out, "w", newline="") as fh:
                prng.write_csv(seq, fh)
        else:
            prng.write_csv(seq, sys.stdout)
    else:
        if args.out:
            with open(args.out, "wb") as fh:
                prng.write_u64le(seq, fh)
        else:
            prng.write_u64le(seq, sys.stdout.buffer)
    return 0


def cmd_verify(args) -> int:
    cfg = SweepConfig(
        suite=args.suite,
        pmin=args.pmin,
        pmax=args.pmax,
        eps=exponents.as_fraction(args.eps),
        ceiling=args.ceiling,
        seed=args.seed,
    )
    if cfg.pmin > cfg.pmax:
        raise ValueError("pmin must be <= pmax")
    rng = random.Random(f"{cfg.suite}:{cfg.seed}")
    rows = list(_SUITES[cfg.suite](cfg, rng))
    if args.format == "csv":
        lines = [_CSV_HEADER] + [_row_csv(r) for r in rows]
    else:
        lines = [_row_json(r) for r in rows]
    text = "\n".join(lines) + "\n" if lines else ""
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    failures = sum(1 for r in rows if not r.passed)
    max_ratio = max((r.ratio for r in rows), default=0.0)
    print(
        f"suite={cfg.suite} rows={len(rows)} failures={failures} max_ratio={max_ratio:.6g}",
        file=sys.stderr,
    )
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="weilsums",
        description="Exact character sums, moment counts, and bound verification "
        "over small multiplicative subgroups of prime fields.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    q = sub.add_parser("sum", help="subgroup sum, optionally twisted or incomplete")
    q.add_argument("--p", type=int, required=True)
    q.add_argument("--tau", type=int, required=True)
    q.add_argument("--poly", required=True, help="e.g. 1*x^1 or 3*x^2+5*x^7+2")
    g = q.add_mutually_exclusive_group()
    g.add_argument("--twist", type=int, default=None, help="index-character frequency b")
    g.add_argument("--incomplete", type=int, default=None, help="sum the first N orbit terms")
    q.set_defaults(func=cmd_sum)

    q = sub.add_parser("kloosterman", help="sum of e_p(a*g + b*g^-1) over the subgroup")
    q.add_argument("--p", type=int, required=True)
    q.add_argument("--tau", type=int, required=True)
    q.add_argument("--a", type=int, required=True)
    q.add_argument("--b", type=int, required=True)
    q.set_defaults(func=cmd_kloosterman)

    q = sub.add_parser("inversive", help="sum of e_p((a*g+b)^-1) over the subgroup")
    q.add_argument("--p", type=int, required=True)
    q.add_argument("--tau", type=int, required=True)
    q.add_argument("--a", type=int, required=True)
    q.add_argument("--b", type=int, required=True)
    q.set_defaults(func=cmd_inversive)

    q = sub.add_parser("moment", help="exact 2k-th moment count Q_k")
    q.add_argument("--p", type=int, required=True)
    q.add_argument("--tau", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--exps", required=True, help="comma-separated exponents, e.g. 1,2")
    q.add_argument("--method", choices=("brute", "conv", "both"), default="both")
    q.set_defaults(func=cmd_moment)

    q = sub.add_parser("t3", help="six-variable diagonal count over F_p*")
    q.add_argument("--p", type=int, required=True)
    q.add_argument("--s", type=int, required=True)
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    q.set_defaults(func=cmd_t3)

    q = sub.add_parser("curve", help="degeneracy product, point count, and bound")
    q.add_argument("--p", type=int, required=True)
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--s", type=int, default=1)
    q.add_argument("--A", type=int, required=True)
    q.add_argument("--B", type=int, required=True)
    q.add_argument("--delta-only", action="store_true", dest="delta_only")
    q.set_defaults(func=cmd_curve)

    q = sub.add_parser("eta", help="table of exponents (n, kappa_n, eta_n)")
    q.add_argument("--nmax", type=int, required=True)
    q.add_argument("--eps", required=True, help="exact rational, e.g. 1/10")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_eta)

    q = sub.add_parser("prng", help="emit a power or inversive generator sequence")
    q.add_argument("--p", type=int, required=True)
    q.add_argument("--tau", type=int, required=True)
    g = q.add_mutually_exclusive_group(required=True)
    g.add_argument("--poly", default=None)
    g.add_argument("--inversive", default=None, metavar="A,B")
    q.add_argument("--count", type=int, required=True)
    q.add_argument("--format", choices=("csv", "u64-le"), default="csv")
    q.add_argument("--out", default=None)
    q.set_defaults(func=cmd_prng)

    q = sub.add_parser("verify", help="run a verification sweep, emit a report stream")
    q.add_argument("--suite", choices=sorted(_SUITES), required=True)
    q.add_argument("--pmin", type=int, required=True)
    q.add_argument("--pmax", type=int, required=True)
    q.add_argument("--eps", default="1/10", help="window parameter, exact rational")
    q.add_argument("--ceiling", type=float, default=10.0, help="ratio ceiling for soft suites")
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--out", default=None)
    q.add_argument("--format", choices=("csv", "json"), default="csv")
    q.set_defaults(func=cmd_verify)

    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GuardExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
