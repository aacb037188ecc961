"""Empirical coprimality densities over L(n P_inf)^m.

Exhaustive runs split the tuple index range into contiguous chunks; Monte
Carlo runs split the trials into fixed-size blocks, block ``k`` drawing from
``SeedSequence(seed, spawn_key=(k,))``.  Neither split depends on the number
of workers, so one worker and many workers produce identical reports.
"""

from __future__ import annotations

import csv
import io
import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from statistics import NormalDist

import numpy as np

from holodense import _guard
from holodense.curves import EllipticCurve
from holodense.density import _decimal, density_elliptic, density_rational
from holodense.fields import FiniteField, make_field
from holodense.oracles import coprime, coprime_divisor_oracle, coprime_gcd_oracle
from holodense.rrspace import RRSpace, rr_basis

BLOCK_SIZE = 1000

CSV_FIELDS = (
    "space", "q", "n", "m", "mode", "total", "coprime",
    "empirical", "theoretical", "abs_err", "ci_low", "ci_high", "seed",
)


@dataclass
class ExperimentReport:
    space: str
    q: int
    n: int
    m: int
    mode: str
    total: int
    coprime: int
    theoretical: Fraction
    ci_low: float | None = None
    ci_high: float | None = None
    seed: int | None = None
    curve: str | None = None
    wall_time: float = field(default=0.0, compare=False)

    def __post_init__(self):
        if not 0 <= self.coprime <= self.total:
            raise ValueError("coprime count must lie in [0, total]")

    @property
    def empirical(self) -> Fraction:
        return Fraction(self.coprime, self.total)

    @property
    def abs_err(self) -> Fraction:
        return abs(self.empirical - self.theoretical)

    def csv_row(self) -> dict:
        return {
            "space": self.space,
            "q": self.q,
            "n": self.n,
            "m": self.m,
            "mode": self.mode,
            "total": self.total,
            "coprime": self.coprime,
            "empirical": _frac(self.empirical),
            "theoretical": _frac(self.theoretical),
            "abs_err": _decimal(self.abs_err, 12),
            "ci_low": "" if self.ci_low is None else repr(self.ci_low),
            "ci_high": "" if self.ci_high is None else repr(self.ci_high),
            "seed": "" if self.seed is None else self.seed,
        }

    def to_dict(self) -> dict:
        d = asdict(self)
        d["theoretical"] = _frac(self.theoretical)
        d["empirical"] = _frac(self.empirical)
        d["abs_err"] = _decimal(self.abs_err, 12)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> ExperimentReport:
        d = dict(d)
        d.pop("empirical", None)
        d.pop("abs_err", None)
        d["theoretical"] = Fraction(d["theoretical"])
        return cls(**d)


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def reports_to_csv(reports) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for r in reports:
        writer.writerow(r.csv_row())
    return buf.getvalue()


def reports_from_csv(text: str) -> list:
    out = []
    for row in csv.DictReader(io.StringIO(text)):
        if tuple(row) != CSV_FIELDS:
            raise ValueError("unexpected CSV header")
        out.append(ExperimentReport(
            space=row["space"],
            q=int(row["q"]),
            n=int(row["n"]),
            m=int(row["m"]),
            mode=row["mode"],
            total=int(row["total"]),
            coprime=int(row["coprime"]),
            theoretical=Fraction(row["theoretical"]),
            ci_low=float(row["ci_low"]) if row["ci_low"] else None,
            ci_high=float(row["ci_high"]) if row["ci_high"] else None,
            seed=int(row["seed"]) if row["seed"] else None,
        ))
    return out


def reports_to_json(reports) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2)


def reports_from_json(text: str) -> list:
    return [ExperimentReport.from_dict(d) for d in json.loads(text)]


def wilson_interval(successes: int, trials: int, level: float = 0.95):
    z = NormalDist().inv_cdf(0.5 + level / 2)
    p = successes / trials
    denom = 1 + z * z / trials
    centre = (p + z * z / (2 * trials)) / denom
    half = z / denom * math.sqrt(p * (1 - p) / trials + z * z / (4 * trials * trials))
    lo = 0.0 if successes == 0 else max(0.0, centre - half)
    hi = 1.0 if successes == trials else min(1.0, centre + half)
    return lo, hi


def theoretical_density(space: RRSpace, m: int) -> Fraction:
    if space.kind == "rational":
        return density_rational(space.q, m)
    return density_elliptic(space.curve, m)


def _curve_text(space):
    if space.curve is None:
        return None
    F = space.field
    return f"{space.q},{F.format_raw(space.curve.a)},{F.format_raw(space.curve.b)}"


def _map(fn, jobs, workers):
    if workers <= 1 or len(jobs) <= 1:
        return [fn(*job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, *zip(*jobs)))


def _count_range(space: RRSpace, m: int, lo: int, hi: int) -> int:
    elements = [space.element_at(k) for k in range(space.size)]
    size = space.size
    count = 0
    for index in range(lo, hi):
        tup = []
        for _ in range(m):
            index, k = divmod(index, size)
            tup.append(elements[k])
        count += coprime(tup)
    return count


def exhaustive_density(space: RRSpace, m: int, workers: int = 1, guard: int | None = None) -> ExperimentReport:
    """Exact fraction of coprime tuples among all of L(n P_inf)^m."""
    if m < 2:
        raise ValueError("m must be at least 2")
    _guard.check(space.size, guard, _guard.SPACE_DEFAULT, "space enumeration")
    total = space.size**m
    _guard.check(total, guard, _guard.TUPLE_DEFAULT, "exhaustive tuple count")
    start = time.perf_counter()
    chunks = max(1, workers)
    bounds = [total * k // chunks for k in range(chunks + 1)]
    jobs = [(space, m, bounds[k], bounds[k + 1]) for k in range(chunks)]
    count = sum(_map(_count_range, jobs, workers))
    return ExperimentReport(
        space=space.kind, q=space.q, n=space.n, m=m, mode="exhaustive",
        total=total, coprime=count, theoretical=theoretical_density(space, m),
        curve=_curve_text(space), wall_time=time.perf_counter() - start,
    )


def block_rng(seed: int, block: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(block,)))


def _sample_tuples(space, m, rng, size):
    digits = rng.integers(0, space.q, size=(size, m, space.dimension))
    for row in digits:
        yield [space.from_digits(d) for d in row]


def _count_block(space: RRSpace, m: int, seed: int, block: int, size: int) -> int:
    rng = block_rng(seed, block)
    return sum(coprime(tup) for tup in _sample_tuples(space, m, rng, size))


def _blocks(trials):
    full, last = divmod(trials, BLOCK_SIZE)
    sizes = [BLOCK_SIZE] * full + ([last] if last else [])
    return list(enumerate(sizes))


def monte_carlo_density(space: RRSpace, m: int, trials: int, seed: int = 0, workers: int = 1,
                        level: float = 0.95) -> ExperimentReport:
    """Fraction of coprime tuples among ``trials`` uniform draws, with a Wilson interval."""
    if m < 2:
        raise ValueError("m must be at least 2")
    if trials < 1:
        raise ValueError("trials must be positive")
    start = time.perf_counter()
    jobs = [(space, m, seed, k, size) for k, size in _blocks(trials)]
    count = sum(_map(_count_block, jobs, workers))
    lo, hi = wilson_interval(count, trials, level)
    return ExperimentReport(
        space=space.kind, q=space.q, n=space.n, m=m, mode="mc",
        total=trials, coprime=count, theoretical=theoretical_density(space, m),
        ci_low=lo, ci_high=hi, seed=seed, curve=_curve_text(space),
        wall_time=time.perf_counter() - start,
    )


def run_experiment(target, n: int, m: int, mode: str, trials: int = 10**4, seed: int = 0,
                   workers: int = 1) -> ExperimentReport:
    space = rr_basis(target, n)
    if mode == "exhaustive":
        return exhaustive_density(space, m, workers)
    if mode in ("mc", "monte_carlo"):
        return monte_carlo_density(space, m, trials, seed, workers)
    raise ValueError(f"unknown mode {mode!r}")


def convergence_scan(target: FiniteField | EllipticCurve, n_values, m: int, mode: str = "exhaustive",
                     trials: int = 10**4, seed: int = 0, workers: int = 1) -> list:
    """One report per ``n`` along the chain L(n P_inf); ``abs_err`` tracks the gap to the limit."""
    return [run_experiment(target, n, m, mode, trials, seed, workers) for n in n_values]


@dataclass
class CrossCheck:
    agree: bool
    checked: int
    disagreement: tuple | None = None

    def __bool__(self):
        return self.agree


def cross_oracle_check(q: int, n: int, m: int, trials: int, seed: int = 0) -> CrossCheck:
    """Compare the gcd oracle with the irreducible-divisor oracle on random tuples of F_q[x]."""
    space = RRSpace.rational(make_field(q), n)
    checked = 0
    for k, size in _blocks(trials):
        for tup in _sample_tuples(space, m, block_rng(seed, k), size):
            checked += 1
            if coprime_gcd_oracle(tup) != coprime_divisor_oracle(tup):
                return CrossCheck(False, checked, tuple(f.to_text() for f in tup))
    return CrossCheck(True, checked)
