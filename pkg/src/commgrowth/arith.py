"""Exact arithmetic functions and the rank-1 commensurability growth series.

Everything that lands in a series is an exact Python integer.  Floating
point appears only inside the asymptotic comparators and never feeds back
into series data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .reporting import BoundReport

#: Euler-Mascheroni constant, 20 significant digits.
EULER_MASCHERONI = 0.57721566490153286061

# increments of the 2/3/5 trial-division wheel, starting from 7
_WHEEL = (4, 2, 4, 2, 4, 6, 2, 6)


@dataclass(frozen=True)
class Factorization:
    """Prime factorization ``n = prod p_i**e_i`` with strictly increasing p_i."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def expand(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p ** e
        return out


@dataclass(frozen=True)
class GrowthSeries:
    """Counts c_k and their prefix sums C_k for k = 1..upto, all exact."""

    upto: int
    c: tuple[int, ...]
    C: tuple[int, ...]


def factorize(n: int) -> Factorization:
    """Factor n >= 1 by deterministic trial division (2/3/5 wheel).

    n = 1 yields the empty factor sequence.
    """
    if n < 1:
        raise DomainError(f"factorize requires n >= 1, got {n}")
    m = n
    factors = []
    for p in (2, 3, 5):
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
    p, i = 7, 0
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
        p += _WHEEL[i % 8]
        i += 1
    if m > 1:
        factors.append((m, 1))
    return Factorization(n, tuple(factors))


def is_prime(n: int) -> bool:
    """Deterministic primality test by wheel trial division."""
    if n < 2:
        return False
    for p in (2, 3, 5):
        if n % p == 0:
            return n == p
    p, i = 7, 0
    while p * p <= n:
        if n % p == 0:
            return False
        p += _WHEEL[i % 8]
        i += 1
    return True


def divisors(n: int) -> list[int]:
    """All positive divisors of n, sorted increasingly."""
    out = [1]
    for p, e in factorize(n).factors:
        out = [d * p ** j for d in out for j in range(e + 1)]
    return sorted(out)


def omega(n: int) -> int:
    """Number of distinct prime divisors of n."""
    return len(factorize(n).factors)


def divisor_count(n: int) -> int:
    """Number of positive divisors of n."""
    out = 1
    for _, e in factorize(n).factors:
        out *= e + 1
    return out


def cn_rank1(n: int) -> int:
    """Number of subgroups of the rationals at commensurability index
    exactly n from the integers: 2**omega(n)."""
    return 1 << omega(n)


def prime_sieve(limit: int) -> np.ndarray:
    """Boolean mask of length limit+1 with mask[p] == True iff p is prime."""
    if limit < 0:
        raise DomainError("limit must be nonnegative")
    mask = np.ones(limit + 1, dtype=bool)
    mask[: min(2, limit + 1)] = False
    for p in range(2, math.isqrt(limit) + 1):
        if mask[p]:
            mask[p * p:: p] = False
    return mask


def omega_sieve(limit: int) -> np.ndarray:
    """Array w with w[k] = omega(k) for 0 <= k <= limit (w[0] = w[1] = 0)."""
    if limit < 1:
        raise DomainError("limit must be >= 1")
    w = np.zeros(limit + 1, dtype=np.uint8)
    for p in np.flatnonzero(prime_sieve(limit)):
        w[p::p] += 1
    return w


def divisor_count_sieve(limit: int) -> np.ndarray:
    """Array t with t[k] = divisor_count(k) for 0 <= k <= limit (t[0] = 0)."""
    if limit < 1:
        raise DomainError("limit must be >= 1")
    t = np.zeros(limit + 1, dtype=np.int32)
    for q in range(1, limit + 1):
        t[q::q] += 1
    return t


def growth_series_rank1(n: int) -> GrowthSeries:
    """Exact series c_k = 2**omega(k) and prefix sums C_k for k = 1..n."""
    if n < 1:
        raise DomainError("series length must be >= 1")
    w = omega_sieve(n)[1:].astype(np.int64)
    c = np.left_shift(np.int64(1), w)
    return GrowthSeries(n, tuple(c.tolist()), tuple(np.cumsum(c).tolist()))


def sum_omega(n: int) -> int:
    """Exact value of sum_{k<=n} omega(k)."""
    if n < 1:
        raise DomainError("n must be >= 1")
    return int(omega_sieve(n).sum(dtype=np.int64))


def sum_divisor_count(n: int) -> int:
    """Exact value of sum_{k<=n} divisor_count(k)."""
    if n < 1:
        raise DomainError("n must be >= 1")
    return int(divisor_count_sieve(n).sum(dtype=np.int64))


def omega_sum_ratio(n: int) -> float:
    """Empirical Mertens-style ratio (sum_omega(n) - n*log(log(n))) / n.

    The limiting constant is cited in the literature without a closed form
    convenient here, so this comparator only reports the ratio; nothing in
    the package asserts a specific value for it.
    """
    if n < 3:
        raise DomainError("need n >= 3 for log(log(n))")
    return (sum_omega(n) - n * math.log(math.log(n))) / n


def dirichlet_residual(n: int) -> float:
    """Error term of the divisor summatory function against its
    n*log(n) + (2*gamma - 1)*n main term."""
    if n < 1:
        raise DomainError("n must be >= 1")
    main = n * math.log(n) + (2 * EULER_MASCHERONI - 1) * n
    return sum_divisor_count(n) - main


def check_sandwich_bounds(series: GrowthSeries, n_min: int) -> BoundReport:
    """Check the exact chain k <= C_k <= sum_{j<=k} d(j) and report the
    extremal comparison ratios against the k*log(k) envelopes.

    The verdict tracks only the constant-free pointwise chain; the float
    ratios (max of C_k/(k log k), min of C_k/(k (log k)**log 2)) are
    reported in the context for window assertions made by callers.
    """
    if n_min < 3:
        raise DomainError("n_min must be >= 3 (log log undefined below)")
    if series.upto < n_min:
        raise DomainError("series too short for requested n_min")
    upto = series.upto
    C = np.asarray(series.C, dtype=np.int64)
    k = np.arange(1, upto + 1, dtype=np.int64)
    dsum = np.cumsum(divisor_count_sieve(upto)[1:], dtype=np.int64)

    worst = max(int((C - dsum).max()), int((k - C).max()))

    ks = k[n_min - 1:].astype(np.float64)
    cs = C[n_min - 1:].astype(np.float64)
    logs = np.log(ks)
    upper_ratio = float((cs / (ks * logs)).max())
    lower_ratio = float((cs / (ks * logs ** math.log(2))).min())

    return BoundReport(
        name="rank1_sandwich_chain",
        lhs=worst,
        rhs=0,
        holds=worst <= 0,
        context={
            "upper_ratio_max": upper_ratio,
            "lower_ratio_min": lower_ratio,
            "n_min": n_min,
            "upto": upto,
        },
    )
