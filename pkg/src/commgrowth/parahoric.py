"""Admissible cocharacter counts and the maximal-lattice counting bounds.

A cocharacter written on the fundamental coweights is admissible at cutoff
c when its pairing against every root (positive and negative) stays within
c; the coefficient box |a| <= c is implied, since the simple roots are
among the positive roots.  The exact count, the (2c+1)-power box bounds,
and the per-prime and global maximal-lattice estimates built from them are
all exposed as checkable inequalities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .arith import factorize, is_prime
from .errors import DomainError, ResourceLimitError
from .reporting import BoundReport, compare
from .root_systems import RootSystem


@dataclass(frozen=True)
class CocharacterCount:
    """Exact admissible count at a cutoff, next to its coefficient-box
    bound (2c+1)**rank.  ``exact`` is None above the exhaustive-scan rank
    guard, where only the box bound is available."""

    label: str
    cutoff: int
    exact: int | None
    box_bound: int

    def __post_init__(self):
        if self.exact is not None and self.exact > self.box_bound:
            raise ValueError("exact count cannot exceed the box bound")


def _exhaustive_count(rs: RootSystem, c: int, block: int = 1 << 20) -> int:
    # chunked scan over the coefficient box, decoded from flat indices so
    # memory stays bounded regardless of rank and cutoff
    side = 2 * c + 1
    total = side ** rs.rank
    roots_t = np.asarray(rs.positive_roots, dtype=np.int64).T
    count = 0
    for start in range(0, total, block):
        stop = min(start + block, total)
        rem = np.arange(start, stop, dtype=np.int64)
        coords = np.empty((stop - start, rs.rank), dtype=np.int64)
        for col in range(rs.rank - 1, -1, -1):
            rem, digit = np.divmod(rem, side)
            coords[:, col] = digit - c
        pairings = coords @ roots_t
        count += int(np.count_nonzero((np.abs(pairings) <= c).all(axis=1)))
    return count


def count_admissible_cocharacters(rs: RootSystem, c: int, *,
                                  max_cutoff: int = 100,
                                  max_exhaustive_rank: int = 4) -> CocharacterCount:
    """Count coweight coefficient vectors whose pairing with every root
    lies in [-c, c], by exhaustive scan of the coefficient box.

    Above the rank guard the scan is skipped and only the box bound is
    reported (exact=None); past the cutoff guard the request is refused.
    """
    if c < 0:
        raise DomainError(f"cutoff must be >= 0, got {c}")
    if c > max_cutoff:
        raise ResourceLimitError(f"cutoff {c} exceeds guard {max_cutoff}")
    box = (2 * c + 1) ** rs.rank
    if rs.rank > max_exhaustive_rank:
        return CocharacterCount(rs.label, c, None, box)
    return CocharacterCount(rs.label, c, _exhaustive_count(rs, c), box)


def check_cocharacter_bound(rs: RootSystem, k: int, **guards) -> BoundReport:
    """At level k the admissible cutoff is c = k+1 and the count is at
    most (2k+3)**dim; the sharper rank-exponent box (2k+3)**rank is
    carried along in the context."""
    if k < 0:
        raise DomainError(f"level must be >= 0, got {k}")
    cc = count_admissible_cocharacters(rs, k + 1, **guards)
    if cc.exact is None:
        raise ResourceLimitError(
            f"exact cocharacter count unavailable for rank {rs.rank} (guard)")
    return compare("cocharacter_count_le_(2k+3)^d", cc.exact,
                   (2 * k + 3) ** rs.dimension,
                   label=rs.label, k=k, rank_box_bound=cc.box_bound)


def check_two_k_plus_three(p: int, k: int) -> BoundReport:
    """The linear factor 2k+3 is absorbed by p**k once p >= 5, and by the
    cruder p**(3k) for every prime."""
    if not is_prime(p):
        raise DomainError(f"p must be prime, got {p}")
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    crude = p ** (3 * k)
    rhs = p ** k if p >= 5 else crude
    return compare("2k+3_absorbed_by_prime_power", 2 * k + 3, rhs,
                   p=p, k=k, crude_bound=crude, sharp_applies=p >= 5)


def per_prime_bound(rs: RootSystem, p: int, k: int) -> BoundReport:
    """Bound on the maximal compact open subgroups over Q_p containing the
    level-k principal congruence subgroup: (d+1)*p**((3+d)k), dominated by
    the cruder p**((3+2d)k) for k >= 1.  At level 0 there is exactly one
    such subgroup, so the report carries 1 on both sides."""
    if not is_prime(p):
        raise DomainError(f"p must be prime, got {p}")
    if k < 0:
        raise DomainError(f"k must be >= 0, got {k}")
    d = rs.dimension
    if k == 0:
        return compare("per_prime_maximal_count", 1, 1,
                       label=rs.label, p=p, k=k)
    lhs = (d + 1) * p ** ((3 + d) * k)
    return compare("per_prime_maximal_count", lhs, p ** ((3 + 2 * d) * k),
                   label=rs.label, p=p, k=k)


def maximal_lattice_bound(rs: RootSystem, m: int) -> int:
    """Global bound m**(3+2d) on the number of maximal lattices containing
    the level-m principal congruence subgroup; completely multiplicative,
    and equal to the product of the per-prime crude bounds."""
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    exponent = 3 + 2 * rs.dimension
    value = m ** exponent
    per_prime = 1
    for p, kp in factorize(m).factors:
        per_prime *= p ** (exponent * kp)
    assert per_prime == value
    return value


def upper_bound_profile(rs: RootSystem, n: int, s, c_const=1, D_const=1) -> int:
    """Evaluate (sum_{j=1}^{ceil(c*n)} j**M0) * s_{ceil(D*n)} with
    M0 = 3 + 2*dim.

    Under the counting hypotheses this dominates the full commensurability
    growth C_n for lattices in the group; s is caller-supplied
    subgroup-growth data s_1, s_2, ... (computing it is out of scope here).
    The constants c and D exist but are not pinned by the theory, so they
    are parameters, defaulting to 1.
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    c_frac, d_frac = Fraction(c_const), Fraction(D_const)
    if c_frac <= 0 or d_frac <= 0:
        raise DomainError("profile constants must be positive")
    top = math.ceil(c_frac * n)
    s_index = math.ceil(d_frac * n)
    s = list(s)
    if len(s) < s_index:
        raise DomainError(
            f"growth data too short: need index {s_index}, got {len(s)} values")
    m0 = 3 + 2 * rs.dimension
    return sum(j ** m0 for j in range(1, top + 1)) * s[s_index - 1]
