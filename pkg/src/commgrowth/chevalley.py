"""Orders of split simply-connected Chevalley groups over finite rings.

Over a prime field the order comes from Steinberg's formula
p**N * prod_i (p**d_i - 1); over Z/p**k the congruence filtration
contributes a clean factor p**((k-1)*d).  Both are cross-checkable against
exhaustive matrix enumeration for the small special-linear and symplectic
cases, which is what ``brute_force_order`` provides.
"""

from __future__ import annotations

import itertools

from .arith import factorize, is_prime
from .errors import DomainError, ResourceLimitError
from .reporting import BoundReport, compare
from .root_systems import RootSystem

# antidiagonal alternating form fixed for the 4x4 symplectic oracle
_SP4_FORM = (
    (0, 0, 0, 1),
    (0, 0, 1, 0),
    (0, -1, 0, 0),
    (-1, 0, 0, 0),
)

#: matrix oracle attached to each type that has one at desk scale
ORACLE_FAMILIES = {"A1": "SL2", "A2": "SL3", "B2": "Sp4", "C2": "Sp4"}


def order_fp(rs: RootSystem, p: int) -> int:
    """Order of the group of F_p-points: p**N * prod_i (p**d_i - 1)."""
    if not is_prime(p):
        raise DomainError(f"p must be prime, got {p}")
    value = p ** rs.num_positive_roots
    for d in rs.degrees:
        value *= p ** d - 1
    return value


def order_zpk(rs: RootSystem, p: int, k: int) -> int:
    """Order over Z/p**k: each of the k-1 congruence layers contributes
    a full p**d factor on top of the prime-field order."""
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    return p ** ((k - 1) * rs.dimension) * order_fp(rs, p)


def order_zm(rs: RootSystem, m: int) -> int:
    """Order over Z/m, multiplicative over the prime powers of m."""
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    value = 1
    for p, k in factorize(m).factors:
        value *= order_zpk(rs, p, k)
    return value


def _det_mod(rows, m: int) -> int:
    """Determinant of a small integer matrix, reduced mod m."""
    n = len(rows)
    if n == 1:
        return rows[0][0] % m
    total = 0
    for j in range(n):
        if rows[0][j]:
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            term = rows[0][j] * _det_mod(minor, m)
            total += -term if j % 2 else term
    return total % m


def _count_sl(n: int, m: int) -> int:
    one = 1 % m
    count = 0
    for entries in itertools.product(range(m), repeat=n * n):
        rows = [entries[i * n:(i + 1) * n] for i in range(n)]
        if _det_mod(rows, m) == one:
            count += 1
    return count


def _preserves_sp4_form(rows, m: int) -> bool:
    # M^T J M is alternating automatically; only the upper triangle needs checking
    for i in range(4):
        for j in range(i + 1, 4):
            acc = (rows[0][i] * rows[3][j] + rows[1][i] * rows[2][j]
                   - rows[2][i] * rows[1][j] - rows[3][i] * rows[0][j])
            if acc % m != _SP4_FORM[i][j] % m:
                return False
    return True


def _count_sp4(m: int) -> int:
    one = 1 % m
    count = 0
    for entries in itertools.product(range(m), repeat=16):
        rows = [entries[0:4], entries[4:8], entries[8:12], entries[12:16]]
        if _preserves_sp4_form(rows, m) and _det_mod(rows, m) == one:
            count += 1
    return count


def brute_force_order(family: str, m: int, *, max_candidates: int = 10 ** 8) -> int:
    """Exhaustively count matrices over Z/m in one of the supported
    families: "SL2", "SL3" (determinant one) or "Sp4" (standard
    antidiagonal alternating form preserved, determinant one).

    This is the independent oracle for the closed-form orders; it scans
    every candidate matrix and must stay well inside desk scale, hence the
    guard on m**(n*n).
    """
    if m < 1:
        raise DomainError(f"modulus must be >= 1, got {m}")
    sizes = {"SL2": 2, "SL3": 3, "Sp4": 4}
    if family not in sizes:
        raise DomainError(f"unsupported family {family!r}; choose from {sorted(sizes)}")
    n = sizes[family]
    if m ** (n * n) > max_candidates:
        raise ResourceLimitError(
            f"{family} mod {m} needs {m ** (n * n)} candidates, guard is {max_candidates}")
    if family == "Sp4":
        return _count_sp4(m)
    return _count_sl(n, m)


def check_order_bound(rs: RootSystem, p: int) -> BoundReport:
    """Check the crude estimate: the F_p-point count is at most p**dim."""
    lhs = order_fp(rs, p)
    return compare("order_fp_le_p_pow_dim", lhs, p ** rs.dimension,
                   label=rs.label, p=p)
