"""The commensurability graph over two concrete subgroup families.

Vertices are cyclic subgroups (a/b)Z of the rationals or finite-rank
lattices (1/q)*rowspan(H) in Q^d with H in Hermite normal form.  Edges
carry the commensurability index [A : A&B]*[B : A&B]; path length is the
product of edge weights and the metric is its logarithm.  All comparisons
that matter are done on the exact integer indices, never on logs.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .arith import divisors
from .errors import DomainError, ResourceLimitError
from .reporting import BoundReport, compare


# ---------------------------------------------------------------------------
# exact integer linear algebra on small row matrices


def _matmul(A, B):
    k, m = len(B), len(B[0])
    return [[sum(row[t] * B[t][j] for t in range(k)) for j in range(m)] for row in A]


def _det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j]:
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            term = rows[0][j] * _det(minor)
            total += -term if j % 2 else term
    return total


def _adjugate(rows):
    n = len(rows)
    if n == 1:
        return [[1]]
    cof = [[(-1) ** (i + j) * _det([r[:j] + r[j + 1:] for t, r in enumerate(rows) if t != i])
            for j in range(n)] for i in range(n)]
    return [list(col) for col in zip(*cof)]


def _row_hnf(rows, cols):
    """Hermite normal form of the row span: upper triangular, positive
    pivots, entries above each pivot reduced into [0, pivot)."""
    m = [list(r) for r in rows]
    pivot_row = 0
    for j in range(cols):
        pivot = next((i for i in range(pivot_row, len(m)) if m[i][j]), None)
        if pivot is None:
            continue
        m[pivot_row], m[pivot] = m[pivot], m[pivot_row]
        for i in range(pivot_row + 1, len(m)):
            while m[i][j]:
                q = m[pivot_row][j] // m[i][j]
                m[pivot_row] = [a - q * b for a, b in zip(m[pivot_row], m[i])]
                m[pivot_row], m[i] = m[i], m[pivot_row]
        if m[pivot_row][j] < 0:
            m[pivot_row] = [-a for a in m[pivot_row]]
        for i in range(pivot_row):
            q = m[i][j] // m[pivot_row][j]
            if q:
                m[i] = [a - q * b for a, b in zip(m[i], m[pivot_row])]
        pivot_row += 1
    return m[:pivot_row]


def _kernel_basis(rows):
    """Basis of {x integer : x . rows = 0}, via unimodular row reduction
    of the matrix augmented with an identity block."""
    nrows, ncols = len(rows), len(rows[0])
    aug = [list(rows[i]) + [int(i == t) for t in range(nrows)] for i in range(nrows)]
    pivot_row = 0
    for j in range(ncols):
        pivot = next((i for i in range(pivot_row, nrows) if aug[i][j]), None)
        if pivot is None:
            continue
        aug[pivot_row], aug[pivot] = aug[pivot], aug[pivot_row]
        for i in range(pivot_row + 1, nrows):
            while aug[i][j]:
                q = aug[pivot_row][j] // aug[i][j]
                aug[pivot_row] = [a - q * b for a, b in zip(aug[pivot_row], aug[i])]
                aug[pivot_row], aug[i] = aug[i], aug[pivot_row]
        pivot_row += 1
    return [row[ncols:] for row in aug[pivot_row:]]


def _intersect_integer(A, B):
    """HNF basis of the intersection of the row lattices of the full-rank
    integer matrices A and B.

    x.A lies in the span of B iff x.A.adj(B) vanishes mod |det B|; the
    kernel of the stacked system recovers exactly those x.
    """
    d = len(A)
    big_d = abs(_det(B))
    M = _matmul(A, _adjugate(B))
    stacked = M + [[big_d if i == j else 0 for j in range(d)] for i in range(d)]
    xs = [row[:d] for row in _kernel_basis(stacked)]
    return _row_hnf(_matmul(xs, A), d)


def _solve_upper(H, vec):
    """Integer x with x.H = vec for upper-triangular H, or None."""
    x = []
    for j in range(len(H)):
        rem = vec[j] - sum(x[i] * H[i][j] for i in range(j))
        if rem % H[j][j]:
            return None
        x.append(rem // H[j][j])
    return x


# ---------------------------------------------------------------------------
# the two subgroup families


@dataclass(frozen=True)
class RationalCyclic:
    """The subgroup (a/b)Z of the additive rationals, kept with gcd(a,b)=1.

    (1, 1) is the integers themselves.
    """

    a: int
    b: int

    def __post_init__(self):
        if not isinstance(self.a, int) or not isinstance(self.b, int) \
                or self.a < 1 or self.b < 1:
            raise DomainError(f"generator must be a positive rational, got {self.a}/{self.b}")
        g = math.gcd(self.a, self.b)
        if g > 1:
            object.__setattr__(self, "a", self.a // g)
            object.__setattr__(self, "b", self.b // g)

    def intersection(self, other: "RationalCyclic") -> "RationalCyclic":
        _require_same_family(self, other)
        return RationalCyclic(math.lcm(self.a, other.a), math.gcd(self.b, other.b))

    def contains(self, other: "RationalCyclic") -> bool:
        _require_same_family(self, other)
        return (other.a * self.b) % (other.b * self.a) == 0

    def index_of(self, sub: "RationalCyclic") -> int:
        if not self.contains(sub):
            raise DomainError(f"{sub} is not a subgroup of {self}")
        return (sub.a * self.b) // (sub.b * self.a)

    def sort_key(self):
        return (self.a, self.b)

    def __str__(self):
        return f"({self.a}/{self.b})Z"


@dataclass(frozen=True)
class RationalLattice:
    """A full-rank subgroup (1/denom)*rowspan(basis) of Q^dim.

    The constructor canonicalizes: it accepts any generating integer rows,
    brings them to Hermite normal form, and strips the common content of
    the basis from the denominator.  Two values are equal exactly when the
    canonical fields coincide, so instances can be deduplicated in sets.
    """

    dim: int
    denom: int
    basis: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not isinstance(self.dim, int) or self.dim < 1:
            raise DomainError(f"dim must be a positive integer, got {self.dim}")
        if not isinstance(self.denom, int) or self.denom < 1:
            raise DomainError(f"denominator must be a positive integer, got {self.denom}")
        rows = [list(r) for r in self.basis]
        if any(len(r) != self.dim for r in rows):
            raise DomainError("basis rows must have length dim")
        if any(not isinstance(v, int) for r in rows for v in r):
            raise DomainError("basis entries must be integers")
        hnf = _row_hnf(rows, self.dim)
        if len(hnf) != self.dim:
            raise DomainError("basis does not span a full-rank lattice")
        denom = self.denom
        content = math.gcd(denom, math.gcd(*(abs(v) for row in hnf for v in row)))
        if content > 1:
            hnf = [[v // content for v in row] for row in hnf]
            denom //= content
        object.__setattr__(self, "denom", denom)
        object.__setattr__(self, "basis", tuple(tuple(row) for row in hnf))

    @classmethod
    def from_rows(cls, rows, denom: int = 1) -> "RationalLattice":
        rows = [list(r) for r in rows]
        if not rows:
            raise DomainError("need at least one generating row")
        return cls(len(rows[0]), denom, tuple(tuple(r) for r in rows))

    @classmethod
    def standard(cls, dim: int) -> "RationalLattice":
        """The integer lattice Z^dim."""
        return cls(dim, 1, tuple(tuple(int(i == j) for j in range(dim)) for i in range(dim)))

    @classmethod
    def scaled(cls, dim: int, num: int, den: int = 1) -> "RationalLattice":
        """(num/den) * Z^dim."""
        return cls(dim, den, tuple(tuple(num * int(i == j) for j in range(dim))
                                   for i in range(dim)))

    def _det(self) -> int:
        out = 1
        for i in range(self.dim):
            out *= self.basis[i][i]
        return out

    def intersection(self, other: "RationalLattice") -> "RationalLattice":
        _require_same_family(self, other)
        q = math.lcm(self.denom, other.denom)
        A = [[v * (q // self.denom) for v in row] for row in self.basis]
        B = [[v * (q // other.denom) for v in row] for row in other.basis]
        return RationalLattice(self.dim, q,
                               tuple(tuple(r) for r in _intersect_integer(A, B)))

    def contains(self, other: "RationalLattice") -> bool:
        _require_same_family(self, other)
        for row in other.basis:
            target = [Fraction(self.denom * v, other.denom) for v in row]
            x = []
            ok = True
            for j in range(self.dim):
                rem = target[j] - sum(x[i] * self.basis[i][j] for i in range(j))
                q = rem / self.basis[j][j]
                if q.denominator != 1:
                    ok = False
                    break
                x.append(q)
            if not ok:
                return False
        return True

    def index_of(self, sub: "RationalLattice") -> int:
        if not self.contains(sub):
            raise DomainError(f"{sub} is not a sublattice of {self}")
        num = sub._det() * self.denom ** self.dim
        den = self._det() * sub.denom ** self.dim
        assert num % den == 0
        return num // den

    def sort_key(self):
        return (self.denom,) + tuple(v for row in self.basis for v in row)

    def __str__(self):
        rows = ",".join("[" + ",".join(map(str, r)) + "]" for r in self.basis)
        return f"(1/{self.denom})<{rows}>"


def _require_same_family(A, B):
    if type(A) is not type(B):
        raise DomainError(f"mixed families: {type(A).__name__} vs {type(B).__name__}")
    if isinstance(A, RationalLattice) and A.dim != B.dim:
        raise DomainError(f"dimension mismatch: {A.dim} vs {B.dim}")


# ---------------------------------------------------------------------------
# graph operations


@dataclass(frozen=True)
class CommIndex:
    """The pair of indices over the common intersection; the edge weight
    of the commensurability graph is their product."""

    left_index: int
    right_index: int

    @property
    def value(self) -> int:
        return self.left_index * self.right_index


@dataclass(frozen=True)
class GeodesicPath:
    vertices: tuple
    length: int


def intersect(L1, L2):
    """Intersection inside either family (canonical form)."""
    _require_same_family(L1, L2)
    return L1.intersection(L2)


def index_in(sub, sup) -> int:
    """[sup : sub] for nested subgroups of one family."""
    _require_same_family(sub, sup)
    return sup.index_of(sub)


def comm_index(A, B) -> CommIndex:
    """Exact commensurability index data of two commensurable subgroups."""
    inter = intersect(A, B)
    return CommIndex(A.index_of(inter), B.index_of(inter))


def distance(A, B) -> float:
    """log of the commensurability index; zero exactly on equal subgroups."""
    return math.log(comm_index(A, B).value)


def geodesic(A, B) -> GeodesicPath:
    """A shortest path through the intersection.

    The generic shape is [A, A&B, B]; when one subgroup contains the other
    the degenerate vertex is merged away.
    """
    inter = intersect(A, B)
    if A == B:
        return GeodesicPath((A,), 1)
    if inter == A:  # A inside B: single ascending edge
        return GeodesicPath((A, B), B.index_of(A))
    if inter == B:  # B inside A: single descending edge
        return GeodesicPath((A, B), A.index_of(B))
    return GeodesicPath((A, inter, B), A.index_of(inter) * B.index_of(inter))


def chain_length(chain) -> int:
    """Product of the successive indices along a nested chain
    H_1 <= H_2 <= ... <= H_n; equals the endpoint commensurability index."""
    groups = list(chain)
    if not groups:
        raise DomainError("chain must contain at least one subgroup")
    total = 1
    for sub, sup in zip(groups, groups[1:]):
        total *= sup.index_of(sub)
    assert total == comm_index(groups[0], groups[-1]).value
    return total


# ---------------------------------------------------------------------------
# ball enumeration


def _hnf_matrices_with_det(dim, det):
    """All upper-triangular HNF matrices of the given determinant; these
    index the sublattices of that index in any fixed ambient lattice."""

    def diag_splits(d, target):
        if d == 1:
            yield (target,)
            return
        for q in divisors(target):
            for rest in diag_splits(d - 1, target // q):
                yield (q,) + rest

    for diag in diag_splits(dim, det):
        positions = [(r, c) for c in range(dim) for r in range(c)]
        for combo in product(*(range(diag[c]) for (_, c) in positions)):
            mat = [[0] * dim for _ in range(dim)]
            for i in range(dim):
                mat[i][i] = diag[i]
            for (r, c), v in zip(positions, combo):
                mat[r][c] = v
            yield mat


@lru_cache(maxsize=None)
def _overlattice_frames(dim, j):
    """Frames K with j*Z^dim <= K <= Z^dim and [Z^dim : K] = j**(dim-1).

    Scaling such a frame by 1/j gives exactly the overlattices of index j
    of any lattice written in its own basis coordinates.
    """
    if j == 1:
        return (tuple(tuple(int(i == t) for t in range(dim)) for i in range(dim)),)
    frames = []
    for mat in _hnf_matrices_with_det(dim, j ** (dim - 1)):
        if any(j % mat[t][t] for t in range(dim)):
            continue
        units = (tuple(j * int(i == t) for t in range(dim)) for i in range(dim))
        if all(_solve_upper(mat, e) is not None for e in units):
            frames.append(tuple(tuple(row) for row in mat))
    return tuple(frames)


def _cyclic_ball(gamma: RationalCyclic, n: int):
    # commensurability index k against Z splits as k = c*d over coprime
    # pairs; scaling by gamma's generator transports the ball around Z
    out = []
    for k in range(1, n + 1):
        for c in divisors(k):
            d = k // c
            if math.gcd(c, d) == 1:
                out.append(RationalCyclic(gamma.a * c, gamma.b * d))
    return out


def _lattice_ball(gamma: RationalLattice, n: int):
    # Each commensurable L is found once, through its trace M = L & gamma:
    # enumerate sublattices M of index i, overlattices L of M of index j
    # with i*j <= n, and keep L exactly when its trace is M.
    out = []
    dim = gamma.dim
    for i in range(1, n + 1):
        for rel in _hnf_matrices_with_det(dim, i):
            sub = RationalLattice(dim, gamma.denom,
                                  tuple(tuple(r) for r in _matmul(rel, gamma.basis)))
            for j in range(1, n // i + 1):
                for frame in _overlattice_frames(dim, j):
                    over = RationalLattice(dim, sub.denom * j,
                                           tuple(tuple(r) for r in _matmul(frame, sub.basis)))
                    if over.intersection(gamma) == sub:
                        out.append(over)
    return out


def enumerate_ball(gamma, n: int, *, max_dim: int = 3, max_bound: int = 1000):
    """All subgroups in gamma's family at commensurability index <= n,
    in canonical form, sorted, duplicate free.

    The guards are explicit parameters: finiteness of the ball is
    guaranteed, smallness is not.
    """
    if n < 1:
        raise DomainError(f"ball radius must be >= 1, got {n}")
    if n > max_bound:
        raise ResourceLimitError(f"ball bound {n} exceeds guard {max_bound}")
    if isinstance(gamma, RationalCyclic):
        found = _cyclic_ball(gamma, n)
    elif isinstance(gamma, RationalLattice):
        if gamma.dim > max_dim:
            raise ResourceLimitError(f"lattice dimension {gamma.dim} exceeds guard {max_dim}")
        found = _lattice_ball(gamma, n)
    else:
        raise DomainError(f"unsupported family {type(gamma).__name__}")
    return sorted(found, key=lambda s: s.sort_key())


def check_transfer_inequality(A, B, n: int, *, max_dim: int = 3,
                              max_bound: int = 1000) -> BoundReport:
    """Ball-size transfer between commensurable basepoints: the ball of
    radius n around A injects into the ball of radius c(A,B)*n around B."""
    c_ab = comm_index(A, B).value
    ball_a = enumerate_ball(A, n, max_dim=max_dim, max_bound=max_bound)
    ball_b = enumerate_ball(B, c_ab * n, max_dim=max_dim, max_bound=max_bound)
    return compare("ball_transfer", len(ball_a), len(ball_b),
                   n=n, c_ab=c_ab, left_card=len(ball_a), right_card=len(ball_b))


# ---------------------------------------------------------------------------
# seeded property sampling


def _random_cyclic(rng: random.Random) -> RationalCyclic:
    return RationalCyclic(rng.randint(1, 60), rng.randint(1, 60))


def _random_lattice(rng: random.Random, dim: int = 2) -> RationalLattice:
    while True:
        rows = [[rng.randint(-4, 4) for _ in range(dim)] for _ in range(dim)]
        if _det(rows) != 0:
            return RationalLattice(dim, rng.randint(1, 6),
                                   tuple(tuple(r) for r in rows))


def _random_chain(rng: random.Random, sample, max_len: int = 5):
    top = sample(rng)
    desc = [top]
    for _ in range(rng.randint(1, max_len - 1)):
        last = desc[-1]
        if isinstance(last, RationalCyclic):
            desc.append(RationalCyclic(last.a * rng.randint(1, 4), last.b))
        else:
            det = rng.randint(1, 4)
            rel = rng.choice(list(_hnf_matrices_with_det(last.dim, det)))
            desc.append(RationalLattice(last.dim, last.denom,
                                        tuple(tuple(r) for r in _matmul(rel, last.basis))))
    return list(reversed(desc))


def run_metric_checks(samples: int = 1000, seed: int = 0) -> list[BoundReport]:
    """Seeded property suite over both families: metric axioms on triples,
    geodesic length against the commensurability index on pairs, and
    nested-chain length against the endpoint index.

    Each report counts violations (lhs) against zero (rhs), so the suite
    passes exactly when every counter stays at zero.
    """
    if samples < 1:
        raise DomainError("samples must be >= 1")
    rng = random.Random(seed)
    reports = []
    for family, sample in (("cyclic", _random_cyclic), ("lattice2", _random_lattice)):
        sym = ident = tri = 0
        for _ in range(samples):
            H, K, L = sample(rng), sample(rng), sample(rng)
            hk = comm_index(H, K).value
            if hk != comm_index(K, H).value:
                sym += 1
            if (hk == 1) != (H == K):
                ident += 1
            if hk > comm_index(H, L).value * comm_index(L, K).value:
                tri += 1
        geo = 0
        for _ in range(samples):
            A, B = sample(rng), sample(rng)
            if geodesic(A, B).length != comm_index(A, B).value:
                geo += 1
        chains = 0
        for _ in range(samples):
            chain = _random_chain(rng, sample)
            if chain_length(chain) != comm_index(chain[0], chain[-1]).value:
                chains += 1
        ctx = {"family": family, "samples": samples, "seed": seed}
        reports.append(compare("metric_symmetry", sym, 0, **ctx))
        reports.append(compare("metric_identity", ident, 0, **ctx))
        reports.append(compare("metric_triangle", tri, 0, **ctx))
        reports.append(compare("geodesic_length", geo, 0, **ctx))
        reports.append(compare("chain_length", chains, 0, **ctx))
    return reports
