"""Finite crystallographic root systems in the simple-root basis.

Roots are stored purely as integer coefficient vectors over the simple
roots; no Euclidean embedding is kept.  Positive roots are generated by
root-string closure from the Cartan matrix, and the hard-coded table of
Weyl degrees is validated against that enumeration every time a system is
built (the count of positive roots must equal sum(d_i - 1)).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError

_LABEL_RE = re.compile(r"^([A-Ga-g])(\d+)$")

# minimal rank per family; E is special-cased to {6, 7, 8}
_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4, "E": 6, "F": 4, "G": 2}


@dataclass(frozen=True)
class RootSystem:
    """Combinatorial data of one simple Lie type.

    ``cartan[i][j]`` is the pairing of simple root i against the coroot of
    simple root j.  ``positive_roots`` lists coefficient vectors in the
    simple-root basis, sorted by height then lexicographically; the simple
    roots themselves appear as unit vectors.
    """

    label: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]
    degrees: tuple[int, ...]

    @property
    def num_positive_roots(self) -> int:
        return len(self.positive_roots)

    @property
    def dimension(self) -> int:
        """Group dimension 2N + l for N positive roots and rank l."""
        return 2 * len(self.positive_roots) + self.rank

    @property
    def highest_root(self) -> tuple[int, ...]:
        return self.positive_roots[-1]

    def pairing(self, coeffs, root) -> int:
        """Pair a coweight written on the fundamental coweights against a
        root written on the simple roots.

        Fundamental coweights are dual to the simple roots, so the pairing
        is the plain dot product of the two coefficient vectors.
        """
        coeffs = tuple(coeffs)
        root = tuple(root)
        if len(coeffs) != self.rank or len(root) != self.rank:
            raise DomainError(
                f"expected length-{self.rank} vectors, got {len(coeffs)} and {len(root)}")
        return sum(a * r for a, r in zip(coeffs, root))


def _parse_label(label: str) -> tuple[str, int]:
    m = _LABEL_RE.match(label.strip())
    if not m:
        raise DomainError(f"malformed type label {label!r}")
    family = m.group(1).upper()
    rank = int(m.group(2))
    if family == "E":
        if rank not in (6, 7, 8):
            raise DomainError(f"type E exists only in ranks 6, 7, 8, got {rank}")
    elif family == "F":
        if rank != 4:
            raise DomainError(f"type F exists only in rank 4, got {rank}")
    elif family == "G":
        if rank != 2:
            raise DomainError(f"type G exists only in rank 2, got {rank}")
    elif rank < _MIN_RANK[family]:
        raise DomainError(f"type {family} requires rank >= {_MIN_RANK[family]}, got {rank}")
    return family, rank


def _chain_cartan(l: int) -> list[list[int]]:
    c = [[0] * l for _ in range(l)]
    for i in range(l):
        c[i][i] = 2
        if i + 1 < l:
            c[i][i + 1] = -1
            c[i + 1][i] = -1
    return c


def _tree_cartan(l: int, edges) -> list[list[int]]:
    c = [[0] * l for _ in range(l)]
    for i in range(l):
        c[i][i] = 2
    for i, j in edges:
        c[i][j] = -1
        c[j][i] = -1
    return c


def _cartan_matrix(family: str, l: int) -> list[list[int]]:
    if family == "A":
        return _chain_cartan(l)
    if family == "B":
        # last simple root short: its coroot pairs to -2 against the neighbor
        c = _chain_cartan(l)
        c[l - 2][l - 1] = -2
        c[l - 1][l - 2] = -1
        return c
    if family == "C":
        c = _chain_cartan(l)
        c[l - 2][l - 1] = -1
        c[l - 1][l - 2] = -2
        return c
    if family == "D":
        return _tree_cartan(l, [(i, i + 1) for i in range(l - 2)] + [(l - 3, l - 1)])
    if family == "G":
        return [[2, -1], [-3, 2]]
    if family == "F":
        c = _chain_cartan(4)
        c[1][2] = -2
        c[2][1] = -1
        return c
    # E6/E7/E8, Bourbaki node order: chain 1-3-4-5-..., node 2 hangs off node 4
    edges = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(i, i + 1) for i in range(4, l - 1)]
    return _tree_cartan(l, edges)


def _degrees(family: str, l: int) -> tuple[int, ...]:
    if family == "A":
        return tuple(range(2, l + 2))
    if family in ("B", "C"):
        return tuple(range(2, 2 * l + 1, 2))
    if family == "D":
        return tuple(sorted(list(range(2, 2 * l - 1, 2)) + [l]))
    return {
        ("G", 2): (2, 6),
        ("F", 4): (2, 6, 8, 12),
        ("E", 6): (2, 5, 6, 8, 9, 12),
        ("E", 7): (2, 6, 8, 10, 12, 14, 18),
        ("E", 8): (2, 8, 12, 14, 18, 20, 24, 30),
    }[(family, l)]


def _closure(cartan) -> list[tuple[int, ...]]:
    """All positive roots by root-string closure from the simple roots.

    A candidate alpha + alpha_i is a root iff q >= 1 in the alpha_i-string
    alpha - p*alpha_i ... alpha + q*alpha_i, where p - q equals the pairing
    of alpha against the coroot of alpha_i.
    """
    l = len(cartan)
    simple = [tuple(int(i == j) for j in range(l)) for i in range(l)]
    found = set(simple)
    frontier = list(simple)
    while frontier:
        fresh = []
        for alpha in frontier:
            for i in range(l):
                pair = sum(a * cartan[j][i] for j, a in enumerate(alpha))
                p = 0
                down = list(alpha)
                while True:
                    down[i] -= 1
                    if tuple(down) not in found:
                        break
                    p += 1
                if p - pair >= 1:
                    up = list(alpha)
                    up[i] += 1
                    t = tuple(up)
                    if t not in found:
                        found.add(t)
                        fresh.append(t)
        frontier = fresh
    return sorted(found, key=lambda r: (sum(r), r))


@lru_cache(maxsize=None)
def root_system(label: str) -> RootSystem:
    """Build the root system for a type label such as "A3", "C2", "E8".

    Well-formed labels: A_l (l >= 1), B_l (l >= 2), C_l (l >= 2),
    D_l (l >= 4), E6, E7, E8, F4, G2.
    """
    family, rank = _parse_label(label)
    cartan = _cartan_matrix(family, rank)
    positive = _closure(cartan)
    degrees = _degrees(family, rank)
    # the degree table and the closure enumeration must agree
    assert len(positive) == sum(d - 1 for d in degrees), (family, rank)
    return RootSystem(
        label=f"{family}{rank}",
        rank=rank,
        cartan=tuple(tuple(row) for row in cartan),
        positive_roots=tuple(positive),
        degrees=tuple(degrees),
    )


def supported_labels(max_rank: int = 8) -> list[str]:
    """Every well-formed label with rank up to max_rank."""
    out = [f"A{l}" for l in range(1, max_rank + 1)]
    out += [f"B{l}" for l in range(2, max_rank + 1)]
    out += [f"C{l}" for l in range(2, max_rank + 1)]
    out += [f"D{l}" for l in range(4, max_rank + 1)]
    out += [e for e in ("E6", "E7", "E8") if int(e[1]) <= max_rank]
    if max_rank >= 4:
        out.append("F4")
    if max_rank >= 2:
        out.append("G2")
    return out
