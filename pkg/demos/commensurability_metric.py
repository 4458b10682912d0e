"""Walk through the commensurability graph over both subgroup families.

Two subgroups are one edge apart with weight [A : A&B]*[B : A&B]; the log
of that weight is a genuine metric, geodesics run through the
intersection, and balls around a basepoint are finite and enumerable.
"""

from commgrowth import (RationalCyclic, RationalLattice, chain_length,
                        check_transfer_inequality, comm_index, distance,
                        enumerate_ball, geodesic, run_metric_checks)

Z = RationalCyclic(1, 1)
half = RationalCyclic(1, 2)
thirds = RationalCyclic(3, 2)

print("=== cyclic subgroups of the rationals ===")
print(f"c(Z, (3/2)Z): left {comm_index(Z, thirds).left_index}, "
      f"right {comm_index(Z, thirds).right_index}, "
      f"value {comm_index(Z, thirds).value}")
print(f"d(Z, (1/2)Z) = {distance(Z, half):.4f} = log 2")

path = geodesic(RationalCyclic(2, 1), RationalCyclic(3, 1))
print("geodesic 2Z -> 3Z:", " -> ".join(str(v) for v in path.vertices),
      "| length", path.length)

chain = [RationalCyclic(12, 1), RationalCyclic(6, 1), RationalCyclic(3, 1)]
print("nested chain 12Z <= 6Z <= 3Z has length", chain_length(chain),
      "= c(12Z, 3Z) =", comm_index(chain[0], chain[-1]).value)

print()
print("=== balls around the integers ===")
for n in (1, 2, 6, 12):
    ball = enumerate_ball(Z, n)
    print(f"|ball(Z, {n:>2})| = {len(ball):>3}   members at exact index {n}: "
          f"{[str(s) for s in ball if comm_index(Z, s).value == n]}")

print()
print("=== planar lattices ===")
Z2 = RationalLattice.standard(2)
ball2 = enumerate_ball(Z2, 2)
print(f"|ball(Z^2, 2)| = {len(ball2)}:")
for L in ball2:
    print("  ", L)

print()
print("moving the basepoint dilates the ball radius by c(A,B):")
report = check_transfer_inequality(Z2, RationalLattice.scaled(2, 2), 2)
print(f"  |ball(Z^2, 2)| = {report.lhs} <= |ball(2Z^2, {report.context['c_ab']}*2)| "
      f"= {report.rhs}")

print()
print("=== seeded property sweep ===")
for r in run_metric_checks(samples=300, seed=1):
    print(" ", r)
