"""How equilibrium enumeration works: polyhedra, labels, and joint cover.

Each player's best responses organize into a polyhedron. The row player's
P lives in (x, v) space: x is a mixed strategy and v bounds every column
payoff x B from above. The column player's Q lives in (y, u) space with
A y <= u. Every inequality carries a label from 1..m+n, and a pair of
vertices (one from each polyhedron) is a Nash equilibrium exactly when
their binding labels jointly cover all of 1..m+n: every strategy is either
unplayed or a best response.
"""

from rankgames import (
    build_polyhedra,
    enumerate_equilibria,
    enumerate_vertices,
    is_nondegenerate,
    rank1_family,
)

print(__doc__)

d = 3
game = rank1_family(d)
print(f"the rank-1 family at d = {d}; payoff sum is 4ij, rank 1")
print()

p_poly, q_poly = build_polyhedra(game)
print(f"Q side: labels 1..{d} are best-response rows, "
      f"labels {d + 1}..{2 * d} are y >= 0")
verts = enumerate_vertices(q_poly)
print(f"{len(verts)} vertices (census says d(d^2+5)/6 = {d * (d * d + 5) // 6}):")
for v in verts:
    y = ",".join(str(e) for e in v.strategy)
    labels = sorted(v.binding)
    print(f"  y = ({y}), payoff bound u = {v.payoff}, binding {labels}")
print()
print("note every vertex binds at most two best-response rows: that is the")
print("geometric reason the family is nondegenerate, hence finitely many")
print(f"equilibria. is_nondegenerate: {is_nondegenerate(game)}")
print()

eqset = enumerate_equilibria(game)
print(f"pairing vertices whose labels jointly cover 1..{2 * d} yields "
      f"{len(eqset.reports)} equilibria (2d - 1 = {2 * d - 1}):")
for rep in eqset.reports:
    x = ",".join(str(e) for e in rep.profile.x)
    y = ",".join(str(e) for e in rep.profile.y)
    print(f"  x = ({x}), y = ({y}), payoffs ({rep.payoff1}, {rep.payoff2})")
print()
print("none of these are exchangeable with each other, so each is its own")
print(f"connected component: {eqset.component_count} components.")
print("zero-sum games have a convex (hence connected) equilibrium set; a")
print("rank-1 payoff sum already allows arbitrarily many components.")
