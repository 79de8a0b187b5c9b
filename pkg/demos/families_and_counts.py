"""Tour of the game constructors and the counting formulas they illustrate.

A bimatrix game (A, B) is called a rank-k game when rank(A + B) <= k.
Zero-sum games are exactly the rank-0 case, and much of their tractability
survives at small positive rank. What does not survive is uniqueness-like
behavior: already at rank 1 a d x d game can have 2d - 1 isolated Nash
equilibria, and this script builds the families that show it.
"""

from rankgames import (
    block_game,
    block_hierarchy_count,
    bound_report,
    enumerate_equilibria,
    format_game_text,
    identity_game,
    keiding_phi,
    rank1_family,
    squared_difference_family,
    tau,
)


def show(title, game):
    print(f"--- {title} ---")
    print(format_game_text(game), end="")
    print(f"rank(A+B) = {game.rank_c}, |A+B| = {game.norm_c}")
    eqset = enumerate_equilibria(game)
    print(f"equilibria: {len(eqset.reports)}, components: {eqset.component_count}")
    print()


print(__doc__)

# The headline family: payoff sum 4ij has rank 1, yet 2d - 1 equilibria.
for d in (2, 3, 4):
    show(f"rank-1 family, d = {d}", rank1_family(d))

# Same equilibria from a different construction: both players get -(i - j)^2.
# Its payoff sum has rank 3, which shows the count is not an artifact of one
# particular matrix.
show("squared-difference family, d = 3", squared_difference_family(3))

# The coordination game on the identity matrix: 2^d - 1 equilibria, which
# meets the lower-bound formula tau(d) at d = 2 and d = 4.
show("identity game, d = 4", identity_game(4))
print(f"tau(4) = {tau(4)} = 2^4 - 1: the identity game is tight there")
print()

# Nesting one game inside another multiplies the count: the inner game's
# equilibria recur around each diagonal equilibrium of the outer game.
block = block_game(identity_game(2), rank1_family(3))
show("block(identity(2), rank1(3)), d = 5", block)
print(f"guaranteed by the hierarchy formula: >= {block_hierarchy_count(5, 3)}")
print()

# Upper bounds for context: no nondegenerate d x d game beats Keiding's count.
for d in (2, 3, 4, 5, 6):
    rep = bound_report(d, k=1)
    tau_part = f"tau({d}) = {rep.tau_lower}" if rep.tau_lower else "tau undefined"
    print(f"d = {d}: {tau_part}, Phi - 1 = {keiding_phi(d, 2 * d) - 1}, "
          f"component bound at rank 1 = {rep.component_bound}")
