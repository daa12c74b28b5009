"""Build complementary edge ideals and play with the basic operations.

Every edge {i,j} of a graph G on n vertices contributes the generator
(x_1...x_n)/(x_i x_j), a squarefree monomial of degree n-2.  Dense graphs
give many generators, sparse graphs few.
"""

from compedge import (
    Graph,
    complementary_edge_ideal,
    cycle_graph,
    edge_ideal,
    intersect,
    localize,
    matching_graph,
    path_graph,
    power,
)

for name, g in [
    ("P_3", path_graph(3)),
    ("C_4", cycle_graph(4)),
    ("2K_2", matching_graph(2)),
    ("paw", Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)])),
]:
    I = complementary_edge_ideal(g)
    print(f"I_c({name}) = {I}")
    print(f"I({name})   = {edge_ideal(g)}")

print()
I = complementary_edge_ideal(matching_graph(2))
print("I = I_c(2K_2) =", I)
print("I^2 =", power(I, 2))
print("I^3 has", len(power(I, 3).generators), "minimal generators")

# monomial localization: substitute 1 for the variables outside F.
# F = {1, 2} kills the generator x3*x4 entirely, leaving the unit ideal.
print()
print("I localized at {1,2}:", localize(I, [0, 1]))
print("I localized at {1,3}:", localize(I, [0, 2]))

# intersections compute meets of generator lcms
J = complementary_edge_ideal(cycle_graph(4))
print()
print("I_c(2K_2) meet I_c(C_4) =", intersect(I, J))
