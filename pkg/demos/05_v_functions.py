"""The v-function of I_c(G)^k is linear from the very first power.

Its value is (n-2)k - 1 except when G is a perfect matching tK_2 with
t >= 2, where no witness of that degree exists and the v-number is (n-2)k.
The oracle below finds the cheapest monomial u with (I^k : u) prime by
exhaustive search and reports the witness.
"""

from compedge import (
    Graph,
    complementary_edge_ideal,
    complete_graph,
    matching_graph,
    power,
    v_closed_form,
    v_oracle,
    vstab,
)

for name, g in [
    ("K_3", complete_graph(3)),
    ("paw", Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)])),
    ("2K_2", matching_graph(2)),
    ("3K_2", matching_graph(3)),
]:
    I = complementary_edge_ideal(g)
    print(f"{name}: vstab = {vstab(g)}")
    for k in (1, 2):
        w = v_oracle(power(I, k))
        print(
            f"  k={k}: v = {w.v} (formula {v_closed_form(g, k)}), "
            f"witness {w.witness} with prime P_{sorted(i + 1 for i in w.prime)}"
        )

print()
print("slope (n-2) and the matching exception:")
for t in (2, 3):
    g = matching_graph(t)
    print(f"  {t}K_2: v(I^k) = {v_closed_form(g, 1)}, {v_closed_form(g, 2)}, {v_closed_form(g, 3)}, ...")
