"""Watch the associated primes of I_c(G)^k grow and stabilize.

The paw (a triangle with a pendant edge) is the smallest graph where a new
prime appears at k = 2: the whole vertex set becomes associated one power
after the non-edges and the triangle.  The stable set is predicted without
any ideal arithmetic, from bipartite components of induced subgraphs.
"""

from compedge import (
    Graph,
    ass_infinity,
    ass_first_power,
    complementary_edge_ideal,
    persistence_check,
    power,
    stable_ass_localization,
    strong_persistence_check,
    v_oracle,
)
from compedge.verify import ass_oracle


def show(primes):
    return sorted(sorted(i + 1 for i in f) for f in primes)


paw = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)])
I = complementary_edge_ideal(paw)
print("I_c(paw) =", I)

for k in (1, 2, 3):
    print(f"Ass(I^{k}) =", show(ass_oracle(power(I, k))))

print()
print("first-power formula:", show(ass_first_power(paw)))
pred = ass_infinity(paw)
print("stable-set formula: ", show(pred.stable_set))
print("entry bounds:", {tuple(sorted(i + 1 for i in f)): b for f, b in sorted(pred.entry_bounds.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))})

# the independent depth-zero route: localize at each candidate prime and
# search for a socle witness
print()
print("via localization + socle search:")
for F, k in sorted(stable_ass_localization(I, 3).items(), key=lambda kv: (len(kv[0]), sorted(kv[0]))):
    print(f"  P_{sorted(i + 1 for i in F)} enters at k = {k}")

print()
print("persistence Ass(I) c Ass(I^2) c Ass(I^3):", persistence_check(I, 3).holds)
print("strong persistence I^(k+1):I = I^k (open question, observed):", strong_persistence_check(I, 3).holds)
print("v(I), v(I^2):", v_oracle(I).v, v_oracle(power(I, 2)).v)
