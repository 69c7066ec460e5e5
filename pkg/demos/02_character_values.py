"""Character values of S_n and of wreath products, exactly."""

from ribbonrep import AbelianGroupSpec, character_table, chi_sn, enumerate_mu_peelings, psi_zero_colored

# S_4: the standard representation at a 3-cycle
print("chi^(3,1) at (3,1):", chi_sn((3, 1), (3, 1)))

# every peeling that contributes to one zero-colored value, with its sign
lam, mu = (10, 6, 6, 6, 4, 1), (3, 2, 4, 2)
traces = enumerate_mu_peelings(lam, mu, 3)
for t in traces:
    print(t.dumps().replace("\n", "  "))
print("psi =", psi_zero_colored(lam, mu, 3), "= sum of", len(traces), "signs")

# a small complete table; entries live in Z[w], w a primitive 3rd root of unity
table = character_table(AbelianGroupSpec.cyclic(3), 2)
print(table.to_tsv())
print("group order", table.group_order, "with", len(table.classes), "classes")
