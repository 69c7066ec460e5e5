"""Exhaustive sweeps, the kind the CLI `verify` subcommand runs."""

import json

from ribbonrep import AbelianGroupSpec, verify_degree_fact, verify_identity, verify_identity_abelian

for r in (2, 3, 4):
    for n in (1, 2, 3, 4):
        print(verify_identity(r, n).summary())

# Z_4 against the Klein group: same size, same answers
cyc = verify_identity_abelian(AbelianGroupSpec((4,)), 3)
klein = verify_identity_abelian(AbelianGroupSpec((2, 2)), 3)
print("profiles agree:", cyc.profile() == klein.profile())
print(json.dumps(klein.to_json(timing=False), indent=2))

print(verify_degree_fact(5).summary())
