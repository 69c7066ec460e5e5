"""Boundary words, anchors, cores and quotients, step by step."""

from ribbonrep import (
    Partition,
    RPartitePartition,
    boundary_sequence,
    partition_from_boundary,
    phi_r,
    r_core,
    r_quotient,
)

lam = Partition((4, 3))
b = boundary_sequence(lam)
print("boundary of", lam, "is", b.bits, "anchor after", b.anchor, "bits:", b.marked())

# padding with rows of length zero only prepends 0s
print("padded to 4 rows:", boundary_sequence(lam, pad_rows=4).bits)
print("round trip:", partition_from_boundary(b.bits))

# glue three partitions into one with empty 3-core
triple = RPartitePartition([(4, 3), (2,), (1, 1)])
big = phi_r(triple)
print(triple, "->", big, "size", big.size, "= 3 *", triple.total_size)
print("and back:", r_quotient(big, 3))

# most partitions do have a core; the quotient map then refuses
for mu in [Partition((3, 2, 1)), Partition((5, 1)), Partition((2, 2))]:
    print(f"2-core of {mu}: {r_core(mu, 2)}")
