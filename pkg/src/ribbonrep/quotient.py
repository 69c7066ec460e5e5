"""r-cores, r-quotients and the interlacing map ``phi_r``.

Component ``i`` of an r-quotient occupies interleaved slot ``i`` (0-based)
of the padded boundary word.  Abacus based conventions differ from this
one by a cyclic shift of the components.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Iterator

from .partitions import (
    Partition,
    boundary_sequence,
    canonical_word,
    partition_from_boundary,
    partitions,
)


class NonEmptyCoreError(ValueError):
    """Raised when a partition with a nonempty r-core is given where Par_r is required."""

    def __init__(self, lam: Partition, r: int, core: Partition):
        super().__init__(f"{lam} has nonempty {r}-core {core}")
        self.lam = lam
        self.r = r
        self.core = core


class RPartitePartition(tuple):
    """An r-tuple of partitions, printed as ``[4,3|2|1,1]``."""

    def __new__(cls, components: Iterable[Iterable[int]]):
        comps = tuple(Partition(c) for c in components)
        if not comps:
            raise ValueError("an r-partite partition needs at least one component")
        return super().__new__(cls, comps)

    @property
    def arity(self) -> int:
        return len(self)

    @property
    def total_size(self) -> int:
        return sum(c.size for c in self)

    def __repr__(self) -> str:
        return f"RPartitePartition({str(self)})"

    def __str__(self) -> str:
        return "[" + "|".join(str(c) for c in self) + "]"

    @classmethod
    def parse(cls, text: str) -> RPartitePartition:
        text = text.strip()
        if text.startswith("[") and text.endswith("]"):
            text = text[1:-1]
        return cls(Partition.parse(chunk) for chunk in text.split("|"))


# Cycle types of G wr S_n are indexed the same way, one partition per group element.
ColoredCycleType = RPartitePartition


def rpartite_partitions(r: int, n: int) -> Iterator[RPartitePartition]:
    """All r-partite partitions of ``n``; ``((n), -, ..., -)`` comes first."""

    def sizes(total: int, slots: int) -> Iterator[tuple[int, ...]]:
        if slots == 1:
            yield (total,)
            return
        for first in range(total, -1, -1):
            for rest in sizes(total - first, slots - 1):
                yield (first,) + rest

    for split in sizes(n, r):
        for comps in product(*(list(partitions(s)) for s in split)):
            yield RPartitePartition(comps)


def phi_r(t: Iterable[Iterable[int]]) -> Partition:
    """Interlace the boundary words of the components of ``t``."""
    t = RPartitePartition(t)
    r = t.arity
    words = [boundary_sequence(c).bits for c in t]
    anchor = max(w.count("0") for w in words)
    right = max(w.count("1") for w in words)
    padded = []
    for w in words:
        lead = anchor - w.count("0")
        padded.append("0" * lead + w + "1" * (right - w.count("1")))
    merged = "".join(padded[j][i] for i in range(anchor + right) for j in range(r))
    return partition_from_boundary(merged)


def _split(lam: Partition, r: int) -> list[str]:
    """De-interlace the boundary word of ``lam`` into ``r`` words."""
    bits = boundary_sequence(lam).bits
    lead = -bits.count("0") % r
    bits = "0" * lead + bits
    bits += "1" * (-len(bits) % r)
    return [bits[j::r] for j in range(r)]


def r_core(lam: Partition, r: int) -> Partition:
    """Peel length-r ribbons (leftmost switch first) until none is left."""
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    bits = boundary_sequence(lam).bits
    while True:
        for q in range(len(bits) - r):
            if bits[q] == "1" and bits[q + r] == "0":
                bits = canonical_word(bits[:q] + "0" + bits[q + 1 : q + r] + "1" + bits[q + r + 1 :])
                break
        else:
            return partition_from_boundary(bits)


def r_quotient(lam: Partition, r: int) -> RPartitePartition:
    """The preimage of ``lam`` under :func:`phi_r`."""
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    lam = Partition(lam)
    parts = _split(lam, r)
    if len({w.count("0") for w in parts}) > 1:
        raise NonEmptyCoreError(lam, r, r_core(lam, r))
    return RPartitePartition(partition_from_boundary(w) for w in parts)


def has_empty_core(lam: Partition, r: int) -> bool:
    return len({w.count("0") for w in _split(Partition(lam), r)}) == 1


def enumerate_par_r(r: int, n: int) -> list[Partition]:
    """Partitions of ``r*n`` with empty r-core, in decreasing lexicographic order."""
    return sorted((phi_r(t) for t in rpartite_partitions(r, n)), reverse=True)

