"""The r-sign of a partition with empty r-core.

Three routes are provided: the inversion count of the row-color sequence
against that of the empty partition, the adjacent-transposition distance
between the two words, and, for r = 2, the count of odd parts.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable

from .partitions import Partition, row_color_sequence
from .quotient import NonEmptyCoreError, has_empty_core, r_core


def _inversions(seq) -> int:
    return sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])


def _require_core(lam: Partition, r: int):
    if not has_empty_core(lam, r):
        raise NonEmptyCoreError(lam, r, r_core(lam, r))


def _default_k(lam: Partition) -> int:
    return max(len(lam), 1)


def inv_r(lam: Iterable[int], k: int, r: int) -> int:
    """Number of pairs ``i < j`` with ``a_i > a_j`` in the length-k row-color sequence."""
    return _inversions(row_color_sequence(Partition(lam), k, r).colors)


def _sign_at(lam: Partition, k: int, r: int) -> int:
    diff = inv_r(lam, k, r) - inv_r(Partition(), k, r)
    return -1 if diff % 2 else 1


def sign_r(lam: Iterable[int], r: int, k: int | None = None) -> int:
    lam = Partition(lam)
    _require_core(lam, r)
    k = _default_k(lam) if k is None else k
    s = _sign_at(lam, k, r)
    if s != _sign_at(lam, k + 1, r):
        raise RuntimeError(f"sign of {lam} depends on k at k={k}")
    return s


def word_distance(source, target) -> int:
    """Fewest adjacent transpositions turning ``source`` into ``target``.

    Equal letters are matched in order; the inversion number of the
    induced permutation is the distance.
    """
    if sorted(source) != sorted(target):
        raise ValueError(f"{source} and {target} are not rearrangements of each other")
    slots = defaultdict(list)
    for i, x in enumerate(target):
        slots[x].append(i)
    used: dict = defaultdict(int)
    perm = []
    for x in source:
        perm.append(slots[x][used[x]])
        used[x] += 1
    return _inversions(perm)


def d_r_distance(lam: Iterable[int], r: int, k: int | None = None) -> int:
    lam = Partition(lam)
    _require_core(lam, r)
    k = _default_k(lam) if k is None else k
    return word_distance(
        row_color_sequence(lam, k, r).colors,
        row_color_sequence(Partition(), k, r).colors,
    )


def sign2_closed(lam: Iterable[int]) -> int:
    """``(-1) ** (odd parts / 2)`` for a partition with empty 2-core."""
    lam = Partition(lam)
    _require_core(lam, 2)
    return -1 if (lam.odd_parts() // 2) % 2 else 1


@dataclass(frozen=True)
class SignReport:
    lam: Partition
    r: int
    k_used: int
    inv_count: int
    inv_count_empty: int
    d_r: int
    sign: int
    sign2_closed: int | None = None

    @property
    def consistent(self) -> bool:
        ok = self.sign == (-1) ** (self.d_r % 2)
        if self.sign2_closed is not None:
            ok = ok and self.sign == self.sign2_closed
        return ok

    def to_json(self) -> dict:
        out = {
            "lambda": list(self.lam),
            "r": self.r,
            "k": self.k_used,
            "inv": self.inv_count,
            "inv_empty": self.inv_count_empty,
            "d": self.d_r,
            "sign": self.sign,
        }
        if self.sign2_closed is not None:
            out["sign2_closed"] = self.sign2_closed
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def sign_report(lam: Iterable[int], r: int, k: int | None = None) -> SignReport:
    """Every route to the sign, side by side; disagreements show up in ``consistent``."""
    lam = Partition(lam)
    _require_core(lam, r)
    k = _default_k(lam) if k is None else k
    inv = inv_r(lam, k, r)
    inv0 = inv_r(Partition(), k, r)
    return SignReport(
        lam=lam,
        r=r,
        k_used=k,
        inv_count=inv,
        inv_count_empty=inv0,
        d_r=d_r_distance(lam, r, k),
        sign=-1 if (inv - inv0) % 2 else 1,
        sign2_closed=sign2_closed(lam) if r == 2 else None,
    )
