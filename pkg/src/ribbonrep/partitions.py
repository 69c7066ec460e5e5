"""Partitions, compositions and their 0/1 boundary encoding.

Boundary words are stored as strings over ``"0"``/``"1"`` in reading order:
the first character is the step leaving the south-west corner of the
diagram, ``"1"`` an east step (a column) and ``"0"`` a north step (a row).
Public positions are 1-based, as in the usual mathematical notation;
``bits[q - 1]`` is the bit at position ``q``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Iterable, Iterator


class Composition(tuple):
    """A finite sequence of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def scaled(self, r: int):
        """Multiply every part by ``r``."""
        return type(self)(r * p for p in self)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({list(self)})"

    def __str__(self) -> str:
        return ",".join(map(str, self)) if self else "-"

    @classmethod
    def parse(cls, text: str):
        """Parse the comma separated format, ``-`` being the empty sequence."""
        text = text.strip()
        if text in ("-", ""):
            return cls()
        parts = []
        for token in text.split(","):
            if not token.isdigit():
                raise ValueError(f"malformed part {token!r} in {text!r}")
            parts.append(int(token))
        return cls(parts)


class Partition(Composition):
    """A weakly decreasing sequence of positive integers (English convention)."""

    def __new__(cls, parts: Iterable[int] = ()):
        self = super().__new__(cls, parts)
        if any(self[i] < self[i + 1] for i in range(len(self) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {tuple(self)}")
        return self

    def padded(self, k: int) -> tuple[int, ...]:
        """Parts followed by zeros up to ``k`` entries."""
        if k < len(self):
            raise ValueError(f"k={k} is smaller than the number of parts of {self}")
        return tuple(self) + (0,) * (k - len(self))

    def conjugate(self) -> Partition:
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def cells(self) -> frozenset[tuple[int, int]]:
        """Cells as (row, column) pairs, both 0-based."""
        return frozenset((i, j) for i, p in enumerate(self) for j in range(p))

    def odd_parts(self) -> int:
        return sum(p % 2 for p in self)


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in decreasing lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield Partition((first,) + tuple(rest))


@dataclass(frozen=True)
class BoundarySequence:
    """A 0/1 word with its anchor.

    The anchor is reported as the number of bits to its left.  Since
    ``m_i = i - (number of zeros)``, the anchor always sits right after
    as many bits as the word has zeros; prepending a zero therefore moves
    it by one, appending a one leaves it in place.
    """

    bits: str

    def __post_init__(self):
        if set(self.bits) - {"0", "1"}:
            raise ValueError(f"not a 0/1 word: {self.bits!r}")

    @property
    def anchor(self) -> int:
        return self.bits.count("0")

    def __len__(self) -> int:
        return len(self.bits)

    def __getitem__(self, q: int) -> int:
        """Bit at 1-based position ``q``."""
        if not 1 <= q <= len(self.bits):
            raise IndexError(q)
        return int(self.bits[q - 1])

    def canonical(self) -> BoundarySequence:
        """Strip leading zeros and trailing ones."""
        return BoundarySequence(canonical_word(self.bits))

    def is_canonical(self) -> bool:
        return self.bits == canonical_word(self.bits)

    def padded(self, leading: int = 0, trailing: int = 0) -> BoundarySequence:
        return BoundarySequence("0" * leading + self.bits + "1" * trailing)

    def marked(self) -> str:
        """The word with ``|`` at the anchor, e.g. ``11|1010``."""
        a = self.anchor
        return self.bits[:a] + "|" + self.bits[a:]

    def __str__(self) -> str:
        return self.bits


def canonical_word(bits: str) -> str:
    return bits.lstrip("0").rstrip("1")


def boundary_sequence(lam: Partition, pad_rows: int | None = None) -> BoundarySequence:
    """Boundary word of ``lam``; with ``pad_rows`` the word has exactly that many zeros."""
    lam = Partition(lam)
    k = len(lam) if pad_rows is None else pad_rows
    rows = lam.padded(k)
    out = []
    below = 0
    for part in reversed(rows):
        out.append("1" * (part - below) + "0")
        below = part
    return BoundarySequence("".join(out))


def partition_from_boundary(b: BoundarySequence | str) -> Partition:
    """Inverse of :func:`boundary_sequence`; accepts non-canonical words."""
    bits = b.bits if isinstance(b, BoundarySequence) else b
    rows = []
    ones = 0
    for bit in bits:
        if bit == "1":
            ones += 1
        elif bit == "0":
            if ones:
                rows.append(ones)
        else:
            raise ValueError(f"not a 0/1 word: {bits!r}")
    return Partition(reversed(rows))


def m_sequence(bits: str) -> list[int]:
    """``m_i`` = ones among the first ``i`` bits minus zeros after bit ``i``."""
    zeros_after = bits.count("0")
    ones = 0
    out = []
    for bit in bits:
        if bit == "1":
            ones += 1
        else:
            zeros_after -= 1
        out.append(ones - zeros_after)
    return out


def anchor_position(bits: BoundarySequence | str) -> int:
    """The unique ``i`` with ``m_i == 0``; the anchor is the gap after bit ``i``."""
    if isinstance(bits, BoundarySequence):
        bits = bits.bits
    if "0" not in bits or "1" not in bits:
        raise ValueError(f"word must contain both 0s and 1s: {bits!r}")
    return m_sequence(bits).index(0) + 1


def beta_numbers(lam: Partition, k: int) -> tuple[int, ...]:
    """``(l_1 + k - 1, l_2 + k - 2, ..., l_k)``."""
    rows = Partition(lam).padded(k)
    return tuple(p + k - i for i, p in enumerate(rows, start=1))


@dataclass(frozen=True)
class RowColorSequence:
    colors: tuple[int, ...]
    modulus: int

    @property
    def length(self) -> int:
        return len(self.colors)


def row_color_sequence(lam: Partition, k: int, r: int) -> RowColorSequence:
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    return RowColorSequence(tuple(b % r for b in beta_numbers(lam, k)), r)


def dimension(lam: Partition) -> int:
    """Degree of the irreducible character, by the hook length formula."""
    lam = Partition(lam)
    conj = lam.conjugate()
    hooks = 1
    for i, p in enumerate(lam):
        for j in range(p):
            hooks *= (p - j) + (conj[j] - i) - 1
    return factorial(lam.size) // hooks
