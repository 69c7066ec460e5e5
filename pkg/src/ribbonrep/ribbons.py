"""Ribbon peeling on boundary words and ribbon-tableau enumeration.

A ribbon of length ``L`` is peeled by exchanging a ``1`` at position ``q``
with the ``0`` at position ``q + L``.  Positions are 1-based and refer to
the word as given; peeling never trims, so every step of a trace is
reported in the coordinates of the starting boundary word.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .partitions import (
    BoundarySequence,
    Composition,
    Partition,
    boundary_sequence,
    partition_from_boundary,
    partitions,
)
from .quotient import RPartitePartition, r_quotient


def _bits(b: BoundarySequence | str) -> str:
    return b.bits if isinstance(b, BoundarySequence) else BoundarySequence(b).bits


@dataclass(frozen=True)
class PeelStep:
    q: int
    ribbon_length: int
    height: int
    component: int = 0

    def __str__(self) -> str:
        return f"q={self.q} len={self.ribbon_length} ht={self.height}"


@dataclass(frozen=True)
class PeelTrace:
    steps: tuple[PeelStep, ...]
    sign: int

    def recomputed_sign(self) -> int:
        return -1 if sum(s.height for s in self.steps) % 2 else 1

    def dumps(self) -> str:
        lines = [str(s) for s in self.steps]
        lines.append(f"sign={self.sign:+d}")
        return "\n".join(lines)

    @classmethod
    def loads(cls, text: str) -> PeelTrace:
        steps = []
        sign = None
        for line in text.strip().splitlines():
            fields = dict(tok.split("=", 1) for tok in line.split())
            if "sign" in fields:
                sign = int(fields["sign"])
            else:
                steps.append(PeelStep(int(fields["q"]), int(fields["len"]), int(fields["ht"])))
        if sign is None:
            raise ValueError("trace has no sign line")
        return cls(tuple(steps), sign)


def peel_candidates(b: BoundarySequence | str, length: int) -> list[int]:
    """Every ``q`` with a 1 at ``q`` and a 0 at ``q + length``."""
    if length < 1:
        raise ValueError(f"ribbon length must be positive, got {length}")
    bits = _bits(b)
    return [q + 1 for q in range(len(bits) - length) if bits[q] == "1" and bits[q + length] == "0"]


def _swap(bits: str, q: int, length: int) -> str:
    i, j = q - 1, q - 1 + length
    if not (0 <= i and j < len(bits) and bits[i] == "1" and bits[j] == "0"):
        raise ValueError(f"no ribbon of length {length} at q={q} in {bits!r}")
    return bits[:i] + "0" + bits[i + 1 : j] + "1" + bits[j + 1 :]


def peel(b: BoundarySequence | str, q: int, length: int) -> tuple[BoundarySequence, int]:
    """Swap positions ``q`` and ``q + length``; height = zeros strictly between."""
    bits = _bits(b)
    new = _swap(bits, q, length)
    return BoundarySequence(new), bits[q : q - 1 + length].count("0")


def peel_mod(b: BoundarySequence | str, q: int, length: int, r: int) -> tuple[BoundarySequence, int]:
    """Like :func:`peel`, but only zeros at positions congruent to ``q`` mod ``r`` count."""
    if r < 1 or length % r:
        raise ValueError(f"ribbon length {length} is not a multiple of r={r}")
    bits = _bits(b)
    new = _swap(bits, q, length)
    return BoundarySequence(new), bits[q - 1 + r : q - 1 + length : r].count("0")


def enumerate_mu_peelings(lam: Partition, mu: Iterable[int], r: int = 1) -> list[PeelTrace]:
    """All successful ``r*mu`` peelings of ``lam``, last part of ``mu`` first.

    Each step records its mod-r height and the component of the r-quotient
    it acts on.  Dead ends are dropped.
    """
    lam = Partition(lam)
    mu = Composition(mu)
    if lam.size != r * mu.size:
        raise ValueError(f"|{lam}| = {lam.size} is not {r} * |{mu}|")
    bits = boundary_sequence(lam).bits
    offset = -bits.count("0") % r
    traces: list[PeelTrace] = []

    def walk(word: str, remaining: tuple[int, ...], steps: tuple[PeelStep, ...]):
        if not remaining:
            height = sum(s.height for s in steps)
            traces.append(PeelTrace(steps, -1 if height % 2 else 1))
            return
        length = r * remaining[-1]
        for q in peel_candidates(word, length):
            new, ht = peel_mod(word, q, length, r)
            step = PeelStep(q, length, ht, (offset + q - 1) % r)
            walk(new.bits, remaining[:-1], steps + (step,))

    walk(bits, tuple(mu), ())
    return traces


# Diagram based enumeration, deliberately independent of boundary words.


def _is_ribbon(cells: frozenset[tuple[int, int]]) -> bool:
    if not cells:
        return False
    for i, j in cells:
        if {(i + 1, j), (i, j + 1), (i + 1, j + 1)} <= cells:
            return False
    seen = set()
    stack = [next(iter(cells))]
    while stack:
        i, j = stack.pop()
        if (i, j) in seen:
            continue
        seen.add((i, j))
        for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
            if nb in cells and nb not in seen:
                stack.append(nb)
    return len(seen) == len(cells)


def _contained(nu: Partition, lam: Partition) -> bool:
    return len(nu) <= len(lam) and all(a <= b for a, b in zip(nu, lam))


def removable_ribbons(lam: Partition, length: int) -> list[tuple[Partition, frozenset, int]]:
    """``(nu, cells, height)`` for every ribbon ``lam / nu`` of the given length."""
    lam = Partition(lam)
    out = []
    if length > lam.size:
        return out
    full = lam.cells()
    for nu in partitions(lam.size - length):
        if not _contained(nu, lam):
            continue
        cells = full - nu.cells()
        if _is_ribbon(cells):
            rows = {i for i, _ in cells}
            out.append((nu, cells, len(rows) - 1))
    return out


@dataclass(frozen=True)
class RibbonEntry:
    component: int
    cells: frozenset
    height: int
    length: int


@dataclass(frozen=True)
class RPartiteRibbonTableau:
    entries: tuple[RibbonEntry, ...] = field(default=())

    @property
    def sign(self) -> int:
        return -1 if sum(e.height for e in self.entries) % 2 else 1

    @property
    def components(self) -> tuple[int, ...]:
        return tuple(e.component for e in self.entries)

    @property
    def heights(self) -> tuple[int, ...]:
        return tuple(e.height for e in self.entries)


def enumerate_rpartite_tableaux(shape: Iterable, lengths: Iterable[int]) -> list[RPartiteRibbonTableau]:
    """All r-partite ribbon tableaux of ``shape`` whose i-th ribbon has ``lengths[i]`` cells."""
    shape = RPartitePartition(shape)
    lengths = Composition(lengths)
    if shape.total_size != lengths.size:
        raise ValueError(f"shape {shape} has size {shape.total_size}, lengths sum to {lengths.size}")
    out = []

    def walk(current: tuple[Partition, ...], t: int, tail: tuple[RibbonEntry, ...]):
        if t == 0:
            out.append(RPartiteRibbonTableau(tail))
            return
        length = lengths[t - 1]
        for j, comp in enumerate(current):
            for nu, cells, ht in removable_ribbons(comp, length):
                entry = RibbonEntry(j, cells, ht, length)
                walk(current[:j] + (nu,) + current[j + 1 :], t - 1, (entry,) + tail)

    walk(tuple(shape), len(lengths), ())
    return out


def peel_quotient_shapes(lam: Partition, r: int, m: int) -> list[tuple[Partition, RPartitePartition]]:
    """Length ``r*m`` peels of ``lam`` paired with the r-quotient of the result."""
    bits = boundary_sequence(lam).bits
    out = []
    for q in peel_candidates(bits, r * m):
        new, _ = peel(bits, q, r * m)
        smaller = partition_from_boundary(new)
        out.append((smaller, r_quotient(smaller, r)))
    return out
