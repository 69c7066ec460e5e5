"""Murnaghan-Nakayama evaluation for S_n and G wr S_n with G finite abelian."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import factorial, lcm, prod
from collections import Counter
from typing import Iterable

from .cyclotomic import CyclotomicInt, cyc_root
from .partitions import Composition, Partition, boundary_sequence, canonical_word
from .quotient import (
    ColoredCycleType,
    NonEmptyCoreError,
    RPartitePartition,
    has_empty_core,
    r_core,
    rpartite_partitions,
)


@dataclass(frozen=True)
class AbelianGroupSpec:
    """G as a product of cyclic groups; ``AbelianGroupSpec(())`` is trivial.

    Elements and irreducible characters are both residue tuples, listed in
    lexicographic order so that the identity and the trivial character
    come first.
    """

    cyclic_orders: tuple[int, ...] = ()

    def __post_init__(self):
        orders = tuple(int(m) for m in self.cyclic_orders)
        if any(m < 1 for m in orders):
            raise ValueError(f"cyclic orders must be positive: {orders}")
        object.__setattr__(self, "cyclic_orders", tuple(m for m in orders if m > 1))

    @classmethod
    def cyclic(cls, r: int) -> AbelianGroupSpec:
        return cls((r,))

    @classmethod
    def parse(cls, text: str) -> AbelianGroupSpec:
        """``"3"`` is Z_3, ``"2x2"`` is Z_2 x Z_2."""
        orders = []
        for token in text.strip().lower().split("x"):
            if not token.isdigit() or int(token) < 1:
                raise ValueError(f"malformed group factor {token!r} in {text!r}")
            orders.append(int(token))
        return cls(tuple(orders))

    @property
    def order(self) -> int:
        return prod(self.cyclic_orders)

    @property
    def exponent(self) -> int:
        return lcm(*self.cyclic_orders) if self.cyclic_orders else 1

    @property
    def elements(self) -> list[tuple[int, ...]]:
        return list(product(*(range(m) for m in self.cyclic_orders)))

    def theta(self, a: int, g: int) -> CyclotomicInt:
        """Value of the ``a``-th irreducible character at the ``g``-th element."""
        elems = self.elements
        L = self.exponent
        e = sum((L // m) * x * y for m, x, y in zip(self.cyclic_orders, elems[a], elems[g]))
        return cyc_root(L, e)

    def __str__(self) -> str:
        return "x".join(map(str, self.cyclic_orders)) or "1"


def _peels(word: str, length: int) -> Iterable[tuple[str, int, int]]:
    """``(new word, full height, q)`` for each ribbon of the given length."""
    for q in range(len(word) - length):
        if word[q] == "1" and word[q + length] == "0":
            new = word[:q] + "0" + word[q + 1 : q + length] + "1" + word[q + length + 1 :]
            yield canonical_word(new), word[q + 1 : q + length].count("0"), q


@lru_cache(maxsize=None)
def _mn(word: str, lengths: tuple[int, ...]) -> int:
    if not lengths:
        return 1 if not word else 0
    total = 0
    for new, ht, _ in _peels(word, lengths[-1]):
        value = _mn(new, lengths[:-1])
        total += -value if ht % 2 else value
    return total


@lru_cache(maxsize=None)
def _mn_mod(word: str, lengths: tuple[int, ...], r: int) -> int:
    if not lengths:
        return 1 if not word else 0
    total = 0
    length = r * lengths[-1]
    for new, _, q in _peels(word, length):
        ht = word[q + r : q + length : r].count("0")
        value = _mn_mod(new, lengths[:-1], r)
        total += -value if ht % 2 else value
    return total


def chi_sn(lam: Iterable[int], mu: Iterable[int]) -> int:
    """Irreducible character of S_n indexed by ``lam`` at cycle type ``mu``."""
    lam = Partition(lam)
    mu = Composition(mu)
    if lam.size != mu.size:
        raise ValueError(f"|{lam}| = {lam.size} differs from |{mu}| = {mu.size}")
    return _mn(boundary_sequence(lam).bits, tuple(mu))


def psi_zero_colored(lam: Iterable[int], mu: Iterable[int], r: int) -> int:
    """Value of the Z_r wr S_n character labelled by ``lam`` (in Par_r) at ``(mu, -, ..., -)``."""
    lam = Partition(lam)
    mu = Composition(mu)
    if lam.size != r * mu.size:
        raise ValueError(f"|{lam}| = {lam.size} is not {r} * |{mu}|")
    if not has_empty_core(lam, r):
        raise NonEmptyCoreError(lam, r, r_core(lam, r))
    return _mn_mod(boundary_sequence(lam).bits, tuple(mu), r)


@lru_cache(maxsize=None)
def _wreath(words: tuple[str, ...], cycles: tuple[tuple[int, int], ...], group: AbelianGroupSpec) -> CyclotomicInt:
    L = group.exponent
    if not cycles:
        return CyclotomicInt(L, [0 if any(words) else 1])
    length, color = cycles[-1]
    total = CyclotomicInt(L, [0])
    for j, word in enumerate(words):
        for new, ht, _ in _peels(word, length):
            rest = _wreath(words[:j] + (new,) + words[j + 1 :], cycles[:-1], group)
            if rest.as_integer() == 0:
                continue
            term = rest * group.theta(j, color)
            total = total - term if ht % 2 else total + term
    return total


def _cycles(c: ColoredCycleType) -> tuple[tuple[int, int], ...]:
    return tuple((p, g) for g, part in enumerate(c) for p in part)


def psi_wreath(lam: Iterable, c: Iterable, group: AbelianGroupSpec) -> CyclotomicInt:
    """Irreducible character ``lam`` of G wr S_n at the class of colored cycle type ``c``."""
    lam = RPartitePartition(lam)
    c = ColoredCycleType(c)
    r = group.order
    if lam.arity != r or c.arity != r:
        raise ValueError(f"labels must have {r} components, got {lam} and {c}")
    if lam.total_size != c.total_size:
        raise ValueError(f"{lam} and {c} have different sizes")
    words = tuple(boundary_sequence(p).bits for p in lam)
    return _wreath(words, _cycles(c), group)


def centralizer_order(c: Iterable, group: AbelianGroupSpec) -> int:
    r = group.order
    out = 1
    for part in ColoredCycleType(c):
        for i, m in Counter(part).items():
            out *= i**m * factorial(m) * r**m
    return out


def class_size(c: Iterable, group: AbelianGroupSpec) -> int:
    c = ColoredCycleType(c)
    n = c.total_size
    return group.order**n * factorial(n) // centralizer_order(c, group)


@dataclass(frozen=True)
class CharacterTable:
    group: AbelianGroupSpec
    n: int
    labels: tuple[RPartitePartition, ...]
    classes: tuple[ColoredCycleType, ...]
    entries: tuple[tuple[CyclotomicInt, ...], ...]
    class_sizes: tuple[int, ...]

    @property
    def group_order(self) -> int:
        return self.group.order**self.n * factorial(self.n)

    def to_tsv(self) -> str:
        lines = ["\t".join(["label"] + [str(c) for c in self.classes])]
        lines.append("\t".join(["class_size"] + [str(s) for s in self.class_sizes]))
        for label, row in zip(self.labels, self.entries):
            lines.append("\t".join([str(label)] + [str(v) for v in row]))
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        """Entries are coefficient lists modulo the cyclotomic polynomial of ``order``."""
        L = self.group.exponent
        return {
            "schema": "ribbonrep.table/1",
            "group": str(self.group),
            "n": self.n,
            "order": L,
            "labels": [str(x) for x in self.labels],
            "classes": [str(x) for x in self.classes],
            "class_sizes": list(self.class_sizes),
            "entries": [[list(v.lift(L).coeffs) for v in row] for row in self.entries],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def character_table(group: AbelianGroupSpec, n: int) -> CharacterTable:
    r = group.order
    labels = tuple(rpartite_partitions(r, n))
    entries = tuple(tuple(psi_wreath(lam, c, group) for c in labels) for lam in labels)
    return CharacterTable(
        group=group,
        n=n,
        labels=labels,
        classes=labels,
        entries=entries,
        class_sizes=tuple(class_size(c, group) for c in labels),
    )
