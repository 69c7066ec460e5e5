"""Exact arithmetic in Z[w], w a primitive L-th root of unity.

Elements are kept as integer coefficient vectors reduced modulo the L-th
cyclotomic polynomial, so equality is coefficient comparison.  Values of
different orders are lifted to the lcm of the orders before combining.
"""

from __future__ import annotations

import cmath
from functools import lru_cache
from math import lcm


def _polymul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _divmod_monic(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Long division by a monic polynomial; coefficient lists are low degree first."""
    num = list(num)
    d = len(den) - 1
    quot = [0] * max(len(num) - d, 1)
    for i in range(len(num) - 1, d - 1, -1):
        c = num[i]
        if c:
            quot[i - d] = c
            for j, y in enumerate(den):
                num[i - d + j] -= c * y
    return quot, num[:d]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(L: int) -> tuple[int, ...]:
    """Coefficients of the L-th cyclotomic polynomial, constant term first."""
    if L < 1:
        raise ValueError(f"order must be positive, got {L}")
    poly = [-1] + [0] * (L - 1) + [1]
    for d in range(1, L):
        if L % d == 0:
            poly, rem = _divmod_monic(poly, list(cyclotomic_polynomial(d)))
            assert not any(rem)
    return tuple(poly)


def _reduce(coeffs: list[int], L: int) -> tuple[int, ...]:
    phi = cyclotomic_polynomial(L)
    d = len(phi) - 1
    coeffs = list(coeffs) + [0] * max(0, d - len(coeffs))
    if len(coeffs) > d:
        _, coeffs = _divmod_monic(coeffs, list(phi))
    return tuple(coeffs)


class CyclotomicInt:
    """An integer combination of powers of ``w = exp(2 pi i / order)``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs=(0,)):
        self.order = order
        self.coeffs = _reduce(list(coeffs), order)

    @classmethod
    def from_int(cls, value: int, order: int = 1) -> CyclotomicInt:
        return cls(order, [value])

    def lift(self, order: int) -> CyclotomicInt:
        """The same number written in Z[w'] for w' of order ``order``."""
        if order % self.order:
            raise ValueError(f"cannot lift order {self.order} to {order}")
        step = order // self.order
        spread = [0] * (step * (len(self.coeffs) - 1) + 1)
        for i, c in enumerate(self.coeffs):
            spread[i * step] = c
        return CyclotomicInt(order, spread)

    def _coerce(self, other) -> tuple[CyclotomicInt, CyclotomicInt] | None:
        if isinstance(other, int):
            other = CyclotomicInt(self.order, [other])
        elif not isinstance(other, CyclotomicInt):
            return None
        if other.order == self.order:
            return self, other
        m = lcm(self.order, other.order)
        return self.lift(m), other.lift(m)

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CyclotomicInt(a.order, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> CyclotomicInt:
        return CyclotomicInt(self.order, [-x for x in self.coeffs])

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        return pair[0] + (-pair[1])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CyclotomicInt(a.order, _polymul(list(a.coeffs), list(b.coeffs)))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> CyclotomicInt:
        if e < 0:
            raise ValueError("negative powers are not supported")
        result = CyclotomicInt(self.order, [1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conj(self) -> CyclotomicInt:
        """Complex conjugate: ``w**j`` goes to ``w**(order - j)``."""
        out = [0] * self.order
        for j, c in enumerate(self.coeffs):
            out[-j % self.order] += c
        return CyclotomicInt(self.order, out)

    def as_integer(self) -> int | None:
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def __eq__(self, other) -> bool:
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        return pair[0].coeffs == pair[1].coeffs

    # Equality crosses orders, so there is no hash consistent with it.
    __hash__ = None

    def __complex__(self) -> complex:
        w = cmath.exp(2j * cmath.pi / self.order)
        return sum(c * w**j for j, c in enumerate(self.coeffs))

    def __repr__(self) -> str:
        return f"CyclotomicInt({self.order}, {list(self.coeffs)})"

    def __str__(self) -> str:
        value = self.as_integer()
        if value is not None:
            return str(value)
        terms = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            if j == 0:
                body = str(mag)
            else:
                power = "w" if j == 1 else f"w^{j}"
                body = power if mag == 1 else f"{mag}{power}"
            if not terms:
                terms.append(body if c > 0 else "-" + body)
            else:
                terms.append(("+ " if c > 0 else "- ") + body)
        return " ".join(terms) + f" (order {self.order})"


def cyc_root(L: int, e: int) -> CyclotomicInt:
    """``w_L ** e``."""
    if L < 1:
        raise ValueError(f"order must be positive, got {L}")
    coeffs = [0] * L
    coeffs[e % L] = 1
    return CyclotomicInt(L, coeffs)


def cyc_add(a: CyclotomicInt, b: CyclotomicInt) -> CyclotomicInt:
    return a + b


def cyc_mul(a: CyclotomicInt, b: CyclotomicInt) -> CyclotomicInt:
    return a * b


def cyc_neg(a: CyclotomicInt) -> CyclotomicInt:
    return -a


def cyc_conj(a: CyclotomicInt) -> CyclotomicInt:
    return a.conj()


def cyc_as_integer(a: CyclotomicInt) -> int | None:
    return a.as_integer()
