"""Exhaustive checks of psi_(mu, -, ..., -) = sign_r(lam) * chi_(r mu).

Work is sharded by ``lam``; shards are merged in the fixed order of
:func:`enumerate_par_r`, so reports do not depend on the number of jobs.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations
from typing import Callable, Sequence

from .characters import AbelianGroupSpec, chi_sn, psi_wreath, psi_zero_colored
from .partitions import Composition, Partition, partitions
from .quotient import RPartitePartition, enumerate_par_r, r_quotient
from .signs import sign_r


@dataclass(frozen=True)
class Failure:
    lam: Partition
    mu: Composition
    psi: str
    chi: int
    sign: int

    def to_json(self) -> dict:
        return {"lambda": str(self.lam), "mu": str(self.mu), "psi": self.psi, "chi": self.chi, "sign": self.sign}


@dataclass
class VerificationReport:
    subject: str
    r: int
    n: int
    pairs_checked: int = 0
    failures: list[Failure] = field(default_factory=list)
    elapsed: float = 0.0
    cyclic_agreement: bool | None = None

    @property
    def passed(self) -> bool:
        return not self.failures and self.cyclic_agreement is not False

    def profile(self) -> tuple:
        """Everything except timing and the subject name."""
        return (self.r, self.n, self.pairs_checked, tuple(self.failures))

    def to_json(self, timing: bool = True) -> dict:
        out = {"schema": "ribbonrep.verify/1"}
        if self.subject.startswith("group "):
            out["group"] = self.subject.split(" ", 1)[1]
        else:
            out["r"] = self.r
        out.update(
            n=self.n,
            pairs_checked=self.pairs_checked,
            passed=self.passed,
            failures=[f.to_json() for f in self.failures],
        )
        if self.cyclic_agreement is not None:
            out["cyclic_agreement"] = self.cyclic_agreement
        if timing:
            out["elapsed_ms"] = round(self.elapsed * 1000, 3)
        return out

    def summary(self) -> str:
        status = "pass" if self.passed else "FAIL"
        return f"{status} {self.subject} n={self.n}: {self.pairs_checked} pairs, {len(self.failures)} failures"


def cycle_types(n: int, include_compositions: bool = False) -> list[Composition]:
    """Partitions of ``n``, optionally followed by their proper rearrangements."""
    out = [Composition(mu) for mu in partitions(n)]
    if include_compositions:
        for mu in partitions(n):
            for perm in sorted(set(permutations(mu)), reverse=True):
                if perm != tuple(mu):
                    out.append(Composition(perm))
    return out


def _zero_colored_shard(lam: Partition, r: int, mus: Sequence[Composition]) -> list[Failure]:
    s = sign_r(lam, r)
    out = []
    for mu in mus:
        psi = psi_zero_colored(lam, mu, r)
        chi = chi_sn(lam, mu.scaled(r))
        if psi != s * chi:
            out.append(Failure(lam, mu, str(psi), chi, s))
    return out


def _abelian_shard(lam: Partition, group: AbelianGroupSpec, mus: Sequence[Composition]) -> list[Failure]:
    r = group.order
    label = r_quotient(lam, r)
    s = sign_r(lam, r)
    out = []
    for mu in mus:
        cls = RPartitePartition([mu] + [()] * (r - 1))
        psi = psi_wreath(label, cls, group)
        chi = chi_sn(lam, mu.scaled(r))
        if psi != s * chi:
            out.append(Failure(lam, mu, str(psi), chi, s))
    return out


def _sweep(subject: str, r: int, n: int, shard: Callable, arg, mus, jobs: int) -> VerificationReport:
    start = time.perf_counter()
    lams = enumerate_par_r(r, n)
    if jobs > 1 and len(lams) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(shard, lams, [arg] * len(lams), [mus] * len(lams)))
    else:
        chunks = [shard(lam, arg, mus) for lam in lams]
    report = VerificationReport(subject, r, n, len(lams) * len(mus))
    for chunk in chunks:
        report.failures.extend(chunk)
    report.elapsed = time.perf_counter() - start
    return report


def verify_identity(r: int, n: int, jobs: int = 1, include_compositions: bool = False) -> VerificationReport:
    """Check the identity for every ``lam`` in Par_r(r n) and every cycle type of size ``n``."""
    if r < 1 or n < 1:
        raise ValueError(f"r and n must be positive, got r={r}, n={n}")
    mus = cycle_types(n, include_compositions)
    return _sweep(f"r={r}", r, n, _zero_colored_shard, r, mus, jobs)


def verify_identity_abelian(
    group: AbelianGroupSpec, n: int, jobs: int = 1, include_compositions: bool = False
) -> VerificationReport:
    """Same check with psi computed over ``group``; also compared with the cyclic group of the same order."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    r = group.order
    mus = cycle_types(n, include_compositions)
    report = _sweep(f"group {group}", r, n, _abelian_shard, group, mus, jobs)
    cyclic = verify_identity(r, n, jobs, include_compositions)
    report.cyclic_agreement = report.profile() == cyclic.profile()
    return report


def verify_degree_fact(n: int) -> VerificationReport:
    """Degrees of Z_2 wr S_n characters against S_2n characters at cycle type (2^n)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    start = time.perf_counter()
    lams = enumerate_par_r(2, n)
    ones = Composition([1] * n)
    twos = Composition([2] * n)
    report = VerificationReport("degree", 2, n, len(lams))
    for lam in lams:
        degree = psi_zero_colored(lam, ones, 2)
        chi = chi_sn(lam, twos)
        s = sign_r(lam, 2)
        if degree <= 0 or degree != s * chi:
            report.failures.append(Failure(lam, ones, str(degree), chi, s))
    report.elapsed = time.perf_counter() - start
    return report
