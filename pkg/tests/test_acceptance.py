"""Exit criteria.  Each test carries ``criterion(N, text)``; a summary line per
criterion is printed at the end of the pytest run.

Run alone with ``pytest tests/test_acceptance.py``.
"""

import time
from math import factorial

import pytest

from ribbonrep import (
    AbelianGroupSpec,
    Partition,
    RPartitePartition,
    beta_numbers,
    boundary_sequence,
    character_table,
    chi_sn,
    d_r_distance,
    enumerate_mu_peelings,
    enumerate_par_r,
    enumerate_rpartite_tableaux,
    partition_from_boundary,
    partitions,
    peel,
    peel_candidates,
    peel_mod,
    phi_r,
    psi_zero_colored,
    r_quotient,
    row_color_sequence,
    sign2_closed,
    sign_r,
    verify_degree_fact,
    verify_identity,
    verify_identity_abelian,
)
from ribbonrep import characters
from ribbonrep.ribbons import PeelStep

criterion = pytest.mark.criterion


def best_time(f, repeat=5):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        f()
        best = min(best, time.perf_counter() - start)
    return best


@criterion(1, "phi_3((4,3),(2),(1,1)) = (10,6,6,6,4,1) and back, exact, < 1 ms")
def test_phi_worked_example():
    t = RPartitePartition([(4, 3), (2,), (1, 1)])
    assert t.total_size == 7 + 2 + 2 == 11
    assert phi_r(t) == (10, 6, 6, 6, 4, 1)
    assert r_quotient(Partition((10, 6, 6, 6, 4, 1)), 3) == t
    assert best_time(lambda: phi_r(t)) < 1e-3
    assert best_time(lambda: r_quotient(Partition((10, 6, 6, 6, 4, 1)), 3)) < 1e-3


@criterion(2, "lambda=(5,5,4,3,1), r=3: beta, row colors, d_3 = 4, sign_3 = +1")
def test_color_sequence_worked_example():
    lam = Partition((5, 5, 4, 3, 1))
    assert beta_numbers(lam, 5) == (9, 8, 6, 4, 1)
    assert row_color_sequence(lam, 5, 3).colors == (0, 2, 0, 1, 1)
    assert beta_numbers(Partition(), 5) == (4, 3, 2, 1, 0)
    assert row_color_sequence(Partition(), 5, 3).colors == (1, 0, 2, 1, 0)
    assert d_r_distance(lam, 3) == 4
    assert sign_r(lam, 3) == 1


@criterion(3, "worked peeling of (10,6,6,6,4,1): mod-3 heights (0,1,1,1), contribution -1")
def test_worked_peeling():
    lam = Partition((10, 6, 6, 6, 4, 1))
    word = boundary_sequence(lam).bits
    heights = []
    for q, length in [(5, 6), (4, 12), (3, 6), (1, 9)]:
        word, ht = peel_mod(word, q, length, 3)
        heights.append(ht)
    assert heights == [0, 1, 1, 1]
    assert partition_from_boundary(word) == ()
    traces = enumerate_mu_peelings(lam, (3, 2, 4, 2), 3)
    worked = [t for t in traces if [(s.q, s.ribbon_length) for s in t.steps] == [(5, 6), (4, 12), (3, 6), (1, 9)]]
    assert len(worked) == 1
    assert worked[0].steps == (PeelStep(5, 6, 0, 1), PeelStep(4, 12, 1, 0), PeelStep(3, 6, 1, 2), PeelStep(1, 9, 1, 0))
    assert worked[0].sign == -1


@criterion(4, "identity holds for (r,n) in {2,3,4}x{1..4} and (2,5), (2,6); < 60 s single-threaded")
def test_main_identity_exhaustive():
    characters._mn.cache_clear()
    characters._mn_mod.cache_clear()
    cases = [(r, n) for r in (2, 3, 4) for n in (1, 2, 3, 4)] + [(2, 5), (2, 6)]
    start = time.perf_counter()
    reports = [verify_identity(r, n, jobs=1) for r, n in cases]
    elapsed = time.perf_counter() - start
    for rep in reports:
        assert rep.passed, rep.summary()
        assert rep.pairs_checked == len(enumerate_par_r(rep.r, rep.n)) * len(list(partitions(rep.n)))
    assert elapsed < 60


@criterion(5, "Z_4 and Z_2 x Z_2 give identical reports for n <= 3")
def test_group_structure_independence():
    for n in (1, 2, 3):
        cyc = verify_identity_abelian(AbelianGroupSpec((4,)), n)
        klein = verify_identity_abelian(AbelianGroupSpec((2, 2)), n)
        assert cyc.passed and klein.passed
        assert cyc.profile() == klein.profile()
        assert klein.cyclic_agreement


@criterion(6, "sign2_closed equals sign_2 on Par_2(2n), n <= 6")
def test_closed_form_sign2():
    for n in range(0, 7):
        for lam in enumerate_par_r(2, n):
            assert sign2_closed(lam) == sign_r(lam, 2)


@criterion(7, "boundary peeling equals r-partite tableau enumeration, r <= 3, n <= 4")
def test_dual_path_mn():
    for r in (1, 2, 3):
        for n in range(1, 5):
            for lam in enumerate_par_r(r, n):
                quo = r_quotient(lam, r)
                for mu in partitions(n):
                    oracle = sum(t.sign for t in enumerate_rpartite_tableaux(quo, mu))
                    assert psi_zero_colored(lam, mu, r) == oracle
                    assert sum(t.sign for t in enumerate_mu_peelings(lam, mu, r)) == oracle


def _check_table(group, n):
    table = character_table(group, n)
    order = group.order**n * factorial(n)
    assert sum(table.class_sizes) == order
    for i, row in enumerate(table.entries):
        for j, other in enumerate(table.entries):
            s = sum((c * x * y.conj() for c, x, y in zip(table.class_sizes, row, other)), start=0)
            assert s == (order if i == j else 0)
    identity = table.classes.index(RPartitePartition([[1] * n] + [()] * (group.order - 1)))
    assert sum(row[identity].as_integer() ** 2 for row in table.entries) == order


@criterion(8, "row orthogonality (Z_2 n<=4, Z_3 n<=3, Z_2xZ_2 n<=2), S_n column orthogonality n<=6, degree squares")
def test_orthogonality():
    for group, top in [((2,), 4), ((3,), 3), ((2, 2), 2)]:
        for n in range(1, top + 1):
            _check_table(AbelianGroupSpec(group), n)
    for n in range(1, 7):
        ps = list(partitions(n))
        for mu in ps:
            z = characters.centralizer_order([mu], AbelianGroupSpec(()))
            for nu in ps:
                s = sum(chi_sn(lam, mu) * chi_sn(lam, nu) for lam in ps)
                assert s == (z if mu == nu else 0)
        assert sum(chi_sn(lam, [1] * n) ** 2 for lam in ps) == factorial(n)


@criterion(9, "Z_2 wr S_n degrees equal sign_2 * chi at (2^n), n <= 5")
def test_degree_fact():
    for n in range(1, 6):
        rep = verify_degree_fact(n)
        assert rep.passed, rep.summary()
        for lam in enumerate_par_r(2, n):
            degree = psi_zero_colored(lam, [1] * n, 2)
            assert degree == abs(chi_sn(lam, [2] * n))
            assert degree == sign_r(lam, 2) * chi_sn(lam, [2] * n)


@criterion(10, "single-peel sign ratio equals sign_r(lam)/sign_r(lam'), size <= 15, r <= 3")
def test_step_law():
    for r in (1, 2, 3):
        for size in range(0, 16, r):
            for lam in enumerate_par_r(r, size // r):
                bits = boundary_sequence(lam).bits
                for m in range(1, size // r + 1):
                    for q in peel_candidates(bits, r * m):
                        new, full = peel(bits, q, r * m)
                        _, mod = peel_mod(bits, q, r * m, r)
                        assert (-1) ** (full - mod) == sign_r(lam, r) * sign_r(partition_from_boundary(new), r)
