from collections import Counter

import pytest

from ribbonrep import (
    NonEmptyCoreError,
    Partition,
    RPartitePartition,
    enumerate_par_r,
    partitions,
    phi_r,
    r_core,
    r_quotient,
    row_color_sequence,
    rpartite_partitions,
)
from ribbonrep.ribbons import peel_quotient_shapes, removable_ribbons

EXAMPLE = RPartitePartition([(4, 3), (2,), (1, 1)])


def all_cores(lam, r):
    """Every end result of peeling length-r ribbons in every possible order."""
    seen, stack, ends = set(), [Partition(lam)], set()
    while stack:
        mu = stack.pop()
        if mu in seen:
            continue
        seen.add(mu)
        smaller = [nu for nu, _, _ in removable_ribbons(mu, r)]
        if not smaller:
            ends.add(mu)
        stack.extend(smaller)
    return ends


def test_phi_worked_example():
    lam = phi_r(EXAMPLE)
    assert lam == (10, 6, 6, 6, 4, 1)
    assert lam.size == 3 * EXAMPLE.total_size == 33
    assert r_quotient(lam, 3) == EXAMPLE


def test_phi_trivial_cases():
    assert phi_r([(), (), ()]) == ()
    assert phi_r([(3, 1)]) == (3, 1)
    assert r_quotient(Partition(), 4) == ((), (), (), ())


def test_r_quotient_small():
    q = r_quotient(Partition((2, 1, 1)), 2)
    assert q.total_size == 2
    assert phi_r(q) == (2, 1, 1)


def test_rpartite_text_format():
    assert str(EXAMPLE) == "[4,3|2|1,1]"
    assert RPartitePartition.parse("[4,3|2|1,1]") == EXAMPLE
    assert str(RPartitePartition([(), (1,)])) == "[-|1]"


@pytest.mark.parametrize(
    "lam, r, core", [((10, 6, 6, 6, 4, 1), 3, ()), ((1,), 2, (1,)), ((2, 1), 2, (2, 1)), ((3,), 2, (1,))]
)
def test_r_core(lam, r, core):
    assert r_core(Partition(lam), r) == core


@pytest.mark.parametrize("n", range(1, 10))
@pytest.mark.parametrize("r", [2, 3])
def test_core_is_order_independent(n, r):
    for lam in partitions(n):
        ends = all_cores(lam, r)
        assert ends == {r_core(lam, r)}


def test_nonempty_core_error_carries_core():
    with pytest.raises(NonEmptyCoreError) as info:
        r_quotient(Partition((2, 1)), 2)
    assert info.value.core == (2, 1)


def test_enumerate_par_r_examples():
    assert enumerate_par_r(2, 1) == [(2,), (1, 1)]
    assert enumerate_par_r(1, 3) == list(partitions(3))
    assert len(enumerate_par_r(3, 2)) == 9
    assert len(list(rpartite_partitions(3, 2))) == 9


@pytest.mark.parametrize("r", [1, 2, 3, 4])
@pytest.mark.parametrize("n", range(7))
def test_bijection(r, n):
    image = set()
    for t in rpartite_partitions(r, n):
        lam = phi_r(t)
        assert lam.size == r * t.total_size
        assert r_quotient(lam, r) == t
        image.add(lam)
    par_r = enumerate_par_r(r, n)
    assert len(image) == len(par_r)
    for lam in par_r:
        assert phi_r(r_quotient(lam, r)) == lam


@pytest.mark.parametrize("r", [2, 3])
def test_core_triviality(r):
    for size in range(0, 19, r):
        par_r = set(enumerate_par_r(r, size // r))
        for lam in partitions(size):
            assert (r_core(lam, r) == ()) == (lam in par_r)


@pytest.mark.parametrize("r", [2, 3, 4])
@pytest.mark.parametrize("n", range(1, 5))
def test_row_colors_are_a_permutation(r, n):
    for lam in enumerate_par_r(r, n):
        for k in (len(lam), len(lam) + 3):
            got = Counter(row_color_sequence(lam, k, r).colors)
            assert got == Counter(row_color_sequence(Partition(), k, r).colors)


def cell_removals(t):
    out = set()
    for j, comp in enumerate(t):
        for nu, _, _ in removable_ribbons(comp, 1):
            out.add(RPartitePartition(t[:j] + (nu,) + t[j + 1 :]))
    return out


@pytest.mark.parametrize("r", [2, 3])
@pytest.mark.parametrize("n", range(1, 6))
def test_length_r_peels_are_cell_peels_of_the_quotient(r, n):
    for lam in enumerate_par_r(r, n):
        quotients = [q for _, q in peel_quotient_shapes(lam, r, 1)]
        assert len(quotients) == len(set(quotients))
        assert set(quotients) == cell_removals(r_quotient(lam, r))
