import pytest

from ch_recursion import ch
from refsev.combinatorics import Partition, partitions_of
from refsev.errors import DomainError
from refsev.polygon import preset
from refsev.ring import LaurentY, quantum_integer
from refsev.severi import (SeveriQuery, refined_relative, refined_severi, severi_degree,
                           welschinger)

Y = LaurentY.monomial(2)
YI = LaurentY.monomial(-2)


def test_examples():
    assert refined_severi(preset("p2", d=1), 0) == 1
    assert refined_severi(preset("p2", d=2), 1) == 3
    assert refined_severi(preset("p2", d=3), 1) == YI + 10 + Y
    for d in range(5):
        assert refined_severi(preset("p2", d=d), 0) == 1


def test_frozen_values():
    p4 = preset("p2", d=4)
    assert refined_severi(p4, 1) == YI * 3 + 21 + Y * 3
    assert refined_severi(p4, 2) == YI * YI * 3 + YI * 33 + 153 + Y * 33 + Y * Y * 3
    assert refined_severi(p4, 3) == (YI ** 3 + YI ** 2 * 13 + YI * 94 + 459 + Y * 94
                                     + Y ** 2 * 13 + Y ** 3)
    assert refined_severi(preset("sigma", m=1, c=1, d=1), 1) == 3
    assert refined_severi(preset("wps1mm", m=3, d=1), 1) == YI + 5 + Y


def test_specialisations():
    p3 = preset("p2", d=3)
    assert severi_degree(p3, 1) == 12
    assert welschinger(p3, 1) == 8
    assert severi_degree(preset("p2", d=2), 0) == 1


def test_large_delta_is_zero():
    assert refined_severi(preset("p2", d=2), 10) == 0
    assert refined_severi(preset("p2", d=1), 3) == 0
    with pytest.raises(DomainError):
        refined_severi(preset("p2", d=1), -1)


def test_relative_examples():
    p2 = preset("p2", d=2)
    for d in range(1, 4):
        p = preset("p2", d=d)
        for delta in range(3):
            assert refined_relative(p, delta, Partition(), Partition.ones(d)) == \
                refined_severi(p, delta)
    val = refined_relative(p2, 0, Partition((2,)), Partition())
    assert val.is_symmetric() and val == 1
    assert refined_relative(p2, 0, Partition(), Partition((0, 1))) == quantum_integer(2)
    with pytest.raises(DomainError, match="balance"):
        refined_relative(p2, 0, Partition((1,)), Partition())
    with pytest.raises(DomainError):
        SeveriQuery(p2, -1)


def test_query_factor_count():
    p = preset("p2", d=3)
    assert SeveriQuery(p, 1).n_factors == 8
    assert SeveriQuery(p, 1, Partition((1,)), Partition((0, 1))).n_factors == 9 - 1 - 3 + 1


def test_agrees_with_caporaso_harris():
    for d in range(1, 6):
        for delta in range(5):
            assert refined_severi(preset("p2", d=d), delta) == ch(d, delta)
    for d in range(1, 4):
        p = preset("p2", d=d)
        for ga in range(d + 1):
            for alpha in partitions_of(ga):
                for beta in partitions_of(d - ga):
                    for delta in range(3):
                        assert refined_relative(p, delta, alpha, beta) == \
                            ch(d, delta, tuple(alpha), tuple(beta))


def test_classical_nodal_counts():
    # N^{d,1} = 3(d-1)^2
    for d in range(1, 6):
        assert severi_degree(preset("p2", d=d), 1) == 3 * (d - 1) ** 2


def test_sigma_c0_is_wps11m():
    for m in (1, 2, 3):
        for d in range(3):
            for delta in range(3):
                assert refined_severi(preset("sigma", m=m, c=0, d=d), delta) == \
                    refined_severi(preset("wps11m", m=m, d=d), delta)


def test_structure_of_outputs():
    polys = []
    for d in range(1, 5):
        for delta in range(4):
            polys.append(refined_severi(preset("p2", d=d), delta))
    for m, c, d in [(1, 1, 2), (2, 1, 2), (1, 2, 1)]:
        for delta in range(3):
            polys.append(refined_severi(preset("sigma", m=m, c=c, d=d), delta))
    for p in polys:
        assert p.is_symmetric()
        assert all(c >= 0 for c in p.terms.values())


def test_threads_deterministic():
    p = preset("wps1mm", m=2, d=2)
    assert refined_severi(p, 2, threads=2) == refined_severi(p, 2, threads=1) == 10
