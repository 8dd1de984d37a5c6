import random

import pytest

from refsev.combinatorics import Partition, partitions_of
from refsev.errors import DomainError, GuardExceeded
from refsev.fock import apply_word, inner_product, vacuum
from refsev.oracle import (FloorDiagram, count_markings, count_markings_bruteforce,
                           enumerate_floor_diagrams, floor_relative, floor_severi, wick_severi,
                           wick_vev)
from refsev.oracle.floor import relative_markings
from refsev.oracle.render import example_marking, render_svg
from refsev.oracle.wick import divergence_term
from refsev.polygon import preset
from refsev.ring import LaurentY, quantum_integer
from refsev.severi import refined_relative, refined_severi

Y = LaurentY.monomial(2)


def test_floor_examples():
    diags = enumerate_floor_diagrams(preset("p2", d=1), 0)
    assert len(diags) == 1 and diags[0].edges == () and diags[0].height == 1
    assert count_markings(diags[0]) == 1
    assert enumerate_floor_diagrams(preset("p2", d=2), 6) == []
    assert floor_severi(preset("p2", d=1), 0) == 1
    assert floor_severi(preset("p2", d=3), 1) == LaurentY.monomial(-2) + 10 + Y
    diags = enumerate_floor_diagrams(preset("p2", d=3), 1)
    total = sum(count_markings(D) * D.multiplicity().evaluate(1).real for D in diags)
    assert total == 12
    with pytest.raises(DomainError):
        enumerate_floor_diagrams(preset("p2", d=1), -1)


def test_parallel_edges_counted_once():
    D = FloorDiagram((2, 2), (0, 0), (0, 0), ((1, 2, 1), (1, 2, 1)))
    # both midpoints sit between the floors and the four sinks after floor 2;
    # swapping parallel edges gives nothing new, so there is a single marking
    assert count_markings(D) == count_markings_bruteforce(D) == 1
    D3 = FloorDiagram((2, 1, 1), (0, 0, 0), (0, 0, 0), ((1, 3, 1), (1, 3, 1)))
    assert count_markings(D3) == count_markings_bruteforce(D3) == 18


def test_markings_match_bruteforce():
    cases = [("p2", dict(d=3)), ("p2", dict(d=4)), ("sigma", dict(m=1, c=1, d=2)),
             ("wps1mm", dict(m=2, d=2))]
    seen = 0
    for fam, kw in cases:
        p = preset(fam, **kw)
        for delta in range(4):
            for D in enumerate_floor_diagrams(p, delta):
                try:
                    assert count_markings(D) == count_markings_bruteforce(D)
                    seen += 1
                except GuardExceeded:
                    pass
    assert seen > 20


def test_cogenus_bookkeeping():
    for fam, kw in [("p2", dict(d=3)), ("sigma", dict(m=1, c=1, d=2)), ("wps1mm", dict(m=3, d=1))]:
        p = preset(fam, **kw)
        for delta in range(4):
            for D in enumerate_floor_diagrams(p, delta):
                assert p.dim - D.vertex_count() == delta
                for j in range(1, D.height + 1):
                    assert D.div(j) <= D.R[j - 1] - D.L[j - 1] + D.s[j - 1]


def test_cogenus_zero_unique():
    for d in range(5):
        p = preset("p2", d=d)
        assert sum(count_markings(D) for D in enumerate_floor_diagrams(p, 0)) == 1


def test_multiplicities_are_quantum_products():
    for D in enumerate_floor_diagrams(preset("p2", d=4), 2):
        m = D.multiplicity()
        assert m.is_symmetric() and all(c > 0 for c in m.terms.values())


FLOOR_CASES = ([("p2", dict(d=d)) for d in range(5)]
               + [("sigma", dict(m=m, c=c, d=d)) for m in (1, 2) for c in (0, 1, 2) for d in (1, 2)]
               + [("wps1mm", dict(m=m, d=d)) for m in (2, 3) for d in (1, 2)])


@pytest.mark.parametrize("fam,kw", FLOOR_CASES)
def test_floor_equals_fock(fam, kw):
    p = preset(fam, **kw)
    for delta in range(5):
        assert floor_severi(p, delta) == refined_severi(p, delta)


def test_floor_relative_equals_fock():
    for fam, kw in [("p2", dict(d=2)), ("p2", dict(d=3)), ("sigma", dict(m=1, c=1, d=2))]:
        p = preset(fam, **kw)
        for ga in range(p.d_bottom + 1):
            for alpha in partitions_of(ga):
                for beta in partitions_of(p.d_bottom - ga):
                    for delta in range(3):
                        assert floor_relative(p, delta, alpha, beta) == \
                            refined_relative(p, delta, alpha, beta)
    p2 = preset("p2", d=2)
    assert floor_relative(p2, 0, Partition(), Partition.ones(2)) == floor_severi(p2, 0)
    assert all(c.count > 0 for c in relative_markings(p2, 0, Partition((2,)), Partition()))


def test_wick_examples():
    assert wick_vev([("a", 1), ("b", -1)]) == 1
    assert not wick_vev([("b", 1), ("b", -1)])
    assert wick_vev([("a", 2), ("b", -2)]) == quantum_integer(2)
    assert wick_vev([("a", 1), ("a", 1), ("b", -1), ("b", -1)]) == 2
    assert not wick_vev([("a", 1)])
    assert not wick_vev([("b", -1), ("a", 1)])
    # divided powers carry their factorial
    assert wick_vev([divergence_term((), (2,)), ("b", -1), ("b", -1)]) == 1


def test_wick_severi_examples():
    p1, p2 = preset("p2", d=1), preset("p2", d=2)
    assert wick_severi(p1, 0, Partition(), Partition((1,))) == 1
    assert wick_severi(p2, 0) == refined_severi(p2, 0)
    assert wick_severi(p2, 1, Partition(), Partition((2,))) == 3
    for ga in range(3):
        for alpha in partitions_of(ga):
            for beta in partitions_of(2 - ga):
                for delta in range(2):
                    assert wick_severi(p2, delta, alpha, beta) == \
                        refined_relative(p2, delta, alpha, beta)
    s = preset("sigma", m=1, c=1, d=1)
    assert wick_severi(s, 1) == refined_severi(s, 1) == 3
    with pytest.raises(GuardExceeded):
        wick_severi(preset("p2", d=4), 0)


def test_wick_matches_fock_on_random_monomials():
    rng = random.Random(2024)
    nonzero = 0
    for _ in range(200):
        n = rng.randint(1, 8)
        word = [(rng.choice("ab"), rng.choice([-1, 1]) * rng.randint(1, 4)) for _ in range(n)]
        # bias towards pairable words so that many values are non-zero:
        # each annihilator is inserted before its partner creator
        if rng.random() < 0.6 and n % 2 == 0:
            out = []
            for k, i in word[: n // 2]:
                lo = rng.randint(0, len(out))
                out.insert(lo, (k, abs(i)))
                out.insert(rng.randint(lo + 1, len(out)), ("b" if k == "a" else "a", -abs(i)))
            word = out
        fock = inner_product(vacuum(), apply_word(vacuum(), word))
        assert wick_vev(word) == fock
        nonzero += bool(fock)
    assert nonzero > 20


def test_render():
    D = enumerate_floor_diagrams(preset("p2", d=3), 1)[0]
    word = example_marking(D)
    assert word is not None and len(word) == D.vertex_count()
    svg = render_svg(D)
    assert svg.startswith("<svg") and svg.count("<circle") == D.vertex_count()
    assert render_svg(D, marked=False).count("<circle") == D.height
