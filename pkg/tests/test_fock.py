import random
from fractions import Fraction

import pytest

from refsev.combinatorics import Partition, partitions_of
from refsev.errors import DomainError, GuardExceeded
from refsev.fock import (BasisVector, FockState, apply_b_diagonal, apply_divergence,
                         apply_generator, apply_word, basis_state, exp_creation, grading,
                         inner_product, iter_basis, vacuum)
from refsev.ring import LaurentY, RationalLaurentY, quantum_integer

P = Partition


def v(a=(), b=()):
    return BasisVector(P(a), P(b))


def test_generator_examples():
    assert apply_generator(vacuum(), ("a", -1)) == basis_state((1,))
    assert not apply_generator(vacuum(), ("a", 1))
    assert apply_generator(basis_state((1,)), ("a", -1)) == basis_state((2,), (), 2)
    assert apply_generator(basis_state((), (1,)), ("a", 1)) == vacuum()
    with pytest.raises(DomainError):
        apply_generator(vacuum(), ("a", 0))
    with pytest.raises(DomainError):
        apply_generator(vacuum(), ("c", 1))


def test_inner_product_examples():
    assert inner_product(vacuum(), vacuum()) == 1
    assert inner_product(basis_state((1,)), basis_state((), (1,))) == 1
    q2 = quantum_integer(2)
    assert inner_product(basis_state((0, 2)), basis_state((), (0, 2))) == \
        RationalLaurentY(q2 * q2, 2)
    assert not inner_product(basis_state((1,)), basis_state((1,)))


def test_b_diagonal_examples():
    assert apply_b_diagonal(basis_state((1,))) == basis_state((), (1,))
    assert not apply_b_diagonal(vacuum())
    assert apply_b_diagonal(basis_state((0, 1))) == basis_state((), (0, 1), quantum_integer(2))


def test_divergence_examples():
    assert apply_divergence(basis_state((), (1,)), 1, 5) == vacuum()
    assert not apply_divergence(basis_state((1,)), 1, 5)
    got = apply_divergence(basis_state((), (1,)), -1, 2)
    want = basis_state((1,), (1,)) + basis_state((0, 1)) + basis_state((2,))
    assert got == want
    # the cap drops everything above grading 1
    assert not apply_divergence(basis_state((), (1,)), -1, 1)
    with pytest.raises(DomainError):
        apply_divergence(vacuum(), 0, -1)


def test_grading():
    assert grading(v()) == 0
    assert grading(v((4,))) == 4
    assert grading(v((0, 1), (1,))) == 3


def _random_state(rng, max_grading, terms=4):
    basis = list(iter_basis(max_grading))
    s = FockState()
    for w in rng.sample(basis, min(terms, len(basis))):
        coeff = LaurentY({rng.randint(-2, 2): rng.randint(1, 4)})
        s = s + FockState({(w.a_part, w.b_part): coeff})
    return s


def _commutator(x, y, s):
    return apply_word(s, [x, y]) - apply_word(s, [y, x])


@pytest.mark.parametrize("seed", range(3))
def test_commutation_relations(seed):
    rng = random.Random(seed)
    s = _random_state(rng, 8)
    for n in range(1, 7):
        for m in range(1, 7):
            expected = s * quantum_integer(n) if n == m else FockState()
            assert _commutator(("a", n), ("b", -m), s) == expected
            assert _commutator(("b", n), ("a", -m), s) == expected
            for x, y in [(("a", n), ("a", -m)), (("b", n), ("b", -m)), (("a", n), ("b", m)),
                         (("a", -n), ("b", -m)), (("a", n), ("a", m))]:
                assert not _commutator(x, y, s)


@pytest.mark.parametrize("seed", range(5))
def test_adjointness(seed):
    rng = random.Random(100 + seed)
    s1, s2 = _random_state(rng, 6, 6), _random_state(rng, 6, 6)
    for kind in "ab":
        for n in range(1, 5):
            lhs = inner_product(apply_generator(s1, (kind, n)), s2)
            rhs = inner_product(s1, apply_generator(s2, (kind, -n)))
            assert lhs == rhs


def _word(kind, part, sign):
    return [(kind, sign * j) for j, m in enumerate(part, start=1) for _ in range(m)]


def _brute_b_diagonal(s, g):
    out = FockState()
    for k in range(1, g + 1):
        out = out + apply_word(s, [("b", -k), ("b", k)])
    return out


def _brute_divergence(s, i, g):
    out = FockState()
    for nsize in range(max(i, 0), g + 1):
        for nu in partitions_of(nsize):
            for mu in partitions_of(nsize - i):
                word = _word("a", mu, -1) + _word("a", nu, 1)
                term = apply_word(s, word) * Fraction(1, mu.factorial() * nu.factorial())
                out = out + term
    return out


def test_closed_forms_match_generators():
    for w in iter_basis(5):
        s = FockState({(w.a_part, w.b_part): 1})
        assert apply_b_diagonal(s) == _brute_b_diagonal(s, w.grading)
        for i in range(-2, 4):
            got = apply_divergence(s, i)
            assert got == _brute_divergence(s, i, w.grading)
            assert got.gradings() <= {w.grading - i}
        assert apply_b_diagonal(s).gradings() <= {w.grading}


def test_coherent_state():
    for order in range(6):
        want = FockState()
        for m in range(order + 1):
            want = want + basis_state(P.ones(m))
        assert exp_creation("a", 1, order) == want


def test_relative_coherent_state():
    # exp(sum (b_{-n} u_n + a_{-n} w_n)/[n]) v_0 = sum v_{beta,alpha} u^alpha w^beta / I^{alpha+beta};
    # after clearing I^{alpha+beta} the coefficient of u^alpha w^beta is
    # prod b_{-n}^{alpha_n} a_{-n}^{beta_n} / (alpha! beta!) v_0
    for total in range(5):
        for ga in range(total + 1):
            for alpha in partitions_of(ga):
                for beta in partitions_of(total - ga):
                    word = _word("b", alpha, -1) + _word("a", beta, -1)
                    got = apply_word(vacuum(), word) * Fraction(
                        1, alpha.factorial() * beta.factorial())
                    assert got == basis_state(beta, alpha)


def test_guard(monkeypatch):
    monkeypatch.setenv("REFSEV_GUARD_MAX_STATES", "3")
    with pytest.raises(GuardExceeded):
        apply_divergence(basis_state((), (3,)), -2)
    monkeypatch.delenv("REFSEV_GUARD_MAX_STATES")
    assert apply_divergence(basis_state((), (3,)), -2)


def test_dump():
    s = basis_state((1,), (), 2) + vacuum()
    assert s.dump().splitlines() == ["1 · v_{∅,∅}", "2 · v_{(1),∅}"]
