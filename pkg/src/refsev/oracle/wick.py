"""Vacuum expectation values by enumerating Wick pairings.

A monomial is a sequence of factors, each a short word in the generators
``a_n`` / ``b_n``.  Factors built from divided powers carry the normalising
factorial, so ``<M> = (1 / prod norms) * sum over pairings of prod [w]_y``.
A pairing matches an annihilator (positive index) with a later generator of the
other colour and opposite index; the leftmost unmatched generator must be an
annihilator, otherwise it kills the bra.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

from ..combinatorics import Partition, divergence_profiles, partitions_of
from ..errors import DomainError, GuardExceeded
from ..polygon import HTransversePolygon
from ..ring import LaurentY, RationalLaurentY, quantum_integer, quantum_product

__all__ = [
    "Factor",
    "generator",
    "divergence_term",
    "b_diagonal",
    "b_create",
    "a_create",
    "a_annihilate",
    "b_create_divided",
    "wick_vev",
    "wick_monomials",
    "wick_severi",
    "MAX_WICK_FACTORS",
]

MAX_WICK_FACTORS = 10


class Factor(NamedTuple):
    label: str
    gens: tuple  # ((kind, index), ...) left to right
    norm: int = 1


def generator(kind: str, index: int) -> Factor:
    if kind not in ("a", "b") or index == 0:
        raise DomainError(f"not a generator: {kind}_{index}")
    return Factor(f"{kind}_{index}", ((kind, index),))


def _powers(kind: str, part: Partition, sign: int) -> tuple:
    return tuple((kind, sign * j) for j, m in enumerate(part, start=1) for _ in range(m))


def divergence_term(mu, nu) -> Factor:
    """``a_{-mu} a_nu`` with divided powers."""
    mu, nu = Partition(mu), Partition(nu)
    return Factor(f"a_-{mu.parts()}a_{nu.parts()}", _powers("a", mu, -1) + _powers("a", nu, 1),
                  mu.factorial() * nu.factorial())


def b_diagonal(k: int) -> Factor:
    return Factor(f"b_-{k}b_{k}", (("b", -k), ("b", k)))


def b_create(k: int) -> Factor:
    return Factor(f"b_-{k}", (("b", -k),))


def b_create_divided(alpha) -> Factor:
    alpha = Partition(alpha)
    return Factor(f"b_-{alpha.parts()}", _powers("b", alpha, -1), alpha.factorial())


def a_create(beta) -> Factor:
    beta = Partition(beta)
    return Factor(f"a_-{beta.parts()}", _powers("a", beta, -1), beta.factorial())


def a_annihilate(c: int) -> Factor:
    """``a_{(1^c)} = a_1^c / c!``, the adjoint of ``a_{-(1^c)}``."""
    return Factor(f"a_(1^{c})", (("a", 1),) * c, Partition.ones(c).factorial())


def _as_factor(f) -> Factor:
    if isinstance(f, Factor):
        return f
    return generator(*f)


def _pairing_sum(gens: tuple) -> LaurentY:
    n = len(gens)
    if n % 2:
        return LaurentY()
    full = (1 << n) - 1

    @lru_cache(maxsize=None)
    def rec(used: int) -> LaurentY:
        if used == full:
            return LaurentY.const(1)
        i = (~used & (used + 1)).bit_length() - 1  # lowest free slot
        kind, idx = gens[i]
        if idx < 0:
            return LaurentY()
        total = LaurentY()
        used_i = used | (1 << i)
        for j in range(i + 1, n):
            if used_i >> j & 1:
                continue
            kj, ij = gens[j]
            if kj != kind and ij == -idx:
                sub = rec(used_i | (1 << j))
                if sub:
                    total = total + sub
        return total * quantum_integer(idx) if total else total

    return rec(0)


def wick_vev(monomial: Iterable) -> RationalLaurentY:
    """``<v_0 | m_1 ... m_l | v_0>`` by pairing enumeration.

    ``monomial`` holds :class:`Factor` objects or raw ``(kind, index)`` pairs.
    """
    factors = [_as_factor(f) for f in monomial]
    gens = tuple(g for f in factors for g in f.gens)
    norm = 1
    for f in factors:
        norm *= f.norm
    # cheap rejections: colour/index balance is necessary for a perfect pairing
    balance: dict = {}
    for kind, idx in gens:
        key = (kind if idx > 0 else ("b" if kind == "a" else "a"), abs(idx))
        balance[key] = balance.get(key, 0) + (1 if idx > 0 else -1)
    if any(balance.values()):
        return RationalLaurentY()
    return RationalLaurentY(_pairing_sum(gens), norm)


def _ket_grading(alpha: Partition, beta: Partition) -> int:
    return alpha.size + beta.size


def wick_monomials(p: HTransversePolygon, n_factors: int, profile: Sequence[int],
                   ket_grading: int) -> Iterable[tuple]:
    """Operator monomials of ``Coeff_{T^profile} H(T)^n`` that can survive.

    Gradings are fixed by the profile positions, so annihilation degree per
    factor is bounded by the grading of the state it acts on.
    """
    h = len(profile)
    bra_grading = p.d_top
    if ket_grading - sum(profile) != bra_grading:
        return
    for slots in itertools.combinations(range(n_factors), h):
        # grading of the state to the right of each position
        right = [0] * n_factors
        g = ket_grading
        div_at = dict(zip(slots, profile))
        for pos in range(n_factors - 1, -1, -1):
            right[pos] = g
            g -= div_at.get(pos, 0)
        choices = []
        for pos in range(n_factors):
            g = right[pos]
            if pos in div_at:
                i = div_at[pos]
                opts = []
                for nsize in range(max(i, 0), g + 1):
                    for nu in partitions_of(nsize):
                        for mu in partitions_of(nsize - i):
                            opts.append(divergence_term(mu, nu))
            else:
                opts = [b_diagonal(k) for k in range(1, g + 1)]
            if not opts:
                break
            choices.append(opts)
        else:
            yield from itertools.product(*choices)


def wick_severi(p: HTransversePolygon, delta: int, alpha=None, beta=None) -> LaurentY:
    """Refined (relative) Severi degree by expanding into monomials and pairing."""
    alpha = Partition(alpha or ())
    beta = Partition.ones(p.d_bottom) if beta is None else Partition(beta)
    if alpha.size + beta.size != p.d_bottom:
        raise DomainError(
            f"tangency balance violated: ||alpha||+||beta|| = {alpha.size + beta.size} "
            f"!= d_bottom = {p.d_bottom}")
    if delta < 0:
        raise DomainError(f"delta must be non-negative (got {delta})")
    n = p.dim - delta - p.d_bottom + beta.length
    if n < p.height:
        return LaurentY()
    if n > MAX_WICK_FACTORS:
        raise GuardExceeded(f"wick oracle limited to {MAX_WICK_FACTORS} operator factors "
                            f"(instance needs {n})")
    bra = [a_annihilate(p.d_top)] if p.d_top else []
    ket = []
    if alpha:
        ket.append(b_create_divided(alpha))
    if beta:
        ket.append(a_create(beta))
    g0 = _ket_grading(alpha, beta)
    total = RationalLaurentY()
    for prof in divergence_profiles(p.right, p.left):
        part = RationalLaurentY()
        for mono in wick_monomials(p, n, prof.sequence, g0):
            val = wick_vev(bra + list(mono) + ket)
            if val:
                part = part + val
        if part:
            total = total + part * prof.multiplicity
    total = total * alpha.factorial()
    return total.divexact(quantum_product(alpha.add(beta))).to_laurent()
