"""Refined (relative) Severi degrees as Fock-space matrix elements.

``N(y) = sum_{R,L} < v_{(1^dt),0} | Coeff_{T^{R-L}} H(T)^n | ket >`` where the
coefficient of ``T^{i_1} ... T^{i_h}`` in ``H(T)^n`` is the sum over all ways of
interleaving ``n - h`` copies of ``B = sum_k b_{-k} b_k`` with the divergence
blocks ``D_{i_1}, ..., D_{i_h}`` (``D_i = sum_{||nu||-||mu||=i} a_{-mu} a_nu``),
left to right.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import factorial

from ..combinatorics import EMPTY, DivergenceProfile, Partition, divergence_profiles
from ..errors import DomainError
from ..fock import (BasisVector, FockState, apply_b_diagonal, apply_divergence,
                    basis_state, inner_product)
from ..polygon import HTransversePolygon
from ..ring import GaussianInt, LaurentY, RationalLaurentY, quantum_product

__all__ = [
    "SeveriQuery",
    "refined_severi",
    "refined_relative",
    "severi_degree",
    "welschinger",
    "grading_cap",
    "profile_matrix_element",
    "theorem_matrix_element",
]


@dataclass(frozen=True)
class SeveriQuery:
    polygon: HTransversePolygon
    delta: int
    alpha: Partition = field(default=EMPTY)
    beta: Partition | None = None

    def __post_init__(self):
        if self.beta is None:
            object.__setattr__(self, "beta", Partition.ones(self.polygon.d_bottom))
        if self.alpha.size + self.beta.size != self.polygon.d_bottom:
            raise DomainError(
                f"tangency balance violated: ||alpha||+||beta|| = "
                f"{self.alpha.size + self.beta.size} != d_bottom = {self.polygon.d_bottom}")
        if self.delta < 0:
            raise DomainError(f"delta must be non-negative (got {self.delta})")

    @property
    def n_factors(self) -> int:
        p = self.polygon
        return p.dim - self.delta - p.d_bottom + self.beta.length


def grading_cap(p: HTransversePolygon) -> int:
    """Upper bound on the grading of every intermediate state."""
    return (p.d_bottom + sum(max(0, a) for a in p.left.values())
            + sum(max(0, -b) for b in p.right.values()))


class _ProfileDP:
    """Memoised interleaving DP shared by all profiles of one query.

    ``state(suffix, m)`` is the ket after ``m`` factors (from the right) that
    consumed exactly the divergence blocks in ``suffix``.  Profiles sharing a
    suffix share work.
    """

    def __init__(self, ket: FockState, n_factors: int, height: int, cap: int,
                 final_a_parts: int):
        self.ket = ket
        self.n = n_factors
        self.h = height
        self.cap = cap
        self.final_a = final_a_parts
        self.memo: dict = {}

    def _budget(self, k: int, m: int) -> int:
        # a-parts can only be removed by B factors
        return (self.n - m) - (self.h - k) + self.final_a

    def state(self, suffix: tuple, m: int) -> FockState:
        k = len(suffix)
        if m < k or (self.n - m) < (self.h - k):
            return FockState()
        if m == 0:
            return self.ket
        key = (suffix, m)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        budget = self._budget(k, m)
        out = FockState()
        if m > k:
            prev = self.state(suffix, m - 1)
            if prev:
                out = apply_b_diagonal(prev, a_budget=budget)
        if k:
            prev = self.state(suffix[1:], m - 1)
            if prev:
                out = out + apply_divergence(prev, suffix[0], self.cap, a_budget=budget)
        self.memo[key] = out
        return out


def _bra(p: HTransversePolygon) -> FockState:
    return basis_state(Partition.ones(p.d_top), ())


def profile_matrix_element(bra: FockState, ket: FockState, profile: tuple, n_factors: int,
                           cap: int) -> RationalLaurentY:
    """``<bra | Coeff_{T^profile} H(T)^n_factors | ket>`` for one divergence sequence."""
    dp = _ProfileDP(ket, n_factors, len(profile), cap, _final_a_parts(bra))
    return inner_product(bra, dp.state(tuple(profile), n_factors))


def _final_a_parts(bra: FockState) -> int:
    return max((v.b_part.length for v, _ in bra.items()), default=0)


def _sum_profiles(args) -> RationalLaurentY:
    bra, ket, profiles, n_factors, h, cap = args
    dp = _ProfileDP(ket, n_factors, h, cap, _final_a_parts(bra))
    total = RationalLaurentY()
    for prof in profiles:
        val = inner_product(bra, dp.state(prof.sequence, n_factors))
        if val:
            total = total + val * prof.multiplicity
    return total


def theorem_matrix_element(p: HTransversePolygon, ket: FockState, n_factors: int,
                           threads: int = 1) -> RationalLaurentY:
    """``sum_{R,L} <v_{(1^dt),0}| Coeff_{T^{R-L}} H(T)^n_factors | ket>``."""
    if n_factors < p.height:
        return RationalLaurentY()
    profiles = divergence_profiles(p.right, p.left)
    bra = _bra(p)
    cap = max(grading_cap(p), max((v.grading for v, _ in ket.items()), default=0))
    if threads <= 1 or len(profiles) < 2:
        return _sum_profiles((bra, ket, profiles, n_factors, p.height, cap))
    # profiles with the same last divergence share DP work, so keep them together
    groups: dict = {}
    for prof in profiles:
        groups.setdefault(prof.sequence[-1:], []).append(prof)
    chunks = [(bra, ket, g, n_factors, p.height, cap) for _, g in sorted(groups.items())]
    total = RationalLaurentY()
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for part in pool.map(_sum_profiles, chunks):
            total = total + part
    return total


def refined_severi(p: HTransversePolygon, delta: int, threads: int = 1) -> LaurentY:
    """Refined Severi degree ``N^{Delta,delta}(y)``."""
    if delta < 0:
        raise DomainError(f"delta must be non-negative (got {delta})")
    n = p.dim - delta
    if n < p.height:
        return LaurentY()
    ket = basis_state(Partition.ones(p.d_bottom), ())
    val = theorem_matrix_element(p, ket, n, threads)
    return val.to_laurent()


def refined_relative(p: HTransversePolygon, delta: int, alpha: Partition, beta: Partition,
                     threads: int = 1) -> LaurentY:
    """Refined relative Severi degree ``N^{Delta,delta}(alpha,beta)(y)``."""
    q = SeveriQuery(p, delta, Partition(alpha), Partition(beta))
    n = q.n_factors
    if n < p.height:
        return LaurentY()
    ket = basis_state(q.beta, q.alpha)
    val = theorem_matrix_element(p, ket, n, threads) * q.alpha.factorial()
    val = val.divexact(quantum_product(q.alpha.add(q.beta)))
    return val.to_laurent()


def _integer_value(poly: LaurentY, point, what: str) -> int:
    g: GaussianInt = poly.evaluate(point)
    if g.imag:
        raise ArithmeticError(f"{what} has non-real value {g}; refined polynomial {poly}")
    return g.real


def severi_degree(p: HTransversePolygon, delta: int, threads: int = 1) -> int:
    return _integer_value(refined_severi(p, delta, threads), 1, "Severi degree")


def welschinger(p: HTransversePolygon, delta: int, threads: int = 1) -> int:
    return _integer_value(refined_severi(p, delta, threads), -1, "Welschinger invariant")


def factorial_scaled(poly: LaurentY, n: int) -> RationalLaurentY:
    """``poly / n!``"""
    return RationalLaurentY(poly, factorial(n))
