"""The y-deformed Heisenberg algebra acting on its Fock space.

Basis vectors ``v_{mu,nu} = a_{-mu} b_{-nu} v_0`` use the divided-power
normalisation ``a_{-mu} = prod_i a_{-i}^{mu_i} / mu_i!``.  In that basis

* ``a_{-k}`` sends ``v_{mu,nu}`` to ``(mu_k + 1) v_{mu+e_k,nu}``,
* ``a_k`` (k > 0) sends it to ``[k]_y v_{mu,nu-e_k}`` (pairs with a ``b_{-k}``),
* ``b_{-k}`` and ``b_k`` act symmetrically with the roles of mu and nu swapped.
"""
from __future__ import annotations

import os
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Iterator, NamedTuple

from .combinatorics import EMPTY, Partition, partitions_of, sub_partitions
from .errors import DomainError, GuardExceeded
from .ring import LaurentY, RationalLaurentY, quantum_integer, quantum_product

__all__ = [
    "BasisVector",
    "FockState",
    "GeneratorSymbol",
    "vacuum",
    "basis_state",
    "apply_generator",
    "apply_word",
    "inner_product",
    "basis_inner_product",
    "apply_b_diagonal",
    "apply_divergence",
    "grading",
    "exp_creation",
    "max_states",
]

DEFAULT_MAX_STATES = 1_000_000


def max_states() -> int:
    """State-count guard, overridable through ``REFSEV_GUARD_MAX_STATES``."""
    raw = os.environ.get("REFSEV_GUARD_MAX_STATES")
    return int(raw) if raw else DEFAULT_MAX_STATES


class BasisVector(NamedTuple):
    a_part: Partition
    b_part: Partition

    @property
    def grading(self) -> int:
        return self.a_part.size + self.b_part.size

    def __str__(self):
        a = str(self.a_part) if self.a_part else "∅"
        b = str(self.b_part) if self.b_part else "∅"
        return f"v_{{{a},{b}}}"


VACUUM = BasisVector(EMPTY, EMPTY)


def grading(v: BasisVector) -> int:
    return v.grading


class GeneratorSymbol(NamedTuple):
    kind: str
    index: int

    def check(self):
        if self.kind not in ("a", "b"):
            raise DomainError(f"generator kind must be 'a' or 'b', got {self.kind!r}")
        if self.index == 0:
            raise DomainError("a_0 = b_0 = 0; index 0 is not a generator")
        return self

    def __str__(self):
        return f"{self.kind}_{{{self.index}}}"


class FockState:
    """Finite linear combination of basis vectors with rational Laurent coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        self._terms: dict[BasisVector, RationalLaurentY] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for v, c in items:
                self._add_term(BasisVector(Partition(v[0]), Partition(v[1])),
                               RationalLaurentY.coerce(c))

    @classmethod
    def _wrap(cls, terms):
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    def _add_term(self, v, c):
        old = self._terms.get(v)
        new = c if old is None else old + c
        if new:
            self._terms[v] = new
        else:
            self._terms.pop(v, None)

    def items(self):
        return self._terms.items()

    def coefficient(self, v: BasisVector) -> RationalLaurentY:
        return self._terms.get(v, RationalLaurentY())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, FockState):
            return NotImplemented
        return self._terms == other._terms

    def __add__(self, other: "FockState") -> "FockState":
        out = FockState._wrap(dict(self._terms))
        for v, c in other._terms.items():
            out._add_term(v, c)
        return out

    def __sub__(self, other: "FockState") -> "FockState":
        return self + other * -1

    def __mul__(self, k) -> "FockState":
        if isinstance(k, (int, Fraction)) and not k:
            return FockState()
        out = {}
        for v, c in self._terms.items():
            nc = c * k
            if nc:
                out[v] = nc
        return FockState._wrap(out)

    __rmul__ = __mul__

    def gradings(self) -> set[int]:
        return {v.grading for v in self._terms}

    def truncate(self, cap: int) -> "FockState":
        return FockState._wrap({v: c for v, c in self._terms.items() if v.grading <= cap})

    def dump(self) -> str:
        """One ``coeff · v_{mu,nu}`` line per term, sorted by grading."""
        lines = []
        for v in sorted(self._terms, key=lambda v: (v.grading, tuple(v.a_part), tuple(v.b_part))):
            lines.append(f"{self._terms[v]} · {v}")
        return "\n".join(lines)

    def __repr__(self):
        return f"FockState({len(self._terms)} terms)"


def vacuum() -> FockState:
    return FockState._wrap({VACUUM: RationalLaurentY.coerce(1)})


def basis_state(a_part=(), b_part=(), coeff=1) -> FockState:
    v = BasisVector(Partition(a_part), Partition(b_part))
    return FockState._wrap({v: RationalLaurentY.coerce(coeff)})


def _check_guard(terms):
    limit = max_states()
    if len(terms) > limit:
        raise GuardExceeded(f"Fock state has {len(terms)} basis vectors (guard {limit}); "
                            "raise REFSEV_GUARD_MAX_STATES to continue")


def apply_generator(state: FockState, g) -> FockState:
    """Apply a single generator ``a_n`` / ``b_n`` (``g`` may be a tuple ``(kind, n)``)."""
    g = GeneratorSymbol(*g).check()
    k = abs(g.index)
    creation = g.index < 0
    # which partition the generator touches: creators act on their own part,
    # annihilators on the partner part (a_k kills b_{-k}, b_k kills a_{-k})
    on_a = (g.kind == "a") == creation
    qk = quantum_integer(k)
    out = FockState._wrap({})
    for v, c in state.items():
        part = v.a_part if on_a else v.b_part
        n = part.mult(k)
        if creation:
            new_part = part.bump(k, 1)
            coeff = c * (n + 1)
        else:
            if n == 0:
                continue
            new_part = part.bump(k, -1)
            coeff = c * qk
        nv = BasisVector(new_part, v.b_part) if on_a else BasisVector(v.a_part, new_part)
        out._add_term(nv, coeff)
    return out


def apply_word(state: FockState, word: Iterable) -> FockState:
    """Apply ``g_1 g_2 ... g_n`` as an operator product (rightmost acts first)."""
    for g in reversed(list(word)):
        state = apply_generator(state, g)
        if not state:
            break
    return state


@lru_cache(maxsize=None)
def _norm(part: Partition) -> tuple[LaurentY, int]:
    """(prod_i [i]_y^{part_i}, prod_i part_i!)."""
    return quantum_product(part), part.factorial()


def basis_inner_product(v: BasisVector, w: BasisVector) -> RationalLaurentY:
    if v.a_part != w.b_part or v.b_part != w.a_part:
        return RationalLaurentY()
    qa, fa = _norm(v.a_part)
    qb, fb = _norm(v.b_part)
    return RationalLaurentY(qa * qb, fa * fb)


def inner_product(s1: FockState, s2: FockState) -> RationalLaurentY:
    total = RationalLaurentY()
    for v, c in s1.items():
        partner = BasisVector(v.b_part, v.a_part)
        c2 = s2._terms.get(partner)
        if c2 is not None:
            total = total + c * c2 * basis_inner_product(v, partner)
    return total


def apply_b_diagonal(state: FockState, a_budget: int | None = None) -> FockState:
    """Image under ``sum_{k>0} b_{-k} b_k``: move one part k from mu to nu.

    ``a_budget`` (optional) drops output vectors whose a-part has more parts.
    """
    terms: dict = {}
    for v, c in state.items():
        mu, nu = v
        if a_budget is not None and mu.length - 1 > a_budget:
            continue
        for k, m in enumerate(mu, start=1):
            if not m:
                continue
            coeff = c * (quantum_integer(k) * (nu.mult(k) + 1))
            nv = BasisVector(mu.bump(k, -1), nu.bump(k, 1))
            old = terms.get(nv)
            new = coeff if old is None else old + coeff
            if new:
                terms[nv] = new
            else:
                terms.pop(nv, None)
    _check_guard(terms)
    return FockState._wrap(terms)


@lru_cache(maxsize=None)
def _annihilation_blocks(nu_prime: Partition) -> tuple:
    """(rho, rest, [j]^rho, rho!) for every sub-partition rho of nu_prime."""
    out = []
    for rho in sub_partitions(nu_prime):
        q, f = _norm(rho)
        out.append((rho, nu_prime.sub(rho), q, f))
    return tuple(out)


def _binom_product(mu: Partition, mu_prime: Partition) -> int:
    out = 1
    for j, m in enumerate(mu, start=1):
        if m:
            out *= comb(m + mu_prime.mult(j), m)
    return out


def apply_divergence(state: FockState, i: int, grading_cap: int | None = None,
                     a_budget: int | None = None) -> FockState:
    """Image under ``sum_{||nu|| - ||mu|| = i} a_{-mu} a_nu``.

    Output vectors of grading above ``grading_cap`` are dropped; ``a_budget``
    bounds the number of parts of the output a-partition.
    """
    if grading_cap is not None and grading_cap < 0:
        raise DomainError("grading cap must be non-negative")
    terms: dict = {}
    for v, c in state.items():
        mu_p, nu_p = v
        if grading_cap is not None and v.grading - i > grading_cap:
            continue
        room = None if a_budget is None else a_budget - mu_p.length
        if room is not None and room < 0:
            continue
        for rho, nu_rest, q, f in _annihilation_blocks(nu_p):
            n = rho.size - i
            if n < 0:
                continue
            base = c.scale(q, Fraction(1, f)) if f > 1 else c.scale(q)
            for mu in partitions_of(n, room):
                coeff = base * _binom_product(mu, mu_p) if mu else base
                nv = BasisVector(mu_p.add(mu) if mu else mu_p, nu_rest)
                old = terms.get(nv)
                new = coeff if old is None else old + coeff
                if new:
                    terms[nv] = new
                else:
                    terms.pop(nv, None)
    _check_guard(terms)
    return FockState._wrap(terms)


def exp_creation(kind: str, k: int, order: int, weight: LaurentY | int = 1) -> FockState:
    """Truncation of ``exp(weight * X_{-k}) v_0`` at order ``order`` (X = a or b)."""
    term = vacuum()
    total = vacuum()
    w = RationalLaurentY.coerce(weight)
    for n in range(1, order + 1):
        term = apply_generator(term, (kind, -k)) * w * Fraction(1, n)
        total = total + term
    return total


def iter_basis(max_grading: int) -> Iterator[BasisVector]:
    """Every basis vector of grading at most ``max_grading``."""
    for g in range(max_grading + 1):
        for ga in range(g + 1):
            for mu in partitions_of(ga):
                for nu in partitions_of(g - ga):
                    yield BasisVector(mu, nu)
