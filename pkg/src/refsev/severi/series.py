"""Generating functions over curve classes, and irreducible degrees.

The Fock side of each identity is expanded directly: the ket ``exp(a_{-1}) v_0``
is truncated at the grading the chosen orders can reach, the operator
``exp(q H)`` is applied one power of ``q`` at a time while tracking the
bookkeeping exponents, and coefficients are compared with :func:`refined_severi`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Sequence

from ..errors import DomainError
from ..fock import (FockState, apply_b_diagonal, apply_divergence, apply_generator,
                    basis_state, exp_creation, inner_product, vacuum)
from ..combinatorics import Partition
from ..polygon import HTransversePolygon, closed_form_dim, preset
from ..ring import LaurentY, RationalLaurentY
from .theorem import refined_severi

__all__ = [
    "GenSeries",
    "GenfunReport",
    "operator_power_states",
    "genfun_verify",
    "grading_shortcut_check",
    "irreducible_degrees",
    "class_polygon",
    "class_dim",
]


# -- curve classes of the preset families ------------------------------------

def class_polygon(family: str, cls: tuple, m: int | None = None) -> HTransversePolygon:
    """Polygon of class ``cls``: ``(d,)`` for p2/wps11m/wps1mm, ``(c, d)`` for sigma."""
    if family == "p2":
        return preset("p2", d=cls[0])
    if family == "sigma":
        return preset("sigma", m=m, c=cls[0], d=cls[1])
    if family in ("wps11m", "wps1mm"):
        return preset(family, m=m, d=cls[0])
    raise DomainError(f"unknown polygon family {family!r}")


def class_dim(family: str, cls: tuple, m: int | None = None) -> int:
    if family == "p2":
        return closed_form_dim("p2", d=cls[0])
    if family == "sigma":
        return closed_form_dim("sigma", m=m, c=cls[0], d=cls[1])
    return closed_form_dim(family, m=m, d=cls[0])


def _class_rank(family: str) -> int:
    return 2 if family == "sigma" else 1


def _check_family(family: str, m: int | None):
    if family not in ("p2", "sigma", "wps11m", "wps1mm"):
        raise DomainError(f"unknown polygon family {family!r}")
    if family != "p2" and m is None:
        raise DomainError(f"family {family} needs the parameter m")


# -- truncated series -------------------------------------------------------------

@dataclass
class GenSeries:
    """``sum c[(L, n)] v^L z^n / n!``, truncated to classes ``<= max_class``.

    ``dim`` maps a class to ``dim|L|``; terms with ``dim|L| - n > max_delta``
    are dropped.  Because ``dim`` is superadditive the cogenus of a product term
    is at least the sum of the factors' cogenera, so the truncation commutes
    with multiplication.
    """

    max_class: tuple
    max_delta: int
    dim: Callable[[tuple], int]
    coeffs: dict = field(default_factory=dict)

    def _keep(self, cls: tuple, n: int) -> bool:
        if any(c > b for c, b in zip(cls, self.max_class)):
            return False
        return n >= 0 and self.dim(cls) - n <= self.max_delta

    def add_term(self, cls: tuple, n: int, c):
        if not c or not self._keep(cls, n):
            return
        c = RationalLaurentY.coerce(c)
        old = self.coeffs.get((cls, n))
        new = c if old is None else old + c
        if new:
            self.coeffs[(cls, n)] = new
        else:
            self.coeffs.pop((cls, n), None)

    def _empty(self) -> "GenSeries":
        return GenSeries(self.max_class, self.max_delta, self.dim)

    def __add__(self, other: "GenSeries") -> "GenSeries":
        out = self._empty()
        for src in (self, other):
            for (cls, n), c in src.coeffs.items():
                out.add_term(cls, n, c)
        return out

    def scale(self, k: Fraction | int) -> "GenSeries":
        out = self._empty()
        for (cls, n), c in self.coeffs.items():
            out.add_term(cls, n, c * Fraction(k))
        return out

    def __mul__(self, other: "GenSeries") -> "GenSeries":
        out = self._empty()
        for (c1, n1), a in self.coeffs.items():
            for (c2, n2), b in other.coeffs.items():
                cls = tuple(x + y for x, y in zip(c1, c2))
                if any(c > m for c, m in zip(cls, self.max_class)):
                    continue
                d = self.dim(cls)
                if d < self.dim(c1) + self.dim(c2):
                    raise ArithmeticError(f"dimension not superadditive at {c1} + {c2}")
                out.add_term(cls, n1 + n2, a * b * comb(n1 + n2, n1))
        return out

    def constant(self):
        zero = tuple(0 for _ in self.max_class)
        return self.coeffs.get((zero, 0), RationalLaurentY())

    def log(self) -> "GenSeries":
        """``log`` of a series with constant term 1."""
        if self.constant() != 1:
            raise ArithmeticError("log needs constant term 1")
        zero = tuple(0 for _ in self.max_class)
        x = self._empty()
        for key, c in self.coeffs.items():
            if key != (zero, 0):
                x.add_term(*key, c)
        out = self._empty()
        power = x
        k = 1
        while power.coeffs:
            out = out + power.scale(Fraction((-1) ** (k + 1), k))
            power = power * x
            k += 1
        return out

    def cogenus_table(self) -> dict:
        """``{(L, delta): coefficient}`` with the EGF factorial removed."""
        return {(cls, self.dim(cls) - n): c for (cls, n), c in self.coeffs.items()}


def _classes(family: str, max_class: tuple):
    if _class_rank(family) == 2:
        return [(c, d) for c in range(max_class[0] + 1) for d in range(max_class[1] + 1)]
    return [(d,) for d in range(max_class[0] + 1)]


def irreducible_degrees(family: str, max_class, max_delta: int, m: int | None = None,
                        threads: int = 1) -> dict:
    """``{(L, delta): N_0^{L,delta}(y)}`` via the log of the class generating series.

    ``max_class`` is ``d`` (or ``(c, d)`` for sigma).  All entries with class
    componentwise ``<= max_class`` and ``delta <= max_delta`` are exact.
    """
    _check_family(family, m)
    if isinstance(max_class, int):
        max_class = (max_class,)
    max_class = tuple(max_class)
    if len(max_class) != _class_rank(family):
        raise DomainError(f"{family} classes have {_class_rank(family)} component(s)")
    if max_delta < 0 or min(max_class) < 0:
        raise DomainError("truncation orders must be non-negative")
    dim = lambda cls: class_dim(family, cls, m)  # noqa: E731
    series = GenSeries(max_class, max_delta, dim)
    for cls in _classes(family, max_class):
        if family == "wps1mm" and cls == (0,):
            series.add_term(cls, 0, 1)
            continue
        p = class_polygon(family, cls, m)
        for delta in range(max_delta + 1):
            n = p.dim - delta
            if n < 0:
                break
            series.add_term(cls, n, refined_severi(p, delta, threads))
    table = {}
    for (cls, delta), c in series.log().cogenus_table().items():
        table[(cls, delta)] = c.to_laurent()
    out = {}
    for cls in _classes(family, max_class):
        if not any(cls):
            continue
        for delta in range(max_delta + 1):
            out[(cls, delta)] = table.get((cls, delta), LaurentY())
    return out


# -- operator powers with bookkeeping counters ---------------------------------

def operator_power_states(ket: FockState, blocks: Sequence[tuple[int, int]], bounds: Sequence[int],
                          max_power: int) -> list[dict]:
    """States ``H^n ket`` split by counter exponents, for ``n = 0..max_power``.

    ``H = B + sum_j x_{c_j} D_{i_j}`` where ``blocks`` lists ``(c_j, i_j)``
    (counter index, divergence).  Exponent vectors exceeding ``bounds`` are
    dropped.  Entry ``n`` maps exponent tuples to states.
    """
    zero = tuple(0 for _ in bounds)
    layer = {zero: ket}
    out = [layer]
    for _ in range(max_power):
        nxt: dict = {}
        for exps, st in layer.items():
            img = apply_b_diagonal(st)
            if img:
                nxt[exps] = nxt[exps] + img if exps in nxt else img
            for c, i in blocks:
                e = list(exps)
                e[c] += 1
                if e[c] > bounds[c]:
                    continue
                img = apply_divergence(st, i)
                if img:
                    key = tuple(e)
                    nxt[key] = nxt[key] + img if key in nxt else img
        layer = nxt
        out.append(layer)
    return out


@dataclass
class GenfunReport:
    family: str
    orders: dict
    checked: int = 0
    mismatches: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def first_mismatch(self):
        return self.mismatches[0] if self.mismatches else None

    def summary(self) -> str:
        if self.ok:
            return f"{self.family}: {self.checked} coefficients match"
        key, got, want = self.mismatches[0]
        return (f"{self.family}: mismatch at {key}: generating function gives {got}, "
                f"refined Severi degree gives {want}")


def _bra_expectations(state: FockState, s_order: int) -> list[RationalLaurentY]:
    """``[<v_0| a_1^c / c! |state> for c = 0..s_order]``."""
    out = []
    cur = state
    for c in range(s_order + 1):
        if c:
            cur = apply_generator(cur, ("a", 1)) * Fraction(1, c)
        out.append(inner_product(vacuum(), cur))
    return out


def _expected(family: str, cls: tuple, n: int, m) -> RationalLaurentY:
    p = class_polygon(family, cls, m)
    delta = p.dim - n
    if delta < 0:
        return RationalLaurentY()
    return RationalLaurentY(refined_severi(p, delta), factorial(n))


def genfun_verify(family: str, orders: dict, m: int | None = None) -> GenfunReport:
    """Compare the expanded Fock-space generating function with refined_severi.

    ``orders`` has keys ``q`` and ``t`` (and ``s`` for sigma).  For ``wps1mm``
    the divergence -1 blocks get their own counter and only the exponent
    ``(m-1) d`` may survive; any other surviving exponent is a mismatch.
    """
    _check_family(family, m if family != "p2" else 1)
    q, t = orders["q"], orders["t"]
    s = orders.get("s", 0) if family == "sigma" else 0
    report = GenfunReport(family, dict(orders))
    if family == "wps1mm":
        return _verify_wps1mm(report, m, q, t)
    mm = 1 if family == "p2" else m
    # grading of the bra is at most s and Coeff_{t^d} lowers it by d*mm
    ket = exp_creation("a", 1, s + t * mm)
    layers = operator_power_states(ket, [(0, mm)], [t], q)
    for n, layer in enumerate(layers):
        for d in range(t + 1):
            st = layer.get((d,))
            vals = _bra_expectations(st, s) if st else [RationalLaurentY()] * (s + 1)
            for c in range(s + 1):
                got = vals[c] * Fraction(1, factorial(n))
                cls = (c, d) if family == "sigma" else (d,)
                want = _expected(family, cls, n, mm)
                report.checked += 1
                if got != want:
                    report.mismatches.append(({"s": c, "t": d, "q": n}, got, want))
    return report


def _verify_wps1mm(report: GenfunReport, m: int, q: int, t: int) -> GenfunReport:
    if m < 2:
        raise DomainError(f"wps1mm needs m >= 2 (got m={m})")
    s_bound = (m - 1) * t
    layers = operator_power_states(vacuum(), [(0, -1), (1, m - 1)], [s_bound, t], q)
    for n, layer in enumerate(layers):
        for d in range(t + 1):
            got = RationalLaurentY()
            for (e_s, e_t), st in layer.items():
                if e_t != d:
                    continue
                val = inner_product(vacuum(), st)
                if not val:
                    continue
                if e_s != (m - 1) * d:
                    report.mismatches.append(({"s": e_s, "t": d, "q": n}, val, RationalLaurentY()))
                got = got + val
            got = got * Fraction(1, factorial(n))
            want = _expected("wps1mm", (d,), n, m)
            report.checked += 1
            if got != want:
                report.mismatches.append(({"t": d, "q": n}, got, want))
    report.notes.append(f"only the s-exponent {m - 1}*d survives")
    return report


def grading_shortcut_check(p: HTransversePolygon, delta: int, divergence: int | None = None) -> bool:
    """True iff ``<bra| H_m(1)^N |ket>`` equals the degree with ``t^d`` selected.

    Only meaningful for a single right direction ``m`` and left direction 0
    (the p2, sigma and wps11m presets); other polygons raise.
    """
    rights = set(p.right.values())
    if len(rights) > 1 or set(p.left.values()) - {0}:
        raise DomainError("grading shortcut needs one right direction and left direction 0")
    if divergence is None:
        divergence = rights.pop() if rights else 1
    n = p.dim - delta
    if n < 0:
        return refined_severi(p, delta) == LaurentY()
    state = basis_state(Partition.ones(p.d_bottom), ())
    for _ in range(n):
        state = apply_b_diagonal(state) + apply_divergence(state, divergence)
    full = inner_product(basis_state(Partition.ones(p.d_top), ()), state)
    return full == RationalLaurentY.coerce(refined_severi(p, delta))
