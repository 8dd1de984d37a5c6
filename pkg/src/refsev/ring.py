"""Exact arithmetic in Z[y^(1/2), y^(-1/2)].

Exponents are stored doubled ("half-exponents"), so ``y^(1/2)`` is the key ``1``
and ``y`` is the key ``2``.  Coefficients are Python ints.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, NamedTuple, Union

__all__ = [
    "LaurentY",
    "RationalLaurentY",
    "GaussianInt",
    "quantum_integer",
    "quantum_product",
    "poly_add",
    "poly_mul",
    "poly_scale",
    "poly_eval",
    "is_symmetric",
]


class GaussianInt(NamedTuple):
    real: int
    imag: int

    def __str__(self):
        if self.imag == 0:
            return str(self.real)
        sign = "+" if self.imag > 0 else "-"
        return f"{self.real}{sign}{abs(self.imag)}i"


# i^k for k mod 4
_I_POWERS = ((1, 0), (0, 1), (-1, 0), (0, -1))


class LaurentY:
    """Immutable Laurent polynomial in ``y^(1/2)`` with integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            self._terms = {}
        elif isinstance(terms, dict):
            self._terms = {int(e): int(c) for e, c in terms.items() if c}
        else:
            acc: dict[int, int] = {}
            for e, c in terms:
                acc[e] = acc.get(e, 0) + c
            self._terms = {e: c for e, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict) -> "LaurentY":
        # caller guarantees canonical form
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: int) -> "LaurentY":
        return cls._wrap({0: c} if c else {})

    @classmethod
    def monomial(cls, half_exp: int, coeff: int = 1) -> "LaurentY":
        return cls._wrap({half_exp: coeff} if coeff else {})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """(half_exponent, coefficient) pairs, ascending in exponent."""
        return sorted(self._terms.items())

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        if isinstance(other, LaurentY):
            return self._terms == other._terms
        if isinstance(other, RationalLaurentY):
            return other.den == 1 and other.num == self
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self):
        return LaurentY._wrap({e: -c for e, c in self._terms.items()})

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentY.const(other)
        elif not isinstance(other, LaurentY):
            return NotImplemented
        if len(other._terms) > len(self._terms):
            a, b = other._terms, self._terms
        else:
            a, b = self._terms, other._terms
        out = dict(a)
        for e, c in b.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentY._wrap(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentY.const(other)
        elif not isinstance(other, LaurentY):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentY()
            return LaurentY._wrap({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentY):
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentY._wrap({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a Laurent polynomial")
        result = LaurentY.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def content(self) -> int:
        g = 0
        for c in self._terms.values():
            g = gcd(g, c)
        return g

    def exact_div_int(self, k: int) -> "LaurentY":
        out = {}
        for e, c in self._terms.items():
            q, r = divmod(c, k)
            if r:
                raise ArithmeticError(f"{self} is not divisible by {k}")
            out[e] = q
        return LaurentY._wrap(out)

    def divexact(self, other: "LaurentY") -> "LaurentY":
        """Exact quotient ``self / other``; raises ArithmeticError on a remainder."""
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return LaurentY()
        # long division from the top degree down
        rem = dict(self._terms)
        d_top = max(other._terms)
        d_lead = other._terms[d_top]
        d_low = min(other._terms)
        q_min = min(rem) - d_low
        quot: dict[int, int] = {}
        while rem:
            top = max(rem)
            shift = top - d_top
            q, r = divmod(rem[top], d_lead)
            if r or shift < q_min:
                raise ArithmeticError("inexact polynomial division")
            quot[shift] = q
            for e, c in other._terms.items():
                k = e + shift
                v = rem.get(k, 0) - q * c
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return LaurentY._wrap(quot)

    def mirror(self) -> "LaurentY":
        """Image under ``y^(1/2) -> y^(-1/2)``."""
        return LaurentY._wrap({-e: c for e, c in self._terms.items()})

    def is_symmetric(self) -> bool:
        t = self._terms
        return all(t.get(-e) == c for e, c in t.items())

    def has_integer_exponents(self) -> bool:
        return all(e % 2 == 0 for e in self._terms)

    def evaluate(self, point) -> GaussianInt:
        """Value at ``y=1`` (``point`` 1 / "one") or ``y=-1`` via ``y^(1/2) -> i``."""
        if point in (1, "one", "y1"):
            return GaussianInt(sum(self._terms.values()), 0)
        if point in (-1, "minus_one", "ym1"):
            re = im = 0
            for e, c in self._terms.items():
                a, b = _I_POWERS[e % 4]
                re += a * c
                im += b * c
            return GaussianInt(re, im)
        raise ValueError(f"unsupported evaluation point {point!r}")

    def to_json(self) -> dict:
        return {"halfpowers": True, "terms": [[e, str(c)] for e, c in self.items()]}

    @classmethod
    def from_json(cls, obj) -> "LaurentY":
        if not obj.get("halfpowers", False):
            raise ValueError("expected half-power encoded Laurent polynomial")
        return cls((int(e), int(c)) for e, c in obj["terms"])

    def __repr__(self):
        return f"LaurentY({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.items():
            if e == 0:
                mono = ""
            elif e == 2:
                mono = "y"
            elif e % 2 == 0:
                mono = f"y^{e // 2}"
            else:
                mono = f"y^({e}/2)"
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


class RationalLaurentY:
    """``numerator / denominator`` with a Laurent numerator and a positive int denominator.

    Kept reduced: ``gcd(content(num), den) == 1``.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=None, den: int = 1):
        if num is None:
            num = LaurentY()
        elif isinstance(num, int):
            num = LaurentY.const(num)
        if den <= 0:
            if den == 0:
                raise ZeroDivisionError("zero denominator")
            num, den = -num, -den
        if den != 1:
            g = gcd(num.content(), den)
            if not num:
                den = 1
            elif g > 1:
                num = num.exact_div_int(g)
                den //= g
        self.num = num
        self.den = den

    @classmethod
    def _raw(cls, num: LaurentY, den: int) -> "RationalLaurentY":
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        return obj

    @classmethod
    def coerce(cls, x) -> "RationalLaurentY":
        if isinstance(x, RationalLaurentY):
            return x
        if isinstance(x, LaurentY):
            return cls._raw(x, 1)
        if isinstance(x, int):
            return cls._raw(LaurentY.const(x), 1)
        if isinstance(x, Fraction):
            return cls(LaurentY.const(x.numerator), x.denominator)
        raise TypeError(f"cannot coerce {type(x).__name__} to RationalLaurentY")

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        try:
            other = RationalLaurentY.coerce(other)
        except TypeError:
            return NotImplemented
        return self.den == other.den and self.num == other.num

    def __hash__(self):
        return hash((self.num, self.den))

    def __neg__(self):
        return RationalLaurentY._raw(-self.num, self.den)

    def __add__(self, other):
        other = RationalLaurentY.coerce(other)
        if self.den == other.den:
            return RationalLaurentY(self.num + other.num, self.den)
        return RationalLaurentY(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-RationalLaurentY.coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Fraction):
            return RationalLaurentY(self.num * other.numerator, self.den * other.denominator)
        other = RationalLaurentY.coerce(other)
        if self.den == 1 and other.den == 1:
            return RationalLaurentY._raw(self.num * other.num, 1)
        return RationalLaurentY(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def scale(self, poly: LaurentY, frac: Fraction | int = 1) -> "RationalLaurentY":
        """``self * poly * frac``."""
        if isinstance(frac, int):
            return RationalLaurentY(self.num * poly * frac, self.den)
        return RationalLaurentY(self.num * poly * frac.numerator, self.den * frac.denominator)

    def divexact(self, poly: LaurentY) -> "RationalLaurentY":
        return RationalLaurentY._raw(self.num.divexact(poly), self.den)

    def is_integral(self) -> bool:
        return self.den == 1

    def to_laurent(self) -> LaurentY:
        if self.den != 1:
            raise ArithmeticError(f"non-integral coefficient: ({self.num})/{self.den}")
        return self.num

    def __repr__(self):
        return f"RationalLaurentY({self})"

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/{self.den}"


Scalar = Union[int, LaurentY]


@lru_cache(maxsize=None)
def quantum_integer(n: int) -> LaurentY:
    """[n]_y = y^((n-1)/2) + y^((n-3)/2) + ... + y^(-(n-1)/2)."""
    if n == 0:
        return LaurentY()
    if n < 0:
        return -quantum_integer(-n)
    return LaurentY._wrap({e: 1 for e in range(-(n - 1), n, 2)})


def quantum_product(mult: Iterable[int]) -> LaurentY:
    """prod_i [i]_y^(mult[i-1]) for a multiplicity sequence (I_y^mult)."""
    out = LaurentY.const(1)
    for i, k in enumerate(mult, start=1):
        if k:
            out = out * quantum_integer(i) ** k
    return out


def poly_add(a: LaurentY, b: Scalar) -> LaurentY:
    return a + b


def poly_mul(a: LaurentY, b: Scalar) -> LaurentY:
    return a * b


def poly_scale(a: LaurentY, k: int) -> LaurentY:
    return a * k


def poly_eval(p, point) -> GaussianInt:
    if isinstance(p, int):
        p = LaurentY.const(p)
    return p.evaluate(point)


def is_symmetric(p: LaurentY) -> bool:
    return p.is_symmetric()
