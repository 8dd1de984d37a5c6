"""Refined Caporaso-Harris recursion for plane curves (test-only oracle).

``N(d, delta, alpha, beta)`` counts curves of degree d with cogenus delta, with
tangency alpha at fixed points of a line and beta at free points, through
``d(d+3)/2 - delta - d + |beta|`` general points.
"""
from functools import lru_cache
from itertools import product
from math import comb

from refsev.ring import LaurentY, quantum_integer


def _size(p):
    return sum(i * m for i, m in enumerate(p, start=1))


def _bump(p, k, delta):
    p = list(p) + [0] * max(0, k - len(p))
    p[k - 1] += delta
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def _below(p):
    """All alpha' <= p componentwise."""
    for choice in product(*(range(m + 1) for m in p)):
        yield _trim(choice)


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def _above(p, total):
    """All beta' >= p componentwise with ||beta'|| == total."""
    top = max(total, len(p))

    def rec(i, rest, acc):
        if i > top:
            if rest == 0:
                yield _trim(acc)
            return
        base = p[i - 1] if i <= len(p) else 0
        if base * i > rest:
            return
        for m in range(base, rest // i + 1):
            yield from rec(i + 1, rest - m * i, acc + [m])
    yield from rec(1, total, [])


@lru_cache(maxsize=None)
def ch(d: int, delta: int, alpha: tuple = (), beta: tuple | None = None) -> LaurentY:
    if beta is None:
        beta = (d,) if d else ()
    alpha, beta = _trim(alpha), _trim(beta)
    if _size(alpha) + _size(beta) != d or delta < 0:
        return LaurentY()
    if d == 0:
        return LaurentY.const(1 if delta == 0 else 0)
    if d * (d + 3) // 2 - delta - d + sum(beta) < 0:
        return LaurentY()
    total = LaurentY()
    for k, m in enumerate(beta, start=1):
        if m:
            total = total + quantum_integer(k) * ch(d, delta, _bump(alpha, k, 1), _bump(beta, k, -1))
    for a2 in _below(alpha):
        rest = d - 1 - _size(a2)
        if rest < 0:
            continue
        for b2 in _above(beta, rest):
            diff = [b2[i] - (beta[i] if i < len(beta) else 0) for i in range(len(b2))]
            d2 = delta - (d - 1) + sum(diff)
            if d2 < 0:
                continue
            coeff = 1
            for i, a in enumerate(alpha):
                coeff *= comb(a, a2[i] if i < len(a2) else 0)
            for i, b in enumerate(b2):
                coeff *= comb(b, beta[i] if i < len(beta) else 0)
            weight = LaurentY.const(coeff)
            for i, e in enumerate(diff, start=1):
                if e:
                    weight = weight * quantum_integer(i) ** e
            sub = ch(d - 1, d2, a2, b2)
            if sub:
                total = total + weight * sub
    return total
