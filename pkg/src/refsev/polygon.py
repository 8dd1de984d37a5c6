"""h-transverse lattice polygons encoded as (d_top, d_bottom, right, left)."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .combinatorics import IntMultiset, parse_multiset
from .errors import DomainError

__all__ = [
    "HTransversePolygon",
    "PolygonError",
    "make_polygon",
    "preset",
    "parse_polygon",
    "reconstruct_widths",
    "lattice_point_count",
    "PRESET_FAMILIES",
]


class PolygonError(DomainError):
    pass


@dataclass(frozen=True)
class HTransversePolygon:
    d_top: int
    d_bottom: int
    right: IntMultiset
    left: IntMultiset
    label: str = ""

    @property
    def height(self) -> int:
        return len(self.right)

    @property
    def widths(self) -> tuple[int, ...]:
        return reconstruct_widths(self)

    @property
    def lattice_points(self) -> int:
        return sum(w + 1 for w in self.widths)

    @property
    def dim(self) -> int:
        """#Delta - 1, the dimension of the linear system."""
        return self.lattice_points - 1

    def describe(self) -> dict:
        return {
            "label": self.label,
            "d_top": self.d_top,
            "d_bottom": self.d_bottom,
            "right": self.right.to_text(),
            "left": self.left.to_text(),
            "height": self.height,
            "widths": list(self.widths),
            "lattice_points": self.lattice_points,
        }

    def __str__(self):
        if self.label:
            return self.label
        return (f"dt={self.d_top};db={self.d_bottom};"
                f"r={self.right.to_text()};l={self.left.to_text()}")


def _widths(d_top: int, right: IntMultiset, left: IntMultiset) -> tuple[int, ...]:
    # right steps descending, left steps ascending (top to bottom) give the convex outline
    r_steps = sorted(right.values(), reverse=True)
    l_steps = sorted(left.values())
    widths = [d_top]
    for a, b in zip(r_steps, l_steps):
        widths.append(widths[-1] + a - b)
    return tuple(widths)


def reconstruct_widths(p: HTransversePolygon) -> tuple[int, ...]:
    """Row widths from the top row (``d_top``) to the bottom row (``d_bottom``)."""
    return _widths(p.d_top, p.right, p.left)


def lattice_point_count(p: HTransversePolygon) -> int:
    return p.lattice_points


def make_polygon(d_top: int, d_bottom: int, right: IntMultiset, left: IntMultiset,
                 label: str = "") -> HTransversePolygon:
    if d_top < 0 or d_bottom < 0:
        raise PolygonError(f"edge lengths must be non-negative: dt={d_top}, db={d_bottom}")
    if len(right) != len(left):
        raise PolygonError(f"height mismatch: |r|={len(right)}, |l|={len(left)}")
    if d_top + right.norm != d_bottom + left.norm:
        raise PolygonError(
            f"balance violated: dt+||r|| = {d_top + right.norm} "
            f"!= db+||l|| = {d_bottom + left.norm}")
    widths = _widths(d_top, right, left)
    if min(widths) < 0:
        raise PolygonError(f"negative row width in {list(widths)}")
    return HTransversePolygon(d_top, d_bottom, right, left, label)


def _p2(d):
    return make_polygon(0, d, IntMultiset.repeat(1, d), IntMultiset.repeat(0, d), f"p2:d={d}")


def _sigma(m, c, d):
    if m < 1:
        raise PolygonError(f"sigma needs m >= 1 (got m={m})")
    return make_polygon(c, c + d * m, IntMultiset.repeat(m, d), IntMultiset.repeat(0, d),
                        f"sigma:m={m},c={c},d={d}")


def _wps11m(m, d):
    if m < 1:
        raise PolygonError(f"wps11m needs m >= 1 (got m={m})")
    p = _sigma(m, 0, d)
    return make_polygon(p.d_top, p.d_bottom, p.right, p.left, f"wps11m:m={m},d={d}")


def _wps1mm(m, d):
    if m < 2:
        raise PolygonError(f"wps1mm needs m >= 2 (got m={m})")
    right = IntMultiset({-1: d * (m - 1), m - 1: d})
    return make_polygon(0, 0, right, IntMultiset.repeat(0, d * m), f"wps1mm:m={m},d={d}")


PRESET_FAMILIES = {
    "p2": (_p2, ("d",)),
    "sigma": (_sigma, ("m", "c", "d")),
    "wps11m": (_wps11m, ("m", "d")),
    "wps1mm": (_wps1mm, ("m", "d")),
}


def preset(family: str, **params: int) -> HTransversePolygon:
    """Polygon of a named toric surface family.

    ``p2(d)``, ``sigma(m, c, d)`` (class cF + dH on the Hirzebruch surface),
    ``wps11m(m, d)`` and ``wps1mm(m, d)`` (weighted projective planes).
    """
    try:
        builder, names = PRESET_FAMILIES[family]
    except KeyError:
        raise PolygonError(f"unknown polygon family {family!r}") from None
    if set(params) != set(names):
        raise PolygonError(f"{family} expects parameters {', '.join(names)}; got {sorted(params)}")
    for k, v in params.items():
        if not isinstance(v, int) or v < 0:
            raise PolygonError(f"parameter {k} must be a non-negative integer (got {v!r})")
    return builder(*(params[n] for n in names))


def _parse_int(key, value):
    try:
        return int(value)
    except ValueError:
        raise PolygonError(f"parameter {key} is not an integer: {value!r}") from None


def parse_polygon(text: str) -> HTransversePolygon:
    """Parse ``"p2:d=3"``, ``"sigma:m=1,c=0,d=3"`` or ``"dt=0;db=3;r=1^3;l=0^3"``."""
    text = text.strip()
    head, sep, rest = text.partition(":")
    if sep and head in PRESET_FAMILIES:
        params = {}
        for item in filter(None, (s.strip() for s in rest.split(","))):
            k, eq, v = item.partition("=")
            if not eq:
                raise PolygonError(f"bad preset parameter {item!r}")
            params[k.strip()] = _parse_int(k, v.strip())
        return preset(head, **params)
    fields = {}
    for item in filter(None, (s.strip() for s in text.split(";"))):
        k, eq, v = item.partition("=")
        if not eq:
            raise PolygonError(f"bad polygon field {item!r}")
        fields[k.strip()] = v.strip()
    missing = {"dt", "db", "r", "l"} - set(fields)
    if missing:
        raise PolygonError(f"polygon description missing fields: {', '.join(sorted(missing))}")
    return make_polygon(_parse_int("dt", fields["dt"]), _parse_int("db", fields["db"]),
                        parse_multiset(fields["r"]), parse_multiset(fields["l"]))


def closed_form_dim(family: str, **params: int) -> int:
    """#Delta - 1 from the closed formulas for the preset families."""
    if family == "p2":
        d = params["d"]
        return d * (d + 3) // 2
    if family == "sigma":
        m, c, d = params["m"], params["c"], params["d"]
        return comb(d + 1, 2) * m + c * d + c + d
    if family == "wps11m":
        m, d = params["m"], params["d"]
        return comb(d + 1, 2) * m + d
    if family == "wps1mm":
        m, d = params["m"], params["d"]
        return comb(m, 2) * d * d + m * d
    raise PolygonError(f"unknown polygon family {family!r}")
