"""Exact measure algebra of finite unions of rational intervals.

An IntervalSet is a canonical sorted tuple of disjoint, non-mergeable
intervals with rational endpoints and per-endpoint open/closed flags
(degenerate singletons allowed), plus a flag marking the set as the
complement of that base inside the reals. The base always has finite
measure; complemented sets have measure +inf but still intersect any bounded
window in a finite exact rational.

Boolean operations between plain bases are evaluated on the common endpoint
refinement: between consecutive endpoints membership is constant for both
operands, so the result is reassembled from exact point and midpoint
membership queries. Complement flags reduce everything else to those plain
operations by De Morgan.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import MalformedInterval, ParseError
from .rationals import INF, fmt_endpoint, parse_rational


@dataclass(frozen=True)
class Iv:
    lo: Fraction
    lo_closed: bool
    hi: Fraction
    hi_closed: bool

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise MalformedInterval(f"{self.lo} > {self.hi}")

    @property
    def degenerate(self) -> bool:
        return self.lo == self.hi

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x: Fraction) -> bool:
        if x == self.lo:
            return self.lo_closed
        if x == self.hi:
            return self.hi_closed
        return self.lo < x < self.hi


@dataclass(frozen=True)
class Window:
    """A closed bounded interval used as a measuring window."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise MalformedInterval(f"{self.lo} > {self.hi}")

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo


@dataclass(frozen=True)
class IntervalSet:
    parts: tuple
    complemented: bool = False

    def contains(self, x) -> bool:
        x = Fraction(x)
        inside = any(iv.contains(x) for iv in self.parts)
        return inside != self.complemented


def _merge_sorted(ivs: list) -> tuple:
    out: list[Iv] = []
    for iv in sorted(ivs, key=lambda v: (v.lo, not v.lo_closed)):
        if out:
            cur = out[-1]
            if iv.lo < cur.hi or (iv.lo == cur.hi
                                  and (cur.hi_closed or iv.lo_closed)):
                hi, hi_closed = max((cur.hi, cur.hi_closed),
                                    (iv.hi, iv.hi_closed),
                                    key=lambda t: (t[0], t[1]))
                out[-1] = Iv(cur.lo, cur.lo_closed, hi, hi_closed)
                continue
        out.append(iv)
    return tuple(out)


def canonicalize(raw, complemented: bool = False) -> IntervalSet:
    """Sort, merge and drop empty pieces; raises MalformedInterval on lo > hi.

    Degenerate intervals with an open endpoint denote the empty set and are
    dropped. Touching intervals merge whenever the shared endpoint belongs
    to either side, so [0,1] | [1,2] canonicalizes to [0,2].
    """
    ivs = []
    for item in raw:
        iv = item if isinstance(item, Iv) else Iv(*item)
        if iv.degenerate and not (iv.lo_closed and iv.hi_closed):
            continue
        ivs.append(iv)
    return IntervalSet(_merge_sorted(ivs), complemented)


EMPTY_SET = IntervalSet(())
REALS = IntervalSet((), True)


def closed(lo, hi) -> IntervalSet:
    return canonicalize([Iv(lo, True, hi, True)])


def open_iv(lo, hi) -> IntervalSet:
    return canonicalize([Iv(lo, False, hi, False)])


def singleton(x) -> IntervalSet:
    return canonicalize([Iv(x, True, x, True)])


def complement(a: IntervalSet) -> IntervalSet:
    return IntervalSet(a.parts, not a.complemented)


def measure(a: IntervalSet):
    """Total length; +inf for complemented sets."""
    if a.complemented:
        return INF
    return sum((iv.length for iv in a.parts), Fraction(0))


def is_null(a: IntervalSet) -> bool:
    return not a.complemented and all(iv.degenerate for iv in a.parts)


def is_empty_set(a: IntervalSet) -> bool:
    return not a.complemented and not a.parts


def _plain_combine(a: tuple, b: tuple, keep) -> tuple:
    """Evaluate a pointwise boolean combination of two plain bases."""
    points = sorted({iv.lo for iv in a + b} | {iv.hi for iv in a + b})

    def in_plain(parts: tuple, x: Fraction) -> bool:
        return any(iv.contains(x) for iv in parts)

    regions: list[tuple] = []  # (left, left_closed, right, right_closed, value)
    for i, p in enumerate(points):
        if i > 0:
            mid = (points[i - 1] + p) / 2
            regions.append((points[i - 1], False, p, False,
                            keep(in_plain(a, mid), in_plain(b, mid))))
        regions.append((p, True, p, True, keep(in_plain(a, p), in_plain(b, p))))

    out: list[Iv] = []
    current: list | None = None
    for lo, lo_closed, hi, hi_closed, value in regions:
        if value:
            if current is None:
                current = [lo, lo_closed, hi, hi_closed]
            else:
                current[2], current[3] = hi, hi_closed
        elif current is not None:
            out.append(Iv(*current))
            current = None
    if current is not None:
        out.append(Iv(*current))
    return tuple(iv for iv in out
                 if not (iv.degenerate and not (iv.lo_closed and iv.hi_closed)))


def _plain(parts_a: tuple, parts_b: tuple, op: str) -> tuple:
    table = {
        "union": lambda x, y: x or y,
        "intersect": lambda x, y: x and y,
        "subtract": lambda x, y: x and not y,
        "symm_diff": lambda x, y: x != y,
    }
    return _plain_combine(parts_a, parts_b, table[op])


def union(a: IntervalSet, b: IntervalSet) -> IntervalSet:
    if not a.complemented and not b.complemented:
        return IntervalSet(_plain(a.parts, b.parts, "union"))
    if a.complemented and b.complemented:
        return IntervalSet(_plain(a.parts, b.parts, "intersect"), True)
    base, other = (a, b) if a.complemented else (b, a)
    return IntervalSet(_plain(base.parts, other.parts, "subtract"), True)


def intersect(a: IntervalSet, b: IntervalSet) -> IntervalSet:
    return complement(union(complement(a), complement(b)))


def subtract(a: IntervalSet, b: IntervalSet) -> IntervalSet:
    return intersect(a, complement(b))


def symm_diff(a: IntervalSet, b: IntervalSet) -> IntervalSet:
    if a.complemented == b.complemented:
        return IntervalSet(_plain(a.parts, b.parts, "symm_diff"))
    return IntervalSet(_plain(a.parts, b.parts, "symm_diff"), True)


def boolean(a: IntervalSet, b: IntervalSet, op: str) -> IntervalSet:
    ops = {"union": union, "intersect": intersect,
           "subtract": subtract, "symm_diff": symm_diff}
    if op not in ops:
        raise ValueError(f"unknown boolean op {op!r}")
    return ops[op](a, b)


def subset(a: IntervalSet, b: IntervalSet) -> bool:
    return is_empty_set(subtract(a, b))


def measure_in_window(a: IntervalSet, w: Window) -> Fraction:
    """lambda(a intersected with the window); finite even for complements."""
    clipped = Fraction(0)
    for iv in a.parts:
        lo = max(iv.lo, w.lo)
        hi = min(iv.hi, w.hi)
        if lo < hi:
            clipped += hi - lo
    if a.complemented:
        return w.length - clipped
    return clipped


def endpoint_values(a: IntervalSet) -> list:
    """Sorted distinct base endpoints (the structure points of the set)."""
    vals = {iv.lo for iv in a.parts} | {iv.hi for iv in a.parts}
    return sorted(vals)


def covers_right(a: IntervalSet, p) -> bool:
    """Does a contain a full punctured right neighborhood (p, p + delta)?"""
    p = Fraction(p)
    inside = any(iv.lo <= p < iv.hi for iv in a.parts)
    return inside != a.complemented


def covers_left(a: IntervalSet, p) -> bool:
    p = Fraction(p)
    inside = any(iv.lo < p <= iv.hi for iv in a.parts)
    return inside != a.complemented


def essential_spans(a: IntervalSet) -> list:
    """Merged closures of the non-degenerate base intervals.

    Point gaps between non-degenerate neighbors are filled (they carry no
    measure) and singleton components are dropped, so the result captures
    the base up to null sets: the measure-relevant skeleton.
    """
    spans: list[list] = []
    for iv in a.parts:
        if iv.degenerate:
            continue
        if spans and iv.lo == spans[-1][1]:
            spans[-1][1] = iv.hi
        else:
            spans.append([iv.lo, iv.hi])
    return [(lo, hi) for lo, hi in spans]


# --------------------------------------------------------------------------
# Text grammar:  [0,1] | (2,3] | {5}     with optional prefix  co
# plus the literals  R  and  empty.
# --------------------------------------------------------------------------

def parse_interval_set(text: str) -> IntervalSet:
    body = text.strip()
    complemented = False
    if body.startswith("co "):
        complemented = True
        body = body[3:].strip()
    if body == "R":
        return REALS
    if body in ("empty", ""):
        return IntervalSet((), complemented)
    ivs = []
    for chunk in body.split("|"):
        chunk = chunk.strip()
        if chunk.startswith("{") and chunk.endswith("}"):
            x = parse_rational(chunk[1:-1])
            ivs.append(Iv(x, True, x, True))
            continue
        if len(chunk) < 2 or chunk[0] not in "[(" or chunk[-1] not in "])":
            raise ParseError(f"bad interval {chunk!r} in {text!r}")
        lo_closed = chunk[0] == "["
        hi_closed = chunk[-1] == "]"
        inner = chunk[1:-1].split(",")
        if len(inner) != 2:
            raise ParseError(f"bad interval {chunk!r} in {text!r}")
        lo, hi = parse_rational(inner[0]), parse_rational(inner[1])
        if lo > hi:
            raise MalformedInterval(f"{chunk}: left endpoint beyond right")
        ivs.append(Iv(lo, lo_closed, hi, hi_closed))
    return canonicalize(ivs, complemented)


def render_interval_set(a: IntervalSet) -> str:
    if not a.parts:
        return "R" if a.complemented else "empty"
    chunks = []
    for iv in a.parts:
        if iv.degenerate:
            chunks.append("{" + fmt_endpoint(iv.lo) + "}")
        else:
            chunks.append(f"{'[' if iv.lo_closed else '('}"
                          f"{fmt_endpoint(iv.lo)},{fmt_endpoint(iv.hi)}"
                          f"{']' if iv.hi_closed else ')'}")
    body = " | ".join(chunks)
    return f"co {body}" if a.complemented else body


def interval_set_to_dict(a: IntervalSet) -> dict:
    return {
        "complemented": a.complemented,
        "parts": [{"lo": fmt_endpoint(iv.lo), "lo_closed": iv.lo_closed,
                   "hi": fmt_endpoint(iv.hi), "hi_closed": iv.hi_closed}
                  for iv in a.parts],
    }
