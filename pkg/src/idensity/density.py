"""Exact ideal-density analysis of interval sets at rational points.

The measuring device is a *window generator*: an anchor point p plus, for
each piece of a partition of N, a pair of nonnegative arm laws (left(n),
right(n)) describing the closed window [p - left(n), p + right(n)]. A
generator is admissible for an ideal when the indices whose windows satisfy
0 < length < 1/n form a filter-large set.

On finite unions of rational intervals the whole analysis collapses to an
exact local model: around any point p there are two bits (is E locally full
just left / just right of p?) and two distances to the nearest structure
change. Beyond a computable index every window edge stays inside one
structure cell, so the occupancy ratio becomes a small rational function of
n and the ideal limsup/liminf machinery applies verbatim. Since every ratio
tail is a weighted mean of the two local bits, all attainable density values
lie between them, and single-piece witnesses with one zero arm attain both
ends; that closed form replaces the sup/inf over all admissible generators.
"""

from __future__ import annotations

import enum
from dataclasses import InitVar, dataclass
from fractions import Fraction

from .errors import InvalidGenerator, ParseError, PartitionViolation
from .ideals import Ideal
from .indexsets import (
    Complement,
    Difference,
    FiniteSet,
    IndexSet,
    Intersection,
    NATURALS,
    Union,
    is_empty,
    parse_index_set,
    render_index_set,
)
from .intervals import (
    IntervalSet,
    Iv,
    Window,
    complement,
    covers_left,
    covers_right,
    endpoint_values,
    essential_spans,
    measure_in_window,
)
from .rationals import fmt_rational, parse_rational
from .ratfunc import RatFunc
from .sequences import (
    Constant,
    Piece,
    PiecewiseSequence,
    Reciprocal,
    ideal_liminf,
    ideal_limsup,
    law_from_ratfunc,
    parse_law,
    render_law,
)

DISTANCE_CAP = Fraction(1)


@dataclass(frozen=True)
class LocalSignature:
    """Exact local model of an interval set around a point.

    For every window [p-u, p+v] with 0 <= u < dist_left and
    0 <= v < dist_right the measure of the intersection is exactly
    eps_left*u + eps_right*v.
    """

    eps_left: int
    eps_right: int
    dist_left: Fraction
    dist_right: Fraction
    point_member: bool


def local_signature(p, e: IntervalSet) -> LocalSignature:
    p = Fraction(p)
    eps_l = 1 if covers_left(e, p) else 0
    eps_r = 1 if covers_right(e, p) else 0
    left = [p - c for c in endpoint_values(e) if c < p]
    right = [c - p for c in endpoint_values(e) if c > p]
    return LocalSignature(
        eps_l, eps_r,
        min(left) if left else DISTANCE_CAP,
        min(right) if right else DISTANCE_CAP,
        e.contains(p),
    )


@dataclass(frozen=True)
class ArmPair:
    piece: IndexSet
    left: object
    right: object


@dataclass(frozen=True)
class WindowGenerator:
    anchor: Fraction
    arms: tuple
    check: InitVar[bool] = True

    def __post_init__(self, check):
        object.__setattr__(self, "anchor", Fraction(self.anchor))
        object.__setattr__(self, "arms", tuple(self.arms))
        if check:
            self._validate()

    def _validate(self):
        if not self.arms:
            raise InvalidGenerator("a generator needs at least one arm piece")
        covered: IndexSet = self.arms[0].piece
        for pair in self.arms[1:]:
            covered = Union(covered, pair.piece)
        if not is_empty(Complement(covered)):
            raise PartitionViolation("generator pieces do not cover the naturals")
        for i, a in enumerate(self.arms):
            for b in self.arms[i + 1:]:
                if not is_empty(Intersection(a.piece, b.piece)):
                    raise PartitionViolation("generator pieces overlap")
        for pair in self.arms:
            for law in (pair.left, pair.right):
                _require_nonnegative(law)
            _require_positive_sum(pair)

    def window(self, n: int) -> Window:
        for pair in self.arms:
            if pair.piece.member(n):
                return _arm_window(self.anchor, pair, n)
        raise PartitionViolation(f"no generator piece contains index {n}")


def _arm_window(anchor: Fraction, pair: ArmPair, n: int) -> Window:
    return Window(anchor - pair.left.value_at(n),
                  anchor + pair.right.value_at(n))


def _require_nonnegative(law) -> None:
    rf = law.as_ratfunc()
    if rf.eventual_sign() < 0:
        raise InvalidGenerator(f"arm law {law!r} turns negative")
    for n in range(1, rf.stable_from()):
        if law.value_at(n) < 0:
            raise InvalidGenerator(f"arm law {law!r} is negative at n={n}")


def _require_positive_sum(pair: ArmPair) -> None:
    total = pair.left.as_ratfunc() + pair.right.as_ratfunc()
    if total.eventual_sign() <= 0:
        raise InvalidGenerator("window length vanishes eventually")
    for n in range(1, total.stable_from()):
        if pair.left.value_at(n) + pair.right.value_at(n) <= 0:
            raise InvalidGenerator(f"window length vanishes at n={n}")


def shrinking_indices(gen: WindowGenerator) -> IndexSet:
    """The index set where 0 < window length < 1/n.

    Window lengths are positive by construction, so only length*n < 1 is
    solved; per piece the solution is a finite correction of the piece or a
    finite set.
    """
    parts: list[IndexSet] = []
    for pair in gen.arms:
        total = pair.left.as_ratfunc() + pair.right.as_ratfunc()
        h = total.times_var() - RatFunc.const(1)
        eventually_in = h.eventual_sign() < 0
        start = h.stable_from()
        flips = [n for n in range(1, start)
                 if pair.piece.member(n) and (h.eval(n) < 0) != eventually_in]
        if eventually_in:
            piece: IndexSet = pair.piece
            if flips:
                piece = Difference(piece, FiniteSet(frozenset(flips)))
            parts.append(piece)
        elif flips:
            parts.append(FiniteSet(frozenset(flips)))
    if not parts:
        return FiniteSet(frozenset())
    out = parts[0]
    for p in parts[1:]:
        out = Union(out, p)
    return out


def is_admissible(gen: WindowGenerator, ideal: Ideal) -> bool:
    return ideal.in_filter(shrinking_indices(gen))


def _stable_cell_start(arm_rf: RatFunc, distances: list) -> int:
    """Index from which the window edge stays inside one structure cell."""
    start = 1
    for d in distances:
        start = max(start, (arm_rf - RatFunc.const(d)).stable_from())
    return start


def _edge_slope_bit(e: IntervalSet, anchor: Fraction, arm, start: int,
                    side: int) -> int:
    """Occupancy of the cell swept by a window edge beyond the start index.

    side is -1 for the left edge (position anchor - arm) and +1 for the
    right edge. Constant arms sweep nothing; their bit is unused.
    """
    a0 = arm.value_at(start)
    a1 = arm.value_at(start + 1)
    if a0 == a1:
        return 0
    mid = anchor + side * (a0 + a1) / 2
    return 1 if e.contains(mid) else 0


def ratio_sequence(gen: WindowGenerator, e: IntervalSet) -> PiecewiseSequence:
    """The exact occupancy sequence lambda(J_n & E) / lambda(J_n).

    Beyond a computed threshold each piece's ratio is a rational function of
    n (recognized back into the value-law grammar); earlier indices become
    explicit finite pieces evaluated through the measure directly.
    """
    p = gen.anchor
    dist_left = [p - c for c in endpoint_values(e) if c < p] + [Fraction(0)]
    dist_right = [c - p for c in endpoint_values(e) if c > p] + [Fraction(0)]

    pieces: list[Piece] = []
    for pair in gen.arms:
        u_rf = pair.left.as_ratfunc()
        v_rf = pair.right.as_ratfunc()
        start = max(_stable_cell_start(u_rf, dist_left),
                    _stable_cell_start(v_rf, dist_right))
        eps_l = _edge_slope_bit(e, p, pair.left, start, -1)
        eps_r = _edge_slope_bit(e, p, pair.right, start, +1)
        base = measure_in_window(e, _arm_window(p, pair, start))
        occupancy = (RatFunc.const(base)
                     + (u_rf - RatFunc.const(pair.left.value_at(start))).scale(eps_l)
                     + (v_rf - RatFunc.const(pair.right.value_at(start))).scale(eps_r))
        ratio = occupancy / (u_rf + v_rf)
        tail_law = law_from_ratfunc(ratio)

        prefix = [n for n in range(1, start) if pair.piece.member(n)]
        tail: IndexSet = pair.piece
        if prefix:
            tail = Difference(tail, FiniteSet(frozenset(prefix)))
        if not is_empty(tail):
            pieces.append(Piece(tail, tail_law, "n"))
        by_value: dict = {}
        for n in prefix:
            w = _arm_window(p, pair, n)
            value = measure_in_window(e, w) / w.length
            by_value.setdefault(value, []).append(n)
        for value, ns in sorted(by_value.items()):
            pieces.append(Piece(FiniteSet(frozenset(ns)), Constant(value), "n"))
    return PiecewiseSequence(tuple(pieces), check=False)


def density_along(gen: WindowGenerator, e: IntervalSet, ideal: Ideal):
    """(liminf, limsup) of the occupancy ratio along an admissible generator."""
    if not is_admissible(gen, ideal):
        raise InvalidGenerator(
            "generator windows do not shrink on a filter-large index set")
    seq = ratio_sequence(gen, e)
    return ideal_liminf(seq, ideal), ideal_limsup(seq, ideal)


class DensityOutcome(enum.Enum):
    ONE = "one"
    ZERO = "zero"
    NOT_EXIST = "not-exist"


@dataclass(frozen=True)
class DensityClassification:
    outcome: DensityOutcome
    lower: Fraction
    upper: Fraction
    witness_low: WindowGenerator | None = None
    witness_high: WindowGenerator | None = None


def _single_arm_witness(p: Fraction, side: int, reach: Fraction) -> WindowGenerator:
    """One-piece generator probing only one side of the anchor.

    The live arm is min(reach,1)/(n+1): strictly inside the structure cell
    from n = 1 on, and shorter than 1/n for every n, so the admissibility
    set is all of N for any ideal.
    """
    scale = min(reach, Fraction(1))
    arm = Reciprocal(scale, 1, 1)
    zero = Constant(0)
    left, right = (arm, zero) if side < 0 else (zero, arm)
    return WindowGenerator(p, (ArmPair(NATURALS, left, right),))


def classify_density(p, e: IntervalSet, ideal: Ideal) -> DensityClassification:
    """Exact density classification of e at p over all admissible generators."""
    p = Fraction(p)
    sig = local_signature(p, e)
    if sig.eps_left == 1 and sig.eps_right == 1:
        return DensityClassification(DensityOutcome.ONE, Fraction(1), Fraction(1))
    if sig.eps_left == 0 and sig.eps_right == 0:
        return DensityClassification(DensityOutcome.ZERO, Fraction(0), Fraction(0))
    full_side, empty_side = ((-1, 1) if sig.eps_left == 1 else (1, -1))
    full_reach = sig.dist_left if full_side < 0 else sig.dist_right
    empty_reach = sig.dist_left if empty_side < 0 else sig.dist_right
    return DensityClassification(
        DensityOutcome.NOT_EXIST, Fraction(0), Fraction(1),
        witness_low=_single_arm_witness(p, empty_side, empty_reach),
        witness_high=_single_arm_witness(p, full_side, full_reach),
    )


def is_density_point(p, e: IntervalSet, ideal: Ideal) -> bool:
    return classify_density(p, e, ideal).outcome is DensityOutcome.ONE


def is_dispersion_point(p, e: IntervalSet, ideal: Ideal) -> bool:
    return is_density_point(p, complement(e), ideal)


def classical_density(p, e: IntervalSet) -> Fraction:
    """Limit of the symmetric-window occupancy: (eps_left + eps_right)/2."""
    sig = local_signature(p, e)
    return Fraction(sig.eps_left + sig.eps_right, 2)


def density_one_points(e: IntervalSet, ideal: Ideal) -> IntervalSet:
    """All points where e has lower density one (an exact interval set).

    On this subclass the answer is the essential interior of e: endpoints
    and isolated missing points never matter, singleton components never
    help. The ideal parameter is part of the operation's signature but the
    subclass answer does not depend on it.
    """
    spans = essential_spans(e)
    if e.complemented:
        return IntervalSet(tuple(Iv(lo, True, hi, True) for lo, hi in spans), True)
    return IntervalSet(tuple(Iv(lo, False, hi, False) for lo, hi in spans))


# --------------------------------------------------------------------------
# Generator serialization (structured form used by the CLI)
# --------------------------------------------------------------------------

def generator_to_dict(gen: WindowGenerator) -> dict:
    return {
        "anchor": fmt_rational(gen.anchor),
        "pieces": [{"set": render_index_set(pair.piece),
                    "left": render_law(pair.left),
                    "right": render_law(pair.right)}
                   for pair in gen.arms],
    }


def generator_from_dict(d: dict) -> WindowGenerator:
    arms = []
    for row in d["pieces"]:
        piece = parse_index_set(row["set"])
        left, lvar = parse_law(row["left"])
        right, rvar = parse_law(row["right"])
        if lvar == "rank" or rvar == "rank":
            raise ParseError("arm laws are functions of the index n, not rank")
        arms.append(ArmPair(piece, left, right))
    return WindowGenerator(parse_rational(d["anchor"]), tuple(arms))
