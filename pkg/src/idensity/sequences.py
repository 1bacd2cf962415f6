"""Piecewise symbolic real sequences with exact ideal limsup/liminf.

A sequence is a finite list of pieces: disjoint index sets covering all of N,
each carrying a value law from a small closed grammar (constants, reciprocals
of affine maps with an optional shift, shifted power decays, affine maps).
Laws evaluate exactly, have exactly computable limits in the extended
rationals, and are eventually monotone with a known direction, which is what
makes the threshold sets {k : x_k > b} decidable against an ideal:

    limsup over the ideal = max limit over the pieces outside the ideal,
    liminf over the ideal = min limit over the pieces outside the ideal,

with the approach direction settling membership of the boundary value itself.
A law may be applied to the raw index n or to the rank of n inside its piece
(the position of n in the piece's increasing enumeration); rank laws are
restricted to atomic pieces where rank has a closed form.
"""

from __future__ import annotations

import enum
import re
from dataclasses import InitVar, dataclass
from fractions import Fraction

from .errors import GrammarOverflow, ParseError, PartitionViolation, InvariantBreach
from .ideals import Ideal
from .indexsets import (
    ArithmeticProgression,
    Complement,
    Difference,
    FiniteSet,
    IndexSet,
    Intersection,
    SparseAtom,
    Union,
    is_empty,
    normalize,
)
from .rationals import INF, NEG_INF, is_finite as ext_is_finite
from .ratfunc import RatFunc, poly


class Approach(enum.Enum):
    FROM_ABOVE = "from_above"
    FROM_BELOW = "from_below"
    EXACT = "exact"


def _sign_approach(coeff: Fraction) -> Approach:
    if coeff > 0:
        return Approach.FROM_ABOVE
    if coeff < 0:
        return Approach.FROM_BELOW
    return Approach.EXACT


@dataclass(frozen=True)
class Constant:
    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))

    def value_at(self, m: int) -> Fraction:
        return self.value

    def limit(self):
        return self.value

    def approach(self) -> Approach:
        return Approach.EXACT

    def as_ratfunc(self) -> RatFunc:
        return RatFunc.const(self.value)


@dataclass(frozen=True)
class Reciprocal:
    """coeff / (slope*m + offset); the denominator is positive for m >= 1."""

    coeff: Fraction
    slope: Fraction
    offset: Fraction

    def __post_init__(self):
        for name in ("coeff", "slope", "offset"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.slope < 0 or self.slope + self.offset <= 0:
            raise ValueError("denominator must stay positive from m = 1 on")

    def value_at(self, m: int) -> Fraction:
        return self.coeff / (self.slope * m + self.offset)

    def limit(self):
        if self.slope == 0:
            return self.coeff / self.offset
        return Fraction(0)

    def approach(self) -> Approach:
        if self.slope == 0:
            return Approach.EXACT
        return _sign_approach(self.coeff)

    def as_ratfunc(self) -> RatFunc:
        return RatFunc.make(poly(self.coeff), poly(self.offset, self.slope))


@dataclass(frozen=True)
class ShiftedReciprocal:
    """shift + coeff / (slope*m + offset)."""

    shift: Fraction
    coeff: Fraction
    slope: Fraction
    offset: Fraction

    def __post_init__(self):
        for name in ("shift", "coeff", "slope", "offset"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.slope < 0 or self.slope + self.offset <= 0:
            raise ValueError("denominator must stay positive from m = 1 on")

    def value_at(self, m: int) -> Fraction:
        return self.shift + self.coeff / (self.slope * m + self.offset)

    def limit(self):
        if self.slope == 0:
            return self.shift + self.coeff / self.offset
        return self.shift

    def approach(self) -> Approach:
        if self.slope == 0:
            return Approach.EXACT
        return _sign_approach(self.coeff)

    def as_ratfunc(self) -> RatFunc:
        return RatFunc.make(
            poly(self.shift * self.offset + self.coeff, self.shift * self.slope),
            poly(self.offset, self.slope))


@dataclass(frozen=True)
class PowerDecay:
    """shift + coeff / m**exponent."""

    coeff: Fraction
    exponent: int
    shift: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        object.__setattr__(self, "shift", Fraction(self.shift))
        if self.exponent < 1:
            raise ValueError("exponent must be >= 1")

    def value_at(self, m: int) -> Fraction:
        return self.shift + self.coeff / Fraction(m**self.exponent)

    def limit(self):
        return self.shift

    def approach(self) -> Approach:
        return _sign_approach(self.coeff)

    def as_ratfunc(self) -> RatFunc:
        den = [Fraction(0)] * self.exponent + [Fraction(1)]
        num = [self.coeff] + [Fraction(0)] * (self.exponent - 1) + [self.shift]
        return RatFunc.make(poly(*num), poly(*den))


@dataclass(frozen=True)
class Linear:
    slope: Fraction
    intercept: Fraction

    def __post_init__(self):
        object.__setattr__(self, "slope", Fraction(self.slope))
        object.__setattr__(self, "intercept", Fraction(self.intercept))

    def value_at(self, m: int) -> Fraction:
        return self.slope * m + self.intercept

    def limit(self):
        if self.slope > 0:
            return INF
        if self.slope < 0:
            return NEG_INF
        return self.intercept

    def approach(self) -> Approach:
        if self.slope > 0:
            return Approach.FROM_BELOW
        if self.slope < 0:
            return Approach.FROM_ABOVE
        return Approach.EXACT

    def as_ratfunc(self) -> RatFunc:
        return RatFunc.make(poly(self.intercept, self.slope), poly(1))


ValueLaw = (Constant, Reciprocal, ShiftedReciprocal, PowerDecay, Linear)


def _primitive_form(num, den):
    """Rescale so the denominator has coprime integer coefficients."""
    import math

    scale = 1
    for c in den:
        scale = scale * c.denominator // math.gcd(scale, c.denominator)
    ints = [c * scale for c in den]
    g = 0
    for c in ints:
        g = math.gcd(g, abs(c.numerator))
    factor = Fraction(scale, g if g else 1)
    from .ratfunc import p_scale

    return p_scale(num, factor), p_scale(den, factor)


def law_from_ratfunc(rf: RatFunc):
    """Recognize a rational function as a grammar law, or fail loudly."""
    from .ratfunc import p_degree, p_divmod

    if rf.is_zero():
        return Constant(0)
    num, den = _primitive_form(rf.num, rf.den)
    nd, dd = p_degree(num), p_degree(den)
    if dd == 0:
        c = den[0]
        if nd == 0:
            return Constant(num[0] / c)
        if nd == 1:
            return Linear(num[1] / c, num[0] / c)
        raise GrammarOverflow("polynomial of degree >= 2 is outside the law grammar")
    if dd == 1:
        offset, slope = den[0], den[1]
        if slope + offset <= 0:
            raise GrammarOverflow("denominator is not positive from m = 1 on")
        if nd == 0:
            return Reciprocal(num[0], slope, offset)
        if nd == 1:
            q, r = p_divmod(num, den)
            shift = q[0] if q else Fraction(0)
            rem = r[0] if r else Fraction(0)
            if rem == 0:
                return Constant(shift)
            if shift == 0:
                return Reciprocal(rem, slope, offset)
            return ShiftedReciprocal(shift, rem, slope, offset)
        raise GrammarOverflow("numerator degree too high for an affine denominator")
    if any(c != 0 for c in den[:-1]):
        raise GrammarOverflow("non-monomial denominator of degree >= 2")
    lead = den[-1]
    if nd == 0:
        return PowerDecay(num[0] / lead, dd)
    if nd == dd:
        q, r = p_divmod(num, den)
        if p_degree(r) <= 0:
            shift = q[0] if q else Fraction(0)
            rem = (r[0] if r else Fraction(0)) / lead
            if rem == 0:
                return Constant(shift)
            return PowerDecay(rem, dd, shift)
    raise GrammarOverflow("numerator shape incompatible with a power-decay law")


def negate_law(law):
    if isinstance(law, Constant):
        return Constant(-law.value)
    if isinstance(law, Reciprocal):
        return Reciprocal(-law.coeff, law.slope, law.offset)
    if isinstance(law, ShiftedReciprocal):
        return ShiftedReciprocal(-law.shift, -law.coeff, law.slope, law.offset)
    if isinstance(law, PowerDecay):
        return PowerDecay(-law.coeff, law.exponent, -law.shift)
    return Linear(-law.slope, -law.intercept)


def shift_law(law, c: Fraction):
    c = Fraction(c)
    if isinstance(law, Constant):
        return Constant(law.value + c)
    if isinstance(law, Reciprocal):
        if c == 0:
            return law
        return ShiftedReciprocal(c, law.coeff, law.slope, law.offset)
    if isinstance(law, ShiftedReciprocal):
        return ShiftedReciprocal(law.shift + c, law.coeff, law.slope, law.offset)
    if isinstance(law, PowerDecay):
        return PowerDecay(law.coeff, law.exponent, law.shift + c)
    return Linear(law.slope, law.intercept + c)


def add_laws(a, b):
    """Pointwise sum, staying inside the grammar or raising GrammarOverflow."""
    return law_from_ratfunc(a.as_ratfunc() + b.as_ratfunc())


# --------------------------------------------------------------------------
# Pieces and sequences
# --------------------------------------------------------------------------

_RANK_ATOMS = (FiniteSet, ArithmeticProgression, SparseAtom)


def rank_in_atom(atom, n: int) -> int:
    if isinstance(atom, SparseAtom):
        return atom.rank(n)
    if isinstance(atom, ArithmeticProgression):
        return (n - atom.least) // atom.step + 1
    return atom.sorted_elements().index(n) + 1


def atom_element_at(atom, rank: int) -> int:
    if isinstance(atom, SparseAtom):
        return atom.element_at(rank)
    if isinstance(atom, ArithmeticProgression):
        return atom.least + (rank - 1) * atom.step
    elems = atom.sorted_elements()
    if rank > len(elems):
        raise ValueError("rank beyond the finite piece")
    return elems[rank - 1]


@dataclass(frozen=True)
class Piece:
    members: IndexSet
    law: object
    variable: str = "n"

    def __post_init__(self):
        if self.variable not in ("n", "rank"):
            raise ValueError("variable must be 'n' or 'rank'")
        if self.variable == "rank" and not isinstance(self.members, _RANK_ATOMS):
            raise ValueError("rank laws need an atomic piece with a closed-form rank")

    def value_at(self, n: int) -> Fraction:
        m = n if self.variable == "n" else rank_in_atom(self.members, n)
        return self.law.value_at(m)


@dataclass(frozen=True)
class PieceLimitReport:
    limit: object  # Fraction or +-inf
    approach: Approach
    in_ideal: bool


@dataclass(frozen=True)
class PiecewiseSequence:
    pieces: tuple
    check: InitVar[bool] = True

    def __post_init__(self, check):
        object.__setattr__(self, "pieces", tuple(self.pieces))
        if check:
            self._validate()

    def _validate(self):
        if not self.pieces:
            raise PartitionViolation("a sequence needs at least one piece")
        covered: IndexSet = self.pieces[0].members
        for p in self.pieces[1:]:
            covered = Union(covered, p.members)
        if not is_empty(Complement(covered)):
            raise PartitionViolation("pieces do not cover the naturals")
        for i, a in enumerate(self.pieces):
            for b in self.pieces[i + 1:]:
                if not is_empty(Intersection(a.members, b.members)):
                    raise PartitionViolation("pieces overlap")


def evaluate(seq: PiecewiseSequence, n: int) -> Fraction:
    hits = [p for p in seq.pieces if p.members.member(n)]
    if len(hits) != 1:
        raise PartitionViolation(
            f"{len(hits)} pieces contain index {n}; expected exactly one")
    return hits[0].value_at(n)


def piece_limits(seq: PiecewiseSequence, ideal: Ideal) -> list:
    return [PieceLimitReport(p.law.limit(), p.law.approach(),
                             ideal.contains(p.members))
            for p in seq.pieces]


def _surviving_limits(seq: PiecewiseSequence, ideal: Ideal) -> list:
    limits = [r.limit for r in piece_limits(seq, ideal) if not r.in_ideal]
    if not limits:
        raise InvariantBreach(
            "every piece landed in the ideal, but the pieces partition N "
            "and the ideal is nontrivial")
    return limits


def ideal_limsup(seq: PiecewiseSequence, ideal: Ideal):
    """sup of the thresholds exceeded on an index set outside the ideal."""
    return max(_surviving_limits(seq, ideal))


def ideal_liminf(seq: PiecewiseSequence, ideal: Ideal):
    return min(_surviving_limits(seq, ideal))


def exceeds_on_nonsmall_set(seq: PiecewiseSequence, ideal: Ideal, bound) -> bool:
    """Is {k : x_k > bound} outside the ideal?"""
    for r in piece_limits(seq, ideal):
        if r.in_ideal:
            continue
        if r.limit > bound or (r.limit == bound
                               and r.approach is Approach.FROM_ABOVE):
            return True
    return False


def undercuts_on_nonsmall_set(seq: PiecewiseSequence, ideal: Ideal, bound) -> bool:
    """Is {k : x_k < bound} outside the ideal?"""
    for r in piece_limits(seq, ideal):
        if r.in_ideal:
            continue
        if r.limit < bound or (r.limit == bound
                               and r.approach is Approach.FROM_BELOW):
            return True
    return False


def ideal_convergent_limit(seq: PiecewiseSequence, ideal: Ideal):
    """The ideal limit when limsup and liminf agree on a finite value."""
    hi = ideal_limsup(seq, ideal)
    lo = ideal_liminf(seq, ideal)
    if hi == lo and ext_is_finite(hi):
        return hi
    return None


def is_ideal_bounded(seq: PiecewiseSequence, ideal: Ideal) -> bool:
    return all(r.in_ideal or ext_is_finite(r.limit)
               for r in piece_limits(seq, ideal))


def deviation_indices(seq: PiecewiseSequence, center, eps) -> IndexSet:
    """The index set {k : |x_k - center| >= eps}, built exactly.

    Solved per piece from the law's rational-function form: beyond a
    computable index the comparison has a fixed truth value, and the finite
    prefix is enumerated explicitly.
    """
    center, eps = Fraction(center), Fraction(eps)
    parts: list[IndexSet] = []
    for piece in seq.pieces:
        rf = piece.law.as_ratfunc() - RatFunc.const(center)
        above = rf - RatFunc.const(eps)    # >= 0 iff x - center >= eps
        below = rf + RatFunc.const(eps)    # <= 0 iff x - center <= -eps

        def holds(m: int) -> bool:
            return above.eval(m) >= 0 or below.eval(m) <= 0

        eventually = above.eventual_sign() >= 0 or below.eventual_sign() <= 0
        start = max(above.stable_from(), below.stable_from())
        if piece.variable == "n":
            flipped = [n for n in range(1, start)
                       if piece.members.member(n) and holds(n) != eventually]
        else:
            flipped = [atom_element_at(piece.members, r)
                       for r in range(1, start) if holds(r) != eventually]
            if isinstance(piece.members, FiniteSet):
                flipped = [x for x in flipped if piece.members.member(x)]
        if eventually:
            contribution: IndexSet = piece.members
            if flipped:
                contribution = Difference(contribution, FiniteSet(frozenset(flipped)))
            parts.append(contribution)
        elif flipped:
            parts.append(FiniteSet(frozenset(flipped)))
    if not parts:
        return FiniteSet(frozenset())
    out = parts[0]
    for p in parts[1:]:
        out = Union(out, p)
    return out


def sum_sequences(a: PiecewiseSequence, b: PiecewiseSequence) -> PiecewiseSequence:
    """Pointwise sum on the common refinement; partial by design."""
    pieces = []
    for pa in a.pieces:
        for pb in b.pieces:
            inter = Intersection(pa.members, pb.members)
            if is_empty(inter):
                continue
            if pa.variable != pb.variable:
                raise GrammarOverflow("cannot mix rank and index laws in a sum")
            if pa.variable == "rank":
                if pa.members != pb.members:
                    raise GrammarOverflow(
                        "rank laws only combine on identical atomic pieces")
                members: IndexSet = pa.members
            else:
                members = inter
            pieces.append(Piece(members, add_laws(pa.law, pb.law), pa.variable))
    return PiecewiseSequence(tuple(pieces), check=False)


def negate_sequence(a: PiecewiseSequence) -> PiecewiseSequence:
    return PiecewiseSequence(
        tuple(Piece(p.members, negate_law(p.law), p.variable) for p in a.pieces),
        check=False)


def shift_sequence(a: PiecewiseSequence, c) -> PiecewiseSequence:
    return PiecewiseSequence(
        tuple(Piece(p.members, shift_law(p.law, c), p.variable) for p in a.pieces),
        check=False)


# --------------------------------------------------------------------------
# Law text grammar:
#   const 1 | 3/4 | 1/(2*n+1) | 2+1/(2*n+1) | 1/rank^2 | 1+1/n^2 | 2*n+3
# --------------------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(const|rank|n|\d+(?:/\d+)?|[-+*/()^])")


def _tokenize_law(text: str) -> list:
    toks, pos = [], 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ParseError(f"bad law token in {text!r}", pos)
            break
        toks.append(m.group(1))
        pos = m.end()
    return toks


class _LawParser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize_law(text)
        self.i = 0

    def error(self, msg: str) -> ParseError:
        return ParseError(f"{msg} in law {self.text!r}")

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def rational(self) -> Fraction:
        sign = 1
        while self.peek() in ("-", "+"):
            if self.take() == "-":
                sign = -sign
        tok = self.take()
        if tok is None or not tok[0].isdigit():
            raise self.error("expected a rational")
        return sign * Fraction(tok)

    def variable(self) -> str:
        tok = self.take()
        if tok not in ("n", "rank"):
            raise self.error("expected the variable n or rank")
        return tok

    def denominator(self):
        """Parse what follows '/': an affine form or a variable power."""
        if self.peek() == "(":
            self.take()
            a = self.rational()
            if self.take() != "*":
                raise self.error("expected '*'")
            var = self.variable()
            op = self.take()
            if op not in ("+", "-"):
                raise self.error("expected '+' or '-'")
            b = self.rational() * (1 if op == "+" else -1)
            if self.take() != ")":
                raise self.error("expected ')'")
            return ("affine", a, b, var)
        var = self.variable()
        k = 1
        if self.peek() == "^":
            self.take()
            k = int(self.rational())
        return ("power", k, var)

    def parse(self):
        if self.peek() == "const":
            self.take()
            value = self.rational()
            if self.peek() is not None:
                raise self.error("trailing input")
            return Constant(value), "n"
        first = self.rational()
        tok = self.peek()
        if tok is None:
            return Constant(first), "n"
        if tok == "*":
            self.take()
            var = self.variable()
            b = Fraction(0)
            if self.peek() in ("+", "-"):
                op = self.take()
                b = self.rational() * (1 if op == "+" else -1)
            if self.peek() is not None:
                raise self.error("trailing input")
            return Linear(first, b), var
        shift = None
        coeff = first
        if tok in ("+", "-"):
            op = self.take()
            shift = first
            coeff = self.rational() * (1 if op == "+" else -1)
        if self.take() != "/":
            raise self.error("expected '/'")
        den = self.denominator()
        if self.peek() is not None:
            raise self.error("trailing input")
        if den[0] == "affine":
            _, a, b, var = den
            if shift is None:
                return Reciprocal(coeff, a, b), var
            return ShiftedReciprocal(shift, coeff, a, b), var
        _, k, var = den
        if k == 1:
            if shift is None or shift == 0:
                return Reciprocal(coeff, 1, 0), var
            return ShiftedReciprocal(shift, coeff, 1, 0), var
        return PowerDecay(coeff, k, shift if shift is not None else 0), var


def parse_law(text: str):
    """Parse a law string; returns (law, variable)."""
    return _LawParser(text).parse()


def _fmt_num(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _signed(x: Fraction) -> str:
    return f"+{_fmt_num(x)}" if x >= 0 else _fmt_num(x)


def render_law(law, variable: str = "n") -> str:
    if isinstance(law, Constant):
        return f"const {_fmt_num(law.value)}"
    if isinstance(law, Reciprocal):
        if law.slope == 1 and law.offset == 0:
            return f"{_fmt_num(law.coeff)}/{variable}"
        return (f"{_fmt_num(law.coeff)}/({_fmt_num(law.slope)}*{variable}"
                f"{_signed(law.offset)})")
    if isinstance(law, ShiftedReciprocal):
        if law.slope == 1 and law.offset == 0:
            return f"{_fmt_num(law.shift)}{_signed(law.coeff)}/{variable}"
        return (f"{_fmt_num(law.shift)}{_signed(law.coeff)}/"
                f"({_fmt_num(law.slope)}*{variable}{_signed(law.offset)})")
    if isinstance(law, PowerDecay):
        tail = f"{_fmt_num(law.coeff)}/{variable}^{law.exponent}"
        if law.shift == 0:
            return tail
        return f"{_fmt_num(law.shift)}{_signed(law.coeff)}/{variable}^{law.exponent}"
    if isinstance(law, Linear):
        return f"{_fmt_num(law.slope)}*{variable}{_signed(law.intercept)}"
    raise TypeError(f"cannot render {law!r}")
