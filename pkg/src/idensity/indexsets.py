"""Symbolic subsets of the positive naturals with exact density arithmetic.

Sets are expression trees over three atom families -- explicit finite sets,
arithmetic progressions, and sparse atoms (perfect squares, perfect cubes,
powers of a fixed base) -- closed under union, intersection, difference and
complement relative to N = {1, 2, 3, ...}.

Every tree normalizes to a union of *terms*. A term is an eventually
periodic core (modulus q, residue set R) either intersected with at most one
sparse atom or punched by finitely many sparse atoms, plus bounded add/remove
corrections. On that form membership, finiteness, emptiness and the natural
density are all decided exactly:

* a surviving core with a positive sparse atom is always infinite (terms
  whose core/sparse residue analysis comes out finite are folded into
  explicit corrections during construction);
* punched sparse atoms have density zero, so they never affect the density
  or the infiniteness of a nonempty periodic core;
* the density of a union of terms is |R*|/Q over the joint modulus Q.

Intersecting two *distinct* sparse atoms (directly, or a positive one with a
punched one of another kind) is rejected with UnsupportedSparseIntersection:
deciding how two sparse families interleave is exactly what this rewriting
strategy does not attempt.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    NormalizationOverflow,
    ParseError,
    UnsupportedSparseIntersection,
)

ENUMERATION_CAP = 10**6
MODULUS_CAP = 10**6
TERM_CAP = 4096


class IndexSet:
    """Base class for symbolic subsets of {1, 2, 3, ...}."""

    def member(self, n: int) -> bool:
        raise NotImplementedError

    def __or__(self, other: "IndexSet") -> "IndexSet":
        return Union(self, other)

    def __and__(self, other: "IndexSet") -> "IndexSet":
        return Intersection(self, other)

    def __sub__(self, other: "IndexSet") -> "IndexSet":
        return Difference(self, other)

    def __invert__(self) -> "IndexSet":
        return Complement(self)


def _check_natural(n: int) -> None:
    if n < 1:
        raise ValueError(f"naturals start at 1, got {n}")


@dataclass(frozen=True)
class FiniteSet(IndexSet):
    elements: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "elements", frozenset(int(x) for x in self.elements))
        for x in self.elements:
            if x < 1:
                raise ValueError(f"finite sets hold naturals >= 1, got {x}")
        if len(self.elements) > ENUMERATION_CAP:
            raise NormalizationOverflow("finite set larger than the enumeration cap")

    def member(self, n: int) -> bool:
        _check_natural(n)
        return n in self.elements

    def sorted_elements(self) -> list:
        return sorted(self.elements)


def fin(*elements) -> FiniteSet:
    return FiniteSet(frozenset(elements))


@dataclass(frozen=True)
class ArithmeticProgression(IndexSet):
    """{first, first+step, first+2*step, ...} intersected with n >= 1."""

    first: int
    step: int

    def __post_init__(self):
        if self.step < 1:
            raise ValueError("step must be a positive natural")
        if self.first < 0:
            raise ValueError("first must be >= 0")

    def member(self, n: int) -> bool:
        _check_natural(n)
        return n >= max(self.first, 1) and (n - self.first) % self.step == 0

    @property
    def least(self) -> int:
        """Smallest member (the progression never denotes the empty set)."""
        if self.first >= 1:
            return self.first
        return self.step  # first == 0: members are step, 2*step, ...


NATURALS = ArithmeticProgression(1, 1)
EMPTY = FiniteSet(frozenset())


class SparseKind(enum.Enum):
    SQUARES = "squares"
    CUBES = "cubes"
    POWERS = "powers"


@dataclass(frozen=True)
class SparseAtom(IndexSet):
    """Perfect squares {1,4,9,...}, cubes {1,8,27,...}, or {1, b, b^2, ...}."""

    kind: SparseKind
    base: int = 0

    def __post_init__(self):
        if self.kind is SparseKind.POWERS:
            if self.base < 2:
                raise ValueError("power atoms need base >= 2")
        elif self.base != 0:
            raise ValueError("base only applies to power atoms")

    def member(self, n: int) -> bool:
        _check_natural(n)
        if self.kind is SparseKind.SQUARES:
            r = math.isqrt(n)
            return r * r == n
        if self.kind is SparseKind.CUBES:
            r = round(n ** (1 / 3))
            return any((r + d) ** 3 == n for d in (-1, 0, 1))
        m = n
        while m % self.base == 0:
            m //= self.base
        return m == 1

    def rank(self, n: int) -> int:
        """1-based position of member n within the atom."""
        if self.kind is SparseKind.SQUARES:
            return math.isqrt(n)
        if self.kind is SparseKind.CUBES:
            return round(n ** (1 / 3))
        r = 1
        m = n
        while m > 1:
            m //= self.base
            r += 1
        return r

    def element_at(self, rank: int) -> int:
        if self.kind is SparseKind.SQUARES:
            return rank * rank
        if self.kind is SparseKind.CUBES:
            return rank**3
        return self.base ** (rank - 1)


SQUARES = SparseAtom(SparseKind.SQUARES)
CUBES = SparseAtom(SparseKind.CUBES)


def powers_of(base: int) -> SparseAtom:
    return SparseAtom(SparseKind.POWERS, base)


@dataclass(frozen=True)
class Union(IndexSet):
    left: IndexSet
    right: IndexSet

    def member(self, n: int) -> bool:
        return self.left.member(n) or self.right.member(n)


@dataclass(frozen=True)
class Intersection(IndexSet):
    left: IndexSet
    right: IndexSet

    def member(self, n: int) -> bool:
        return self.left.member(n) and self.right.member(n)


@dataclass(frozen=True)
class Difference(IndexSet):
    left: IndexSet
    right: IndexSet

    def member(self, n: int) -> bool:
        return self.left.member(n) and not self.right.member(n)


@dataclass(frozen=True)
class Complement(IndexSet):
    inner: IndexSet

    def member(self, n: int) -> bool:
        _check_natural(n)
        return not self.inner.member(n)


def member(s: IndexSet, n: int) -> bool:
    return s.member(n)


# --------------------------------------------------------------------------
# Sparse residue analysis
# --------------------------------------------------------------------------


def _square_residues(q: int) -> frozenset:
    return frozenset((k * k) % q for k in range(q))


def _cube_residues(q: int) -> frozenset:
    return frozenset((k * k * k) % q for k in range(q))


def _power_orbit(base: int, q: int) -> tuple[list, int]:
    """Residues of base^k mod q for k = 0, 1, ... and the cycle start index."""
    seen: dict = {}
    orbit: list = []
    r = 1 % q
    while r not in seen:
        seen[r] = len(orbit)
        orbit.append(r)
        r = (r * base) % q
    return orbit, seen[r]


def _sparse_hits_cycle(atom: SparseAtom, q: int, residues: frozenset) -> bool:
    """Does the atom hit the residue classes infinitely often mod q?"""
    if atom.kind is SparseKind.SQUARES:
        return bool(_square_residues(q) & residues)
    if atom.kind is SparseKind.CUBES:
        return bool(_cube_residues(q) & residues)
    orbit, start = _power_orbit(atom.base, q)
    return any(r in residues for r in orbit[start:])


def _sparse_finite_members(atom: SparseAtom, q: int, residues: frozenset) -> frozenset:
    """All members of atom hitting the residues, when there are finitely many.

    Squares/cubes hit a residue class either infinitely often or never, so
    the finite case is empty. Power atoms can hit only during the pre-period
    of base^k mod q; those members are enumerated explicitly.
    """
    if atom.kind in (SparseKind.SQUARES, SparseKind.CUBES):
        return frozenset()
    orbit, start = _power_orbit(atom.base, q)
    out = []
    for k in range(start):
        if orbit[k] in residues:
            out.append(atom.base**k)
    return frozenset(x for x in out if x >= 1)


# --------------------------------------------------------------------------
# Normal form
# --------------------------------------------------------------------------


def _reduce_period(modulus: int, residues: frozenset) -> tuple[int, frozenset]:
    """Smallest divisor of the modulus under which the residues are invariant."""
    for d in range(1, modulus + 1):
        if modulus % d:
            continue
        folded = frozenset(r % d for r in residues)
        if len(folded) * (modulus // d) == len(residues):
            lifted = frozenset((r + j * d) % modulus
                               for r in folded for j in range(modulus // d))
            if lifted == residues:
                return d, folded
    return modulus, residues


@dataclass(frozen=True)
class Term:
    """One normal-form term: ((core [&atom | \\punched]) \\ removed) | added."""

    modulus: int
    residues: frozenset
    positive: SparseAtom | None = None
    punched: frozenset = frozenset()
    added: frozenset = frozenset()
    removed: frozenset = frozenset()

    def symbolic_member(self, n: int) -> bool:
        """Membership in the term ignoring add/remove corrections."""
        if n < 1 or n % self.modulus not in self.residues:
            return False
        if self.positive is not None and not self.positive.member(n):
            return False
        return all(not p.member(n) for p in self.punched)

    def member(self, n: int) -> bool:
        if n in self.added:
            return True
        if n in self.removed:
            return False
        return self.symbolic_member(n)

    @property
    def is_pure_finite(self) -> bool:
        return not self.residues

    def density(self) -> Fraction:
        if self.is_pure_finite or self.positive is not None:
            return Fraction(0)
        return Fraction(len(self.residues), self.modulus)

    def sort_key(self):
        pos = ("", 0) if self.positive is None else (self.positive.kind.value,
                                                     self.positive.base)
        pun = tuple(sorted((p.kind.value, p.base) for p in self.punched))
        return (self.modulus, tuple(sorted(self.residues)), pos, pun,
                tuple(sorted(self.added)), tuple(sorted(self.removed)))


def _make_term(modulus: int,
               residues: frozenset,
               positive: SparseAtom | None = None,
               punched: frozenset = frozenset(),
               added: frozenset = frozenset(),
               removed: frozenset = frozenset()) -> Term | None:
    """Build a simplified term; None when it denotes the empty set."""
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    if modulus > MODULUS_CAP:
        raise NormalizationOverflow(f"modulus {modulus} exceeds cap {MODULUS_CAP}")
    residues = frozenset(r % modulus for r in residues)

    if positive is not None:
        same = {p for p in punched if p == positive}
        if same:
            # (C & S) \ S is empty; only explicit additions survive.
            residues, positive, punched = frozenset(), None, frozenset()
        elif punched:
            raise UnsupportedSparseIntersection(
                "a term cannot both require one sparse atom and exclude another")

    if positive is not None and residues:
        if not _sparse_hits_cycle(positive, modulus, residues):
            # Finitely many members; fold them into explicit corrections.
            members = _sparse_finite_members(positive, modulus, residues)
            added = added | (members - removed)
            residues, positive = frozenset(), None

    if not residues:
        positive, punched, removed = None, frozenset(), frozenset()
        if not added:
            return None
        return Term(1, frozenset(), None, frozenset(), frozenset(added), frozenset())

    modulus, residues = _reduce_period(modulus, residues)
    probe = Term(modulus, residues, positive, punched)
    added = frozenset(x for x in added if not probe.symbolic_member(x))
    removed = frozenset(x for x in removed if probe.symbolic_member(x))
    return Term(modulus, residues, positive, frozenset(punched), added, removed)


_FULL_TERM = Term(1, frozenset({0}))


@dataclass(frozen=True)
class NormalForm(IndexSet):
    """Canonical union of terms; itself usable wherever an IndexSet is."""

    terms: tuple = ()

    def member(self, n: int) -> bool:
        _check_natural(n)
        return any(t.member(n) for t in self.terms)

    def is_empty(self) -> bool:
        return not self.terms

    def is_finite(self) -> bool:
        return all(t.is_pure_finite for t in self.terms)

    def finite_members(self) -> list:
        if not self.is_finite():
            raise ValueError("set is infinite")
        out: set = set()
        for t in self.terms:
            out |= t.added
        return sorted(out)

    def density(self) -> Fraction:
        periodic = [t for t in self.terms
                    if t.residues and t.positive is None]
        if not periodic:
            return Fraction(0)
        q = 1
        for t in periodic:
            q = q * t.modulus // math.gcd(q, t.modulus)
            if q > MODULUS_CAP:
                raise NormalizationOverflow(
                    f"joint modulus exceeds cap {MODULUS_CAP}")
        hit = [False] * q
        for t in periodic:
            for r in range(q):
                if r % t.modulus in t.residues:
                    hit[r] = True
        return Fraction(sum(hit), q)

    def to_index_set(self) -> IndexSet:
        """Rebuild an equivalent plain expression tree."""
        parts: list[IndexSet] = []
        for t in self.terms:
            if t.is_pure_finite:
                parts.append(FiniteSet(t.added))
                continue
            cores = []
            for r in sorted(t.residues):
                first = r if r >= 1 else t.modulus
                cores.append(ArithmeticProgression(first, t.modulus))
            expr: IndexSet = cores[0]
            for c in cores[1:]:
                expr = Union(expr, c)
            if t.positive is not None:
                expr = Intersection(expr, t.positive)
            for p in sorted(t.punched, key=lambda a: (a.kind.value, a.base)):
                expr = Difference(expr, p)
            if t.removed:
                expr = Difference(expr, FiniteSet(t.removed))
            if t.added:
                expr = Union(expr, FiniteSet(t.added))
            parts.append(expr)
        if not parts:
            return EMPTY
        expr = parts[0]
        for p in parts[1:]:
            expr = Union(expr, p)
        return expr


def _merge_terms(terms: list) -> NormalForm:
    terms = [t for t in terms if t is not None]
    finite: set = set()
    infinite: list[Term] = []
    for t in terms:
        if t.is_pure_finite:
            finite |= t.added
        else:
            infinite.append(t)

    # Join cores that share sparse structure and corrections.
    buckets: dict = {}
    for t in infinite:
        key = (t.positive, t.punched, t.added, t.removed)
        buckets.setdefault(key, []).append(t)
    merged: list[Term] = []
    for (positive, punched, added, removed), group in buckets.items():
        q = 1
        for t in group:
            q = q * t.modulus // math.gcd(q, t.modulus)
            if q > MODULUS_CAP:
                raise NormalizationOverflow(
                    f"joint modulus exceeds cap {MODULUS_CAP}")
        residues = frozenset(r for r in range(q)
                             if any(r % t.modulus in t.residues for t in group))
        made = _make_term(q, residues, positive, punched, added, removed)
        if made is not None:
            merged.append(made)

    # Stray finite elements already covered by an infinite term are dropped.
    finite = {x for x in finite if not any(t.member(x) for t in merged)}
    if finite:
        merged.append(Term(1, frozenset(), None, frozenset(),
                           frozenset(finite), frozenset()))
    if len(merged) > TERM_CAP:
        raise NormalizationOverflow(f"term count exceeds cap {TERM_CAP}")
    merged.sort(key=Term.sort_key)
    return NormalForm(tuple(merged))


def _term_complement(t: Term) -> list:
    """Terms whose union is the complement of t (before global merging)."""
    out: list[Term] = []
    anti = frozenset(range(t.modulus)) - t.residues
    out.append(_make_term(t.modulus, anti))
    if t.positive is not None:
        out.append(_make_term(t.modulus, t.residues, None,
                              frozenset({t.positive})))
    for p in t.punched:
        out.append(_make_term(t.modulus, t.residues, p))
    # (N \ X) gains the removed corrections and loses the added ones.
    out = [x for x in out if x is not None]
    if t.removed:
        out.append(Term(1, frozenset(), None, frozenset(),
                        frozenset(t.removed), frozenset()))
    if t.added:
        out = [_make_term(x.modulus, x.residues, x.positive, x.punched,
                          x.added - t.added, x.removed | t.added)
               for x in out]
    return [x for x in out if x is not None]


def _term_intersect(a: Term, b: Term) -> list:
    q = a.modulus * b.modulus // math.gcd(a.modulus, b.modulus)
    if q > MODULUS_CAP:
        raise NormalizationOverflow(f"joint modulus exceeds cap {MODULUS_CAP}")
    residues = frozenset(r for r in range(q)
                         if r % a.modulus in a.residues
                         and r % b.modulus in b.residues)
    if a.positive is not None and b.positive is not None:
        if a.positive != b.positive:
            raise UnsupportedSparseIntersection(
                f"cannot intersect {a.positive.kind.value} with "
                f"{b.positive.kind.value}")
        positive = a.positive
    else:
        positive = a.positive or b.positive
    punched = a.punched | b.punched
    out = []
    main = _make_term(q, residues, positive, punched,
                      frozenset(), a.removed | b.removed)
    if main is not None:
        out.append(main)
    spill = {x for x in a.added if b.member(x)} | {x for x in b.added if a.member(x)}
    if spill:
        out.append(Term(1, frozenset(), None, frozenset(),
                        frozenset(spill), frozenset()))
    return out


def _nf_union(a: NormalForm, b: NormalForm) -> NormalForm:
    return _merge_terms(list(a.terms) + list(b.terms))


def _nf_intersect(a: NormalForm, b: NormalForm) -> NormalForm:
    terms: list[Term] = []
    for ta in a.terms:
        for tb in b.terms:
            terms.extend(_term_intersect(ta, tb))
    return _merge_terms(terms)


def _nf_complement(a: NormalForm) -> NormalForm:
    result = NormalForm((_FULL_TERM,))
    for t in a.terms:
        result = _nf_intersect(result, _merge_terms(_term_complement(t)))
    return result


def _atom_normal_form(s: IndexSet) -> NormalForm:
    if isinstance(s, FiniteSet):
        if not s.elements:
            return NormalForm(())
        return _merge_terms([Term(1, frozenset(), None, frozenset(),
                                  s.elements, frozenset())])
    if isinstance(s, ArithmeticProgression):
        r = s.first % s.step
        low = r if r >= 1 else s.step
        trimmed = range(low, s.least, s.step)
        if len(trimmed) > ENUMERATION_CAP:
            raise NormalizationOverflow(
                "arithmetic progression prefix exceeds the enumeration cap")
        return _merge_terms([_make_term(s.step, frozenset({r}),
                                        removed=frozenset(trimmed))])
    if isinstance(s, SparseAtom):
        return _merge_terms([_make_term(1, frozenset({0}), positive=s)])
    raise TypeError(f"not an atom: {s!r}")


def normalize(s: IndexSet) -> NormalForm:
    """Rewrite to the canonical union-of-terms form; idempotent."""
    if isinstance(s, NormalForm):
        return s
    if isinstance(s, Union):
        return _nf_union(normalize(s.left), normalize(s.right))
    if isinstance(s, Intersection):
        return _nf_intersect(normalize(s.left), normalize(s.right))
    if isinstance(s, Difference):
        return _nf_intersect(normalize(s.left), _nf_complement(normalize(s.right)))
    if isinstance(s, Complement):
        return _nf_complement(normalize(s.inner))
    return _atom_normal_form(s)


def natural_density(s: IndexSet) -> Fraction:
    """lim |{k in s : k <= n}| / n; exists for every representable set."""
    return normalize(s).density()


def is_finite(s: IndexSet) -> bool:
    return normalize(s).is_finite()


def is_empty(s: IndexSet) -> bool:
    return normalize(s).is_empty()


def count_below(s: IndexSet, limit: int) -> int:
    """|{k in s : k <= limit}| by direct membership (no normal form)."""
    return sum(1 for n in range(1, limit + 1) if s.member(n))


# --------------------------------------------------------------------------
# Text grammar:  FIN{1,5,9}  AP(3,3)  SQUARES  CUBES  POW(2)  N
# with operators  |  &  \  ~  and parentheses.
# --------------------------------------------------------------------------

_ATOM_TOKENS = {"SQUARES": SQUARES, "CUBES": CUBES, "N": NATURALS}


class _SetParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str) -> ParseError:
        return ParseError(f"{msg} in index-set {self.text!r}", self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}")
        self.pos += 1

    def parse_int(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected an integer")
        return int(self.text[start:self.pos])

    def parse_word(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        return self.text[start:self.pos]

    def parse(self) -> IndexSet:
        expr = self.parse_expr()
        self.skip_ws()
        if self.pos != len(self.text):
            raise self.error("trailing input")
        return expr

    def parse_expr(self) -> IndexSet:
        left = self.parse_term()
        while True:
            op = self.peek()
            if op == "|":
                self.pos += 1
                left = Union(left, self.parse_term())
            elif op == "\\":
                self.pos += 1
                left = Difference(left, self.parse_term())
            else:
                return left

    def parse_term(self) -> IndexSet:
        left = self.parse_factor()
        while self.peek() == "&":
            self.pos += 1
            left = Intersection(left, self.parse_factor())
        return left

    def parse_factor(self) -> IndexSet:
        ch = self.peek()
        if ch == "~":
            self.pos += 1
            return Complement(self.parse_factor())
        if ch == "(":
            self.pos += 1
            expr = self.parse_expr()
            self.expect(")")
            return expr
        word = self.parse_word()
        if word in _ATOM_TOKENS:
            return _ATOM_TOKENS[word]
        if word == "POW":
            self.expect("(")
            base = self.parse_int()
            self.expect(")")
            return powers_of(base)
        if word == "AP":
            self.expect("(")
            first = self.parse_int()
            self.expect(",")
            step = self.parse_int()
            self.expect(")")
            return ArithmeticProgression(first, step)
        if word == "FIN":
            self.expect("{")
            elems = set()
            if self.peek() != "}":
                elems.add(self.parse_int())
                while self.peek() == ",":
                    self.pos += 1
                    elems.add(self.parse_int())
            self.expect("}")
            return FiniteSet(frozenset(elems))
        raise self.error(f"unexpected token {word or ch!r}")


def parse_index_set(text: str) -> IndexSet:
    return _SetParser(text).parse()


def render_index_set(s: IndexSet) -> str:
    def wrap(child: IndexSet, parent_level: int) -> str:
        return (f"({render_index_set(child)})"
                if _level(child) < parent_level else render_index_set(child))

    def _level(x: IndexSet) -> int:
        if isinstance(x, (Union, Difference)):
            return 1
        if isinstance(x, Intersection):
            return 2
        return 3

    if isinstance(s, NormalForm):
        return render_index_set(s.to_index_set())
    if s == NATURALS:
        return "N"
    if isinstance(s, FiniteSet):
        return "FIN{" + ",".join(str(x) for x in s.sorted_elements()) + "}"
    if isinstance(s, ArithmeticProgression):
        return f"AP({s.first},{s.step})"
    if isinstance(s, SparseAtom):
        if s.kind is SparseKind.SQUARES:
            return "SQUARES"
        if s.kind is SparseKind.CUBES:
            return "CUBES"
        return f"POW({s.base})"
    if isinstance(s, Union):
        return f"{wrap(s.left, 1)} | {wrap(s.right, 2)}"
    if isinstance(s, Difference):
        return f"{wrap(s.left, 1)} \\ {wrap(s.right, 2)}"
    if isinstance(s, Intersection):
        return f"{wrap(s.left, 2)} & {wrap(s.right, 3)}"
    if isinstance(s, Complement):
        return f"~{wrap(s.inner, 3)}"
    raise TypeError(f"cannot render {s!r}")


def index_set_to_dict(s: IndexSet) -> dict:
    if isinstance(s, NormalForm):
        return index_set_to_dict(s.to_index_set())
    if isinstance(s, FiniteSet):
        return {"atom": "fin", "elements": s.sorted_elements()}
    if isinstance(s, ArithmeticProgression):
        return {"atom": "ap", "first": s.first, "step": s.step}
    if isinstance(s, SparseAtom):
        d = {"atom": s.kind.value}
        if s.kind is SparseKind.POWERS:
            d["base"] = s.base
        return d
    for cls, name in ((Union, "union"), (Intersection, "intersection"),
                      (Difference, "difference")):
        if isinstance(s, cls):
            return {"op": name,
                    "args": [index_set_to_dict(s.left), index_set_to_dict(s.right)]}
    if isinstance(s, Complement):
        return {"op": "complement", "args": [index_set_to_dict(s.inner)]}
    raise TypeError(f"cannot encode {s!r}")


def index_set_from_dict(d: dict) -> IndexSet:
    if "atom" in d:
        atom = d["atom"]
        if atom == "fin":
            return FiniteSet(frozenset(d["elements"]))
        if atom == "ap":
            return ArithmeticProgression(d["first"], d["step"])
        if atom == "squares":
            return SQUARES
        if atom == "cubes":
            return CUBES
        if atom == "powers":
            return powers_of(d["base"])
        raise ParseError(f"unknown atom {atom!r}")
    op = d.get("op")
    args = [index_set_from_dict(x) for x in d.get("args", [])]
    if op == "union":
        return Union(*args)
    if op == "intersection":
        return Intersection(*args)
    if op == "difference":
        return Difference(*args)
    if op == "complement":
        return Complement(*args)
    raise ParseError(f"unknown operation {op!r}")
