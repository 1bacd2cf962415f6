"""The density topology layer: openness, the operator-law harness, finite
closure checks, and the constructive open-plus-null decomposition.

A set is density-open when every one of its points has lower density one in
it, i.e. when the set is contained in its own density-one image. Within the
interval algebra this coincides with ordinary openness of the set (an
endpoint or an isolated point is never a density point of its own set), a
subclass fact that is asserted and tested rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .density import density_one_points
from .errors import InvariantBreach, PreconditionViolation
from .ideals import Ideal
from .intervals import (
    EMPTY_SET,
    IntervalSet,
    REALS,
    complement,
    intersect,
    is_empty_set,
    is_null,
    measure,
    render_interval_set,
    subset,
    subtract,
    symm_diff,
    union,
)


def is_density_open(a: IntervalSet, ideal: Ideal) -> bool:
    return subset(a, density_one_points(a, ideal))


def is_usual_open(a: IntervalSet) -> bool:
    """Openness in the ordinary topology, decided on the canonical form."""
    if a.complemented:
        return all(iv.lo_closed and iv.hi_closed for iv in a.parts)
    return all(not iv.degenerate and not iv.lo_closed and not iv.hi_closed
               for iv in a.parts)


@dataclass(frozen=True)
class LemmaReport:
    name: str
    applicable: bool
    passed: bool
    detail: str

    @property
    def ok(self) -> bool:
        return self.passed or not self.applicable


def _report(name: str, applicable: bool, passed: bool, detail: str) -> LemmaReport:
    return LemmaReport(name, applicable, passed if applicable else True, detail)


def check_operator_laws(a: IntervalSet, b: IntervalSet,
                        ideal: Ideal) -> list:
    """Evaluate the density-operator laws on a concrete pair of sets.

    Laws whose hypothesis fails are reported as vacuous (applicable=False)
    rather than skipped, so a run shows exactly what was exercised.
    """
    def th(s: IntervalSet) -> IntervalSet:
        return density_one_points(s, ideal)

    ta, tb = th(a), th(b)
    reports = []

    null_diff = measure(symm_diff(a, b)) == 0
    reports.append(_report(
        "null-difference-invariance", null_diff, ta == tb,
        "sets differing by a null set share their density-one image"))

    reports.append(_report(
        "idempotence", True, th(ta) == ta,
        "the density-one image is its own density-one image"))

    reports.append(_report(
        "monotonicity", subset(a, b), subset(ta, tb),
        "nested sets have nested density-one images"))

    reports.append(_report(
        "intersection-law", True,
        th(intersect(a, b)) == intersect(ta, tb),
        "the density-one image distributes over finite intersection"))

    reports.append(_report(
        "null-remainder-monotonicity", measure(subtract(a, b)) == 0,
        subset(ta, tb),
        "removing only a null set cannot shrink the density-one image"))

    reports.append(_report(
        "null-set-law", is_null(a),
        th(a) == EMPTY_SET and th(complement(a)) == REALS,
        "a null set has empty image and its complement has full image"))

    reports.append(_report(
        "complement-disjointness", True,
        intersect(ta, th(complement(a))) == EMPTY_SET,
        "no point has full lower density in a set and its complement"))

    return reports


def check_finite_closure(family: list, ideal: Ideal) -> LemmaReport:
    """Finite intersections and unions of density-open sets stay open."""
    offenders = [render_interval_set(s) for s in family
                 if not is_density_open(s, ideal)]
    if offenders:
        raise PreconditionViolation(
            f"family members are not density-open: {offenders}")
    inter, uni = REALS, EMPTY_SET
    for s in family:
        inter = intersect(inter, s)
        uni = union(uni, s)
    passed = is_density_open(inter, ideal) and is_density_open(uni, ideal)
    return _report("finite-closure", True, passed,
                   "finite intersection and union of open sets stay open")


@dataclass(frozen=True)
class OpenNullDecomposition:
    open_part: IntervalSet
    null_part: IntervalSet


def decompose_measurable(b: IntervalSet, ideal: Ideal) -> OpenNullDecomposition:
    """Split b into a density-open part and a null remainder, verified.

    The open part is b intersected with its own density-one image; the
    remainder is what measure theory promises to be null. Every property of
    the decomposition is checked before returning.
    """
    c = intersect(b, density_one_points(b, ideal))
    d = subtract(b, c)
    if union(c, d) != b:
        raise InvariantBreach("decomposition parts do not reassemble the set")
    if not is_empty_set(intersect(c, d)):
        raise InvariantBreach("decomposition parts overlap")
    if not is_density_open(c, ideal):
        raise InvariantBreach("open part is not density-open")
    if not is_null(d):
        raise InvariantBreach("remainder is not a null set")
    return OpenNullDecomposition(c, d)
