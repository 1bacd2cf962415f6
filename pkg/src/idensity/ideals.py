"""The two concrete ideals on N used throughout: finite sets, and
density-zero sets. Both are admissible (every finite set belongs) and
nontrivial (N itself never does), and membership is decided exactly on the
symbolic index-set class.
"""

from __future__ import annotations

import enum

from .indexsets import Complement, IndexSet, normalize


class Ideal(enum.Enum):
    FIN = "fin"
    DENSITY_ZERO = "d"

    @staticmethod
    def from_flag(flag: str) -> "Ideal":
        for ideal in Ideal:
            if ideal.value == flag:
                return ideal
        raise ValueError(f"unknown ideal flag {flag!r} (use 'fin' or 'd')")

    def contains(self, s: IndexSet) -> bool:
        nf = normalize(s)
        if self is Ideal.FIN:
            return nf.is_finite()
        return nf.density() == 0

    def in_filter(self, s: IndexSet) -> bool:
        """Is the complement of s small, i.e. is s in the dual filter?"""
        return self.contains(Complement(s))


def ideal_contains(ideal: Ideal, s: IndexSet) -> bool:
    return ideal.contains(s)


def in_filter(ideal: Ideal, s: IndexSet) -> bool:
    return ideal.in_filter(s)
