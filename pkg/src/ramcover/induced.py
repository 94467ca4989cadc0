"""Lifting cycle types to the action on 2-sets, and genera of the curves
attached to the actions on t-sets and on ordered t-tuples."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .perm import (
    Caps,
    GeneratorSet,
    Permutation,
    cycle_count_on_tsets,
    cycle_count_on_ttuples,
    is_transitive,
)
from .ramdata import Partition, RamificationData


def pair_orbit_split(r1: int, r2: int, same_orbit: bool) -> tuple[int, ...]:
    """Orbit lengths of a cycle product on the 2-sets meeting two of its
    orbits (sizes r1, r2), or on the 2-sets inside one orbit."""
    if r1 < 1 or r2 < 1:
        raise ValueError("orbit sizes must be positive")
    if same_orbit:
        if r1 != r2:
            raise ValueError("a single orbit has one size")
        if r1 % 2:
            return (r1,) * ((r1 - 1) // 2)
        return (r1,) * (r1 // 2 - 1) + (r1 // 2,)
    g = math.gcd(r1, r2)
    return (r1 * r2 // g,) * g


def _lift_counts(e: Partition) -> Counter:
    out: Counter = Counter()
    mult = e.mult
    for i, (v, c) in enumerate(mult):
        for length in pair_orbit_split(v, v, True):
            out[length] += c
        # two distinct orbits of the same size
        out[v] += v * (c * (c - 1) // 2)
        for w, d in mult[i + 1:]:
            g = math.gcd(v, w)
            out[v * w // g] += g * c * d
    return out


def lift_to_2sets(e: Partition) -> Partition:
    """Cycle type on 2-sets of any permutation with cycle type ``e``."""
    n = e.degree * (e.degree - 1) // 2
    if n == 0:
        raise ValueError("degree 1 has no 2-sets")
    return Partition(n, tuple(_lift_counts(e).items()))


def lift_table_entry(d: RamificationData) -> RamificationData:
    n = d.degree * (d.degree - 1) // 2
    return RamificationData(n, tuple(lift_to_2sets(b) for b in d.branches))


@dataclass(frozen=True)
class BranchTuple:
    """Permutations whose left-to-right product is the identity and which
    generate a transitive group."""

    degree: int
    cycles: tuple[Permutation, ...]

    def __post_init__(self):
        cycles = tuple(self.cycles)
        object.__setattr__(self, "cycles", cycles)
        if not cycles:
            raise ValueError("a branch tuple needs at least one element")
        if any(c.degree != self.degree for c in cycles):
            raise ValueError("mixed degrees in branch tuple")
        if not product_is_identity(cycles):
            raise ValueError("product of the tuple is not the identity")
        if not is_transitive(GeneratorSet(self.degree, cycles)):
            raise ValueError("tuple generates an intransitive group")

    @classmethod
    def of(cls, cycles: Sequence[Permutation]) -> "BranchTuple":
        return cls(cycles[0].degree, tuple(cycles))

    def generators(self) -> GeneratorSet:
        return GeneratorSet(self.degree, self.cycles)

    def ramification(self) -> RamificationData:
        return RamificationData(
            self.degree, tuple(Partition.of(c.cycle_lengths()) for c in self.cycles)
        )


def product_is_identity(cycles: Sequence[Permutation]) -> bool:
    acc = cycles[0]
    for c in cycles[1:]:
        acc = acc * c
    return acc.is_identity()


@dataclass(frozen=True)
class QuotientGenusReport:
    t: int
    g_Xt: int
    g_Yt: int
    per_branch: tuple[tuple[int, int, int], ...]   # (R_f, R_h, R_pi)

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "g_Xt": self.g_Xt,
            "g_Yt": self.g_Yt,
            "per_branch": [{"R_f": f, "R_h": h, "R_pi": p} for f, h, p in self.per_branch],
        }


def _genus(rh: int, degree: int) -> int:
    if rh % 2:
        raise ArithmeticError(f"odd ramification sum {rh}; the tuple is not product-one")
    return rh // 2 - degree + 1


def quotient_genera(b: BranchTuple, t: int, caps: Caps | None = None) -> QuotientGenusReport:
    """Genera of the t-set quotient X_t and the t-tuple quotient Y_t of the
    cover over the projective line given by ``b``."""
    n = b.degree
    if not 1 <= t <= n:
        raise ValueError(f"t={t} must lie in 1..{n}")
    sets = math.comb(n, t)
    tuples = math.perm(n, t)
    rows = []
    for x in b.cycles:
        rf = sets - cycle_count_on_tsets(x, t, caps)
        rh = tuples - cycle_count_on_ttuples(x, t, caps)
        rows.append((rf, rh, rh - math.factorial(t) * rf))
    g_x = _genus(sum(r[0] for r in rows), sets)
    g_y = _genus(sum(r[1] for r in rows), tuples)
    return QuotientGenusReport(t, g_x, g_y, tuple(rows))
