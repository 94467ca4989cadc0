"""Exact identities, bounds and filters on ramification data, with
brute-force oracles built on the permutation engine.

Everything is integer or Fraction arithmetic. Throughout, ``r_h1t(e, t)`` is
the ramification of the projection from t-tuple space to the curve Y_1 over
one branch point, i.e. a sum over ordered t-tuples of orbits.
"""

from __future__ import annotations

import enum
import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .perm import (
    Caps,
    CapExceeded,
    Permutation,
    current_caps,
    cycle_count_on_tsets,
    cycle_count_on_ttuples,
    is_jordan_type,
)
from .ramdata import GenusMarker, Partition, RamificationData, rh_genus


def _v2(n: int) -> int:
    return (n & -n).bit_length() - 1


def _primes_upto(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for q in range(2, math.isqrt(n) + 1):
        if sieve[q]:
            sieve[q * q::q] = bytearray(len(range(q * q, n + 1, q)))
    return [q for q in range(n + 1) if sieve[q]]


def _prime_factors(n: int) -> set[int]:
    out, q = set(), 2
    while q * q <= n:
        while n % q == 0:
            out.add(q)
            n //= q
        q += 1
    if n > 1:
        out.add(n)
    return out


def partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of n as descending tuples."""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def canonical_permutation(parts: Sequence[int]) -> Permutation:
    """Consecutive cycles with the given lengths."""
    cycles, start = [], 0
    for r in parts:
        cycles.append(list(range(start, start + r)))
        start += r
    return Permutation.from_cycles(cycles, start)


# ---------------------------------------------------------------------------
# Orbit sums


def r_pi2_count(e: Partition) -> int:
    """Ramification of the 2-tuple to 2-set projection over one point: the
    number of even parts."""
    return sum(c for v, c in e.mult if v % 2 == 0)


def _hat_product(tup: Sequence[int], sizes: Sequence[int]) -> int:
    seen: Counter = Counter()
    prod = 1
    for i in tup:
        prod *= sizes[i] - seen[i]
        seen[i] += 1
    return prod


def _orbit_tuples(sizes: Sequence[int], k: int, caps: Caps | None) -> Iterator[tuple[int, ...]]:
    caps = caps or current_caps()
    if len(sizes) ** k > caps.induced_domain:
        raise CapExceeded(f"{len(sizes)}^{k} orbit tuples exceed cap {caps.induced_domain}")
    return itertools.product(range(len(sizes)), repeat=k)


def r_h1t(e: Partition, t: int, caps: Caps | None = None) -> int:
    """Sum over ordered t-tuples of orbits (hat-corrected) of
    r^_1...r^_t / lcm * (lcm / r_1 - 1)."""
    if t < 1:
        raise ValueError("t must be positive")
    if t == 1:
        return 0
    if t == 2:
        total = 0
        for v, c in e.mult:
            for w, d in e.mult:
                total += c * d * (v - math.gcd(v, w))
        return total
    sizes = e.parts
    total = Fraction(0)
    for tup in _orbit_tuples(sizes, t, caps):
        rs = [sizes[i] for i in tup]
        lcm = math.lcm(*rs)
        hat = _hat_product(tup, sizes)
        if hat:
            total += Fraction(hat, lcm) * (lcm // rs[0] - 1)
    assert total.denominator == 1
    return int(total)


def _o_h_sum(e: Partition, k: int, caps: Caps | None) -> Fraction:
    """Sum over k-tuples with v2(r_1) > v2(r_j), j >= 2, of r^.../lcm."""
    sizes = e.parts
    total = Fraction(0)
    for tup in _orbit_tuples(sizes, k, caps):
        rs = [sizes[i] for i in tup]
        top = _v2(rs[0])
        if rs[0] % 2 or any(_v2(r) >= top for r in rs[1:]):
            continue
        total += Fraction(_hat_product(tup, sizes), math.lcm(*rs))
    return total


# Largest (R_pi3 - main term) / (t^4 (l-2)!/(l-t)!) over all cycle types of
# degree 10 is 1/54, reached at [3,3,3,1], so 1 bounds that sample with room.
DEFAULT_E0 = Fraction(1)


def r_pit_bound(e: Partition, t: int, E0: Fraction | int = DEFAULT_E0, caps: Caps | None = None) -> Fraction:
    """Upper bound for the t-tuple to t-set ramification over one point."""
    ell = e.degree
    if t < 2:
        raise ValueError("t must be at least 2")
    if t == 2:
        return Fraction(r_pi2_count(e))
    if ell <= t * t:
        raise ValueError(f"the bound needs l > t^2, got l={ell}, t={t}")
    main = math.comb(t, 2) * _o_h_sum(e, t - 1, caps)
    return main + Fraction(E0) * t ** 4 * Fraction(math.factorial(ell - 2), math.factorial(ell - t))


def t1_bound_check(e: Partition, t: int, caps: Caps | None = None) -> bool:
    """The O_h(P) sum over (t-1)-tuples is at most r_h1t(e, t-1)."""
    if not 3 <= t <= e.degree / 2:
        raise ValueError(f"needs 3 <= t <= l/2, got t={t}, l={e.degree}")
    return _o_h_sum(e, t - 1, caps) <= r_h1t(e, t - 1, caps)


def mu_r(parts: Iterable[int]) -> int:
    parts = list(parts)
    counts = Counter(parts)
    total = -sum(c for v, c in counts.items() if v % 2 == 0)
    for v, c in counts.items():
        for w, d in counts.items():
            total += c * d * (v - math.gcd(v, w))
    return total


def g_X2_formula(d: RamificationData, g_Y1: int) -> Fraction:
    """Genus of the 2-set quotient from the branch data, taking g_X1 = g_Y1:
    4(g_X2 - g_X1) = 2(l-3)(g_Y1-1) + sum over branches of
    (r_h1t(e,2) - #even parts). Non-integral output flags inconsistent data."""
    ell = d.degree
    if ell < 5:
        raise ValueError("degree must be at least 5")
    total = 2 * (ell - 3) * (g_Y1 - 1)
    for e in d.branches:
        total += r_h1t(e, 2) - r_pi2_count(e)
    return g_Y1 + Fraction(total, 4)


# ---------------------------------------------------------------------------
# Almost-Galois classification


class Special(str, enum.Enum):
    INFINITY = "inf"
    UNCLASSIFIABLE = "unclassifiable"


INFINITY = Special.INFINITY
UNCLASSIFIABLE = Special.UNCLASSIFIABLE


@dataclass(frozen=True)
class PointClass:
    m: int | Special
    epsilon: int | None
    alpha: int

    def __post_init__(self):
        if self.m == UNCLASSIFIABLE:
            if self.epsilon is not None:
                raise ValueError("an unclassifiable point has no error term")
        elif self.m == INFINITY:
            if self.epsilon != 84 * (self.alpha + 1):
                raise ValueError("epsilon must be 84(alpha+1) when m is infinite")
        elif self.epsilon != 2 * (self.alpha + 1) * (self.m + 1) * self.m:
            raise ValueError("epsilon must be 2(alpha+1)(m+1)m")

    def to_json(self):
        m = self.m.value if isinstance(self.m, Special) else self.m
        return {"m": m, "epsilon": self.epsilon, "alpha": self.alpha}


def classify_point(e: Partition, alpha: int) -> PointClass:
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    ell = e.degree
    for k in range(1, 7):
        if e.count(k) >= Fraction(ell, k) - 2 * (alpha + 1) * (k + 1):
            return PointClass(k, 2 * (alpha + 1) * (k + 1) * k, alpha)
    if all(e.count(k) <= 4 * (alpha + 1) for k in range(1, 7)):
        return PointClass(INFINITY, 84 * (alpha + 1), alpha)
    return PointClass(UNCLASSIFIABLE, None, alpha)


CASES = {
    ("inf", "inf"): "I1",
    (2, 2, "inf"): "I2",
    (2, 2, 2, 2): "F1",
    (3, 3, 3): "F2",
    (2, 4, 4): "F3",
    (2, 3, 6): "F4",
    (): "F5",
}


def _m_key(m):
    return (1, 0) if m == INFINITY else (0, m)


@dataclass(frozen=True)
class CoverClass:
    M: tuple
    case_label: str

    def to_json(self):
        return {"M": [m.value if isinstance(m, Special) else m for m in self.M],
                "case": self.case_label}


def classify_cover(d: RamificationData, alpha: int) -> CoverClass:
    ms = []
    for e in d.branches:
        pc = classify_point(e, alpha)
        if pc.m == UNCLASSIFIABLE:
            raise ValueError(f"branch {e} fits neither alternative of the dichotomy")
        if pc.m != 1:
            ms.append(pc.m)
    M = tuple(sorted(ms, key=_m_key))
    key = tuple(m.value if isinstance(m, Special) else m for m in M)
    return CoverClass(M, CASES.get(key, "NONE"))


# ---------------------------------------------------------------------------
# Decomposability filter


@dataclass(frozen=True)
class FilterTrigger:
    condition: int
    prime: int
    points: tuple[int, ...]      # branch indices; index >= len(branches) is unramified

    def to_json(self):
        return {"condition": self.condition, "prime": self.prime, "points": list(self.points)}


@dataclass(frozen=True)
class FilterReport:
    triggers: tuple[FilterTrigger, ...]

    @property
    def conditions(self) -> frozenset[int]:
        return frozenset(t.condition for t in self.triggers)

    @property
    def triggered(self) -> bool:
        return bool(self.triggers)

    def to_json(self):
        return {"conditions": sorted(self.conditions), "triggers": [t.to_json() for t in self.triggers]}


def decomposability_filter(d: RamificationData) -> FilterReport:
    """Check the three decomposability conditions over every ordered triple
    of distinct points. Up to two unramified points (all entries 1) pad the
    branch list so that one- and two-branch data are covered."""
    ell = d.degree
    pts = list(d.branches) + [Partition.trivial(ell)] * 2
    info = []
    for e in pts:
        g = 0
        for v, _ in e.mult:
            g = math.gcd(g, v)
        info.append({
            "primes": _prime_factors(g) if g > 1 else set(),
            "odd": sum(c for v, c in e.mult if v % 2),
            "coprime3": sum(c for v, c in e.mult if v % 3),
        })
    primes = set(_primes_upto(ell))
    triggers: set[FilterTrigger] = set()
    n = len(pts)
    for i, j in itertools.permutations(range(n), 2):
        for p in sorted(info[i]["primes"] & info[j]["primes"] & primes):
            triggers.add(FilterTrigger(1, p, (min(i, j), max(i, j))))
    for i, j, k in itertools.permutations(range(n), 3):
        if j > k:
            continue
        odd = info[j]["odd"] + info[k]["odd"]
        if odd == 2:
            for p in sorted(info[i]["primes"] & primes):
                triggers.add(FilterTrigger(2, p, (i, j, k)))
        if 2 in info[i]["primes"] and info[j]["coprime3"] + info[k]["coprime3"] == 2:
            triggers.add(FilterTrigger(3, 3, (i, j, k)))
    return FilterReport(tuple(sorted(triggers, key=lambda t: (t.condition, t.prime, t.points))))


# ---------------------------------------------------------------------------
# Galois closure


EUCLIDEAN_SIGNATURES = {(2, 2, 2, 2), (3, 3, 3), (2, 4, 4), (2, 3, 6)}


@dataclass(frozen=True)
class ClosureReport:
    lcms: tuple[int, ...]
    chi: Fraction                 # sum of (1 - 1/e) minus 2
    geometry: str                 # spherical, euclidean, hyperbolic
    genus: int | GenusMarker | None
    solvable: bool

    def to_json(self):
        g = self.genus.value if isinstance(self.genus, GenusMarker) else self.genus
        return {"lcms": list(self.lcms), "chi": str(self.chi), "geometry": self.geometry,
                "genus": g, "solvable": self.solvable}


def galois_closure_genus(d: RamificationData, order: int | None = None) -> ClosureReport:
    """Genus of a Galois cover of the line whose ramification index over each
    branch point is the lcm of that point's entries. The genus is forced for
    spherical and euclidean signatures; otherwise it needs the group order."""
    lcms = tuple(sorted(math.lcm(*b.parts) for b in d.branches))
    chi = sum((1 - Fraction(1, e) for e in lcms), Fraction(0)) - 2
    if chi < 0:
        geometry, genus = "spherical", 0
    elif chi == 0:
        geometry, genus = "euclidean", 1
    else:
        geometry, genus = "hyperbolic", None
    if order is not None:
        twice = order * chi
        if twice.denominator != 1 or twice % 2 or twice < -2:
            genus = GenusMarker.NOT_INTEGRAL
        else:
            computed = 1 + int(twice) // 2
            if genus is None:
                genus = computed
    return ClosureReport(lcms, chi, geometry, genus, lcms in EUCLIDEAN_SIGNATURES)


# ---------------------------------------------------------------------------
# Castelnuovo instance check


@dataclass(frozen=True)
class CastelnuovoResult:
    bound: Fraction
    holds: bool | None     # g_Y2 < bound, when g_Y2 is supplied

    def to_json(self):
        return {"bound": str(self.bound), "holds": self.holds}


def castelnuovo_check(g_Y1: int, gap: int, t: int, ell: int, alpha, g_Y2: int | None = None) -> CastelnuovoResult:
    alpha = Fraction(alpha)
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    if not 2 <= t <= ell / 2:
        raise ValueError(f"needs 2 <= t <= l/2, got t={t}, l={ell}")
    if not gap < alpha / ell * math.comb(ell, t):
        raise ValueError(f"hypothesis fails: gap {gap} >= (alpha/l)*C(l,t)")
    if t == 2:
        bound = Fraction(g_Y1 * (ell + 1)) + (alpha + 1) * (ell - 1)
    else:
        eps = Fraction(t, ell - t + 1)
        bound = ((t - 1) * g_Y1 + math.comb(t, 2) + alpha) * ell / (1 - eps)
    return CastelnuovoResult(bound, None if g_Y2 is None else g_Y2 < bound)


# ---------------------------------------------------------------------------
# S_h estimates


def s_h_estimate(e: Partition, m: int) -> Fraction:
    ell = e.degree
    n = len(e)

    def cnt(pred):
        return sum(c for v, c in e.mult if pred(v))

    if m == 1:
        return Fraction(ell * e.rh_contribution())
    if m == 2:
        inner = Fraction(ell, 2) - n + cnt(lambda r: r % 2)
    elif m == 3:
        inner = Fraction(ell, 3) - n + Fraction(4, 3) * cnt(lambda r: r % 3)
    elif m == 4:
        inner = (Fraction(ell, 4) - n + cnt(lambda r: r % 4 == 2)
                 + Fraction(3, 2) * cnt(lambda r: r % 2))
    elif m == 6:
        inner = (Fraction(ell, 6) - n + cnt(lambda r: r % 6 == 3)
                 + Fraction(4, 3) * cnt(lambda r: r % 6 in (2, 4))
                 + Fraction(5, 3) * cnt(lambda r: r % 6 in (1, 5)))
    else:
        raise ValueError(f"no closed form for m={m}")
    return ell * inner


# ---------------------------------------------------------------------------
# Refutation by genus monotonicity


def jordan_power(e: Partition) -> tuple[int, Partition] | None:
    """Least k such that the k-th power of an element of type e has a cycle
    type forcing the alternating group inside a primitive group."""
    order = math.lcm(*e.parts)
    for k in range(1, order + 1):
        if order % k:
            continue
        powered = Counter()
        for v, c in e.mult:
            q = math.gcd(v, k)
            powered[v // q] += q * c
        moved = [v for v, c in powered.items() if v > 1 for _ in range(c)]
        if is_jordan_type(moved, e.degree):
            return k, Partition.from_mult(powered.items())
    return None


@dataclass(frozen=True)
class MonotonicityReport:
    g_X1: int
    g_X2: Fraction
    jordan_branch: Partition
    power: int
    verdict: str          # NONEXISTENT or NOT_REFUTED

    def to_json(self):
        return {
            "g_X1": self.g_X1,
            "g_X2": str(self.g_X2) if self.g_X2.denominator != 1 else int(self.g_X2),
            "jordan_branch": str(self.jordan_branch),
            "power": self.power,
            "verdict": self.verdict,
        }


def refute_by_monotonicity(d: RamificationData) -> MonotonicityReport:
    """Any primitive realization contains A_l when some branch has a power of
    Jordan type; then the 2-set genus may not drop below the 1-set genus."""
    found = None
    for e in d.branches:
        jp = jordan_power(e)
        if jp is not None:
            found = (e, jp[0])
            break
    if found is None:
        raise ValueError("no branch has a power forcing the alternating group")
    g1 = rh_genus(d)
    if not g1.ok:
        raise ValueError(f"the data have no valid genus ({g1.genus.value})")
    g2 = g_X2_formula(d, g1.genus)
    verdict = "NONEXISTENT" if g2 < g1.genus else "NOT_REFUTED"
    return MonotonicityReport(g1.genus, g2, found[0], found[1], verdict)


# ---------------------------------------------------------------------------
# Brute-force oracles


def brute_r_h1t(p: Permutation, t: int, caps: Caps | None = None) -> int:
    """(l-1)!/(l-t)! |orbits on points| - |orbits on t-tuples|."""
    ell = p.degree
    return (math.perm(ell - 1, t - 1) * len(p.cycle_lengths())
            - cycle_count_on_ttuples(p, t, caps))


def brute_r_pi(p: Permutation, t: int, caps: Caps | None = None) -> int:
    """R_{h_t} - t! R_{f_t} from the induced cycle counts."""
    ell = p.degree
    rh = math.perm(ell, t) - cycle_count_on_ttuples(p, t, caps)
    rf = math.comb(ell, t) - cycle_count_on_tsets(p, t, caps)
    return rh - math.factorial(t) * rf


@dataclass
class OracleLedger:
    checked: int = 0
    failures: list = field(default_factory=list)

    def to_json(self):
        return {"checked": self.checked, "failures": self.failures, "ok": not self.failures}


def run_oracles(max_degree: int, max_t: int, caps: Caps | None = None) -> OracleLedger:
    """Compare the closed forms with brute force over every cycle type of
    degree up to ``max_degree``."""
    ledger = OracleLedger()
    for ell in range(2, max_degree + 1):
        for parts in partitions(ell):
            e = Partition.of(parts)
            x = canonical_permutation(parts)
            for t in range(2, max_t + 1):
                if t > ell:
                    continue
                ledger.checked += 1
                want = brute_r_h1t(x, t, caps)
                got = r_h1t(e, t, caps)
                if want != got:
                    ledger.failures.append({"check": "r_h1t", "type": str(e), "t": t,
                                            "closed": got, "brute": want})
            ledger.checked += 1
            want = brute_r_pi(x, 2, caps)
            got = r_pi2_count(e)
            if want != got:
                ledger.failures.append({"check": "r_pi2", "type": str(e),
                                        "closed": got, "brute": want})
    return ledger
