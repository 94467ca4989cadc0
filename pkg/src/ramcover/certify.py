"""Explicit branch-cycle tuples and their certification.

The tuples are transcribed 1-indexed, exactly as printed, and converted to
0-indexed permutations. Relations printed as x1 x2 = x3 (or x1 x2 = x4 x3)
with involutions on the right are turned into product-one sequences
(x1, x2, x3) and (x1, x2, x3, x4).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .induced import BranchTuple, product_is_identity
from .perm import (
    Caps,
    CapExceeded,
    GeneratorSet,
    GroupVerdict,
    Permutation,
    classify_alternating,
    current_caps,
    group_order,
    is_primitive,
    is_transitive,
    preserves_partition,
)
from .ramdata import Partition, RamificationData, rh_genus
from .tables import Inadmissible, nonexistence_row, two_set_row

PRODUCT_ONE = "PRODUCT_ONE"
CYCLE_TYPES_MATCH = "CYCLE_TYPES_MATCH"
TRANSITIVE = "TRANSITIVE"
PRIMITIVE = "PRIMITIVE"
CONTAINS_ALT = "CONTAINS_ALT"
GENUS_MATCH = "GENUS_MATCH"
CHECKS = (PRODUCT_ONE, CYCLE_TYPES_MATCH, TRANSITIVE, PRIMITIVE, CONTAINS_ALT, GENUS_MATCH)


def _perm(cycles: Sequence[Sequence[int]], n: int) -> Permutation:
    """Left-to-right product of 1-indexed cycles, which may overlap."""
    acc = Permutation.identity(n)
    for c in cycles:
        if len(c) > 1:
            acc = acc * Permutation.from_cycles([[x - 1 for x in c]], n)
    return acc


def _hex(k0: int, k1: int) -> list[tuple[int, ...]]:
    return [tuple(6 * i + j for j in range(1, 7)) for i in range(k0, k1)]


def _f4_threes(k: int) -> list[tuple[int, ...]]:
    out = []
    for i in range(1, k):
        out += [(6 * i - 3, 6 * i - 1, 6 * i + 1), (6 * i + 2, 6 * i - 2, 6 * i + 6)]
    return out


def _f4_pairs(k: int) -> list[tuple[int, ...]]:
    out = []
    for i in range(1, k):
        out += [(6 * i - 3, 6 * i), (6 * i - 2, 6 * i + 1), (6 * i - 1, 6 * i + 2)]
    return out


def _f19(ell):
    h = ell // 2
    x1 = [(1, 4), (3, 5)] + [(2 * i, 2 * i + 1) for i in range(3, h)]
    x2 = [(1, 2, 3, 4)] + [(2 * i + 1, 2 * i + 2) for i in range(2, h)]
    # The printed products for x4 and x3 start one index off (at 2 and 1);
    # these ranges make both involutions of type [1^2, 2^((l-2)/2)].
    x4 = [(2 * i + 1, 2 * i + 2) for i in range(1, h)]
    x3 = [(2, 3), (4, 6)] + [(2 * i + 1, 2 * i + 4) for i in range(2, h - 1)]
    return [x1, x2, x3, x4]


def _f31(ell):
    k = ell // 4
    x1 = [(2, 1, 4, 5), (4 * k - 2, 4 * k - 5, 4 * k, 4 * k - 1)]
    x1 += [(4 * i + 2, 4 * i - 1, 4 * i + 4, 4 * i + 5) for i in range(1, k - 1)]
    x2 = [(2, 3, 4)] + [(4 * i + 1, 4 * i + 2, 4 * i + 3, 4 * i + 4) for i in range(1, k)]
    x3 = [(2, 1)] + [c for i in range(1, k) for c in ((4 * i, 4 * i + 2), (4 * i + 1, 4 * i - 1))]
    return [x1, x2, x3]


def _f32(ell):
    k = (ell - 5) // 4
    x1 = [(4, 5, 4 * k + 5, 4 * k + 4), (4 * k - 2, 4 * k - 1, 4 * k + 2, 4 * k + 3)]
    x1 += [(4 * i - 2, 4 * i - 1, 4 * i + 4, 4 * i + 5) for i in range(1, k)]
    x2 = [(1, 2, 3), (4 * k + 4, 4 * k + 5)] + [(4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3) for i in range(1, k + 1)]
    x3 = [(1, 2), (5, 4 * k + 4), (4 * k - 1, 4 * k + 3), (4 * k, 4 * k + 2)]
    x3 += [c for i in range(1, k) for c in ((4 * i - 1, 4 * i + 5), (4 * i, 4 * i + 2))]
    return [x1, x2, x3]


def _f33(ell):
    k = (ell - 3) // 4
    x1 = [(1, 4, 5), (4 * k - 2, 4 * k - 1, 4 * k + 2, 4 * k + 3)]
    x1 += [(4 * i - 2, 4 * i - 1, 4 * i + 4, 4 * i + 5) for i in range(1, k)]
    x2 = [(2, 3)] + [(4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3) for i in range(1, k + 1)]
    x3 = [(1, 5), (4 * k - 1, 4 * k + 3), (4 * k, 4 * k + 2)]
    x3 += [c for i in range(1, k) for c in ((4 * i - 1, 4 * i + 5), (4 * i, 4 * i + 2))]
    return [x1, x2, x3]


def _f41(ell):
    k = ell // 6
    x1 = [(2, 6), (6 * k - 1, 6 * k - 2, 6 * k - 3)] + _f4_threes(k)
    x2 = _hex(0, k)
    x3 = [(1, 2), (6 * k - 3, 6 * k)] + _f4_pairs(k)
    return [x1, x2, x3]


def _f42(ell):
    k = (ell - 2) // 6
    x1 = [(1, 6 * k + 1), (2, 6 * k + 2, 6), (6 * k - 1, 6 * k - 2, 6 * k - 3)] + _f4_threes(k)
    x2 = [(6 * k + 1, 6 * k + 2)] + _hex(0, k)
    x3 = [(1, 6 * k + 2), (2, 6 * k + 1), (6 * k, 6 * k - 3)] + _f4_pairs(k)
    return [x1, x2, x3]


def _f43(ell):
    k = (ell - 7) // 6
    x1 = [(1, 6 * k + 7, 6 * k + 5), (2, 6 * k + 4, 6), (6 * k - 3, 6 * k - 1, 6 * k + 1),
          (6 * k - 2, 6 * k + 3, 6 * k + 2)] + _f4_threes(k)
    x2 = [(6 * k + 1, 6 * k + 2, 6 * k + 3), (6 * k + 4, 6 * k + 5, 6 * k + 6, 6 * k + 7)] + _hex(0, k)
    x3 = [(1, 6 * k + 4), (2, 6 * k + 5), (6 * k + 6, 6 * k + 7)] + _f4_pairs(k + 1)
    return [x1, x2, x3]


def _f44(ell):
    k = (ell - 3) // 6
    x1 = [(2, 6), (6 * k - 2, 6 * k + 3, 6 * k + 2), (6 * k - 3, 6 * k - 1, 6 * k + 1)] + _f4_threes(k)
    x2 = [(6 * k + 1, 6 * k + 2, 6 * k + 3)] + _hex(0, k)
    x3 = [(1, 2)] + _f4_pairs(k + 1)
    return [x1, x2, x3]


def _f45(ell):
    k = (ell - 4) // 6
    x1 = [(1, 6, 2), (3, 5, 7), (6 * k - 2, 6 * k + 4, 6 * k + 2)]
    x1 += [c for i in range(2, k + 1) for c in ((6 * i - 4, 6 * i - 8, 6 * i), (6 * i - 3, 6 * i - 1, 6 * i + 1))]
    x2 = [(6 * k + 1, 6 * k + 2, 6 * k + 3, 6 * k + 4)] + _hex(0, k)
    x3 = [(6 * k + 3, 6 * k + 4)] + _f4_pairs(k + 1)
    return [x1, x2, x3]


def _f46(ell):
    k = (ell - 5) // 6
    x1 = [(1, 6 * k + 5), (2, 6 * k + 4, 6), (6 * k - 3, 6 * k - 1, 6 * k + 1),
          (6 * k + 2, 6 * k - 2, 6 * k + 3)] + _f4_threes(k)
    x2 = [(6 * k + 1, 6 * k + 2, 6 * k + 3), (6 * k + 4, 6 * k + 5)] + _hex(0, k)
    x3 = [(1, 6 * k + 4), (2, 6 * k + 5)] + _f4_pairs(k + 1)
    return [x1, x2, x3]


@dataclass(frozen=True)
class _Construction:
    build: object
    modulus: int
    residue: int
    minimum: int
    normalization: str


# Minimum degrees: F1.9 needs l > 8 for the double-transposition argument;
# the others start at the least k allowed by their construction.
CONSTRUCTIONS = {
    "F1.9": _Construction(_f19, 2, 0, 10, "x1 x2 = x4 x3 with x3, x4 involutions; tuple (x1, x2, x3, x4)"),
    "F3.1": _Construction(_f31, 4, 0, 8, "x1 x2 = x3 with x3 an involution; tuple (x1, x2, x3)"),
    "F3.2": _Construction(_f32, 4, 1, 9, "x1 x2 = x3 with x3 an involution; tuple (x1, x2, x3)"),
    "F3.3": _Construction(_f33, 4, 3, 7, "x1 x2 = x3 with x3 an involution; tuple (x1, x2, x3)"),
    "F4.1": _Construction(_f41, 6, 0, 6, "x1 x2 = x3 with x3 an involution; tuple (x1, x2, x3)"),
    "F4.2": _Construction(_f42, 6, 2, 8, "x1 x2 = x3 with x3 an involution; tuple (x1, x2, x3)"),
    "F4.3": _Construction(_f43, 6, 1, 13, "x1 x2 = x3 with x3 an involution; tuple (x1, x2, x3)"),
    "F4.4": _Construction(_f44, 6, 3, 9, "x1 x2 = x3 with x3 an involution; tuple (x1, x2, x3)"),
    "F4.5": _Construction(_f45, 6, 4, 10, "x1 x2 = x3 with x3 an involution; tuple (x1, x2, x3)"),
    "F4.6": _Construction(_f46, 6, 5, 11, "x1 x2 = x3 with x3 an involution; tuple (x1, x2, x3)"),
}

WITNESS_LABELS = ("I2.N1-witness", "I2.N2-witness")
GENERIC_LABELS = ("I1.1-generic",)
LABELS = tuple(CONSTRUCTIONS) + WITNESS_LABELS + GENERIC_LABELS


def admissible_ells(label: str, max_ell: int) -> list[int]:
    c = CONSTRUCTIONS[label]
    return [n for n in range(c.minimum, max_ell + 1) if n % c.modulus == c.residue]


@dataclass(frozen=True)
class BuiltTuple:
    label: str
    ell: int
    params: tuple[tuple[str, int], ...]
    tuple: tuple[Permutation, ...]
    expected: RamificationData
    normalization: str

    def to_json(self):
        return {
            "label": self.label,
            "ell": self.ell,
            "params": dict(self.params),
            "tuple": [p.to_text() for p in self.tuple],
            "normalization": self.normalization,
        }


def i2n1_witness(m: int, n: int) -> tuple[Permutation, Permutation]:
    """The pair (b, c) with bc = (1, ..., l), l = 2m + 2n + 4."""
    ell = 2 * m + 2 * n + 4
    c = _perm([(i, 3 * m + 2 * n + 6 - i) for i in range(m + 2, m + n + 3)]
              + [(i, 2 * m + n + 4 - i) for i in range(1, m + 2)], ell)
    b = _perm([(i, 3 * m + 2 * n + 5 - i) for i in range(m + 2, m + n + 2)]
              + [(i, 2 * m + n + 3 - i) for i in range(1, m + 1)]
              + [(m + 1, 2 * m + 2 * n + 4, 2 * m + n + 3, m + n + 2)], ell)
    return b, c


def i2n2_witness(m: int, n: int) -> tuple[Permutation, Permutation, Permutation]:
    """The triple (b, c, d) with dcb = (1, ..., l), l = 2m + 2n + 2."""
    ell = 2 * m + 2 * n + 2
    c = _perm([(m + n + 1, 2 * m + n + 1), (m, 2 * m + 2 * n + 2)]
              + [(i, 2 * m + n + 1 - i) for i in range(1, m)]
              + [(i, 3 * m + 2 * n + 2 - i) for i in range(m + 1, m + n + 1)], ell)
    b = _perm([(i, 2 * m + n + 2 - i) for i in range(1, m + 1)]
              + [(i, 3 * m + 2 * n + 3 - i) for i in range(m + 1, m + n + 2)], ell)
    d = _perm([(ell // 2, ell)], ell)
    return b, c, d


def _split_mn(ell: int, offset: int, m: int | None, n: int | None, m_min: int) -> tuple[int, int]:
    if ell % 2 or ell < offset + 2 * m_min:
        raise Inadmissible(f"degree {ell} does not fit the construction")
    half = (ell - offset) // 2
    if m is None and n is None:
        m = max(m_min, 1)
        if m > half:
            m = m_min
    if m is None:
        m = half - n
    if n is None:
        n = half - m
    if m < m_min or n < 0 or m + n != half:
        raise Inadmissible(f"m={m}, n={n} do not give degree {ell}")
    return m, n


def _generic_i11(ell: int, a: int, caps: Caps) -> tuple[Permutation, ...]:
    if a is None or a % 2 == 0 or not 0 < a < ell or math.gcd(a, ell) != 1:
        raise Inadmissible("I1.1 needs an odd a coprime to l with 0 < a < l")
    x1 = Permutation.from_cycles([list(range(ell))], ell)
    want = Partition.of([a, ell - a])
    x1_inv = x1.inverse()
    tried = 0
    for j in range(1, ell):
        tried += 1
        x3 = Permutation.from_cycles([[0, j]], ell)
        x2 = x1_inv * x3
        if Partition.of(x2.cycle_lengths()) == want:
            return (x1, x2, x3)
    raise CapExceeded(f"no tuple found after {tried} candidates")


def build_tuple(label: str, ell: int, a: int | None = None, m: int | None = None,
                n: int | None = None, caps: Caps | None = None) -> BuiltTuple:
    caps = caps or current_caps()
    if label in CONSTRUCTIONS:
        c = CONSTRUCTIONS[label]
        if ell % c.modulus != c.residue or ell < c.minimum:
            raise Inadmissible(f"{label} needs l = {c.residue} mod {c.modulus}, l >= {c.minimum}; got {ell}")
        cycles = tuple(_perm(x, ell) for x in c.build(ell))
        return BuiltTuple(label, ell, (), cycles, two_set_row(label, ell), c.normalization)
    if label == "I2.N1-witness":
        m, n = _split_mn(ell, 4, m, n, 0)
        b, c = i2n1_witness(m, n)
        cycles = (b, c, (b * c).inverse())
        return BuiltTuple(label, ell, (("m", m), ("n", n)), cycles, nonexistence_row("I2.N1", ell),
                          "bc is an l-cycle; tuple (b, c, (bc)^-1)")
    if label == "I2.N2-witness":
        m, n = _split_mn(ell, 2, m, n, 1)
        b, c, d = i2n2_witness(m, n)
        cycles = (d, c, b, (d * c * b).inverse())
        return BuiltTuple(label, ell, (("m", m), ("n", n)), cycles, nonexistence_row("I2.N2", ell),
                          "dcb is an l-cycle; tuple (d, c, b, (dcb)^-1)")
    if label == "I1.1-generic":
        cycles = _generic_i11(ell, a, caps)
        expected = RamificationData.of([[ell], [a, ell - a], [2] + [1] * (ell - 2)])
        return BuiltTuple(label, ell, (("a", a),), cycles, expected,
                          "x1 = (1, ..., l), x3 a transposition, x2 = x1^-1 x3^-1")
    raise ValueError(f"unknown label {label!r}; expected one of {', '.join(LABELS)}")


# ---------------------------------------------------------------------------
# Certification


@dataclass(frozen=True)
class Check:
    passed: bool
    detail: str

    def to_json(self):
        return {"pass": self.passed, "detail": self.detail}


@dataclass(frozen=True)
class CertReport:
    label: str
    ell: int
    checks: dict
    verdict: GroupVerdict | None
    tuple_text: tuple[str, ...] = ()
    normalization: str = ""

    def __post_init__(self):
        if (self.verdict is not None) != self.checks[TRANSITIVE].passed:
            raise ValueError("a verdict is present exactly when the tuple is transitive")

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks.values())

    def to_json(self):
        return {
            "label": self.label,
            "ell": self.ell,
            "checks": {k: self.checks[k].to_json() for k in CHECKS},
            "verdict": self.verdict.to_json() if self.verdict else None,
            "tuple": list(self.tuple_text),
            "normalization": self.normalization,
            "ok": self.ok,
        }


def certify(cycles, expected: RamificationData, label: str = "", caps: Caps | None = None) -> CertReport:
    """Run every check on a candidate tuple. ``cycles`` may be a BuiltTuple,
    a BranchTuple or a plain sequence of permutations."""
    caps = caps or current_caps()
    normalization = ""
    if isinstance(cycles, BuiltTuple):
        label = label or cycles.label
        normalization = cycles.normalization
        cycles = cycles.tuple
    elif isinstance(cycles, BranchTuple):
        cycles = cycles.cycles
    cycles = tuple(cycles)
    ell = cycles[0].degree
    checks = {}

    one = product_is_identity(cycles)
    checks[PRODUCT_ONE] = Check(one, "product is the identity" if one else "product is not the identity")

    got = RamificationData(ell, tuple(Partition.of(c.cycle_lengths()) for c in cycles))
    match = got == expected
    checks[CYCLE_TYPES_MATCH] = Check(match, f"tuple {got}; expected {expected}")

    g = GeneratorSet(ell, cycles)
    trans = is_transitive(g)
    checks[TRANSITIVE] = Check(trans, "one orbit" if trans else "several orbits")

    verdict = None
    if trans:
        prim = is_primitive(g)
        checks[PRIMITIVE] = Check(prim, "no nontrivial block" if prim else "a nontrivial block exists")
        verdict = classify_alternating(g, caps)
        alt = verdict.contains_alternating
        checks[CONTAINS_ALT] = Check(alt, f"{verdict.kind.value} via {verdict.method.value if verdict.method else 'none'}")
    else:
        checks[PRIMITIVE] = Check(False, "not transitive")
        checks[CONTAINS_ALT] = Check(False, "not transitive")

    rh = sum(ell - len(c.cycle_lengths()) for c in cycles)
    want = rh_genus(expected)
    if rh % 2:
        checks[GENUS_MATCH] = Check(False, f"odd ramification sum {rh}")
    else:
        genus = rh // 2 - ell + 1
        ok = want.ok and genus == want.genus
        shown = want.genus if want.ok else want.genus.value
        checks[GENUS_MATCH] = Check(ok, f"cover genus {genus}; expected {shown}")

    return CertReport(label, ell, checks, verdict, tuple(c.to_text() for c in cycles), normalization)


def certify_label(label: str, ell: int, a: int | None = None, caps: Caps | None = None) -> CertReport:
    built = build_tuple(label, ell, a=a, caps=caps)
    return certify(built, built.expected, caps=caps)


def certify_all(max_ell: int, caps: Caps | None = None) -> list[CertReport]:
    out = []
    for label in CONSTRUCTIONS:
        for ell in admissible_ells(label, max_ell):
            out.append(certify_label(label, ell, caps=caps))
    return out


def half_pairing(ell: int) -> list[list[int]]:
    if ell % 2:
        raise ValueError("the pairing i <-> i + l/2 needs even l")
    h = ell // 2
    return [[i, i + h] for i in range(h)]


def imprimitivity_witness(b, blocks: Sequence[Sequence[int]] | None = None) -> bool:
    """True iff every element of the tuple maps blocks to blocks; the default
    blocks pair i with i + l/2."""
    if isinstance(b, BuiltTuple):
        b = b.tuple
    elif isinstance(b, BranchTuple):
        b = b.cycles
    b = tuple(b)
    ell = b[0].degree
    blocks = half_pairing(ell) if blocks is None else blocks
    return preserves_partition(GeneratorSet(ell, b), blocks)


# ---------------------------------------------------------------------------
# Exhaustive search


def class_elements(e: Partition) -> Iterator[Permutation]:
    """Every permutation of cycle type ``e``, each exactly once."""
    n = e.degree
    need = dict(e.mult)
    images = [None] * n

    def place(free: list[int]):
        if not free:
            yield Permutation._trusted(tuple(images))
            return
        first, rest = free[0], free[1:]
        for r in sorted(need, reverse=True):
            if not need[r]:
                continue
            need[r] -= 1
            for others in itertools.permutations(rest, r - 1):
                cyc = (first,) + others
                for i, x in enumerate(cyc):
                    images[x] = cyc[(i + 1) % r]
                left = [x for x in rest if x not in others]
                yield from place(left)
            need[r] += 1

    yield from place(list(range(n)))


def centralizer_elements(x: Permutation) -> list[Permutation]:
    """All permutations commuting with x: rotate cycles and permute cycles
    of equal length."""
    n = x.degree
    by_len: dict[int, list[tuple[int, ...]]] = {}
    for c in x.cycles(include_fixed=True):
        by_len.setdefault(len(c), []).append(c)
    factors = []
    for r, cycs in by_len.items():
        options = []
        for order in itertools.permutations(range(len(cycs))):
            for shifts in itertools.product(range(r), repeat=len(cycs)):
                mapping = {}
                for src, (dst, s) in zip(cycs, zip(order, shifts)):
                    target = cycs[dst]
                    for i, pt in enumerate(src):
                        mapping[pt] = target[(i + s) % r]
                options.append(mapping)
        factors.append(options)
    out = []
    for combo in itertools.product(*factors):
        images = [0] * n
        for mapping in combo:
            for k, v in mapping.items():
                images[k] = v
        out.append(Permutation._trusted(tuple(images)))
    return out


@dataclass
class RefuteReport:
    data: RamificationData
    tuples: int = 0
    transitive: int = 0
    contains_alt: int = 0
    orders: set = field(default_factory=set)
    witness: tuple[str, ...] | None = None

    @property
    def verdict(self) -> str:
        return "EXISTS" if self.contains_alt else "NONEXISTENT"

    def to_json(self):
        return {
            "degree": self.data.degree,
            "branches": [b.compact() for b in self.data.branches],
            "tuples_enumerated": self.tuples,
            "transitive": self.transitive,
            "contains_alt": self.contains_alt,
            "group_orders": sorted(self.orders),
            "witness": list(self.witness) if self.witness else None,
            "verdict": self.verdict,
        }


_CENTRALIZER_LIMIT = 50_000


def exhaustive_refute(d: RamificationData, degree_cap: int | None = None, caps: Caps | None = None) -> RefuteReport:
    """Enumerate product-one tuples with the given cycle types, the first
    element fixed and the second taken up to conjugation by the first's
    centralizer, and record which ones generate a group containing A_l."""
    caps = caps or current_caps()
    cap = caps.search if degree_cap is None else degree_cap
    ell = d.degree
    if ell > cap:
        raise CapExceeded(f"degree {ell} exceeds search cap {cap}")
    branches = list(d.branches)
    if len(branches) < 2:
        raise ValueError("exhaustive search needs at least two branches")
    # Put the smallest class last so the determined element is the rarest.
    branches.sort(key=lambda e: _class_size(e), reverse=True)
    last = branches.pop()
    first = branches[0]
    middle = branches[1:]
    x1 = next(class_elements(first))
    cent = centralizer_elements(x1) if _centralizer_size(first) <= _CENTRALIZER_LIMIT else None
    report = RefuteReport(d)

    def finish(prefix: tuple[Permutation, ...]):
        acc = prefix[0]
        for p in prefix[1:]:
            acc = acc * p
        closing = acc.inverse()
        if Partition.of(closing.cycle_lengths()) != last:
            return
        tup = prefix + (closing,)
        report.tuples += 1
        g = GeneratorSet(ell, tup)
        if not is_transitive(g):
            return
        report.transitive += 1
        order = group_order(g, caps)
        report.orders.add(order)
        if order * 2 >= math.factorial(ell):
            report.contains_alt += 1
            if report.witness is None:
                report.witness = tuple(p.to_text() for p in tup)

    def extend(prefix: tuple[Permutation, ...], rest: list[Partition]):
        if not rest:
            finish(prefix)
            return
        for x in class_elements(rest[0]):
            extend(prefix + (x,), rest[1:])

    if not middle:
        finish((x1,))
        return report
    seen: set = set()
    for x2 in class_elements(middle[0]):
        if cent is not None:
            if x2.images in seen:
                continue
            for c in cent:
                seen.add((c.inverse() * x2 * c).images)
        extend((x1, x2), middle[1:])
    return report


def _centralizer_size(e: Partition) -> int:
    return math.prod(math.factorial(c) * v ** c for v, c in e.mult)


def _class_size(e: Partition) -> int:
    return math.factorial(e.degree) // _centralizer_size(e)
