"""Permutations and the small amount of permutation-group machinery the
verifications need.

Points are 0-indexed internally. Text I/O uses 1-indexed cycle notation such
as ``(1,2)(3,4,5)``. Products are read left to right: ``p * q`` first applies
``p`` and then ``q``, so ``(1,2)*(1,3) == (1,2,3)``.
"""

from __future__ import annotations

import enum
import math
import os
import random
import re
from dataclasses import dataclass, field, replace
from itertools import combinations, permutations as _tuples, product
from typing import Iterable, Sequence


class CapExceeded(ValueError):
    """Raised when a computation would exceed a configured size cap."""


@dataclass(frozen=True)
class Caps:
    chain_degree: int = 64
    induced_domain: int = 10**7
    search: int = 10

    def __post_init__(self):
        for name in ("chain_degree", "induced_domain", "search"):
            if getattr(self, name) <= 0:
                raise ValueError(f"cap {name} must be positive")


_CAP_KEYS = {
    "chain_degree": "chain_degree",
    "chain": "chain_degree",
    "induced_domain": "induced_domain",
    "induced": "induced_domain",
    "search": "search",
}


def parse_caps(text: str, base: Caps | None = None) -> Caps:
    """Parse ``key=value,key=value`` overrides on top of ``base``."""
    caps = base or Caps()
    updates = {}
    for item in filter(None, (s.strip() for s in text.split(","))):
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or key not in _CAP_KEYS:
            raise ValueError(f"bad cap override {item!r}")
        try:
            updates[_CAP_KEYS[key]] = int(value)
        except ValueError:
            raise ValueError(f"bad cap value in {item!r}") from None
    return replace(caps, **updates)


def current_caps() -> Caps:
    """Default caps, with overrides from the RAMCOVER_CAPS environment variable."""
    return parse_caps(os.environ.get("RAMCOVER_CAPS", ""))


# ---------------------------------------------------------------------------
# Permutation


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if not images:
            raise ValueError("a permutation needs a positive degree")
        if sorted(images) != list(range(len(images))):
            raise ValueError("images do not form a bijection")

    @classmethod
    def _trusted(cls, images: tuple[int, ...]) -> "Permutation":
        obj = object.__new__(cls)
        object.__setattr__(obj, "images", images)
        return obj

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        """Build from 0-indexed cycles. Cycles need not be disjoint; they are
        multiplied left to right."""
        result = list(range(degree))
        for cycle in cycles:
            cycle = list(cycle)
            if len(set(cycle)) != len(cycle):
                raise ValueError(f"repeated point in cycle {cycle}")
            for x in cycle:
                if not 0 <= x < degree:
                    raise ValueError(f"point {x + 1} outside degree {degree}")
            if len(cycle) < 2:
                continue
            step = {cycle[i]: cycle[(i + 1) % len(cycle)] for i in range(len(cycle))}
            result = [step.get(y, y) for y in result]
        return cls._trusted(tuple(result))

    @classmethod
    def parse(cls, text: str, degree: int | None = None) -> "Permutation":
        """Parse 1-indexed cycle notation. The degree defaults to the largest point."""
        cycles = parse_cycles(text)
        top = max((max(c) for c in cycles if c), default=1)
        if degree is None:
            degree = top
        elif top > degree:
            raise ValueError(f"point {top} exceeds degree {degree}")
        return cls.from_cycles([[x - 1 for x in c] for c in cycles], degree)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __pow__(self, k: int) -> "Permutation":
        return Permutation._trusted(_power(self.images, k))

    def inverse(self) -> "Permutation":
        return Permutation._trusted(_inverse(self.images))

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        return _cycles(self.images, include_fixed)

    def cycle_lengths(self) -> list[int]:
        return _cycle_lengths(self.images)

    def order(self) -> int:
        return math.lcm(*self.cycle_lengths())

    def is_even(self) -> bool:
        return sum(c - 1 for c in self.cycle_lengths()) % 2 == 0

    def to_text(self) -> str:
        return format_cycles(self.images)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"Permutation.parse({self.to_text()!r}, {self.degree})"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Left-to-right product: the result sends i to q(p(i))."""
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} vs {q.degree}")
    qi = q.images
    return Permutation._trusted(tuple(qi[x] for x in p.images))


def _mul(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    return tuple([q[x] for x in p])


def _inverse(p: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def _power(p: tuple[int, ...], k: int) -> tuple[int, ...]:
    n = len(p)
    out = list(range(n))
    for cycle in _cycles(p, True):
        c = len(cycle)
        shift = k % c
        for i, x in enumerate(cycle):
            out[x] = cycle[(i + shift) % c]
    return tuple(out)


def _cycles(p: Sequence[int], include_fixed: bool) -> list[tuple[int, ...]]:
    seen = bytearray(len(p))
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cycle = [start]
        seen[start] = 1
        x = p[start]
        while x != start:
            seen[x] = 1
            cycle.append(x)
            x = p[x]
        if include_fixed or len(cycle) > 1:
            out.append(tuple(cycle))
    return out


def _cycle_lengths(p: Sequence[int]) -> list[int]:
    seen = bytearray(len(p))
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = 1
            length += 1
            x = p[x]
        out.append(length)
    return out


def _is_identity(p: Sequence[int]) -> bool:
    return all(i == x for i, x in enumerate(p))


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str) -> list[list[int]]:
    """Parse ``(1,2)(3,4,5)`` into 1-indexed cycles. ``()`` is the identity."""
    compact = "".join(text.split())
    pos = 0
    cycles = []
    for m in _CYCLE_RE.finditer(compact):
        if m.start() != pos:
            raise ValueError(f"unexpected text {compact[pos:m.start()]!r} in cycle notation")
        pos = m.end()
        body = m.group(1)
        if not body:
            continue
        try:
            cycle = [int(tok) for tok in body.split(",")]
        except ValueError:
            raise ValueError(f"bad cycle {m.group(0)!r}") from None
        if any(x < 1 for x in cycle):
            raise ValueError(f"points are 1-indexed, got {m.group(0)!r}")
        cycles.append(cycle)
    if pos != len(compact) or not compact:
        raise ValueError(f"cannot parse cycle notation {text!r}")
    return cycles


def format_cycles(images: Sequence[int]) -> str:
    cycles = _cycles(images, False)
    if not cycles:
        return "()"
    return "".join("(" + ",".join(str(x + 1) for x in c) + ")" for c in cycles)


# ---------------------------------------------------------------------------
# Groups


@dataclass(frozen=True)
class GeneratorSet:
    degree: int
    gens: tuple[Permutation, ...]

    def __post_init__(self):
        gens = tuple(self.gens)
        object.__setattr__(self, "gens", gens)
        if not gens:
            raise ValueError("a generator set needs at least one generator")
        for g in gens:
            if g.degree != self.degree:
                raise ValueError(f"generator of degree {g.degree} in a degree-{self.degree} set")

    @classmethod
    def of(cls, gens: Iterable[Permutation]) -> "GeneratorSet":
        gens = tuple(gens)
        if not gens:
            raise ValueError("a generator set needs at least one generator")
        return cls(gens[0].degree, gens)

    @classmethod
    def parse(cls, texts: Iterable[str], degree: int | None = None) -> "GeneratorSet":
        texts = list(texts)
        if degree is None:
            degree = max(max((max(c) for c in parse_cycles(t) if c), default=1) for t in texts)
        return cls.of(Permutation.parse(t, degree) for t in texts)


class GroupKind(str, enum.Enum):
    SYMMETRIC = "SYMMETRIC"
    ALTERNATING = "ALTERNATING"
    PROPER_SUBGROUP = "PROPER_SUBGROUP"
    UNKNOWN = "UNKNOWN"


class VerdictMethod(str, enum.Enum):
    EXACT_ORDER = "EXACT_ORDER"
    JORDAN_CRITERION = "JORDAN_CRITERION"


@dataclass(frozen=True)
class GroupVerdict:
    kind: GroupKind
    method: VerdictMethod | None
    witness: Permutation | None = None
    order: int | None = None

    def __post_init__(self):
        if self.method is VerdictMethod.JORDAN_CRITERION and self.witness is None:
            raise ValueError("a Jordan verdict needs a witness")

    @property
    def contains_alternating(self) -> bool:
        return self.kind in (GroupKind.SYMMETRIC, GroupKind.ALTERNATING)

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "method": self.method.value if self.method else None,
            "order": self.order,
            "witness": self.witness.to_text() if self.witness else None,
        }


def orbits(g: GeneratorSet) -> list[list[int]]:
    """Orbits of the generated group, each sorted, ordered by least point."""
    return _orbits([p.images for p in g.gens], g.degree)


def _orbits(gens: Sequence[Sequence[int]], n: int) -> list[list[int]]:
    label = [-1] * n
    out = []
    for start in range(n):
        if label[start] >= 0:
            continue
        label[start] = len(out)
        orbit = [start]
        i = 0
        while i < len(orbit):
            x = orbit[i]
            i += 1
            for g in gens:
                y = g[x]
                if label[y] < 0:
                    label[y] = len(out)
                    orbit.append(y)
        out.append(sorted(orbit))
    return out


def is_transitive(g: GeneratorSet) -> bool:
    return len(orbits(g)) == 1


def _require_transitive(g: GeneratorSet):
    if not is_transitive(g):
        raise ValueError("the generated group is not transitive")


def block_system(g: GeneratorSet, a: int, b: int) -> list[frozenset[int]]:
    """The finest block system in which ``a`` and ``b`` share a block."""
    _require_transitive(g)
    n = g.degree
    if not (0 <= a < n and 0 <= b < n):
        raise ValueError("points outside the domain")
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    gens = [p.images for p in g.gens]
    pending = [(a, b)]
    while pending:
        x, y = pending.pop()
        rx, ry = find(x), find(y)
        if rx == ry:
            continue
        parent[ry] = rx
        for p in gens:
            pending.append((p[x], p[y]))
    classes: dict[int, list[int]] = {}
    for x in range(n):
        classes.setdefault(find(x), []).append(x)
    return sorted((frozenset(c) for c in classes.values()), key=min)


def minimal_block(g: GeneratorSet, a: int, b: int) -> frozenset[int]:
    """Smallest block of imprimitivity containing both ``a`` and ``b``."""
    for block in block_system(g, a, b):
        if a in block:
            return block
    raise AssertionError("unreachable")


def preserves_partition(g: GeneratorSet, blocks: Iterable[Iterable[int]]) -> bool:
    """True iff every generator maps each block onto some block."""
    blocks = [frozenset(b) for b in blocks]
    owner = {}
    for i, blk in enumerate(blocks):
        for x in blk:
            owner[x] = i
    if sorted(owner) != list(range(g.degree)):
        raise ValueError("blocks do not partition the domain")
    for p in g.gens:
        for blk in blocks:
            image = {owner[p(x)] for x in blk}
            if len(image) != 1 or len(blocks[image.pop()]) != len(blk):
                return False
    return True


def is_primitive(g: GeneratorSet) -> bool:
    _require_transitive(g)
    n = g.degree
    if n <= 2:
        return True
    covered = set()
    for b in range(1, n):
        if b in covered:
            continue
        block = minimal_block(g, 0, b)
        if len(block) < n:
            return False
        covered.add(b)
    return True


# ---------------------------------------------------------------------------
# Stabilizer chains


class _Chain:
    """Base and strong generating set with explicit transversals."""

    def __init__(self, n: int):
        self.n = n
        self.base: list[int] = []
        self.strong: list[tuple[int, ...]] = []
        self.level_gens: list[list[tuple[int, ...]]] = []
        self.trans: list[dict[int, tuple[int, ...]]] = []
        self.trans_inv: list[dict[int, tuple[int, ...]]] = []
        self.identity = tuple(range(n))

    def order(self) -> int:
        return math.prod(len(t) for t in self.trans)

    def _rebuild(self, level: int):
        beta = self.base[level]
        gens = [s for s in self.strong if all(s[b] == b for b in self.base[:level])]
        trans = {beta: self.identity}
        queue = [beta]
        for x in queue:
            ux = trans[x]
            for s in gens:
                y = s[x]
                if y not in trans:
                    trans[y] = _mul(ux, s)
                    queue.append(y)
        while len(self.trans) <= level:
            self.trans.append({})
            self.trans_inv.append({})
            self.level_gens.append([])
        self.level_gens[level] = gens
        self.trans[level] = trans
        self.trans_inv[level] = {x: _inverse(u) for x, u in trans.items()}

    def sift(self, g: tuple[int, ...], start: int = 0):
        for i in range(start, len(self.base)):
            x = g[self.base[i]]
            inv = self.trans_inv[i].get(x)
            if inv is None:
                return g, i
            g = _mul(g, inv)
        return g, len(self.base)


def _chain_from_gens(gens: Sequence[tuple[int, ...]], n: int, base: Sequence[int] = ()) -> _Chain:
    chain = _Chain(n)
    chain.base = list(base)
    chain.strong = [g for g in gens if not _is_identity(g)]
    for s in chain.strong:
        if all(s[b] == b for b in chain.base):
            chain.base.append(next(i for i, x in enumerate(s) if x != i))
    for j in range(len(chain.base)):
        chain._rebuild(j)
    return chain


def _complete(chain: _Chain):
    """Deterministic Schreier-Sims: make the chain complete."""
    i = len(chain.base) - 1
    while i >= 0:
        restart = None
        trans = chain.trans[i]
        for x, ux in list(trans.items()):
            for s in chain.level_gens[i]:
                y = s[x]
                h = _mul(_mul(ux, s), chain.trans_inv[i][y])
                if _is_identity(h):
                    continue
                res, j = chain.sift(h, i + 1)
                if j < len(chain.base) or not _is_identity(res):
                    chain.strong.append(res)
                    if j == len(chain.base):
                        chain.base.append(next(k for k, v in enumerate(res) if v != k))
                    for lvl in range(0, j + 1):
                        chain._rebuild(lvl)
                    restart = j
                    break
            if restart is not None:
                break
        if restart is not None:
            i = restart
        else:
            i -= 1
    return chain


class _ProductReplacement:
    def __init__(self, gens: Sequence[tuple[int, ...]], rng: random.Random):
        self.rng = rng
        state = list(gens)
        while len(state) < 10:
            state.append(state[len(state) % len(gens)])
        self.state = state
        self.acc = tuple(range(len(gens[0])))
        for _ in range(50):
            self.next()

    def next(self) -> tuple[int, ...]:
        st = self.state
        i, j = self.rng.sample(range(len(st)), 2)
        other = st[j] if self.rng.random() < 0.5 else _inverse(st[j])
        if self.rng.random() < 0.5:
            st[i] = _mul(st[i], other)
        else:
            st[i] = _mul(other, st[i])
        self.acc = _mul(self.acc, st[i])
        return self.acc


def group_order(g: GeneratorSet, caps: Caps | None = None, seed: int = 0) -> int:
    """Exact order of the generated group.

    A randomized chain is grown first; its order is always a lower bound. When
    that bound reaches the largest order the generators' parity allows, it is
    exact. Otherwise the chain is completed deterministically.
    """
    caps = caps or current_caps()
    n = g.degree
    if n > caps.chain_degree:
        raise CapExceeded(f"degree {n} exceeds the stabilizer-chain cap {caps.chain_degree}")
    gens = [p.images for p in g.gens if not p.is_identity()]
    if not gens:
        return 1
    ceiling = math.factorial(n)
    if all(Permutation._trusted(p).is_even() for p in gens):
        ceiling //= 2
    chain = _Chain(n)
    rng = random.Random(seed)
    pr = _ProductReplacement(gens, rng)
    for p in gens:
        _sift_in(chain, p)
    misses = 0
    while chain.order() < ceiling and misses < 40:
        if _sift_in(chain, pr.next()):
            misses = 0
        else:
            misses += 1
    if chain.order() == ceiling:
        return ceiling
    chain = _chain_from_gens(chain.strong + gens, n, chain.base)
    _complete(chain)
    return chain.order()


def _sift_in(chain: _Chain, p: tuple[int, ...]) -> bool:
    res, j = chain.sift(p)
    if j == len(chain.base) and _is_identity(res):
        return False
    chain.strong.append(res)
    if j == len(chain.base):
        chain.base.append(next(k for k, v in enumerate(res) if v != k))
    for lvl in range(0, j + 1):
        chain._rebuild(lvl)
    return True


# ---------------------------------------------------------------------------
# Alternating-group recognition


def _prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % q for q in range(2, math.isqrt(n) + 1))


def is_jordan_type(lengths: Sequence[int], degree: int) -> bool:
    """Cycle types that force A_n inside any primitive group containing them:
    a p-cycle with p prime and p < n-2, a 3-cycle, or a double transposition
    when n >= 9."""
    moved = sorted(c for c in lengths if c > 1)
    if len(moved) == 1:
        p = moved[0]
        return p == 3 or (_prime(p) and p < degree - 2)
    return moved == [2, 2] and degree >= 9


def _divisors(n: int) -> list[int]:
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def _jordan_power(p: tuple[int, ...]) -> int | None:
    lengths = _cycle_lengths(p)
    n = len(p)
    order = math.lcm(*lengths)
    for k in _divisors(order):
        powered = []
        for c in lengths:
            q = math.gcd(c, k)
            powered.extend([c // q] * q)
        if is_jordan_type(powered, n):
            return k
    return None


def jordan_witness(g: GeneratorSet, depth: int = 3) -> Permutation | None:
    """Search powers of short words in the generators for a Jordan element."""
    gens = [p.images for p in g.gens]
    for length in range(1, depth + 1):
        for word in product(range(len(gens)), repeat=length):
            w = gens[word[0]]
            for idx in word[1:]:
                w = _mul(w, gens[idx])
            k = _jordan_power(w)
            if k is not None:
                return Permutation._trusted(_power(w, k))
    return None


def classify_alternating(
    g: GeneratorSet,
    caps: Caps | None = None,
    depth: int = 3,
    route: VerdictMethod | None = None,
) -> GroupVerdict:
    """Decide whether the group is S_n, A_n, or a proper subgroup.

    The exact-order route is used when the degree is within the chain cap,
    unless ``route`` forces one route.
    """
    caps = caps or current_caps()
    _require_transitive(g)
    n = g.degree
    even = all(p.is_even() for p in g.gens)
    use_exact = route is VerdictMethod.EXACT_ORDER or (route is None and n <= caps.chain_degree)
    if use_exact:
        order = group_order(g, caps)
        full = math.factorial(n)
        if order == full:
            kind = GroupKind.SYMMETRIC
        elif 2 * order == full:
            kind = GroupKind.ALTERNATING
        else:
            kind = GroupKind.PROPER_SUBGROUP
        return GroupVerdict(kind, VerdictMethod.EXACT_ORDER, None, order)
    if not is_primitive(g):
        return GroupVerdict(GroupKind.PROPER_SUBGROUP, None, None, None)
    witness = jordan_witness(g, depth)
    if witness is None:
        return GroupVerdict(GroupKind.UNKNOWN, None, None, None)
    kind = GroupKind.ALTERNATING if even else GroupKind.SYMMETRIC
    return GroupVerdict(kind, VerdictMethod.JORDAN_CRITERION, witness, None)


# ---------------------------------------------------------------------------
# Induced actions


def tset_rank(subset: Sequence[int]) -> int:
    """Colexicographic rank of a sorted subset."""
    return sum(math.comb(c, i + 1) for i, c in enumerate(subset))


def tsets(degree: int, t: int) -> list[tuple[int, ...]]:
    """All t-subsets of range(degree) in colexicographic order."""
    return sorted(combinations(range(degree), t), key=lambda s: s[::-1])


def _check_domain(size: int, caps: Caps | None):
    caps = caps or current_caps()
    if size > caps.induced_domain:
        raise CapExceeded(f"induced domain of size {size} exceeds cap {caps.induced_domain}")


def induced_on_tsets(p: Permutation, t: int, caps: Caps | None = None) -> Permutation:
    n = p.degree
    if not 1 <= t <= n:
        raise ValueError(f"t={t} must lie in 1..{n}")
    _check_domain(math.comb(n, t), caps)
    img = p.images
    if t == 2:
        out = []
        for j in range(1, n):
            for i in range(j):
                x, y = img[i], img[j]
                if x > y:
                    x, y = y, x
                out.append(y * (y - 1) // 2 + x)
        return Permutation._trusted(tuple(out))
    return Permutation._trusted(
        tuple(tset_rank(sorted(img[x] for x in s)) for s in tsets(n, t))
    )


def induced_on_ttuples(p: Permutation, t: int, caps: Caps | None = None) -> Permutation:
    """Action on ordered t-tuples of distinct points, tuples in lexicographic order."""
    n = p.degree
    if not 1 <= t <= n:
        raise ValueError(f"t={t} must lie in 1..{n}")
    _check_domain(math.perm(n, t), caps)
    domain = list(_tuples(range(n), t))
    index = {u: i for i, u in enumerate(domain)}
    img = p.images
    return Permutation._trusted(tuple(index[tuple(img[x] for x in u)] for u in domain))


def orbit_count_on_tsets(g: GeneratorSet, t: int, caps: Caps | None = None) -> int:
    induced = [induced_on_tsets(p, t, caps).images for p in g.gens]
    return len(_orbits(induced, math.comb(g.degree, t)))


def cycle_count_on_tsets(p: Permutation, t: int, caps: Caps | None = None) -> int:
    return len(_cycle_lengths(induced_on_tsets(p, t, caps).images))


def cycle_count_on_ttuples(p: Permutation, t: int, caps: Caps | None = None) -> int:
    return len(_cycle_lengths(induced_on_ttuples(p, t, caps).images))
