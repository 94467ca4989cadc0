"""Partitions, ramification data and Riemann-Hurwitz arithmetic."""

from __future__ import annotations

import csv
import enum
import io
import json
import re
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence


class InputError(ValueError):
    """Malformed user input. ``line`` and ``token`` locate the problem."""

    def __init__(self, message: str, line: int | None = None, token: str | None = None):
        self.message = message
        self.line = line
        self.token = token
        where = []
        if line is not None:
            where.append(f"line {line}")
        if token is not None:
            where.append(f"token {token!r}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)


@dataclass(frozen=True, eq=False)
class Partition:
    """A partition of ``degree``, stored as (value, count) pairs with values
    descending. ``parts`` expands it."""

    degree: int
    mult: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("degree must be positive")
        merged = Counter()
        for value, count in self.mult:
            if value < 1 or count < 0:
                raise ValueError(f"bad part {value}^{count}")
            if count:
                merged[value] += count
        mult = tuple(sorted(merged.items(), reverse=True))
        total = sum(v * c for v, c in mult)
        if total != self.degree:
            raise ValueError(f"parts sum to {total}, not {self.degree}")
        object.__setattr__(self, "mult", mult)

    @classmethod
    def of(cls, parts: Iterable[int]) -> "Partition":
        counts = Counter(parts)
        return cls(sum(v * c for v, c in counts.items()), tuple(counts.items()))

    @classmethod
    def from_mult(cls, mult: Iterable[tuple[int, int]]) -> "Partition":
        mult = tuple(mult)
        return cls(sum(v * c for v, c in mult), mult)

    @classmethod
    def trivial(cls, degree: int) -> "Partition":
        return cls(degree, ((1, degree),))

    @cached_property
    def parts(self) -> tuple[int, ...]:
        return tuple(v for v, c in self.mult for _ in range(c))

    def __len__(self):
        return sum(c for _, c in self.mult)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.mult == other.mult

    def __hash__(self):
        return hash(self.mult)

    def sort_key(self):
        return self.mult

    def count(self, value: int) -> int:
        return dict(self.mult).get(value, 0)

    def is_trivial(self) -> bool:
        return self.mult == ((1, self.degree),)

    def rh_contribution(self) -> int:
        """Sum of (part - 1), i.e. degree minus the number of parts."""
        return self.degree - len(self)

    def compact(self) -> str:
        return ",".join(str(v) if c == 1 else f"{v}^{c}" for v, c in self.mult)

    def __str__(self):
        return "[" + self.compact() + "]"

    def __repr__(self):
        return f"Partition({self})"


class GenusMarker(str, enum.Enum):
    NOT_INTEGRAL = "NOT_INTEGRAL"
    NEGATIVE = "NEGATIVE"


@dataclass(frozen=True)
class GenusResult:
    genus: int | GenusMarker
    rh_sum: int

    @property
    def ok(self) -> bool:
        return isinstance(self.genus, int) and not isinstance(self.genus, GenusMarker)

    def to_json(self):
        return self.genus.value if isinstance(self.genus, GenusMarker) else self.genus


@dataclass(frozen=True)
class RamificationData:
    """A degree and a canonically sorted multiset of nontrivial partitions."""

    degree: int
    branches: tuple[Partition, ...]

    def __post_init__(self):
        for b in self.branches:
            if b.degree != self.degree:
                raise ValueError(f"branch {b} has degree {b.degree}, expected {self.degree}")
        kept = tuple(sorted((b for b in self.branches if not b.is_trivial()),
                            key=Partition.sort_key, reverse=True))
        object.__setattr__(self, "branches", kept)

    @classmethod
    def of(cls, branches: Iterable[Sequence[int] | Partition]) -> "RamificationData":
        parts = [b if isinstance(b, Partition) else Partition.of(b) for b in branches]
        if not parts:
            raise ValueError("cannot infer the degree of empty data")
        return cls(parts[0].degree, tuple(parts))

    def rh_sum(self) -> int:
        return sum(b.rh_contribution() for b in self.branches)

    def to_json(self) -> dict:
        return {"degree": self.degree, "branches": [list(b.parts) for b in self.branches]}

    def compact(self) -> str:
        return ", ".join(str(b) for b in self.branches)

    def __str__(self):
        return self.compact() or "(unramified)"


def rh_genus(d: RamificationData, base_genus: int = 0) -> GenusResult:
    """Solve 2(g - n*g_base + n - 1) = sum over branches of (n - #parts) for g."""
    if base_genus < 0:
        raise ValueError("base genus must be nonnegative")
    s = d.rh_sum()
    if s % 2:
        return GenusResult(GenusMarker.NOT_INTEGRAL, s)
    g = s // 2 + d.degree * base_genus - d.degree + 1
    if g < 0:
        return GenusResult(GenusMarker.NEGATIVE, s)
    return GenusResult(g, s)


def total_parity(d: RamificationData) -> str:
    """'even' or 'odd'. Odd means no product-one tuple has these cycle types."""
    return "odd" if d.rh_sum() % 2 else "even"


# ---------------------------------------------------------------------------
# Compact grammar: item := INT | INT '^' INT | INT '^*', comma separated.

_ITEM_RE = re.compile(r"^(\d+)(?:\^(\d+|\*))?$")


def parse_items(compact: str) -> tuple[list[tuple[int, int]], int | None]:
    """Split compact text into explicit (value, count) items and an optional
    starred value."""
    text = "".join(compact.split())
    if text.startswith("[") and text.endswith("]"):
        text = text[1:-1]
    if not text:
        raise InputError("empty partition", token=compact)
    items: list[tuple[int, int]] = []
    star = None
    for tok in text.split(","):
        m = _ITEM_RE.match(tok)
        if not m:
            raise InputError("expected INT, INT^INT or INT^*", token=tok)
        value = int(m.group(1))
        if value < 1:
            raise InputError("parts must be positive", token=tok)
        if m.group(2) == "*":
            if star is not None:
                raise InputError("at most one starred item", token=tok)
            star = value
        elif m.group(2) is None:
            items.append((value, 1))
        else:
            items.append((value, int(m.group(2))))
    return items, star


def expand_star(compact: str, degree: int) -> Partition:
    """Expand compact notation into an explicit partition of ``degree``."""
    items, star = parse_items(compact)
    used = sum(v * c for v, c in items)
    if used > degree:
        raise InputError(f"parts sum to {used}, exceeding degree {degree}", token=compact)
    rest = degree - used
    if star is None:
        if rest:
            raise InputError(f"parts sum to {used}, not {degree}", token=compact)
    else:
        if rest % star:
            raise InputError(f"remainder {rest} is not divisible by {star}", token=f"{star}^*")
        items.append((star, rest // star))
    return Partition(degree, tuple(items))


def parse_partition(compact: str, degree: int | None = None) -> Partition:
    """Compact text without a degree is read as explicit parts."""
    if degree is not None:
        return expand_star(compact, degree)
    items, star = parse_items(compact)
    if star is not None:
        raise InputError("a starred item needs a known degree", token=f"{star}^*")
    return Partition.from_mult(items)


# ---------------------------------------------------------------------------
# JSON and CSV


def _element_lines(text: str, key: str) -> list[int]:
    """Line numbers of the top-level elements of the array under ``key``."""
    m = re.search(r'"%s"\s*:\s*\[' % re.escape(key), text)
    if not m:
        return []
    lines = []
    depth = 0
    in_str = False
    expecting = True
    i = m.end()
    while i < len(text):
        ch = text[i]
        if in_str:
            if ch == "\\":
                i += 1
            elif ch == '"':
                in_str = False
        elif ch == '"':
            if depth == 0 and expecting:
                lines.append(text.count("\n", 0, i) + 1)
                expecting = False
            in_str = True
        elif ch in "[{":
            if depth == 0 and expecting:
                lines.append(text.count("\n", 0, i) + 1)
                expecting = False
            depth += 1
        elif ch in "]}":
            if depth == 0:
                break
            depth -= 1
        elif ch == "," and depth == 0:
            expecting = True
        elif not ch.isspace() and depth == 0 and expecting:
            lines.append(text.count("\n", 0, i) + 1)
            expecting = False
        i += 1
    return lines


def data_from_json_text(text: str) -> RamificationData:
    """Read ``{"degree": INT, "branches": [...]}``. Each branch is a list of
    integers or a compact-grammar string."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        bad = text.splitlines()[exc.lineno - 1][exc.colno - 1:exc.colno + 9] if text.splitlines() else ""
        raise InputError(exc.msg, line=exc.lineno, token=bad) from None
    if not isinstance(obj, dict):
        raise InputError("top level must be an object", line=1)
    degree = obj.get("degree")
    if not isinstance(degree, int) or isinstance(degree, bool) or degree < 1:
        line = _key_line(text, "degree")
        raise InputError("degree must be a positive integer", line=line, token=json.dumps(degree))
    branches = obj.get("branches")
    if not isinstance(branches, list):
        raise InputError("branches must be an array", line=_key_line(text, "branches"), token="branches")
    lines = _element_lines(text, "branches")
    parts = []
    for i, b in enumerate(branches):
        line = lines[i] if i < len(lines) else None
        try:
            if isinstance(b, str):
                parts.append(expand_star(b, degree))
            elif isinstance(b, list) and b and all(isinstance(x, int) and not isinstance(x, bool) and x > 0 for x in b):
                p = Partition.of(b)
                if p.degree != degree:
                    raise InputError(f"parts sum to {p.degree}, not {degree}")
                parts.append(p)
            else:
                raise InputError("branch must be a nonempty list of positive integers or compact text")
        except InputError as exc:
            raise InputError(exc.message, line=line, token=exc.token or json.dumps(b)) from None
    return RamificationData(degree, tuple(parts))


def _key_line(text: str, key: str) -> int | None:
    m = re.search(r'"%s"' % re.escape(key), text)
    return text.count("\n", 0, m.start()) + 1 if m else None


def read_data(path) -> RamificationData:
    with open(path, encoding="utf-8") as fh:
        return data_from_json_text(fh.read())


def data_to_json_text(d: RamificationData) -> str:
    return json.dumps(d.to_json(), sort_keys=True)


CSV_COLUMNS = ("label", "degree", "partition")


def to_csv(rows: Iterable[tuple[str, RamificationData]]) -> str:
    """One row per branch: label, degree, compact partition."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for label, d in rows:
        for b in d.branches:
            writer.writerow((label, d.degree, b.compact()))
    return buf.getvalue()


def from_csv(text: str) -> list[tuple[str, RamificationData]]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if tuple(header or ()) != CSV_COLUMNS:
        raise InputError(f"expected header {','.join(CSV_COLUMNS)}", line=1)
    grouped: dict[str, tuple[int, list[Partition]]] = {}
    for lineno, row in enumerate(reader, start=2):
        if len(row) != 3:
            raise InputError("expected 3 columns", line=lineno, token=",".join(row))
        label, degree, compact = row
        try:
            n = int(degree)
        except ValueError:
            raise InputError("degree must be an integer", line=lineno, token=degree) from None
        try:
            part = expand_star(compact, n)
        except InputError as exc:
            raise InputError(exc.message, line=lineno, token=exc.token) from None
        grouped.setdefault(label, (n, []))[1].append(part)
    return [(label, RamificationData(n, tuple(ps))) for label, (n, ps) in grouped.items()]
