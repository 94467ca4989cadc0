"""Generation of the ramification tables from per-row templates.

Templates use the compact grammar with symbolic bases and exponents in ``l``
(the degree), ``a`` and ``p``. Expressions allow integers, + - * / and
parentheses and are evaluated exactly; a row is admissible at ``l`` when every
exponent is a nonnegative integer and every part a positive integer.
"""

from __future__ import annotations

import ast
import functools
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .induced import lift_table_entry
from .ramdata import InputError, Partition, RamificationData, expand_star

MIN_DEGREE = 13

# Claim flags
GENUS0_X2 = "GENUS0_X2"
NONEXISTENT = "NONEXISTENT"
SOLVABLE_MONODROMY = "SOLVABLE_MONODROMY"


def _thrice(t):
    return [t] * 3


TWO_SET_ROWS: list[tuple[str, list[str]]] = [
    ("I1.1", ["l", "a,l-a", "1^(l-2),2"]),
    ("I2.1", ["l", "1^3,2^((l-3)/2)", "1,2^((l-1)/2)", "1^(l-2),2"]),
    ("I2.2", ["l", "1^2,2^((l-2)/2)", "1^2,2^((l-2)/2)", "1^(l-2),2"]),
    ("I2.3", ["l", "1^3,2^((l-3)/2)", "2^((l-3)/2),3"]),
    ("I2.4", ["l", "1^2,2^((l-2)/2)", "1,2^((l-4)/2),3"]),
    ("I2.5", ["l", "1,2^((l-1)/2)", "1^2,2^((l-5)/2),3"]),
    ("I2.6", ["l", "1^3,2^((l-3)/2)", "1,2^((l-5)/2),4"]),
    ("I2.7", ["l", "1^2,2^((l-2)/2)", "1^2,2^((l-6)/2),4"]),
    ("I2.8", ["l", "1,2^((l-1)/2)", "1^3,2^((l-7)/2),4"]),
    ("I2.9", ["a,l-a", "1^2,2^((l-2)/2)", "2^(l/2)", "1^(l-2),2"]),
    ("I2.10", ["a,l-a", "1,2^((l-1)/2)", "1,2^((l-1)/2)", "1^(l-2),2"]),
    ("I2.11", ["a,l-a", "2^(l/2)", "1^2,2^((l-6)/2),4"]),
    ("I2.12", ["a,l-a", "1,2^((l-1)/2)", "1,2^((l-5)/2),4"]),
    ("I2.13", ["a,l-a", "1^2,2^((l-2)/2)", "2^((l-4)/2),4"]),
    ("I2.14", ["a,l-a", "1,2^((l-1)/2)", "2^((l-3)/2),3"]),
    ("I2.15", ["a,l-a", "2^(l/2)", "1,2^((l-4)/2),3"]),
    ("F1.1", ["1^(l-2),2", "2^(l/2)"] + _thrice("1^2,2^((l-2)/2)")),
    ("F1.2", ["1^(l-2),2", "1^3,2^((l-3)/2)"] + _thrice("1,2^((l-1)/2)")),
    ("F1.3", ["1^3,2^((l-3)/2)", "2^((l-3)/2),3"] + ["1,2^((l-1)/2)"] * 2),
    ("F1.4", ["2^(l/2)", "1,2^((l-4)/2),3"] + ["1^2,2^((l-2)/2)"] * 2),
    ("F1.5", ["1^2,2^((l-5)/2),3"] + _thrice("1,2^((l-1)/2)")),
    ("F1.6", ["1^3,2^((l-3)/2)", "1,2^((l-5)/2),4"] + ["1,2^((l-1)/2)"] * 2),
    ("F1.7", ["2^(l/2)", "1^2,2^((l-6)/2),4"] + ["1^2,2^((l-2)/2)"] * 2),
    ("F1.8", ["1^3,2^((l-7)/2),4"] + _thrice("1,2^((l-1)/2)")),
    ("F1.9", ["2^((l-4)/2),4"] + _thrice("1^2,2^((l-2)/2)")),
    ("F3.1", ["1^2,2^((l-2)/2)", "1,3,4^((l-4)/4)", "4^(l/4)"]),
    ("F3.2", ["1,2^((l-1)/2)", "1,4^((l-1)/4)", "2,3,4^((l-5)/4)"]),
    ("F3.3", ["1,2^((l-1)/2)", "1,2,4^((l-3)/4)", "3,4^((l-3)/4)"]),
    ("F4.1", ["1^2,2^((l-2)/2)", "1,2,3^((l-3)/3)", "6^(l/6)"]),
    ("F4.2", ["1^2,2^((l-2)/2)", "2,3^((l-2)/3)", "2,6^((l-2)/6)"]),
    ("F4.3", ["1,2^((l-1)/2)", "1,3^((l-1)/3)", "3,4,6^((l-7)/6)"]),
    ("F4.4", ["1,2^((l-1)/2)", "1,2,3^((l-3)/3)", "3,6^((l-3)/6)"]),
    ("F4.5", ["1^2,2^((l-2)/2)", "1,3^((l-1)/3)", "4,6^((l-4)/6)"]),
    ("F4.6", ["1,2^((l-1)/2)", "2,3^((l-2)/3)", "2,3,6^((l-5)/6)"]),
]

# Lifted rows at degree l(l-1)/2. I2.13 and F1.9 have no row of their own:
# their lifts coincide with those of I2.11 and F1.7.
F_ROWS: list[tuple[str, list[str]]] = [
    ("I1.1a", ["l^*", "a*(l-a),a^((a-1)/2),(l-a)/2,(l-a)^*", "2^(l-2),1^*"]),
    ("I1.1b", ["l/2,l^*", "a*(l-a),a^((a-1)/2),(l-a)^*", "2^(l-2),1^*"]),
    ("I2.1", ["l^*", "1^((l+3)/2),2^*", "1^((l-1)/2),2^*", "2^(l-2),1^*"]),
    ("I2.2", ["l/2,l^*", "1^(l/2),2^*", "1^(l/2),2^*", "2^(l-2),1^*"]),
    ("I2.3", ["l^*", "1^((l+3)/2),2^*", "3,1^((l-3)/2),6^((l-3)/2),2^*"]),
    ("I2.4", ["l/2,l^*", "1^(l/2),2^*", "3^2,1^((l-4)/2),6^((l-4)/2),2^*"]),
    ("I2.5", ["l^*", "1^((l-1)/2),2^*", "3^3,1^((l-3)/2),6^((l-5)/2),2^*"]),
    ("I2.6", ["l^*", "1^((l+3)/2),2^*", "1^((l-5)/2),4^(l-3),2^*"]),
    ("I2.7", ["l/2,l^*", "1^(l/2),2^*", "1^((l-4)/2),4^(l-3),2^*"]),
    ("I2.8", ["l^*", "1^((l-1)/2),2^*", "1^((l-1)/2),4^(l-3),2^*"]),
    ("I2.9", ["a*(l-a),a^((a-1)/2),(l-a)^*", "1^(l/2),2^*", "1^(l/2),2^*", "2^(l-2),1^*"]),
    ("I2.10", ["a*(l-a),a^((a-1)/2),(l-a)/2,(l-a)^*", "1^((l-1)/2),2^*", "1^((l-1)/2),2^*", "2^(l-2),1^*"]),
    ("I2.11", ["a*(l-a),a^((a-1)/2),(l-a)^*", "1^(l/2),2^*", "1^((l-4)/2),4^(l-3),2^*"]),
    ("I2.12", ["a*(l-a),a^((a-1)/2),(l-a)/2,(l-a)^*", "1^((l-1)/2),2^*", "1^((l-5)/2),4^(l-3),2^*"]),
    ("I2.14", ["a*(l-a),a^((a-1)/2),(l-a)/2,(l-a)^*", "1^((l-1)/2),2^*", "3,1^((l-3)/2),6^((l-3)/2),2^*"]),
    ("I2.15", ["a*(l-a),a^((a-1)/2),(l-a)^*", "1^(l/2),2^*", "3^2,1^((l-4)/2),6^((l-4)/2),2^*"]),
    ("F1.1", ["2^(l-2),1^*"] + ["1^(l/2),2^*"] * 4),
    ("F1.2", ["2^(l-2),1^*", "1^((l+3)/2),2^*"] + _thrice("1^((l-1)/2),2^*")),
    ("F1.3", ["1^((l+3)/2),2^*", "3,1^((l-3)/2),6^((l-3)/2),2^*"] + ["1^((l-1)/2),2^*"] * 2),
    ("F1.4", _thrice("1^(l/2),2^*") + ["3^2,1^((l-4)/2),6^((l-4)/2),2^*"]),
    ("F1.5", ["3^3,1^((l-3)/2),6^((l-5)/2),2^*"] + _thrice("1^((l-1)/2),2^*")),
    ("F1.6", ["1^((l+3)/2),2^*", "1^((l-5)/2),4^(l-3),2^*"] + ["1^((l-1)/2),2^*"] * 2),
    ("F1.7", ["1^((l-4)/2),4^(l-3),2^*"] + _thrice("1^(l/2),2^*")),
    ("F1.8", ["1^((l-1)/2),4^(l-3),2^*"] + _thrice("1^((l-1)/2),2^*")),
    ("F3.1", ["1^(l/2),2^*", "3^2,2^((l-4)/4),12^((l-4)/4),4^*", "2^(l/4),4^*"]),
    ("F3.2", ["1^((l-1)/2),2^*", "2^((l-1)/4),4^*", "1,3,6,2^((l-5)/4),12^((l-5)/4),4^*"]),
    ("F3.3", ["1^((l-1)/2),2^*", "1,2^((l+1)/4),4^*", "3,2^((l-3)/4),12^((l-3)/4),4^*"]),
    ("F4.1", ["1^(l/2),2^*", "1,2,6^((l-3)/3),3^*", "3^(l/6),6^*"]),
    ("F4.2", ["1^(l/2),2^*", "1,6^((l-2)/3),3^*", "1,3^((l-2)/6),6^*"]),
    ("F4.3", ["1^((l-1)/2),2^*", "3^*", "2,4,3^((l-1)/6),12^((l-4)/3),6^*"]),
    ("F4.4", ["1^((l-1)/2),2^*", "1,2,6^((l-3)/3),3^*", "3^((l+3)/6),6^*"]),
    ("F4.5", ["1^(l/2),2^*", "3^*", "2,4,3^((l-4)/6),12^((l-4)/3),6^*"]),
    ("F4.6", ["1^((l-1)/2),2^*", "1,6^((l-2)/3),3^*", "1,3^((l+1)/6),6^*"]),
]

F_COLLAPSE = {"I2.13": "I2.11", "F1.9": "F1.7"}

NONEXISTENCE_ROWS: list[tuple[str, list[str]]] = [
    ("F1.N1", ["1^2,2^((l-2)/2)"] + _thrice("2^(l/2)") + ["2,1^(l-2)"]),
    ("F1.N2", ["1,3,2^((l-4)/2)"] + _thrice("2^(l/2)")),
    ("F1.N3", ["1^2,4,2^((l-6)/2)"] + _thrice("2^(l/2)")),
    ("F1.N4", ["4,2^((l-4)/2)", "1^2,2^((l-2)/2)", "2^(l/2)", "2^(l/2)"]),
    ("F4.N1", ["2^(l/2)", "2,3^((l-2)/3)", "1^2,6^((l-2)/6)"]),
    ("I2.N1", ["l", "4,2^((l-4)/2)", "2^(l/2)"]),
    ("I2.N2", ["l", "2^(l/2)", "2^(l/2)", "2,1^(l-2)"]),
]

# Three-branch types over (2,3,6)-points ruled out by the decomposability
# filter: the first three by condition 2, the next four by condition 3; the
# last one is F4.N1.
NON236_ROWS: list[tuple[str, list[str], int | None]] = [
    ("N236.1", ["2^(l/2)", "3^(l/3)", "1^2,4,6^((l-6)/6)"], 2),
    ("N236.2", ["1^2,2^((l-2)/2)", "3^(l/3)", "2,4,6^((l-6)/6)"], 2),
    ("N236.3", ["1,2^((l-1)/2)", "3^(l/3)", "2,3,4,6^((l-9)/6)"], 2),
    ("N236.4", ["2^(l/2)", "1,2,3^((l-3)/3)", "3^2,6^((l-6)/6)"], 3),
    ("N236.5", ["2^(l/2)", "1,3^((l-1)/3)", "3^2,4,6^((l-10)/6)"], 3),
    ("N236.6", ["2^(l/2)", "2,3^((l-2)/3)", "2,3^2,6^((l-8)/6)"], 3),
    ("N236.7", ["2^(l/2)", "3^(l/3)", "2,3^2,4,6^((l-12)/6)"], 3),
    ("N236.8", ["2^(l/2)", "2,3^((l-2)/3)", "1^2,6^((l-2)/6)"], None),
]


@dataclass(frozen=True)
class SolvableRow:
    label: str
    templates: tuple[str, ...]
    closure_genus: int
    group: str
    solvable: bool
    condition: str       # "prime", "square:<p mod>", or "degree:<n>"


SOLVABLE_ROWS: list[SolvableRow] = [
    SolvableRow("A1", ("l", "l"), 0, "C_l", True, "prime"),
    SolvableRow("A2", ("1,2^((l-1)/2)", "1,2^((l-1)/2)", "l"), 0, "D_{2l}", True, "prime"),
    SolvableRow("A3", ("1^2,2^4", "1,3^3", "5^2"), 0, "A5", False, "degree:10"),
    SolvableRow("A4", ("1^2,2^2", "3^2", "1,5"), 0, "A5", False, "degree:6"),
    SolvableRow("A5", ("1,2^2", "1^2,3", "5"), 0, "A5", False, "degree:5"),
    SolvableRow("A6", ("1^2,2", "1,3", "4"), 0, "S4", True, "degree:4"),
    SolvableRow("A7", ("2^2", "1,3", "1,3"), 0, "A4", True, "degree:4"),
    SolvableRow("E1", ("1,2^((l-1)/2)",) * 4, 1, "D_{2l}", True, "prime"),
    SolvableRow("E2", ("1,3^((l-1)/3)",) * 3, 1, "C_l:C_3", True, "prime"),
    SolvableRow("E3", ("1,3^((l-1)/3)",) * 3, 1, "C_p^2:C_3", True, "square:2 mod 3"),
    SolvableRow("E4", ("1,2^((l-1)/2)", "1,4^((l-1)/4)", "1,4^((l-1)/4)"), 1, "C_l:C_4", True, "prime"),
    SolvableRow("E5", ("1,2^((l-1)/2)", "1,4^((l-1)/4)", "1,4^((l-1)/4)"), 1, "C_p^2:C_4", True, "square:3 mod 4"),
    SolvableRow("E6", ("1,2^((l-1)/2)", "1,3^((l-1)/3)", "1,6^((l-1)/6)"), 1, "C_l:C_6", True, "prime"),
    SolvableRow("E7", ("1,2^((l-1)/2)", "1,3^((l-1)/3)", "1,6^((l-1)/6)"), 1, "C_p^2:C_6", True, "square:5 mod 6"),
    SolvableRow("Q1", ("2",) * 4, 1, "C2", True, "degree:2"),
    SolvableRow("Q2", ("3",) * 3, 1, "C3", True, "degree:3"),
]


@dataclass(frozen=True)
class TableEntry:
    label: str
    params: tuple[tuple[str, int], ...]
    data: RamificationData
    claims: frozenset[str] = frozenset()
    aliases: tuple[str, ...] = ()
    note: str = ""

    @property
    def ell(self) -> int:
        return dict(self.params)["l"]

    @property
    def a(self) -> int | None:
        return dict(self.params).get("a")

    def key(self) -> str:
        extra = "".join(f",{k}={v}" for k, v in self.params if k != "l")
        return f"{self.label}{extra}"

    def to_json(self) -> dict:
        out = {
            "label": self.label,
            "params": {("ell" if k == "l" else k): v for k, v in self.params},
            "claims": sorted(self.claims),
            "degree": self.data.degree,
            "branches": [list(b.parts) if b.degree <= 200 else b.compact() for b in self.data.branches],
        }
        if self.aliases:
            out["aliases"] = list(self.aliases)
        if self.note:
            out["note"] = self.note
        return out


# ---------------------------------------------------------------------------
# Template evaluation


class Inadmissible(ValueError):
    """The template does not produce integral data at these parameters."""


_ALLOWED = (ast.Expression, ast.BinOp, ast.UnaryOp, ast.Constant, ast.Name,
            ast.Add, ast.Sub, ast.Mult, ast.Div, ast.USub, ast.UAdd, ast.Load)


@functools.lru_cache(maxsize=None)
def _parse(expr: str) -> ast.Expression:
    try:
        tree = ast.parse(expr.strip(), mode="eval")
    except SyntaxError:
        raise ValueError(f"bad expression {expr!r}") from None
    for node in ast.walk(tree):
        if not isinstance(node, _ALLOWED):
            raise ValueError(f"unsupported syntax in {expr!r}")
    return tree


def evaluate(expr: str, symbols: dict[str, int]) -> Fraction:
    """Exact value of an arithmetic expression in the given symbols."""
    tree = _parse(expr)

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant):
            if not isinstance(node.value, int):
                raise ValueError(f"non-integer literal in {expr!r}")
            return Fraction(node.value)
        if isinstance(node, ast.Name):
            if node.id not in symbols:
                raise ValueError(f"unknown symbol {node.id!r} in {expr!r}")
            return Fraction(symbols[node.id])
        if isinstance(node, ast.UnaryOp):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        left, right = ev(node.left), ev(node.right)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if right == 0:
            raise ValueError(f"division by zero in {expr!r}")
        return left / right

    return ev(tree)


def _split_top(text: str, sep: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def _integral(value: Fraction, what: str, minimum: int) -> int:
    if value.denominator != 1 or value < minimum:
        raise Inadmissible(f"{what} = {value}")
    return int(value)


def resolve_template(template: str, symbols: dict[str, int]) -> str:
    """Substitute symbols, giving text in the plain compact grammar."""
    out = []
    for item in _split_top("".join(template.split()), ","):
        pieces = _split_top(item, "^")
        if len(pieces) > 2:
            raise ValueError(f"bad template item {item!r}")
        base = _integral(evaluate(pieces[0], symbols), pieces[0], 1)
        if len(pieces) == 1:
            out.append(str(base))
        elif pieces[1] == "*":
            out.append(f"{base}^*")
        else:
            exp = _integral(evaluate(pieces[1], symbols), pieces[1], 0)
            if exp:
                out.append(f"{base}^{exp}")
    if not out:
        raise Inadmissible(f"template {template!r} is empty at {symbols}")
    return ",".join(out)


def expand_template(template: str, degree: int, symbols: dict[str, int]) -> Partition:
    compact = resolve_template(template, symbols)
    if not compact:
        raise Inadmissible(f"{template!r} is empty")
    try:
        return expand_star(compact, degree)
    except InputError as exc:
        raise Inadmissible(str(exc)) from None


def build_row(templates: Iterable[str], degree: int, symbols: dict[str, int]) -> RamificationData:
    parts = tuple(expand_template(t, degree, symbols) for t in templates)
    return RamificationData(degree, parts)


def _uses_a(templates: Iterable[str]) -> bool:
    return any("a" in t for t in templates)


def a_values(ell: int) -> list[int]:
    return [a for a in range(1, ell, 2) if math.gcd(a, ell) == 1]


def _check_ell(ell: int):
    if ell < MIN_DEGREE:
        raise ValueError(f"the tables start at degree {MIN_DEGREE}, got {ell}")


def _row_entries(label, templates, ell, degree, claims):
    params_list = ([{"l": ell, "a": a} for a in a_values(ell)] if _uses_a(templates)
                   else [{"l": ell}])
    for symbols in params_list:
        try:
            data = build_row(templates, degree, symbols)
        except Inadmissible:
            continue
        yield TableEntry(label, tuple(symbols.items()), data, frozenset(claims))


def _dedup(entries: Iterable[TableEntry]) -> list[TableEntry]:
    seen: dict[RamificationData, int] = {}
    out: list[TableEntry] = []
    for e in entries:
        if e.data in seen:
            i = seen[e.data]
            out[i] = TableEntry(out[i].label, out[i].params, out[i].data, out[i].claims,
                                out[i].aliases + (e.key(),), out[i].note)
        else:
            seen[e.data] = len(out)
            out.append(e)
    return out


def row_templates(label: str) -> list[str]:
    for lab, templates in TWO_SET_ROWS:
        if lab == label:
            return templates
    raise KeyError(f"unknown two-set row {label!r}")


def two_set_row(label: str, ell: int, a: int | None = None) -> RamificationData:
    """A single row of the two-set table; raises Inadmissible when the row
    does not exist at ``ell``."""
    templates = row_templates(label)
    symbols = {"l": ell}
    if _uses_a(templates):
        if a is None or a % 2 == 0 or math.gcd(a, ell) != 1 or not 0 < a < ell:
            raise Inadmissible(f"row {label} needs an odd a coprime to {ell}")
        symbols["a"] = a
    return build_row(templates, ell, symbols)


def gen_two_set_table_raw(ell: int) -> list[TableEntry]:
    """All (row, a) instances, before deduplication."""
    _check_ell(ell)
    out = []
    for label, templates in TWO_SET_ROWS:
        out.extend(_row_entries(label, templates, ell, ell, [GENUS0_X2]))
    return out


def gen_two_set_table(ell: int) -> list[TableEntry]:
    return _dedup(gen_two_set_table_raw(ell))


def f_label(label: str, ell: int) -> str:
    if label == "I1.1":
        return "I1.1a" if ell % 2 else "I1.1b"
    return F_COLLAPSE.get(label, label)


def f_template(label: str, ell: int, a: int | None = None) -> RamificationData | None:
    """The hard-coded lifted row, or None if inadmissible at these parameters."""
    templates = dict(F_ROWS)[label]
    symbols = {"l": ell}
    if _uses_a(templates):
        symbols["a"] = a
    try:
        return build_row(templates, ell * (ell - 1) // 2, symbols)
    except Inadmissible:
        return None


def gen_f_table(ell: int) -> list[TableEntry]:
    """Lift every two-set entry to the action on 2-sets; entries whose lifts
    coincide are merged. Each lift is compared with the printed template."""
    lifted = []
    for e in gen_two_set_table(ell):
        data = lift_table_entry(e.data)
        expected = f_template(f_label(e.label, ell), ell, e.a)
        note = "matches template" if expected == data else "DIFFERS FROM TEMPLATE"
        lifted.append(TableEntry(e.label, e.params, data, e.claims, e.aliases, note))
    return [TableEntry(f_label(e.label, ell), e.params, e.data, e.claims, e.aliases, e.note)
            for e in _dedup(lifted)]


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % q for q in range(2, math.isqrt(n) + 1))


def _solvable_params(row: SolvableRow, ell: int) -> dict[str, int] | None:
    kind, _, arg = row.condition.partition(":")
    if kind == "prime":
        return {"l": ell} if _is_prime(ell) else None
    if kind == "degree":
        return {"l": ell} if ell == int(arg) else None
    p = math.isqrt(ell)
    residue, _, modulus = arg.partition(" mod ")
    if p * p == ell and _is_prime(p) and p % int(modulus) == int(residue):
        return {"l": ell, "p": p}
    return None


def _group_name(template: str, symbols: dict[str, int]) -> str:
    """Substitute l and p; a braced product such as {2l} is evaluated."""
    def sub(m):
        return str(evaluate(m.group(1).replace("2l", "2*l"), symbols))
    text = re.sub(r"\{([^}]*)\}", sub, template)
    return re.sub(r"\b([lp])\b|(?<=_)([lp])", lambda m: str(symbols[m.group(1) or m.group(2)]), text)


def gen_solvable_table(ell: int, label: str | None = None) -> list[TableEntry]:
    rows = [r for r in SOLVABLE_ROWS if label is None or r.label == label]
    if not rows:
        raise ValueError(f"unknown solvable row {label!r}")
    out = []
    for row in rows:
        symbols = _solvable_params(row, ell)
        if symbols is None:
            continue
        try:
            data = build_row(row.templates, ell, symbols)
        except Inadmissible:
            continue
        claims = {f"GALOIS_CLOSURE_GENUS:{row.closure_genus}"}
        if row.solvable:
            claims.add(SOLVABLE_MONODROMY)
        group = _group_name(row.group, symbols)
        out.append(TableEntry(row.label, tuple(symbols.items()), data, frozenset(claims),
                              note=f"monodromy {group}"))
    if not out:
        which = label or "any row"
        raise ValueError(f"{which} of the solvable table is inadmissible at degree {ell}")
    return out


def gen_nonexistence_table(ell: int) -> list[TableEntry]:
    out = []
    for label, templates in NONEXISTENCE_ROWS:
        out.extend(_row_entries(label, templates, ell, ell, [NONEXISTENT]))
    return out


def nonexistence_row(label: str, ell: int) -> RamificationData:
    return build_row(dict(NONEXISTENCE_ROWS)[label], ell, {"l": ell})


def gen_non236(ell: int) -> list[tuple[str, RamificationData, int | None]]:
    out = []
    for label, templates, condition in NON236_ROWS:
        try:
            out.append((label, build_row(templates, ell, {"l": ell}), condition))
        except Inadmissible:
            continue
    return out


def euler_phi(n: int) -> int:
    result = n
    m = n
    q = 2
    while q * q <= m:
        if m % q == 0:
            while m % q == 0:
                m //= q
            result -= result // q
        q += 1
    if m > 1:
        result -= result // m
    return result


def count_constant(ell: int) -> int:
    """The constant e in 2*phi(l) + e, by the class of l mod 4."""
    if ell % 2:
        return 12
    return 8 if ell % 4 == 0 else 7


def table_counts(ell: int) -> dict:
    two = gen_two_set_table(ell)
    f = gen_f_table(ell)
    phi = euler_phi(ell)
    return {
        "ell": ell,
        "phi": phi,
        "two_set_entries": len(two),
        "f_types": len(f),
        "predicted": 2 * phi + count_constant(ell),
    }
