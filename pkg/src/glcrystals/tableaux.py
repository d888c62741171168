"""Semistandard Young tableaux with signature-rule Kashiwara operators.

A tableau is a tuple of row tuples with entries in 1..n; rows weakly
increase, columns strictly increase.  The rank n lives on the model, so the
same rows value can be read in any TableauCrystal(n) with n at least the
largest entry.
"""

import json
from functools import lru_cache

from .base import Partition, Weight, content, partition, ssyt_fillings
from .core import Crystal

Rows = tuple[tuple[int, ...], ...]


def ssyt(rows, rank: int | None = None) -> Rows:
    """Validate and freeze a semistandard tableau."""
    rows = tuple(tuple(int(v) for v in row) for row in rows)
    shape_of(rows)  # validates weakly decreasing row lengths
    for r, row in enumerate(rows):
        if not row:
            raise ValueError("empty tableau row")
        for c, v in enumerate(row):
            if v < 1 or (rank is not None and v > rank):
                raise ValueError(f"entry {v} out of range at ({r + 1},{c + 1})")
            if c > 0 and row[c - 1] > v:
                raise ValueError(f"row {r + 1} not weakly increasing")
            if r > 0 and c < len(rows[r - 1]) and rows[r - 1][c] >= v:
                raise ValueError(f"column {c + 1} not strictly increasing")
    return rows


def shape_of(rows: Rows) -> Partition:
    return partition(len(row) for row in rows)


def weight_of(rows: Rows, rank: int) -> Weight:
    """Content vector: how many times each of 1..rank appears."""
    return content(rows, rank)


def signature(rows: Rows, i: int):
    """Column signature of rows for node i.

    Scanning columns left to right, a column holding i+1 contributes "+"
    and one holding i contributes "-", the "+" written first when both
    occur; adjacent "+-" pairs cancel until none remain.  Returns
    (eps, phi, e_col, f_col) where eps counts surviving "+", phi surviving
    "-", e_col is the 0-based column of the leftmost surviving "+" and
    f_col that of the rightmost surviving "-" (None when absent).
    """
    stack: list[tuple[str, int]] = []
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        has_plus = any(c < len(row) and row[c] == i + 1 for row in rows)
        has_minus = any(c < len(row) and row[c] == i for row in rows)
        if has_plus:
            stack.append(("+", c))
        if has_minus:
            if stack and stack[-1][0] == "+":
                stack.pop()
            else:
                stack.append(("-", c))
    pluses = [c for s, c in stack if s == "+"]
    minuses = [c for s, c in stack if s == "-"]
    return (len(pluses), len(minuses),
            pluses[0] if pluses else None,
            minuses[-1] if minuses else None)


def _replace(rows: Rows, col: int, old: int, new: int) -> Rows:
    for r, row in enumerate(rows):
        if col < len(row) and row[col] == old:
            changed = row[:col] + (new,) + row[col + 1:]
            return rows[:r] + (changed,) + rows[r + 1:]
    raise ValueError(f"no entry {old} in column {col + 1}")


def apply_e(rows: Rows, i: int) -> Rows | None:
    """Turn the i+1 of the leftmost unpaired "+" into an i, or None."""
    _, _, e_col, _ = signature(rows, i)
    if e_col is None:
        return None
    return _replace(rows, e_col, i + 1, i)


def apply_f(rows: Rows, i: int) -> Rows | None:
    """Turn the i of the rightmost unpaired "-" into an i+1, or None."""
    _, _, _, f_col = signature(rows, i)
    if f_col is None:
        return None
    return _replace(rows, f_col, i, i + 1)


def highest_tableau(shape) -> Rows:
    """Row r filled with the entry r."""
    return tuple(tuple([r + 1] * w) for r, w in enumerate(partition(shape)))


class TableauCrystal(Crystal):
    """Tableaux with entries in 1..rank under the signature-rule operators."""

    def weight(self, b: Rows) -> Weight:
        return weight_of(b, self.rank)

    def _check(self, i):
        if not 1 <= i <= self.rank - 1:
            raise ValueError(f"node {i} out of range for rank {self.rank}")

    def e(self, i, b):
        self._check(i)
        return apply_e(b, i)

    def f(self, i, b):
        self._check(i)
        return apply_f(b, i)

    def eps(self, i, b):
        self._check(i)
        return signature(b, i)[0]

    def phi(self, i, b):
        self._check(i)
        return signature(b, i)[1]

    def canon(self, b) -> str:
        return "/".join(",".join(str(v) for v in row) for row in b)


@lru_cache(maxsize=None)
def tableau_crystal(rank: int) -> TableauCrystal:
    return TableauCrystal(rank)


def enumerate_b_lambda(shape, rank: int, cross_check: bool = False) -> list[Rows]:
    """Closure of the highest tableau of `shape` under all lowering
    operators; with cross_check=True, assert it equals direct backtracking
    over fillings.  Sorted by canonical string.
    """
    shape = partition(shape)
    if len(shape) > rank:
        raise ValueError(f"shape {shape} needs more than {rank} rows")
    model = tableau_crystal(rank)
    if not shape:
        return [()]
    seed = highest_tableau(shape)
    seen = {seed}
    frontier = [seed]
    while frontier:
        x = frontier.pop()
        for i in range(1, rank):
            y = apply_f(x, i)
            if y is not None and y not in seen:
                seen.add(y)
                frontier.append(y)
    if cross_check:
        direct = set(ssyt_fillings(shape, rank))
        if seen != direct:
            raise AssertionError(
                f"operator closure has {len(seen)} tableaux, backtracking "
                f"{len(direct)}, for shape {shape} rank {rank}")
    return sorted(seen, key=model.canon)


def column_bits(rows: Rows, rank: int) -> tuple[tuple[int, ...], ...]:
    """Columns left to right, each as the 0/1 indicator vector of its
    entry set inside 1..rank."""
    ncols = len(rows[0]) if rows else 0
    cols = []
    for c in range(ncols):
        bits = [0] * rank
        for row in rows:
            if c < len(row):
                bits[row[c] - 1] = 1
        cols.append(tuple(bits))
    return tuple(cols)


# ---------------------------------------------------------------------------
# serialization

def to_json(rows: Rows, rank: int) -> str:
    return json.dumps({"rank": rank, "rows": [list(r) for r in rows]})


def from_json(obj) -> tuple[Rows, int]:
    if isinstance(obj, str):
        obj = json.loads(obj)
    rank = int(obj["rank"])
    return ssyt(obj["rows"], rank), rank


def pretty(rows: Rows) -> str:
    """One row per line, entries padded to equal width."""
    if not rows:
        return "(empty)"
    width = max(len(str(v)) for row in rows for v in row)
    return "\n".join(" ".join(str(v).rjust(width) for v in row) for row in rows)
