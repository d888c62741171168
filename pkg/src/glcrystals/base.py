"""Shared exact combinatorics: partitions, integer weight vectors, type-A
Dynkin intervals with their diagram involution, block-reversal permutations,
and a brute-force Schur-polynomial oracle.

Node indices are 1-based throughout: the Dynkin diagram of gl_k has nodes
{1, ..., k-1} and the interval written (p, q) covers nodes {p, ..., q-1}.
"""

from collections import Counter
from dataclasses import dataclass

Partition = tuple[int, ...]
Weight = tuple[int, ...]
Permutation = tuple[int, ...]  # one-line notation, 1-based values


# ---------------------------------------------------------------------------
# partitions

def partition(parts) -> Partition:
    """Normalize to a weakly decreasing tuple of ints with no trailing zeros."""
    out = tuple(int(p) for p in parts)
    for a, b in zip(out, out[1:]):
        if a < b:
            raise ValueError(f"parts not weakly decreasing: {out}")
    if out and out[-1] < 0:
        raise ValueError(f"negative part: {out}")
    while out and out[-1] == 0:
        out = out[:-1]
    return out


def transpose(lam) -> Partition:
    """Conjugate partition (column lengths of the Young diagram)."""
    lam = partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > c) for c in range(lam[0]))


def fits_in_box(lam, rows: int, cols: int) -> bool:
    lam = partition(lam)
    return len(lam) <= rows and (not lam or lam[0] <= cols)


def partitions_in_box(rows: int, cols: int, size: int):
    """All partitions of `size` fitting in a rows x cols box."""
    def rec(remaining, max_part, max_len):
        if remaining == 0:
            yield ()
            return
        if max_len == 0:
            return
        for first in range(min(remaining, max_part), 0, -1):
            for rest in rec(remaining - first, first, max_len - 1):
                yield (first,) + rest
    yield from rec(size, cols, rows)


def parse_partition(text: str) -> Partition:
    """Parse a comma-separated part list such as "5,3,1" (empty string = ())."""
    text = text.strip()
    if not text:
        return ()
    return partition(int(tok) for tok in text.split(","))


def format_partition(lam) -> str:
    return ",".join(str(p) for p in partition(lam))


# ---------------------------------------------------------------------------
# weights

def pairing(weight: Weight, i: int) -> int:
    """<weight, coroot of node i> = weight[i] - weight[i+1], 1-based i."""
    return weight[i - 1] - weight[i]


def add_root(weight: Weight, i: int, sign: int) -> Weight:
    """weight + sign * (simple root of node i)."""
    out = list(weight)
    out[i - 1] += sign
    out[i] -= sign
    return tuple(out)


def format_weight(w: Weight) -> str:
    return "[" + ",".join(str(x) for x in w) + "]"


# ---------------------------------------------------------------------------
# Dynkin intervals and the longest-element involution

@dataclass(frozen=True)
class DynkinInterval:
    """Connected type-A subdiagram: nodes {p, ..., q-1} inside rank `rank`."""
    p: int
    q: int
    rank: int

    def __post_init__(self):
        if not (1 <= self.p < self.q <= self.rank):
            raise ValueError(f"need 1 <= p < q <= rank, got {self}")

    @property
    def nodes(self) -> tuple[int, ...]:
        return tuple(range(self.p, self.q))

    def __str__(self):
        return f"s[{self.p},{self.q}]"


def intervals(rank: int):
    """All connected subdiagram intervals of gl_rank."""
    return [DynkinInterval(p, q, rank)
            for p in range(1, rank) for q in range(p + 1, rank + 1)]


def theta(interval: DynkinInterval, i: int) -> int:
    """Diagram involution of the interval: node i maps to p + q - 1 - i."""
    if i not in interval.nodes:
        raise ValueError(f"node {i} not in {interval}")
    return interval.p + interval.q - 1 - i


def theta_on_nodes(nodes: tuple[int, ...], i: int) -> int:
    """Same involution, for a bare contiguous node tuple."""
    return nodes[0] + nodes[-1] - i


def theta_interval(outer: DynkinInterval, inner: DynkinInterval) -> DynkinInterval:
    """Image of a nested interval under the outer interval's involution."""
    if not (outer.p <= inner.p and inner.q <= outer.q):
        raise ValueError(f"{inner} not nested in {outer}")
    s = outer.p + outer.q
    return DynkinInterval(s - inner.q, s - inner.p, outer.rank)


def weyl_longest(interval: DynkinInterval) -> Permutation:
    """Longest element of the interval's Weyl group: reverses positions p..q."""
    p, q = interval.p, interval.q
    return tuple(p + q - i if p <= i <= q else i
                 for i in range(1, interval.rank + 1))


def perm_identity(k: int) -> Permutation:
    return tuple(range(1, k + 1))


def perm_compose(after: Permutation, before: Permutation) -> Permutation:
    """Composite permutation applying `before` first."""
    return tuple(after[b - 1] for b in before)


def perm_apply_weight(perm: Permutation, w: Weight) -> Weight:
    """Permute coordinates: position i is sent to position perm[i]."""
    out = [0] * len(w)
    for i, v in enumerate(w):
        out[perm[i] - 1] = v
    return tuple(out)


# ---------------------------------------------------------------------------
# brute-force Schur oracle (no crystal code involved)

def ssyt_fillings(shape, rank: int):
    """Yield every semistandard filling of `shape` with entries in 1..rank,
    as a tuple of row tuples, by direct backtracking.
    """
    shape = partition(shape)
    if len(shape) > rank:
        return
    if not shape:
        yield ()
        return
    rows = [[0] * r for r in shape]
    cells = [(r, c) for r, row in enumerate(shape) for c in range(row)]

    def rec(k):
        if k == len(cells):
            yield tuple(tuple(row) for row in rows)
            return
        r, c = cells[k]
        lo = rows[r][c - 1] if c > 0 else 1
        if r > 0 and c < shape[r - 1]:
            lo = max(lo, rows[r - 1][c] + 1)
        for v in range(lo, rank + 1):
            rows[r][c] = v
            yield from rec(k + 1)
        rows[r][c] = 0

    yield from rec(0)


def content(rows, rank: int) -> Weight:
    """Occurrence counts of 1..rank in a filling."""
    counts = [0] * rank
    for row in rows:
        for v in row:
            counts[v - 1] += 1
    return tuple(counts)


def schur_bruteforce(shape, rank: int) -> Counter:
    """Weight multiset of all semistandard fillings of `shape` in 1..rank.

    Independent oracle for crystal characters; enumerates fillings directly
    and never touches crystal operators.
    """
    return Counter(content(rows, rank) for rows in ssyt_fillings(shape, rank))
