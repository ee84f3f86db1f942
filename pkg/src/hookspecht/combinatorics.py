"""Partitions, residues, tableaux and permutation words.

Nodes are ``(row, col)`` pairs, 1-indexed, rows growing downward.
Permutations of ``{1..d}`` are stored as target tuples ``(w(1), ..., w(d))``.
A tableau is a tuple of rows, each row a tuple of entries.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

Node = tuple[int, int]
Perm = tuple[int, ...]


@dataclass(frozen=True)
class QuiverParams:
    """Quiver of type A^(1)_{e-1}; the residue set is Z/eZ."""

    e: int

    def __post_init__(self):
        if not isinstance(self.e, int) or self.e < 3:
            raise ValueError(f"quantum characteristic must be an integer >= 3, got {self.e!r}")

    def cartan(self, i: int, j: int) -> int:
        i %= self.e
        j %= self.e
        if i == j:
            return 2
        if (j - i) % self.e in (1, self.e - 1):
            return -1
        return 0

    def relation(self, i: int, j: int) -> str:
        """Classify an ordered residue pair.

        Returns ``"eq"``, ``"down"`` (j = i - 1, an arrow i -> j of the quiver),
        ``"up"`` (j = i + 1, an arrow j -> i) or ``"none"``.
        """
        diff = (j - i) % self.e
        if diff == 0:
            return "eq"
        if diff == self.e - 1:
            return "down"
        if diff == 1:
            return "up"
        return "none"


def residue(node: Node, q: QuiverParams) -> int:
    row, col = node
    if row < 1 or col < 1:
        raise ValueError(f"nodes are 1-indexed, got {node}")
    return (col - row) % q.e


# ---------------------------------------------------------------------------
# partitions


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(not isinstance(p, int) or p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive integers: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be non-increasing: {parts}")

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if not text:
            return cls(())
        try:
            parts = tuple(int(tok) for tok in text.split(","))
        except ValueError:
            raise ValueError(f"malformed partition string {text!r}") from None
        return cls(parts)

    def __str__(self):
        return ",".join(map(str, self.parts))

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, x: int) -> int:
        """Row length ``mu_x`` (1-indexed); 0 beyond the last row."""
        if x < 1:
            raise IndexError(x)
        return self.parts[x - 1] if x <= len(self.parts) else 0

    @property
    def d(self) -> int:
        return sum(self.parts)

    def nodes(self) -> Iterator[Node]:
        for row, length in enumerate(self.parts, start=1):
            for col in range(1, length + 1):
                yield (row, col)

    def __contains__(self, node) -> bool:
        row, col = node
        return row >= 1 and col >= 1 and col <= self[row]

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p >= c) for c in range(1, self.parts[0] + 1)))

    def removable_nodes(self) -> list[Node]:
        return [(x, self[x]) for x in range(1, len(self) + 1) if self[x] > self[x + 1]]

    def addable_nodes(self) -> list[Node]:
        out = [(x, self[x] + 1) for x in range(1, len(self) + 1) if x == 1 or self[x - 1] > self[x]]
        out.append((len(self) + 1, 1))
        return out

    def remove(self, node: Node) -> "Partition":
        if node not in self.removable_nodes():
            raise ValueError(f"{node} is not removable from {self.parts}")
        parts = list(self.parts)
        parts[node[0] - 1] -= 1
        return Partition(tuple(p for p in parts if p))


def partitions(d: int) -> list[Partition]:
    """All partitions of ``d`` in reverse lexicographic order, (d) first."""
    return [Partition(p) for p in _partitions(d, d)]


@lru_cache(maxsize=None)
def _partitions(d: int, cap: int) -> tuple[tuple[int, ...], ...]:
    if d == 0:
        return ((),)
    out = []
    for first in range(min(d, cap), 0, -1):
        for rest in _partitions(d - first, first):
            out.append((first,) + rest)
    return tuple(out)


def content(mu: Partition, q: QuiverParams) -> Counter:
    """Residue content as a multiset ``{residue: multiplicity}``."""
    return Counter(residue(node, q) for node in mu.nodes())


def removable_addable(mu: Partition, i: int, q: QuiverParams) -> tuple[list[Node], list[Node]]:
    i %= q.e
    rem = [A for A in mu.removable_nodes() if residue(A, q) == i]
    add = [B for B in mu.addable_nodes() if residue(B, q) == i]
    return rem, add


def d_A(mu: Partition, A: Node, q: QuiverParams) -> int:
    if A not in mu.removable_nodes():
        raise ValueError(f"{A} is not a removable node of {mu.parts}")
    rem, add = removable_addable(mu, residue(A, q), q)
    below = lambda nodes: sum(1 for B in nodes if B[0] > A[0])
    return below(add) - below(rem)


# ---------------------------------------------------------------------------
# tableaux


def shape_of(T: Sequence[Sequence[int]]) -> Partition:
    return Partition(tuple(len(row) for row in T))


def initial_tableau(mu: Partition) -> tuple[tuple[int, ...], ...]:
    rows, start = [], 1
    for length in mu.parts:
        rows.append(tuple(range(start, start + length)))
        start += length
    return tuple(rows)


def node_of(T, r: int) -> Node:
    for x, row in enumerate(T, start=1):
        for y, v in enumerate(row, start=1):
            if v == r:
                return (x, y)
    raise KeyError(r)


def positions(T) -> dict[int, Node]:
    return {v: (x, y) for x, row in enumerate(T, start=1) for y, v in enumerate(row, start=1)}


def is_row_strict(T) -> bool:
    return all(row[i] < row[i + 1] for row in T for i in range(len(row) - 1))


def is_standard(T) -> bool:
    if not is_row_strict(T):
        return False
    for x in range(len(T) - 1):
        upper, lower = T[x], T[x + 1]
        if len(lower) > len(upper):
            return False
        if any(upper[y] >= lower[y] for y in range(len(lower))):
            return False
    return True


def residue_sequence(T, q: QuiverParams) -> tuple[int, ...]:
    pos = positions(T)
    return tuple(residue(pos[r], q) for r in range(1, len(pos) + 1))


def tableau_degree(T, q: QuiverParams) -> int:
    """Degree of a standard tableau, peeling off the largest entry each step."""
    if not is_standard(T):
        raise ValueError("degree is only defined for standard tableaux")
    rows = [list(row) for row in T]
    mu = shape_of(T)
    deg = 0
    for r in range(mu.d, 0, -1):
        x = next(i for i, row in enumerate(rows) if row and row[-1] == r)
        A = (x + 1, len(rows[x]))
        deg += d_A(mu, A, q)
        mu = mu.remove(A)
        rows[x].pop()
    return deg


def standard_tableaux(mu: Partition) -> list[tuple[tuple[int, ...], ...]]:
    """St(mu), sorted lexicographically by row reading word."""
    d = mu.d
    out = []

    def fill(rows, r):
        if r > d:
            out.append(tuple(tuple(row) for row in rows))
            return
        for x in range(len(mu)):
            if len(rows[x]) < mu.parts[x] and (x == 0 or len(rows[x - 1]) > len(rows[x])):
                rows[x].append(r)
                fill(rows, r + 1)
                rows[x].pop()

    fill([[] for _ in mu.parts], 1)
    out.sort(key=lambda T: tuple(v for row in T for v in row))
    return out


def act_on_tableau(w: Perm, T):
    return tuple(tuple(w[v - 1] for v in row) for row in T)


def tableau_word(T) -> Perm:
    """The permutation ``w^T`` with ``w^T T^mu = T``."""
    T0 = initial_tableau(shape_of(T))
    w = [0] * sum(len(row) for row in T)
    for row0, row in zip(T0, T):
        for a, b in zip(row0, row):
            w[a - 1] = b
    return tuple(w)


# ---------------------------------------------------------------------------
# permutations


def identity(d: int) -> Perm:
    return tuple(range(1, d + 1))


def compose(u: Perm, w: Perm) -> Perm:
    """``u w``: apply ``w`` first."""
    return tuple(u[w[i] - 1] for i in range(len(w)))


def inverse(w: Perm) -> Perm:
    inv = [0] * len(w)
    for i, v in enumerate(w, start=1):
        inv[v - 1] = i
    return tuple(inv)


def left_mult_s(r: int, w: Perm) -> Perm:
    """``s_r w``: swap the values r and r+1."""
    return tuple(r + 1 if v == r else r if v == r + 1 else v for v in w)


def length(w: Perm) -> int:
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def reduced_word(w: Perm) -> tuple[int, ...]:
    """Canonical reduced word ``(r_1, ..., r_m)`` with ``w = s_{r_1} ... s_{r_m}``.

    Bubble-sorts the target sequence by adjacent position swaps, carrying
    the largest value home first; the swaps read in reverse give the word.
    """
    t = list(w)
    swaps = []
    for v in range(len(t), 0, -1):
        p = t.index(v)
        while p < v - 1:
            t[p], t[p + 1] = t[p + 1], t[p]
            swaps.append(p + 1)
            p += 1
    return tuple(reversed(swaps))


def from_word(word: Sequence[int], d: int) -> Perm:
    w = identity(d)
    for r in reversed(word):
        w = left_mult_s(r, w)
    return w


def cycle(values: Sequence[int], d: int) -> Perm:
    """The cycle ``(v_1, v_2, ..., v_n)`` sending ``v_i`` to ``v_{i+1}``."""
    w = list(identity(d))
    for a, b in zip(values, list(values[1:]) + [values[0]]):
        w[a - 1] = b
    return tuple(w)


def act_on_sequence(w: Perm, seq: Sequence) -> tuple:
    """Place permutation: entry ``r`` of ``seq`` moves to position ``w(r)``."""
    out = [None] * len(seq)
    for r, v in enumerate(seq):
        out[w[r] - 1] = v
    return tuple(out)
