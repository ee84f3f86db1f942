"""Generators of the relation ideal of the universal graded Specht module S^mu.

S^mu is cyclic on z^mu of weight i^mu, killed by every dot, by psi_r whenever
r and r+1 share a row of T^mu, and by one Garnir element g^A per Garnir node.
A Garnir node is a node A = (x, y) whose lower neighbour (x+1, y) also lies in
mu; the belt of A is the row-x tail from A together with the row-(x+1) head
through the node below A.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional

from .combinatorics import (
    Node,
    Partition,
    Perm,
    QuiverParams,
    compose,
    identity,
    initial_tableau,
    reduced_word,
    residue,
    residue_sequence,
    tableau_degree,
    tableau_word,
)
from .hook import Token, e_tok, psi_tok, psi_word, y_tok
from .shuffles import shuffle_reps

Word = tuple  # tuple of Tokens
FormalSum = tuple  # tuple of (int coefficient, Word)


def garnir_nodes(mu: Partition) -> list[Node]:
    return [(x, y) for (x, y) in mu.nodes() if (x + 1, y) in mu]


def transposition_product(pairs, d: int) -> Perm:
    w = list(identity(d))
    for a, b in pairs:
        w[a - 1], w[b - 1] = w[b - 1], w[a - 1]
    return tuple(w)


@dataclass(frozen=True)
class GarnirDatum:
    """Belt, bricks and Garnir element data for one Garnir node.

    ``coset_reps`` are elements of the abstract Sigma_k (brick permutations),
    ``coset_words`` their canonical reduced words in the brick generators.
    """

    mu: Partition
    node: Node
    e: int
    belt: tuple[Node, ...]
    bricks: tuple[tuple[Node, ...], ...]
    C: tuple[Node, ...]
    D: tuple[Node, ...]
    f: int
    garnir_tableau: tuple
    weight: tuple[int, ...]
    brick_generators: tuple[Perm, ...]
    coset_reps: tuple[Perm, ...]
    coset_words: tuple[tuple[int, ...], ...]
    garnir_word: Perm
    psi_TA_word: Word

    @property
    def k(self) -> int:
        return len(self.bricks)

    def tau_expansion(self, u_word) -> FormalSum:
        """tau_{r_1} ... tau_{r_a} distributed into 2^a formal words."""
        eA = e_tok(self.weight)
        factors = [(psi_word(self.brick_generators[r - 1]) + (eA,), (eA,)) for r in u_word]
        out = [((), 1)]
        for choice in factors:
            out = [(w + c, coef) for w, coef in out for c in choice]
        return tuple((coef, w) for w, coef in out)

    def garnir_element(self) -> FormalSum:
        """g^A = sum over D^A of tau_u psi^{T^A}, as a normalised formal sum."""
        acc: Counter = Counter()
        for u_word in self.coset_words:
            for coef, w in self.tau_expansion(u_word):
                acc[w + self.psi_TA_word] += coef
        return tuple((c, w) for w, c in sorted(acc.items(), key=lambda t: (len(t[0]), t[0])) if c)

    def render(self) -> str:
        """Text picture: brick numbers, C/D leftovers, '.' off the belt."""
        label = {n: "C" for n in self.C}
        label.update({n: "D" for n in self.D})
        for b, brick in enumerate(self.bricks, start=1):
            label.update({n: str(b) if b < 10 else "#" for n in brick})
        lines = [f"A={self.node} e={self.e} res={residue(self.node, QuiverParams(self.e))} k={self.k} f={self.f}"]
        for x in range(1, len(self.mu) + 1):
            cells = []
            for y in range(1, self.mu[x] + 1):
                cells.append(label.get((x, y), "."))
            lines.append(" ".join(cells))
        lines.append("T^A: " + " / ".join(",".join(map(str, row)) for row in self.garnir_tableau))
        return "\n".join(lines)


def garnir_datum(mu: Partition, A: Node, q: QuiverParams) -> GarnirDatum:
    x, y = A
    if A not in garnir_nodes(mu):
        raise ValueError(f"{A} is not a Garnir node of {mu.parts}")
    e = q.e
    top = [(x, z) for z in range(y, mu[x] + 1)]
    bottom = [(x + 1, z) for z in range(1, y + 1)]

    top_bricks = []
    z = y
    while z + e - 1 <= mu[x]:
        top_bricks.append(tuple((x, c) for c in range(z, z + e)))
        z += e
    C = tuple((x, c) for c in range(z, mu[x] + 1))

    bottom_bricks = []
    z = y - e + 1
    while z >= 1:
        bottom_bricks.insert(0, tuple((x + 1, c) for c in range(z, z + e)))
        z -= e
    D = tuple((x + 1, c) for c in range(1, z + e))

    bricks = tuple(top_bricks + bottom_bricks)
    for brick in bricks:
        assert residue(brick[0], q) == residue(A, q)

    Tmu = initial_tableau(mu)
    u = Tmu[x - 1][y - 1]
    order = list(D) + [n for brick in bricks for n in brick] + list(C)
    relabel = {node: u + i for i, node in enumerate(order)}
    TA = tuple(
        tuple(relabel.get((r, c), v) for c, v in enumerate(row, start=1)) for r, row in enumerate(Tmu, start=1)
    )
    wTA = tableau_word(TA)

    k, d = len(bricks), mu.d
    n = u + len(D)
    gens = tuple(
        transposition_product([(zz, zz + e) for zz in range(n + (r - 1) * e, n + r * e)], d) for r in range(1, k)
    )
    reps = tuple(shuffle_reps(len(top_bricks), len(bottom_bricks))) if k else (identity(0),)
    words = tuple(reduced_word(rep) for rep in reps)

    return GarnirDatum(
        mu=mu,
        node=A,
        e=e,
        belt=tuple(top + bottom),
        bricks=bricks,
        C=C,
        D=D,
        f=len(top_bricks),
        garnir_tableau=TA,
        weight=residue_sequence(TA, q),
        brick_generators=gens,
        coset_reps=reps,
        coset_words=words,
        garnir_word=wTA,
        psi_TA_word=psi_word(wTA),
    )


def brick_permutation(datum: GarnirDatum, u: Perm) -> Perm:
    """Image of an abstract brick permutation in Sigma_d."""
    w = identity(datum.mu.d)
    for r in reversed(reduced_word(u)):
        w = compose(datum.brick_generators[r - 1], w)
    return w


@dataclass(frozen=True)
class RelationGenerator:
    """One generator of J^mu as a formal integer sum of words.

    ``kind`` is ``idempotent`` (a weight marker, imposed as a restriction to
    the i^mu weight space), ``dot``, ``row-psi`` or ``garnir``.
    """

    kind: str
    terms: FormalSum
    source: str
    datum: Optional[GarnirDatum] = None

    @property
    def word(self) -> Word:
        if len(self.terms) != 1 or self.terms[0][0] != 1:
            raise ValueError(f"{self.source} is a formal sum, not a single word")
        return self.terms[0][1]


def row_psi_positions(mu: Partition) -> list[int]:
    return [r for row in initial_tableau(mu) for r in row[:-1]]


def relation_generators(mu: Partition, q: QuiverParams) -> list[RelationGenerator]:
    d = mu.d
    i_mu = residue_sequence(initial_tableau(mu), q)
    gens = [RelationGenerator("idempotent", ((1, (e_tok(i_mu),)),), "J1: weight i^mu")]
    gens += [RelationGenerator("dot", ((1, (y_tok(r),)),), f"J2: y_{r}") for r in range(1, d + 1)]
    gens += [RelationGenerator("row-psi", ((1, (psi_tok(r),)),), f"J3: psi_{r}") for r in row_psi_positions(mu)]
    for A in garnir_nodes(mu):
        datum = garnir_datum(mu, A, q)
        gens.append(RelationGenerator("garnir", datum.garnir_element(), f"J4: g^A, A={A}", datum))
    return gens


def specht_degree_shift(mu: Partition, q: QuiverParams) -> int:
    return tableau_degree(initial_tableau(mu), q)
