"""The hook Specht module S^lambda, lambda = (d-k, 1^k), on its shuffle basis.

A basis element ``[sigma]`` is keyed by the target tuple of ``sigma``.
Position 1 is the hook corner; positions ``sigma(2..d-k)`` carry the arm
strands and ``sigma(d-k+1..d)`` the leg strands.  Every generator sends a
basis element to zero or to plus/minus a single basis element, which is what
the integer operator tables below exploit.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable, Optional, Sequence, Union

from .arith import Field
from .combinatorics import (
    Partition,
    Perm,
    QuiverParams,
    is_standard,
    left_mult_s,
    reduced_word,
    tableau_degree,
)
from .shuffles import minimal_shuffle, minus_segment, plus_segment


@dataclass(frozen=True)
class HookShape:
    d: int
    k: int

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("hook shape needs d >= 1")
        if not 0 <= self.k <= self.d - 1:
            raise ValueError(f"hook shape needs 0 <= k <= d-1, got d={self.d}, k={self.k}")

    @property
    def partition(self) -> Partition:
        return Partition((self.d - self.k,) + (1,) * self.k)

    @property
    def arm_length(self) -> int:
        return self.d - self.k - 1


@dataclass(frozen=True)
class HookBasisElement:
    sigma: Perm
    weight: tuple[int, ...]
    arm: frozenset
    leg: frozenset
    degree: int

    def tableau(self, shape: HookShape):
        """``sigma T^lambda``."""
        s = self.sigma
        first = (1,) + s[1 : shape.d - shape.k]
        return (first,) + tuple((v,) for v in s[shape.d - shape.k :])


# Token forms: ("e", weight) / ("y", r) / ("psi", r).
Token = tuple


def e_tok(weight: Sequence[int]) -> Token:
    return ("e", tuple(weight))


def y_tok(r: int) -> Token:
    return ("y", r)


def psi_tok(r: int) -> Token:
    return ("psi", r)


def psi_word(w: Perm) -> tuple[Token, ...]:
    """Tokens for ``psi_w`` along the canonical reduced word of ``w``."""
    return tuple(psi_tok(r) for r in reduced_word(w))


class HookModule:
    """Basis data and generator action for one ``(shape, e)``."""

    def __init__(self, shape: HookShape, q: QuiverParams):
        self.shape = shape
        self.q = q
        d, k = shape.d, shape.k
        basis = []
        for leg in combinations(range(2, d + 1), k):
            legset = set(leg)
            arm = tuple(v for v in range(2, d + 1) if v not in legset)
            sigma = (1,) + arm + tuple(leg)
            weight = [0] * d
            for j, pos in enumerate(arm, start=1):
                weight[pos - 1] = j % q.e
            for j, pos in enumerate(leg, start=1):
                weight[pos - 1] = -j % q.e
            elem = HookBasisElement(sigma, tuple(weight), frozenset(arm), frozenset(leg), 0)
            T = elem.tableau(shape)
            assert is_standard(T)
            basis.append(HookBasisElement(sigma, tuple(weight), frozenset(arm), frozenset(leg), tableau_degree(T, q)))
        basis.sort(key=lambda b: b.sigma)
        self.basis: list[HookBasisElement] = basis
        self.index = {b.sigma: n for n, b in enumerate(basis)}
        self.weights = sorted({b.weight for b in basis})
        self.weight_index = {w: n for n, w in enumerate(self.weights)}

    def __repr__(self):
        return f"HookModule(d={self.shape.d}, k={self.shape.k}, e={self.q.e})"

    @property
    def d(self):
        return self.shape.d

    def element(self, sigma: Perm) -> HookBasisElement:
        return self.basis[self.index[tuple(sigma)]]

    def weight_space(self, weight: Sequence[int]) -> list[HookBasisElement]:
        weight = tuple(x % self.q.e for x in weight)
        return [b for b in self.basis if b.weight == weight]

    # -- single basis element actions ------------------------------------

    def _term(self, sign: int, sigma: Perm):
        assert sigma in self.index, f"{sigma} left the shuffle basis"
        return sign, sigma

    def y_on_basis(self, r: int, b: HookBasisElement) -> Optional[tuple[int, Perm]]:
        d = self.d
        if not 1 <= r <= d:
            raise ValueError(f"y_{r} out of range for d={d}")
        i = (None,) + b.weight + (None,)  # 1-indexed with sentinels
        arm, leg = b.arm, b.leg
        if r < d and i[r] == i[r + 1] and r in leg and r + 1 in arm:
            return self._term(-1, left_mult_s(r, b.sigma))
        if r > 1 and i[r - 1] == i[r] and r - 1 in leg and r in arm:
            return self._term(1, left_mult_s(r - 1, b.sigma))
        return None

    def psi_on_basis(self, r: int, b: HookBasisElement) -> Optional[tuple[int, Perm]]:
        d = self.d
        if not 1 <= r <= d - 1:
            raise ValueError(f"psi_{r} out of range for d={d}")
        if r == 1:
            return None
        i = (None,) + b.weight + (None, None)
        arm, leg = b.arm, b.leg
        s = b.sigma
        rel = self.q.relation(i[r], i[r + 1])
        hits = []
        if (r in arm and r + 1 in leg) or rel == "none":
            hits.append((1, left_mult_s(r, s)))
        if r in leg and r + 1 in arm and r + 2 in arm and rel == "down":
            hits.append((1, left_mult_s(r + 1, left_mult_s(r, s))))
        if r - 1 in leg and r in leg and r + 1 in arm and rel == "up":
            hits.append((-1, left_mult_s(r - 1, left_mult_s(r, s))))
        if r - 1 in leg and r in arm and r + 1 in arm and i[r] == i[r - 1]:
            hits.append((1, left_mult_s(r, left_mult_s(r - 1, s))))
        if r in leg and r + 1 in leg and r + 2 in arm and i[r + 1] == i[r + 2]:
            hits.append((-1, left_mult_s(r, left_mult_s(r + 1, s))))
        assert len(hits) <= 1, f"psi_{r} table rows overlap on {s}"
        return self._term(*hits[0]) if hits else None

    def e_on_basis(self, weight: Sequence[int], b: HookBasisElement) -> Optional[tuple[int, Perm]]:
        return (1, b.sigma) if tuple(weight) == b.weight else None

    def token_on_basis(self, tok: Token, b: HookBasisElement):
        kind, arg = tok
        if kind == "psi":
            return self.psi_on_basis(arg, b)
        if kind == "y":
            return self.y_on_basis(arg, b)
        if kind == "e":
            if len(arg) != self.d:
                raise ValueError(f"idempotent e({arg}) has the wrong length")
            return self.e_on_basis(tuple(x % self.q.e for x in arg), b)
        raise ValueError(f"malformed token {tok!r}")

    # -- integer tables for the compiled kernel ---------------------------

    @cached_property
    def tables(self) -> "OperatorTables":
        return OperatorTables.build(self)

    def encode(self, word: Iterable[Token]) -> array:
        d = self.d
        out = array("q")
        for kind, arg in word:
            if kind == "psi":
                if not 1 <= arg <= d - 1:
                    raise ValueError(f"psi_{arg} out of range")
                out.append(arg - 1)
            elif kind == "y":
                if not 1 <= arg <= d:
                    raise ValueError(f"y_{arg} out of range")
                out.append(d - 1 + arg - 1)
            elif kind == "e":
                w = tuple(x % self.q.e for x in arg)
                out.append(2 * d - 1 + self.weight_index.get(w, len(self.weights)))
            else:
                raise ValueError(f"malformed token {(kind, arg)!r}")
        return out


@dataclass
class OperatorTables:
    """Row-major ``n_tokens x n_basis`` tables: image index (-1 for zero) and sign.

    Token codes: ``0..d-2`` psi_1..psi_{d-1}; ``d-1..2d-2`` y_1..y_d;
    ``2d-1+w`` the idempotent of weight number ``w``; the last code is an
    idempotent of a weight that does not occur (kills everything).
    """

    n_basis: int
    n_tokens: int
    target: array = field(repr=False)
    sign: array = field(repr=False)

    @classmethod
    def build(cls, module: HookModule) -> "OperatorTables":
        d, n = module.d, len(module.basis)
        toks = [psi_tok(r) for r in range(1, d)] + [y_tok(r) for r in range(1, d + 1)]
        toks += [e_tok(w) for w in module.weights]
        target = array("q")
        sign = array("q")
        for tok in toks:
            for b in module.basis:
                img = module.token_on_basis(tok, b)
                if img is None:
                    target.append(-1)
                    sign.append(0)
                else:
                    target.append(module.index[img[1]])
                    sign.append(img[0])
        target.extend([-1] * n)
        sign.extend([0] * n)
        return cls(n, len(toks) + 1, target, sign)


@lru_cache(maxsize=256)
def hook_module(shape: HookShape, q: QuiverParams) -> HookModule:
    return HookModule(shape, q)


# ---------------------------------------------------------------------------
# vectors


class HookVector:
    """Sparse vector of S^lambda with exact coefficients; treat as immutable."""

    __slots__ = ("module", "field", "terms")

    def __init__(self, module: HookModule, field: Field, terms=None):
        self.module = module
        self.field = field
        clean = {}
        for sigma, c in (terms or {}).items():
            c = field(c)
            if not field.is_zero(c):
                clean[tuple(sigma)] = c
        self.terms = clean

    @classmethod
    def basis_vector(cls, module: HookModule, field: Field, sigma: Perm) -> "HookVector":
        module.element(sigma)
        return cls(module, field, {tuple(sigma): 1})

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, HookVector)
            and self.module.shape == other.module.shape
            and self.module.q == other.module.q
            and self.field == other.field
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.module.shape, tuple(sorted(self.terms.items()))))

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*[{','.join(map(str, s))}]" for s, c in sorted(self.terms.items()))

    def _combine(self, other: "HookVector", scale) -> "HookVector":
        F = self.field
        out = dict(self.terms)
        for s, c in other.terms.items():
            out[s] = F.add(out.get(s, F.zero), F.mul(scale, c))
        return HookVector(self.module, F, out)

    def __add__(self, other):
        return self._combine(other, self.field.one)

    def __sub__(self, other):
        return self._combine(other, self.field.neg(self.field.one))

    def __neg__(self):
        return self.scale(self.field.neg(self.field.one))

    def scale(self, c) -> "HookVector":
        F = self.field
        c = F(c)
        return HookVector(self.module, F, {s: F.mul(c, v) for s, v in self.terms.items()})

    def weight(self):
        """Common weight of all terms, or None for zero or mixed vectors."""
        ws = {self.module.element(s).weight for s in self.terms}
        return ws.pop() if len(ws) == 1 else None

    def degrees(self) -> set:
        return {self.module.element(s).degree for s in self.terms}

    def _apply(self, fn) -> "HookVector":
        F = self.field
        out = {}
        for s, c in self.terms.items():
            img = fn(self.module.element(s))
            if img is not None:
                sign, t = img
                out[t] = F.add(out.get(t, F.zero), F.mul(F(sign), c))
        return HookVector(self.module, F, out)

    def to_json(self) -> list:
        return [[list(s), self.field.to_str(c)] for s, c in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, module: HookModule, field: Field, data) -> "HookVector":
        return cls(module, field, {tuple(s): field.from_str(c) for s, c in data})


def act_e(weight: Sequence[int], v: HookVector) -> HookVector:
    return v._apply(lambda b: v.module.token_on_basis(e_tok(weight), b))


def act_y(r: int, v: HookVector) -> HookVector:
    if not 1 <= r <= v.module.d:
        raise ValueError(f"y_{r} out of range")
    return v._apply(lambda b: v.module.y_on_basis(r, b))


def act_psi(r: int, v: HookVector) -> HookVector:
    if not 1 <= r <= v.module.d - 1:
        raise ValueError(f"psi_{r} out of range")
    return v._apply(lambda b: v.module.psi_on_basis(r, b))


def act_word(word: Sequence[Token], v: HookVector) -> HookVector:
    """Apply a product of generators; the rightmost token acts first."""
    for tok in reversed(list(word)):
        if not isinstance(tok, tuple) or len(tok) != 2:
            raise ValueError(f"malformed token {tok!r}")
        v = v._apply(lambda b, tok=tok: v.module.token_on_basis(tok, b))
    return v


def act_sum(terms: Sequence[tuple[int, Sequence[Token]]], v: HookVector) -> HookVector:
    """Apply a formal integer combination of words."""
    out = HookVector(v.module, v.field)
    for coef, word in terms:
        out = out + act_word(word, v).scale(coef)
    return out


def extreme_vector(module: HookModule, weight: Sequence[int]) -> Optional[HookBasisElement]:
    """The top-degree basis element of a weight space, via the minimal shuffle."""
    q, shape = module.q, module.shape
    weight = tuple(x % q.e for x in weight)
    if len(weight) != shape.d or weight[0] != 0:
        return None
    plus = plus_segment(1, shape.arm_length, q.e)
    minus = minus_segment(-1, shape.k, q.e)
    wit = minimal_shuffle(weight[1:], plus, minus)
    if wit is None:
        return None
    sigma = (1,) + tuple(v + 1 for v in wit.minimal)
    return module.element(sigma)


def extreme_witness(module: HookModule, weight: Sequence[int]):
    q, shape = module.q, module.shape
    weight = tuple(x % q.e for x in weight)
    if len(weight) != shape.d or weight[0] != 0:
        return None
    return minimal_shuffle(weight[1:], plus_segment(1, shape.arm_length, q.e), minus_segment(-1, shape.k, q.e))


def basis(shape: HookShape, q: QuiverParams) -> list[HookBasisElement]:
    return list(hook_module(shape, q).basis)
