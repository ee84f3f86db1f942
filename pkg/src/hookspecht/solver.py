"""Hom(S^mu, S^lambda) for a hook lambda, computed two independent ways.

``bruteforce_hom`` stacks the action of every relation generator of S^mu on
the i^mu weight space of S^lambda and takes the exact kernel.  It never looks
at the parametrised forms.  ``classify_hom`` pattern-matches mu against the
three forms and evaluates the Garnir content in the field.
"""

from __future__ import annotations

import math
from array import array
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Optional

from .arith import Field, garnir_content, is_prime, p_divides_gc
from .combinatorics import (
    Node,
    Partition,
    Perm,
    QuiverParams,
    compose,
    content,
    cycle,
    initial_tableau,
    residue_sequence,
    tableau_word,
)
from .hook import HookShape, HookVector, act_sum, act_word, extreme_vector, hook_module
from .kernels import apply_word
from .linalg import nullspace
from .presentation import garnir_datum, garnir_nodes, relation_generators, specht_degree_shift


# psi_w is taken along this reduced word of w everywhere, including psi^{T^A}
REDUCED_WORD_RULE = "bubble-sort canonical"


@dataclass(frozen=True)
class FormWitness:
    """One parametrisation of mu by a form; ``c`` is the cut row (cases i, ii) or N (case iii)."""

    case: str
    c: int
    a: tuple[int, ...]
    m: int

    @property
    def gc(self) -> int:
        return garnir_content(self.a)

    def to_json(self) -> dict:
        key = "N" if self.case == "iii" else "c"
        return {"case": self.case, key: self.c, "a": list(self.a), "m": self.m}

    @classmethod
    def from_json(cls, data: dict) -> "FormWitness":
        return cls(data["case"], data.get("c", data.get("N")), tuple(data["a"]), data["m"])


@dataclass(frozen=True)
class TargetTableau:
    tableau: tuple
    word: Perm


@dataclass
class HomCertificate:
    mu: Partition
    shape: HookShape
    e: int
    field: Field
    dimension: int
    method: str
    image: Optional[HookVector] = None
    witness: Optional[FormWitness] = None
    graded_degree: Optional[int] = None
    agreement: Optional[bool] = None
    matches: tuple = dc_field(default=())

    def to_json(self) -> dict:
        out = {
            "schema": "hook-specht/1",
            "method": self.method,
            "reduced_words": REDUCED_WORD_RULE,
            "mu": list(self.mu.parts),
            "d": self.shape.d,
            "k": self.shape.k,
            "e": self.e,
            "char": self.field.characteristic,
            "dimension": self.dimension,
        }
        if self.witness is not None:
            out.update(self.witness.to_json())
            out["gc"] = self.witness.gc
        if self.graded_degree is not None:
            out["degree"] = self.graded_degree
        if self.image is not None:
            out["image"] = self.image.to_json()
        if self.matches:
            out["matches"] = [w.to_json() for w in self.matches]
        if self.agreement is not None:
            out["agreement"] = self.agreement
        return out

    @classmethod
    def from_json(cls, data: dict) -> "HomCertificate":
        shape = HookShape(data["d"], data["k"])
        F = Field(data["char"])
        image = None
        if "image" in data:
            image = HookVector.from_json(hook_module(shape, QuiverParams(data["e"])), F, data["image"])
        witness = FormWitness.from_json(data) if "case" in data else None
        return cls(
            mu=Partition(tuple(data["mu"])),
            shape=shape,
            e=data["e"],
            field=F,
            dimension=data["dimension"],
            method=data["method"],
            image=image,
            witness=witness,
            graded_degree=data.get("degree"),
            agreement=data.get("agreement"),
            matches=tuple(FormWitness.from_json(w) for w in data.get("matches", ())),
        )

    def __eq__(self, other):
        if not isinstance(other, HomCertificate):
            return NotImplemented
        return self.to_json() == other.to_json()


# ---------------------------------------------------------------------------
# brute force


def weight_of_mu(mu: Partition, q: QuiverParams) -> tuple[int, ...]:
    return residue_sequence(initial_tableau(mu), q)


@lru_cache(maxsize=64)
def _relations(mu: Partition, q: QuiverParams):
    return relation_generators(mu, q)


@lru_cache(maxsize=4096)
def constraint_system(mu: Partition, shape: HookShape, q: QuiverParams):
    """Integer constraint rows on the i^mu weight space of S^lambda.

    Returns ``(sigmas, rows)``: column labels and one row per (generator,
    output basis vector) with a nonzero entry.
    """
    if mu.d != shape.d or content(mu, q) != content(shape.partition, q):
        return (), ()
    M = hook_module(shape, q)
    W = M.weight_space(weight_of_mu(mu, q))
    if not W:
        return (), ()
    sigmas = tuple(b.sigma for b in W)
    starts = array("q", (M.index[s] for s in sigmas))
    T = M.tables
    rows = []
    for gen in _relations(mu, q):
        if gen.kind == "idempotent":
            continue
        block: dict[int, list[int]] = {}
        for coef, word in gen.terms:
            idx, sgn = apply_word(T.target, T.sign, T.n_basis, M.encode(word), starts)
            for j in range(len(sigmas)):
                if idx[j] >= 0:
                    block.setdefault(idx[j], [0] * len(sigmas))[j] += coef * sgn[j]
        rows.extend(row for _, row in sorted(block.items()) if any(row))
    return sigmas, tuple(rows)


def solution_space(mu: Partition, shape: HookShape, field: Field, q: QuiverParams):
    """``(sigmas, kernel basis)`` of the stacked relation constraints."""
    sigmas, rows = constraint_system(mu, shape, q)
    if not sigmas:
        return (), []
    return sigmas, nullspace([list(r) for r in rows], len(sigmas), field)


def bruteforce_hom(mu: Partition, shape: HookShape, field: Field, q: QuiverParams) -> HomCertificate:
    cert = HomCertificate(mu, shape, q.e, field, 0, "bruteforce")
    sigmas, ker = solution_space(mu, shape, field, q)
    assert len(ker) <= 1, f"kernel of dimension {len(ker)} for mu={mu}, {shape}, e={q.e}, {field}"
    if not ker:
        return cert
    v = ker[0]
    lead = next(c for c in v if not field.is_zero(c))
    inv = field.inv(lead)
    M = hook_module(shape, q)
    cert.image = HookVector(M, field, {s: field.mul(c, inv) for s, c in zip(sigmas, v)})
    cert.dimension = 1
    cert.graded_degree = _map_degree(cert.image, mu, q)
    return cert


def _map_degree(image: HookVector, mu: Partition, q: QuiverParams) -> int:
    degs = image.degrees()
    assert len(degs) == 1, "image is not homogeneous"
    return degs.pop() - specht_degree_shift(mu, q)


def solve_J123(mu: Partition, shape: HookShape, field: Field, q: QuiverParams) -> HookVector:
    """Candidate line for the first three relation families.

    Returns ``[sigma_mu]`` when it is killed by every dot and row-psi generator
    and all leg nodes of mu lie in the first column; the zero vector otherwise.
    """
    M = hook_module(shape, q)
    zero = HookVector(M, field)
    if mu.d != shape.d:
        return zero
    top = extreme_vector(M, weight_of_mu(mu, q))
    if top is None:
        return zero
    v = HookVector.basis_vector(M, field, top.sigma)
    ops_ok = all(
        act_sum(gen.terms, v).is_zero() for gen in _relations(mu, q) if gen.kind in ("dot", "row-psi")
    )
    legs_ok = all(node[1] == 1 for node in leg_nodes(mu, top.sigma, shape))
    assert ops_ok == legs_ok, f"leg-node test and operator test disagree for {mu.parts}, k={shape.k}"
    return v if ops_ok else zero


def leg_nodes(mu: Partition, sigma: Perm, shape: HookShape) -> list[Node]:
    """Nodes of mu whose T^mu entry lands in the leg of sigma T^lambda."""
    legs = set(sigma[shape.d - shape.k :])
    return [node for node, v in _entries(initial_tableau(mu)) if v in legs]


def _entries(T):
    for x, row in enumerate(T, start=1):
        for y, v in enumerate(row, start=1):
            yield (x, y), v


# ---------------------------------------------------------------------------
# classification


def target_tableau(mu: Partition, shape: HookShape) -> TargetTableau:
    k = shape.k
    if len(mu) < k + 1:
        raise ValueError(f"{mu.parts} has fewer than k+1 = {k + 1} parts")
    lam = shape.partition
    Tmu = dict(_entries(initial_tableau(mu)))
    S = sorted(v for node, v in Tmu.items() if node not in lam)
    rows = []
    for x in range(1, len(lam) + 1):
        row = []
        for y in range(1, lam[x] + 1):
            row.append(Tmu[(x, y)] if (x, y) in mu else S.pop(0))
        rows.append(tuple(row))
    T = tuple(rows)
    return TargetTableau(T, tableau_word(T))


def _head_matches(parts, e: int):
    """(a, m) for parts = (a_1 e, ..., a_{c-1} e, a_c e - m), or None."""
    if any(p % e for p in parts[:-1]):
        return None
    last = parts[-1]
    a_c = -(-last // e)
    return tuple(p // e for p in parts[:-1]) + (a_c,), a_c * e - last


def match_forms(mu: Partition, k: int, e: int, d_divisible_rule: str = "divides") -> list[FormWitness]:
    """Every parametrisation of mu by one of the three forms, in order i, ii, iii.

    Within cases i and ii larger cut rows come first.  ``d_divisible_rule``
    selects the side condition of case ii: ``"divides"`` (e | d) or
    ``"congruence"`` (m + c = k + 2 mod e).
    """
    parts = mu.parts
    N, d = len(parts), mu.d
    out = []
    if N == k + 1:
        for c in range(k + 1, 0, -1):
            if all(p == 1 for p in parts[c:]):
                hit = _head_matches(parts[:c], e)
                if hit:
                    out.append(FormWitness("i", c, *hit))
    if N == k + 2:
        for c in range(k, 0, -1):
            if all(p == 1 for p in parts[c:]):
                hit = _head_matches(parts[:c], e)
                if not hit:
                    continue
                ok = d % e == 0 if d_divisible_rule == "divides" else (hit[1] + c - k - 2) % e == 0
                if ok:
                    out.append(FormWitness("ii", c, *hit))
    if N > k + 1:
        shifted = parts[:k] + tuple(p + 1 for p in parts[k:])
        hit = _head_matches(shifted, e)
        if hit and all(p % e == 0 for p in shifted[:-1]):
            out.append(FormWitness("iii", N, *hit))
    return out


@dataclass(frozen=True)
class FormsCheck:
    direct: bool
    matches: tuple
    congruence_matches: tuple

    @property
    def agree(self) -> bool:
        return self.direct == bool(self.matches) == bool(self.congruence_matches)


def mu_forms_check(mu: Partition, shape: HookShape, q: QuiverParams) -> FormsCheck:
    """Weight of [sigma^lambda_mu] against i^mu, next to the form match."""
    T = target_tableau(mu, shape).tableau
    direct = residue_sequence(T, q) == weight_of_mu(mu, q)
    return FormsCheck(
        direct,
        tuple(match_forms(mu, shape.k, q.e)),
        tuple(match_forms(mu, shape.k, q.e, "congruence")),
    )


def classify_hom(mu: Partition, shape: HookShape, field: Field, q: QuiverParams) -> HomCertificate:
    cert = HomCertificate(mu, shape, q.e, field, 0, "classification")
    if mu.d != shape.d:
        return cert
    matches = match_forms(mu, shape.k, q.e)
    cert.matches = tuple(matches)
    if not matches:
        return cert
    verdicts = {field.integer_vanishes(w.gc) for w in matches}
    assert len(verdicts) == 1, f"parametrisations of {mu.parts} disagree on Gc"
    if not verdicts.pop():
        return cert
    M = hook_module(shape, q)
    sigma = target_tableau(mu, shape).word
    cert.dimension = 1
    cert.witness = matches[0]
    cert.image = HookVector.basis_vector(M, field, sigma)
    cert.graded_degree = _map_degree(cert.image, mu, q)
    return cert


def hom_graded_dimension(cert: HomCertificate, mu: Partition, shape: HookShape, q: QuiverParams) -> int:
    """Exponent r with qdim Hom = q^r."""
    if cert.dimension != 1 or cert.image is None:
        raise ValueError("graded dimension needs a one-dimensional Hom space")
    return _map_degree(cert.image, mu, q)


def conjugate_pair(mu: Partition, lam: Partition) -> tuple[Partition, Partition]:
    return lam.conjugate(), mu.conjugate()


# ---------------------------------------------------------------------------
# Garnir closed form


def _garnir_values(mu: Partition, A: Node):
    T = initial_tableau(mu)
    x, y = A
    return T[x - 1][y - 1], T[x][0], T[x][y - 1]


def garnir_psi_permutation(mu: Partition, shape: HookShape, A: Node, q: QuiverParams) -> Optional[Perm]:
    """Permutation pi with psi^{T^A}[sigma] = [pi sigma], or None for zero."""
    if A not in garnir_nodes(mu):
        raise ValueError(f"{A} is not a Garnir node of {mu.parts}")
    x, y = A
    k, e, d = shape.k, q.e, mu.d
    r, s, t = _garnir_values(mu, A)
    if x <= k and y % e == 0 and y < mu[x + 1]:
        return cycle(tuple(range(t + 1, s - 1, -1)), d)
    if x <= k and y % e == 1 and y > 1:
        return cycle(tuple(range(r, s + 1)), d)
    if x > k and y % e == 0:
        return tuple(range(1, d + 1))
    return None


def _require_form(mu, shape, q) -> FormWitness:
    matches = match_forms(mu, shape.k, q.e)
    if not matches:
        raise ValueError(f"{mu.parts} is not of any of the three forms for k={shape.k}, e={q.e}")
    return matches[0]


def garnir_psi_action(mu: Partition, shape: HookShape, A: Node, field: Field, q: QuiverParams) -> HookVector:
    _require_form(mu, shape, q)
    M = hook_module(shape, q)
    pi = garnir_psi_permutation(mu, shape, A, q)
    if pi is None:
        return HookVector(M, field)
    sigma = compose(pi, target_tableau(mu, shape).word)
    return HookVector.basis_vector(M, field, sigma)


def garnir_coefficient(mu: Partition, shape: HookShape, A: Node, q: QuiverParams) -> int:
    """|D^A|; equals C(a_x, f) whenever psi^{T^A} survives."""
    datum = garnir_datum(mu, A, q)
    count = len(datum.coset_reps)
    if garnir_psi_permutation(mu, shape, A, q) is not None:
        a = _require_form(mu, shape, q).a
        x, y = A
        f = y // q.e
        assert count == math.comb(a[x - 1], f), f"|D^A| = {count} but C(a_x, f) = {math.comb(a[x - 1], f)}"
    return count


def garnir_action(mu: Partition, shape: HookShape, A: Node, field: Field, q: QuiverParams) -> HookVector:
    return garnir_psi_action(mu, shape, A, field, q).scale(garnir_coefficient(mu, shape, A, q))


def garnir_operator_actions(mu: Partition, shape: HookShape, A: Node, field: Field, q: QuiverParams):
    """(psi^{T^A}, g^A) applied to [sigma^lambda_mu] through the generator action."""
    M = hook_module(shape, q)
    v = HookVector.basis_vector(M, field, target_tableau(mu, shape).word)
    datum = garnir_datum(mu, A, q)
    return act_word(datum.psi_TA_word, v), act_sum(datum.garnir_element(), v)


# ---------------------------------------------------------------------------
# closed forms at e = p


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _check_odd_prime(p: int):
    if p < 3 or not is_prime(p):
        raise ValueError(f"the e = p closed forms need an odd prime, got {p}")


def trivial_module_prediction(mu: Partition, p: int) -> Optional[int]:
    """Degree r of the nonzero map S^mu -> S^(d), or None when Hom = 0."""
    _check_odd_prime(p)
    parts = mu.parts
    if any((x + 1) % p for x in parts[:-1]):
        return None
    N = len(parts)
    a_N = _ceil_div(parts[-1] + 1, p)
    m = a_N * p - 1 - parts[-1]
    a = tuple((x + 1) // p for x in parts[:-1]) + (a_N,)
    if not p_divides_gc(p, a):
        return None
    return N - _ceil_div(N + m, p)


def standard_module_prediction(mu: Partition, p: int) -> Optional[int]:
    """Degree of the nonzero map S^mu -> S^(d-1,1), or None when Hom = 0."""
    _check_odd_prime(p)
    d, parts, N = mu.d, mu.parts, len(mu)
    if parts == (d - 1, 1):
        return 0
    if N == 2 and parts[0] % p == 0:
        a = (parts[0] // p, _ceil_div(parts[1], p))
        if p_divides_gc(p, a):
            return 0 if (d - 1) % p == 0 else 1
    if d % p == 0 and parts == (d - 2, 1, 1):
        return 1
    if N >= 3 and parts[0] % p == 0 and all((x + 1) % p == 0 for x in parts[1:-1]):
        a_N = _ceil_div(parts[-1] + 1, p)
        m = a_N * p - 1 - parts[-1]
        a = (parts[0] // p,) + tuple((x + 1) // p for x in parts[1:-1]) + (a_N,)
        if p_divides_gc(p, a):
            shift = -1 if (d - 1) % p == 0 else 1 if d % p == 0 else 0
            return N - _ceil_div(N + m, p) + shift
    return None


def char0_family(d: int, k: int, e: int) -> set[Partition]:
    """Every mu with Hom(S^mu, S^(d-k,1^k)) = 1 in characteristic zero, six cases."""
    found = set()

    def add(parts):
        parts = tuple(x for x in parts if x)
        if sum(parts) == d and all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1)):
            found.add(Partition(parts))

    add((d - k,) + (1,) * k)
    if d % e == 0 and d - k - 1 >= 1:
        add((d - k - 1,) + (1,) * (k + 1))
    if k == 0:
        for n in range(d + 1):
            for m in range(e):
                top = d - n * (e - 1) - m
                if top >= e - 1 and (top + 1) % e == 0:
                    add((top,) + (e - 1,) * n + (m,))
    if k >= 1:
        for n in range(k):
            for m in range(1, e + 1):
                top = d - n * e - m - (k - n - 1)
                if top >= e and top % e == 0:
                    add((top,) + (e,) * n + (m,) + (1,) * (k - n - 1))
        for n in range(k + 2, d + 1):
            for m in range(1, e):
                top = d - (k - 1) * e - (n - k - 1) * (e - 1) - m
                if top >= e and top % e == 0:
                    add((top,) + (e,) * (k - 1) + (e - 1,) * (n - k - 1) + (m,))
    if k >= 2 and d % e == 0:
        for n in range(k - 1):
            for m in range(1, e + 1):
                top = d - n * e - m - (k - n)
                if top >= e and top % e == 0:
                    add((top,) + (e,) * n + (m,) + (1,) * (k - n))
    return found
