"""Executable KLR relation suite for the hook module.

Relations of type A^(1)_{e-1}, e >= 3, in the form satisfied by the
generator action of :mod:`hookspecht.hook`.  For a weight ``i`` write
``up`` when ``i_{r+1} = i_r + 1`` and ``down`` when ``i_{r+1} = i_r - 1``:

* ``psi_r^2 e(i)`` is ``0`` (equal), ``e(i)`` (unrelated),
  ``(y_r - y_{r+1}) e(i)`` (up), ``(y_{r+1} - y_r) e(i)`` (down);
* ``(psi_{r+1} psi_r psi_{r+1} - psi_r psi_{r+1} psi_r) e(i)`` is
  ``+e(i)`` if ``i_r = i_{r+2}`` and up, ``-e(i)`` if ``i_r = i_{r+2}``
  and down, zero otherwise;
* ``psi_r y_{r+1} e(i) = (y_r psi_r + delta) e(i)`` and
  ``y_{r+1} psi_r e(i) = (psi_r y_r + delta) e(i)`` with
  ``delta = [i_r = i_{r+1}]``.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable

from .arith import Field
from .combinatorics import QuiverParams, act_on_sequence, left_mult_s, identity
from .hook import HookShape, HookVector, act_e, act_psi, act_y, hook_module

FAMILIES = (
    "idempotent",
    "weight",
    "grading",
    "y-commute",
    "psi-y-distant",
    "psi-y-adjacent",
    "psi-square",
    "psi-distant",
    "braid",
)


def _s(r: int, i: tuple) -> tuple:
    return act_on_sequence(left_mult_s(r, identity(len(i))), i)


def check_basis_vector(v: HookVector) -> Iterable[tuple[str, bool]]:
    M, q = v.module, v.module.q
    d = M.d
    b = M.element(next(iter(v.terms)))
    i = b.weight
    zero = HookVector(M, v.field)

    for j in M.weights:
        yield "idempotent", act_e(j, v) == (v if j == i else zero)
    yield "idempotent", act_e(i, act_e(i, v)) == v

    for r in range(1, d + 1):
        out = act_y(r, v)
        yield "weight", out.is_zero() or out.weight() == i
        yield "grading", all(deg == b.degree + 2 for deg in out.degrees())
    for r in range(1, d):
        out = act_psi(r, v)
        yield "weight", out.is_zero() or out.weight() == _s(r, i)
        shift = -q.cartan(i[r - 1], i[r])
        yield "grading", all(deg == b.degree + shift for deg in out.degrees())

    for r in range(1, d + 1):
        for s in range(r + 1, d + 1):
            yield "y-commute", act_y(r, act_y(s, v)) == act_y(s, act_y(r, v))

    for r in range(1, d):
        for s in range(1, d + 1):
            if s not in (r, r + 1):
                yield "psi-y-distant", act_psi(r, act_y(s, v)) == act_y(s, act_psi(r, v))
        delta = v if i[r - 1] == i[r] else zero
        yield "psi-y-adjacent", act_psi(r, act_y(r + 1, v)) == act_y(r, act_psi(r, v)) + delta
        yield "psi-y-adjacent", act_y(r + 1, act_psi(r, v)) == act_psi(r, act_y(r, v)) + delta

        rel = q.relation(i[r - 1], i[r])
        expected = {
            "eq": zero,
            "none": v,
            "up": act_y(r, v) - act_y(r + 1, v),
            "down": act_y(r + 1, v) - act_y(r, v),
        }[rel]
        yield "psi-square", act_psi(r, act_psi(r, v)) == expected

        for s in range(r + 2, d):
            yield "psi-distant", act_psi(r, act_psi(s, v)) == act_psi(s, act_psi(r, v))

    for r in range(1, d - 1):
        lhs = act_psi(r + 1, act_psi(r, act_psi(r + 1, v))) - act_psi(r, act_psi(r + 1, act_psi(r, v)))
        if i[r - 1] == i[r + 1] and q.relation(i[r - 1], i[r]) == "up":
            expected = v
        elif i[r - 1] == i[r + 1] and q.relation(i[r - 1], i[r]) == "down":
            expected = -v
        else:
            expected = zero
        yield "braid", lhs == expected


def run_suite(dmax: int, e_list, chars) -> dict[str, Counter]:
    """Check every relation on every basis vector for ``d <= dmax``.

    Returns ``{family: Counter(passed=..., failed=...)}``.
    """
    results = {fam: Counter() for fam in FAMILIES}
    for e in e_list:
        q = QuiverParams(e)
        for char in chars:
            F = Field(char)
            for d in range(1, dmax + 1):
                for k in range(d):
                    M = hook_module(HookShape(d, k), q)
                    for b in M.basis:
                        v = HookVector.basis_vector(M, F, b.sigma)
                        for fam, ok in check_basis_vector(v):
                            results[fam]["passed" if ok else "failed"] += 1
    return results
