"""Shuffles of an increasing and a decreasing residue segment."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .combinatorics import Perm, act_on_sequence, left_mult_s


@dataclass(frozen=True)
class SegmentSpec:
    start: int
    length: int
    increasing: bool
    e: int

    def letters(self) -> tuple[int, ...]:
        step = 1 if self.increasing else -1
        return tuple((self.start + step * t) % self.e for t in range(self.length))


def plus_segment(start: int, length: int, e: int) -> SegmentSpec:
    return SegmentSpec(start % e, length, True, e)


def minus_segment(start: int, length: int, e: int) -> SegmentSpec:
    return SegmentSpec(start % e, length, False, e)


@dataclass(frozen=True)
class ShuffleWitness:
    weight: tuple[int, ...]
    minimal: Perm
    stabilizer_generators: tuple[int, ...]

    def coset(self) -> list[Perm]:
        """All ``h sigma_i`` for ``h`` in H(i); the generators commute."""
        out = []
        gens = self.stabilizer_generators
        for size in range(len(gens) + 1):
            for subset in combinations(gens, size):
                w = self.minimal
                for m in subset:
                    w = left_mult_s(m, w)
                out.append(w)
        return out


def shuffle_reps(a: int, b: int) -> list[Perm]:
    """Sh(a, b): permutations increasing on 1..a and on a+1..a+b."""
    if a < 0 or b < 0:
        raise ValueError("segment lengths must be non-negative")
    n = a + b
    out = []
    for first in combinations(range(1, n + 1), a):
        chosen = set(first)
        out.append(tuple(first) + tuple(v for v in range(1, n + 1) if v not in chosen))
    return sorted(out)


def stabilizer(weight: Sequence[int]) -> tuple[int, ...]:
    return tuple(m for m in range(1, len(weight)) if weight[m - 1] == weight[m])


def minimal_shuffle(target: Sequence[int], plus: SegmentSpec, minus: SegmentSpec) -> Optional[ShuffleWitness]:
    """Minimal-length ``sigma`` with ``sigma . (S+ S-) = target``, or None."""
    if plus.length + minus.length != len(target):
        raise ValueError("segment lengths do not add up to the target length")
    target = tuple(x % plus.e for x in target)
    sigma = _strip(target, plus.letters(), minus.letters(), plus.e)
    if sigma is None:
        return None
    assert act_on_sequence(sigma, plus.letters() + minus.letters()) == target
    return ShuffleWitness(target, sigma, stabilizer(target))


def _strip(i: tuple, jp: tuple, km: tuple, e: int) -> Optional[Perm]:
    """Peel the last letter off ``i`` and recurse (cases 1-3 of the proof)."""
    a, b = len(jp), len(km)
    if a == 0 or b == 0:
        return tuple(range(1, a + b + 1)) if i == jp + km else None
    n = a + b
    last, prev = i[-1], i[-2]
    ja, kb = jp[-1], km[-1]

    case1 = last == ja and (ja != kb or prev == (last - 1) % e)
    case2 = last == kb and (ja != kb or prev == (last + 1) % e)
    case3 = last == ja == kb and prev == last
    assert case1 + case2 + case3 <= 1, "shuffle recursion cases overlap"

    if case1:
        sub = _strip(i[:-1], jp[:-1], km, e)
        if sub is None:
            return None
        return sub[: a - 1] + (n,) + sub[a - 1 :]
    if case2:
        sub = _strip(i[:-1], jp, km[:-1], e)
        if sub is None:
            return None
        return sub + (n,)
    if case3:
        sub = _strip(i[:-2], jp[:-1], km[:-1], e)
        if sub is None:
            return None
        return sub[: a - 1] + (n - 1,) + sub[a - 1 :] + (n,)
    return None
