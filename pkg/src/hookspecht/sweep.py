"""Exhaustive oracle-equivalence sweep over (e, field, d, k, mu)."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .arith import Field
from .combinatorics import QuiverParams, partitions
from .hook import HookShape
from .solver import bruteforce_hom, classify_hom, solution_space

ROW_FIELDS = ("e", "char", "d", "k", "mu", "kernel_dim", "dimension", "classified", "case", "gc", "degree", "agreement")


@dataclass
class SweepReport:
    dmax: int
    e_list: tuple
    char_list: tuple
    rows: list = field(default_factory=list)

    @property
    def summary(self) -> dict:
        return {
            "instances": len(self.rows),
            "nonzero": sum(r["dimension"] for r in self.rows),
            "disagreements": sum(not r["agreement"] for r in self.rows),
            "max_kernel_dim": max((r["kernel_dim"] for r in self.rows), default=0),
        }

    def parameters(self) -> dict:
        return {"dmax": self.dmax, "e_list": list(self.e_list), "char_list": list(self.char_list)}


def instance_rows(e: int, d: int, chars: Sequence[int]) -> list[dict]:
    """All rows for one (e, d): every k < d, every mu of d, every field."""
    q = QuiverParams(e)
    rows = []
    for k in range(d):
        shape = HookShape(d, k)
        for mu in partitions(d):
            for ch in chars:
                F = Field(ch)
                _, ker = solution_space(mu, shape, F, q)
                if len(ker) > 1:
                    brute = None
                else:
                    brute = bruteforce_hom(mu, shape, F, q)
                cls = classify_hom(mu, shape, F, q)
                agree = (
                    brute is not None
                    and brute.dimension == cls.dimension
                    and brute.image == cls.image
                    and brute.graded_degree == cls.graded_degree
                )
                w = cls.witness or (cls.matches[0] if cls.matches else None)
                rows.append(
                    {
                        "e": e,
                        "char": ch,
                        "d": d,
                        "k": k,
                        "mu": list(mu.parts),
                        "kernel_dim": len(ker),
                        "dimension": brute.dimension if brute else len(ker),
                        "classified": cls.dimension,
                        "case": w.case if w else None,
                        "gc": w.gc if w else None,
                        "degree": brute.graded_degree if brute else None,
                        "agreement": agree,
                    }
                )
    return rows


def _unit(args):
    return instance_rows(*args)


def sweep(dmax: int, e_list: Sequence[int], char_list: Sequence[int], jobs: int | None = None) -> SweepReport:
    for ch in char_list:
        Field(ch)
    for e in e_list:
        QuiverParams(e)
    units = [(e, d, tuple(char_list)) for e in e_list for d in range(1, dmax + 1)]
    jobs = jobs or os.cpu_count() or 1
    if jobs > 1 and len(units) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_unit, units))
    else:
        chunks = [_unit(u) for u in units]
    rows = [r for chunk in chunks for r in chunk]
    rows.sort(key=lambda r: (r["e"], r["char"], r["d"], r["k"], r["mu"]))
    return SweepReport(dmax, tuple(e_list), tuple(char_list), rows)
