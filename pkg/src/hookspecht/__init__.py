"""Homomorphisms between graded Specht modules of KLR algebras with a hook target."""

from .arith import Field, Q
from .combinatorics import Partition, QuiverParams
from .hook import HookShape, HookVector, hook_module
from .kernels import BACKEND
from .solver import bruteforce_hom, classify_hom, hom_graded_dimension

__all__ = [
    "BACKEND",
    "Field",
    "HookShape",
    "HookVector",
    "Partition",
    "Q",
    "QuiverParams",
    "bruteforce_hom",
    "classify_hom",
    "hom_graded_dimension",
    "hook_module",
]
