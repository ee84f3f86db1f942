from array import array
from fractions import Fraction
from itertools import combinations, permutations, product

import pytest
from hypothesis import given, strategies as st

from hookspecht import _pykernel, kernels
from hookspecht.arith import Field, Q
from hookspecht.linalg import nullspace, rank

try:
    from hookspecht import _kernel
except ImportError:  # pragma: no cover - depends on the build
    _kernel = None

needs_compiled = pytest.mark.skipif(_kernel is None, reason="compiled kernel not built")

matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


def det(m):
    n = len(m)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inv = sum(perm[i] > perm[j] for i in range(n) for j in range(i + 1, n))
        term = Fraction((-1) ** inv)
        for i, j in enumerate(perm):
            term *= m[i][j]
        total += term
    return total


def minor_rank(rows, ncols):
    for size in range(min(len(rows), ncols), 0, -1):
        for rs in combinations(range(len(rows)), size):
            for cs in combinations(range(ncols), size):
                if det([[rows[r][c] for c in cs] for r in rs]):
                    return size
    return 0


def test_backend_selection():
    import os
    import subprocess
    import sys

    if os.environ.get("HOOK_SPECHT_PURE") != "1":
        assert kernels.BACKEND == ("cython" if _kernel is not None else "python")
    code = "import hookspecht.kernels as k; print(k.BACKEND)"
    env = {**os.environ, "HOOK_SPECHT_PURE": "1"}
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


@given(matrices)
def test_rational_nullspace_against_minors(rows):
    ncols = len(rows[0])
    ker = nullspace(rows, ncols, Q)
    for v in ker:
        assert all(sum(a * x for a, x in zip(row, v)) == 0 for row in rows)
    assert len(ker) == ncols - minor_rank(rows, ncols) == ncols - rank(rows, ncols, Q)


@given(matrices, st.sampled_from([2, 3]))
def test_modular_nullspace_by_enumeration(rows, p):
    ncols = len(rows[0])
    F = Field(p)
    ker = nullspace(rows, ncols, F)
    count = sum(
        all(sum(a * x for a, x in zip(row, v)) % p == 0 for row in rows) for v in product(range(p), repeat=ncols)
    )
    assert count == p ** len(ker)
    for v in ker:
        assert all(sum(a * x for a, x in zip(row, v)) % p == 0 for row in rows)


def test_empty_constraint_system():
    assert nullspace([], 2, Q) == [[1, 0], [0, 1]]


@needs_compiled
@given(matrices, st.sampled_from([2, 3, 5, 7, 101]))
def test_compiled_rref_matches_fallback(rows, p):
    nrows, ncols = len(rows), len(rows[0])
    a = array("q", (x % p for row in rows for x in row))
    b = array("q", a)
    assert list(_kernel.rref_mod_p(a, nrows, ncols, p)) == list(_pykernel.rref_mod_p(b, nrows, ncols, p))
    assert a == b


@st.composite
def token_tables(draw):
    n_basis = draw(st.integers(1, 6))
    n_tok = draw(st.integers(1, 4))
    target = array("q", draw(st.lists(st.integers(-1, n_basis - 1), min_size=n_basis * n_tok, max_size=n_basis * n_tok)))
    sign = array("q", draw(st.lists(st.sampled_from([1, -1]), min_size=n_basis * n_tok, max_size=n_basis * n_tok)))
    codes = array("q", draw(st.lists(st.integers(0, n_tok - 1), max_size=6)))
    starts = array("q", draw(st.lists(st.integers(0, n_basis - 1), max_size=5)))
    return target, sign, n_basis, codes, starts


@needs_compiled
@given(token_tables())
def test_compiled_apply_word_matches_fallback(tables):
    fast = _kernel.apply_word(*tables)
    slow = _pykernel.apply_word(*tables)
    assert [list(x) for x in fast] == [list(x) for x in slow]


def test_fallback_applies_rightmost_code_first():
    # token 0 sends 0 -> 1, token 1 sends 1 -> 0 with sign -1 and kills 0
    target = array("q", [1, -1, -1, 0])
    sign = array("q", [1, 1, 1, -1])
    idx, sgn = _pykernel.apply_word(target, sign, 2, array("q", [1, 0]), array("q", [0]))
    assert list(idx) == [0] and list(sgn) == [-1]
    idx, sgn = _pykernel.apply_word(target, sign, 2, array("q", [0, 1]), array("q", [0]))
    assert list(idx) == [-1] and list(sgn) == [0]
