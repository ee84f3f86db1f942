from hypothesis import settings, strategies as st

from hookspecht.combinatorics import Partition

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@st.composite
def partition_st(draw, max_d=8, min_d=0):
    d = draw(st.integers(min_value=min_d, max_value=max_d))
    parts = []
    left = d
    while left:
        p = draw(st.integers(min_value=1, max_value=min(left, parts[-1] if parts else left)))
        parts.append(p)
        left -= p
    return Partition(tuple(parts))


@st.composite
def permutation_st(draw, max_d=8):
    d = draw(st.integers(min_value=0, max_value=max_d))
    return tuple(draw(st.permutations(range(1, d + 1))))


e_st = st.sampled_from([3, 4, 5])
