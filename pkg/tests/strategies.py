"""Shared hypothesis strategies."""

from hypothesis import strategies as st

from symdefect.reps import GradedRep, UngradedRep

signs = st.sampled_from([1, -1])
weights = st.integers(min_value=0, max_value=8)
keys = st.tuples(weights, signs)


def graded_reps(max_items=4, max_mult=3):
    return st.dictionaries(keys, st.integers(1, max_mult), max_size=max_items).map(GradedRep)


def ungraded_reps(max_items=4, max_mult=3, min_size=0):
    return st.dictionaries(weights, st.integers(1, max_mult), min_size=min_size, max_size=max_items).map(UngradedRep)
