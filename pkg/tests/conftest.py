from functools import lru_cache

from hypothesis import strategies as st

from springerec.partitions import partitions_of, validate


@lru_cache(maxsize=None)
def all_partitions(max_n):
    out = []
    for n in range(max_n + 1):
        out.extend(partitions_of(n))
    return tuple(out)


@lru_cache(maxsize=None)
def valid_labels(max_size, groups=("B", "C", "D")):
    out = []
    for group in groups:
        for lam in all_partitions(max_size):
            if validate(group, lam):
                out.append((group, lam))
    return tuple(out)


def partitions_strategy(max_n=8):
    return st.sampled_from(all_partitions(max_n))


def bcd_label_strategy(max_size=9):
    return st.sampled_from(valid_labels(max_size))
